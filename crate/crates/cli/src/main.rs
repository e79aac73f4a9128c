//! Command-line front end: sequence generation, theorem verification
//! suites, periodic-point construction, and exporters.
//!
//! Exit codes: 0 success, 1 property violation, 2 usage or parse error,
//! 3 undecided at a resource cap.

mod parse;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use apractical::arith::FactorSieve;
use apractical::dynamics::{
    construct_two_periodic, detect_period, finite_pr_construct, orbit,
    practical_preimage_search, FinitePrVariant, PreimageStrategy,
};
use apractical::order::{precedes_exact, precedes_window, OrderFailure, DEFAULT_LCM_CAP};
use apractical::pr::pr_window;
use apractical::pset::{is_practical, DEFAULT_DP_CAP};
use apractical::rule::SetRule;
use apractical::suites::{self, SuiteConfig, DEFAULT_SEED, SUITE_IDS};
use apractical::window::WindowSet;
use apractical::FiniteSet;

#[derive(Parser)]
#[command(name = "apractical", version, about = "Practical sets, A-practical numbers, and Pr windows")]
struct Cli {
    /// Cap for the subset-sum DP, in achievable-sum bits
    #[arg(long, global = true, default_value_t = DEFAULT_DP_CAP, env = "APRACTICAL_DP_CAP")]
    dp_cap: u64,

    /// Cap for lcm periods in exact order decisions
    #[arg(long, global = true, default_value_t = DEFAULT_LCM_CAP, env = "APRACTICAL_LCM_CAP")]
    lcm_cap: u64,

    /// Seed for randomized suites and searches
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::List)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    List,
    Json,
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Finite,
    Infinite,
}

impl From<VariantArg> for FinitePrVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Finite => FinitePrVariant::FiniteComplement,
            VariantArg::Infinite => FinitePrVariant::InfiniteComplement,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    SingleDeletion,
    Randomized,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportWhat {
    Sieve,
    Pr,
    PeriodicA,
    PeriodicB,
}

#[derive(Subcommand)]
enum Command {
    /// Practical numbers in {1..N}
    Sieve {
        #[arg(long, default_value_t = 10_000)]
        n: u64,
    },
    /// Practicality verdict for an explicit finite set
    CheckSet {
        /// Comma-separated positive integers
        #[arg(long)]
        set: String,
    },
    /// Pr(A) on the window, for a rule A
    Pr {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
    },
    /// Decide A ≺ B: exact for explicit sets, window evidence otherwise
    Order {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
    },
    /// Iterate the Pr map and report distances and periods
    Orbit {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
        #[arg(long, default_value_t = 6)]
        steps: usize,
    },
    /// Construct a 2-periodic pair of the Pr map
    Periodic {
        /// Choice set (rule syntax; `all` for ℕ\{1})
        #[arg(long)]
        choice: String,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
    },
    /// Sets with finitely many A-practical numbers
    FinitePr {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Finite)]
        variant: VariantArg,
        /// Window (default 10·k²)
        #[arg(long)]
        n: Option<u64>,
    },
    /// Run named verification suites (T1..T15 or `all`)
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Search for deletions invisible to the Pr window
    Hypothesis {
        #[arg(long, default_value_t = 1_000)]
        n: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::SingleDeletion)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 200)]
        trials: u32,
        #[arg(long, default_value_t = 6)]
        max_deletions: u32,
    },
    /// Write a computed sequence to a file
    Export {
        #[arg(long, value_enum)]
        what: ExportWhat,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
        /// Rule for `--what pr`
        #[arg(long)]
        set: Option<String>,
        /// Choice rule for `--what periodic-a|periodic-b`
        #[arg(long)]
        choice: Option<String>,
    },
}

enum CliError {
    Usage(String),
    Violation(String),
    Undecided(String),
}

impl From<apractical::Error> for CliError {
    fn from(e: apractical::Error) -> Self {
        if e.is_undecided() {
            CliError::Undecided(e.to_string())
        } else if matches!(e, apractical::Error::Internal(_)) {
            CliError::Violation(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Undecided(msg)) => {
            eprintln!("undecided: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Sieve { n } => {
            let sieve = FactorSieve::new(*n)?;
            let result = sieve.practical_sieve(*n);
            emit_window(cli.format, *n, &[], &result);
            Ok(())
        }
        Command::CheckSet { set } => {
            let elems = parse::int_list(set, 0)?;
            let a = FiniteSet::new(elems)?;
            let verdict = is_practical(&a);
            match cli.format {
                Format::List => {
                    if verdict.practical {
                        println!("practical");
                    } else {
                        let i = verdict.violating_index.expect("characterization failure");
                        println!(
                            "not practical: violation at index {i} (element {}), smallest unreachable target {}",
                            a.elems()[i],
                            verdict.gap_target(&a).expect("gap exists")
                        );
                    }
                }
                Format::Json => {
                    let obj = serde_json::json!({
                        "set": a.elems(),
                        "practical": verdict.practical,
                        "violating_index": verdict.violating_index,
                        "gap_target": verdict.gap_target(&a),
                    });
                    println!("{obj}");
                }
                Format::Bfile => {
                    return Err(CliError::Usage(
                        "check-set supports list and json output".into(),
                    ))
                }
            }
            Ok(())
        }
        Command::Pr { set, n } => {
            let rule = parse::rule(set)?;
            let sieve = FactorSieve::new(*n)?;
            let a = rule.materialize(*n);
            let result = pr_window(&a, &sieve);
            emit_window(cli.format, *n, &a.to_vec(), &result);
            Ok(())
        }
        Command::Order { a, b, n } => run_order(cli, a, b, *n),
        Command::Orbit { set, n, steps } => {
            if *steps == 0 {
                return Err(CliError::Usage("steps must be at least 1".into()));
            }
            let rule = parse::rule(set)?;
            let sieve = FactorSieve::new(*n)?;
            let start = rule.materialize(*n);
            let rec = orbit(&start, *steps, &sieve);
            let period = detect_period(&rec);
            match cli.format {
                Format::List => {
                    for (j, s) in rec.states.iter().enumerate() {
                        println!("state {j}: {}", join(&s.to_vec()));
                    }
                    for (j, d) in rec.distances.iter().enumerate() {
                        println!("distance {j}-{}: {d}", j + 1);
                    }
                    match period {
                        Some((pre, per)) => println!("period: preperiod={pre} period={per}"),
                        None => println!("period: none within {steps} steps"),
                    }
                }
                Format::Json => {
                    let obj = serde_json::json!({
                        "window": n,
                        "set": start.to_vec(),
                        "states": rec.states.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
                        "distances": rec.distances.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                        "preperiod": period.map(|p| p.0),
                        "period": period.map(|p| p.1),
                    });
                    println!("{obj}");
                }
                Format::Bfile => emit_bfile_stdout(rec.states.last().expect("nonempty")),
            }
            Ok(())
        }
        Command::Periodic { choice, n } => {
            let rule = parse::rule(choice)?;
            let sieve = FactorSieve::new(*n)?;
            let pair = construct_two_periodic(&rule, *n, &sieve)?;
            match cli.format {
                Format::List => {
                    println!("{}", join(&pair.a.to_vec()));
                    println!("{}", join(&pair.b.to_vec()));
                }
                Format::Json => {
                    let obj = serde_json::json!({
                        "window": n,
                        "set": rule.materialize(*n).to_vec(),
                        "result": pair.a.to_vec(),
                        "pr": pair.b.to_vec(),
                    });
                    println!("{obj}");
                }
                Format::Bfile => emit_bfile_stdout(&pair.a),
            }
            Ok(())
        }
        Command::FinitePr { k, variant, n } => {
            let window = n.unwrap_or(10 * k * k);
            let sieve = FactorSieve::new(window)?;
            let out = finite_pr_construct(*k, (*variant).into(), window, &sieve)?;
            let complement: Vec<u64> = (1..=window).filter(|&v| !out.set.contains(v)).collect();
            match cli.format {
                Format::List => {
                    println!("complement: {}", join(&complement));
                    println!("pr: {}", join(&out.pr.to_vec()));
                    println!("bound: {}", out.bound);
                }
                Format::Json => {
                    let obj = serde_json::json!({
                        "window": window,
                        "complement": complement,
                        "pr": out.pr.to_vec(),
                        "bound": out.bound,
                    });
                    println!("{obj}");
                }
                Format::Bfile => emit_bfile_stdout(&out.pr),
            }
            Ok(())
        }
        Command::Verify { suite } => run_verify(cli, suite),
        Command::Hypothesis {
            n,
            strategy,
            trials,
            max_deletions,
        } => {
            let sieve = FactorSieve::new(*n)?;
            let strat = match strategy {
                StrategyArg::SingleDeletion => PreimageStrategy::SingleDeletion,
                StrategyArg::Randomized => PreimageStrategy::Randomized {
                    trials: *trials,
                    max_deletions: *max_deletions,
                    seed: cli.seed,
                },
            };
            let survivors = practical_preimage_search(*n, strat, &sieve);
            match cli.format {
                Format::List => {
                    if survivors.is_empty() {
                        println!("survivors: none (window evidence at N={n})");
                    } else {
                        println!(
                            "survivors: {} (window evidence at N={n}, not counterexamples)",
                            survivors.len()
                        );
                        for s in &survivors {
                            println!("deleted {}", join(s));
                        }
                    }
                }
                Format::Json => {
                    let obj = serde_json::json!({
                        "window": n,
                        "survivors": survivors,
                    });
                    println!("{obj}");
                }
                Format::Bfile => {
                    return Err(CliError::Usage(
                        "hypothesis supports list and json output".into(),
                    ))
                }
            }
            Ok(())
        }
        Command::Export {
            what,
            out,
            n,
            set,
            choice,
        } => run_export(cli, *what, out, *n, set.as_deref(), choice.as_deref()),
    }
}

fn run_order(cli: &Cli, a_src: &str, b_src: &str, window: u64) -> Result<(), CliError> {
    let rule_a = parse::rule(a_src)?;
    let rule_b = parse::rule(b_src)?;
    // explicit pairs get the exact lcm-periodic decision
    if let (SetRule::Explicit(fa), SetRule::Explicit(fb)) = (&rule_a, &rule_b) {
        let report = precedes_exact(fa, fb, cli.lcm_cap)?;
        match cli.format {
            Format::List => match &report.failure {
                None => println!("holds (exact, period {})", report.period),
                Some(OrderFailure::NotSubset { element }) => {
                    println!("fails: {element} not in the second set")
                }
                Some(OrderFailure::PrNotContained { n }) => {
                    println!("fails: {n} in Pr(A) but not in Pr(B)")
                }
            },
            Format::Json => {
                let obj = serde_json::json!({
                    "mode": "exact",
                    "holds": report.holds,
                    "period": report.period,
                    "failure": report.failure.as_ref().map(|f| format!("{f:?}")),
                });
                println!("{obj}");
            }
            Format::Bfile => {
                return Err(CliError::Usage("order supports list and json output".into()))
            }
        }
        return Ok(());
    }
    let sieve = FactorSieve::new(window)?;
    let wa = rule_a.materialize(window);
    let wb = rule_b.materialize(window);
    let holds = precedes_window(&wa, &wb, &sieve)?;
    match cli.format {
        Format::List => {
            if holds {
                println!("holds (window evidence at N={window})");
            } else {
                println!("fails (window evidence at N={window})");
            }
        }
        Format::Json => {
            let obj = serde_json::json!({
                "mode": "window",
                "window": window,
                "holds": holds,
            });
            println!("{obj}");
        }
        Format::Bfile => {
            return Err(CliError::Usage("order supports list and json output".into()))
        }
    }
    Ok(())
}

fn run_verify(cli: &Cli, suite: &str) -> Result<(), CliError> {
    let cfg = SuiteConfig {
        seed: cli.seed,
        dp_cap: cli.dp_cap,
        lcm_cap: cli.lcm_cap,
    };
    let ids: Vec<&str> = if suite.eq_ignore_ascii_case("all") {
        SUITE_IDS.to_vec()
    } else {
        vec![suite]
    };
    let mut failed = 0u32;
    let mut undecided = 0u64;
    for id in ids {
        let started = Instant::now();
        let rep = suites::run_suite(id, &cfg)?;
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        println!(
            "{} {}: {status} ({} cases, {} violations, {} undecided, {:.2}s)",
            rep.id,
            rep.title,
            rep.cases,
            rep.violations.len(),
            rep.undecided,
            started.elapsed().as_secs_f64()
        );
        for v in rep.violations.iter().take(10) {
            println!("  {v}");
        }
        if rep.violations.len() > 10 {
            println!("  … and {} more", rep.violations.len() - 10);
        }
        if !rep.passed() {
            failed += 1;
        }
        undecided += rep.undecided;
    }
    if failed > 0 {
        Err(CliError::Violation(format!("{failed} suite(s) failed")))
    } else if undecided > 0 {
        Err(CliError::Undecided(format!(
            "{undecided} case(s) undecided at the configured caps"
        )))
    } else {
        Ok(())
    }
}

fn run_export(
    cli: &Cli,
    what: ExportWhat,
    out: &PathBuf,
    n: u64,
    set: Option<&str>,
    choice: Option<&str>,
) -> Result<(), CliError> {
    let sieve = FactorSieve::new(n)?;
    let result: WindowSet = match what {
        ExportWhat::Sieve => sieve.practical_sieve(n),
        ExportWhat::Pr => {
            let src = set.ok_or_else(|| CliError::Usage("--what pr needs --set".into()))?;
            let rule = parse::rule(src)?;
            pr_window(&rule.materialize(n), &sieve)
        }
        ExportWhat::PeriodicA | ExportWhat::PeriodicB => {
            let src = choice
                .ok_or_else(|| CliError::Usage("--what periodic-* needs --choice".into()))?;
            let rule = parse::rule(src)?;
            let pair = construct_two_periodic(&rule, n, &sieve)?;
            if what == ExportWhat::PeriodicA {
                pair.a
            } else {
                pair.b
            }
        }
    };
    let body = match cli.format {
        Format::List => format!("{}\n", join(&result.to_vec())),
        Format::Json => {
            serde_json::json!({
                "window": n,
                "result": result.to_vec(),
            })
            .to_string()
                + "\n"
        }
        Format::Bfile => bfile_string(&result),
    };
    std::fs::write(out, body).map_err(|e| CliError::Usage(format!("writing {out:?}: {e}")))?;
    println!("wrote {} entries to {}", result.len(), out.display());
    Ok(())
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn bfile_string(set: &WindowSet) -> String {
    let mut s = String::new();
    for (i, v) in set.members().enumerate() {
        s.push_str(&format!("{} {v}\n", i + 1));
    }
    s
}

fn emit_bfile_stdout(set: &WindowSet) {
    print!("{}", bfile_string(set));
}

fn emit_window(format: Format, window: u64, input: &[u64], result: &WindowSet) {
    match format {
        Format::List => println!("{}", join(&result.to_vec())),
        Format::Json => {
            let obj = serde_json::json!({
                "window": window,
                "set": input,
                "result": result.to_vec(),
            });
            println!("{obj}");
        }
        Format::Bfile => emit_bfile_stdout(result),
    }
}
