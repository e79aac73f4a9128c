//! Named verification suites (T1–T15).
//!
//! Each suite turns one law of the library's domain into a bulk check:
//! exhaustive where the universe is small enough, seeded-random where it is
//! not. A suite never asserts; it returns a report with the case count and
//! every violation it found, so the CLI can exit nonzero and tests can
//! assert emptiness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::FactorSieve;
use crate::dynamics::{
    classify_all_practical, construct_two_periodic, distance, finite_pr_construct,
    AllPracticalClass, Distance, FinitePrVariant,
};
use crate::error::{Error, Result};
use crate::order::{precedes_window, removal_report, step_by_step_check};
use crate::pr::{is_a_practical, pr_member_finite, pr_window};
use crate::pset::{
    can_extend, is_practical, is_practical_oracle, predecessor_criterion, product_extension_check,
    product_set, FiniteSet,
};
use crate::rule::SetRule;
use crate::window::WindowSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub dp_cap: u64,
    pub lcm_cap: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            dp_cap: crate::pset::DEFAULT_DP_CAP,
            lcm_cap: crate::order::DEFAULT_LCM_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub id: &'static str,
    pub title: &'static str,
    pub cases: u64,
    pub violations: Vec<String>,
    pub undecided: u64,
}

impl SuiteReport {
    fn new(id: &'static str, title: &'static str) -> Self {
        SuiteReport {
            id,
            title,
            cases: 0,
            violations: Vec::new(),
            undecided: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const SUITE_IDS: [&str; 15] = [
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14",
    "T15",
];

pub fn run_suite(id: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    match id.to_ascii_uppercase().as_str() {
        "T1" => Ok(oracle_equivalence(cfg)),
        "T2" => Ok(extension_lemmas(cfg)),
        "T3" => Ok(product_laws(cfg)),
        "T4" => quasi_practical(cfg),
        "T5" => quotient_gcd(cfg),
        "T6" => predecessor_equivalence(cfg),
        "T7" => prefix_determinism(cfg),
        "T8" => lipschitz(cfg),
        "T9" => no_fixed_point(cfg),
        "T10" => periodic_pair(cfg),
        "T11" => finite_pr(cfg),
        "T12" => classifier(cfg),
        "T13" => step_by_step(cfg),
        "T14" => removal(cfg),
        "T15" => ladder(cfg),
        other => Err(Error::precondition(format!("unknown suite {other}"))),
    }
}

/// Subset of {1..=n} encoded by a bitmask.
fn subset_from_mask(n: u32, mask: u32) -> FiniteSet {
    FiniteSet::new((0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as u64 + 1))
        .expect("positive elements")
}

fn collect_violations<F>(upper: u64, f: F) -> Vec<String>
where
    F: Fn(u64) -> Option<String> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..upper).into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..upper).filter_map(f).collect()
    }
}

/// T1: characterization vs subset-sum DP on every subset of {1..16},
/// including agreement of the negative witnesses.
pub fn oracle_equivalence(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("T1", "oracle equivalence on subsets of {1..16}");
    let dp_cap = cfg.dp_cap;
    rep.cases = 1 << 16;
    rep.violations = collect_violations(1 << 16, |mask| {
        let a = subset_from_mask(16, mask as u32);
        let chr = is_practical(&a);
        let orc = is_practical_oracle(&a, dp_cap).expect("sum fits any sane cap");
        if chr.practical != orc.practical {
            return Some(format!("verdicts differ on {a}"));
        }
        if !chr.practical && chr.gap_target(&a) != orc.witness {
            return Some(format!("witnesses differ on {a}"));
        }
        None
    });
    rep
}

/// T2: the two extension laws against direct recomputation.
pub fn extension_lemmas(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("T2", "extension laws vs direct recomputation");
    // single-element extension over practical subsets of {1..14}
    let mut first = collect_violations(1 << 14, |mask| {
        let a = subset_from_mask(14, mask as u32);
        if !is_practical(&a).practical {
            return None;
        }
        for n in 1..=30u64 {
            let lemma = can_extend(&a, n).expect("A is practical");
            let direct = is_practical(&a.with(n).expect("n positive")).practical;
            if lemma != direct {
                return Some(format!("single extension differs on A={a}, n={n}"));
            }
        }
        None
    });
    rep.cases += (1u64 << 14) * 30;

    // product extension over practical nonempty A ⊆ {1..10}, 1 ∈ B ⊆ {1..10}
    let dp = cfg.dp_cap;
    let mut second = collect_violations(1 << 10, |mask_a| {
        let a = subset_from_mask(10, mask_a as u32);
        if a.is_empty() || !is_practical(&a).practical {
            return None;
        }
        for mask_b in 0u32..(1 << 10) {
            let b = subset_from_mask(10, mask_b);
            if !b.contains(1) {
                continue;
            }
            let ab = product_set(&a, &b).expect("small products");
            let lemma = product_extension_check(&a, &b).expect("preconditions hold");
            let direct = is_practical(&ab).practical;
            if lemma != direct {
                return Some(format!("product extension differs on A={a}, B={b}"));
            }
            // spot-check the DP oracle agrees on the product too
            if ab.sum().unwrap() < 4096 {
                let orc = is_practical_oracle(&ab, dp).unwrap().practical;
                if orc != direct {
                    return Some(format!("oracle disagrees on AB for A={a}, B={b}"));
                }
            }
        }
        None
    });
    rep.cases += (1u64 << 10) * (1u64 << 9);
    rep.violations.append(&mut first);
    rep.violations.append(&mut second);
    rep
}

/// T3: the three product corollaries on subsets of {1..10}.
pub fn product_laws(_cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("T3", "product laws on subsets of {1..10}");
    rep.violations = collect_violations(1 << 10, |mask_a| {
        let a = subset_from_mask(10, mask_a as u32);
        let a_practical = is_practical(&a).practical;
        for mask_b in 0u32..(1 << 10) {
            let b = subset_from_mask(10, mask_b);
            let ab = product_set(&a, &b).expect("small products");
            let ab_practical = is_practical(&ab).practical;
            // union-then-product, for practical A and 1 ∈ B
            if a_practical
                && b.contains(1)
                && is_practical(&a.union(&b)).practical
                && !ab_practical
            {
                return Some(format!("union-then-product fails on A={a}, B={b}"));
            }
            // subset product
            if a_practical && b.contains(1) && b.is_subset_of(&a) && !ab_practical {
                return Some(format!("subset product fails on A={a}, B={b}"));
            }
            // product of two practical sets
            if a_practical && is_practical(&b).practical && !ab_practical {
                return Some(format!("practical product fails on A={a}, B={b}"));
            }
        }
        None
    });
    rep.cases = 1 << 20;
    rep
}

/// T4: quasi-practical ⟺ practical or prime, against the definitional DP
/// over proper divisors, for n ≤ 10⁴.
pub fn quasi_practical(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T4", "quasi-practical equivalence up to 10^4");
    const N: u64 = 10_000;
    let sieve = FactorSieve::new(N)?;
    let dp = cfg.dp_cap;
    rep.cases = N;
    rep.violations = collect_violations(N, |i| {
        let n = i + 1;
        let direct = is_practical_oracle(&sieve.proper_divisors(n), dp)
            .expect("aliquot sums are small here")
            .practical;
        let formula = sieve.is_practical_number(n) || sieve.is_prime(n);
        let library = sieve.is_quasi_practical(n);
        if direct != formula || formula != library {
            Some(format!(
                "quasi mismatch at n={n}: direct={direct}, formula={formula}"
            ))
        } else {
            None
        }
    });
    Ok(rep)
}

/// T5: n D(m)-practical ⟺ m D(n)-practical ⟺ gcd(n, m) practical, for
/// n, m ≤ 500, each side computed by a different route.
pub fn quotient_gcd(_cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T5", "gcd equivalence for n, m ≤ 500");
    const N: u64 = 500;
    let sieve = FactorSieve::new(N)?;
    rep.cases = N * N;
    rep.violations = collect_violations(N, |i| {
        let m = i + 1;
        let dm_window = WindowSet::from_finite(N, &sieve.divisors(m));
        let pr_dm = pr_window(&dm_window, &sieve);
        for n in 1..=N {
            let via_window = pr_dm.contains(n);
            let via_finite = pr_member_finite(&sieve.divisors(n), m);
            let via_gcd = sieve.is_practical_number(crate::arith::gcd(n, m));
            if via_window != via_gcd || via_finite != via_gcd {
                return Some(format!(
                    "gcd equivalence fails at n={n}, m={m}: {via_window}/{via_finite}/{via_gcd}"
                ));
            }
        }
        None
    });
    Ok(rep)
}

/// T6: predecessor criterion ⟺ practicality on all subsets of {1..14}.
pub fn predecessor_equivalence(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T6", "predecessor criterion on subsets of {1..14}");
    let dp = cfg.dp_cap;
    rep.cases = 1 << 14;
    rep.violations = collect_violations(1 << 14, |mask| {
        let a = subset_from_mask(14, mask as u32);
        let pred = predecessor_criterion(&a, dp).expect("small sums").practical;
        let chr = is_practical(&a).practical;
        if pred != chr {
            Some(format!("predecessor criterion differs on {a}"))
        } else {
            None
        }
    });
    Ok(rep)
}

/// Seeded generator of varied membership rules for the randomized suites.
pub fn random_rule(rng: &mut ChaCha8Rng, window: u64) -> SetRule {
    match rng.gen_range(0..6u32) {
        0 => {
            let len = rng.gen_range(0..12usize);
            let elems: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=window)).collect();
            SetRule::explicit(elems).expect("positive")
        }
        1 => {
            if rng.gen_bool(0.5) {
                SetRule::powers_of_two()
            } else {
                SetRule::PowersOfTwo {
                    max_exp: Some(rng.gen_range(0..10)),
                }
            }
        }
        2 => {
            let primes = [2u64, 3, 5, 7, 11, 13];
            let count = rng.gen_range(1..=3usize);
            let bases: Vec<u64> = (0..count)
                .map(|_| primes[rng.gen_range(0..primes.len())])
                .collect();
            SetRule::smooth_closure(bases).expect("primes")
        }
        3 => SetRule::arithmetic_progression(rng.gen_range(1..=20), rng.gen_range(1..=12))
            .expect("positive"),
        4 => {
            let lo = rng.gen_range(1..=window.min(50));
            let hi = rng.gen_range(lo..=window.min(lo + 60));
            let multiples = if rng.gen_bool(0.5) {
                vec![rng.gen_range(2..=30u64)]
            } else {
                vec![]
            };
            SetRule::complement_of_range(lo, hi, multiples).expect("valid range")
        }
        _ => {
            let density = rng.gen_range(0.02..0.6f64);
            let mut mask = WindowSet::empty(window);
            for v in 1..=window {
                if rng.gen_bool(density) {
                    mask.insert(v);
                }
            }
            SetRule::Mask(mask)
        }
    }
}

/// Random subset of the primes within the window, as a rule usable for the
/// periodic-pair choice set.
pub fn random_prime_choice(rng: &mut ChaCha8Rng, window: u64, sieve: &FactorSieve) -> SetRule {
    let mut mask = WindowSet::empty(window);
    for p in (2..=window).filter(|&p| sieve.is_prime(p)) {
        if rng.gen_bool(0.5) {
            mask.insert(p);
        }
    }
    SetRule::prime_subset(mask).expect("mask holds primes")
}

/// Mutates the tail of a window set beyond `cutoff`, leaving the prefix
/// intact.
fn mutate_tail(rng: &mut ChaCha8Rng, a: &WindowSet, cutoff: u64) -> WindowSet {
    let window = a.window();
    let mut b = a.clone();
    if cutoff >= window {
        return b;
    }
    let flips = rng.gen_range(1..=24usize);
    for _ in 0..flips {
        let v = rng.gen_range(cutoff + 1..=window);
        if b.contains(v) {
            b.remove(v);
        } else {
            b.insert(v);
        }
    }
    b
}

/// T7: prefix determinism — sets agreeing on {1..c} have Pr windows
/// agreeing on {1..c} — plus the chain-union identity along ≺-chains built
/// by repeatedly adjoining the smallest missing power of two.
pub fn prefix_determinism(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T7", "prefix determinism and chain unions");
    const N: u64 = 5_000;
    let sieve = FactorSieve::new(N)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    for case in 0..200u32 {
        let a = random_rule(&mut rng, N).materialize(N);
        let cutoff = rng.gen_range(1..N);
        let b = mutate_tail(&mut rng, &a, cutoff);
        rep.cases += 1;
        let pa = pr_window(&a, &sieve).restrict(cutoff);
        let pb = pr_window(&b, &sieve).restrict(cutoff);
        if pa != pb {
            rep.violations.push(format!(
                "prefix determinism fails at case {case}, cutoff {cutoff}"
            ));
        }
    }

    // chain-union: A ≺ A ∪ {2^k} steps, union's Pr equals the union of Prs
    for case in 0..20u32 {
        let window = 600;
        let chain_sieve = FactorSieve::new(window)?;
        let mut current = random_rule(&mut rng, window).materialize(window);
        let mut union_of_pr = pr_window(&current, &chain_sieve);
        let mut states = vec![current.clone()];
        loop {
            let mut power = 1u64;
            while power <= window && current.contains(power) {
                power *= 2;
            }
            if power > window {
                break;
            }
            let mut next = current.clone();
            next.insert(power);
            if !precedes_window(&current, &next, &chain_sieve)? {
                rep.violations
                    .push(format!("power-of-two step not ≺ at case {case}"));
            }
            let pr_next = pr_window(&next, &chain_sieve);
            for v in pr_next.members() {
                union_of_pr.insert(v);
            }
            states.push(next.clone());
            current = next;
        }
        rep.cases += states.len() as u64;
        if pr_window(&current, &chain_sieve) != union_of_pr {
            rep.violations
                .push(format!("chain-union identity fails at case {case}"));
        }
    }
    Ok(rep)
}

/// T8: the map is 1-Lipschitz for d, with equality attained by (∅, {N}).
pub fn lipschitz(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T8", "Lipschitz bound on 500 random pairs at 10^4");
    const N: u64 = 10_000;
    let sieve = FactorSieve::new(N)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut pairs: Vec<(WindowSet, WindowSet)> = Vec::with_capacity(500);
    for _ in 0..300 {
        let a = random_rule(&mut rng, N).materialize(N);
        let cutoff = rng.gen_range(1..N);
        let b = mutate_tail(&mut rng, &a, cutoff);
        pairs.push((a, b));
    }
    for _ in 0..150 {
        let a = random_rule(&mut rng, N).materialize(N);
        let b = random_rule(&mut rng, N).materialize(N);
        pairs.push((a, b));
    }
    for _ in 0..50 {
        let k = rng.gen_range(2..=N);
        pairs.push((
            WindowSet::empty(N),
            WindowSet::from_members(N, [k]).expect("positive"),
        ));
    }

    let check = |(i, (a, b)): (usize, &(WindowSet, WindowSet))| -> Option<String> {
        let d_in = distance(a, b).expect("same window");
        let d_out = distance(&pr_window(a, &sieve), &pr_window(b, &sieve)).expect("same window");
        if d_out > d_in {
            Some(format!("Lipschitz violated at pair {i}: {d_out} > {d_in}"))
        } else {
            None
        }
    };
    #[cfg(feature = "parallel")]
    {
        rep.violations = pairs.par_iter().enumerate().filter_map(check).collect();
    }
    #[cfg(not(feature = "parallel"))]
    {
        rep.violations = pairs.iter().enumerate().filter_map(check).collect();
    }
    rep.cases = pairs.len() as u64;

    // sharpness: d(Pr(∅), Pr({k})) equals d(∅, {k}) = 1/k
    for k in 2..=50u64 {
        rep.cases += 1;
        let empty = WindowSet::empty(N);
        let single = WindowSet::from_members(N, [k])?;
        let d_out = distance(&pr_window(&empty, &sieve), &pr_window(&single, &sieve))?;
        if d_out != Distance::Inverse(k) {
            rep.violations
                .push(format!("sharpness fails at k={k}: got {d_out}"));
        }
    }
    Ok(rep)
}

/// T9: no fixed point — every odd prime lies in A Δ Pr(A).
pub fn no_fixed_point(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T9", "odd primes separate A from Pr(A), 200 random rules");
    const N: u64 = 2_000;
    let sieve = FactorSieve::new(N)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let odd_primes: Vec<u64> = (3..=N).filter(|&p| sieve.is_prime(p)).collect();

    let sets: Vec<WindowSet> = (0..200)
        .map(|_| random_rule(&mut rng, N).materialize(N))
        .collect();
    let check = |(i, a): (usize, &WindowSet)| -> Option<String> {
        let pr = pr_window(a, &sieve);
        odd_primes
            .iter()
            .find(|&&p| a.contains(p) == pr.contains(p))
            .map(|&p| format!("rule {i}: prime {p} not separated"))
    };
    #[cfg(feature = "parallel")]
    {
        rep.violations = sets.par_iter().enumerate().filter_map(check).collect();
    }
    #[cfg(not(feature = "parallel"))]
    {
        rep.violations = sets.iter().enumerate().filter_map(check).collect();
    }
    rep.cases = sets.len() as u64 * odd_primes.len() as u64;
    Ok(rep)
}

/// T10: the two-periodic pair invariants — the fixed reference pair at
/// window 72, 100 random prime choice sets at window 2000, and prefix
/// stability of the construction.
pub fn periodic_pair(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T10", "two-periodic pairs");
    let all = SetRule::complement_of_range(1, 1, vec![])?; // ℕ \ {1}

    // reference pair at window 72
    {
        let sieve = FactorSieve::new(72)?;
        rep.cases += 1;
        match construct_two_periodic(&all, 72, &sieve) {
            Ok(pair) => {
                let want_a = [1u64, 2, 4, 6, 8, 16, 20, 24, 28, 30, 32, 40, 42, 56, 60, 64, 72];
                if pair.a.to_vec() != want_a {
                    rep.violations.push("reference A at 72 differs".into());
                }
                let want_missing = [6u64, 18, 20, 24, 28, 30, 40, 42, 54, 56, 60, 66, 72];
                let missing: Vec<u64> = (1..=72).filter(|&n| !pair.b.contains(n)).collect();
                if missing != want_missing {
                    rep.violations.push("reference Pr(A) complement differs".into());
                }
                if [18u64, 54, 66]
                    .iter()
                    .any(|&n| pair.a.contains(n) || pair.b.contains(n))
                {
                    rep.violations
                        .push("18, 54, 66 should be outside A ∪ Pr(A)".into());
                }
            }
            Err(e) => rep.violations.push(format!("reference pair failed: {e}")),
        }
    }

    // random prime choice sets; the constructor re-verifies pr(A) = B and
    // pr(B) = A itself, so a clean return is the invariant
    {
        const N: u64 = 2_000;
        let sieve = FactorSieve::new(N)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let choices: Vec<SetRule> = (0..100)
            .map(|_| random_prime_choice(&mut rng, N, &sieve))
            .collect();
        let check = |(i, choice): (usize, &SetRule)| -> Option<String> {
            match construct_two_periodic(choice, N, &sieve) {
                Ok(pair) => {
                    if !pair.a.contains(1) || !pair.b.contains(1) {
                        Some(format!("choice {i}: pair does not contain 1"))
                    } else {
                        None
                    }
                }
                Err(e) => Some(format!("choice {i}: {e}")),
            }
        };
        #[cfg(feature = "parallel")]
        let mut v: Vec<String> = choices.par_iter().enumerate().filter_map(check).collect();
        #[cfg(not(feature = "parallel"))]
        let mut v: Vec<String> = choices.iter().enumerate().filter_map(check).collect();
        rep.cases += choices.len() as u64;
        rep.violations.append(&mut v);
    }

    // prefix stability: the pair built at window n is the restriction of
    // the pair built at window N, for every n ≤ N
    {
        const N: u64 = 120;
        let sieve = FactorSieve::new(N)?;
        let full = construct_two_periodic(&all, N, &sieve)?;
        for n in 2..=N {
            rep.cases += 1;
            let prefix = construct_two_periodic(&all, n, &sieve)?;
            if full.a.restrict(n) != prefix.a || full.b.restrict(n) != prefix.b {
                rep.violations
                    .push(format!("construction not prefix-stable at n={n}"));
            }
        }
    }
    Ok(rep)
}

/// T11: finite-Pr constructions stay below their bound for k ∈ {2..8}.
pub fn finite_pr(_cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T11", "finite-Pr constructions, k ∈ {2..8}");
    for k in 2..=8u64 {
        let window = 10 * k * k;
        let sieve = FactorSieve::new(window)?;
        for variant in [FinitePrVariant::FiniteComplement, FinitePrVariant::InfiniteComplement] {
            rep.cases += 1;
            // the constructor verifies the bound internally
            if let Err(e) = finite_pr_construct(k, variant, window, &sieve) {
                rep.violations.push(format!("k={k}, {variant:?}: {e}"));
            }
        }
    }
    Ok(rep)
}

/// T12: the all-practical classifier on power prefixes, a known
/// counterexample, and random masks (cross-verifying the returned witness).
pub fn classifier(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T12", "all-practical classifier");
    let sieve = FactorSieve::new(1_000)?;

    let cases: [(WindowSet, AllPracticalClass); 4] = [
        (
            WindowSet::from_members(30, [1u64, 2, 4, 8])?,
            AllPracticalClass::PowersOfTwo { max_exp: 3 },
        ),
        (
            WindowSet::from_members(30, [1u64, 2, 4, 8, 16])?,
            AllPracticalClass::PowersOfTwoPrefix,
        ),
        (
            WindowSet::from_members(30, [1u64, 2, 6])?,
            AllPracticalClass::Counterexample { n: 6 },
        ),
        (WindowSet::empty(30), AllPracticalClass::Empty),
    ];
    for (a, want) in &cases {
        rep.cases += 1;
        let got = classify_all_practical(a, &sieve);
        if got != *want {
            rep.violations
                .push(format!("classifier returned {got:?}, wanted {want:?}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for case in 0..60u32 {
        rep.cases += 1;
        let a = random_rule(&mut rng, 500).materialize(500);
        match classify_all_practical(&a, &sieve) {
            AllPracticalClass::Counterexample { n } => {
                let pr = pr_window(&a, &sieve);
                let least = (1..=500u64).find(|&m| !pr.contains(m));
                if least != Some(n) || is_a_practical(n, &a, &sieve)? {
                    rep.violations
                        .push(format!("case {case}: witness {n} not the least non-member"));
                }
            }
            AllPracticalClass::Empty => {
                if !a.is_empty() {
                    rep.violations.push(format!("case {case}: misclassified empty"));
                }
            }
            AllPracticalClass::PowersOfTwo { .. } | AllPracticalClass::PowersOfTwoPrefix => {
                let members = a.to_vec();
                let powers = members[0] == 1 && members.windows(2).all(|w| w[1] == 2 * w[0]);
                if !powers {
                    rep.violations
                        .push(format!("case {case}: misclassified power prefix"));
                }
            }
        }
    }
    Ok(rep)
}

/// T13: the step-by-step law over every pair A ⊊ B ⊆ {1..10}.
pub fn step_by_step(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T13", "step-by-step law on subsets of {1..10}");
    let lcm_cap = cfg.lcm_cap;
    // each element is out, in A (hence in B), or in B only: 3^10 assignments
    let total = 3u64.pow(10);
    let outcomes = collect_violations(total, |code| {
        let mut c = code;
        let mut a_elems = Vec::new();
        let mut b_elems = Vec::new();
        for v in 1..=10u64 {
            match c % 3 {
                1 => {
                    a_elems.push(v);
                    b_elems.push(v);
                }
                2 => b_elems.push(v),
                _ => {}
            }
            c /= 3;
        }
        if a_elems.len() == b_elems.len() {
            return None; // A = B, not a strict extension
        }
        let a = FiniteSet::new(a_elems).expect("positive");
        let b = FiniteSet::new(b_elems).expect("positive");
        match step_by_step_check(&a, &b, lcm_cap) {
            Ok(true) => None,
            Ok(false) => Some(format!("step-by-step falsified on A={a}, B={b}")),
            Err(e) if e.is_undecided() => Some(format!("UNDECIDED A={a}, B={b}")),
            Err(e) => Some(format!("error on A={a}, B={b}: {e}")),
        }
    });
    rep.cases = total;
    for o in outcomes {
        if o.starts_with("UNDECIDED") {
            rep.undecided += 1;
        } else {
            rep.violations.push(o);
        }
    }
    Ok(rep)
}

/// T14: both removal laws over subsets of {1..10} with candidates n ≤ 12.
pub fn removal(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T14", "removal laws on subsets of {1..10}, n ≤ 12");
    let lcm_cap = cfg.lcm_cap;
    let outcomes = collect_violations(1 << 10, |mask| {
        let a = subset_from_mask(10, mask as u32);
        for n in 1..=12u64 {
            if a.contains(n) {
                continue;
            }
            match removal_report(&a, n, lcm_cap) {
                Ok(report) => {
                    if let Some(check) = report.beyond_max {
                        if !check.verified {
                            return Some(format!(
                                "beyond-max removal falsified on A={a}, n={n} at {:?}",
                                check.counterexample
                            ));
                        }
                    }
                    if let Some(check) = report.equality {
                        if !check.verified {
                            return Some(format!(
                                "equality removal falsified on A={a}, n={n} at {:?}",
                                check.counterexample
                            ));
                        }
                    }
                }
                Err(e) if e.is_undecided() => return Some("UNDECIDED".into()),
                Err(e) => return Some(format!("error on A={a}, n={n}: {e}")),
            }
        }
        None
    });
    rep.cases = (1 << 10) * 12;
    for o in outcomes {
        if o == "UNDECIDED" {
            rep.undecided += 1;
        } else {
            rep.violations.push(o);
        }
    }
    Ok(rep)
}

/// T15: the {1,2,3} ladder — every prefix A_k (k ≥ 3) of the sorted
/// 3-smooth numbers has Pr(A_k) = {n : n ≢ 3 (mod 6)} on the window.
pub fn ladder(_cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("T15", "{1,2,3} ladder at window 10^4");
    const N: u64 = 10_000;
    let sieve = FactorSieve::new(N)?;
    let target = WindowSet::from_members(N, (1..=N).filter(|&n| n % 6 != 3))?;

    let smooth = SetRule::smooth_closure([2, 3])?.materialize(N);
    let members = smooth.to_vec();
    let top_k = members.len().min(40);
    for k in 3..=top_k {
        rep.cases += 1;
        let prefix = WindowSet::from_members(N, members[..k].iter().copied())?;
        if pr_window(&prefix, &sieve) != target {
            rep.violations.push(format!("ladder fails at k={k}"));
        }
    }
    Ok(rep)
}
