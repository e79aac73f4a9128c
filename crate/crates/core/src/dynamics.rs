//! The Pr map as a dynamical system on window sets.
//!
//! The metric is d(A, B) = 1 / min(A Δ B) (0 when equal), kept as an exact
//! rational so Lipschitz comparisons never touch floating point. Orbits
//! iterate `pr_window` with full-history exact repeat detection. The
//! two-periodic constructor grows a pair (A, B) with B = Pr(A) and
//! A = Pr(B) on the window, choosing sides in the one genuinely free case
//! through a caller-supplied choice set I ⊆ ℕ\{1}.

use crate::arith::FactorSieve;
use crate::error::{Error, Result};
use crate::pr::{member_with_bufs, practical_and_sum, pr_window};
use crate::rule::SetRule;
use crate::window::WindowSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Exact distance between two window sets: 0 or 1/k with k ≥ 1.
///
/// `EqualOnWindow` means the sets agree on the whole window — window-limited
/// evidence for distance 0, not a claim about elements beyond it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    EqualOnWindow,
    /// The value 1/k, stored by its denominator k = min(A Δ B).
    Inverse(u64),
}

impl Distance {
    pub fn denominator(&self) -> Option<u64> {
        match self {
            Distance::EqualOnWindow => None,
            Distance::Inverse(k) => Some(*k),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Distance::EqualOnWindow)
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Distance::*;
        match (self, other) {
            (EqualOnWindow, EqualOnWindow) => std::cmp::Ordering::Equal,
            (EqualOnWindow, Inverse(_)) => std::cmp::Ordering::Less,
            (Inverse(_), EqualOnWindow) => std::cmp::Ordering::Greater,
            // 1/k1 vs 1/k2 compares opposite to k1 vs k2
            (Inverse(k1), Inverse(k2)) => k2.cmp(k1),
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::EqualOnWindow => write!(f, "0"),
            Distance::Inverse(k) => write!(f, "1/{k}"),
        }
    }
}

/// d(A, B) = (min(A Δ B))⁻¹ with d = 0 for window-equal sets.
pub fn distance(a: &WindowSet, b: &WindowSet) -> Result<Distance> {
    Ok(match a.min_symmetric_difference(b)? {
        None => Distance::EqualOnWindow,
        Some(k) => Distance::Inverse(k),
    })
}

/// A Pr orbit: states[j+1] = pr_window(states[j]), consecutive distances,
/// and the first exact repeat if one showed up.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    pub states: Vec<WindowSet>,
    pub distances: Vec<Distance>,
    /// (preperiod, period) of the first bit-identical repeat on the window.
    pub eventual_period: Option<(usize, usize)>,
}

/// Iterates the Pr map from `start` for up to `steps` steps, stopping
/// early once a state repeats exactly (everything after is determined).
pub fn orbit(start: &WindowSet, steps: usize, sieve: &FactorSieve) -> OrbitRecord {
    assert!(steps >= 1);
    let mut states = vec![start.clone()];
    let mut distances = Vec::new();
    for _ in 0..steps {
        let next = pr_window(states.last().unwrap(), sieve);
        distances.push(distance(states.last().unwrap(), &next).expect("same window"));
        let repeat = states.contains(&next);
        states.push(next);
        if repeat {
            break;
        }
    }
    let eventual_period = detect_period_in(&states);
    OrbitRecord {
        states,
        distances,
        eventual_period,
    }
}

/// First exact repeat among recorded states: smallest (j, i) with
/// states[i] = states[j], reported as (preperiod j, period i − j).
pub fn detect_period(rec: &OrbitRecord) -> Option<(usize, usize)> {
    detect_period_in(&rec.states)
}

fn detect_period_in(states: &[WindowSet]) -> Option<(usize, usize)> {
    for i in 1..states.len() {
        for j in 0..i {
            if states[j] == states[i] {
                return Some((j, i - j));
            }
        }
    }
    None
}

/// A pair (A, B) with B = Pr(A) and A = Pr(B) on the window, built by
/// [`construct_two_periodic`].
#[derive(Clone, Debug)]
pub struct PeriodicPair {
    pub a: WindowSet,
    pub b: WindowSet,
    pub choice: SetRule,
}

impl PeriodicPair {
    pub fn window(&self) -> u64 {
        self.a.window()
    }
}

/// Three-way classification of S(n) ∩ X driving the constructor's case
/// table: practical with sum ≥ n−1, practical with sum < n−1, or not
/// practical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ProperClass {
    BigPractical,
    SmallPractical,
    NotPractical,
}

fn classify_proper(
    n: u64,
    x: &WindowSet,
    div_buf: &[u64],
    hit_buf: &mut Vec<u64>,
) -> ProperClass {
    hit_buf.clear();
    hit_buf.extend(div_buf.iter().copied().filter(|&d| x.contains(d)));
    let (practical, sum) = practical_and_sum(hit_buf);
    if !practical {
        ProperClass::NotPractical
    } else if sum >= n - 1 {
        ProperClass::BigPractical
    } else {
        ProperClass::SmallPractical
    }
}

/// Builds a 2-periodic pair of the Pr map incrementally: A₁ = B₁ = {1},
/// and each n ≥ 2 joins A, B, both, or neither according to the
/// classification of S(n) ∩ A_{n−1} and S(n) ∩ B_{n−1}. Only the
/// (small-practical, small-practical) case is a free choice, settled by
/// n ∈ I. The postcondition pr(A) = B and pr(B) = A is re-verified on the
/// window before returning.
pub fn construct_two_periodic(
    choice: &SetRule,
    window: u64,
    sieve: &FactorSieve,
) -> Result<PeriodicPair> {
    if window < 1 {
        return Err(Error::precondition("window must be at least 1"));
    }
    assert!(sieve.window() >= window, "sieve smaller than window");
    let choice_set = choice.materialize(window);
    if choice_set.contains(1) {
        return Err(Error::precondition("choice set must avoid 1"));
    }

    let mut a = WindowSet::empty(window);
    let mut b = WindowSet::empty(window);
    a.insert(1);
    b.insert(1);

    let mut div_buf = Vec::new();
    let mut hit_buf = Vec::new();
    for n in 2..=window {
        sieve.proper_divisors_into(n, &mut div_buf);
        let ca = classify_proper(n, &a, &div_buf, &mut hit_buf);
        let cb = classify_proper(n, &b, &div_buf, &mut hit_buf);
        use ProperClass::*;
        let (add_a, add_b) = match (ca, cb) {
            (BigPractical, BigPractical) => (true, true),
            (BigPractical, SmallPractical) => (false, true),
            (BigPractical, NotPractical) => (false, true),
            (SmallPractical, BigPractical) => (true, false),
            (SmallPractical, SmallPractical) => {
                if choice_set.contains(n) {
                    (false, true)
                } else {
                    (true, false)
                }
            }
            (SmallPractical, NotPractical) => (false, true),
            (NotPractical, BigPractical) => (true, false),
            (NotPractical, SmallPractical) => (true, false),
            (NotPractical, NotPractical) => (false, false),
        };
        if add_a {
            a.insert(n);
        }
        if add_b {
            b.insert(n);
        }
    }

    if pr_window(&a, sieve) != b || pr_window(&b, sieve) != a {
        return Err(Error::Internal(format!(
            "periodic pair postcondition failed at window {window}"
        )));
    }
    Ok(PeriodicPair {
        a,
        b,
        choice: choice.clone(),
    })
}

/// For two prime choice sets differing at an odd prime p within the
/// window, the constructed A-sides differ at p as well; returns the
/// smallest such witness prime, or None when no odd prime separates the
/// choice sets in the window.
pub fn distinctness_probe(
    i1: &SetRule,
    i2: &SetRule,
    window: u64,
    sieve: &FactorSieve,
) -> Result<Option<u64>> {
    let m1 = i1.materialize(window);
    let m2 = i2.materialize(window);
    for (name, m) in [("first", &m1), ("second", &m2)] {
        if let Some(bad) = m.members().find(|&v| !sieve.is_prime(v)) {
            return Err(Error::precondition(format!(
                "{name} choice set contains non-prime {bad}"
            )));
        }
    }
    let Some(p) = (2..=window).find(|&v| v % 2 == 1 && m1.contains(v) != m2.contains(v)) else {
        return Ok(None);
    };
    let pair1 = construct_two_periodic(i1, window, sieve)?;
    let pair2 = construct_two_periodic(i2, window, sieve)?;
    if pair1.a.contains(p) == pair2.a.contains(p) {
        return Err(Error::Internal(format!(
            "constructions for distinct choice sets agree at p = {p}"
        )));
    }
    Ok(Some(p))
}

/// The two shapes of the finite-Pr construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinitePrVariant {
    /// ℕ \ A_k = {k, …, k(k−1)/2 + 1}.
    FiniteComplement,
    /// Additionally remove n·(k(k−1)/2 + 2) for every n ≥ 2, making the
    /// complement infinite while Pr stays finite.
    InfiniteComplement,
}

#[derive(Clone, Debug)]
pub struct FinitePrOutcome {
    pub set: WindowSet,
    pub pr: WindowSet,
    /// Proven ceiling for Pr members: k(k−1)/2 + 1.
    pub bound: u64,
}

/// The membership rule of A_k for either variant.
pub fn finite_pr_rule(k: u64, variant: FinitePrVariant) -> Result<SetRule> {
    if k < 2 {
        return Err(Error::precondition("k must be at least 2"));
    }
    let bound = k * (k - 1) / 2 + 1;
    let excluded = match variant {
        FinitePrVariant::FiniteComplement => vec![],
        FinitePrVariant::InfiniteComplement => vec![bound + 1],
    };
    SetRule::complement_of_range(k, bound, excluded)
}

/// Materializes A_k, computes its Pr window, and verifies that no member
/// of Pr(A_k) exceeds k(k−1)/2 + 1.
pub fn finite_pr_construct(
    k: u64,
    variant: FinitePrVariant,
    window: u64,
    sieve: &FactorSieve,
) -> Result<FinitePrOutcome> {
    let rule = finite_pr_rule(k, variant)?;
    let bound = k * (k - 1) / 2 + 1;
    if window < bound {
        return Err(Error::precondition(format!(
            "window {window} below the Pr bound {bound}"
        )));
    }
    let set = rule.materialize(window);
    let pr = pr_window(&set, sieve);
    if let Some(stray) = pr.members().find(|&m| m > bound) {
        return Err(Error::Internal(format!(
            "Pr(A_{k}) contains {stray} above the bound {bound}"
        )));
    }
    Ok(FinitePrOutcome { set, pr, bound })
}

/// What a window set must look like for every number to be A-practical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AllPracticalClass {
    Empty,
    /// Exactly {1, 2, …, 2^max_exp}, with the next power inside the window
    /// and absent — a genuinely capped power set.
    PowersOfTwo { max_exp: u32 },
    /// Consecutive powers of two filling the window to its edge; the window
    /// cannot distinguish a capped set from the infinite one.
    PowersOfTwoPrefix,
    /// Pr is not the full window; k is the least non-A-practical number.
    Counterexample { n: u64 },
}

/// Classifies A by whether Pr(A) covers the whole window. Full coverage
/// forces A to be empty or a consecutive run of powers of two starting at
/// 1; anything else yields the least non-member of Pr(A).
pub fn classify_all_practical(a: &WindowSet, sieve: &FactorSieve) -> AllPracticalClass {
    let pr = pr_window(a, sieve);
    if let Some(n) = (1..=a.window()).find(|&n| !pr.contains(n)) {
        return AllPracticalClass::Counterexample { n };
    }
    if a.is_empty() {
        return AllPracticalClass::Empty;
    }
    let members = a.to_vec();
    let consecutive_powers = members[0] == 1
        && members.windows(2).all(|w| w[1] == 2 * w[0]);
    if !consecutive_powers {
        unreachable!("full Pr window with non-power content {members:?}");
    }
    let top = *members.last().unwrap();
    if top <= a.window() / 2 {
        AllPracticalClass::PowersOfTwo {
            max_exp: top.trailing_zeros(),
        }
    } else {
        AllPracticalClass::PowersOfTwoPrefix
    }
}

/// Search strategy for proper subsets A ⊊ {1..N} with Pr(A) equal to the
/// practical numbers.
#[derive(Clone, Copy, Debug)]
pub enum PreimageStrategy {
    /// Try every single deletion {1..N} \ {m}.
    SingleDeletion,
    /// Seeded random multi-element deletions.
    Randomized {
        trials: u32,
        max_deletions: u32,
        seed: u64,
    },
}

/// Looks for proper subsets of the full window whose Pr window equals the
/// practical numbers. Survivors are returned as the lists of deleted
/// elements; they are window evidence only, not counterexamples. Expected
/// empty.
pub fn practical_preimage_search(
    window: u64,
    strategy: PreimageStrategy,
    sieve: &FactorSieve,
) -> Vec<Vec<u64>> {
    assert!(sieve.window() >= window);
    let target = sieve.practical_sieve(window);
    let deletion_lists: Vec<Vec<u64>> = match strategy {
        PreimageStrategy::SingleDeletion => (1..=window).map(|m| vec![m]).collect(),
        PreimageStrategy::Randomized {
            trials,
            max_deletions,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let max_deletions = max_deletions.max(1).min(window as u32);
            (0..trials)
                .map(|_| {
                    let t = rng.gen_range(1..=max_deletions) as usize;
                    let mut picks: Vec<u64> = sample(&mut rng, window as usize, t)
                        .into_iter()
                        .map(|i| i as u64 + 1)
                        .collect();
                    picks.sort_unstable();
                    picks
                })
                .collect()
        }
    };

    let check = |deleted: &Vec<u64>| -> bool {
        let mut a = WindowSet::full(window);
        for &m in deleted {
            a.remove(m);
        }
        pr_equals_target(&a, &target, sieve)
    };

    #[cfg(feature = "parallel")]
    {
        deletion_lists
            .into_par_iter()
            .filter(|d| check(d))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        deletion_lists.into_iter().filter(check).collect()
    }
}

/// Early-exit comparison of Pr(A) against a precomputed target window.
fn pr_equals_target(a: &WindowSet, target: &WindowSet, sieve: &FactorSieve) -> bool {
    let mut div_buf = Vec::new();
    let mut hit_buf = Vec::new();
    (1..=a.window())
        .all(|n| member_with_bufs(n, a, sieve, &mut div_buf, &mut hit_buf) == target.contains(n))
}
