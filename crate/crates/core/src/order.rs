//! The partial order A ≺ B (A ⊆ B and Pr(A) ⊆ Pr(B)), decided two ways:
//!
//! * `precedes_window` — evidence restricted to a window; necessary but not
//!   conclusive for infinite rules.
//! * `precedes_exact` — exact for finite sets. Membership of n in Pr(A)
//!   depends only on which elements of A divide n, and each condition
//!   `a | n` is periodic in n with period a; so checking one full period
//!   lcm(A ∪ B) decides the inclusion for all n. Periods above the cap
//!   yield an explicit undecided error, never a guess.
//!
//! On top of the exact decision sit the structural checkers: minimality
//! and the minimal core, the σ-bound expansion test, the exact one-element
//! expansion decision, the removal theorems, and the step-by-step law.

use crate::arith::{self, FactorSieve};
use crate::error::{Error, Result};
use crate::pr::{pr_member_finite, pr_window};
use crate::pset::FiniteSet;
use crate::rule::{MinOutcome, SetRule};
use crate::window::WindowSet;

/// Default cap on the lcm period for exact order decisions.
pub const DEFAULT_LCM_CAP: u64 = 10_000_000;

/// Window-bounded order evidence: A ⊆ B and Pr(A) ⊆ Pr(B), both restricted
/// to the common window.
pub fn precedes_window(a: &WindowSet, b: &WindowSet, sieve: &FactorSieve) -> Result<bool> {
    if !a.is_subset_of(b)? {
        return Ok(false);
    }
    pr_window(a, sieve).is_subset_of(&pr_window(b, sieve))
}

/// Why an exact order decision came out negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderFailure {
    /// An element of A missing from B.
    NotSubset { element: u64 },
    /// An n with n ∈ Pr(A) but n ∉ Pr(B).
    PrNotContained { n: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub holds: bool,
    /// The verified period (lcm of A ∪ B), 1 for empty sets.
    pub period: u64,
    pub failure: Option<OrderFailure>,
}

/// Exact decision of A ≺ B for finite sets, by scanning one lcm period.
pub fn precedes_exact(a: &FiniteSet, b: &FiniteSet, lcm_cap: u64) -> Result<OrderReport> {
    if let Some(missing) = a.iter().find(|&e| !b.contains(e)) {
        return Ok(OrderReport {
            holds: false,
            period: 0,
            failure: Some(OrderFailure::NotSubset { element: missing }),
        });
    }
    let period = period_of(&a.union(b), lcm_cap)?;
    match pr_inclusion_gap(a, b, period) {
        None => Ok(OrderReport {
            holds: true,
            period,
            failure: None,
        }),
        Some(n) => Ok(OrderReport {
            holds: false,
            period,
            failure: Some(OrderFailure::PrNotContained { n }),
        }),
    }
}

/// lcm of the set, checked against the cap.
fn period_of(set: &FiniteSet, lcm_cap: u64) -> Result<u64> {
    let l = arith::checked_lcm_of(set.iter())
        .map_err(|_| Error::undecided(format!("lcm of {set} overflows u64")))?;
    if l > lcm_cap {
        return Err(Error::undecided(format!(
            "lcm {l} of {set} exceeds cap {lcm_cap}"
        )));
    }
    Ok(l)
}

/// First n in one period with n ∈ Pr(x) but n ∉ Pr(y), if any.
fn pr_inclusion_gap(x: &FiniteSet, y: &FiniteSet, period: u64) -> Option<u64> {
    (1..=period).find(|&n| pr_member_finite(x, n) && !pr_member_finite(y, n))
}

/// Minimality of a finite set with respect to ≺: every element has no
/// divisor in A other than itself, and A ≠ {1}. (Prime subsets qualify;
/// any set containing 1 alongside other elements does not.)
pub fn is_minimal(a: &FiniteSet) -> bool {
    if a.elems() == [1] {
        return false;
    }
    a.iter()
        .all(|e| !a.iter().any(|d| d != e && e % d == 0))
}

/// Window-content minimality; evidence only, since elements beyond the
/// window could add divisibility relations… they cannot (divisors of a
/// window member are window members too), so this is in fact exact for
/// the window content as a finite set.
pub fn is_minimal_window(a: &WindowSet) -> bool {
    is_minimal(&a.to_finite_set())
}

/// The minimal core: elements a > 1 whose only divisors inside A are 1 and
/// a itself. The core is minimal (or empty) and precedes A.
pub fn minimal_core(a: &FiniteSet) -> FiniteSet {
    FiniteSet::new(
        a.iter()
            .filter(|&e| e > 1 && a.iter().all(|d| d == 1 || d == e || e % d != 0)),
    )
    .expect("elements come from a valid set")
}

pub fn minimal_core_window(a: &WindowSet) -> WindowSet {
    WindowSet::from_finite(a.window(), &minimal_core(&a.to_finite_set()))
}

/// Tri-state outcome of the σ-bound expansion test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Applicability {
    Applicable,
    NotApplicable,
    /// A \ D(n) is empty in the window and no rule could certify whether it
    /// is empty outright; the hypothesis cannot be evaluated on this data.
    UndecidedAtWindow,
}

/// Sufficient condition for A ≺ A ∪ {n}: n not an odd prime, S(n) ⊆ A,
/// n ∉ A, and σ(n) ≥ 2n − d₀ − 1 with d₀ = inf(A \ D(n)).
///
/// The window minimum of A \ D(n) is exact whenever it exists (everything
/// beyond the window is larger). When the window shows nothing, a rule
/// backing A can certify the infimum or the emptiness; without one the
/// check reports `UndecidedAtWindow` rather than guessing.
pub fn expansion_applicable(
    a: &WindowSet,
    rule: Option<&SetRule>,
    n: u64,
    sieve: &FactorSieve,
) -> Result<Applicability> {
    if n == 0 || n > a.window() {
        return Err(Error::OutOfWindow {
            n,
            window: a.window(),
        });
    }
    if n >= 3 && sieve.is_prime(n) {
        return Err(Error::precondition(format!(
            "expansion test excludes odd primes, got {n}"
        )));
    }
    let proper = sieve.proper_divisors(n);
    if !proper.iter().all(|d| a.contains(d)) {
        return Ok(Applicability::NotApplicable);
    }
    if a.contains(n) {
        return Ok(Applicability::NotApplicable);
    }
    let sigma = sieve.sigma(n)? as u128;
    if sigma >= 2 * n as u128 - 1 {
        return Ok(Applicability::Applicable);
    }
    // need d₀ = inf(A \ D(n))
    let window_min = a.members().find(|&d| n % d != 0);
    let d0 = match window_min {
        Some(d) => Some(d),
        None => match rule {
            Some(r) => match r.min_excluding_divisors(n)? {
                MinOutcome::Min(d) => Some(d),
                MinOutcome::Empty => None, // inf ∅ = +∞, bound holds trivially
            },
            None => return Ok(Applicability::UndecidedAtWindow),
        },
    };
    let applicable = match d0 {
        None => true,
        Some(d0) => sigma + d0 as u128 + 1 >= 2 * n as u128,
    };
    Ok(if applicable {
        Applicability::Applicable
    } else {
        Applicability::NotApplicable
    })
}

/// Exact decision of A ≺ A ∪ {n}: the order extension holds iff, for every
/// multiplier a that is an lcm of a subset of A \ D(n) (including lcm ∅ =
/// 1), membership of a·n in Pr(A) implies membership in Pr(A ∪ {n}).
/// Agrees with `precedes_exact(A, A ∪ {n})`.
pub fn expansion_exact(a: &FiniteSet, n: u64, lcm_cap: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroElement);
    }
    if a.contains(n) {
        return Err(Error::precondition(format!("{n} is already in {a}")));
    }
    let outside = FiniteSet::new(a.iter().filter(|&e| n % e != 0))
        .expect("elements come from a valid set");
    let with_n = a.with(n)?;

    // distinct subset lcms, grown one element at a time
    let mut multipliers: Vec<u64> = vec![1];
    for e in outside.iter() {
        let mut grown = multipliers.clone();
        for &m in &multipliers {
            let l = arith::checked_lcm(m, e)
                .map_err(|_| Error::undecided("subset lcm overflows u64".to_string()))?;
            if l > lcm_cap {
                return Err(Error::undecided(format!(
                    "subset lcm {l} exceeds cap {lcm_cap}"
                )));
            }
            grown.push(l);
        }
        grown.sort_unstable();
        grown.dedup();
        multipliers = grown;
    }

    for &mult in &multipliers {
        let m = mult
            .checked_mul(n)
            .ok_or_else(|| Error::undecided("multiple overflows u64".to_string()))?;
        if pr_member_finite(a, m) && !pr_member_finite(&with_n, m) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One verified theorem conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub verified: bool,
    /// First n contradicting the conclusion, when not verified.
    pub counterexample: Option<u64>,
}

/// Which removal laws apply to (A, n) and whether their conclusions held
/// under exact periodic verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalReport {
    /// n > max A: conclusion Pr(A ∪ {n}) ⊆ Pr(A).
    pub beyond_max: Option<TheoremCheck>,
    /// n practical, S(n) ⊆ A, sup(A \ S(n)) ≤ s(n) + 1: conclusion
    /// Pr(A ∪ {n}) = Pr(A), and every multiple of n is A-practical.
    pub equality: Option<TheoremCheck>,
    pub period: u64,
}

/// Evaluates both removal theorems' hypotheses on (A, n) and verifies the
/// claimed conclusions over one lcm period.
pub fn removal_report(a: &FiniteSet, n: u64, lcm_cap: u64) -> Result<RemovalReport> {
    if n == 0 {
        return Err(Error::ZeroElement);
    }
    if a.contains(n) {
        return Err(Error::precondition(format!("{n} is already in {a}")));
    }
    let with_n = a.with(n)?;
    let period = period_of(&with_n, lcm_cap)?;

    let beyond_max = if n > a.max().unwrap_or(0) {
        let gap = pr_inclusion_gap(&with_n, a, period);
        Some(TheoremCheck {
            verified: gap.is_none(),
            counterexample: gap,
        })
    } else {
        None
    };

    let equality = {
        let proper = arith::proper_divisors(n)?;
        let aliquot = arith::aliquot(n)?;
        let hyps = arith::is_practical_number(n)
            && proper.is_subset_of(a)
            && a.difference(&proper).max().unwrap_or(0) <= aliquot + 1;
        if hyps {
            let mut counterexample = pr_inclusion_gap(&with_n, a, period)
                .or_else(|| pr_inclusion_gap(a, &with_n, period));
            if counterexample.is_none() {
                // every multiple of n within the period must be A-practical
                counterexample = (1..=period / n)
                    .map(|k| k * n)
                    .find(|&m| !pr_member_finite(a, m));
            }
            Some(TheoremCheck {
                verified: counterexample.is_none(),
                counterexample,
            })
        } else {
            None
        }
    };

    Ok(RemovalReport {
        beyond_max,
        equality,
        period,
    })
}

/// Step-by-step law: if A ≺ B then A ≺ A ∪ {min(B \ A)}. Returns the truth
/// of the implication for this pair; a `false` would falsify the law.
pub fn step_by_step_check(a: &FiniteSet, b: &FiniteSet, lcm_cap: u64) -> Result<bool> {
    if !a.is_subset_of(b) || a == b {
        return Err(Error::precondition(format!("need A ⊊ B, got {a} and {b}")));
    }
    let k = b
        .iter()
        .find(|&e| !a.contains(e))
        .expect("B strictly contains A");
    if !precedes_exact(a, b, lcm_cap)?.holds {
        return Ok(true); // premise fails, implication vacuously true
    }
    Ok(precedes_exact(a, &a.with(k)?, lcm_cap)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(elems: &[u64]) -> FiniteSet {
        FiniteSet::new(elems.iter().copied()).unwrap()
    }

    #[test]
    fn window_order_examples() {
        let sieve = FactorSieve::new(100).unwrap();
        let a = SetRule::explicit([1, 2, 3]).unwrap().materialize(100);
        let b = SetRule::smooth_closure([2, 3]).unwrap().materialize(100);
        assert!(precedes_window(&a, &b, &sieve).unwrap());
        assert!(precedes_window(&a, &a, &sieve).unwrap());
        let c = WindowSet::from_members(20, [3]).unwrap();
        let d = WindowSet::from_members(20, [1, 3]).unwrap();
        let sieve20 = FactorSieve::new(20).unwrap();
        assert!(precedes_window(&c, &d, &sieve20).unwrap());
    }

    #[test]
    fn exact_order_examples() {
        let r = precedes_exact(&fs(&[1, 2, 3]), &fs(&[1, 2, 3, 4]), DEFAULT_LCM_CAP).unwrap();
        assert!(r.holds);
        assert_eq!(r.period, 12);
        assert!(precedes_exact(&fs(&[2, 5]), &fs(&[2, 5]), DEFAULT_LCM_CAP).unwrap().holds);
        assert!(precedes_exact(&fs(&[3]), &fs(&[3, 9]), DEFAULT_LCM_CAP).unwrap().holds);

        let r = precedes_exact(&fs(&[1, 4]), &fs(&[1]), DEFAULT_LCM_CAP).unwrap();
        assert_eq!(r.failure, Some(OrderFailure::NotSubset { element: 4 }));

        // {1} ⊀ {1,3}: 3 ∈ Pr({1}) but 3 ∉ Pr({1,3})
        let r = precedes_exact(&fs(&[1]), &fs(&[1, 3]), DEFAULT_LCM_CAP).unwrap();
        assert!(!r.holds);
        assert_eq!(r.failure, Some(OrderFailure::PrNotContained { n: 3 }));
    }

    #[test]
    fn exact_order_cap() {
        // lcm of large coprimes blows the cap
        let a = fs(&[9973]);
        let b = fs(&[9973, 9967]);
        let err = precedes_exact(&a, &b, 1000).unwrap_err();
        assert!(err.is_undecided());
    }

    #[test]
    fn minimality() {
        assert!(is_minimal(&fs(&[2, 5, 7])));
        assert!(!is_minimal(&fs(&[1])));
        assert!(!is_minimal(&fs(&[1, 2])));
        assert!(!is_minimal(&fs(&[2, 4])));
        assert!(is_minimal(&FiniteSet::empty()));
        assert_eq!(minimal_core(&fs(&[1, 2, 4, 5, 7])), fs(&[2, 5, 7]));
        assert_eq!(minimal_core(&fs(&[1])), FiniteSet::empty());
    }

    #[test]
    fn minimal_core_precedes_original() {
        let sieve = FactorSieve::new(500).unwrap();
        for a in [fs(&[1, 2, 4, 5, 7]), fs(&[2, 3, 9, 10]), fs(&[1, 6, 8, 9])] {
            let core = minimal_core(&a);
            assert!(core.is_empty() || is_minimal(&core));
            let aw = WindowSet::from_finite(500, &a);
            let cw = WindowSet::from_finite(500, &core);
            assert!(precedes_window(&cw, &aw, &sieve).unwrap(), "core ⊀ {a}");
        }
    }

    #[test]
    fn expansion_applicable_examples() {
        let sieve = FactorSieve::new(100).unwrap();
        let a = WindowSet::from_members(100, [1, 2, 3]).unwrap();
        assert_eq!(
            expansion_applicable(&a, None, 4, &sieve).unwrap(),
            Applicability::Applicable
        );
        let small = WindowSet::from_members(100, [1, 2]).unwrap();
        assert_eq!(
            expansion_applicable(&small, None, 9, &sieve).unwrap(),
            Applicability::NotApplicable
        );
        assert!(expansion_applicable(&a, None, 7, &sieve).is_err()); // odd prime
    }

    #[test]
    fn expansion_applicable_powers_of_two() {
        // the smallest missing power of 2 always qualifies: σ(2^k) = 2^{k+1}−1
        let sieve = FactorSieve::new(16).unwrap();
        let a = SetRule::PowersOfTwo { max_exp: Some(3) }.materialize(16); // {1,2,4,8}
        assert_eq!(
            expansion_applicable(&a, None, 16, &sieve).unwrap(),
            Applicability::Applicable
        );
    }

    #[test]
    fn expansion_applicable_uses_rule_certification() {
        // n = 10: σ(10) = 18 < 19 = 2n−1, so the verdict needs d₀.
        // S(10) = {1,2,5}; with A = {1,2,5}, A \ D(10) is empty in any window.
        let sieve = FactorSieve::new(40).unwrap();
        let just_s10 = WindowSet::from_members(40, [1, 2, 5]).unwrap();
        assert_eq!(
            expansion_applicable(&just_s10, None, 10, &sieve).unwrap(),
            Applicability::UndecidedAtWindow
        );
        let rule = SetRule::explicit([1, 2, 5]).unwrap();
        assert_eq!(
            expansion_applicable(&just_s10, Some(&rule), 10, &sieve).unwrap(),
            Applicability::Applicable
        );
        // certified non-divisor beyond the window: d₀ = 41, and 18 ≥ 20 − 41 − 1
        let rule_big = SetRule::explicit([1, 2, 5, 41]).unwrap();
        let a_big = rule_big.materialize(40);
        assert_eq!(
            expansion_applicable(&a_big, Some(&rule_big), 10, &sieve).unwrap(),
            Applicability::Applicable
        );
        // window-visible d₀ that breaks the bound:
        // n = 50: σ(50) = 93 < 99, S(50) = {1,2,5,10,25}, d₀ = 3 → 93 < 2·50 − 3 − 1
        let sieve100 = FactorSieve::new(100).unwrap();
        let a50 = WindowSet::from_members(100, [1, 2, 3, 5, 10, 25]).unwrap();
        assert_eq!(
            expansion_applicable(&a50, None, 50, &sieve100).unwrap(),
            Applicability::NotApplicable
        );
    }

    #[test]
    fn expansion_exact_examples() {
        assert!(expansion_exact(&fs(&[1, 2, 3]), 4, DEFAULT_LCM_CAP).unwrap());
        assert!(!expansion_exact(&fs(&[1]), 3, DEFAULT_LCM_CAP).unwrap());
        assert!(!expansion_exact(&fs(&[1, 2]), 3, DEFAULT_LCM_CAP).unwrap());
        assert!(expansion_exact(&fs(&[1, 2]), 4, DEFAULT_LCM_CAP).unwrap());
    }

    #[test]
    fn expansion_exact_agrees_with_precedes() {
        for mask in 0u32..(1 << 8) {
            let a = FiniteSet::new((0..8).filter(|i| mask >> i & 1 == 1).map(|i| i as u64 + 1))
                .unwrap();
            for n in 1..=10u64 {
                if a.contains(n) {
                    continue;
                }
                let exact = expansion_exact(&a, n, DEFAULT_LCM_CAP).unwrap();
                let full = precedes_exact(&a, &a.with(n).unwrap(), DEFAULT_LCM_CAP)
                    .unwrap()
                    .holds;
                assert_eq!(exact, full, "A={a}, n={n}");
            }
        }
    }

    #[test]
    fn removal_examples() {
        // n beyond max A
        let r = removal_report(&fs(&[1, 2, 3]), 7, DEFAULT_LCM_CAP).unwrap();
        let beyond = r.beyond_max.expect("hypotheses hold");
        assert!(beyond.verified);
        assert!(r.equality.is_none()); // 7 is not practical

        // equality case: n = 8 practical, S(8) = {1,2,4} ⊆ A, sup(A\S(8)) = 5 ≤ s(8)+1 = 8
        let r = removal_report(&fs(&[1, 2, 4, 5]), 8, DEFAULT_LCM_CAP).unwrap();
        let eq = r.equality.expect("hypotheses hold");
        assert!(eq.verified);

        // A = {1}, n = 2
        let r = removal_report(&fs(&[1]), 2, DEFAULT_LCM_CAP).unwrap();
        assert!(r.beyond_max.expect("2 > 1").verified);
    }

    #[test]
    fn step_by_step_examples() {
        assert!(step_by_step_check(&fs(&[1, 2, 3]), &fs(&[1, 2, 3, 4, 6]), DEFAULT_LCM_CAP).unwrap());
        let b = fs(&[1, 2, 4, 8]);
        let a = b.without(8);
        assert!(step_by_step_check(&a, &b, DEFAULT_LCM_CAP).unwrap());
        assert!(step_by_step_check(&fs(&[1, 2]), &fs(&[1, 2]), DEFAULT_LCM_CAP).is_err());
    }
}
