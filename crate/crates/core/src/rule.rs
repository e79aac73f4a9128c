//! Symbolic membership rules for (possibly infinite) subsets of the
//! positive integers.
//!
//! A `SetRule` can be materialized onto any window exactly, and — unlike a
//! bare window set — can answer questions about elements *beyond* a window:
//! `min_excluding_divisors` returns the true infimum of `A \ D(n)` (or
//! certifies emptiness), which the expansion checker needs to evaluate its
//! σ-bound on verifiable data.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::arith;
use crate::error::{Error, Result};
use crate::pset::FiniteSet;
use crate::window::WindowSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetRule {
    /// A finite set given outright.
    Explicit(FiniteSet),
    /// {1, 2, 4, 8, …}, optionally capped at 2^max_exp.
    PowersOfTwo { max_exp: Option<u32> },
    /// Multiplicative closure of a set of primes, including 1. E.g. bases
    /// {2, 3} give {1, 2, 3, 4, 6, 8, 9, 12, …}.
    SmoothClosure { bases: Vec<u64> },
    /// {first, first + step, first + 2·step, …}.
    ArithmeticProgression { first: u64, step: u64 },
    /// Everything except {lo..=hi} and, for each m listed, the multiples
    /// j·m with j ≥ 2.
    ComplementOfRange {
        lo: u64,
        hi: u64,
        excluded_multiples: Vec<u64>,
    },
    /// A finite set of primes given by a window mask.
    PrimeSubset(WindowSet),
    /// A finite, user-supplied window mask.
    Mask(WindowSet),
}

/// Outcome of the certified-minimum query `inf(A \ D(n))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinOutcome {
    Min(u64),
    /// The rule certifies A \ D(n) = ∅ (so the infimum is +∞).
    Empty,
}

impl SetRule {
    pub fn explicit<I: IntoIterator<Item = u64>>(elems: I) -> Result<Self> {
        Ok(SetRule::Explicit(FiniteSet::new(elems)?))
    }

    pub fn powers_of_two() -> Self {
        SetRule::PowersOfTwo { max_exp: None }
    }

    pub fn smooth_closure<I: IntoIterator<Item = u64>>(bases: I) -> Result<Self> {
        let mut v: Vec<u64> = bases.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        for &p in &v {
            if !arith::is_prime(p) {
                return Err(Error::precondition(format!(
                    "smooth closure bases must be prime, got {p}"
                )));
            }
        }
        Ok(SetRule::SmoothClosure { bases: v })
    }

    pub fn arithmetic_progression(first: u64, step: u64) -> Result<Self> {
        if first == 0 || step == 0 {
            return Err(Error::precondition(
                "arithmetic progression needs first ≥ 1 and step ≥ 1",
            ));
        }
        Ok(SetRule::ArithmeticProgression { first, step })
    }

    pub fn complement_of_range(lo: u64, hi: u64, excluded_multiples: Vec<u64>) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::precondition(format!(
                "complement range needs 1 ≤ lo ≤ hi, got {lo}..{hi}"
            )));
        }
        if excluded_multiples.contains(&0) {
            return Err(Error::ZeroElement);
        }
        Ok(SetRule::ComplementOfRange {
            lo,
            hi,
            excluded_multiples,
        })
    }

    /// A finite set of primes. Every mask member must actually be prime.
    pub fn prime_subset(mask: WindowSet) -> Result<Self> {
        for p in mask.members() {
            if !arith::is_prime(p) {
                return Err(Error::precondition(format!(
                    "prime subset mask contains non-prime {p}"
                )));
            }
        }
        Ok(SetRule::PrimeSubset(mask))
    }

    /// Membership of `v ≥ 1`. Mask-backed rules have no members beyond
    /// their native window.
    pub fn contains(&self, v: u64) -> bool {
        debug_assert!(v >= 1);
        match self {
            SetRule::Explicit(set) => set.contains(v),
            SetRule::PowersOfTwo { max_exp } => {
                v.is_power_of_two()
                    && max_exp.is_none_or(|cap| v.trailing_zeros() <= cap)
            }
            SetRule::SmoothClosure { bases } => {
                let mut m = v;
                for &p in bases {
                    while m % p == 0 {
                        m /= p;
                    }
                }
                m == 1
            }
            SetRule::ArithmeticProgression { first, step } => {
                v >= *first && (v - first) % step == 0
            }
            SetRule::ComplementOfRange {
                lo,
                hi,
                excluded_multiples,
            } => {
                if *lo <= v && v <= *hi {
                    return false;
                }
                !excluded_multiples
                    .iter()
                    .any(|&m| v % m == 0 && v / m >= 2)
            }
            SetRule::PrimeSubset(mask) | SetRule::Mask(mask) => {
                v <= mask.window() && mask.contains(v)
            }
        }
    }

    /// Exact bit vector of the rule's members in `{1, …, window}`.
    /// Deterministic and idempotent for a fixed rule and window.
    pub fn materialize(&self, window: u64) -> WindowSet {
        let mut out = WindowSet::empty(window);
        match self {
            SetRule::Explicit(set) => {
                for e in set.iter().take_while(|&e| e <= window) {
                    out.insert(e);
                }
            }
            SetRule::PowersOfTwo { max_exp } => {
                let mut v = 1u64;
                let mut exp = 0u32;
                loop {
                    if max_exp.is_some_and(|cap| exp > cap) {
                        break;
                    }
                    if v > window {
                        break;
                    }
                    out.insert(v);
                    match v.checked_mul(2) {
                        Some(next) => v = next,
                        None => break,
                    }
                    exp += 1;
                }
            }
            SetRule::SmoothClosure { bases } => {
                let mut values = vec![1u64];
                for &p in bases {
                    let mut extended = values.clone();
                    for &v in &values {
                        let mut m = v;
                        while let Some(next) = m.checked_mul(p) {
                            if next > window {
                                break;
                            }
                            extended.push(next);
                            m = next;
                        }
                    }
                    values = extended;
                }
                for v in values {
                    if v <= window {
                        out.insert(v);
                    }
                }
            }
            SetRule::ArithmeticProgression { first, step } => {
                let mut v = *first;
                while v <= window {
                    out.insert(v);
                    match v.checked_add(*step) {
                        Some(next) => v = next,
                        None => break,
                    }
                }
            }
            SetRule::ComplementOfRange {
                lo,
                hi,
                excluded_multiples,
            } => {
                out = WindowSet::full(window);
                let upper = (*hi).min(window);
                for v in *lo..=upper {
                    out.remove(v);
                }
                for &m in excluded_multiples {
                    let mut v = 2 * m;
                    while v <= window {
                        out.remove(v);
                        v += m;
                    }
                }
            }
            SetRule::PrimeSubset(mask) | SetRule::Mask(mask) => {
                for v in mask.members().take_while(|&v| v <= window) {
                    out.insert(v);
                }
            }
        }
        out
    }

    /// Certified `inf(A \ D(n))`: the smallest rule member that does not
    /// divide `n`, or proof there is none. Exact over the *whole* rule, not
    /// just a window.
    pub fn min_excluding_divisors(&self, n: u64) -> Result<MinOutcome> {
        if n == 0 {
            return Err(Error::precondition("n must be positive"));
        }
        match self {
            SetRule::Explicit(set) => {
                Ok(first_non_divisor(set.iter(), n))
            }
            SetRule::PowersOfTwo { max_exp } => {
                let r = n.trailing_zeros();
                match max_exp {
                    Some(cap) if r >= *cap => Ok(MinOutcome::Empty),
                    _ => {
                        if r + 1 >= 64 {
                            return Err(Error::Overflow { op: "power of two" });
                        }
                        Ok(MinOutcome::Min(1u64 << (r + 1)))
                    }
                }
            }
            SetRule::SmoothClosure { bases } => {
                if bases.is_empty() {
                    // the closure is just {1}, and 1 divides everything
                    return Ok(MinOutcome::Empty);
                }
                // ascending enumeration; the first non-divisor appears no
                // later than p^(ν_p(n)+1) for the smallest base p
                let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
                heap.push(Reverse((1, 0)));
                while let Some(Reverse((v, start))) = heap.pop() {
                    if n % v != 0 {
                        return Ok(MinOutcome::Min(v));
                    }
                    for (i, &p) in bases.iter().enumerate().skip(start) {
                        if let Some(next) = v.checked_mul(p) {
                            heap.push(Reverse((next, i)));
                        }
                    }
                }
                Ok(MinOutcome::Empty)
            }
            SetRule::ArithmeticProgression { first, step } => {
                let mut v = *first;
                loop {
                    if n % v != 0 {
                        return Ok(MinOutcome::Min(v));
                    }
                    // v divides n, so v ≤ n and the walk ends before 2n
                    v = v
                        .checked_add(*step)
                        .ok_or(Error::Overflow { op: "progression" })?;
                }
            }
            SetRule::ComplementOfRange {
                excluded_multiples, ..
            } => {
                if excluded_multiples.contains(&1) {
                    // every v ≥ 2 is excluded; the only possible member is 1
                    return Ok(MinOutcome::Empty);
                }
                let mut v = 1u64;
                loop {
                    if self.contains(v) && n % v != 0 {
                        return Ok(MinOutcome::Min(v));
                    }
                    v = v.checked_add(1).ok_or(Error::Overflow { op: "scan" })?;
                }
            }
            SetRule::PrimeSubset(mask) | SetRule::Mask(mask) => {
                Ok(first_non_divisor(mask.members(), n))
            }
        }
    }
}

fn first_non_divisor<I: Iterator<Item = u64>>(members: I, n: u64) -> MinOutcome {
    for v in members {
        if n % v != 0 {
            return MinOutcome::Min(v);
        }
    }
    MinOutcome::Empty
}
