//! The Pr map on windows.
//!
//! `n` is A-practical when `D(n) ∩ A` is a practical set; `Pr(A)` collects
//! all such n. Because membership of `n` only involves divisors of `n`,
//! `Pr(A) ∩ {1..N}` is determined by `A ∩ {1..N}` — so everything here is
//! computed exactly on window sets.
//!
//! Membership has two routes that must agree:
//! * the direct definition (intersect the divisors, run the practicality
//!   characterization), and
//! * a three-case fast path through the proper divisors S(n): if
//!   `S(n) ∩ A` is practical with sum ≥ n−1 then n is a member; practical
//!   with sum < n−1 makes membership equivalent to `n ∉ A`; non-practical
//!   excludes n outright.
//!
//! `pr_window` evaluates memberships independently per n; with the
//! `parallel` feature (default) the scan fans out across threads.

use crate::arith::{self, FactorSieve};
use crate::error::{Error, Result};
use crate::pset::{self, FiniteSet};
use crate::window::WindowSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Practicality and element sum of a sorted slice, in one prefix walk.
/// Sums saturate; see `pset::is_practical` for why that is harmless.
pub(crate) fn practical_and_sum(sorted: &[u64]) -> (bool, u64) {
    let mut prefix: u64 = 0;
    let mut practical = true;
    for &e in sorted {
        if e > prefix.saturating_add(1) {
            practical = false;
            break;
        }
        prefix = prefix.saturating_add(e);
    }
    if practical {
        (true, prefix)
    } else {
        (false, sorted.iter().fold(0u64, |s, &e| s.saturating_add(e)))
    }
}

/// Fast-path membership with caller-provided scratch buffers, the inner
/// loop of every window scan.
pub(crate) fn member_with_bufs(
    n: u64,
    a: &WindowSet,
    sieve: &FactorSieve,
    div_buf: &mut Vec<u64>,
    hit_buf: &mut Vec<u64>,
) -> bool {
    sieve.proper_divisors_into(n, div_buf);
    hit_buf.clear();
    hit_buf.extend(div_buf.iter().copied().filter(|&d| a.contains(d)));
    let (practical, sum) = practical_and_sum(hit_buf);
    if !practical {
        false
    } else if sum >= n - 1 {
        true
    } else {
        !a.contains(n)
    }
}

/// A-practicality of `n` by the direct definition: `D(n) ∩ A` practical.
pub fn is_a_practical(n: u64, a: &WindowSet, sieve: &FactorSieve) -> Result<bool> {
    if n == 0 || n > a.window() {
        return Err(Error::OutOfWindow {
            n,
            window: a.window(),
        });
    }
    let inter = FiniteSet::new(sieve.divisors(n).iter().filter(|&d| a.contains(d)))?;
    Ok(pset::is_practical(&inter).practical)
}

/// A-practicality of `n` by the three-case fast path. Agrees with
/// [`is_a_practical`] on every input.
pub fn is_a_practical_fast(n: u64, a: &WindowSet, sieve: &FactorSieve) -> Result<bool> {
    if n == 0 || n > a.window() {
        return Err(Error::OutOfWindow {
            n,
            window: a.window(),
        });
    }
    let mut div_buf = Vec::new();
    let mut hit_buf = Vec::new();
    Ok(member_with_bufs(n, a, sieve, &mut div_buf, &mut hit_buf))
}

/// `Pr(A) ∩ {1..=N}` for the window set A.
///
/// Panics if the sieve does not cover the window.
pub fn pr_window(a: &WindowSet, sieve: &FactorSieve) -> WindowSet {
    #[cfg(feature = "parallel")]
    {
        pr_window_parallel(a, sieve)
    }
    #[cfg(not(feature = "parallel"))]
    {
        pr_window_sequential(a, sieve)
    }
}

pub fn pr_window_sequential(a: &WindowSet, sieve: &FactorSieve) -> WindowSet {
    let n_max = a.window();
    assert!(sieve.window() >= n_max, "sieve smaller than window");
    let mut out = WindowSet::empty(n_max);
    let mut div_buf = Vec::new();
    let mut hit_buf = Vec::new();
    for n in 1..=n_max {
        if member_with_bufs(n, a, sieve, &mut div_buf, &mut hit_buf) {
            out.insert(n);
        }
    }
    out
}

#[cfg(feature = "parallel")]
pub fn pr_window_parallel(a: &WindowSet, sieve: &FactorSieve) -> WindowSet {
    let n_max = a.window();
    assert!(sieve.window() >= n_max, "sieve smaller than window");
    let flags: Vec<bool> = (1..=n_max)
        .into_par_iter()
        .map_init(
            || (Vec::new(), Vec::new()),
            |(div_buf, hit_buf), n| member_with_bufs(n, a, sieve, div_buf, hit_buf),
        )
        .collect();
    let mut out = WindowSet::empty(n_max);
    for (i, &m) in flags.iter().enumerate() {
        if m {
            out.insert(i as u64 + 1);
        }
    }
    out
}

/// Divisor-free Pr window for the two degenerate shapes of A:
/// with 1 ∉ A, n is a member iff no element of A divides n; with 1 ∈ A but
/// 2 ∉ A, iff no element ≥ 2 of A divides n. Either way: cross off the
/// multiples of every member except 1.
///
/// Must equal [`pr_window`]; rejected when 1 and 2 are both present.
pub fn pr_window_shortcut(a: &WindowSet) -> Result<WindowSet> {
    let n_max = a.window();
    let has_1 = n_max >= 1 && a.contains(1);
    let has_2 = n_max >= 2 && a.contains(2);
    if has_1 && has_2 {
        return Err(Error::precondition(
            "shortcut needs 1 ∉ A, or 1 ∈ A with 2 ∉ A",
        ));
    }
    let mut out = WindowSet::full(n_max);
    for m in a.members().filter(|&m| m >= 2) {
        let mut v = m;
        while v <= n_max {
            out.remove(v);
            v += m;
        }
    }
    Ok(out)
}

/// Membership of `n` in `Pr(A)` for a finite A, with no sieve or window:
/// intersects by divisibility tests. The workhorse of the exact (lcm-
/// periodic) order decisions, and an independent route against
/// [`pr_window`].
pub fn pr_member_finite(a: &FiniteSet, n: u64) -> bool {
    debug_assert!(n >= 1);
    pset::is_practical(&a.divisors_of(n)).practical
}

/// gcd practicality: equivalent to `n` being D(m)-practical and to `m`
/// being D(n)-practical.
pub fn gcd_practical(n: u64, m: u64, sieve: &FactorSieve) -> bool {
    sieve.is_practical_number(arith::gcd(n, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(window: u64, members: &[u64]) -> WindowSet {
        WindowSet::from_members(window, members.iter().copied()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let sieve = FactorSieve::new(100).unwrap();
        // case (ii): S(5) ∩ A = {1}, sum 1 < 4, and 5 ∈ A
        assert!(!is_a_practical(5, &ws(10, &[1, 2, 5]), &sieve).unwrap());
        assert!(!is_a_practical_fast(5, &ws(10, &[1, 2, 5]), &sieve).unwrap());
        // n = 6 with A = {1,2,3}
        assert!(is_a_practical(6, &ws(10, &[1, 2, 3]), &sieve).unwrap());
        // odd primes flip on membership in A
        for p in [3u64, 5, 7, 11, 13] {
            let with_p = ws(20, &[1, 2, p]);
            let without_p = ws(20, &[1, 2]);
            assert!(!is_a_practical(p, &with_p, &sieve).unwrap());
            assert!(is_a_practical(p, &without_p, &sieve).unwrap());
        }
    }

    #[test]
    fn out_of_window_rejected() {
        let sieve = FactorSieve::new(100).unwrap();
        assert!(matches!(
            is_a_practical(11, &ws(10, &[1]), &sieve),
            Err(Error::OutOfWindow { .. })
        ));
    }

    #[test]
    fn fast_path_equals_direct() {
        let sieve = FactorSieve::new(400).unwrap();
        let sets = [
            ws(400, &[1, 2, 3]),
            ws(400, &[2]),
            ws(400, &[1, 2, 4, 8, 16, 32]),
            ws(400, &[1, 3, 5, 7]),
            WindowSet::full(400),
            WindowSet::empty(400),
        ];
        for a in &sets {
            for n in 1..=400 {
                assert_eq!(
                    is_a_practical(n, a, &sieve).unwrap(),
                    is_a_practical_fast(n, a, &sieve).unwrap(),
                    "n={n}, A={a:?}"
                );
            }
        }
    }

    #[test]
    fn pr_window_examples() {
        let sieve = FactorSieve::new(100).unwrap();
        assert_eq!(
            pr_window(&ws(12, &[1, 2, 3]), &sieve).to_vec(),
            vec![1, 2, 4, 5, 6, 7, 8, 10, 11, 12]
        );
        assert!(pr_window(&WindowSet::empty(20), &sieve).is_full());
        assert_eq!(
            pr_window(&ws(10, &[2]), &sieve).to_vec(),
            vec![1, 3, 5, 7, 9]
        );
    }

    #[test]
    fn sequential_matches_default() {
        let sieve = FactorSieve::new(500).unwrap();
        let a = ws(500, &[1, 2, 3, 9, 27, 100]);
        assert_eq!(pr_window(&a, &sieve), pr_window_sequential(&a, &sieve));
    }

    #[test]
    fn shortcut_examples() {
        assert_eq!(
            pr_window_shortcut(&ws(9, &[3])).unwrap().to_vec(),
            vec![1, 2, 4, 5, 7, 8]
        );
        assert_eq!(
            pr_window_shortcut(&ws(9, &[1, 3])).unwrap().to_vec(),
            vec![1, 2, 4, 5, 7, 8]
        );
        assert_eq!(
            pr_window_shortcut(&ws(10, &[5])).unwrap().to_vec(),
            vec![1, 2, 3, 4, 6, 7, 8, 9]
        );
        assert!(pr_window_shortcut(&ws(9, &[1, 2])).is_err());
    }

    #[test]
    fn shortcut_equals_pr_window() {
        let sieve = FactorSieve::new(300).unwrap();
        for a in [ws(300, &[3]), ws(300, &[1, 3]), ws(300, &[5, 9]), ws(300, &[1, 4, 6])] {
            assert_eq!(pr_window_shortcut(&a).unwrap(), pr_window(&a, &sieve));
        }
    }

    #[test]
    fn finite_membership_equals_window_route() {
        let sieve = FactorSieve::new(200).unwrap();
        let a = FiniteSet::new([1u64, 2, 6, 9]).unwrap();
        let aw = WindowSet::from_finite(200, &a);
        let prw = pr_window(&aw, &sieve);
        for n in 1..=200 {
            assert_eq!(pr_member_finite(&a, n), prw.contains(n), "n={n}");
        }
    }

    #[test]
    fn gcd_examples() {
        let sieve = FactorSieve::new(1000).unwrap();
        assert!(gcd_practical(4, 6, &sieve));
        assert!(!gcd_practical(9, 3, &sieve));
        for m in 1..=60u64 {
            assert!(gcd_practical(64, m, &sieve)); // gcd with a 2-power is a 2-power
        }
    }
}
