//! Divisor-level arithmetic: the smallest-prime-factor sieve, divisor
//! enumeration, σ and aliquot sums, and the prime-factorization test for
//! practical numbers (Stewart's criterion).
//!
//! Two routes exist for most quantities: free functions that factor by
//! trial division (fine for isolated queries, and useful as an independent
//! cross-check) and `FactorSieve` methods that recover factorizations from
//! the spf chain (the bulk route; O(N) memory for a window of length N).

use crate::error::{Error, Result};
use crate::pset::FiniteSet;
use crate::window::WindowSet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Hard cap on sieve windows; beyond this the spf table alone is hundreds
/// of megabytes and the caller should say so explicitly.
pub const MAX_SIEVE_WINDOW: u64 = 100_000_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn checked_lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(Error::Overflow { op: "lcm" })
}

/// lcm of all elements, with lcm(∅) = 1.
pub fn checked_lcm_of<I: IntoIterator<Item = u64>>(values: I) -> Result<u64> {
    let mut acc = 1u64;
    for v in values {
        acc = checked_lcm(acc, v)?;
    }
    Ok(acc)
}

/// Trial-division primality; adequate for the magnitudes this crate handles.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// All positive divisors of `n`, sorted. Rejects `n = 0`.
pub fn divisors(n: u64) -> Result<FiniteSet> {
    if n == 0 {
        return Err(Error::precondition("divisors(0) is undefined"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    FiniteSet::new(small)
}

/// Divisors of `n` without `n` itself.
pub fn proper_divisors(n: u64) -> Result<FiniteSet> {
    Ok(divisors(n)?.without(n))
}

/// σ(n) = sum of all divisors of `n`, with checked addition.
pub fn sigma(n: u64) -> Result<u64> {
    let mut acc: u64 = 0;
    for &d in divisors(n)?.elems() {
        acc = acc.checked_add(d).ok_or(Error::Overflow { op: "sigma" })?;
    }
    Ok(acc)
}

/// Aliquot sum s(n) = σ(n) − n.
pub fn aliquot(n: u64) -> Result<u64> {
    Ok(sigma(n)? - n)
}

/// Prime factorization `[(p, exponent)]` in increasing `p`, by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Practicality of the number `n`: true iff every integer in `[1, σ(n)]` is
/// a sum of distinct divisors of `n`. Decided by the factorization
/// criterion: p₁ = 2 and each later prime satisfies
/// p_{i+1} ≤ σ(p₁^α₁ ⋯ p_i^α_i) + 1.
///
/// `n = 1` is treated as practical (σ(1) = 1 and 1 = 1); the criterion
/// itself only speaks about n ≥ 2.
pub fn is_practical_number(n: u64) -> bool {
    stewart(n, &factorize(n))
}

/// Quasi-practicality: every integer in `[1, s(n)]` is a sum of distinct
/// proper divisors. Equivalent to `n` practical or `n` prime.
pub fn is_quasi_practical(n: u64) -> bool {
    is_practical_number(n) || is_prime(n)
}

/// The criterion over a ready factorization. Running σ values saturate:
/// if the true prefix σ exceeds u64::MAX, the comparison p ≤ σ + 1 holds
/// for every u64 prime anyway, so saturation cannot change the verdict.
fn stewart(n: u64, factorization: &[(u64, u32)]) -> bool {
    if n == 1 {
        return true;
    }
    if factorization.first().map(|&(p, _)| p) != Some(2) {
        return false;
    }
    let mut sigma_prefix: u64 = 1; // σ of the empty prefix is the empty product
    for &(p, e) in factorization {
        if p > sigma_prefix.saturating_add(1) {
            return false;
        }
        // σ(prefix · p^e) = σ(prefix) · (1 + p + … + p^e)
        let mut geom: u64 = 1;
        for _ in 0..e {
            geom = geom.saturating_mul(p).saturating_add(1);
        }
        sigma_prefix = sigma_prefix.saturating_mul(geom);
    }
    true
}

/// Smallest-prime-factor sieve over `{1, …, window}`. Immutable after
/// construction and freely shareable across threads.
pub struct FactorSieve {
    window: u64,
    spf: Vec<u32>,
}

impl FactorSieve {
    pub fn new(window: u64) -> Result<Self> {
        if window == 0 {
            return Err(Error::precondition("sieve window must be positive"));
        }
        if window > MAX_SIEVE_WINDOW {
            return Err(Error::MemoryCap {
                requested: window,
                cap: MAX_SIEVE_WINDOW,
            });
        }
        let n = window as usize;
        let mut spf = vec![0u32; n + 1];
        if n >= 1 {
            spf[1] = 1;
        }
        let mut i = 2usize;
        while i <= n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                let mut j = i * i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        Ok(FactorSieve { window, spf })
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    #[inline]
    fn check(&self, n: u64) {
        assert!(
            n >= 1 && n <= self.window,
            "{n} outside sieve window 1..={}",
            self.window
        );
    }

    pub fn smallest_prime_factor(&self, n: u64) -> u64 {
        self.check(n);
        assert!(n >= 2, "1 has no prime factor");
        self.spf[n as usize] as u64
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.check(n);
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    pub fn factorize(&self, n: u64) -> Vec<(u64, u32)> {
        self.check(n);
        let mut out = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m];
            let mut e = 0;
            while m > 1 && self.spf[m] == p {
                m /= p as usize;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }

    /// All divisors of `n`, sorted ascending.
    pub fn divisors(&self, n: u64) -> FiniteSet {
        let mut buf = Vec::new();
        self.divisors_into(n, &mut buf);
        FiniteSet::new(buf).expect("divisors are positive")
    }

    pub fn proper_divisors(&self, n: u64) -> FiniteSet {
        let mut buf = Vec::new();
        self.proper_divisors_into(n, &mut buf);
        FiniteSet::new(buf).expect("divisors are positive")
    }

    /// Fills `buf` with the sorted divisors of `n` (buffer reuse keeps the
    /// per-n cost of window scans allocation-free).
    pub fn divisors_into(&self, n: u64, buf: &mut Vec<u64>) {
        self.check(n);
        buf.clear();
        buf.push(1);
        for (p, e) in self.factorize(n) {
            let prev = buf.len();
            let mut pe = 1u64;
            for _ in 0..e {
                pe *= p;
                for i in 0..prev {
                    buf.push(buf[i] * pe);
                }
            }
        }
        buf.sort_unstable();
    }

    /// Sorted proper divisors of `n` (all divisors except `n` itself).
    pub fn proper_divisors_into(&self, n: u64, buf: &mut Vec<u64>) {
        self.divisors_into(n, buf);
        buf.pop(); // the largest divisor is n
    }

    /// σ(n) with checked arithmetic.
    pub fn sigma(&self, n: u64) -> Result<u64> {
        self.check(n);
        let mut acc: u64 = 1;
        for (p, e) in self.factorize(n) {
            let mut geom: u64 = 1;
            for _ in 0..e {
                geom = geom
                    .checked_mul(p)
                    .and_then(|g| g.checked_add(1))
                    .ok_or(Error::Overflow { op: "sigma" })?;
            }
            acc = acc.checked_mul(geom).ok_or(Error::Overflow { op: "sigma" })?;
        }
        Ok(acc)
    }

    pub fn aliquot(&self, n: u64) -> Result<u64> {
        Ok(self.sigma(n)? - n)
    }

    pub fn is_practical_number(&self, n: u64) -> bool {
        self.check(n);
        stewart(n, &self.factorize(n))
    }

    pub fn is_quasi_practical(&self, n: u64) -> bool {
        self.is_practical_number(n) || self.is_prime(n)
    }

    /// Bit vector of the practical numbers in `{1, …, upto}`; elementwise
    /// equal to `is_practical_number`.
    pub fn practical_sieve(&self, upto: u64) -> WindowSet {
        #[cfg(feature = "parallel")]
        {
            self.practical_sieve_parallel(upto)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.practical_sieve_sequential(upto)
        }
    }

    pub fn practical_sieve_sequential(&self, upto: u64) -> WindowSet {
        self.check(upto);
        let mut out = WindowSet::empty(upto);
        for n in 1..=upto {
            if self.is_practical_number(n) {
                out.insert(n);
            }
        }
        out
    }

    #[cfg(feature = "parallel")]
    pub fn practical_sieve_parallel(&self, upto: u64) -> WindowSet {
        self.check(upto);
        let flags: Vec<bool> = (1..=upto)
            .into_par_iter()
            .map(|n| self.is_practical_number(n))
            .collect();
        let mut out = WindowSet::empty(upto);
        for (i, &ok) in flags.iter().enumerate() {
            if ok {
                out.insert(i as u64 + 1);
            }
        }
        out
    }
}
