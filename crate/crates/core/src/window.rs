//! `WindowSet`: a subset of `{1, …, N}` stored as a bit vector.
//!
//! Every set computation in this crate that touches a (possibly infinite)
//! subset of the positive integers happens exactly on such a window. This is
//! sound for the Pr map because membership of `n` in `Pr(A)` only depends on
//! `A ∩ {1, …, n}` (prefix determinism), so a window of length `N` determines
//! `Pr(A) ∩ {1, …, N}` exactly.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::pset::FiniteSet;

#[derive(Clone, PartialEq, Eq)]
pub struct WindowSet {
    window: u64,
    bits: Bits, // bit v set <=> v is a member; bit 0 unused, always zero
}

impl WindowSet {
    /// The empty subset of `{1..=window}`. `window` must be at least 1.
    pub fn empty(window: u64) -> Self {
        assert!(window >= 1, "window must be positive");
        WindowSet {
            window,
            bits: Bits::new(window as usize + 1),
        }
    }

    /// The full window `{1, …, window}`.
    pub fn full(window: u64) -> Self {
        let mut s = WindowSet::empty(window);
        s.bits.set_all();
        s.bits.clear(0);
        s
    }

    /// Builds a window set from members. Values above the window are
    /// ignored (window truncation); zero is rejected.
    pub fn from_members<I: IntoIterator<Item = u64>>(window: u64, members: I) -> Result<Self> {
        let mut s = WindowSet::empty(window);
        for v in members {
            if v == 0 {
                return Err(Error::ZeroElement);
            }
            if v <= window {
                s.bits.set(v as usize);
            }
        }
        Ok(s)
    }

    pub fn from_finite(window: u64, set: &FiniteSet) -> Self {
        let mut s = WindowSet::empty(window);
        for &v in set.elems() {
            if v <= window {
                s.bits.set(v as usize);
            }
        }
        s
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    /// Membership test. Out-of-window queries are a caller bug.
    #[inline]
    pub fn contains(&self, n: u64) -> bool {
        assert!(
            n >= 1 && n <= self.window,
            "query {n} outside window 1..={}",
            self.window
        );
        self.bits.get(n as usize)
    }

    pub fn insert(&mut self, n: u64) {
        assert!(n >= 1 && n <= self.window);
        self.bits.set(n as usize);
    }

    pub fn remove(&mut self, n: u64) {
        assert!(n >= 1 && n <= self.window);
        self.bits.clear(n as usize);
    }

    pub fn len(&self) -> u64 {
        self.bits.count_ones() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.bits.count_ones() == 0
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.window
    }

    /// Members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.ones().map(|i| i as u64)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.members().collect()
    }

    pub fn to_finite_set(&self) -> FiniteSet {
        FiniteSet::new(self.members()).expect("window members are positive")
    }

    pub fn min(&self) -> Option<u64> {
        self.members().next()
    }

    /// First member not below `from`, if any.
    pub fn next_member_at_or_after(&self, from: u64) -> Option<u64> {
        self.members().find(|&v| v >= from)
    }

    pub fn is_subset_of(&self, other: &WindowSet) -> Result<bool> {
        self.check_same_window(other)?;
        Ok(self.bits.is_subset_of(&other.bits))
    }

    /// Smallest element of the symmetric difference, `None` when the two
    /// sets agree on the whole window.
    pub fn min_symmetric_difference(&self, other: &WindowSet) -> Result<Option<u64>> {
        self.check_same_window(other)?;
        Ok(self.bits.min_difference(&other.bits).map(|i| i as u64))
    }

    /// Copy of the prefix `{1..=upto}` as its own window set.
    pub fn restrict(&self, upto: u64) -> WindowSet {
        assert!(upto >= 1 && upto <= self.window);
        let mut s = WindowSet::empty(upto);
        for v in self.members().take_while(|&v| v <= upto) {
            s.insert(v);
        }
        s
    }

    fn check_same_window(&self, other: &WindowSet) -> Result<()> {
        if self.window != other.window {
            return Err(Error::WindowMismatch {
                left: self.window,
                right: other.window,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for WindowSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let shown: Vec<u64> = self.members().take(24).collect();
        let more = self.len() as usize > shown.len();
        write!(f, "WindowSet(N={}, {{", self.window)?;
        for (i, v) in shown.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        if more {
            write!(f, ",…")?;
        }
        write!(f, "}})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_empty() {
        let e = WindowSet::empty(10);
        let f = WindowSet::full(10);
        assert_eq!(e.len(), 0);
        assert_eq!(f.len(), 10);
        assert!(f.contains(1) && f.contains(10));
        assert!(e.is_subset_of(&f).unwrap());
        assert_eq!(e.min_symmetric_difference(&f).unwrap(), Some(1));
    }

    #[test]
    fn truncation_and_zero_rejection() {
        let s = WindowSet::from_members(5, [1, 4, 9, 100]).unwrap();
        assert_eq!(s.to_vec(), vec![1, 4]);
        assert_eq!(
            WindowSet::from_members(5, [0]).unwrap_err(),
            Error::ZeroElement
        );
    }

    #[test]
    fn restrict_keeps_prefix() {
        let s = WindowSet::from_members(20, [1, 5, 12, 19]).unwrap();
        assert_eq!(s.restrict(12).to_vec(), vec![1, 5, 12]);
    }

    #[test]
    fn window_mismatch_reported() {
        let a = WindowSet::empty(5);
        let b = WindowSet::empty(6);
        assert!(matches!(
            a.is_subset_of(&b),
            Err(Error::WindowMismatch { .. })
        ));
    }

    #[test]
    #[should_panic]
    fn out_of_window_query_panics() {
        let s = WindowSet::empty(5);
        let _ = s.contains(6);
    }
}
