//! Fixed-length bit vector used by both the window sets and the subset-sum DP.
//!
//! Invariant: bits at positions >= `len` are always zero, so equality and
//! popcounts can work directly on the words.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn set_all(&mut self) {
        for w in &mut self.words {
            *w = !0;
        }
        self.mask_tail();
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_zero(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != !0 {
                let i = wi * WORD + (!w).trailing_zeros() as usize;
                if i < self.len {
                    return Some(i);
                }
            }
        }
        if self.len % WORD != 0 {
            // tail bits are zero by invariant, but lie beyond len
            None
        } else {
            None
        }
    }

    /// In-place `self |= self << k`, truncated at `len`. This is the inner
    /// step of the achievable-sums DP: one call per set element.
    pub fn shift_or(&mut self, k: usize) {
        if k >= self.len {
            return;
        }
        let ws = k / WORD;
        let bs = k % WORD;
        let n = self.words.len();
        if bs == 0 {
            for i in (ws..n).rev() {
                self.words[i] |= self.words[i - ws];
            }
        } else {
            for i in (ws..n).rev() {
                let lo = self.words[i - ws] << bs;
                let hi = if i > ws {
                    self.words[i - ws - 1] >> (WORD - bs)
                } else {
                    0
                };
                self.words[i] |= lo | hi;
            }
        }
        self.mask_tail();
    }

    pub fn is_subset_of(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Smallest index where the two differ, if any.
    pub fn min_difference(&self, other: &Bits) -> Option<usize> {
        debug_assert_eq!(self.len, other.len);
        for (wi, (&a, &b)) in self.words.iter().zip(&other.words).enumerate() {
            if a != b {
                return Some(wi * WORD + (a ^ b).trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD;
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(base + b)
                }
            })
        })
    }

    fn mask_tail(&mut self) {
        let r = self.len % WORD;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shift_or_matches_naive_small() {
        // achievable sums of {1,2,4} within 0..8
        let mut b = Bits::new(8);
        b.set(0);
        for k in [1usize, 2, 4] {
            b.shift_or(k);
        }
        let got: Vec<usize> = b.ones().collect();
        assert_eq!(got, vec![0, 1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn first_zero_and_counts() {
        let mut b = Bits::new(130);
        b.set_all();
        assert_eq!(b.first_zero(), None);
        assert_eq!(b.count_ones(), 130);
        b.clear(129);
        assert_eq!(b.first_zero(), Some(129));
    }

    #[test]
    fn min_difference_none_for_equal() {
        let a = Bits::new(100);
        let b = Bits::new(100);
        assert_eq!(a.min_difference(&b), None);
    }

    proptest! {
        #[test]
        fn shift_or_matches_set_model(elems in proptest::collection::vec(1usize..40, 0..7)) {
            let sum: usize = elems.iter().sum();
            let mut bits = Bits::new(sum + 1);
            bits.set(0);
            for &e in &elems {
                bits.shift_or(e);
            }
            // model: all subset sums by direct enumeration
            let mut model = std::collections::BTreeSet::new();
            for mask in 0u32..(1 << elems.len()) {
                let s: usize = elems
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .sum();
                model.insert(s);
            }
            let got: std::collections::BTreeSet<usize> = bits.ones().collect();
            prop_assert_eq!(got, model);
        }

        #[test]
        fn ones_respects_set_clear(ixs in proptest::collection::btree_set(0usize..200, 0..20)) {
            let mut b = Bits::new(200);
            for &i in &ixs {
                b.set(i);
            }
            let got: Vec<usize> = b.ones().collect();
            let want: Vec<usize> = ixs.iter().copied().collect();
            prop_assert_eq!(got, want);
            prop_assert_eq!(b.count_ones(), ixs.len());
        }
    }
}
