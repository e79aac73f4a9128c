//! Practical sets.
//!
//! A finite set A of positive integers is *practical* when every integer in
//! `[0, S_A]` (S_A = sum of A) is a sum of distinct elements of A. Two
//! deciders are provided and kept deliberately independent:
//!
//! * [`is_practical`] — the characterization: sorted a₁ < … < a_m is
//!   practical iff a₁ = 1 and a_{i+1} ≤ a₁ + … + a_i + 1 for every prefix.
//!   O(m), no allocation beyond the verdict.
//! * [`is_practical_oracle`] — bit-vector subset-sum DP over the achievable
//!   sums `0..=S_A`. This is the definitional check; it exists to verify the
//!   characterization (and to produce smallest-gap witnesses), not to be fast.
//!
//! The two must agree everywhere; the test suites cross them exhaustively.

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Default cap on the subset-sum DP, in achievable-sum bits (8 MiB).
pub const DEFAULT_DP_CAP: u64 = 1 << 26;

/// A finite set of positive integers in canonical form: strictly
/// increasing, deduplicated. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteSet {
    elems: Vec<u64>,
}

impl FiniteSet {
    /// Normalizes (sorts, dedups) the input. Zero is rejected.
    pub fn new<I: IntoIterator<Item = u64>>(elems: I) -> Result<Self> {
        let mut v: Vec<u64> = elems.into_iter().collect();
        if v.contains(&0) {
            return Err(Error::ZeroElement);
        }
        v.sort_unstable();
        v.dedup();
        Ok(FiniteSet { elems: v })
    }

    pub fn empty() -> Self {
        FiniteSet { elems: Vec::new() }
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> Option<u64> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.elems.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elems.iter().copied()
    }

    /// Sum of all elements with checked addition; S_∅ = 0.
    pub fn sum(&self) -> Result<u64> {
        let mut acc: u64 = 0;
        for &e in &self.elems {
            acc = acc.checked_add(e).ok_or(Error::Overflow { op: "set sum" })?;
        }
        Ok(acc)
    }

    /// Self with `n` added (no-op if already present).
    pub fn with(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroElement);
        }
        match self.elems.binary_search(&n) {
            Ok(_) => Ok(self.clone()),
            Err(i) => {
                let mut v = self.elems.clone();
                v.insert(i, n);
                Ok(FiniteSet { elems: v })
            }
        }
    }

    /// Self with `n` removed (no-op if absent).
    pub fn without(&self, n: u64) -> Self {
        let mut v = self.elems.clone();
        if let Ok(i) = v.binary_search(&n) {
            v.remove(i);
        }
        FiniteSet { elems: v }
    }

    pub fn union(&self, other: &FiniteSet) -> Self {
        let mut v = self.elems.clone();
        v.extend_from_slice(&other.elems);
        v.sort_unstable();
        v.dedup();
        FiniteSet { elems: v }
    }

    /// Elements of self missing from `other`.
    pub fn difference(&self, other: &FiniteSet) -> Self {
        FiniteSet {
            elems: self.iter().filter(|&e| !other.contains(e)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &FiniteSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    /// The elements of self dividing `n`.
    pub fn divisors_of(&self, n: u64) -> FiniteSet {
        FiniteSet {
            elems: self.iter().filter(|&e| n % e == 0).collect(),
        }
    }
}

impl std::fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Outcome of a practicality check, with enough evidence to re-verify a
/// negative answer.
///
/// Exactly one of `witness`/`violating_index` is present on a negative
/// verdict: the characterization reports the first index breaking the
/// prefix condition, the DP oracle reports the smallest unreachable target.
/// Either way the implied target admits no representation; only the oracle
/// guarantees its witness is the globally smallest gap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PracticalityVerdict {
    pub practical: bool,
    pub witness: Option<u64>,
    pub violating_index: Option<usize>,
}

impl PracticalityVerdict {
    fn ok() -> Self {
        PracticalityVerdict {
            practical: true,
            witness: None,
            violating_index: None,
        }
    }

    fn failed_at_index(i: usize) -> Self {
        PracticalityVerdict {
            practical: false,
            witness: None,
            violating_index: Some(i),
        }
    }

    fn failed_at_target(k: u64) -> Self {
        PracticalityVerdict {
            practical: false,
            witness: Some(k),
            violating_index: None,
        }
    }

    /// The non-representable target this verdict points at, reconstructed
    /// from the violating index when needed: if index i fails then
    /// a₁ + … + a_i + 1 has no representation.
    pub fn gap_target(&self, set: &FiniteSet) -> Option<u64> {
        if self.practical {
            return None;
        }
        if let Some(w) = self.witness {
            return Some(w);
        }
        let i = self.violating_index?;
        let prefix: u64 = set.elems().iter().take(i).sum();
        prefix.checked_add(1)
    }
}

/// Characterization-based practicality test.
///
/// ∅ and {1} are practical; otherwise the sorted prefix condition decides.
/// Prefix sums saturate: a saturated sum exceeds any u64 element, so the
/// comparison a ≤ sum + 1 stays correct.
pub fn is_practical(a: &FiniteSet) -> PracticalityVerdict {
    let mut prefix: u64 = 0;
    for (i, &e) in a.elems().iter().enumerate() {
        if e > prefix.saturating_add(1) {
            return PracticalityVerdict::failed_at_index(i);
        }
        prefix = prefix.saturating_add(e);
    }
    PracticalityVerdict::ok()
}

/// Definitional practicality test: marks every achievable subset sum in a
/// bit vector and looks for a gap in `0..=S_A`.
///
/// Refuses (rather than thrashes) when S_A + 1 exceeds `dp_cap` bits.
pub fn is_practical_oracle(a: &FiniteSet, dp_cap: u64) -> Result<PracticalityVerdict> {
    let sum = a.sum()?;
    let needed = sum
        .checked_add(1)
        .ok_or(Error::Overflow { op: "oracle DP size" })?;
    if needed > dp_cap {
        return Err(Error::DpCapExceeded { needed, cap: dp_cap });
    }
    let mut reach = Bits::new(needed as usize);
    reach.set(0);
    for e in a.iter() {
        reach.shift_or(e as usize);
    }
    match reach.first_zero() {
        None => Ok(PracticalityVerdict::ok()),
        Some(k) => Ok(PracticalityVerdict::failed_at_target(k as u64)),
    }
}

/// All achievable subset sums below `limit`, as a bit vector. Exact despite
/// the truncation: partial sums only grow, so no sum below `limit` is lost.
fn achievable_below(a: &FiniteSet, limit: u64, dp_cap: u64) -> Result<Bits> {
    if limit > dp_cap {
        return Err(Error::DpCapExceeded {
            needed: limit,
            cap: dp_cap,
        });
    }
    let mut reach = Bits::new(limit as usize);
    if limit > 0 {
        reach.set(0);
        for e in a.iter() {
            reach.shift_or(e as usize);
        }
    }
    Ok(reach)
}

/// Greedy representation of `k` as a sum of distinct elements of a
/// practical set: repeatedly take the largest element not exceeding the
/// remaining target. In a practical set every element is at most one more
/// than the sum of the smaller ones, so the greedy walk cannot strand a
/// target; the sum is still re-verified before returning.
pub fn greedy_representation(a: &FiniteSet, k: u64) -> Result<FiniteSet> {
    if !is_practical(a).practical {
        return Err(Error::precondition(format!(
            "greedy_representation needs a practical set, got {a}"
        )));
    }
    if k > a.sum()? {
        return Err(Error::precondition(format!(
            "target {k} exceeds the set sum"
        )));
    }
    let mut remaining = k;
    let mut picked = Vec::new();
    for &e in a.elems().iter().rev() {
        if e <= remaining {
            picked.push(e);
            remaining -= e;
        }
    }
    if remaining != 0 {
        return Err(Error::Internal(format!(
            "greedy representation of {k} from {a} left {remaining}"
        )));
    }
    picked.reverse();
    Ok(FiniteSet { elems: picked })
}

/// Extension test for practical sets: for practical A,
/// `A ∪ {n}` is practical ⟺ `n ∈ A` or `n ≤ S_A + 1`.
pub fn can_extend(a: &FiniteSet, n: u64) -> Result<bool> {
    if !is_practical(a).practical {
        return Err(Error::precondition(format!(
            "can_extend needs a practical set, got {a}"
        )));
    }
    if n == 0 {
        return Err(Error::ZeroElement);
    }
    Ok(a.contains(n) || n <= a.sum()?.saturating_add(1))
}

/// Predecessor criterion: a finite set A is practical iff for every a ∈ A
/// the value a − 1 is an achievable subset sum of A. Must agree with
/// [`is_practical`] on every input; the suites keep that equivalence as a
/// permanent property test.
pub fn predecessor_criterion(a: &FiniteSet, dp_cap: u64) -> Result<PracticalityVerdict> {
    let Some(max) = a.max() else {
        return Ok(PracticalityVerdict::ok());
    };
    // only sums below max A are ever queried
    let reach = achievable_below(a, max, dp_cap)?;
    for e in a.iter() {
        if !reach.get((e - 1) as usize) {
            return Ok(PracticalityVerdict::failed_at_target(e - 1));
        }
    }
    Ok(PracticalityVerdict::ok())
}

/// Pairwise products {ab : a ∈ A, b ∈ B}, deduplicated and sorted.
pub fn product_set(a: &FiniteSet, b: &FiniteSet) -> Result<FiniteSet> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            out.push(x.checked_mul(y).ok_or(Error::Overflow { op: "product set" })?);
        }
    }
    FiniteSet::new(out)
}

/// Product extension test: for practical nonempty A and B containing 1
/// (sorted as 1 = b₀ < b₁ < … < b_m), the product set AB is practical iff
/// every b_r satisfies b_r ≤ S_{A·{1,b₁,…,b_{r−1}}} + 1.
///
/// A must be nonempty: ∅·B = ∅ is practical while no bound can hold, so the
/// equivalence is genuinely about nonempty A.
pub fn product_extension_check(a: &FiniteSet, b: &FiniteSet) -> Result<bool> {
    if a.is_empty() {
        return Err(Error::precondition(
            "product_extension_check needs a nonempty practical set A",
        ));
    }
    if !is_practical(a).practical {
        return Err(Error::precondition(format!(
            "product_extension_check needs practical A, got {a}"
        )));
    }
    if !b.contains(1) {
        return Err(Error::precondition(format!(
            "product_extension_check needs 1 ∈ B, got {b}"
        )));
    }
    let mut partial = a.clone(); // A · {1}
    for br in b.iter().filter(|&v| v != 1) {
        if br > partial.sum()?.saturating_add(1) {
            return Ok(false);
        }
        let scaled = product_set(a, &FiniteSet::new([br])?)?;
        partial = partial.union(&scaled);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fs(elems: &[u64]) -> FiniteSet {
        FiniteSet::new(elems.iter().copied()).unwrap()
    }

    /// All subsets of {1..=n} (n small), via masks.
    fn subsets_of_first(n: u32) -> impl Iterator<Item = FiniteSet> {
        (0u32..(1 << n)).map(move |mask| {
            FiniteSet::new((0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as u64 + 1)).unwrap()
        })
    }

    #[test]
    fn normalization_and_zero() {
        assert_eq!(fs(&[3, 1, 2, 2]).elems(), &[1, 2, 3]);
        assert!(FiniteSet::new([1, 0]).is_err());
    }

    #[test]
    fn sums() {
        assert_eq!(FiniteSet::empty().sum().unwrap(), 0);
        assert_eq!(fs(&[1, 2, 3]).sum().unwrap(), 6);
        assert_eq!(fs(&[1, 2, 4, 8]).sum().unwrap(), 15);
        assert!(fs(&[u64::MAX, u64::MAX - 1]).sum().is_err());
    }

    #[test]
    fn characterization_examples() {
        assert!(is_practical(&fs(&[1, 2, 3])).practical);
        assert!(is_practical(&fs(&[1, 2, 3, 5, 8, 13])).practical); // Fibonacci front
        assert!(is_practical(&FiniteSet::empty()).practical);
        assert!(is_practical(&fs(&[1])).practical);

        let v = is_practical(&fs(&[1, 3]));
        assert!(!v.practical);
        assert_eq!(v.violating_index, Some(1));
        assert_eq!(v.gap_target(&fs(&[1, 3])), Some(2));

        let v = is_practical(&fs(&[2]));
        assert_eq!(v.violating_index, Some(0));
        assert_eq!(v.gap_target(&fs(&[2])), Some(1));
    }

    #[test]
    fn oracle_examples() {
        assert!(is_practical_oracle(&FiniteSet::empty(), DEFAULT_DP_CAP)
            .unwrap()
            .practical);
        let v = is_practical_oracle(&fs(&[2]), DEFAULT_DP_CAP).unwrap();
        assert!(!v.practical);
        assert_eq!(v.witness, Some(1));
    }

    #[test]
    fn oracle_equals_characterization_exhaustive_12() {
        for a in subsets_of_first(12) {
            let chr = is_practical(&a);
            let orc = is_practical_oracle(&a, DEFAULT_DP_CAP).unwrap();
            assert_eq!(chr.practical, orc.practical, "disagree on {a}");
            if !chr.practical {
                // both witnesses must point at the same smallest gap
                assert_eq!(chr.gap_target(&a), orc.witness, "gap mismatch on {a}");
            }
        }
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let big = fs(&[1, 2, 1 << 30]);
        assert!(matches!(
            is_practical_oracle(&big, 1 << 20),
            Err(Error::DpCapExceeded { .. })
        ));
    }

    #[test]
    fn remove_max_keeps_practical() {
        for a in subsets_of_first(14) {
            if !a.is_empty() && is_practical(&a).practical {
                let trimmed = a.without(a.max().unwrap());
                assert!(is_practical(&trimmed).practical, "remove-max broke {a}");
            }
        }
    }

    #[test]
    fn prefix_criterion_equals_full_criterion() {
        // all k < max A achievable <=> all k <= S_A achievable
        for a in subsets_of_first(14) {
            if a.is_empty() {
                continue;
            }
            let max = a.max().unwrap();
            let sum = a.sum().unwrap();
            let reach = achievable_below(&a, sum + 1, DEFAULT_DP_CAP).unwrap();
            let below_max = (0..max).all(|k| reach.get(k as usize));
            let up_to_sum = (0..=sum).all(|k| reach.get(k as usize));
            assert_eq!(below_max, up_to_sum, "prefix/full mismatch on {a}");
        }
    }

    #[test]
    fn greedy_representation_examples() {
        assert_eq!(
            greedy_representation(&fs(&[1, 2, 4]), 5).unwrap(),
            fs(&[1, 4])
        );
        assert_eq!(
            greedy_representation(&fs(&[1, 2, 3]), 0).unwrap(),
            FiniteSet::empty()
        );
        assert_eq!(
            greedy_representation(&fs(&[1, 2, 3]), 6).unwrap(),
            fs(&[1, 2, 3])
        );
        assert!(greedy_representation(&fs(&[1, 3]), 2).is_err()); // not practical
        assert!(greedy_representation(&fs(&[1, 2]), 4).is_err()); // k > S_A
    }

    #[test]
    fn can_extend_examples() {
        assert!(can_extend(&fs(&[1, 2, 3]), 7).unwrap());
        assert!(!can_extend(&fs(&[1, 2, 3]), 8).unwrap());
        assert!(can_extend(&FiniteSet::empty(), 1).unwrap());
        assert!(!can_extend(&FiniteSet::empty(), 2).unwrap());
        assert!(can_extend(&fs(&[1, 2]), 2).unwrap()); // already present
        assert!(can_extend(&fs(&[1, 3]), 2).is_err()); // precondition
    }

    #[test]
    fn extension_matches_direct_recheck() {
        for a in subsets_of_first(10) {
            if !is_practical(&a).practical {
                continue;
            }
            for n in 1..=25u64 {
                let direct = is_practical(&a.with(n).unwrap()).practical;
                assert_eq!(can_extend(&a, n).unwrap(), direct, "A={a}, n={n}");
            }
        }
    }

    #[test]
    fn predecessor_examples() {
        assert!(predecessor_criterion(&fs(&[1, 2, 4]), DEFAULT_DP_CAP)
            .unwrap()
            .practical);
        let v = predecessor_criterion(&fs(&[1, 3]), DEFAULT_DP_CAP).unwrap();
        assert!(!v.practical);
        assert_eq!(v.witness, Some(2));
    }

    #[test]
    fn predecessor_equals_practicality_exhaustive_12() {
        for a in subsets_of_first(12) {
            assert_eq!(
                predecessor_criterion(&a, DEFAULT_DP_CAP).unwrap().practical,
                is_practical(&a).practical,
                "predecessor mismatch on {a}"
            );
        }
    }

    #[test]
    fn products() {
        assert_eq!(product_set(&fs(&[1, 2]), &fs(&[1, 3])).unwrap(), fs(&[1, 2, 3, 6]));
        assert_eq!(product_set(&fs(&[2, 5]), &fs(&[1])).unwrap(), fs(&[2, 5]));
        assert_eq!(
            product_set(&FiniteSet::empty(), &fs(&[1, 3])).unwrap(),
            FiniteSet::empty()
        );
        assert!(product_set(&fs(&[u64::MAX]), &fs(&[2])).is_err());
    }

    #[test]
    fn product_extension_examples() {
        assert!(product_extension_check(&fs(&[1, 2]), &fs(&[1, 3])).unwrap());
        assert!(is_practical(&fs(&[1, 2, 3, 6])).practical);
        assert!(!product_extension_check(&fs(&[1]), &fs(&[1, 3])).unwrap());
        assert!(product_extension_check(&FiniteSet::empty(), &fs(&[1])).is_err());
        assert!(product_extension_check(&fs(&[1, 2]), &fs(&[2, 3])).is_err()); // 1 ∉ B
    }

    #[test]
    fn product_extension_matches_product_practicality_small() {
        for a in subsets_of_first(8) {
            if a.is_empty() || !is_practical(&a).practical {
                continue;
            }
            for b in subsets_of_first(8) {
                if !b.contains(1) {
                    continue;
                }
                let ab = product_set(&a, &b).unwrap();
                assert_eq!(
                    product_extension_check(&a, &b).unwrap(),
                    is_practical(&ab).practical,
                    "A={a} B={b}"
                );
            }
        }
    }

    proptest! {
        // Build practical sets generatively (each step adds some n <= S+1,
        // which keeps the set practical), then check the greedy witness.
        #[test]
        fn greedy_witness_sums_and_is_subset(
            steps in proptest::collection::vec(0u64..1000, 1..12),
            target_seed in 0u64..1_000_000,
        ) {
            let mut a = FiniteSet::new([1u64]).unwrap();
            for s in steps {
                let sum = a.sum().unwrap();
                let n = s % (sum + 1) + 1; // 1..=S+1
                a = a.with(n).unwrap();
            }
            prop_assert!(is_practical(&a).practical);
            let k = target_seed % (a.sum().unwrap() + 1);
            let rep = greedy_representation(&a, k).unwrap();
            prop_assert_eq!(rep.sum().unwrap(), k);
            prop_assert!(rep.is_subset_of(&a));
        }

        #[test]
        fn normalization_is_idempotent(v in proptest::collection::vec(1u64..500, 0..20)) {
            let a = FiniteSet::new(v).unwrap();
            let b = FiniteSet::new(a.iter()).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
