//! Integer sumset arithmetic and arithmetic-progression machinery.
//!
//! Everything here operates on finite sets of non-negative integers. The two
//! central types are [`IntSet`] (an arbitrary finite set, kept sorted) and
//! [`APSet`] (a set whose elements form an arithmetic progression, stored in
//! closed form). All operations are pure and all values are immutable after
//! construction, so they are safe to use from any number of threads.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetAlgError {
    #[error("integer set must be non-empty")]
    EmptySet,
    #[error("integer set elements must be strictly increasing (at index {0})")]
    NotStrictlyIncreasing(usize),
    #[error("arithmetic progression needs a positive common difference")]
    ZeroDiff,
    #[error("arithmetic progression needs at least one element")]
    ZeroLen,
}

/// A finite, non-empty set of non-negative integers, stored strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IntSet {
    elements: Vec<u64>,
}

impl IntSet {
    /// Builds a set from an already sorted, duplicate-free sequence.
    pub fn new(elements: Vec<u64>) -> Result<Self, SetAlgError> {
        if elements.is_empty() {
            return Err(SetAlgError::EmptySet);
        }
        for i in 1..elements.len() {
            if elements[i] <= elements[i - 1] {
                return Err(SetAlgError::NotStrictlyIncreasing(i));
            }
        }
        Ok(Self { elements })
    }

    /// Builds a set from arbitrary values, sorting and deduplicating.
    pub fn from_unsorted(mut values: Vec<u64>) -> Result<Self, SetAlgError> {
        values.sort_unstable();
        values.dedup();
        Self::new(values)
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: non-empty
    }

    pub fn min(&self) -> u64 {
        self.elements[0]
    }

    pub fn max(&self) -> u64 {
        *self.elements.last().unwrap()
    }
}

/// An arithmetic progression `{first + i*diff : 0 <= i < len}` in closed form.
///
/// `diff` is always positive and `len` at least 1. Sets of size 1 or 2 are
/// representable (the algebra stays total) but are too small to serve as
/// vertex or edge labels, which need at least three elements; that rule is
/// enforced by the labeling and verification layers, not here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct APSet {
    pub first: u64,
    pub diff: u64,
    pub len: usize,
}

impl APSet {
    pub fn new(first: u64, diff: u64, len: usize) -> Result<Self, SetAlgError> {
        if diff == 0 {
            return Err(SetAlgError::ZeroDiff);
        }
        if len == 0 {
            return Err(SetAlgError::ZeroLen);
        }
        Ok(Self { first, diff, len })
    }

    /// Expands the closed form into an explicit [`IntSet`].
    pub fn expand(&self) -> IntSet {
        let elements = (0..self.len as u64)
            .map(|i| self.first + i * self.diff)
            .collect();
        IntSet { elements }
    }

    /// True when the set is too small to be a valid label (fewer than three
    /// elements).
    pub fn is_degenerate(&self) -> bool {
        self.len < 3
    }
}

impl std::fmt::Display for APSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AP({} +{}*{})", self.first, self.diff, self.len)
    }
}

/// The sumset `A + B = {a + b : a in A, b in B}`, deduplicated and sorted.
///
/// Commutative; `|A+B|` lies between `max(|A|,|B|)` and `|A|*|B|`.
pub fn sumset(a: &IntSet, b: &IntSet) -> IntSet {
    let mut sums: Vec<u64> = Vec::with_capacity(a.len() * b.len());
    for &x in a.elements() {
        for &y in b.elements() {
            sums.push(x + y);
        }
    }
    sums.sort_unstable();
    sums.dedup();
    IntSet { elements: sums }
}

/// Outcome of [`ap_recognize`]: the closed form plus a degeneracy marker for
/// sets of size 1 or 2, which are formally progressions but invalid as labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApRecognition {
    pub ap: APSet,
    pub degenerate: bool,
}

/// Decides whether a set is an arithmetic progression.
///
/// Returns the closed form when all consecutive gaps are equal and positive.
/// Singletons report a conventional difference of 1. Non-progressions yield
/// `None`.
pub fn ap_recognize(s: &IntSet) -> Option<ApRecognition> {
    let e = s.elements();
    if e.len() == 1 {
        return Some(ApRecognition {
            ap: APSet { first: e[0], diff: 1, len: 1 },
            degenerate: true,
        });
    }
    let diff = e[1] - e[0];
    for w in e.windows(2) {
        if w[1] - w[0] != diff {
            return None;
        }
    }
    Some(ApRecognition {
        ap: APSet { first: e[0], diff, len: e.len() },
        degenerate: e.len() < 3,
    })
}

/// Result of [`ap_sumset`]: closed form when the integer-ratio condition
/// holds, the generic enumerated sumset otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApSum {
    Ap(APSet),
    Generic(IntSet),
}

impl ApSum {
    pub fn into_int_set(self) -> IntSet {
        match self {
            ApSum::Ap(ap) => ap.expand(),
            ApSum::Generic(s) => s,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ApSum::Ap(ap) => ap.len,
            ApSum::Generic(s) => s.len(),
        }
    }
}

/// Sumset of two arithmetic progressions.
///
/// When the larger difference is an integer multiple `k` of the smaller one
/// and `k` does not exceed the length of the smaller-difference operand, the
/// sum is itself a progression: with operands `(a, d, n)` and `(b, k*d, m)`
/// the blocks `{j*k, .., j*k + n - 1}` tile `[0, n + k*(m-1))` without gaps,
/// so the result is `(a+b, d, n + k*(m-1))`. Otherwise this falls back to
/// plain enumeration, which the verifier relies on for arbitrary labelings.
pub fn ap_sumset(a: &APSet, b: &APSet) -> ApSum {
    // Normalize so `small` carries the smaller common difference.
    let (small, big) = if a.diff <= b.diff { (a, b) } else { (b, a) };
    if big.diff % small.diff == 0 {
        let k = (big.diff / small.diff) as usize;
        if k >= 1 && k <= small.len {
            let len = small.len + k * (big.len - 1);
            return ApSum::Ap(APSet {
                first: small.first + big.first,
                diff: small.diff,
                len,
            });
        }
    }
    ApSum::Generic(sumset(&a.expand(), &b.expand()))
}

/// First `m` terms of the greedy Sidon (B2) sequence starting at 0.
///
/// Every pairwise sum of two (not necessarily distinct) terms is unique,
/// which is what makes label first-terms collision-free downstream. Greedy
/// from zero is deterministic and plenty for desk-scale `m`; minimal growth
/// is not a goal.
pub fn sidon_prefix(m: usize) -> Vec<u64> {
    let mut terms: Vec<u64> = Vec::with_capacity(m);
    let mut sums = std::collections::HashSet::new();
    let mut candidate = 0u64;
    while terms.len() < m {
        let ok = terms
            .iter()
            .chain(std::iter::once(&candidate))
            .all(|&t| !sums.contains(&(t + candidate)));
        if ok {
            for &t in &terms {
                sums.insert(t + candidate);
            }
            sums.insert(candidate * 2);
            terms.push(candidate);
        }
        candidate += 1;
    }
    terms
}

/// Trial-division primality for the small ratios that appear on edges.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[u64]) -> IntSet {
        IntSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn int_set_rejects_bad_input() {
        assert_eq!(IntSet::new(vec![]), Err(SetAlgError::EmptySet));
        assert_eq!(
            IntSet::new(vec![1, 1, 2]),
            Err(SetAlgError::NotStrictlyIncreasing(1))
        );
        assert_eq!(
            IntSet::new(vec![3, 2]),
            Err(SetAlgError::NotStrictlyIncreasing(1))
        );
        assert_eq!(IntSet::from_unsorted(vec![3, 1, 3, 2]).unwrap(), set(&[1, 2, 3]));
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&set(&[0]), &set(&[1, 3, 5])), set(&[1, 3, 5]));
        assert_eq!(sumset(&set(&[1, 2]), &set(&[1, 2])), set(&[2, 3, 4]));
        assert_eq!(
            sumset(&set(&[0, 2, 4]), &set(&[0, 6, 12])),
            set(&[0, 2, 4, 6, 8, 10, 12, 14, 16])
        );
    }

    #[test]
    fn ap_recognize_examples() {
        let r = ap_recognize(&set(&[3, 5, 7, 9])).unwrap();
        assert_eq!(r.ap, APSet { first: 3, diff: 2, len: 4 });
        assert!(!r.degenerate);

        assert_eq!(ap_recognize(&set(&[0, 1, 4])), None);

        let r = ap_recognize(&set(&[5, 8])).unwrap();
        assert_eq!(r.ap, APSet { first: 5, diff: 3, len: 2 });
        assert!(r.degenerate);

        let r = ap_recognize(&set(&[7])).unwrap();
        assert_eq!(r.ap.len, 1);
        assert!(r.degenerate);
    }

    #[test]
    fn ap_sumset_examples() {
        // k = 3, lengths 3 and 3: 3 + 3*(3-1) = 9.
        let a = APSet::new(0, 2, 3).unwrap();
        let b = APSet::new(0, 6, 3).unwrap();
        assert_eq!(ap_sumset(&a, &b), ApSum::Ap(APSet { first: 0, diff: 2, len: 9 }));

        // k = 1: 3 + 1*(3-1) = 5, i.e. {1,3,5,7,9}.
        let a = APSet::new(0, 2, 3).unwrap();
        let b = APSet::new(1, 2, 3).unwrap();
        assert_eq!(ap_sumset(&a, &b), ApSum::Ap(APSet { first: 1, diff: 2, len: 5 }));
        assert_eq!(
            ApSum::Ap(APSet { first: 1, diff: 2, len: 5 }).into_int_set(),
            set(&[1, 3, 5, 7, 9])
        );

        // k = 3 <= len 4: 4 + 3*(3-1) = 10.
        let a = APSet::new(0, 2, 4).unwrap();
        let b = APSet::new(0, 6, 3).unwrap();
        assert_eq!(ap_sumset(&a, &b), ApSum::Ap(APSet { first: 0, diff: 2, len: 10 }));
    }

    #[test]
    fn ap_sumset_falls_back_when_ratio_fails() {
        // Non-integral ratio 3/2.
        let a = APSet::new(0, 2, 3).unwrap();
        let b = APSet::new(0, 3, 3).unwrap();
        let out = ap_sumset(&a, &b);
        assert_eq!(out, ApSum::Generic(set(&[0, 2, 3, 4, 5, 6, 7, 8, 10])));

        // Integral ratio but k = 4 exceeds the smaller operand's length 3.
        let a = APSet::new(0, 1, 3).unwrap();
        let b = APSet::new(0, 4, 3).unwrap();
        let out = ap_sumset(&a, &b);
        assert_eq!(out.clone().into_int_set(), sumset(&a.expand(), &b.expand()));
        assert!(matches!(out, ApSum::Generic(_)));
    }

    #[test]
    fn sidon_prefix_examples() {
        assert_eq!(sidon_prefix(1), vec![0]);
        assert_eq!(sidon_prefix(3), vec![0, 1, 3]);
        assert_eq!(sidon_prefix(5), vec![0, 1, 3, 7, 12]);
    }

    #[test]
    fn sidon_prefix_pairwise_sums_distinct_up_to_64() {
        let terms = sidon_prefix(64);
        assert_eq!(terms.len(), 64);
        let mut seen = std::collections::HashSet::new();
        for i in 0..terms.len() {
            for j in i..terms.len() {
                assert!(
                    seen.insert(terms[i] + terms[j]),
                    "duplicate pairwise sum {} from ({}, {})",
                    terms[i] + terms[j],
                    i,
                    j
                );
            }
        }
    }

    #[test]
    fn primality_small_values() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    fn arb_int_set() -> impl Strategy<Value = IntSet> {
        proptest::collection::btree_set(0u64..200, 1..12)
            .prop_map(|s| IntSet::new(s.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn sumset_commutative_and_bounded(a in arb_int_set(), b in arb_int_set()) {
            let ab = sumset(&a, &b);
            let ba = sumset(&b, &a);
            prop_assert_eq!(&ab, &ba);
            prop_assert!(ab.len() >= a.len().max(b.len()));
            prop_assert!(ab.len() <= a.len() * b.len());
        }

        #[test]
        fn sumset_zero_is_identity(a in arb_int_set()) {
            let zero = IntSet::new(vec![0]).unwrap();
            prop_assert_eq!(sumset(&zero, &a), a);
        }

        #[test]
        fn ap_sumset_matches_enumeration(
            first_a in 0u64..50,
            first_b in 0u64..50,
            d in 1u64..=20,
            n in 3usize..=10,
            m in 3usize..=10,
            k_seed in 0usize..10,
        ) {
            // Integer-multiple case: result must be the closed form with
            // cardinality n + k*(m-1).
            let k = 1 + k_seed % n;
            let a = APSet::new(first_a, d, n).unwrap();
            let b = APSet::new(first_b, d * k as u64, m).unwrap();
            let brute = sumset(&a.expand(), &b.expand());
            match ap_sumset(&a, &b) {
                ApSum::Ap(ap) => {
                    prop_assert_eq!(ap.len, n + k * (m - 1));
                    prop_assert_eq!(ap.expand(), brute);
                }
                ApSum::Generic(_) => prop_assert!(false, "expected closed form"),
            }
        }

        #[test]
        fn ap_sumset_fallback_matches_enumeration(
            a_first in 0u64..30, a_diff in 1u64..15, a_len in 1usize..8,
            b_first in 0u64..30, b_diff in 1u64..15, b_len in 1usize..8,
        ) {
            let a = APSet::new(a_first, a_diff, a_len).unwrap();
            let b = APSet::new(b_first, b_diff, b_len).unwrap();
            let brute = sumset(&a.expand(), &b.expand());
            prop_assert_eq!(ap_sumset(&a, &b).into_int_set(), brute);
        }

        #[test]
        fn ap_recognize_roundtrip(first in 0u64..100, diff in 1u64..30, len in 3usize..12) {
            let ap = APSet::new(first, diff, len).unwrap();
            let r = ap_recognize(&ap.expand()).unwrap();
            prop_assert_eq!(r.ap, ap);
            prop_assert!(!r.degenerate);
        }
    }
}
