//! Matroids stored by their bases.
//!
//! The ground set is always `{0, …, n-1}`; subsets are [`GroundSubset`]
//! bitmasks. Minors are relabeled onto a contiguous ground set and return a
//! [`LabelMap`] recording where each new element came from.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("a matroid needs at least one basis")]
    NoBases,
    #[error("ground set of size {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("basis {basis} is not a subset of a ground set of size {n}")]
    OutOfGround { basis: GroundSubset, n: usize },
    #[error("bases {first} and {second} have unequal cardinalities")]
    UnequalCardinality { first: GroundSubset, second: GroundSubset },
    #[error("exchange fails: no j in {b2} \\ {b1} makes ({b1} - {{{}}}) + j a basis", .i + 1)]
    ExchangeFails {
        b1: GroundSubset,
        b2: GroundSubset,
        i: usize,
    },
}

/// A subset of the ground set as a bitmask; bit `i` is element `i+1` in
/// 1-indexed notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroundSubset(pub u32);

impl GroundSubset {
    pub const EMPTY: Self = Self(0);

    pub fn full(n: usize) -> Self {
        Self(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        Self(1 << i)
    }

    pub fn from_elements(elems: impl IntoIterator<Item = usize>) -> Self {
        Self(elems.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// Parses 1-indexed elements such as `[2, 3]`.
    pub fn from_one_indexed(elems: &[usize]) -> Option<Self> {
        if elems.iter().any(|&e| e == 0 || e > 32) {
            return None;
        }
        Some(Self::from_elements(elems.iter().map(|e| e - 1)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        Self(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Self(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// All subsets of `{0..n-1}` as bitmasks `0..2^n`.
    pub fn all(n: usize) -> impl Iterator<Item = GroundSubset> {
        (0..1u32 << n).map(GroundSubset)
    }

    /// Comma-joined 1-indexed elements, e.g. `"2,3"`; empty string for ∅.
    pub fn key(self) -> String {
        self.elements()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a comma-joined 1-indexed key such as `"2,3"`.
    pub fn parse_key(key: &str) -> Option<Self> {
        let key = key.trim();
        if key.is_empty() {
            return Some(Self::EMPTY);
        }
        let elems: Option<Vec<usize>> = key.split(',').map(|s| s.trim().parse().ok()).collect();
        Self::from_one_indexed(&elems?)
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

/// `((restriction, its labels), (contraction, its labels))`.
pub type Split<T> = ((T, LabelMap), (T, LabelMap));

/// New element `j` of a minor is element `old[j]` of the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    pub old: Vec<usize>,
}

impl LabelMap {
    pub fn of(subset: GroundSubset) -> Self {
        Self {
            old: subset.elements().collect(),
        }
    }

    /// Maps a subset of the minor's ground set back to the parent.
    pub fn lift(&self, s: GroundSubset) -> GroundSubset {
        GroundSubset::from_elements(s.elements().map(|j| self.old[j]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorKind {
    Restrict,
    Contract,
    Delete,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    bases: Vec<GroundSubset>,
}

impl Matroid {
    /// Validates and builds a matroid on `{0..n-1}`.
    pub fn new(n: usize, bases: impl IntoIterator<Item = GroundSubset>) -> Result<Self, MatroidError> {
        let m = Self::new_unchecked(n, bases);
        m.validate()?;
        Ok(m)
    }

    /// Builds without running the exchange scan; bases are deduplicated and
    /// sorted.
    pub fn new_unchecked(n: usize, bases: impl IntoIterator<Item = GroundSubset>) -> Self {
        let set: BTreeSet<GroundSubset> = bases.into_iter().collect();
        Self {
            n,
            bases: set.into_iter().collect(),
        }
    }

    /// The free matroid: `[n]` itself is the only basis.
    pub fn boolean(n: usize) -> Self {
        Self::new_unchecked(n, [GroundSubset::full(n)])
    }

    /// `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Self {
        Self::new_unchecked(n, GroundSubset::all(n).filter(|s| s.len() == r))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bases(&self) -> &[GroundSubset] {
        &self.bases
    }

    pub fn is_basis(&self, s: GroundSubset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// Confirms the bases are nonempty, equicardinal, and satisfy the
    /// exchange property by an exhaustive scan over ordered pairs.
    pub fn validate(&self) -> Result<(), MatroidError> {
        if self.n > MAX_GROUND {
            return Err(MatroidError::TooLarge(self.n));
        }
        let Some(&first) = self.bases.first() else {
            return Err(MatroidError::NoBases);
        };
        let full = GroundSubset::full(self.n);
        for &b in &self.bases {
            if !b.is_subset(full) {
                return Err(MatroidError::OutOfGround { basis: b, n: self.n });
            }
            if b.len() != first.len() {
                return Err(MatroidError::UnequalCardinality { first, second: b });
            }
        }
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for i in b1.difference(b2).elements() {
                    let base = b1.without(i);
                    if !b2.difference(b1).elements().any(|j| self.is_basis(base.with(j))) {
                        return Err(MatroidError::ExchangeFails { b1, b2, i });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.bases[0].len()
    }

    /// `rk(s) = max_B |B ∩ s|`.
    pub fn rank_of(&self, s: GroundSubset) -> usize {
        self.bases.iter().map(|b| b.intersection(s).len()).max().unwrap_or(0)
    }

    /// `(loops, coloops)`.
    pub fn loops_coloops(&self) -> (GroundSubset, GroundSubset) {
        let union = self.bases.iter().fold(GroundSubset::EMPTY, |u, &b| u.union(b));
        let inter = self
            .bases
            .iter()
            .fold(GroundSubset::full(self.n), |u, &b| u.intersection(b));
        (union.complement(self.n), inter)
    }

    pub fn loops(&self) -> GroundSubset {
        self.loops_coloops().0
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// Greedy basis `B_M(σ)`: keeps each `σ(i)` that raises the rank of the
    /// prefix.
    pub fn greedy_basis(&self, sigma: &Permutation) -> GroundSubset {
        self.greedy_basis_of_word(sigma.as_slice())
    }

    pub fn greedy_basis_of_word(&self, word: &[usize]) -> GroundSubset {
        // Candidate bases shrink to those realizing the prefix rank.
        let mut candidates: Vec<GroundSubset> = self.bases.clone();
        let mut basis = GroundSubset::EMPTY;
        for &e in word {
            if candidates.iter().any(|b| b.contains(e)) {
                basis = basis.with(e);
                candidates.retain(|b| b.contains(e));
            }
        }
        basis
    }

    /// Minor on `t` (restrict) or on `t^c` (contract by `t`, delete `t`),
    /// relabeled to a contiguous ground set.
    pub fn minor(&self, t: GroundSubset, kind: MinorKind) -> (Matroid, LabelMap) {
        match kind {
            MinorKind::Restrict => self.restrict(t),
            MinorKind::Delete => self.restrict(t.complement(self.n)),
            MinorKind::Contract => self.contract(t),
        }
    }

    /// `M|T`: bases are the maximal independent subsets of `t`.
    pub fn restrict(&self, t: GroundSubset) -> (Matroid, LabelMap) {
        let r = self.rank_of(t);
        let map = LabelMap::of(t);
        let bases = self
            .bases
            .iter()
            .map(|b| b.intersection(t))
            .filter(|b| b.len() == r)
            .map(|b| relabel(b, &map));
        (Self::new_unchecked(t.len(), bases), map)
    }

    /// `M/T`: bases `B \ T` over bases `B` with `B ∩ T` a basis of `M|T`.
    pub fn contract(&self, t: GroundSubset) -> (Matroid, LabelMap) {
        let r = self.rank_of(t);
        let rest = t.complement(self.n);
        let map = LabelMap::of(rest);
        let bases = self
            .bases
            .iter()
            .filter(|b| b.intersection(t).len() == r)
            .map(|b| relabel(b.intersection(rest), &map));
        (Self::new_unchecked(rest.len(), bases), map)
    }

    /// `M \ {i}`.
    pub fn delete_element(&self, i: usize) -> (Matroid, LabelMap) {
        self.restrict(GroundSubset::full(self.n).without(i))
    }

    pub fn is_flat(&self, f: GroundSubset) -> bool {
        let r = self.rank_of(f);
        f.complement(self.n).elements().all(|i| self.rank_of(f.with(i)) > r)
    }

    /// All flats, sorted by cardinality and then bitmask.
    pub fn flats(&self) -> Vec<GroundSubset> {
        let mut out: Vec<GroundSubset> = GroundSubset::all(self.n).filter(|&f| self.is_flat(f)).collect();
        out.sort_by_key(|f| (f.len(), f.0));
        out
    }

    /// Relabels the ground set: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        let bases = self
            .bases
            .iter()
            .map(|b| GroundSubset::from_elements(b.elements().map(|i| perm[i])));
        Self::new_unchecked(self.n, bases)
    }

    /// Bases as sorted 1-indexed lists.
    pub fn bases_one_indexed(&self) -> Vec<Vec<usize>> {
        self.bases
            .iter()
            .map(|b| b.elements().map(|i| i + 1).collect())
            .collect()
    }
}

fn relabel(s: GroundSubset, map: &LabelMap) -> GroundSubset {
    GroundSubset::from_elements(
        map.old
            .iter()
            .enumerate()
            .filter(|(_, &o)| s.contains(o))
            .map(|(j, _)| j),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[usize]) -> GroundSubset {
        GroundSubset::from_one_indexed(elems).unwrap()
    }

    fn perm(word: &[usize]) -> Permutation {
        Permutation::from_one_indexed(word).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(Matroid::new(2, [set(&[1]), set(&[2])]).is_ok());
        assert!(matches!(
            Matroid::new(2, [set(&[1]), set(&[1, 2])]),
            Err(MatroidError::UnequalCardinality { .. })
        ));
        let err = Matroid::new(4, [set(&[1, 2]), set(&[3, 4])]).unwrap_err();
        assert_eq!(
            err,
            MatroidError::ExchangeFails {
                b1: set(&[1, 2]),
                b2: set(&[3, 4]),
                i: 0
            }
        );
        assert_eq!(Matroid::new(3, []), Err(MatroidError::NoBases));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matroid::uniform(1, 2).rank_of(set(&[1, 2])), 1);
        assert_eq!(Matroid::boolean(3).rank_of(set(&[2, 3])), 2);
        assert_eq!(Matroid::uniform(2, 3).rank_of(set(&[3])), 1);
    }

    #[test]
    fn loops_coloops_examples() {
        let m = Matroid::new(2, [set(&[1])]).unwrap();
        assert_eq!(m.loops_coloops(), (set(&[2]), set(&[1])));
        assert_eq!(
            Matroid::boolean(4).loops_coloops(),
            (GroundSubset::EMPTY, GroundSubset::full(4))
        );
        assert_eq!(
            Matroid::uniform(1, 2).loops_coloops(),
            (GroundSubset::EMPTY, GroundSubset::EMPTY)
        );
    }

    #[test]
    fn greedy_basis_examples() {
        for p in Permutation::all(3) {
            assert_eq!(Matroid::boolean(3).greedy_basis(&p), GroundSubset::full(3));
        }
        assert_eq!(Matroid::uniform(2, 3).greedy_basis(&perm(&[3, 1, 2])), set(&[1, 3]));
        let m = Matroid::new(2, [set(&[1])]).unwrap();
        assert_eq!(m.greedy_basis(&perm(&[2, 1])), set(&[1]));
    }

    #[test]
    fn greedy_basis_matches_rank_definition() {
        let m = Matroid::new(
            4,
            [set(&[1, 2]), set(&[1, 3]), set(&[2, 3]), set(&[1, 4]), set(&[2, 4])],
        )
        .unwrap();
        for p in Permutation::all(4) {
            let mut expected = GroundSubset::EMPTY;
            let mut prefix = GroundSubset::EMPTY;
            for &e in p.as_slice() {
                let before = m.rank_of(prefix);
                prefix = prefix.with(e);
                if m.rank_of(prefix) > before {
                    expected = expected.with(e);
                }
            }
            assert_eq!(m.greedy_basis(&p), expected);
        }
    }

    #[test]
    fn minor_examples() {
        let u23 = Matroid::uniform(2, 3);
        let (r, map) = u23.restrict(set(&[1, 2]));
        assert_eq!(r, Matroid::boolean(2));
        assert_eq!(map.old, vec![0, 1]);

        let (c, map) = u23.contract(set(&[1]));
        assert_eq!(c, Matroid::uniform(1, 2));
        assert_eq!(map.old, vec![1, 2]);

        let (d, _) = Matroid::boolean(3).minor(set(&[3]), MinorKind::Delete);
        assert_eq!(d, Matroid::boolean(2));

        let (e, _) = u23.restrict(GroundSubset::EMPTY);
        assert_eq!(e.n(), 0);
        assert_eq!(e.bases(), &[GroundSubset::EMPTY]);
    }

    #[test]
    fn contraction_with_loops_in_restriction() {
        // element 2 is a loop; contracting {2} leaves the bases untouched
        let m = Matroid::new(3, [set(&[1]), set(&[3])]).unwrap();
        let (c, map) = m.contract(set(&[2]));
        assert_eq!(map.old, vec![0, 2]);
        assert_eq!(c, Matroid::uniform(1, 2));
        c.validate().unwrap();
    }

    #[test]
    fn flats_examples() {
        assert_eq!(Matroid::uniform(1, 2).flats(), vec![GroundSubset::EMPTY, set(&[1, 2])]);
        assert_eq!(
            Matroid::boolean(2).flats(),
            vec![GroundSubset::EMPTY, set(&[1]), set(&[2]), set(&[1, 2])]
        );
        let m = Matroid::new(2, [set(&[1])]).unwrap();
        assert_eq!(m.flats(), vec![set(&[2]), set(&[1, 2])]);
    }

    #[test]
    fn subset_keys() {
        assert_eq!(set(&[2, 3]).key(), "2,3");
        assert_eq!(GroundSubset::parse_key("2, 3"), Some(set(&[2, 3])));
        assert_eq!(GroundSubset::parse_key(""), Some(GroundSubset::EMPTY));
        assert_eq!(GroundSubset::parse_key("0"), None);
        assert_eq!(GroundSubset::parse_key("a"), None);
    }
}
