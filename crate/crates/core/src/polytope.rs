//! Generalized permutohedra described by integer set functions.
//!
//! A submodular `z` with `z(∅) = 0` describes
//! `P = { x : Σ_{i∈T} x_i ≤ z(T) for all T, Σ_i x_i = z(E) }`.
//! Vertex lists are never stored; they are read off `z` greedily.
//! The lattice-point enumerator here is the brute-force oracle against which
//! the elimination algorithm is checked, so it scans a box and filters.

use rayon::prelude::*;
use thiserror::Error;

use crate::laurent::{ExponentVector, LaurentPoly};
use crate::matroid::{GroundSubset, LabelMap, Matroid, Split, MAX_GROUND};
use crate::perm::Permutation;
use crate::plaur::PiecewiseLaurent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("coordinate x{} has an empty range [{lo}, {hi}]", .coord + 1)]
    InfeasibleBox { coord: usize, lo: i64, hi: i64 },
    #[error("set function is not submodular: z({a}) + z({b}) < z(A∪B) + z(A∩B)")]
    NotSubmodular { a: GroundSubset, b: GroundSubset },
    #[error("set function must vanish on the empty set")]
    NonzeroEmpty,
    #[error("expected {expected} values for n = {n}, got {got}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("subset {0} must be nonempty and proper")]
    NotProper(GroundSubset),
    #[error("polytope has dimension below n - 1 (it lies in the hyperplane of {0})")]
    NotFullDimensional(GroundSubset),
}

/// Integer function on subsets of `{0..n-1}` with `z(∅) = 0`, indexed by
/// bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFunction {
    n: usize,
    values: Vec<i64>,
}

impl SetFunction {
    /// `values[mask]` is `z` at the subset with that bitmask.
    pub fn new(n: usize, values: Vec<i64>) -> Result<Self, PolytopeError> {
        assert!(n <= MAX_GROUND);
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(PolytopeError::WrongLength {
                n,
                expected,
                got: values.len(),
            });
        }
        if values[0] != 0 {
            return Err(PolytopeError::NonzeroEmpty);
        }
        Ok(Self { n, values })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            values: vec![0; 1 << n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(GroundSubset) -> i64) -> Self {
        let values = GroundSubset::all(n)
            .map(|s| if s.is_empty() { 0 } else { f(s) })
            .collect();
        Self { n, values }
    }

    /// `δ_T`: 1 at `t`, 0 elsewhere.
    pub fn delta(n: usize, t: GroundSubset) -> Self {
        Self::from_fn(n, |s| i64::from(s == t))
    }

    pub fn rank_function(m: &Matroid) -> Self {
        Self::from_fn(m.n(), |s| m.rank_of(s) as i64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: GroundSubset) -> i64 {
        self.values[s.0 as usize]
    }

    pub fn set(&mut self, s: GroundSubset, value: i64) {
        assert!(!s.is_empty(), "z(∅) is fixed at 0");
        self.values[s.0 as usize] = value;
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `z(E)`.
    pub fn total(&self) -> i64 {
        self.get(GroundSubset::full(self.n))
    }

    /// Pointwise `k·z`.
    pub fn dilate(&self, k: i64) -> Self {
        Self {
            n: self.n,
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.dilate(-1))
    }

    /// Greedy vertex: coordinate `σ(i)` is `z(S_i) - z(S_{i-1})` for the
    /// prefixes `S_i = σ{1..i}`.
    pub fn vertex(&self, sigma: &Permutation) -> Vec<i64> {
        self.prefix_differences(sigma.as_slice())
    }

    pub(crate) fn prefix_differences(&self, word: &[usize]) -> Vec<i64> {
        let mut v = vec![0; self.n];
        let mut prefix = GroundSubset::EMPTY;
        for &e in word {
            let next = prefix.with(e);
            v[e] = self.get(next) - self.get(prefix);
            prefix = next;
        }
        v
    }

    /// The piecewise monomial `{x^{vertex(σ)}}`.
    pub fn piecewise_monomial(&self) -> PiecewiseLaurent {
        PiecewiseLaurent::from_delta(self)
    }

    /// Exhaustive pair scan; reports the first witnessing pair.
    pub fn is_submodular(&self) -> Result<(), PolytopeError> {
        for a in GroundSubset::all(self.n) {
            for b in GroundSubset::all(self.n) {
                if b.0 <= a.0 {
                    continue;
                }
                if self.get(a) + self.get(b) < self.get(a.union(b)) + self.get(a.intersection(b)) {
                    return Err(PolytopeError::NotSubmodular { a, b });
                }
            }
        }
        Ok(())
    }

    /// Slides the facet indexed by `t` inward by one lattice step.
    pub fn slide_facet(&self, t: GroundSubset) -> Result<Self, PolytopeError> {
        self.check_proper(t)?;
        let mut out = self.clone();
        out.values[t.0 as usize] -= 1;
        Ok(out)
    }

    fn check_proper(&self, t: GroundSubset) -> Result<(), PolytopeError> {
        if t.is_empty() || t == GroundSubset::full(self.n) || !t.is_subset(GroundSubset::full(self.n)) {
            Err(PolytopeError::NotProper(t))
        } else {
            Ok(())
        }
    }

    /// `(z|T, z/T)` with `z|T(S) = z(S)` on `t` and `z/T(S) = z(S∪T) - z(T)`
    /// on the complement, each relabeled to a contiguous ground set.
    pub fn split(&self, t: GroundSubset) -> Result<Split<Self>, PolytopeError> {
        self.check_proper(t)?;
        let rest = t.complement(self.n);
        let rmap = LabelMap::of(t);
        let cmap = LabelMap::of(rest);
        let restrict = Self::from_fn(t.len(), |s| self.get(rmap.lift(s)));
        let zt = self.get(t);
        let contract = Self::from_fn(rest.len(), |s| self.get(cmap.lift(s).union(t)) - zt);
        Ok(((restrict, rmap), (contract, cmap)))
    }

    /// Per-coordinate bounds `[z(E) - z(E∖{i}), z({i})]`.
    fn coordinate_box(&self) -> Result<Vec<(i64, i64)>, PolytopeError> {
        let full = GroundSubset::full(self.n);
        (0..self.n)
            .map(|i| {
                let lo = self.total() - self.get(full.without(i));
                let hi = self.get(GroundSubset::singleton(i));
                if lo > hi {
                    Err(PolytopeError::InfeasibleBox { coord: i, lo, hi })
                } else {
                    Ok((lo, hi))
                }
            })
            .collect()
    }

    fn scan(&self, strict: bool) -> Result<LaurentPoly, PolytopeError> {
        let n = self.n;
        if n == 0 {
            return Ok(LaurentPoly::one(0));
        }
        let bounds = self.coordinate_box()?;
        let full = GroundSubset::full(n);
        let total = self.total();
        let proper: Vec<(u32, i64)> = GroundSubset::all(n)
            .filter(|s| !s.is_empty() && *s != full)
            .map(|s| (s.0, self.get(s)))
            .collect();
        let admits = |x: &[i64]| {
            proper.iter().all(|&(mask, bound)| {
                let sum: i64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).sum();
                if strict {
                    sum < bound
                } else {
                    sum <= bound
                }
            })
        };

        // The first coordinate is split across workers; the last one is
        // pinned by the equation Σ x_i = z(E).
        let (lo0, hi0) = bounds[0];
        let chunks: Vec<Vec<ExponentVector>> = (lo0..=hi0)
            .into_par_iter()
            .map(|x0| {
                let mut found = Vec::new();
                let mut x = vec![0i64; n];
                x[0] = x0;
                visit(&bounds, 1, &mut x, total, &mut |x| {
                    if admits(x) {
                        found.push(ExponentVector::new(x.to_vec()));
                    }
                });
                found
            })
            .collect();
        Ok(LaurentPoly::from_terms(n, chunks.into_iter().flatten().map(|e| (e, 1))))
    }

    /// `q(P) = Σ_{m ∈ P∩Z^n} x^m` by exhaustive box scan.
    pub fn enumerate_lattice_points(&self) -> Result<LaurentPoly, PolytopeError> {
        self.scan(false)
    }

    /// Lattice points satisfying every proper inequality strictly (the
    /// relative interior when `P` has dimension `n - 1`).
    pub fn interior_lattice_points(&self) -> Result<LaurentPoly, PolytopeError> {
        self.scan(true)
    }

    /// `[|kP ∩ Z^n|]` for `k = 0..=kmax`.
    pub fn ehrhart_values(&self, kmax: usize) -> Result<Vec<u64>, PolytopeError> {
        (0..=kmax as i64)
            .map(|k| Ok(self.dilate(k).enumerate_lattice_points()?.len() as u64))
            .collect()
    }

    /// `P` has dimension `n - 1` unless some proper `T` has
    /// `z(T) + z(E∖T) = z(E)`, which pins `Σ_{i∈T} x_i` on all of `P`.
    pub fn full_dimensional(&self) -> Result<(), PolytopeError> {
        let full = GroundSubset::full(self.n);
        for t in GroundSubset::all(self.n) {
            if t.is_empty() || t == full {
                continue;
            }
            if self.get(t) + self.get(t.complement(self.n)) == self.total() {
                return Err(PolytopeError::NotFullDimensional(t));
            }
        }
        Ok(())
    }

    /// Subset-keyed values in 1-indexed key form, `∅` omitted.
    pub fn keyed_values(&self) -> Vec<(String, i64)> {
        GroundSubset::all(self.n)
            .filter(|s| !s.is_empty())
            .map(|s| (s.key(), self.get(s)))
            .collect()
    }
}

fn visit(bounds: &[(i64, i64)], i: usize, x: &mut Vec<i64>, total: i64, emit: &mut impl FnMut(&[i64])) {
    let n = bounds.len();
    if i == n - 1 {
        let last = total - x[..n - 1].iter().sum::<i64>();
        let (lo, hi) = bounds[n - 1];
        if (lo..=hi).contains(&last) {
            x[n - 1] = last;
            emit(x);
        }
        return;
    }
    if i == n {
        // n == 1: the single coordinate was fixed by the caller
        if x[0] == total {
            emit(x);
        }
        return;
    }
    let (lo, hi) = bounds[i];
    for v in lo..=hi {
        x[i] = v;
        visit(bounds, i + 1, x, total, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn set(e: &[usize]) -> GroundSubset {
        GroundSubset::from_one_indexed(e).unwrap()
    }

    fn perm(w: &[usize]) -> Permutation {
        Permutation::from_one_indexed(w).unwrap()
    }

    /// Singletons 6, pairs 10, full set 12: the hexagon with vertices
    /// (4,2,6), (2,4,6), (2,6,4), (4,6,2), (6,4,2), (6,2,4).
    fn hexagon() -> SetFunction {
        SetFunction::from_fn(3, |s| match s.len() {
            1 => 6,
            2 => 10,
            _ => 12,
        })
    }

    /// The segment conv{(3,0), (0,3)}.
    fn segment3() -> SetFunction {
        SetFunction::from_fn(2, |_| 3)
    }

    /// The dilated simplex conv{3e_1, 3e_2, 3e_3}.
    fn simplex3() -> SetFunction {
        SetFunction::from_fn(3, |_| 3)
    }

    #[test]
    fn vertex_examples() {
        assert_eq!(segment3().vertex(&perm(&[1, 2])), vec![3, 0]);
        assert_eq!(hexagon().vertex(&perm(&[2, 3, 1])), vec![2, 6, 4]);
        let rk = SetFunction::rank_function(&Matroid::uniform(1, 2));
        assert_eq!(rk.vertex(&perm(&[2, 1])), vec![0, 1]);
        assert_eq!(simplex3().vertex(&perm(&[1, 2, 3])), vec![3, 0, 0]);
    }

    #[test]
    fn hexagon_vertices() {
        let z = hexagon();
        let verts: std::collections::BTreeSet<Vec<i64>> = Permutation::all(3).map(|p| z.vertex(&p)).collect();
        let expected: std::collections::BTreeSet<Vec<i64>> = [
            vec![4, 2, 6],
            vec![2, 4, 6],
            vec![2, 6, 4],
            vec![4, 6, 2],
            vec![6, 4, 2],
            vec![6, 2, 4],
        ]
        .into_iter()
        .collect();
        assert_eq!(verts, expected);
    }

    #[test]
    fn submodularity_examples() {
        assert!(SetFunction::rank_function(&Matroid::uniform(2, 4))
            .is_submodular()
            .is_ok());
        assert!(hexagon().is_submodular().is_ok());
        let z = SetFunction::from_fn(2, |s| i64::from(s.len() == 2));
        assert_eq!(
            z.is_submodular(),
            Err(PolytopeError::NotSubmodular {
                a: set(&[1]),
                b: set(&[2])
            })
        );
    }

    #[test]
    fn slide_facet_examples() {
        let slid = hexagon().slide_facet(set(&[2, 3])).unwrap();
        assert_eq!(slid.get(set(&[2, 3])), 9);
        assert_eq!(slid.vertex(&perm(&[2, 3, 1])), vec![3, 6, 3]);
        assert_eq!(slid.vertex(&perm(&[3, 2, 1])), vec![3, 3, 6]);

        // the segment with z{1} lowered: greedy vertex at (1,2) becomes (2,1)
        let slid = segment3().slide_facet(set(&[1])).unwrap();
        assert_eq!(slid.vertex(&perm(&[1, 2])), vec![2, 1]);

        let slid = SetFunction::zero(2).slide_facet(set(&[1])).unwrap();
        assert_eq!(slid.get(set(&[1])), -1);

        assert!(hexagon().slide_facet(GroundSubset::EMPTY).is_err());
        assert!(hexagon().slide_facet(GroundSubset::full(3)).is_err());
    }

    #[test]
    fn split_examples() {
        let ((r, rmap), (c, cmap)) = hexagon().split(set(&[2, 3])).unwrap();
        assert_eq!(rmap.old, vec![1, 2]);
        assert_eq!(cmap.old, vec![0]);
        let rv: Vec<_> = Permutation::all(2).map(|p| r.vertex(&p)).collect();
        assert_eq!(rv, vec![vec![6, 4], vec![4, 6]]);
        assert_eq!(c.vertex(&Permutation::identity(1)), vec![2]);

        let ((r, _), (c, _)) = segment3().split(set(&[2])).unwrap();
        assert_eq!(r.get(set(&[1])), 3);
        assert_eq!(c.get(set(&[1])), 0);
    }

    #[test]
    fn enumeration_examples() {
        let q = simplex3().enumerate_lattice_points().unwrap();
        assert_eq!(q.len(), 10);
        assert!(q.terms().all(|(e, c)| e.iter().sum::<i64>() == 3 && *c == 1.into()));
        assert_eq!(
            segment3().enumerate_lattice_points().unwrap(),
            LaurentPoly::parse("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2).unwrap()
        );
        assert_eq!(hexagon().enumerate_lattice_points().unwrap().len(), 19);
        assert_eq!(
            SetFunction::zero(3).enumerate_lattice_points().unwrap(),
            LaurentPoly::one(3)
        );
    }

    #[test]
    fn hexagon_slide_counts() {
        let z = hexagon();
        let slid = z.slide_facet(set(&[2, 3])).unwrap();
        let full = z.enumerate_lattice_points().unwrap().len();
        let after = slid.enumerate_lattice_points().unwrap().len();
        assert_eq!(full, after + 3);
    }

    #[test]
    fn interior_examples() {
        assert_eq!(hexagon().interior_lattice_points().unwrap().len(), 7);
        assert_eq!(
            simplex3().interior_lattice_points().unwrap(),
            LaurentPoly::parse("x1*x2*x3", 3).unwrap()
        );
        assert_eq!(
            segment3().interior_lattice_points().unwrap(),
            LaurentPoly::parse("x1^2*x2 + x1*x2^2", 2).unwrap()
        );
    }

    #[test]
    fn ehrhart_examples() {
        assert_eq!(simplex3().ehrhart_values(2).unwrap(), vec![1, 10, 28]);
        assert_eq!(hexagon().ehrhart_values(1).unwrap(), vec![1, 19]);
        assert_eq!(SetFunction::zero(3).ehrhart_values(3).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn infeasible_box_is_reported() {
        // z{1} = -1 but z(E) - z{2} = 0
        let z = SetFunction::new(2, vec![0, -1, 0, 0]).unwrap();
        assert!(matches!(
            z.enumerate_lattice_points(),
            Err(PolytopeError::InfeasibleBox { coord: 0, .. })
        ));
    }

    #[test]
    fn full_dimension_detection() {
        assert!(hexagon().full_dimensional().is_ok());
        assert!(simplex3().full_dimensional().is_ok());
        // a point is full-dimensional in R^1 only
        assert!(SetFunction::zero(1).full_dimensional().is_ok());
        assert!(SetFunction::zero(2).full_dimensional().is_err());
    }

    #[test]
    fn constructor_checks() {
        assert_eq!(SetFunction::new(1, vec![1, 0]), Err(PolytopeError::NonzeroEmpty));
        assert!(matches!(
            SetFunction::new(2, vec![0, 0]),
            Err(PolytopeError::WrongLength { .. })
        ));
    }
}
