//! Piecewise Laurent polynomials on the braid fan.
//!
//! A family `{f_σ : σ ∈ S_n}` is stored densely, indexed by the
//! lexicographic rank of `σ`. The fan's elements are identified with the
//! first `n` variables; the polynomials may live in a larger ring (the
//! elimination keeps already-eliminated variables around as scalars).

use rayon::prelude::*;
use thiserror::Error;

use crate::laurent::{ExponentVector, LaurentError, LaurentPoly};
use crate::matroid::{GroundSubset, LabelMap, Matroid, Split};
use crate::perm::{factorial, rank_word, Permutation};
use crate::polytope::SetFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaurError {
    #[error("gluing fails at σ = {sigma}, position {}: f_σ - f_στ not divisible by x{} - x{}", .i + 1, .sigma.at(*.i) + 1, .sigma.at(*.i + 1) + 1)]
    GluingViolation { sigma: Permutation, i: usize },
    #[error("family has {got} entries, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("family entries live in {got} variables, need at least {need}")]
    Ambient { need: usize, got: usize },
    #[error("families differ in size: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("entry at σ = {0} is not a single monomial")]
    NotAMonomialFamily(Permutation),
    #[error("split is not well defined: σ = {0} and σ' = {1} disagree")]
    WellDefinednessViolation(Permutation, Permutation),
    #[error("subset {0} must be nonempty and proper")]
    NotProper(GroundSubset),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLaurent {
    n: usize,
    nvars: usize,
    family: Vec<LaurentPoly>,
}

impl PiecewiseLaurent {
    /// `family[r]` is `f_σ` for the permutation of lexicographic rank `r`.
    /// Gluing is not checked here; see [`PiecewiseLaurent::validate`].
    pub fn new(n: usize, family: Vec<LaurentPoly>) -> Result<Self, PlaurError> {
        let expected = factorial(n);
        if family.len() != expected {
            return Err(PlaurError::WrongLength {
                expected,
                got: family.len(),
            });
        }
        let nvars = family[0].nvars();
        if nvars < n {
            return Err(PlaurError::Ambient { need: n, got: nvars });
        }
        if let Some(bad) = family.iter().find(|p| p.nvars() != nvars) {
            return Err(PlaurError::Ambient {
                need: nvars,
                got: bad.nvars(),
            });
        }
        Ok(Self { n, nvars, family })
    }

    pub fn from_fn(n: usize, f: impl Fn(&Permutation) -> LaurentPoly + Sync + Send) -> Self {
        let family: Vec<LaurentPoly> = (0..factorial(n))
            .into_par_iter()
            .map(|r| f(&Permutation::unrank(n, r)))
            .collect();
        let nvars = family[0].nvars();
        Self { n, nvars, family }
    }

    /// The same polynomial on every cone.
    pub fn constant(n: usize, p: LaurentPoly) -> Self {
        assert!(p.nvars() >= n);
        Self {
            n,
            nvars: p.nvars(),
            family: vec![p; factorial(n)],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, LaurentPoly::one(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, sigma: &Permutation) -> &LaurentPoly {
        &self.family[sigma.rank()]
    }

    pub fn get_word(&self, word: &[usize]) -> &LaurentPoly {
        &self.family[rank_word(word)]
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.family
    }

    /// `(σ, f_σ)` in lexicographic order of `σ`.
    pub fn iter(&self) -> impl Iterator<Item = (Permutation, &LaurentPoly)> + '_ {
        self.family
            .iter()
            .enumerate()
            .map(|(r, p)| (Permutation::unrank(self.n, r), p))
    }

    /// Checks that `x_{σ(i)} - x_{σ(i+1)}` divides `f_σ - f_{σ∘τ_i}` for every
    /// `σ` and every adjacent transposition.
    pub fn validate(&self) -> Result<(), PlaurError> {
        let n = self.n;
        let failure = (0..self.family.len()).into_par_iter().find_map_first(|r| {
            let sigma = Permutation::unrank(n, r);
            (0..n.saturating_sub(1)).find_map(|i| {
                let (a, b) = (sigma.at(i), sigma.at(i + 1));
                if a > b {
                    // the pair was checked from the other side
                    return None;
                }
                let other = sigma.swap_adjacent(i);
                let diff = &self.family[r] - self.get(&other);
                diff.divide_binomial(a, b).err().map(|_| PlaurError::GluingViolation {
                    sigma: sigma.clone(),
                    i,
                })
            })
        });
        match failure {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), PlaurError> {
        if self.n != other.n {
            return Err(PlaurError::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.nvars != other.nvars {
            return Err(LaurentError::AmbientMismatch {
                left: self.nvars,
                right: other.nvars,
            }
            .into());
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly + Sync + Send) -> Self {
        let family = self
            .family
            .par_iter()
            .zip(other.family.par_iter())
            .map(|(a, b)| op(a, b))
            .collect();
        Self {
            n: self.n,
            nvars: self.nvars,
            family,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PlaurError> {
        self.check_same_shape(other)?;
        let out = self.zip_with(other, |a, b| a + b);
        debug_assert!(out.validate().is_ok() || self.validate().is_err() || other.validate().is_err());
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PlaurError> {
        self.check_same_shape(other)?;
        let out = self.zip_with(other, |a, b| a * b);
        debug_assert!(out.validate().is_ok() || self.validate().is_err() || other.validate().is_err());
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map(|p| -p)
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly + Sync + Send) -> Self {
        Self {
            n: self.n,
            nvars: self.nvars,
            family: self.family.par_iter().map(f).collect(),
        }
    }

    /// Pointwise `x ↦ x^{-1}`.
    pub fn dual(&self) -> Self {
        self.map(LaurentPoly::dual)
    }

    /// `k`-th pointwise power; for `f_P` this is `f_{kP}`.
    pub fn pow(&self, k: u32) -> Self {
        self.map(|p| p.pow(k))
    }

    /// `(ω_M)_σ = (x_{σ(n)} / x_{σ(1)})·∏_{i∉B_M(σ)} x_i^{-1}`.
    pub fn omega(m: &Matroid) -> Self {
        let n = m.n();
        if n == 0 {
            return Self::one(0);
        }
        Self::from_fn(n, |sigma| {
            let mut e = vec![0i64; n];
            e[sigma.at(n - 1)] += 1;
            e[sigma.at(0)] -= 1;
            let basis = m.greedy_basis(sigma);
            for i in basis.complement(n).elements() {
                e[i] -= 1;
            }
            LaurentPoly::monomial(e, 1)
        })
    }

    /// Monomial family of the piecewise linear function with values `a(T)`
    /// on the rays `e_T`: on the cone of `σ` the exponent of `x_{σ(i)}` is
    /// `a(S_i) - a(S_{i-1})`.
    pub fn from_delta(a: &SetFunction) -> Self {
        let n = a.n();
        Self::from_fn(n, |sigma| LaurentPoly::monomial(a.vertex(sigma), 1))
    }

    pub fn is_monomial_family(&self) -> bool {
        self.family.iter().all(|p| p.as_monomial().is_some())
    }

    fn check_proper(&self, t: GroundSubset) -> Result<(), PlaurError> {
        let full = GroundSubset::full(self.n);
        if t.is_empty() || t == full || !t.is_subset(full) {
            Err(PlaurError::NotProper(t))
        } else {
            Ok(())
        }
    }

    /// `f_T`: multiplies `f_σ` by `x_{σ(k+1)} / x_{σ(k)}` whenever the first
    /// `k = |t|` entries of `σ` are exactly `t`.
    pub fn slide(&self, t: GroundSubset) -> Result<Self, PlaurError> {
        self.check_proper(t)?;
        let k = t.len();
        let nvars = self.nvars;
        let family = self
            .family
            .par_iter()
            .enumerate()
            .map(|(r, p)| {
                let sigma = Permutation::unrank(self.n, r);
                if GroundSubset::from_elements(sigma.as_slice()[..k].iter().copied()) == t {
                    let mut e = vec![0i64; nvars];
                    e[sigma.at(k)] += 1;
                    e[sigma.at(k - 1)] -= 1;
                    p.shift(&ExponentVector::new(e))
                } else {
                    p.clone()
                }
            })
            .collect();
        let out = Self {
            n: self.n,
            nvars,
            family,
        };
        debug_assert!(out.validate().is_ok() || self.validate().is_err());
        Ok(out)
    }

    /// `(f|T, f/T)` for a monomial family: on `σ ∈ S_{E,T}`,
    /// `(f|T)_{σ|T}` is `f_σ` with the variables outside `t` set to 1 and
    /// `(f/T)_{σ/T}` is `f_σ` with the variables in `t` set to 1. Both are
    /// relabeled onto contiguous ground sets. Every `σ ∈ S_{E,T}` is visited
    /// and must agree with the others.
    pub fn split(&self, t: GroundSubset) -> Result<Split<Self>, PlaurError> {
        self.check_proper(t)?;
        assert_eq!(self.nvars, self.n, "split needs a family in its own variables");
        if let Some((r, _)) = self.family.iter().enumerate().find(|(_, p)| p.as_monomial().is_none()) {
            return Err(PlaurError::NotAMonomialFamily(Permutation::unrank(self.n, r)));
        }
        let rest = t.complement(self.n);
        let rmap = LabelMap::of(t);
        let cmap = LabelMap::of(rest);
        let (k, l) = (t.len(), rest.len());

        let mut restricted: Vec<Option<(Permutation, LaurentPoly)>> = vec![None; factorial(k)];
        let mut contracted: Vec<Option<(Permutation, LaurentPoly)>> = vec![None; factorial(l)];
        for head in Permutation::all(k) {
            for tail in Permutation::all(l) {
                let word: Vec<usize> = head
                    .as_slice()
                    .iter()
                    .map(|&j| rmap.old[j])
                    .chain(tail.as_slice().iter().map(|&j| cmap.old[j]))
                    .collect();
                let sigma = Permutation::new(word).expect("concatenation is a bijection");
                let f = self.get(&sigma);
                for (slot, keep) in [
                    (&mut restricted[head.rank()], &rmap.old),
                    (&mut contracted[tail.rank()], &cmap.old),
                ] {
                    let piece = f.project(keep);
                    match slot {
                        None => *slot = Some((sigma.clone(), piece)),
                        Some((first, existing)) => {
                            if *existing != piece {
                                return Err(PlaurError::WellDefinednessViolation(first.clone(), sigma));
                            }
                        }
                    }
                }
            }
        }
        let collect = |v: Vec<Option<(Permutation, LaurentPoly)>>, size: usize| {
            let family: Vec<LaurentPoly> = v.into_iter().map(|e| e.expect("every cone visited").1).collect();
            Self {
                n: size,
                nvars: size,
                family,
            }
        };
        Ok(((collect(restricted, k), rmap), (collect(contracted, l), cmap)))
    }

    /// Relabels the ground set and variables: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(self.nvars, self.n);
        let n = self.n;
        let mut family = vec![LaurentPoly::zero(n); self.family.len()];
        for (sigma, p) in self.iter() {
            let word: Vec<usize> = sigma.as_slice().iter().map(|&i| perm[i]).collect();
            family[rank_word(&word)] = p.embed(n, perm);
        }
        Self { n, nvars: n, family }
    }

    /// `(σ key, f_σ text)` pairs in lexicographic order.
    pub fn keyed_entries(&self) -> Vec<(String, String)> {
        self.iter().map(|(s, p)| (s.key(), p.to_string())).collect()
    }
}

/// Restriction and contraction of δ-coefficient data at `flat`:
/// `a|F(T) = a(T)` for `T ⊆ F`, and `a/F(T) = a(F ∪ T) - a(F)` for
/// `T ⊆ F^c`. These are the data of `f|F` and `f/F` for `f = from_delta(a)`.
pub fn delta_split(a: &SetFunction, flat: GroundSubset) -> Result<Split<SetFunction>, PlaurError> {
    a.split(flat).map_err(|_| PlaurError::NotProper(flat))
}
