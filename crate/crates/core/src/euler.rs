//! Matroid Euler characteristics read off from `Q_M` at `x = (1, …, 1)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::brion::{q_matroid, sign, BrionError};
use crate::matroid::{GroundSubset, Matroid};
use crate::plaur::{delta_split, PiecewiseLaurent};
use crate::polytope::SetFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("χ_0..χ_{kmax} do not determine a polynomial; raise --kmax")]
    NonPolynomialSequence { kmax: usize },
    #[error("matroid has {matroid} elements but the set function has {function}")]
    GroundMismatch { matroid: usize, function: usize },
    #[error(transparent)]
    Brion(#[from] BrionError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerValue {
    pub value: BigInt,
    pub delta: SetFunction,
}

fn specialized(f: &PiecewiseLaurent, m: &Matroid) -> Result<BigInt, EulerError> {
    Ok(q_matroid(f, m)?.result.specialize_ones())
}

fn check_ground(m: &Matroid, a: &SetFunction) -> Result<(), EulerError> {
    if m.n() != a.n() {
        return Err(EulerError::GroundMismatch {
            matroid: m.n(),
            function: a.n(),
        });
    }
    Ok(())
}

/// `χ*_M(a) = Q_M(f_a)(1, …, 1)` for the monomial family `f_a` of `a`.
pub fn chi_star(m: &Matroid, a: &SetFunction) -> Result<EulerValue, EulerError> {
    check_ground(m, a)?;
    let value = specialized(&PiecewiseLaurent::from_delta(a), m)?;
    Ok(EulerValue {
        value,
        delta: a.clone(),
    })
}

/// One flat's row of `χ*(a) = χ*(a - δ_F) + χ*_{M|F}(a|F)·χ*_{M/F}(a/F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomRow {
    pub flat: GroundSubset,
    pub lhs: BigInt,
    pub shifted: BigInt,
    pub restricted: BigInt,
    pub contracted: BigInt,
}

impl AxiomRow {
    pub fn rhs(&self) -> BigInt {
        &self.shifted + &self.restricted * &self.contracted
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub rows: Vec<AxiomRow>,
}

impl AxiomReport {
    pub fn violations(&self) -> impl Iterator<Item = &AxiomRow> {
        self.rows.iter().filter(|r| !r.holds())
    }

    pub fn holds(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// Evaluates both sides of the flat recursion for every nonempty proper flat.
pub fn axiom_check(m: &Matroid, a: &SetFunction) -> Result<AxiomReport, EulerError> {
    check_ground(m, a)?;
    let n = m.n();
    let lhs = chi_star(m, a)?.value;
    let flats: Vec<GroundSubset> = m
        .flats()
        .into_iter()
        .filter(|f| !f.is_empty() && *f != GroundSubset::full(n))
        .collect();
    let rows = flats
        .par_iter()
        .map(|&flat| {
            let shifted = chi_star(m, &a.minus(&SetFunction::delta(n, flat)))?.value;
            let ((ar, _), (ac, _)) = delta_split(a, flat).map_err(BrionError::from)?;
            let restricted = chi_star(&m.restrict(flat).0, &ar)?.value;
            let contracted = chi_star(&m.contract(flat).0, &ac)?.value;
            Ok(AxiomRow {
                flat,
                lhs: lhs.clone(),
                shifted,
                restricted,
                contracted,
            })
        })
        .collect::<Result<Vec<_>, EulerError>>()?;
    Ok(AxiomReport { rows })
}

/// `(χ*(a), χ*(a - δ_T))`; equal whenever `t` is not a flat.
pub fn shift_pair(m: &Matroid, a: &SetFunction, t: GroundSubset) -> Result<(BigInt, BigInt), EulerError> {
    let shifted = a.minus(&SetFunction::delta(a.n(), t));
    Ok((chi_star(m, a)?.value, chi_star(m, &shifted)?.value))
}

/// `(χ*(f^∨), (-1)^{rk M - 1}·χ*(f·ω_M))` for `f = from_delta(a)`.
pub fn serre_check(m: &Matroid, a: &SetFunction) -> Result<(BigInt, BigInt), EulerError> {
    check_ground(m, a)?;
    let f = PiecewiseLaurent::from_delta(a);
    let lhs = specialized(&f.dual(), m)?;
    let twisted = f.mul(&PiecewiseLaurent::omega(m)).map_err(BrionError::from)?;
    let rhs = sign(m.rank() + 1) * specialized(&twisted, m)?;
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStarVector {
    pub d: usize,
    pub entries: Vec<BigInt>,
    /// `χ_k` for `k = 0..=kmax`.
    pub values: Vec<BigInt>,
}

/// Forward differences `Δ^j v_0` for `j = 0..v.len()`.
pub fn forward_differences(values: &[BigInt]) -> Vec<BigInt> {
    let mut row = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    while !row.is_empty() {
        out.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// Degree of the polynomial through `(k, values[k])`, or `None` when the
/// last difference is nonzero so nothing confirms the degree.
pub fn polynomial_degree(values: &[BigInt]) -> Option<usize> {
    let diffs = forward_differences(values);
    let d = diffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
    (d + 1 < diffs.len()).then_some(d)
}

fn binomial(x: i64, j: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= BigInt::from(x - i as i64);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Newton interpolation of `values` evaluated at any integer `x`.
pub fn interpolate_at(values: &[BigInt], x: i64) -> BigInt {
    forward_differences(values)
        .iter()
        .enumerate()
        .map(|(j, c)| c * binomial(x, j))
        .sum()
}

/// `χ_k = χ*_M(k·z)` for `k = 0..=kmax`, computed in parallel.
pub fn chi_sequence(m: &Matroid, z: &SetFunction, kmax: usize) -> Result<Vec<BigInt>, EulerError> {
    check_ground(m, z)?;
    (0..=kmax)
        .into_par_iter()
        .map(|k| Ok(chi_star(m, &z.dilate(k as i64))?.value))
        .collect()
}

/// `h*` from `Σ_k χ_k t^k = h*(t) / (1 - t)^{d+1}`.
pub fn hstar(m: &Matroid, z: &SetFunction, kmax: usize) -> Result<HStarVector, EulerError> {
    let values = chi_sequence(m, z, kmax)?;
    let d = polynomial_degree(&values).ok_or(EulerError::NonPolynomialSequence { kmax })?;
    let entries = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| sign(i) * binomial(d as i64 + 1, i) * &values[j - i])
                .sum()
        })
        .collect();
    Ok(HStarVector { d, entries, values })
}

impl HStarVector {
    pub fn starts_with_one(&self) -> bool {
        self.entries.first().is_some_and(One::is_one)
    }

    pub fn nonnegative(&self) -> bool {
        self.entries.iter().all(|h| !h.is_negative())
    }
}

pub fn default_kmax(n: usize) -> usize {
    n + 2
}
