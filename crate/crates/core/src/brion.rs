//! `Q_M(f)` by eliminating one element of the ground set at a time.
//!
//! At each level the family on `S_n` is regrouped by `μ ∈ S_{n-1}`: the `n`
//! permutations `μ_1, …, μ_n` that insert the top element `n` into `μ` at
//! positions `1, …, n`. Their contributions collapse to a single Laurent
//! polynomial `f_μ` in which `x_n` survives as a scalar, and the sum
//! continues over `S_{n-1}` with the matroid `M \ n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, RationalPoint};
use crate::matroid::{GroundSubset, LabelMap, Matroid};
use crate::perm::{factorial, Permutation};
use crate::plaur::{PiecewiseLaurent, PlaurError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrionError {
    #[error("element {0} is a loop or coloop; k_M(μ) is undefined")]
    NotApplicable(usize),
    #[error("family is on S_{family} but the matroid has {matroid} elements")]
    GroundMismatch { family: usize, matroid: usize },
    #[error("evaluation point hits a pole: x{} = x{}", .0 + 1, .1 + 1)]
    PoleHit(usize, usize),
    #[error("elimination order must list every element once")]
    BadOrder,
    #[error("partial sum index {i} outside 1..={max}")]
    BadIndex { i: usize, max: usize },
    #[error("elimination of x{} produced a family that does not glue: {source}", .element + 1)]
    InternalGluing { element: usize, source: PlaurError },
    #[error("the two forms of f_μ disagree at μ = {0}")]
    CrossCheck(Permutation),
    #[error("closed form of the partial sum disagrees at μ = {0}, i = {1}")]
    PartialSumMismatch(Permutation, usize),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Plaur(#[from] PlaurError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementCase {
    Loop,
    Coloop,
    Neither,
}

impl ElementCase {
    pub fn name(self) -> &'static str {
        match self {
            Self::Loop => "loop",
            Self::Coloop => "coloop",
            Self::Neither => "neither",
        }
    }
}

/// Data computed for one `μ` while eliminating the top element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationStep {
    pub mu: Permutation,
    /// `g[j-1] = (f_{μ_j} - f_{μ_{j+1}}) / (x_n - x_{μ(j)})`.
    pub g: Vec<LaurentPoly>,
    pub h: LaurentPoly,
    /// 1-indexed threshold, only in the `Neither` case.
    pub k: Option<usize>,
    pub case: ElementCase,
    pub f_out: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QReport {
    pub result: LaurentPoly,
    /// One list per level, in elimination order; empty unless requested.
    pub trace: Vec<Vec<EliminationStep>>,
    /// Eliminated elements, 0-indexed, first eliminated first.
    pub elimination_order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QOptions {
    /// Keep every [`EliminationStep`] and recompute each `f_μ` a second way.
    pub trace: bool,
}

impl QOptions {
    pub fn traced() -> Self {
        Self { trace: true }
    }
}

/// `k_M(μ)`: the largest `i` with `rk(μ(1..i-1)) < rk(μ(1..i-1) ∪ {n})`,
/// where `n` is the top element of `m` and `mu` permutes the others.
pub fn k_threshold(m: &Matroid, mu: &Permutation) -> Result<usize, BrionError> {
    let n = m.n();
    assert_eq!(mu.len() + 1, n);
    let top = n - 1;
    let (loops, coloops) = m.loops_coloops();
    if loops.contains(top) || coloops.contains(top) {
        return Err(BrionError::NotApplicable(top));
    }
    let mut prefix = GroundSubset::EMPTY;
    let mut k = 1;
    for i in 1..n {
        if m.rank_of(prefix) < m.rank_of(prefix.with(top)) {
            k = i;
        }
        prefix = prefix.with(mu.at(i - 1));
    }
    Ok(k)
}

fn element_case(m: &Matroid, e: usize) -> ElementCase {
    let (loops, coloops) = m.loops_coloops();
    if loops.contains(e) {
        ElementCase::Loop
    } else if coloops.contains(e) {
        ElementCase::Coloop
    } else {
        ElementCase::Neither
    }
}

fn one_minus(nvars: usize, i: usize) -> LaurentPoly {
    &LaurentPoly::one(nvars) - &LaurentPoly::var(nvars, i)
}

fn eliminate_one(
    f: &PiecewiseLaurent,
    m: &Matroid,
    mu: &Permutation,
    case: ElementCase,
    cross_check: bool,
) -> Result<EliminationStep, BrionError> {
    let n = f.n();
    let nv = f.nvars();
    let top = n - 1;
    let x_top = LaurentPoly::var(nv, top);

    // entries[i] = f_{μ_{i+1}}: top inserted at 0-indexed position i
    let entries: Vec<&LaurentPoly> = (0..n).map(|i| f.get_word(&mu.insert(i, top))).collect();
    let g = (0..n - 1)
        .map(|j| (entries[j] - entries[j + 1]).divide_binomial(top, mu.at(j)))
        .collect::<Result<Vec<_>, _>>()?;
    let g_sum = g.iter().fold(LaurentPoly::zero(nv), |acc, gj| &acc + gj);
    let h = &(&x_top * &g_sum) + entries[n - 1];

    let (k, f_out) = match case {
        ElementCase::Coloop => (None, h.clone()),
        ElementCase::Loop => (None, &one_minus(nv, top) * &h),
        ElementCase::Neither => {
            let k = k_threshold(m, mu)?;
            let mut inner =
                &LaurentPoly::var(nv, mu.at(k - 1)) * &g[..k].iter().fold(LaurentPoly::zero(nv), |a, b| &a + b);
            for (j, gj) in g.iter().enumerate().skip(k) {
                inner += &(&LaurentPoly::var(nv, mu.at(j)) * gj);
            }
            let out = &h - &(&x_top * &inner);
            if cross_check {
                // f_{μ_k} + (1 - x_{μ(k)})·x_n·Σ_{j<k} g_j + (1 - x_n)·Σ_{j≥k} x_{μ(j)}·g_j
                let below = g[..k - 1].iter().fold(LaurentPoly::zero(nv), |a, b| &a + b);
                let mut above = LaurentPoly::zero(nv);
                for (j, gj) in g.iter().enumerate().skip(k - 1) {
                    above += &(&LaurentPoly::var(nv, mu.at(j)) * gj);
                }
                let alt = &(entries[k - 1] + &(&(&one_minus(nv, mu.at(k - 1)) * &x_top) * &below))
                    + &(&one_minus(nv, top) * &above);
                if alt != out {
                    return Err(BrionError::CrossCheck(mu.clone()));
                }
            }
            (Some(k), out)
        }
    };
    Ok(EliminationStep {
        mu: mu.clone(),
        g,
        h,
        k,
        case,
        f_out,
    })
}

fn eliminate_inner(
    f: &PiecewiseLaurent,
    m: &Matroid,
    opts: QOptions,
) -> Result<(PiecewiseLaurent, Vec<EliminationStep>), BrionError> {
    let n = f.n();
    if n != m.n() {
        return Err(BrionError::GroundMismatch {
            family: n,
            matroid: m.n(),
        });
    }
    assert!(n >= 2, "eliminate_top needs at least two elements");
    let case = element_case(m, n - 1);
    let steps = (0..factorial(n - 1))
        .into_par_iter()
        .map(|r| eliminate_one(f, m, &Permutation::unrank(n - 1, r), case, opts.trace))
        .collect::<Result<Vec<_>, _>>()?;
    let out = PiecewiseLaurent::new(n - 1, steps.iter().map(|s| s.f_out.clone()).collect())?;
    out.validate()
        .map_err(|source| BrionError::InternalGluing { element: n - 1, source })?;
    let steps = if opts.trace { steps } else { Vec::new() };
    Ok((out, steps))
}

/// One elimination level: removes the top element of `m` from the fan and
/// keeps its variable as a scalar. The input family is validated first.
pub fn eliminate_top(
    f: &PiecewiseLaurent,
    m: &Matroid,
) -> Result<(PiecewiseLaurent, Vec<EliminationStep>), BrionError> {
    f.validate()?;
    eliminate_inner(f, m, QOptions::traced())
}

/// `Q_M(f) = Σ_σ f_σ·Q(C_σ)·∏_{i∉B_M(σ)} (1 - x_i)` as a Laurent polynomial.
pub fn q_matroid(f: &PiecewiseLaurent, m: &Matroid) -> Result<QReport, BrionError> {
    q_matroid_with(f, m, QOptions::default())
}

pub fn q_matroid_with(f: &PiecewiseLaurent, m: &Matroid, opts: QOptions) -> Result<QReport, BrionError> {
    if f.n() != m.n() {
        return Err(BrionError::GroundMismatch {
            family: f.n(),
            matroid: m.n(),
        });
    }
    f.validate()?;
    let mut family = f.clone();
    let mut matroid = m.clone();
    let mut trace = Vec::new();
    let mut order = Vec::new();
    while family.n() >= 2 {
        let top = family.n() - 1;
        let (next, steps) = eliminate_inner(&family, &matroid, opts)?;
        if opts.trace {
            trace.push(steps);
        }
        order.push(top);
        matroid = matroid.delete_element(top).0;
        family = next;
    }
    let last = family.entries()[0].clone();
    let result = if family.n() == 1 {
        order.push(0);
        if matroid.loops().contains(0) {
            &one_minus(last.nvars(), 0) * &last
        } else {
            last
        }
    } else {
        last
    };
    Ok(QReport {
        result,
        trace,
        elimination_order: order,
    })
}

/// Eliminates `order[0]` first, then `order[1]`, and so on, by relabeling so
/// that the requested order becomes largest-first.
pub fn q_matroid_ordered(f: &PiecewiseLaurent, m: &Matroid, order: &[usize]) -> Result<QReport, BrionError> {
    let n = m.n();
    if f.n() != n || f.nvars() != n {
        return Err(BrionError::GroundMismatch {
            family: f.n(),
            matroid: n,
        });
    }
    let mut perm = vec![usize::MAX; n];
    if order.len() != n {
        return Err(BrionError::BadOrder);
    }
    for (t, &e) in order.iter().enumerate() {
        if e >= n || perm[e] != usize::MAX {
            return Err(BrionError::BadOrder);
        }
        perm[e] = n - 1 - t;
    }
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let report = q_matroid(&f.relabel(&perm), &m.relabel(&perm))?;
    Ok(QReport {
        result: report.result.embed(n, &inverse),
        trace: report.trace,
        elimination_order: order.to_vec(),
    })
}

fn check_poles(pt: &RationalPoint, n: usize) -> Result<(), BrionError> {
    for a in 0..n {
        for b in a + 1..n {
            if pt[a] == pt[b] {
                return Err(BrionError::PoleHit(a, b));
            }
        }
    }
    Ok(())
}

/// `Q(C_σ)` at `pt` for a chain `word`: `∏ 1 / (1 - x_{w(i+1)} / x_{w(i)})`.
fn cone_value(word: &[usize], pt: &RationalPoint) -> BigRational {
    let one = BigRational::one();
    word.windows(2)
        .fold(one.clone(), |acc, w| acc / (&one - &pt[w[1]] / &pt[w[0]]))
}

/// The defining rational sum of `Q_M(f)`, evaluated exactly at `pt`.
pub fn rational_sum_eval(f: &PiecewiseLaurent, m: &Matroid, pt: &RationalPoint) -> Result<BigRational, BrionError> {
    let n = f.n();
    if n != m.n() {
        return Err(BrionError::GroundMismatch {
            family: n,
            matroid: m.n(),
        });
    }
    check_poles(pt, n)?;
    // 1 / (1 - x_b / x_a) = x_a / (x_a - x_b), and 1 - x_i, as numerator and
    // denominator pairs so each summand is reduced only once
    let fraction = |q: BigRational| {
        let (num, den) = q.into();
        (num, den)
    };
    let cone: Vec<Vec<(BigInt, BigInt)>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if a == b {
                        (BigInt::one(), BigInt::one())
                    } else {
                        fraction(&pt[a] / (&pt[a] - &pt[b]))
                    }
                })
                .collect()
        })
        .collect();
    let one_minus: Vec<(BigInt, BigInt)> = (0..n).map(|i| fraction(BigRational::one() - &pt[i])).collect();
    let terms = (0..factorial(n))
        .into_par_iter()
        .map(|r| {
            let v = f.entries()[r].eval(pt)?;
            if v.is_zero() {
                return Ok(v);
            }
            let sigma = Permutation::unrank(n, r);
            let (mut num, mut den): (BigInt, BigInt) = v.into();
            for w in sigma.as_slice().windows(2) {
                let (p, q) = &cone[w[0]][w[1]];
                num *= p;
                den *= q;
            }
            for i in m.greedy_basis(&sigma).complement(n).elements() {
                let (p, q) = &one_minus[i];
                num *= p;
                den *= q;
            }
            Ok(BigRational::new(num, den))
        })
        .collect::<Result<Vec<_>, LaurentError>>()?;
    Ok(terms.into_iter().fold(BigRational::zero(), |a, b| a + b))
}

/// Raw sums `(Σ_{j≤i} Q(C_{μ_j}), Σ_{j>i} Q(C_{μ_j}))` at `pt`, after
/// checking them against
/// `-(x_n/x_{μ(i)})·Q(C_μ)/(1 - x_n/x_{μ(i)})` and `Q(C_μ)/(1 - x_n/x_{μ(i)})`.
pub fn cone_partial_sum_eval(
    mu: &Permutation,
    i: usize,
    pt: &RationalPoint,
) -> Result<(BigRational, BigRational), BrionError> {
    let n = mu.len() + 1;
    if pt.len() < n {
        return Err(LaurentError::PointSize {
            expected: n,
            got: pt.len(),
        }
        .into());
    }
    check_poles(pt, n)?;
    let top = n - 1;
    if n == 1 {
        return Ok((BigRational::one(), BigRational::zero()));
    }
    if i == 0 || i > n - 1 {
        return Err(BrionError::BadIndex { i, max: n - 1 });
    }
    let value = |j: usize| cone_value(&mu.insert(j - 1, top), pt);
    let lower: BigRational = (1..=i).map(value).fold(BigRational::zero(), |a, b| a + b);
    let upper: BigRational = (i + 1..=n).map(value).fold(BigRational::zero(), |a, b| a + b);

    let base = cone_value(mu.as_slice(), pt);
    let ratio = &pt[top] / &pt[mu.at(i - 1)];
    let denom = BigRational::one() - &ratio;
    let lower_closed = -(&ratio * &base) / &denom;
    let upper_closed = &base / &denom;
    if lower != lower_closed || upper != upper_closed {
        return Err(BrionError::PartialSumMismatch(mu.clone(), i));
    }
    Ok((lower, upper))
}

/// Both sides of `Q_M(f^∨) = (-1)^{rk M - 1}·Q_M(f·ω_M)^∨`.
pub fn reciprocity_pair(f: &PiecewiseLaurent, m: &Matroid) -> Result<(LaurentPoly, LaurentPoly), BrionError> {
    let lhs = q_matroid(&f.dual(), m)?.result;
    let twisted = f.mul(&PiecewiseLaurent::omega(m))?;
    let mut rhs = q_matroid(&twisted, m)?.result.dual();
    if (m.rank() + 1) % 2 == 1 {
        rhs = -&rhs;
    }
    Ok((lhs, rhs))
}

/// The four polynomials of `Q_M(f) = Q_M(f_T) + Q_{M|T}(f|T)·Q_{M/T}(f/T)`,
/// all in the variables of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionCheck {
    pub subset: GroundSubset,
    pub q: LaurentPoly,
    pub q_slide: LaurentPoly,
    pub q_restrict: LaurentPoly,
    pub q_contract: LaurentPoly,
}

impl RecursionCheck {
    pub fn rhs(&self) -> LaurentPoly {
        &self.q_slide + &(&self.q_restrict * &self.q_contract)
    }

    pub fn holds(&self) -> bool {
        self.q == self.rhs()
    }
}

pub fn recursion_check(f: &PiecewiseLaurent, m: &Matroid, t: GroundSubset) -> Result<RecursionCheck, BrionError> {
    let n = m.n();
    let q = q_matroid(f, m)?.result;
    let q_slide = q_matroid(&f.slide(t)?, m)?.result;
    let ((fr, rmap), (fc, cmap)) = f.split(t)?;
    let (mr, _) = m.restrict(t);
    let (mc, _) = m.contract(t);
    let lift = |g: &PiecewiseLaurent, mm: &Matroid, map: &LabelMap| -> Result<LaurentPoly, BrionError> {
        Ok(q_matroid(g, mm)?.result.embed(n, &map.old))
    };
    Ok(RecursionCheck {
        subset: t,
        q,
        q_slide,
        q_restrict: lift(&fr, &mr, &rmap)?,
        q_contract: lift(&fc, &mc, &cmap)?,
    })
}

/// `∏_{i loop} (1 - x_i)`, the value of `Q_M(1)`.
pub fn loop_product(m: &Matroid) -> LaurentPoly {
    let n = m.n();
    m.loops()
        .elements()
        .fold(LaurentPoly::one(n), |acc, i| &acc * &one_minus(n, i))
}

/// Sign `(-1)^e` as a big integer.
pub(crate) fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::SetFunction;

    fn set(e: &[usize]) -> GroundSubset {
        GroundSubset::from_one_indexed(e).unwrap()
    }

    fn perm(w: &[usize]) -> Permutation {
        Permutation::from_one_indexed(w).unwrap()
    }

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    fn pt(c: &[i64]) -> RationalPoint {
        RationalPoint::from_integers(c).unwrap()
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn hexagon() -> SetFunction {
        SetFunction::from_fn(3, |s| match s.len() {
            1 => 6,
            2 => 10,
            _ => 12,
        })
    }

    #[test]
    fn k_threshold_examples() {
        assert_eq!(k_threshold(&Matroid::uniform(1, 2), &perm(&[1])), Ok(1));
        assert_eq!(k_threshold(&Matroid::uniform(2, 3), &perm(&[1, 2])), Ok(2));
        assert_eq!(
            k_threshold(&Matroid::boolean(3), &perm(&[1, 2])),
            Err(BrionError::NotApplicable(2))
        );
    }

    #[test]
    fn k_threshold_is_last_cone_containing_top() {
        let m = Matroid::uniform(2, 4);
        for mu in Permutation::all(3) {
            let k = k_threshold(&m, &mu).unwrap();
            let last = (1..=3)
                .filter(|&i| m.greedy_basis_of_word(&mu.insert(i - 1, 3)).contains(3))
                .max()
                .unwrap();
            assert_eq!(k, last);
        }
    }

    #[test]
    fn eliminate_top_examples() {
        let (f, _) = eliminate_top(&PiecewiseLaurent::one(2), &Matroid::new(2, [set(&[1])]).unwrap()).unwrap();
        assert_eq!(f.entries(), &[p("1 - x2", 2)]);
        let (f, _) = eliminate_top(&PiecewiseLaurent::one(3), &Matroid::uniform(2, 3)).unwrap();
        assert!(f.entries().iter().all(|q| *q == LaurentPoly::one(3)));

        let seg = SetFunction::from_fn(2, |_| 3).piecewise_monomial();
        let (f, steps) = eliminate_top(&seg, &Matroid::boolean(2)).unwrap();
        assert_eq!(steps[0].g, vec![p("x1^2 + x1*x2 + x2^2", 2)]);
        assert_eq!(steps[0].h, p("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2));
        assert_eq!(steps[0].case, ElementCase::Coloop);
        assert_eq!(f.entries(), &[p("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2)]);
    }

    #[test]
    fn eliminate_top_rejects_invalid_family() {
        let bad = PiecewiseLaurent::new(2, vec![p("x1", 2), p("x2^2", 2)]).unwrap();
        assert!(matches!(
            eliminate_top(&bad, &Matroid::boolean(2)),
            Err(BrionError::Plaur(PlaurError::GluingViolation { .. }))
        ));
    }

    #[test]
    fn q_matroid_examples() {
        let u12 = Matroid::uniform(1, 2);
        let f = SetFunction::rank_function(&u12).piecewise_monomial();
        assert_eq!(q_matroid(&f, &u12).unwrap().result, p("x1 + x2 - x1*x2", 2));

        let with_loop = Matroid::new(3, [set(&[1])]).unwrap();
        assert_eq!(
            q_matroid(&PiecewiseLaurent::one(3), &with_loop).unwrap().result,
            p("1 - x2 - x3 + x2*x3", 3)
        );
        assert_eq!(
            q_matroid(&PiecewiseLaurent::one(0), &Matroid::boolean(0))
                .unwrap()
                .result,
            LaurentPoly::one(0)
        );
        let one_loop = Matroid::new(1, [GroundSubset::EMPTY]).unwrap();
        assert_eq!(
            q_matroid(&PiecewiseLaurent::one(1), &one_loop).unwrap().result,
            p("1 - x1", 1)
        );
    }

    #[test]
    fn q_matroid_boolean_recovers_lattice_points() {
        let simplex = SetFunction::from_fn(3, |_| 3);
        let q = q_matroid(&simplex.piecewise_monomial(), &Matroid::boolean(3))
            .unwrap()
            .result;
        assert_eq!(q.len(), 10);
        assert_eq!(q, simplex.enumerate_lattice_points().unwrap());
        let q = q_matroid(&hexagon().piecewise_monomial(), &Matroid::boolean(3)).unwrap();
        assert_eq!(q.result, hexagon().enumerate_lattice_points().unwrap());
        assert_eq!(q.elimination_order, vec![2, 1, 0]);
    }

    #[test]
    fn traced_run_keeps_steps_and_cross_checks() {
        let m = Matroid::uniform(2, 4);
        let z = SetFunction::from_fn(4, |s| [0, 3, 5, 6, 6][s.len()]);
        let plain = q_matroid(&z.piecewise_monomial(), &m).unwrap();
        let traced = q_matroid_with(&z.piecewise_monomial(), &m, QOptions::traced()).unwrap();
        assert_eq!(plain.result, traced.result);
        assert!(plain.trace.is_empty());
        assert_eq!(traced.trace.iter().map(Vec::len).collect::<Vec<_>>(), vec![6, 2, 1]);
        for step in &traced.trace[0] {
            assert_eq!(step.case, ElementCase::Neither);
            let k = step.k.unwrap();
            assert!((1..=3).contains(&k));
        }
    }

    #[test]
    fn rational_sum_examples() {
        let u12 = Matroid::uniform(1, 2);
        let f = SetFunction::rank_function(&u12).piecewise_monomial();
        assert_eq!(rational_sum_eval(&f, &u12, &pt(&[2, 3])).unwrap(), rat(-1, 1));

        let loop2 = Matroid::new(2, [set(&[1])]).unwrap();
        assert_eq!(
            rational_sum_eval(&PiecewiseLaurent::one(2), &loop2, &pt(&[2, 3])).unwrap(),
            rat(-2, 1)
        );

        let seg = SetFunction::from_fn(2, |_| 3).piecewise_monomial();
        assert_eq!(
            rational_sum_eval(&seg, &Matroid::boolean(2), &pt(&[2, 3])).unwrap(),
            rat(65, 1)
        );

        // the ten-term triangle polynomial at (2, 3) is 3Δ at (2, 3, 1)
        let triangle = SetFunction::from_fn(3, |_| 3).piecewise_monomial();
        assert_eq!(
            rational_sum_eval(&triangle, &Matroid::boolean(3), &pt(&[2, 3, 1])).unwrap(),
            rat(90, 1)
        );

        assert_eq!(
            rational_sum_eval(&seg, &Matroid::boolean(2), &pt(&[2, 2])),
            Err(BrionError::PoleHit(0, 1))
        );
    }

    #[test]
    fn rational_sum_matches_recursion() {
        let m = Matroid::new(3, [set(&[1, 2]), set(&[1, 3])]).unwrap();
        let f = hexagon().piecewise_monomial();
        let q = q_matroid(&f, &m).unwrap().result;
        for point in [pt(&[2, 3, 5]), pt(&[-3, 7, 11]), pt(&[5, -2, 13])] {
            assert_eq!(rational_sum_eval(&f, &m, &point).unwrap(), q.eval(&point).unwrap());
        }
    }

    #[test]
    fn cone_partial_sum_examples() {
        let (lower, upper) = cone_partial_sum_eval(&perm(&[1]), 1, &pt(&[2, 5])).unwrap();
        assert_eq!(lower, rat(5, 3));
        assert_eq!(upper, rat(-2, 3));
        let (lower, upper) = cone_partial_sum_eval(&Permutation::identity(0), 1, &pt(&[2])).unwrap();
        assert_eq!((lower, upper), (rat(1, 1), rat(0, 1)));
        for mu in Permutation::all(3) {
            for i in 1..=3 {
                let (lower, upper) = cone_partial_sum_eval(&mu, i, &pt(&[2, 3, 5, 7])).unwrap();
                // lower + upper = Q(C_μ)
                assert_eq!(lower + upper, cone_value(mu.as_slice(), &pt(&[2, 3, 5, 7])));
            }
        }
        assert!(matches!(
            cone_partial_sum_eval(&perm(&[1, 2]), 3, &pt(&[2, 3, 5])),
            Err(BrionError::BadIndex { .. })
        ));
    }

    #[test]
    fn reciprocity_examples() {
        let seg = SetFunction::from_fn(2, |_| 3).piecewise_monomial();
        let (lhs, rhs) = reciprocity_pair(&seg, &Matroid::boolean(2)).unwrap();
        assert_eq!(lhs, rhs);
        let interior = SetFunction::from_fn(2, |_| 3).interior_lattice_points().unwrap();
        assert_eq!(lhs, -&interior.dual());

        let (lhs, rhs) = reciprocity_pair(&PiecewiseLaurent::one(3), &Matroid::uniform(2, 3)).unwrap();
        assert_eq!(lhs, rhs);
        let (lhs, rhs) = reciprocity_pair(&hexagon().piecewise_monomial(), &Matroid::uniform(1, 3)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn recursion_examples() {
        let f = hexagon().piecewise_monomial();
        let m = Matroid::uniform(2, 3);
        for t in GroundSubset::all(3).filter(|t| !t.is_empty() && t.len() < 3) {
            assert!(recursion_check(&f, &m, t).unwrap().holds(), "T = {t}");
        }
    }

    #[test]
    fn order_invariance() {
        let m = Matroid::new(3, [set(&[1, 2]), set(&[1, 3])]).unwrap();
        let f = hexagon().piecewise_monomial();
        let base = q_matroid(&f, &m).unwrap().result;
        for order in Permutation::all(3) {
            let q = q_matroid_ordered(&f, &m, order.as_slice()).unwrap();
            assert_eq!(q.result, base, "order {order}");
        }
        assert_eq!(q_matroid_ordered(&f, &m, &[0, 0, 1]), Err(BrionError::BadOrder));
    }
}
