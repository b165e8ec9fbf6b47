//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are stored in a [`BTreeMap`] keyed by exponent vector, so iteration in
//! reverse key order yields the canonical descending-lexicographic term order
//! used for text output. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Deref, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("ambient size mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },
    #[error("polynomial is not divisible by x{a} - x{b}", a = .a + 1, b = .b + 1)]
    NotDivisible { a: usize, b: usize },
    #[error("variable x{} is zero but appears with a negative exponent", .0 + 1)]
    ZeroCoordinate(usize),
    #[error("evaluation point has {got} coordinates, polynomial has {expected} variables")]
    PointSize { expected: usize, got: usize },
    #[error("x{} appears with a negative exponent", .0 + 1)]
    InvalidPoint(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Exponent vector `m` of a monomial `x^m`; one (possibly negative) entry per
/// variable. Ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|e| -e).collect())
    }

    pub fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Deref for ExponentVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

/// An element of `Z[x_1^{±1}, …, x_n^{±1}]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    /// `c·x^m`.
    pub fn monomial(exponents: impl Into<ExponentVector>, c: impl Into<BigInt>) -> Self {
        let exponents = exponents.into();
        let c = c.into();
        let mut terms = BTreeMap::new();
        let nvars = exponents.len();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Self { nvars, terms }
    }

    /// The variable `x_i` (0-indexed).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i), 1)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I, E, C>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<ExponentVector>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            let e = e.into();
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            p.add_term(e, c.into());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exponents: &[i64]) -> BigInt {
        self.terms
            .get(&ExponentVector(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// If the polynomial is a single term `c·x^m`, returns `(m, c)`.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Smallest and largest exponent of `x_i` among the terms.
    pub fn degree_range(&self, i: usize) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LaurentError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(LaurentError::AmbientMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_ambient(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.plus(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^m`.
    pub fn shift(&self, m: &ExponentVector) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.plus(m), c.clone())).collect(),
        }
    }

    /// Multiplies by `x_i^d`.
    pub fn shift_var(&self, i: usize, d: i64) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.0[i] += d;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverts every variable: `x^m ↦ x^{-m}`.
    pub fn dual(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.negated(), c.clone())).collect(),
        }
    }

    /// Substitutes `x_a := x_b`. The result is zero exactly when `x_a - x_b`
    /// divides `self`.
    pub fn substitute_equal(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.0[b] += e.0[a];
            e.0[a] = 0;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Exact quotient by `x_a - x_b`.
    ///
    /// Works one `x_a`-degree slice at a time from the top: the quotient slice
    /// of degree `d - 1` is the running remainder's degree-`d` slice, and
    /// subtracting it times `x_a - x_b` pushes `x_b`-multiples down one degree.
    /// Whatever survives below the lowest degree of `self` means the division
    /// is not exact. Divisibility is tested up front by `x_a := x_b`, and the
    /// quotient is checked by back-multiplication.
    pub fn divide_binomial(&self, a: usize, b: usize) -> Result<Self, LaurentError> {
        assert!(a != b, "divide_binomial needs two distinct variables");
        assert!(a < self.nvars && b < self.nvars, "variable out of range");
        let Some((lo, hi)) = self.degree_range(a) else {
            return Ok(Self::zero(self.nvars));
        };
        if !self.substitute_equal(a, b).is_zero() {
            return Err(LaurentError::NotDivisible { a, b });
        }

        // slices[d] = coefficient of x_a^d, stored with the x_a exponent zeroed
        let mut slices: BTreeMap<i64, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            let d = e.0[a];
            e.0[a] = 0;
            slices
                .entry(d)
                .or_insert_with(|| Self::zero(self.nvars))
                .add_term(e, c.clone());
        }

        let mut quotient = Self::zero(self.nvars);
        let mut carry = Self::zero(self.nvars);
        for d in (lo + 1..=hi).rev() {
            let mut slice = slices.remove(&d).unwrap_or_else(|| Self::zero(self.nvars));
            slice += &carry;
            // x_a^d·slice = x_a^{d-1}·slice·(x_a - x_b) + x_a^{d-1}·x_b·slice
            carry = slice.shift_var(b, 1);
            for (e, c) in slice.terms {
                let mut e = e;
                e.0[a] = d - 1;
                quotient.add_term(e, c);
            }
        }
        let mut rest = slices.remove(&lo).unwrap_or_else(|| Self::zero(self.nvars));
        rest += &carry;
        if !rest.is_zero() {
            return Err(LaurentError::NotDivisible { a, b });
        }

        let back = &quotient * &(&Self::var(self.nvars, a) - &Self::var(self.nvars, b));
        if &back != self {
            return Err(LaurentError::NotDivisible { a, b });
        }
        Ok(quotient)
    }

    /// Exact value at a point with nonzero rational coordinates.
    ///
    /// With `x_i = a_i / b_i` and exponents of `x_i` in `[lo_i, hi_i]`, every
    /// term times `∏ a_i^{L_i} b_i^{H_i}` (`L_i = max(0, -lo_i)`,
    /// `H_i = max(0, hi_i)`) is an integer, so the sum is taken over the
    /// integers with cached powers and divided once at the end.
    pub fn eval(&self, pt: &RationalPoint) -> Result<BigRational, LaurentError> {
        if pt.len() != self.nvars {
            return Err(LaurentError::PointSize {
                expected: self.nvars,
                got: pt.len(),
            });
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let mut shift_a = Vec::with_capacity(self.nvars);
        let mut shift_b = Vec::with_capacity(self.nvars);
        let mut pow_a = Vec::with_capacity(self.nvars);
        let mut pow_b = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let (lo, hi) = self.degree_range(i).expect("nonzero polynomial");
            let (l, h) = ((-lo).max(0), hi.max(0));
            if lo < 0 && pt[i].is_zero() {
                return Err(LaurentError::ZeroCoordinate(i));
            }
            pow_a.push(powers(pt[i].numer(), (hi + l).max(l) as usize));
            pow_b.push(powers(pt[i].denom(), (h - lo).max(h) as usize));
            shift_a.push(l);
            shift_b.push(h);
        }
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &d) in e.iter().enumerate() {
                let ka = (d + shift_a[i]) as usize;
                let kb = (shift_b[i] - d) as usize;
                if ka > 0 {
                    term *= &pow_a[i][ka];
                }
                if kb > 0 {
                    term *= &pow_b[i][kb];
                }
            }
            total += term;
        }
        let mut denom = BigInt::one();
        for i in 0..self.nvars {
            denom *= &pow_a[i][shift_a[i] as usize];
            denom *= &pow_b[i][shift_b[i] as usize];
        }
        Ok(BigRational::new(total, denom))
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, …, 1)`.
    pub fn specialize_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Sets `x_i := 1`, keeping the ambient size.
    pub fn set_one(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.0[i] = 0;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Keeps the variables listed in `keep` (new variable `j` is old variable
    /// `keep[j]`) and sets every other variable to 1.
    pub fn project(&self, keep: &[usize]) -> Self {
        let mut out = Self::zero(keep.len());
        for (e, c) in &self.terms {
            let e = ExponentVector(keep.iter().map(|&i| e[i]).collect());
            out.add_term(e, c.clone());
        }
        out
    }

    /// Re-embeds into `nvars` variables, sending variable `j` to `map[j]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut v = vec![0; nvars];
            for (j, &d) in e.iter().enumerate() {
                v[map[j]] += d;
            }
            out.add_term(ExponentVector(v), c.clone());
        }
        out
    }

    /// Canonical text with the given variable names.
    pub fn to_text(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != 0)
                .map(|(i, &d)| {
                    if d == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], d)
                    }
                })
                .collect();
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Parses canonical text over the variables `x1..xn`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self, LaurentError> {
        let names = default_names(nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::parse_with_names(text, &refs)
    }

    pub fn parse_with_names(text: &str, names: &[&str]) -> Result<Self, LaurentError> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            names,
        }
        .polynomial()
    }
}

/// `[1, x, x^2, …, x^k]`.
fn powers(x: &BigInt, k: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(BigInt::one());
    for j in 0..k {
        let next = &out[j] * x;
        out.push(next);
    }
    out
}

/// `["x1", …, "xn"]`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.to_text(&refs))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("Laurent polynomial addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("Laurent polynomial subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("Laurent polynomial multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "ambient size mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.nvars, rhs.nvars, "ambient size mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

/// A point with exact rational coordinates, used to evaluate polynomials and
/// rational-function sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    /// Rejects points with a zero coordinate.
    pub fn new(coords: Vec<BigRational>) -> Result<Self, LaurentError> {
        if let Some(i) = coords.iter().position(Zero::is_zero) {
            return Err(LaurentError::InvalidPoint(i));
        }
        Ok(Self(coords))
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self, LaurentError> {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// The first `n` primes `(2, 3, 5, 7, …)`.
    pub fn primes(n: usize) -> Self {
        Self(
            first_primes(n)
                .into_iter()
                .map(|p| BigRational::from_integer(p.into()))
                .collect(),
        )
    }

    /// True when no two coordinates coincide.
    pub fn is_pairwise_distinct(&self) -> bool {
        let mut seen: Vec<&BigRational> = self.0.iter().collect();
        seen.sort();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }
}

impl Deref for RationalPoint {
    type Target = [BigRational];

    fn deref(&self) -> &[BigRational] {
        &self.0
    }
}

pub fn first_primes(n: usize) -> Vec<i64> {
    let mut primes = Vec::with_capacity(n);
    let mut candidate = 2i64;
    while primes.len() < n {
        if primes
            .iter()
            .take_while(|&&p| p * p <= candidate)
            .all(|&p| candidate % p != 0)
        {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn polynomial(mut self) -> Result<LaurentPoly, LaurentError> {
        let n = self.names.len();
        let mut out = LaurentPoly::zero(n);
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return self.err("empty polynomial"),
            _ => false,
        };
        loop {
            let (e, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(e, c);
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(ch) => return self.err(format!("unexpected '{}'", ch as char)),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn term(&mut self) -> Result<(ExponentVector, BigInt), LaurentError> {
        let n = self.names.len();
        let mut e = vec![0i64; n];
        let coeff = match self.integer() {
            Some(c) => {
                if self.peek() != Some(b'*') {
                    return Ok((ExponentVector(e), c));
                }
                self.pos += 1;
                c
            }
            None => BigInt::one(),
        };
        loop {
            let i = self.variable()?;
            let mut d = 1i64;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                d = self.signed_exponent()?;
            }
            e[i] += d;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((ExponentVector(e), coeff))
    }

    fn variable(&mut self) -> Result<usize, LaurentError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match self.names.iter().position(|&nm| nm == word) {
            Some(i) => Ok(i),
            None => {
                self.pos = start;
                self.err(format!("unknown variable '{word}'"))
            }
        }
    }

    fn signed_exponent(&mut self) -> Result<i64, LaurentError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let Some(d) = self.integer() else {
            return self.err("expected exponent");
        };
        let d: i64 = match i64::try_from(d) {
            Ok(d) => d,
            Err(_) => return self.err("exponent out of range"),
        };
        Ok(if negative { -d } else { d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x1", 2) + &p("x2", 2), p("x1 + x2", 2));
        assert_eq!(&p("x1 - x2", 2) * &p("x1 + x2", 2), p("x1^2 - x2^2", 2));
        let q = p("3*x1^2*x2^-1 - 7 + x2", 2);
        assert!((&q - &q).is_zero());
        assert_eq!((&q - &q).to_string(), "0");
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let err = LaurentPoly::one(2).checked_add(&LaurentPoly::one(3)).unwrap_err();
        assert_eq!(err, LaurentError::AmbientMismatch { left: 2, right: 3 });
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p("x1 + x2^-1", 2).dual(), p("x1^-1 + x2", 2));
        assert_eq!(LaurentPoly::one(2).dual(), LaurentPoly::one(2));
        let q = p("2*x1^3*x2 - x1^-2 + 5", 2);
        assert_eq!(q.dual().dual(), q);
    }

    #[test]
    fn divide_binomial_examples() {
        assert_eq!(p("x1^2 - x2^2", 2).divide_binomial(0, 1).unwrap(), p("x1 + x2", 2));
        assert!(LaurentPoly::zero(2).divide_binomial(0, 1).unwrap().is_zero());
        assert_eq!(
            p("x1 - 1", 2).divide_binomial(0, 1),
            Err(LaurentError::NotDivisible { a: 0, b: 1 })
        );
    }

    #[test]
    fn divide_binomial_with_negative_exponents() {
        // (x1^-1 - x2^-1) = -(x1 - x2)/(x1 x2)
        let q = p("x1^-1 - x2^-1", 2).divide_binomial(0, 1).unwrap();
        assert_eq!(q, p("-x1^-1*x2^-1", 2));
        // x3^3 - x1^3 over x3 - x1 in three variables
        let q = p("x3^3 - x1^3", 3).divide_binomial(2, 0).unwrap();
        assert_eq!(q, p("x1^2 + x1*x3 + x3^2", 3));
    }

    #[test]
    fn eval_examples() {
        let pt = RationalPoint::from_integers(&[2, 3]).unwrap();
        assert_eq!(p("x1 + x2", 2).eval(&pt).unwrap(), BigRational::from_integer(5.into()));
        assert_eq!(p("x1^-1", 2).eval(&pt).unwrap(), BigRational::new(1.into(), 2.into()));
        let ones = RationalPoint::from_integers(&[1, 1]).unwrap();
        assert!(p("x1*x2 - 1", 2).eval(&ones).unwrap().is_zero());
        assert!(RationalPoint::from_integers(&[0, 1]).is_err());
    }

    #[test]
    fn specialize_ones_examples() {
        let q = p("x1 + x2 - x1*x2", 2);
        let ones = RationalPoint::from_integers(&[1, 1]).unwrap();
        assert_eq!(BigRational::from_integer(q.specialize_ones()), q.eval(&ones).unwrap());
        assert_eq!(q.specialize_ones(), BigInt::from(1));
        assert_eq!(LaurentPoly::zero(3).specialize_ones(), BigInt::from(0));
    }

    #[test]
    fn text_examples() {
        assert_eq!(p("x1^2 - x2", 2).to_string(), "x1^2 - x2");
        assert_eq!(p("x1^-1", 2).to_string(), "x1^-1");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(p("1 + x2 - 3*x1*x2^2", 2).to_string(), "-3*x1*x2^2 + x2 + 1");
        assert_eq!(p("-x1", 1).to_string(), "-x1");
    }

    #[test]
    fn parse_errors_report_position() {
        assert!(matches!(
            LaurentPoly::parse("x1 + y", 1),
            Err(LaurentError::Parse { pos: 5, .. })
        ));
        assert!(LaurentPoly::parse("", 1).is_err());
        assert!(LaurentPoly::parse("x1^", 1).is_err());
        assert!(LaurentPoly::parse("x1 x2", 2).is_err());
    }

    #[test]
    fn project_and_embed() {
        let q = p("x1^2*x2*x3^-1 + x3", 3);
        assert_eq!(q.project(&[0, 2]), p("x1^2*x2^-1 + x2", 2));
        assert_eq!(p("x1 + x2^2", 2).embed(3, &[2, 0]), p("x3 + x1^2", 3));
        assert_eq!(q.set_one(2), p("x1^2*x2 + 1", 3));
    }

    #[test]
    fn first_primes_are_primes() {
        assert_eq!(first_primes(6), vec![2, 3, 5, 7, 11, 13]);
    }
}
