//! Sparse multivariate polynomials over Q with weighted gradings, leading
//! forms, partial derivatives and degrees of wedge products of differentials.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;
use thiserror::Error;

use crate::degree::{DegreeValue, GroupElem, WeightVector};

pub use parse::{parse_polynomial, parse_polynomial_with, ParseError, ParseOptions};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("weight has {weights} components but the polynomial has {vars} variables")]
    WeightLength { weights: usize, vars: usize },
    #[error("variable index {index} out of range for {vars} variables")]
    VariableOutOfRange { index: usize, vars: usize },
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("intermediate result has {terms} terms, over the limit of {limit}")]
    TooManyTerms { terms: usize, limit: usize },
    #[error("intermediate result has total degree {degree}, over the cap of {cap}")]
    DegreeTooHigh { degree: u64, cap: u64 },
}

pub type Result<T> = std::result::Result<T, PolyError>;

/// Exponent vector. Ordered graded-lexicographically (total degree first,
/// then exponents compared from `x1` on).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `Σ a_i·w_i`.
    pub fn weighted_degree(&self, w: &[GroupElem]) -> GroupElem {
        let rank = w[0].rank();
        let coords = (0..rank)
            .map(|c| {
                self.0
                    .iter()
                    .zip(w)
                    .map(|(&a, wi)| BigInt::from(a) * &wi.coords()[c])
                    .sum::<BigInt>()
            })
            .collect();
        GroupElem::new(coords).expect("rank >= 1")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in a fixed number of variables `x1..xn`.
///
/// Canonical: no stored coefficient is zero, and the zero polynomial has no
/// terms, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn mul_coeff(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, Monomial::one(nvars), c)
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(c.into()))
    }

    /// `x_{i+1}` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), nvars, "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Monomial with coefficient one from an exponent slice.
    pub fn monomial(exps: &[u32]) -> Self {
        Self::term(exps.len(), Monomial::new(exps), Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.leading_term().map(|(m, _)| m.total_degree())
    }

    /// Whether `x_{i+1}` occurs.
    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), mul_coeff(a, c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn check_weight(&self, w: &[GroupElem]) -> Result<()> {
        if w.len() != self.nvars {
            return Err(PolyError::WeightLength { weights: w.len(), vars: self.nvars });
        }
        Ok(())
    }

    /// `deg_w f`: the largest weighted degree among the terms.
    pub fn degree_w(&self, w: &WeightVector) -> Result<DegreeValue> {
        let w = w.components();
        self.check_weight(w)?;
        Ok(match small_weights(w) {
            Some(sw) => self
                .terms
                .keys()
                .map(|m| small_degree(m, &sw))
                .max()
                .map_or(DegreeValue::NegInfinity, |d| {
                    DegreeValue::Finite(
                        GroupElem::new(d.into_iter().map(BigInt::from).collect()).unwrap(),
                    )
                }),
            None => self
                .terms
                .keys()
                .map(|m| m.weighted_degree(w))
                .max()
                .map_or(DegreeValue::NegInfinity, DegreeValue::Finite),
        })
    }

    /// `f^w`: the sum of the terms of maximal weighted degree.
    pub fn leading_form(&self, w: &WeightVector) -> Result<Polynomial> {
        let top = match self.degree_w(w)? {
            DegreeValue::NegInfinity => return Ok(Self::zero(self.nvars)),
            DegreeValue::Finite(g) => g,
        };
        let wc = w.components();
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(wc) == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn is_homogeneous(&self, w: &WeightVector) -> Result<bool> {
        Ok(self.leading_form(w)?.len() == self.len())
    }

    /// Formal partial derivative with respect to `x_{i+1}`.
    pub fn partial(&self, i: usize) -> Result<Polynomial> {
        if i >= self.nvars {
            return Err(PolyError::VariableOutOfRange { index: i, vars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.terms.insert(m2, mul_coeff(c, &Rational::from_integer(e.into())));
        }
        Ok(out)
    }

    /// `f(g_1, …, g_n)`.
    pub fn substitute(&self, gs: &[Polynomial]) -> Result<Polynomial> {
        self.substitute_within(gs, usize::MAX, None)
    }

    /// Like [`substitute`](Self::substitute), but gives up as soon as a power
    /// or partial product would exceed `max_terms` terms or total degree
    /// `max_degree`. Products of nonzero polynomials never lose degree, so the
    /// degree test runs before the multiplication.
    pub fn substitute_within(&self, gs: &[Polynomial], max_terms: usize, max_degree: Option<u64>) -> Result<Polynomial> {
        if gs.len() != self.nvars {
            return Err(PolyError::ArityMismatch(gs.len(), self.nvars));
        }
        let target = gs.first().map_or(self.nvars, |g| g.nvars);
        if let Some(g) = gs.iter().find(|g| g.nvars != target) {
            return Err(PolyError::ArityMismatch(g.nvars, target));
        }
        let degs: Vec<u64> = gs.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
        let check = |p: &Polynomial| {
            if p.len() > max_terms {
                return Err(PolyError::TooManyTerms { terms: p.len(), limit: max_terms });
            }
            Ok(())
        };
        // powers[i][e] = g_i^e, built on demand
        let mut powers: Vec<Vec<Polynomial>> =
            (0..self.nvars).map(|_| vec![Polynomial::one(target)]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            if let Some(cap) = max_degree {
                let degree: u64 = m.0.iter().zip(&degs).map(|(&e, &d)| u64::from(e).saturating_mul(d)).sum();
                if degree > cap && gs.iter().all(|g| !g.is_zero()) {
                    return Err(PolyError::DegreeTooHigh { degree, cap });
                }
            }
            let mut acc = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &gs[i];
                    check(&next)?;
                    powers[i].push(next);
                }
                acc = &acc * &powers[i][e as usize];
                check(&acc)?;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// `h = c·other^l` for some `l >= 1` and rational `c`.
    pub fn power_dependence(&self, other: &Polynomial) -> Option<(u32, Rational)> {
        if self.is_zero() || other.is_zero() || self.nvars != other.nvars {
            return None;
        }
        let d1 = self.total_degree()?;
        let d2 = other.total_degree()?;
        let l = if d2 == 0 {
            if d1 != 0 {
                return None;
            }
            1
        } else {
            if d1 == 0 || d1 % d2 != 0 {
                return None;
            }
            (d1 / d2).to_u32()?
        };
        let p = other.pow(l);
        let c = self.leading_term()?.1 / p.leading_term()?.1;
        (p.scale(&c) == *self).then_some((l, c))
    }
}

fn small_weights(w: &[GroupElem]) -> Option<Vec<Vec<i64>>> {
    w.iter()
        .map(|g| g.coords().iter().map(|c| c.to_i64().filter(|v| v.abs() < 1 << 31)).collect())
        .collect()
}

fn small_degree(m: &Monomial, w: &[Vec<i64>]) -> Vec<i128> {
    let rank = w[0].len();
    (0..rank)
        .map(|c| m.0.iter().zip(w).map(|(&a, wi)| a as i128 * wi[c] as i128).sum())
        .collect()
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let (mut out, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut acc: std::collections::HashMap<Monomial, Rational> =
            std::collections::HashMap::with_capacity(self.len().saturating_mul(rhs.len()).min(1 << 16));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c = mul_coeff(c1, c2);
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += c,
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `p` for integers, `p/q` otherwise.
pub fn fmt_rational_string(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn fmt_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Canonical rendering: terms in descending graded-lex order, e.g.
/// `x3^4 + 2*x1*x3^2 - 1/2*x1 + 3`. Accepted back by [`parse_polynomial`].
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mut first = true;
            if m.is_one() || !a.is_one() {
                fmt_rational(&a, f)?;
                first = false;
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Degree of `df_1 ∧ ⋯ ∧ df_r`: the largest `deg_w(M_I · x_I)` over the
/// `r×r` Jacobian minors `M_I`, or `-inf` when every minor vanishes.
pub fn wedge_degree(fs: &[Polynomial], w: &WeightVector) -> Result<DegreeValue> {
    let n = fs.first().map_or(w.len(), Polynomial::nvars);
    if let Some(f) = fs.iter().find(|f| f.nvars != n) {
        return Err(PolyError::ArityMismatch(f.nvars, n));
    }
    if w.len() != n {
        return Err(PolyError::WeightLength { weights: w.len(), vars: n });
    }
    let r = fs.len();
    let partials: Vec<Vec<Polynomial>> = fs
        .iter()
        .map(|f| (0..n).map(|i| f.partial(i)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut best = DegreeValue::NegInfinity;
    for cols in combinations(n, r) {
        let minor = determinant(
            &partials
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect::<Vec<Vec<_>>>(),
        );
        if let DegreeValue::Finite(d) = minor.degree_w(w)? {
            let carrier = cols
                .iter()
                .fold(d, |acc, &c| &acc + &w.components()[c]);
            let cand = DegreeValue::Finite(carrier);
            if cand > best {
                best = cand;
            }
        }
    }
    Ok(best)
}

pub fn wedge2_degree(f: &Polynomial, g: &Polynomial, w: &WeightVector) -> Result<DegreeValue> {
    wedge_degree(&[f.clone(), g.clone()], w)
}

pub fn wedge3_degree(
    f1: &Polynomial,
    f2: &Polynomial,
    f3: &Polynomial,
    w: &WeightVector,
) -> Result<DegreeValue> {
    wedge_degree(&[f1.clone(), f2.clone(), f3.clone()], w)
}

/// Determinant of the Jacobian matrix `(∂f_i/∂x_j)`.
pub fn jacobian_det(fs: &[Polynomial]) -> Result<Polynomial> {
    let n = fs.len();
    if let Some(f) = fs.iter().find(|f| f.nvars != n) {
        return Err(PolyError::ArityMismatch(f.nvars, n));
    }
    let m: Vec<Vec<Polynomial>> = fs
        .iter()
        .map(|f| (0..n).map(|j| f.partial(j)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    Ok(determinant(&m))
}

/// Laplace expansion along the first row; the matrices here are at most
/// a handful of rows.
fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let r = m.len();
    let nvars = m[0][0].nvars;
    match r {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Polynomial::zero(nvars);
            for j in 0..r {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &determinant(&sub);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, 3).unwrap()
    }

    fn w(a: i64, b: i64, c: i64) -> WeightVector {
        WeightVector::from_ints(&[a, b, c]).unwrap()
    }

    #[test]
    fn bounded_substitution() {
        let f = p("x1^3*x2 + x3");
        let gs = [p("x1 + x2 + x3"), p("x2 + 1"), p("x3")];
        let full = f.substitute(&gs).unwrap();
        assert_eq!(f.substitute_within(&gs, full.len(), Some(4)).unwrap(), full);
        assert!(matches!(f.substitute_within(&gs, 1000, Some(3)), Err(PolyError::DegreeTooHigh { degree: 4, cap: 3 })));
        assert!(matches!(f.substitute_within(&gs, 5, None), Err(PolyError::TooManyTerms { limit: 5, .. })));
    }

    fn fin(v: i64) -> DegreeValue {
        DegreeValue::Finite(GroupElem::int(v))
    }

    #[test]
    fn degree_w_examples() {
        assert_eq!(p("x1*x3 + x2^2").degree_w(&w(1, 2, 3)).unwrap(), fin(4));
        assert_eq!(Polynomial::zero(3).degree_w(&w(1, 2, 3)).unwrap(), DegreeValue::NegInfinity);
        assert_eq!(p("7").degree_w(&w(4, 5, 6)).unwrap(), fin(0));
        let lexw = WeightVector::new(vec![
            GroupElem::from_i64s(&[1, 0]),
            GroupElem::from_i64s(&[0, 1]),
            GroupElem::from_i64s(&[1, 1]),
        ])
        .unwrap();
        assert_eq!(
            p("x2^5 + x1").degree_w(&lexw).unwrap(),
            DegreeValue::Finite(GroupElem::from_i64s(&[1, 0]))
        );
        assert!(matches!(
            p("x1").degree_w(&WeightVector::from_ints(&[1, 1]).unwrap()),
            Err(PolyError::WeightLength { .. })
        ));
    }

    #[test]
    fn leading_form_examples() {
        assert_eq!(p("x1*x3 + x2^2 + x1").leading_form(&w(1, 2, 3)).unwrap(), p("x1*x3 + x2^2"));
        assert_eq!(p("x1 + 1").leading_form(&w(1, 1, 1)).unwrap(), p("x1"));
        assert!(Polynomial::zero(3).leading_form(&w(1, 1, 1)).unwrap().is_zero());
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&p("x1+x2") * &p("x1-x2"), p("x1^2-x2^2"));
        let s = p("x1^2").substitute(&[p("x1+x3^2"), p("x2"), p("x3")]).unwrap();
        assert_eq!(s, p("x1^2 + 2*x1*x3^2 + x3^4"));
        let f = p("3*x1*x2 - 1/2*x3 + 4");
        assert!((&f + &(-&f)).is_zero());
        assert_eq!(f.substitute(&[p("x1"), p("x2"), p("x3")]).unwrap(), f);
        assert_eq!(p("x1+1").pow(3), p("x1^3+3*x1^2+3*x1+1"));
    }

    #[test]
    fn partial_examples() {
        assert_eq!(p("x1^2*x2").partial(0).unwrap(), p("2*x1*x2"));
        assert!(p("x2^3").partial(0).unwrap().is_zero());
        assert_eq!(p("x1*x2*x3").partial(2).unwrap(), p("x1*x2"));
        assert!(matches!(p("x1").partial(3), Err(PolyError::VariableOutOfRange { .. })));
    }

    #[test]
    fn wedge2_examples() {
        let w1 = w(1, 1, 1);
        assert_eq!(wedge2_degree(&p("x1"), &p("x2"), &w1).unwrap(), fin(2));
        assert_eq!(wedge2_degree(&p("x1+x2^2"), &p("x2"), &w1).unwrap(), fin(2));
        assert_eq!(wedge2_degree(&p("x1^2"), &p("x1"), &w1).unwrap(), DegreeValue::NegInfinity);
    }

    #[test]
    fn wedge3_and_jacobian_examples() {
        let id = [p("x1"), p("x2"), p("x3")];
        assert_eq!(jacobian_det(&id).unwrap(), p("1"));
        assert_eq!(wedge3_degree(&id[0], &id[1], &id[2], &w(1, 2, 3)).unwrap(), fin(6));
        let f = [p("x1+x3^2"), p("x2"), p("x3")];
        assert_eq!(jacobian_det(&f).unwrap(), p("1"));
        assert_eq!(wedge3_degree(&f[0], &f[1], &f[2], &w(1, 1, 1)).unwrap(), fin(3));
        let g = [p("x1"), p("x1"), p("x2")];
        assert!(jacobian_det(&g).unwrap().is_zero());
        assert_eq!(
            wedge3_degree(&g[0], &g[1], &g[2], &w(1, 1, 1)).unwrap(),
            DegreeValue::NegInfinity
        );
    }

    #[test]
    fn power_dependence_examples() {
        assert_eq!(
            p("4*x1^6").power_dependence(&p("x1^2")),
            Some((3, Rational::from_integer(4.into())))
        );
        assert_eq!(p("x1+x2").power_dependence(&p("x1")), None);
        assert_eq!(
            p("(x1+x2^2)^2").power_dependence(&p("x1+x2^2")),
            Some((2, Rational::one()))
        );
        assert_eq!(p("x1^2+x2^2").power_dependence(&p("x1")), None);
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p("x1^2 + 2*x1*x3^2 + x3^4").to_string(), "x3^4 + 2*x1*x3^2 + x1^2");
        assert_eq!(p("-x1 + 1/2 - 3/4*x2").to_string(), "-x1 - 3/4*x2 + 1/2");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
        assert_eq!(p("-5").to_string(), "-5");
    }
}
