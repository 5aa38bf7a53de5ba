//! Elementary automorphisms, tame words and the constructive witnesses for
//! tame multidegrees.
//!
//! Composition convention: a word is applied left to right to the component
//! list, starting from the identity. A step `x_l ↦ a·x_l + p` replaces the
//! current `f_l` by `a·f_l + p(f_1, …, f_n)`. Every witness below is checked
//! after construction by recomputing its multidegree and Jacobian.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::degree::{semigroup_member, DegreeValue, GroupElem, WeightVector};
use crate::poly::{
    fmt_rational_string, jacobian_det, parse_polynomial, wedge_degree, PolyError, Polynomial,
    Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("invalid elementary step: {0}")]
    InvalidStep(String),
    #[error("term budget exceeded: a component reached {terms} terms (limit {limit})")]
    TermBudget { terms: usize, limit: usize },
    #[error("degree cap exceeded: a component reached total degree {degree} (cap {cap})")]
    DegreeCap { degree: u64, cap: u64 },
    #[error("witness verification failed: expected multidegree {expected}, realized {realized}")]
    Verification { expected: String, realized: String },
    #[error("realized map has Jacobian {0}, not a nonzero constant")]
    Jacobian(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T> = std::result::Result<T, AutError>;

/// `x_l ↦ a·x_l + p` with `p` free of `x_l` and `a ≠ 0`; all other variables
/// fixed. `target` is zero-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementaryAut {
    target: usize,
    scale: Rational,
    shift: Polynomial,
}

impl ElementaryAut {
    pub fn new(target: usize, scale: Rational, shift: Polynomial) -> Result<Self> {
        let n = shift.nvars();
        if target >= n {
            return Err(AutError::InvalidStep(format!(
                "target x{} out of range for {n} variables",
                target + 1
            )));
        }
        if scale.is_zero() {
            return Err(AutError::InvalidStep("scale must be nonzero".into()));
        }
        if shift.depends_on(target) {
            return Err(AutError::InvalidStep(format!(
                "shift {shift} involves the target variable x{}",
                target + 1
            )));
        }
        Ok(ElementaryAut { target, scale, shift })
    }

    /// `x_l ↦ x_l + p`.
    pub fn shear(target: usize, shift: Polynomial) -> Result<Self> {
        Self::new(target, Rational::one(), shift)
    }

    /// `x_l ↦ a·x_l`.
    pub fn scaling(nvars: usize, target: usize, scale: Rational) -> Result<Self> {
        Self::new(target, scale, Polynomial::zero(nvars))
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn shift(&self) -> &Polynomial {
        &self.shift
    }

    pub fn nvars(&self) -> usize {
        self.shift.nvars()
    }

    /// `x_l ↦ a^{-1}·x_l − a^{-1}·p`.
    pub fn inverse(&self) -> ElementaryAut {
        let inv = self.scale.recip();
        ElementaryAut {
            target: self.target,
            shift: self.shift.scale(&-&inv),
            scale: inv,
        }
    }

    fn apply(&self, components: &mut [Polynomial], budget: &RealizeBudget) -> Result<()> {
        let shifted = self
            .shift
            .substitute_within(components, budget.max_terms, budget.max_total_degree)
            .map_err(|e| match e {
                PolyError::TooManyTerms { terms, limit } => AutError::TermBudget { terms, limit },
                PolyError::DegreeTooHigh { degree, cap } => AutError::DegreeCap { degree, cap },
                e => AutError::Poly(e),
            })?;
        let l = self.target;
        components[l] = &components[l].scale(&self.scale) + &shifted;
        Ok(())
    }

    /// Parts as written in record files: one-based target, `num/den` scale
    /// and the canonical shift polynomial.
    pub fn to_parts(&self) -> (usize, String, String) {
        (self.target + 1, fmt_rational_string(&self.scale), self.shift.to_string())
    }

    pub fn from_parts(nvars: usize, target: usize, scale: &str, shift: &str) -> Result<Self> {
        if target == 0 {
            return Err(AutError::InvalidStep("targets are one-based".into()));
        }
        let scale = parse_rational(scale)
            .ok_or_else(|| AutError::InvalidStep(format!("bad scale {scale:?}")))?;
        let shift = parse_polynomial(shift, nvars)
            .map_err(|e| AutError::InvalidStep(format!("bad shift {shift:?}: {e}")))?;
        Self::new(target - 1, scale, shift)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for ElementaryAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.target + 1;
        write!(f, "x{l} -> ")?;
        if !self.scale.is_one() {
            write!(f, "{}*", fmt_rational_string(&self.scale))?;
        }
        write!(f, "x{l}")?;
        if !self.shift.is_zero() {
            write!(f, " + ({})", self.shift)?;
        }
        Ok(())
    }
}

/// Limits applied while realizing a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RealizeBudget {
    pub max_terms: usize,
    pub max_total_degree: Option<u64>,
}

impl Default for RealizeBudget {
    fn default() -> Self {
        RealizeBudget { max_terms: 200_000, max_total_degree: None }
    }
}

/// A finite sequence of elementary automorphisms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TameWord {
    nvars: usize,
    steps: Vec<ElementaryAut>,
}

impl TameWord {
    pub fn identity(nvars: usize) -> Self {
        TameWord { nvars, steps: Vec::new() }
    }

    pub fn from_steps(nvars: usize, steps: Vec<ElementaryAut>) -> Result<Self> {
        if let Some(s) = steps.iter().find(|s| s.nvars() != nvars) {
            return Err(AutError::InvalidStep(format!(
                "step {s} has {} variables, word has {nvars}",
                s.nvars()
            )));
        }
        Ok(TameWord { nvars, steps })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn steps(&self) -> &[ElementaryAut] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: ElementaryAut) {
        assert_eq!(step.nvars(), self.nvars, "step arity");
        self.steps.push(step);
    }

    pub fn then(mut self, other: &TameWord) -> TameWord {
        assert_eq!(self.nvars, other.nvars, "word arity");
        self.steps.extend(other.steps.iter().cloned());
        self
    }

    /// Reversed sequence of inverted steps.
    pub fn invert(&self) -> TameWord {
        TameWord {
            nvars: self.nvars,
            steps: self.steps.iter().rev().map(ElementaryAut::inverse).collect(),
        }
    }

    /// The Jacobian of the realized map: the product of the step scales.
    pub fn jacobian_constant(&self) -> Rational {
        self.steps.iter().fold(Rational::one(), |acc, s| acc * s.scale())
    }

    /// Exchange components `i` and `j` with three unit shears and a `−1`
    /// scaling.
    pub fn transposition(nvars: usize, i: usize, j: usize) -> TameWord {
        assert!(i != j && i < nvars && j < nvars);
        let xi = Polynomial::var(nvars, i);
        let xj = Polynomial::var(nvars, j);
        let steps = vec![
            ElementaryAut::shear(i, xj.clone()).unwrap(),
            ElementaryAut::shear(j, -&xi).unwrap(),
            ElementaryAut::shear(i, xj).unwrap(),
            ElementaryAut::scaling(nvars, j, -Rational::one()).unwrap(),
        ];
        TameWord { nvars, steps }
    }

    /// Appends steps so that the realized component `k` becomes the old
    /// component `perm[k]`.
    pub fn permute_components(mut self, perm: &[usize]) -> TameWord {
        assert_eq!(perm.len(), self.nvars);
        let mut cur: Vec<usize> = (0..self.nvars).collect();
        for k in 0..self.nvars {
            let p = cur.iter().position(|&c| c == perm[k]).expect("permutation");
            if p != k {
                let swap = TameWord::transposition(self.nvars, k, p);
                self = self.then(&swap);
                cur.swap(k, p);
            }
        }
        self
    }
}

impl fmt::Display for TameWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "(identity)");
        }
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}. {s}", i + 1)?;
        }
        Ok(())
    }
}

/// A polynomial endomorphism `F = (f_1, …, f_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Endo {
    components: Vec<Polynomial>,
}

impl Endo {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        if let Some(c) = components.iter().find(|c| c.nvars() != n) {
            return Err(AutError::Input(format!(
                "component {c} has {} variables, expected {n}",
                c.nvars()
            )));
        }
        Ok(Endo { components })
    }

    pub fn identity(n: usize) -> Self {
        Endo { components: (0..n).map(|i| Polynomial::var(n, i)).collect() }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    /// `compose(F, G)_i = g_i(f_1, …, f_n)`: `F` first, then `G`.
    pub fn compose(&self, then: &Endo) -> Result<Endo> {
        let components = then
            .components
            .iter()
            .map(|g| g.substitute(&self.components))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Endo { components })
    }

    pub fn mdeg_w(&self, w: &WeightVector) -> Result<Vec<DegreeValue>> {
        Ok(self.components.iter().map(|f| f.degree_w(w)).collect::<std::result::Result<_, _>>()?)
    }

    /// Total-degree multidegree.
    pub fn mdeg(&self) -> Vec<Option<u64>> {
        self.components.iter().map(Polynomial::total_degree).collect()
    }

    /// `deg_w F = Σ deg_w f_i`.
    pub fn deg_w_total(&self, w: &WeightVector) -> Result<DegreeValue> {
        let mut acc = DegreeValue::Finite(GroupElem::zero(w.rank()));
        for d in self.mdeg_w(w)? {
            acc = &acc + &d;
        }
        Ok(acc)
    }

    pub fn jacobian_det(&self) -> Result<Polynomial> {
        Ok(jacobian_det(&self.components)?)
    }

    /// `deg_w df_1 ∧ ⋯ ∧ df_n`.
    pub fn top_wedge_degree(&self, w: &WeightVector) -> Result<DegreeValue> {
        Ok(wedge_degree(&self.components, w)?)
    }

    /// Canonical text of all components; equal maps give equal strings.
    pub fn canonical_string(&self) -> String {
        self.components.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    }

    pub fn fingerprint(&self) -> String {
        hex::encode(&Sha256::digest(self.canonical_string().as_bytes())[..16])
    }

    pub fn max_terms(&self) -> usize {
        self.components.iter().map(Polynomial::len).max().unwrap_or(0)
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn realize(word: &TameWord) -> Result<Endo> {
    realize_with(word, &RealizeBudget::default())
}

/// Applies the steps in order, aborting as soon as any component leaves the
/// budget.
pub fn realize_with(word: &TameWord, budget: &RealizeBudget) -> Result<Endo> {
    let mut endo = Endo::identity(word.nvars);
    for step in &word.steps {
        apply_step(&mut endo, step, budget)?;
    }
    Ok(endo)
}

/// One more step on an already realized prefix.
pub fn apply_step(endo: &mut Endo, step: &ElementaryAut, budget: &RealizeBudget) -> Result<()> {
    step.apply(&mut endo.components, budget)?;
    let f = &endo.components[step.target];
    if f.len() > budget.max_terms {
        return Err(AutError::TermBudget { terms: f.len(), limit: budget.max_terms });
    }
    if let (Some(cap), Some(deg)) = (budget.max_total_degree, f.total_degree()) {
        if deg > cap {
            return Err(AutError::DegreeCap { degree: deg, cap });
        }
    }
    Ok(())
}

/// A tame word together with its realization, whose multidegree was
/// recomputed and whose Jacobian was checked to be a nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedWord {
    word: TameWord,
    realized: Endo,
    mdeg: Vec<GroupElem>,
}

impl VerifiedWord {
    /// Realizes `word` and checks that its `w`-multidegree is `expected`.
    pub fn verify(word: TameWord, expected: &[GroupElem], w: &WeightVector) -> Result<Self> {
        let realized = realize(&word)?;
        let mdeg = realized.mdeg_w(w)?;
        let matches = mdeg.len() == expected.len()
            && mdeg.iter().zip(expected).all(|(d, e)| d.finite() == Some(e));
        if !matches {
            return Err(AutError::Verification {
                expected: fmt_list(expected.iter()),
                realized: fmt_list(mdeg.iter()),
            });
        }
        let jac = realized.jacobian_det()?;
        match jac.constant_value() {
            Some(c) if !c.is_zero() => {}
            _ => return Err(AutError::Jacobian(jac.to_string())),
        }
        Ok(VerifiedWord { word, realized, mdeg: expected.to_vec() })
    }

    pub fn word(&self) -> &TameWord {
        &self.word
    }

    pub fn realized(&self) -> &Endo {
        &self.realized
    }

    pub fn mdeg(&self) -> &[GroupElem] {
        &self.mdeg
    }
}

fn fmt_list<T: fmt::Display>(it: impl Iterator<Item = T>) -> String {
    format!("({})", it.map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Which construction produced a total-degree witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessTemplate {
    /// `d3 = a·d1 + b·d2`: `(x1 + x3^d1, x2 + x3^d2, x3 + f1^a·f2^b)`.
    SemigroupCombination { a: u32, b: u32 },
    /// `d2 = m·d1`: `(x1 + x2^d1, x2 + f1^m, x3 + x1^d3)`.
    Divisible { m: u32 },
}

fn exp(d: u64) -> Result<u32> {
    u32::try_from(d).map_err(|_| AutError::Input(format!("degree {d} too large")))
}

/// A tame word with total-degree multidegree `(d1, d2, d3)` whenever
/// `d1 | d2` or `d3 ∈ Z≥0·d1 + Z≥0·d2`; `None` otherwise.
///
/// Fails with [`AutError::Verification`] if the constructed word does not
/// realize the requested multidegree.
pub fn semigroup_witness(d: [u64; 3]) -> Result<Option<(VerifiedWord, WitnessTemplate)>> {
    let [d1, d2, d3] = d;
    if d1 == 0 || d1 > d2 || d2 > d3 {
        return Err(AutError::Input(format!(
            "expected sorted positive degrees, got ({d1},{d2},{d3})"
        )));
    }
    let n = 3;
    let x = |i| Polynomial::var(n, i);
    let pw = |i, e| x(i).pow(e);
    let (word, template) = if d2 % d1 == 0 {
        let m = exp(d2 / d1)?;
        let steps = vec![
            ElementaryAut::shear(2, pw(0, exp(d3)?))?,
            ElementaryAut::shear(0, pw(1, exp(d1)?))?,
            ElementaryAut::shear(1, pw(0, m))?,
        ];
        (TameWord::from_steps(n, steps)?, WitnessTemplate::Divisible { m })
    } else {
        let Some((a, b)) =
            semigroup_member(&GroupElem::int(d3), &GroupElem::int(d1), &GroupElem::int(d2))
                .map_err(|e| AutError::Input(e.to_string()))?
        else {
            return Ok(None);
        };
        let (a, b) = (to_u32(&a)?, to_u32(&b)?);
        let steps = vec![
            ElementaryAut::shear(0, pw(2, exp(d1)?))?,
            ElementaryAut::shear(1, pw(2, exp(d2)?))?,
            ElementaryAut::shear(2, &pw(0, a) * &pw(1, b))?,
        ];
        (TameWord::from_steps(n, steps)?, WitnessTemplate::SemigroupCombination { a, b })
    };
    let expected = [GroupElem::int(d1), GroupElem::int(d2), GroupElem::int(d3)];
    let verified = VerifiedWord::verify(word, &expected, &WeightVector::standard(3))?;
    Ok(Some((verified, template)))
}

fn to_u32(v: &BigInt) -> Result<u32> {
    v.to_u32().ok_or_else(|| AutError::Input(format!("exponent {v} too large")))
}

/// The n-variable family built from primes `p_1 < … < p_{n−1}`:
/// `d_i = p_i^i·p_{i+1}⋯p_{n−1}`, `d_n = (d_{n−1} − 1)·d_{n−2} + 1`, realized
/// by `f_i = x_i + x_n^{d_i}` and `f_n = x_n + f_{n−2}^{d_{n−1}} − f_{n−1}^{d_{n−2}}`.
#[derive(Clone, Debug)]
pub struct IntroFamily {
    pub degrees: Vec<u64>,
    pub witness: VerifiedWord,
}

pub fn intro_family(primes: &[u64]) -> Result<IntroFamily> {
    let n = primes.len() + 1;
    if n < 3 {
        return Err(AutError::Input("need at least two primes".into()));
    }
    if primes.windows(2).any(|w| w[0] >= w[1]) || !primes.iter().all(|&p| is_prime(p)) {
        return Err(AutError::Input(format!("{primes:?} is not a strictly increasing list of primes")));
    }
    let overflow = || AutError::Input("degrees overflow".into());
    let mut degrees = Vec::with_capacity(n);
    for i in 1..n {
        let mut d = primes[i - 1].checked_pow(i as u32).ok_or_else(overflow)?;
        for &p in &primes[i..] {
            d = d.checked_mul(p).ok_or_else(overflow)?;
        }
        degrees.push(d);
    }
    let (da, db) = (degrees[n - 3], degrees[n - 2]);
    degrees.push((db - 1).checked_mul(da).and_then(|v| v.checked_add(1)).ok_or_else(overflow)?);

    let x = |i| Polynomial::var(n, i);
    let mut steps = Vec::with_capacity(n);
    for (i, &d) in degrees[..n - 1].iter().enumerate() {
        steps.push(ElementaryAut::shear(i, x(n - 1).pow(exp(d)?))?);
    }
    let last = &x(n - 3).pow(exp(db)?) - &x(n - 2).pow(exp(da)?);
    steps.push(ElementaryAut::shear(n - 1, last)?);
    let word = TameWord::from_steps(n, steps)?;
    let expected: Vec<GroupElem> = degrees.iter().map(|&d| GroupElem::int(d)).collect();
    let witness = VerifiedWord::verify(word, &expected, &WeightVector::standard(n))?;
    Ok(IntroFamily { degrees, witness })
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// `(x1 − 2x2·q − x3·q², x2 + x3·q, x3)` with `q = x2² + x1·x3`.
pub fn nagata() -> Endo {
    let x = |i| Polynomial::var(3, i);
    let q = &x(1).pow(2) + &(&x(0) * &x(2));
    let f1 = &(&x(0) - &(&x(1) * &q).scale(&Rational::from_integer(2.into()))) - &(&x(2) * &q.pow(2));
    let f2 = &x(1) + &(&x(2) * &q);
    Endo { components: vec![f1, f2, x(2)] }
}
