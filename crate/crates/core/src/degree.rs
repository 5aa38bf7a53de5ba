//! The totally ordered group `Z^k` (lexicographic order) that houses degrees
//! and weights, together with the semigroup arithmetic the exclusion
//! conditions are phrased in.
//!
//! Every element carries its rank. Arithmetic operators panic on a rank
//! mismatch; the free functions in this module check ranks and report
//! [`DegreeError::RankMismatch`] instead, so callers validating user input
//! should go through them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("group elements must have rank at least 1")]
    EmptyRank,
    #[error("{0} is not positive")]
    NotPositive(GroupElem),
    #[error("gcd undefined for independent pair {0}, {1}")]
    IndependentPair(GroupElem, GroupElem),
    #[error("Frobenius number needs coprime generators >= 2, got ({0}, {1})")]
    BadFrobeniusInput(BigInt, BigInt),
    #[error("cannot parse group element {0:?}: {1}")]
    Parse(String, String),
}

pub type Result<T> = std::result::Result<T, DegreeError>;

/// An element of `Z^k`, ordered lexicographically.
///
/// The derived order compares coordinate vectors lexicographically, which is
/// the group order whenever both sides have the same rank.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem(Vec<BigInt>);

impl GroupElem {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() {
            return Err(DegreeError::EmptyRank);
        }
        Ok(GroupElem(coords))
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        assert!(!coords.is_empty(), "group elements need rank >= 1");
        GroupElem(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Rank-one element.
    pub fn int<T: Into<BigInt>>(value: T) -> Self {
        GroupElem(vec![value.into()])
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "group elements need rank >= 1");
        GroupElem(vec![BigInt::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coordinate.
    pub fn lead_index(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn is_positive(&self) -> bool {
        self.lead_index().is_some_and(|i| self.0[i].is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.lead_index().is_some_and(|i| self.0[i].is_negative())
    }

    pub fn times(&self, k: &BigInt) -> GroupElem {
        GroupElem(self.0.iter().map(|c| c * k).collect())
    }

    pub fn times_u64(&self, k: u64) -> GroupElem {
        self.times(&BigInt::from(k))
    }

    /// The value as a plain integer when the rank is one and it fits.
    pub fn as_i64(&self) -> Option<i64> {
        match self.0.as_slice() {
            [c] => c.to_i64(),
            _ => None,
        }
    }

    fn check_rank(&self, other: &GroupElem) -> Result<()> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(DegreeError::RankMismatch(self.rank(), other.rank()))
        }
    }

    fn require_positive(&self) -> Result<()> {
        if self.is_positive() {
            Ok(())
        } else {
            Err(DegreeError::NotPositive(self.clone()))
        }
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [c] = self.0.as_slice() {
            return write!(f, "{c}");
        }
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `5`, `-3` or a bracketed vector `[1,0,-2]`.
impl FromStr for GroupElem {
    type Err = DegreeError;

    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| DegreeError::Parse(s.to_string(), msg.to_string());
        let t = s.trim();
        let body = match t.strip_prefix('[') {
            Some(rest) => rest.strip_suffix(']').ok_or_else(|| err("missing ']'"))?,
            None => t,
        };
        let coords = body
            .split(',')
            .map(|c| c.trim().parse::<BigInt>().map_err(|_| err("expected an integer")))
            .collect::<Result<Vec<_>>>()?;
        if !t.starts_with('[') && coords.len() != 1 {
            return Err(err("vectors must be bracketed"));
        }
        GroupElem::new(coords)
    }
}

/// Splits `a,b,[1,2],c` on the commas outside brackets and parses each
/// piece as a [`GroupElem`].
pub fn parse_group_list(s: &str) -> Result<Vec<GroupElem>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].parse()?);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(DegreeError::Parse(s.to_string(), "unbalanced ']'".into()));
        }
    }
    if depth != 0 {
        return Err(DegreeError::Parse(s.to_string(), "unbalanced '['".into()));
    }
    out.push(s[start..].parse()?);
    Ok(out)
}

impl Serialize for GroupElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add<&GroupElem> for &GroupElem {
    type Output = GroupElem;

    fn add(self, rhs: &GroupElem) -> GroupElem {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in addition");
        GroupElem(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for GroupElem {
    type Output = GroupElem;

    fn add(self, rhs: GroupElem) -> GroupElem {
        &self + &rhs
    }
}

impl Sub<&GroupElem> for &GroupElem {
    type Output = GroupElem;

    fn sub(self, rhs: &GroupElem) -> GroupElem {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in subtraction");
        GroupElem(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for GroupElem {
    type Output = GroupElem;

    fn sub(self, rhs: GroupElem) -> GroupElem {
        &self - &rhs
    }
}

impl Neg for &GroupElem {
    type Output = GroupElem;

    fn neg(self) -> GroupElem {
        GroupElem(self.0.iter().map(|c| -c).collect())
    }
}

/// A degree: either `-inf` (the degree of zero) or a group element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum DegreeValue {
    NegInfinity,
    Finite(GroupElem),
}

impl DegreeValue {
    pub fn finite(&self) -> Option<&GroupElem> {
        match self {
            DegreeValue::NegInfinity => None,
            DegreeValue::Finite(g) => Some(g),
        }
    }

    pub fn into_finite(self) -> Option<GroupElem> {
        match self {
            DegreeValue::NegInfinity => None,
            DegreeValue::Finite(g) => Some(g),
        }
    }

    pub fn is_neg_infinity(&self) -> bool {
        matches!(self, DegreeValue::NegInfinity)
    }
}

impl Add<&DegreeValue> for &DegreeValue {
    type Output = DegreeValue;

    fn add(self, rhs: &DegreeValue) -> DegreeValue {
        match (self, rhs) {
            (DegreeValue::Finite(a), DegreeValue::Finite(b)) => DegreeValue::Finite(a + b),
            _ => DegreeValue::NegInfinity,
        }
    }
}

impl fmt::Display for DegreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeValue::NegInfinity => write!(f, "-inf"),
            DegreeValue::Finite(g) => write!(f, "{g}"),
        }
    }
}

impl From<GroupElem> for DegreeValue {
    fn from(g: GroupElem) -> Self {
        DegreeValue::Finite(g)
    }
}

/// Weight vector for an arbitrary number of variables. Components share one
/// rank and are strictly positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<GroupElem>", into = "Vec<GroupElem>")]
pub struct WeightVector(Vec<GroupElem>);

impl WeightVector {
    pub fn new(components: Vec<GroupElem>) -> Result<Self> {
        let first = components.first().ok_or(DegreeError::EmptyRank)?;
        for c in &components {
            first.check_rank(c)?;
            c.require_positive()?;
        }
        Ok(WeightVector(components))
    }

    /// All-ones weight of rank one: the total degree.
    pub fn standard(n: usize) -> Self {
        WeightVector(vec![GroupElem::int(1); n])
    }

    pub fn from_ints(ws: &[i64]) -> Result<Self> {
        Self::new(ws.iter().map(|&w| GroupElem::int(w)).collect())
    }

    pub fn components(&self) -> &[GroupElem] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0[0].rank()
    }

    /// `|w|`, the sum of the components.
    pub fn total(&self) -> GroupElem {
        let mut acc = GroupElem::zero(self.rank());
        for c in &self.0 {
            acc = &acc + c;
        }
        acc
    }
}

impl TryFrom<Vec<GroupElem>> for WeightVector {
    type Error = DegreeError;

    fn try_from(v: Vec<GroupElem>) -> Result<Self> {
        WeightVector::new(v)
    }
}

impl From<WeightVector> for Vec<GroupElem> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Weight for three variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<GroupElem>", into = "Vec<GroupElem>")]
pub struct Weight(WeightVector);

impl Weight {
    pub fn new(w1: GroupElem, w2: GroupElem, w3: GroupElem) -> Result<Self> {
        Ok(Weight(WeightVector::new(vec![w1, w2, w3])?))
    }

    pub fn from_ints(w1: i64, w2: i64, w3: i64) -> Result<Self> {
        Self::new(GroupElem::int(w1), GroupElem::int(w2), GroupElem::int(w3))
    }

    /// `(1,1,1)` in `Z`.
    pub fn standard() -> Self {
        Weight(WeightVector::standard(3))
    }

    pub fn components(&self) -> &[GroupElem] {
        self.0.components()
    }

    pub fn get(&self, i: usize) -> &GroupElem {
        &self.0.components()[i]
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn total(&self) -> GroupElem {
        self.0.total()
    }

    pub fn as_vector(&self) -> &WeightVector {
        &self.0
    }

    /// Components in ascending order.
    pub fn sorted(&self) -> [GroupElem; 3] {
        let mut v = self.components().to_vec();
        v.sort();
        [v[0].clone(), v[1].clone(), v[2].clone()]
    }

    /// Permutation-invariant key (the ascending components).
    pub fn fingerprint(&self) -> String {
        let [a, b, c] = self.sorted();
        format!("{a},{b},{c}")
    }
}

impl TryFrom<Vec<GroupElem>> for Weight {
    type Error = DegreeError;

    fn try_from(v: Vec<GroupElem>) -> Result<Self> {
        if v.len() != 3 {
            return Err(DegreeError::Parse(
                format!("{v:?}"),
                "a weight needs exactly three components".into(),
            ));
        }
        let mut it = v.into_iter();
        let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        Weight::new(a, b, c)
    }
}

impl From<Weight> for Vec<GroupElem> {
    fn from(w: Weight) -> Self {
        w.0.into()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn lex_compare(a: &GroupElem, b: &GroupElem) -> Result<Ordering> {
    a.check_rank(b)?;
    Ok(a.cmp(b))
}

/// Coprime multipliers of a Z-dependent pair: `d1 = u1·d`, `d2 = u2·d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependentPair {
    pub u1: BigInt,
    pub u2: BigInt,
    pub d: GroupElem,
}

/// Decides whether two positive elements are linearly dependent over `Z`,
/// returning the coprime `(u1, u2)` with `u2·d1 = u1·d2` and the common
/// divisor `d`.
pub fn dependent_pair(d1: &GroupElem, d2: &GroupElem) -> Result<Option<DependentPair>> {
    d1.check_rank(d2)?;
    d1.require_positive()?;
    d2.require_positive()?;
    let j = d1.lead_index().expect("positive");
    if d2.lead_index() != Some(j) {
        return Ok(None);
    }
    let g = d1.0[j].gcd(&d2.0[j]);
    let u1 = &d1.0[j] / &g;
    let u2 = &d2.0[j] / &g;
    if d1.times(&u2) != d2.times(&u1) {
        return Ok(None);
    }
    let d = GroupElem(d1.0.iter().map(|c| c / &u1).collect());
    Ok(Some(DependentPair { u1, u2, d }))
}

/// `gcd(d1,d2) = d` and `lcm(d1,d2) = u1·u2·d` for a dependent pair.
pub fn gcd_lcm(d1: &GroupElem, d2: &GroupElem) -> Result<(GroupElem, GroupElem)> {
    match dependent_pair(d1, d2)? {
        Some(DependentPair { u1, u2, d }) => {
            let lcm = d.times(&(&u1 * &u2));
            Ok((d, lcm))
        }
        None => Err(DegreeError::IndependentPair(d1.clone(), d2.clone())),
    }
}

/// The `m >= 1` with `d = m·e`, if any.
pub fn multiple_of(d: &GroupElem, e: &GroupElem) -> Result<Option<BigInt>> {
    Ok(dependent_pair(d, e)?.and_then(|p| p.u2.is_one().then_some(p.u1)))
}

/// Finds `(a, b)` with `a, b >= 0` and `a·e1 + b·e2 = d`, smallest `a` first.
pub fn semigroup_member(
    d: &GroupElem,
    e1: &GroupElem,
    e2: &GroupElem,
) -> Result<Option<(BigInt, BigInt)>> {
    d.check_rank(e1)?;
    e1.check_rank(e2)?;
    e1.require_positive()?;
    e2.require_positive()?;
    if d.is_zero() {
        return Ok(Some((BigInt::zero(), BigInt::zero())));
    }
    if !d.is_positive() {
        return Ok(None);
    }
    match dependent_pair(e1, e2)? {
        Some(DependentPair { u1, u2, d: g }) => {
            let Some(m) = multiple_of(d, &g)? else {
                return Ok(None);
            };
            Ok(coin_representation(&m, &u1, &u2))
        }
        None => Ok(solve_independent(d, e1, e2)),
    }
}

/// One-dimensional coin problem `a·u1 + b·u2 = m` with coprime `u1, u2`:
/// the smallest admissible `a` is the residue of `m·u1^{-1}` modulo `u2`.
fn coin_representation(m: &BigInt, u1: &BigInt, u2: &BigInt) -> Option<(BigInt, BigInt)> {
    let inv = mod_inverse(&u1.mod_floor(u2), u2);
    let a = (m.mod_floor(u2) * inv).mod_floor(u2);
    let rest = m - &a * u1;
    if rest.is_negative() {
        return None;
    }
    let b = rest / u2;
    Some((a, b))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    if m.is_one() {
        return BigInt::zero();
    }
    let ext = a.extended_gcd(m);
    debug_assert!(ext.gcd.is_one());
    ext.x.mod_floor(m)
}

fn solve_independent(d: &GroupElem, e1: &GroupElem, e2: &GroupElem) -> Option<(BigInt, BigInt)> {
    let k = d.rank();
    for i in 0..k {
        for j in (i + 1)..k {
            let det = &e1.0[i] * &e2.0[j] - &e1.0[j] * &e2.0[i];
            if det.is_zero() {
                continue;
            }
            let a_num = &d.0[i] * &e2.0[j] - &d.0[j] * &e2.0[i];
            let b_num = &e1.0[i] * &d.0[j] - &e1.0[j] * &d.0[i];
            if !a_num.is_multiple_of(&det) || !b_num.is_multiple_of(&det) {
                return None;
            }
            let a = a_num / &det;
            let b = b_num / &det;
            if a.is_negative() || b.is_negative() {
                return None;
            }
            if &e1.times(&a) + &e2.times(&b) != *d {
                return None;
            }
            return Some((a, b));
        }
    }
    None
}

/// Sylvester's formula `u1·u2 − u1 − u2`.
pub fn frobenius_number(u1: &BigInt, u2: &BigInt) -> Result<BigInt> {
    let two = BigInt::from(2);
    if u1 < &two || u2 < &two || !u1.gcd(u2).is_one() {
        return Err(DegreeError::BadFrobeniusInput(u1.clone(), u2.clone()));
    }
    Ok(u1 * u2 - u1 - u2)
}

/// Smallest `b >= 1` with `b·e > t`, or `None` when every multiple of `e`
/// stays below `t`.
pub fn least_multiple_exceeding(e: &GroupElem, t: &GroupElem) -> Result<Option<BigInt>> {
    e.check_rank(t)?;
    e.require_positive()?;
    let j = e.lead_index().expect("positive");
    // Coordinates before the lead of `e` are untouched by scaling.
    for c in &t.0[..j] {
        if c.is_negative() {
            return Ok(Some(BigInt::one()));
        }
        if c.is_positive() {
            return Ok(None);
        }
    }
    let tj = &t.0[j];
    let mut hi = if tj.is_negative() {
        BigInt::one()
    } else {
        tj / &e.0[j] + 1
    };
    let mut lo = BigInt::one();
    // b·e is strictly increasing in b; hi already exceeds t.
    while lo < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if e.times(&mid) > *t {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(Some(lo))
}

/// Minimum of `{a·e1 + b·e2 : a, b >= 1, a·e1 + b·e2 > t}`.
///
/// Staircase walk: for each multiplier of the generator with the earlier
/// lead coordinate, take the least multiple of the other generator that
/// clears `t`. The walk stops at the first step needing a single copy of
/// the other generator, since every later step is larger there.
pub fn least_combination_exceeding(
    e1: &GroupElem,
    e2: &GroupElem,
    t: &GroupElem,
) -> Result<Option<GroupElem>> {
    e1.check_rank(e2)?;
    e1.check_rank(t)?;
    e1.require_positive()?;
    e2.require_positive()?;
    // Walking over the other generator may never reach b = 1 when its lead
    // coordinate comes later.
    let (outer, inner) = if e1.lead_index() <= e2.lead_index() {
        (e1, e2)
    } else {
        (e2, e1)
    };
    if least_multiple_exceeding(outer, &(t - inner))?.is_none() {
        return Ok(None);
    }
    let mut best: Option<GroupElem> = None;
    let mut a = BigInt::one();
    loop {
        let base = outer.times(&a);
        if let Some(b) = least_multiple_exceeding(inner, &(t - &base))? {
            let candidate = &base + &inner.times(&b);
            if best.as_ref().is_none_or(|cur| candidate < *cur) {
                best = Some(candidate);
            }
            if b.is_one() {
                break;
            }
        }
        a += 1;
    }
    Ok(best)
}

/// `|w|_*`: with `w` sorted ascending as `(v1, v2, v3)`, the minimum of the
/// staircase `{γ ∈ N·v1 + N·v2 : γ > v1 + v3}` and `2·v1 + v3`.
pub fn w_star(w: &Weight) -> GroupElem {
    let [v1, v2, v3] = w.sorted();
    let fallback = &(&v1 + &v1) + &v3;
    let threshold = &v1 + &v3;
    match least_combination_exceeding(&v1, &v2, &threshold).expect("validated weight") {
        Some(g) if g < fallback => g,
        _ => fallback,
    }
}

/// Linear (in)dependence pattern of a degree triple over `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
    /// Pairs `(1,2)`, `(1,3)`, `(2,3)`.
    pub pairwise_dependent: [bool; 3],
    pub triple_dependent: bool,
}

impl RankProfile {
    pub fn pairwise_independent(&self) -> bool {
        self.pairwise_dependent.iter().all(|d| !d)
    }
}

pub fn rank_profile(d1: &GroupElem, d2: &GroupElem, d3: &GroupElem) -> Result<RankProfile> {
    d1.check_rank(d2)?;
    d1.check_rank(d3)?;
    let pair = |a: &GroupElem, b: &GroupElem| integer_rank(&[a, b]) < 2;
    Ok(RankProfile {
        pairwise_dependent: [pair(d1, d2), pair(d1, d3), pair(d2, d3)],
        triple_dependent: integer_rank(&[d1, d2, d3]) < 3,
    })
}

/// Rank of the matrix whose rows are the given elements. Rank over `Z`
/// equals rank over `Q`, so plain rational elimination decides it.
pub fn integer_rank(rows: &[&GroupElem]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.0.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in (rank + 1)..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[rank][col];
            for c in col..cols {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(c: &[i64]) -> GroupElem {
        GroupElem::from_i64s(c)
    }

    fn n(v: i64) -> GroupElem {
        GroupElem::int(v)
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(lex_compare(&g(&[1, 2]), &g(&[1, 3])).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&g(&[0, 5]), &g(&[1, 0])).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&g(&[4, -1]), &g(&[4, -1])).unwrap(), Ordering::Equal);
        assert_eq!(
            lex_compare(&g(&[1]), &g(&[1, 0])),
            Err(DegreeError::RankMismatch(1, 2))
        );
    }

    #[test]
    fn dependent_pair_examples() {
        let p = dependent_pair(&n(4), &n(10)).unwrap().unwrap();
        assert_eq!((p.u1, p.u2, p.d), (2.into(), 5.into(), n(2)));
        let p = dependent_pair(&g(&[2, 4]), &g(&[3, 6])).unwrap().unwrap();
        assert_eq!((p.u1, p.u2, p.d), (2.into(), 3.into(), g(&[1, 2])));
        assert_eq!(dependent_pair(&g(&[1, 0]), &g(&[0, 1])).unwrap(), None);
        assert!(matches!(
            dependent_pair(&n(0), &n(3)),
            Err(DegreeError::NotPositive(_))
        ));
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(gcd_lcm(&n(6), &n(9)).unwrap(), (n(3), n(18)));
        assert_eq!(gcd_lcm(&g(&[2, 4]), &g(&[3, 6])).unwrap(), (g(&[1, 2]), g(&[6, 12])));
        assert_eq!(gcd_lcm(&g(&[3, -1]), &g(&[3, -1])).unwrap(), (g(&[3, -1]), g(&[3, -1])));
        assert!(matches!(
            gcd_lcm(&g(&[1, 0]), &g(&[0, 1])),
            Err(DegreeError::IndependentPair(..))
        ));
    }

    #[test]
    fn multiple_of_examples() {
        assert_eq!(multiple_of(&n(12), &n(4)).unwrap(), Some(3.into()));
        assert_eq!(multiple_of(&g(&[2, 4]), &g(&[1, 2])).unwrap(), Some(2.into()));
        assert_eq!(multiple_of(&n(9), &n(6)).unwrap(), None);
        assert_eq!(multiple_of(&n(4), &n(12)).unwrap(), None);
    }

    #[test]
    fn semigroup_member_examples() {
        assert_eq!(semigroup_member(&n(17), &n(3), &n(4)).unwrap(), Some((3.into(), 2.into())));
        assert_eq!(semigroup_member(&n(7), &n(3), &n(5)).unwrap(), None);
        assert_eq!(
            semigroup_member(&g(&[1, 0, 1]), &g(&[1, 1, 0]), &g(&[1, -1, 2])).unwrap(),
            None
        );
        assert_eq!(
            semigroup_member(&g(&[2, 0, 2]), &g(&[1, 1, 0]), &g(&[1, -1, 2])).unwrap(),
            Some((1.into(), 1.into()))
        );
        // Dependent generators sharing a factor.
        assert_eq!(semigroup_member(&n(10), &n(4), &n(6)).unwrap(), Some((1.into(), 1.into())));
        assert_eq!(semigroup_member(&n(11), &n(4), &n(6)).unwrap(), None);
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_number(&3.into(), &5.into()).unwrap(), 7.into());
        assert_eq!(frobenius_number(&2.into(), &3.into()).unwrap(), 1.into());
        assert_eq!(frobenius_number(&3.into(), &4.into()).unwrap(), 5.into());
        assert!(frobenius_number(&4.into(), &6.into()).is_err());
        assert!(frobenius_number(&1.into(), &6.into()).is_err());
    }

    #[test]
    fn least_multiple_examples() {
        assert_eq!(least_multiple_exceeding(&n(3), &n(7)).unwrap(), Some(3.into()));
        assert_eq!(least_multiple_exceeding(&n(3), &n(-1)).unwrap(), Some(1.into()));
        assert_eq!(least_multiple_exceeding(&n(3), &n(6)).unwrap(), Some(3.into()));
        assert_eq!(least_multiple_exceeding(&g(&[0, 1]), &g(&[1, 0])).unwrap(), None);
        assert_eq!(
            least_multiple_exceeding(&g(&[1, -5]), &g(&[2, 0])).unwrap(),
            Some(3.into())
        );
    }

    #[test]
    fn least_combination_examples() {
        assert_eq!(least_combination_exceeding(&n(2), &n(3), &n(7)).unwrap(), Some(n(8)));
        assert_eq!(least_combination_exceeding(&n(1), &n(1), &n(2)).unwrap(), Some(n(3)));
        assert_eq!(least_combination_exceeding(&n(1), &n(2), &n(4)).unwrap(), Some(n(5)));
        // Outer generator with the later lead coordinate.
        assert_eq!(
            least_combination_exceeding(&g(&[0, 1]), &g(&[1, 0]), &g(&[3, 0])).unwrap(),
            Some(g(&[3, 1]))
        );
        assert_eq!(
            least_combination_exceeding(&g(&[0, 1]), &g(&[0, 2]), &g(&[1, 0])).unwrap(),
            None
        );
    }

    #[test]
    fn w_star_examples() {
        assert_eq!(w_star(&Weight::from_ints(1, 1, 1).unwrap()), n(3));
        assert_eq!(w_star(&Weight::from_ints(1, 2, 3).unwrap()), n(5));
        assert_eq!(w_star(&Weight::from_ints(2, 3, 5).unwrap()), n(8));
        assert_eq!(w_star(&Weight::from_ints(5, 3, 2).unwrap()), n(8));
    }

    #[test]
    fn rank_profile_examples() {
        let p = rank_profile(&g(&[1, 1, 0]), &g(&[1, -1, 2]), &g(&[1, 0, 1])).unwrap();
        assert!(p.pairwise_independent());
        assert!(p.triple_dependent);
        let p = rank_profile(&n(2), &n(4), &n(5)).unwrap();
        assert_eq!(p.pairwise_dependent, [true; 3]);
        assert!(p.triple_dependent);
        let p = rank_profile(&g(&[1, 0, 0]), &g(&[0, 1, 0]), &g(&[0, 0, 1])).unwrap();
        assert!(p.pairwise_independent());
        assert!(!p.triple_dependent);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("7".parse::<GroupElem>().unwrap(), n(7));
        assert_eq!("[1, 0,-2]".parse::<GroupElem>().unwrap(), g(&[1, 0, -2]));
        assert_eq!(g(&[1, 0, -2]).to_string(), "[1,0,-2]");
        assert!("1,2".parse::<GroupElem>().is_err());
        assert!("[1,x]".parse::<GroupElem>().is_err());
        assert!(Weight::from_ints(1, 0, 2).is_err());
    }

    #[test]
    fn neg_infinity_is_bottom() {
        assert!(DegreeValue::NegInfinity < DegreeValue::Finite(g(&[-100, 0])));
        let s = &DegreeValue::NegInfinity + &DegreeValue::Finite(n(4));
        assert!(s.is_neg_infinity());
    }

    #[test]
    fn group_lists() {
        let v = parse_group_list("1, [2,3] ,[-1,0]").unwrap();
        assert_eq!(v, vec![GroupElem::int(1), GroupElem::from_i64s(&[2, 3]), GroupElem::from_i64s(&[-1, 0])]);
        assert!(parse_group_list("[1,2").is_err());
        assert!(parse_group_list("1,,2").is_err());
        assert!(parse_group_list("1,2]").is_err());
    }
}
