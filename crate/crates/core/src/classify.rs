//! Exclusion criteria for multidegrees of tame automorphisms in three
//! variables, evaluated into explicit condition tables.
//!
//! Every `Δ_w(d, e)` appearing in a condition is replaced by a certified
//! lower bound (see [`delta_lower_bound`]). Since `Δ_w` only ever occurs on
//! the larger side of a strict inequality, a condition reported as holding
//! really holds; a failed condition only means "not certified".

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::automorphism::{is_prime, semigroup_witness, AutError, Endo, VerifiedWord, WitnessTemplate};
use crate::degree::{
    dependent_pair, gcd_lcm, integer_rank, multiple_of, parse_group_list, rank_profile,
    semigroup_member, w_star, DegreeError, DegreeValue, GroupElem, Weight, WeightVector,
};
use crate::poly::{wedge2_degree, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("not an automorphism: Jacobian {0} is not a nonzero constant")]
    NotAutomorphism(String),
    #[error("registry line {line}: {message}")]
    Registry { line: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Degree(#[from] DegreeError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T> = std::result::Result<T, ClassifyError>;

/// One evaluated condition: `lhs relation rhs`, and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionRow {
    pub condition: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub holds: bool,
}

fn row(
    condition: &str,
    lhs: impl Into<String>,
    relation: &str,
    rhs: impl Into<String>,
    holds: bool,
) -> ConditionRow {
    ConditionRow {
        condition: condition.to_string(),
        lhs: lhs.into(),
        relation: relation.to_string(),
        rhs: rhs.into(),
        holds,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    /// Conditions (a), (b), (c) on total degrees.
    TotalDegree,
    /// (K1), (K2), (A), (B) for a weight.
    MainWeighted,
    /// Integrally independent weights, conditions (1) and (2).
    IndependentWeights,
    /// A specific automorphism: (K1)–(K4) plus (K5) and the wedge
    /// inequality, or (K1)–(K4) with an independent lower pair.
    FSpecific,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A registry fact `Δ_w(d, e) >= bound`. Weight and pair are stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeltaEntry {
    pub weight: Vec<GroupElem>,
    pub pair: [GroupElem; 2],
    pub bound: GroupElem,
}

impl fmt::Display for DeltaEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Delta({},{})>={}", self.pair[0], self.pair[1], self.bound)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem: Theorem,
    pub conditions: Vec<ConditionRow>,
    pub delta_bounds_used: Vec<DeltaEntry>,
}

/// A verified tame word realizing the query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub word: VerifiedWord,
    pub template: Option<WitnessTemplate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Excluded(Certificate),
    Realizable(Witness),
    Unknown {
        reasons: Vec<String>,
        conditions: Vec<ConditionRow>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VerdictKind {
    Excluded,
    Realizable,
    Unknown,
    SearchFound,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Excluded(_) => VerdictKind::Excluded,
            Verdict::Realizable(_) => VerdictKind::Realizable,
            Verdict::Unknown { .. } => VerdictKind::Unknown,
        }
    }

    pub fn is_excluded(&self) -> bool {
        matches!(self, Verdict::Excluded(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Excluded(c) => Some(c),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Realizable(w) => Some(w),
            _ => None,
        }
    }

    /// Condition rows behind the verdict, if any.
    pub fn conditions(&self) -> &[ConditionRow] {
        match self {
            Verdict::Excluded(c) => &c.conditions,
            Verdict::Unknown { conditions, .. } => conditions,
            Verdict::Realizable(_) => &[],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    /// Degrees in the order they were asked.
    pub query: Vec<GroupElem>,
    pub weight: Weight,
    pub verdict: Verdict,
}

impl ClassificationResult {
    /// `Excluded (registry: Delta(4,6)>=4)`, `Realizable`, `Unknown`.
    pub fn headline(&self) -> String {
        match &self.verdict {
            Verdict::Excluded(c) if !c.delta_bounds_used.is_empty() => {
                let used: Vec<String> = c.delta_bounds_used.iter().map(ToString::to_string).collect();
                format!("Excluded (registry: {})", used.join(", "))
            }
            v => v.kind().to_string(),
        }
    }
}

/// Known lower bounds `Δ_w(d, e) >= b`, keyed by the ascending weight and
/// the unordered degree pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaBoundRegistry {
    entries: BTreeMap<(Vec<GroupElem>, [GroupElem; 2]), GroupElem>,
}

type RegistryKey = (Vec<GroupElem>, [GroupElem; 2]);

fn registry_key(w: &Weight, d: &GroupElem, e: &GroupElem) -> RegistryKey {
    let pair = if d <= e { [d.clone(), e.clone()] } else { [e.clone(), d.clone()] };
    (w.sorted().to_vec(), pair)
}

impl DeltaBoundRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `Δ_(1,1,1)(4, 6) >= 4`.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.insert(&Weight::standard(), &GroupElem::int(4), &GroupElem::int(6), GroupElem::int(4))
            .expect("valid built-in entry");
        r
    }

    /// Adds a bound, keeping the larger one when the key already exists.
    pub fn insert(&mut self, w: &Weight, d: &GroupElem, e: &GroupElem, bound: GroupElem) -> Result<()> {
        for x in [d, e, &bound] {
            if x.rank() != w.rank() {
                return Err(DegreeError::RankMismatch(w.rank(), x.rank()).into());
            }
        }
        for x in [d, e] {
            if !x.is_positive() {
                return Err(DegreeError::NotPositive(x.clone()).into());
            }
        }
        let slot = self.entries.entry(registry_key(w, d, e)).or_insert_with(|| bound.clone());
        if bound > *slot {
            *slot = bound;
        }
        Ok(())
    }

    pub fn lookup(&self, w: &Weight, d: &GroupElem, e: &GroupElem) -> Option<DeltaEntry> {
        let key = registry_key(w, d, e);
        self.entries.get(&key).map(|b| DeltaEntry { weight: key.0.clone(), pair: key.1.clone(), bound: b.clone() })
    }

    pub fn entries(&self) -> impl Iterator<Item = DeltaEntry> + '_ {
        self.entries.iter().map(|((w, p), b)| DeltaEntry { weight: w.clone(), pair: p.clone(), bound: b.clone() })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: &DeltaBoundRegistry) {
        for (k, b) in &other.entries {
            let slot = self.entries.entry(k.clone()).or_insert_with(|| b.clone());
            if b > slot {
                *slot = b.clone();
            }
        }
    }

    /// Parses lines `W1,W2,W3 ; D,E ; BOUND`. Blank lines and `#` comments
    /// are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut r = Self::empty();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| ClassifyError::Registry { line: i + 1, message };
            let parts: Vec<&str> = line.split(';').collect();
            if parts.len() != 3 {
                return Err(bad("expected `W1,W2,W3 ; D,E ; BOUND`".into()));
            }
            let ws = parse_group_list(parts[0]).map_err(|e| bad(e.to_string()))?;
            let w = Weight::try_from(ws).map_err(|e| bad(e.to_string()))?;
            let de = parse_group_list(parts[1]).map_err(|e| bad(e.to_string()))?;
            if de.len() != 2 {
                return Err(bad("expected exactly two degrees".into()));
            }
            let bound: GroupElem = parts[2].parse().map_err(|e: DegreeError| bad(e.to_string()))?;
            r.insert(&w, &de[0], &de[1], bound).map_err(|e| bad(e.to_string()))?;
        }
        Ok(r)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ClassifyError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Canonical text: one sorted line per entry.
    pub fn to_text(&self) -> String {
        let list = |v: &[GroupElem]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        self.entries
            .iter()
            .map(|((w, p), b)| format!("{} ; {} ; {b}\n", list(w), list(p)))
            .collect()
    }

    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeltaSource {
    /// `min_{i<j} (w_i + w_j)`.
    Floor,
    /// The `|w|_*` bound for non-multiple pairs.
    WStar,
    Registry,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaBound {
    pub value: GroupElem,
    pub source: DeltaSource,
    /// Set when the registry supplied the bound.
    pub entry: Option<DeltaEntry>,
}

/// The largest certified lower bound for `Δ_w(d, e)`.
pub fn delta_lower_bound(
    d: &GroupElem,
    e: &GroupElem,
    w: &Weight,
    registry: &DeltaBoundRegistry,
) -> Result<DeltaBound> {
    let [v1, v2, _] = w.sorted();
    let mut best = DeltaBound { value: &v1 + &v2, source: DeltaSource::Floor, entry: None };
    let outside = |x: &GroupElem| !w.components().contains(x);
    if multiple_of(d, e)?.is_none() && multiple_of(e, d)?.is_none() && (outside(d) || outside(e)) {
        let ws = w_star(w);
        if ws > best.value {
            best = DeltaBound { value: ws, source: DeltaSource::WStar, entry: None };
        }
    }
    if let Some(entry) = registry.lookup(w, d, e) {
        if entry.bound > best.value {
            best = DeltaBound { value: entry.bound.clone(), source: DeltaSource::Registry, entry: Some(entry) };
        }
    }
    Ok(best)
}

fn describe_delta(name: &str, b: &DeltaBound) -> String {
    match b.source {
        DeltaSource::Registry => format!("{name}>={} [registry]", b.value),
        DeltaSource::WStar => format!("{name}>={} [|w|_*]", b.value),
        DeltaSource::Floor => format!("{name}>={} [floor]", b.value),
    }
}

/// Conditions (a1), (a2), (b1), (b2), (c) for sorted positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalReport {
    pub degrees: [u64; 3],
    pub a1: bool,
    pub a2: bool,
    pub b1: bool,
    pub b2: bool,
    pub c: bool,
    /// The odd `s >= 3` with `s·d1 = 2·d3`, when there is one.
    pub odd_s: Option<u64>,
    pub rows: Vec<ConditionRow>,
}

impl TotalReport {
    pub fn a(&self) -> bool {
        self.a1 || self.a2
    }

    pub fn b(&self) -> bool {
        self.b1 || self.b2
    }

    pub fn theorem_applies(&self) -> bool {
        self.a() && self.b() && self.c
    }

    fn failed(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.a() {
            out.extend(["(a1)".to_string(), "(a2)".to_string()]);
        }
        if !self.b() {
            out.extend(["(b1)".to_string(), "(b2)".to_string()]);
        }
        if !self.c {
            out.push("(c)".into());
        }
        out
    }
}

fn require_sorted(d: [u64; 3]) -> Result<()> {
    if d[0] == 0 || d[0] > d[1] || d[1] > d[2] {
        return Err(ClassifyError::Input(format!(
            "expected sorted positive degrees, got ({},{},{})",
            d[0], d[1], d[2]
        )));
    }
    Ok(())
}

fn odd_quotient(num: u128, den: u128) -> Option<u128> {
    (num % den == 0).then_some(num / den).filter(|q| q % 2 == 1 && *q >= 3)
}

fn in_semigroup(t: u64, a: u64, b: u64) -> bool {
    semigroup_member(&GroupElem::int(t), &GroupElem::int(a), &GroupElem::int(b))
        .expect("positive generators")
        .is_some()
}

/// `gcd(d1,d2) <= 3` and `gcd(d1,d2) | d3`.
pub fn b1_gcd_form(d: [u64; 3]) -> bool {
    let g = d[0].gcd(&d[1]);
    g <= 3 && d[2] % g == 0
}

/// `gcd(d1,d2,d3) = gcd(d1,d2) <= 3`.
pub fn b1_original_form(d: [u64; 3]) -> bool {
    let g = d[0].gcd(&d[1]);
    g.gcd(&d[2]) == g && g <= 3
}

pub fn check_total_abc(d: [u64; 3]) -> Result<TotalReport> {
    require_sorted(d)?;
    let [d1, d2, d3] = d.map(u128::from);
    let mut rows = Vec::new();

    let odd_s = odd_quotient(2 * d3, d1);
    let a1 = 3 * d2 != 2 * d3 && odd_s.is_none();
    rows.push(if 3 * d2 == 2 * d3 {
        row("(a1)", format!("3*d2 = {}", 3 * d2), "=", format!("2*d3 = {}", 2 * d3), false)
    } else if let Some(s) = odd_s {
        row("(a1)", format!("s*d1 = {} (s = {s})", s * d1), "=", format!("2*d3 = {}", 2 * d3), false)
    } else {
        row(
            "(a1)",
            format!("3*d2 = {}, s*d1 for odd s >= 3", 3 * d2),
            "!=",
            format!("2*d3 = {}", 2 * d3),
            true,
        )
    });

    let a2 = d1 + d2 <= d3 + 2;
    rows.push(row("(a2)", format!("d1+d2 = {}", d1 + d2), "<=", format!("d3+2 = {}", d3 + 2), a2));

    let b1 = b1_gcd_form(d);
    debug_assert_eq!(b1, b1_original_form(d));
    let g = d1.gcd(&d2);
    rows.push(row(
        "(b1)",
        format!("gcd(d1,d2) = {g}"),
        "<= 3 and divides",
        format!("d3 = {d3}"),
        b1,
    ));
    let lcm = d1 / g * d2;
    let b2 = d1 + d2 + d3 <= lcm + 2;
    rows.push(row(
        "(b2)",
        format!("d1+d2+d3 = {}", d1 + d2 + d3),
        "<=",
        format!("lcm(d1,d2)+2 = {}", lcm + 2),
        b2,
    ));

    let divides = d2 % d1 == 0;
    rows.push(row("(c)", format!("d1 = {d1}"), "does not divide", format!("d2 = {d2}"), !divides));
    let member = in_semigroup(d[2], d[0], d[1]);
    rows.push(row("(c)", format!("d3 = {d3}"), "not in", format!("<{d1},{d2}>"), !member));
    let c = !divides && !member;

    Ok(TotalReport { degrees: d, a1, a2, b1, b2, c, odd_s: odd_s.map(|s| s as u64), rows })
}

/// The (K), (A) and (B) conditions for strictly ascending degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedReport {
    pub k: [bool; 5],
    pub a: [bool; 3],
    pub b_independent: bool,
    pub b: [bool; 2],
    pub w_star: GroupElem,
    pub rows: Vec<ConditionRow>,
    /// Registry entries that a holding condition depended on.
    pub delta_used: Vec<(String, DeltaEntry)>,
}

impl WeightedReport {
    pub fn a_holds(&self) -> bool {
        self.a.iter().any(|&x| x)
    }

    pub fn b_holds(&self) -> bool {
        self.b_independent || self.b.iter().any(|&x| x)
    }

    /// (K1), (K2), (A) and (B).
    pub fn main_theorem(&self) -> bool {
        self.k[0] && self.k[1] && self.a_holds() && self.b_holds()
    }

    fn failed_main(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, name) in ["(K1)", "(K2)"].iter().enumerate() {
            if !self.k[i] {
                out.push(name.to_string());
            }
        }
        if !self.a_holds() {
            out.extend(["(A1)", "(A2)", "(A3)"].map(String::from));
        }
        if !self.b_holds() {
            out.extend(["(B1)", "(B2)"].map(String::from));
        }
        out
    }

    fn rows_named(&self, names: &[&str]) -> Vec<ConditionRow> {
        self.rows.iter().filter(|r| names.contains(&r.condition.as_str())).cloned().collect()
    }

    fn used_by(&self, names: &[&str]) -> Vec<DeltaEntry> {
        let mut out: Vec<DeltaEntry> = Vec::new();
        for (cond, e) in &self.delta_used {
            if names.contains(&cond.as_str()) && !out.contains(e) {
                out.push(e.clone());
            }
        }
        out
    }
}

fn check_degrees(d: &[GroupElem], w: &Weight) -> Result<()> {
    for x in d {
        if x.rank() != w.rank() {
            return Err(DegreeError::RankMismatch(w.rank(), x.rank()).into());
        }
        if !x.is_positive() {
            return Err(DegreeError::NotPositive(x.clone()).into());
        }
    }
    Ok(())
}

fn odd_multiple(d1: &GroupElem, d3: &GroupElem) -> Result<Option<BigInt>> {
    let two_d3 = d3 + d3;
    Ok(multiple_of(&two_d3, d1)?.filter(|m| m.is_odd() && *m >= BigInt::from(3)))
}

pub fn check_weighted_conditions(
    d: &[GroupElem; 3],
    w: &Weight,
    registry: &DeltaBoundRegistry,
) -> Result<WeightedReport> {
    check_degrees(d, w)?;
    let [d1, d2, d3] = d;
    if !(d1 < d2 && d2 < d3) {
        return Err(ClassifyError::Input(format!("expected strictly ascending degrees, got ({d1},{d2},{d3})")));
    }
    let ws = w_star(w);
    let mut rows = Vec::new();
    let mut used = Vec::new();
    let sum = &(d1 + d2) + d3;
    let d12 = d1 + d2;
    let three_d2 = d2.times_u64(3);
    let two_d3 = d3.times_u64(2);
    let s = odd_multiple(d1, d3)?;

    let k1 = sum > w.total();
    rows.push(row("(K1)", format!("d1+d2+d3 = {sum}"), ">", format!("|w| = {}", w.total()), k1));

    let d2_mult = multiple_of(d2, d1)?;
    let d3_member = semigroup_member(d3, d1, d2)?;
    rows.push(row("(K2)", format!("d2 = {d2}"), "not in", format!("N*{d1}"), d2_mult.is_none()));
    rows.push(row("(K2)", format!("d3 = {d3}"), "not in", format!("<{d1},{d2}>"), d3_member.is_none()));
    let k2 = d2_mult.is_none() && d3_member.is_none();

    // (K3)
    let k3 = if three_d2 != two_d3 {
        rows.push(row("(K3)", format!("3*d2 = {three_d2}"), "!=", format!("2*d3 = {two_d3}"), true));
        true
    } else {
        let lb = delta_lower_bound(d2, d3, w, registry)?;
        let rhs = d3 + &lb.value;
        let holds = d12 < rhs;
        rows.push(row(
            "(K3)",
            format!("d1+d2 = {d12}"),
            "<",
            format!("d3+{} = {rhs}", describe_delta("Delta(d2,d3)", &lb)),
            holds,
        ));
        if let (true, Some(e)) = (holds, lb.entry) {
            used.push(("(K3)".to_string(), e));
        }
        holds
    };

    // (K4)
    let k4 = match &s {
        None => {
            rows.push(row("(K4)", "s*d1 for odd s >= 3", "!=", format!("2*d3 = {two_d3}"), true));
            true
        }
        Some(_) => {
            let lb = delta_lower_bound(d1, d3, w, registry)?;
            let rhs = d3 + &lb.value;
            let holds = d12 < rhs;
            rows.push(row(
                "(K4)",
                format!("d1+d2 = {d12}"),
                "<",
                format!("d3+{} = {rhs}", describe_delta("Delta(d1,d3)", &lb)),
                holds,
            ));
            if let (true, Some(e)) = (holds, lb.entry) {
                used.push(("(K4)".to_string(), e));
            }
            holds
        }
    };

    // (K5)
    let four_d1 = d1.times_u64(4);
    let k5 = if four_d1 != three_d2 {
        rows.push(row("(K5)", format!("4*d1 = {four_d1}"), "!=", format!("3*d2 = {three_d2}"), true));
        true
    } else {
        let (g, _) = gcd_lcm(d1, d2)?;
        let two_d1 = d1.times_u64(2);
        let lb = delta_lower_bound(&two_d1, d2, w, registry)?;
        let rhs = &g.times_u64(5) + &lb.value;
        let holds = *d3 < rhs;
        rows.push(row(
            "(K5)",
            format!("d3 = {d3}"),
            "<",
            format!("5*gcd(d1,d2)+{} = {rhs}", describe_delta("Delta(2*d1,d2)", &lb)),
            holds,
        ));
        if let (true, Some(e)) = (holds, lb.entry) {
            used.push(("(K5)".to_string(), e));
        }
        holds
    };

    // (A1)–(A3)
    let a1 = three_d2 != two_d3 && s.is_none();
    rows.push(match (&s, three_d2 == two_d3) {
        (_, true) => row("(A1)", format!("3*d2 = {three_d2}"), "=", format!("2*d3 = {two_d3}"), false),
        (Some(s), false) => row(
            "(A1)",
            format!("s*d1 = {} (s = {s})", d1.times(s)),
            "=",
            format!("2*d3 = {two_d3}"),
            false,
        ),
        (None, false) => row(
            "(A1)",
            format!("3*d2 = {three_d2}, s*d1 for odd s >= 3"),
            "!=",
            format!("2*d3 = {two_d3}"),
            true,
        ),
    });
    let mut a_branch = |name: &str, applies: bool, pair: (&GroupElem, &GroupElem), label: &str| -> Result<bool> {
        if !applies {
            return Ok(false);
        }
        let lb = delta_lower_bound(pair.0, pair.1, w, registry)?;
        let eff = if lb.value > ws { lb.value.clone() } else { ws.clone() };
        let rhs = d3 + &eff;
        let holds = d12 < rhs;
        rows.push(row(
            name,
            format!("d1+d2 = {d12}"),
            "<",
            format!("d3+max{{{}, |w|_*={ws}}} = {rhs}", describe_delta(label, &lb)),
            holds,
        ));
        if holds && lb.value > ws {
            if let Some(e) = lb.entry {
                used.push((name.to_string(), e));
            }
        }
        Ok(holds)
    };
    let a2 = a_branch("(A2)", three_d2 == two_d3, (d2, d3), "Delta(d2,d3)")?;
    let a3 = a_branch("(A3)", s.is_some(), (d1, d3), "Delta(d1,d3)")?;

    // (B)
    let (b_independent, b1, b2) = match dependent_pair(d1, d2)? {
        None => {
            rows.push(row("(B)", format!("d1 = {d1}, d2 = {d2}"), "independent over", "Z", true));
            (true, false, false)
        }
        Some(p) => {
            let g = p.d.clone();
            let lcm = g.times(&(&p.u1 * &p.u2));
            let in_ng = multiple_of(d3, &g)?.is_some();
            let b1 = g <= ws && in_ng;
            rows.push(row(
                "(B1)",
                format!("gcd(d1,d2) = {g}"),
                "<= |w|_* and divides",
                format!("|w|_* = {ws}, d3 = {d3}"),
                b1,
            ));
            let rhs = &lcm + &ws;
            let b2 = sum < rhs;
            rows.push(row("(B2)", format!("d1+d2+d3 = {sum}"), "<", format!("lcm(d1,d2)+|w|_* = {rhs}"), b2));
            (false, b1, b2)
        }
    };

    Ok(WeightedReport {
        k: [k1, k2, k3, k4, k5],
        a: [a1, a2, a3],
        b_independent,
        b: [b1, b2],
        w_star: ws,
        rows,
        delta_used: used,
    })
}

const MAIN_ROWS: [&str; 8] = ["(K1)", "(K2)", "(A1)", "(A2)", "(A3)", "(B)", "(B1)", "(B2)"];

fn main_certificate(report: &WeightedReport) -> Certificate {
    Certificate {
        theorem: Theorem::MainWeighted,
        conditions: report.rows_named(&MAIN_ROWS),
        delta_bounds_used: report.used_by(&MAIN_ROWS),
    }
}

fn dedup(v: Vec<String>) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for s in v {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Total-degree classification of a positive triple in any order.
pub fn classify_total(d: [u64; 3], registry: &DeltaBoundRegistry) -> Result<ClassificationResult> {
    if d.contains(&0) {
        return Err(ClassifyError::Input("degrees must be positive".into()));
    }
    let query: Vec<GroupElem> = d.iter().map(|&x| GroupElem::int(x)).collect();
    let weight = Weight::standard();
    let mut order = [0usize, 1, 2];
    order.sort_by_key(|&i| d[i]);
    let sorted = order.map(|i| d[i]);

    if let Some((verified, template)) = semigroup_witness(sorted)? {
        let word = if order == [0, 1, 2] {
            verified
        } else {
            let mut perm = [0usize; 3];
            for (pos, &k) in order.iter().enumerate() {
                perm[k] = pos;
            }
            let word = verified.word().clone().permute_components(&perm);
            VerifiedWord::verify(word, &query, weight.as_vector())?
        };
        let verdict = Verdict::Realizable(Witness { word, template: Some(template) });
        return Ok(ClassificationResult { query, weight, verdict });
    }

    let total = check_total_abc(sorted)?;
    if total.theorem_applies() {
        let cert = Certificate { theorem: Theorem::TotalDegree, conditions: total.rows, delta_bounds_used: vec![] };
        return Ok(ClassificationResult { query, weight, verdict: Verdict::Excluded(cert) });
    }

    let mut reasons = total.failed();
    let mut conditions = total.rows.clone();
    if sorted[0] < sorted[1] && sorted[1] < sorted[2] {
        let ds = sorted.map(GroupElem::int);
        let report = check_weighted_conditions(&ds, &weight, registry)?;
        if report.main_theorem() {
            return Ok(ClassificationResult { query, weight, verdict: Verdict::Excluded(main_certificate(&report)) });
        }
        reasons.extend(report.failed_main());
        conditions.extend(report.rows_named(&MAIN_ROWS));
    } else {
        reasons.push("(K1)".into());
    }
    let verdict = Verdict::Unknown { reasons: dedup(reasons), conditions };
    Ok(ClassificationResult { query, weight, verdict })
}

fn sort3(d: &[GroupElem; 3]) -> [GroupElem; 3] {
    let mut v = d.clone();
    v.sort();
    v
}

/// Conditions (1) and (2) for integrally independent weights, or `None`
/// when the weights are dependent.
fn independent_weights_rows(d: &[GroupElem; 3], w: &Weight) -> Result<Option<(bool, Vec<ConditionRow>)>> {
    let wc = w.components();
    let w_rank = integer_rank(&[&wc[0], &wc[1], &wc[2]]);
    if w_rank < 3 {
        return Ok(None);
    }
    let [d1, d2, d3] = d;
    let profile = rank_profile(d1, d2, d3)?;
    let mut rows = vec![row("(1)", format!("rank(w1,w2,w3) = {w_rank}"), "=", "3", true)];
    let c1 = profile.triple_dependent && profile.pairwise_independent();
    rows.push(row(
        "(1)",
        format!(
            "triple dependent: {}, pairwise dependent: {:?}",
            profile.triple_dependent, profile.pairwise_dependent
        ),
        "=",
        "true, [false, false, false]",
        c1,
    ));
    let mut c2 = true;
    for (i, j, l) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let member = semigroup_member(&d[i], &d[j], &d[l])?.is_some();
        rows.push(row(
            "(2)",
            format!("d{} = {}", i + 1, d[i]),
            "not in",
            format!("<{},{}>", d[j], d[l]),
            !member,
        ));
        c2 &= !member;
    }
    Ok(Some((c1 && c2, rows)))
}

/// Weighted classification. Never returns `Realizable`.
pub fn classify_weighted(
    d: &[GroupElem; 3],
    w: &Weight,
    registry: &DeltaBoundRegistry,
) -> Result<ClassificationResult> {
    check_degrees(d, w)?;
    let query = d.to_vec();
    let weight = w.clone();
    let sorted = sort3(d);
    let mut reasons = Vec::new();
    let mut conditions = Vec::new();

    if let Some((holds, rows)) = independent_weights_rows(&sorted, w)? {
        if holds {
            let cert = Certificate { theorem: Theorem::IndependentWeights, conditions: rows, delta_bounds_used: vec![] };
            return Ok(ClassificationResult { query, weight, verdict: Verdict::Excluded(cert) });
        }
        reasons.extend(rows.iter().filter(|r| !r.holds).map(|r| r.condition.clone()));
        conditions.extend(rows);
    }

    if sorted[0] < sorted[1] && sorted[1] < sorted[2] {
        let report = check_weighted_conditions(&sorted, w, registry)?;
        if report.main_theorem() {
            return Ok(ClassificationResult { query, weight, verdict: Verdict::Excluded(main_certificate(&report)) });
        }
        reasons.extend(report.failed_main());
        conditions.extend(report.rows_named(&MAIN_ROWS));
    } else {
        reasons.push("(K1)".into());
        conditions.push(row("(K1)", "d1 < d2 < d3", "strict", format!("{}, {}, {}", sorted[0], sorted[1], sorted[2]), false));
    }
    let verdict = Verdict::Unknown { reasons: dedup(reasons), conditions };
    Ok(ClassificationResult { query, weight, verdict })
}

/// Tries to certify that an automorphism is wild from its multidegree and
/// the exact degree of the wedge of its two lowest components.
pub fn certify_wild(f: &Endo, w: &Weight, registry: &DeltaBoundRegistry) -> Result<ClassificationResult> {
    if f.nvars() != 3 {
        return Err(ClassifyError::Input(format!("expected 3 components, got {}", f.nvars())));
    }
    let jac = f.jacobian_det()?;
    if !jac.constant_value().is_some_and(|c| !c.is_zero()) {
        return Err(ClassifyError::NotAutomorphism(jac.to_string()));
    }
    certify_wild_screened(f, w, registry)
}

/// [`certify_wild`] without the Jacobian screen, for maps already known to
/// be automorphisms (for instance realized tame words).
pub fn certify_wild_screened(f: &Endo, w: &Weight, registry: &DeltaBoundRegistry) -> Result<ClassificationResult> {
    if f.nvars() != 3 {
        return Err(ClassifyError::Input(format!("expected 3 components, got {}", f.nvars())));
    }
    let wv: &WeightVector = w.as_vector();
    let mdeg: Vec<GroupElem> = f
        .mdeg_w(wv)?
        .into_iter()
        .map(|d| d.into_finite().expect("nonzero components of an automorphism"))
        .collect();
    let query = mdeg.clone();
    let weight = w.clone();
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| mdeg[i].cmp(&mdeg[j]));
    let d = order.map(|i| mdeg[i].clone());
    let unknown = |reasons: Vec<String>, conditions: Vec<ConditionRow>| ClassificationResult {
        query: query.clone(),
        weight: weight.clone(),
        verdict: Verdict::Unknown { reasons, conditions },
    };

    if !(d[0] < d[1] && d[1] < d[2]) {
        let r = row("(K1)", format!("sorted mdeg = ({},{},{})", d[0], d[1], d[2]), "strictly ascending", "", false);
        return Ok(unknown(vec!["(K1)".into()], vec![r]));
    }
    let report = check_weighted_conditions(&d, w, registry)?;
    let k_names = ["(K1)", "(K2)", "(K3)", "(K4)"];
    let mut rows = report.rows_named(&k_names);
    let failed: Vec<String> = (0..4).filter(|&i| !report.k[i]).map(|i| k_names[i].to_string()).collect();
    if !failed.is_empty() {
        return Ok(unknown(failed, rows));
    }

    let mut used_names = k_names.to_vec();
    match dependent_pair(&d[0], &d[1])? {
        None => {
            rows.push(row("(B)", format!("d1 = {}, d2 = {}", d[0], d[1]), "independent over", "Z", true));
        }
        Some(p) => {
            rows.extend(report.rows_named(&["(K5)"]));
            used_names.push("(K5)");
            let lcm = p.d.times(&(&p.u1 * &p.u2));
            let lo = &f.components()[order[0]];
            let mid = &f.components()[order[1]];
            let wedge = wedge2_degree(lo, mid, wv)?;
            let sum = &(&d[0] + &d[1]) + &d[2];
            let holds = match &wedge {
                DegreeValue::Finite(g) => sum < &lcm + g,
                DegreeValue::NegInfinity => false,
            };
            let rhs = match &wedge {
                DegreeValue::Finite(g) => format!("lcm(d1,d2)+deg(df1^df2) = {lcm}+{g} = {}", &lcm + g),
                DegreeValue::NegInfinity => "-inf".into(),
            };
            rows.push(row("(wedge)", format!("d1+d2+d3 = {sum}"), "<", rhs, holds));
            let mut failed = Vec::new();
            if !report.k[4] {
                failed.push("(K5)".to_string());
            }
            if !holds {
                failed.push("(wedge)".to_string());
            }
            if !failed.is_empty() {
                return Ok(unknown(failed, rows));
            }
        }
    }
    let cert = Certificate {
        theorem: Theorem::FSpecific,
        conditions: rows,
        delta_bounds_used: report.used_by(&used_names),
    };
    Ok(ClassificationResult { query, weight, verdict: Verdict::Excluded(cert) })
}

/// Reduced degrees `d_i' = d_i / gcd(d1,d2,d3)` and conditions (1)–(6),
/// each of which implies (a) under (c).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub reduced: [u64; 3],
    pub conditions: [bool; 6],
    pub c_holds: bool,
}

impl LemmaReport {
    pub fn any(&self) -> bool {
        self.conditions.iter().any(|&x| x)
    }

    /// Some condition holds and (c) holds, so (a) follows.
    pub fn certifies_a(&self) -> bool {
        self.c_holds && self.any()
    }
}

pub fn lemma_a_conditions(d: [u64; 3]) -> Result<LemmaReport> {
    require_sorted(d)?;
    let [d1, d2, d3] = d.map(u128::from);
    let g = d1.gcd(&d2).gcd(&d3);
    let [r1, r2, r3] = [d1 / g, d2 / g, d3 / g];
    let odd = |x: u128| x % 2 == 1;
    let conditions = [
        odd(r1) && (odd(r2) || r3 % 3 != 0),
        d1 != 2 * d1.gcd(&d3) && odd(r2),
        r1 % 4 == 0 && odd(r2) && odd(r3),
        is_prime(d[2]),
        d3 + 2 >= d2 + d1,
        odd(r1) && (3 * d2 != 2 * d3 || 2 * d1 <= d2 + 5),
    ];
    let c_holds = d2 % d1 != 0 && !in_semigroup(d[2], d[0], d[1]);
    Ok(LemmaReport { reduced: [r1 as u64, r2 as u64, r3 as u64], conditions, c_holds })
}

/// Named exclusion corollaries, each evaluated through the classifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corollary {
    /// `d1 <= d2 <= d3` with the (b) alternative and one of the six
    /// reduced-degree conditions.
    KarasGeneral,
    /// `d3 >= d2 >= d1 >= 3`, `d1`, `d2` odd and coprime.
    KarasZygadlo,
    /// `(3, d2, d3)` with `d3 >= d2 >= 3`.
    Karas3,
    /// `d1` prime with one of three side conditions.
    SunChen,
    /// `(4, d2, d3)` with `d2` odd.
    Karas4,
    /// `d2` prime or `d3` prime variants.
    LiDu,
    /// `(a, a+d, a+2d)` with `4d != t·a` for odd `t`.
    Progression,
    /// `(4l, 4l+tl, 4l+2tl)` with `t` odd and `(t−4)l + 2 >= 0`.
    ProgressionExt,
    /// `(d, 2(d−2), 3(d−2))` for `d >= 5`, `d != 6, 8`.
    ShiftedMultiples,
    /// Weighted: `d3 >= d2 > d1 >= 3`, `d1`, `d2` odd and coprime.
    Kanehira,
}

impl Corollary {
    pub const ALL: [Corollary; 10] = [
        Corollary::KarasGeneral,
        Corollary::KarasZygadlo,
        Corollary::Karas3,
        Corollary::SunChen,
        Corollary::Karas4,
        Corollary::LiDu,
        Corollary::Progression,
        Corollary::ProgressionExt,
        Corollary::ShiftedMultiples,
        Corollary::Kanehira,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Corollary::KarasGeneral => "karas-general",
            Corollary::KarasZygadlo => "karas-zygadlo",
            Corollary::Karas3 => "karas-3",
            Corollary::SunChen => "sun-chen",
            Corollary::Karas4 => "karas-4",
            Corollary::LiDu => "li-du",
            Corollary::Progression => "progression",
            Corollary::ProgressionExt => "progression-ext",
            Corollary::ShiftedMultiples => "shifted-multiples",
            Corollary::Kanehira => "kanehira",
        }
    }

    pub fn from_name(s: &str) -> Option<Corollary> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Argument names, in order.
    pub fn params(&self) -> &'static [&'static str] {
        match self {
            Corollary::Karas3 | Corollary::Karas4 => &["D2", "D3"],
            Corollary::Progression | Corollary::ProgressionExt => &["A", "D"],
            Corollary::ShiftedMultiples => &["D"],
            Corollary::Kanehira => &["D1", "D2", "D3", "W1", "W2", "W3"],
            _ => &["D1", "D2", "D3"],
        }
    }
}

impl fmt::Display for Corollary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryOutcome {
    pub corollary: Corollary,
    pub triple: [u64; 3],
    /// What the corollary asserts: `Some(true)` realizable, `Some(false)`
    /// not realizable, `None` when it makes no claim.
    pub predicted_realizable: Option<bool>,
    pub result: ClassificationResult,
}

impl CorollaryOutcome {
    pub fn agrees(&self) -> bool {
        match self.predicted_realizable {
            Some(true) => matches!(self.result.verdict, Verdict::Realizable(_)),
            Some(false) => self.result.verdict.is_excluded(),
            None => !self.result.verdict.is_excluded(),
        }
    }
}

fn hyp(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(ClassifyError::Hypothesis(what.to_string()))
    }
}

pub fn corollary_suite(c: Corollary, inputs: &[u64]) -> Result<CorollaryOutcome> {
    let params = c.params();
    if inputs.len() != params.len() {
        return Err(ClassifyError::Input(format!(
            "{} takes {} arguments ({}), got {}",
            c,
            params.len(),
            params.join(" "),
            inputs.len()
        )));
    }
    let registry = DeltaBoundRegistry::builtin();
    let semigroup = |d: [u64; 3]| d[1] % d[0] == 0 || in_semigroup(d[2], d[0], d[1]);
    let odd = |x: u64| x % 2 == 1;
    let sorted3 = |d: [u64; 3], min: u64| -> Result<()> {
        hyp(d[0] >= min && d[0] <= d[1] && d[1] <= d[2], &format!("d3 >= d2 >= d1 >= {min}"))
    };

    let (triple, predicted) = match c {
        Corollary::KarasGeneral => {
            let d = [inputs[0], inputs[1], inputs[2]];
            sorted3(d, 1)?;
            let g = d[0].gcd(&d[1]);
            let lcm = d[0] / g * d[1];
            hyp(
                b1_original_form(d) || u128::from(d[0]) + u128::from(d[1]) + u128::from(d[2]) <= u128::from(lcm) + 2,
                "gcd(d1,d2,d3) = gcd(d1,d2) <= 3 or d1+d2+d3 <= lcm(d1,d2)+2",
            )?;
            hyp(lemma_a_conditions(d)?.any(), "one of the reduced-degree conditions (1)-(6)")?;
            (d, Some(semigroup(d)))
        }
        Corollary::KarasZygadlo => {
            let d = [inputs[0], inputs[1], inputs[2]];
            sorted3(d, 3)?;
            hyp(odd(d[0]) && odd(d[1]), "d1 and d2 odd")?;
            hyp(d[0].gcd(&d[1]) == 1, "gcd(d1,d2) = 1")?;
            (d, Some(in_semigroup(d[2], d[0], d[1])))
        }
        Corollary::Karas3 => {
            let d = [3, inputs[0], inputs[1]];
            hyp(d[1] >= 3 && d[2] >= d[1], "d3 >= d2 >= 3")?;
            (d, Some(semigroup(d)))
        }
        Corollary::SunChen => {
            let d = [inputs[0], inputs[1], inputs[2]];
            sorted3(d, 3)?;
            hyp(is_prime(d[0]), "d1 prime")?;
            let g = d[1].gcd(&d[2]);
            hyp(
                d[1] / g != 2 || d[2] / g != 3 || d[1] + 5 >= 2 * d[0],
                "d2/gcd(d2,d3) != 2 or d3/gcd(d2,d3) != 3 or d2 >= 2*d1-5",
            )?;
            (d, Some(semigroup(d)))
        }
        Corollary::Karas4 => {
            let d = [4, inputs[0], inputs[1]];
            hyp(d[1] >= 5 && d[2] >= d[1], "d3 >= d2 >= 5")?;
            hyp(odd(d[1]), "d2 odd")?;
            if !odd(d[2]) {
                hyp(d[2] - d[1] != 1, "d3 - d2 != 1 when d3 is even")?;
            }
            (d, Some(in_semigroup(d[2], 4, d[1])))
        }
        Corollary::LiDu => {
            let d = [inputs[0], inputs[1], inputs[2]];
            sorted3(d, 3)?;
            if d[0] / d[0].gcd(&d[2]) != 2 && is_prime(d[1]) {
                (d, Some(d[0] == d[1] || in_semigroup(d[2], d[0], d[1])))
            } else if d[0].gcd(&d[1]) == 1 && is_prime(d[2]) {
                (d, Some(in_semigroup(d[2], d[0], d[1])))
            } else {
                return Err(ClassifyError::Hypothesis(
                    "d1/gcd(d1,d3) != 2 with d2 prime, or gcd(d1,d2) = 1 with d3 prime".into(),
                ));
            }
        }
        Corollary::Progression => {
            let (a, dd) = (inputs[0], inputs[1]);
            hyp(a >= 3 && dd >= 1, "a >= 3 and d >= 1")?;
            let t_odd = (4 * u128::from(dd)) % u128::from(a) == 0 && ((4 * u128::from(dd)) / u128::from(a)) % 2 == 1;
            hyp(!t_odd, "4d != t*a for every odd t >= 1")?;
            ([a, a + dd, a + 2 * dd], Some((2 * dd) % a == 0))
        }
        Corollary::ProgressionExt => {
            let (a, dd) = (inputs[0], inputs[1]);
            hyp(a >= 3 && dd >= 1, "a >= 3 and d >= 1")?;
            hyp(a % 4 == 0, "a = 4l")?;
            let l = a / 4;
            hyp(dd % l == 0 && odd(dd / l), "d = t*l with t odd")?;
            let t = (dd / l) as i128;
            hyp((t - 4) * l as i128 + 2 >= 0, "(t-4)l+2 >= 0")?;
            ([a, a + dd, a + 2 * dd], Some((2 * dd) % a == 0))
        }
        Corollary::ShiftedMultiples => {
            let dd = inputs[0];
            hyp(dd >= 5 && dd != 6 && dd != 8, "d >= 5 and d != 6, 8")?;
            ([dd, 2 * (dd - 2), 3 * (dd - 2)], Some(false))
        }
        Corollary::Kanehira => {
            let d = [inputs[0], inputs[1], inputs[2]];
            hyp(d[0] >= 3 && d[0] < d[1] && d[1] <= d[2], "d3 >= d2 > d1 >= 3")?;
            hyp(odd(d[0]) && odd(d[1]), "d1 and d2 odd")?;
            hyp(d[0].gcd(&d[1]) == 1, "gcd(d1,d2) = 1")?;
            let ws = &inputs[3..];
            hyp(ws.iter().all(|&x| x >= 1), "positive weights")?;
            hyp(d.iter().sum::<u64>() > ws.iter().sum::<u64>(), "d1+d2+d3 > |w|")?;
            let w = Weight::from_ints(ws[0] as i64, ws[1] as i64, ws[2] as i64)?;
            let predicted = (!in_semigroup(d[2], d[0], d[1])).then_some(false);
            let result = classify_weighted(&d.map(GroupElem::int), &w, &registry)?;
            return Ok(CorollaryOutcome { corollary: c, triple: d, predicted_realizable: predicted, result });
        }
    };
    let result = classify_total(triple, &registry)?;
    Ok(CorollaryOutcome { corollary: c, triple, predicted_realizable: predicted, result })
}
