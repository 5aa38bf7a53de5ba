//! Bounded generation of tame words, the falsification check against the
//! classifier, realizability tables and line-delimited record files.
//!
//! Randomized runs draw word `i` from a ChaCha stream keyed by the seed and
//! `i`, so the output does not depend on the number of worker threads.

use std::collections::{BTreeMap, HashSet};
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automorphism::{apply_step, AutError, ElementaryAut, Endo, RealizeBudget, TameWord};
use crate::classify::{
    certify_wild_screened, check_total_abc, classify_total, classify_weighted, Certificate, ClassifyError,
    DeltaBoundRegistry, Verdict, VerdictKind,
};
use crate::degree::{parse_group_list, GroupElem, Weight};
use crate::poly::{Monomial, Polynomial, Rational};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    Config(String),
    #[error("I/O error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("record line {line}: unsupported schema_version {found} (this build reads {expected})")]
    SchemaVersion { line: usize, found: u64, expected: u32 },
    #[error("record line {line}: {message}")]
    Record { line: usize, message: String },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Aut(#[from] AutError),
}

pub type Result<T> = std::result::Result<T, SearchError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Every word over the generator pool up to the length cap.
    Exhaustive,
    /// This many distinct in-budget words drawn at random.
    Randomized { sample_count: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub max_word_length: usize,
    /// Largest total degree of a shift monomial.
    pub shift_monomial_exponent_cap: u32,
    /// Largest number of monomials in a random shift.
    pub shift_term_count_cap: usize,
    pub coefficient_pool: Vec<Rational>,
    pub scale_pool: Vec<Rational>,
    pub weights: Vec<Weight>,
    /// Words whose partial realization exceeds this total degree are pruned.
    pub degree_cap: u64,
    pub term_budget: usize,
    pub seed: u64,
    pub mode: SearchMode,
    /// Randomized mode gives up after this many draws.
    pub max_attempts: Option<usize>,
    /// Worker threads; 0 means the rayon default.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        let int = |v: i64| Rational::from_integer(v.into());
        SearchConfig {
            max_word_length: 6,
            shift_monomial_exponent_cap: 4,
            shift_term_count_cap: 1,
            coefficient_pool: vec![int(1), int(-1)],
            scale_pool: vec![int(-1), int(2)],
            weights: vec![Weight::standard()],
            degree_cap: 256,
            term_budget: 200_000,
            seed: 0,
            mode: SearchMode::Randomized { sample_count: 1000 },
            max_attempts: None,
            workers: 0,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    max_word_length: Option<usize>,
    shift_monomial_exponent_cap: Option<u32>,
    shift_term_count_cap: Option<usize>,
    coefficient_pool: Option<Vec<String>>,
    scale_pool: Option<Vec<String>>,
    weights: Option<Vec<String>>,
    degree_cap: Option<u64>,
    term_budget: Option<usize>,
    seed: Option<u64>,
    mode: Option<String>,
    sample_count: Option<usize>,
    max_attempts: Option<usize>,
    workers: Option<usize>,
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse().ok()?;
            let q: num_bigint::BigInt = q.trim().parse().ok()?;
            (q != 0.into()).then(|| Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

impl SearchConfig {
    /// Reads a TOML config. Missing keys take the defaults.
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| SearchError::Config(e.to_string()))?;
        let mut c = SearchConfig::default();
        let bad = |m: String| SearchError::Config(m);
        if let Some(v) = raw.max_word_length {
            c.max_word_length = v;
        }
        if let Some(v) = raw.shift_monomial_exponent_cap {
            c.shift_monomial_exponent_cap = v;
        }
        if let Some(v) = raw.shift_term_count_cap {
            c.shift_term_count_cap = v;
        }
        let pool = |v: Vec<String>| -> Result<Vec<Rational>> {
            v.iter()
                .map(|s| parse_rational(s).ok_or_else(|| SearchError::Config(format!("bad rational {s:?}"))))
                .collect()
        };
        if let Some(v) = raw.coefficient_pool {
            c.coefficient_pool = pool(v)?;
        }
        if let Some(v) = raw.scale_pool {
            c.scale_pool = pool(v)?;
        }
        if let Some(ws) = raw.weights {
            c.weights = ws
                .iter()
                .map(|s| {
                    let parts = parse_group_list(s).map_err(|e| bad(e.to_string()))?;
                    Weight::try_from(parts).map_err(|e| bad(format!("weight {s:?}: {e}")))
                })
                .collect::<Result<_>>()?;
        }
        if let Some(v) = raw.degree_cap {
            c.degree_cap = v;
        }
        if let Some(v) = raw.term_budget {
            c.term_budget = v;
        }
        if let Some(v) = raw.seed {
            c.seed = v;
        }
        let samples = raw.sample_count.unwrap_or(1000);
        c.mode = match raw.mode.as_deref() {
            None | Some("randomized") => SearchMode::Randomized { sample_count: samples },
            Some("exhaustive") => SearchMode::Exhaustive,
            Some(other) => return Err(bad(format!("unknown mode {other:?}"))),
        };
        c.max_attempts = raw.max_attempts;
        if let Some(v) = raw.workers {
            c.workers = v;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| SearchError::Io { path: path.display().to_string(), source })?;
        Self::from_toml(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(SearchError::Config(m.to_string()));
        if self.shift_monomial_exponent_cap == 0 || self.shift_term_count_cap == 0 {
            return bad("shift caps must be positive");
        }
        if self.degree_cap == 0 || self.term_budget == 0 {
            return bad("degree cap and term budget must be positive");
        }
        if self.coefficient_pool.is_empty() || self.coefficient_pool.iter().any(|c| *c == Rational::from_integer(0.into())) {
            return bad("coefficient pool must be nonempty and free of zero");
        }
        if self.scale_pool.iter().any(|c| *c == Rational::from_integer(0.into())) {
            return bad("scales must be nonzero");
        }
        if self.weights.is_empty() {
            return bad("at least one weight is required");
        }
        if let SearchMode::Randomized { sample_count: 0 } = self.mode {
            return bad("sample_count must be positive");
        }
        Ok(())
    }

    fn budget(&self) -> RealizeBudget {
        RealizeBudget { max_terms: self.term_budget, max_total_degree: Some(self.degree_cap) }
    }

    fn in_pool<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.workers == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.workers).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// Monomials in the two variables other than `target`, with total degree
/// `1..=cap`.
fn shift_monomials(target: usize, cap: u32) -> Vec<Monomial> {
    let others: Vec<usize> = (0..3).filter(|&i| i != target).collect();
    let mut out = Vec::new();
    for deg in 1..=cap {
        for a in 0..=deg {
            let mut e = [0u32; 3];
            e[others[0]] = a;
            e[others[1]] = deg - a;
            out.push(Monomial::new(&e));
        }
    }
    out
}

/// The finite generator pool: single-monomial shears and scalings.
pub fn generator_pool(config: &SearchConfig) -> Vec<ElementaryAut> {
    let mut pool = Vec::new();
    for target in 0..3 {
        for m in shift_monomials(target, config.shift_monomial_exponent_cap) {
            for c in &config.coefficient_pool {
                let shift = Polynomial::term(3, m.clone(), c.clone());
                pool.push(ElementaryAut::shear(target, shift).expect("shift avoids the target"));
            }
        }
        for a in &config.scale_pool {
            pool.push(ElementaryAut::scaling(3, target, a.clone()).expect("nonzero scale"));
        }
    }
    pool
}

#[derive(Clone, Debug)]
pub struct GeneratedWord {
    /// Draw index in randomized mode, enumeration index otherwise.
    pub index: u64,
    pub word: TameWord,
    pub endo: Endo,
    pub fingerprint: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GenerateStats {
    pub attempted: usize,
    pub emitted: usize,
    pub pruned_term_budget: usize,
    pub pruned_degree_cap: usize,
    pub duplicates: usize,
}

fn random_step(rng: &mut ChaCha8Rng, config: &SearchConfig) -> ElementaryAut {
    let target = rng.random_range(0..3);
    if !config.scale_pool.is_empty() && rng.random_range(0..8) == 0 {
        let a = config.scale_pool[rng.random_range(0..config.scale_pool.len())].clone();
        return ElementaryAut::scaling(3, target, a).expect("nonzero scale");
    }
    let others: Vec<usize> = (0..3).filter(|&i| i != target).collect();
    loop {
        let terms = rng.random_range(1..=config.shift_term_count_cap);
        let mut shift = Polynomial::zero(3);
        for _ in 0..terms {
            let deg = rng.random_range(1..=config.shift_monomial_exponent_cap);
            let a = rng.random_range(0..=deg);
            let mut e = [0u32; 3];
            e[others[0]] = a;
            e[others[1]] = deg - a;
            let c = config.coefficient_pool[rng.random_range(0..config.coefficient_pool.len())].clone();
            shift = &shift + &Polynomial::term(3, Monomial::new(&e), c);
        }
        if !shift.is_zero() {
            return ElementaryAut::shear(target, shift).expect("shift avoids the target");
        }
    }
}

/// The random word with index `index`; depends only on the seed and index.
pub fn random_word(config: &SearchConfig, index: u64) -> TameWord {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index);
    let len = if config.max_word_length == 0 { 0 } else { rng.random_range(1..=config.max_word_length) };
    let steps = (0..len).map(|_| random_step(&mut rng, config)).collect();
    TameWord::from_steps(3, steps).expect("three-variable steps")
}

enum Draw {
    Ok(TameWord, Endo),
    TermBudget,
    DegreeCap,
}

fn realize_draw(word: TameWord, budget: &RealizeBudget) -> Draw {
    let mut endo = Endo::identity(3);
    for step in word.steps() {
        match apply_step(&mut endo, step, budget) {
            Ok(()) => {}
            Err(AutError::TermBudget { .. }) => return Draw::TermBudget,
            Err(AutError::DegreeCap { .. }) => return Draw::DegreeCap,
            Err(e) => panic!("unexpected realization failure: {e}"),
        }
    }
    Draw::Ok(word, endo)
}

/// Generates distinct (by canonical realization) words. Output order and
/// content depend only on the config, never on the thread count.
pub fn generate(config: &SearchConfig) -> Result<(Vec<GeneratedWord>, GenerateStats)> {
    config.validate()?;
    config.in_pool(|| match config.mode {
        SearchMode::Randomized { sample_count } => Ok(generate_random(config, sample_count)),
        SearchMode::Exhaustive => Ok(generate_exhaustive(config)),
    })
}

fn generate_random(config: &SearchConfig, sample_count: usize) -> (Vec<GeneratedWord>, GenerateStats) {
    let budget = config.budget();
    let max_attempts = config.max_attempts.unwrap_or(sample_count.saturating_mul(20).max(1000));
    let mut stats = GenerateStats::default();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut next = 0u64;
    let batch = 256u64;
    while out.len() < sample_count && stats.attempted < max_attempts {
        let hi = (next + batch).min(max_attempts as u64);
        let draws: Vec<(u64, Draw)> = (next..hi)
            .into_par_iter()
            .map(|i| (i, realize_draw(random_word(config, i), &budget)))
            .collect();
        next = hi;
        for (index, draw) in draws {
            if out.len() >= sample_count {
                break;
            }
            stats.attempted += 1;
            match draw {
                Draw::TermBudget => stats.pruned_term_budget += 1,
                Draw::DegreeCap => stats.pruned_degree_cap += 1,
                Draw::Ok(word, endo) => {
                    let canon = endo.canonical_string();
                    if seen.insert(canon) {
                        let fingerprint = endo.fingerprint();
                        out.push(GeneratedWord { index, word, endo, fingerprint });
                    } else {
                        stats.duplicates += 1;
                    }
                }
            }
        }
    }
    stats.emitted = out.len();
    (out, stats)
}

fn generate_exhaustive(config: &SearchConfig) -> (Vec<GeneratedWord>, GenerateStats) {
    let budget = config.budget();
    let pool = generator_pool(config);
    let mut stats = GenerateStats::default();
    let identity = Endo::identity(3);
    let mut seen = HashSet::new();
    seen.insert(identity.canonical_string());
    let mut out = vec![GeneratedWord {
        index: 0,
        word: TameWord::identity(3),
        fingerprint: identity.fingerprint(),
        endo: identity,
    }];
    stats.attempted = 1;
    let mut frontier: Vec<usize> = vec![0];
    for _ in 0..config.max_word_length {
        let expansions: Vec<(TameWord, Draw)> = frontier
            .par_iter()
            .flat_map_iter(|&k| {
                let base = &out[k];
                pool.iter().map(move |g| {
                    let mut endo = base.endo.clone();
                    let mut word = base.word.clone();
                    word.push(g.clone());
                    let draw = match apply_step(&mut endo, g, &budget) {
                        Ok(()) => Draw::Ok(word.clone(), endo),
                        Err(AutError::TermBudget { .. }) => Draw::TermBudget,
                        Err(AutError::DegreeCap { .. }) => Draw::DegreeCap,
                        Err(e) => panic!("unexpected realization failure: {e}"),
                    };
                    (word, draw)
                })
            })
            .collect();
        let mut next = Vec::new();
        for (_, draw) in expansions {
            stats.attempted += 1;
            match draw {
                Draw::TermBudget => stats.pruned_term_budget += 1,
                Draw::DegreeCap => stats.pruned_degree_cap += 1,
                Draw::Ok(word, endo) => {
                    if seen.insert(endo.canonical_string()) {
                        let index = out.len() as u64;
                        let fingerprint = endo.fingerprint();
                        out.push(GeneratedWord { index, word, endo, fingerprint });
                        next.push(out.len() - 1);
                    } else {
                        stats.duplicates += 1;
                    }
                }
            }
        }
        frontier = next;
    }
    stats.emitted = out.len();
    (out, stats)
}

/// A classifier as seen by the harness: degrees in realized order.
pub type Classifier<'a> = dyn Fn(&[GroupElem; 3], &Weight) -> std::result::Result<Verdict, ClassifyError> + Sync + 'a;

/// `classify_total` for integer degrees under `(1,1,1)`, `classify_weighted`
/// otherwise.
pub fn classify_any(
    d: &[GroupElem; 3],
    w: &Weight,
    registry: &DeltaBoundRegistry,
) -> std::result::Result<Verdict, ClassifyError> {
    if *w == Weight::standard() {
        let ints: Option<Vec<u64>> = d.iter().map(|x| x.as_i64().and_then(|v| u64::try_from(v).ok())).collect();
        if let Some(v) = ints {
            return Ok(classify_total([v[0], v[1], v[2]], registry)?.verdict);
        }
    }
    Ok(classify_weighted(d, w, registry)?.verdict)
}

/// A total-degree classifier with condition (c) negated. Used to check
/// that the harness notices an unsound classifier.
pub fn corrupted_classifier(d: &[GroupElem; 3], _w: &Weight) -> std::result::Result<Verdict, ClassifyError> {
    let mut v: Vec<u64> = d.iter().map(|x| x.as_i64().unwrap_or(1).max(1) as u64).collect();
    v.sort();
    let r = check_total_abc([v[0], v[1], v[2]])?;
    if r.a() && r.b() && !r.c {
        Ok(Verdict::Excluded(Certificate {
            theorem: crate::classify::Theorem::TotalDegree,
            conditions: r.rows,
            delta_bounds_used: vec![],
        }))
    } else {
        Ok(Verdict::Unknown { reasons: vec![], conditions: vec![] })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    /// One-based.
    pub target: usize,
    pub scale: String,
    pub shift: String,
}

pub fn word_to_steps(word: &TameWord) -> Vec<StepRecord> {
    word.steps()
        .iter()
        .map(|s| {
            let (target, scale, shift) = s.to_parts();
            StepRecord { target, scale, shift }
        })
        .collect()
}

pub fn steps_to_word(steps: &[StepRecord]) -> std::result::Result<TameWord, AutError> {
    let steps = steps
        .iter()
        .map(|s| ElementaryAut::from_parts(3, s.target, &s.scale, &s.shift))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    TameWord::from_steps(3, steps)
}

/// A generated multidegree whose classification came back as a proof of
/// non-realizability, or a tame word certified wild.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub index: u64,
    pub word: Vec<StepRecord>,
    pub realization: String,
    pub weight: String,
    pub mdeg: Vec<GroupElem>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyReport {
    pub words: usize,
    pub checks: usize,
    pub generation: GenerateStats,
    pub verdict_counts: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    pub wild_certificates: Vec<Violation>,
    /// Sorted degrees failing to dominate the sorted weights.
    pub degree_floor_failures: usize,
}

impl ConsistencyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.wild_certificates.is_empty() && self.degree_floor_failures == 0
    }
}

pub fn consistency_check(config: &SearchConfig, registry: &DeltaBoundRegistry) -> Result<ConsistencyReport> {
    let classifier = |d: &[GroupElem; 3], w: &Weight| classify_any(d, w, registry);
    consistency_check_with(config, registry, &classifier)
}

/// Generates words and checks every (word, weight): the classifier must not
/// exclude the realized multidegree and `certify_wild` must not certify the
/// realized map.
pub fn consistency_check_with(
    config: &SearchConfig,
    registry: &DeltaBoundRegistry,
    classifier: &Classifier<'_>,
) -> Result<ConsistencyReport> {
    let (words, stats) = generate(config)?;
    type Outcome = (VerdictKind, Option<Violation>, Option<Violation>, bool);
    let outcomes: Vec<Outcome> = config.in_pool(|| {
        words
            .par_iter()
            .flat_map_iter(|g| config.weights.iter().map(move |w| (g, w)))
            .map(|(g, w)| check_one(g, w, registry, classifier))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut report = ConsistencyReport {
        words: words.len(),
        checks: outcomes.len(),
        generation: stats,
        verdict_counts: BTreeMap::new(),
        violations: Vec::new(),
        wild_certificates: Vec::new(),
        degree_floor_failures: 0,
    };
    for (kind, violation, wild, floor_ok) in outcomes {
        *report.verdict_counts.entry(kind.to_string()).or_default() += 1;
        report.violations.extend(violation);
        report.wild_certificates.extend(wild);
        if !floor_ok {
            report.degree_floor_failures += 1;
        }
    }
    Ok(report)
}

fn mdeg3(endo: &Endo, w: &Weight) -> [GroupElem; 3] {
    let m = endo.mdeg_w(w.as_vector()).expect("weight has three components");
    let g = |i: usize| m[i].finite().cloned().expect("automorphism components are nonzero");
    [g(0), g(1), g(2)]
}

fn check_one(
    g: &GeneratedWord,
    w: &Weight,
    registry: &DeltaBoundRegistry,
    classifier: &Classifier<'_>,
) -> Result<(VerdictKind, Option<Violation>, Option<Violation>, bool)> {
    let d = mdeg3(&g.endo, w);
    let mut sorted_d = d.clone();
    sorted_d.sort();
    let floor_ok = sorted_d.iter().zip(w.sorted().iter()).all(|(x, y)| x >= y);
    let violation_of = |certificate: Certificate| Violation {
        index: g.index,
        word: word_to_steps(&g.word),
        realization: g.endo.to_string(),
        weight: w.to_string(),
        mdeg: d.to_vec(),
        certificate,
    };
    let verdict = classifier(&d, w)?;
    let kind = verdict.kind();
    let violation = match verdict {
        Verdict::Excluded(c) => Some(violation_of(c)),
        _ => None,
    };
    let wild = match certify_wild_screened(&g.endo, w, registry)?.verdict {
        Verdict::Excluded(c) => Some(violation_of(c)),
        _ => None,
    };
    Ok((kind, violation, wild, floor_ok))
}

/// One line of a record file: a generated word, one weight, its multidegree
/// and the classifier's verdict at generation time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub schema_version: u32,
    pub seed: u64,
    pub index: u64,
    pub word: Vec<StepRecord>,
    pub word_fingerprint: String,
    pub weight: Weight,
    pub mdeg: Vec<GroupElem>,
    pub verdict: VerdictKind,
    pub registry_fingerprint: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl SearchRecord {
    /// Realizes the stored word and checks the stored multidegree.
    pub fn reverify(&self) -> bool {
        let Ok(word) = steps_to_word(&self.word) else { return false };
        let Ok(endo) = crate::automorphism::realize(&word) else { return false };
        let Ok(m) = endo.mdeg_w(self.weight.as_vector()) else { return false };
        m.len() == self.mdeg.len() && m.iter().zip(&self.mdeg).all(|(a, b)| a.finite() == Some(b))
    }
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

/// Generates words and classifies each under every configured weight.
pub fn run_search(config: &SearchConfig, registry: &DeltaBoundRegistry) -> Result<(Vec<SearchRecord>, GenerateStats)> {
    let (words, stats) = generate(config)?;
    let reg_fp = registry.fingerprint();
    let ts = now();
    let records = config.in_pool(|| {
        words
            .par_iter()
            .flat_map_iter(|g| config.weights.iter().map(move |w| (g, w)))
            .map(|(g, w)| {
                let d = mdeg3(&g.endo, w);
                let verdict = classify_any(&d, w, registry)?.kind();
                Ok(SearchRecord {
                    schema_version: SCHEMA_VERSION,
                    seed: config.seed,
                    index: g.index,
                    word: word_to_steps(&g.word),
                    word_fingerprint: g.fingerprint.clone(),
                    weight: w.clone(),
                    mdeg: d.to_vec(),
                    verdict,
                    registry_fingerprint: reg_fp.clone(),
                    timestamp: ts,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok((records, stats))
}

/// Appends records, one `write` call per line.
pub fn persist(records: &[SearchRecord], path: &Path) -> Result<()> {
    let io = |source| SearchError::Io { path: path.display().to_string(), source };
    let mut file = OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
    for r in records {
        let mut line = serde_json::to_string(r).expect("records serialize");
        line.push('\n');
        file.write_all(line.as_bytes()).map_err(io)?;
    }
    Ok(())
}

pub fn load(path: &Path) -> Result<Vec<SearchRecord>> {
    let io = |source| SearchError::Io { path: path.display().to_string(), source };
    let file = std::fs::File::open(path).map_err(io)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io)?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |message: String| SearchError::Record { line: i + 1, message };
        let value: serde_json::Value = serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
        let version = value
            .get("schema_version")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| bad("missing schema_version".into()))?;
        if version != u64::from(SCHEMA_VERSION) {
            return Err(SearchError::SchemaVersion { line: i + 1, found: version, expected: SCHEMA_VERSION });
        }
        out.push(serde_json::from_value(value).map_err(|e| bad(e.to_string()))?);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct TableEntry {
    /// Ascending.
    pub triple: [GroupElem; 3],
    pub kind: VerdictKind,
    pub witness: Option<TameWord>,
}

#[derive(Clone, Debug)]
pub struct RealizabilityTable {
    pub weight: Weight,
    pub entries: Vec<TableEntry>,
    /// Searched multidegrees in range that the classifier excluded.
    pub conflicts: Vec<[GroupElem; 3]>,
    pub search: Option<GenerateStats>,
}

impl RealizabilityTable {
    pub fn count(&self, kind: VerdictKind) -> usize {
        self.entries.iter().filter(|e| e.kind == kind).count()
    }

    pub fn get(&self, triple: [i64; 3]) -> Option<&TableEntry> {
        let t = triple.map(GroupElem::int);
        self.entries.iter().find(|e| e.triple == t)
    }
}

/// Tags every ascending integer triple with entries in `1..=max_degree`,
/// then upgrades `Unknown` entries hit by the search to `SearchFound`.
pub fn realizability_table(
    max_degree: u64,
    weight: &Weight,
    search: Option<&SearchConfig>,
    registry: &DeltaBoundRegistry,
) -> Result<RealizabilityTable> {
    if weight.rank() != 1 {
        return Err(SearchError::Config("tables cover integer weights only".into()));
    }
    let mut triples = Vec::new();
    for d1 in 1..=max_degree {
        for d2 in d1..=max_degree {
            for d3 in d2..=max_degree {
                triples.push([d1, d2, d3]);
            }
        }
    }
    let total = *weight == Weight::standard();
    let mut entries: Vec<TableEntry> = triples
        .par_iter()
        .map(|&t| {
            let g = t.map(GroupElem::int);
            let verdict = if total {
                classify_total(t, registry)?.verdict
            } else {
                classify_weighted(&g, weight, registry)?.verdict
            };
            let witness = verdict.witness().map(|w| w.word.word().clone());
            Ok(TableEntry { triple: g, kind: verdict.kind(), witness })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut conflicts = Vec::new();
    let mut stats = None;
    if let Some(cfg) = search {
        let (words, s) = generate(cfg)?;
        stats = Some(s);
        let index: BTreeMap<[GroupElem; 3], usize> =
            entries.iter().enumerate().map(|(i, e)| (e.triple.clone(), i)).collect();
        for g in &words {
            let mut d = mdeg3(&g.endo, weight);
            d.sort();
            let Some(&i) = index.get(&d) else { continue };
            let e = &mut entries[i];
            match e.kind {
                VerdictKind::Unknown => {
                    e.kind = VerdictKind::SearchFound;
                    e.witness = Some(g.word.clone());
                }
                VerdictKind::Excluded => conflicts.push(d),
                _ => {}
            }
        }
    }
    Ok(RealizabilityTable { weight: weight.clone(), entries, conflicts, search: stats })
}
