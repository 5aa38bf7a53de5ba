//! `tamedeg`: decide which degree triples can be multidegrees of tame
//! automorphisms of three-space.
//!
//! Exit codes: 0 the command ran (the verdict is in the output), 1 a failure
//! while running, 2 a usage error, 3 bad input.

mod report;

// Like `print!`, but a closed pipe ends output quietly instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use tamedeg_core::automorphism::{realize, AutError, Endo};
use tamedeg_core::classify::{
    certify_wild, classify_total, classify_weighted, corollary_suite, ClassifyError, Corollary, DeltaBoundRegistry,
    Verdict, VerdictKind,
};
use tamedeg_core::degree::{frobenius_number, parse_group_list, w_star, DegreeError, GroupElem, Weight};
use tamedeg_core::poly::{parse_polynomial, ParseError};
use tamedeg_core::search::{
    consistency_check, persist, realizability_table, run_search, steps_to_word, SearchConfig, SearchError,
};

use report::{witness_doc, Report};

#[derive(Parser)]
#[command(name = "tamedeg", version, about = "Multidegrees of tame automorphisms of k^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a total-degree triple.
    Classify {
        d1: u64,
        d2: u64,
        d3: u64,
        /// Registry file of Delta lower bounds, or `empty` for none.
        #[arg(long)]
        registry: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a degree triple under a weight.
    ClassifyWeighted {
        /// `D1,D2,D3`; vector entries are written `[a,b]`.
        #[arg(long)]
        deg: String,
        /// `W1,W2,W3`, same syntax as `--deg`.
        #[arg(long)]
        weight: String,
        /// Expected coordinate count of every entry.
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        registry: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Try to certify that a given automorphism is wild.
    CertifyWild {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
        #[arg(long)]
        f3: String,
        #[arg(long, default_value = "1,1,1")]
        weight: String,
        #[arg(long)]
        registry: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print a tame word realizing a triple from the semigroup side.
    Witness {
        d1: u64,
        d2: u64,
        d3: u64,
        /// Re-realize the printed word and check its multidegree and Jacobian.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// The staircase invariant of a weight.
    Wstar {
        w1: String,
        w2: String,
        w3: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Frobenius number of two coprime generators.
    Frobenius { u1: String, u2: String },
    /// Generate tame words and append classified records to a file.
    Search {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        registry: Option<String>,
    },
    /// Check the classifier against generated tame words.
    Check {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        registry: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate verdicts for every ascending triple up to a degree.
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long, default_value = "1,1,1")]
        weight: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Search config whose words upgrade Unknown entries.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        registry: Option<String>,
    },
    /// Evaluate a named corollary on its arguments.
    Corollary {
        name: String,
        args: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Runtime(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Runtime(_) => 1,
            Failure::Input(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Runtime(m) => m,
        }
    }
}

impl From<DegreeError> for Failure {
    fn from(e: DegreeError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(format!("polynomial {e}"))
    }
}

impl From<AutError> for Failure {
    fn from(e: AutError) -> Self {
        match e {
            AutError::Input(_) | AutError::InvalidStep(_) | AutError::Poly(_) => Failure::Input(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Aut(a) => a.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Classify(c) => c.into(),
            SearchError::Aut(a) => Failure::Runtime(a.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

/// Built-in registry, nothing for `empty`, or the built-in one merged with a
/// file.
fn registry(arg: Option<&str>) -> Result<DeltaBoundRegistry, Failure> {
    let mut reg = DeltaBoundRegistry::builtin();
    match arg {
        None => {}
        Some("empty") => reg = DeltaBoundRegistry::empty(),
        Some(path) => reg.merge(&DeltaBoundRegistry::load(path.as_ref())?),
    }
    Ok(reg)
}

fn nonzero(d: [u64; 3]) -> Result<[u64; 3], Failure> {
    if d.contains(&0) {
        return Err(Failure::Input("degrees must be positive".into()));
    }
    Ok(d)
}

/// Parses a comma list and checks that every entry has the same rank, and
/// the forced one if given.
fn group_list(what: &str, text: &str, rank: Option<usize>) -> Result<Vec<GroupElem>, Failure> {
    let v = parse_group_list(text)?;
    check_ranks(what, &v, rank)?;
    Ok(v)
}

fn check_ranks(what: &str, v: &[GroupElem], rank: Option<usize>) -> Result<usize, Failure> {
    let r = rank.or_else(|| v.first().map(GroupElem::rank)).unwrap_or(1);
    if let Some(bad) = v.iter().find(|g| g.rank() != r) {
        return Err(Failure::Input(format!("{what}: entry {bad} has rank {} but rank {r} is required", bad.rank())));
    }
    Ok(r)
}

fn weight(text: &str, rank: Option<usize>) -> Result<Weight, Failure> {
    Ok(Weight::try_from(group_list("weight", text, rank)?)?)
}

fn emit(report: &mut Report, started: Instant, json: bool) {
    report.timings.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    if json {
        outln!("{}", report.to_json());
    } else {
        out!("{}", report.to_human());
    }
}

fn run(command: Command) -> Outcome {
    let started = Instant::now();
    match command {
        Command::Classify { d1, d2, d3, registry: reg, json } => {
            let reg = registry(reg.as_deref())?;
            let result = classify_total(nonzero([d1, d2, d3])?, &reg)?;
            emit(&mut Report::from_result("classify", &result, reg.fingerprint()), started, json);
            Ok(0)
        }
        Command::ClassifyWeighted { deg, weight: w, rank, registry: reg, json } => {
            let reg = registry(reg.as_deref())?;
            let degrees = group_list("degrees", &deg, rank)?;
            let w = weight(&w, rank)?;
            let d: [GroupElem; 3] = degrees
                .try_into()
                .map_err(|v: Vec<_>| Failure::Input(format!("expected three degrees, got {}", v.len())))?;
            check_ranks("degrees", &d, Some(w.get(0).rank()))?;
            let result = classify_weighted(&d, &w, &reg)?;
            emit(&mut Report::from_result("classify-weighted", &result, reg.fingerprint()), started, json);
            Ok(0)
        }
        Command::CertifyWild { f1, f2, f3, weight: w, registry: reg, json } => {
            let reg = registry(reg.as_deref())?;
            let w = weight(&w, None)?;
            let comps = [&f1, &f2, &f3].map(|s| parse_polynomial(s, 3));
            let comps = comps.into_iter().collect::<Result<Vec<_>, _>>()?;
            let f = Endo::new(comps)?;
            let result = certify_wild(&f, &w, &reg)?;
            let mut report = Report::from_result("certify-wild", &result, reg.fingerprint());
            report.query.components = Some(f.components().iter().map(ToString::to_string).collect());
            emit(&mut report, started, json);
            Ok(0)
        }
        Command::Witness { d1, d2, d3, verify, json } => witness([d1, d2, d3], verify, json, started),
        Command::Wstar { w1, w2, w3, rank } => {
            let parts = [&w1, &w2, &w3].map(|s| s.parse::<GroupElem>());
            let parts = parts.into_iter().collect::<Result<Vec<_>, _>>()?;
            check_ranks("weight", &parts, rank)?;
            outln!("{}", w_star(&Weight::try_from(parts)?));
            Ok(0)
        }
        Command::Frobenius { u1, u2 } => {
            let parse = |s: &str| s.parse().map_err(|_| Failure::Input(format!("{s:?} is not an integer")));
            outln!("{}", frobenius_number(&parse(&u1)?, &parse(&u2)?)?);
            Ok(0)
        }
        Command::Search { config, out, registry: reg } => {
            let reg = registry(reg.as_deref())?;
            let cfg = SearchConfig::load(&config)?;
            let (records, stats) = run_search(&cfg, &reg)?;
            persist(&records, &out)?;
            let mut counts = std::collections::BTreeMap::new();
            for r in &records {
                *counts.entry(r.verdict).or_insert(0usize) += 1;
            }
            outln!("words: {} (attempted {}, duplicates {})", stats.emitted, stats.attempted, stats.duplicates);
            outln!("pruned: {} by term budget, {} by degree cap", stats.pruned_term_budget, stats.pruned_degree_cap);
            outln!("records: {} appended to {}", records.len(), out.display());
            for (k, n) in counts {
                outln!("  {k}: {n}");
            }
            Ok(0)
        }
        Command::Check { config, registry: reg, json } => {
            let reg = registry(reg.as_deref())?;
            let cfg = SearchConfig::load(&config)?;
            let report = consistency_check(&cfg, &reg)?;
            if json {
                outln!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else {
                outln!("words: {}  checks: {}", report.words, report.checks);
                for (k, n) in &report.verdict_counts {
                    outln!("  {k}: {n}");
                }
                outln!("excluded multidegrees: {}", report.violations.len());
                outln!("wildness certificates: {}", report.wild_certificates.len());
                outln!("degree floor failures: {}", report.degree_floor_failures);
                for v in report.violations.iter().chain(&report.wild_certificates) {
                    outln!("violation at word {}: {} under {}", v.index, v.realization, v.weight);
                }
                outln!("{}", if report.is_clean() { "consistent" } else { "INCONSISTENT" });
            }
            Ok(if report.is_clean() { 0 } else { 1 })
        }
        Command::Table { max, weight: w, out, config, registry: reg } => {
            let reg = registry(reg.as_deref())?;
            let w = weight(&w, Some(1))?;
            let cfg = config.as_deref().map(SearchConfig::load).transpose()?;
            let table = realizability_table(max, &w, cfg.as_ref(), &reg)?;
            let mut csv = String::from("d1,d2,d3,verdict\n");
            for e in &table.entries {
                let [a, b, c] = &e.triple;
                let _ = writeln!(csv, "{a},{b},{c},{}", e.kind);
            }
            match &out {
                Some(path) => std::fs::write(path, &csv)
                    .map_err(|e| Failure::Runtime(format!("writing {}: {e}", path.display())))?,
                None => out!("{csv}"),
            }
            let summary: Vec<String> = [
                VerdictKind::Excluded,
                VerdictKind::Realizable,
                VerdictKind::SearchFound,
                VerdictKind::Unknown,
            ]
            .iter()
            .map(|k| format!("{k} {}", table.count(*k)))
            .collect();
            let line = format!("{} triples: {}", table.entries.len(), summary.join(", "));
            if out.is_some() {
                outln!("{line}");
            } else {
                eprintln!("{line}");
            }
            for d in &table.conflicts {
                eprintln!("conflict: search realized excluded ({},{},{})", d[0], d[1], d[2]);
            }
            Ok(if table.conflicts.is_empty() { 0 } else { 1 })
        }
        Command::Corollary { name, args, json } => {
            let c = Corollary::from_name(&name).ok_or_else(|| {
                let names: Vec<&str> = Corollary::ALL.iter().map(Corollary::name).collect();
                Failure::Input(format!("unknown corollary {name:?}; known: {}", names.join(", ")))
            })?;
            let outcome = corollary_suite(c, &args)?;
            let fp = DeltaBoundRegistry::builtin().fingerprint();
            let mut report = Report::from_result("corollary", &outcome.result, fp).with_corollary(&outcome);
            emit(&mut report, started, json);
            Ok(0)
        }
    }
}

fn witness(d: [u64; 3], verify: bool, json: bool, started: Instant) -> Outcome {
    let reg = DeltaBoundRegistry::builtin();
    let result = classify_total(nonzero(d)?, &reg)?;
    let Verdict::Realizable(w) = &result.verdict else {
        eprintln!(
            "no semigroup witness for ({},{},{}): d1 does not divide d2 and d3 is not in <d1,d2> after sorting",
            d[0], d[1], d[2]
        );
        return Ok(1);
    };
    let doc = witness_doc(&w.word, w.template.as_ref());
    let mut verified = None;
    if verify {
        // Rebuild from the printed steps, not from the in-memory word.
        let word = steps_to_word(&doc.steps)?;
        let f = realize(&word)?;
        let mdeg = f.mdeg();
        let jac = f.jacobian_det()?.constant_value().filter(|c| c.numer().bits() != 0);
        let ok = mdeg == d.map(Some) && jac.is_some();
        verified = Some((ok, mdeg, jac));
    }
    let mut report = Report::from_result("witness", &result, reg.fingerprint());
    emit(&mut report, started, json);
    if !json {
        outln!("jacobian: {}", doc.jacobian);
    }
    match verified {
        Some((true, _, _)) => {
            let line = format!("mdeg verified: ({},{},{})", d[0], d[1], d[2]);
            if json { eprintln!("{line}") } else { outln!("{line}") }
            Ok(0)
        }
        Some((false, mdeg, jac)) => {
            let shown: Vec<String> = mdeg.iter().map(|m| m.map_or("-inf".into(), |x| x.to_string())).collect();
            let jac = jac.map_or("not a nonzero constant".into(), |c| c.to_string());
            eprintln!("verification FAILED: realized mdeg ({}), jacobian {jac}", shown.join(","));
            Ok(1)
        }
        None => Ok(0),
    }
}
