//! Corpus enumeration, statement verification, open-problem scans and
//! machine-readable reports.
//!
//! Reports are deterministic: with an identical configuration the JSON and
//! CSV outputs are byte-identical (fixed ordering, no timestamps). Corpus
//! checking is parallel over graphs; results are collected back in corpus
//! order before any output is produced.

pub mod catalog;
mod enumerate;
mod search;

pub use enumerate::{enumerate_graphs, enumerate_up_to, ClassTag, ENUMERATION_MAX_N};
pub use search::{
    parse_pattern, pattern_settled_identical, search_counterexample, Finding, GapRow, Problem,
    RatioRow, ScanCertificate, SearchReport,
};

use catalog::{Params, Statement};

use crate::graph::{read_graph6_file, to_graph6, Graph};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

/// At most this many tight witnesses are kept per statement report.
pub const TIGHT_WITNESS_CAP: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

/// One (statement, graph) evaluation row. Failures are retained verbatim so
/// they can be reproduced standalone from the graph6 string.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub statement: String,
    pub graph6: String,
    pub values: BTreeMap<&'static str, usize>,
    pub bound: i64,
    pub verdict: Verdict,
}

/// Aggregated outcome of one statement instantiation over a corpus.
#[derive(Clone, Debug, Serialize)]
pub struct StatementReport {
    pub id: String,
    pub params: ParamsOut,
    pub applicable: usize,
    pub pass: usize,
    pub fail: usize,
    pub tight_witnesses: Vec<String>,
    pub fails: Vec<ReportRecord>,
    #[serde(skip)]
    pub per_n: BTreeMap<usize, PerNCounts>,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct PerNCounts {
    pub applicable: usize,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ParamsOut {
    pub r: Option<usize>,
    pub s: Option<usize>,
}

impl ParamsOut {
    fn for_statement(stmt: &Statement, p: Params) -> ParamsOut {
        ParamsOut {
            r: stmt.uses_r().then_some(p.r),
            s: stmt.uses_s().then_some(p.s),
        }
    }
}

/// Evaluates one statement instantiation on every corpus graph, in corpus
/// order. Failures are data, not errors.
pub fn check_statement(stmt: &Statement, corpus: &[Graph], params: Params) -> Vec<ReportRecord> {
    corpus
        .par_iter()
        .map(|g| {
            let graph6 = to_graph6(g);
            if !stmt.applicable(g, params) {
                return ReportRecord {
                    statement: stmt.id.to_string(),
                    graph6,
                    values: BTreeMap::new(),
                    bound: 0,
                    verdict: Verdict::Inapplicable,
                };
            }
            let lhs = stmt.lhs.solve(g);
            let rhs = stmt.rhs.solve(g);
            let (Some(lhs), Some(rhs)) = (lhs, rhs) else {
                return ReportRecord {
                    statement: stmt.id.to_string(),
                    graph6,
                    values: BTreeMap::new(),
                    bound: 0,
                    verdict: Verdict::Inapplicable,
                };
            };
            let (pass, _) = stmt.holds(lhs.size, rhs.size, params);
            let mut values = BTreeMap::new();
            values.insert(stmt.lhs.name(), lhs.size);
            values.insert(stmt.rhs.name(), rhs.size);
            ReportRecord {
                statement: stmt.id.to_string(),
                graph6,
                values,
                bound: stmt.bound_value(rhs.size, params),
                verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            }
        })
        .collect()
}

/// Folds per-graph records into a statement report, collecting failures and
/// equality (tight) witnesses.
pub fn summarize(
    stmt: &Statement,
    params: Params,
    corpus: &[Graph],
    records: &[ReportRecord],
) -> StatementReport {
    let mut report = StatementReport {
        id: stmt.id.to_string(),
        params: ParamsOut::for_statement(stmt, params),
        applicable: 0,
        pass: 0,
        fail: 0,
        tight_witnesses: Vec::new(),
        fails: Vec::new(),
        per_n: BTreeMap::new(),
    };
    for (g, rec) in corpus.iter().zip(records) {
        let slot = report.per_n.entry(g.n()).or_default();
        match rec.verdict {
            Verdict::Inapplicable => {}
            Verdict::Pass => {
                report.applicable += 1;
                report.pass += 1;
                slot.applicable += 1;
                slot.pass += 1;
                let lhs = rec.values[stmt.lhs.name()];
                let rhs = rec.values[stmt.rhs.name()];
                let (_, equality) = stmt.holds(lhs, rhs, params);
                if equality && report.tight_witnesses.len() < TIGHT_WITNESS_CAP {
                    report.tight_witnesses.push(rec.graph6.clone());
                }
            }
            Verdict::Fail => {
                report.applicable += 1;
                report.fail += 1;
                slot.applicable += 1;
                slot.fail += 1;
                report.fails.push(rec.clone());
            }
        }
    }
    report
}

/// Where the verification corpus comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSource {
    /// Exhaustive internal enumeration of all graphs with `1..=max_n`
    /// vertices.
    Internal,
    /// One graph6 line per graph; graphs larger than `max_n` are skipped.
    File(PathBuf),
}

/// A full verification run: which statements, over which corpus, with which
/// parameters, writing reports where.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_n: usize,
    pub statements: String,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub corpus: CorpusSource,
    pub out_dir: PathBuf,
    pub jobs: Option<usize>,
}

#[derive(Serialize)]
struct ConfigOut<'a> {
    max_n: usize,
    corpus: String,
    statements: Vec<&'a str>,
    r: Option<usize>,
    s: Option<usize>,
    jobs: Option<usize>,
}

#[derive(Serialize)]
struct RunReport<'a> {
    config: ConfigOut<'a>,
    statements: Vec<StatementReport>,
}

/// Result of a verification run.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub fails: usize,
    pub statement_runs: usize,
    pub json_path: PathBuf,
    pub csv_path: PathBuf,
}

fn load_corpus(config: &RunConfig) -> Result<Vec<Graph>> {
    match &config.corpus {
        CorpusSource::Internal => {
            if config.max_n > ENUMERATION_MAX_N {
                return Err(Error::Unsupported(format!(
                    "internal enumeration is capped at n = {ENUMERATION_MAX_N}; use a corpus file for larger graphs"
                )));
            }
            enumerate_up_to(config.max_n, ClassTag::All)
        }
        CorpusSource::File(path) => {
            let graphs = read_graph6_file(path)?;
            Ok(graphs
                .into_iter()
                .filter(|g| g.n() <= config.max_n)
                .collect())
        }
    }
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(width) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(width.max(1))
                .build()
                .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Runs the configured statements over the corpus and writes
/// `report.json` and `summary.csv` into the output directory.
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    let statements = catalog::select(&config.statements)?;
    let corpus = load_corpus(config)?;

    let reports: Vec<StatementReport> = in_pool(config.jobs, || {
        let mut reports = Vec::new();
        for stmt in &statements {
            let grid = match (config.r, config.s) {
                (None, None) => stmt.default_param_grid(),
                (r, s) => {
                    let p = Params {
                        r: r.unwrap_or_else(|| stmt.r_min.unwrap_or(0)),
                        s: s.unwrap_or_else(|| stmt.s_min.unwrap_or(0)),
                    };
                    vec![p]
                }
            };
            for p in grid {
                if stmt.validate_params(p).is_err() {
                    continue;
                }
                let records = check_statement(stmt, &corpus, p);
                reports.push(summarize(stmt, p, &corpus, &records));
            }
        }
        reports
    })?;

    std::fs::create_dir_all(&config.out_dir)
        .map_err(|e| Error::io(config.out_dir.display().to_string(), e))?;
    let json_path = config.out_dir.join("report.json");
    let csv_path = config.out_dir.join("summary.csv");

    let config_out = ConfigOut {
        max_n: config.max_n,
        corpus: match &config.corpus {
            CorpusSource::Internal => "internal".to_string(),
            CorpusSource::File(p) => p.display().to_string(),
        },
        statements: statements.iter().map(|s| s.id).collect(),
        r: config.r,
        s: config.s,
        jobs: config.jobs,
    };
    let fails = reports.iter().map(|r| r.fail).sum();
    let statement_runs = reports.len();
    let run_report = RunReport {
        config: config_out,
        statements: reports,
    };
    write_json(&json_path, &run_report)?;
    write_csv(&csv_path, &run_report.statements)?;

    Ok(RunOutcome {
        fails,
        statement_runs,
        json_path,
        csv_path,
    })
}

pub(crate) fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let body = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Unsupported(format!("serialization: {e}")))?;
    let mut file =
        std::fs::File::create(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    file.write_all(body.as_bytes())
        .and_then(|()| file.write_all(b"\n"))
        .map_err(|e| Error::io(path.display().to_string(), e))
}

fn write_csv(path: &Path, reports: &[StatementReport]) -> Result<()> {
    let mut body = String::from("statement,r,s,n,applicable,pass,fail\n");
    for report in reports {
        for (n, counts) in &report.per_n {
            let fmt_opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
            body.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                report.id,
                fmt_opt(report.params.r),
                fmt_opt(report.params.s),
                n,
                counts.applicable,
                counts.pass,
                counts.fail
            ));
        }
    }
    std::fs::write(path, body).map_err(|e| Error::io(path.display().to_string(), e))
}
