//! Corpus runs: one CSV row per graph file plus a per-size summary.

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context as _;
use oneplanar_core::planarity::is_planar;
use oneplanar_core::{analyze, analyze_with_oracle, write_embedding, InstanceRecord, SearchConfig, Verdict};
use rayon::prelude::*;

use crate::parse::{parse_graph_file, Format};

pub const CSV_HEADER: [&str; 15] = [
    "name",
    "n",
    "m",
    "density",
    "blocks",
    "verdict",
    "crossings",
    "time_ms",
    "backtracked",
    "nodes",
    "cuts_dec",
    "cuts_kec",
    "cuts_nonplanar",
    "sol_satur",
    "sol_compl",
];

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "ONEPLANAR_THREADS";

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub cfg: SearchConfig,
    pub format: Format,
    /// Decide blocks by exhaustive enumeration instead of the search.
    pub oracle: bool,
    /// Leave planar graphs out of the results.
    pub skip_planar: bool,
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Done(Box<InstanceRecord>),
    /// Planar, and planar inputs were asked to be skipped.
    SkippedPlanar,
    Error {
        n: Option<usize>,
        m: Option<usize>,
        message: String,
    },
}

#[derive(Debug, Clone)]
pub struct Row {
    pub name: String,
    pub outcome: Outcome,
    /// Serialized certificate, for 1-planar results.
    pub embedding: Option<String>,
}

/// Tests one graph file.
pub fn run_file(path: &Path, opts: &RunOptions) -> Row {
    let name = path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    let error =
        |n, m, message: String| Row { name: name.clone(), outcome: Outcome::Error { n, m, message }, embedding: None };
    let g = match parse_graph_file(path, opts.format) {
        Ok(g) => g,
        Err(e) => return error(None, None, e.to_string()),
    };
    if opts.skip_planar && is_planar(&g) {
        return Row { name, outcome: Outcome::SkippedPlanar, embedding: None };
    }
    let report = if opts.oracle {
        match analyze_with_oracle(&g, &name) {
            Ok(r) => r,
            Err(e) => return error(Some(g.n()), Some(g.m()), e.to_string()),
        }
    } else {
        analyze(&g, &opts.cfg, &name)
    };
    Row {
        embedding: report.embedding.as_ref().map(write_embedding),
        name,
        outcome: Outcome::Done(Box::new(report.record)),
    }
}

/// Worker count: `requested`, else `ONEPLANAR_THREADS`, else rayon's default
/// (reported as 0).
pub fn worker_count(requested: Option<usize>) -> usize {
    requested.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse().ok())).unwrap_or(0)
}

/// Regular files directly inside `dir`, sorted by file name.
pub fn corpus_files(dir: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).with_context(|| format!("cannot read directory {}", dir.display()))? {
        let entry = entry?;
        if entry.file_type()?.is_file() {
            files.push(entry.path());
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

/// Tests every file of `dir` on a pool of `threads` workers (0: default).
/// Rows come back in file-name order whatever the worker count.
pub fn run_corpus(dir: &Path, opts: &RunOptions, threads: usize) -> anyhow::Result<Vec<Row>> {
    let files = corpus_files(dir)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    Ok(pool.install(|| files.par_iter().map(|f| run_file(f, opts)).collect()))
}

fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::OnePlanar => "OnePlanar",
        Verdict::NotOnePlanar => "NotOnePlanar",
        Verdict::Unknown => "Unknown",
    }
}

/// CSV with [`CSV_HEADER`]; skipped rows are omitted.
pub fn write_csv<W: Write>(rows: &[Row], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
    for row in rows {
        match &row.outcome {
            Outcome::SkippedPlanar => {}
            Outcome::Error { n, m, .. } => {
                let density = match (n, m) {
                    (Some(n), Some(m)) if *n > 0 => format!("{:.4}", *m as f64 / *n as f64),
                    _ => String::new(),
                };
                let mut rec = vec![row.name.clone(), opt(*n), opt(*m), density, String::new(), "Error".into()];
                rec.resize(CSV_HEADER.len(), String::new());
                w.write_record(&rec)?;
            }
            Outcome::Done(r) => {
                let s = &r.stats;
                w.write_record([
                    r.name.clone(),
                    r.n.to_string(),
                    r.m.to_string(),
                    format!("{:.4}", r.density),
                    r.block_count.to_string(),
                    verdict_label(r.verdict).to_string(),
                    opt(r.crossings),
                    format!("{:.3}", r.elapsed_ms()),
                    r.solved_by_backtracking.to_string(),
                    s.nodes_visited.to_string(),
                    s.cuts.dec.to_string(),
                    s.cuts.kec.to_string(),
                    s.cuts.nonplanar.to_string(),
                    s.solutions.satur.to_string(),
                    s.solutions.compl.to_string(),
                ])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Writes `<dir>/<name>.emb` for every row that has a certificate.
pub fn write_embeddings(rows: &[Row], dir: &Path) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    for row in rows {
        if let Some(text) = &row.embedding {
            let path = dir.join(format!("{}.emb", row.name));
            std::fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Spread {
    pub avg: f64,
    pub sd: f64,
    pub max: f64,
}

impl Spread {
    fn of(xs: &[f64]) -> Self {
        if xs.is_empty() {
            return Self::default();
        }
        let avg = xs.iter().sum::<f64>() / xs.len() as f64;
        let var = xs.iter().map(|x| (x - avg).powi(2)).sum::<f64>() / xs.len() as f64;
        Self { avg, sd: var.sqrt(), max: xs.iter().copied().fold(f64::MIN, f64::max) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bucket {
    pub label: &'static str,
    pub instances: usize,
    /// Decided as 1-planar or not.
    pub solved: usize,
    pub one_planar: usize,
    pub errors: usize,
    /// Over all tested instances, in milliseconds.
    pub runtime_ms: Spread,
    /// Over 1-planar instances.
    pub crossings: Spread,
}

impl Bucket {
    pub fn solved_pct(&self) -> f64 {
        pct(self.solved, self.instances - self.errors)
    }

    /// Share of solved instances that are 1-planar.
    pub fn one_planar_pct(&self) -> f64 {
        pct(self.one_planar, self.solved)
    }
}

fn pct(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        100.0 * a as f64 / b as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub buckets: Vec<Bucket>,
    pub skipped: usize,
}

const BUCKETS: [(&str, usize, usize); 4] = [("10-20", 10, 20), ("21-30", 21, 30), ("31-40", 31, 40), ("41-50", 41, 50)];

fn bucket_label(n: usize) -> &'static str {
    BUCKETS.iter().find(|&&(_, lo, hi)| (lo..=hi).contains(&n)).map_or("other", |b| b.0)
}

/// Groups rows by vertex count; buckets without instances are left out.
pub fn summarize(rows: &[Row]) -> Summary {
    let labels = BUCKETS.iter().map(|b| b.0).chain(["other"]);
    let mut buckets = Vec::new();
    for label in labels {
        let mut b = Bucket {
            label,
            instances: 0,
            solved: 0,
            one_planar: 0,
            errors: 0,
            runtime_ms: Spread::default(),
            crossings: Spread::default(),
        };
        let (mut times, mut crossings) = (Vec::new(), Vec::new());
        for row in rows {
            match &row.outcome {
                Outcome::Done(r) if bucket_label(r.n) == label => {
                    b.instances += 1;
                    times.push(r.elapsed_ms());
                    if r.verdict != Verdict::Unknown {
                        b.solved += 1;
                    }
                    if let Some(c) = r.crossings {
                        b.one_planar += 1;
                        crossings.push(c as f64);
                    }
                }
                Outcome::Error { n, .. } if n.map_or("other", bucket_label) == label => {
                    b.instances += 1;
                    b.errors += 1;
                }
                _ => {}
            }
        }
        if b.instances > 0 {
            b.runtime_ms = Spread::of(&times);
            b.crossings = Spread::of(&crossings);
            buckets.push(b);
        }
    }
    let skipped = rows.iter().filter(|r| matches!(r.outcome, Outcome::SkippedPlanar)).count();
    Summary { buckets, skipped }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<7} {:>5} {:>7} {:>9} {:>6} {:>10} {:>10} {:>10} {:>7} {:>7} {:>5}",
            "n", "count", "solved%", "1planar%", "errors", "avg_ms", "sd_ms", "max_ms", "avg_cr", "sd_cr", "max_cr"
        )?;
        for b in &self.buckets {
            writeln!(
                f,
                "{:<7} {:>5} {:>7.1} {:>9.1} {:>6} {:>10.2} {:>10.2} {:>10.2} {:>7.2} {:>7.2} {:>5}",
                b.label,
                b.instances,
                b.solved_pct(),
                b.one_planar_pct(),
                b.errors,
                b.runtime_ms.avg,
                b.runtime_ms.sd,
                b.runtime_ms.max,
                b.crossings.avg,
                b.crossings.sd,
                b.crossings.max,
            )?;
        }
        if self.skipped > 0 {
            writeln!(f, "skipped planar: {}", self.skipped)?;
        }
        Ok(())
    }
}
