use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand};
use oneplanar_cli::bench::{self, Outcome, RunOptions};
use oneplanar_cli::Format;
use oneplanar_core::{SearchConfig, Verdict};

/// Exact 1-planarity testing.
#[derive(Parser)]
#[command(name = "oneplanar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test a single graph file.
    Test {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// Write the certificate to this file when the graph is 1-planar.
        #[arg(long, value_name = "PATH")]
        emit_embedding: Option<PathBuf>,
    },
    /// Test every file of a directory and write a CSV row per file.
    Bench {
        dir: PathBuf,
        #[arg(long, value_name = "CSV")]
        out: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// Directory receiving one `<name>.emb` certificate per 1-planar graph.
        #[arg(long, value_name = "DIR")]
        emit_embedding: Option<PathBuf>,
        /// Worker threads; defaults to ONEPLANAR_THREADS, then to the CPU count.
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Time budget per graph, e.g. `90s`, `10m`, `3h`.
    #[arg(long, default_value = "3h", value_parser = humantime::parse_duration)]
    timeout: Duration,
    /// Largest skew set tried before the full search.
    #[arg(long, default_value_t = 1)]
    skew_size: usize,
    /// Probability of trying the no-more-crossings completion at a node.
    #[arg(long, default_value_t = 0.8, value_parser = probability)]
    completion_prob: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Disable kite-edge pruning.
    #[arg(long)]
    no_kite: bool,
    /// Disable the skew-edge pre-pass.
    #[arg(long)]
    no_skew: bool,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// Decide blocks by brute force (at most 20 crossable pairs per block).
    #[arg(long)]
    oracle: bool,
    /// Leave planar graphs out of the results.
    #[arg(long)]
    skip_planar: bool,
}

fn probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is not in [0, 1]"))
    }
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            cfg: SearchConfig {
                skew_set_size: self.skew_size,
                completion_probability: self.completion_prob,
                rng_seed: self.seed,
                time_budget: self.timeout,
                enable_kite_pruning: !self.no_kite,
                enable_skew_pass: !self.no_skew,
            },
            format: self.format,
            oracle: self.oracle,
            skip_planar: self.skip_planar,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Test { file, run, emit_embedding } => test(&file, &run, emit_embedding),
        Command::Bench { dir, out, run, emit_embedding, threads } => {
            bench(&dir, &out, &run, emit_embedding, threads).map(|()| ExitCode::SUCCESS)
        }
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::FAILURE
    })
}

fn test(file: &std::path::Path, run: &RunArgs, emit: Option<PathBuf>) -> anyhow::Result<ExitCode> {
    let row = bench::run_file(file, &run.options());
    let record = match row.outcome {
        Outcome::Error { message, .. } => {
            eprintln!("error: {}: {message}", row.name);
            return Ok(ExitCode::from(2));
        }
        Outcome::SkippedPlanar => {
            println!("{}: planar, skipped", row.name);
            return Ok(ExitCode::SUCCESS);
        }
        Outcome::Done(r) => r,
    };

    let verdict = match record.verdict {
        Verdict::OnePlanar => "1-planar",
        Verdict::NotOnePlanar => "not 1-planar",
        Verdict::Unknown => "unknown (time budget exhausted)",
    };
    let s = &record.stats;
    println!("{}: {verdict}", record.name);
    println!("  n={} m={} density={:.2} blocks={}", record.n, record.m, record.density, record.block_count);
    if let Some(c) = record.crossings {
        println!("  crossings={c}");
    }
    println!(
        "  time={:.3}ms backtracked={} skew_pass={} nodes={} planarity_calls={}",
        record.elapsed_ms(),
        record.solved_by_backtracking,
        s.used_skew_pass,
        s.nodes_visited,
        s.planarity_calls
    );
    println!(
        "  cuts: dec={} kec={} nonplanar={}  solutions: satur={} compl={}",
        s.cuts.dec, s.cuts.kec, s.cuts.nonplanar, s.solutions.satur, s.solutions.compl
    );
    if let (Some(path), Some(text)) = (emit, row.embedding) {
        std::fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn bench(
    dir: &std::path::Path,
    out: &std::path::Path,
    run: &RunArgs,
    emit: Option<PathBuf>,
    threads: Option<usize>,
) -> anyhow::Result<()> {
    let rows = bench::run_corpus(dir, &run.options(), bench::worker_count(threads))?;
    let file = std::fs::File::create(out).with_context(|| format!("cannot create {}", out.display()))?;
    bench::write_csv(&rows, file)?;
    if let Some(emit) = emit {
        bench::write_embeddings(&rows, &emit)?;
    }
    for row in &rows {
        if let Outcome::Error { message, .. } = &row.outcome {
            eprintln!("{}: {message}", row.name);
        }
    }
    print!("{}", bench::summarize(&rows));
    Ok(())
}
