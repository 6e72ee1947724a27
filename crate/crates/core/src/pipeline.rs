//! Whole-graph testing: split into blocks, test each, merge the embeddings.

use std::time::{Duration, Instant};

use crate::embed::{merge_blocks, validate, OnePlanarEmbedding};
use crate::graph::{biconnected_components, Graph};
use crate::planarity::test_planarity;
use crate::search::{
    oracle_is_one_planar, test_block_until, BlockResult, BlockVerdict, SearchConfig, SearchError, SearchStats,
};

/// Verdict for a whole graph; same meaning as for a block.
pub type Verdict = BlockVerdict;

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceRecord {
    pub name: String,
    pub n: usize,
    pub m: usize,
    /// `m / n`, 0 for the empty graph.
    pub density: f64,
    pub block_count: usize,
    pub verdict: Verdict,
    /// Present iff the verdict is `OnePlanar`.
    pub crossings: Option<usize>,
    pub elapsed: Duration,
    pub solved_by_backtracking: bool,
    /// Summed over the blocks that were tested.
    pub stats: SearchStats,
}

impl InstanceRecord {
    pub fn elapsed_ms(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1000.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineReport {
    pub record: InstanceRecord,
    /// Merged and validated certificate, present iff the verdict is `OnePlanar`.
    pub embedding: Option<OnePlanarEmbedding>,
    /// Verdicts of the blocks tested, in block order. Shorter than the block
    /// list when a negative block stopped the run.
    pub block_verdicts: Vec<BlockVerdict>,
}

/// Tests `g` and returns its summary record.
pub fn run_pipeline(g: &Graph, cfg: &SearchConfig) -> InstanceRecord {
    analyze(g, cfg, "").record
}

/// Tests every block of `g` under one deadline of `cfg.time_budget`,
/// stopping at the first block that is not 1-planar.
pub fn analyze(g: &Graph, cfg: &SearchConfig, name: &str) -> PipelineReport {
    let deadline = cfg.deadline_from_now();
    run(g, name, |block| Ok(test_block_until(block, cfg, deadline))).expect("search does not fail")
}

/// Like [`analyze`] but every block is decided by exhaustive enumeration.
pub fn analyze_with_oracle(g: &Graph, name: &str) -> Result<PipelineReport, SearchError> {
    run(g, name, |block| {
        let start = Instant::now();
        let (ok, embedding) = oracle_is_one_planar(block)?;
        let verdict = if ok { BlockVerdict::OnePlanar } else { BlockVerdict::NotOnePlanar };
        let stats = SearchStats { elapsed: start.elapsed(), ..Default::default() };
        Ok(BlockResult { verdict, embedding, stats })
    })
}

fn run<F>(g: &Graph, name: &str, mut solve: F) -> Result<PipelineReport, SearchError>
where
    F: FnMut(&Graph) -> Result<BlockResult, SearchError>,
{
    let start = Instant::now();
    let dec = biconnected_components(g);
    let mut stats = SearchStats::default();
    let mut verdicts = Vec::with_capacity(dec.blocks.len());
    let mut embeddings = Vec::with_capacity(dec.blocks.len());

    for block in &dec.blocks {
        let result = if block.is_bridge() {
            let rs = test_planarity(&block.graph).embedding.expect("an edge is planar");
            BlockResult {
                verdict: BlockVerdict::OnePlanar,
                embedding: Some(OnePlanarEmbedding::from_planar(&block.graph, rs)),
                stats: SearchStats::default(),
            }
        } else {
            solve(&block.graph)?
        };
        stats.absorb(&result.stats);
        verdicts.push(result.verdict);
        if let Some(emb) = result.embedding {
            embeddings.push(emb);
        }
        if result.verdict == BlockVerdict::NotOnePlanar {
            break;
        }
    }

    let verdict = if verdicts.contains(&BlockVerdict::NotOnePlanar) {
        BlockVerdict::NotOnePlanar
    } else if verdicts.contains(&BlockVerdict::Unknown) {
        BlockVerdict::Unknown
    } else {
        BlockVerdict::OnePlanar
    };
    let embedding = (verdict == BlockVerdict::OnePlanar).then(|| {
        let merged = merge_blocks(g, &dec, &embeddings).expect("block certificates validate");
        assert!(validate(g, &merged), "merged certificate failed validation");
        merged
    });

    let record = InstanceRecord {
        name: name.to_owned(),
        n: g.n(),
        m: g.m(),
        density: if g.n() == 0 { 0.0 } else { g.m() as f64 / g.n() as f64 },
        block_count: dec.blocks.len(),
        verdict,
        crossings: embedding.as_ref().map(OnePlanarEmbedding::count_crossings),
        elapsed: start.elapsed(),
        solved_by_backtracking: stats.used_backtracking,
        stats,
    };
    Ok(PipelineReport { record, embedding, block_verdicts: verdicts })
}
