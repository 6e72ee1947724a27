//! Backtracking search over candidate solutions.
//!
//! The search tree has one level per position of the pair universe; the
//! left child of a node fixes the next pair to "no crossing", the right child
//! to "crossing". Each visited node is classified by [`verify_node`] as a
//! solution, a cut, or a node whose children must be explored.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::embed::{realize, OnePlanarEmbedding, Planarization};
use crate::graph::{EdgeId, EdgeSet, Graph};
use crate::pairspace::{build_restricted_universe, build_universe, saturated_with, PairUniverse, PartialSolution};
use crate::planarity::{is_planar, test_planarity, RotationSystem};

/// Largest universe the brute-force oracle accepts.
pub const ORACLE_MAX_K: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    /// Largest skew set tried before the full search; 0 disables the pass.
    pub skew_set_size: usize,
    /// Probability of trying the all-zeros completion at a node.
    pub completion_probability: f64,
    pub rng_seed: u64,
    pub time_budget: Duration,
    pub enable_kite_pruning: bool,
    pub enable_skew_pass: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            skew_set_size: 1,
            completion_probability: 0.8,
            rng_seed: 0,
            time_budget: Duration::from_secs(3 * 60 * 60),
            enable_kite_pruning: true,
            enable_skew_pass: true,
        }
    }
}

impl SearchConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.rng_seed)
    }

    /// Deadline `time_budget` from now, or `None` if it does not fit in an
    /// `Instant`.
    pub fn deadline_from_now(&self) -> Option<Instant> {
        Instant::now().checked_add(self.time_budget)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutReason {
    DoubleEdgeCrossing,
    KiteEdgeCrossing,
    NonplanarInduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionKind {
    /// Every edge saturated and the planarization planar.
    Satur,
    /// The all-zeros completion planarizes.
    Compl,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeVerdict {
    Sol { kind: SolutionKind, certificate: Box<OnePlanarEmbedding> },
    Cut(CutReason),
    Cnt,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CutCounts {
    pub dec: u64,
    pub kec: u64,
    pub nonplanar: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolutionCounts {
    pub satur: u64,
    pub compl: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub cuts: CutCounts,
    pub solutions: SolutionCounts,
    pub planarity_calls: u64,
    pub elapsed: Duration,
    pub used_backtracking: bool,
    pub used_skew_pass: bool,
}

impl SearchStats {
    pub fn total_cuts(&self) -> u64 {
        self.cuts.dec + self.cuts.kec + self.cuts.nonplanar
    }

    /// Adds `other` into `self`; flags are or-ed.
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes_visited += other.nodes_visited;
        self.cuts.dec += other.cuts.dec;
        self.cuts.kec += other.cuts.kec;
        self.cuts.nonplanar += other.cuts.nonplanar;
        self.solutions.satur += other.solutions.satur;
        self.solutions.compl += other.solutions.compl;
        self.planarity_calls += other.planarity_calls;
        self.elapsed += other.elapsed;
        self.used_backtracking |= other.used_backtracking;
        self.used_skew_pass |= other.used_skew_pass;
    }

    fn record(&mut self, v: &NodeVerdict) {
        match v {
            NodeVerdict::Cut(CutReason::DoubleEdgeCrossing) => self.cuts.dec += 1,
            NodeVerdict::Cut(CutReason::KiteEdgeCrossing) => self.cuts.kec += 1,
            NodeVerdict::Cut(CutReason::NonplanarInduced) => self.cuts.nonplanar += 1,
            NodeVerdict::Sol { kind: SolutionKind::Satur, .. } => self.solutions.satur += 1,
            NodeVerdict::Sol { kind: SolutionKind::Compl, .. } => self.solutions.compl += 1,
            NodeVerdict::Cnt => {}
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockVerdict {
    OnePlanar,
    NotOnePlanar,
    /// Time budget exhausted, or a restricted search ran dry.
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockResult {
    pub verdict: BlockVerdict,
    /// Present iff the verdict is `OnePlanar`.
    pub embedding: Option<OnePlanarEmbedding>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("pair universe has {k} pairs, the oracle handles at most {limit}")]
    UniverseTooLarge { k: usize, limit: usize },
}

/// Quadrilateral edges around every chosen crossing: the edges of `g`
/// joining an endpoint of one crossing edge to an endpoint of the other.
pub fn find_kite_edges(y: &PartialSolution<'_>, g: &Graph) -> EdgeSet {
    let pairs: Vec<(EdgeId, EdgeId)> = y.crossing_pairs().collect();
    Context::new(g, &SearchConfig::default()).kite_edges(&pairs)
}

/// Read-only data shared by every node of one search.
struct Context<'a> {
    g: &'a Graph,
    cfg: &'a SearchConfig,
    /// `edge_at[u * n + v]`: the edge joining `u` and `v`, or `usize::MAX`.
    edge_at: Vec<EdgeId>,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, cfg: &'a SearchConfig) -> Self {
        let n = g.n();
        let mut edge_at = vec![usize::MAX; n * n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            edge_at[u * n + v] = e;
            edge_at[v * n + u] = e;
        }
        Self { g, cfg, edge_at }
    }

    fn kite_edges(&self, pairs: &[(EdgeId, EdgeId)]) -> EdgeSet {
        let n = self.g.n();
        let mut kites = EdgeSet::with_capacity(self.g.m());
        for &(a, b) in pairs {
            let (u1, v1) = self.g.endpoints(a);
            let (u2, v2) = self.g.endpoints(b);
            for (x, y) in [(u1, u2), (u2, v1), (v1, v2), (v2, u1)] {
                let e = self.edge_at[x * n + y];
                if e != usize::MAX {
                    kites.insert(e);
                }
            }
        }
        kites
    }
}

/// Classifies one node of the search tree.
///
/// Checks, in order: an edge crossed twice; a crossed kite edge (when kite
/// pruning is on); planarity of the planarized subgraph of saturated edges;
/// whether every edge is saturated; and, with probability
/// `completion_probability`, whether the chosen crossings alone planarize
/// all of `g`.
pub fn verify_node<R: Rng + ?Sized>(
    y: &PartialSolution<'_>,
    g: &Graph,
    cfg: &SearchConfig,
    rng: &mut R,
) -> NodeVerdict {
    let mut count = vec![0u32; g.m()];
    let mut chosen = Vec::new();
    for (i, &b) in y.bits().iter().enumerate() {
        if b {
            let (a, c) = y.universe().pair(i);
            count[a] += 1;
            count[c] += 1;
            chosen.push(i);
        }
    }
    let node = NodeState {
        universe: y.universe(),
        cursor: y.cursor(),
        chosen: &chosen,
        doubles: count.iter().filter(|&&c| c >= 2).count(),
    };
    let mut stats = SearchStats::default();
    evaluate(&Context::new(g, cfg), &node, &mut Memo::default(), &mut stats, rng)
}

struct NodeState<'a> {
    universe: &'a PairUniverse,
    cursor: usize,
    /// Positions set to cross, increasing.
    chosen: &'a [usize],
    /// Number of edges crossed at least twice.
    doubles: usize,
}

/// Results that carry over from a node to its left child, which has the
/// same crossings.
#[derive(Default)]
struct Memo {
    chosen: Vec<usize>,
    /// Saturated set whose planarization was last found planar.
    planar_sat: Option<EdgeSet>,
    completion_failed: bool,
}

impl Memo {
    fn sync(&mut self, chosen: &[usize]) {
        if self.chosen != chosen {
            self.chosen.clear();
            self.chosen.extend_from_slice(chosen);
            self.planar_sat = None;
            self.completion_failed = false;
        }
    }
}

fn evaluate<R: Rng + ?Sized>(
    ctx: &Context<'_>,
    node: &NodeState<'_>,
    memo: &mut Memo,
    stats: &mut SearchStats,
    rng: &mut R,
) -> NodeVerdict {
    let (g, cfg) = (ctx.g, ctx.cfg);
    if node.doubles > 0 {
        return NodeVerdict::Cut(CutReason::DoubleEdgeCrossing);
    }
    let pairs: Vec<(EdgeId, EdgeId)> = node.chosen.iter().map(|&i| node.universe.pair(i)).collect();
    let mut crossed = EdgeSet::with_capacity(g.m());
    for &(a, b) in &pairs {
        crossed.insert(a);
        crossed.insert(b);
    }
    let kites = if cfg.enable_kite_pruning {
        let kites = ctx.kite_edges(&pairs);
        if !crossed.is_disjoint(&kites) {
            return NodeVerdict::Cut(CutReason::KiteEdgeCrossing);
        }
        kites
    } else {
        EdgeSet::with_capacity(g.m())
    };

    memo.sync(node.chosen);
    let sat = saturated_with(node.universe, node.cursor, &crossed, &kites);
    let full = sat.count_ones(..) == g.m();
    if full {
        let p = Planarization::build(g, &pairs, None).expect("pairs are independent and disjoint");
        stats.planarity_calls += 1;
        return match test_planarity(&p.star_graph).embedding {
            Some(rs) => solution(SolutionKind::Satur, &p, &rs),
            None => NodeVerdict::Cut(CutReason::NonplanarInduced),
        };
    }
    if memo.planar_sat.as_ref() != Some(&sat) {
        let p = Planarization::build(g, &pairs, Some(&sat)).expect("pairs are independent and disjoint");
        stats.planarity_calls += 1;
        if !is_planar(&p.star_graph) {
            return NodeVerdict::Cut(CutReason::NonplanarInduced);
        }
        memo.planar_sat = Some(sat);
    }

    if rng.gen::<f64>() < cfg.completion_probability && !memo.completion_failed {
        let p = Planarization::build(g, &pairs, None).expect("pairs are independent and disjoint");
        stats.planarity_calls += 1;
        if is_planar(&p.star_graph) {
            let rs = test_planarity(&p.star_graph).embedding.expect("planar");
            return solution(SolutionKind::Compl, &p, &rs);
        }
        memo.completion_failed = true;
    }
    NodeVerdict::Cnt
}

fn solution(kind: SolutionKind, p: &Planarization, rs: &RotationSystem) -> NodeVerdict {
    let certificate = realize(p, rs).expect("planar rotation");
    NodeVerdict::Sol { kind, certificate: Box::new(certificate) }
}

enum Outcome {
    Found(OnePlanarEmbedding),
    Exhausted,
    TimedOut,
}

/// Depth-first search over the whole tree of `universe`, left child first.
fn search<R: Rng + ?Sized>(
    g: &Graph,
    universe: &PairUniverse,
    cfg: &SearchConfig,
    deadline: Option<Instant>,
    stats: &mut SearchStats,
    rng: &mut R,
) -> Outcome {
    let k = universe.k();
    let mut bits: Vec<bool> = Vec::with_capacity(k);
    let mut chosen: Vec<usize> = Vec::new();
    let mut count = vec![0u32; g.m()];
    let mut doubles = 0usize;
    let mut memo = Memo::default();
    let ctx = Context::new(g, cfg);

    loop {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Outcome::TimedOut;
        }
        stats.nodes_visited += 1;
        let node = NodeState { universe, cursor: bits.len(), chosen: &chosen, doubles };
        let verdict = evaluate(&ctx, &node, &mut memo, stats, rng);
        stats.record(&verdict);
        match verdict {
            NodeVerdict::Sol { certificate, .. } => return Outcome::Found(*certificate),
            NodeVerdict::Cnt if bits.len() < k => {
                bits.push(false);
                continue;
            }
            NodeVerdict::Cnt | NodeVerdict::Cut(_) => {}
        }

        // climb to the deepest left child and switch it to the right child
        loop {
            match bits.pop() {
                None => return Outcome::Exhausted,
                Some(true) => {
                    let i = chosen.pop().expect("a set bit was chosen");
                    let (a, b) = universe.pair(i);
                    for e in [a, b] {
                        if count[e] == 2 {
                            doubles -= 1;
                        }
                        count[e] -= 1;
                    }
                }
                Some(false) => {
                    let i = bits.len();
                    bits.push(true);
                    chosen.push(i);
                    let (a, b) = universe.pair(i);
                    for e in [a, b] {
                        count[e] += 1;
                        if count[e] == 2 {
                            doubles += 1;
                        }
                    }
                    break;
                }
            }
        }
    }
}

/// Runs the search over `universe` with a fresh generator seeded from
/// `cfg.rng_seed`.
///
/// Exhausting a restricted universe proves nothing and yields `Unknown`.
pub fn backtrack(g: &Graph, universe: &PairUniverse, cfg: &SearchConfig, deadline: Option<Instant>) -> BlockResult {
    let start = Instant::now();
    let mut stats = SearchStats { used_backtracking: true, ..Default::default() };
    let mut rng = cfg.rng();
    let outcome = search(g, universe, cfg, deadline, &mut stats, &mut rng);
    stats.elapsed = start.elapsed();
    finish(outcome, universe.is_restricted(), stats)
}

fn finish(outcome: Outcome, restricted: bool, stats: SearchStats) -> BlockResult {
    match outcome {
        Outcome::Found(emb) => BlockResult { verdict: BlockVerdict::OnePlanar, embedding: Some(emb), stats },
        Outcome::Exhausted if !restricted => {
            BlockResult { verdict: BlockVerdict::NotOnePlanar, embedding: None, stats }
        }
        Outcome::Exhausted | Outcome::TimedOut => {
            BlockResult { verdict: BlockVerdict::Unknown, embedding: None, stats }
        }
    }
}

/// A smallest edge set of size at most `max_size` whose removal leaves `g`
/// planar; among those of the minimum size, the lexicographically first.
pub fn find_skew_set(g: &Graph, max_size: usize) -> Option<Vec<EdgeId>> {
    let m = g.m();
    for size in 0..=max_size.min(m) {
        let mut comb: Vec<EdgeId> = (0..size).collect();
        loop {
            let mut removed = vec![false; m];
            for &e in &comb {
                removed[e] = true;
            }
            let rest: Vec<_> = (0..m).filter(|&e| !removed[e]).map(|e| g.endpoints(e)).collect();
            if is_planar(&Graph::from_simple_edges(g.n(), rest)) {
                return Some(comb);
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| comb[i] < m - size + i) else { break };
            comb[i] += 1;
            for j in i + 1..size {
                comb[j] = comb[j - 1] + 1;
            }
        }
    }
    None
}

/// Tests one block with a deadline of `cfg.time_budget` from now.
pub fn test_block(c: &Graph, cfg: &SearchConfig) -> BlockResult {
    test_block_until(c, cfg, cfg.deadline_from_now())
}

/// Tests one block: planarity, the small-graph shortcut, the edge-density
/// bound, then the skew pass followed by the full search.
pub fn test_block_until(c: &Graph, cfg: &SearchConfig, deadline: Option<Instant>) -> BlockResult {
    let start = Instant::now();
    let mut stats = SearchStats { planarity_calls: 1, ..Default::default() };
    let done = |verdict, embedding, mut stats: SearchStats| {
        stats.elapsed = start.elapsed();
        BlockResult { verdict, embedding, stats }
    };

    if let Some(rs) = test_planarity(c).embedding {
        return done(BlockVerdict::OnePlanar, Some(OnePlanarEmbedding::from_planar(c, rs)), stats);
    }
    let (n, m) = (c.n(), c.m());
    if n >= 7 && m + 8 > 4 * n {
        return done(BlockVerdict::NotOnePlanar, None, stats);
    }

    let mut rng = cfg.rng();
    stats.used_backtracking = true;
    if cfg.enable_skew_pass && cfg.skew_set_size > 0 {
        if let Some(skew) = find_skew_set(c, cfg.skew_set_size) {
            let mut set = EdgeSet::with_capacity(m);
            set.extend(skew);
            let universe = build_restricted_universe(c, &set);
            stats.used_skew_pass = true;
            match search(c, &universe, cfg, deadline, &mut stats, &mut rng) {
                Outcome::Found(emb) => return done(BlockVerdict::OnePlanar, Some(emb), stats),
                Outcome::TimedOut => return done(BlockVerdict::Unknown, None, stats),
                Outcome::Exhausted => {}
            }
        }
    }

    let universe = build_universe(c);
    let outcome = search(c, &universe, cfg, deadline, &mut stats, &mut rng);
    let r = finish(outcome, false, stats);
    done(r.verdict, r.embedding, r.stats)
}

/// Brute force over all `2^k` candidate solutions in increasing numeric
/// order (bit `i` of the mask is pair `i`).
pub fn oracle_is_one_planar(g: &Graph) -> Result<(bool, Option<OnePlanarEmbedding>), SearchError> {
    let universe = build_universe(g);
    let k = universe.k();
    if k > ORACLE_MAX_K {
        return Err(SearchError::UniverseTooLarge { k, limit: ORACLE_MAX_K });
    }
    let mut used = vec![false; g.m()];
    'masks: for mask in 0u32..1 << k {
        used.iter_mut().for_each(|u| *u = false);
        let mut pairs = Vec::new();
        for i in (0..k).filter(|&i| mask >> i & 1 == 1) {
            let (a, b) = universe.pair(i);
            if std::mem::replace(&mut used[a], true) || std::mem::replace(&mut used[b], true) {
                continue 'masks;
            }
            pairs.push((a, b));
        }
        let p = Planarization::build(g, &pairs, None).expect("checked above");
        if let Some(rs) = test_planarity(&p.star_graph).embedding {
            return Ok((true, Some(realize(&p, &rs).expect("planar rotation"))));
        }
    }
    Ok((false, None))
}
