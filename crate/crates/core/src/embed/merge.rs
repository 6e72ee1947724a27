use super::{validate, EmbedError, OnePlanarEmbedding, Planarization, StarEdge};
use crate::graph::{BlockDecomposition, EdgeId, Graph};
use crate::planarity::RotationSystem;

/// Combines one embedding per block into an embedding of `g`.
///
/// Block rotations are translated to `g`'s planarization; at a vertex shared
/// by several blocks each later block's rotation is inserted as one
/// contiguous run right after the smallest star edge id already there.
pub fn merge_blocks(
    g: &Graph,
    dec: &BlockDecomposition,
    per_block: &[OnePlanarEmbedding],
) -> Result<OnePlanarEmbedding, EmbedError> {
    if per_block.len() != dec.blocks.len() {
        return Err(EmbedError::BlockCount { expected: dec.blocks.len(), found: per_block.len() });
    }
    for (i, (block, emb)) in dec.blocks.iter().zip(per_block).enumerate() {
        if !validate(&block.graph, emb) {
            return Err(EmbedError::InvalidBlockEmbedding(i));
        }
    }

    let mut crossings = Vec::new();
    let mut dummy_offset = Vec::with_capacity(per_block.len());
    for (block, emb) in dec.blocks.iter().zip(per_block) {
        dummy_offset.push(crossings.len());
        crossings.extend(emb.crossings.iter().map(|&(a, b)| (block.edge_map[a], block.edge_map[b])));
    }
    let p = Planarization::build(g, &crossings, None)?;

    let mut rotations: Vec<Vec<EdgeId>> = vec![Vec::new(); p.star_graph.n()];
    for (i, (block, emb)) in dec.blocks.iter().zip(per_block).enumerate() {
        let bp = &emb.planarization;
        let translate = |s: EdgeId| match bp.star_edges[s] {
            StarEdge::Original(e) => p.star_edge_of(block.edge_map[e]).expect("uncrossed in g"),
            StarEdge::Half { dummy, half } => p.half_edge(dummy_offset[i] + dummy, half),
        };
        for (local, &v) in block.vertex_map.iter().enumerate() {
            let segment: Vec<EdgeId> = emb.rotation.at(local).iter().map(|&s| translate(s)).collect();
            let here = &mut rotations[v];
            if here.is_empty() {
                *here = segment;
            } else {
                let anchor = (0..here.len()).min_by_key(|&j| here[j]).expect("non-empty");
                here.splice(anchor + 1..anchor + 1, segment);
            }
        }
        for k in 0..bp.dummies.len() {
            rotations[p.dummy_vertex(dummy_offset[i] + k)] =
                emb.rotation.at(bp.dummy_vertex(k)).iter().map(|&s| translate(s)).collect();
        }
    }

    Ok(OnePlanarEmbedding { planarization: p, rotation: RotationSystem::new(rotations), crossings })
}
