//! Plain-text embedding format; see `docs/embedding-format.md`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{EmbedError, OnePlanarEmbedding, Planarization, StarEdge};
use crate::graph::{EdgeId, Graph};
use crate::planarity::RotationSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("embedding does not match the graph: {0}")]
    Embed(#[from] EmbedError),
    #[error("missing rotation for vertex v{0}")]
    MissingRotation(usize),
}

fn dart(p: &Planarization, s: EdgeId) -> String {
    match p.star_edges[s] {
        StarEdge::Original(e) => format!("e{e}"),
        StarEdge::Half { dummy, half } => format!("c{dummy}.{half}"),
    }
}

pub fn write_embedding(emb: &OnePlanarEmbedding) -> String {
    let p = &emb.planarization;
    let mut out = String::from("crossings:\n");
    for &(a, b) in &emb.crossings {
        writeln!(out, "e{a} e{b}").unwrap();
    }
    out.push_str("rotation:\n");
    for (v, rot) in emb.rotation.rotations().iter().enumerate() {
        write!(out, "v{v}:").unwrap();
        for &s in rot {
            write!(out, " {}", dart(p, s)).unwrap();
        }
        out.push('\n');
    }
    out.push_str("dummies:\n");
    for (k, d) in p.dummies.iter().enumerate() {
        writeln!(out, "c{k}: e{} e{}", d.edges.0, d.edges.1).unwrap();
    }
    out
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Crossings,
    Rotation,
    Dummies,
}

fn parse_id(tok: &str, prefix: char, line: usize) -> Result<usize, FormatError> {
    tok.strip_prefix(prefix)
        .and_then(|rest| rest.parse().ok())
        .ok_or_else(|| FormatError::Syntax { line, message: format!("expected {prefix}<id>, found `{tok}`") })
}

/// Parses the text produced by [`write_embedding`] for graph `g`.
///
/// The result is structurally checked against `g` but not validated; run
/// [`super::validate`] for a full certificate check.
pub fn parse_embedding(g: &Graph, text: &str) -> Result<OnePlanarEmbedding, FormatError> {
    let mut section = Section::None;
    let mut crossings = Vec::new();
    let mut dummies = Vec::new();
    let mut rotation_lines: Vec<(usize, usize, Vec<String>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: String| FormatError::Syntax { line, message };
        match content {
            "crossings:" => section = Section::Crossings,
            "rotation:" => section = Section::Rotation,
            "dummies:" => section = Section::Dummies,
            _ => match section {
                Section::None => return Err(syntax("content before the first section".into())),
                Section::Crossings => {
                    let toks: Vec<&str> = content.split_whitespace().collect();
                    let [a, b] = toks[..] else {
                        return Err(syntax("expected two edge ids".into()));
                    };
                    crossings.push((parse_id(a, 'e', line)?, parse_id(b, 'e', line)?));
                }
                Section::Dummies | Section::Rotation => {
                    let (head, rest) = content.split_once(':').ok_or_else(|| syntax("missing `:`".into()))?;
                    let toks: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
                    if section == Section::Dummies {
                        let k = parse_id(head.trim(), 'c', line)?;
                        if k != dummies.len() {
                            return Err(syntax(format!("expected c{}", dummies.len())));
                        }
                        let [a, b] = &toks[..] else {
                            return Err(syntax("expected two edge ids".into()));
                        };
                        dummies.push((parse_id(a, 'e', line)?, parse_id(b, 'e', line)?));
                    } else {
                        rotation_lines.push((line, parse_id(head.trim(), 'v', line)?, toks));
                    }
                }
            },
        }
    }

    if dummies != crossings {
        return Err(FormatError::Syntax {
            line: 0,
            message: "dummies section does not list the crossings in order".into(),
        });
    }
    for &(a, b) in &crossings {
        if a >= g.m() || b >= g.m() {
            return Err(FormatError::Syntax { line: 0, message: format!("edge id out of range in e{a} e{b}") });
        }
    }
    let p = Planarization::build(g, &crossings, None)?;

    let total = p.star_graph.n();
    let mut rotations: Vec<Option<Vec<EdgeId>>> = vec![None; total];
    for (line, v, toks) in rotation_lines {
        let syntax = |message: String| FormatError::Syntax { line, message };
        if v >= total {
            return Err(syntax(format!("vertex v{v} out of range")));
        }
        if rotations[v].is_some() {
            return Err(syntax(format!("second rotation for v{v}")));
        }
        let darts = toks
            .iter()
            .map(|tok| resolve(&p, tok).ok_or_else(|| syntax(format!("unknown dart `{tok}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        rotations[v] = Some(darts);
    }
    let rotations = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(FormatError::MissingRotation(v)))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(OnePlanarEmbedding { planarization: p, rotation: RotationSystem::new(rotations), crossings })
}

fn resolve(p: &Planarization, tok: &str) -> Option<EdgeId> {
    if let Some(rest) = tok.strip_prefix('e') {
        return p.star_edge_of(rest.parse().ok()?);
    }
    let (k, h) = tok.strip_prefix('c')?.split_once('.')?;
    let (k, h): (usize, u8) = (k.parse().ok()?, h.parse().ok()?);
    (k < p.dummies.len() && h < 4).then(|| p.half_edge(k, h))
}
