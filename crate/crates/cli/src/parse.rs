//! Graph file readers: whitespace edge lists and a GML subset.

use std::collections::{hash_map::Entry, HashMap};
use std::path::Path;

use oneplanar_core::{Graph, GraphError, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// By extension (`.gml` or an edge-list extension), else by content.
    #[default]
    Auto,
    Edgelist,
    Gml,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

impl ParseError {
    fn syntax(line: usize, message: impl Into<String>) -> Self {
        Self::Syntax { line, message: message.into() }
    }

    /// Line the error refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            Self::Io { .. } => None,
            Self::Syntax { line, .. } | Self::Graph { line, .. } => Some(*line),
        }
    }
}

pub fn parse_graph_file(path: &Path, format: Format) -> Result<Graph, ParseError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    let format = match format {
        Format::Auto => detect(path, &text),
        f => f,
    };
    parse_str(&text, format)
}

pub fn parse_str(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Gml => parse_gml(text),
        Format::Auto => parse_str(text, sniff(text)),
    }
}

fn detect(path: &Path, text: &str) -> Format {
    match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("gml") => Format::Gml,
        Some("txt" | "edges" | "edgelist" | "el") => Format::Edgelist,
        _ => sniff(text),
    }
}

/// GML if the first token outside comments is `graph`, else an edge list.
fn sniff(text: &str) -> Format {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with("graph") || l.starts_with("Creator") => Format::Gml,
        _ => Format::Edgelist,
    }
}

/// Collects edges, checking loops and duplicates as they appear so that
/// errors carry the offending line.
struct EdgeCollector {
    edges: Vec<(VertexId, VertexId)>,
    seen: HashMap<(VertexId, VertexId), usize>,
}

impl EdgeCollector {
    fn new() -> Self {
        Self { edges: Vec::new(), seen: HashMap::new() }
    }

    fn add(&mut self, u: VertexId, v: VertexId, line: usize) -> Result<(), ParseError> {
        if u == v {
            return Err(ParseError::Graph { line, source: GraphError::SelfLoop(u) });
        }
        match self.seen.entry((u.min(v), u.max(v))) {
            Entry::Occupied(_) => Err(ParseError::Graph { line, source: GraphError::ParallelEdge(u, v) }),
            Entry::Vacant(slot) => {
                slot.insert(line);
                self.edges.push((u, v));
                Ok(())
            }
        }
    }

    fn finish(self, n: usize) -> Result<Graph, ParseError> {
        Graph::new(n, &self.edges).map_err(|source| ParseError::Graph { line: 0, source })
    }
}

/// `u v` per line; `#` starts a comment; `n` is one more than the largest id.
fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut edges = EdgeCollector::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(ParseError::syntax(line, format!("expected `u v`, found `{content}`")));
        };
        let id =
            |t: &str| t.parse::<VertexId>().map_err(|_| ParseError::syntax(line, format!("`{t}` is not a vertex id")));
        let (u, v) = (id(a)?, id(b)?);
        n = n.max(u + 1).max(v + 1);
        edges.add(u, v, line)?;
    }
    edges.finish(n)
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
}

fn tokenize(text: &str) -> Result<Vec<(Token<'_>, usize)>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut rest = raw;
        loop {
            rest = rest.trim_start();
            let Some(c) = rest.chars().next() else { break };
            match c {
                '#' => break,
                '[' => {
                    out.push((Token::Open, line));
                    rest = &rest[1..];
                }
                ']' => {
                    out.push((Token::Close, line));
                    rest = &rest[1..];
                }
                '"' => {
                    let end = rest[1..].find('"').ok_or_else(|| ParseError::syntax(line, "unterminated string"))?;
                    out.push((Token::Word(&rest[1..1 + end]), line));
                    rest = &rest[end + 2..];
                }
                _ => {
                    let end = rest.find(|c: char| c.is_whitespace() || c == '[' || c == ']').unwrap_or(rest.len());
                    out.push((Token::Word(&rest[..end]), line));
                    rest = &rest[end..];
                }
            }
        }
    }
    Ok(out)
}

/// `graph [ node [ id N ... ] edge [ source A target B ... ] ... ]`. Node
/// ids may be any integers; vertices are numbered in order of appearance.
/// Other keys, including nested lists, are skipped.
fn parse_gml(text: &str) -> Result<Graph, ParseError> {
    let tokens = tokenize(text)?;
    let mut pos = 0;
    let last_line = tokens.last().map_or(1, |t| t.1);
    let eof = || ParseError::syntax(last_line, "unexpected end of input");

    // find `graph [` at top level
    loop {
        match tokens.get(pos) {
            None => return Err(ParseError::syntax(last_line, "no `graph [` section")),
            Some((Token::Word("graph"), _)) if matches!(tokens.get(pos + 1), Some((Token::Open, _))) => {
                pos += 2;
                break;
            }
            Some((Token::Open | Token::Close, line)) => {
                return Err(ParseError::syntax(*line, "unexpected bracket before `graph`"))
            }
            Some(_) => pos += 1,
        }
    }

    let mut ids: HashMap<i64, VertexId> = HashMap::new();
    let mut pending: Vec<(i64, i64, usize)> = Vec::new();
    loop {
        let (tok, line) = tokens.get(pos).ok_or_else(eof)?.clone();
        match tok {
            Token::Close => break,
            Token::Open => return Err(ParseError::syntax(line, "list without a key")),
            Token::Word(key) => {
                pos += 1;
                match tokens.get(pos).ok_or_else(eof)? {
                    (Token::Open, _) => {
                        pos += 1;
                        let fields = read_list(&tokens, &mut pos, last_line)?;
                        let int = |name: &str| -> Result<i64, ParseError> {
                            let v = fields
                                .iter()
                                .find(|(k, _)| *k == name)
                                .ok_or_else(|| ParseError::syntax(line, format!("{key} without `{name}`")))?
                                .1;
                            v.parse()
                                .map_err(|_| ParseError::syntax(line, format!("`{name}` is not an integer: `{v}`")))
                        };
                        match key {
                            "node" => {
                                let id = int("id")?;
                                let next = ids.len();
                                if ids.insert(id, next).is_some() {
                                    return Err(ParseError::syntax(line, format!("duplicate node id {id}")));
                                }
                            }
                            "edge" => pending.push((int("source")?, int("target")?, line)),
                            _ => {}
                        }
                    }
                    (Token::Word(_), _) => pos += 1,
                    (Token::Close, l) => return Err(ParseError::syntax(*l, format!("`{key}` without a value"))),
                }
            }
        }
    }

    let mut edges = EdgeCollector::new();
    for (a, b, line) in pending {
        let lookup = |x: i64| {
            ids.get(&x).copied().ok_or_else(|| ParseError::syntax(line, format!("edge refers to unknown node {x}")))
        };
        edges.add(lookup(a)?, lookup(b)?, line)?;
    }
    edges.finish(ids.len())
}

/// Reads `key value` pairs up to the matching `]`, skipping nested lists.
fn read_list<'a>(
    tokens: &[(Token<'a>, usize)],
    pos: &mut usize,
    last_line: usize,
) -> Result<Vec<(&'a str, &'a str)>, ParseError> {
    let mut fields = Vec::new();
    loop {
        match tokens.get(*pos) {
            None => return Err(ParseError::syntax(last_line, "unexpected end of input")),
            Some((Token::Close, _)) => {
                *pos += 1;
                return Ok(fields);
            }
            Some((Token::Open, line)) => return Err(ParseError::syntax(*line, "list without a key")),
            Some((Token::Word(key), line)) => {
                *pos += 1;
                match tokens.get(*pos) {
                    Some((Token::Word(value), _)) => {
                        fields.push((*key, *value));
                        *pos += 1;
                    }
                    Some((Token::Open, _)) => {
                        *pos += 1;
                        read_list(tokens, pos, last_line)?;
                    }
                    _ => return Err(ParseError::syntax(*line, format!("`{key}` without a value"))),
                }
            }
        }
    }
}
