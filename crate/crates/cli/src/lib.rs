//! Library side of the `oneplanar` command: graph file parsing and corpus
//! runs.

pub mod bench;
pub mod parse;

pub use bench::{run_corpus, run_file, summarize, write_csv, Outcome, Row, RunOptions, Summary};
pub use parse::{parse_graph_file, parse_str, Format, ParseError};
