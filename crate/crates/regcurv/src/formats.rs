//! Graph file formats: graph6 and a JSON edge-list document.

use std::fs;
use std::path::Path;

use regcurv_core::Graph;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes the upper triangle column by column, six bits per byte.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Decodes one graph6 line; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let bytes = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(CliError::Graph6(format!("byte {b} outside 63..=126")));
    }
    let value = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
    let (n, body) = match bytes {
        [] => return Err(CliError::Graph6("empty input".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => (value(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => (value(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(CliError::Graph6("truncated size field".into())),
        [b, rest @ ..] => (usize::from(*b - 63), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(CliError::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..body.len() * 6).any(bit) {
        return Err(CliError::Graph6("non-zero padding bits".into()));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// `{"n": .., "edges": [[u, v], ..]}` with u < v, edges sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphDocument {
    fn from(g: &Graph) -> Self {
        Self { n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphDocument> for Graph {
    type Error = CliError;

    fn try_from(doc: GraphDocument) -> Result<Self> {
        Ok(Graph::from_edges(doc.n, doc.edges.into_iter().map(|[u, v]| (u, v)))?)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphDocument::from(g)).expect("graph document serializes")
}

pub fn from_json(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphDocument>(text)?.try_into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Graph6,
    Json,
}

/// Parses either format; JSON is recognised by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_graph6(text)
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_graph(&text)
}

pub fn render_graph(g: &Graph, format: GraphFormat) -> String {
    let mut s = match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::Json => to_json(g),
    };
    s.push('\n');
    s
}
