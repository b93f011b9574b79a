//! Text formats for graphs and weighted graphs, and DOT export.
//!
//! Plain: header `n m`, then `m` lines `u v`. Weighted: header `n m w`, then
//! `m` lines `u v weight` covering every pair. Blank lines and lines starting
//! with `#` are skipped. See `docs/FORMAT.md`.

use std::fmt::Write as _;

use bredux_core::graph::MAX_VERTICES;
use bredux_core::{AnyGraph, Graph, Weight, WeightedGraph};
use num_traits::Signed;

/// A parse failure at a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("malformed header '{0}' (expected 'n m' or 'n m w')")]
    MalformedHeader(String),
    #[error("missing header")]
    MissingHeader,
    #[error("too many vertices: {0} (at most {MAX_VERTICES})")]
    TooManyVertices(usize),
    #[error("malformed edge line '{0}'")]
    MalformedEdge(String),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("malformed weight '{0}' (expected integer, p/q or decimal)")]
    MalformedWeight(String),
    #[error("negative weight {0}")]
    NegativeWeight(String),
    #[error("weighted graph on {n} vertices needs {expected} pairs, header declares {declared}")]
    IncompleteWeights { n: usize, expected: usize, declared: usize },
    #[error("expected a plain graph, found a weighted header")]
    UnexpectedWeighted,
    #[error("expected a weighted graph, found a plain header")]
    ExpectedWeighted,
}

fn fail(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

struct Header {
    line: usize,
    n: usize,
    m: usize,
    weighted: bool,
}

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: usize, text: &str) -> Result<Header, ParseError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let bad = || fail(line, ParseErrorKind::MalformedHeader(text.to_string()));
    let weighted = match tokens.as_slice() {
        [_, _] => false,
        [_, _, w] if w.eq_ignore_ascii_case("w") => true,
        _ => return Err(bad()),
    };
    let n: usize = tokens[0].parse().map_err(|_| bad())?;
    let m: usize = tokens[1].parse().map_err(|_| bad())?;
    if n > MAX_VERTICES {
        return Err(fail(line, ParseErrorKind::TooManyVertices(n)));
    }
    Ok(Header { line, n, m, weighted })
}

fn parse_vertex(token: &str, n: usize, line: usize, text: &str) -> Result<usize, ParseError> {
    let v: usize = token.parse().map_err(|_| fail(line, ParseErrorKind::MalformedEdge(text.to_string())))?;
    if v >= n {
        return Err(fail(line, ParseErrorKind::VertexOutOfRange { vertex: v, n }));
    }
    Ok(v)
}

/// Exact weight from an integer, a ratio `p/q` or a decimal like `2.5`.
pub fn parse_weight(token: &str) -> Option<Weight> {
    if let Some((p, q)) = token.split_once('/') {
        let p: i64 = p.parse().ok()?;
        let q: i64 = q.parse().ok()?;
        return (q != 0 && p != i64::MIN && q != i64::MIN).then(|| Weight::new(p, q));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole: i64 = if whole.is_empty() || whole == "-" { 0 } else { whole.parse().ok()? };
        let scale = 10i64.checked_pow(frac.len() as u32)?;
        let frac: i64 = frac.parse().ok()?;
        let magnitude = whole.checked_abs()?.checked_mul(scale)?.checked_add(frac)?;
        return Some(Weight::new(if negative { -magnitude } else { magnitude }, scale));
    }
    token.parse::<i64>().ok().map(Weight::from_integer)
}

/// Parses either format, deciding by the header.
pub fn parse_any(text: &str) -> Result<AnyGraph, ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| fail(text.lines().count().max(1), ParseErrorKind::MissingHeader))?;
    let header = parse_header(line, header)?;
    if header.weighted {
        parse_weighted_body(header, lines).map(AnyGraph::Weighted)
    } else {
        parse_plain_body(header, lines).map(AnyGraph::Plain)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    match parse_any(text)? {
        AnyGraph::Plain(g) => Ok(g),
        AnyGraph::Weighted(_) => Err(fail(first_line(text), ParseErrorKind::UnexpectedWeighted)),
    }
}

pub fn parse_weighted(text: &str) -> Result<WeightedGraph, ParseError> {
    match parse_any(text)? {
        AnyGraph::Weighted(w) => Ok(w),
        AnyGraph::Plain(_) => Err(fail(first_line(text), ParseErrorKind::ExpectedWeighted)),
    }
}

fn first_line(text: &str) -> usize {
    content_lines(text).next().map_or(1, |(l, _)| l)
}

fn parse_plain_body<'a>(h: Header, lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph, ParseError> {
    let mut edges = Vec::with_capacity(h.m.min(4096));
    let mut seen = std::collections::HashSet::new();
    let mut last = h.line;
    for (line, text) in lines {
        last = line;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = tokens.as_slice() else {
            return Err(fail(line, ParseErrorKind::MalformedEdge(text.to_string())));
        };
        let u = parse_vertex(a, h.n, line, text)?;
        let v = parse_vertex(b, h.n, line, text)?;
        if u == v {
            return Err(fail(line, ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(fail(line, ParseErrorKind::DuplicateEdge(key.0, key.1)));
        }
        edges.push(key);
    }
    if edges.len() != h.m {
        return Err(fail(last, ParseErrorKind::EdgeCountMismatch { declared: h.m, found: edges.len() }));
    }
    Ok(Graph::from_edges(h.n, edges).expect("edges validated"))
}

fn parse_weighted_body<'a>(
    h: Header,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<WeightedGraph, ParseError> {
    let expected = h.n * h.n.saturating_sub(1) / 2;
    if h.m != expected {
        return Err(fail(h.line, ParseErrorKind::IncompleteWeights { n: h.n, expected, declared: h.m }));
    }
    let mut triples = Vec::with_capacity(h.m.min(4096));
    let mut seen = std::collections::HashSet::new();
    let mut last = h.line;
    for (line, text) in lines {
        last = line;
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [a, b, w] = tokens.as_slice() else {
            return Err(fail(line, ParseErrorKind::MalformedEdge(text.to_string())));
        };
        let u = parse_vertex(a, h.n, line, text)?;
        let v = parse_vertex(b, h.n, line, text)?;
        if u == v {
            return Err(fail(line, ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(fail(line, ParseErrorKind::DuplicateEdge(key.0, key.1)));
        }
        let weight = parse_weight(w).ok_or_else(|| fail(line, ParseErrorKind::MalformedWeight(w.to_string())))?;
        if weight.is_negative() {
            return Err(fail(line, ParseErrorKind::NegativeWeight(w.to_string())));
        }
        triples.push((u, v, weight));
    }
    if triples.len() != h.m {
        return Err(fail(last, ParseErrorKind::EdgeCountMismatch { declared: h.m, found: triples.len() }));
    }
    Ok(WeightedGraph::from_weights(h.n, triples).expect("pairs validated"))
}

/// `n m` header and one `u v` line per edge, `u < v`, lexicographic order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        write!(out, "\n{u} {v}").unwrap();
    }
    out
}

/// `n m w` header and one `u v weight` line per pair.
pub fn serialize_weighted(w: &WeightedGraph) -> String {
    let m = w.n() * w.n().saturating_sub(1) / 2;
    let mut out = format!("{} {m} w", w.n());
    for (u, v, weight) in w.triples() {
        write!(out, "\n{u} {v} {weight}").unwrap();
    }
    out
}

pub fn serialize_any(x: &AnyGraph) -> String {
    match x {
        AnyGraph::Plain(g) => serialize_graph(g),
        AnyGraph::Weighted(w) => serialize_weighted(w),
    }
}

/// Graphviz form. Weighted graphs label every pair with its weight and draw
/// weight-0 pairs bold.
pub fn to_dot(x: &AnyGraph) -> String {
    let mut out = String::from("graph G {\n");
    match x {
        AnyGraph::Plain(g) => {
            for v in 0..g.n() {
                writeln!(out, "  {v};").unwrap();
            }
            for (u, v) in g.edges() {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
        }
        AnyGraph::Weighted(w) => {
            for v in 0..w.n() {
                writeln!(out, "  {v};").unwrap();
            }
            for (u, v, weight) in w.triples() {
                let style = if num_traits::Zero::is_zero(&weight) { ", style=bold" } else { ", style=dashed" };
                writeln!(out, "  {u} -- {v} [label=\"{weight}\"{style}];").unwrap();
            }
        }
    }
    out.push('}');
    out.push('\n');
    out
}
