//! Plain-text formats for graphs, chord diagrams and encodings.
//!
//! ```text
//! graph <n> <m>        rep <n>
//! <u> <v>              <label> <label> ... (2n labels)
//! ... (m lines)
//! ```

use std::fmt::Write as _;

use crate::chord::CircleRep;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Encoding};

/// Contents of a graph or rep file.
#[derive(Clone, Debug)]
pub enum Document {
    Graph(ColoredGraph),
    /// The diagram with labels renumbered by first occurrence, and the
    /// original labels (`labels[new] == old`).
    Rep(CircleRep, Vec<u64>),
}

fn parse_err(m: impl Into<String>) -> Error {
    Error::Parse(m.into())
}

fn numbers(text: &str) -> Result<Vec<u64>> {
    text.split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| parse_err(format!("not a non-negative integer: {t:?}"))))
        .collect()
}

/// Reads a file, deciding between the two formats by its first word.
pub fn parse_document(text: &str) -> Result<Document> {
    let mut words = text.split_whitespace();
    match words.next() {
        Some("graph") => parse_graph(text).map(Document::Graph),
        Some("rep") => parse_rep(text).map(|(r, l)| Document::Rep(r, l)),
        Some(other) => Err(parse_err(format!("unknown header {other:?}, expected `graph` or `rep`"))),
        None => Err(parse_err("empty input")),
    }
}

fn header<'a>(text: &'a str, word: &str) -> Result<(Vec<u64>, &'a str)> {
    let text = text.trim_start();
    let (first, rest) = text.split_once('\n').unwrap_or((text, ""));
    let mut parts = first.split_whitespace();
    if parts.next() != Some(word) {
        return Err(parse_err(format!("missing `{word}` header")));
    }
    let fields = numbers(&parts.collect::<Vec<_>>().join(" "))?;
    if rest.split_whitespace().any(|t| t == "graph" || t == "rep") {
        return Err(parse_err("more than one header word"));
    }
    Ok((fields, rest))
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let (fields, body) = header(text, "graph")?;
    let [n, m] = fields[..] else {
        return Err(parse_err("graph header needs `graph <n> <m>`"));
    };
    let mut edges = Vec::with_capacity(m as usize);
    for line in body.lines().filter(|l| !l.trim().is_empty()) {
        match numbers(line)?[..] {
            [u, v] => edges.push((u as usize, v as usize)),
            _ => return Err(parse_err(format!("edge line {line:?} needs two vertex ids"))),
        }
    }
    if edges.len() as u64 != m {
        return Err(parse_err(format!("header promises {m} edges, found {}", edges.len())));
    }
    ColoredGraph::uncolored(n as usize, &edges)
}

pub fn parse_rep(text: &str) -> Result<(CircleRep, Vec<u64>)> {
    let (fields, body) = header(text, "rep")?;
    let [n] = fields[..] else {
        return Err(parse_err("rep header needs `rep <n>`"));
    };
    let labels = numbers(body)?;
    if labels.len() as u64 != 2 * n {
        return Err(parse_err(format!("expected {} labels, found {}", 2 * n, labels.len())));
    }
    CircleRep::parse(&labels)
}

pub fn parse_encoding(text: &str) -> Result<Encoding> {
    let values = numbers(text)?;
    values
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| parse_err(format!("value {v} too large"))))
        .collect::<Result<Vec<u32>>>()
        .map(Encoding)
}

pub fn format_graph(g: &ColoredGraph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn format_rep(rep: &CircleRep) -> String {
    let labels: Vec<String> = rep.word().iter().map(|l| l.to_string()).collect();
    format!("rep {}\n{}\n", rep.chord_count(), labels.join(" "))
}

pub fn format_encoding(e: &Encoding) -> String {
    format!("{e}\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = ColoredGraph::uncolored(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = format_graph(&g);
        assert_eq!(text, "graph 4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn rep_labels_are_normalized() {
        let (rep, labels) = parse_rep("rep 2\n7 3 7 3\n").unwrap();
        assert_eq!(rep.word(), &[0, 1, 0, 1]);
        assert_eq!(labels, vec![7, 3]);
        assert_eq!(format_rep(&rep), "rep 2\n0 1 0 1\n");
    }

    #[test]
    fn detection_by_header() {
        assert!(matches!(parse_document("graph 1 0\n").unwrap(), Document::Graph(_)));
        assert!(matches!(parse_document("rep 1\n0 0").unwrap(), Document::Rep(..)));
        assert!(parse_document("chords 1\n0 0").is_err());
        assert!(parse_document("").is_err());
        assert!(parse_document("graph 2 1\n0 1\nrep 1\n0 0\n").is_err());
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph("graph 3 2\n0 1\n").is_err());
        assert!(parse_graph("graph 3 1\n0 7\n").is_err());
        assert!(parse_graph("graph 3\n").is_err());
        assert!(parse_rep("rep 2\n0 1 0\n").is_err());
        assert!(parse_rep("rep 2\n0 1 0 2\n").is_err());
        assert!(parse_encoding("1 -2").is_err());
        assert_eq!(parse_encoding(" 1 6 1\n").unwrap().0, vec![1, 6, 1]);
    }
}
