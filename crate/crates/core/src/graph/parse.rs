//! Plain-text edge lists.
//!
//! One `u v` pair per line. An optional `p <n>` header fixes the vertex
//! count; blank lines and `#` comments are ignored. Without a header the
//! labels that occur are renumbered densely in increasing order, so an input
//! already using `0..n` keeps its numbering.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Graph, Vertex};
use crate::error::{Error, ParseErrorKind, Result};

/// Raw label pairs read from an edge list, before any renumbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelPairs {
    pub declared_n: Option<usize>,
    /// `(u, v, line)` with 1-based line numbers.
    pub pairs: Vec<(usize, usize, usize)>,
}

fn parse_token(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(ParseErrorKind::Syntax, line, format!("bad token {token:?}")))
}

/// Tokenizes an edge list, rejecting self-loops and repeated pairs.
pub fn parse_label_pairs(text: &str) -> Result<LabelPairs> {
    let mut declared_n = None;
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            ["p", count] => {
                if declared_n.is_some() || !pairs.is_empty() {
                    return Err(Error::parse(
                        ParseErrorKind::Syntax,
                        line,
                        "header must precede all edges and appear once",
                    ));
                }
                declared_n = Some(parse_token(count, line)?);
            }
            [a, b] => {
                let u = parse_token(a, line)?;
                let v = parse_token(b, line)?;
                if u == v {
                    return Err(Error::parse(
                        ParseErrorKind::SelfLoop,
                        line,
                        format!("{u} {v}"),
                    ));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::parse(
                        ParseErrorKind::DuplicateEdge,
                        line,
                        format!("{u} {v}"),
                    ));
                }
                pairs.push((u, v, line));
            }
            _ => {
                return Err(Error::parse(
                    ParseErrorKind::Syntax,
                    line,
                    format!("expected two vertex labels, got {:?}", content.trim()),
                ))
            }
        }
    }
    Ok(LabelPairs { declared_n, pairs })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let LabelPairs { declared_n, pairs } = parse_label_pairs(text)?;
    match declared_n {
        Some(n) => {
            if let Some(&(u, v, line)) = pairs.iter().find(|&&(u, v, _)| u >= n || v >= n) {
                return Err(Error::parse(
                    ParseErrorKind::Syntax,
                    line,
                    format!("label {} exceeds declared vertex count {n}", u.max(v)),
                ));
            }
            Graph::from_edges(n, pairs.into_iter().map(|(u, v, _)| (u, v)))
        }
        None => {
            let mut labels: Vec<usize> = pairs.iter().flat_map(|&(u, v, _)| [u, v]).collect();
            labels.sort_unstable();
            labels.dedup();
            let id = |label: usize| -> Vertex { labels.binary_search(&label).unwrap_or_default() };
            let edges: Vec<(Vertex, Vertex)> =
                pairs.iter().map(|&(u, v, _)| (id(u), id(v))).collect();
            Ok(Graph::from_edges(labels.len(), edges)?.with_labels(labels))
        }
    }
}

/// Canonical text: `u v` with `u < v`, sorted, one per line, in input labels.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(g.edge_count() * 8);
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(e.u()), g.label(e.v()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn parses_path() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_self_loop() {
        let err = parse_edge_list("0 0").unwrap_err();
        assert_eq!(err.parse_kind(), Some(ParseErrorKind::SelfLoop));
    }

    #[test]
    fn rejects_duplicate_in_either_orientation() {
        let err = parse_edge_list("0 1\n1 0").unwrap_err();
        assert_eq!(err.parse_kind(), Some(ParseErrorKind::DuplicateEdge));
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn rejects_malformed_tokens() {
        for text in ["0 x", "0 1 2", "-1 2", "p", "0 1\np 3"] {
            let err = parse_edge_list(text).unwrap_err();
            assert_eq!(err.parse_kind(), Some(ParseErrorKind::Syntax), "{text:?}");
        }
    }

    #[test]
    fn header_keeps_isolated_vertices() {
        let g =
            parse_edge_list("# triangle plus one\np 4\n0 1\n1 2\n\n2 0 # closing edge\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(3), 0);
        assert!(parse_edge_list("p 2\n0 2").is_err());
    }

    #[test]
    fn sparse_labels_are_renumbered_in_order() {
        let g = parse_edge_list("10 500\n500 7").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.labels(), &[7, 10, 500]);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![Edge::new(0, 2), Edge::new(1, 2)]
        );
        assert_eq!(write_edge_list(&g), "7 500\n10 500\n");
    }

    #[test]
    fn writer_is_sorted_and_canonical() {
        let g = parse_edge_list("2 1\n0 2\n1 0").unwrap();
        assert_eq!(write_edge_list(&g), "0 1\n0 2\n1 2\n");
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
