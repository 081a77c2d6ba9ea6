//! Edge-list text format and DOT export.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines; digraphs may add a multiplicity: u v k)
//! ```

use std::fmt::Write as _;

use super::{Digraph, Graph};
use crate::error::{Error, Result};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Malformed {
        line,
        message: format!("expected a nonnegative integer, found '{token}'"),
    })
}

/// `(line, u, v, third column or 1)`.
pub(crate) type Row = (usize, usize, usize, usize);

/// Header plus rows of 2 (or, with `allow_third`, 3) integers.
pub(crate) fn parse_rows(text: &str, allow_third: bool) -> Result<(usize, Vec<Row>)> {
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Malformed {
        line: 0,
        message: "missing 'n m' header".into(),
    })?;
    if header.len() != 2 {
        return Err(Error::Malformed { line: hline, message: "header must be 'n m'".into() });
    }
    let n = number(hline, header[0])?;
    let m = number(hline, header[1])?;
    let mut rows = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, tokens) in lines {
        last_line = line;
        let ok_len = tokens.len() == 2 || (allow_third && tokens.len() == 3);
        if !ok_len {
            return Err(Error::Malformed { line, message: "expected 'u v'".into() });
        }
        let u = number(line, tokens[0])?;
        let v = number(line, tokens[1])?;
        let k = tokens.get(2).map(|t| number(line, t)).transpose()?.unwrap_or(1);
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        rows.push((line, u, v, k));
    }
    if rows.len() != m {
        return Err(Error::Malformed {
            line: last_line,
            message: format!("header promised {m} edges, found {}", rows.len()),
        });
    }
    Ok((n, rows))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, rows) = parse_rows(text, false)?;
    Graph::new(n, rows.into_iter().map(|(_, u, v, _)| (u, v)))
}

/// Digraph rows may carry a third token: the number of parallel arcs.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let (n, rows) = parse_rows(text, true)?;
    Digraph::new(n, rows.into_iter().map(|(_, u, v, k)| (u, v, k)))
}

/// Rendering class of an edge in a DOT export.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeStyle {
    Forest,
    R1,
    R2,
    R3,
    Plain,
    Hidden,
}

impl EdgeStyle {
    fn attrs(self) -> Option<&'static str> {
        match self {
            EdgeStyle::Forest => Some("style=solid, penwidth=2.5"),
            EdgeStyle::R1 => Some("style=dashed, color=blue, label=\"R1\""),
            EdgeStyle::R2 => Some("style=dashed, color=darkgreen, label=\"R2\""),
            EdgeStyle::R3 => Some("style=dashed, color=red, label=\"R3\""),
            EdgeStyle::Plain => Some("style=dotted, color=gray50"),
            EdgeStyle::Hidden => None,
        }
    }
}

/// DOT text for `g`, styling each edge through `style`.
pub fn graph_to_dot(g: &Graph, style: impl Fn(usize, usize) -> EdgeStyle) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in g.edges() {
        if let Some(attrs) = style(u, v).attrs() {
            let _ = writeln!(out, "  {u} -- {v} [{attrs}];");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k3_and_p3() {
        let k3 = parse_graph("3 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(k3, Graph::complete(3));
        let p3 = parse_graph("# a path\n3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(p3, Graph::path(3));
    }

    #[test]
    fn rejects() {
        assert_eq!(parse_graph("3 2\n1 2\n1 2"), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(parse_graph("3 1\n1 1"), Err(Error::Loop(1)));
        assert_eq!(parse_graph("3 1\n1 5"), Err(Error::VertexOutOfRange { vertex: 5, n: 3 }));
        assert!(matches!(parse_graph("3 1\n1 x"), Err(Error::Malformed { line: 2, .. })));
        assert!(matches!(parse_graph("3 2\n1 2"), Err(Error::Malformed { .. })));
        assert!(matches!(parse_graph("3 1\n1 2 1"), Err(Error::Malformed { .. })));
        assert!(matches!(parse_graph(""), Err(Error::Malformed { line: 0, .. })));
    }

    #[test]
    fn digraph_multiplicity() {
        let d = parse_digraph("2 2\n2 1 2\n1 2\n").unwrap();
        assert_eq!(d.arc_count(), 3);
        assert_eq!(parse_digraph(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn dot_export_styles() {
        let dot = graph_to_dot(&Graph::complete(3), |u, v| {
            if (u, v) == (2, 3) { EdgeStyle::R3 } else { EdgeStyle::Forest }
        });
        assert!(dot.contains("2 -- 3 [style=dashed, color=red, label=\"R3\"]"));
        assert!(dot.contains("1 -- 2 [style=solid, penwidth=2.5]"));
    }
}
