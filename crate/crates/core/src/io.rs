//! Plain-text graph format.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        (m edge lines, 0-indexed)
//! l i label  (optional; either none or all n vertices labeled)
//! ```
//!
//! The writer is canonical: header, edges with `u < v` in ascending order,
//! then label lines in index order, one trailing newline each. Canonical
//! files round-trip bit for bit.

use crate::graph::{build_graph, Graph, GraphError};
use crate::product::ProductLabeling;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if header.is_none() {
            let mut it = line.split_whitespace();
            let n = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(lineno, "expected 'n m' header"))?;
            let m = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(lineno, "expected 'n m' header"))?;
            if it.next().is_some() {
                return Err(parse_err(lineno, "trailing tokens after header"));
            }
            header = Some((n, m));
        } else if let Some(rest) = line.strip_prefix("l ") {
            let (i, label) = rest
                .split_once(' ')
                .ok_or_else(|| parse_err(lineno, "expected 'l i label'"))?;
            let i = i
                .parse()
                .map_err(|_| parse_err(lineno, "bad label index"))?;
            labels.push((i, label.to_string()));
        } else {
            let mut it = line.split_whitespace();
            let u = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(lineno, "expected 'u v' edge"))?;
            let v = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| parse_err(lineno, "expected 'u v' edge"))?;
            if it.next().is_some() {
                return Err(parse_err(lineno, "trailing tokens after edge"));
            }
            edges.push((u, v));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing 'n m' header"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    let labels = if labels.is_empty() {
        None
    } else {
        if labels.len() != n {
            return Err(parse_err(
                0,
                format!("{} label lines for {n} vertices; label none or all", labels.len()),
            ));
        }
        let mut by_index = vec![None; n];
        for (i, l) in labels {
            if i >= n {
                return Err(parse_err(0, format!("label index {i} out of range")));
            }
            if by_index[i].replace(l).is_some() {
                return Err(parse_err(0, format!("vertex {i} labeled twice")));
            }
        }
        Some(by_index.into_iter().map(Option::unwrap).collect())
    };
    Ok(build_graph(n, &edges, labels)?)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.num_edges());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            out.push_str(&format!("l {i} {l}\n"));
        }
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, FormatError> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<(), FormatError> {
    Ok(std::fs::write(path, format_graph(g))?)
}

/// Sidecar emitted next to product files: one `index a v` line per product
/// vertex, preceded by a header naming the factor sizes.
pub fn format_product_sidecar(labeling: &ProductLabeling) -> String {
    let mut out = format!("# product index map: {} x {}\n", labeling.n_g(), labeling.n_h());
    for idx in 0..labeling.n_g() * labeling.n_h() {
        let (a, v) = labeling.factors(idx);
        out.push_str(&format!("{idx} {a} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, FamilySpec};

    #[test]
    fn canonical_file_round_trips_bit_exact() {
        let text = "4 3\n0 1\n1 2\n2 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(format_graph(&g), text);
        let again = parse_graph(&format_graph(&g)).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn labels_and_comments() {
        let text = "# a triangle\n3 3\n0 1\n# middle comment\n0 2\n1 2\nl 0 a\nl 1 b\nl 2 c\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.label(1), Some("b"));
        assert_eq!(format_graph(&g), "3 3\n0 1\n0 2\n1 2\nl 0 a\nl 1 b\nl 2 c\n");
    }

    #[test]
    fn generated_families_round_trip() {
        for spec in [
            FamilySpec::Hypercube { n: 4 },
            FamilySpec::Comb { n: 5 },
            FamilySpec::Gnk { n: 2, k: 2 },
            FamilySpec::Hamming { n: 2, k: 4 },
        ] {
            let g = generate(&spec).unwrap();
            let text = format_graph(&g);
            assert_eq!(parse_graph(&text).unwrap(), g, "{spec}");
            assert_eq!(format_graph(&parse_graph(&text).unwrap()), text, "{spec}");
        }
    }

    #[test]
    fn parse_errors_are_located() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("2 1\n0 1\n0 1\n").is_err(), "edge count mismatch");
        assert!(parse_graph("2 1\n0 x\n").is_err());
        assert!(parse_graph("3 2\n0 1\n1 2\nl 0 only\n").is_err(), "partial labels");
        // Disconnected input is a graph error, not a parse error.
        assert!(matches!(
            parse_graph("4 1\n0 1\n"),
            Err(FormatError::Graph(GraphError::Disconnected))
        ));
    }

    #[test]
    fn sidecar_lists_every_product_vertex() {
        let lab = ProductLabeling::new(2, 3);
        let s = format_product_sidecar(&lab);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[1], "0 0 0");
        assert_eq!(lines[6], "5 1 2");
    }
}
