//! Plain-text hypergraph format.
//!
//! ```text
//! # optional comment lines
//! n r
//! 1 2
//! 1 3
//! ```
//!
//! The first non-comment line holds `n r`; every later line is one edge as
//! `r` increasing 1-based vertex ids. The writer emits edges in rank order.
//! Blank lines and lines starting with `#` are ignored by the reader, but
//! header comments of the form `# key: value` are returned to the caller.

use std::fmt::Write as _;

use super::{Hyperedge, Hypergraph};
use crate::error::{Error, Result};

/// A parsed file: the hypergraph plus its `# key: value` header comments.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub hypergraph: Hypergraph,
    pub headers: Vec<(String, String)>,
}

impl Document {
    pub fn header(&self, key: &str) -> Option<&str> {
        self.headers
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse(input: &str) -> Result<Document> {
    let mut headers = Vec::new();
    let mut graph: Option<Hypergraph> = None;
    for (i, raw) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((k, v)) = comment.split_once(':') {
                headers.push((k.trim().to_string(), v.trim().to_string()));
            }
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| parse_err(lineno, format!("not a nonnegative integer: {t:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        match graph.as_mut() {
            None => {
                let [n, r] = nums[..] else {
                    return Err(parse_err(lineno, "expected header line \"n r\""));
                };
                graph = Some(Hypergraph::new(n, r).map_err(|e| parse_err(lineno, e.to_string()))?);
            }
            Some(h) => {
                if nums.len() != h.r() as usize {
                    return Err(parse_err(
                        lineno,
                        format!("edge has {} ids, expected {}", nums.len(), h.r()),
                    ));
                }
                if nums.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(parse_err(lineno, "edge ids must be strictly increasing"));
                }
                let edge =
                    Hyperedge::from_one_based(&nums).map_err(|e| parse_err(lineno, e.to_string()))?;
                let fresh = h.insert(edge).map_err(|e| parse_err(lineno, e.to_string()))?;
                if !fresh {
                    return Err(parse_err(lineno, "duplicate edge"));
                }
            }
        }
    }
    let hypergraph = graph.ok_or_else(|| parse_err(0, "missing \"n r\" header line"))?;
    Ok(Document {
        hypergraph,
        headers,
    })
}

/// Serializes a hypergraph; each header becomes a `# key: value` line.
pub fn write(h: &Hypergraph, headers: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (k, v) in headers {
        let _ = writeln!(out, "# {k}: {v}");
    }
    let _ = writeln!(out, "{} {}", h.n(), h.r());
    for e in h.edges() {
        let ids: Vec<String> = e.vertices().iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    out
}

/// Formats a 0-based vertex list as space-separated 1-based ids.
pub fn format_vertex_list<'a, I: IntoIterator<Item = &'a u32>>(vertices: I) -> String {
    vertices
        .into_iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses space-separated 1-based ids into 0-based ids.
pub fn parse_vertex_list(s: &str) -> Result<Vec<u32>> {
    s.split_whitespace()
        .map(|t| match t.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(crate::error::invalid!("bad vertex id {t:?}")),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_headers() {
        let h = Hypergraph::from_one_based(5, 2, &[&[2, 3], &[1, 2], &[4, 5]]).unwrap();
        let text = write(&h, &[("Z", "1 2 3".to_string())]);
        assert_eq!(text, "# Z: 1 2 3\n5 2\n1 2\n2 3\n4 5\n");
        let doc = parse(&text).unwrap();
        assert_eq!(doc.hypergraph, h);
        assert_eq!(doc.header("Z"), Some("1 2 3"));
        assert_eq!(parse_vertex_list("1 2 3").unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn tolerates_blank_and_comment_lines() {
        let doc = parse("# generated\n\n3 2\n# edge follows\n1 3\n\n").unwrap();
        assert_eq!(doc.hypergraph.edge_count(), 1);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("3 2\n2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 2\n1 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 2\n1 2\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("3 2\n1 2 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 2\n1 x\n"), Err(Error::Parse { line: 2, .. })));
    }
}
