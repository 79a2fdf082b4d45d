use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::Graph;
use crate::{Error, Result};

/// Parses the edge-list text format.
///
/// The first significant line is `n m`; it is followed by exactly `m` lines
/// `u v` with 1-based vertex labels. Blank lines and lines whose first
/// non-blank character is `#` are skipped. Edges keep their file order, which
/// fixes the canonical arc order of the resulting graph.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line \"n m\"".to_string(),
    })?;
    let [n, m] = two_numbers(header_line, header)?;
    if n == 0 {
        return Err(Error::Parse {
            line: header_line,
            message: "vertex count must be positive".to_string(),
        });
    }
    if m == 0 {
        return Err(Error::NoEdges);
    }

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let [u, v] = two_numbers(line, body)?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {w} out of range 1..={n}"),
                });
            }
        }
        edges.push((u - 1, v - 1));
        last_line = line;
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line + 1,
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn two_numbers(line: usize, body: &str) -> Result<[usize; 2]> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: "expected two integers".to_string(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "trailing tokens after two integers".to_string(),
        });
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_edge_list("3 3\n1 2\n2 3\n3 1").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.degrees(), &[2, 2, 2]);
    }

    #[test]
    fn single_edge() {
        let g = parse_edge_list("2 1\n1 2").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(g.degrees(), &[1, 1]);
    }

    #[test]
    fn complete_four() {
        let g = parse_edge_list("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4").unwrap();
        assert_eq!(g.degrees(), &[3, 3, 3, 3]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# a path\n\n3 2\n  # inner\n1 2\n\n2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_edge_list("3 2\n1 2\n2 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse_edge_list("3 2\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn wrong_edge_count() {
        assert!(matches!(
            parse_edge_list("3 3\n1 2\n2 3\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 2\n2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn rejects_bad_graphs() {
        assert_eq!(
            parse_edge_list("3 3\n1 2\n2 1\n2 3"),
            Err(Error::DuplicateEdge(2, 1))
        );
        assert_eq!(parse_edge_list("2 1\n2 2"), Err(Error::SelfLoop(2)));
        assert_eq!(
            parse_edge_list("5 2\n1 2\n3 4"),
            Err(Error::Disconnected { components: 3 })
        );
        assert!(matches!(
            parse_edge_list("2 1\n1 3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
    }
}
