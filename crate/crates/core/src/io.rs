//! Plain-text edge lists.
//!
//! One `u v` pair per line with one-based vertex labels. `#` starts a
//! comment, blank lines are skipped, and an optional `p <n> <m>` header (the
//! DIMACS `p edge <n> <m>` form is accepted too) fixes the vertex count.
//! Lines of the form `e u v` are read as edges. Without a header the vertex
//! count is the largest label seen.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut max_label = 0usize;
    let mut edges = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens: Vec<&str> = content.split_whitespace().collect();
        let parse = |tok: &str| -> Result<usize> {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("expected a non-negative integer, found {tok:?}"),
            })
        };
        match tokens[0] {
            "p" => {
                if declared.is_some() {
                    return Err(Error::Parse { line: lineno, msg: "duplicate header".into() });
                }
                if tokens.len() == 4 {
                    tokens.remove(1);
                }
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "header must read `p <n> <m>`".into(),
                    });
                }
                declared = Some(parse(tokens[1])?);
                parse(tokens[2])?;
                continue;
            }
            "e" => {
                tokens.remove(0);
            }
            _ => {}
        }
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected `u v`, found {content:?}"),
            });
        }
        let (a, b) = (parse(tokens[0])?, parse(tokens[1])?);
        if a == 0 || b == 0 {
            return Err(Error::Parse { line: lineno, msg: "vertex labels start at 1".into() });
        }
        if a == b {
            return Err(Error::Parse { line: lineno, msg: format!("self-loop at vertex {a}") });
        }
        if let Some(n) = declared {
            if a.max(b) > n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex {} exceeds the declared count {n}", a.max(b)),
                });
            }
        }
        max_label = max_label.max(a).max(b);
        edges.push((a - 1, b - 1));
    }

    let n = declared.unwrap_or(max_label);
    Graph::from_edges(n, &edges)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

/// Edges rendered as `u-v` (one-based, `u < v`), space-separated.
pub fn format_edge_set(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|&(a, b)| format!("{}-{}", a.min(b) + 1, a.max(b) + 1))
        .collect::<Vec<_>>()
        .join(" ")
}
