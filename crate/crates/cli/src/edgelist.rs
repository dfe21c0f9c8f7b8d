//! Edge-list and vertex-list text formats.
//!
//! An edge list starts with a header `n m` followed by `m` lines `u v`
//! (0-indexed). Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use kordered::graph::Graph;
use kordered::{Error, Result};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|e| Error::Parse(format!("line {line_no}: {s:?}: {e}")))
    };
    match fields.as_slice() {
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(Error::Parse(format!("line {line_no}: expected two integers, got {line:?}"))),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| Error::Parse("missing header line".into()))?;
    let (n, m) = two_numbers(line_no, header)?;
    let mut seen = BTreeSet::new();
    for (line_no, line) in lines {
        let (u, v) = two_numbers(line_no, line)?;
        if u == v {
            return Err(Error::Parse(format!("line {line_no}: self-loop at {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::Parse(format!("line {line_no}: vertex out of range for n = {n}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse(format!("line {line_no}: duplicate edge {u}-{v}")));
        }
    }
    if seen.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", seen.len())));
    }
    Graph::from_edges(n, seen)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

/// Integers separated by commas and/or whitespace; `#` starts a comment line.
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    data_lines(text)
        .flat_map(|(line_no, l)| {
            l.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(move |s| {
                    s.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("line {line_no}: {s:?}: {e}")))
                })
        })
        .collect()
}
