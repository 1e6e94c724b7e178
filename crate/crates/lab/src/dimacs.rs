//! DIMACS-style edge lists.
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1-based ids)
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use ecclab_core::edge_clique::IteratedEdgeClique;
use ecclab_core::Graph;

use crate::error::{LabError, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["p", "edge" | "col", n, m] => {
                if header.is_some() {
                    return Err(LabError::format(line_no, "second problem line"));
                }
                header = Some((number(n, line_no)?, number(m, line_no)?));
            }
            ["e", u, v] => {
                let Some((n, _)) = header else {
                    return Err(LabError::format(line_no, "edge before the problem line"));
                };
                let (u, v) = (number(u, line_no)?, number(v, line_no)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(LabError::format(line_no, format!("vertex id out of range 1..={n}")));
                }
                if u == v {
                    return Err(LabError::format(line_no, format!("self-loop at {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(LabError::format(line_no, format!("duplicate edge {u} {v}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(LabError::format(line_no, format!("unrecognised line {line:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| LabError::format(0, "missing `p edge` line"))?;
    if edges.len() != m {
        return Err(LabError::format(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Header, then edges `u < v` in lexicographic order, 1-based.
pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
    parse_graph(&text)
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    fs::write(path, format_graph(g)).map_err(|e| LabError::io(path, e))
}

/// Catalog lines `i u v`: vertex `i` of each level is edge `(u, v)` of the
/// level before it, all 1-based like the graph files. Levels after the
/// first are introduced by a `c level <k>` comment.
pub fn format_catalog(chain: &IteratedEdgeClique) -> String {
    let mut out = String::new();
    for (k, level) in chain.levels.iter().enumerate() {
        if chain.levels.len() > 1 {
            writeln!(out, "c level {}", k + 1).unwrap();
        }
        for (i, &(u, v)) in level.catalog.edges().iter().enumerate() {
            writeln!(out, "{} {} {}", i + 1, u + 1, v + 1).unwrap();
        }
    }
    out
}

fn number(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| LabError::format(line, format!("expected a non-negative integer, got {s:?}")))
}
