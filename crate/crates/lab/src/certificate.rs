//! JSON certificates for solver results and branch decompositions.
//!
//! Vertex ids are 0-based. Every document carries `schema: 1`.

use std::fs;
use std::path::Path;

use ecclab_core::rankwidth::{verify_branch_decomposition, BranchDecomposition};
use ecclab_core::solvers::{is_proper_coloring, verify_cover, verify_vertex_clique_cover, CliqueCover, SolveReport};
use ecclab_core::{Graph, VertexSet};
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::error::{LabError, Result};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    Alpha,
    Chi,
    Kappa,
    ThetaE,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Alpha => "alpha",
            Problem::Chi => "chi",
            Problem::Kappa => "kappa",
            Problem::ThetaE => "theta-e",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphId {
    pub n: usize,
    pub m: usize,
    /// Hex FNV-1a digest of the edge list.
    pub fingerprint: String,
}

impl GraphId {
    pub fn of(g: &Graph) -> Self {
        GraphId { n: g.n(), m: g.edge_count(), fingerprint: format!("{:016x}", g.fingerprint()) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveCertificate {
    pub schema: u32,
    pub problem: Problem,
    pub graph: GraphId,
    pub objective: usize,
    pub lower_bound: usize,
    pub optimal: bool,
    pub nodes_explored: u64,
    pub wall_time_ms: f64,
    /// Cliques for `kappa` and `theta-e`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<usize>>>,
    /// Independent set for `alpha`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Colour of each vertex for `chi`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
}

impl SolveCertificate {
    fn base<C>(problem: Problem, g: &Graph, r: &SolveReport<C>) -> Self {
        SolveCertificate {
            schema: SCHEMA,
            problem,
            graph: GraphId::of(g),
            objective: r.objective,
            lower_bound: r.lower_bound,
            optimal: r.optimal,
            nodes_explored: r.nodes_explored,
            wall_time_ms: r.wall_time.map_or(0.0, |d| d.as_secs_f64() * 1e3),
            parts: None,
            witness: None,
            coloring: None,
        }
    }

    pub fn independent_set(g: &Graph, r: &SolveReport<VertexSet>) -> Self {
        SolveCertificate { witness: Some(r.certificate.to_vec()), ..Self::base(Problem::Alpha, g, r) }
    }

    pub fn coloring(g: &Graph, r: &SolveReport<Vec<usize>>) -> Self {
        SolveCertificate { coloring: Some(r.certificate.clone()), ..Self::base(Problem::Chi, g, r) }
    }

    /// `problem` is `Kappa` or `ThetaE`.
    pub fn cover(problem: Problem, g: &Graph, r: &SolveReport<CliqueCover>) -> Self {
        let parts = r.certificate.parts.iter().map(VertexSet::to_vec).collect();
        SolveCertificate { parts: Some(parts), ..Self::base(problem, g, r) }
    }
}

/// Outcome of re-checking a certificate against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub valid: bool,
    pub detail: String,
}

impl Check {
    fn fail(detail: impl Into<String>) -> Self {
        Check { valid: false, detail: detail.into() }
    }
}

/// Re-verifies a solve certificate from scratch. Optimality is not
/// re-proved; the certificate's objective must be achieved by its witness.
pub fn check_solve(g: &Graph, c: &SolveCertificate) -> Check {
    if c.schema != SCHEMA {
        return Check::fail(format!("unsupported schema {}", c.schema));
    }
    if c.graph != GraphId::of(g) {
        return Check::fail("certificate belongs to a different graph");
    }
    let n = g.n();
    let to_set = |vs: &[usize]| -> Option<VertexSet> {
        vs.iter().all(|&v| v < n).then(|| VertexSet::from_iter_in(n, vs.iter().copied()))
    };
    match c.problem {
        Problem::Alpha => {
            let Some(w) = &c.witness else { return Check::fail("missing witness") };
            let Some(s) = to_set(w) else { return Check::fail("witness vertex out of range") };
            if s.len() != w.len() {
                return Check::fail("witness repeats a vertex");
            }
            if !g.is_independent(&s) {
                return Check::fail("witness is not independent");
            }
            if s.len() != c.objective {
                return Check::fail(format!("witness has {} vertices, objective is {}", s.len(), c.objective));
            }
        }
        Problem::Chi => {
            let Some(col) = &c.coloring else { return Check::fail("missing coloring") };
            if col.len() != n || !is_proper_coloring(g, col) {
                return Check::fail("coloring is not proper");
            }
            let used = col.iter().copied().collect::<std::collections::BTreeSet<_>>().len();
            if used != c.objective {
                return Check::fail(format!("coloring uses {used} colours, objective is {}", c.objective));
            }
        }
        Problem::Kappa | Problem::ThetaE => {
            let Some(parts) = &c.parts else { return Check::fail("missing parts") };
            let Some(sets) = parts.iter().map(|p| to_set(p)).collect::<Option<Vec<_>>>() else {
                return Check::fail("part vertex out of range");
            };
            let cover = CliqueCover { parts: sets, graph: g.fingerprint() };
            let ok = if c.problem == Problem::Kappa {
                verify_vertex_clique_cover(g, &cover)
            } else {
                verify_cover(g, &cover)
            };
            if !ok {
                return Check::fail(format!("parts are not a valid {} cover", c.problem.name()));
            }
            if parts.len() != c.objective {
                return Check::fail(format!("{} parts, objective is {}", parts.len(), c.objective));
            }
        }
    }
    Check { valid: true, detail: format!("{} = {} re-verified", c.problem.name(), c.objective) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafLabel {
    pub node: usize,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCertificate {
    pub schema: u32,
    pub graph: GraphId,
    /// `exact`, `linear` or `greedy`.
    pub method: String,
    pub width: usize,
    pub nodes: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub leaves: Vec<LeafLabel>,
}

impl DecompositionCertificate {
    pub fn new(g: &Graph, method: &str, d: &BranchDecomposition) -> Self {
        DecompositionCertificate {
            schema: SCHEMA,
            graph: GraphId::of(g),
            method: method.to_owned(),
            width: d.width,
            nodes: (0..d.node_count).collect(),
            edges: d.edges.iter().map(|&(a, b)| [a, b]).collect(),
            leaves: d
                .leaf_vertex
                .iter()
                .enumerate()
                .filter_map(|(node, v)| v.map(|vertex| LeafLabel { node, vertex }))
                .collect(),
        }
    }

    /// Node ids must be exactly `0..nodes.len()`.
    pub fn to_decomposition(&self) -> Result<BranchDecomposition> {
        let count = self.nodes.len();
        if self.nodes.iter().enumerate().any(|(i, &x)| i != x) {
            return Err(LabError::Usage("decomposition nodes must be numbered 0, 1, 2, ...".into()));
        }
        let mut leaf_vertex = vec![None; count];
        for l in &self.leaves {
            let slot = leaf_vertex
                .get_mut(l.node)
                .ok_or_else(|| LabError::Usage(format!("leaf on unknown node {}", l.node)))?;
            if slot.replace(l.vertex).is_some() {
                return Err(LabError::Usage(format!("node {} labelled twice", l.node)));
            }
        }
        Ok(BranchDecomposition {
            node_count: count,
            edges: self.edges.iter().map(|&[a, b]| (a, b)).collect(),
            leaf_vertex,
            width: self.width,
        })
    }
}

pub fn check_decomposition(g: &Graph, c: &DecompositionCertificate) -> Result<Check> {
    if c.schema != SCHEMA {
        return Ok(Check::fail(format!("unsupported schema {}", c.schema)));
    }
    if c.graph != GraphId::of(g) {
        return Ok(Check::fail("certificate belongs to a different graph"));
    }
    let r = verify_branch_decomposition(g, &c.to_decomposition()?)?;
    Ok(if r.consistent {
        Check { valid: true, detail: format!("width {} re-verified", r.width) }
    } else {
        Check::fail(format!("claimed width {}, recomputed {}", r.claimed, r.width))
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|e| LabError::io(path, e))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}
