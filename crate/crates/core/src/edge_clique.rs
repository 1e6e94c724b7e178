//! The edge-clique graph transform and its iterates.
//!
//! `K_e(G)` has one vertex per edge of `G`; two edges are adjacent when some
//! clique of `G` contains both, i.e. when the union of their endpoints
//! induces a complete subgraph.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the vertex count of any intermediate graph built by
/// [`iterated_edge_clique`].
pub const DEFAULT_VERTEX_BUDGET: usize = 5000;

/// Edges of a graph in lexicographic order; position `i` is vertex `i` of
/// the edge-clique graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCatalog {
    edges: Vec<(usize, usize)>,
}

impl EdgeCatalog {
    pub fn of(g: &Graph) -> Self {
        EdgeCatalog { edges: g.edges().collect() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Catalog position of edge `{u, v}`, in either orientation.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// Catalog positions of all edges inside `clique`.
    pub fn edges_within(&self, clique: &VertexSet) -> VertexSet {
        let members = clique.to_vec();
        let mut out = VertexSet::new(self.len());
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if let Some(e) = self.index_of(u, v) {
                    out.insert(e);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCliqueResult {
    pub graph: Graph,
    pub catalog: EdgeCatalog,
}

/// Builds `K_e(g)`.
///
/// For an edge `ab`, let `K = N[a] ∩ N[b]`. Another edge `cd` lies in a
/// common clique with `ab` exactly when both `c` and `d` are in `K`.
pub fn edge_clique_graph(g: &Graph) -> EdgeCliqueResult {
    let catalog = EdgeCatalog::of(g);
    let m = catalog.len();
    let mut rows: Vec<VertexSet> = (0..m).map(|_| VertexSet::new(m)).collect();
    for (i, &(a, b)) in catalog.edges().iter().enumerate() {
        let common = g.closed_neighborhood(a).intersection(&g.closed_neighborhood(b));
        for (j, &(c, d)) in catalog.edges().iter().enumerate().skip(i + 1) {
            if common.contains(c) && common.contains(d) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    EdgeCliqueResult { graph: Graph::from_rows(rows), catalog }
}

/// The chain `G, K_e(G), K_e²(G), …, K_e^r(G)`.
#[derive(Debug, Clone)]
pub struct IteratedEdgeClique {
    pub base: Graph,
    /// `levels[i]` is `K_e^{i+1}(base)` with its catalog into the previous level.
    pub levels: Vec<EdgeCliqueResult>,
}

impl IteratedEdgeClique {
    /// The final graph of the chain (`base` when `r = 0`).
    pub fn last(&self) -> &Graph {
        self.levels.last().map_or(&self.base, |l| &l.graph)
    }
}

/// Applies the edge-clique transform `r` times. Fails before building any
/// level whose vertex count would exceed `vertex_budget`.
pub fn iterated_edge_clique(g: &Graph, r: usize, vertex_budget: usize) -> Result<IteratedEdgeClique> {
    let mut levels: Vec<EdgeCliqueResult> = Vec::with_capacity(r);
    for _ in 0..r {
        let current = levels.last().map_or(g, |l| &l.graph);
        let m = current.edge_count();
        if m > vertex_budget {
            return Err(Error::ResourceLimit { what: "edge-clique graph", size: m, limit: vertex_budget });
        }
        let next = edge_clique_graph(current);
        levels.push(next);
    }
    Ok(IteratedEdgeClique { base: g.clone(), levels })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// Maximal cliques of `G`.
    pub count_g: usize,
    /// Maximal cliques of `K_e(G)`.
    pub count_ke: usize,
    /// Every image is a maximal clique of `K_e(G)`.
    pub images_maximal: bool,
    pub injective: bool,
    pub matched: bool,
}

/// Checks the one-to-one correspondence between maximal cliques of `g` and
/// of `K_e(g)` that sends a clique to the set of its edges.
///
/// Isolated vertices are maximal cliques with no edges and therefore no
/// image, so they are rejected up front.
pub fn verify_clique_correspondence(g: &Graph) -> Result<CorrespondenceReport> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(Error::IsolatedVertices(isolated.to_vec()));
    }
    let ke = edge_clique_graph(g);
    let cliques_g = g.maximal_cliques();
    let cliques_ke: BTreeSet<VertexSet> = ke.graph.maximal_cliques().into_iter().collect();

    let images: Vec<VertexSet> = cliques_g.iter().map(|c| ke.catalog.edges_within(c)).collect();
    let images_maximal = images.iter().all(|img| cliques_ke.contains(img));
    let distinct: BTreeSet<&VertexSet> = images.iter().collect();
    let injective = distinct.len() == images.len();
    let matched = images_maximal && injective && cliques_g.len() == cliques_ke.len();
    Ok(CorrespondenceReport {
        count_g: cliques_g.len(),
        count_ke: cliques_ke.len(),
        images_maximal,
        injective,
        matched,
    })
}
