//! Minimum edge clique cover.
//!
//! Any clique extends to a maximal one without uncovering anything, so the
//! search is a set cover over the maximal cliques: universe = edges, one set
//! per maximal clique.

use alloc::vec::Vec;

use super::{ceil_log2, Budget, CliqueCover, SolveReport, Unlimited};
use crate::bitset::VertexSet;
use crate::edge_clique::EdgeCatalog;
use crate::graph::Graph;

/// Gyárfás' bound `θ_e(G) ≥ log₂(n + 1)`, which needs a graph without
/// isolated or equivalent vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GyarfasBound {
    /// `⌈log₂(n + 1)⌉`.
    Applicable(usize),
    NotApplicable {
        isolated: Vec<usize>,
        equivalent: Vec<(usize, usize)>,
    },
}

impl GyarfasBound {
    pub fn value(&self) -> Option<usize> {
        match self {
            GyarfasBound::Applicable(k) => Some(*k),
            GyarfasBound::NotApplicable { .. } => None,
        }
    }
}

pub fn gyarfas_lower_bound(g: &Graph) -> GyarfasBound {
    let isolated = g.isolated_vertices().to_vec();
    let equivalent = g.equivalent_vertices();
    if isolated.is_empty() && equivalent.is_empty() {
        GyarfasBound::Applicable(ceil_log2(g.n() + 1))
    } else {
        GyarfasBound::NotApplicable { isolated, equivalent }
    }
}

/// True iff every part is a clique of `g` and every edge lies in some part.
pub fn verify_cover(g: &Graph, cover: &CliqueCover) -> bool {
    if cover.parts.iter().any(|p| p.universe() != g.n() || !g.is_clique(p)) {
        return false;
    }
    g.edges().all(|(u, v)| cover.parts.iter().any(|p| p.contains(u) && p.contains(v)))
}

/// True iff the parts are disjoint cliques of `g` covering every vertex.
pub fn verify_vertex_clique_cover(g: &Graph, cover: &CliqueCover) -> bool {
    if cover.parts.iter().any(|p| p.universe() != g.n() || !g.is_clique(p)) {
        return false;
    }
    let mut seen = VertexSet::new(g.n());
    for p in &cover.parts {
        if seen.intersects(p) {
            return false;
        }
        seen.union_with(p);
    }
    seen.len() == g.n()
}

pub fn edge_clique_cover(g: &Graph) -> SolveReport<CliqueCover> {
    edge_clique_cover_with(g, Unlimited)
}

/// Branch and bound over maximal cliques.
///
/// Each node picks the uncovered edge with the fewest allowed cliques and
/// tries those cliques in order of new coverage; once a clique's subtree is
/// exhausted it is forbidden for its later siblings (include first, then
/// exclude). Bounds: Gyárfás at the root, and at every node the larger of
/// an edge packing (uncovered edges no allowed clique covers two of) and
/// `⌈uncovered / best single-clique coverage⌉`.
pub fn edge_clique_cover_with<B: Budget>(g: &Graph, budget: B) -> SolveReport<CliqueCover> {
    let fingerprint = g.fingerprint();
    let catalog = EdgeCatalog::of(g);
    let m = catalog.len();
    if m == 0 {
        return SolveReport::new(0, CliqueCover { parts: Vec::new(), graph: fingerprint }, 0, 0, true);
    }
    let cliques: Vec<VertexSet> = g.maximal_cliques().into_iter().filter(|c| c.len() >= 2).collect();
    let edge_sets: Vec<VertexSet> = cliques.iter().map(|c| catalog.edges_within(c)).collect();
    let mut cliques_of_edge: Vec<Vec<usize>> = (0..m).map(|_| Vec::new()).collect();
    for (c, es) in edge_sets.iter().enumerate() {
        for e in es {
            cliques_of_edge[e].push(c);
        }
    }

    let greedy = greedy_cover(&edge_sets, m);
    let mut search = Search {
        edge_sets: &edge_sets,
        cliques_of_edge: &cliques_of_edge,
        best: greedy,
        nodes: 0,
        budget,
        stopped: false,
    };
    let all = VertexSet::full(m);
    let no_forbidden = VertexSet::new(cliques.len());
    let root_bound = search.node_bound(&all, &no_forbidden).max(gyarfas_lower_bound(g).value().unwrap_or(0));
    if root_bound < search.best.len() {
        let mut chosen = Vec::new();
        search.branch(all, no_forbidden, &mut chosen, root_bound);
    }

    let parts: Vec<VertexSet> = search.best.iter().map(|&c| cliques[c].clone()).collect();
    let cover = CliqueCover { parts, graph: fingerprint };
    debug_assert!(verify_cover(g, &cover));
    SolveReport::new(cover.parts.len(), cover, root_bound, search.nodes, !search.stopped)
}

fn greedy_cover(edge_sets: &[VertexSet], m: usize) -> Vec<usize> {
    let mut uncovered = VertexSet::full(m);
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (c, _) = edge_sets
            .iter()
            .enumerate()
            .map(|(c, es)| (c, es.intersection_len(&uncovered)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("maximal cliques cover every edge");
        chosen.push(c);
        uncovered.difference_with(&edge_sets[c]);
    }
    chosen
}

struct Search<'a, B> {
    edge_sets: &'a [VertexSet],
    cliques_of_edge: &'a [Vec<usize>],
    best: Vec<usize>,
    nodes: u64,
    budget: B,
    stopped: bool,
}

impl<B: Budget> Search<'_, B> {
    fn allowed<'s>(&'s self, e: usize, forbidden: &'s VertexSet) -> impl Iterator<Item = usize> + 's {
        self.cliques_of_edge[e].iter().copied().filter(move |&c| !forbidden.contains(c))
    }

    fn node_bound(&self, uncovered: &VertexSet, forbidden: &VertexSet) -> usize {
        if uncovered.is_empty() {
            return 0;
        }
        // Packing: greedily keep uncovered edges, scarcest first, that share
        // no allowed clique with an edge already kept.
        let mut edges: Vec<(usize, usize)> =
            uncovered.iter().map(|e| (self.allowed(e, forbidden).count(), e)).collect();
        edges.sort_unstable();
        let mut blocked = VertexSet::new(uncovered.universe());
        let mut packing = 0;
        for &(_, e) in &edges {
            if blocked.contains(e) {
                continue;
            }
            packing += 1;
            for c in self.allowed(e, forbidden) {
                blocked.union_with(&self.edge_sets[c]);
            }
        }
        let widest = (0..self.edge_sets.len())
            .filter(|&c| !forbidden.contains(c))
            .map(|c| self.edge_sets[c].intersection_len(uncovered))
            .max()
            .unwrap_or(0);
        let ratio = if widest == 0 { usize::MAX } else { uncovered.len().div_ceil(widest) };
        packing.max(ratio)
    }

    fn branch(&mut self, uncovered: VertexSet, mut forbidden: VertexSet, chosen: &mut Vec<usize>, bound: usize) {
        self.nodes += 1;
        if self.stopped || self.budget.exhausted() {
            self.stopped = true;
            return;
        }
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + bound.max(1) >= self.best.len() {
            return;
        }
        let (count, edge) =
            uncovered.iter().map(|e| (self.allowed(e, &forbidden).count(), e)).min().expect("uncovered is non-empty");
        if count == 0 {
            return;
        }
        let mut candidates: Vec<(usize, usize)> =
            self.allowed(edge, &forbidden).map(|c| (self.edge_sets[c].intersection_len(&uncovered), c)).collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in candidates {
            let rest = uncovered.difference(&self.edge_sets[c]);
            let child_bound = self.node_bound(&rest, &forbidden);
            if chosen.len() + 1 + child_bound < self.best.len() {
                chosen.push(c);
                self.branch(rest, forbidden.clone(), chosen, child_bound);
                chosen.pop();
            }
            if self.stopped {
                return;
            }
            forbidden.insert(c);
        }
    }
}
