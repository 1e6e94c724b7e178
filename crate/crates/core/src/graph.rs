//! Simple undirected graphs over word-packed adjacency sets, plus the
//! generators and structural queries the solvers build on.

use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive. Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: (0..n).map(|_| VertexSet::new(n)).collect() }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate evaluated on pairs `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    /// Builds a graph from full adjacency rows. Rows must already be
    /// symmetric and irreflexive.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Checks symmetry, irreflexivity and universe sizes.
    pub fn is_well_formed(&self) -> bool {
        self.adj.len() == self.n
            && self.adj.iter().enumerate().all(|(v, row)| {
                row.universe() == self.n && !row.contains(v) && row.iter().all(|u| self.adj[u].contains(v))
            })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// increasing order. Returns the graph and the map new id -> old id.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let ids = keep.to_vec();
        let g = Graph::from_fn(ids.len(), |a, b| self.has_edge(ids[a], ids[b]));
        (g, ids)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    /// The graph with every non-adjacent pair of distinct vertices joined
    /// and every edge removed.
    pub fn complement(&self) -> Graph {
        let rows = (0..self.n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Pairs `{u, v}` (reported with `u < v`, lexicographically) that are
    /// adjacent and share the same closed neighbourhood.
    pub fn equivalent_vertices(&self) -> Vec<(usize, usize)> {
        let closed: Vec<VertexSet> = (0..self.n).map(|v| self.closed_neighborhood(v)).collect();
        self.edges().filter(|&(u, v)| closed[u] == closed[v]).collect()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_iter_in(self.n, (0..self.n).filter(|&v| self.adj[v].is_empty()))
    }

    /// All inclusion-maximal cliques, sorted by packed-set value.
    ///
    /// Bron–Kerbosch with pivoting; the pivot maximises `|P ∩ N(u)|` with
    /// ties going to the lowest id. A graph on zero vertices has no cliques.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if self.n == 0 {
            return out;
        }
        let mut r = VertexSet::new(self.n);
        self.bron_kerbosch(&mut r, self.vertex_set(), VertexSet::new(self.n), &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: &mut VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .map(|u| (p.intersection_len(&self.adj[u]), u))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, u)| u)
            .expect("p is non-empty");
        let candidates = p.difference(&self.adj[pivot]);
        for v in candidates.iter() {
            r.insert(v);
            self.bron_kerbosch(r, p.intersection(&self.adj[v]), x.intersection(&self.adj[v]), out);
            r.remove(v);
            p.remove(v);
            x.insert(v);
        }
    }
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1)
}

/// Cycle `C_n`; for `n < 3` this degenerates to the path.
pub fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1 || (n >= 3 && u == 0 && v == n - 1))
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::from_fn(leaves + 1, |u, _| u == 0)
}

/// Wheel: a cycle on `rim` vertices `1..=rim` plus hub 0.
pub fn wheel(rim: usize) -> Graph {
    let c = cycle(rim);
    Graph::from_fn(rim + 1, |u, v| u == 0 || c.has_edge(u - 1, v - 1))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_fn(a + b, |u, v| u < a && v >= a)
}

/// Perfect matching on `2n` vertices pairing `2k` with `2k + 1`.
pub fn perfect_matching(n: usize) -> Graph {
    Graph::from_fn(2 * n, |u, v| u / 2 == v / 2)
}

/// Cocktail party graph `cp(n)`: the complement of a perfect matching on
/// `2n` vertices. Matched (non-adjacent) pairs are `(2k, 2k + 1)`.
pub fn cocktail_party(n: usize) -> Graph {
    Graph::from_fn(2 * n, |u, v| u / 2 != v / 2)
}

/// Erdős–Rényi `G(n, p)`, deterministic for a given seed. Pairs are drawn
/// in lexicographic order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Graph::from_fn(n, |_, _| rng.gen_bool(p)))
}
