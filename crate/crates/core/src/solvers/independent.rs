use alloc::vec::Vec;

use super::{Budget, SolveReport, Unlimited};
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Maximum independent set, solved as a maximum clique of the complement
/// with a greedy-colouring bound.
pub fn max_independent_set(g: &Graph) -> SolveReport<VertexSet> {
    max_independent_set_with(g, Unlimited)
}

pub fn max_independent_set_with<B: Budget>(g: &Graph, budget: B) -> SolveReport<VertexSet> {
    let n = g.n();
    let comp = g.complement();
    let initial = greedy_independent(g);
    let lower = initial.len();
    let mut search = Search { g, comp: &comp, best: initial.to_vec(), nodes: 0, budget, stopped: false };
    let mut current = Vec::new();
    search.expand(&mut current, VertexSet::full(n));
    let witness = VertexSet::from_iter_in(n, search.best.iter().copied());
    debug_assert!(g.is_independent(&witness));
    SolveReport::new(witness.len(), witness, lower, search.nodes, !search.stopped)
}

/// Repeatedly takes a minimum-degree vertex of what remains.
fn greedy_independent(g: &Graph) -> VertexSet {
    let mut left = g.vertex_set();
    let mut chosen = VertexSet::new(g.n());
    while !left.is_empty() {
        let v = left.iter().min_by_key(|&v| (g.neighbors(v).intersection_len(&left), v)).unwrap();
        chosen.insert(v);
        left.remove(v);
        left.difference_with(g.neighbors(v));
    }
    chosen
}

struct Search<'a, B> {
    g: &'a Graph,
    comp: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
    budget: B,
    stopped: bool,
}

impl<B: Budget> Search<'_, B> {
    /// Partitions `p` into cliques of `g` (independent sets of the
    /// complement); a vertex's class number bounds how many more vertices
    /// can join from `p` up to and including it.
    fn colour_order(&self, p: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.len());
        let mut bounds = Vec::with_capacity(p.len());
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                uncoloured.remove(v);
                q.remove(v);
                q.intersect_with(self.g.neighbors(v));
                order.push(v);
                bounds.push(colour);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut p: VertexSet) {
        self.nodes += 1;
        if self.stopped || self.budget.exhausted() {
            self.stopped = true;
            return;
        }
        let (order, bounds) = self.colour_order(&p);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            current.push(v);
            let next = p.intersection(self.comp.neighbors(v));
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            p.remove(v);
            if self.stopped {
                return;
            }
        }
    }
}
