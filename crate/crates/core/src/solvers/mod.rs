//! Exact solvers with re-verifiable certificates: independence number,
//! chromatic number, vertex clique cover and edge clique cover.

use alloc::vec::Vec;
use core::time::Duration;

use crate::bitset::VertexSet;
use crate::graph::Graph;

mod coloring;
mod cover;
mod independent;

pub use coloring::{
    chromatic_number, chromatic_number_with, is_proper_coloring, vertex_clique_cover, vertex_clique_cover_with,
};
pub use cover::{
    edge_clique_cover, edge_clique_cover_with, gyarfas_lower_bound, verify_cover, verify_vertex_clique_cover,
    GyarfasBound,
};
pub use independent::{max_independent_set, max_independent_set_with};

/// Cooperative cancellation for the branch-and-bound searches. Polled once
/// per search node.
pub trait Budget {
    fn exhausted(&mut self) -> bool;
}

/// Never runs out.
#[derive(Debug, Default, Clone, Copy)]
pub struct Unlimited;

impl Budget for Unlimited {
    #[inline]
    fn exhausted(&mut self) -> bool {
        false
    }
}

/// Stops after a fixed number of search nodes.
#[derive(Debug, Clone, Copy)]
pub struct NodeLimit(pub u64);

impl Budget for NodeLimit {
    #[inline]
    fn exhausted(&mut self) -> bool {
        if self.0 == 0 {
            return true;
        }
        self.0 -= 1;
        false
    }
}

impl<B: Budget + ?Sized> Budget for &mut B {
    #[inline]
    fn exhausted(&mut self) -> bool {
        (**self).exhausted()
    }
}

/// A family of cliques of a graph, identified by the graph's fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    pub parts: Vec<VertexSet>,
    pub graph: u64,
}

/// Result of an exact solve.
#[derive(Debug, Clone)]
pub struct SolveReport<C> {
    pub objective: usize,
    pub certificate: C,
    /// Bound the search started from: the root lower bound for the
    /// minimisation problems, the initial incumbent for independence.
    pub lower_bound: usize,
    pub nodes_explored: u64,
    /// False when the budget ran out; `objective` is then only the best
    /// value found.
    pub optimal: bool,
    /// Filled in by callers that own a clock.
    pub wall_time: Option<Duration>,
}

impl<C> SolveReport<C> {
    pub(crate) fn new(
        objective: usize,
        certificate: C,
        lower_bound: usize,
        nodes_explored: u64,
        optimal: bool,
    ) -> Self {
        SolveReport { objective, certificate, lower_bound, nodes_explored, optimal, wall_time: None }
    }
}

impl Graph {
    /// FNV-1a digest of the vertex count and sorted edge list.
    pub fn fingerprint(&self) -> u64 {
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.n() as u64);
        for (u, v) in self.edges() {
            feed(u as u64);
            feed(v as u64);
        }
        h
    }
}

/// Smallest `k` with `2^k >= x`.
pub(crate) fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log2_values() {
        let got: Vec<usize> = (0..10).map(ceil_log2).collect();
        assert_eq!(got, [0, 0, 1, 2, 2, 3, 3, 3, 3, 4]);
        assert_eq!(ceil_log2(1 << 20), 20);
        assert_eq!(ceil_log2((1 << 20) + 1), 21);
    }

    #[test]
    fn node_limit_counts_down() {
        let mut b = NodeLimit(2);
        assert!(!b.exhausted() && !b.exhausted());
        assert!(b.exhausted());
    }
}
