//! Cut-rank over GF(2) and rankwidth.
//!
//! The cut-rank `ρ(S)` of a vertex set is the GF(2) rank of the adjacency
//! matrix between `S` and its complement. The rankwidth of a graph is the
//! least, over branch decompositions, of the largest cut-rank across a tree
//! edge. Exact values come from subset dynamic programmes, so every entry
//! point here has a size guard.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

mod decomposition;
pub mod gf2;

use decomposition::MergeTree;
pub use decomposition::{verify_branch_decomposition, BranchDecomposition, DecompositionCheck};
pub use gf2::cut_rank;

/// Default vertex limit for [`exact_rankwidth`] (3^n work).
pub const EXACT_GUARD: usize = 16;
/// Default vertex limit for [`linear_rankwidth`] (2^n tables).
pub const LINEAR_GUARD: usize = 24;
/// Subset tables are indexed by `u32`; guards can be raised up to here.
pub const MAX_TABLE_VERTICES: usize = 30;

/// Memoised cut-rank of a fixed host graph.
#[derive(Debug)]
pub struct CutRankOracle<'g> {
    host: &'g Graph,
    memo: BTreeMap<VertexSet, usize>,
}

impl<'g> CutRankOracle<'g> {
    pub fn new(host: &'g Graph) -> Self {
        CutRankOracle { host, memo: BTreeMap::new() }
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn cut_rank(&mut self, s: &VertexSet) -> usize {
        if let Some(&r) = self.memo.get(s) {
            return r;
        }
        let r = cut_rank(self.host, s);
        self.memo.insert(s.clone(), r);
        r
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

#[derive(Debug, Clone)]
pub struct Rankwidth {
    pub width: usize,
    pub decomposition: BranchDecomposition,
}

#[derive(Debug, Clone)]
pub struct LinearRankwidth {
    pub width: usize,
    pub order: Vec<usize>,
}

impl LinearRankwidth {
    pub fn decomposition(&self) -> BranchDecomposition {
        BranchDecomposition::caterpillar(&self.order, self.width)
    }
}

fn check_guard(g: &Graph, max_n: usize) -> Result<()> {
    let limit = max_n.min(MAX_TABLE_VERTICES);
    if g.n() > limit {
        return Err(Error::SizeGuard { n: g.n(), limit });
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// `ρ` for every subset, indexed by bit mask.
fn cut_rank_table(g: &Graph) -> Vec<u8> {
    let adj = gf2::adjacency_masks(g);
    let full = full_mask(g.n());
    (0..=full).map(|s| gf2::cut_rank_mask(&adj, full, s) as u8).collect()
}

/// Exact rankwidth with the default guard.
pub fn exact_rankwidth(g: &Graph) -> Result<Rankwidth> {
    exact_rankwidth_guarded(g, EXACT_GUARD)
}

/// Exact rankwidth by dynamic programming over subsets.
///
/// `cost(S)` is the best width of a rooted binary tree with leaf set `S`,
/// counting the edges below its root: `ρ(v)` for a singleton, otherwise the
/// minimum over splits `S = A ⊔ B` of `max(ρ(A), ρ(B), cost(A), cost(B))`.
/// Subdividing the edge of a branch decomposition that separates `A` from
/// `V \ A` roots it, so `rw(G) = cost(V)`.
pub fn exact_rankwidth_guarded(g: &Graph, max_n: usize) -> Result<Rankwidth> {
    check_guard(g, max_n)?;
    let n = g.n();
    if n <= 1 {
        let order: Vec<usize> = (0..n).collect();
        return Ok(Rankwidth { width: 0, decomposition: BranchDecomposition::caterpillar(&order, 0) });
    }
    let rho = cut_rank_table(g);
    let size = 1usize << n;
    let mut cost = vec![0u8; size];
    let mut split = vec![0u32; size];
    for s in 1..size {
        if s & (s - 1) == 0 {
            cost[s] = rho[s];
            continue;
        }
        let low = s & s.wrapping_neg();
        let mut best = u8::MAX;
        let mut best_a = 0;
        // Proper subsets containing the lowest member, so each split is seen once.
        let mut a = (s - 1) & s;
        while a != 0 {
            if a & low != 0 {
                let b = s ^ a;
                let v = rho[a].max(rho[b]).max(cost[a]).max(cost[b]);
                if v < best {
                    best = v;
                    best_a = a;
                }
            }
            a = (a - 1) & s;
        }
        cost[s] = best;
        split[s] = best_a as u32;
    }
    let full = size - 1;
    let width = cost[full] as usize;
    let tree = merge_tree(&split, full);
    Ok(Rankwidth { width, decomposition: BranchDecomposition::from_merge_tree(Some(tree), width) })
}

fn merge_tree(split: &[u32], s: usize) -> MergeTree {
    if s & (s - 1) == 0 {
        return MergeTree::Leaf(s.trailing_zeros() as usize);
    }
    let a = split[s] as usize;
    MergeTree::join(merge_tree(split, a), merge_tree(split, s ^ a))
}

pub fn linear_rankwidth(g: &Graph) -> Result<LinearRankwidth> {
    linear_rankwidth_guarded(g, LINEAR_GUARD)
}

/// Linear rankwidth: `h(∅) = 0`, `h(S) = max(ρ(S), min_{v∈S} h(S \ v))`
/// with `ρ(V)` read as 0. Returns `h(V)` and a vertex order realising it.
pub fn linear_rankwidth_guarded(g: &Graph, max_n: usize) -> Result<LinearRankwidth> {
    check_guard(g, max_n)?;
    let n = g.n();
    let rho = cut_rank_table(g);
    let size = 1usize << n;
    let mut h = vec![0u8; size];
    for s in 1..size {
        let mut best = u8::MAX;
        let mut it = s;
        while it != 0 {
            let v = it.trailing_zeros();
            it &= it - 1;
            best = best.min(h[s & !(1 << v)]);
        }
        let here = if s == size - 1 { 0 } else { rho[s] };
        h[s] = here.max(best);
    }
    // Peel the last vertex off repeatedly.
    let mut order = Vec::with_capacity(n);
    let mut s = size - 1;
    while s != 0 {
        let v = (0..n).filter(|&v| s >> v & 1 == 1).min_by_key(|&v| h[s & !(1 << v)]).unwrap();
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Ok(LinearRankwidth { width: h[size - 1] as usize, order })
}

/// Upper bound by agglomeration: start from singletons and repeatedly merge
/// the pair of clusters whose union has the smallest cut-rank, ties broken
/// at random. A few seeded restarts; the best tree is returned.
pub fn greedy_rankwidth_upper_bound(g: &Graph, seed: u64) -> Rankwidth {
    const RESTARTS: u64 = 4;
    (0..RESTARTS)
        .map(|r| greedy_once(g, seed.wrapping_mul(RESTARTS).wrapping_add(r)))
        .min_by_key(|rw| rw.width)
        .unwrap()
}

fn greedy_once(g: &Graph, seed: u64) -> Rankwidth {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut rng);

    let mut clusters: Vec<(VertexSet, MergeTree)> =
        ids.iter().map(|&v| (VertexSet::from_iter_in(n, [v]), MergeTree::Leaf(v))).collect();
    let mut width = clusters.iter().map(|(s, _)| cut_rank(g, s)).max().unwrap_or(0);
    // Symmetric table: merged[i][j] is the cut-rank of clusters i and j together.
    let mut merged: Vec<Vec<usize>> = (0..clusters.len())
        .map(|i| {
            (0..clusters.len())
                .map(|j| if i == j { 0 } else { cut_rank(g, &clusters[i].0.union(&clusters[j].0)) })
                .collect()
        })
        .collect();

    while clusters.len() > 2 {
        let mut best = (usize::MAX, 0, 0);
        for (i, row) in merged.iter().enumerate() {
            for (j, &r) in row.iter().enumerate().skip(i + 1) {
                if r < best.0 {
                    best = (r, i, j);
                }
            }
        }
        let (r, i, j) = best;
        width = width.max(r);
        let (sj, tj) = clusters.swap_remove(j);
        let (si, ti) = core::mem::replace(&mut clusters[i], (VertexSet::new(n), MergeTree::Leaf(0)));
        clusters[i] = (si.union(&sj), MergeTree::join(ti, tj));
        for row in merged.iter_mut() {
            row.swap_remove(j);
        }
        merged.swap_remove(j);
        for k in 0..clusters.len() {
            if k != i {
                let r = cut_rank(g, &clusters[i].0.union(&clusters[k].0));
                merged[i][k] = r;
                merged[k][i] = r;
            }
        }
    }
    let tree = match clusters.len() {
        0 => None,
        1 => Some(clusters.pop().unwrap().1),
        _ => {
            let (_, b) = clusters.pop().unwrap();
            let (_, a) = clusters.pop().unwrap();
            Some(MergeTree::join(a, b))
        }
    };
    Rankwidth { width, decomposition: BranchDecomposition::from_merge_tree(tree, width) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementGap {
    pub rw_graph: usize,
    pub rw_complement: usize,
    pub gap: usize,
}

impl ComplementGap {
    pub fn within_one(&self) -> bool {
        self.gap <= 1
    }
}

/// Exact rankwidth of `g` and of its complement.
pub fn complement_gap_check(g: &Graph, max_n: usize) -> Result<ComplementGap> {
    let a = exact_rankwidth_guarded(g, max_n)?.width;
    let b = exact_rankwidth_guarded(&g.complement(), max_n)?.width;
    Ok(ComplementGap { rw_graph: a, rw_complement: b, gap: a.abs_diff(b) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, random_graph};

    #[test]
    fn exact_examples() {
        assert_eq!(exact_rankwidth(&Graph::empty(6)).unwrap().width, 0);
        assert_eq!(exact_rankwidth(&cycle(5)).unwrap().width, 2);
        assert_eq!(exact_rankwidth(&complete(6)).unwrap().width, 1);
        assert_eq!(exact_rankwidth(&path(6)).unwrap().width, 1);
        assert_eq!(exact_rankwidth(&Graph::empty(0)).unwrap().width, 0);
        assert_eq!(exact_rankwidth(&complete(2)).unwrap().width, 1);
        assert!(matches!(exact_rankwidth(&Graph::empty(17)), Err(Error::SizeGuard { n: 17, limit: 16 })));
    }

    #[test]
    fn decompositions_reverify() {
        for seed in 0..25 {
            let g = random_graph(2 + seed as usize % 9, 0.5, seed).unwrap();
            let rw = exact_rankwidth(&g).unwrap();
            let check = verify_branch_decomposition(&g, &rw.decomposition).unwrap();
            assert!(check.consistent, "{g:?}");
            let gr = greedy_rankwidth_upper_bound(&g, seed);
            assert!(verify_branch_decomposition(&g, &gr.decomposition).unwrap().consistent);
            assert!(gr.width >= rw.width);
            let lin = linear_rankwidth(&g).unwrap();
            assert!(lin.width >= rw.width);
            assert!(verify_branch_decomposition(&g, &lin.decomposition()).unwrap().consistent);
        }
    }

    #[test]
    fn linear_examples() {
        for n in 2..10 {
            assert_eq!(linear_rankwidth(&path(n)).unwrap().width, 1);
            assert_eq!(linear_rankwidth(&complete(n)).unwrap().width, 1);
        }
        assert_eq!(linear_rankwidth(&Graph::empty(5)).unwrap().width, 0);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_rankwidth_upper_bound(&complete(9), 1).width, 1);
        assert_eq!(greedy_rankwidth_upper_bound(&Graph::empty(9), 1).width, 0);
        let big = random_graph(70, 0.2, 5).unwrap();
        let gr = greedy_rankwidth_upper_bound(&big, 5);
        assert!(verify_branch_decomposition(&big, &gr.decomposition).unwrap().consistent);
        assert_eq!(gr.width, greedy_rankwidth_upper_bound(&big, 5).width);
    }

    #[test]
    fn complement_gap_examples() {
        let k5 = complement_gap_check(&complete(5), EXACT_GUARD).unwrap();
        assert_eq!((k5.rw_graph, k5.rw_complement, k5.gap), (1, 0, 1));
        let c5 = complement_gap_check(&cycle(5), EXACT_GUARD).unwrap();
        assert_eq!(c5.gap, 0);
    }

    #[test]
    fn oracle_memoises() {
        let g = cycle(6);
        let mut o = CutRankOracle::new(&g);
        let s = VertexSet::from_iter_in(6, [0, 1, 2]);
        assert_eq!(o.cut_rank(&s), 2);
        assert_eq!(o.cut_rank(&s), 2);
        assert_eq!(o.memo_len(), 1);
        assert_eq!(o.cut_rank(&VertexSet::new(6)), 0);
    }
}
