//! Deterministic graph collections for the verification suites.

use alloc::vec::Vec;

use crate::graph::{self, Graph};
use crate::solvers::gyarfas_lower_bound;

/// Largest order for [`unlabeled_graphs`]; the canonical form tries all `n!` labelings.
pub const UNLABELED_MAX: usize = 6;

/// One representative of every isomorphism class of graphs on `n ≤ 6`
/// vertices.
///
/// Edge sets are bit masks over the pairs `u < v` in lexicographic order; a
/// mask is kept iff no relabeling gives a numerically smaller mask.
pub fn unlabeled_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= UNLABELED_MAX, "unlabeled enumeration is limited to {UNLABELED_MAX} vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    // Pair-index images under every permutation.
    let maps: Vec<Vec<usize>> =
        permutations(n).into_iter().map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canonical = maps.iter().all(|map| {
            let mut image = 0u32;
            for (i, &j) in map.iter().enumerate() {
                image |= (mask >> i & 1) << j;
            }
            image >= mask
        });
        if canonical {
            out.push(
                Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
                    .unwrap(),
            );
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut current, &mut out);
    out
}

fn heap_permute(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, a, out);
}

/// Named families on exactly `n` vertices.
pub fn structured_graphs(n: usize) -> Vec<Graph> {
    let mut out = alloc::vec![Graph::empty(n), graph::complete(n), graph::path(n), graph::cycle(n)];
    if n >= 1 {
        out.push(graph::star(n - 1));
    }
    if n >= 4 {
        out.push(graph::wheel(n - 1));
    }
    for a in 1..=n / 2 {
        out.push(graph::complete_bipartite(a, n - a));
    }
    if n.is_multiple_of(2) {
        out.push(graph::cocktail_party(n / 2));
        out.push(graph::perfect_matching(n / 2));
    }
    out
}

/// `count` random graphs on `n` vertices, cycling through densities
/// 0.3 / 0.5 / 0.8, seeds `seed, seed + 1, …`.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    const DENSITIES: [f64; 3] = [0.3, 0.5, 0.8];
    (0..count).map(|i| graph::random_graph(n, DENSITIES[i % 3], seed.wrapping_add(i as u64)).unwrap()).collect()
}

/// The small corpus: every graph on at most 6 vertices up to isomorphism,
/// the structured families on 7 vertices and 100 random 7-vertex graphs.
pub fn small_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (0..=UNLABELED_MAX).flat_map(unlabeled_graphs).collect();
    out.extend(structured_graphs(7));
    out.extend(random_graphs(7, 100, 0x5eed));
    out
}

/// At least `target` graphs on at most 7 vertices with no isolated and no
/// equivalent vertices: the qualifying members of [`small_corpus`], topped
/// up from a seeded stream of random 6- and 7-vertex graphs.
pub fn gyarfas_corpus(target: usize) -> Vec<Graph> {
    let qualifies = |g: &Graph| gyarfas_lower_bound(g).value().is_some();
    let mut out: Vec<Graph> = small_corpus().into_iter().filter(qualifies).collect();
    let mut seed = 0x6761_7266u64;
    while out.len() < target {
        let n = 6 + (seed % 2) as usize;
        let g = graph::random_graph(n, [0.4, 0.6, 0.8][(seed % 3) as usize], seed).unwrap();
        if qualifies(&g) {
            out.push(g);
        }
        seed += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unlabeled_counts() {
        // Number of graphs on n unlabeled vertices (OEIS A000088).
        let counts: Vec<usize> = (0..=6).map(|n| unlabeled_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = small_corpus();
        assert_eq!(a.len(), 209 + structured_graphs(7).len() + 100);
        assert_eq!(a, small_corpus());
        assert!(a.iter().all(|g| g.is_well_formed() && g.n() <= 7));
    }

    #[test]
    fn gyarfas_corpus_qualifies() {
        let c = gyarfas_corpus(500);
        assert!(c.len() >= 500);
        assert!(c.iter().all(|g| g.isolated_vertices().is_empty() && g.equivalent_vertices().is_empty()));
    }
}
