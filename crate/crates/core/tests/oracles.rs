//! Solver and transform results against exhaustive oracles that share no
//! code with the implementations they check.

use ecclab_core::cograph::{cograph_from_cotree, find_induced_p4, is_cograph, is_induced_p4, random_cotree};
use ecclab_core::corpus::{random_graphs, small_corpus, unlabeled_graphs};
use ecclab_core::edge_clique::{edge_clique_graph, verify_clique_correspondence};
use ecclab_core::graph::{cocktail_party, random_graph, Graph};
use ecclab_core::rankwidth::{exact_rankwidth, linear_rankwidth, verify_branch_decomposition};
use ecclab_core::solvers::{
    chromatic_number, edge_clique_cover, gyarfas_lower_bound, is_proper_coloring, max_independent_set, verify_cover,
    verify_vertex_clique_cover, vertex_clique_cover,
};

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

fn clique_masks(g: &Graph) -> Vec<u64> {
    let a = adjacency_matrix(g);
    let n = g.n();
    (1u64..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || a[u][v])))
        .collect()
}

fn brute_alpha(g: &Graph) -> usize {
    let a = adjacency_matrix(g);
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !a[u][v])))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn brute_chi(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.n();
    // A non-empty graph needs at least one colour.
    (usize::from(n > 0)..=n)
        .find(|&k| {
            let mut colour = vec![0usize; n];
            loop {
                if edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
                    return true;
                }
                // Odometer increment in base k.
                let mut i = 0;
                loop {
                    if i == n {
                        return false;
                    }
                    colour[i] += 1;
                    if colour[i] < k {
                        break;
                    }
                    colour[i] = 0;
                    i += 1;
                }
            }
        })
        .unwrap()
}

/// Fewest cliques of any size covering every edge, by increasing family size.
fn brute_theta(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return 0;
    }
    let sets: Vec<u64> = clique_masks(g)
        .into_iter()
        .filter(|s| s.count_ones() >= 2)
        .map(|s| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| s >> u & 1 == 1 && s >> v & 1 == 1)
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let full = (1u64 << edges.len()) - 1;
    fn search(sets: &[u64], k: usize, from: usize, acc: u64, full: u64) -> bool {
        acc == full || (k > 0 && (from..sets.len()).any(|i| search(sets, k - 1, i + 1, acc | sets[i], full)))
    }
    (1..=edges.len()).find(|&k| search(&sets, k, 0, 0, full)).unwrap()
}

fn oracle_graphs() -> Vec<Graph> {
    let mut gs: Vec<Graph> = (0..=6).flat_map(unlabeled_graphs).collect();
    gs.extend(random_graphs(7, 50, 777));
    gs
}

#[test]
fn solvers_match_exhaustive_search() {
    for g in oracle_graphs() {
        let a = max_independent_set(&g);
        assert!(g.is_independent(&a.certificate));
        assert_eq!(a.objective, brute_alpha(&g), "alpha {g:?}");

        let c = chromatic_number(&g);
        assert!(is_proper_coloring(&g, &c.certificate));
        assert_eq!(c.objective, brute_chi(&g), "chi {g:?}");

        let t = edge_clique_cover(&g);
        assert!(verify_cover(&g, &t.certificate));
        assert_eq!(t.objective, brute_theta(&g), "theta {g:?}");
        assert!(t.objective <= g.edge_count());

        let k = vertex_clique_cover(&g);
        assert!(verify_vertex_clique_cover(&g, &k.certificate));
        assert_eq!(k.objective, brute_chi(&g.complement()));
        assert!(a.objective <= k.objective);
    }
}

#[test]
fn edge_clique_identity_on_corpus() {
    for g in small_corpus() {
        let theta = edge_clique_cover(&g).objective;
        let kappa = vertex_clique_cover(&edge_clique_graph(&g).graph).objective;
        assert_eq!(theta, kappa, "{g:?}");
    }
    for n in [2, 3] {
        let g = cocktail_party(n);
        assert_eq!(edge_clique_cover(&g).objective, vertex_clique_cover(&edge_clique_graph(&g).graph).objective);
    }
}

#[test]
fn gyarfas_bound_holds_on_corpus() {
    let mut checked = 0;
    for g in small_corpus() {
        if let Some(lb) = gyarfas_lower_bound(&g).value() {
            let theta = edge_clique_cover(&g).objective;
            assert!((theta as f64) >= ((g.n() + 1) as f64).log2(), "{g:?}");
            assert!(theta >= lb);
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn adjacency_rule_matches_clique_enumeration() {
    let mut graphs: Vec<Graph> = (0..=5).flat_map(unlabeled_graphs).collect();
    for seed in 0..120 {
        graphs.push(random_graph(6 + seed as usize % 3, [0.3, 0.5, 0.8][seed as usize % 3], seed).unwrap());
    }
    for g in graphs {
        let ke = edge_clique_graph(&g);
        let edges = ke.catalog.edges();
        let m = edges.len();
        let mut together = vec![vec![false; m]; m];
        for s in clique_masks(&g) {
            let inside: Vec<usize> = (0..m).filter(|&i| s >> edges[i].0 & 1 == 1 && s >> edges[i].1 & 1 == 1).collect();
            for &i in &inside {
                for &j in &inside {
                    together[i][j] |= i != j;
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                assert_eq!(ke.graph.has_edge(i, j), together[i][j], "{g:?} edges {:?} {:?}", edges[i], edges[j]);
            }
        }
    }
}

#[test]
fn clique_number_maps_to_binomial() {
    for seed in 0..150 {
        let g = random_graph(3 + seed as usize % 6, [0.3, 0.5, 0.8][seed as usize % 3], seed).unwrap();
        let omega = max_independent_set(&g.complement()).objective;
        if omega < 2 {
            continue;
        }
        let ke = edge_clique_graph(&g).graph;
        let omega_ke = max_independent_set(&ke.complement()).objective;
        assert_eq!(omega_ke, omega * (omega - 1) / 2, "{g:?}");
    }
}

#[test]
fn correspondence_on_random_graphs() {
    let mut checked = 0;
    for seed in 0..200u64 {
        let n = 2 + seed as usize % 7;
        let g = random_graph(n, [0.3, 0.5, 0.8][seed as usize % 3], seed).unwrap();
        let keep = g.isolated_vertices().complement();
        let (h, _) = g.induced_subgraph(&keep);
        let r = verify_clique_correspondence(&h).unwrap();
        assert!(r.matched && r.injective && r.images_maximal, "{h:?} {r:?}");
        checked += 1;
    }
    assert_eq!(checked, 200);
    for n in 2..=5 {
        let r = verify_clique_correspondence(&cocktail_party(n)).unwrap();
        assert_eq!((r.count_g, r.count_ke, r.matched), (1 << n, 1 << n, true));
    }
}

/// Every unrooted tree with internal degree 3 and leaves `0..n`, as edge
/// lists over nodes where node `i < n` is leaf `i`.
fn ternary_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n < 2 {
        return vec![vec![]];
    }
    let mut trees = vec![vec![(0, 1)]];
    for leaf in 2..n {
        let mut next = Vec::new();
        for t in &trees {
            // Internal nodes are numbered from n upward.
            let fresh = n + t.len() - (leaf - 1);
            for (i, &(a, b)) in t.iter().enumerate() {
                let mut s = t.clone();
                s[i] = (a, fresh);
                s.push((fresh, b));
                s.push((fresh, leaf));
                next.push(s);
            }
        }
        trees = next;
    }
    trees
}

fn gf2_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && rows[r][c] {
                    let pivot = rows[rank].clone();
                    rows[r].iter_mut().zip(pivot).for_each(|(x, y)| *x ^= y);
                }
            }
            rank += 1;
        }
    }
    rank
}

fn brute_cut_rank(a: &[Vec<bool>], side: &[bool]) -> usize {
    let n = a.len();
    let rows = (0..n).filter(|&u| side[u]).map(|u| (0..n).filter(|&v| !side[v]).map(|v| a[u][v]).collect()).collect();
    gf2_rank(rows)
}

fn brute_rankwidth(g: &Graph) -> usize {
    let n = g.n();
    let a = adjacency_matrix(g);
    ternary_trees(n)
        .iter()
        .map(|edges| {
            edges
                .iter()
                .map(|&(x, y)| {
                    // Leaves reachable from x without crossing the edge to y.
                    let mut side = vec![false; n];
                    let mut stack = vec![(x, y)];
                    while let Some((node, from)) = stack.pop() {
                        if node < n {
                            side[node] = true;
                        }
                        for &(p, q) in edges {
                            if p == node && q != from {
                                stack.push((q, node));
                            } else if q == node && p != from {
                                stack.push((p, node));
                            }
                        }
                    }
                    brute_cut_rank(&a, &side)
                })
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap()
}

#[test]
fn ternary_tree_counts() {
    // (2n - 5)!! unrooted binary trees on n labelled leaves.
    let counts: Vec<usize> = (2..=7).map(|n| ternary_trees(n).len()).collect();
    assert_eq!(counts, [1, 1, 3, 15, 105, 945]);
}

#[test]
fn rankwidth_dp_matches_tree_enumeration() {
    let graphs: Vec<Graph> = (0..=6).flat_map(unlabeled_graphs).collect();
    assert!(graphs.len() >= 200);
    for g in &graphs {
        let rw = exact_rankwidth(g).unwrap();
        assert_eq!(rw.width, brute_rankwidth(g), "{g:?}");
        let check = verify_branch_decomposition(g, &rw.decomposition).unwrap();
        assert!(check.consistent);
        let lin = linear_rankwidth(g).unwrap();
        assert!(rw.width <= lin.width && lin.width <= g.n().saturating_sub(1));
    }
}

#[test]
fn cograph_recogniser_agrees_with_provenance() {
    for seed in 0..500u64 {
        let t = random_cotree(1 + seed as usize % 12, seed).unwrap();
        let g = cograph_from_cotree(&t).unwrap();
        assert!(is_cograph(&g), "{t:?}");
        assert!(exact_rankwidth(&g).unwrap().width <= 1);
    }
    for seed in 0..200u64 {
        let g = random_graph(4 + seed as usize % 9, 0.5, seed).unwrap();
        if let Some(w) = find_induced_p4(&g) {
            assert!(is_induced_p4(&g, &w));
        }
    }
}
