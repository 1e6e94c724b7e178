use alloc::vec;
use alloc::vec::Vec;

use super::{Budget, CliqueCover, SolveReport, Unlimited};
use crate::bitset::VertexSet;
use crate::graph::Graph;

pub fn is_proper_coloring(g: &Graph, colours: &[usize]) -> bool {
    colours.len() == g.n() && g.edges().all(|(u, v)| colours[u] != colours[v])
}

/// Chromatic number by iterative deepening: DSATUR gives an upper bound, a
/// greedy clique a lower bound, and each `k` in between is decided by
/// DSATUR-ordered backtracking.
pub fn chromatic_number(g: &Graph) -> SolveReport<Vec<usize>> {
    chromatic_number_with(g, Unlimited)
}

pub fn chromatic_number_with<B: Budget>(g: &Graph, budget: B) -> SolveReport<Vec<usize>> {
    let (mut best, upper) = dsatur_greedy(g);
    let lower = greedy_clique(g);
    let mut search = KColour { g, budget, nodes: 0, stopped: false };
    let mut optimal = true;
    for k in lower..upper {
        match search.colour_with(k) {
            Some(c) => {
                best = c;
                break;
            }
            None if search.stopped => {
                optimal = false;
                break;
            }
            None => {}
        }
    }
    let objective = colours_used(&best);
    debug_assert!(is_proper_coloring(g, &best));
    SolveReport::new(objective, best, lower, search.nodes, optimal)
}

/// `κ(G) = χ(Ḡ)`: colour classes of the complement are cliques of `g`.
pub fn vertex_clique_cover(g: &Graph) -> SolveReport<CliqueCover> {
    vertex_clique_cover_with(g, Unlimited)
}

pub fn vertex_clique_cover_with<B: Budget>(g: &Graph, budget: B) -> SolveReport<CliqueCover> {
    let r = chromatic_number_with(&g.complement(), budget);
    let mut parts: Vec<VertexSet> = (0..r.objective).map(|_| VertexSet::new(g.n())).collect();
    for (v, &c) in r.certificate.iter().enumerate() {
        parts[c].insert(v);
    }
    let cover = CliqueCover { parts, graph: g.fingerprint() };
    SolveReport {
        objective: r.objective,
        certificate: cover,
        lower_bound: r.lower_bound,
        nodes_explored: r.nodes_explored,
        optimal: r.optimal,
        wall_time: None,
    }
}

fn colours_used(c: &[usize]) -> usize {
    c.iter().max().map_or(0, |m| m + 1)
}

fn greedy_clique(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (0..g.n())
        .map(|start| {
            let mut cand = g.neighbors(start).clone();
            let mut size = 1;
            while let Some(v) =
                cand.iter().max_by_key(|&v| (g.neighbors(v).intersection_len(&cand), core::cmp::Reverse(v)))
            {
                size += 1;
                cand.intersect_with(g.neighbors(v));
            }
            size
        })
        .max()
        .unwrap()
}

/// Degree of saturation bookkeeping shared by the greedy pass and the
/// exact search.
struct Saturation {
    /// `count[v][c]`: neighbours of `v` currently coloured `c`.
    count: Vec<Vec<u32>>,
    distinct: Vec<usize>,
}

impl Saturation {
    fn new(n: usize, k: usize) -> Self {
        Saturation { count: vec![vec![0; k]; n], distinct: vec![0; n] }
    }

    fn assign(&mut self, g: &Graph, v: usize, c: usize) {
        for u in g.neighbors(v) {
            if self.count[u][c] == 0 {
                self.distinct[u] += 1;
            }
            self.count[u][c] += 1;
        }
    }

    fn unassign(&mut self, g: &Graph, v: usize, c: usize) {
        for u in g.neighbors(v) {
            self.count[u][c] -= 1;
            if self.count[u][c] == 0 {
                self.distinct[u] -= 1;
            }
        }
    }

    /// Max saturation, then max degree into the uncoloured part, then lowest id.
    fn pick(&self, g: &Graph, uncoloured: &VertexSet) -> Option<usize> {
        uncoloured
            .iter()
            .max_by_key(|&v| (self.distinct[v], g.neighbors(v).intersection_len(uncoloured), core::cmp::Reverse(v)))
    }
}

fn dsatur_greedy(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut sat = Saturation::new(n, n.max(1));
    let mut colours = vec![0; n];
    let mut uncoloured = g.vertex_set();
    let mut used = 0;
    while let Some(v) = sat.pick(g, &uncoloured) {
        let c = (0..n).find(|&c| sat.count[v][c] == 0).unwrap();
        colours[v] = c;
        used = used.max(c + 1);
        sat.assign(g, v, c);
        uncoloured.remove(v);
    }
    (colours, used)
}

struct KColour<'a, B> {
    g: &'a Graph,
    budget: B,
    nodes: u64,
    stopped: bool,
}

impl<B: Budget> KColour<'_, B> {
    fn colour_with(&mut self, k: usize) -> Option<Vec<usize>> {
        let n = self.g.n();
        if n == 0 {
            return Some(Vec::new());
        }
        if k == 0 {
            return None;
        }
        let mut sat = Saturation::new(n, k);
        let mut colours = vec![usize::MAX; n];
        let mut uncoloured = self.g.vertex_set();
        if self.backtrack(k, 0, &mut sat, &mut colours, &mut uncoloured) {
            Some(colours)
        } else {
            None
        }
    }

    fn backtrack(
        &mut self,
        k: usize,
        used: usize,
        sat: &mut Saturation,
        colours: &mut [usize],
        uncoloured: &mut VertexSet,
    ) -> bool {
        self.nodes += 1;
        if self.stopped || self.budget.exhausted() {
            self.stopped = true;
            return false;
        }
        let Some(v) = sat.pick(self.g, uncoloured) else {
            return true;
        };
        if sat.distinct[v] >= k {
            return false;
        }
        // Colours above `used` are interchangeable; try only the first.
        for c in 0..k.min(used + 1) {
            if sat.count[v][c] != 0 {
                continue;
            }
            colours[v] = c;
            sat.assign(self.g, v, c);
            uncoloured.remove(v);
            if self.backtrack(k, used.max(c + 1), sat, colours, uncoloured) {
                return true;
            }
            uncoloured.insert(v);
            sat.unassign(self.g, v, c);
            colours[v] = usize::MAX;
            if self.stopped {
                return false;
            }
        }
        false
    }
}
