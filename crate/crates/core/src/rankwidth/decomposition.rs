use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::gf2::cut_rank;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An unrooted tree whose leaves are the vertices of a graph and whose
/// internal nodes have degree three, together with its claimed width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchDecomposition {
    pub node_count: usize,
    pub edges: Vec<(usize, usize)>,
    /// `leaf_vertex[node]` is the graph vertex at a leaf, `None` for internal nodes.
    pub leaf_vertex: Vec<Option<usize>>,
    pub width: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionCheck {
    /// Maximum cut-rank over tree edges, recomputed from scratch.
    pub width: usize,
    pub claimed: usize,
    pub consistent: bool,
}

/// A rooted binary tree of vertex merges; unrooting it yields a branch
/// decomposition.
#[derive(Debug, Clone)]
pub(crate) enum MergeTree {
    Leaf(usize),
    Join(Box<MergeTree>, Box<MergeTree>),
}

impl MergeTree {
    pub(crate) fn join(a: MergeTree, b: MergeTree) -> MergeTree {
        MergeTree::Join(Box::new(a), Box::new(b))
    }
}

impl BranchDecomposition {
    /// Replaces the root of `tree` by an edge between its two children.
    pub(crate) fn from_merge_tree(tree: Option<MergeTree>, width: usize) -> Self {
        let mut d = BranchDecomposition { node_count: 0, edges: Vec::new(), leaf_vertex: Vec::new(), width };
        match tree {
            None => {}
            Some(MergeTree::Join(a, b)) => {
                let ra = d.attach(*a);
                let rb = d.attach(*b);
                d.edges.push((ra, rb));
            }
            Some(leaf) => {
                d.attach(leaf);
            }
        }
        d
    }

    fn attach(&mut self, t: MergeTree) -> usize {
        let id = self.node_count;
        self.node_count += 1;
        match t {
            MergeTree::Leaf(v) => self.leaf_vertex.push(Some(v)),
            MergeTree::Join(a, b) => {
                self.leaf_vertex.push(None);
                let ra = self.attach(*a);
                let rb = self.attach(*b);
                self.edges.push((id, ra));
                self.edges.push((id, rb));
            }
        }
        id
    }

    /// Caterpillar whose prefix cuts follow `order`.
    pub fn caterpillar(order: &[usize], width: usize) -> Self {
        let tree = order.iter().map(|&v| MergeTree::Leaf(v)).reduce(MergeTree::join);
        Self::from_merge_tree(tree, width)
    }
}

/// Checks the tree shape against `g` and recomputes the width.
pub fn verify_branch_decomposition(g: &Graph, d: &BranchDecomposition) -> Result<DecompositionCheck> {
    let bad = |msg: alloc::string::String| Err(Error::MalformedDecomposition(msg));
    let nodes = d.node_count;
    if d.leaf_vertex.len() != nodes {
        return bad(format!("{} leaf labels for {} nodes", d.leaf_vertex.len(), nodes));
    }
    let mut seen = vec![false; g.n()];
    for v in d.leaf_vertex.iter().flatten() {
        if *v >= g.n() {
            return bad(format!("leaf labelled {v} outside the graph"));
        }
        if core::mem::replace(&mut seen[*v], true) {
            return bad(format!("vertex {v} appears on two leaves"));
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return bad(format!("vertex {v} has no leaf"));
    }
    if nodes > 0 && d.edges.len() != nodes - 1 {
        return bad(format!("{} edges on {} nodes is not a tree", d.edges.len(), nodes));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for &(a, b) in &d.edges {
        if a >= nodes || b >= nodes || a == b {
            return bad(format!("bad tree edge ({a}, {b})"));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    for (x, nbrs) in adj.iter().enumerate() {
        let ok = match d.leaf_vertex[x] {
            Some(_) => nbrs.len() == 1 || nodes == 1,
            None => nbrs.len() == 3,
        };
        if !ok {
            let kind = if d.leaf_vertex[x].is_some() { "leaf" } else { "internal node" };
            return bad(format!("{kind} {x} has degree {}", nbrs.len()));
        }
    }
    if nodes > 0 && side_of(&adj, 0, usize::MAX).len() != nodes {
        return bad("tree is disconnected".into());
    }

    let mut width = 0;
    for &(a, b) in &d.edges {
        let side = side_of(&adj, a, b);
        let s = VertexSet::from_iter_in(g.n(), side.iter().filter_map(|&x| d.leaf_vertex[x]));
        width = width.max(cut_rank(g, &s));
    }
    Ok(DecompositionCheck { width, claimed: d.width, consistent: width == d.width })
}

/// Nodes reachable from `start` without crossing into `blocked`.
fn side_of(adj: &[Vec<usize>], start: usize, blocked: usize) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    let mut out = Vec::new();
    seen[start] = true;
    while let Some(x) = stack.pop() {
        out.push(x);
        for &y in &adj[x] {
            if y != blocked && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    out
}
