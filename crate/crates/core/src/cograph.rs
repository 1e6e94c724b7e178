//! Cotrees and cograph recognition.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A rooted tree whose leaves are vertices and whose internal nodes take the
/// disjoint union or the join of their children.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    /// `JOIN` of `n` two-leaf `UNION`s, labelled so that it yields
    /// `cocktail_party(n)` exactly. `n = 1` is the bare `UNION`.
    pub fn cocktail_party(n: usize) -> Option<Cotree> {
        let pairs: Vec<Cotree> =
            (0..n).map(|k| Cotree::Union(vec![Cotree::Leaf(2 * k), Cotree::Leaf(2 * k + 1)])).collect();
        match pairs.len() {
            0 => None,
            1 => pairs.into_iter().next(),
            _ => Some(Cotree::Join(pairs)),
        }
    }

    /// `JOIN` of `n` leaves.
    pub fn complete(n: usize) -> Option<Cotree> {
        match n {
            0 => None,
            1 => Some(Cotree::Leaf(0)),
            _ => Some(Cotree::Join((0..n).map(Cotree::Leaf).collect())),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(c) | Cotree::Join(c) => c.iter().map(Cotree::leaf_count).sum(),
        }
    }

    fn children(&self) -> &[Cotree] {
        match self {
            Cotree::Leaf(_) => &[],
            Cotree::Union(c) | Cotree::Join(c) => c,
        }
    }

    fn same_kind(&self, other: &Cotree) -> bool {
        matches!((self, other), (Cotree::Union(_), Cotree::Union(_)) | (Cotree::Join(_), Cotree::Join(_)))
    }

    /// Leaf labels are exactly `0..n` and internal nodes have two or more children.
    pub fn validate(&self) -> Result<()> {
        let n = self.leaf_count();
        let mut seen = vec![false; n];
        self.validate_into(&mut seen)?;
        Ok(())
    }

    fn validate_into(&self, seen: &mut [bool]) -> Result<()> {
        match self {
            Cotree::Leaf(v) => {
                if *v >= seen.len() {
                    return Err(Error::MalformedCotree(format!("leaf {v} but only {} leaves", seen.len())));
                }
                if core::mem::replace(&mut seen[*v], true) {
                    return Err(Error::MalformedCotree(format!("leaf {v} repeated")));
                }
                Ok(())
            }
            Cotree::Union(c) | Cotree::Join(c) => {
                if c.len() < 2 {
                    return Err(Error::MalformedCotree(format!("internal node with {} children", c.len())));
                }
                c.iter().try_for_each(|t| t.validate_into(seen))
            }
        }
    }

    /// No internal node has a child with the same label.
    pub fn is_normalized(&self) -> bool {
        self.children().iter().all(|c| !self.same_kind(c) && c.is_normalized())
    }

    /// Splices same-label children into their parent.
    pub fn normalize(self) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(v),
            Cotree::Union(c) => Cotree::Union(flatten(c, |t| matches!(t, Cotree::Union(_)))),
            Cotree::Join(c) => Cotree::Join(flatten(c, |t| matches!(t, Cotree::Join(_)))),
        }
    }

    fn leaves_into(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(c) | Cotree::Join(c) => c.iter().for_each(|t| t.leaves_into(out)),
        }
    }
}

fn flatten(children: Vec<Cotree>, same: impl Fn(&Cotree) -> bool + Copy) -> Vec<Cotree> {
    let mut out = Vec::with_capacity(children.len());
    for c in children {
        let c = c.normalize();
        if same(&c) {
            match c {
                Cotree::Union(g) | Cotree::Join(g) => out.extend(g),
                Cotree::Leaf(_) => unreachable!(),
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Two vertices are adjacent iff their lowest common ancestor is a `JOIN`.
pub fn cograph_from_cotree(t: &Cotree) -> Result<Graph> {
    t.validate()?;
    let mut g_edges = Vec::new();
    collect_edges(t, &mut g_edges);
    Graph::from_edges(t.leaf_count(), g_edges)
}

fn collect_edges(t: &Cotree, edges: &mut Vec<(usize, usize)>) {
    for c in t.children() {
        collect_edges(c, edges);
    }
    if let Cotree::Join(children) = t {
        let groups: Vec<Vec<usize>> = children
            .iter()
            .map(|c| {
                let mut l = Vec::new();
                c.leaves_into(&mut l);
                l
            })
            .collect();
        for (i, a) in groups.iter().enumerate() {
            for b in &groups[i + 1..] {
                for &u in a {
                    edges.extend(b.iter().map(|&v| (u, v)));
                }
            }
        }
    }
}

/// An induced path `a - b - c - d`, if one exists.
///
/// For each edge `bc` (in both orientations) looks for `a ∈ N(b) \ N[c]` and
/// `d ∈ N(c) \ N[b]` with `a ≁ d`.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for (x, y) in g.edges() {
        for (b, c) in [(x, y), (y, x)] {
            let ends_a = g.neighbors(b).difference(&g.closed_neighborhood(c));
            let ends_d = g.neighbors(c).difference(&g.closed_neighborhood(b));
            if ends_d.is_empty() {
                continue;
            }
            for a in &ends_a {
                if let Some(d) = ends_d.difference(g.neighbors(a)).first() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Cographs are exactly the graphs with no induced `P4`.
pub fn is_cograph(g: &Graph) -> bool {
    find_induced_p4(g).is_none()
}

/// `w` is four distinct vertices inducing exactly the path `w0 w1 w2 w3`.
pub fn is_induced_p4(g: &Graph, w: &[usize; 4]) -> bool {
    let distinct = (0..4).all(|i| w[i] < g.n() && (i + 1..4).all(|j| w[i] != w[j]));
    distinct && (0..4).all(|i| (i + 1..4).all(|j| g.has_edge(w[i], w[j]) == (j == i + 1)))
}

/// A random normalised cotree on `n ≥ 1` leaves, deterministic per seed.
///
/// The root label is a coin flip; each internal node splits its shuffled
/// vertex block into between two and four non-empty runs, and children take
/// the opposite label.
pub fn random_cotree(n: usize, seed: u64) -> Result<Cotree> {
    if n == 0 {
        return Err(Error::MalformedCotree("a cotree needs at least one leaf".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(&mut rng);
    let join = rng.gen_bool(0.5);
    Ok(grow(&vertices, join, &mut rng))
}

fn grow(block: &[usize], join: bool, rng: &mut ChaCha8Rng) -> Cotree {
    if block.len() == 1 {
        return Cotree::Leaf(block[0]);
    }
    let parts = rng.gen_range(2..=block.len().min(4));
    let mut cuts: Vec<usize> =
        rand::seq::index::sample(rng, block.len() - 1, parts - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    let mut children = Vec::with_capacity(parts);
    let mut start = 0;
    for end in cuts.into_iter().chain([block.len()]) {
        children.push(grow(&block[start..end], !join, rng));
        start = end;
    }
    if join {
        Cotree::Join(children)
    } else {
        Cotree::Union(children)
    }
}
