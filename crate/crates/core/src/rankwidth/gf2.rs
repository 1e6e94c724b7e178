//! Rank over GF(2) of bit-packed row vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Rank of rows that fit in one word. Uses an XOR basis indexed by leading bit.
pub fn rank_u64(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut row in rows {
        while row != 0 {
            let top = 63 - row.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = row;
                rank += 1;
                break;
            }
            row ^= basis[top];
        }
    }
    rank
}

fn leading_bit(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().rev().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// Rank of multi-word rows of equal width.
pub fn rank_words(rows: impl IntoIterator<Item = Vec<u64>>) -> usize {
    let mut basis: Vec<Option<Vec<u64>>> = Vec::new();
    let mut rank = 0;
    for mut row in rows {
        if basis.is_empty() {
            basis = vec![None; row.len() * 64];
        }
        while let Some(top) = leading_bit(&row) {
            match &basis[top] {
                Some(b) => row.iter_mut().zip(b).for_each(|(r, b)| *r ^= b),
                None => {
                    basis[top] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Cut-rank `ρ(S)`: GF(2) rank of the adjacency submatrix with rows `S`
/// and columns `V \ S`. Rows are taken from the smaller side.
pub fn cut_rank(g: &Graph, s: &VertexSet) -> usize {
    debug_assert_eq!(s.universe(), g.n());
    let other = s.complement();
    let (rows, cols) = if s.len() <= other.len() { (s, &other) } else { (&other, s) };
    if rows.is_empty() {
        return 0;
    }
    if g.n() <= 64 {
        let c = cols.to_mask();
        rank_u64(rows.iter().map(|v| g.neighbors(v).to_mask() & c))
    } else {
        rank_words(rows.iter().map(|v| g.neighbors(v).intersection(cols).words().to_vec()))
    }
}

/// Cut-rank of `mask` for graphs on at most 64 vertices, given adjacency rows as masks.
#[inline]
pub(crate) fn cut_rank_mask(adj: &[u64], full: u64, mask: u64) -> usize {
    let other = full & !mask;
    let (rows, cols) = if mask.count_ones() <= other.count_ones() { (mask, other) } else { (other, mask) };
    let mut basis = [0u64; 64];
    let mut rank = 0;
    let mut it = rows;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        let mut row = adj[v] & cols;
        while row != 0 {
            let top = 63 - row.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = row;
                rank += 1;
                break;
            }
            row ^= basis[top];
        }
    }
    rank
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n()).map(|v| g.neighbors(v).to_mask()).collect()
}
