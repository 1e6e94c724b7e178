//! Exact edge clique cover data over cographs.
//!
//! Computation cannot settle whether the problem is hard on cographs; the
//! sweep only tabulates exact values with certificates for study.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cograph::{cograph_from_cotree, random_cotree, Cotree};
use crate::edge_clique::edge_clique_graph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{edge_clique_cover_with, gyarfas_lower_bound, max_independent_set_with, verify_cover, Budget};

/// Largest cograph order the sweep accepts.
pub const SWEEP_GUARD: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    /// Random cotrees per order `n` in `2..=max_n`.
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Ok,
    /// A solver ran out of budget; values are the best found, not proven.
    TimeLimit,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::TimeLimit => "timeout",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub theta_e: usize,
    pub gyarfas_lb: Option<usize>,
    pub alpha_ke: usize,
    pub max_cliques: usize,
    pub status: RowStatus,
}

/// Solves one cograph. `budget` is called once per solver run.
pub fn sweep_row<B: Budget>(id: String, g: &Graph, mut budget: impl FnMut() -> B) -> SweepRow {
    let cover = edge_clique_cover_with(g, budget());
    debug_assert!(verify_cover(g, &cover.certificate));
    let alpha = max_independent_set_with(&edge_clique_graph(g).graph, budget());
    let status = if cover.optimal && alpha.optimal { RowStatus::Ok } else { RowStatus::TimeLimit };
    SweepRow {
        id,
        n: g.n(),
        m: g.edge_count(),
        theta_e: cover.objective,
        gyarfas_lb: gyarfas_lower_bound(g).value(),
        alpha_ke: alpha.objective,
        max_cliques: g.maximal_cliques().len(),
        status,
    }
}

/// Structured rows first (`K_n` for each `n`, then `cp(k)` for `2k ≤ max_n`),
/// then `samples` random normalised cotrees for each order `2..=max_n`.
pub fn conjecture_sweep<B: Budget>(cfg: SweepConfig, mut budget: impl FnMut() -> B) -> Result<Vec<SweepRow>> {
    if cfg.max_n > SWEEP_GUARD {
        return Err(Error::SizeGuard { n: cfg.max_n, limit: SWEEP_GUARD });
    }
    let mut jobs: Vec<(String, Cotree)> = Vec::new();
    for n in 2..=cfg.max_n {
        jobs.push((format!("K{n}"), Cotree::complete(n).expect("n >= 2")));
    }
    for k in 2..=cfg.max_n / 2 {
        jobs.push((format!("cp{k}"), Cotree::cocktail_party(k).expect("k >= 2")));
    }
    let mut seeds = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 2..=cfg.max_n {
        for i in 0..cfg.samples {
            jobs.push((format!("r{n}-{i}"), random_cotree(n, seeds.next_u64())?));
        }
    }
    jobs.into_iter().map(|(id, t)| Ok(sweep_row(id, &cograph_from_cotree(&t)?, &mut budget))).collect()
}
