//! Tab-separated tables: cocktail-party growth and the cograph sweep.

use std::ops::RangeInclusive;

use ecclab_core::edge_clique::edge_clique_graph;
use ecclab_core::graph::cocktail_party;
use ecclab_core::rankwidth::{
    exact_rankwidth_guarded, greedy_rankwidth_upper_bound, linear_rankwidth_guarded, EXACT_GUARD, LINEAR_GUARD,
};
use ecclab_core::solvers::edge_clique_cover_with;
use ecclab_core::sweep::SweepRow;

use crate::budget::TimeLimit;
use crate::error::{LabError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub n: usize,
    pub theta_e: usize,
    /// False if the time limit stopped the search; `theta_e` is then an upper bound.
    pub theta_exact: bool,
    /// `⌈log₂(2n + 1)⌉`.
    pub log2_bound: usize,
    /// `θ_e / log₂ n`.
    pub ratio: f64,
    pub rw_ke: usize,
    pub rw_kind: RwKind,
}

/// How the rankwidth column was obtained; only `Exact` is the true value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RwKind {
    Exact,
    /// Linear rankwidth, an upper bound.
    Linear,
    /// Greedy decomposition, an upper bound.
    Greedy,
}

impl RwKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RwKind::Exact => "exact",
            RwKind::Linear => "linear",
            RwKind::Greedy => "greedy",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GrowthConfig {
    /// `K_e(cp(n))` gets the exact rankwidth when it has at most this many vertices,
    pub rw_max_n: usize,
    /// then linear rankwidth up to this many, then a greedy bound.
    pub linear_max_n: usize,
    pub seed: u64,
    pub time_limit: Option<f64>,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        GrowthConfig { rw_max_n: EXACT_GUARD, linear_max_n: LINEAR_GUARD, seed: 0, time_limit: None }
    }
}

fn ceil_log2(x: usize) -> usize {
    x.next_power_of_two().trailing_zeros() as usize
}

pub fn growth_table(range: RangeInclusive<usize>, cfg: GrowthConfig) -> Result<Vec<GrowthRow>> {
    if *range.start() < 2 {
        return Err(LabError::Usage("growth table starts at n = 2".into()));
    }
    range
        .map(|n| {
            let g = cocktail_party(n);
            let t = edge_clique_cover_with(&g, TimeLimit::from_secs(cfg.time_limit));
            let ke = edge_clique_graph(&g).graph;
            let (rw_ke, rw_kind) = if ke.n() <= cfg.rw_max_n {
                (exact_rankwidth_guarded(&ke, cfg.rw_max_n)?.width, RwKind::Exact)
            } else if ke.n() <= cfg.linear_max_n {
                (linear_rankwidth_guarded(&ke, cfg.linear_max_n)?.width, RwKind::Linear)
            } else {
                (greedy_rankwidth_upper_bound(&ke, cfg.seed).width, RwKind::Greedy)
            };
            Ok(GrowthRow {
                n,
                theta_e: t.objective,
                theta_exact: t.optimal,
                log2_bound: ceil_log2(2 * n + 1),
                ratio: t.objective as f64 / (n as f64).log2(),
                rw_ke,
                rw_kind,
            })
        })
        .collect()
}

pub fn growth_tsv(rows: &[GrowthRow]) -> String {
    let mut out = String::from("n\ttheta_e\ttheta_kind\tlog2_bound\tratio\trw_ke\trw_kind\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{:.4}\t{}\t{}\n",
            r.n,
            r.theta_e,
            if r.theta_exact { "exact" } else { "timeout" },
            r.log2_bound,
            r.ratio,
            r.rw_ke,
            r.rw_kind.as_str(),
        ));
    }
    out
}

pub const SWEEP_HEADER: &str = "id\tn\tm\ttheta_e\tgyarfas_lb\talpha_ke\tmax_cliques\tstatus\n";

pub fn sweep_tsv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    for r in rows {
        let lb = r.gyarfas_lb.map_or_else(|| "na".to_owned(), |b| b.to_string());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.id,
            r.n,
            r.m,
            r.theta_e,
            lb,
            r.alpha_ke,
            r.max_cliques,
            r.status.as_str()
        ));
    }
    out
}
