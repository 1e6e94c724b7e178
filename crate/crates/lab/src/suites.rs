//! Verification suites. Each runs a family of cases and passes iff every
//! case passes.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use ecclab_core::corpus::{gyarfas_corpus, random_graphs, small_corpus};
use ecclab_core::edge_clique::{
    edge_clique_graph, iterated_edge_clique, verify_clique_correspondence, DEFAULT_VERTEX_BUDGET,
};
use ecclab_core::graph::{cocktail_party, complete, cycle, random_graph, Graph};
use ecclab_core::rankwidth::{complement_gap_check, CutRankOracle, EXACT_GUARD};
use ecclab_core::solvers::{edge_clique_cover_with, max_independent_set_with, vertex_clique_cover_with};
use ecclab_core::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::TimeLimit;
use crate::certificate::SCHEMA;
use crate::error::{LabError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    LemmaAlpha,
    Gyarfas,
    Correspondence,
    ThetaKappa,
    ComplementGap,
    Shearer,
    CutRank,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::LemmaAlpha,
        Suite::Gyarfas,
        Suite::Correspondence,
        Suite::ThetaKappa,
        Suite::ComplementGap,
        Suite::Shearer,
        Suite::CutRank,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LemmaAlpha => "lemma-alpha",
            Suite::Gyarfas => "gyarfas",
            Suite::Correspondence => "correspondence",
            Suite::ThetaKappa => "theta-kappa",
            Suite::ComplementGap => "complement-gap",
            Suite::Shearer => "shearer",
            Suite::CutRank => "cut-rank",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of {}", Suite::ALL.map(Suite::name).join(", ")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Case {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Case { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub pass: bool,
    pub cases: Vec<Case>,
    pub elapsed_ms: f64,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    /// One tab-separated line per case, then a summary line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&format!("{}\t{}\t{}\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail));
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{}\t{}\t{}/{} cases passed in {:.1} ms\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.cases.len() - failed,
            self.cases.len(),
            self.elapsed_ms
        ));
        out
    }
}

/// Knobs shared by the suites; each suite reads the ones it needs.
#[derive(Debug, Clone)]
pub struct SuiteParams {
    /// `n` range for `lemma-alpha` (cocktail party order).
    pub n: RangeInclusive<usize>,
    /// Iteration depth for `shearer`.
    pub r: usize,
    /// Random instances for `correspondence`, `complement-gap` and `cut-rank`.
    pub samples: usize,
    /// Minimum corpus size for `gyarfas`.
    pub corpus_size: usize,
    pub seed: u64,
    /// Seconds per solver call.
    pub time_limit: Option<f64>,
    pub max_vertices: usize,
}

impl SuiteParams {
    /// Defaults matching each suite's reference configuration.
    pub fn defaults(suite: Suite) -> Self {
        let base = SuiteParams {
            n: 2..=8,
            r: 2,
            samples: 100,
            corpus_size: 500,
            seed: 0,
            time_limit: None,
            max_vertices: DEFAULT_VERTEX_BUDGET,
        };
        match suite {
            Suite::Correspondence => SuiteParams { samples: 200, ..base },
            Suite::Shearer => SuiteParams { n: 3..=3, ..base },
            Suite::CutRank => SuiteParams { samples: 10_000, ..base },
            _ => base,
        }
    }
}

pub fn run(suite: Suite, p: &SuiteParams) -> Result<SuiteReport> {
    let start = Instant::now();
    let cases = match suite {
        Suite::LemmaAlpha => lemma_alpha(p)?,
        Suite::Gyarfas => gyarfas(p),
        Suite::Correspondence => correspondence(p)?,
        Suite::ThetaKappa => theta_kappa(p),
        Suite::ComplementGap => complement_gap(p)?,
        Suite::Shearer => shearer(p)?,
        Suite::CutRank => cut_rank_laws(p),
    };
    Ok(SuiteReport {
        schema: SCHEMA,
        suite: suite.name().to_owned(),
        pass: cases.iter().all(|c| c.pass),
        cases,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn budget(p: &SuiteParams) -> TimeLimit {
    TimeLimit::from_secs(p.time_limit)
}

const TIMEOUT: &str = "time limit reached before optimality was proved";

fn lemma_alpha(p: &SuiteParams) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in p.n.clone() {
        if n < 2 {
            return Err(LabError::Usage("lemma-alpha needs n >= 2".into()));
        }
        let ke = iterated_edge_clique(&cocktail_party(n), 1, p.max_vertices)?;
        let g = ke.last();
        let a = max_independent_set_with(g, budget(p));
        let name = format!("cp{n}");
        cases.push(if !a.optimal {
            Case::new(name, false, TIMEOUT)
        } else {
            debug_assert!(g.is_independent(&a.certificate));
            let detail =
                format!("K_e has {} vertices, {} edges; alpha = {}, expected 4", g.n(), g.edge_count(), a.objective);
            Case::new(name, a.objective == 4, detail)
        });
    }
    Ok(cases)
}

fn gyarfas(p: &SuiteParams) -> Vec<Case> {
    gyarfas_corpus(p.corpus_size)
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let name = format!("g{i} n={} m={}", g.n(), g.edge_count());
            let t = edge_clique_cover_with(g, budget(p));
            if !t.optimal {
                return Case::new(name, false, TIMEOUT);
            }
            let bound = ((g.n() + 1) as f64).log2();
            Case::new(
                name,
                t.objective as f64 >= bound,
                format!("theta_e = {} >= log2({}) = {bound:.3}", t.objective, g.n() + 1),
            )
        })
        .collect()
}

fn correspondence(p: &SuiteParams) -> Result<Vec<Case>> {
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    while graphs.len() < p.samples {
        let n = rng.gen_range(2..=8);
        let g = random_graph(n, rng.gen_range(0.2..0.9), rng.gen())?;
        let (h, _) = g.induced_subgraph(&g.isolated_vertices().complement());
        if h.n() > 0 {
            graphs.push((format!("random{} n={} m={}", graphs.len(), h.n(), h.edge_count()), h));
        }
    }
    for n in 2..=5 {
        graphs.push((format!("cp{n}"), cocktail_party(n)));
    }
    graphs
        .into_iter()
        .map(|(name, g)| {
            let r = verify_clique_correspondence(&g)?;
            let detail = format!(
                "{} maximal cliques in G, {} in K_e; images maximal: {}, injective: {}",
                r.count_g, r.count_ke, r.images_maximal, r.injective
            );
            Ok(Case::new(name, r.matched, detail))
        })
        .collect()
}

fn theta_kappa(p: &SuiteParams) -> Vec<Case> {
    let mut graphs: Vec<(String, Graph)> = small_corpus()
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("g{i} n={} m={}", g.n(), g.edge_count()), g))
        .collect();
    graphs.push(("cp2".into(), cocktail_party(2)));
    graphs.push(("cp3".into(), cocktail_party(3)));
    graphs
        .into_iter()
        .map(|(name, g)| {
            let t = edge_clique_cover_with(&g, budget(p));
            let k = vertex_clique_cover_with(&edge_clique_graph(&g).graph, budget(p));
            if !(t.optimal && k.optimal) {
                return Case::new(name, false, TIMEOUT);
            }
            Case::new(
                name,
                t.objective == k.objective,
                format!("theta_e = {}, kappa(K_e) = {}", t.objective, k.objective),
            )
        })
        .collect()
}

fn complement_gap(p: &SuiteParams) -> Result<Vec<Case>> {
    let mut graphs = vec![("K5".to_owned(), complete(5)), ("C5".to_owned(), cycle(5))];
    for (i, g) in random_graphs(7, p.samples, p.seed).into_iter().enumerate() {
        graphs.push((format!("random{i} m={}", g.edge_count()), g));
    }
    graphs
        .into_iter()
        .map(|(name, g)| {
            let r = complement_gap_check(&g, EXACT_GUARD)?;
            let detail = format!("rw(G) = {}, rw(complement) = {}, gap {}", r.rw_graph, r.rw_complement, r.gap);
            Ok(Case::new(name, r.within_one(), detail))
        })
        .collect()
}

/// `3 · (2^r)!`, if it fits.
pub fn shearer_bound(r: u32) -> Option<u64> {
    let k = 1u64.checked_shl(r)?;
    (1..=k).try_fold(3u64, |acc, i| acc.checked_mul(i))
}

fn shearer(p: &SuiteParams) -> Result<Vec<Case>> {
    let bound = u32::try_from(p.r)
        .ok()
        .and_then(shearer_bound)
        .ok_or_else(|| LabError::Usage(format!("r = {} is too large", p.r)))?;
    let mut cases = Vec::new();
    for n in p.n.clone() {
        let chain = iterated_edge_clique(&cocktail_party(n), p.r, p.max_vertices)?;
        let g = chain.last();
        let a = max_independent_set_with(g, budget(p));
        let name = format!("cp{n} r={}", p.r);
        cases.push(if a.optimal {
            let detail = format!("{} vertices; alpha = {} <= {bound}", g.n(), a.objective);
            Case::new(name, a.objective as u64 <= bound, detail)
        } else if a.objective as u64 > bound {
            Case::new(name, false, format!("alpha >= {} exceeds {bound}", a.objective))
        } else {
            Case::new(name, false, TIMEOUT)
        });
    }
    Ok(cases)
}

/// Symmetry, range and submodularity of the cut-rank on `samples` random
/// subset pairs spread evenly over the small corpus.
fn cut_rank_laws(p: &SuiteParams) -> Vec<Case> {
    let corpus: Vec<Graph> = small_corpus().into_iter().filter(|g| g.n() >= 2).collect();
    let per_graph = p.samples.div_ceil(corpus.len());
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut cases = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let n = g.n();
        let mut oracle = CutRankOracle::new(g);
        let mut violations = Vec::new();
        if oracle.cut_rank(&VertexSet::new(n)) != 0 || oracle.cut_rank(&VertexSet::full(n)) != 0 {
            violations.push("rho of the empty set or V is nonzero".to_owned());
        }
        let mask = (1u64 << n) - 1;
        for _ in 0..per_graph {
            let a = VertexSet::from_mask(n, rng.gen::<u64>() & mask);
            let b = VertexSet::from_mask(n, rng.gen::<u64>() & mask);
            let (ra, rb) = (oracle.cut_rank(&a), oracle.cut_rank(&b));
            if ra != oracle.cut_rank(&a.complement()) {
                violations.push(format!("symmetry at {a:?}"));
            }
            if ra > a.len().min(n - a.len()) {
                violations.push(format!("range at {a:?}"));
            }
            if ra + rb < oracle.cut_rank(&a.union(&b)) + oracle.cut_rank(&a.intersection(&b)) {
                violations.push(format!("submodularity at {a:?}, {b:?}"));
            }
        }
        let detail = if violations.is_empty() {
            format!("{per_graph} samples, no violations")
        } else {
            format!("{} violations, first: {}", violations.len(), violations[0])
        };
        cases.push(Case::new(format!("g{i} n={n} m={}", g.edge_count()), violations.is_empty(), detail));
    }
    cases
}

/// Parses `a..b` (inclusive) or a single number.
pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad number {x:?} in range {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s:?}"));
            }
            Ok(a..=b)
        }
        None => num(s).map(|x| x..=x),
    }
}
