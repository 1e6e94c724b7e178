//! Acceptance gate: one PASS/FAIL line per criterion, each with its time
//! limit. Criteria run sequentially so the timings are not distorted by
//! each other. Built without the libtest harness so the lines are always
//! printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ecclab::suites::{run, Suite, SuiteParams};
use ecclab::tables::{growth_table, GrowthConfig, RwKind};
use ecclab_core::cograph::{cograph_from_cotree, is_cograph, random_cotree};
use ecclab_core::corpus::{small_corpus, unlabeled_graphs};
use ecclab_core::edge_clique::{
    edge_clique_graph, iterated_edge_clique, verify_clique_correspondence, DEFAULT_VERTEX_BUDGET,
};
use ecclab_core::graph::{cocktail_party, cycle, Graph};
use ecclab_core::rankwidth::{exact_rankwidth, linear_rankwidth, verify_branch_decomposition};
use ecclab_core::solvers::{edge_clique_cover, max_independent_set, verify_cover};

type Outcome = Result<String, String>;

/// Criterion number, time limit, check.
type Criterion = (u32, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite(s: Suite, tweak: impl FnOnce(&mut SuiteParams)) -> Result<ecclab::suites::SuiteReport, String> {
    let mut p = SuiteParams::defaults(s);
    tweak(&mut p);
    let r = run(s, &p).map_err(|e| e.to_string())?;
    if let Some(c) = r.failures().next() {
        return Err(format!("{}: {}", c.name, c.detail));
    }
    Ok(r)
}

/// Maximum independent set by plain include/exclude recursion on bit masks.
fn brute_alpha(g: &Graph) -> usize {
    assert!(g.n() <= 32);
    let nbr: Vec<u32> =
        (0..g.n()).map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v)).collect();
    fn go(cand: u32, nbr: &[u32]) -> usize {
        if cand == 0 {
            return 0;
        }
        let v = cand.trailing_zeros() as usize;
        let without = go(cand & !(1 << v), nbr);
        let with = 1 + go(cand & !(1 << v) & !nbr[v], nbr);
        without.max(with)
    }
    go(if g.n() == 32 { !0 } else { (1u32 << g.n()) - 1 }, &nbr)
}

/// θ_e(cp(n)) by exhaustive search over families of maximal cliques. The
/// maximal cliques of cp(n) are the 2^n transversals of the matched pairs,
/// and the automorphism group acts transitively on them, so one clique can
/// be fixed.
fn brute_theta_cp(n: usize) -> usize {
    let edges: Vec<(usize, usize)> =
        (0..2 * n).flat_map(|u| (u + 1..2 * n).map(move |v| (u, v))).filter(|&(u, v)| u / 2 != v / 2).collect();
    assert!(edges.len() <= 128);
    let cliques: Vec<u128> = (0..1u32 << n)
        .map(|bits| {
            let side = |x: usize| (bits >> (x / 2) & 1) as usize == x % 2;
            edges.iter().enumerate().filter(|(_, &(u, v))| side(u) && side(v)).fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let full = if edges.len() == 128 { !0 } else { (1u128 << edges.len()) - 1 };
    fn search(cl: &[u128], k: usize, from: usize, acc: u128, full: u128) -> bool {
        acc == full || (k > 0 && (from..cl.len()).any(|i| search(cl, k - 1, i + 1, acc | cl[i], full)))
    }
    (1..=cliques.len()).find(|&k| search(&cliques, k - 1, 1, cliques[0], full)).unwrap()
}

/// Rankwidth by enumerating every unrooted tree with internal degree 3
/// and leaves `0..n`, grown by subdividing edges.
fn brute_rankwidth(g: &Graph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    let rank = |side: u32| -> usize {
        // GF(2) elimination on rows of the side, columns outside it.
        let mut rows: Vec<u32> = (0..n)
            .filter(|&u| side >> u & 1 == 1)
            .map(|u| (0..n).filter(|&v| side >> v & 1 == 0 && g.has_edge(u, v)).fold(0, |m, v| m | 1 << v))
            .collect();
        let mut r = 0;
        for bit in 0..n {
            if let Some(p) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
                rows.swap(r, p);
                let pivot = rows[r];
                for (i, row) in rows.iter_mut().enumerate() {
                    if i != r && *row >> bit & 1 == 1 {
                        *row ^= pivot;
                    }
                }
                r += 1;
            }
        }
        r
    };
    let mut trees = vec![vec![(0usize, 1usize)]];
    for leaf in 2..n {
        let mut next = Vec::new();
        for t in &trees {
            let fresh = n + leaf - 2;
            for i in 0..t.len() {
                let (a, b) = t[i];
                let mut s = t.clone();
                s[i] = (a, fresh);
                s.extend([(fresh, b), (fresh, leaf)]);
                next.push(s);
            }
        }
        trees = next;
    }
    trees
        .iter()
        .map(|t| {
            t.iter()
                .map(|&(x, y)| {
                    let (mut side, mut stack) = (0u32, vec![(x, y)]);
                    while let Some((node, from)) = stack.pop() {
                        if node < n {
                            side |= 1 << node;
                        }
                        for &(p, q) in t {
                            if p == node && q != from {
                                stack.push((q, node));
                            } else if q == node && p != from {
                                stack.push((p, node));
                            }
                        }
                    }
                    rank(side)
                })
                .max()
                .unwrap()
        })
        .min()
        .unwrap()
}

fn lemma_alpha() -> Outcome {
    let r = suite(Suite::LemmaAlpha, |p| p.n = 2..=8)?;
    ensure(r.cases.len() == 7, "expected n = 2..8")?;
    let k8 = edge_clique_graph(&cocktail_party(8)).graph;
    ensure(k8.n() == 112, format!("K_e(cp(8)) has {} vertices", k8.n()))?;
    for n in 2..=4 {
        let a = brute_alpha(&edge_clique_graph(&cocktail_party(n)).graph);
        ensure(a == 4, format!("oracle alpha(K_e(cp({n}))) = {a}"))?;
    }
    Ok("alpha(K_e(cp(n))) = 4 exactly for n = 2..8 (112 vertices at n = 8); oracle agrees for n <= 4".into())
}

fn gyarfas() -> Outcome {
    let r = suite(Suite::Gyarfas, |p| p.corpus_size = 500)?;
    ensure(r.cases.len() >= 500, format!("only {} graphs", r.cases.len()))?;
    Ok(format!("theta_e >= log2(n+1) on {} graphs (n <= 7, no isolated or equivalent vertices)", r.cases.len()))
}

fn theta_kappa() -> Outcome {
    let r = suite(Suite::ThetaKappa, |_| {})?;
    ensure(r.cases.iter().any(|c| c.name == "cp3"), "cp3 missing")?;
    Ok(format!("theta_e(G) = kappa(K_e(G)) on {} graphs including cp(2), cp(3)", r.cases.len()))
}

fn cocktail_values() -> Outcome {
    let mut values = Vec::new();
    for n in 2..=6 {
        let r = edge_clique_cover(&cocktail_party(n));
        ensure(r.optimal && verify_cover(&cocktail_party(n), &r.certificate), format!("cp({n}) not certified"))?;
        let bound = (2 * n + 1).next_power_of_two().trailing_zeros() as usize;
        ensure(r.objective >= bound, format!("theta_e(cp({n})) = {} < {bound}", r.objective))?;
        let oracle = brute_theta_cp(n);
        ensure(r.objective == oracle, format!("cp({n}): solver {} vs oracle {oracle}", r.objective))?;
        values.push(r.objective);
    }
    ensure(values[..2] == [4, 4], format!("goldens theta_e(cp(2)), theta_e(cp(3)) = {:?}", &values[..2]))?;
    Ok(format!("theta_e(cp(2..6)) = {values:?}, each >= ceil(log2(2n+1)) and equal to the exhaustive oracle"))
}

fn correspondence() -> Outcome {
    let r = suite(Suite::Correspondence, |p| p.samples = 200)?;
    for n in 2..=5 {
        let c = verify_clique_correspondence(&cocktail_party(n)).map_err(|e| e.to_string())?;
        ensure(c.matched && c.count_g == 1 << n && c.count_ke == 1 << n, format!("cp({n}): {c:?}"))?;
    }
    Ok(format!(
        "{} cases: 200 random isolated-free graphs (n <= 8) and cp(2..5) with 2^n cliques on both sides",
        r.cases.len()
    ))
}

fn shearer() -> Outcome {
    suite(Suite::Shearer, |p| {
        p.n = 3..=3;
        p.r = 2;
    })?;
    let g =
        iterated_edge_clique(&cocktail_party(3), 2, DEFAULT_VERTEX_BUDGET).map_err(|e| e.to_string())?.last().clone();
    ensure(g.n() == 24, format!("K_e^2(cp(3)) has {} vertices", g.n()))?;
    let a = max_independent_set(&g);
    let oracle = brute_alpha(&g);
    ensure(a.optimal && a.objective == oracle, format!("solver {} vs oracle {oracle}", a.objective))?;
    ensure(a.objective <= 72, format!("alpha = {} > 72", a.objective))?;
    Ok(format!("alpha(K_e^2(cp(3))) = {} <= 3 * (2^2)! = 72 on 24 vertices", a.objective))
}

fn rankwidth_engine() -> Outcome {
    let graphs: Vec<Graph> = (0..=6).flat_map(unlabeled_graphs).collect();
    ensure(graphs.len() >= 200, "fewer than 200 graphs")?;
    for g in &graphs {
        let rw = exact_rankwidth(g).map_err(|e| e.to_string())?;
        ensure(rw.width == brute_rankwidth(g), format!("{g:?}: DP {} vs enumeration", rw.width))?;
        ensure(verify_branch_decomposition(g, &rw.decomposition).unwrap().consistent, "certificate does not verify")?;
    }
    let c5 = exact_rankwidth(&cycle(5)).unwrap().width;
    ensure(c5 == 2, format!("rw(C5) = {c5}"))?;

    let mut cographs = 0;
    let mut sandwiched = 0;
    for g in small_corpus() {
        let rw = exact_rankwidth(&g).unwrap().width;
        let lin = linear_rankwidth(&g).unwrap().width;
        ensure(rw <= lin, format!("{g:?}: linear {lin} < rw {rw}"))?;
        sandwiched += 1;
        if is_cograph(&g) {
            ensure(rw <= 1, format!("cograph {g:?} has rw {rw}"))?;
            cographs += 1;
        }
    }
    for seed in 0..100 {
        let g = cograph_from_cotree(&random_cotree(2 + seed as usize % 11, seed).unwrap()).unwrap();
        ensure(exact_rankwidth(&g).unwrap().width <= 1, format!("random cograph {seed}"))?;
        cographs += 1;
    }

    let ke = edge_clique_graph(&cocktail_party(3)).graph;
    let rw = exact_rankwidth(&ke).map_err(|e| e.to_string())?;
    ensure(verify_branch_decomposition(&ke, &rw.decomposition).unwrap().consistent, "K_e(cp(3)) certificate")?;
    ensure(rw.width == 3, format!("rw(K_e(cp(3))) = {}, golden 3", rw.width))?;
    let lin = linear_rankwidth(&ke).unwrap().width;
    ensure(rw.width <= lin, "linear below exact on K_e(cp(3))")?;
    Ok(format!(
        "DP = enumeration on {} graphs; rw(C5) = 2; {cographs} cographs with rw <= 1; rw <= lrw on {sandwiched}; rw(K_e(cp(3))) = 3 (12 vertices)",
        graphs.len()
    ))
}

fn complement_gap() -> Outcome {
    let r = suite(Suite::ComplementGap, |p| p.samples = 100)?;
    Ok(format!(
        "|rw(G) - rw(complement)| <= 1 on {} graphs (100 random on 7 vertices), exact both sides",
        r.cases.len()
    ))
}

fn substitution() -> Outcome {
    let rows = growth_table(2..=6, GrowthConfig::default()).map_err(|e| e.to_string())?;
    for r in &rows {
        ensure(r.theta_exact && r.theta_e >= r.log2_bound, format!("row n = {}", r.n))?;
        ensure((r.rw_kind == RwKind::Exact) == (r.n <= 3), format!("row n = {} rw kind", r.n))?;
    }
    let rw: Vec<String> = rows.iter().map(|r| format!("{} ({})", r.rw_ke, r.rw_kind.as_str())).collect();
    Ok(format!(
        "asymptotic claims substituted by the growth table: theta_e/log2 n = {:?}, rw(K_e(cp(n))) = [{}]",
        rows.iter().map(|r| (r.ratio * 100.0).round() / 100.0).collect::<Vec<_>>(),
        rw.join(", ")
    ))
}

fn cut_rank_laws() -> Outcome {
    let r = suite(Suite::CutRank, |p| p.samples = 10_000)?;
    let samples: usize = r.cases.iter().map(|c| c.detail.split(' ').next().unwrap().parse::<usize>().unwrap()).sum();
    ensure(samples >= 10_000, format!("only {samples} samples"))?;
    Ok(format!(
        "symmetry, range and submodularity on {samples} random subset pairs over {} graphs, 0 violations",
        r.cases.len()
    ))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        (1, secs(120), lemma_alpha),
        (2, secs(300), gyarfas),
        (3, secs(300), theta_kappa),
        (4, secs(120), cocktail_values),
        (5, secs(120), correspondence),
        (6, secs(60), shearer),
        (7, secs(600), rankwidth_engine),
        (8, secs(600), complement_gap),
        (9, secs(600), substitution),
        (10, secs(60), cut_rank_laws),
    ];
    let mut failed = Vec::new();
    for (id, limit, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome =
            outcome.and_then(
                |msg| {
                    if took <= limit {
                        Ok(msg)
                    } else {
                        Err(format!("took {took:.1?}, limit {limit:?}"))
                    }
                },
            );
        match outcome {
            Ok(msg) => println!("PASS criterion {id:>2} [{took:.2?} / {limit:?}] {msg}"),
            Err(msg) => {
                println!("FAIL criterion {id:>2} [{took:.2?} / {limit:?}] {msg}");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: 10/10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
