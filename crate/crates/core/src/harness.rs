//! Reproduction table, randomized property suites and the exhaustive
//! enumeration oracle.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::broadcast::{
    analyze, bn_pairwise_criterion, is_bn_independent, is_dominating, is_hearing_independent,
    is_irredundant, is_maximal_bn_independent, is_minimal_dominating, is_minimal_dominating_oracle,
    maximal_bn_by_boundaries, maximal_bn_by_components, Broadcast, ParameterKind,
};
use crate::constructions::{
    build_on, decrement_reduction, irredundant_reduction, CertificateName, CertificateSpec,
};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::{
    distances, is_bipartite, is_two_connected, spanning_tree, DistanceMatrix, Graph, UNREACHABLE,
};
use crate::solver::{enumerate_optimal, solve, ParameterResult, SolveOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    CertificateOnly,
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::CertificateOnly => "certificate_only",
            Status::SkippedBudget => "skipped_budget",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub claim_id: String,
    pub instance: String,
    pub expected: String,
    /// Where the expected value comes from: `CLAIMED` (a stated result), `DERIVED` (hand or oracle computation) or `TRIVIAL`.
    pub provenance: String,
    pub computed: String,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl ReportRow {
    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

pub fn report_json(rows: &[ReportRow]) -> String {
    serde_json::to_string_pretty(rows).expect("report serializes")
}

/// CSV with columns claim_id, instance, expected, computed, status, elapsed_ms.
pub fn report_csv(rows: &[ReportRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "claim_id",
        "instance",
        "expected",
        "computed",
        "status",
        "elapsed_ms",
    ])
    .expect("in-memory write");
    for r in rows {
        w.write_record([
            r.claim_id.as_str(),
            r.instance.as_str(),
            &format!("{} [{}]", r.expected, r.provenance),
            r.computed.as_str(),
            &r.status.to_string(),
            &r.elapsed_ms.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("csv is UTF-8")
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

/// Vertex cap for [`exhaustive_values`].
pub const ORACLE_CAP: usize = 8;

/// Every parameter in [`ParameterKind::ALL`] order, by scanning all strength
/// vectors and evaluating the broadcast predicates directly.
pub fn exhaustive_values(g: &Graph) -> Result<[u32; 9]> {
    let n = g.n();
    if n > ORACLE_CAP {
        return Err(Error::CapExceeded { n, cap: ORACLE_CAP });
    }
    let d = distances(g);
    if n == 0 || !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let caps: Vec<u32> = (0..n).map(|v| d.strength_cap(v)).collect();
    let mut best: [Option<u32>; 9] = [None; 9];
    let mut strengths = vec![0u32; n];
    loop {
        let f = Broadcast::new(strengths.clone());
        let w = f.weight();
        let dom = is_dominating(&f, g, &d);
        let bn = is_bn_independent(&f, g, &d);
        let h = is_hearing_independent(&f, g, &d);
        let irr = !f.is_zero() && is_irredundant(&f, g, &d).unwrap_or(false);
        let maximal = bn && is_maximal_bn_independent(&f, g, &d).unwrap_or(false);
        let unit = strengths.iter().all(|&s| s <= 1);
        let feasible = [
            dom,
            dom && irr,
            unit && bn,
            h,
            bn,
            bn && irr,
            bn && dom && irr,
            maximal,
            h && dom && irr,
        ];
        for (i, kind) in ParameterKind::ALL.iter().enumerate() {
            if feasible[i] {
                let better = match best[i] {
                    None => true,
                    Some(b) if kind.is_maximization() => w > b,
                    Some(b) => w < b,
                };
                if better {
                    best[i] = Some(w);
                }
            }
        }
        // mixed-radix increment
        let mut i = 0;
        while i < n && strengths[i] == caps[i] {
            strengths[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        strengths[i] += 1;
    }
    let mut out = [0u32; 9];
    for (o, b) in out.iter_mut().zip(best) {
        *o = b.expect("every parameter has a feasible broadcast on a connected graph");
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Samplers

/// Erdős–Rényi `G(n, 1/2)` conditioned on connectivity.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("edges in range");
        if crate::graph::is_connected(&g) {
            return g;
        }
    }
}

/// Random labelled tree from a random parent array: vertex `i > 0` of a
/// shuffled order attaches to a uniformly chosen earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect();
    Graph::from_edges(n, &edges).expect("edges in range")
}

/// Each vertex broadcasts with probability 0.4, strength uniform in its range.
pub fn random_broadcast<R: Rng>(rng: &mut R, d: &DistanceMatrix) -> Broadcast {
    Broadcast::new(
        (0..d.n())
            .map(|v| {
                if rng.gen_bool(0.4) {
                    rng.gen_range(1..=d.strength_cap(v))
                } else {
                    0
                }
            })
            .collect(),
    )
}

/// Random bn-independent broadcast grown greedily in a shuffled order.
pub fn random_bn_broadcast<R: Rng>(rng: &mut R, d: &DistanceMatrix) -> Broadcast {
    let n = d.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut s = vec![0u32; n];
    for &v in &order {
        let room = (0..n)
            .filter(|&x| s[x] > 0)
            .map(|x| d.d(v, x).saturating_sub(s[x]))
            .min()
            .unwrap_or(u32::MAX)
            .min(d.strength_cap(v));
        if room >= 1 && rng.gen_bool(0.6) {
            s[v] = rng.gen_range(1..=room);
        }
    }
    Broadcast::new(s)
}

/// Random dominating broadcast, by rejection.
fn random_dominating<R: Rng>(rng: &mut R, d: &DistanceMatrix) -> Broadcast {
    loop {
        let f = random_broadcast(rng, d);
        if (0..d.n()).all(|u| (0..d.n()).any(|v| f.strength(v) > 0 && d.d(u, v) <= f.strength(v))) {
            return f;
        }
    }
}

// ---------------------------------------------------------------------------
// Row assembly

struct Tally {
    claim_id: &'static str,
    expected: &'static str,
    provenance: &'static str,
    checked: u64,
    failures: Vec<String>,
    elapsed: Duration,
}

impl Tally {
    fn new(claim_id: &'static str, expected: &'static str, provenance: &'static str) -> Self {
        Tally {
            claim_id,
            expected,
            provenance,
            checked: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn row(&self, instance: String) -> ReportRow {
        let mut computed = format!("{} checks, {} failures", self.checked, self.failures.len());
        if let Some(first) = self.failures.first() {
            computed.push_str(&format!("; first: {first}"));
        }
        ReportRow {
            claim_id: self.claim_id.to_string(),
            instance,
            expected: self.expected.to_string(),
            provenance: self.provenance.to_string(),
            computed,
            status: if self.failures.is_empty() && self.checked > 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            elapsed_ms: self.elapsed.as_millis() as u64,
        }
    }
}

/// Times `body` and charges the duration to `t`.
fn timed<T>(t: &mut Tally, body: impl FnOnce(&mut Tally) -> T) -> T {
    let start = Instant::now();
    let out = body(t);
    t.elapsed += start.elapsed();
    out
}

fn g6(g: &Graph) -> String {
    crate::io::write_graph6(g)
}

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut m = vec![vec![UNREACHABLE; n]; n];
    for (u, row) in m.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i][k] != UNREACHABLE && m[k][j] != UNREACHABLE {
                    m[i][j] = m[i][j].min(m[i][k] + m[k][j]);
                }
            }
        }
    }
    m
}

fn leaves(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

/// A leaf hears some non-leaf broadcaster.
fn leaf_hears_non_leaf(f: &Broadcast, g: &Graph, d: &DistanceMatrix) -> bool {
    leaves(g).into_iter().any(|l| {
        f.broadcasters()
            .into_iter()
            .any(|x| g.degree(x) != 1 && d.d(l, x) <= f.strength(x))
    })
}

fn leaf_or_unit(f: &Broadcast, g: &Graph) -> bool {
    f.broadcasters()
        .into_iter()
        .all(|v| f.strength(v) == 1 || g.degree(v) == 1)
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, &edges).expect("edges in range")
}

/// Randomized invariant checks on `trials` seeded instances of order at
/// most 7, alternating connected random graphs and random trees, plus fixed
/// bipartite instances. One row per invariant.
pub fn property_suite(seed: u64, trials: usize) -> Vec<ReportRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = SolveOptions::default().with_threads(1);

    let mut t_dist = Tally::new(
        "graph_distances_vs_floyd_warshall",
        "identical matrices",
        "DERIVED",
    );
    let mut t_radius = Tally::new("graph_radius_diameter", "rad <= diam <= 2 rad", "TRIVIAL");
    let mut t_bn = Tally::new(
        "bn_definition_vs_pairwise",
        "equivalent on every broadcast",
        "DERIVED",
    );
    let mut t_min = Tally::new(
        "minimal_dominating_vs_decrement_oracle",
        "equivalent on every dominating broadcast",
        "CLAIMED",
    );
    let mut t_unit = Tally::new(
        "unit_broadcaster_in_own_private_boundary",
        "v in PB_f(v) for f(v)=1, f hearing independent",
        "CLAIMED",
    );
    let mut t_edge = Tally::new("bn_edge_covered_at_most_once", "|covered_by| <= 1", "CLAIMED");
    let mut t_max = Tally::new(
        "bn_maximality_characterizations",
        "increment test = boundary char. = component char.",
        "CLAIMED",
    );
    let mut t_bnh = Tally::new(
        "bn_implies_hearing_independent",
        "implication holds",
        "CLAIMED",
    );
    let mut t_oracle = Tally::new(
        "solver_vs_exhaustive_oracle",
        "all nine parameters equal",
        "DERIVED",
    );
    let mut t_witness = Tally::new(
        "solver_witness_feasible_and_lex_least",
        "witness feasible, weight = value, lex-least optimum",
        "DERIVED",
    );
    let mut t_chain = Tally::new(
        "inequality_chain",
        "alpha <= alpha_bnd <= alpha_bnr <= alpha_bn <= alpha_h; alpha_bnd <= Gamma_b",
        "CLAIMED",
    );
    let mut t_span = Tally::new(
        "spanning_tree_monotonicity",
        "alpha_bn(spanning tree) >= alpha_bn(G)",
        "CLAIMED",
    );
    let mut t_ratio = Tally::new("ratio_alpha_bn_over_Gamma_b", "< 2", "CLAIMED");
    let mut t_bip = Tally::new("bipartite_ratio_Gamma_b_over_alpha_bnr", "< 2", "CLAIMED");
    let mut t_red = Tally::new(
        "irredundant_reduction_postconditions",
        "minimal dominating, weight drops by steps, > half, steps < |V++| if V1 empty",
        "CLAIMED",
    );
    let mut t_dec = Tally::new(
        "decrement_reduction_postconditions",
        "dominating, bn-independent, boundary private",
        "CLAIMED",
    );
    let mut t_leaf = Tally::new(
        "trees_no_leaf_hears_non_leaf",
        "holds for every alpha_bn optimum",
        "CLAIMED",
    );
    let mut t_shape = Tally::new(
        "trees_leaf_or_unit_optimum_exists",
        "some alpha_bn and some alpha_bnr optimum has f(v)=1 or deg(v)=1",
        "CLAIMED",
    );
    let mut t_bnr_leaf = Tally::new(
        "trees_bnr_optimum_without_leaf_hearing_non_leaf",
        "some alpha_bnr optimum exists",
        "CLAIMED",
    );
    let mut t_max_units = Tally::new(
        "trees_max_unit_optimum_has_empty_strong_pb",
        "PB_f(v) empty for v in V++ when |V1| is maximum",
        "CLAIMED",
    );
    let mut t_heur = Tally::new(
        "tree_heuristic_soundness",
        "same values with and without the leaf heuristic",
        "CLAIMED",
    );
    let mut t_det = Tally::new(
        "determinism_across_workers",
        "same value and witness for 1 and 3 workers",
        "TRIVIAL",
    );

    for trial in 0..trials.max(1) {
        let n = rng.gen_range(2..=7);
        let tree = trial % 2 == 1;
        let g = if tree {
            random_tree(&mut rng, n)
        } else {
            random_connected_graph(&mut rng, n)
        };
        let d = distances(&g);
        let name = g6(&g);

        timed(&mut t_dist, |t| {
            let fw = floyd_warshall(&g);
            let ok = (0..n).all(|u| (0..n).all(|v| fw[u][v] == d.d(u, v)));
            t.check(ok, || name.clone());
        });
        timed(&mut t_radius, |t| {
            let (r, dm) = (d.radius(), d.diameter());
            t.check(r <= dm && dm <= 2 * r, || {
                format!("{name}: rad {r} diam {dm}")
            });
        });

        // predicate-level checks on sampled broadcasts
        for _ in 0..4 {
            let f = random_broadcast(&mut rng, &d);
            let b = random_bn_broadcast(&mut rng, &d);
            let m = random_dominating(&mut rng, &d);
            for f in [&f, &b] {
                let show = || format!("{name} {:?}", f.strengths());
                timed(&mut t_bn, |t| {
                    t.check(
                        is_bn_independent(f, &g, &d) == bn_pairwise_criterion(f, &g, &d),
                        show,
                    )
                });
                let bn = is_bn_independent(f, &g, &d);
                timed(&mut t_bnh, |t| {
                    t.check(!bn || is_hearing_independent(f, &g, &d), show)
                });
                if is_hearing_independent(f, &g, &d) {
                    timed(&mut t_unit, |t| {
                        let a = analyze(f, &g, &d).expect("valid broadcast");
                        let ok = f
                            .unit_broadcasters()
                            .into_iter()
                            .all(|v| a.private_boundary(v).contains(&v));
                        t.check(ok, show);
                    });
                }
                if bn {
                    timed(&mut t_edge, |t| {
                        let a = analyze(f, &g, &d).expect("valid broadcast");
                        t.check(a.covered_by.iter().all(|(_, c)| c.len() <= 1), show);
                    });
                    timed(&mut t_max, |t| {
                        let inc = is_maximal_bn_independent(f, &g, &d).expect("bn-independent");
                        let by_b = maximal_bn_by_boundaries(f, &g, &d).expect("bn-independent");
                        let by_c = maximal_bn_by_components(f, &g, &d).expect("bn-independent");
                        t.check(inc == by_b && by_c.is_none_or(|c| c == inc), || {
                            format!("{} inc {inc} (i) {by_b} (ii) {by_c:?}", show())
                        });
                    });
                }
            }
            timed(&mut t_min, |t| {
                let oracle = is_minimal_dominating_oracle(&m, &g, &d).expect("dominating");
                t.check(is_minimal_dominating(&m, &g, &d) == oracle, || {
                    format!("{name} {:?}", m.strengths())
                });
            });
        }

        // solver against the oracle
        let solved: Vec<ParameterResult> = ParameterKind::ALL
            .iter()
            .map(|&k| solve(&g, k, &opts).expect("within caps"))
            .collect();
        let value = |k: ParameterKind| {
            solved[ParameterKind::ALL.iter().position(|&x| x == k).unwrap()].value
        };
        timed(&mut t_oracle, |t| {
            let oracle = exhaustive_values(&g).expect("within oracle cap");
            for (r, o) in solved.iter().zip(oracle) {
                t.check(r.optimal && r.value == o, || {
                    format!("{name} {}: solver {} oracle {o}", r.kind, r.value)
                });
            }
        });
        timed(&mut t_witness, |t| {
            for r in &solved {
                let ok = r.kind.is_feasible(&r.witness, &g, &d) && r.witness.weight() == r.value;
                t.check(ok, || {
                    format!("{name} {} witness {:?}", r.kind, r.witness.strengths())
                });
            }
            for kind in [
                ParameterKind::GammaUpper,
                ParameterKind::AlphaBnr,
                ParameterKind::IBn,
            ] {
                let r = &solved[ParameterKind::ALL.iter().position(|&x| x == kind).unwrap()];
                let all = enumerate_optimal(&g, kind, 1).expect("small graph");
                t.check(all.first() == Some(&r.witness), || {
                    format!("{name} {kind} not lex-least")
                });
            }
        });
        timed(&mut t_chain, |t| {
            use ParameterKind::*;
            let chain = [
                value(Alpha),
                value(AlphaBnd),
                value(AlphaBnr),
                value(AlphaBn),
                value(AlphaH),
            ];
            let ok = chain.windows(2).all(|w| w[0] <= w[1]) && value(AlphaBnd) <= value(GammaUpper);
            t.check(ok, || {
                format!("{name} {chain:?} Gamma_b {}", value(GammaUpper))
            });
        });
        timed(&mut t_ratio, |t| {
            let (a, gm) = (
                value(ParameterKind::AlphaBn),
                value(ParameterKind::GammaUpper),
            );
            t.check(a < 2 * gm, || format!("{name} alpha_bn {a} Gamma_b {gm}"));
        });
        if is_bipartite(&g) {
            timed(&mut t_bip, |t| {
                let (gm, a) = (
                    value(ParameterKind::GammaUpper),
                    value(ParameterKind::AlphaBnr),
                );
                t.check(gm < 2 * a, || format!("{name} Gamma_b {gm} alpha_bnr {a}"));
            });
        }
        if !tree {
            timed(&mut t_span, |t| {
                let st = spanning_tree(&g).expect("connected");
                let s = solve(&st, ParameterKind::AlphaBn, &opts)
                    .expect("within caps")
                    .value;
                let a = value(ParameterKind::AlphaBn);
                t.check(s >= a, || format!("{name}: tree {s} < graph {a}"));
            });
        }

        // reductions on alpha_bn optima
        let optima = enumerate_optimal(&g, ParameterKind::AlphaBn, 64).expect("small graph");
        timed(&mut t_red, |t| {
            for f in &optima {
                let show = || format!("{name} {:?}", f.strengths());
                let Ok((r, steps)) = irredundant_reduction(f, &g, &d) else {
                    t.check(false, show);
                    continue;
                };
                let strong = f.strong_broadcasters().len();
                let ok = is_minimal_dominating(&r, &g, &d)
                    && r.weight() as usize + steps == f.weight() as usize
                    && 2 * r.weight() > f.weight()
                    && (!f.unit_broadcasters().is_empty() || steps < strong);
                t.check(ok, show);
            }
        });
        timed(&mut t_dec, |t| {
            for f in &optima {
                let a = analyze(f, &g, &d).expect("valid");
                for b in a
                    .broadcasters
                    .iter()
                    .filter(|b| b.private_boundary.is_empty())
                {
                    let res = decrement_reduction(f, b.vertex, &g, &d);
                    t.check(res.is_ok(), || {
                        format!("{name} {:?} at {}", f.strengths(), b.vertex)
                    });
                }
            }
        });

        if tree {
            timed(&mut t_leaf, |t| {
                for f in &optima {
                    t.check(!leaf_hears_non_leaf(f, &g, &d), || {
                        format!("{name} {:?}", f.strengths())
                    });
                }
            });
            let bnr = enumerate_optimal(&g, ParameterKind::AlphaBnr, usize::MAX).expect("small");
            timed(&mut t_shape, |t| {
                t.check(optima.iter().any(|f| leaf_or_unit(f, &g)), || {
                    format!("{name} alpha_bn")
                });
                t.check(bnr.iter().any(|f| leaf_or_unit(f, &g)), || {
                    format!("{name} alpha_bnr")
                });
            });
            timed(&mut t_bnr_leaf, |t| {
                t.check(bnr.iter().any(|f| !leaf_hears_non_leaf(f, &g, &d)), || {
                    name.clone()
                });
            });
            timed(&mut t_max_units, |t| {
                let all = enumerate_optimal(&g, ParameterKind::AlphaBn, usize::MAX).expect("small");
                let most = all
                    .iter()
                    .map(|f| f.unit_broadcasters().len())
                    .max()
                    .unwrap_or(0);
                for f in all.iter().filter(|f| f.unit_broadcasters().len() == most) {
                    let a = analyze(f, &g, &d).expect("valid");
                    let ok = f
                        .strong_broadcasters()
                        .into_iter()
                        .all(|v| a.private_boundary(v).is_empty());
                    t.check(ok, || format!("{name} {:?}", f.strengths()));
                }
            });
            timed(&mut t_heur, |t| {
                for kind in [ParameterKind::AlphaBn, ParameterKind::AlphaBnr] {
                    let plain = opts.clone().with_tree_heuristics(false);
                    let a = solve(&g, kind, &opts).expect("within caps");
                    let b = solve(&g, kind, &plain).expect("within caps");
                    t.check(a.value == b.value && a.witness == b.witness, || {
                        format!("{name} {kind}: {} vs {}", a.value, b.value)
                    });
                }
            });
        }
        if trial % 10 == 0 {
            timed(&mut t_det, |t| {
                for kind in [
                    ParameterKind::GammaUpper,
                    ParameterKind::AlphaBnr,
                    ParameterKind::GammaLower,
                ] {
                    let one = solve(&g, kind, &opts).expect("within caps");
                    let three = solve(&g, kind, &SolveOptions::default().with_threads(3))
                        .expect("within caps");
                    t.check(
                        one.value == three.value && one.witness == three.witness,
                        || format!("{name} {kind}"),
                    );
                }
            });
        }
    }

    // fixed 2-connected bipartite instances
    let mut t_eq = Tally::new(
        "bipartite_two_connected_equality",
        "alpha = alpha_bnd = alpha_bnr = alpha_bn",
        "CLAIMED",
    );
    let fixed: Vec<(String, Graph)> = [
        FamilySpec::Cycle(6),
        FamilySpec::Grid(2, 2),
        FamilySpec::Grid(2, 3),
        FamilySpec::Grid(2, 4),
        FamilySpec::Grid(3, 3),
        FamilySpec::Grid(3, 4),
    ]
    .into_iter()
    .map(|s| (s.to_string(), generate(&s).expect("valid family")))
    .chain(std::iter::once((
        "K_{2,3}".to_string(),
        complete_bipartite(2, 3),
    )))
    .collect();
    timed(&mut t_eq, |t| {
        for (label, g) in &fixed {
            use ParameterKind::*;
            t.check(is_bipartite(g) && is_two_connected(g), || {
                format!("{label} not 2-connected bipartite")
            });
            let vals: Vec<u32> = [Alpha, AlphaBnd, AlphaBnr, AlphaBn]
                .iter()
                .map(|&k| solve(g, k, &opts).expect("within caps").value)
                .collect();
            t.check(vals.windows(2).all(|w| w[0] == w[1]), || {
                format!("{label} {vals:?}")
            });
        }
    });

    let instance = format!("seed {seed}, {trials} trials, n <= 7");
    let fixed_instance = fixed
        .iter()
        .map(|(l, _)| l.as_str())
        .collect::<Vec<_>>()
        .join(", ");
    let mut rows: Vec<ReportRow> = [
        &t_dist,
        &t_radius,
        &t_bn,
        &t_min,
        &t_unit,
        &t_edge,
        &t_max,
        &t_bnh,
        &t_oracle,
        &t_witness,
        &t_chain,
        &t_span,
        &t_ratio,
        &t_bip,
        &t_red,
        &t_dec,
        &t_leaf,
        &t_shape,
        &t_bnr_leaf,
        &t_max_units,
        &t_heur,
        &t_det,
    ]
    .iter()
    .map(|t| t.row(instance.clone()))
    .collect();
    rows.push(t_eq.row(fixed_instance));
    rows
}

/// Solves all nine parameters on `g` and evaluates the inequality chain.
pub fn inequality_chain_check(g: &Graph, budget: &SolveOptions) -> ReportRow {
    use ParameterKind::*;
    let start = Instant::now();
    let mut row = ReportRow {
        claim_id: "inequality_chain".into(),
        instance: g6(g),
        expected: "alpha <= alpha_bnd <= alpha_bnr <= alpha_bn <= alpha_h; alpha_bnd <= Gamma_b"
            .into(),
        provenance: "CLAIMED".into(),
        computed: String::new(),
        status: Status::Pass,
        elapsed_ms: 0,
    };
    let mut values = Vec::new();
    for kind in ParameterKind::ALL {
        match solve(g, kind, budget) {
            Ok(r) if r.optimal => values.push((kind, r.value)),
            Ok(_) | Err(Error::CapExceeded { .. }) => {
                row.status = Status::SkippedBudget;
                row.computed = format!("{kind} not solved within budget");
                row.elapsed_ms = start.elapsed().as_millis() as u64;
                return row;
            }
            Err(e) => {
                row.status = Status::Fail;
                row.computed = e.to_string();
                row.elapsed_ms = start.elapsed().as_millis() as u64;
                return row;
            }
        }
    }
    let v = |k: ParameterKind| values.iter().find(|(x, _)| *x == k).unwrap().1;
    let chain = [v(Alpha), v(AlphaBnd), v(AlphaBnr), v(AlphaBn), v(AlphaH)];
    let ok = chain.windows(2).all(|w| w[0] <= w[1]) && v(AlphaBnd) <= v(GammaUpper);
    row.computed = values
        .iter()
        .map(|(k, x)| format!("{k}={x}"))
        .collect::<Vec<_>>()
        .join(" ");
    row.status = if ok { Status::Pass } else { Status::Fail };
    row.elapsed_ms = start.elapsed().as_millis() as u64;
    row
}

// ---------------------------------------------------------------------------
// Reproduction table

/// Accumulates the checks behind one reproduction row.
struct RowBuilder {
    row: ReportRow,
    parts: Vec<String>,
    failed: bool,
    incomplete: bool,
    certificates_ok: bool,
    start: Instant,
}

impl RowBuilder {
    fn new(claim_id: &str, instance: &str, expected: &str, provenance: &str) -> Self {
        RowBuilder {
            row: ReportRow {
                claim_id: claim_id.into(),
                instance: instance.into(),
                expected: expected.into(),
                provenance: provenance.into(),
                computed: String::new(),
                status: Status::Pass,
                elapsed_ms: 0,
            },
            parts: Vec::new(),
            failed: false,
            incomplete: false,
            certificates_ok: true,
            start: Instant::now(),
        }
    }

    fn note(&mut self, s: String) {
        self.parts.push(s);
    }

    fn fail(&mut self, s: String) {
        self.failed = true;
        self.parts.push(s);
    }

    /// Solves exactly and compares with `expected`. Returns the value when
    /// the solve completed.
    fn exact(
        &mut self,
        label: &str,
        g: &Graph,
        kind: ParameterKind,
        expected: Option<u32>,
        opts: &SolveOptions,
    ) -> Option<u32> {
        match solve(g, kind, opts) {
            Ok(r) if r.optimal => {
                let ok = expected.is_none_or(|e| e == r.value);
                let msg = format!("{kind}({label})={}", r.value);
                if ok {
                    self.note(msg);
                } else {
                    self.fail(format!("{msg} expected {}", expected.unwrap()));
                }
                Some(r.value)
            }
            Ok(r) => {
                // An incumbent past the expected value already refutes it.
                let refuted = expected.is_some_and(|e| {
                    if kind.is_maximization() {
                        r.value > e
                    } else {
                        r.value < e
                    }
                });
                let bound = if kind.is_maximization() { ">=" } else { "<=" };
                let msg = format!("{kind}({label}){bound}{} (budget)", r.value);
                if refuted {
                    self.fail(msg);
                } else {
                    self.incomplete = true;
                    self.note(msg);
                }
                None
            }
            Err(Error::CapExceeded { .. }) => {
                self.incomplete = true;
                self.note(format!("{kind}({label}) over vertex cap"));
                None
            }
            Err(e) => {
                self.fail(format!("{kind}({label}): {e}"));
                None
            }
        }
    }

    fn certificate(&mut self, name: CertificateName, family: FamilySpec) -> Option<Broadcast> {
        let spec = CertificateSpec::new(name, family);
        let built = generate(&spec.family).and_then(|g| {
            let d = distances(&g);
            build_on(&spec, &g, &d)
        });
        match built {
            Ok(f) => {
                self.note(format!(
                    "{name}({}) weight {} verified",
                    spec.family,
                    f.weight()
                ));
                Some(f)
            }
            Err(e) => {
                self.certificates_ok = false;
                self.fail(format!("{name}({}): {e}", spec.family));
                None
            }
        }
    }

    fn finish(mut self, certificate_level: bool) -> ReportRow {
        self.row.status = if self.failed {
            Status::Fail
        } else if certificate_level || self.incomplete {
            if self.certificates_ok && certificate_level {
                Status::CertificateOnly
            } else {
                Status::SkippedBudget
            }
        } else {
            Status::Pass
        };
        self.row.computed = self.parts.join("; ");
        self.row.elapsed_ms = self.start.elapsed().as_millis() as u64;
        self.row
    }
}

fn family(spec: &FamilySpec) -> Graph {
    generate(spec).expect("fixed family parameters are valid")
}

/// Claim ids of the reproduction rows, in table order.
pub const CLAIM_IDS: [&str; 12] = [
    "paths",
    "spiders",
    "grids_Gamma",
    "noncomparability",
    "Gk_Gamma",
    "Tk_family",
    "anchor_tree",
    "Hk_Gamma_certificate",
    "KnP3_ratio",
    "open_question",
    "property_suites",
    "grid_difference",
];

/// One reproduction row; `index` runs over 1..=12 in [`CLAIM_IDS`] order.
pub fn reproduce_row(index: usize, opts: &SolveOptions) -> ReportRow {
    use ParameterKind::*;
    let id = CLAIM_IDS[index - 1];
    match index {
        1 => {
            let mut b = RowBuilder::new(
                id,
                "P_2..P_8",
                "alpha_bnd = alpha_bn = alpha_bnr = Gamma_b = n-1",
                "CLAIMED",
            );
            for n in 2..=8 {
                let g = family(&FamilySpec::Path(n));
                for kind in [AlphaBnd, AlphaBn, AlphaBnr, GammaUpper] {
                    b.exact(&format!("P_{n}"), &g, kind, Some(n as u32 - 1), opts);
                }
            }
            b.finish(false)
        }
        2 => {
            let mut b = RowBuilder::new(
                id,
                "Sp(2^3), Sp(2^4), Sp(3^3)",
                "(alpha_bn, alpha_bnr, alpha_bnd, Gamma_b, alpha_h) = (6,4,4,4,9), (8,5,5,5,12), (9,7,7,-,15)",
                "CLAIMED",
            );
            let cases: [(Vec<usize>, [Option<u32>; 5]); 3] = [
                (vec![2; 3], [Some(6), Some(4), Some(4), Some(4), Some(9)]),
                (vec![2; 4], [Some(8), Some(5), Some(5), Some(5), Some(12)]),
                (vec![3; 3], [Some(9), Some(7), Some(7), None, Some(15)]),
            ];
            for (legs, expected) in cases {
                let spec = FamilySpec::Spider(legs);
                let g = family(&spec);
                for (kind, e) in [AlphaBn, AlphaBnr, AlphaBnd, GammaUpper, AlphaH]
                    .into_iter()
                    .zip(expected)
                {
                    if e.is_some() {
                        b.exact(&spec.to_string(), &g, kind, e, opts);
                    }
                }
            }
            b.finish(false)
        }
        3 => {
            let mut b = RowBuilder::new(
                id,
                "G_{2,2}, G_{2,3}, G_{3,3}, G_{3,4}",
                "Gamma_b = m(n-1): 2, 4, 6, 9; alpha = alpha_bn = alpha_bnr = 5 on G_{3,3}",
                "CLAIMED",
            );
            for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
                let g = family(&FamilySpec::Grid(m, n));
                b.exact(
                    &format!("G_{{{m},{n}}}"),
                    &g,
                    GammaUpper,
                    Some((m * (n - 1)) as u32),
                    opts,
                );
            }
            let g = family(&FamilySpec::Grid(3, 3));
            for kind in [Alpha, AlphaBn, AlphaBnr] {
                b.exact("G_{3,3}", &g, kind, Some(5), opts);
            }
            b.finish(false)
        }
        4 => {
            let mut b = RowBuilder::new(
                id,
                "G_2 (16 vertices)",
                "alpha_bnr = 9 > Gamma_b = 7",
                "CLAIMED",
            );
            let spec = FamilySpec::LayeredGk(2);
            let g = family(&spec);
            let a = b.exact("G_2", &g, AlphaBnr, Some(9), opts);
            let gm = b.exact("G_2", &g, GammaUpper, Some(7), opts);
            if let (Some(a), Some(gm)) = (a, gm) {
                if a <= gm {
                    b.fail(format!("alpha_bnr {a} <= Gamma_b {gm}"));
                }
            }
            let incomplete = b.incomplete;
            if incomplete {
                b.certificate(CertificateName::GkBnrF, spec.clone());
                b.certificate(CertificateName::GkDomSet, spec);
            }
            b.finish(incomplete)
        }
        5 => {
            let mut b = RowBuilder::new(
                id,
                "G_1; Gk_bnr_f on G_1..G_4",
                "Gamma_b(G_1) = 5; Gk_bnr_f bn-independent irredundant of weight 3(k+1)",
                "CLAIMED",
            );
            let g = family(&FamilySpec::LayeredGk(1));
            b.exact("G_1", &g, GammaUpper, Some(5), opts);
            for k in 1..=4 {
                b.certificate(CertificateName::GkBnrF, FamilySpec::LayeredGk(k));
            }
            b.finish(false)
        }
        6 => {
            let mut b = RowBuilder::new(
                id,
                "T_2; Tk_gamma_f on T_2..T_5",
                "alpha_bnr(T_2) = 6; Tk_gamma_f minimal dominating of weight 4k",
                "CLAIMED",
            );
            let g = family(&FamilySpec::ChainTreeTk(2));
            b.exact("T_2", &g, AlphaBnr, Some(6), opts);
            for k in 2..=5 {
                b.certificate(CertificateName::TkGammaF, FamilySpec::ChainTreeTk(k));
            }
            b.finish(false)
        }
        7 => {
            let mut b = RowBuilder::new(
                id,
                "anchor tree T (21 vertices)",
                "Gamma_b(T) = 13, alpha_bnr(T) = 14",
                "CLAIMED",
            );
            let deep = SolveOptions {
                node_budget: opts.node_budget.max(1_000_000_000),
                time_budget: Some(opts.time_budget.unwrap_or(Duration::from_secs(1800))),
                ..opts.clone()
            };
            let g = family(&FamilySpec::AnchorTreeT);
            b.exact("T", &g, GammaUpper, Some(13), &deep);
            b.exact("T", &g, AlphaBnr, Some(14), &deep);
            let incomplete = b.incomplete;
            b.certificate(CertificateName::TGammaG13, FamilySpec::AnchorTreeT);
            b.certificate(CertificateName::TBnrF14, FamilySpec::AnchorTreeT);
            b.finish(incomplete)
        }
        8 => {
            let mut b = RowBuilder::new(
                id,
                "H_1 (63 vertices)",
                "Hk_lambda minimal dominating weight 41; Hk_bnr_union bn-independent irredundant non-dominating weight 42",
                "CLAIMED",
            );
            let lambda = b.certificate(CertificateName::HkLambda, FamilySpec::LinkedTreesHk(1));
            let union = b.certificate(CertificateName::HkBnrUnion, FamilySpec::LinkedTreesHk(1));
            if let (Some(l), Some(u)) = (lambda, union) {
                let gap = u.weight() as i64 - l.weight() as i64;
                if gap >= 1 {
                    b.note(format!("witnessed gap {gap}"));
                } else {
                    b.fail(format!("witnessed gap {gap}"));
                }
            }
            b.note("exact Gamma_b(H_1) not attempted".into());
            b.finish(true)
        }
        9 => {
            let mut b = RowBuilder::new(
                id,
                "K_n x P_3, n = 2, 3, 4",
                "Gamma_b = 2n, alpha_bn = alpha_bnr = 3",
                "CLAIMED",
            );
            for n in 2..=4 {
                let g = family(&FamilySpec::CompleteTimesP3(n));
                let label = format!("K_{n}xP_3");
                b.exact(&label, &g, GammaUpper, Some(2 * n as u32), opts);
                b.exact(&label, &g, AlphaBn, Some(3), opts);
                b.exact(&label, &g, AlphaBnr, Some(3), opts);
            }
            b.finish(false)
        }
        10 => {
            let mut b = RowBuilder::new(
                id,
                "open-question graph (6 vertices)",
                "alpha_hd >= 4 (certificate and exact); alpha_bnd = 3",
                "CLAIMED",
            );
            let g = family(&FamilySpec::OpenQuestionExample);
            b.certificate(
                CertificateName::OpenQuestionHd,
                FamilySpec::OpenQuestionExample,
            );
            if let Some(v) = b.exact("G", &g, AlphaHd, None, opts) {
                if v < 4 {
                    b.fail(format!("alpha_hd {v} < 4"));
                }
            }
            b.exact("G", &g, AlphaBnd, Some(3), opts);
            b.finish(false)
        }
        11 => {
            let mut b = RowBuilder::new(
                id,
                "seed 1, 200 trials, n <= 7",
                "every property row passes",
                "DERIVED",
            );
            let rows = property_suite(1, 200);
            let failing: Vec<&str> = rows
                .iter()
                .filter(|r| r.status != Status::Pass)
                .map(|r| r.claim_id.as_str())
                .collect();
            if failing.is_empty() {
                b.note(format!("{} rows pass", rows.len()));
            } else {
                b.fail(format!("failing: {}", failing.join(", ")));
            }
            b.finish(false)
        }
        12 => {
            let mut b = RowBuilder::new(
                id,
                "G_{3,4}",
                "Gamma_b - alpha_bn = 9 - 6 = 3 >= floor(4/2)",
                "CLAIMED",
            );
            let g = family(&FamilySpec::Grid(3, 4));
            let gm = b.exact("G_{3,4}", &g, GammaUpper, Some(9), opts);
            let a = b.exact("G_{3,4}", &g, AlphaBn, Some(6), opts);
            if let (Some(gm), Some(a)) = (gm, a) {
                if gm < a + 2 {
                    b.fail(format!("difference {} < 2", gm as i64 - a as i64));
                }
            }
            b.finish(false)
        }
        _ => panic!("no reproduction row {index}"),
    }
}

/// Every reproduction row in claim order.
pub fn reproduce_table(budget: &SolveOptions) -> Vec<ReportRow> {
    (1..=CLAIM_IDS.len())
        .map(|i| reproduce_row(i, budget))
        .collect()
}
