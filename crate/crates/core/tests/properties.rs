use proptest::prelude::*;

use broadcast_lab::broadcast::{
    bn_pairwise_criterion, is_bn_independent, is_dominating, is_hearing_independent,
    is_irredundant, is_maximal_bn_independent, is_minimal_dominating, is_minimal_dominating_oracle,
    maximal_bn_by_boundaries, maximal_bn_by_components,
};
use broadcast_lab::harness::exhaustive_values;
use broadcast_lab::io::{parse_graph6, write_graph6};
use broadcast_lab::{
    distances, solve, Broadcast, DistanceMatrix, Graph, ParameterKind, SolveOptions,
};

/// Connected graph on `lo..=hi` vertices: a random tree from a parent array
/// plus random extra edges.
fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Any graph on `lo..=hi` vertices, not necessarily connected.
fn any_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

/// Clamps raw draws into a valid broadcast; about half the vertices stay silent.
fn clamp(raw: &[u32], d: &DistanceMatrix) -> Broadcast {
    Broadcast::new(
        raw.iter()
            .enumerate()
            .map(|(v, &x)| {
                if x % 2 == 0 {
                    0
                } else {
                    1 + (x / 2) % d.strength_cap(v)
                }
            })
            .collect(),
    )
}

fn graph_and_broadcast(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Broadcast)> {
    connected_graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0u32..64, n)).prop_map(|(g, raw)| {
            let d = distances(&g);
            let f = clamp(&raw, &d);
            (g, f)
        })
    })
}

fn single_thread() -> SolveOptions {
    SolveOptions::default().with_threads(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_form_a_metric(g in connected_graph(1, 12)) {
        let d = distances(&g);
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(d.d(u, u), 0);
            prop_assert_eq!(d.ecc(u), (0..n).map(|v| d.d(u, v)).max().unwrap());
            for v in 0..n {
                prop_assert_eq!(d.d(u, v), d.d(v, u));
                for w in 0..n {
                    prop_assert!(d.d(u, w) <= d.d(u, v) + d.d(v, w));
                }
            }
        }
        prop_assert!(d.radius() <= d.diameter() && d.diameter() <= 2 * d.radius());
    }

    #[test]
    fn bn_definition_matches_pairwise_criterion((g, f) in graph_and_broadcast(2, 8)) {
        let d = distances(&g);
        prop_assert_eq!(is_bn_independent(&f, &g, &d), bn_pairwise_criterion(&f, &g, &d));
    }

    #[test]
    fn bn_independence_is_downward_closed((g, f) in graph_and_broadcast(2, 8), v in 0usize..8) {
        let d = distances(&g);
        let v = v % g.n();
        if is_bn_independent(&f, &g, &d) && f.strength(v) > 0 {
            let h = f.with(v, f.strength(v) - 1);
            prop_assert!(is_bn_independent(&h, &g, &d));
        }
    }

    #[test]
    fn bn_implies_hearing_independent((g, f) in graph_and_broadcast(2, 8)) {
        let d = distances(&g);
        prop_assert!(!is_bn_independent(&f, &g, &d) || is_hearing_independent(&f, &g, &d));
    }

    #[test]
    fn minimal_domination_matches_decrement_oracle((g, f) in graph_and_broadcast(2, 8)) {
        let d = distances(&g);
        if is_dominating(&f, &g, &d) {
            prop_assert_eq!(
                is_minimal_dominating(&f, &g, &d),
                is_minimal_dominating_oracle(&f, &g, &d).unwrap()
            );
            prop_assert_eq!(
                is_minimal_dominating(&f, &g, &d),
                is_irredundant(&f, &g, &d).unwrap()
            );
        }
    }

    #[test]
    fn maximality_characterizations_agree((g, f) in graph_and_broadcast(2, 8)) {
        let d = distances(&g);
        if is_bn_independent(&f, &g, &d) {
            let inc = is_maximal_bn_independent(&f, &g, &d).unwrap();
            prop_assert_eq!(inc, maximal_bn_by_boundaries(&f, &g, &d).unwrap());
            if let Some(c) = maximal_bn_by_components(&f, &g, &d).unwrap() {
                prop_assert_eq!(inc, c);
            }
        }
    }

    #[test]
    fn graph6_round_trip_small(g in any_graph(1, 62)) {
        let text = write_graph6(&g);
        prop_assert_eq!(text.len(), 1 + (g.n() * (g.n() - 1) / 2).div_ceil(6));
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn graph6_round_trip_multibyte_header(g in any_graph(63, 100)) {
        let text = write_graph6(&g);
        prop_assert!(text.starts_with('~'));
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn solver_matches_exhaustive_oracle(g in connected_graph(1, 6)) {
        let oracle = exhaustive_values(&g).unwrap();
        for (kind, expected) in ParameterKind::ALL.into_iter().zip(oracle) {
            let r = solve(&g, kind, &single_thread()).unwrap();
            prop_assert!(r.optimal);
            prop_assert_eq!(r.value, expected, "{} on {}", kind, write_graph6(&g));
            let d = distances(&g);
            prop_assert!(kind.is_feasible(&r.witness, &g, &d));
            prop_assert_eq!(r.witness.weight(), r.value);
        }
    }

    #[test]
    fn solver_is_deterministic_across_workers(g in connected_graph(2, 9)) {
        for kind in ParameterKind::ALL {
            let a = solve(&g, kind, &single_thread()).unwrap();
            let b = solve(&g, kind, &SolveOptions::default().with_threads(4)).unwrap();
            prop_assert_eq!(a.value, b.value);
            prop_assert_eq!(&a.witness, &b.witness);
            prop_assert_eq!(a.optimal, b.optimal);
        }
    }
}
