use boxkit_core::interval::{canonical_edge_count, canonical_supergraph, min_interval_supergraph};
use boxkit_core::iso::{b_v, c_v, iso_profile};
use boxkit_core::method2::{
    alpha_floor, best_method2, bound_universal, certify_main, co_expansion_table, Alpha,
};
use boxkit_core::random::{derive_seed, sample, Model, RandomModelSpec};
use boxkit_core::spectral::{symmetric_eigen, tanner_lb};
use boxkit_core::subsets::k_subsets;
use boxkit_core::{Graph, Rational, VertexOrder, VertexSet};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                g.add_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    g
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn graph_with_order(max_n: usize) -> impl Strategy<Value = (Graph, VertexOrder)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |seq| (g.clone(), VertexOrder::from_sequence(seq).unwrap()))
    })
}

fn graph_with_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (1u64..1 << n).prop_map(move |bits| (g.clone(), VertexSet::from_bits(bits)))
    })
}

/// Intervals `[min rank over N[v], rank(v)]`, overlap tested on integers.
fn canonical_oracle_edges(g: &Graph, order: &VertexOrder) -> usize {
    let n = g.order();
    let iv: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            let l = g
                .neighbors(v)
                .chain([v])
                .map(|w| order.rank(w))
                .min()
                .unwrap();
            (l, order.rank(v))
        })
        .collect();
    let mut count = 0;
    for u in 0..n {
        for v in u + 1..n {
            if iv[u].0.max(iv[v].0) <= iv[u].1.min(iv[v].1) {
                count += 1;
            }
        }
    }
    count
}

fn all_orders(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in all_orders(n - 1) {
        for pos in 0..=rest.len() {
            let mut s = rest.clone();
            s.insert(pos, n - 1);
            out.push(s);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strong_boundary_identity((g, x) in graph_with_set(8)) {
        let lhs = g.complement().strong_vertex_boundary(x).unwrap();
        let rhs = g.vertices().difference(x).difference(g.vertex_boundary(x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn boundary_inside_open_neighbourhood((g, x) in graph_with_set(10)) {
        let gamma = g.vertex_boundary(x);
        let open = g.open_neighborhood(x);
        prop_assert!(gamma.is_subset(open));
        prop_assert!(gamma.len() + x.len() >= open.len());
    }

    #[test]
    fn complement_involution(g in graph(12)) {
        let co = g.complement();
        prop_assert_eq!(co.complement(), g.clone());
        prop_assert_eq!(g.edge_count() + co.edge_count(), g.pair_count());
    }

    #[test]
    fn duality(g in graph(10)) {
        let n = g.order();
        let co = g.complement();
        for k in 1..=n {
            prop_assert_eq!(c_v(&co, k).unwrap().value, n - k - b_v(&g, k).unwrap().value);
        }
    }

    #[test]
    fn profile_monotone_and_collapsing(g in graph(10)) {
        let p = iso_profile(&g).unwrap();
        let n = g.order();
        for i in 1..n {
            for j in i + 1..n {
                prop_assert!(p.cv(i) >= p.cv(j));
            }
            let j = p.cv(i);
            for k in j + 1..n {
                prop_assert!(p.cv(k) < i);
            }
        }
    }

    #[test]
    fn canonical_supergraph_properties((g, order) in graph_with_order(10)) {
        let (sup, rep) = canonical_supergraph(&g, &order).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(sup.has_edge(u, v));
        }
        prop_assert_eq!(rep.realize(), sup.clone());
        prop_assert_eq!(rep.induced_numbering().unwrap(), order.clone());
        let boundary_sum: usize = (1..g.order()).map(|k| g.vertex_boundary(order.prefix(k)).len()).sum();
        prop_assert_eq!(sup.edge_count(), boundary_sum);
        prop_assert_eq!(canonical_edge_count(&g, &order), sup.edge_count());
        prop_assert_eq!(canonical_oracle_edges(&g, &order), sup.edge_count());
        let (best, _) = min_interval_supergraph(&g).unwrap();
        prop_assert!(best <= sup.edge_count());
    }

    #[test]
    fn min_supergraph_floor(g in graph(10)) {
        let (best, order) = min_interval_supergraph(&g).unwrap();
        prop_assert_eq!(canonical_edge_count(&g, &order), best);
        let cv_sum = if g.order() > 1 { iso_profile(&g.complement()).unwrap().cv_sum() } else { 0 };
        prop_assert!(g.pair_count() - best <= cv_sum);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn min_supergraph_matches_brute_force(g in graph(7)) {
        let n = g.order();
        let brute = all_orders(n)
            .into_iter()
            .map(|s| canonical_oracle_edges(&g, &VertexOrder::from_sequence(s).unwrap()))
            .min()
            .unwrap();
        prop_assert_eq!(min_interval_supergraph(&g).unwrap().0, brute);
    }

    #[test]
    fn method2_tables_and_scan(g in graph(11)) {
        prop_assume!(!g.is_complete());
        let n = g.order();
        let v = g.vertices();
        let table = co_expansion_table(&g, v, v, n).unwrap();
        prop_assert!(table.values().windows(2).all(|w| w[0] <= w[1]));
        let floor = alpha_floor(&g).unwrap();
        let regular = g.regular_degree().is_some();
        for j in 1..=n as i64 {
            if let Alpha::Finite(a) = table.alpha(j) {
                prop_assert!(a >= floor);
                if regular {
                    prop_assert!(a >= Rational::from_integer(1));
                }
            }
        }
        let rest = v.difference(g.universal_vertices());
        let (report, cert) = certify_main(&g, rest, rest, 1).unwrap();
        prop_assert!(cert.is_consistent());
        let b = report.exact_value().unwrap();
        prop_assert!(b <= Rational::new(rest.len() as i64, 2) + 1);
        let closed = bound_universal(&g).unwrap().ceiling().unwrap();
        prop_assert!(b >= Rational::from_integer(closed as i64));
        prop_assert!(best_method2(&g, 2).unwrap().exact_value().unwrap() >= b);
    }

    #[test]
    fn eigen_identities(g in graph(14)) {
        let n = g.order();
        let e = symmetric_eigen(&g.adjacency_matrix(), n).unwrap();
        prop_assert!(e.residual <= 1e-8);
        let trace: f64 = e.values.iter().sum();
        let frob: f64 = e.values.iter().map(|x| x * x).sum();
        prop_assert!(trace.abs() <= 1e-8);
        prop_assert!((frob - 2.0 * g.edge_count() as f64).abs() <= 1e-8);
    }

    #[test]
    fn sampling_is_deterministic(seed in any::<u64>(), n in 2usize..40) {
        let spec = RandomModelSpec { model: Model::Gnp { n, p: Rational::new(1, 3) }, seed };
        prop_assert_eq!(sample(&spec).unwrap(), sample(&spec).unwrap());
    }
}

#[test]
fn tanner_never_exceeds_true_minimum() {
    for (i, (n, k)) in [(8, 3), (10, 3), (10, 4), (12, 3), (12, 5)]
        .into_iter()
        .enumerate()
    {
        for s in 0..4 {
            let spec = RandomModelSpec {
                model: Model::Regular { n, k },
                seed: derive_seed(i as u64, s),
            };
            let g = sample(&spec).unwrap().into_graph();
            for x in 1..=n {
                let actual = k_subsets(g.vertices(), x, "test")
                    .unwrap()
                    .map(|s| g.open_neighborhood(s).len())
                    .min()
                    .unwrap();
                assert!(
                    tanner_lb(&g, x).unwrap() <= actual as f64 + 1e-9,
                    "n={n} k={k} x={x}"
                );
            }
        }
    }
}
