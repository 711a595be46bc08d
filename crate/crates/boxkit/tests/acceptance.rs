//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use boxkit::bounds::{run_bounds, BoundKind, BoundOptions};
use boxkit::config::ExperimentConfig;
use boxkit::emit::csv_string;
use boxkit::experiment::{run_experiment, CellSummary};
use boxkit::io::{parse_edge_list, write_edge_list};
use boxkit_core::families::{
    complement_cycle, complete_multipartite, construct_bipartite_tight,
    construct_cobipartite_tight, cycle, enumerate_graphs, petersen,
};
use boxkit_core::interval::{boxicity_exact, canonical_edge_count, min_interval_supergraph};
use boxkit_core::method1::{bound_cv, bound_imin, bound_regular_complement};
use boxkit_core::method2::{
    alpha_floor, bound_bipartite_universal, bound_universal, certify_main, co_expansion_table,
    Alpha,
};
use boxkit_core::random::{derive_seed, sample, Model, RandomModelSpec};
use boxkit_core::spectral::{
    bound_spectral, graph_spectrum, spectral_formula, srg_secondary, symmetric_eigen,
};
use boxkit_core::{BipartiteGraph, Graph, Rational, VertexSet};

type Check = Result<String, String>;
type Trend = (Vec<CellSummary>, String);
type Criterion = (usize, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_sequences(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for v in 0..n {
        out = out
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                (0..=s.len()).map(move |pos| {
                    let mut t = s.clone();
                    t.insert(pos, v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Edges of the canonical supergraph straight from its interval definition.
fn canonical_oracle_edges(g: &Graph, seq: &[usize]) -> usize {
    let n = g.order();
    let mut rank = vec![0; n];
    for (i, &v) in seq.iter().enumerate() {
        rank[v] = i;
    }
    let iv: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            (
                g.neighbors(v).chain([v]).map(|w| rank[w]).min().unwrap(),
                rank[v],
            )
        })
        .collect();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| iv[u].0.max(iv[v].0) <= iv[u].1.min(iv[v].1))
        .count()
}

fn random_graph(n: usize, p: Rational, seed: u64) -> Graph {
    sample(&RandomModelSpec {
        model: Model::Gnp { n, p },
        seed,
    })
    .unwrap()
    .into_graph()
}

fn criterion_1() -> Check {
    let opts = BoundOptions { t_max: 3 };
    let mut graphs = 0;
    let mut checked = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n).map_err(|e| e.to_string())? {
            let (exact, cert) = boxicity_exact(&g).map_err(|e| e.to_string())?;
            ensure(cert.verify(&g), || format!("certificate fails on {g:?}"))?;
            ensure(exact <= n / 2, || format!("box {exact} > n/2 on {g:?}"))?;
            for r in run_bounds(&g, &BoundKind::ALL, &opts) {
                if let Some(c) = r.ceiling() {
                    checked += 1;
                    ensure(c <= exact as u64, || {
                        format!("{} ceiling {c} > box {exact} on {g:?}", r.name)
                    })?;
                }
            }
            graphs += 1;
        }
    }
    ensure(graphs == 1 + 2 + 4 + 11 + 34 + 156, || {
        format!("{graphs} isomorphism classes")
    })?;
    Ok(format!(
        "{graphs} graphs, {checked} applicable bound values, all ceilings <= box <= n/2"
    ))
}

fn criterion_2() -> Check {
    for n in 6..=12 {
        let r = bound_cv(&complement_cycle(n).unwrap()).map_err(|e| e.to_string())?;
        ensure(r.exact_value() == Some(Rational::new(n as i64, 3)), || {
            format!("n={n}: {:?}", r.value)
        })?;
    }
    let g = complement_cycle(6).unwrap();
    let ceiling = bound_cv(&g).unwrap().ceiling().unwrap();
    let exact = boxicity_exact(&g).unwrap().0;
    ensure(ceiling == 2 && exact == 2, || {
        format!("n=6: ceiling {ceiling}, box {exact}")
    })?;
    Ok("bound_cv = n/3 for n = 6..12; n = 6 ceiling 2 = box".into())
}

fn criterion_3() -> Check {
    let mut cases = Vec::new();
    for k in 1..=4usize {
        for l in 1..=4usize {
            if 2 * k * l > 8 {
                continue;
            }
            let c = construct_cobipartite_tight(k, l).map_err(|e| e.to_string())?;
            let n = 2 * k * l;
            ensure(c.verify() && c.claimed_box_upper == l, || {
                format!("(k,l)=({k},{l}) certificate")
            })?;
            let rc = bound_regular_complement(n, k)
                .unwrap()
                .exact_value()
                .unwrap();
            ensure(rc == Rational::from_integer(l as i64), || {
                format!("({k},{l}) bound {rc}")
            })?;
            let exact = boxicity_exact(&c.graph).unwrap().0;
            ensure(exact == l, || format!("({k},{l}) box {exact}"))?;
            cases.push(format!("({k},{l})"));
        }
    }
    Ok(format!("upper = bound = box = l for {}", cases.join(" ")))
}

fn criterion_4() -> Check {
    let k22 = boxicity_exact(&complete_multipartite(2, 2).unwrap())
        .unwrap()
        .0;
    let k222 = complete_multipartite(2, 3).unwrap();
    let exact = boxicity_exact(&k222).unwrap().0;
    let universal = bound_universal(&k222).unwrap().exact_value().unwrap();
    ensure(
        k22 == 2 && exact == 3 && universal == Rational::from_integer(3),
        || format!("box(K2,2)={k22} box(K2,2,2)={exact} universal={universal}"),
    )?;
    Ok("box(K2,2) = 2, box(K2,2,2) = 3, bound_universal(K2,2,2) = 3".into())
}

fn criterion_5() -> Check {
    for i in 0..100u64 {
        let n = 2 + (i % 7) as usize;
        let p = Rational::new(1 + (i % 5) as i64, 6);
        let g = random_graph(n, p, derive_seed(5, i));
        let (dp, order) = min_interval_supergraph(&g).map_err(|e| e.to_string())?;
        let brute = all_sequences(n)
            .iter()
            .map(|s| canonical_oracle_edges(&g, s))
            .min()
            .unwrap();
        ensure(dp == brute, || format!("graph {i}: dp {dp} brute {brute}"))?;
        ensure(canonical_edge_count(&g, &order) == dp, || {
            format!("graph {i}: order does not attain {dp}")
        })?;
    }
    let c4 = cycle(4).unwrap();
    let (imin, _) = min_interval_supergraph(&c4).unwrap();
    let bound = bound_imin(&c4).unwrap().exact_value().unwrap();
    ensure(imin == 5 && bound == Rational::from_integer(2), || {
        format!("C4: {imin} edges, bound {bound}")
    })?;
    Ok("subset DP = brute force on 100 graphs (n <= 8); I_min(C4) = 5, bound_imin(C4) = 2".into())
}

fn criterion_6() -> Check {
    let mut worst: f64 = 0.0;
    for g in [
        petersen(),
        Graph::complete(4).unwrap(),
        complete_multipartite(2, 3).unwrap(),
    ] {
        let e = symmetric_eigen(&g.adjacency_matrix(), g.order()).map_err(|e| e.to_string())?;
        worst = worst.max(e.residual);
    }
    ensure(worst <= 1e-8, || format!("residual {worst:e}"))?;
    for (l, p) in [(2usize, 3usize), (3, 3)] {
        let (k, a, c) = ((p - 1) * l, (p - 2) * l, (p - 1) * l);
        let srg = srg_secondary(k, a, c).map_err(|e| e.to_string())?;
        let numeric = graph_spectrum(&complete_multipartite(l, p).unwrap())
            .unwrap()
            .lambda_second_abs
            .unwrap();
        ensure(
            (srg - l as f64).abs() <= 1e-8 && (srg - numeric).abs() <= 1e-8,
            || format!("K_{{{l}x{p}}}: srg {srg}, numeric {numeric}"),
        )?;
    }
    let r = bound_spectral(&petersen()).unwrap();
    let value = r.value.unwrap().to_f64();
    let expected = spectral_formula(10, 3, 2.0);
    let by_hand = (9.0 / 4.0) / (1.0f64 + 9.0 / 4.0).ln() * (6.0 / 20.0);
    ensure(
        r.ceiling() == Some(1)
            && (value - 0.5727).abs() <= 1e-3
            && (expected - by_hand).abs() <= 1e-12,
        || format!("Petersen value {value}, ceiling {:?}", r.ceiling()),
    )?;
    Ok(format!(
        "max residual {worst:.1e}; srg lambda = l; Petersen spectral bound {value:.4}, ceiling 1"
    ))
}

fn finite_alphas(g: &Graph, s2: VertexSet, s1: VertexSet) -> (Vec<usize>, Vec<Rational>) {
    let table = co_expansion_table(g, s2, s1, s2.len()).unwrap();
    let alphas = (1..=s2.len() as i64)
        .filter_map(|j| match table.alpha(j) {
            Alpha::Finite(a) => Some(a),
            Alpha::Infinite => None,
        })
        .collect();
    (table.values().to_vec(), alphas)
}

fn criterion_7() -> Check {
    let mut graphs = 0;
    let mut i = 0u64;
    while graphs < 200 {
        i += 1;
        let n = 3 + (i % 10) as usize;
        let g = random_graph(n, Rational::new(1 + (i % 4) as i64, 5), derive_seed(7, i));
        if g.is_complete() {
            continue;
        }
        graphs += 1;
        let v = g.vertices();
        let rest = v.difference(g.universal_vertices());
        let (report, cert) = certify_main(&g, rest, rest, 1).map_err(|e| e.to_string())?;
        let b = report.exact_value().unwrap();
        let closed = bound_universal(&g).unwrap().ceiling().unwrap();
        ensure(b >= Rational::from_integer(closed as i64), || {
            format!("graph {i}: scan {b} < {closed}")
        })?;
        ensure(cert.is_consistent(), || {
            format!("graph {i}: inconsistent trace")
        })?;
        ensure(b <= Rational::new(rest.len() as i64, 2) + 1, || {
            format!("graph {i}: cap violated by {b}")
        })?;
        let (m, alphas) = finite_alphas(&g, v, v);
        ensure(m.windows(2).all(|w| w[0] <= w[1]), || {
            format!("graph {i}: m table {m:?}")
        })?;
        let floor = alpha_floor(&g).unwrap();
        ensure(alphas.iter().all(|&a| a >= floor), || {
            format!("graph {i}: alpha below {floor}")
        })?;
        if g.regular_degree().is_some() {
            ensure(
                alphas.iter().all(|&a| a >= Rational::from_integer(1)),
                || format!("graph {i}: regular alpha < 1"),
            )?;
        }
    }
    // K2,2 = C4 has an empty bipartite complement and sits outside the floor's hypothesis
    let mut bipartite = vec![
        cycle(6).unwrap(),
        cycle(8).unwrap(),
        cycle(10).unwrap(),
        cycle(12).unwrap(),
    ];
    for (k, l) in [(2, 2), (2, 3), (3, 2), (1, 4)] {
        bipartite.push(construct_bipartite_tight(k, l).unwrap().graph);
    }
    for g in &bipartite {
        ensure(g.regular_degree().is_some(), || {
            format!("{g:?} is not regular")
        })?;
        let sides = g.bipartition().unwrap();
        let b: VertexSet = (0..g.order()).filter(|&v| sides[v]).collect();
        let a = g.vertices().difference(b);
        for (s1, s2) in [(a, b), (b, a)] {
            let (m, alphas) = finite_alphas(g, s2, s1);
            ensure(m.windows(2).all(|w| w[0] <= w[1]), || {
                format!("bipartite m table {m:?}")
            })?;
            ensure(
                alphas.iter().all(|&x| x >= Rational::from_integer(1)),
                || "regular bipartite alpha < 1".into(),
            )?;
        }
    }
    Ok(format!(
        "{graphs} random graphs: scan >= ceil(universal), m monotone, alpha floors, cap; {} regular bipartite graphs alpha >= 1",
        bipartite.len()
    ))
}

fn criterion_8() -> Check {
    for (k, l) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let c = construct_bipartite_tight(k, l).map_err(|e| e.to_string())?;
        ensure(c.verify() && c.reps.len() == l + 2, || {
            format!("({k},{l}) certificate")
        })?;
        let gb = BipartiteGraph::from_graph(&c.graph, &c.graph.bipartition().unwrap()).unwrap();
        let v = bound_bipartite_universal(&gb)
            .unwrap()
            .exact_value()
            .unwrap();
        ensure(v == Rational::new(l as i64, 2), || {
            format!("({k},{l}) bound {v}")
        })?;
    }
    Ok(
        "l+2 representations verify and bound_bipartite_universal = l/2 for (2,2) (2,3) (3,2)"
            .into(),
    )
}

const TREND_CONFIGS: [(&str, &str); 3] = [
    (
        "gnp",
        "model = gnp\nn = 12, 16, 20\np = 1/2\nseeds = 20\nmaster_seed = 42\nbounds = cv\n",
    ),
    (
        "regular",
        "model = regular\nn = 200\nk = 3, 5, 8\nseeds = 4\nmaster_seed = 42\nbounds = spectral\n",
    ),
    (
        "gnm",
        "model = gnm\nn = 16\nm = 32, 48, 64\nseeds = 20\nmaster_seed = 42\nbounds = cv\n",
    ),
];

fn run_trends() -> Result<Vec<Trend>, String> {
    TREND_CONFIGS
        .iter()
        .map(|(_, text)| {
            let cfg = ExperimentConfig::parse(text).map_err(|e| e.to_string())?;
            let out = run_experiment(&cfg).map_err(|e| e.to_string())?;
            Ok((out.summary, csv_string(&out.rows)))
        })
        .collect()
}

fn means(cells: &[CellSummary], ceiling: bool) -> Result<Vec<f64>, String> {
    cells
        .iter()
        .map(|c| {
            ensure(c.applicable == c.samples, || {
                format!("{} n={} {}: inapplicable samples", c.model, c.n, c.param)
            })?;
            Ok(if ceiling {
                c.mean_ceiling
            } else {
                c.mean_value
            }
            .unwrap())
        })
        .collect()
}

fn criterion_9(trends: &[Trend]) -> Check {
    let a = means(&trends[0].0, true)?;
    let b = means(&trends[1].0, false)?;
    let c = means(&trends[2].0, false)?;
    ensure(a.windows(2).all(|w| w[0] < w[1]), || {
        format!("(a) gnp mean cv ceilings {a:?}")
    })?;
    ensure(b.windows(2).all(|w| w[0] <= w[1]), || {
        format!("(b) regular mean spectral {b:?}")
    })?;
    ensure(c.windows(2).all(|w| w[0] <= w[1]), || {
        format!("(c) gnm mean cv {c:?}")
    })?;
    let fmt = |xs: &[f64]| {
        xs.iter()
            .map(|x| format!("{x:.3}"))
            .collect::<Vec<_>>()
            .join(" < ")
    };
    Ok(format!("(a) {} (b) {} (c) {}", fmt(&a), fmt(&b), fmt(&c)))
}

fn criterion_10(first: &[Trend]) -> Check {
    let second = run_trends()?;
    for ((name, _), (a, b)) in TREND_CONFIGS.iter().zip(first.iter().zip(&second)) {
        ensure(a.1 == b.1, || format!("{name} CSV differs between runs"))?;
    }
    let mut count = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let text = write_edge_list(&g);
            let back = parse_edge_list(&text).map_err(|e| e.to_string())?;
            ensure(back == g && write_edge_list(&back) == text, || {
                format!("round trip fails on {g:?}")
            })?;
            count += 1;
        }
    }
    let bytes: usize = first.iter().map(|t| t.1.len()).sum();
    Ok(format!(
        "{bytes} CSV bytes identical across two runs; {count} edge lists round-trip"
    ))
}

fn binomial_table(max: usize) -> Vec<Vec<u128>> {
    let mut rows: Vec<Vec<u128>> = vec![vec![1]];
    for n in 1..=max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|i| {
                if i == 0 || i == n {
                    1
                } else {
                    prev[i - 1] + prev[i]
                }
            })
            .collect();
        rows.push(row);
    }
    rows
}

fn criterion_11() -> Check {
    let c = binomial_table(64);
    let e2 = std::f64::consts::E * std::f64::consts::E;
    let mut pairs = 0;
    for (n, row) in c.iter().enumerate().skip(8) {
        let mut i = 1;
        while (i as f64) <= n as f64 / e2 {
            // C(n,i) * i^(2i) <= n^(2i), exactly
            let lhs = row[i] * (i as u128).pow(2 * i as u32);
            let rhs = (n as u128).pow(2 * i as u32);
            ensure(lhs <= rhs, || format!("n={n} i={i}"))?;
            pairs += 1;
            i += 1;
        }
    }
    Ok(format!("C(n,i) <= (n/i)^(2i) on {pairs} pairs, n = 8..64"))
}

fn report(id: usize, title: &str, start: Instant, result: &Check) -> bool {
    let secs = start.elapsed().as_secs_f64();
    match result {
        Ok(detail) => println!("criterion {id:>2} PASS  {title}: {detail} ({secs:.1}s)"),
        Err(why) => println!("criterion {id:>2} FAIL  {title}: {why} ({secs:.1}s)"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    let mut ok = true;
    let simple: [Criterion; 8] = [
        (1, "exhaustive soundness", criterion_1),
        (2, "complement of cycles", criterion_2),
        (3, "tight co-bipartite family", criterion_3),
        (4, "complete multipartite", criterion_4),
        (5, "minimum interval supergraph", criterion_5),
        (6, "spectral", criterion_6),
        (7, "method-2 consistency", criterion_7),
        (8, "bipartite tight family", criterion_8),
    ];
    for (id, title, f) in simple {
        let start = Instant::now();
        ok &= report(id, title, start, &f());
    }
    let start = Instant::now();
    match run_trends() {
        Ok(trends) => {
            ok &= report(9, "random trends", start, &criterion_9(&trends));
            let start = Instant::now();
            ok &= report(10, "determinism and formats", start, &criterion_10(&trends));
        }
        Err(e) => {
            ok &= report(9, "random trends", start, &Err(e.clone()));
            ok &= report(10, "determinism and formats", start, &Err(e));
        }
    }
    let start = Instant::now();
    ok &= report(11, "binomial inequality", start, &criterion_11());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
