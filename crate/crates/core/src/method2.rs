//! Expansion-based lower bounds.
//!
//! For vertex sets `S1`, `S2` and a subset size `t`, the cross expansion
//! `β_t = n_t / |S2|` and the co-expansion table `m_j` (expansion inside the
//! complement) constrain every box representation of dimension `b` through
//! `2(t-1)b >= m_{t*(b)}` with `t*(b) = |S2|(1 - 2b(1 - β_t))`. The
//! certificate below rules out each `b` that violates this, one integer at a
//! time, and the first `b` that survives is the lower bound.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Reason, Result};
use crate::graph::{BipartiteGraph, Graph, VertexSet};
use crate::iso::c_v;
use crate::report::{ratio, BoundReport, Certificate};
use crate::subsets::k_subsets;
use crate::Rational;

fn complement_row(g: &Graph, v: usize) -> u64 {
    g.vertices().bits() & !g.row(v) & !(1u64 << v)
}

fn check_t(t: usize, s1: VertexSet) -> Result<()> {
    if t == 0 || t > s1.len() {
        return Err(Error::OutOfRange {
            what: "t",
            value: t as i64,
        });
    }
    Ok(())
}

/// `n_t = min_{S ⊆ s1, |S| = t} |N[S] ∩ s2|`.
pub fn cross_expansion_count(g: &Graph, s1: VertexSet, s2: VertexSet, t: usize) -> Result<usize> {
    g.require_small()?;
    check_t(t, s1)?;
    if s2.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut best = usize::MAX;
    for s in k_subsets(s1, t, "cross expansion subsets")? {
        best = best.min(g.closed_neighborhood(s).intersection(s2).len());
    }
    Ok(best)
}

/// Cross expansion `β_t(s1, s2) = n_t / |s2|`.
pub fn cross_expansion(g: &Graph, s1: VertexSet, s2: VertexSet, t: usize) -> Result<Rational> {
    let n_t = cross_expansion_count(g, s1, s2, t)?;
    Ok(ratio(n_t as i64, s2.len() as i64))
}

/// `m_j = min_{S ⊆ s2, |S| = j} |N'(S, complement(G)) ∩ s1|`.
pub fn co_expansion_count(g: &Graph, s2: VertexSet, s1: VertexSet, j: usize) -> Result<usize> {
    g.require_small()?;
    if j == 0 || j > s2.len() {
        return Err(Error::OutOfRange {
            what: "j",
            value: j as i64,
        });
    }
    let mut best = usize::MAX;
    for s in k_subsets(s2, j, "co-expansion subsets")? {
        let reach = s.iter().fold(0u64, |acc, v| acc | complement_row(g, v));
        best = best.min((reach & s1.bits()).count_ones() as usize);
    }
    Ok(best)
}

/// Co-expansion coefficient; infinite for non-positive sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alpha {
    Infinite,
    Finite(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoExpansionTable {
    /// `m[j - 1] = m_j`.
    m: Vec<usize>,
}

impl CoExpansionTable {
    pub fn m(&self, j: usize) -> usize {
        self.m[j - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.m
    }

    pub fn j_max(&self) -> usize {
        self.m.len()
    }

    /// `α_j = m_j / j`, infinite for `j <= 0`.
    pub fn alpha(&self, j: i64) -> Alpha {
        if j <= 0 {
            Alpha::Infinite
        } else {
            Alpha::Finite(ratio(self.m(j as usize) as i64, j))
        }
    }
}

/// `m_1..m_{j_max}` of `(s2, s1)`.
pub fn co_expansion_table(
    g: &Graph,
    s2: VertexSet,
    s1: VertexSet,
    j_max: usize,
) -> Result<CoExpansionTable> {
    let m = (1..=j_max)
        .map(|j| co_expansion_count(g, s2, s1, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoExpansionTable { m })
}

/// `(n-Δ-1)/(n-δ-1)`, a floor for every `α_t(V, V)` of a non-complete graph.
pub fn alpha_floor(g: &Graph) -> Result<Rational> {
    if g.is_complete() {
        return Err(Reason::CompleteGraph.into());
    }
    let s = g.degree_summary();
    let n = g.order() as i64;
    Ok(ratio(
        n - s.max_degree as i64 - 1,
        n - s.min_degree as i64 - 1,
    ))
}

/// `(n-Δ)/(n-δ)` for a balanced bipartite graph with parts of size `n`, a
/// floor for `α_t(A, B)`. It is not attained in general.
pub fn bipartite_alpha_floor(gb: &BipartiteGraph) -> Result<Rational> {
    if !gb.is_balanced() {
        return Err(Reason::Unbalanced.into());
    }
    let g = gb.to_graph();
    let s = g.degree_summary();
    let n = gb.n_a() as i64;
    if s.min_degree as i64 == n {
        return Err(Reason::CompleteBipartite.into());
    }
    Ok(ratio(n - s.max_degree as i64, n - s.min_degree as i64))
}

/// Whether the complement has no `K_{t,t}`, i.e. every `t`-set has fewer
/// than `t` common non-neighbours outside it.
pub fn is_t_expander(g: &Graph, t: usize) -> Result<bool> {
    g.require_small()?;
    if t == 0 || t > g.order() {
        return Err(Error::OutOfRange {
            what: "t",
            value: t as i64,
        });
    }
    Ok(c_v(&g.complement(), t)?.value < t)
}

/// Whether every `t`-subset of `A` has fewer than `t` common non-neighbours in `B`.
pub fn is_bipartite_t_expander(gb: &BipartiteGraph, t: usize) -> Result<bool> {
    let g = gb.to_graph();
    g.require_small()?;
    if t == 0 || t > gb.n_a() {
        return Err(Error::OutOfRange {
            what: "t",
            value: t as i64,
        });
    }
    let a = VertexSet::full(gb.n_a());
    let b = g.vertices().difference(a);
    for s in k_subsets(a, t, "bipartite expander subsets")? {
        let missed = b.difference(g.open_neighborhood(s));
        if missed.len() >= t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One candidate dimension examined by [`certify_main`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanStep {
    pub b: u64,
    /// `t*(b)`; an integer because `|S2| β_t = n_t`.
    pub t_star: i64,
    /// `m_{t*(b)}` when `t*(b) >= 1`.
    pub m: Option<usize>,
    /// `b` is ruled out: `t*(b) >= 1` and `2(t-1)b < m_{t*(b)}`.
    pub excluded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Method2Certificate {
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub t: usize,
    pub beta_t: Rational,
    pub trace: Vec<ScanStep>,
    pub bound: u64,
}

impl Method2Certificate {
    /// Re-checks the trace: every step below the bound excludes its `b` by
    /// the stated inequality and the last step does not.
    pub fn is_consistent(&self) -> bool {
        let t = self.t as u64;
        let last = self.trace.len();
        last as u64 == self.bound
            && self.trace.iter().enumerate().all(|(i, step)| {
                let should =
                    step.t_star >= 1 && step.m.is_some_and(|m| (2 * (t - 1) * step.b) < m as u64);
                step.b == i as u64 + 1 && step.excluded == should && step.excluded == (i + 1 < last)
            })
    }
}

/// Integer lower bound on `box(G[s1 ∪ s2])`, and hence on `box(G)`, by the
/// infeasibility scan over `b = 1, 2, ...`.
///
/// Requires `s1`, `s2` nonempty, `1 <= t <= |s1|`, and no `u ∈ s2` with
/// `N[u] ∩ s1 = s1`.
pub fn certify_main(
    g: &Graph,
    s1: VertexSet,
    s2: VertexSet,
    t: usize,
) -> Result<(BoundReport, Method2Certificate)> {
    g.require_small()?;
    if s1.is_empty() || s2.is_empty() {
        return Err(Error::EmptySet);
    }
    if !s1.union(s2).is_subset(g.vertices()) {
        return Err(Error::VertexOutOfRange {
            vertex: 63 - s1.union(s2).bits().leading_zeros() as usize,
            n: g.order(),
        });
    }
    check_t(t, s1)?;
    if s2
        .iter()
        .any(|u| s1.is_subset(g.closed_neighborhood(VertexSet::singleton(u))))
    {
        return Err(if g.is_complete() {
            Reason::CompleteGraph.into()
        } else {
            Reason::UniversalInSecondSet.into()
        });
    }
    let n_t = cross_expansion_count(g, s1, s2, t)?;
    let size2 = s2.len() as i64;
    let gap = size2 - n_t as i64;
    let mut m_cache: BTreeMap<usize, usize> = BTreeMap::new();
    let mut trace = Vec::new();
    let cap = s1.len().max(s2.len()) as u64 + 1;
    for b in 1..=cap {
        let t_star = size2 - 2 * b as i64 * gap;
        let m = if t_star >= 1 {
            let j = t_star as usize;
            Some(match m_cache.get(&j) {
                Some(&m) => m,
                None => {
                    let m = co_expansion_count(g, s2, s1, j)?;
                    m_cache.insert(j, m);
                    m
                }
            })
        } else {
            None
        };
        let excluded = m.is_some_and(|m| 2 * (t as u64 - 1) * b < m as u64);
        trace.push(ScanStep {
            b,
            t_star,
            m,
            excluded,
        });
        if !excluded {
            let cert = Method2Certificate {
                s1,
                s2,
                t,
                beta_t: ratio(n_t as i64, size2),
                trace,
                bound: b,
            };
            let report = BoundReport::exact(
                "method2",
                Rational::from_integer(b as i64),
                Certificate::Method2(cert.clone()),
            );
            return Ok((report, cert));
        }
    }
    unreachable!("b = max(|s1|, |s2|) always satisfies the inequality")
}

/// `(n - n_u) / (2(n - δ - 1))`.
pub fn bound_universal(g: &Graph) -> Result<BoundReport> {
    if g.is_complete() {
        return Err(Reason::CompleteGraph.into());
    }
    let s = g.degree_summary();
    let n = g.order() as i64;
    Ok(BoundReport::exact(
        "universal",
        ratio(
            n - s.universal_count as i64,
            2 * (n - s.min_degree as i64 - 1),
        ),
        Certificate::Params(alloc::vec![
            ("universal_count", s.universal_count as i64),
            ("min_degree", s.min_degree as i64),
        ]),
    ))
}

/// `(|B| - u_B) / (2(|B| - δ_A))`, where `u_B` counts `B`-vertices adjacent
/// to all of `A`.
pub fn bound_bipartite_universal(gb: &BipartiteGraph) -> Result<BoundReport> {
    let nb = gb.n_b() as i64;
    let na = gb.n_a();
    let min_deg_a = (0..na).map(|a| gb.degree_a(a)).min().unwrap_or(0) as i64;
    if min_deg_a == nb {
        return Err(Reason::CompleteBipartite.into());
    }
    let u_b = gb.degrees_b().iter().filter(|&&d| d == na).count() as i64;
    Ok(BoundReport::exact(
        "bipartite_universal",
        ratio(nb - u_b, 2 * (nb - min_deg_a)),
        Certificate::Params(alloc::vec![("u_b", u_b), ("min_degree_a", min_deg_a)]),
    ))
}

/// `n(n-Δ-1) / (2(t-1)[(n-Δ-1) + (n-δ-1)])` for `t`-expanders without
/// universal vertices; `n / (4(t-1))` when regular.
pub fn bound_t_expander(g: &Graph, t: usize) -> Result<BoundReport> {
    if t < 2 {
        return Err(Reason::TrivialExpansion.into());
    }
    if g.is_complete() {
        return Err(Reason::CompleteGraph.into());
    }
    let s = g.degree_summary();
    if s.universal_count > 0 {
        return Err(Reason::UniversalVertex.into());
    }
    if !is_t_expander(g, t)? {
        return Err(Reason::NotExpander.into());
    }
    let n = g.order() as i64;
    let lo = n - s.max_degree as i64 - 1;
    let hi = n - s.min_degree as i64 - 1;
    Ok(BoundReport::exact(
        "t_expander",
        ratio(n * lo, 2 * (t as i64 - 1) * (lo + hi)),
        Certificate::Params(alloc::vec![("t", t as i64)]),
    ))
}

/// Instantiations tried by [`best_method2`]: `(V-U, V-U)` and, for bipartite
/// graphs, each side against the other minus its vertices complete to it.
pub fn method2_choices(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    let mut out = Vec::new();
    let rest = g.vertices().difference(g.universal_vertices());
    if !rest.is_empty() {
        out.push((rest, rest));
    }
    if let Some(sides) = g.bipartition() {
        let b: VertexSet = (0..g.order()).filter(|&v| sides[v]).collect();
        let a = g.vertices().difference(b);
        for (x, y) in [(a, b), (b, a)] {
            let complete_to_x: VertexSet = y
                .iter()
                .filter(|&u| x.is_subset(g.neighbors_set(u)))
                .collect();
            let y2 = y.difference(complete_to_x);
            if !x.is_empty() && !y2.is_empty() {
                out.push((x, y2));
            }
        }
    }
    out
}

/// Strongest [`certify_main`] bound over `t = 1..=t_max` and the canonical
/// set choices. Instantiations over budget are skipped.
pub fn best_method2(g: &Graph, t_max: usize) -> Result<BoundReport> {
    g.require_small()?;
    if g.is_complete() {
        return Err(Reason::CompleteGraph.into());
    }
    let mut best: Option<BoundReport> = None;
    let mut first_err = None;
    for (s1, s2) in method2_choices(g) {
        for t in 1..=t_max.min(s1.len()) {
            match certify_main(g, s1, s2, t) {
                Ok((report, _)) => {
                    if best
                        .as_ref()
                        .is_none_or(|b| report.exact_value() > b.exact_value())
                    {
                        best = Some(report);
                    }
                }
                Err(e) => {
                    first_err.get_or_insert(e);
                }
            }
        }
    }
    best.ok_or_else(|| first_err.unwrap_or(Reason::InvalidParameters.into()))
}
