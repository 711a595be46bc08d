//! Interval representations, canonical interval supergraphs and the exact
//! boxicity oracle.
//!
//! For a vertex order `η`, the canonical supergraph `I_η` gives every vertex
//! the interval `[min_{w ∈ N[v]} η(w) - ε_v, η(v)]`. Any interval supergraph
//! of `G` whose right endpoints induce `η` contains `I_η`, so searches over
//! interval supergraphs may restrict themselves to canonical ones.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Rational;

/// Largest order accepted by the subset dynamic program.
pub const DP_LIMIT: usize = 24;
/// Largest order accepted by the exact boxicity search.
pub const EXACT_LIMIT: usize = 8;

/// A closed interval per vertex with exact rational endpoints, all `2n`
/// endpoints pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRep {
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalRep {
    pub fn new(intervals: Vec<(Rational, Rational)>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::EmptySet);
        }
        for (v, (l, r)) in intervals.iter().enumerate() {
            if l > r {
                return Err(Error::ReversedInterval(v));
            }
        }
        let mut ends: Vec<Rational> = intervals.iter().flat_map(|&(l, r)| [l, r]).collect();
        ends.sort_unstable();
        if ends.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEndpoint);
        }
        Ok(IntervalRep { intervals })
    }

    /// Closed integer intervals `[a, b]` nudged apart so that all endpoints
    /// are distinct while every pair keeps its intersection status: each
    /// interval grows by a distinct amount below 1/2 on both sides.
    pub fn from_closed_integer(intervals: &[(i64, i64)]) -> Result<Self> {
        let n = intervals.len() as i64;
        let reps = intervals
            .iter()
            .enumerate()
            .map(|(v, &(a, b))| {
                let eps = Rational::new(v as i64 + 1, 4 * (n + 1));
                (
                    Rational::from_integer(a) - eps,
                    Rational::from_integer(b) + eps,
                )
            })
            .collect();
        IntervalRep::new(reps)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn interval(&self, v: usize) -> (Rational, Rational) {
        self.intervals[v]
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    /// The interval graph: `u ~ v` iff `l(u) < r(v)` and `l(v) < r(u)`.
    pub fn realize(&self) -> Graph {
        let n = self.intervals.len();
        let mut g = Graph::empty(n).expect("non-empty representation");
        for u in 0..n {
            for v in u + 1..n {
                let (lu, ru) = self.intervals[u];
                let (lv, rv) = self.intervals[v];
                if lu < rv && lv < ru {
                    g.add_edge(u, v).expect("distinct in-range vertices");
                }
            }
        }
        g
    }

    /// Vertices numbered by increasing right endpoint.
    pub fn induced_numbering(&self) -> Result<VertexOrder> {
        let mut seq: Vec<usize> = (0..self.intervals.len()).collect();
        seq.sort_by(|&a, &b| self.intervals[a].1.cmp(&self.intervals[b].1));
        if seq
            .windows(2)
            .any(|w| self.intervals[w[0]].1 == self.intervals[w[1]].1)
        {
            return Err(Error::DuplicateEndpoint);
        }
        VertexOrder::from_sequence(seq)
    }
}

/// A numbering `η` of the vertices: `rank(v)` is the position of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexOrder {
    rank: Vec<usize>,
}

impl VertexOrder {
    pub fn identity(n: usize) -> Self {
        VertexOrder {
            rank: (0..n).collect(),
        }
    }

    /// `seq[i]` is the vertex placed at position `i`.
    pub fn from_sequence(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::NotPermutation(n));
            }
            rank[v] = i;
        }
        Ok(VertexOrder { rank })
    }

    pub fn from_ranks(rank: Vec<usize>) -> Result<Self> {
        let n = rank.len();
        let mut seq = vec![usize::MAX; n];
        for (v, &r) in rank.iter().enumerate() {
            if r >= n || seq[r] != usize::MAX {
                return Err(Error::NotPermutation(n));
            }
            seq[r] = v;
        }
        Ok(VertexOrder { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Vertices in order of increasing rank.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.rank.len()];
        for (v, &r) in self.rank.iter().enumerate() {
            seq[r] = v;
        }
        seq
    }

    /// `S_k(η)`: the first `k` vertices.
    pub fn prefix(&self, k: usize) -> VertexSet {
        self.rank
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r < k)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn reversed(&self) -> Self {
        let n = self.rank.len();
        VertexOrder {
            rank: self.rank.iter().map(|&r| n - 1 - r).collect(),
        }
    }
}

// Smallest rank in the closed neighbourhood of every vertex.
fn leftmost_ranks(g: &Graph, order: &VertexOrder) -> Vec<usize> {
    (0..g.order())
        .map(|v| {
            g.neighbors(v)
                .map(|w| order.rank(w))
                .fold(order.rank(v), usize::min)
        })
        .collect()
}

/// `I_η` together with the interval representation that realises it:
/// `r(v) = η(v)`, `l(v) = min_{w ∈ N[v]} η(w) - (v+1)/(n+1)`.
pub fn canonical_supergraph(g: &Graph, order: &VertexOrder) -> Result<(Graph, IntervalRep)> {
    let n = g.order();
    if order.len() != n {
        return Err(Error::NotPermutation(n));
    }
    let left = leftmost_ranks(g, order);
    let mut sup = Graph::empty(n)?;
    let seq = order.sequence();
    for (i, &u) in seq.iter().enumerate() {
        for &v in &seq[i + 1..] {
            if left[v] <= i {
                sup.add_edge(u, v)?;
            }
        }
    }
    let denom = n as i64 + 1;
    let rep = IntervalRep::new(
        (0..n)
            .map(|v| {
                let l = Rational::from_integer(left[v] as i64) - Rational::new(v as i64 + 1, denom);
                (l, Rational::from_integer(order.rank(v) as i64))
            })
            .collect(),
    )?;
    Ok((sup, rep))
}

/// Edge count of `I_η` without building it.
pub fn canonical_edge_count(g: &Graph, order: &VertexOrder) -> usize {
    leftmost_ranks(g, order)
        .iter()
        .enumerate()
        .map(|(v, &l)| order.rank(v) - l)
        .sum()
}

/// Fewest edges of any interval supergraph of `g`, with an optimal order.
///
/// Subset DP: `f(S) = min_{v ∈ S} f(S - v) + |Γ(S)|`, where `v` is the last
/// vertex of the prefix `S`.
pub fn min_interval_supergraph(g: &Graph) -> Result<(usize, VertexOrder)> {
    let n = g.order();
    if n > DP_LIMIT {
        return Err(Error::Budget {
            what: "minimum interval supergraph order",
            needed: n as u64,
            limit: DP_LIMIT as u64,
        });
    }
    let rows: Vec<u32> = (0..n).map(|v| g.row(v) as u32).collect();
    let boundary = |s: u32| -> u16 {
        let mut union = 0u32;
        let mut rest = s;
        while rest != 0 {
            union |= rows[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        (union & !s).count_ones() as u16
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut f = vec![0u16; 1usize << n];
    for s in 1..=full {
        let mut best = u16::MAX;
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            best = best.min(f[(s ^ bit) as usize]);
            rest ^= bit;
        }
        f[s as usize] = best + boundary(s);
    }
    // Walk back from the full set, peeling off the smallest valid last vertex.
    let mut seq = vec![0usize; n];
    let mut s = full;
    for pos in (0..n).rev() {
        let target = f[s as usize] - boundary(s);
        let v = (0..n)
            .find(|&v| s & (1 << v) != 0 && f[(s ^ (1 << v)) as usize] == target)
            .expect("DP optimum has a predecessor");
        seq[pos] = v;
        s ^= 1 << v;
    }
    Ok((f[full as usize] as usize, VertexOrder::from_sequence(seq)?))
}

/// `k` canonical interval supergraphs whose edge intersection is the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxCertificate {
    pub orders: Vec<VertexOrder>,
    pub reps: Vec<IntervalRep>,
}

impl BoxCertificate {
    pub fn dimension(&self) -> usize {
        self.reps.len()
    }

    /// Exact edge-set check: the intersection of all realised interval
    /// graphs (the complete graph when there are none) equals `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        intersect_reps(g.order(), &self.reps).is_some_and(|h| &h == g)
    }
}

/// Edge intersection of realised representations on `n` vertices.
pub fn intersect_reps(n: usize, reps: &[IntervalRep]) -> Option<Graph> {
    let mut acc = Graph::complete(n).ok()?;
    for rep in reps {
        if rep.len() != n {
            return None;
        }
        let h = rep.realize();
        for (u, v) in acc.clone().edges() {
            if !h.has_edge(u, v) {
                acc.remove_edge(u, v);
            }
        }
    }
    Some(acc)
}

pub(crate) fn next_permutation(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// Distinct sets of `g`'s non-edges that some canonical supergraph leaves
/// out, reduced to the inclusion-maximal ones, each with one witnessing order.
fn maximal_cover_sets(g: &Graph, non_edges: &[(usize, usize)]) -> Vec<(u64, Vec<usize>)> {
    let n = g.order();
    let mut seen: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut seq: Vec<usize> = (0..n).collect();
    loop {
        let order = VertexOrder::from_sequence(seq.clone()).expect("permutation");
        let left = leftmost_ranks(g, &order);
        let mut mask = 0u64;
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            let (early, late) = if order.rank(u) < order.rank(v) {
                (u, v)
            } else {
                (v, u)
            };
            if left[late] > order.rank(early) {
                mask |= 1 << i;
            }
        }
        seen.entry(mask).or_insert_with(|| seq.clone());
        if !next_permutation(&mut seq) {
            break;
        }
    }
    let all: Vec<(u64, Vec<usize>)> = seen.into_iter().collect();
    all.iter()
        .filter(|(m, _)| *m != 0 && !all.iter().any(|(o, _)| o != m && o & m == *m))
        .cloned()
        .collect()
}

fn cover(sets: &[(u64, Vec<usize>)], uncovered: u64, k: usize, chosen: &mut Vec<usize>) -> bool {
    if uncovered == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let target = uncovered & uncovered.wrapping_neg();
    for (i, (m, _)) in sets.iter().enumerate() {
        if m & target != 0 {
            chosen.push(i);
            if cover(sets, uncovered & !m, k - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn certificate(g: &Graph, orders: Vec<VertexOrder>) -> Result<BoxCertificate> {
    let reps = orders
        .iter()
        .map(|o| canonical_supergraph(g, o).map(|(_, rep)| rep))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoxCertificate { orders, reps })
}

/// Whether `box(g) <= k`, with a certificate when it is.
///
/// Every non-edge of `g` must be missing from at least one of the `k`
/// interval supergraphs; it suffices to search canonical ones, and among
/// those only the ones whose missing-edge sets are inclusion-maximal.
/// Complete graphs have boxicity 0 (empty intersection).
pub fn boxicity_le(g: &Graph, k: usize) -> Result<Option<BoxCertificate>> {
    let n = g.order();
    if n > EXACT_LIMIT {
        return Err(Error::Budget {
            what: "exact boxicity order",
            needed: n as u64,
            limit: EXACT_LIMIT as u64,
        });
    }
    if g.is_complete() {
        return certificate(g, Vec::new()).map(Some);
    }
    if k == 0 {
        return Ok(None);
    }
    let non_edges: Vec<(usize, usize)> = g.complement().edges().collect();
    let sets = maximal_cover_sets(g, &non_edges);
    let all = if non_edges.len() == 64 {
        u64::MAX
    } else {
        (1u64 << non_edges.len()) - 1
    };
    let mut chosen = Vec::new();
    if !cover(&sets, all, k, &mut chosen) {
        return Ok(None);
    }
    let orders = chosen
        .iter()
        .map(|&i| VertexOrder::from_sequence(sets[i].1.clone()))
        .collect::<Result<Vec<_>>>()?;
    let cert = certificate(g, orders)?;
    debug_assert!(cert.verify(g));
    Ok(Some(cert))
}

/// `box(g)` with a certificate of minimum dimension.
pub fn boxicity_exact(g: &Graph) -> Result<(usize, BoxCertificate)> {
    for k in 0..=g.order() {
        if let Some(cert) = boxicity_le(g, k)? {
            return Ok((k, cert));
        }
    }
    unreachable!("box(G) <= n/2 for every graph")
}
