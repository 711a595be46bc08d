//! Named graphs, the tight constructions with their interval certificates,
//! and exhaustive enumeration of small graphs up to isomorphism.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{intersect_reps, next_permutation, IntervalRep};
use crate::Rational;

/// Largest order accepted by [`enumerate_graphs`].
pub const ENUMERATE_LIMIT: usize = 6;
/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 8;

fn at_least(what: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::OutOfRange {
            what,
            value: value as i64,
        });
    }
    Ok(())
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("n", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph> {
    at_least("n", n, 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{1,m}` with centre 0.
pub fn star(m: usize) -> Result<Graph> {
    at_least("m", m, 1)?;
    Graph::from_edges(m + 1, (1..=m).map(|i| (0, i)))
}

/// Outer cycle `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    Graph::from_edges(10, edges).expect("valid edges")
}

/// `K_{l×p}`: `p` parts of size `l`, part `i` holding `i*l..(i+1)*l`.
pub fn complete_multipartite(l: usize, p: usize) -> Result<Graph> {
    at_least("l", l, 1)?;
    at_least("p", p, 2)?;
    let n = l * p;
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if u / l != v / l {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Complement of `C_n`, `n >= 4`.
pub fn complement_cycle(n: usize) -> Result<Graph> {
    at_least("n", n, 4)?;
    Ok(cycle(n)?.complement())
}

/// A graph with interval representations whose edge intersection is the
/// graph, plus the lower bound the construction is tight against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightFamilyCertificate {
    pub graph: Graph,
    pub reps: Vec<IntervalRep>,
    pub claimed_box_lower: Rational,
    pub claimed_box_upper: usize,
}

impl TightFamilyCertificate {
    /// Exact edge-set equality of the intersection with the graph, and
    /// `lower <= upper = |reps|`.
    pub fn verify(&self) -> bool {
        self.claimed_box_upper == self.reps.len()
            && self.claimed_box_lower <= Rational::from_integer(self.claimed_box_upper as i64)
            && intersect_reps(self.graph.order(), &self.reps).is_some_and(|h| h == self.graph)
    }
}

/// Co-bipartite graph on `n = 2kl` vertices: `A_i = i*k..(i+1)*k`,
/// `B_i = kl + i*k..kl + (i+1)*k`, and `u ≁ v` exactly for `u ∈ A_i`,
/// `v ∈ B_i`. It is `(n-k-1)`-regular with boxicity `l`.
pub fn construct_cobipartite_tight(k: usize, l: usize) -> Result<TightFamilyCertificate> {
    at_least("k", k, 1)?;
    at_least("l", l, 1)?;
    let half = k * l;
    let n = 2 * half;
    let block = |v: usize| (v % half) / k;
    let in_b = |v: usize| v >= half;
    let mut graph = Graph::complete(n)?;
    for u in 0..half {
        for v in half..n {
            if block(u) == block(v) {
                graph.remove_edge(u, v);
            }
        }
    }
    let reps = (0..l)
        .map(|i| {
            let ivs: Vec<(i64, i64)> = (0..n)
                .map(|v| match (block(v) == i, in_b(v)) {
                    (true, false) => (0, 1),
                    (true, true) => (2, 3),
                    _ => (1, 2),
                })
                .collect();
            IntervalRep::from_closed_integer(&ivs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TightFamilyCertificate {
        graph,
        reps,
        claimed_box_lower: Rational::from_integer(l as i64),
        claimed_box_upper: l,
    })
}

/// Balanced bipartite graph with parts `A = 0..kl` and `B = kl..2kl`,
/// blocks of size `k` as in [`construct_cobipartite_tight`], and
/// `u ∈ A_i ~ v ∈ B_j` iff `i != j`. It is `(n-k)`-regular with
/// `n = kl`, and `l + 2` interval graphs suffice.
pub fn construct_bipartite_tight(k: usize, l: usize) -> Result<TightFamilyCertificate> {
    at_least("k", k, 1)?;
    at_least("l", l, 1)?;
    let half = k * l;
    let n = 2 * half;
    let block = |v: usize| (v % half) / k;
    let in_b = |v: usize| v >= half;
    let mut graph = Graph::empty(n)?;
    for u in 0..half {
        for v in half..n {
            if block(u) != block(v) {
                graph.add_edge(u, v)?;
            }
        }
    }
    let mut reps = Vec::with_capacity(l + 2);
    for i in 0..l {
        let ivs: Vec<(i64, i64)> = (0..n)
            .map(|v| match (block(v) == i, in_b(v)) {
                (true, false) => (0, 1),
                (true, true) => (2, 3),
                _ => (0, 3),
            })
            .collect();
        reps.push(IntervalRep::from_closed_integer(&ivs)?);
    }
    // One side spread over disjoint unit intervals, the other spanning all.
    let span = (0, 2 * half as i64 - 1);
    for spread_b in [false, true] {
        let ivs: Vec<(i64, i64)> = (0..n)
            .map(|v| {
                if in_b(v) == spread_b {
                    let j = (v % half) as i64;
                    (2 * j, 2 * j + 1)
                } else {
                    span
                }
            })
            .collect();
        reps.push(IntervalRep::from_closed_integer(&ivs)?);
    }
    Ok(TightFamilyCertificate {
        graph,
        reps,
        claimed_box_lower: Rational::new(l as i64, 2),
        claimed_box_upper: l + 2,
    })
}

/// Bit index of the pair `u < v` in the adjacency encoding.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Upper-triangle adjacency encoding, pairs in lexicographic order.
pub fn encode(g: &Graph) -> u64 {
    let n = g.order();
    g.edges()
        .fold(0, |acc, (u, v)| acc | 1 << pair_index(n, u, v))
}

pub fn decode(n: usize, code: u64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if code >> pair_index(n, u, v) & 1 == 1 {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// For each permutation of `0..n`, the image bit of each pair.
fn pair_maps(n: usize) -> Vec<Vec<u8>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut maps = Vec::new();
    loop {
        let mut map = vec![0u8; n * n.saturating_sub(1) / 2];
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                map[pair_index(n, u, v)] = pair_index(n, a, b) as u8;
            }
        }
        maps.push(map);
        if !next_permutation(&mut perm) {
            return maps;
        }
    }
}

fn apply(map: &[u8], code: u64) -> u64 {
    map.iter()
        .enumerate()
        .filter(|&(i, _)| code >> i & 1 == 1)
        .fold(0, |acc, (_, &j)| acc | 1 << j)
}

/// Minimum adjacency encoding over all relabellings, as a graph.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > CANONICAL_LIMIT {
        return Err(Error::VertexCount {
            n,
            max: CANONICAL_LIMIT,
        });
    }
    let code = encode(g);
    let best = pair_maps(n)
        .iter()
        .map(|m| apply(m, code))
        .min()
        .unwrap_or(code);
    decode(n, best)
}

/// One canonical representative per isomorphism class on `n` vertices, in
/// increasing order of encoding.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATE_LIMIT {
        return Err(Error::VertexCount {
            n,
            max: ENUMERATE_LIMIT,
        });
    }
    let pairs = n * (n - 1) / 2;
    let maps = pair_maps(n);
    let mut seen = vec![false; 1 << pairs];
    let mut out = Vec::new();
    for code in 0..1u64 << pairs {
        if seen[code as usize] {
            continue;
        }
        for m in &maps {
            seen[apply(m, code) as usize] = true;
        }
        out.push(decode(n, code)?);
    }
    Ok(out)
}
