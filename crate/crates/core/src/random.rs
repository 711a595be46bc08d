//! Seeded random graph models.
//!
//! Every sample draws from its own xoshiro256** stream, seeded through
//! SplitMix64 from a 64-bit seed, so samples are reproducible and can be
//! generated in any order or in parallel.

use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::{SplitMix64, Xoshiro256StarStar};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, MAX_VERTICES};
use crate::Rational;

/// Restarts allowed when pairing points for a random regular graph.
pub const REGULAR_RETRY_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// Each of the `C(n,2)` pairs independently with probability `p`.
    Gnp { n: usize, p: Rational },
    /// Uniform among graphs with `m` edges.
    Gnm { n: usize, m: usize },
    /// Uniform among simple `k`-regular graphs.
    Regular { n: usize, k: usize },
    /// Parts of size `n`; each of the `n²` cross pairs with probability `p`.
    BipartiteGnp { n: usize, p: Rational },
    /// Parts of size `n`; uniform among `m`-subsets of cross pairs.
    BipartiteGnm { n: usize, m: usize },
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Gnp { .. } => "gnp",
            Model::Gnm { .. } => "gnm",
            Model::Regular { .. } => "regular",
            Model::BipartiteGnp { .. } => "bipartite_gnp",
            Model::BipartiteGnm { .. } => "bipartite_gnm",
        }
    }

    /// `n`, or the part size for bipartite models.
    pub fn n(&self) -> usize {
        match *self {
            Model::Gnp { n, .. }
            | Model::Gnm { n, .. }
            | Model::Regular { n, .. }
            | Model::BipartiteGnp { n, .. }
            | Model::BipartiteGnm { n, .. } => n,
        }
    }

    /// The model parameter in `key=value` form.
    pub fn param(&self) -> Param {
        match *self {
            Model::Gnp { p, .. } | Model::BipartiteGnp { p, .. } => Param::P(p),
            Model::Gnm { m, .. } | Model::BipartiteGnm { m, .. } => Param::M(m),
            Model::Regular { k, .. } => Param::K(k),
        }
    }

    /// Checks the parameters against the model's domain.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        let bipartite = matches!(
            self,
            Model::BipartiteGnp { .. } | Model::BipartiteGnm { .. }
        );
        let order = if bipartite { 2 * n } else { n };
        if n == 0 || order > MAX_VERTICES {
            return Err(Error::VertexCount {
                n: order,
                max: MAX_VERTICES,
            });
        }
        let slots = if bipartite { n * n } else { n * (n - 1) / 2 };
        match *self {
            Model::Gnp { p, .. } | Model::BipartiteGnp { p, .. } => {
                if p < Rational::from_integer(0) || p > Rational::from_integer(1) {
                    return Err(Error::InfeasibleModel("p must lie in [0, 1]"));
                }
            }
            Model::Gnm { m, .. } | Model::BipartiteGnm { m, .. } => {
                if m > slots {
                    return Err(Error::InfeasibleModel("m exceeds the number of slots"));
                }
            }
            Model::Regular { n, k } => {
                if k >= n {
                    return Err(Error::InfeasibleModel("k must be below n"));
                }
                if n * k % 2 == 1 {
                    return Err(Error::InfeasibleModel("n * k must be even"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    P(Rational),
    M(usize),
    K(usize),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::P(p) => write!(f, "p={}/{}", p.numer(), p.denom()),
            Param::M(m) => write!(f, "m={m}"),
            Param::K(k) => write!(f, "k={k}"),
        }
    }
}

/// A model with its parameters and seed; determines the sample completely.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomModelSpec {
    pub model: Model,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sample {
    Graph(Graph),
    Bipartite(BipartiteGraph),
}

impl Sample {
    /// The sample as a plain graph; bipartite samples put part `A` first.
    pub fn into_graph(self) -> Graph {
        match self {
            Sample::Graph(g) => g,
            Sample::Bipartite(b) => b.to_graph(),
        }
    }
}

/// Seed of sample `index` in a run with master seed `master`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut sm = SplitMix64::seed_from_u64(master);
    let base = sm.next_u64();
    SplitMix64::seed_from_u64(base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15)).next_u64()
}

pub fn rng_for(seed: u64) -> Xoshiro256StarStar {
    Xoshiro256StarStar::seed_from_u64(seed)
}

fn bernoulli<R: Rng>(rng: &mut R, p: Rational) -> bool {
    let (num, den) = (*p.numer() as u64, *p.denom() as u64);
    rng.random_range(0..den) < num
}

pub fn sample(spec: &RandomModelSpec) -> Result<Sample> {
    spec.model.validate()?;
    let mut rng = rng_for(spec.seed);
    match spec.model {
        Model::Gnp { n, p } => {
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    if bernoulli(&mut rng, p) {
                        g.add_edge(u, v)?;
                    }
                }
            }
            Ok(Sample::Graph(g))
        }
        Model::Gnm { n, m } => {
            let mut slots: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let (chosen, _) = slots.partial_shuffle(&mut rng, m);
            Ok(Sample::Graph(Graph::from_edges(n, chosen.iter().copied())?))
        }
        Model::Regular { n, k } => regular(&mut rng, n, k).map(Sample::Graph),
        Model::BipartiteGnp { n, p } => {
            let mut edges = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if bernoulli(&mut rng, p) {
                        edges.push((a, b));
                    }
                }
            }
            Ok(Sample::Bipartite(BipartiteGraph::from_edges(n, n, edges)?))
        }
        Model::BipartiteGnm { n, m } => {
            let mut slots: Vec<(usize, usize)> =
                (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
            let (chosen, _) = slots.partial_shuffle(&mut rng, m);
            Ok(Sample::Bipartite(BipartiteGraph::from_edges(
                n,
                n,
                chosen.iter().copied(),
            )?))
        }
    }
}

/// Pairing model: `k` points per vertex matched uniformly at random, the
/// attempt abandoned as soon as a loop or repeated edge appears. Building the
/// matching pair by pair and aborting early has the same acceptance
/// distribution as rejecting complete pairings. The point array is only ever
/// permuted, so each attempt restarts from the whole of it.
fn regular<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<Graph> {
    let words = n.div_ceil(64);
    let mut points: Vec<u32> = (0..n as u32)
        .flat_map(|v| core::iter::repeat_n(v, k))
        .collect();
    let mut adj = alloc::vec![0u64; n * words];
    let mut added: Vec<(usize, usize)> = Vec::with_capacity(n * k / 2);
    for _ in 0..REGULAR_RETRY_BUDGET {
        for (u, v) in added.drain(..) {
            adj[u * words + v / 64] = 0;
            adj[v * words + u / 64] = 0;
        }
        let mut len = points.len();
        while len > 0 {
            let u = points[len - 1] as usize;
            let j = rng.random_range(0..len - 1);
            let v = points[j] as usize;
            let bit = 1u64 << (v % 64);
            if u == v || adj[u * words + v / 64] & bit != 0 {
                break;
            }
            adj[u * words + v / 64] |= bit;
            adj[v * words + u / 64] |= 1u64 << (u % 64);
            added.push((u, v));
            points.swap(j, len - 2);
            len -= 2;
        }
        if len == 0 {
            return Graph::from_edges(n, added.iter().copied());
        }
    }
    Err(Error::Budget {
        what: "regular pairing restarts",
        needed: REGULAR_RETRY_BUDGET + 1,
        limit: REGULAR_RETRY_BUDGET,
    })
}

/// Stacked planar triangulation: start from a triangle and repeatedly put a
/// new vertex inside a uniformly chosen face, joined to its three corners.
pub fn stacked_triangulation(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
        });
    }
    let mut rng = rng_for(seed);
    let mut g = Graph::from_edges(n, [(0, 1), (1, 2), (0, 2)])?;
    let mut faces: Vec<[usize; 3]> = alloc::vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        // the outer face counts as a face too; inserting there keeps planarity
        let i = rng.random_range(0..faces.len());
        let [a, b, c] = faces[i];
        for w in [a, b, c] {
            g.add_edge(v, w)?;
        }
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([a, c, v]);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(model: Model, seed: u64) -> RandomModelSpec {
        RandomModelSpec { model, seed }
    }

    #[test]
    fn trivial_parameters() {
        let k5 = sample(&spec(
            Model::Gnp {
                n: 5,
                p: Rational::from_integer(1),
            },
            9,
        ))
        .unwrap();
        assert_eq!(k5.into_graph(), Graph::complete(5).unwrap());
        let k4 = sample(&spec(Model::Gnm { n: 4, m: 6 }, 1)).unwrap();
        assert_eq!(k4.into_graph(), Graph::complete(4).unwrap());
        let e = sample(&spec(
            Model::Gnp {
                n: 5,
                p: Rational::from_integer(0),
            },
            3,
        ))
        .unwrap();
        assert_eq!(e.into_graph().edge_count(), 0);
    }

    #[test]
    fn infeasible_parameters() {
        assert!(matches!(
            sample(&spec(Model::Regular { n: 5, k: 3 }, 0)),
            Err(Error::InfeasibleModel(_))
        ));
        assert!(sample(&spec(Model::Gnm { n: 4, m: 7 }, 0)).is_err());
        assert!(sample(&spec(Model::BipartiteGnm { n: 2, m: 5 }, 0)).is_err());
        assert!(sample(&spec(
            Model::Gnp {
                n: 4,
                p: Rational::new(3, 2)
            },
            0
        ))
        .is_err());
    }

    #[test]
    fn deterministic() {
        let s = spec(
            Model::Gnp {
                n: 30,
                p: Rational::new(1, 3),
            },
            77,
        );
        assert_eq!(sample(&s).unwrap(), sample(&s).unwrap());
        let t = spec(
            Model::Gnp {
                n: 30,
                p: Rational::new(1, 3),
            },
            78,
        );
        assert_ne!(sample(&s).unwrap(), sample(&t).unwrap());
        assert_eq!(derive_seed(42, 3), derive_seed(42, 3));
        assert_ne!(derive_seed(42, 3), derive_seed(42, 4));
        assert_ne!(derive_seed(42, 3), derive_seed(43, 3));
    }

    #[test]
    fn gnp_mean_edge_count() {
        let total: usize = (0..200)
            .map(|i| {
                let s = spec(
                    Model::Gnp {
                        n: 100,
                        p: Rational::new(1, 2),
                    },
                    derive_seed(1, i),
                );
                sample(&s).unwrap().into_graph().edge_count()
            })
            .sum();
        let mean = total as f64 / 200.0;
        assert!((mean - 2475.0).abs() <= 150.0, "{mean}");
    }

    #[test]
    fn regular_samples() {
        for (n, k) in [(10, 3), (20, 4), (50, 5)] {
            let g = sample(&spec(Model::Regular { n, k }, 5))
                .unwrap()
                .into_graph();
            assert_eq!(g.regular_degree(), Some(k));
        }
    }

    #[test]
    fn bipartite_samples() {
        let b = sample(&spec(Model::BipartiteGnm { n: 6, m: 20 }, 2)).unwrap();
        match b {
            Sample::Bipartite(b) => {
                assert_eq!((b.n_a(), b.n_b(), b.edge_count()), (6, 6, 20));
            }
            Sample::Graph(_) => panic!("expected a bipartite sample"),
        }
        let g = sample(&spec(
            Model::BipartiteGnp {
                n: 5,
                p: Rational::from_integer(1),
            },
            2,
        ))
        .unwrap()
        .into_graph();
        assert_eq!(g.edge_count(), 25);
        assert!(g.bipartition().is_some());
    }

    #[test]
    fn triangulation_is_maximal_planar() {
        for seed in 0..5 {
            let g = stacked_triangulation(10, seed).unwrap();
            assert_eq!(g.edge_count(), 3 * 10 - 6);
        }
    }
}
