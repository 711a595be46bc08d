//! Exact vertex-isoperimetric quantities.
//!
//! `b_v(k)` is the least vertex boundary over `k`-sets and `c_v(k)` the
//! largest strong vertex boundary. They are tied by the duality
//! `c_v(k, complement(G)) = n - k - b_v(k, G)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph, VertexSet};
use crate::subsets::k_subsets;

/// Largest order for which full profiles (one sweep over all `2^n` subsets) are computed.
pub const PROFILE_LIMIT: usize = 24;

/// A value attained by a vertex set; the witness is the lexicographically
/// smallest extremal set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extremal {
    pub value: usize,
    pub witness: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoProfile {
    n: usize,
    bv: Vec<Extremal>,
    cv: Vec<Extremal>,
}

impl IsoProfile {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `b_v(k)` for `1 <= k <= n-1`.
    pub fn bv(&self, k: usize) -> usize {
        self.bv[k - 1].value
    }

    /// `c_v(k)` for `1 <= k <= n-1`.
    pub fn cv(&self, k: usize) -> usize {
        self.cv[k - 1].value
    }

    pub fn bv_extremal(&self, k: usize) -> Extremal {
        self.bv[k - 1]
    }

    pub fn cv_extremal(&self, k: usize) -> Extremal {
        self.cv[k - 1]
    }

    /// `(b_v(1), ..., b_v(n-1))`.
    pub fn bv_values(&self) -> Vec<usize> {
        self.bv.iter().map(|e| e.value).collect()
    }

    /// `(c_v(1), ..., c_v(n-1))`.
    pub fn cv_values(&self) -> Vec<usize> {
        self.cv.iter().map(|e| e.value).collect()
    }

    pub fn cv_sum(&self) -> usize {
        self.cv.iter().map(|e| e.value).sum()
    }

    pub fn bv_sum(&self) -> usize {
        self.bv.iter().map(|e| e.value).sum()
    }
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.order() {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
        });
    }
    Ok(())
}

/// `b_v(k, G)`: minimum `|Γ(X)|` over `|X| = k`.
pub fn b_v(g: &Graph, k: usize) -> Result<Extremal> {
    g.require_small()?;
    check_k(g, k)?;
    let mut best: Option<Extremal> = None;
    for x in k_subsets(g.vertices(), k, "b_v subsets")? {
        let value = g.vertex_boundary(x).len();
        if best.is_none_or(|b| value < b.value) {
            best = Some(Extremal { value, witness: x });
        }
    }
    Ok(best.expect("k <= n gives at least one subset"))
}

/// `c_v(k, G)`: maximum `|Γs(X)|` over `|X| = k`.
pub fn c_v(g: &Graph, k: usize) -> Result<Extremal> {
    g.require_small()?;
    check_k(g, k)?;
    let mut best: Option<Extremal> = None;
    for x in k_subsets(g.vertices(), k, "c_v subsets")? {
        let value = g.strong_vertex_boundary(x)?.len();
        if best.is_none_or(|b| value > b.value) {
            best = Some(Extremal { value, witness: x });
        }
    }
    Ok(best.expect("k <= n gives at least one subset"))
}

struct Sweep<'a> {
    g: &'a Graph,
    bv: Vec<Option<Extremal>>,
    cv: Vec<Option<Extremal>>,
}

impl Sweep<'_> {
    // Depth-first over include/exclude decisions for vertex `v`, carrying the
    // union and intersection of the chosen rows.
    fn visit(&mut self, v: usize, x: u64, union: u64, inter: u64) {
        let n = self.g.order();
        if v == n {
            let k = x.count_ones() as usize;
            if k == 0 || k == n {
                return;
            }
            let set = VertexSet::from_bits(x);
            let boundary = (union & !x).count_ones() as usize;
            let strong = (inter & !x).count_ones() as usize;
            let b = &mut self.bv[k - 1];
            if b.is_none_or(|b| {
                boundary < b.value || (boundary == b.value && set.lex_less(b.witness))
            }) {
                *b = Some(Extremal {
                    value: boundary,
                    witness: set,
                });
            }
            let c = &mut self.cv[k - 1];
            if c.is_none_or(|c| strong > c.value || (strong == c.value && set.lex_less(c.witness)))
            {
                *c = Some(Extremal {
                    value: strong,
                    witness: set,
                });
            }
            return;
        }
        let row = self.g.row(v);
        self.visit(v + 1, x | (1 << v), union | row, inter & row);
        self.visit(v + 1, x, union, inter);
    }
}

/// Full `b_v` and `c_v` profiles from a single sweep over all subsets.
pub fn iso_profile(g: &Graph) -> Result<IsoProfile> {
    let n = g.order();
    if n > PROFILE_LIMIT {
        return Err(Error::Budget {
            what: "isoperimetric profile order",
            needed: n as u64,
            limit: PROFILE_LIMIT as u64,
        });
    }
    let slots = n.saturating_sub(1);
    let mut sweep = Sweep {
        g,
        bv: vec![None; slots],
        cv: vec![None; slots],
    };
    sweep.visit(0, 0, 0, low_mask(n));
    let unwrap = |v: Vec<Option<Extremal>>| {
        v.into_iter()
            .map(|e| e.expect("every size visited"))
            .collect()
    };
    Ok(IsoProfile {
        n,
        bv: unwrap(sweep.bv),
        cv: unwrap(sweep.cv),
    })
}
