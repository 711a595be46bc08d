//! Fixed-size subset enumeration and the combinatorial budget guard.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Largest number of subsets a single brute-force enumeration may visit.
pub const SUBSET_BUDGET: u64 = 10_000_000;

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

pub(crate) fn check_budget(what: &'static str, needed: u64, limit: u64) -> Result<()> {
    if needed > limit {
        Err(Error::Budget {
            what,
            needed,
            limit,
        })
    } else {
        Ok(())
    }
}

/// All `k`-subsets of `ground`, in lexicographic order of their sorted member lists.
#[derive(Clone, Debug)]
pub struct KSubsets {
    members: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl KSubsets {
    pub fn new(ground: VertexSet, k: usize) -> Self {
        let members: Vec<usize> = ground.iter().collect();
        let done = k > members.len();
        KSubsets {
            members,
            idx: (0..k).collect(),
            done,
        }
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().map(|&i| self.members[i]).collect();
        let n = self.members.len();
        let k = self.idx.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Budget-checked `k`-subsets of `ground`.
pub fn k_subsets(ground: VertexSet, k: usize, what: &'static str) -> Result<KSubsets> {
    check_budget(what, binomial(ground.len() as u64, k as u64), SUBSET_BUDGET)?;
    Ok(KSubsets::new(ground, k))
}
