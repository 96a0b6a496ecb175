//! Exhaustive reference implementations.
//!
//! Every parameter here is found by scanning vertex subsets in increasing size
//! and, within one size, in ascending bit-pattern order. Trees with more than
//! [`ORACLE_CAP`] vertices are refused.

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Tree, VertexSet};
use crate::Result;

pub const ORACLE_CAP: usize = 26;

pub fn is_vertex_cover(tree: &Tree, set: &VertexSet) -> bool {
    tree.edges().iter().all(|&(u, v)| set.contains(u) || set.contains(v))
}

/// Every vertex has a neighbor in `set`.
pub fn is_total_dominating(tree: &Tree, set: &VertexSet) -> bool {
    (0..tree.order()).all(|v| tree.neighbors(v).iter().any(|&w| set.contains(w)))
}

/// Everything the oracle knows about one tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamReport {
    pub tau: usize,
    pub gamma_t: usize,
    pub num_min_vc: usize,
    pub num_min_tds: usize,
    pub num_gtt_sets: usize,
    pub gtt_witness: Option<VertexSet>,
    pub is_gtt_graph: bool,
}

/// Subsets of `0..n` with exactly `k` members, ascending as integers.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let mut next = if k > n { limit } else { (1u64 << k) - 1 };
    core::iter::from_fn(move || {
        if next >= limit {
            return None;
        }
        let cur = next;
        if cur == 0 {
            next = limit;
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            next = (((r ^ cur) >> 2) / c) | r;
        }
        Some(cur as u32)
    })
}

/// Bit-mask view of a tree with precomputed minimum set families.
///
/// Building one runs the full subset search; all queries afterwards are
/// cheap. Use this instead of the free functions when asking several
/// questions about the same tree.
#[derive(Clone, Debug)]
pub struct Exhaustive {
    n: usize,
    neighbors: Vec<u32>,
    tau: usize,
    gamma_t: Option<usize>,
    min_vcs: Vec<u32>,
    min_tds: Vec<u32>,
}

impl Exhaustive {
    pub fn new(tree: &Tree) -> Result<Self> {
        let n = tree.order();
        if n > ORACLE_CAP {
            return Err(Error::TooLargeForOracle { n, cap: ORACLE_CAP });
        }
        let neighbors: Vec<u32> = (0..n)
            .map(|v| tree.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let mut ex = Exhaustive { n, neighbors, tau: 0, gamma_t: None, min_vcs: Vec::new(), min_tds: Vec::new() };
        for k in 0..=n {
            ex.min_vcs = subsets_of_size(n, k).filter(|&s| ex.covers(s)).collect();
            if !ex.min_vcs.is_empty() {
                ex.tau = k;
                break;
            }
        }
        if n >= 2 {
            for k in 2..=n {
                ex.min_tds = subsets_of_size(n, k).filter(|&s| ex.totally_dominates(s)).collect();
                if !ex.min_tds.is_empty() {
                    ex.gamma_t = Some(k);
                    break;
                }
            }
        }
        Ok(ex)
    }

    fn covers(&self, s: u32) -> bool {
        (0..self.n).all(|v| s & (1 << v) != 0 || self.neighbors[v] & !s == 0)
    }

    fn totally_dominates(&self, s: u32) -> bool {
        self.neighbors.iter().all(|&nb| nb & s != 0)
    }

    fn to_set(&self, mask: u32) -> VertexSet {
        VertexSet::from_mask(self.n, mask as u64)
    }

    fn mask_of(&self, set: &VertexSet) -> u32 {
        set.iter().filter(|&v| v < self.n).fold(0, |m, v| m | 1 << v)
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn gamma_t(&self) -> Result<usize> {
        self.gamma_t.ok_or(Error::NoTotalDominatingSet)
    }

    pub fn min_vertex_covers(&self) -> Vec<VertexSet> {
        self.min_vcs.iter().map(|&m| self.to_set(m)).collect()
    }

    pub fn min_total_dominating_sets(&self) -> Result<Vec<VertexSet>> {
        self.gamma_t()?;
        Ok(self.min_tds.iter().map(|&m| self.to_set(m)).collect())
    }

    fn gtt_masks(&self) -> Result<Vec<u32>> {
        let gamma_t = self.gamma_t()?;
        if gamma_t != self.tau {
            return Ok(Vec::new());
        }
        Ok(self.min_vcs.iter().copied().filter(|&s| self.totally_dominates(s)).collect())
    }

    /// Sets that are both a minimum vertex cover and a minimum total
    /// dominating set, ascending by bit pattern.
    pub fn gtt_sets(&self) -> Result<Vec<VertexSet>> {
        Ok(self.gtt_masks()?.into_iter().map(|m| self.to_set(m)).collect())
    }

    /// Union of all (γt−τ)-sets as a mask.
    pub fn gtt_union(&self) -> Result<u32> {
        Ok(self.gtt_masks()?.into_iter().fold(0, |a, m| a | m))
    }

    pub fn has_gtt_set(&self) -> Result<bool> {
        Ok(!self.gtt_masks()?.is_empty())
    }

    pub fn in_some_gtt_set(&self, u: usize) -> Result<bool> {
        self.check(u)?;
        Ok(self.gtt_union()? & (1 << u) != 0)
    }

    pub fn in_some_min_tds(&self, u: usize) -> Result<bool> {
        self.check(u)?;
        self.gamma_t()?;
        Ok(self.min_tds.iter().any(|&s| s & (1 << u) != 0))
    }

    pub fn in_some_min_vc(&self, u: usize) -> Result<bool> {
        self.check(u)?;
        Ok(self.min_vcs.iter().any(|&s| s & (1 << u) != 0))
    }

    fn check(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { vertex: u, n: self.n })
        }
    }

    /// Vertices `v` with `pn(u, S) = {v}` for some `u` in `S`.
    fn quasi_isolated_for_mask(&self, s: u32) -> u32 {
        let mut private = [0u32; ORACLE_CAP];
        for (w, &nb) in self.neighbors.iter().enumerate() {
            let hit = nb & s;
            if hit.count_ones() == 1 {
                private[hit.trailing_zeros() as usize] |= 1 << w;
            }
        }
        private[..self.n]
            .iter()
            .filter(|p| p.count_ones() == 1)
            .fold(0, |acc, &p| acc | p)
    }

    /// Mask of all quasi-isolated vertices, taken over every minimum total
    /// dominating set.
    pub fn quasi_isolated_mask(&self) -> Result<u32> {
        self.gamma_t()?;
        Ok(self.min_tds.iter().fold(0, |acc, &s| acc | self.quasi_isolated_for_mask(s)))
    }

    pub fn is_quasi_isolated(&self, v: usize) -> Result<bool> {
        self.check(v)?;
        Ok(self.quasi_isolated_mask()? & (1 << v) != 0)
    }

    /// Whether `v` is quasi-isolated with respect to the given minimum total
    /// dominating set.
    pub fn is_quasi_isolated_for(&self, v: usize, set: &VertexSet) -> Result<bool> {
        self.check(v)?;
        let mask = self.mask_of(set);
        if set.capacity() != self.n || !self.min_tds.contains(&mask) {
            return Err(Error::NotAGammaTSet);
        }
        Ok(self.quasi_isolated_for_mask(mask) & (1 << v) != 0)
    }

    pub fn report(&self) -> Result<ParamReport> {
        let gamma_t = self.gamma_t()?;
        let gtt = self.gtt_masks()?;
        Ok(ParamReport {
            tau: self.tau,
            gamma_t,
            num_min_vc: self.min_vcs.len(),
            num_min_tds: self.min_tds.len(),
            num_gtt_sets: gtt.len(),
            gtt_witness: gtt.first().map(|&m| self.to_set(m)),
            is_gtt_graph: gamma_t == self.tau,
        })
    }
}

pub fn tau_exact(tree: &Tree) -> Result<usize> {
    Ok(Exhaustive::new(tree)?.tau())
}

pub fn gamma_t_exact(tree: &Tree) -> Result<usize> {
    Exhaustive::new(tree)?.gamma_t()
}

pub fn min_vertex_covers(tree: &Tree) -> Result<Vec<VertexSet>> {
    Ok(Exhaustive::new(tree)?.min_vertex_covers())
}

pub fn min_total_dominating_sets(tree: &Tree) -> Result<Vec<VertexSet>> {
    Exhaustive::new(tree)?.min_total_dominating_sets()
}

pub fn gtt_sets(tree: &Tree) -> Result<Vec<VertexSet>> {
    Exhaustive::new(tree)?.gtt_sets()
}

pub fn has_gtt_set(tree: &Tree) -> Result<bool> {
    Exhaustive::new(tree)?.has_gtt_set()
}

pub fn in_some_gtt_set(tree: &Tree, u: usize) -> Result<bool> {
    Exhaustive::new(tree)?.in_some_gtt_set(u)
}

pub fn analyze(tree: &Tree) -> Result<ParamReport> {
    Exhaustive::new(tree)?.report()
}

pub fn is_quasi_isolated(tree: &Tree, v: usize) -> Result<bool> {
    Exhaustive::new(tree)?.is_quasi_isolated(v)
}

pub fn is_quasi_isolated_for(tree: &Tree, v: usize, set: &VertexSet) -> Result<bool> {
    Exhaustive::new(tree)?.is_quasi_isolated_for(v, set)
}

/// A minimum total dominating set with no leaves, obtained from the first
/// minimum total dominating set by trading each leaf for a non-leaf neighbor
/// of its support.
pub fn leafless_gamma_t_set(tree: &Tree) -> Result<VertexSet> {
    let n = tree.order();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if tree.is_star() {
        return Err(Error::IsStar);
    }
    let ex = Exhaustive::new(tree)?;
    let mut set = ex.min_total_dominating_sets()?.swap_remove(0);
    loop {
        let leaf = set.iter().find(|&x| tree.is_leaf(x));
        let Some(x) = leaf else { break };
        let y = tree.neighbors(x)[0];
        // y has a non-leaf neighbor because the tree is not a star
        let z = tree.neighbors(y).iter().copied().find(|&z| !tree.is_leaf(z)).unwrap();
        set.remove(x);
        set.insert(z);
    }
    debug_assert!(is_total_dominating(tree, &set) && set.len() == ex.gamma_t()?);
    Ok(set)
}
