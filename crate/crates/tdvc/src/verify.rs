//! Runs claim checks over every free tree up to a given order.

use std::time::Instant;

use serde::Serialize;
use tdvc_core::enumerate::{check_tree, free_trees, Claim, TreeCheck, MAX_ENUMERATION_ORDER};
use tdvc_core::oracle::ORACLE_CAP;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderStats {
    pub order: usize,
    pub trees: usize,
    pub gtt_trees: usize,
    pub with_set: usize,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimStats {
    pub claim: String,
    pub probe: bool,
    pub checked: usize,
    /// Canonical codes of the trees where the claim failed, sorted.
    pub discrepancies: Vec<String>,
}

impl ClaimStats {
    fn new(claim: Claim) -> Self {
        ClaimStats { claim: claim.name().to_string(), probe: claim.is_probe(), checked: 0, discrepancies: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub orders: Vec<OrderStats>,
    pub claims: Vec<ClaimStats>,
}

impl EnumerationReport {
    /// True when no claim other than a probe has a discrepancy.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.probe || c.discrepancies.is_empty())
    }

    pub fn claim(&self, claim: Claim) -> Option<&ClaimStats> {
        self.claims.iter().find(|c| c.claim == claim.name())
    }

    pub fn order(&self, n: usize) -> Option<&OrderStats> {
        self.orders.iter().find(|o| o.order == n)
    }
}

/// Tallies for one batch of trees; merging is order-independent.
#[derive(Clone, Debug, Default)]
struct Tally {
    trees: usize,
    gtt_trees: usize,
    with_set: usize,
    claims: Vec<(usize, Vec<String>)>,
}

impl Tally {
    fn new(claims: usize) -> Self {
        Tally { claims: vec![(0, Vec::new()); claims], ..Tally::default() }
    }

    fn add(&mut self, check: &TreeCheck, claims: &[Claim]) {
        self.trees += 1;
        self.gtt_trees += check.is_gtt_tree as usize;
        self.with_set += check.has_gtt_set as usize;
        for &(claim, held) in &check.results {
            let i = claims.iter().position(|&c| c == claim).expect("selected claim");
            self.claims[i].0 += 1;
            if !held {
                self.claims[i].1.push(String::from_utf8_lossy(&check.code).into_owned());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.trees += other.trees;
        self.gtt_trees += other.gtt_trees;
        self.with_set += other.with_set;
        for (mine, theirs) in self.claims.iter_mut().zip(other.claims) {
            mine.0 += theirs.0;
            mine.1.extend(theirs.1);
            mine.1.sort();
        }
        self
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("orders above {0} are not supported")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Core(#[from] tdvc_core::Error),
}

/// Checks `claims` on every free tree with `1 <= n <= n_max`, splitting each
/// order round-robin over `threads` workers.
pub fn exhaustive_check(n_max: usize, claims: &[Claim], threads: usize) -> Result<EnumerationReport, VerifyError> {
    let cap = MAX_ENUMERATION_ORDER.min(ORACLE_CAP);
    if n_max > cap {
        return Err(VerifyError::OrderTooLarge(cap));
    }
    let threads = threads.max(1);
    let mut claim_stats: Vec<ClaimStats> = claims.iter().map(|&c| ClaimStats::new(c)).collect();
    let mut orders = Vec::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let trees: Vec<_> = free_trees(n).collect();
        let tally = if threads == 1 {
            let mut t = Tally::new(claims.len());
            for tree in &trees {
                t.add(&check_tree(tree, claims)?, claims);
            }
            t
        } else {
            std::thread::scope(|s| {
                let workers: Vec<_> = (0..threads)
                    .map(|w| {
                        let trees = &trees;
                        s.spawn(move || -> Result<Tally, tdvc_core::Error> {
                            let mut t = Tally::new(claims.len());
                            for tree in trees.iter().skip(w).step_by(threads) {
                                t.add(&check_tree(tree, claims)?, claims);
                            }
                            Ok(t)
                        })
                    })
                    .collect();
                workers
                    .into_iter()
                    .map(|h| h.join().expect("worker panicked"))
                    .try_fold(Tally::new(claims.len()), |acc, t| t.map(|t| acc.merge(t)))
            })?
        };
        for (stats, (checked, bad)) in claim_stats.iter_mut().zip(tally.claims) {
            stats.checked += checked;
            stats.discrepancies.extend(bad);
        }
        orders.push(OrderStats {
            order: n,
            trees: tally.trees,
            gtt_trees: tally.gtt_trees,
            with_set: tally.with_set,
            millis: start.elapsed().as_millis(),
        });
    }
    for s in &mut claim_stats {
        s.discrepancies.sort();
    }
    Ok(EnumerationReport { orders, claims: claim_stats })
}
