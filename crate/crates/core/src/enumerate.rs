//! Free tree enumeration and the per-tree claim checks run by the exhaustive
//! verification harness.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::dp::{gamma_t_tree, tau_tree};
use crate::family::{recognize_with, verify_certificate, RecognizeOptions};
use crate::graph::Tree;
use crate::ops::{self, OpKind};
use crate::oracle::{self, Exhaustive};
use crate::Result;

/// Largest order [`free_trees`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 20;

/// One representative per isomorphism class of trees on `n` vertices.
///
/// Trees are produced as level sequences rooted at a center, using the
/// successor rule of Wright, Richmond, Odlyzko and McKay; the order is
/// deterministic and starts with the path.
pub fn free_trees(n: usize) -> FreeTrees {
    assert!((1..=MAX_ENUMERATION_ORDER).contains(&n), "free_trees supports 1 <= n <= {MAX_ENUMERATION_ORDER}");
    let layout = if n == 1 {
        None
    } else {
        let mut l: Vec<usize> = (0..=n / 2).collect();
        l.extend(1..n.div_ceil(2));
        Some(l)
    };
    FreeTrees { single: n == 1, layout }
}

pub struct FreeTrees {
    single: bool,
    layout: Option<Vec<usize>>,
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.single {
            self.single = false;
            return Some(Tree::path(1));
        }
        let candidate = self.layout.take()?;
        let valid = next_free(candidate)?;
        self.layout = next_rooted(&valid, None);
        Some(layout_to_tree(&valid))
    }
}

/// Next rooted level sequence in reverse lexicographic order, changing the
/// sequence from position `p` on (default: the last position above level 1).
fn next_rooted(prev: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = prev.len() - 1;
            while prev[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while prev[q] != prev[p] - 1 {
        q -= 1;
    }
    let mut out = prev.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted down by one) and the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn next_free(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (i, level) in (1..h + 2).enumerate() {
            next[len - (h + 1) + i] = level;
        }
    }
    Some(next)
}

fn layout_to_tree(layout: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = stack.last() {
            edges.push((j, i));
        }
        stack.push(i);
    }
    Tree::from_edges_unchecked(layout.len(), edges)
}

/// Decodes a Prüfer sequence over `0..n` (`n = seq.len() + 2`).
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    Tree::from_edges_unchecked(n, edges)
}

/// Canonical codes of all trees on `n` vertices, from every labeled tree.
/// Exponential (`n^(n-2)` labeled trees); intended for `n <= 9`.
pub fn prufer_codes(n: usize) -> BTreeSet<Vec<u8>> {
    let mut codes = BTreeSet::new();
    if n <= 2 {
        codes.insert(Tree::path(n.max(1)).canonical_code());
        return codes;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        codes.insert(prufer_decode(&seq).canonical_code());
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
        seq[i] += 1;
    }
    codes
}

/// Canonical codes of all trees on `n` vertices, grown one leaf at a time
/// from the single vertex.
pub fn leaf_extension_codes(n: usize) -> BTreeSet<Vec<u8>> {
    let mut level: Vec<Tree> = vec![Tree::path(1)];
    for _ in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for u in 0..t.order() {
                let g = ops::add_leaf(t, u).expect("vertex in range").tree;
                if seen.insert(g.canonical_code()) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level.iter().map(Tree::canonical_code).collect()
}

/// Statements checked tree by tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// The tree DPs agree with the exhaustive oracle.
    DpMatchesOracle,
    /// No (γt−τ)-set contains a leaf.
    GttSetsAvoidLeaves,
    /// A non-star tree on at least three vertices has a leafless minimum
    /// total dominating set.
    LeaflessTdsExists,
    /// A vertex at distance two from a leaf is never quasi-isolated.
    TwoSupportsNotQuasiIsolated,
    /// The recognizer accepts exactly the trees with a (γt−τ)-set, and its
    /// certificates verify.
    RecognizerMatchesOracle,
    /// Recognition without precondition re-checks gives the same answer.
    /// It does not in general: `P8` peels to `P4` by a reverse `O1` whose
    /// attachment vertex is a leaf, which only the re-check rejects.
    TrustedRecognizerAgrees,
    /// Every valid relaxed operation on a tree with `γt = τ` keeps `γt = τ`.
    RelaxedOpsPreserveEquality,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::DpMatchesOracle,
        Claim::GttSetsAvoidLeaves,
        Claim::LeaflessTdsExists,
        Claim::TwoSupportsNotQuasiIsolated,
        Claim::RecognizerMatchesOracle,
        Claim::TrustedRecognizerAgrees,
        Claim::RelaxedOpsPreserveEquality,
    ];
    pub const MAIN: [Claim; 2] = [Claim::RecognizerMatchesOracle, Claim::TrustedRecognizerAgrees];
    pub const LEMMAS: [Claim; 3] =
        [Claim::GttSetsAvoidLeaves, Claim::LeaflessTdsExists, Claim::TwoSupportsNotQuasiIsolated];

    pub fn name(self) -> &'static str {
        match self {
            Claim::DpMatchesOracle => "dp-matches-oracle",
            Claim::GttSetsAvoidLeaves => "gtt-sets-avoid-leaves",
            Claim::LeaflessTdsExists => "leafless-tds-exists",
            Claim::TwoSupportsNotQuasiIsolated => "two-supports-not-quasi-isolated",
            Claim::RecognizerMatchesOracle => "recognizer-matches-oracle",
            Claim::TrustedRecognizerAgrees => "trusted-recognizer-agrees",
            Claim::RelaxedOpsPreserveEquality => "relaxed-ops-preserve-equality",
        }
    }

    pub fn from_name(s: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Violations of this claim are findings to report rather than failures.
    pub fn is_probe(self) -> bool {
        matches!(self, Claim::RelaxedOpsPreserveEquality | Claim::TrustedRecognizerAgrees)
    }
}

/// Outcome of all selected claims on one tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCheck {
    pub order: usize,
    pub code: Vec<u8>,
    pub is_gtt_tree: bool,
    pub has_gtt_set: bool,
    /// `(claim, held)` for every selected claim that applies to this tree.
    pub results: Vec<(Claim, bool)>,
}

impl TreeCheck {
    pub fn failed(&self) -> impl Iterator<Item = Claim> + '_ {
        self.results.iter().filter(|r| !r.1).map(|r| r.0)
    }
}

/// Runs the selected claims on `tree` (at most [`oracle::ORACLE_CAP`] vertices).
pub fn check_tree(tree: &Tree, claims: &[Claim]) -> Result<TreeCheck> {
    let n = tree.order();
    let ex = Exhaustive::new(tree)?;
    let gamma_t = ex.gamma_t().ok();
    let has_gtt_set = gamma_t.is_some() && ex.has_gtt_set()?;
    let mut results = Vec::new();
    for &claim in claims {
        let held = match claim {
            Claim::DpMatchesOracle => Some(
                tau_tree(tree) == ex.tau() && gamma_t.is_none_or(|g| gamma_t_tree(tree).ok() == Some(g)),
            ),
            Claim::GttSetsAvoidLeaves if n >= 2 => {
                let leaves = tree.leaves();
                Some(ex.gtt_sets()?.iter().all(|s| s.iter().all(|v| !leaves.contains(v))))
            }
            Claim::LeaflessTdsExists if n >= 3 && !tree.is_star() => Some(match oracle::leafless_gamma_t_set(tree) {
                Ok(s) => {
                    s.len() == ex.gamma_t()?
                        && oracle::is_total_dominating(tree, &s)
                        && s.iter().all(|v| !tree.is_leaf(v))
                }
                Err(_) => false,
            }),
            Claim::TwoSupportsNotQuasiIsolated if n >= 2 => {
                let qi = ex.quasi_isolated_mask()?;
                Some(tree.two_supports().iter().all(|v| qi & (1 << v) == 0))
            }
            Claim::RecognizerMatchesOracle if n >= 2 => {
                let out = recognize_with(tree, RecognizeOptions::default())?;
                let cert_ok = match &out.certificate {
                    Some(c) => verify_certificate(c, tree),
                    None => !out.member,
                };
                Some(out.member == has_gtt_set && cert_ok)
            }
            Claim::TrustedRecognizerAgrees if n >= 2 => {
                let checked = recognize_with(tree, RecognizeOptions::default())?;
                let trusted = recognize_with(tree, RecognizeOptions { memoize: true, trust_proof: true })?;
                Some(checked.member == trusted.member)
            }
            Claim::RelaxedOpsPreserveEquality if n >= 2 => {
                let equal = gamma_t == Some(ex.tau());
                let mut ok = true;
                if equal {
                    'ops: for op in OpKind::RELAXED {
                        for u in 0..n {
                            if op.check_preconditions(&ex, u).is_err() {
                                continue;
                            }
                            let g = ops::attach(tree, op, u).tree;
                            if gamma_t_tree(&g)? != tau_tree(&g) {
                                ok = false;
                                break 'ops;
                            }
                        }
                    }
                }
                Some(ok)
            }
            _ => None,
        };
        if let Some(h) = held {
            results.push((claim, h));
        }
    }
    Ok(TreeCheck {
        order: n,
        code: tree.canonical_code(),
        is_gtt_tree: gamma_t == Some(ex.tau()),
        has_gtt_set,
        results,
    })
}
