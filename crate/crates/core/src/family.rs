//! Trees built from `P4` by the four construction operations.
//!
//! A tree has a set that is simultaneously a minimum vertex cover and a
//! minimum total dominating set exactly when it can be built from `P4` by
//! `O1`..`O4`. This module replays and checks construction certificates,
//! generates random members, and recognizes members by peeling operations
//! off in reverse, returning a certificate for every positive answer.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dp::{gamma_t_tree, tau_tree};
use crate::error::Error;
use crate::graph::{Tree, VertexSet};
use crate::ops::{self, OpKind};
use crate::oracle::{Exhaustive, ORACLE_CAP};
use crate::Result;

/// Largest tree on which the random generators still check preconditions
/// with the oracle. Past it they only use attachment points whose validity
/// follows from a tracked (γt−τ)-set.
pub const GENERATOR_CHECKED_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionStep {
    pub op: OpKind,
    /// Vertex of the tree before this step.
    pub attach_vertex: usize,
    pub expected_size_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub steps: Vec<ConstructionStep>,
    pub final_canonical_code: Vec<u8>,
}

impl Certificate {
    /// Builds a certificate from `(op, attach_vertex)` pairs, filling in the
    /// expected sizes and the final canonical code. Preconditions are not
    /// checked here; see [`apply_certificate`].
    pub fn from_steps(steps: &[(OpKind, usize)]) -> Result<Certificate> {
        let mut tree = Tree::path(4);
        let mut out = Vec::with_capacity(steps.len());
        for (i, &(op, u)) in steps.iter().enumerate() {
            let fail = |e| Error::StepFailed { step: i, source: e };
            if !op.is_construction() {
                return Err(fail(alloc::boxed::Box::new(Error::NotAConstructionOp { op })));
            }
            tree.check_vertex(u).map_err(|e| fail(alloc::boxed::Box::new(e)))?;
            tree = ops::attach(&tree, op, u).tree;
            out.push(ConstructionStep { op, attach_vertex: u, expected_size_after: tree.order() });
        }
        Ok(Certificate { steps: out, final_canonical_code: tree.canonical_code() })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

fn replay(cert: &Certificate, checked: bool) -> Result<Tree> {
    let mut tree = Tree::path(4);
    for (i, step) in cert.steps.iter().enumerate() {
        let wrap = |e| Error::StepFailed { step: i, source: alloc::boxed::Box::new(e) };
        if !step.op.is_construction() {
            return Err(wrap(Error::NotAConstructionOp { op: step.op }));
        }
        let grown = ops::apply(&tree, step.op, step.attach_vertex, checked).map_err(wrap)?;
        if grown.tree.order() != step.expected_size_after {
            return Err(Error::SizeMismatch {
                step: i,
                expected: step.expected_size_after,
                actual: grown.tree.order(),
            });
        }
        tree = grown.tree;
    }
    Ok(tree)
}

/// Replays the certificate from `P4` (vertices `0..4` in path order),
/// checking every step's preconditions with the oracle.
pub fn apply_certificate(cert: &Certificate) -> Result<Tree> {
    replay(cert, true)
}

/// Replays the certificate without precondition checks.
pub fn apply_certificate_unchecked(cert: &Certificate) -> Result<Tree> {
    replay(cert, false)
}

/// Full certificate check against `tree`, with the reason on failure.
pub fn check_certificate(cert: &Certificate, tree: &Tree) -> Result<()> {
    let built = apply_certificate(cert)?;
    let code = built.canonical_code();
    if code != cert.final_canonical_code || built.order() != tree.order() || code != tree.canonical_code() {
        return Err(Error::CertificateMismatch);
    }
    Ok(())
}

pub fn verify_certificate(cert: &Certificate, tree: &Tree) -> bool {
    check_certificate(cert, tree).is_ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonMemberReason {
    SizeBelow4,
    ParamsUnequal,
    NoReductionApplies,
}

impl NonMemberReason {
    pub fn name(self) -> &'static str {
        match self {
            NonMemberReason::SizeBelow4 => "SizeBelow4",
            NonMemberReason::ParamsUnequal => "ParamsUnequal",
            NonMemberReason::NoReductionApplies => "NoReductionApplies",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionOutcome {
    pub member: bool,
    pub certificate: Option<Certificate>,
    pub reason: Option<NonMemberReason>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecognizeOptions {
    /// Share results between isomorphic subtrees met during the search.
    pub memoize: bool,
    /// Skip the oracle re-check of each reverse step's precondition.
    pub trust_proof: bool,
}

impl Default for RecognizeOptions {
    fn default() -> Self {
        RecognizeOptions { memoize: true, trust_proof: false }
    }
}

/// A construction of some tree `T`: the steps, the tree they replay to, and
/// an isomorphism from `T` onto that tree.
#[derive(Clone)]
struct Built {
    steps: Vec<(OpKind, usize)>,
    replayed: Tree,
    map: Vec<usize>,
}

/// Memoized outcome for a canonical code: steps and the tree they replay to.
type MemoEntry = Option<(Vec<(OpKind, usize)>, Tree)>;

struct Recognizer {
    opts: RecognizeOptions,
    memo: BTreeMap<Vec<u8>, MemoEntry>,
}

impl Recognizer {
    fn rec(&mut self, t: &Tree) -> Result<Option<Built>> {
        if !self.opts.memoize {
            return self.rec_uncached(t);
        }
        let code = t.canonical_code();
        if let Some(hit) = self.memo.get(&code) {
            return Ok(hit.as_ref().map(|(steps, replayed)| Built {
                steps: steps.clone(),
                replayed: replayed.clone(),
                map: t.isomorphism_to(replayed).expect("memo keys are canonical codes"),
            }));
        }
        let res = self.rec_uncached(t)?;
        self.memo.insert(code, res.as_ref().map(|b| (b.steps.clone(), b.replayed.clone())));
        Ok(res)
    }

    fn rec_uncached(&mut self, t: &Tree) -> Result<Option<Built>> {
        let n = t.order();
        if n < 4 || gamma_t_tree(t)? != tau_tree(t) {
            return Ok(None);
        }
        if n == 4 {
            let p4 = Tree::path(4);
            return Ok(t.isomorphism_to(&p4).map(|map| Built { steps: Vec::new(), replayed: p4, map }));
        }
        if let Some(v) = t.strong_supports().iter().next() {
            let leaf = t.neighbors(v).iter().copied().find(|&w| t.is_leaf(w)).unwrap();
            return self.try_reduce(t, &[leaf], v, OpKind::O2);
        }
        let path = t.longest_path();
        for p in [path.clone(), path.reversed()] {
            let vs = p.vertices();
            let l = p.length();
            if l >= 2 && t.degree(vs[1]) == 2 {
                if let Some(b) = self.try_reduce(t, &[vs[1], vs[0]], vs[2], OpKind::O3)? {
                    return Ok(Some(b));
                }
            }
            if l >= 3 && t.degree(vs[1]) == 2 && t.degree(vs[2]) == 3 {
                let x = t.neighbors(vs[2]).iter().copied().find(|&w| w != vs[1] && t.is_leaf(w));
                if let Some(x) = x {
                    if let Some(b) = self.try_reduce(t, &[vs[2], x, vs[1], vs[0]], vs[3], OpKind::O4)? {
                        return Ok(Some(b));
                    }
                }
            }
            if l >= 4 && (1..=3).all(|i| t.degree(vs[i]) == 2) {
                if let Some(b) = self.try_reduce(t, &[vs[3], vs[2], vs[1], vs[0]], vs[4], OpKind::O1)? {
                    return Ok(Some(b));
                }
            }
        }
        Ok(None)
    }

    /// Removes `added` (listed in the operation's new-vertex index order),
    /// recognizes what is left, and re-applies `op` at `attach`.
    fn try_reduce(&mut self, t: &Tree, added: &[usize], attach: usize, op: OpKind) -> Result<Option<Built>> {
        let (smaller, index) = t.without_vertices(added)?;
        let at = index[attach].expect("attachment vertex survives");
        let Some(b) = self.rec(&smaller)? else {
            return Ok(None);
        };
        if !self.opts.trust_proof {
            match op.check_preconditions(&Exhaustive::new(&smaller)?, at) {
                Ok(()) => {}
                Err(Error::PreconditionViolated { .. }) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        let r_at = b.map[at];
        let grown = ops::attach(&b.replayed, op, r_at);
        let mut map = alloc::vec![0; t.order()];
        for (w, slot) in index.iter().enumerate() {
            if let Some(i) = slot {
                map[w] = b.map[*i];
            }
        }
        for (j, &w) in added.iter().enumerate() {
            map[w] = grown.new_vertices.start + j;
        }
        let mut steps = b.steps;
        steps.push((op, r_at));
        Ok(Some(Built { steps, replayed: grown.tree, map }))
    }
}

pub fn recognize(tree: &Tree) -> Result<RecognitionOutcome> {
    recognize_with(tree, RecognizeOptions::default())
}

pub fn recognize_with(tree: &Tree, opts: RecognizeOptions) -> Result<RecognitionOutcome> {
    let not_member = |reason| Ok(RecognitionOutcome { member: false, certificate: None, reason: Some(reason) });
    if tree.order() < 4 {
        return not_member(NonMemberReason::SizeBelow4);
    }
    if gamma_t_tree(tree)? != tau_tree(tree) {
        return not_member(NonMemberReason::ParamsUnequal);
    }
    let mut r = Recognizer { opts, memo: BTreeMap::new() };
    match r.rec(tree)? {
        Some(b) => Ok(RecognitionOutcome {
            member: true,
            certificate: Some(Certificate::from_steps(&b.steps)?),
            reason: None,
        }),
        None => not_member(NonMemberReason::NoReductionApplies),
    }
}

/// Vertices where `op` may be applied to `tree`, whose (γt−τ)-set `witness`
/// is known. Uses the oracle up to [`GENERATOR_CHECKED_LIMIT`] vertices;
/// past it, `O1`/`O2` attach to witness vertices and `O3`/`O4` additionally
/// require a 2-support, which is never quasi-isolated.
fn eligible(tree: &Tree, oracle: Option<&Exhaustive>, witness: &VertexSet, op: OpKind) -> Vec<usize> {
    match oracle {
        Some(ex) => (0..tree.order()).filter(|&u| op.check_preconditions(ex, u).is_ok()).collect(),
        None => {
            let two = tree.two_supports();
            (0..tree.order())
                .filter(|&u| match op {
                    OpKind::O1 | OpKind::O2 => witness.contains(u),
                    OpKind::O3 => witness.contains(u) && two.contains(u),
                    OpKind::O4 => two.contains(u),
                    _ => false,
                })
                .collect()
        }
    }
}

/// A random member of the family on exactly `target_n` vertices, with its
/// certificate. Deterministic for a fixed seed.
pub fn random_member(target_n: usize, seed: u64) -> Result<(Tree, Certificate)> {
    if target_n < 4 {
        return Err(Error::TooSmall { n: target_n, min: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tree = Tree::path(4);
    let mut witness = VertexSet::from_vertices(4, [1, 2])?;
    let mut steps = Vec::new();
    while tree.order() < target_n {
        let remaining = target_n - tree.order();
        let oracle = if tree.order() <= GENERATOR_CHECKED_LIMIT { Some(Exhaustive::new(&tree)?) } else { None };
        let mut candidates: Vec<OpKind> =
            OpKind::CONSTRUCTION.into_iter().filter(|op| op.added_vertices() <= remaining).collect();
        candidates.shuffle(&mut rng);
        let mut applied = false;
        for op in candidates {
            let at = eligible(&tree, oracle.as_ref(), &witness, op);
            if at.is_empty() {
                continue;
            }
            let u = at[rng.gen_range(0..at.len())];
            if op != OpKind::O4 && !witness.contains(u) {
                // the extended witness must cover the new edge at u
                if let Some(ex) = &oracle {
                    witness = ex.gtt_sets()?.into_iter().find(|d| d.contains(u)).expect("u is in some set");
                }
            }
            let grown = ops::attach(&tree, op, u);
            witness = ops::grown_witness(op, &witness, &grown);
            steps.push((op, u));
            tree = grown.tree;
            applied = true;
            break;
        }
        if !applied {
            return Err(Error::OracleCapExceeded { target: target_n, cap: GENERATOR_CHECKED_LIMIT });
        }
    }
    let cert = Certificate::from_steps(&steps)?;
    Ok((tree, cert))
}

/// A tree grown from `P4` by the relaxed operations, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelaxedMember {
    pub tree: Tree,
    pub steps: Vec<(OpKind, usize)>,
    pub gamma_t: usize,
    pub tau: usize,
}

/// Random walk from `P4` with `O1'`..`O3'`. Preconditions are checked by the
/// oracle while the tree is within [`GENERATOR_CHECKED_LIMIT`]; past that only
/// `O1'` is used. Stops early if no operation fits the remaining budget.
pub fn random_s_member(target_n: usize, seed: u64) -> Result<RelaxedMember> {
    if target_n < 4 {
        return Err(Error::TooSmall { n: target_n, min: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tree = Tree::path(4);
    let mut steps = Vec::new();
    'grow: while tree.order() < target_n {
        let remaining = target_n - tree.order();
        let oracle = if tree.order() <= GENERATOR_CHECKED_LIMIT.min(ORACLE_CAP) {
            Some(Exhaustive::new(&tree)?)
        } else {
            None
        };
        let mut candidates: Vec<OpKind> =
            OpKind::RELAXED.into_iter().filter(|op| op.added_vertices() <= remaining).collect();
        candidates.shuffle(&mut rng);
        for op in candidates {
            let at: Vec<usize> = match (&oracle, op) {
                (_, OpKind::O1P) => (0..tree.order()).collect(),
                (Some(ex), _) => (0..tree.order()).filter(|&u| op.check_preconditions(ex, u).is_ok()).collect(),
                (None, _) => Vec::new(),
            };
            if at.is_empty() {
                continue;
            }
            let u = at[rng.gen_range(0..at.len())];
            tree = ops::attach(&tree, op, u).tree;
            steps.push((op, u));
            continue 'grow;
        }
        break;
    }
    Ok(RelaxedMember { gamma_t: gamma_t_tree(&tree)?, tau: tau_tree(&tree), tree, steps })
}
