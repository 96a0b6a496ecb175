//! Tree-growing operations and the gap families.
//!
//! New vertices always receive the indices `n, n+1, ...` of the grown tree in
//! a fixed per-operation order, so replaying the same steps always yields the
//! same labeled tree.

use alloc::vec::Vec;
use core::ops::Range;
use core::str::FromStr;

use crate::error::{Error, Precondition};
use crate::graph::{Tree, VertexSet};
use crate::oracle::Exhaustive;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKind {
    /// Attach a `P4` by one of its ends. Needs `u` in some (γt−τ)-set.
    O1,
    /// Attach a leaf. Needs `u` in some (γt−τ)-set.
    O2,
    /// Attach a `P2` by one end. Needs `u` in some (γt−τ)-set and not
    /// quasi-isolated.
    O3,
    /// Attach a `P4` by one of its supports. Needs `u` not quasi-isolated.
    O4,
    /// Same geometry as `O1`, no precondition.
    O1P,
    /// Same geometry as `O2`; needs `u` in some minimum total dominating set
    /// and in some minimum vertex cover.
    O2P,
    /// Same geometry as `O3`; needs `u` in some minimum total dominating set
    /// and not quasi-isolated.
    O3P,
}

impl OpKind {
    pub const CONSTRUCTION: [OpKind; 4] = [OpKind::O1, OpKind::O2, OpKind::O3, OpKind::O4];
    pub const RELAXED: [OpKind; 3] = [OpKind::O1P, OpKind::O2P, OpKind::O3P];

    /// Number of vertices the operation adds.
    pub fn added_vertices(self) -> usize {
        match self {
            OpKind::O1 | OpKind::O4 | OpKind::O1P => 4,
            OpKind::O2 | OpKind::O2P => 1,
            OpKind::O3 | OpKind::O3P => 2,
        }
    }

    pub fn is_construction(self) -> bool {
        matches!(self, OpKind::O1 | OpKind::O2 | OpKind::O3 | OpKind::O4)
    }

    pub fn name(self) -> &'static str {
        match self {
            OpKind::O1 => "O1",
            OpKind::O2 => "O2",
            OpKind::O3 => "O3",
            OpKind::O4 => "O4",
            OpKind::O1P => "O1P",
            OpKind::O2P => "O2P",
            OpKind::O3P => "O3P",
        }
    }

    /// `(gamma_t, tau)` change promised for a construction operation.
    pub fn parameter_delta(self) -> Option<(usize, usize)> {
        match self {
            OpKind::O1 | OpKind::O4 => Some((2, 2)),
            OpKind::O2 => Some((0, 0)),
            OpKind::O3 => Some((1, 1)),
            _ => None,
        }
    }

    fn preconditions(self) -> &'static [Precondition] {
        use Precondition::*;
        match self {
            OpKind::O1 | OpKind::O2 => &[InSomeGttSet],
            OpKind::O3 => &[InSomeGttSet, NotQuasiIsolated],
            OpKind::O4 => &[NotQuasiIsolated],
            OpKind::O1P => &[],
            OpKind::O2P => &[InSomeMinTds, InSomeMinVc],
            OpKind::O3P => &[InSomeMinTds, NotQuasiIsolated],
        }
    }

    /// Checks the preconditions at `u` against precomputed oracle tables.
    pub fn check_preconditions(self, oracle: &Exhaustive, u: usize) -> Result<()> {
        for &p in self.preconditions() {
            let holds = match p {
                Precondition::InSomeGttSet => oracle.in_some_gtt_set(u)?,
                Precondition::NotQuasiIsolated => !oracle.is_quasi_isolated(u)?,
                Precondition::InSomeMinTds => oracle.in_some_min_tds(u)?,
                Precondition::InSomeMinVc => oracle.in_some_min_vc(u)?,
            };
            if !holds {
                return Err(Error::PreconditionViolated { op: self, vertex: u, failed: p });
            }
        }
        Ok(())
    }

    pub fn needs_oracle(self) -> bool {
        !self.preconditions().is_empty()
    }
}

impl core::fmt::Display for OpKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OpKind {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        let all = [OpKind::O1, OpKind::O2, OpKind::O3, OpKind::O4, OpKind::O1P, OpKind::O2P, OpKind::O3P];
        all.into_iter().find(|op| op.name().eq_ignore_ascii_case(s)).ok_or(())
    }
}

/// A tree grown from a smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachResult {
    pub tree: Tree,
    /// Indices of the added vertices, `old_n..new_n`.
    pub new_vertices: Range<usize>,
    pub attach_vertex: usize,
}

/// `G +uv H`: the disjoint union with `H` shifted by `|G|`, plus the edge
/// `u (v + |G|)`.
pub fn sum_via_edge(g: &Tree, h: &Tree, u: usize, v: usize) -> Result<Tree> {
    g.check_vertex(u)?;
    h.check_vertex(v)?;
    let shift = g.order();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(a, b)| (a + shift, b + shift)))
        .chain(core::iter::once((u, v + shift)));
    Ok(Tree::from_edges_unchecked(g.order() + h.order(), edges))
}

pub fn add_leaf(tree: &Tree, u: usize) -> Result<AttachResult> {
    apply(tree, OpKind::O2, u, false)
}

/// Applies `op` at `u`. With `checked`, the operation's preconditions are
/// verified by the exhaustive oracle first.
///
/// Index order of the new vertices (`n` is the old order):
/// * `O1`/`O1P`: path `(v, x, y, z)` with `v` adjacent to `u`, indices `n..n+4`
///   in path order;
/// * `O2`/`O2P`: the leaf is `n`;
/// * `O3`/`O3P`: `(v, w)` with `v = n` adjacent to `u`, `w = n + 1`;
/// * `O4`: path `(x, v, y, z)` joined at `v`; `v = n`, `x = n+1`, `y = n+2`,
///   `z = n+3`.
pub fn apply(tree: &Tree, op: OpKind, u: usize, checked: bool) -> Result<AttachResult> {
    tree.check_vertex(u)?;
    if checked && op.needs_oracle() {
        op.check_preconditions(&Exhaustive::new(tree)?, u)?;
    }
    Ok(attach(tree, op, u))
}

pub(crate) fn attach(tree: &Tree, op: OpKind, u: usize) -> AttachResult {
    let n = tree.order();
    let extra: Vec<(usize, usize)> = match op {
        OpKind::O1 | OpKind::O1P => Vec::from([(u, n), (n, n + 1), (n + 1, n + 2), (n + 2, n + 3)]),
        OpKind::O2 | OpKind::O2P => Vec::from([(u, n)]),
        OpKind::O3 | OpKind::O3P => Vec::from([(u, n), (n, n + 1)]),
        OpKind::O4 => Vec::from([(u, n), (n + 1, n), (n, n + 2), (n + 2, n + 3)]),
    };
    let added = op.added_vertices();
    AttachResult { tree: tree.grown(added, &extra), new_vertices: n..n + added, attach_vertex: u }
}

pub fn apply_o1(tree: &Tree, u: usize, checked: bool) -> Result<AttachResult> {
    apply(tree, OpKind::O1, u, checked)
}

pub fn apply_o2(tree: &Tree, u: usize, checked: bool) -> Result<AttachResult> {
    apply(tree, OpKind::O2, u, checked)
}

pub fn apply_o3(tree: &Tree, u: usize, checked: bool) -> Result<AttachResult> {
    apply(tree, OpKind::O3, u, checked)
}

pub fn apply_o4(tree: &Tree, u: usize, checked: bool) -> Result<AttachResult> {
    apply(tree, OpKind::O4, u, checked)
}

pub fn apply_o1p(tree: &Tree, u: usize) -> Result<AttachResult> {
    apply(tree, OpKind::O1P, u, true)
}

pub fn apply_o2p(tree: &Tree, u: usize) -> Result<AttachResult> {
    apply(tree, OpKind::O2P, u, true)
}

pub fn apply_o3p(tree: &Tree, u: usize) -> Result<AttachResult> {
    apply(tree, OpKind::O3P, u, true)
}

/// Given a (γt−τ)-set `before` of the tree an operation was applied to, the
/// (γt−τ)-set of the grown tree obtained by adding the operation's fixed new
/// vertices: `{x, y}` for `O1`, nothing for `O2`, `{v}` for `O3`, `{v, y}`
/// for `O4`.
pub fn grown_witness(op: OpKind, before: &VertexSet, grown: &AttachResult) -> VertexSet {
    let n = grown.new_vertices.start;
    let mut set = before.with_capacity(grown.tree.order());
    let added: &[usize] = match op {
        OpKind::O1 | OpKind::O1P => &[n + 1, n + 2],
        OpKind::O2 | OpKind::O2P => &[],
        OpKind::O3 | OpKind::O3P => &[n],
        OpKind::O4 => &[n, n + 2],
    };
    for &v in added {
        set.insert(v);
    }
    set
}

/// Every vertex receives its own pendant leaf; vertex `i` gets leaf `n + i`.
pub fn corona(tree: &Tree) -> Tree {
    let n = tree.order();
    let pendants: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
    tree.grown(n, &pendants)
}

/// Path `0..len` plus one pendant leaf on each path vertex selected by
/// `pick`; leaves are numbered after the path in path order.
fn path_with_pendants(len: usize, pick: impl Fn(usize) -> bool) -> Tree {
    let path = Tree::path(len);
    let hosts: Vec<usize> = (0..len).filter(|&i| pick(i)).collect();
    let pendants: Vec<(usize, usize)> = hosts.iter().enumerate().map(|(j, &h)| (h, len + j)).collect();
    path.grown(hosts.len(), &pendants)
}

/// `T_(k)`: `P_{4k+2}` with pendant leaves on the path vertices at positions
/// 1, 2, 5, 6, 9, 10, ... (1-based). Its vertex cover number exceeds its total
/// domination number by `k`.
pub fn gap_tree_tk(k: usize) -> Tree {
    assert!(k >= 1);
    path_with_pendants(4 * k + 2, |i| i % 4 < 2)
}

/// `T'_(k)`: `P_{4k-1}` with pendant leaves on the odd 1-based positions. Its
/// total domination number exceeds its vertex cover number by `k`.
pub fn gap_tree_tpk(k: usize) -> Tree {
    assert!(k >= 1);
    path_with_pendants(4 * k - 1, |i| i % 2 == 0)
}
