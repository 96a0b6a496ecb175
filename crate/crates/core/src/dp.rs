//! Linear-time dynamic programs for the vertex cover number and the total
//! domination number of a tree.
//!
//! Vertices are processed in reverse BFS order from the root, so no recursion
//! is involved and path-like trees of any length are fine.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Tree;
use crate::Result;

/// Cost of an impossible state. Arithmetic on costs saturates at this value.
pub const INFEASIBLE: u32 = u32::MAX;

/// Per-vertex state costs of a rooted DP; `rows[v][s]` is the minimum size
/// of a partial solution in the subtree of `v` with `v` in state `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpTable<const K: usize> {
    pub root: usize,
    pub rows: Vec<[u32; K]>,
}

/// Vertex cover states.
pub mod cover {
    pub const IN: usize = 0;
    pub const OUT: usize = 1;
}

/// Total domination states.
pub mod total {
    /// In the set, with a child in the set.
    pub const IN_SUPPORTED: usize = 0;
    /// In the set, no child in the set; the parent has to be.
    pub const IN_PENDING: usize = 1;
    /// Not in the set, dominated by a child.
    pub const OUT_DOMINATED: usize = 2;
    /// Not in the set, no child in the set; the parent has to be.
    pub const OUT_PENDING: usize = 3;
}

fn add(a: u32, b: u32) -> u32 {
    a.saturating_add(b)
}

/// Extra cost of forcing a child into a preferred class: `forced - best`,
/// infeasible when the preferred class is.
fn penalty(forced: u32, best: u32) -> u32 {
    if forced == INFEASIBLE {
        INFEASIBLE
    } else {
        forced - best
    }
}

/// Vertices in BFS order from `root` and their parents.
fn rooted_order(tree: &Tree, root: usize) -> (Vec<usize>, Vec<usize>) {
    let (dist, parent) = tree.bfs(root);
    let mut order: Vec<usize> = (0..tree.order()).collect();
    order.sort_by_key(|&v| dist[v]);
    (order, parent)
}

pub fn tau_table(tree: &Tree, root: usize) -> Result<DpTable<2>> {
    use cover::*;
    tree.check_vertex(root)?;
    let (order, parent) = rooted_order(tree, root);
    let mut rows = vec![[1, 0]; tree.order()];
    for &v in order.iter().rev() {
        if v != root {
            let p = parent[v];
            let child = rows[v];
            rows[p][IN] = add(rows[p][IN], child[IN].min(child[OUT]));
            // an uncovered parent edge forces the child in
            rows[p][OUT] = add(rows[p][OUT], child[IN]);
        }
    }
    Ok(DpTable { root, rows })
}

pub fn tau_tree_rooted(tree: &Tree, root: usize) -> Result<usize> {
    let t = tau_table(tree, root)?;
    let r = t.rows[root];
    Ok(r[cover::IN].min(r[cover::OUT]) as usize)
}

/// Vertex cover number, rooted at vertex 0.
pub fn tau_tree(tree: &Tree) -> usize {
    tau_tree_rooted(tree, 0).expect("vertex 0 exists")
}

pub fn gamma_t_table(tree: &Tree, root: usize) -> Result<DpTable<4>> {
    use total::*;
    tree.check_vertex(root)?;
    if tree.order() < 2 {
        return Err(Error::NoTotalDominatingSet);
    }
    let n = tree.order();
    let (order, parent) = rooted_order(tree, root);
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &order[1..] {
        children[parent[v]].push(v);
    }
    let mut rows = vec![[INFEASIBLE; 4]; n];
    for &v in order.iter().rev() {
        let kids = &children[v];
        let mut any = 0u32;
        let mut any_penalty = INFEASIBLE;
        let mut out_only = 0u32;
        let mut settled = 0u32;
        let mut settled_penalty = INFEASIBLE;
        let mut children_dominated = 0u32;
        for &c in kids {
            let r = rows[c];
            let best = r.iter().copied().min().unwrap();
            any = add(any, best);
            any_penalty = any_penalty.min(penalty(r[IN_SUPPORTED].min(r[IN_PENDING]), best));
            out_only = add(out_only, r[OUT_DOMINATED].min(r[OUT_PENDING]));
            // with v outside the set, a child must already be satisfied
            let ok = r[IN_SUPPORTED].min(r[OUT_DOMINATED]);
            settled = add(settled, ok);
            settled_penalty = settled_penalty.min(penalty(r[IN_SUPPORTED], ok));
            children_dominated = add(children_dominated, r[OUT_DOMINATED]);
        }
        rows[v] = [
            add(1, add(any, any_penalty)),
            add(1, out_only),
            add(settled, settled_penalty),
            children_dominated,
        ];
    }
    Ok(DpTable { root, rows })
}

pub fn gamma_t_tree_rooted(tree: &Tree, root: usize) -> Result<usize> {
    let t = gamma_t_table(tree, root)?;
    let r = t.rows[root];
    Ok(r[total::IN_SUPPORTED].min(r[total::OUT_DOMINATED]) as usize)
}

/// Total domination number, rooted at vertex 0.
pub fn gamma_t_tree(tree: &Tree) -> Result<usize> {
    gamma_t_tree_rooted(tree, 0)
}
