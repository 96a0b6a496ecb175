#![allow(dead_code)]

use proptest::prelude::*;
use tdvc_core::enumerate::prufer_decode;
use tdvc_core::oracle::{is_total_dominating, is_vertex_cover};
use tdvc_core::{Tree, VertexSet};

/// Minimum sizes and all minimum sets, by scanning every subset once.
pub struct BruteForce {
    pub tau: usize,
    pub gamma_t: Option<usize>,
    pub min_vcs: Vec<Vec<usize>>,
    pub min_tds: Vec<Vec<usize>>,
}

pub fn brute_force(tree: &Tree) -> BruteForce {
    let n = tree.order();
    assert!(n <= 16);
    let mut vcs: Vec<Vec<usize>> = Vec::new();
    let mut tds: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let set = VertexSet::from_vertices(n, members.iter().copied()).unwrap();
        if is_vertex_cover(tree, &set) {
            vcs.push(members.clone());
        }
        if is_total_dominating(tree, &set) {
            tds.push(members);
        }
    }
    let tau = vcs.iter().map(Vec::len).min().unwrap();
    let gamma_t = tds.iter().map(Vec::len).min();
    vcs.retain(|s| s.len() == tau);
    tds.retain(|s| Some(s.len()) == gamma_t);
    vcs.sort();
    tds.sort();
    BruteForce { tau, gamma_t, min_vcs: vcs, min_tds: tds }
}

pub fn all_pairs_distances(tree: &Tree) -> Vec<Vec<usize>> {
    (0..tree.order()).map(|v| tree.bfs(v).0).collect()
}

pub fn sorted(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = sets.iter().map(VertexSet::to_vec).collect();
    out.sort();
    out
}

/// Random labeled tree on `lo..=hi` vertices via a random Prüfer sequence.
pub fn arb_tree(lo: usize, hi: usize) -> impl Strategy<Value = Tree> {
    (lo..=hi).prop_flat_map(|n| {
        let len = n.saturating_sub(2);
        proptest::collection::vec(0..n.max(1), len).prop_map(move |seq| {
            if n == 1 {
                Tree::path(1)
            } else {
                prufer_decode(&seq)
            }
        })
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Proptest settings without the regression file, which integration tests
/// cannot locate.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}
