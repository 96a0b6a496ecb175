mod common;

use common::{brute_force, sorted};
use tdvc_core::enumerate::free_trees;
use tdvc_core::oracle::{
    self, gtt_sets, is_quasi_isolated, is_quasi_isolated_for, is_total_dominating, is_vertex_cover,
    leafless_gamma_t_set, min_total_dominating_sets, min_vertex_covers, Exhaustive,
};
use tdvc_core::{Error, Tree, VertexSet};

fn trees(lo: usize, hi: usize) -> impl Iterator<Item = Tree> {
    (lo..=hi).flat_map(free_trees)
}

#[test]
fn set_families_match_brute_force() {
    for t in trees(2, 12) {
        let bf = brute_force(&t);
        let ex = Exhaustive::new(&t).unwrap();
        assert_eq!(ex.tau(), bf.tau);
        assert_eq!(ex.gamma_t().ok(), bf.gamma_t);
        assert_eq!(sorted(&ex.min_vertex_covers()), bf.min_vcs);
        assert_eq!(sorted(&ex.min_total_dominating_sets().unwrap()), bf.min_tds);
    }
}

#[test]
fn returned_sets_satisfy_their_predicates() {
    for t in trees(2, 12) {
        let tau = oracle::tau_exact(&t).unwrap();
        let gamma_t = oracle::gamma_t_exact(&t).unwrap();
        for s in min_vertex_covers(&t).unwrap() {
            assert!(is_vertex_cover(&t, &s) && s.len() == tau);
        }
        for s in min_total_dominating_sets(&t).unwrap() {
            assert!(is_total_dominating(&t, &s) && s.len() == gamma_t);
        }
    }
}

#[test]
fn gtt_sets_are_the_intersection_of_both_families() {
    for t in trees(2, 12) {
        let bf = brute_force(&t);
        let mut expected: Vec<Vec<usize>> =
            bf.min_vcs.iter().filter(|s| bf.min_tds.contains(s)).cloned().collect();
        expected.sort();
        assert_eq!(sorted(&gtt_sets(&t).unwrap()), expected, "{:?}", t.edges());
    }
}

#[test]
fn gtt_sets_contain_no_leaves() {
    for t in trees(2, 12) {
        let leaves = t.leaves();
        for s in gtt_sets(&t).unwrap() {
            assert!(s.iter().all(|v| !leaves.contains(v)), "{:?}", t.edges());
        }
    }
}

#[test]
fn non_stars_have_leafless_minimum_tds() {
    for t in trees(3, 12) {
        match leafless_gamma_t_set(&t) {
            Ok(s) => {
                assert!(!t.is_star());
                assert_eq!(s.len(), oracle::gamma_t_exact(&t).unwrap());
                assert!(is_total_dominating(&t, &s));
                assert!(s.iter().all(|v| !t.is_leaf(v)));
            }
            Err(e) => {
                assert!(t.is_star());
                assert_eq!(e, Error::IsStar);
            }
        }
    }
}

#[test]
fn two_supports_are_never_quasi_isolated() {
    for t in trees(2, 10) {
        for v in t.two_supports().iter() {
            assert!(!is_quasi_isolated(&t, v).unwrap(), "{:?} v={v}", t.edges());
        }
    }
}

/// Quasi-isolation straight from the definition, with private neighborhoods
/// computed by `Tree::private_neighbors`.
#[test]
fn quasi_isolation_matches_definition() {
    for t in trees(2, 9) {
        let bf = brute_force(&t);
        for v in 0..t.order() {
            let mut any = false;
            for members in &bf.min_tds {
                let s = VertexSet::from_vertices(t.order(), members.iter().copied()).unwrap();
                let here = members
                    .iter()
                    .any(|&u| t.private_neighbors(u, &s).unwrap().to_vec() == vec![v]);
                assert_eq!(is_quasi_isolated_for(&t, v, &s).unwrap(), here);
                any |= here;
            }
            assert_eq!(is_quasi_isolated(&t, v).unwrap(), any);
        }
    }
}

#[test]
fn in_some_gtt_set_is_the_union() {
    for t in trees(4, 10) {
        let sets = gtt_sets(&t).unwrap();
        for u in 0..t.order() {
            let expected = sets.iter().any(|s| s.contains(u));
            assert_eq!(oracle::in_some_gtt_set(&t, u).unwrap(), expected);
        }
    }
}

#[test]
fn report_is_consistent() {
    for t in trees(2, 11) {
        let r = oracle::analyze(&t).unwrap();
        assert_eq!(r.gtt_witness.is_some(), r.num_gtt_sets > 0);
        if r.num_gtt_sets > 0 {
            assert!(r.is_gtt_graph);
            let w = r.gtt_witness.unwrap();
            assert!(is_vertex_cover(&t, &w) && is_total_dominating(&t, &w));
            assert_eq!(w.len(), r.tau);
        }
    }
}

#[test]
fn corona_vertex_sets() {
    let base = Tree::path(3);
    let c = tdvc_core::ops::corona(&base);
    for u in 0..3 {
        assert!(oracle::in_some_gtt_set(&c, u).unwrap());
    }
}
