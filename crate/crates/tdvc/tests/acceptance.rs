//! Acceptance run: one PASS/FAIL line per criterion, with timing.
//!
//! Criteria listed in `EXPECTED_FINDINGS` fail as stated and are reported as
//! such; the run exits non-zero if any other criterion fails or if an
//! expected finding stops failing.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdvc::verify::exhaustive_check;
use tdvc_core::dp::{gamma_t_tree, tau_tree};
use tdvc_core::enumerate::{free_trees, leaf_extension_codes, Claim};
use tdvc_core::family::{random_member, recognize};
use tdvc_core::ops::{self, apply_o1p, corona, gap_tree_tk, gap_tree_tpk, grown_witness, OpKind};
use tdvc_core::oracle::{is_total_dominating, is_vertex_cover, Exhaustive};
use tdvc_core::{Tree, VertexSet};

/// Criteria that do not hold as stated; see the detail printed with each.
const EXPECTED_FINDINGS: &[&str] = &["corona-contains-gtt-set"];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn base_case() -> Outcome {
    let p4 = Tree::path(4);
    let ex = Exhaustive::new(&p4).unwrap();
    let sets: Vec<Vec<usize>> = ex.gtt_sets().unwrap().iter().map(VertexSet::to_vec).collect();
    let rec = recognize(&p4).unwrap();
    let empty_cert = rec.certificate.as_ref().is_some_and(|c| c.is_empty());
    let pass = ex.tau() == 2 && ex.gamma_t() == Ok(2) && sets == [vec![1, 2]] && rec.member && empty_cert;
    outcome(pass, format!("tau {} gamma_t {} sets {sets:?} member {}", ex.tau(), ex.gamma_t().unwrap(), rec.member))
}

fn non_examples() -> Outcome {
    let k2 = Exhaustive::new(&Tree::path(2)).unwrap();
    let p8 = Exhaustive::new(&Tree::path(8)).unwrap();
    let rec = recognize(&Tree::path(8)).unwrap();
    let pass = k2.tau() == 1
        && k2.gamma_t() == Ok(2)
        && !k2.has_gtt_set().unwrap()
        && p8.tau() == 4
        && p8.gamma_t() == Ok(4)
        && p8.gtt_sets().unwrap().is_empty()
        && !rec.member;
    outcome(
        pass,
        format!(
            "K2 tau {} gamma_t {}; P8 tau {} gamma_t {} sets {}; P8 member {}",
            k2.tau(),
            k2.gamma_t().unwrap(),
            p8.tau(),
            p8.gamma_t().unwrap(),
            p8.gtt_sets().unwrap().len(),
            rec.member
        ),
    )
}

/// Checks (gamma_t, tau) of a family member by DP, and by the oracle when asked.
fn family_values(t: &Tree, expected: (usize, usize), oracle: bool) -> Result<(), String> {
    let dp = (gamma_t_tree(t).unwrap(), tau_tree(t));
    if dp != expected {
        return Err(format!("n {}: DP {dp:?}, expected {expected:?}", t.order()));
    }
    if oracle {
        let ex = Exhaustive::new(t).unwrap();
        let exact = (ex.gamma_t().unwrap(), ex.tau());
        if exact != expected {
            return Err(format!("n {}: oracle {exact:?}, expected {expected:?}", t.order()));
        }
    }
    Ok(())
}

fn gap_tk() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for k in 1..=3 {
        let t = gap_tree_tk(k);
        let r = family_values(&t, (2 * k + 2, 3 * k + 2), k <= 2);
        pass &= r.is_ok() && t.order() == 6 * k + 4;
        notes.push(r.map_or_else(|e| e, |_| format!("k={k} ok")));
    }
    outcome(pass, notes.join("; "))
}

fn gap_tpk() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for k in 1..=3 {
        let t = gap_tree_tpk(k);
        let r = family_values(&t, (3 * k, 2 * k), true);
        pass &= r.is_ok() && t.order() == 6 * k - 1;
        notes.push(r.map_or_else(|e| e, |_| format!("k={k} ok")));
    }
    outcome(pass, notes.join("; "))
}

/// `(tree, op, vertex)` with the checked preconditions holding and the grown
/// tree on at most 18 vertices.
fn valid_triples() -> Vec<(Tree, OpKind, usize)> {
    let mut bases: Vec<Tree> = (4..=10).flat_map(free_trees).collect();
    for seed in 0..30 {
        bases.push(random_member(11 + seed as usize % 4, seed).unwrap().0);
    }
    let mut out = Vec::new();
    for t in bases {
        let ex = Exhaustive::new(&t).unwrap();
        for op in OpKind::CONSTRUCTION {
            if t.order() + op.added_vertices() > 18 {
                continue;
            }
            for u in 0..t.order() {
                if op.check_preconditions(&ex, u).is_ok() {
                    out.push((t.clone(), op, u));
                }
            }
        }
    }
    out
}

fn operation_deltas(triples: &[(Tree, OpKind, usize)]) -> Outcome {
    let mut bad = 0;
    let mut per_op = [0usize; 4];
    for (t, op, u) in triples {
        let before = (gamma_t_tree(t).unwrap(), tau_tree(t));
        let grown = ops::apply(t, *op, *u, false).unwrap().tree;
        let (dg, dt) = op.parameter_delta().unwrap();
        if (gamma_t_tree(&grown).unwrap(), tau_tree(&grown)) != (before.0 + dg, before.1 + dt) {
            bad += 1;
        }
        per_op[OpKind::CONSTRUCTION.iter().position(|o| o == op).unwrap()] += 1;
    }
    outcome(triples.len() >= 200 && bad == 0, format!("{} triples {per_op:?}, {bad} violations", triples.len()))
}

fn witness_sets(triples: &[(Tree, OpKind, usize)]) -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for (t, op, u) in triples {
        let ex = Exhaustive::new(t).unwrap();
        let grown = ops::apply(t, *op, *u, false).unwrap();
        let gex = Exhaustive::new(&grown.tree).unwrap();
        for d in ex.gtt_sets().unwrap() {
            let w = grown_witness(*op, &d, &grown);
            let ok = is_vertex_cover(&grown.tree, &w)
                && is_total_dominating(&grown.tree, &w)
                && w.len() == gex.tau()
                && Ok(w.len()) == gex.gamma_t();
            checked += 1;
            bad += !ok as usize;
        }
    }
    outcome(checked > 0 && bad == 0, format!("{checked} witness sets checked, {bad} violations"))
}

fn recognizer_exhaustive() -> (Outcome, Option<(usize, usize, bool)>) {
    let report = exhaustive_check(14, &[Claim::RecognizerMatchesOracle], 1).unwrap();
    let stats = report.claim(Claim::RecognizerMatchesOracle).unwrap();
    let trees: usize = report.orders.iter().filter(|o| o.order >= 4).map(|o| o.trees).sum();
    let at8 = report.order(8).unwrap();
    let p8 = Tree::path(8);
    let p8_separates = gamma_t_tree(&p8).unwrap() == tau_tree(&p8) && !recognize(&p8).unwrap().member;
    (
        outcome(stats.discrepancies.is_empty(), format!("{trees} trees with 4 <= n <= 14, {} discrepancies (membership or certificate)", stats.discrepancies.len())),
        Some((at8.gtt_trees, at8.with_set, p8_separates)),
    )
}

fn dp_equivalence() -> Outcome {
    let report = exhaustive_check(12, &[Claim::DpMatchesOracle], 1).unwrap();
    let s = report.claim(Claim::DpMatchesOracle).unwrap();
    outcome(s.discrepancies.is_empty(), format!("{} trees, {} mismatches", s.checked, s.discrepancies.len()))
}

fn structural_suites() -> Outcome {
    let structural = exhaustive_check(12, &[Claim::GttSetsAvoidLeaves, Claim::LeaflessTdsExists], 1).unwrap();
    let quasi = exhaustive_check(10, &[Claim::TwoSupportsNotQuasiIsolated], 1).unwrap();
    let parts: Vec<String> = structural
        .claims
        .iter()
        .chain(&quasi.claims)
        .map(|c| format!("{} {}/{}", c.claim, c.checked - c.discrepancies.len(), c.checked))
        .collect();
    outcome(structural.passed() && quasi.passed(), parts.join("; "))
}

fn corona_sets() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=8 {
        for base in free_trees(n) {
            let c = corona(&base);
            let v = VertexSet::from_vertices(2 * n, 0..n).unwrap();
            checked += 1;
            if !Exhaustive::new(&c).unwrap().gtt_sets().unwrap_or_default().contains(&v) {
                failures.push(format!("n={n}"));
            }
        }
    }
    let detail = if failures.is_empty() {
        format!("{checked} bases, 0 violations")
    } else {
        format!(
            "{checked} bases, {} violations ({}); K1 has corona K2 and {{0}} dominates nothing; every base with n >= 2 holds",
            failures.len(),
            failures.join(", ")
        )
    };
    outcome(failures.is_empty(), detail)
}

fn strictness(at8: Option<(usize, usize, bool)>) -> Outcome {
    let (gtt_trees, with_set, p8) = at8.expect("exhaustive run finished");
    outcome(gtt_trees > with_set && p8, format!("n=8: {gtt_trees} equal-parameter trees, {with_set} with a set; P8 separates: {p8}"))
}

fn relaxed_probes() -> Outcome {
    let report = exhaustive_check(12, &[Claim::RelaxedOpsPreserveEquality], 1).unwrap();
    let s = report.claim(Claim::RelaxedOpsPreserveEquality).unwrap();
    let mut path = Tree::path(4);
    let mut chain_ok = true;
    for k in 2..=3 {
        let end = path.order() - 1;
        path = apply_o1p(&path, end).unwrap().tree;
        let ex = Exhaustive::new(&path).unwrap();
        chain_ok &= path == Tree::path(4 * k) && ex.gamma_t() == Ok(ex.tau()) && !ex.has_gtt_set().unwrap();
    }
    let finding = if s.discrepancies.is_empty() { "none".to_string() } else { format!("{} (logged)", s.discrepancies.len()) };
    outcome(chain_ok, format!("{} trees probed, trees with a violating application: {finding}; P8/P12 chain ok: {chain_ok}", s.checked))
}

fn random_caterpillar(n: usize, seed: u64) -> Tree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spine = n / 3;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for leaf in spine..n {
        edges.push((rng.gen_range(0..spine), leaf));
    }
    Tree::from_edge_list(n, &edges).unwrap()
}

fn performance() -> Outcome {
    let cat = random_caterpillar(100_000, 5);
    let start = Instant::now();
    let (g, t) = (gamma_t_tree(&cat).unwrap(), tau_tree(&cat));
    let dp_time = start.elapsed();
    let start = Instant::now();
    let codes: BTreeSet<Vec<u8>> = free_trees(14).map(|t| t.canonical_code()).collect();
    let stream_time = start.elapsed();
    let dual = leaf_extension_codes(14);
    let pass = dp_time < Duration::from_secs(1) && stream_time < Duration::from_secs(10) && codes.len() == 3159 && codes == dual;
    outcome(
        pass,
        format!(
            "DP on 1e5 vertices {:.3}s (gamma_t {g}, tau {t}); free_trees(14) {} trees in {:.3}s, dual enumerator agrees: {}",
            dp_time.as_secs_f64(),
            codes.len(),
            stream_time.as_secs_f64(),
            codes == dual
        ),
    )
}

fn main() -> ExitCode {
    let mut results: Vec<(&str, Duration, Duration, Outcome)> = Vec::new();
    let mut run = |name: &'static str, limit: u64, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        results.push((name, took, Duration::from_secs(limit), o));
    };
    run("base-case-p4", 1, &mut base_case);
    run("non-examples-k2-p8", 1, &mut non_examples);
    run("gap-family-tk", 30, &mut gap_tk);
    run("gap-family-tpk", 60, &mut gap_tpk);
    let triples = valid_triples();
    run("operation-deltas", 300, &mut || operation_deltas(&triples));
    run("grown-witness-sets", 300, &mut || witness_sets(&triples));
    let mut at8 = None;
    run("recognizer-exhaustive-4-14", 900, &mut || {
        let (o, stats) = recognizer_exhaustive();
        at8 = stats;
        o
    });
    run("dp-equals-oracle-n12", 300, &mut dp_equivalence);
    run("structural-claims", 600, &mut structural_suites);
    run("corona-contains-gtt-set", 120, &mut corona_sets);
    run("containment-strict-n8", 1, &mut || strictness(at8));
    run("relaxed-operation-probes", 600, &mut relaxed_probes);
    run("performance-smoke", 20, &mut performance);

    let mut unexpected = 0;
    println!("acceptance: {} criteria", results.len());
    for (name, took, limit, o) in &results {
        let in_time = took <= limit;
        let pass = o.pass && in_time;
        let expected_fail = EXPECTED_FINDINGS.contains(name);
        if pass == expected_fail {
            unexpected += 1;
        }
        let tag = match (pass, expected_fail) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known finding)",
            (false, false) => "FAIL",
        };
        let time_note = if in_time { String::new() } else { format!(" over the {}s limit", limit.as_secs()) };
        println!("{tag:<20} {name:<28} {:>8.3}s{time_note}  {}", took.as_secs_f64(), o.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
