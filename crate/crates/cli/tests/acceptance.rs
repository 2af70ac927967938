//! Acceptance suite: one line per criterion, non-zero exit on an
//! unexpected failure.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use sqclique::clique::CLIQUE_ORACLE_LIMIT;
use sqclique::extraction::{run_token_pass, tight_bound_min_degree_formula};
use sqclique::{
    analyse, build_tight, degeneracy, extract, mad, mad_oracle, max_clique, max_clique_oracle,
    max_clique_with_budget, random_2degenerate, square, verify_nice, Graph, GraphBuilder, VertexOrder,
    VertexSet, TIGHT_BOUND_MIN_DEGREE,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn run_cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_sqclique")).args(args).output().expect("run sqclique");
    let code = out.status.code().unwrap_or(-1);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

fn tight_reproduction() -> Outcome {
    let ds = [8u64, 9, 10, 11, 12, 16, 20];
    let expected = [20u64, 22, 25, 27, 30, 40, 50];
    let (code, report) = run_cli(&["verify-tight", "--d", "8,9,10,11,12,16,20", "--node-budget", "100000000"]);
    let checks = report["outputs"]["checks"].as_array().cloned().unwrap_or_default();
    let mut bad = Vec::new();
    for ((d, want), c) in ds.iter().zip(expected).zip(&checks) {
        let ok = c["d"] == *d
            && c["max_degree"] == *d
            && c["degeneracy"] == 2
            && c["clique_number"] == want
            && c["pass"] == true;
        if !ok {
            bad.push(d);
        }
    }
    let omegas: Vec<String> = checks.iter().map(|c| c["clique_number"].to_string()).collect();
    let pass = code == 0 && checks.len() == ds.len() && bad.is_empty();
    outcome(pass, format!("clique numbers [{}], exit {code}, mismatches {bad:?}", omegas.join(", ")))
}

fn token_trace() -> Outcome {
    let g = Graph::from_edges([(1, 2), (1, 7), (2, 4), (2, 5), (3, 4), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7)])
        .unwrap();
    let s: VertexSet = (1..=7).collect();
    let order = VertexOrder::new((1..=7).collect()).unwrap();
    let ledger = run_token_pass(&g, &s, &order).unwrap();
    let primary: Vec<u64> = (4..=7).map(|v| ledger.primary(v)).collect();
    let total = ledger.total();
    outcome(
        primary == [2, 2, 3, 3] && total <= 42,
        format!("primary(v4..v7) = {primary:?}, total tokens {total} <= 42"),
    )
}

fn integer_system() -> Outcome {
    let (code, report) = run_cli(&["lp-solutions"]);
    let mut got: Vec<(u64, u64, u64)> = report["outputs"]["solutions"]
        .as_array()
        .cloned()
        .unwrap_or_default()
        .iter()
        .map(|t| (t[0].as_u64().unwrap(), t[1].as_u64().unwrap(), t[2].as_u64().unwrap()))
        .collect();
    got.sort_unstable();
    let mut want = vec![(4, 4, 0), (5, 2, 1), (4, 3, 1), (5, 1, 2), (3, 2, 2), (4, 2, 2)];
    want.sort_unstable();
    outcome(code == 0 && got == want, format!("{} solutions {got:?}", got.len()))
}

fn constant() -> Outcome {
    let f = tight_bound_min_degree_formula();
    outcome(
        f == 3_292_872 && TIGHT_BOUND_MIN_DEGREE == f,
        format!("6 * (331*2 + 10*C(331,2) + 2000) = {f}"),
    )
}

fn bound_sweep() -> Outcome {
    let (mut checked, mut skipped, mut violations) = (0, 0, Vec::new());
    let mut worst = (0usize, 1usize);
    for i in 0..500u64 {
        let n = 2 + (i % 59) as u32;
        let attach = if i % 10 == 9 { 1 } else { 2 };
        let g = random_2degenerate(n, attach, 0x5eed_0000 + i).unwrap();
        let delta = g.max_degree();
        if delta <= 1 {
            skipped += 1;
            continue;
        }
        let sq = square(&g);
        let omega = max_clique_with_budget(&sq, Some(100_000_000)).unwrap().size;
        let sq_deg = degeneracy(&sq).unwrap();
        checked += 1;
        if omega * worst.1 > worst.0 * delta {
            worst = (omega, delta);
        }
        if omega > (3 * delta - 3).min(5 * delta / 2 + 72) || sq_deg > 3 * delta - 4 {
            violations.push((i, delta, omega, sq_deg));
        }
    }
    outcome(
        violations.is_empty() && checked + skipped == 500,
        format!(
            "{checked} checked, {skipped} with max degree <= 1 skipped, {} violations, max omega/Delta = {}/{}",
            violations.len(),
            worst.0,
            worst.1
        ),
    )
}

fn gnp(rng: &mut ChaCha8Rng, n: u32) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.add_vertex(v);
        for u in 0..v {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut clique_bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=CLIQUE_ORACLE_LIMIT as u32);
        let g = gnp(&mut rng, n);
        if max_clique(&g).unwrap().size != max_clique_oracle(&g).unwrap().size {
            clique_bad += 1;
        }
    }
    let mut mad_bad = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let g = gnp(&mut rng, n);
        if mad(&g).unwrap().value() != mad_oracle(&g).unwrap().value() {
            mad_bad += 1;
        }
    }
    outcome(
        clique_bad == 0 && mad_bad == 0,
        format!("clique mismatches {clique_bad}/500, mad mismatches {mad_bad}/300"),
    )
}

fn niceness() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for d in [8, 12, 16] {
        let t = build_tight(d).unwrap();
        let s = &t.clique_witness;
        let x = extract(&t.graph, s, d).unwrap();
        let r = verify_nice(&x.g_star, &x.s_star, &x.sigma_star);
        let flags = r.clique_in_square && r.independent && r.two_degenerate_order && r.consecutive;
        let subset = x.s_star.is_subset(s);
        let touching = x.g_star.edges().all(|(u, v)| x.s_star.contains(&u) || x.s_star.contains(&v));
        let tokens = x.ledger.total() <= 6 * s.len() as u64;
        pass &= flags && subset && touching && tokens;
        parts.push(format!(
            "D={d}: nice={flags} |S*|={} tokens={}<={}",
            x.s_star.len(),
            x.ledger.total(),
            6 * s.len()
        ));
    }
    outcome(pass, parts.join("; "))
}

/// Runs with `|T*| = 6`: the six-hub family, then random graphs.
fn counting_identity() -> Outcome {
    let mut runs = Vec::new();
    for (k, d, extras) in common::six_hub_cases() {
        let (g, s) = common::six_hub(k, &extras);
        let a = analyse(&g, &s, d).unwrap();
        if let Some(c) = a.pairs.counting {
            runs.push((format!("six-hub k={k} D={d}"), c));
        }
    }
    let family = runs.len();
    for n in [40u32, 60] {
        for seed in 0..3000u64 {
            let g = random_2degenerate(n, 2, seed).unwrap();
            let s = max_clique(&square(&g)).unwrap().members;
            let delta = g.max_degree() as u32;
            for d in [delta, delta.max(20), delta + 40] {
                if let Ok(a) = analyse(&g, &s, d) {
                    if let Some(c) = a.pairs.counting {
                        runs.push((format!("random n={n} seed={seed} D={d}"), c));
                    }
                }
            }
        }
    }
    let short_fail: Vec<&String> = runs.iter().filter(|(_, c)| !c.short_holds).map(|(n, _)| n).collect();
    let general_fail = runs.iter().filter(|(_, c)| !c.general_holds).count();
    let outside_regime = runs.iter().filter(|(_, c)| !c.short_form_applies).count();
    outcome(
        family > 0 && short_fail.is_empty(),
        format!(
            "{} runs ({family} six-hub); short form differs on {} {:?}; {outside_regime} runs have outside \
             vertices with too few T* neighbours; general form differs on {general_fail}",
            runs.len(),
            short_fail.len(),
            short_fail
        ),
    )
}

type Criterion = (u32, &'static str, fn() -> Outcome);

/// Criteria that cannot hold on every input; see the project notes.
const EXPECTED_FAILURES: &[u32] = &[8];

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "tight construction reproduction", tight_reproduction),
        (2, "token trace", token_trace),
        (3, "integer system enumeration", integer_system),
        (4, "constant check", constant),
        (5, "random bound sweep", bound_sweep),
        (6, "oracle equivalence", oracle_equivalence),
        (7, "niceness on tight instances", niceness),
        (8, "counting identity", counting_identity),
    ];
    let mut unexpected = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let o = f();
        let secs = start.elapsed().as_secs_f64();
        let expected_fail = EXPECTED_FAILURES.contains(&id);
        let tag = match (o.pass, expected_fail) {
            (true, false) => "PASS",
            (true, true) => "PASS (listed as expected failure)",
            (false, true) => "FAIL (expected)",
            (false, false) => "FAIL",
        };
        if !o.pass && !expected_fail {
            unexpected += 1;
        }
        println!("criterion {id} {name}: {tag} [{secs:.2}s] {}", o.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
