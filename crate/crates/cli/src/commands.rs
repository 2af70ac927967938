use std::path::Path;

use anyhow::{bail, Result};
use serde::Serialize;
use serde_json::json;
use sqclique::constructions::Block;
use sqclique::extraction::{token_diagnostics, Classification, TokenLedger};
use sqclique::graph::format_vertex_list;
use sqclique::pairs::PairRow;
use sqclique::{
    analyse_with, build_tight, degeneracy, degeneracy_ordering, enumerate_integer_solutions,
    extract_with, mad, max_clique_with_budget, random_2degenerate, square, tight_clique_size,
    verify_nice, Analysis, DiagnosticRow, Error, Label, Rational, TokenRule, VertexSet,
};

use crate::report::{sidecar_path, write_file, RunReport, SCHEMA_VERSION};
use crate::{CliqueRun, Command};

pub enum Status {
    Ok,
    /// A checked property did not hold; the report has already been written.
    Failed(String),
}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>().map(Error::root) {
        Some(Error::BudgetExhausted { .. }) => 3,
        _ => 2,
    }
}

pub fn run(command: Command) -> Result<Status> {
    match command {
        Command::GenTight { d, output, clique_out, report } => gen_tight(d, &output, clique_out.as_deref(), report.as_deref()),
        Command::GenRandom { n, attach, seed, output, report } => gen_random(n, attach, seed, &output, report.as_deref()),
        Command::Square { input, output, report } => square_cmd(&input, &output, report.as_deref()),
        Command::Clique { input, square, node_budget, output, report } => {
            clique_cmd(&input, square, node_budget, output.as_deref(), report.as_deref())
        }
        Command::Degeneracy { input, report } => degeneracy_cmd(&input, report.as_deref()),
        Command::Mad { input, report } => mad_cmd(&input, report.as_deref()),
        Command::ExtractNice { run } => extract_cmd(&run),
        Command::Hstar { run } => analysis_cmd("hstar", &run),
        Command::Pipeline { run } => analysis_cmd("pipeline", &run),
        Command::VerifyTight { d, node_budget, report } => verify_tight(&d, node_budget, report.as_deref()),
        Command::BoundSweep { n, trials, seed, attach, node_budget, report } => {
            bound_sweep(n, trials, seed, attach, node_budget, report.as_deref())
        }
        Command::LpSolutions { report } => lp_solutions(report.as_deref()),
    }
}

#[derive(Serialize)]
struct TightMeta<'a> {
    schema_version: u32,
    d: u32,
    k: u32,
    r: u32,
    hubs: [Label; 5],
    clique_witness: &'a VertexSet,
    blocks: &'a [Block],
}

fn gen_tight(d: u32, output: &Path, clique_out: Option<&Path>, report: Option<&Path>) -> Result<Status> {
    let mut rep = RunReport::new("gen-tight", json!({ "d": d }));
    let t = rep.time("build", || build_tight(d))?;
    write_file(output, &t.graph.to_text())?;
    let meta = TightMeta {
        schema_version: SCHEMA_VERSION,
        d: t.d,
        k: t.k,
        r: t.r,
        hubs: t.hubs,
        clique_witness: &t.clique_witness,
        blocks: &t.blocks,
    };
    write_file(&sidecar_path(output), &(serde_json::to_string_pretty(&meta)? + "\n"))?;
    if let Some(p) = clique_out {
        write_file(p, &format_vertex_list(&t.clique_witness))?;
    }
    rep.set_outputs(json!({
        "vertices": t.graph.vertex_count(),
        "edges": t.graph.edge_count(),
        "max_degree": t.graph.max_degree(),
        "clique_witness_size": t.clique_witness.len(),
        "expected_clique_number": tight_clique_size(d),
    }))?;
    rep.emit(report)?;
    Ok(Status::Ok)
}

fn gen_random(n: u32, attach: u32, seed: u64, output: &Path, report: Option<&Path>) -> Result<Status> {
    let mut rep = RunReport::new("gen-random", json!({ "n": n, "attach": attach, "seed": seed }));
    let g = rep.time("build", || random_2degenerate(n, attach, seed))?;
    write_file(output, &g.to_text())?;
    rep.set_outputs(json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "max_degree": g.max_degree(),
    }))?;
    rep.emit(report)?;
    Ok(Status::Ok)
}

fn square_cmd(input: &Path, output: &Path, report: Option<&Path>) -> Result<Status> {
    let mut rep = RunReport::new("square", json!({}));
    let g = rep.read_graph(input)?;
    let sq = rep.time("square", || square(&g));
    write_file(output, &sq.to_text())?;
    rep.set_outputs(json!({
        "vertices": sq.vertex_count(),
        "edges": sq.edge_count(),
        "max_degree": sq.max_degree(),
    }))?;
    rep.emit(report)?;
    Ok(Status::Ok)
}

fn clique_cmd(
    input: &Path,
    of_square: bool,
    node_budget: Option<u64>,
    output: Option<&Path>,
    report: Option<&Path>,
) -> Result<Status> {
    let mut rep = RunReport::new("clique", json!({ "square": of_square, "node_budget": node_budget }));
    let mut g = rep.read_graph(input)?;
    if of_square {
        g = rep.time("square", || square(&g));
    }
    let r = rep.time("clique", || max_clique_with_budget(&g, node_budget))?;
    if let Some(p) = output {
        write_file(p, &format_vertex_list(&r.members))?;
    }
    rep.set_outputs(&r)?;
    rep.emit(report)?;
    Ok(Status::Ok)
}

fn degeneracy_cmd(input: &Path, report: Option<&Path>) -> Result<Status> {
    let mut rep = RunReport::new("degeneracy", json!({}));
    let g = rep.read_graph(input)?;
    let (k, order) = rep.time("peel", || degeneracy_ordering(&g))?;
    rep.set_outputs(json!({ "degeneracy": k, "order": order }))?;
    rep.emit(report)?;
    Ok(Status::Ok)
}

fn mad_cmd(input: &Path, report: Option<&Path>) -> Result<Status> {
    let mut rep = RunReport::new("mad", json!({}));
    let g = rep.read_graph(input)?;
    let density = rep.time("mad", || mad(&g))?;
    rep.set_outputs(&density)?;
    rep.emit(report)?;
    Ok(Status::Ok)
}

fn clique_run_params(run: &CliqueRun, d: u32) -> serde_json::Value {
    json!({ "d": d, "secondary_threshold": run.secondary_threshold })
}

#[derive(Serialize)]
struct ClassSizes {
    big: usize,
    basic: usize,
    nonbasic: usize,
    w: usize,
}

impl From<&Classification> for ClassSizes {
    fn from(c: &Classification) -> Self {
        ClassSizes { big: c.big.len(), basic: c.basic.len(), nonbasic: c.nonbasic.len(), w: c.w.len() }
    }
}

fn extract_cmd(run: &CliqueRun) -> Result<Status> {
    let mut rep = RunReport::new("extract-nice", json!({}));
    let g = rep.read_graph(&run.input)?;
    let s = rep.read_clique(&run.clique)?;
    let d = run.d.unwrap_or(g.max_degree() as u32);
    rep.parameters = clique_run_params(run, d);
    let rule = TokenRule { secondary_threshold: run.secondary_threshold };
    let x = rep.time("extract", || extract_with(&g, &s, d, rule))?;
    let niceness = rep.time("verify_nice", || verify_nice(&x.g_star, &x.s_star, &x.sigma_star));

    #[derive(Serialize)]
    struct Out<'a> {
        clique_size: usize,
        ledger: &'a TokenLedger,
        token_total: u64,
        classification_sizes: ClassSizes,
        classification: &'a Classification,
        s_star: &'a VertexSet,
        removed_from_clique: usize,
        sigma_star: &'a sqclique::VertexOrder,
        g_star_edges: usize,
        niceness: sqclique::extraction::NicenessReport,
        diagnostics: Vec<DiagnosticRow>,
    }
    rep.set_outputs(Out {
        clique_size: s.len(),
        ledger: &x.ledger,
        token_total: x.ledger.total(),
        classification_sizes: (&x.classification).into(),
        classification: &x.classification,
        s_star: &x.s_star,
        removed_from_clique: x.removed_count(&s),
        sigma_star: &x.sigma_star,
        g_star_edges: x.g_star.edge_count(),
        niceness,
        diagnostics: token_diagnostics(&x, &s, d),
    })?;
    rep.emit(run.report.as_deref())?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct PartitionSizes {
    s_star: usize,
    t_star: usize,
    r_star: usize,
}

fn pair_table(a: &Analysis) -> Vec<&PairRow> {
    a.pairs.pairs.iter().collect()
}

fn analysis_cmd(command: &'static str, run: &CliqueRun) -> Result<Status> {
    let mut rep = RunReport::new(command, json!({}));
    let g = rep.read_graph(&run.input)?;
    let s = rep.read_clique(&run.clique)?;
    let d = run.d.unwrap_or(g.max_degree() as u32);
    rep.parameters = clique_run_params(run, d);
    let rule = TokenRule { secondary_threshold: run.secondary_threshold };
    let a = rep.time("analyse", || analyse_with(&g, &s, d, rule))?;
    let p = &a.partition;
    let sizes = PartitionSizes { s_star: p.s_star.len(), t_star: p.t_star.len(), r_star: p.r_star.len() };
    let violated = a.violated().count();
    let jstar = a.jstar.as_ref().map(|j| {
        json!({
            "x": j.x,
            "y": j.y,
            "z": j.z,
            "below_three": j.below_three,
            "bipartite": j.bipartite,
            "two_degenerate": j.two_degenerate,
            "copies": j.copies,
        })
    });
    let outputs = if command == "hstar" {
        json!({
            "partition_sizes": sizes,
            "partition": p,
            "hstar": a.hstar,
            "pairs": pair_table(&a),
            "outside": a.pairs.outside,
            "s_in_t_star": a.pairs.s_in_t_star,
            "counting": a.pairs.counting,
            "jstar": jstar,
            "diagnostics": a.diagnostics,
            "violated_rows": violated,
        })
    } else {
        json!({
            "clique_size": s.len(),
            "classification_sizes": ClassSizes::from(&a.extraction.classification),
            "token_total": a.extraction.ledger.total(),
            "niceness": a.niceness,
            "extraction": a.extraction,
            "partition_sizes": sizes,
            "partition": p,
            "hstar": a.hstar,
            "pairs": pair_table(&a),
            "outside": a.pairs.outside,
            "s_in_t_star": a.pairs.s_in_t_star,
            "counting": a.pairs.counting,
            "jstar": jstar,
            "diagnostics": a.diagnostics,
            "violated_rows": violated,
        })
    };
    rep.outputs = outputs;
    rep.emit(run.report.as_deref())?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct TightCheck {
    d: u32,
    vertices: usize,
    max_degree: usize,
    degeneracy: usize,
    clique_number: usize,
    expected_clique_number: u32,
    nodes_explored: u64,
    pass: bool,
}

fn verify_tight(ds: &[u32], node_budget: u64, report: Option<&Path>) -> Result<Status> {
    let mut rep = RunReport::new("verify-tight", json!({ "d": ds, "node_budget": node_budget }));
    let start = std::time::Instant::now();
    let mut checks = Vec::new();
    for &d in ds {
        let t = build_tight(d)?;
        let sq = square(&t.graph);
        let c = max_clique_with_budget(&sq, Some(node_budget))?;
        let k = degeneracy(&t.graph)?;
        let expected = tight_clique_size(d);
        checks.push(TightCheck {
            d,
            vertices: t.graph.vertex_count(),
            max_degree: t.graph.max_degree(),
            degeneracy: k,
            clique_number: c.size,
            expected_clique_number: expected,
            nodes_explored: c.nodes_explored,
            pass: t.graph.max_degree() == d as usize && k == 2 && c.size == expected as usize,
        });
    }
    rep.timing.insert("verify", start.elapsed().as_secs_f64() * 1e3);
    let failed: Vec<u32> = checks.iter().filter(|c| !c.pass).map(|c| c.d).collect();
    rep.set_outputs(json!({ "checks": checks, "all_pass": failed.is_empty() }))?;
    rep.emit(report)?;
    if failed.is_empty() {
        Ok(Status::Ok)
    } else {
        Ok(Status::Failed(format!("tight construction check failed for D in {failed:?}")))
    }
}

#[derive(Serialize)]
struct Violation {
    trial: u32,
    seed: u64,
    max_degree: usize,
    clique_number: usize,
    square_degeneracy: usize,
}

fn bound_sweep(
    n: u32,
    trials: u32,
    seed: u64,
    attach: u32,
    node_budget: u64,
    report: Option<&Path>,
) -> Result<Status> {
    if trials == 0 {
        bail!(Error::Parameter("trials must be at least 1".into()));
    }
    let mut rep = RunReport::new(
        "bound-sweep",
        json!({ "n": n, "trials": trials, "seed": seed, "attach": attach, "node_budget": node_budget }),
    );
    let start = std::time::Instant::now();
    let (mut checked, mut small_degree, mut budget_skipped) = (0u32, 0u32, 0u32);
    let mut violations = Vec::new();
    let mut max_ratio: Option<Rational> = None;
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add(u64::from(trial));
        let g = random_2degenerate(n, attach, trial_seed)?;
        let delta = g.max_degree();
        // the bounds are stated for D >= 2
        if delta <= 1 {
            small_degree += 1;
            continue;
        }
        let sq = square(&g);
        let omega = match max_clique_with_budget(&sq, Some(node_budget)) {
            Ok(c) => c.size,
            Err(Error::BudgetExhausted { nodes }) => {
                eprintln!("warning: trial {trial} skipped, clique search stopped after {nodes} nodes");
                budget_skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let sq_degeneracy = degeneracy(&sq)?;
        checked += 1;
        let ratio = Rational::new(omega as i64, delta as i64);
        max_ratio = Some(max_ratio.map_or(ratio, |m| m.max(ratio)));
        let omega_bound = (3 * delta - 3).min(5 * delta / 2 + 72);
        if omega > omega_bound || sq_degeneracy > 3 * delta - 4 {
            violations.push(Violation {
                trial,
                seed: trial_seed,
                max_degree: delta,
                clique_number: omega,
                square_degeneracy: sq_degeneracy,
            });
        }
    }
    rep.timing.insert("sweep", start.elapsed().as_secs_f64() * 1e3);
    let notes: Vec<String> = (small_degree > 0)
        .then(|| format!("{small_degree} trials with maximum degree at most 1 were skipped"))
        .into_iter()
        .collect();
    rep.set_outputs(json!({
        "checked": checked,
        "skipped_small_degree": small_degree,
        "skipped_budget": budget_skipped,
        "violations": violations,
        "max_ratio": max_ratio.map(|r| r.to_string()),
        "notes": notes,
    }))?;
    rep.emit(report)?;
    if violations.is_empty() {
        Ok(Status::Ok)
    } else {
        Ok(Status::Failed(format!("{} bound violations", violations.len())))
    }
}

fn lp_solutions(report: Option<&Path>) -> Result<Status> {
    let mut rep = RunReport::new("lp-solutions", json!({}));
    let sols = rep.time("enumerate", enumerate_integer_solutions);
    rep.set_outputs(json!({ "solutions": sols, "count": sols.len() }))?;
    rep.emit(report)?;
    Ok(Status::Ok)
}
