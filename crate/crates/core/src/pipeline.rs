//! Full chain from a graph and a square clique to the `H*` / `J*` report.

use serde::Serialize;

use crate::diagnostics::DiagnosticRow;
use crate::error::{Result, StageExt};
use crate::extraction::{extract_with, token_diagnostics, verify_nice, ExtractionResult, NicenessReport, TokenRule};
use crate::graph::{Graph, Label, VertexSet};
use crate::hstar::{build_hstar, claim_diagnostics, partition, partition_diagnostics, HStar, Partition};
use crate::pairs::{build_jstar, jstar_diagnostics, pair_diagnostics, pair_statistics, JStar, PairStatistics};

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub d: u32,
    pub s: VertexSet,
    pub extraction: ExtractionResult,
    pub niceness: NicenessReport,
    pub partition: Partition,
    pub hstar: HStar,
    pub pairs: PairStatistics,
    /// Absent when `T*` is empty.
    pub jstar: Option<JStar>,
    pub diagnostics: Vec<DiagnosticRow>,
}

impl Analysis {
    pub fn violated(&self) -> impl Iterator<Item = &DiagnosticRow> {
        self.diagnostics.iter().filter(|r| !r.holds)
    }
}

/// Same as [`analyse_with`] using the default token rule.
pub fn analyse(g: &Graph, s: &VertexSet, d: u32) -> Result<Analysis> {
    analyse_with(g, s, d, TokenRule::default())
}

pub fn analyse_with(g: &Graph, s: &VertexSet, d: u32, rule: TokenRule) -> Result<Analysis> {
    let extraction = extract_with(g, s, d, rule).stage("extract")?;
    let niceness = verify_nice(&extraction.g_star, &extraction.s_star, &extraction.sigma_star);
    let p = partition(&extraction.g_star, &extraction.s_star, &extraction.sigma_star).stage("partition")?;
    let hstar = build_hstar(&extraction.g_star, &p);
    let pairs = pair_statistics(&extraction.pruned, &extraction.g_star, s, &p).stage("pair_statistics")?;
    let jstar = if p.t_star.is_empty() {
        None
    } else {
        Some(build_jstar(&extraction.pruned, s, &p).stage("jstar")?)
    };

    let s_star_size = p.s_star.len();
    let mut diagnostics = token_diagnostics(&extraction, s, d);
    diagnostics.extend(partition_diagnostics(&extraction.g_star, &p, d));
    diagnostics.extend(claim_diagnostics(&hstar, s_star_size, d));
    diagnostics.extend(pair_diagnostics(&pairs, s_star_size, d));
    if let Some(j) = &jstar {
        diagnostics.extend(jstar_diagnostics(j));
    }

    Ok(Analysis {
        d,
        s: s.clone(),
        extraction,
        niceness,
        partition: p,
        hstar,
        pairs,
        jstar,
        diagnostics,
    })
}

/// `T*` in ascending label order, for reports.
pub fn t_star_labels(a: &Analysis) -> Vec<Label> {
    a.partition.t_star.iter().copied().collect()
}
