//! The `S* / T* / R*` partition and the contracted multigraph `H*`.
//!
//! `T*` holds the vertices placed after `S*` in `σ*` that see `S*`; `R*` is
//! everything else. Each `S*` vertex with exactly two `T*` neighbours becomes
//! one `H*` edge between them. `S*` vertices with any other number of `T*`
//! neighbours are listed as irregular instead of being contracted.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagnostics::{int, DiagnosticRow, Rational, Relation};
use crate::error::{Error, Result};
use crate::graph::{Graph, Label, Multigraph, VertexOrder, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub s_star: VertexSet,
    pub t_star: VertexSet,
    pub r_star: VertexSet,
}

pub fn partition(g_star: &Graph, s_star: &VertexSet, sigma_star: &VertexOrder) -> Result<Partition> {
    sigma_star.check_for(g_star)?;
    if !sigma_star.is_consecutive(s_star) {
        return Err(Error::Precondition("S* is not consecutive in the order".into()));
    }
    let last = s_star.iter().filter_map(|&v| sigma_star.position(v)).max();
    let t_star: VertexSet = match last {
        None => VertexSet::new(),
        Some(last) => sigma_star.as_slice()[last + 1..]
            .iter()
            .copied()
            .filter(|&v| !g_star.neighbors(v).is_disjoint(s_star))
            .collect(),
    };
    let r_star = g_star
        .vertices()
        .filter(|v| !s_star.contains(v) && !t_star.contains(v))
        .collect();
    Ok(Partition { s_star: s_star.clone(), t_star, r_star })
}

#[derive(Debug, Clone, Serialize)]
pub struct HStar {
    pub multigraph: Multigraph,
    /// `S*` vertex -> the `T*` pair its contraction produced.
    pub edge_source: BTreeMap<Label, (Label, Label)>,
    /// `S*` vertices with a number of `T*` neighbours other than two.
    pub irregular: Vec<Label>,
}

impl HStar {
    pub fn t_star(&self) -> &VertexSet {
        self.multigraph.vertices()
    }

    /// `H*` edges meeting neither `a` nor `b`.
    pub fn edges_avoiding(&self, a: Label, b: Label) -> u64 {
        let m = &self.multigraph;
        m.edge_count() + u64::from(m.multiplicity(a, b)) - m.degree(a) - m.degree(b)
    }
}

pub fn build_hstar(g_star: &Graph, p: &Partition) -> HStar {
    let mut multigraph = Multigraph::new(p.t_star.iter().copied());
    let mut edge_source = BTreeMap::new();
    let mut irregular = Vec::new();
    for &v in &p.s_star {
        let ts: Vec<Label> = g_star
            .neighbors(v)
            .iter()
            .copied()
            .filter(|w| p.t_star.contains(w))
            .collect();
        if let [a, b] = ts[..] {
            multigraph.add_edge(a, b).expect("distinct neighbours");
            edge_source.insert(v, (a, b));
        } else {
            irregular.push(v);
        }
    }
    HStar { multigraph, edge_source, irregular }
}

/// Bounds on `H*` in terms of `s* = |S*|` and `D`.
///
/// Degrees and edge counts are taken with multiplicity. Pair rows run over
/// every unordered pair of `T*` vertices in label order.
pub fn claim_diagnostics(h: &HStar, s_star_size: usize, d: u32) -> Vec<DiagnosticRow> {
    let m = &h.multigraph;
    let s = int(s_star_size);
    let dd = int(d);
    let edges = m.edge_count();
    let ts: Vec<Label> = m.vertices().iter().copied().collect();
    let mut rows = Vec::new();

    for ((u, v), mu) in m.pairs() {
        let covered = m.degree(u) + m.degree(v) - u64::from(mu);
        let subject = format!("uv={u}-{v}");
        rows.push(DiagnosticRow::new(
            "off_edge_count",
            subject.clone(),
            int(edges - covered),
            Relation::Le,
            dd - 2,
        ));
        rows.push(DiagnosticRow::new(
            "edge_degree_sum",
            subject,
            int(covered),
            Relation::Ge,
            s - dd + 2,
        ));
    }

    for &v in &ts {
        let nbrs = m.neighbors(v);
        let deg = m.degree(v);
        let subject = format!("v={v}");
        rows.push(DiagnosticRow::new(
            "neighbor_count",
            subject.clone(),
            int(nbrs.len()),
            Relation::Ge,
            int(2),
        ));
        for &w in &nbrs {
            rows.push(DiagnosticRow::new(
                "neighbor_multiplicity_sum",
                format!("v={v},w={w}"),
                int(deg - u64::from(m.multiplicity(v, w))),
                Relation::Ge,
                s - dd * 2 + 2,
            ));
        }
        if nbrs.len() >= 2 {
            let k = int(nbrs.len());
            rows.push(DiagnosticRow::new(
                "degree_from_neighborhood",
                subject.clone(),
                int(deg),
                Relation::Ge,
                k * (s - dd * 2 + 2) / (k - 1),
            ));
        }
        rows.push(DiagnosticRow::new(
            "degree_upper_balance",
            subject.clone(),
            int(deg),
            Relation::Le,
            (dd * 25 - s * 9 - 50) / 3,
        ));
        rows.push(DiagnosticRow::new(
            "degree_lower_balance",
            subject,
            int(deg),
            Relation::Ge,
            (s * 3 - dd * 5 + 10) / 3,
        ));
    }

    let simple: Vec<(Label, Label)> = m.pairs().map(|(e, _)| e).collect();
    for (i, &(v, w)) in simple.iter().enumerate() {
        for &(x, y) in &simple[i + 1..] {
            if v == x || v == y || w == x || w == y {
                continue;
            }
            let cross = [(v, x), (v, y), (w, x), (w, y)]
                .iter()
                .map(|&(a, b)| u64::from(m.multiplicity(a, b)))
                .sum::<u64>();
            rows.push(DiagnosticRow::new(
                "disjoint_edge_cross_multiplicity",
                format!("vw={v}-{w},xy={x}-{y}"),
                int(cross),
                Relation::Ge,
                s - dd * 2 + 2,
            ));
        }
    }

    for (i, &a) in ts.iter().enumerate() {
        for &b in &ts[i + 1..] {
            let subject = format!("ij={a}-{b}");
            rows.push(DiagnosticRow::new(
                "pair_multiplicity_lower",
                subject.clone(),
                int(m.multiplicity(a, b)),
                Relation::Ge,
                (s * 87 - dd * 217 + 374) / 3,
            ));
            rows.push(DiagnosticRow::new(
                "pair_disjoint_lower",
                subject,
                int(h.edges_avoiding(a, b)),
                Relation::Ge,
                s * 6 - dd * 14 + 28,
            ));
        }
    }

    rows.push(DiagnosticRow::new(
        "max_degree",
        "all",
        int(m.max_degree()),
        Relation::Le,
        dd,
    ));
    rows.push(DiagnosticRow::new(
        "degree_capacity",
        "all",
        dd * int(ts.len()),
        Relation::Ge,
        int(2 * edges),
    ));
    rows.push(DiagnosticRow::new(
        "t_star_size_upper",
        "all",
        int(ts.len()),
        Relation::Le,
        int(6),
    ));
    rows.push(DiagnosticRow::new(
        "t_star_size_lower",
        "all",
        int(ts.len()),
        Relation::Ge,
        int(5),
    ));
    rows
}

/// Degree conditions between the three parts of the partition in `G*`.
pub fn partition_diagnostics(g_star: &Graph, p: &Partition, d: u32) -> Vec<DiagnosticRow> {
    let count = |v: Label, side: &VertexSet| g_star.neighbors(v).intersection(side).count();
    let mut rows = Vec::new();
    for &v in &p.s_star {
        rows.push(DiagnosticRow::new(
            "s_star_t_neighbors",
            format!("v={v}"),
            int(count(v, &p.t_star)),
            Relation::Eq,
            int(2),
        ));
    }
    for &v in &p.t_star {
        rows.push(DiagnosticRow::new(
            "t_star_s_neighbors",
            format!("v={v}"),
            int(count(v, &p.s_star)),
            Relation::Ge,
            Rational::new(i64::from(d), 2) - 57,
        ));
    }
    for &v in &p.r_star {
        rows.push(DiagnosticRow::new(
            "r_star_s_neighbors",
            format!("v={v}"),
            int(count(v, &p.s_star)),
            Relation::Le,
            int(2),
        ));
    }
    rows
}
