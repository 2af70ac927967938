//! Pair statistics over a six-vertex `T*`, the counting identity for the
//! clique vertices left outside `S*`, and the bipartite graph `J*`.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::degeneracy::degeneracy;
use crate::diagnostics::{int, DiagnosticRow, Relation};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Label, VertexSet};
use crate::hstar::Partition;

/// Data attached to one unordered pair `{i, j}` of `T*` vertices.
#[derive(Debug, Clone, Serialize)]
pub struct PairRow {
    pub i: Label,
    pub j: Label,
    /// `S*` vertices adjacent to both `i` and `j`.
    #[serde(skip)]
    pub v_ij: VertexSet,
    /// `S*` vertices adjacent to neither.
    #[serde(skip)]
    pub d_set: VertexSet,
    /// `S \ S*` vertices adjacent to neither in `G`.
    #[serde(skip)]
    pub s_set: VertexSet,
    pub mu_ij: usize,
    pub d_ij: usize,
    pub s_ij: usize,
    /// `(v, |R_v|)` for `v` in `V_ij`, where `R_v` is the set of `R*`
    /// neighbours of `v` that see some vertex of the `D_ij` set.
    pub reach: Vec<(Label, usize)>,
}

/// The clique vertices outside `S*`, split by side and counted by their
/// number of `T*` neighbours in `G`.
#[derive(Debug, Clone, Serialize)]
pub struct OutsideCounts {
    /// `S \ S*` vertex -> number of its `G`-neighbours in `T*`.
    pub t_neighbors: BTreeMap<Label, usize>,
    /// `U = S ∩ T*`.
    pub u: VertexSet,
    /// `W = S ∩ R*`.
    pub w: VertexSet,
    /// `u_by_count[c]` = number of `U` vertices with `c` `T*` neighbours.
    pub u_by_count: Vec<u64>,
    /// `w_by_count[c]` = number of `W` vertices with `c` `T*` neighbours.
    pub w_by_count: Vec<u64>,
}

impl OutsideCounts {
    /// `alpha[i]` for `i` in `1..=5`: `U` vertices with `i` `T*` neighbours.
    pub fn alpha(&self, i: usize) -> u64 {
        self.u_by_count.get(i).copied().unwrap_or(0)
    }

    /// `beta[i]` for `i` in `1..=5`: `W` vertices with `i + 1` `T*` neighbours.
    pub fn beta(&self, i: usize) -> u64 {
        self.w_by_count.get(i + 1).copied().unwrap_or(0)
    }
}

/// Both sides of `sum s_ij = 6(a1+b1) + 3(a2+b2) + (a3+b3)`, plus the
/// general count it specialises.
///
/// A `U` vertex misses `5 - c` vertices of `T* \ {u}` and a `W` vertex misses
/// `6 - c`, so in general each contributes `C(missed, 2)`. The short form
/// drops the terms for `U` vertices with no `T*` neighbour and `W` vertices
/// with fewer than two, so it only applies when those classes are empty.
#[derive(Debug, Clone, Serialize)]
pub struct CountingIdentity {
    pub pair_sum: u64,
    pub general_form: u64,
    pub short_form: u64,
    pub short_form_applies: bool,
    pub general_holds: bool,
    pub short_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairStatistics {
    pub t_star: Vec<Label>,
    pub pairs: Vec<PairRow>,
    pub outside: OutsideCounts,
    /// `|S ∩ T*|`.
    pub s_in_t_star: usize,
    /// Present when `|T*| = 6`.
    pub counting: Option<CountingIdentity>,
}

fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `g` is the graph `S` is a square clique of (possibly pruned); `g_star`
/// is the graph the partition was built from.
pub fn pair_statistics(g: &Graph, g_star: &Graph, s: &VertexSet, p: &Partition) -> Result<PairStatistics> {
    g.check_subset(s)?;
    if !p.s_star.is_subset(s) {
        return Err(Error::Precondition("S* is not contained in S".into()));
    }
    let t_star: Vec<Label> = p.t_star.iter().copied().collect();
    let sees = |v: Label, t: Label| g_star.has_edge(v, t);

    let mut pairs = Vec::new();
    for (a, &i) in t_star.iter().enumerate() {
        for &j in &t_star[a + 1..] {
            let v_ij: VertexSet = p.s_star.iter().copied().filter(|&v| sees(v, i) && sees(v, j)).collect();
            let d_set: VertexSet =
                p.s_star.iter().copied().filter(|&v| !sees(v, i) && !sees(v, j)).collect();
            let s_set: VertexSet = s
                .iter()
                .copied()
                .filter(|v| !p.s_star.contains(v) && v != &i && v != &j)
                .filter(|&v| !g.has_edge(v, i) && !g.has_edge(v, j))
                .collect();
            let reach = v_ij
                .iter()
                .map(|&v| {
                    let r = g_star
                        .neighbors(v)
                        .iter()
                        .filter(|w| p.r_star.contains(w))
                        .filter(|&&w| !g_star.neighbors(w).is_disjoint(&d_set))
                        .count();
                    (v, r)
                })
                .collect();
            pairs.push(PairRow {
                i,
                j,
                mu_ij: v_ij.len(),
                d_ij: d_set.len(),
                s_ij: s_set.len(),
                v_ij,
                d_set,
                s_set,
                reach,
            });
        }
    }

    let mut t_neighbors = BTreeMap::new();
    let (mut u, mut w) = (VertexSet::new(), VertexSet::new());
    let (mut u_by_count, mut w_by_count) = (vec![0u64; 7], vec![0u64; 7]);
    for &v in s.iter().filter(|v| !p.s_star.contains(v)) {
        let c = g.neighbors(v).iter().filter(|x| p.t_star.contains(x)).count();
        t_neighbors.insert(v, c);
        if p.t_star.contains(&v) {
            u.insert(v);
            u_by_count[c.min(6)] += 1;
        } else {
            w.insert(v);
            w_by_count[c.min(6)] += 1;
        }
    }
    let outside = OutsideCounts { t_neighbors, u, w, u_by_count, w_by_count };
    let s_in_t_star = outside.u.len();

    let counting = (t_star.len() == 6).then(|| {
        let pair_sum: u64 = pairs.iter().map(|r| r.s_ij as u64).sum();
        let general_form = outside
            .t_neighbors
            .iter()
            .map(|(v, &c)| {
                let others = if outside.u.contains(v) { 5 } else { 6 };
                choose2((others as u64).saturating_sub(c as u64))
            })
            .sum();
        let o = &outside;
        let short_form =
            6 * (o.alpha(1) + o.beta(1)) + 3 * (o.alpha(2) + o.beta(2)) + (o.alpha(3) + o.beta(3));
        let short_form_applies = o.u_by_count[0] == 0 && o.w_by_count[0] == 0 && o.w_by_count[1] == 0;
        CountingIdentity {
            pair_sum,
            general_form,
            short_form,
            short_form_applies,
            general_holds: pair_sum == general_form,
            short_holds: pair_sum == short_form,
        }
    });

    Ok(PairStatistics { t_star, pairs, outside, s_in_t_star, counting })
}

pub fn pair_diagnostics(stats: &PairStatistics, s_star_size: usize, d: u32) -> Vec<DiagnosticRow> {
    let dd = int(d);
    let mut rows = Vec::new();
    for r in &stats.pairs {
        let subject = format!("ij={}-{}", r.i, r.j);
        rows.push(DiagnosticRow::new("pair_disjoint_upper", subject.clone(), int(r.d_ij), Relation::Le, dd - 2));
        rows.push(DiagnosticRow::new(
            "outside_pair_bound",
            subject,
            int(r.s_ij),
            Relation::Le,
            dd - 2 - int(r.d_ij),
        ));
        for &(v, reach) in &r.reach {
            rows.push(DiagnosticRow::new(
                "reach_lower",
                format!("ij={}-{},v={v}", r.i, r.j),
                int(reach),
                Relation::Ge,
                int(r.d_ij),
            ));
        }
    }
    for (&v, &c) in &stats.outside.t_neighbors {
        rows.push(DiagnosticRow::new("outside_t_neighbors", format!("v={v}"), int(c), Relation::Ge, int(2)));
    }
    if let Some(c) = &stats.counting {
        rows.push(DiagnosticRow::new(
            "outside_pair_total",
            "all",
            int(c.pair_sum),
            Relation::Le,
            dd * 15 - int(s_star_size) * 6 - 30,
        ));
        let d_sum: usize = stats.pairs.iter().map(|r| r.d_ij).sum();
        let mu_sum: usize = stats.pairs.iter().map(|r| r.mu_ij).sum();
        rows.push(DiagnosticRow::new("pair_disjoint_sum", "all", int(d_sum), Relation::Eq, int(6 * mu_sum)));
        let o = &stats.outside;
        let weighted = 3 * (o.alpha(2) + o.beta(2))
            + 5 * (o.alpha(3) + o.beta(3))
            + 6 * (o.alpha(4) + o.beta(4) + o.alpha(5) + o.beta(5));
        rows.push(DiagnosticRow::new("outside_weighted_count", "all", int(weighted), Relation::Gt, int(30)));
    }
    rows
}

/// `J*`: `W` and `T*` keep their edges between them, and each `u` in `U`
/// is split into itself (on the `T*` side) and a fresh copy `u*` that takes
/// over its edges into `T*` and gains the edge `u*u`.
#[derive(Debug, Clone, Serialize)]
pub struct JStar {
    #[serde(skip)]
    pub graph: Graph,
    /// `u -> u*`.
    pub copies: BTreeMap<Label, Label>,
    /// Left-side vertices with exactly 3, exactly 4 and at least 5 `T*`
    /// neighbours.
    pub x: u64,
    pub y: u64,
    pub z: u64,
    /// Left-side vertices with fewer than three `T*` neighbours.
    pub below_three: u64,
    pub bipartite: bool,
    pub two_degenerate: bool,
}

pub fn build_jstar(g: &Graph, s: &VertexSet, p: &Partition) -> Result<JStar> {
    if p.t_star.is_empty() {
        return Err(Error::Precondition("T* is empty".into()));
    }
    g.check_subset(s)?;
    let mut b = GraphBuilder::new();
    for &t in &p.t_star {
        b.add_vertex(t);
    }
    let mut fresh = g.fresh_label().max(p.t_star.iter().max().map_or(0, |m| m + 1));
    let mut copies = BTreeMap::new();
    let mut left = Vec::new();
    for &v in s.iter().filter(|v| !p.s_star.contains(v)) {
        let ts: Vec<Label> = g.neighbors(v).iter().copied().filter(|x| p.t_star.contains(x)).collect();
        let a = if p.t_star.contains(&v) {
            let copy = fresh;
            fresh += 1;
            copies.insert(v, copy);
            b.add_edge(copy, v)?;
            copy
        } else {
            b.add_vertex(v);
            v
        };
        for t in ts {
            b.add_edge(a, t)?;
        }
        left.push(a);
    }
    let graph = b.build();
    let (mut x, mut y, mut z, mut below_three) = (0, 0, 0, 0);
    for &a in &left {
        match graph.neighbors(a).len() {
            0..=2 => below_three += 1,
            3 => x += 1,
            4 => y += 1,
            _ => z += 1,
        }
    }
    let bipartite = is_bipartite(&graph);
    let two_degenerate = degeneracy(&graph)? <= 2;
    Ok(JStar { graph, copies, x, y, z, below_three, bipartite, two_degenerate })
}

pub fn jstar_diagnostics(j: &JStar) -> Vec<DiagnosticRow> {
    let (x, y, z) = (int(j.x), int(j.y), int(j.z));
    vec![
        DiagnosticRow::new("weighted_left_count", "all", x * 3 + y * 5 + z * 6, Relation::Gt, int(30)),
        DiagnosticRow::new("left_count", "all", x + y + z, Relation::Le, int(8)),
        DiagnosticRow::new("left_count_high", "all", y + z, Relation::Le, int(4)),
        DiagnosticRow::new("left_count_top", "all", z, Relation::Le, int(2)),
    ]
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side: BTreeMap<Label, bool> = BTreeMap::new();
    for start in g.vertices() {
        if side.contains_key(&start) {
            continue;
        }
        side.insert(start, false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let sv = side[&v];
            for &w in g.neighbors(v) {
                match side.get(&w) {
                    Some(&sw) if sw == sv => return false,
                    Some(_) => {}
                    None => {
                        side.insert(w, !sv);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    true
}

/// Non-negative integer `(x, y, z)` with `3x + 5y + 6z > 30`, `x + y + z <= 8`,
/// `y + z <= 4` and `z <= 2`, in lexicographic order.
pub fn enumerate_integer_solutions() -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for x in 0..=8 {
        for y in 0..=8 {
            for z in 0..=8 {
                if 3 * x + 5 * y + 6 * z > 30 && x + y + z <= 8 && y + z <= 4 && z <= 2 {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}
