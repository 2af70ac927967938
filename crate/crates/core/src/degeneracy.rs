//! Degeneracy orders and the degeneracy number.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Label, VertexOrder, VertexSet};

/// An order in which every vertex has at most `k` later neighbours.
#[derive(Debug, Clone, Serialize)]
pub struct DegeneracyCertificate {
    pub order: VertexOrder,
    pub k: usize,
    pub max_later_degree: usize,
}

/// Peels vertices of current degree `<= k`, preferring vertices outside `avoid`
/// and then the smallest label. Returns `None` when `g` is not `k`-degenerate.
///
/// Peeling the non-avoided vertices first pushes the first member of `avoid`
/// as late as the greedy order allows; this is a heuristic and is not claimed
/// to reach the latest possible position in every graph.
pub fn degeneracy_order(
    g: &Graph,
    k: usize,
    avoid: Option<&VertexSet>,
) -> Option<DegeneracyCertificate> {
    let in_avoid = |v: Label| avoid.is_some_and(|a| a.contains(&v));
    let mut degree: BTreeMap<Label, usize> = g.vertices().map(|v| (v, g.degree(v))).collect();
    let mut ready: BTreeSet<(bool, Label)> = degree
        .iter()
        .filter(|(_, &d)| d <= k)
        .map(|(&v, _)| (in_avoid(v), v))
        .collect();

    let mut sequence = Vec::with_capacity(degree.len());
    let mut max_later = 0;
    while let Some((_, v)) = ready.pop_first() {
        let d = degree.remove(&v).expect("ready vertices are live");
        max_later = max_later.max(d);
        sequence.push(v);
        for w in g.neighbors(v) {
            if let Some(dw) = degree.get_mut(w) {
                *dw -= 1;
                if *dw == k {
                    ready.insert((in_avoid(*w), *w));
                }
            }
        }
    }
    if !degree.is_empty() {
        return None;
    }
    Some(DegeneracyCertificate {
        order: VertexOrder::new(sequence).expect("each vertex peeled once"),
        k,
        max_later_degree: max_later,
    })
}

/// Returns whether every vertex has at most `k` later neighbours, together
/// with the largest later-degree observed.
pub fn verify_order(g: &Graph, order: &VertexOrder, k: usize) -> Result<(bool, usize)> {
    order.check_for(g)?;
    let max_later = order
        .as_slice()
        .iter()
        .map(|&v| order.later_neighbors(g, v).count())
        .max()
        .unwrap_or(0);
    Ok((max_later <= k, max_later))
}

/// Smallest `k` for which `g` is `k`-degenerate, with a witnessing order
/// from min-degree peeling (ties to the smallest label).
pub fn degeneracy_ordering(g: &Graph) -> Result<(usize, VertexOrder)> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut degree: BTreeMap<Label, usize> = g.vertices().map(|v| (v, g.degree(v))).collect();
    let mut queue: BTreeSet<(usize, Label)> = degree.iter().map(|(&v, &d)| (d, v)).collect();
    let mut sequence = Vec::with_capacity(degree.len());
    let mut best = 0;
    while let Some((d, v)) = queue.pop_first() {
        best = best.max(d);
        degree.remove(&v);
        sequence.push(v);
        for w in g.neighbors(v) {
            if let Some(dw) = degree.get_mut(w) {
                queue.remove(&(*dw, *w));
                *dw -= 1;
                queue.insert((*dw, *w));
            }
        }
    }
    Ok((best, VertexOrder::new(sequence).expect("each vertex peeled once")))
}

pub fn degeneracy(g: &Graph) -> Result<usize> {
    degeneracy_ordering(g).map(|(k, _)| k)
}
