//! Maximum average degree, computed exactly.
//!
//! `mad` runs a parametric search: starting from the density of the whole
//! graph, a max-closure min-cut either certifies that no subgraph is denser
//! than the current candidate or returns a strictly denser vertex set, which
//! becomes the next candidate. Densities are rationals with denominator at most
//! `|V|`, so the sequence is finite and the final answer is exact.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Graph, VertexSet};

/// Largest graph accepted by [`mad_oracle`].
pub const MAD_ORACLE_LIMIT: usize = 15;

/// `2|E(H)| / |V(H)|` for a witness vertex set `H`, kept unreduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Density {
    pub numerator: u64,
    pub denominator: u64,
    pub witness: VertexSet,
}

impl Density {
    fn of(g: &Graph, witness: VertexSet) -> Self {
        let edges = g
            .induced_subgraph(&witness)
            .expect("witness is a vertex subset")
            .edge_count() as u64;
        Density { numerator: 2 * edges, denominator: witness.len() as u64, witness }
    }

    pub fn value(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }
}

impl Serialize for Density {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Density", 2)?;
        st.serialize_field("value", &self.value().to_string())?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

/// Maximum of `2 q |E(S)| - p |S|` over vertex sets, with the minimal maximiser.
fn best_excess(g: &Graph, p: i64, q: i64) -> (i64, VertexSet) {
    let idx = g.indexed();
    let n = idx.len();
    let edges: Vec<(usize, usize)> = idx
        .adj
        .iter()
        .enumerate()
        .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    let m = edges.len();
    // source, sink, then vertex nodes, then edge nodes
    let (source, sink) = (0, 1);
    let mut net = FlowNetwork::new(2 + n + m);
    let infinite = 2 * q * m as i64 + p * n as i64 + 1;
    for v in 0..n {
        net.add_arc(2 + v, sink, p);
    }
    for (e, &(u, v)) in edges.iter().enumerate() {
        let node = 2 + n + e;
        net.add_arc(source, node, 2 * q);
        net.add_arc(node, 2 + u, infinite);
        net.add_arc(node, 2 + v, infinite);
    }
    let cut = net.max_flow(source, sink);
    let side = net.source_side(source);
    let chosen = (0..n).filter(|v| side[2 + v]).map(|v| idx.labels[v]).collect();
    (2 * q * m as i64 - cut, chosen)
}

pub fn mad(g: &Graph) -> Result<Density> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut best = Density::of(g, g.vertex_set());
    loop {
        let (excess, denser) = best_excess(g, best.numerator as i64, best.denominator as i64);
        if excess <= 0 {
            return Ok(best);
        }
        let next = Density::of(g, denser);
        debug_assert!(next.value() > best.value());
        best = next;
    }
}

/// Exhaustive maximum over all non-empty vertex subsets; the first maximiser
/// in subset-bitmask order is the witness.
pub fn mad_oracle(g: &Graph) -> Result<Density> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAD_ORACLE_LIMIT {
        return Err(Error::TooLarge { limit: MAD_ORACLE_LIMIT, actual: n });
    }
    let idx = g.indexed();
    let adj: Vec<u32> = idx
        .adj
        .iter()
        .map(|ns| ns.iter().fold(0u32, |acc, &v| acc | (1 << v)))
        .collect();
    let (mut best_num, mut best_den, mut best_mask) = (0u64, 1u64, 1u32);
    for mask in 1u32..(1 << n) {
        let twice_edges: u64 = (0..n)
            .filter(|v| mask >> v & 1 == 1)
            .map(|v| u64::from((adj[v] & mask).count_ones()))
            .sum();
        let size = u64::from(mask.count_ones());
        if twice_edges * best_den > best_num * size {
            (best_num, best_den, best_mask) = (twice_edges, size, mask);
        }
    }
    let witness = (0..n).filter(|v| best_mask >> v & 1 == 1).map(|v| idx.labels[v]).collect();
    Ok(Density { numerator: best_num, denominator: best_den, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Graph {
        Graph::from_edges([(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn cycle_has_mad_two_with_whole_witness() {
        let c8 = Graph::cycle(8);
        let d = mad(&c8).unwrap();
        assert_eq!(d.value(), Ratio::from_integer(2));
        assert_eq!(d.witness, c8.vertex_set());
    }

    #[test]
    fn complete_graph() {
        assert_eq!(mad(&Graph::complete(0..4)).unwrap().value(), Ratio::from_integer(3));
    }

    #[test]
    fn k23_matches_frozen_oracle_value() {
        // brute force over all 31 subsets gives 12/5
        let oracle = mad_oracle(&k23()).unwrap();
        assert_eq!(oracle.value(), Ratio::new(12, 5));
        assert_eq!(mad(&k23()).unwrap().value(), Ratio::new(12, 5));
    }

    #[test]
    fn denser_part_is_found() {
        // K4 with a long pendant path: density is carried by the K4
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend((3..10).map(|i| (i, i + 1)));
        let g = Graph::from_edges(edges).unwrap();
        let d = mad(&g).unwrap();
        assert_eq!(d.value(), Ratio::from_integer(3));
        assert_eq!(d.witness, (0..4).collect());
    }

    #[test]
    fn oracle_edge_cases() {
        assert_eq!(mad_oracle(&Graph::edgeless([5])).unwrap().value(), Ratio::from_integer(0));
        assert_eq!(mad_oracle(&Graph::path(2)).unwrap().value(), Ratio::from_integer(1));
        assert_eq!(
            mad_oracle(&Graph::edgeless(0..16)),
            Err(Error::TooLarge { limit: 15, actual: 16 })
        );
        assert_eq!(mad(&Graph::empty()), Err(Error::EmptyGraph));
        assert_eq!(mad(&Graph::edgeless(0..3)).unwrap().value(), Ratio::from_integer(0));
    }
}
