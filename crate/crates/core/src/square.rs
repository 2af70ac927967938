use crate::error::Result;
use crate::graph::{Graph, GraphBuilder, VertexSet};

/// The square: `uv` is an edge when `u` and `v` are at distance 1 or 2.
pub fn square(g: &Graph) -> Graph {
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(v);
    }
    for v in g.vertices() {
        let ns = g.neighbors(v);
        for &u in ns {
            if u > v {
                b.add_edge(v, u).expect("distinct endpoints");
            }
            // every pair of neighbours of v is at distance <= 2
            for &w in ns.range(u + 1..) {
                b.add_edge(u, w).expect("distinct endpoints");
            }
        }
    }
    b.build()
}

/// Checks pairwise distance `<= 2` among `s` without building the full square.
pub fn is_clique_in_square(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_subset(s)?;
    Ok(first_far_pair(g, s).is_none())
}

/// Smallest pair of `s` at distance greater than two, if any.
pub fn first_far_pair(g: &Graph, s: &VertexSet) -> Option<(u32, u32)> {
    for &u in s {
        let nu = g.neighbors(u);
        for &v in s.range(u + 1..) {
            if !nu.contains(&v) && nu.is_disjoint(g.neighbors(v)) {
                return Some((u, v));
            }
        }
    }
    None
}
