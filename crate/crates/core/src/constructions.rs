//! Graph families: the tight 2-degenerate graphs `G_D` and random
//! 2-degenerate instances.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Label, VertexSet};

/// `G_D` together with its hubs and the clique of its square.
#[derive(Debug, Clone, Serialize)]
pub struct TightInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub hubs: [Label; 5],
    /// Union of all blocks; a clique of size `floor(5D/2)` in the square.
    pub clique_witness: VertexSet,
    /// The independent block replacing each hub pair, in lexicographic pair order.
    pub blocks: Vec<Block>,
    pub d: u32,
    pub k: u32,
    pub r: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Block {
    pub hubs: (Label, Label),
    pub members: Vec<Label>,
}

/// Size of the block replacing hub pair `(i, j)` (0-based hubs) for `D = 4k + r`.
fn block_size(i: Label, j: Label, k: u32, r: u32) -> u32 {
    let cycle = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)].contains(&(i, j));
    let matched = [(0, 1), (2, 3)].contains(&(i, j));
    match r {
        0 => k,
        1 if matched => k + 1,
        2 if cycle => k + 1,
        3 if matched => k + 2,
        3 if cycle => k + 1,
        _ => k,
    }
}

/// Builds `G_D` for `d >= 8`.
///
/// Hubs get labels `0..5`; each hub pair `{i, j}` (in lexicographic order) is
/// replaced by a block of independent vertices adjacent to both hubs, labelled
/// consecutively. Then, for every pair of block vertices with no common
/// neighbour, a fresh vertex adjacent to both is added, in lexicographic pair
/// order. That closing pass runs once, over the block vertices only.
pub fn build_tight(d: u32) -> Result<TightInstance> {
    if d < 8 {
        return Err(Error::Parameter(format!("D must be at least 8, got {d}")));
    }
    let (k, r) = (d / 4, d % 4);
    let hubs: [Label; 5] = [0, 1, 2, 3, 4];
    let mut b = GraphBuilder::new();
    for h in hubs {
        b.add_vertex(h);
    }
    let mut next: Label = 5;
    let mut blocks = Vec::with_capacity(10);
    for i in 0..5 {
        for j in i + 1..5 {
            let members: Vec<Label> = (next..next + block_size(i, j, k, r)).collect();
            next += members.len() as Label;
            for &x in &members {
                b.add_edge(x, i)?;
                b.add_edge(x, j)?;
            }
            blocks.push(Block { hubs: (i, j), members });
        }
    }

    let block_vertices: Vec<Label> = (5..next).collect();
    let hub_pair = |x: Label| -> (Label, Label) {
        blocks
            .iter()
            .find(|blk| blk.members.contains(&x))
            .map(|blk| blk.hubs)
            .expect("block vertex")
    };
    let pairs: Vec<(Label, Label)> = block_vertices.iter().map(|&x| hub_pair(x)).collect();
    let mut gadgets = Vec::new();
    for (a, &x) in block_vertices.iter().enumerate() {
        for (bidx, &y) in block_vertices.iter().enumerate().skip(a + 1) {
            let (p, q) = (pairs[a], pairs[bidx]);
            // block vertices' only neighbours are their two hubs
            let share = p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1;
            if !share {
                gadgets.push((x, y));
            }
        }
    }
    for (x, y) in gadgets {
        b.add_edge(next, x)?;
        b.add_edge(next, y)?;
        next += 1;
    }

    Ok(TightInstance {
        graph: b.build(),
        hubs,
        clique_witness: block_vertices.into_iter().collect(),
        blocks,
        d,
        k,
        r,
    })
}

/// `floor(5d/2)`.
pub fn tight_clique_size(d: u32) -> u32 {
    5 * d / 2
}

/// Random graph grown one vertex at a time; vertex `v` joins `min(attach, v)`
/// distinct earlier vertices chosen uniformly. Reverse insertion order is an
/// `attach`-degeneracy order.
pub fn random_2degenerate(n: u32, attach: u32, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    if !(1..=2).contains(&attach) {
        return Err(Error::Parameter(format!("attach must be 1 or 2, got {attach}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    b.add_vertex(0);
    for v in 1..n {
        b.add_vertex(v);
        let m = attach.min(v) as usize;
        for u in sample(&mut rng, v as usize, m) {
            b.add_edge(v, u as Label)?;
        }
    }
    Ok(b.build())
}
