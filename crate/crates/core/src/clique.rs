//! Exact maximum clique.
//!
//! Branch and bound over bitsets with a greedy colouring bound recomputed at
//! every node. Vertices are numbered by reverse degeneracy order so the
//! colouring visits high-core vertices first. A second pass picks the
//! lexicographically smallest maximum clique so the witness is reproducible.

use serde::Serialize;

use crate::degeneracy::degeneracy_ordering;
use crate::error::{Error, Result};
use crate::graph::{Graph, Label, VertexSet};

/// Largest graph accepted by [`max_clique_oracle`].
pub const CLIQUE_ORACLE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub members: VertexSet,
    pub size: usize,
    pub nodes_explored: u64,
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::new(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a &= !b);
    }
}

struct Search {
    adj: Vec<Bits>,
    nodes: u64,
    budget: Option<u64>,
    stack: Vec<usize>,
    best: Vec<usize>,
    /// Stop as soon as a clique larger than `best.len()` is found.
    decide_only: bool,
    found: bool,
}

impl Search {
    /// Greedy colouring of `p`; returns vertices in non-decreasing colour order.
    fn colour_sort(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.count());
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncoloured.remove(v);
                q.and_not_assign(&self.adj[v]);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut p: Bits) -> Result<()> {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        let order = self.colour_sort(&p);
        for &(v, colour) in order.iter().rev() {
            if self.stack.len() + colour <= self.best.len() {
                return Ok(());
            }
            self.stack.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if self.stack.len() > self.best.len() {
                    self.best = self.stack.clone();
                    if self.decide_only {
                        self.found = true;
                    }
                }
            } else {
                self.expand(next)?;
            }
            self.stack.pop();
            if self.found {
                return Ok(());
            }
            p.remove(v);
        }
        Ok(())
    }

    /// True when `p` contains a clique of size `need`.
    fn contains_clique(&mut self, p: &Bits, need: usize) -> Result<bool> {
        if need == 0 {
            return Ok(true);
        }
        if p.count() < need {
            return Ok(false);
        }
        self.stack.clear();
        self.best = vec![usize::MAX; need - 1];
        self.decide_only = true;
        self.found = false;
        self.expand(p.clone())?;
        Ok(self.found)
    }
}

/// Exact maximum clique; among maximum cliques the lexicographically smallest
/// member set is returned. `node_budget` bounds the number of search nodes.
pub fn max_clique_with_budget(g: &Graph, node_budget: Option<u64>) -> Result<CliqueResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(CliqueResult { members: VertexSet::new(), size: 0, nodes_explored: 0 });
    }
    let idx = g.indexed();
    // search position 0 is the last vertex peeled
    let (_, peel) = degeneracy_ordering(g)?;
    let label_index = |l: Label| idx.labels.binary_search(&l).expect("vertex label");
    let by_pos: Vec<usize> = peel.as_slice().iter().rev().map(|&l| label_index(l)).collect();
    let mut pos_of = vec![0; n];
    for (p, &i) in by_pos.iter().enumerate() {
        pos_of[i] = p;
    }
    let adj: Vec<Bits> = by_pos
        .iter()
        .map(|&i| {
            let mut b = Bits::new(n);
            for &j in &idx.adj[i] {
                b.insert(pos_of[j]);
            }
            b
        })
        .collect();

    let mut search = Search {
        adj,
        nodes: 0,
        budget: node_budget,
        stack: Vec::new(),
        best: Vec::new(),
        decide_only: false,
        found: false,
    };
    search.expand(Bits::full(n))?;
    let omega = search.best.len();

    // lexicographically smallest clique of size omega, by label
    let mut candidates = Bits::full(n);
    let mut chosen: Vec<usize> = Vec::with_capacity(omega);
    for (i, &v) in pos_of.iter().enumerate() {
        if chosen.len() == omega {
            break;
        }
        if !candidates.contains(v) {
            continue;
        }
        let rest = candidates.and(&search.adj[v]);
        if search.contains_clique(&rest, omega - chosen.len() - 1)? {
            chosen.push(i);
            candidates = rest;
        } else {
            candidates.remove(v);
        }
    }
    debug_assert_eq!(chosen.len(), omega);
    Ok(CliqueResult {
        members: chosen.iter().map(|&i| idx.labels[i]).collect(),
        size: omega,
        nodes_explored: search.nodes,
    })
}

pub fn max_clique(g: &Graph) -> Result<CliqueResult> {
    max_clique_with_budget(g, None)
}

/// Exhaustive search over vertex subsets, extending only sets that are still
/// cliques. Limited to [`CLIQUE_ORACLE_LIMIT`] vertices.
pub fn max_clique_oracle(g: &Graph) -> Result<CliqueResult> {
    let n = g.vertex_count();
    if n > CLIQUE_ORACLE_LIMIT {
        return Err(Error::TooLarge { limit: CLIQUE_ORACLE_LIMIT, actual: n });
    }
    let idx = g.indexed();
    let adj: Vec<u32> = idx
        .adj
        .iter()
        .map(|ns| ns.iter().fold(0, |acc, &v| acc | (1u32 << v)))
        .collect();

    // subsets are visited in lexicographic order, so the first maximum is the
    // lexicographically smallest one
    fn walk(adj: &[u32], start: usize, current: u32, best: &mut u32, visited: &mut u64) {
        *visited += 1;
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        for v in start..adj.len() {
            if current & !adj[v] == 0 {
                walk(adj, v + 1, current | 1 << v, best, visited);
            }
        }
    }
    let (mut best, mut visited) = (0u32, 0u64);
    walk(&adj, 0, 0, &mut best, &mut visited);
    let members: VertexSet = (0..n).filter(|v| best >> v & 1 == 1).map(|v| idx.labels[v]).collect();
    Ok(CliqueResult { size: members.len(), members, nodes_explored: visited })
}
