#![allow(dead_code)]

use sqclique::{Graph, GraphBuilder, Label, VertexSet};

/// Six hubs `0..6`; each hub pair gets `k` private vertices adjacent to both.
/// Each entry of `extras` adds one more clique vertex adjacent to exactly
/// those hubs. Any two clique vertices with no common hub are then joined
/// through a fresh degree-two vertex, so the clique vertices form a clique
/// in the square.
pub fn six_hub(k: u32, extras: &[&[Label]]) -> (Graph, VertexSet) {
    let mut b = GraphBuilder::new();
    let mut next: Label = 6;
    let mut members: Vec<(Label, Vec<Label>)> = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            for _ in 0..k {
                b.add_edge(next, i).unwrap();
                b.add_edge(next, j).unwrap();
                members.push((next, vec![i, j]));
                next += 1;
            }
        }
    }
    for hubs in extras {
        for &h in hubs.iter() {
            b.add_edge(next, h).unwrap();
        }
        members.push((next, hubs.to_vec()));
        next += 1;
    }
    let s = members.iter().map(|m| m.0).collect();
    for x in 0..members.len() {
        for y in x + 1..members.len() {
            if members[x].1.iter().all(|h| !members[y].1.contains(h)) {
                b.add_edge(next, members[x].0).unwrap();
                b.add_edge(next, members[y].0).unwrap();
                next += 1;
            }
        }
    }
    (b.build(), s)
}

/// `(k, D, extras)` cases whose extraction ends with six hubs in `T*`.
pub fn six_hub_cases() -> Vec<(u32, u32, Vec<&'static [Label]>)> {
    vec![
        (2, 20, vec![&[0, 1, 2, 3, 4]]),
        (2, 20, vec![&[0, 1, 2], &[3, 4, 5]]),
        (2, 20, vec![&[0, 1, 2, 3], &[2, 3, 4, 5], &[0, 1]]),
        (3, 24, vec![&[0, 1, 2, 3, 4, 5], &[1, 2, 3]]),
        (2, 24, vec![&[0, 1, 2, 3, 4, 5], &[0, 2, 4], &[1, 3, 5]]),
        (3, 28, vec![&[0, 1, 2, 3], &[1, 2, 3, 4], &[2, 3, 4, 5]]),
    ]
}
