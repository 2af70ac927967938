use proptest::prelude::*;
use sqclique::clique::CLIQUE_ORACLE_LIMIT;
use sqclique::density::MAD_ORACLE_LIMIT;
use sqclique::square::is_clique_in_square;
use sqclique::{
    build_tight, mad, mad_oracle, max_clique, max_clique_oracle, random_2degenerate, square, tight_clique_size,
    Graph, GraphBuilder,
};

fn random_graph(n: u32, bits: &[bool]) -> Graph {
    let mut b = GraphBuilder::new();
    let mut k = 0;
    for v in 0..n {
        b.add_vertex(v);
        for u in 0..v {
            if bits[k] {
                b.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    b.build()
}

fn arb_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), (n * n) as usize).prop_map(move |bits| random_graph(n, &bits))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clique_matches_oracle(g in arb_graph(CLIQUE_ORACLE_LIMIT as u32)) {
        let fast = max_clique(&g).unwrap();
        let slow = max_clique_oracle(&g).unwrap();
        prop_assert_eq!(fast.size, slow.size);
        // both pick the lexicographically smallest maximum clique
        prop_assert_eq!(&fast.members, &slow.members);
        let sub = g.induced_subgraph(&fast.members).unwrap();
        prop_assert_eq!(sub.edge_count(), fast.size * fast.size.saturating_sub(1) / 2);
    }

    #[test]
    fn clique_of_square_matches_oracle(n in 1u32..20, seed in any::<u64>()) {
        let g = random_2degenerate(n, 2, seed).unwrap();
        let sq = square(&g);
        let fast = max_clique(&sq).unwrap();
        prop_assert_eq!(fast.size, max_clique_oracle(&sq).unwrap().size);
        prop_assert!(is_clique_in_square(&g, &fast.members).unwrap());
    }

    #[test]
    fn mad_matches_oracle(g in arb_graph(MAD_ORACLE_LIMIT as u32)) {
        let fast = mad(&g).unwrap();
        let slow = mad_oracle(&g).unwrap();
        prop_assert_eq!(fast.value(), slow.value());
        // the witness attains the value
        let sub = g.induced_subgraph(&fast.witness).unwrap();
        prop_assert_eq!(
            num_rational::Ratio::new(2 * sub.edge_count() as u64, sub.vertex_count() as u64),
            fast.value()
        );
    }

    #[test]
    fn mad_of_two_degenerate_graph_is_below_four(n in 1u32..60, seed in any::<u64>()) {
        let g = random_2degenerate(n, 2, seed).unwrap();
        let m = mad(&g).unwrap();
        prop_assert!(m.value() < num_rational::Ratio::from_integer(4));
    }
}

#[test]
fn tight_square_clique_numbers() {
    for d in 8..=14 {
        let t = build_tight(d).unwrap();
        let c = max_clique(&square(&t.graph)).unwrap();
        assert_eq!(c.size as u32, tight_clique_size(d), "D = {d}");
    }
}
