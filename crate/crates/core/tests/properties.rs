use chordal_mds::generators::random_chordal;
use chordal_mds::io::{parse_graph, write_graph};
use chordal_mds::{minimal_dominating_sets, oracle, CliqueTree, EnumContext, Graph, VertexSet};
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::ops::ControlFlow;

fn chordal(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, p, seed)| random_chordal(n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_brute_force(g in chordal(12)) {
        let got = minimal_dominating_sets(&g).unwrap();
        let unique: BTreeSet<VertexSet> = got.iter().cloned().collect();
        prop_assert_eq!(unique.len(), got.len());
        let expected: BTreeSet<VertexSet> = g.brute_force_minimal_dominating_sets().unwrap().into_iter().collect();
        prop_assert_eq!(unique, expected);
    }

    #[test]
    fn outputs_are_minimal_dominating(g in chordal(30)) {
        let mut seen = 0;
        let _ = chordal_mds::enum_minimal_dominating_sets(&g, &mut |d| {
            assert!(g.is_minimal_dominating(d));
            seen += 1;
            if seen == 300 { ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
        }).unwrap();
        prop_assert!(seen > 0);
    }

    #[test]
    fn limit_stops_exactly(g in chordal(14), k in 1usize..6) {
        let total = minimal_dominating_sets(&g).unwrap().len();
        let mut seen = 0;
        let flow = chordal_mds::enum_minimal_dominating_sets(&g, &mut |_| {
            seen += 1;
            if seen == k { ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
        }).unwrap();
        prop_assert_eq!(seen, k.min(total));
        prop_assert_eq!(flow.is_break(), k <= total);
    }

    #[test]
    fn clique_tree_invariants(g in chordal(25)) {
        let t = CliqueTree::build(&g).unwrap();
        let mut homed = VertexSet::new();
        for c in 0..t.len() {
            if let Some(p) = t.parent(c) {
                prop_assert!(p < c);
                prop_assert!(t.is_proper_ancestor(p, c));
            }
            prop_assert_eq!(t.interval(c), (c + 1, t.subtree_end(c) + 1));
            for d in c..=t.subtree_end(c) {
                prop_assert!(t.is_ancestor_or_self(c, d));
            }
            prop_assert!(!homed.intersects(t.fset(c)));
            homed.union_with(t.fset(c));
            for x in t.fset(c) {
                prop_assert_eq!(t.home(x), c);
            }
        }
        prop_assert_eq!(homed, g.vertices());
        let numbers: Vec<usize> = (0..g.vertex_count()).map(|x| t.vnum(x)).collect();
        for x in 0..g.vertex_count() {
            for y in 0..g.vertex_count() {
                if t.is_proper_ancestor(t.home(x), t.home(y)) {
                    prop_assert!(numbers[x] < numbers[y]);
                }
            }
        }
    }

    #[test]
    fn witness_properties(g in chordal(16)) {
        let t = CliqueTree::build(&g).unwrap();
        let ctx = EnumContext::new(&g, &t, VertexSet::new(), VertexSet::new()).unwrap();
        for c in 0..t.len() {
            let below = t.subtree_vertices(c);
            let (sub, map) = g.induced_subgraph(below);
            for x in 0..g.vertex_count() {
                let w = ctx.private_witness(c, x).unwrap().vertices();
                prop_assert!(w.is_subset(below));
                prop_assert!(sub.is_irredundant(&map.restrict(&w)));
                let mut must = below.clone();
                if t.clique(c).contains(x) {
                    must = must.difference(g.closed_neighborhood(x));
                }
                prop_assert!(must.is_subset(&g.closed_neighborhood_of_set(&w)));
            }
        }
    }

    #[test]
    fn extendability_matches_oracle(g in chordal(9), picks in proptest::collection::vec(any::<bool>(), 9)) {
        let t = CliqueTree::build(&g).unwrap();
        let ctx = EnumContext::new(&g, &t, VertexSet::new(), VertexSet::new()).unwrap();
        let a: VertexSet = (0..g.vertex_count()).filter(|&x| picks[x]).collect();
        if t.is_partial_antichain(&g, &VertexSet::new(), &a).unwrap() {
            prop_assert_eq!(ctx.is_extendable(&a).unwrap(), oracle::is_extendable(&ctx, &a).unwrap());
        }
    }

    #[test]
    fn vertex_set_matches_model(a in proptest::collection::btree_set(0usize..200, 0..40),
                                b in proptest::collection::btree_set(0usize..200, 0..40)) {
        let (x, y): (VertexSet, VertexSet) = (a.iter().copied().collect(), b.iter().copied().collect());
        let model = |s: BTreeSet<usize>| -> Vec<usize> { s.into_iter().collect() };
        prop_assert_eq!(x.union(&y).to_vec(), model(a.union(&b).copied().collect()));
        prop_assert_eq!(x.intersection(&y).to_vec(), model(a.intersection(&b).copied().collect()));
        prop_assert_eq!(x.difference(&y).to_vec(), model(a.difference(&b).copied().collect()));
        prop_assert_eq!(x.is_subset(&y), a.is_subset(&b));
        prop_assert_eq!(x.intersects(&y), !a.is_disjoint(&b));
        prop_assert_eq!(x.len(), a.len());
        prop_assert_eq!(x.first(), a.first().copied());
    }

    #[test]
    fn graph_text_round_trip(g in chordal(40)) {
        let back = parse_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
    }
}
