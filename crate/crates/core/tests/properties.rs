use proptest::prelude::*;
use twofactor::barrier::{deficiency, find_barrier, BarrierSearch};
use twofactor::independence::{check_slack_condition, sigma_k, Slack};
use twofactor::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use twofactor::oracles::{oracle_deficiency, oracle_has_two_factor, oracle_sigma, oracle_slack_holds};
use twofactor::two_factor::{find_two_factor, verify_two_factor};
use twofactor::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let chosen: Vec<(usize, usize)> = edges.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, chosen).unwrap()
        })
    })
}

/// A graph with disjoint sets `S`, `T` drawn from a vertex labelling.
fn graph_with_sets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(0u8..3, n)).prop_map(|(g, labels)| {
            let pick = |want: u8| labels.iter().enumerate().filter(|(_, &l)| l == want).map(|(v, _)| v).collect::<VertexSet>();
            (g.clone(), pick(1), pick(2))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn handshake(g in graph(30)) {
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn join_counts(a in graph(8), b in graph(8)) {
        let j = a.join(&b);
        prop_assert_eq!(j.order(), a.order() + b.order());
        prop_assert_eq!(j.size(), a.size() + b.size() + a.order() * b.order());
    }

    #[test]
    fn deficiency_is_even_and_matches_oracle((g, s, t) in graph_with_sets(12)) {
        let d = deficiency(&g, &s, &t).unwrap();
        prop_assert_eq!(d.rem_euclid(2), 0);
        prop_assert_eq!(d, oracle_deficiency(&g, &s, &t));
    }

    #[test]
    fn two_factor_or_barrier(g in graph(10)) {
        let f = find_two_factor(&g).unwrap();
        if let Some(f) = &f {
            prop_assert!(verify_two_factor(&g, f));
        }
        prop_assert_eq!(f.is_some(), oracle_has_two_factor(&g).unwrap());
        match find_barrier(&g, 12) {
            BarrierSearch::Found(b) => {
                prop_assert!(f.is_none());
                prop_assert!(b.verify(&g));
            }
            BarrierSearch::NoneExists => prop_assert!(f.is_some()),
            BarrierSearch::Inconclusive => prop_assert!(false, "exhaustive below the bound"),
        }
    }

    #[test]
    fn slack_and_sigma_match_oracles(g in graph(12)) {
        for slack in [Slack::Strict, Slack::Weak] {
            let verdict = check_slack_condition(&g, slack);
            prop_assert_eq!(verdict.holds(), oracle_slack_holds(&g, slack.c()).unwrap());
            if let Some(w) = verdict.witness() {
                prop_assert!(w.verify(&g) && w.violates(slack));
            }
        }
        for k in 1..=4 {
            prop_assert_eq!(sigma_k(&g, k).value, oracle_sigma(&g, k).unwrap());
        }
    }
}
