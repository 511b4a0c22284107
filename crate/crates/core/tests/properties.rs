mod support;

use proptest::prelude::*;
use recon_minors::{enumerate_models, plan_clique, plan_k2, Graph, HModel, ReconSequence, Step};
use support::{clique, Adj};

/// A graph on 2..=max vertices as (n, edge bitmask over pairs u < v).
fn graph(max: usize) -> impl Strategy<Value = Adj> {
    (2..=max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), any::<u64>().prop_map(move |m| m & ((1u64 << pairs) - 1)))
    })
    .prop_map(|(n, mask)| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask & (1u64 << i) != 0).map(|(_, e)| *e).collect();
        Adj::new(n, &edges)
    })
}

fn connected_graph(max: usize) -> impl Strategy<Value = Adj> {
    graph(max).prop_filter("connected", Adj::connected)
}

fn two_connected_graph(max: usize) -> impl Strategy<Value = Adj> {
    graph(max).prop_filter("2-connected", |a| a.k_connected(2))
}

fn steps(seq: &ReconSequence<'_>) -> Vec<(usize, usize)> {
    seq.steps.iter().map(|s| (s.vertex, s.label)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn connectivity_matches_cut_enumeration(a in graph(7)) {
        let g = a.to_graph();
        for k in 1..=4 {
            prop_assert_eq!(g.is_k_connected(k), a.k_connected(k), "k={}", k);
        }
    }

    #[test]
    fn canonical_form_ignores_relabeling(a in graph(7), seed in any::<u64>()) {
        let g = a.to_graph();
        let mut perm: Vec<usize> = (0..a.n).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = g.permuted(&perm);
        prop_assert_eq!(g.canonical_form(), p.canonical_form());
        prop_assert!(g.is_isomorphic(&p));
        prop_assert_eq!(Adj::of(&p).canon(), a.canon());
    }

    #[test]
    fn isomorphism_matches_brute_force(a in graph(6), b in graph(6)) {
        prop_assume!(a.n == b.n);
        prop_assert_eq!(a.to_graph().is_isomorphic(&b.to_graph()), a.canon() == b.canon());
    }

    #[test]
    fn text_formats_round_trip(a in graph(9)) {
        let g = a.to_graph();
        prop_assert_eq!(&Graph::parse_edge_list(&g.to_edge_list()).unwrap(), &g);
        prop_assert_eq!(&Graph::from_graph6(&g.to_graph6()).unwrap(), &g);
    }

    #[test]
    fn models_match_the_definition(a in connected_graph(6), k in 2usize..=3) {
        let h = clique(k);
        let (g, hg) = (a.to_graph(), h.to_graph());
        let mut lib: Vec<Vec<usize>> = enumerate_models(&g, &hg, Default::default())
            .unwrap()
            .into_iter()
            .map(HModel::into_labels)
            .collect();
        lib.sort();
        prop_assert_eq!(lib, support::models(&a, &h));
    }

    #[test]
    fn step_rule_matches_the_definition(a in connected_graph(7), i in any::<usize>()) {
        let h = clique(3);
        let models = support::models(&a, &h);
        prop_assume!(!models.is_empty());
        let labels = models[i % models.len()].clone();
        let (g, hg) = (a.to_graph(), h.to_graph());
        let m = HModel::new(&g, &hg, labels.clone()).unwrap();
        for v in 0..a.n {
            for b in 0..3 {
                if b == labels[v] {
                    continue;
                }
                let mut x = labels.clone();
                x[v] = b;
                let legal = m.legal_step(v, b).unwrap().legal;
                prop_assert_eq!(legal, support::is_model(&a, &h, &x), "v={} b={}", v, b);
                prop_assert!(!m.legal_step_universal(v, b).unwrap().legal || legal);
            }
        }
    }

    #[test]
    fn random_walks_reverse_and_serialize(a in connected_graph(7), moves in prop::collection::vec((0usize..7, 0usize..2), 0..30)) {
        let h = clique(2);
        let (g, hg) = (a.to_graph(), h.to_graph());
        let models = support::models(&a, &h);
        prop_assume!(!models.is_empty());
        let start = HModel::new(&g, &hg, models[0].clone()).unwrap();
        let mut seq = ReconSequence::new(start.clone());
        let mut cur = models[0].clone();
        for (v, b) in moves {
            let v = v % a.n;
            if cur[v] == b {
                continue;
            }
            let mut x = cur.clone();
            x[v] = b;
            if support::is_model(&a, &h, &x) {
                seq.steps.push(Step { vertex: v, label: b });
                cur = x;
            }
        }
        let end = seq.replay().unwrap();
        prop_assert_eq!(end.labels(), cur.as_slice());
        let back = seq.reversed();
        prop_assert_eq!(back.replay().unwrap(), start.clone());
        let parsed = ReconSequence::parse_text(start.clone(), &seq.to_text()).unwrap();
        prop_assert_eq!(steps(&parsed), steps(&seq));
        let there_and_back = seq.concat(back).unwrap();
        prop_assert_eq!(there_and_back.replay().unwrap(), start);
    }

    #[test]
    fn k2_plans_are_legal_on_two_connected_hosts(a in two_connected_graph(7), i in any::<usize>(), j in any::<usize>()) {
        let h = clique(2);
        let (g, hg) = (a.to_graph(), h.to_graph());
        let models = support::models(&a, &h);
        let (x, y) = (&models[i % models.len()], &models[j % models.len()]);
        let from = HModel::new(&g, &hg, x.clone()).unwrap();
        let to = HModel::new(&g, &hg, y.clone()).unwrap();
        let seq = plan_k2(&from, &to).unwrap();
        prop_assert_eq!(support::replays(&a, &h, x, &steps(&seq)), Some(y.clone()));
    }

    #[test]
    fn clique_plans_are_legal(m in 4usize..=6, l in 2usize..=4, i in any::<usize>(), j in any::<usize>()) {
        prop_assume!(l < m);
        let (ga, ha) = (clique(m), clique(l));
        let (g, hg) = (ga.to_graph(), ha.to_graph());
        let models = support::models(&ga, &ha);
        let (x, y) = (&models[i % models.len()], &models[j % models.len()]);
        let from = HModel::new(&g, &hg, x.clone()).unwrap();
        let to = HModel::new(&g, &hg, y.clone()).unwrap();
        let seq = plan_clique(&from, &to).unwrap();
        prop_assert_eq!(support::replays(&ga, &ha, x, &steps(&seq)), Some(y.clone()));
    }
}
