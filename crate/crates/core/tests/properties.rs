use std::collections::HashMap;
use std::time::Instant;

use circle_canon::canon::{canon_tree, center_root, decode, derive_node_representation};
use circle_canon::chord::{canon_rep, interleaving_graph, lambda_encoding, random_rep, CircleRep};
use circle_canon::generate::composed_diagram;
use circle_canon::oracle::{brute_iso, brute_splits};
use circle_canon::pipeline::{canon_connected, canon_graph, isomorphic, CanonInput};
use circle_canon::tree::{decompose, decompose_with, minimal_split_tree, NodeKind};
use circle_canon::{find_split, lex_sort_sequences, min_rotation, split_closure, ColoredGraph, SeedOrder};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn connected_rep(n: usize, rng: &mut ChaCha8Rng) -> CircleRep {
    loop {
        let rep = random_rep(n, rng.gen()).unwrap();
        if interleaving_graph(&rep).is_connected() {
            return rep;
        }
    }
}

#[test]
fn random_rep_is_uniform_on_three_chords() {
    let trials = 10_000;
    let mut counts: HashMap<Vec<u32>, usize> = HashMap::new();
    for seed in 0..trials {
        *counts.entry(random_rep(3, seed).unwrap().normalized().word().to_vec()).or_default() += 1;
    }
    assert_eq!(counts.len(), 15);
    for (word, count) in counts {
        let freq = count as f64 / trials as f64;
        assert!((freq - 1.0 / 15.0).abs() <= 0.02, "{word:?} has frequency {freq}");
    }
}

#[test]
fn lex_sort_matches_comparison_sort() {
    let mut r = rng(1);
    for _ in 0..10_000 {
        let seqs: Vec<Vec<u32>> = (0..r.gen_range(0..10))
            .map(|_| {
                (0..r.gen_range(0..6))
                    .map(|_| if r.gen_bool(0.5) { r.gen_range(0..4) } else { r.gen_range(500..504) })
                    .collect()
            })
            .collect();
        let (order, ranks) = lex_sort_sequences(&seqs);
        for w in order.windows(2) {
            assert!(seqs[w[0]] <= seqs[w[1]]);
        }
        for i in 0..seqs.len() {
            for j in 0..seqs.len() {
                assert_eq!(ranks[i] == ranks[j], seqs[i] == seqs[j]);
            }
        }
    }
}

#[test]
fn lex_sort_time_grows_linearly() {
    let make = |total: usize, seed: u64| -> Vec<Vec<u32>> {
        let mut r = rng(seed);
        let mut seqs = Vec::new();
        let mut used = 0;
        while used < total {
            let len = r.gen_range(1..16);
            seqs.push((0..len).map(|_| r.gen_range(0..(total / 8) as u32)).collect::<Vec<u32>>());
            used += len;
        }
        seqs
    };
    let time = |seqs: &[Vec<u32>]| {
        let start = Instant::now();
        std::hint::black_box(lex_sort_sequences(seqs));
        start.elapsed().as_secs_f64()
    };
    let (small_input, large_input) = (make(1 << 18, 1), make(1 << 19, 2));
    let (mut small, mut large) = (f64::INFINITY, f64::INFINITY);
    for _ in 0..9 {
        small = small.min(time(&small_input));
        large = large.min(time(&large_input));
    }
    assert!(large / small <= 2.5, "doubling took {:.2}x", large / small);
}

#[test]
fn least_lambda_rotation_starts_at_a_gap() {
    let mut r = rng(2);
    for _ in 0..500 {
        let n = r.gen_range(1..30);
        let rep = random_rep(n, r.gen()).unwrap();
        let colors: Vec<u32> = (0..n).map(|_| r.gen_range(0..n as u32)).collect();
        let lambda = lambda_encoding(&rep, &colors).unwrap();
        assert_eq!(lambda, lambda_encoding(&rep, &colors).unwrap());
        let (start, _) = min_rotation(lambda.values()).unwrap();
        assert_eq!(start % 2, 0);
        let rotated = rep.rotated(r.gen_range(0..2 * n));
        assert_eq!(canon_rep(&rep, &colors).unwrap(), canon_rep(&rotated, &colors).unwrap());
    }
}

#[test]
fn find_split_agrees_with_brute_force_on_seven_vertices() {
    let mut r = rng(3);
    let mut tried = 0;
    while tried < 5000 {
        let p = r.gen_range(0.2..0.8);
        let edges: Vec<(usize, usize)> =
            (0..7).flat_map(|u| (u + 1..7).map(move |v| (u, v))).filter(|_| r.gen_bool(p)).collect();
        let g = ColoredGraph::uncolored(7, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        tried += 1;
        let found = find_split(&g).unwrap();
        assert_eq!(found.is_none(), brute_splits(&g).unwrap().is_empty(), "{edges:?}");
        if let Some(s) = found {
            s.validate(&g).unwrap();
        }
    }
}

#[test]
fn closure_sides_are_splits() {
    let mut r = rng(4);
    for _ in 0..300 {
        let g = interleaving_graph(&connected_rep(r.gen_range(4..12), &mut r));
        let n = g.vertex_count();
        let a = r.gen_range(0..n);
        let Some(&b) = g.neighbors(a).first() else { continue };
        let x = (0..n).find(|&x| x != a && x != b).unwrap();
        if let Some(side) = split_closure(&g, a, b, x).unwrap() {
            assert!(side.contains(&a) && side.contains(&x) && !side.contains(&b));
            circle_canon::Split::from_side(&g, &side).validate(&g).unwrap();
        }
    }
}

#[test]
fn decomposition_joins_back_to_the_graph() {
    let mut r = rng(5);
    for _ in 0..200 {
        let n = r.gen_range(3..60);
        let g = interleaving_graph(&connected_rep(n, &mut r));
        let t = decompose_with(&g, SeedOrder::Shuffled(r.gen())).unwrap();
        t.validate().unwrap();
        assert!(t.node_count() < n);
        assert_eq!(t.join_all(), g);
        let mut m = t.clone();
        m.minimalize().unwrap();
        assert!(m.is_minimal());
        assert_eq!(m.join_all(), g);
    }
}

#[test]
fn every_prime_node_restricts_from_the_global_diagram() {
    let mut r = rng(6);
    for _ in 0..100 {
        let rep = connected_rep(r.gen_range(5..80), &mut r);
        let g = interleaving_graph(&rep);
        let rt = center_root(&minimal_split_tree(&g, SeedOrder::Lexicographic).unwrap());
        for id in rt.tree().node_ids() {
            if rt.tree().kind(id) == Some(NodeKind::Prime) {
                let nr = derive_node_representation(&rt, id, &rep).unwrap();
                assert_eq!(nr.rep.chord_count(), rt.tree().node_vertices(id).len());
            }
        }
    }
}

#[test]
fn colors_stay_within_the_vertex_budget() {
    let mut r = rng(7);
    for _ in 0..100 {
        let rep = connected_rep(r.gen_range(3..60), &mut r);
        let rt = center_root(&minimal_split_tree(&interleaving_graph(&rep), SeedOrder::Lexicographic).unwrap());
        let e = canon_connected(&CanonInput::from_rep(rep)).unwrap();
        let vertices: usize = rt.tree().node_ids().map(|id| rt.tree().node_vertices(id).len()).sum();
        let colors_used = e.values()[0] as usize + 2;
        assert!(colors_used <= vertices + 2);
    }
}

#[test]
fn encodings_are_deterministic() {
    let rep = random_rep(60, 11).unwrap();
    let first = canon_graph(&CanonInput::from_rep(rep.clone())).unwrap();
    for _ in 0..5 {
        assert_eq!(canon_graph(&CanonInput::from_rep(rep.clone())).unwrap(), first);
    }
}

#[test]
fn composed_tree_encodes_like_the_pipeline() {
    for seed in 0..10 {
        let c = composed_diagram(200, seed).unwrap();
        let known = canon_tree(&center_root(&c.tree), &c.node_reps).unwrap();
        assert_eq!(known, canon_connected(&CanonInput::from_rep(c.rep)).unwrap(), "seed {seed}");
    }
}

#[test]
fn p4_is_not_a_star() {
    let p4 = ColoredGraph::uncolored(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let s3 = ColoredGraph::uncolored(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(!brute_iso(&p4, &s3).unwrap());
    assert!(!isomorphic(&CanonInput::from_graph(&p4), &CanonInput::from_graph(&s3)).unwrap());
}

fn small_connected_rep() -> impl Strategy<Value = CircleRep> {
    (3usize..8, any::<u64>()).prop_filter_map("connected", |(n, seed)| {
        let rep = random_rep(n, seed).unwrap();
        interleaving_graph(&rep).is_connected().then_some(rep)
    })
}

proptest! {
    #[test]
    fn decoded_tree_is_isomorphic(rep in small_connected_rep()) {
        let g = interleaving_graph(&rep);
        let e = canon_connected(&CanonInput::from_rep(rep)).unwrap();
        prop_assert!(brute_iso(&decode(&e).unwrap().join_all(), &g).unwrap());
    }

    #[test]
    fn graph_and_diagram_inputs_agree(rep in small_connected_rep()) {
        let g = interleaving_graph(&rep);
        prop_assert_eq!(
            canon_connected(&CanonInput::from_graph(&g)).unwrap(),
            canon_connected(&CanonInput::from_rep(rep)).unwrap()
        );
    }

    #[test]
    fn plain_decomposition_is_exact(rep in small_connected_rep()) {
        let g = interleaving_graph(&rep);
        prop_assert_eq!(decompose(&g).unwrap().join_all(), g);
    }
}
