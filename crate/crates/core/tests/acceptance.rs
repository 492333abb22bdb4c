//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p circle-canon --test acceptance`.

use std::collections::HashMap;
use std::time::Instant;

use circle_canon::canon::{canon_tree, center_root, decode, decode_with_reps, realize};
use circle_canon::chord::{interleaving_graph, lambda_encoding, random_rep, CircleRep};
use circle_canon::generate::composed_diagram;
use circle_canon::oracle::{brute_iso, brute_min_rotation, brute_splits};
use circle_canon::pipeline::{canon_connected, canon_connected_with, canon_graph, CanonInput};
use circle_canon::tree::{classify_node, minimal_split_tree, NodeKind, SplitTree};
use circle_canon::{find_split, min_rotation, ColoredGraph, SeedOrder};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Length bound constant for criterion 9.
const LENGTH_CONSTANT: f64 = 2.0;
/// Allowed growth of canonization time per doubling, criterion 10.
const DOUBLING_RATIO: f64 = 2.5;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every chord diagram on `n` chords, labels by first occurrence.
fn all_diagrams(n: usize) -> Vec<CircleRep> {
    fn fill(word: &mut Vec<u32>, next: u32, out: &mut Vec<CircleRep>) {
        let Some(first) = word.iter().position(|&l| l == u32::MAX) else {
            out.push(CircleRep::from_word(word.clone()).unwrap().normalized());
            return;
        };
        word[first] = next;
        for j in first + 1..word.len() {
            if word[j] == u32::MAX {
                word[j] = next;
                fill(word, next + 1, out);
                word[j] = u32::MAX;
            }
        }
        word[first] = u32::MAX;
    }
    let mut out = Vec::new();
    fill(&mut vec![u32::MAX; 2 * n], 0, &mut out);
    out
}

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut p: Vec<u32> = (0..n as u32).collect();
    p.shuffle(rng);
    p
}

fn connected_random_rep(n: usize, rng: &mut ChaCha8Rng) -> CircleRep {
    loop {
        let rep = random_rep(n, rng.gen()).unwrap();
        if interleaving_graph(&rep).is_connected() {
            return rep;
        }
    }
}

fn canon_of_rep(rep: &CircleRep) -> Vec<u32> {
    canon_graph(&CanonInput::from_rep(rep.clone())).unwrap().0
}

/// Minimal trees of every component, for the joining-condition scan.
fn component_trees(g: &ColoredGraph, order: SeedOrder) -> Vec<SplitTree> {
    g.components()
        .iter()
        .filter(|c| c.len() >= 3)
        .map(|c| minimal_split_tree(&g.induced(c), order).unwrap())
        .collect()
}

fn criterion_1() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=5 {
        for rep in all_diagrams(n) {
            let g = interleaving_graph(&rep);
            if g.is_connected() {
                let e = canon_connected(&CanonInput::from_rep(rep.clone())).unwrap();
                let from_graph = canon_connected(&CanonInput::from_graph(&g)).unwrap();
                check(e == from_graph, || format!("diagram {:?}: graph-only input differs", rep.word()))?;
                graphs.push((g, e));
            }
        }
    }
    let mut pairs = 0u64;
    let mut iso_pairs = 0u64;
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            let fast = graphs[i].1 == graphs[j].1;
            let slow = brute_iso(&graphs[i].0, &graphs[j].0).unwrap();
            check(fast == slow, || format!("pair {i},{j}: encodings say {fast}, oracle says {slow}"))?;
            pairs += 1;
            iso_pairs += slow as u64;
        }
    }
    Ok(format!("{} connected diagrams, {pairs} pairs ({iso_pairs} isomorphic)", graphs.len()))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut iso = 0;
    for pair in 0..500 {
        let n = rng.gen_range(6..=8);
        let a = random_rep(n, rng.gen()).unwrap();
        let ga = interleaving_graph(&a);
        let (gb, input_b) = match pair % 3 {
            // same graph under a random vertex permutation, given without a diagram
            0 => {
                let perm: Vec<usize> = random_perm(n, &mut rng).iter().map(|&p| p as usize).collect();
                let gb = ga.relabel(&perm);
                let input = CanonInput::from_graph(&gb);
                (gb, input)
            }
            // a rotated, possibly reversed and relabeled copy of the diagram
            1 => {
                let mut b = a.rotated(rng.gen_range(0..2 * n)).relabeled(&random_perm(n, &mut rng));
                if rng.gen_bool(0.5) {
                    b = b.reversed();
                }
                (interleaving_graph(&b), CanonInput::from_rep(b))
            }
            _ => {
                let b = random_rep(n, rng.gen()).unwrap();
                (interleaving_graph(&b), CanonInput::from_rep(b))
            }
        };
        let fast = canon_graph(&CanonInput::from_rep(a.clone())).unwrap() == canon_graph(&input_b).unwrap();
        let slow = brute_iso(&ga, &gb).unwrap();
        check(fast == slow, || format!("pair {pair} on {n} chords: encodings say {fast}, oracle says {slow}"))?;
        iso += slow as usize;
    }
    Ok(format!("500 pairs, {iso} isomorphic"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..1000 {
        let n = rng.gen_range(1..=50);
        let rep = random_rep(n, rng.gen()).unwrap();
        let e = canon_of_rep(&rep);
        let rotated = rep.rotated(rng.gen_range(0..2 * n));
        let relabeled = rep.relabeled(&random_perm(n, &mut rng));
        for (what, other) in [("rotation", rotated), ("reversal", rep.reversed()), ("relabeling", relabeled)] {
            check(canon_of_rep(&other) == e, || format!("diagram {i} ({n} chords) changes under {what}"))?;
        }
    }
    Ok("1000 diagrams, up to 50 chords".into())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 1..=8 {
        for _ in 0..30 {
            let rep = connected_random_rep(n, &mut rng);
            let g = interleaving_graph(&rep);
            let e = canon_connected(&CanonInput::from_rep(rep)).unwrap();
            let back = decode(&e).unwrap().join_all();
            check(brute_iso(&back, &g).unwrap(), || format!("{n} chords: decoded graph is not isomorphic"))?;
        }
    }
    let mut sizes: Vec<usize> = (0..60).map(|_| rng.gen_range(1..=200)).collect();
    sizes.push(200);
    for &n in &sizes {
        let rep = connected_random_rep(n, &mut rng);
        let e = canon_connected(&CanonInput::from_rep(rep)).unwrap();
        let (tree, reps) = decode_with_reps(&e).unwrap();
        let g = tree.join_all();
        let diagram = realize(&tree, &reps).unwrap();
        let again = canon_connected(&CanonInput::with_rep(&g, diagram).unwrap()).unwrap();
        check(again == e, || format!("{n} chords: re-encoding the decoded graph differs"))?;
    }
    Ok(format!("240 brute-checked up to 8 chords, {} re-encoded up to 200", sizes.len()))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..100 {
        let n = rng.gen_range(3..=30);
        let rep = connected_random_rep(n, &mut rng);
        let input = CanonInput::from_rep(rep);
        let reference = canon_connected(&input).unwrap();
        for _ in 0..10 {
            let order = SeedOrder::Shuffled(rng.gen());
            let e = canon_connected_with(&input, order).unwrap();
            check(e == reference, || format!("diagram {i} ({n} chords): encoding depends on {order:?}"))?;
        }
    }
    Ok("100 diagrams x 10 seed orders".into())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut words = 0;
    for _ in 0..2000 {
        let n = rng.gen_range(1..=40);
        let rep = random_rep(n, rng.gen()).unwrap();
        let colors: Vec<u32> = (0..n).map(|_| rng.gen_range(0..n as u32)).collect();
        for r in [rep.clone(), rep.reversed()] {
            let lambda = lambda_encoding(&r, &colors).unwrap();
            let partners = r.partners();
            let top_gap = 2 * n as u32 - 2;
            for (i, &partner) in partners.iter().enumerate() {
                let (g, c) = (lambda.gap(i), lambda.shifted_color(i));
                check(g + lambda.gap(partner) == top_gap, || format!("gaps at endpoint {i} of {n} chords"))?;
                check(g <= top_gap && c > top_gap && c <= 3 * n as u32 - 2, || format!("ranges at endpoint {i}"))?;
            }
            words += 1;
        }
    }
    Ok(format!("{words} lambda words"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=64);
        let alphabet = rng.gen_range(1..=8);
        let word: Vec<u32> = (0..len).map(|_| rng.gen_range(0..alphabet)).collect();
        let (_, fast) = min_rotation(&word).unwrap();
        let slow = brute_min_rotation(&word).unwrap();
        check(fast == slow, || format!("word {word:?}"))?;
    }
    Ok("10000 words".into())
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    let mut prime = 0;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = ColoredGraph::uncolored(n, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let found = find_split(&g).unwrap();
            let all = brute_splits(&g).unwrap();
            check(found.is_none() == all.is_empty(), || format!("{n} vertices, edges {edges:?}"))?;
            if let Some(s) = found {
                s.validate(&g).map_err(|e| format!("edges {edges:?}: {e}"))?;
            } else {
                prime += 1;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} connected graphs, {prime} without splits"))
}

fn criterion_9() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut report = Vec::new();
    let mut record = |family: &str, n: usize, m: usize, len: usize| -> Result<(), String> {
        let ratio = len as f64 / (n + m) as f64;
        worst = worst.max(ratio);
        check(ratio <= LENGTH_CONSTANT, || format!("{family} n={n}: length {len} > {LENGTH_CONSTANT}(n+m)"))?;
        report.push(format!("{family} {n}: {ratio:.3}"));
        Ok(())
    };
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..5 {
        let rep = random_rep(100, rng.gen()).unwrap();
        let g = interleaving_graph(&rep);
        record("uniform", 100, g.edge_count(), canon_of_rep(&rep).len())?;
    }
    for (n, samples) in [(100, 5), (1000, 3), (10_000, 1)] {
        for _ in 0..samples {
            let c = composed_diagram(n, rng.gen()).unwrap();
            let g = interleaving_graph(&c.rep);
            record("composed", g.vertex_count(), g.edge_count(), canon_of_rep(&c.rep).len())?;
        }
    }
    Ok(format!("C = {LENGTH_CONSTANT}, worst len/(n+m) = {worst:.3}"))
}

fn criterion_10() -> Outcome {
    // the known tree really is the pipeline's tree
    for seed in 0..3 {
        let c = composed_diagram(1000, seed).unwrap();
        let known = canon_tree(&center_root(&c.tree), &c.node_reps).unwrap();
        let piped = canon_connected(&CanonInput::from_rep(c.rep.clone())).unwrap();
        check(known == piped, || format!("seed {seed}: constructed tree disagrees with the decomposition"))?;
    }
    let mut medians = Vec::new();
    for k in 14..=16 {
        let c = composed_diagram(1 << k, 10 + k as u64).unwrap();
        let rt = center_root(&c.tree);
        let reps: HashMap<_, _> = c.node_reps;
        let mut times: Vec<f64> = (0..5)
            .map(|_| {
                let start = Instant::now();
                canon_tree(&rt, &reps).unwrap();
                start.elapsed().as_secs_f64()
            })
            .collect();
        times.sort_by(f64::total_cmp);
        medians.push(times[2]);
    }
    let ratios: Vec<f64> = medians.windows(2).map(|w| w[1] / w[0]).collect();
    let text = format!(
        "medians {:.1}/{:.1}/{:.1} ms, ratios {:.2} {:.2}",
        medians[0] * 1e3,
        medians[1] * 1e3,
        medians[2] * 1e3,
        ratios[0],
        ratios[1]
    );
    check(ratios.iter().all(|&r| r <= DOUBLING_RATIO), || text.clone())?;
    Ok(text)
}

fn criterion_11() -> Outcome {
    let mut trees = Vec::new();
    for n in 3..=5 {
        for rep in all_diagrams(n) {
            trees.extend(component_trees(&interleaving_graph(&rep), SeedOrder::Lexicographic));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let g = interleaving_graph(&random_rep(rng.gen_range(3..=50), rng.gen()).unwrap());
        trees.extend(component_trees(&g, SeedOrder::Shuffled(rng.gen())));
    }
    for seed in 0..5 {
        let c = composed_diagram(300, seed).unwrap();
        trees.extend(component_trees(&interleaving_graph(&c.rep), SeedOrder::Lexicographic));
        trees.push(c.tree);
    }
    for (i, t) in trees.iter().enumerate() {
        check(t.is_minimal(), || format!("tree {i} has a joinable tree edge"))?;
        for id in t.node_ids() {
            let (g, _) = t.node_graph(id);
            let kind = classify_node(&g).map_err(|e| format!("tree {i} node {id}: {e}"))?;
            let stored = t.kind(id).ok_or_else(|| format!("tree {i} node {id} unclassified"))?;
            check(
                std::mem::discriminant(&kind) == std::mem::discriminant(&stored)
                    || (matches!(kind, NodeKind::Star { .. }) && g.vertex_count() == 2),
                || format!("tree {i} node {id}: stored {stored:?}, found {kind:?}"),
            )?;
        }
    }
    Ok(format!("{} minimal trees scanned", trees.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 oracle equivalence, all diagrams up to 5 chords", criterion_1),
        ("2 randomized equivalence, 6..8 chords", criterion_2),
        ("3 invariance under rotation, reversal, relabeling", criterion_3),
        ("4 decode round trip", criterion_4),
        ("5 minimal tree independent of seed order", criterion_5),
        ("6 lambda word invariants", criterion_6),
        ("7 min_rotation vs brute force", criterion_7),
        ("8 find_split vs brute force, all graphs up to 6 vertices", criterion_8),
        ("9 linear encoding length", criterion_9),
        ("10 canonization time scaling", criterion_10),
        ("11 joining condition after minimalize", criterion_11),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
