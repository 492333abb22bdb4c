//! Encoding size and running time as diagrams grow.
//!
//! Usage: `cargo run --release --example scaling [uniform-sizes...]`

use std::collections::HashMap;
use std::time::Instant;

use circle_canon::canon::{canon_tree, center_root};
use circle_canon::chord::random_rep;
use circle_canon::generate::composed_diagram;
use circle_canon::{canon_graph, CanonInput};

fn main() {
    let uniform: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let uniform = if uniform.is_empty() { vec![50, 100, 200] } else { uniform };

    println!("uniform random diagrams, full pipeline");
    for n in uniform {
        let input = CanonInput::from_rep(random_rep(n, 1).unwrap());
        let m = input.graph().edge_count();
        let start = Instant::now();
        let e = canon_graph(&input).unwrap();
        println!(
            "  n={n:6} m={m:9} len={:7} len/(n+m)={:.4} time={:?}",
            e.len(),
            e.len() as f64 / (n + m) as f64,
            start.elapsed()
        );
    }

    println!("composed diagrams, full pipeline");
    for n in [100, 1000, 10_000] {
        let c = composed_diagram(n, 1).unwrap();
        let input = CanonInput::from_rep(c.rep.clone());
        let (n, m) = (input.graph().vertex_count(), input.graph().edge_count());
        let start = Instant::now();
        let e = canon_graph(&input).unwrap();
        println!(
            "  n={n:6} m={m:9} len={:7} len/(n+m)={:.4} time={:?}",
            e.len(),
            e.len() as f64 / (n + m) as f64,
            start.elapsed()
        );
    }

    println!("composed diagrams, canonization of the known tree");
    let mut previous: Option<f64> = None;
    for k in 14..=16 {
        let c = composed_diagram(1 << k, 1).unwrap();
        let rt = center_root(&c.tree);
        let reps: HashMap<_, _> = c.node_reps.clone();
        let mut times: Vec<f64> = (0..5)
            .map(|_| {
                let start = Instant::now();
                canon_tree(&rt, &reps).unwrap();
                start.elapsed().as_secs_f64()
            })
            .collect();
        times.sort_by(f64::total_cmp);
        let median = times[2];
        let ratio = previous.map(|p| median / p);
        println!("  n=2^{k} median={median:.4}s ratio={ratio:?}");
        previous = Some(median);
    }
}
