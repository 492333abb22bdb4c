//! Exhaustive circle-graph recognition for small graphs.

use circle_canon::oracle::brute_find_rep;
use circle_canon::ColoredGraph;

fn main() -> circle_canon::Result<()> {
    let cycle: Vec<(usize, usize)> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
    let c5 = ColoredGraph::uncolored(5, &cycle)?;
    match brute_find_rep(&c5)? {
        Some(rep) => println!("C5: {:?}", rep.word()),
        None => println!("C5: not a circle graph"),
    }

    // the 5-wheel is the smallest graph that is not a circle graph
    let mut wheel = cycle.clone();
    wheel.extend((0..5).map(|v| (v, 5)));
    let w5 = ColoredGraph::uncolored(6, &wheel)?;
    match brute_find_rep(&w5)? {
        Some(rep) => println!("W5: {:?}", rep.word()),
        None => println!("W5: not a circle graph"),
    }
    Ok(())
}
