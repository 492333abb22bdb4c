//! Canonical encodings of a chord diagram and of the same graph given by
//! its edges.

use circle_canon::chord::interleaving_graph;
use circle_canon::{canon_graph, CanonInput, CircleRep};

fn main() -> circle_canon::Result<()> {
    // six chords: a 4-cycle 0-2-1-3 with a path 2-5-4-3 around it
    let (rep, _) = CircleRep::parse(&[0, 5, 4, 1, 5, 0, 2, 1, 3, 2, 4, 3])?;
    let graph = interleaving_graph(&rep);
    println!("edges: {:?}", graph.edges().collect::<Vec<_>>());

    let from_rep = canon_graph(&CanonInput::from_rep(rep.clone()))?;
    println!("from the diagram:         {from_rep}");

    // without a diagram, small prime nodes are recognized by exhaustive search
    let from_graph = canon_graph(&CanonInput::from_graph(&graph))?;
    println!("from the edge list:       {from_graph}");

    let turned = rep.rotated(5).reversed();
    println!("rotated and mirrored:     {}", canon_graph(&CanonInput::from_rep(turned))?);
    Ok(())
}
