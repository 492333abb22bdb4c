//! Isomorphism testing by comparing encodings.

use circle_canon::{isomorphic, CanonInput, ColoredGraph};

fn main() -> circle_canon::Result<()> {
    let path = ColoredGraph::uncolored(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
    let shuffled = path.relabel(&[3, 0, 4, 1, 2]);
    let spider = ColoredGraph::uncolored(5, &[(0, 1), (0, 2), (0, 3), (3, 4)])?;

    let p = CanonInput::from_graph(&path);
    println!("P5 vs relabeled P5: {}", isomorphic(&p, &CanonInput::from_graph(&shuffled))?);
    println!("P5 vs spider:       {}", isomorphic(&p, &CanonInput::from_graph(&spider))?);

    // disconnected graphs compare component by component
    let a = ColoredGraph::uncolored(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)])?;
    let b = ColoredGraph::uncolored(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (4, 5)])?;
    println!("P3+K3 vs K3+P3:     {}", isomorphic(&CanonInput::from_graph(&a), &CanonInput::from_graph(&b))?);
    Ok(())
}
