//! Uniform random chord diagrams and the sparse composed family with a known
//! split tree.

use circle_canon::canon::{canon_tree, center_root};
use circle_canon::chord::{interleaving_graph, random_rep};
use circle_canon::generate::composed_diagram;
use circle_canon::text::format_rep;
use circle_canon::{canon_connected, CanonInput};

fn main() -> circle_canon::Result<()> {
    print!("{}", format_rep(&random_rep(6, 42)?));

    let c = composed_diagram(60, 42)?;
    let g = interleaving_graph(&c.rep);
    println!(
        "composed: {} chords, {} crossings, {} tree nodes",
        c.rep.chord_count(),
        g.edge_count(),
        c.tree.node_count()
    );
    let known = canon_tree(&center_root(&c.tree), &c.node_reps)?;
    let computed = canon_connected(&CanonInput::from_rep(c.rep))?;
    println!("constructed tree encodes like the decomposition: {}", known == computed);
    Ok(())
}
