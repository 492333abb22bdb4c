//! Minimal split decomposition of a circle graph, printed as Graphviz DOT.
//!
//! `cargo run --example split_tree | dot -Tsvg > tree.svg`

use circle_canon::chord::interleaving_graph;
use circle_canon::tree::{minimal_split_tree, NodeKind};
use circle_canon::{CircleRep, SeedOrder};

fn main() -> circle_canon::Result<()> {
    // a 5-cycle, a triangle hanging off chord 0 and a path off chord 2
    let (rep, _) = CircleRep::parse(&[0, 4, 1, 0, 2, 1, 3, 2, 4, 3])?;
    let g = interleaving_graph(&rep);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend([(0, 5), (0, 6), (5, 6), (2, 7), (7, 8)]);
    let g = circle_canon::ColoredGraph::uncolored(9, &edges)?;

    let tree = minimal_split_tree(&g, SeedOrder::Lexicographic)?;
    for id in tree.node_ids() {
        let kind = match tree.kind(id) {
            Some(NodeKind::Star { .. }) => "star",
            Some(NodeKind::Complete) => "complete",
            Some(NodeKind::Prime) => "prime",
            None => "?",
        };
        eprintln!("node {id}: {kind} on {} vertices", tree.node_vertices(id).len());
    }
    print!("{}", tree.to_dot());
    Ok(())
}
