//! Encodings are decodable: rebuild the split tree, read the graph back and
//! re-encode it.

use circle_canon::canon::{decode_with_reps, realize};
use circle_canon::chord::random_rep;
use circle_canon::pipeline::canon_connected;
use circle_canon::CanonInput;

fn main() -> circle_canon::Result<()> {
    let mut seed = 0;
    let rep = loop {
        let rep = random_rep(12, seed)?;
        if circle_canon::chord::interleaving_graph(&rep).is_connected() {
            break rep;
        }
        seed += 1;
    };
    let e = canon_connected(&CanonInput::from_rep(rep))?;
    println!("encoding: {e}");

    let (tree, reps) = decode_with_reps(&e)?;
    println!("decoded tree: {} nodes", tree.node_count());
    let graph = tree.join_all();
    println!("decoded graph: {} vertices, {} edges", graph.vertex_count(), graph.edge_count());

    // the prime nodes carry diagrams, so the whole graph gets one too
    let diagram = realize(&tree, &reps)?;
    let again = canon_connected(&CanonInput::with_rep(&graph, diagram)?)?;
    println!("re-encoded equal: {}", again == e);
    Ok(())
}
