//! Random chord diagrams assembled from small pieces, with their minimal
//! split tree known by construction.
//!
//! Uniformly random diagrams have about `n²/3` crossings, so their graphs get
//! dense quickly. The diagrams here are sparse at any size: a random tree of
//! small prime diagrams, cliques and stars is glued along markers, and the
//! global diagram is realized from that tree.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{realize, NodeRep};
use crate::chord::{interleaving_graph, random_rep_with, CircleRep};
use crate::error::{Error, Result};
use crate::split::{find_split_connected, SeedOrder};
use crate::tree::{NodeKind, SplitTree, VertexId, VertexLabel};

/// A diagram together with its minimal split tree and the diagrams of the
/// prime nodes. Chord `k` of `rep` is the vertex labeled `Original(k)`.
#[derive(Clone, Debug)]
pub struct Composed {
    pub rep: CircleRep,
    pub tree: SplitTree,
    pub node_reps: HashMap<usize, NodeRep>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Prime,
    Complete,
    /// Center is local vertex 0.
    Star,
}

struct Piece {
    shape: Shape,
    /// Local chord diagram; chord `i` is `vertices[i]`.
    word: Vec<u32>,
    vertices: Vec<usize>,
}

fn clique_word(r: u32) -> Vec<u32> {
    (0..r).chain(0..r).collect()
}

fn star_word(r: u32) -> Vec<u32> {
    // each leaf has one endpoint on either side of the center chord
    let mut w: Vec<u32> = (0..r).collect();
    w.push(0);
    w.extend((1..r).rev());
    w
}

fn prime_pool(rng: &mut ChaCha8Rng, size: usize) -> Vec<Vec<u32>> {
    let mut pool = Vec::with_capacity(size);
    while pool.len() < size {
        let k = rng.gen_range(5..=7);
        let rep = random_rep_with(k, rng);
        let g = interleaving_graph(&rep);
        if g.is_connected() && find_split_connected(&g, SeedOrder::Lexicographic).is_none() {
            pool.push(rep.word().to_vec());
        }
    }
    pool
}

/// A composed diagram with at least `chords` chords (`chords >= 3`).
pub fn composed_diagram(chords: usize, seed: u64) -> Result<Composed> {
    if chords < 3 {
        return Err(Error::NoChords);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = prime_pool(&mut rng, 24);

    let mut pieces: Vec<Piece> = Vec::new();
    let mut node_of: Vec<usize> = Vec::new();
    let mut partner: Vec<Option<usize>> = Vec::new();
    let mut originals: Vec<usize> = Vec::new();

    let new_piece = |rng: &mut ChaCha8Rng, node_of: &mut Vec<usize>, partner: &mut Vec<Option<usize>>, id: usize| {
        let (shape, word) = match rng.gen_range(0..4) {
            0 | 1 => (Shape::Prime, pool.choose(rng).expect("pool").clone()),
            2 => (Shape::Complete, clique_word(rng.gen_range(3..=5))),
            _ => (Shape::Star, star_word(rng.gen_range(3..=5))),
        };
        let k = word.len() / 2;
        let vertices: Vec<usize> = (node_of.len()..node_of.len() + k).collect();
        node_of.extend(std::iter::repeat_n(id, k));
        partner.extend(std::iter::repeat_n(None, k));
        Piece { shape, word, vertices }
    };

    let root = new_piece(&mut rng, &mut node_of, &mut partner, 0);
    originals.extend(&root.vertices);
    pieces.push(root);
    while originals.len() < chords {
        let id = pieces.len();
        let piece = new_piece(&mut rng, &mut node_of, &mut partner, id);
        // pick a host vertex and a marker so the new tree edge is not joinable
        let choice = (0..16).find_map(|_| {
            let slot = rng.gen_range(0..originals.len());
            let local = rng.gen_range(0..piece.vertices.len());
            let host = &pieces[node_of[originals[slot]]];
            let host_center = host.shape == Shape::Star && host.vertices[0] == originals[slot];
            let joinable = match (host.shape, piece.shape) {
                (Shape::Complete, Shape::Complete) => true,
                (Shape::Star, Shape::Star) => host_center != (local == 0),
                _ => false,
            };
            (!joinable).then_some((slot, local))
        });
        let Some((slot, local)) = choice else {
            node_of.truncate(piece.vertices[0]);
            partner.truncate(piece.vertices[0]);
            continue;
        };
        let host = originals.swap_remove(slot);
        let marker = piece.vertices[local];
        partner[host] = Some(marker);
        partner[marker] = Some(host);
        originals.extend(piece.vertices.iter().filter(|&&v| v != marker));
        pieces.push(piece);
    }

    // dense original labels in vertex order
    let mut label = vec![u32::MAX; node_of.len()];
    let mut next = 0;
    for v in 0..node_of.len() {
        if partner[v].is_none() {
            label[v] = next;
            next += 1;
        }
    }

    let (tree, node_reps) = build_tree(&pieces, &partner, &label);
    let rep = realize(&tree, &node_reps)?;
    Ok(Composed { rep, tree, node_reps })
}

fn build_tree(pieces: &[Piece], partner: &[Option<usize>], label: &[u32]) -> (SplitTree, HashMap<usize, NodeRep>) {
    let mut tree = SplitTree::empty();
    let mut tree_id = vec![usize::MAX; label.len()];
    let mut reps = HashMap::new();
    for piece in pieces {
        let node = tree.add_node();
        for &v in &piece.vertices {
            let l = if label[v] == u32::MAX { VertexLabel::Marker } else { VertexLabel::Original(label[v] as usize) };
            tree_id[v] = tree.add_vertex(node, l);
        }
        let rep = CircleRep::from_word(piece.word.clone()).expect("piece word");
        for (u, w) in interleaving_graph(&rep).edges() {
            tree.add_normal_edge(tree_id[piece.vertices[u]], tree_id[piece.vertices[w]]);
        }
        let local: Vec<VertexId> = piece.vertices.iter().map(|&v| tree_id[v]).collect();
        let kind = match piece.shape {
            Shape::Prime => {
                reps.insert(node, NodeRep { rep, vertex_of_chord: local });
                NodeKind::Prime
            }
            Shape::Complete => NodeKind::Complete,
            Shape::Star => NodeKind::Star { center: local[0] },
        };
        tree.set_kind(node, kind);
    }
    for (v, p) in partner.iter().enumerate() {
        if let Some(p) = *p {
            if v < p {
                tree.add_tree_edge(tree_id[v], tree_id[p]);
            }
        }
    }
    (tree, reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piece_words() {
        let star = interleaving_graph(&CircleRep::from_word(star_word(4)).unwrap());
        assert_eq!(star.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
        let k4 = interleaving_graph(&CircleRep::from_word(clique_word(4)).unwrap());
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn tree_matches_diagram() {
        for seed in 0..20 {
            let c = composed_diagram(40, seed).unwrap();
            c.tree.validate().unwrap();
            assert!(c.tree.is_minimal());
            assert!(c.rep.chord_count() >= 40);
            assert_eq!(c.tree.join_all(), interleaving_graph(&c.rep), "seed {seed}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = composed_diagram(100, 7).unwrap();
        let b = composed_diagram(100, 7).unwrap();
        assert_eq!(a.rep, b.rep);
    }
}
