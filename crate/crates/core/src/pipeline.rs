//! End-to-end canonization of circle graphs and isomorphism testing.

use std::collections::HashMap;

use crate::canon::{canon_tree, center_root, derive_node_representation, NodeRep, RootedTree, K1_ENCODING, K2_ENCODING};
use crate::chord::{interleaving_graph, CircleRep};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Encoding};
use crate::lexsort::lex_sort_sequences;
use crate::oracle::{brute_find_rep, FIND_REP_LIMIT};
use crate::split::SeedOrder;
use crate::tree::{minimal_split_tree, NodeId, NodeKind};

/// A circle graph given by its edges, by a chord diagram, or by both. Vertex
/// colors are ignored.
#[derive(Clone, Debug)]
pub struct CanonInput {
    graph: ColoredGraph,
    rep: Option<CircleRep>,
}

impl CanonInput {
    /// The interleaving graph of `rep`, with chord `k` as vertex `k`.
    pub fn from_rep(rep: CircleRep) -> CanonInput {
        CanonInput { graph: interleaving_graph(&rep), rep: Some(rep) }
    }

    /// A graph without a representation. Prime nodes of its split tree are
    /// recognized exhaustively, so they must be small.
    pub fn from_graph(graph: &ColoredGraph) -> CanonInput {
        let n = graph.vertex_count();
        let adj = (0..n).map(|v| graph.neighbors(v).to_vec()).collect();
        CanonInput { graph: ColoredGraph::from_adjacency(adj, vec![0; n]), rep: None }
    }

    /// A graph together with a diagram realizing it (chord `k` is vertex `k`).
    pub fn with_rep(graph: &ColoredGraph, rep: CircleRep) -> Result<CanonInput> {
        let input = CanonInput::from_graph(graph);
        let realized = interleaving_graph(&rep);
        if realized.vertex_count() != input.graph.vertex_count()
            || (0..realized.vertex_count()).any(|v| realized.neighbors(v) != input.graph.neighbors(v))
        {
            return Err(Error::RepresentationMismatch("diagram does not realize the graph".into()));
        }
        Ok(CanonInput { graph: input.graph, rep: Some(rep) })
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn rep(&self) -> Option<&CircleRep> {
        self.rep.as_ref()
    }
}

/// Minimal split tree rooted at its center, with a diagram for every prime
/// node. The input must be connected with at least three vertices.
pub fn prepare_connected(input: &CanonInput, order: SeedOrder) -> Result<(RootedTree, HashMap<NodeId, NodeRep>)> {
    let tree = minimal_split_tree(&input.graph, order)?;
    let rt = center_root(&tree);
    let mut reps = HashMap::new();
    for id in rt.tree().node_ids() {
        if rt.tree().kind(id) != Some(NodeKind::Prime) {
            continue;
        }
        let size = rt.tree().node_vertices(id).len();
        let derived = input.rep.as_ref().map(|rep| derive_node_representation(&rt, id, rep));
        let nr = match derived {
            Some(Ok(nr)) => nr,
            Some(Err(e)) if size > FIND_REP_LIMIT => return Err(e),
            _ if size > FIND_REP_LIMIT => {
                return Err(Error::RecognitionTooLarge { size, limit: FIND_REP_LIMIT });
            }
            _ => {
                let (g, map) = rt.tree().node_graph(id);
                let rep = brute_find_rep(&g)?.ok_or(Error::NotCircle { size })?;
                NodeRep { rep, vertex_of_chord: map }
            }
        };
        reps.insert(id, nr);
    }
    Ok((rt, reps))
}

/// Canonical encoding of a connected circle graph.
pub fn canon_connected(input: &CanonInput) -> Result<Encoding> {
    canon_connected_with(input, SeedOrder::Lexicographic)
}

/// As [`canon_connected`], with a chosen order for trying split seeds. The
/// result does not depend on it.
pub fn canon_connected_with(input: &CanonInput, order: SeedOrder) -> Result<Encoding> {
    let g = &input.graph;
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(Error::Disconnected);
    }
    match g.vertex_count() {
        1 => return Ok(Encoding(K1_ENCODING.to_vec())),
        2 => return Ok(Encoding(K2_ENCODING.to_vec())),
        _ => {}
    }
    let (rt, reps) = prepare_connected(input, order)?;
    canon_tree(&rt, &reps)
}

/// Canonical encoding of any circle graph: the number of components, then
/// the length-prefixed component encodings in lexicographic order.
pub fn canon_graph(input: &CanonInput) -> Result<Encoding> {
    canon_graph_with(input, SeedOrder::Lexicographic)
}

pub fn canon_graph_with(input: &CanonInput, order: SeedOrder) -> Result<Encoding> {
    let parts = input
        .graph
        .components()
        .into_iter()
        .map(|comp| {
            let part = CanonInput {
                graph: input.graph.induced(&comp),
                rep: input.rep.as_ref().map(|r| r.restricted(&comp)),
            };
            canon_connected_with(&part, order).map(|e| e.0)
        })
        .collect::<Result<Vec<Vec<u32>>>>()?;
    let (sorted, _) = lex_sort_sequences(&parts);
    let mut out = vec![parts.len() as u32];
    for i in sorted {
        out.push(parts[i].len() as u32);
        out.extend_from_slice(&parts[i]);
    }
    Ok(Encoding(out))
}

pub fn isomorphic(a: &CanonInput, b: &CanonInput) -> Result<bool> {
    Ok(canon_graph(a)? == canon_graph(b)?)
}
