//! Canonization of split trees, layer by layer from the leaves to the center,
//! and decoding of the resulting encodings.

use std::collections::HashMap;

use crate::chord::{canon_rep, interleaving_graph, CircleRep, LambdaWord};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Encoding};
use crate::lexsort::lex_sort_sequences;
use crate::tree::{classify_node, NodeId, NodeKind, SplitTree, VertexId, VertexLabel};

/// Encoding of the one-vertex graph.
pub const K1_ENCODING: [u32; 2] = [0, 1];
/// Encoding of the one-edge graph.
pub const K2_ENCODING: [u32; 2] = [0, 2];

/// Chord diagram of a prime node: chord `i` stands for tree vertex
/// `vertex_of_chord[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeRep {
    pub rep: CircleRep,
    pub vertex_of_chord: Vec<VertexId>,
}

/// A split tree rooted at its center node.
#[derive(Clone, Debug)]
pub struct RootedTree {
    tree: SplitTree,
    root: NodeId,
    synthetic: Option<NodeId>,
    /// Per node: its marker whose tree edge leads to the parent.
    up_marker: Vec<Option<VertexId>>,
    children: Vec<Vec<NodeId>>,
    layers: Vec<Vec<NodeId>>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl RootedTree {
    pub fn tree(&self) -> &SplitTree {
        &self.tree
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// The node inserted on a central tree edge, if there was one.
    pub fn synthetic(&self) -> Option<NodeId> {
        self.synthetic
    }

    /// Nodes grouped by distance from the root.
    pub fn layers(&self) -> &[Vec<NodeId>] {
        &self.layers
    }

    pub fn children(&self, node: NodeId) -> &[NodeId] {
        &self.children[node]
    }

    /// Marker of `node` that points at its parent (`None` for the root).
    pub fn up_marker(&self, node: NodeId) -> Option<VertexId> {
        self.up_marker[node]
    }

    /// Marker in the parent node that points at `node`.
    pub fn parent_marker(&self, node: NodeId) -> Option<VertexId> {
        self.up_marker[node].and_then(|m| self.tree.partner(m))
    }

    pub fn parent(&self, node: NodeId) -> Option<NodeId> {
        self.parent_marker(node).map(|m| self.tree.node_of(m))
    }

    /// Markers start with color 0 and every other vertex with color 1.
    pub fn initial_colors(&self) -> Vec<u32> {
        (0..self.tree.vertex_capacity()).map(|v| if self.tree.is_marker(v) { 0 } else { 1 }).collect()
    }

    fn in_subtree(&self, root: NodeId, x: NodeId) -> bool {
        self.tin[root] <= self.tin[x] && self.tin[x] <= self.tout[root]
    }
}

/// Roots the tree at the center of its node incidence tree. A central tree
/// edge is subdivided by a new complete node on two markers.
pub fn center_root(t: &SplitTree) -> RootedTree {
    let mut tree = t.clone();
    let ids: Vec<NodeId> = tree.node_ids().collect();
    assert!(!ids.is_empty(), "cannot root an empty tree");
    let cap = tree.node_capacity();
    let mut degree = vec![0usize; cap];
    for &id in &ids {
        degree[id] = tree.node_neighbors(id).len();
    }
    let mut removed = vec![false; cap];
    let mut remaining = ids.len();
    let mut leaves: Vec<NodeId> = ids.iter().copied().filter(|&id| degree[id] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &leaves {
            removed[leaf] = true;
            remaining -= 1;
            for (_, other) in tree.node_neighbors(leaf) {
                if !removed[other] {
                    degree[other] -= 1;
                    if degree[other] == 1 {
                        next.push(other);
                    }
                }
            }
        }
        leaves = next;
    }
    let center: Vec<NodeId> = ids.iter().copied().filter(|&id| !removed[id]).collect();
    let mut synthetic = None;
    let root = if center.len() == 1 {
        center[0]
    } else {
        let (a, b) = (center[0], center[1]);
        let (u, v) = tree
            .node_neighbors(a)
            .into_iter()
            .find(|&(_, o)| o == b)
            .map(|(m, _)| (m, tree.partner(m).expect("marker")))
            .expect("the two central nodes are adjacent");
        tree.remove_tree_edge(u);
        let s = tree.add_node();
        let s1 = tree.add_vertex(s, VertexLabel::Marker);
        let s2 = tree.add_vertex(s, VertexLabel::Marker);
        tree.add_normal_edge(s1, s2);
        tree.add_tree_edge(u, s1);
        tree.add_tree_edge(s2, v);
        tree.set_kind(s, NodeKind::Complete);
        synthetic = Some(s);
        s
    };

    let cap = tree.node_capacity();
    let mut up_marker = vec![None; cap];
    let mut children = vec![Vec::new(); cap];
    let mut layers: Vec<Vec<NodeId>> = Vec::new();
    let mut depth = vec![usize::MAX; cap];
    let mut tin = vec![0; cap];
    let mut tout = vec![0; cap];
    depth[root] = 0;
    // iterative DFS assigning entry/exit times; children get their layer
    let mut clock = 0;
    let mut stack: Vec<(NodeId, bool)> = vec![(root, false)];
    while let Some((id, done)) = stack.pop() {
        if done {
            tout[id] = clock - 1;
            continue;
        }
        tin[id] = clock;
        clock += 1;
        if layers.len() <= depth[id] {
            layers.push(Vec::new());
        }
        layers[depth[id]].push(id);
        stack.push((id, true));
        let mut kids = Vec::new();
        for (m, other) in tree.node_neighbors(id) {
            if depth[other] == usize::MAX {
                depth[other] = depth[id] + 1;
                up_marker[other] = tree.partner(m);
                kids.push(other);
            }
        }
        for &k in kids.iter().rev() {
            stack.push((k, false));
        }
        children[id] = kids;
    }
    for kids in &mut children {
        kids.sort_by_key(|&k| tin[k]);
    }
    RootedTree { tree, root, synthetic, up_marker, children, layers, tin, tout }
}

/// Distinct colors in ascending order, and each color replaced by its index
/// in that list.
pub fn renumber_colors(colors: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut phi = colors.to_vec();
    phi.sort_unstable();
    phi.dedup();
    let renumbered = colors.iter().map(|c| phi.binary_search(c).unwrap() as u32).collect();
    (phi, renumbered)
}

/// Canonical form of one node graph with colors in `0..n`.
///
/// For a star, `kind` names the center by local index. Prime nodes need a
/// chord diagram whose chord `i` is vertex `i`.
pub fn canon_node(g: &ColoredGraph, colors: &[u32], kind: NodeKind, rep: Option<&CircleRep>) -> Result<Encoding> {
    canon_node_at(0, g, colors, kind, rep)
}

fn canon_node_at(
    node: NodeId,
    g: &ColoredGraph,
    colors: &[u32],
    kind: NodeKind,
    rep: Option<&CircleRep>,
) -> Result<Encoding> {
    let n = g.vertex_count();
    if colors.len() != n {
        return Err(Error::ColorCount { expected: n, got: colors.len() });
    }
    let sorted = |it: &mut dyn Iterator<Item = u32>| {
        let mut v: Vec<u32> = it.collect();
        v.sort_unstable();
        v
    };
    let out = match kind {
        NodeKind::Complete => {
            let mut out = vec![0];
            out.extend(sorted(&mut colors.iter().copied()));
            out
        }
        NodeKind::Star { center } => {
            let mut out = vec![1, colors[center]];
            out.extend(sorted(&mut (0..n).filter(|&v| v != center).map(|v| colors[v])));
            out
        }
        NodeKind::Prime => {
            let rep = rep.ok_or(Error::MissingRepresentation { node })?;
            check_realizes(rep, g)?;
            let forward = canon_rep(rep, colors)?;
            let backward = canon_rep(&rep.reversed(), colors)?;
            let mut out = vec![2];
            out.extend_from_slice(forward.values().min(backward.values()));
            out
        }
    };
    Ok(Encoding(out))
}

fn check_realizes(rep: &CircleRep, g: &ColoredGraph) -> Result<()> {
    if rep.chord_count() != g.vertex_count() {
        return Err(Error::RepresentationMismatch(format!(
            "{} chords for {} vertices",
            rep.chord_count(),
            g.vertex_count()
        )));
    }
    let h = interleaving_graph(rep);
    for v in 0..g.vertex_count() {
        if h.neighbors(v) != g.neighbors(v) {
            return Err(Error::RepresentationMismatch(format!("neighborhood of vertex {v} differs")));
        }
    }
    Ok(())
}

/// Assigned colors, and the encoding recorded for each (index `color - 2`).
struct ColorBook {
    next_color: u32,
    epsilon: Vec<Vec<u32>>,
    window_start: u32,
    window_len: u32,
}

impl ColorBook {
    fn slot(&self, color: u32) -> usize {
        if color < 2 {
            color as usize
        } else {
            debug_assert!(color >= self.window_start && color < self.window_start + self.window_len);
            (color - self.window_start) as usize + 2
        }
    }
}

/// Canonical encoding of a rooted split tree. Every prime node needs an
/// entry in `reps`.
pub fn canon_tree(rt: &RootedTree, reps: &HashMap<NodeId, NodeRep>) -> Result<Encoding> {
    let tree = &rt.tree;
    let mut color = rt.initial_colors();
    let mut renumbered = vec![0u32; color.len()];
    let mut local = vec![usize::MAX; color.len()];
    let mut book = ColorBook { next_color: 2, epsilon: Vec::new(), window_start: 2, window_len: 0 };
    let mut root_color = 0;

    for layer in rt.layers.iter().rev() {
        // phi for every node of the layer with one bucket pass over the
        // colors in use: 0, 1 and the window assigned to the layer below
        let mut buckets: Vec<Vec<(usize, VertexId)>> = vec![Vec::new(); book.window_len as usize + 2];
        for (i, &node) in layer.iter().enumerate() {
            for &v in tree.node_vertices(node) {
                buckets[book.slot(color[v])].push((i, v));
            }
        }
        let mut phis: Vec<Vec<u32>> = vec![Vec::new(); layer.len()];
        for bucket in &buckets {
            for &(i, v) in bucket {
                let phi = &mut phis[i];
                if phi.last() != Some(&color[v]) {
                    phi.push(color[v]);
                }
                renumbered[v] = phi.len() as u32 - 1;
            }
        }

        let mut primed: Vec<Vec<u32>> = Vec::with_capacity(layer.len());
        for (i, &node) in layer.iter().enumerate() {
            if cfg!(debug_assertions) {
                let zeros = tree.node_vertices(node).iter().filter(|&&v| color[v] == 0).count();
                debug_assert_eq!(zeros, usize::from(node != rt.root));
            }
            let (g, map) = tree.node_graph(node);
            for (k, &v) in map.iter().enumerate() {
                local[v] = k;
            }
            let colors: Vec<u32> = map.iter().map(|&v| renumbered[v]).collect();
            let kind = match tree.kind(node) {
                Some(NodeKind::Star { center }) => NodeKind::Star { center: local[center] },
                Some(kind) => kind,
                None => classify_node(&g)?,
            };
            let rep = match (kind, reps.get(&node)) {
                (NodeKind::Prime, Some(nr)) => {
                    if nr.vertex_of_chord.len() != map.len()
                        || nr.vertex_of_chord.iter().any(|&v| tree.node_of(v) != node)
                    {
                        return Err(Error::RepresentationMismatch(format!(
                            "chords of node {node} do not match its vertices"
                        )));
                    }
                    let perm: Vec<u32> = nr.vertex_of_chord.iter().map(|&v| local[v] as u32).collect();
                    Some(nr.rep.relabeled(&perm))
                }
                _ => None,
            };
            let gamma = canon_node_at(node, &g, &colors, kind, rep.as_ref())?;
            let phi = &phis[i];
            let mut full = Vec::with_capacity(1 + phi.len() + gamma.len());
            full.push(phi.len() as u32);
            full.extend_from_slice(phi);
            full.extend_from_slice(gamma.values());
            primed.push(full);
        }

        let (_, ranks) = lex_sort_sequences(&primed);
        let distinct = ranks.iter().max().map_or(0, |&r| r + 1);
        let start = book.next_color;
        let base = book.epsilon.len();
        book.epsilon.resize(base + distinct, Vec::new());
        for (i, &node) in layer.iter().enumerate() {
            let c = start + ranks[i] as u32;
            let slot = &mut book.epsilon[base + ranks[i]];
            if slot.is_empty() {
                *slot = std::mem::take(&mut primed[i]);
            }
            match rt.parent_marker(node) {
                Some(m) => color[m] = c,
                None => root_color = c,
            }
        }
        book.window_start = start;
        book.window_len = distinct as u32;
        book.next_color = start + distinct as u32;
    }

    let mut out = vec![root_color - 1];
    for entry in &book.epsilon[..(root_color - 1) as usize] {
        out.push(entry.len() as u32);
        out.extend_from_slice(entry);
    }
    Ok(Encoding(out))
}

/// Rebuilds a graph-labeled tree from an encoding produced by `canon_tree`
/// (or one of the one- and two-vertex encodings).
pub fn decode(e: &Encoding) -> Result<SplitTree> {
    decode_with_reps(e).map(|(tree, _)| tree)
}

/// As [`decode`], also returning the chord diagrams read off the prime nodes.
pub fn decode_with_reps(e: &Encoding) -> Result<(SplitTree, HashMap<NodeId, NodeRep>)> {
    let values = e.values();
    let bad = |m: String| Error::MalformedEncoding(m);
    if values == K1_ENCODING || values == K2_ENCODING {
        let n = values[1] as usize;
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        let mut t = SplitTree::single(&ColoredGraph::uncolored(n, edges)?);
        if n == 2 {
            t.set_kind(0, NodeKind::Complete);
        }
        return Ok((t, HashMap::new()));
    }
    let (&count, mut rest) = values.split_first().ok_or_else(|| bad("empty encoding".into()))?;
    if count == 0 {
        return Err(bad("no table entries".into()));
    }
    let mut table: Vec<&[u32]> = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let (&len, tail) = rest.split_first().ok_or_else(|| bad("table ends early".into()))?;
        if tail.len() < len as usize {
            return Err(bad("table entry overruns the encoding".into()));
        }
        let (entry, tail) = tail.split_at(len as usize);
        table.push(entry);
        rest = tail;
    }
    if !rest.is_empty() {
        return Err(bad(format!("{} trailing values", rest.len())));
    }

    let mut tree = SplitTree::empty();
    let mut reps = HashMap::new();
    let mut next_original = 0;
    let root_color = count + 1;
    // (color to expand, marker in the parent awaiting its tree edge)
    let mut work: Vec<(u32, Option<VertexId>)> = vec![(root_color, None)];
    while let Some((c, parent)) = work.pop() {
        let (local_colors, edges, kind, rep) = parse_node(table[(c - 2) as usize])?;
        let node = tree.add_node();
        let mut ids = Vec::with_capacity(local_colors.len());
        let mut up = None;
        for &lc in &local_colors {
            let label = if lc == 1 {
                next_original += 1;
                VertexLabel::Original(next_original - 1)
            } else {
                VertexLabel::Marker
            };
            let v = tree.add_vertex(node, label);
            ids.push(v);
            match lc {
                0 => {
                    if up.replace(v).is_some() {
                        return Err(bad(format!("table entry {c} has two parent markers")));
                    }
                }
                1 => {}
                child if child < c => work.push((child, Some(v))),
                child => return Err(bad(format!("color {child} referenced from entry {c}"))),
            }
        }
        for (u, v) in edges {
            tree.add_normal_edge(ids[u], ids[v]);
        }
        if let Some(rep) = rep {
            reps.insert(node, NodeRep { rep, vertex_of_chord: ids.clone() });
        }
        tree.set_kind(
            node,
            match kind {
                NodeKind::Star { center } => NodeKind::Star { center: ids[center] },
                other => other,
            },
        );
        match (parent, up) {
            (Some(p), Some(u)) => tree.add_tree_edge(p, u),
            (None, None) => {}
            (None, Some(_)) => return Err(bad("root entry has a parent marker".into())),
            (Some(_), None) => return Err(bad(format!("table entry {c} has no parent marker"))),
        }
    }
    tree.validate().map_err(|e| bad(e.to_string()))?;
    Ok((tree, reps))
}

/// Splits `[c, phi.., gamma..]` into actual vertex colors, node edges and kind.
type ParsedNode = (Vec<u32>, Vec<(usize, usize)>, NodeKind, Option<CircleRep>);

fn parse_node(entry: &[u32]) -> Result<ParsedNode> {
    let bad = |m: &str| Error::MalformedEncoding(m.to_string());
    let (&c, rest) = entry.split_first().ok_or_else(|| bad("empty table entry"))?;
    if rest.len() < c as usize + 1 {
        return Err(bad("table entry too short"));
    }
    let (phi, gamma) = rest.split_at(c as usize);
    if phi.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("color list is not increasing"));
    }
    let (&tag, body) = gamma.split_first().expect("checked length");
    let (colors, edges, kind, rep) = match tag {
        0 => {
            let k = body.len();
            let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
            (body.to_vec(), edges, NodeKind::Complete, None)
        }
        1 => {
            if body.len() < 2 {
                return Err(bad("star with fewer than two vertices"));
            }
            let edges = (1..body.len()).map(|v| (0, v)).collect();
            (body.to_vec(), edges, NodeKind::Star { center: 0 }, None)
        }
        2 => {
            let (rep, colors) = LambdaWord::decode(body)?;
            let edges = interleaving_graph(&rep).edges().collect();
            (colors, edges, NodeKind::Prime, Some(rep))
        }
        other => return Err(Error::MalformedEncoding(format!("node tag {other}"))),
    };
    if colors.len() < 2 {
        return Err(bad("node with fewer than two vertices"));
    }
    let actual = colors
        .iter()
        .map(|&x| phi.get(x as usize).copied().ok_or_else(|| bad("color outside the node's color list")))
        .collect::<Result<Vec<u32>>>()?;
    Ok((actual, edges, kind, rep))
}

/// Restricts a diagram of the whole graph to a node: each endpoint is renamed
/// after the node vertex standing for it (itself, or the marker whose far
/// side contains it), and runs of one marker collapse to a single endpoint.
///
/// Chord `k` of `global` must be original vertex `k` of the tree.
pub fn derive_node_representation(rt: &RootedTree, node: NodeId, global: &CircleRep) -> Result<NodeRep> {
    let tree = &rt.tree;
    let mismatch = |m: String| Error::RepresentationMismatch(m);
    let n = global.chord_count();
    let mut home = vec![usize::MAX; n];
    for id in tree.node_ids() {
        for &v in tree.node_vertices(id) {
            if let VertexLabel::Original(k) = tree.label(v) {
                if k >= n {
                    return Err(mismatch(format!("vertex {k} has no chord")));
                }
                home[k] = v;
            }
        }
    }
    if let Some(k) = home.iter().position(|&v| v == usize::MAX) {
        return Err(mismatch(format!("chord {k} is not a vertex of the tree")));
    }
    let vertices = tree.node_vertices(node);
    let mut local = HashMap::with_capacity(vertices.len());
    for (i, &v) in vertices.iter().enumerate() {
        local.insert(v, i as u32);
    }
    let kids = &rt.children[node];
    let label_of = |k: usize| -> Result<u32> {
        let v = home[k];
        let x = tree.node_of(v);
        if x == node {
            return Ok(local[&v]);
        }
        let marker = if rt.in_subtree(node, x) {
            let i = kids.partition_point(|&c| rt.tin[c] <= rt.tin[x]) - 1;
            rt.parent_marker(kids[i]).expect("child has a parent marker")
        } else {
            rt.up_marker[node].ok_or_else(|| mismatch(format!("vertex {k} lies outside the rooted tree")))?
        };
        Ok(local[&marker])
    };
    let labels = global.word().iter().map(|&k| label_of(k as usize)).collect::<Result<Vec<u32>>>()?;

    let is_marker = |l: u32| tree.is_marker(vertices[l as usize]);
    let len = labels.len();
    let start = (0..len)
        .find(|&p| labels[p] != labels[(p + len - 1) % len])
        .ok_or_else(|| mismatch("every endpoint maps to one vertex".into()))?;
    let mut word: Vec<u32> = Vec::with_capacity(2 * vertices.len());
    for step in 0..len {
        let l = labels[(start + step) % len];
        if step > 0 && is_marker(l) && labels[(start + step - 1) % len] == l {
            continue;
        }
        word.push(l);
    }
    let rep = CircleRep::from_word(word).map_err(|e| mismatch(format!("node {node}: {e}")))?;
    let (g, _) = tree.node_graph(node);
    check_realizes(&rep, &g)?;
    Ok(NodeRep { rep, vertex_of_chord: vertices.to_vec() })
}

/// A chord diagram of the graph a split tree decomposes: chord `k` is the
/// vertex labeled `Original(k)`. Prime nodes take their diagram from `reps`;
/// every child diagram, cut open at its marker, is substituted into the two
/// endpoints of the marker it hangs from.
pub fn realize(tree: &SplitTree, reps: &HashMap<NodeId, NodeRep>) -> Result<CircleRep> {
    let node_word = |id: NodeId| -> Result<Vec<VertexId>> {
        let vertices = tree.node_vertices(id);
        let kind = match tree.kind(id) {
            Some(kind) => kind,
            None => {
                let (g, map) = tree.node_graph(id);
                match classify_node(&g)? {
                    NodeKind::Star { center } => NodeKind::Star { center: map[center] },
                    other => other,
                }
            }
        };
        Ok(match kind {
            NodeKind::Complete => vertices.iter().chain(vertices).copied().collect(),
            NodeKind::Star { center } => {
                let leaves: Vec<VertexId> = vertices.iter().copied().filter(|&v| v != center).collect();
                let mut w = vec![center];
                w.extend(&leaves);
                w.push(center);
                w.extend(leaves.iter().rev());
                w
            }
            NodeKind::Prime => {
                let nr = reps.get(&id).ok_or(Error::MissingRepresentation { node: id })?;
                nr.rep.word().iter().map(|&l| nr.vertex_of_chord[l as usize]).collect()
            }
        })
    };
    let Some(root) = tree.node_ids().next() else {
        return CircleRep::from_word(Vec::new());
    };
    // arcs[child] = (P, Q) when the child's word reads m P m Q from its up marker m
    let mut arcs: HashMap<NodeId, (Vec<VertexId>, Vec<VertexId>)> = HashMap::new();
    let mut stack = vec![root];
    let mut visited = vec![false; tree.node_capacity()];
    visited[root] = true;
    while let Some(id) = stack.pop() {
        for (m, child) in tree.node_neighbors(id) {
            if visited[child] {
                continue;
            }
            visited[child] = true;
            stack.push(child);
            let up = tree.partner(m).expect("marker");
            let mut word = node_word(child)?;
            let first = word.iter().position(|&v| v == up).expect("marker in its node word");
            word.rotate_left(first);
            let second = 1 + word[1..].iter().position(|&v| v == up).expect("marker occurs twice");
            arcs.insert(child, (word[1..second].to_vec(), word[second + 1..].to_vec()));
        }
    }
    let mut pending: Vec<VertexId> = node_word(root)?;
    pending.reverse();
    let mut seen = vec![false; tree.vertex_capacity()];
    let mut out = Vec::new();
    while let Some(v) = pending.pop() {
        match (tree.label(v), tree.partner(v)) {
            (VertexLabel::Original(k), _) => out.push(k as u32),
            (VertexLabel::Marker, Some(p)) => {
                let (first, second) = &arcs[&tree.node_of(p)];
                let arc = if seen[v] { second } else { first };
                seen[v] = true;
                pending.extend(arc.iter().rev());
            }
            (VertexLabel::Marker, None) => return Err(Error::NotTreeEdge(v)),
        }
    }
    CircleRep::from_word(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::decompose;

    fn graph(n: usize, edges: &[(usize, usize)]) -> ColoredGraph {
        ColoredGraph::uncolored(n, edges).unwrap()
    }

    fn minimal(g: &ColoredGraph) -> SplitTree {
        let mut t = decompose(g).unwrap();
        t.minimalize().unwrap();
        t
    }

    #[test]
    fn renumber_examples() {
        assert_eq!(renumber_colors(&[1, 1, 1]), (vec![1], vec![0, 0, 0]));
        assert_eq!(renumber_colors(&[0, 1, 7, 7]), (vec![0, 1, 7], vec![0, 1, 2, 2]));
        assert_eq!(renumber_colors(&[9, 3]), (vec![3, 9], vec![1, 0]));
    }

    #[test]
    fn degenerate_node_formats() {
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(canon_node(&k3, &[2, 0, 1], NodeKind::Complete, None).unwrap().0, vec![0, 0, 1, 2]);
        let s4 = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let star = canon_node(&s4, &[1, 2, 0, 2], NodeKind::Star { center: 0 }, None).unwrap();
        assert_eq!(star.0, vec![1, 1, 0, 2, 2]);
    }

    #[test]
    fn prime_node_is_orientation_free() {
        let c5 = CircleRep::from_word(vec![0, 4, 1, 0, 2, 1, 3, 2, 4, 3]).unwrap();
        let g = interleaving_graph(&c5);
        let colors = [0; 5];
        let a = canon_node(&g, &colors, NodeKind::Prime, Some(&c5)).unwrap();
        let b = canon_node(&g, &colors, NodeKind::Prime, Some(&c5.reversed())).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.0[0], 2);
        assert_eq!(canon_node(&g, &colors, NodeKind::Prime, None), Err(Error::MissingRepresentation { node: 0 }));
        let wrong = graph(5, &[(0, 1)]);
        assert!(matches!(
            canon_node(&wrong, &colors, NodeKind::Prime, Some(&c5)),
            Err(Error::RepresentationMismatch(_))
        ));
    }

    #[test]
    fn k3_trace() {
        let rt = center_root(&minimal(&graph(3, &[(0, 1), (1, 2), (0, 2)])));
        let e = canon_tree(&rt, &HashMap::new()).unwrap();
        assert_eq!(e.0, vec![1, 6, 1, 1, 0, 0, 0, 0]);
        let back = decode(&e).unwrap();
        assert_eq!(back.node_count(), 1);
        assert_eq!(back.join_all(), graph(3, &[(0, 1), (1, 2), (0, 2)]));
    }

    #[test]
    fn roots() {
        let single = center_root(&minimal(&graph(3, &[(0, 1), (1, 2), (0, 2)])));
        assert_eq!(single.layers().len(), 1);
        assert!(single.synthetic().is_none());

        // P4: two stars, so the center is their tree edge
        let two = center_root(&minimal(&graph(4, &[(0, 1), (1, 2), (2, 3)])));
        let root = two.root();
        assert_eq!(two.synthetic(), Some(root));
        assert_eq!(two.children(root).len(), 2);
        assert_eq!(two.tree().node_vertices(root).len(), 2);
        two.tree().validate().unwrap();

        // path of three nodes: P5 decomposes into stars around 1-2-3
        let p5 = minimal(&graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]));
        assert_eq!(p5.node_count(), 3);
        let rt = center_root(&p5);
        assert!(rt.synthetic().is_none());
        assert_eq!(rt.children(rt.root()).len(), 2);
        assert!(rt.tree().node_vertices(rt.root()).iter().any(|&v| rt.tree().label(v) == VertexLabel::Original(2)));
    }

    #[test]
    fn p4_round_trip() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let e = canon_tree(&center_root(&minimal(&p4)), &HashMap::new()).unwrap();
        let back = decode(&e).unwrap().join_all();
        assert_eq!(back.edge_count(), 3);
        let again = canon_tree(&center_root(&minimal(&back)), &HashMap::new()).unwrap();
        assert_eq!(e, again);
    }

    #[test]
    fn sibling_copies_share_a_color() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let e = canon_tree(&center_root(&minimal(&p4)), &HashMap::new()).unwrap();
        // both stars get one color, the synthetic root another
        assert_eq!(e.0[0], 2);
    }

    #[test]
    fn restriction_to_a_star_side() {
        let rep = CircleRep::from_word(vec![0, 1, 0, 2, 1, 3, 2, 3]).unwrap();
        let rt = center_root(&minimal(&interleaving_graph(&rep)));
        let tree = rt.tree();
        let node = tree.node_ids().find(|&id| id != rt.root() && tree.node_vertices(id).iter().any(|&v| tree.label(v) == VertexLabel::Original(3))).unwrap();
        let nr = derive_node_representation(&rt, node, &rep).unwrap();
        assert_eq!(nr.rep.chord_count(), 3);
        let g = interleaving_graph(&nr.rep);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn restriction_of_a_single_node_is_identity() {
        let c5 = CircleRep::from_word(vec![0, 4, 1, 0, 2, 1, 3, 2, 4, 3]).unwrap();
        let rt = center_root(&minimal(&interleaving_graph(&c5)));
        let nr = derive_node_representation(&rt, rt.root(), &c5).unwrap();
        assert_eq!(nr.rep, c5);
        assert_eq!(nr.vertex_of_chord, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn realized_diagram_matches_the_tree() {
        let rep = CircleRep::from_word(vec![0, 1, 0, 2, 1, 3, 2, 3, 4, 5, 6, 4, 5, 6]).unwrap();
        let g = interleaving_graph(&rep);
        let part = g.induced(&[0, 1, 2, 3]);
        let t = minimal(&part);
        assert_eq!(realize(&t, &HashMap::new()).map(|r| interleaving_graph(&r)).unwrap(), part);

        let c5 = CircleRep::from_word(vec![0, 4, 1, 0, 2, 1, 3, 2, 4, 3]).unwrap();
        let e = canon_tree(&center_root(&minimal(&interleaving_graph(&c5))), &HashMap::from([(0, NodeRep { rep: c5.clone(), vertex_of_chord: vec![0, 1, 2, 3, 4] })])).unwrap();
        let (t, reps) = decode_with_reps(&e).unwrap();
        let back = realize(&t, &reps).unwrap();
        assert_eq!(interleaving_graph(&back), t.join_all());
    }

    #[test]
    fn decode_rejects_garbage() {
        for bad in [vec![], vec![1], vec![1, 3, 1, 1, 5], vec![1, 6, 1, 1, 0, 0, 0, 0, 9], vec![1, 4, 1, 2, 0, 0]] {
            assert!(decode(&Encoding(bad.clone())).is_err(), "{bad:?}");
        }
    }
}
