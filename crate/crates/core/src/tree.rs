//! Graph-labeled trees recording split decompositions.
//!
//! All vertices live in one pool. Normal edges stay inside nodes, and tree
//! edges pair up marker vertices of neighboring nodes. A node is the set of
//! vertices connected by normal edges; the tree keeps that partition
//! explicitly so nodes can be split and joined without recomputing it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::split::{find_split_connected, SeedOrder, Split};

pub type VertexId = usize;
pub type NodeId = usize;

const GONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// A vertex of the decomposed graph, with its id there.
    Original(usize),
    Marker,
}

/// Classification of a node graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Prime,
    Complete,
    Star { center: VertexId },
}

impl NodeKind {
    pub fn name(&self) -> &'static str {
        match self {
            NodeKind::Prime => "prime",
            NodeKind::Complete => "complete",
            NodeKind::Star { .. } => "star",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SplitTree {
    label: Vec<VertexLabel>,
    node_of: Vec<NodeId>,
    adj: Vec<Vec<VertexId>>,
    partner: Vec<Option<VertexId>>,
    nodes: Vec<Option<Vec<VertexId>>>,
    kinds: Vec<Option<NodeKind>>,
}

/// Complete or star, judged from degrees alone; `None` otherwise.
pub fn degenerate_kind(g: &ColoredGraph) -> Option<NodeKind> {
    let k = g.vertex_count();
    if k < 2 {
        return None;
    }
    if (0..k).all(|v| g.degree(v) == k - 1) {
        return Some(NodeKind::Complete);
    }
    let centers: Vec<usize> = (0..k).filter(|&v| g.degree(v) == k - 1).collect();
    if centers.len() == 1 && (0..k).all(|v| v == centers[0] || g.degree(v) == 1) {
        return Some(NodeKind::Star { center: centers[0] });
    }
    None
}

/// Classifies a node graph; two-vertex graphs count as complete. Graphs
/// that have a split but are not degenerate are rejected.
pub fn classify_node(g: &ColoredGraph) -> Result<NodeKind> {
    let k = g.vertex_count();
    if k < 2 {
        return Err(Error::NodeTooSmall(k));
    }
    if let Some(kind) = degenerate_kind(g) {
        return Ok(kind);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match find_split_connected(g, SeedOrder::Lexicographic) {
        None => Ok(NodeKind::Prime),
        Some(_) => Err(Error::Decomposable),
    }
}

impl SplitTree {
    /// The trivial tree: one node holding all of `g`.
    pub fn single(g: &ColoredGraph) -> SplitTree {
        let n = g.vertex_count();
        SplitTree {
            label: (0..n).map(VertexLabel::Original).collect(),
            node_of: vec![0; n],
            adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
            partner: vec![None; n],
            nodes: vec![Some((0..n).collect())],
            kinds: vec![None],
        }
    }

    pub(crate) fn empty() -> SplitTree {
        SplitTree {
            label: Vec::new(),
            node_of: Vec::new(),
            adj: Vec::new(),
            partner: Vec::new(),
            nodes: Vec::new(),
            kinds: Vec::new(),
        }
    }

    pub(crate) fn add_node(&mut self) -> NodeId {
        self.nodes.push(Some(Vec::new()));
        self.kinds.push(None);
        self.nodes.len() - 1
    }

    pub(crate) fn add_vertex(&mut self, node: NodeId, label: VertexLabel) -> VertexId {
        let v = self.label.len();
        self.label.push(label);
        self.node_of.push(node);
        self.adj.push(Vec::new());
        self.partner.push(None);
        self.nodes[node].as_mut().expect("live node").push(v);
        v
    }

    pub(crate) fn add_normal_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert_eq!(self.node_of[u], self.node_of[v]);
        insert_sorted(&mut self.adj[u], v);
        insert_sorted(&mut self.adj[v], u);
    }

    pub(crate) fn add_tree_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(self.partner[u].is_none() && self.partner[v].is_none());
        self.partner[u] = Some(v);
        self.partner[v] = Some(u);
        self.label[u] = VertexLabel::Marker;
        self.label[v] = VertexLabel::Marker;
    }

    pub(crate) fn remove_tree_edge(&mut self, u: VertexId) {
        if let Some(v) = self.partner[u].take() {
            self.partner[v] = None;
        }
    }

    pub(crate) fn set_kind(&mut self, node: NodeId, kind: NodeKind) {
        self.kinds[node] = Some(kind);
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes.iter().enumerate().filter_map(|(i, n)| n.as_ref().map(|_| i))
    }

    pub fn node_count(&self) -> usize {
        self.nodes.iter().flatten().count()
    }

    /// Upper bound on node ids (some may be dead).
    pub fn node_capacity(&self) -> usize {
        self.nodes.len()
    }

    pub fn vertex_capacity(&self) -> usize {
        self.label.len()
    }

    pub fn node_vertices(&self, node: NodeId) -> &[VertexId] {
        self.nodes[node].as_deref().expect("live node")
    }

    pub fn kind(&self, node: NodeId) -> Option<NodeKind> {
        self.kinds[node]
    }

    pub fn node_of(&self, v: VertexId) -> NodeId {
        self.node_of[v]
    }

    pub fn label(&self, v: VertexId) -> VertexLabel {
        self.label[v]
    }

    pub fn is_marker(&self, v: VertexId) -> bool {
        self.partner[v].is_some()
    }

    pub fn partner(&self, v: VertexId) -> Option<VertexId> {
        self.partner[v]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_normal_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Number of original vertices.
    pub fn original_count(&self) -> usize {
        self.node_ids()
            .flat_map(|id| self.node_vertices(id))
            .filter(|&&v| matches!(self.label[v], VertexLabel::Original(_)))
            .count()
    }

    /// Tree edges as `(u, v)` with `u < v`.
    pub fn tree_edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.label.len())
            .filter_map(|u| self.partner[u].filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Markers of `node`, each with the node across its tree edge.
    pub fn node_neighbors(&self, node: NodeId) -> Vec<(VertexId, NodeId)> {
        self.node_vertices(node)
            .iter()
            .filter_map(|&v| self.partner[v].map(|p| (v, self.node_of[p])))
            .collect()
    }

    /// (vertices + normal edges + tree edges) of the whole tree.
    pub fn size(&self) -> usize {
        let vertices: usize = self.node_ids().map(|id| self.node_vertices(id).len()).sum();
        let normal: usize = self
            .node_ids()
            .flat_map(|id| self.node_vertices(id))
            .map(|&v| self.adj[v].len())
            .sum::<usize>()
            / 2;
        vertices + normal + self.tree_edges().len()
    }

    /// The node graph on local indices, with the local-to-tree vertex map.
    pub fn node_graph(&self, node: NodeId) -> (ColoredGraph, Vec<VertexId>) {
        let vertices = self.node_vertices(node).to_vec();
        let mut local = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, i);
        }
        let adj = vertices.iter().map(|&v| self.adj[v].iter().map(|w| local[w]).collect()).collect();
        (ColoredGraph::from_adjacency(adj, vec![0; vertices.len()]), vertices)
    }

    /// Checks the structural invariants of a graph-labeled tree.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSplit(m));
        let live: Vec<NodeId> = self.node_ids().collect();
        for &id in &live {
            for &v in self.node_vertices(id) {
                if self.node_of[v] != id {
                    return bad(format!("vertex {v} listed in node {id} but owned by {}", self.node_of[v]));
                }
                for &w in &self.adj[v] {
                    if self.node_of[w] != id {
                        return bad(format!("normal edge {v}-{w} leaves node {id}"));
                    }
                }
                match (self.partner[v], self.label[v]) {
                    (Some(p), VertexLabel::Marker) => {
                        if self.partner[p] != Some(v) || self.node_of[p] == id {
                            return bad(format!("tree edge at {v} is broken"));
                        }
                    }
                    (None, VertexLabel::Original(_)) => {}
                    _ => return bad(format!("vertex {v} marker status mismatch")),
                }
            }
            let (g, _) = self.node_graph(id);
            if g.vertex_count() > 1 && !g.is_connected() {
                return bad(format!("node {id} is not connected by normal edges"));
            }
        }
        // the node incidence graph must be a tree
        let edges = self.tree_edges().len();
        if !live.is_empty() && edges + 1 != live.len() {
            return bad(format!("{} nodes but {edges} tree edges", live.len()));
        }
        if let Some(&start) = live.first() {
            let mut seen = vec![false; self.nodes.len()];
            let mut stack = vec![start];
            seen[start] = true;
            let mut reached = 1;
            while let Some(id) = stack.pop() {
                for (_, other) in self.node_neighbors(id) {
                    if !seen[other] {
                        seen[other] = true;
                        reached += 1;
                        stack.push(other);
                    }
                }
            }
            if reached != live.len() {
                return bad("node incidence graph is disconnected".into());
            }
        }
        Ok(())
    }

    /// Replaces `node` by its two sides under `split` (given in tree vertex
    /// ids). Returns the markers `(m_a, m_b)`; the `A` side keeps the node id.
    pub fn apply_split(&mut self, node: NodeId, split: &Split) -> Result<(VertexId, VertexId)> {
        let (g, map) = self.node_graph(node);
        let mut local = std::collections::HashMap::new();
        for (i, &v) in map.iter().enumerate() {
            local.insert(v, i);
        }
        let to_local = |set: &[VertexId]| -> Result<Vec<usize>> {
            set.iter()
                .map(|v| local.get(v).copied().ok_or_else(|| Error::InvalidSplit(format!("{v} not in node {node}"))))
                .collect()
        };
        let local_split = Split {
            a: to_local(&split.a)?,
            b: to_local(&split.b)?,
            a_prime: to_local(&split.a_prime)?,
            b_prime: to_local(&split.b_prime)?,
        };
        local_split.validate(&g)?;

        let other = self.add_node();
        let side_b: BTreeSet<VertexId> = split.b.iter().chain(&split.b_prime).copied().collect();
        for &v in &split.a {
            self.adj[v].retain(|w| !side_b.contains(w));
        }
        for &v in &split.b {
            let a: BTreeSet<VertexId> = split.a.iter().copied().collect();
            self.adj[v].retain(|w| !a.contains(w));
        }
        let keep: Vec<VertexId> = split.a.iter().chain(&split.a_prime).copied().collect();
        self.nodes[node] = Some(keep);
        for &v in &side_b {
            self.node_of[v] = other;
        }
        self.nodes[other] = Some(side_b.iter().copied().collect());

        let m_a = self.add_vertex(node, VertexLabel::Marker);
        let m_b = self.add_vertex(other, VertexLabel::Marker);
        for &v in &split.a {
            self.add_normal_edge(m_a, v);
        }
        for &v in &split.b {
            self.add_normal_edge(m_b, v);
        }
        self.add_tree_edge(m_a, m_b);
        self.kinds[node] = None;
        self.kinds[other] = None;
        Ok((m_a, m_b))
    }

    /// Merges the two nodes across the tree edge at marker `u`: both markers
    /// disappear and every neighbor of one becomes adjacent to every
    /// neighbor of the other. Returns the surviving node id.
    pub fn join_edge(&mut self, u: VertexId) -> Result<NodeId> {
        let v = match self.partner.get(u).copied().flatten() {
            Some(v) if self.node_of[u] != GONE => v,
            _ => return Err(Error::NotTreeEdge(u)),
        };
        let (keep, gone) = (self.node_of[u], self.node_of[v]);
        let left = std::mem::take(&mut self.adj[u]);
        let right = std::mem::take(&mut self.adj[v]);
        for &x in &left {
            self.adj[x].retain(|&w| w != u);
        }
        for &y in &right {
            self.adj[y].retain(|&w| w != v);
        }
        for &x in &left {
            for &y in &right {
                insert_sorted(&mut self.adj[x], y);
                insert_sorted(&mut self.adj[y], x);
            }
        }
        self.partner[u] = None;
        self.partner[v] = None;
        self.node_of[u] = GONE;
        self.node_of[v] = GONE;
        let moved = self.nodes[gone].take().expect("live node");
        let mut merged: Vec<VertexId> =
            self.nodes[keep].take().expect("live node").into_iter().filter(|&w| w != u).collect();
        for w in moved {
            if w != v {
                self.node_of[w] = keep;
                merged.push(w);
            }
        }
        self.nodes[keep] = Some(merged);
        self.kinds[gone] = None;
        self.kinds[keep] = None;
        Ok(keep)
    }

    /// Joins every tree edge, recovering the decomposed graph on the
    /// original vertex ids.
    pub fn join_all(&self) -> ColoredGraph {
        let mut t = self.clone();
        for (u, _) in self.tree_edges() {
            t.join_edge(u).expect("tree edge");
        }
        let originals: Vec<(usize, VertexId)> = t
            .node_ids()
            .flat_map(|id| t.node_vertices(id).to_vec())
            .filter_map(|v| match t.label[v] {
                VertexLabel::Original(k) => Some((k, v)),
                VertexLabel::Marker => None,
            })
            .collect();
        let n = originals.len();
        let mut index = std::collections::HashMap::with_capacity(n);
        for &(k, v) in &originals {
            index.insert(v, k);
        }
        let mut adj = vec![Vec::new(); n];
        for &(k, v) in &originals {
            adj[k] = t.adj[v].iter().map(|w| index[w]).collect();
        }
        ColoredGraph::from_adjacency(adj, vec![0; n])
    }

    /// Would joining across the tree edge at `u` give a degenerate node?
    pub fn joinable(&self, u: VertexId) -> bool {
        let Some(v) = self.partner[u] else { return false };
        match (self.kinds[self.node_of[u]], self.kinds[self.node_of[v]]) {
            (Some(NodeKind::Complete), Some(NodeKind::Complete)) => true,
            (Some(NodeKind::Star { center: cu }), Some(NodeKind::Star { center: cv })) => {
                (cu == u) != (cv == v)
            }
            _ => false,
        }
    }

    /// True when no tree edge is joinable.
    pub fn is_minimal(&self) -> bool {
        self.tree_edges().iter().all(|&(u, _)| !self.joinable(u))
    }

    /// Recomputes the kind of `node`, which must be prime or degenerate.
    fn reclassify(&mut self, node: NodeId) -> Result<()> {
        let (g, map) = self.node_graph(node);
        let kind = match classify_node(&g)? {
            NodeKind::Star { center } => NodeKind::Star { center: map[center] },
            other => other,
        };
        self.kinds[node] = Some(kind);
        Ok(())
    }

    /// Joins neighboring complete nodes, and neighboring stars whose tree
    /// edge touches exactly one center, until none remain.
    pub fn minimalize(&mut self) -> Result<()> {
        for id in self.node_ids().collect::<Vec<_>>() {
            if self.kinds[id].is_none() {
                self.reclassify(id)?;
            }
        }
        let mut pending: Vec<VertexId> = self.tree_edges().into_iter().map(|(u, _)| u).collect();
        while let Some(u) = pending.pop() {
            if self.node_of[u] == GONE || !self.joinable(u) {
                continue;
            }
            let kept = self.join_edge(u)?;
            let kind = {
                let (g, map) = self.node_graph(kept);
                match degenerate_kind(&g).expect("joined degenerate nodes stay degenerate") {
                    NodeKind::Star { center } => NodeKind::Star { center: map[center] },
                    other => other,
                }
            };
            self.kinds[kept] = Some(kind);
            pending.extend(self.node_neighbors(kept).into_iter().map(|(m, _)| m));
        }
        Ok(())
    }

    /// Graphviz rendering: one cluster per node, solid normal edges, dashed
    /// tree edges, markers as double circles.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph split_tree {\n  node [shape=circle];\n");
        for id in self.node_ids() {
            let kind = self.kinds[id].map_or("unclassified", |k| k.name());
            let _ = writeln!(out, "  subgraph cluster_{id} {{");
            let _ = writeln!(out, "    label=\"{kind}\";");
            for &v in self.node_vertices(id) {
                match self.label[v] {
                    VertexLabel::Original(k) => {
                        let _ = writeln!(out, "    v{v} [label=\"{k}\"];");
                    }
                    VertexLabel::Marker => {
                        let _ = writeln!(out, "    v{v} [label=\"\", shape=doublecircle];");
                    }
                }
            }
            for &v in self.node_vertices(id) {
                for &w in &self.adj[v] {
                    if v < w {
                        let _ = writeln!(out, "    v{v} -- v{w};");
                    }
                }
            }
            out.push_str("  }\n");
        }
        for (u, v) in self.tree_edges() {
            let _ = writeln!(out, "  v{u} -- v{v} [style=dashed];");
        }
        out.push_str("}\n");
        out
    }
}

fn insert_sorted(list: &mut Vec<VertexId>, v: VertexId) {
    if let Err(pos) = list.binary_search(&v) {
        list.insert(pos, v);
    }
}

/// Split decomposition of a connected graph: nodes are split until each is
/// prime or degenerate. The result is not necessarily minimal.
pub fn decompose(g: &ColoredGraph) -> Result<SplitTree> {
    decompose_with(g, SeedOrder::Lexicographic)
}

pub fn decompose_with(g: &ColoredGraph, order: SeedOrder) -> Result<SplitTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut tree = SplitTree::single(g);
    if g.vertex_count() < 2 {
        return Ok(tree);
    }
    let mut pending = vec![0];
    let mut round = 0u64;
    while let Some(node) = pending.pop() {
        let (local, map) = tree.node_graph(node);
        if let Some(kind) = degenerate_kind(&local) {
            let kind = match kind {
                NodeKind::Star { center } => NodeKind::Star { center: map[center] },
                other => other,
            };
            tree.set_kind(node, kind);
            continue;
        }
        let node_order = match order {
            SeedOrder::Lexicographic => SeedOrder::Lexicographic,
            SeedOrder::Shuffled(seed) => SeedOrder::Shuffled(seed.wrapping_mul(0x9e37_79b9).wrapping_add(round)),
        };
        round += 1;
        match find_split_connected(&local, node_order) {
            None => tree.set_kind(node, NodeKind::Prime),
            Some(s) => {
                let global = |set: &[usize]| set.iter().map(|&i| map[i]).collect::<Vec<_>>();
                let split = Split {
                    a: global(&s.a),
                    b: global(&s.b),
                    a_prime: global(&s.a_prime),
                    b_prime: global(&s.b_prime),
                };
                let (_, m_b) = tree.apply_split(node, &split)?;
                pending.push(node);
                pending.push(tree.node_of(m_b));
            }
        }
    }
    Ok(tree)
}

/// Decomposition followed by minimalization.
pub fn minimal_split_tree(g: &ColoredGraph, order: SeedOrder) -> Result<SplitTree> {
    let mut tree = decompose_with(g, order)?;
    tree.minimalize()?;
    Ok(tree)
}
