//! Vertex-colored simple graphs and integer encodings.

use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph with one non-negative color per vertex.
///
/// Neighbor lists are kept sorted, so adjacency queries are a binary search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    adj: Vec<Vec<usize>>,
    colors: Vec<u32>,
}

/// Checks an edge list and coloring against the simple-graph invariants.
///
/// Reports the first problem found, scanning edges in order.
pub fn validate_graph(n: usize, edges: &[(usize, usize)], colors: &[u32]) -> Result<()> {
    if colors.len() != n {
        return Err(Error::ColorCount { expected: n, got: colors.len() });
    }
    let mut seen = std::collections::HashSet::with_capacity(edges.len());
    for &(u, v) in edges {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
    }
    Ok(())
}

impl ColoredGraph {
    /// Builds a graph after validating it.
    pub fn new(n: usize, edges: &[(usize, usize)], colors: Vec<u32>) -> Result<Self> {
        validate_graph(n, edges, &colors)?;
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { adj, colors })
    }

    /// An uncolored graph (every color 0).
    pub fn uncolored(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges, vec![0; n])
    }

    /// Builds a graph from neighbor lists that the caller guarantees to be
    /// symmetric, loop-free and duplicate-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>, colors: Vec<u32>) -> Self {
        debug_assert_eq!(adj.len(), colors.len());
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { adj, colors }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn with_colors(mut self, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != self.vertex_count() {
            return Err(Error::ColorCount { expected: self.vertex_count(), got: colors.len() });
        }
        self.colors = colors;
        Ok(self)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> ColoredGraph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect()
            })
            .collect();
        let colors = vertices.iter().map(|&v| self.colors[v]).collect();
        ColoredGraph::from_adjacency(adj, colors)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> ColoredGraph {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        let mut colors = vec![0; n];
        for v in 0..n {
            adj[perm[v]] = self.adj[v].iter().map(|&w| perm[w]).collect();
            colors[perm[v]] = self.colors[v];
        }
        ColoredGraph::from_adjacency(adj, colors)
    }
}

/// A canonical encoding: a sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Encoding(pub Vec<u32>);

impl Encoding {
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u32>> for Encoding {
    fn from(values: Vec<u32>) -> Self {
        Encoding(values)
    }
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
