//! Simple undirected graphs and the set primitives everything else is
//! built from: open neighborhoods, components after deleting a set,
//! touching, and connectivity of a vertex set.

use std::collections::VecDeque;

use thiserror::Error;

use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency is kept both as per-vertex bitsets and as a sorted edge list
/// `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `u -- v`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Ok(false);
        }
        self.adj[v].insert(u);
        let e = (u.min(v), u.max(v));
        let pos = self.edges.binary_search(&e).unwrap_err();
        self.edges.insert(pos, e);
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Fails if `x` has a member outside `0..n`.
    pub fn check_set(&self, x: &VertexSet) -> Result<(), GraphError> {
        match x.last() {
            Some(v) if v >= self.n() => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            _ => Ok(()),
        }
    }

    fn assert_in_range(&self, x: &VertexSet) {
        if let Err(e) = self.check_set(x) {
            panic!("{e}");
        }
    }

    /// Open neighborhood `N(X)`: vertices outside `x` with a neighbor in `x`.
    ///
    /// Panics if `x` has a member outside the graph.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        self.assert_in_range(x);
        let mut out = VertexSet::new();
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out.difference(x)
    }

    /// Components of `G - s`, ordered by smallest member.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        self.assert_in_range(s);
        self.components_within(&self.vertices().difference(s))
    }

    /// Components of the induced subgraph `G[region]`, ordered by smallest
    /// member.
    pub fn components_within(&self, region: &VertexSet) -> Vec<VertexSet> {
        self.assert_in_range(region);
        let mut left = region.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.reach(start, &left);
            left = left.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `region`.
    fn reach(&self, start: usize, region: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in &self.adj[u] {
                if region.contains(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// `x` and `y` touch if they meet or an edge joins them.
    pub fn touches(&self, x: &VertexSet, y: &VertexSet) -> bool {
        self.assert_in_range(x);
        self.assert_in_range(y);
        x.intersects(y) || x.iter().any(|v| self.adj[v].intersects(y))
    }

    /// True iff `x` is nonempty and `G[x]` is connected.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        self.assert_in_range(x);
        match x.first() {
            None => false,
            Some(start) => &self.reach(start, x) == x,
        }
    }

    /// Adjacency rows as machine words, for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(VertexSet::to_mask).collect()
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("valid clique")
    }

    /// `rows x cols` grid, vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let id = |r: usize, c: usize| r * cols + c;
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols {
                    edges.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < rows {
                    edges.push((id(r, c), id(r + 1, c)));
                }
            }
        }
        Self::from_edges(rows * cols, edges).expect("valid grid")
    }

    /// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, edges).expect("valid Petersen graph")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let off = self.n();
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Self::from_edges(off + other.n(), edges).expect("valid union")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}
