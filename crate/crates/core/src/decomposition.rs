//! Tree-decompositions and partial (<k)-decompositions.
//!
//! A [`TreeDecomposition`] is only a labelled tree; whether it decomposes a
//! particular graph is decided by [`verify_td`]. A [`PartialDecomposition`]
//! fixes a threshold `k`: bags of size `<= k` are small, the rest are big,
//! big bags may only sit on leaves, and the vertices a big leaf adds over its
//! neighbour form a [`Flap`].

use std::collections::VecDeque;

use thiserror::Error;

use crate::duality::is_k_flap;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("bag graph is not a tree: {0}")]
    NotATree(String),
    #[error("node {node} has vertex {vertex}, host has {n} vertices")]
    BagVertexOutOfRange { node: usize, vertex: usize, n: usize },
    #[error("node {0} does not exist")]
    NodeOutOfRange(usize),
    #[error("internal node {0} has a big bag")]
    BigInternalBag(usize),
    #[error("no bag is small")]
    NoSmallBag,
    #[error("separator of size {size} exceeds k = {k}")]
    SeparatorTooBig { size: usize, k: usize },
    #[error("vertex set is not a {0}-flap")]
    NotAFlap(usize),
    #[error("bags to identify differ: {0:?} vs {1:?}")]
    BagMismatch(VertexSet, VertexSet),
    #[error("identified node would be an internal node with a big bag")]
    BigIdentifiedInternal,
    #[error("decomposed regions overlap outside the identified bag")]
    OverlapViolation,
    #[error("thresholds differ: {0} vs {1}")]
    ThresholdMismatch(usize, usize),
    #[error("host sizes differ: {0} vs {1}")]
    HostMismatch(usize, usize),
}

/// A tree whose nodes `0..N` carry vertex-set bags over a host of `n`
/// vertices.
///
/// Tree edges are stored as `(a, b)` with `a < b`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    n: usize,
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    pub fn new(
        n: usize,
        bags: Vec<VertexSet>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DecompositionError> {
        let nodes = bags.len();
        if nodes == 0 {
            return Err(DecompositionError::NotATree("no nodes".into()));
        }
        for (node, bag) in bags.iter().enumerate() {
            if let Some(v) = bag.last().filter(|&v| v >= n) {
                return Err(DecompositionError::BagVertexOutOfRange { node, vertex: v, n });
            }
        }
        let mut norm = Vec::new();
        for (a, b) in edges {
            if a >= nodes || b >= nodes {
                return Err(DecompositionError::NodeOutOfRange(a.max(b)));
            }
            if a == b {
                return Err(DecompositionError::NotATree(format!("loop at node {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if norm.len() != nodes - 1 {
            return Err(DecompositionError::NotATree(format!(
                "{} edges on {} nodes",
                norm.len(),
                nodes
            )));
        }
        let mut adj = vec![Vec::new(); nodes];
        for &(a, b) in &norm {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let td = Self {
            n,
            bags,
            edges: norm,
            adj,
        };
        if td.distances_from(0).iter().any(Option::is_none) {
            return Err(DecompositionError::NotATree("disconnected".into()));
        }
        Ok(td)
    }

    /// One node holding all of `0..n`.
    pub fn trivial(n: usize) -> Self {
        Self::new(n, vec![VertexSet::full(n)], []).expect("single node is a tree")
    }

    /// Number of host vertices the bags range over.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &VertexSet {
        &self.bags[node]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn tree_neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    /// Degree at most one; a lone node counts as a leaf.
    pub fn is_leaf(&self, node: usize) -> bool {
        self.degree(node) <= 1
    }

    /// Maximum bag size minus one; `-1` when every bag is empty.
    pub fn width(&self) -> isize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0) as isize - 1
    }

    pub fn covered(&self) -> VertexSet {
        let mut out = VertexSet::new();
        for b in &self.bags {
            out.union_with(b);
        }
        out
    }

    /// Contracts every tree edge whose one bag contains the other, keeping
    /// the larger bag. Width and validity are unchanged; surviving nodes keep
    /// their relative order.
    pub fn contracted(&self) -> Self {
        let mut bags: Vec<Option<VertexSet>> = self.bags.iter().cloned().map(Some).collect();
        let mut edges = self.edges.clone();
        while let Some(i) = edges.iter().position(|&(a, b)| {
            let (ba, bb) = (bags[a].as_ref().unwrap(), bags[b].as_ref().unwrap());
            ba.is_subset(bb) || bb.is_subset(ba)
        }) {
            let (a, b) = edges.remove(i);
            let (keep, gone) = if bags[b].as_ref().unwrap().is_subset(bags[a].as_ref().unwrap()) {
                (a, b)
            } else {
                (b, a)
            };
            bags[gone] = None;
            for e in &mut edges {
                if e.0 == gone {
                    e.0 = keep;
                }
                if e.1 == gone {
                    e.1 = keep;
                }
                *e = (e.0.min(e.1), e.0.max(e.1));
            }
            edges.sort_unstable();
        }
        let mut id = vec![usize::MAX; bags.len()];
        let mut kept = Vec::new();
        for (t, bag) in bags.into_iter().enumerate() {
            if let Some(bag) = bag {
                id[t] = kept.len();
                kept.push(bag);
            }
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (id[a], id[b])).collect();
        Self::new(self.n, kept, edges).expect("contracting a tree edge leaves a tree")
    }

    /// Tree distances from `root`; `None` for unreachable nodes.
    pub(crate) fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        self.bfs(root).0
    }

    /// BFS from `root` visiting neighbours in id order; returns distances and
    /// parents.
    pub(crate) fn bfs(&self, root: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut dist = vec![None; self.node_count()];
        let mut parent = vec![None; self.node_count()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            let d = dist[t].unwrap();
            for &u in &self.adj[t] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    parent[u] = Some(t);
                    queue.push_back(u);
                }
            }
        }
        (dist, parent)
    }

    /// Nodes on either side of the tree edge `a -- b`: the first set holds
    /// `a`, the second `b`.
    pub(crate) fn split_at_edge(&self, a: usize, b: usize) -> (Vec<usize>, Vec<usize>) {
        let mut side_a = vec![a];
        let mut seen = vec![false; self.node_count()];
        seen[a] = true;
        seen[b] = true;
        let mut i = 0;
        while i < side_a.len() {
            let t = side_a[i];
            for &u in &self.adj[t] {
                if !seen[u] {
                    seen[u] = true;
                    side_a.push(u);
                }
            }
            i += 1;
        }
        let in_a: Vec<bool> = {
            let mut m = vec![false; self.node_count()];
            side_a.iter().for_each(|&t| m[t] = true);
            m
        };
        let side_b = (0..self.node_count()).filter(|&t| !in_a[t]).collect();
        (side_a, side_b)
    }
}

/// The first axiom a decomposition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The decomposition was built for a different number of vertices.
    HostSize { graph: usize, decomposition: usize },
    /// A bag holds a vertex outside the decomposed region.
    ForeignVertex { node: usize, vertex: usize },
    /// Axiom i: the vertex lies in no bag.
    UncoveredVertex(usize),
    /// Axiom iii: the vertex lies in both nodes, but not on the tree path
    /// between them.
    DisconnectedVertex { vertex: usize, nodes: (usize, usize) },
    /// Axiom ii: no bag holds both endpoints.
    UncoveredEdge(usize, usize),
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::HostSize { .. } | Violation::ForeignVertex { .. } => "domain",
            Violation::UncoveredVertex(_) => "i",
            Violation::UncoveredEdge(..) => "ii",
            Violation::DisconnectedVertex { .. } => "iii",
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::HostSize { graph, decomposition } => write!(
                f,
                "decomposition is over {decomposition} vertices, graph has {graph}"
            ),
            Violation::ForeignVertex { node, vertex } => {
                write!(f, "bag {} holds foreign vertex {}", node + 1, vertex + 1)
            }
            Violation::UncoveredVertex(v) => write!(f, "axiom i: vertex {} in no bag", v + 1),
            Violation::UncoveredEdge(u, v) => {
                write!(f, "axiom ii: edge {}-{} in no bag", u + 1, v + 1)
            }
            Violation::DisconnectedVertex { vertex, nodes } => write!(
                f,
                "axiom iii: bags containing vertex {} are disconnected (bags {} and {})",
                vertex + 1,
                nodes.0 + 1,
                nodes.1 + 1
            ),
        }
    }
}

impl std::error::Error for Violation {}

/// Checks that `d` is a tree-decomposition of `g`.
///
/// Checks run in the order: host size, axiom i, axiom iii, axiom ii.
pub fn verify_td(g: &Graph, d: &TreeDecomposition) -> Result<(), Violation> {
    verify_td_on(g, d, &g.vertices())
}

/// Checks that `d` is a tree-decomposition of the induced subgraph
/// `g[region]`, with vertices keeping their ids in `g`.
pub fn verify_td_on(g: &Graph, d: &TreeDecomposition, region: &VertexSet) -> Result<(), Violation> {
    if d.n() != g.n() {
        return Err(Violation::HostSize {
            graph: g.n(),
            decomposition: d.n(),
        });
    }
    for (node, bag) in d.bags().iter().enumerate() {
        if let Some(vertex) = bag.difference(region).first() {
            return Err(Violation::ForeignVertex { node, vertex });
        }
    }
    if let Some(v) = region.difference(&d.covered()).first() {
        return Err(Violation::UncoveredVertex(v));
    }
    for v in region {
        let holders: Vec<usize> = (0..d.node_count()).filter(|&t| d.bag(t).contains(v)).collect();
        let start = holders[0];
        let mut seen = vec![false; d.node_count()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for &u in d.tree_neighbors(t) {
                if !seen[u] && d.bag(u).contains(v) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if let Some(&other) = holders.iter().find(|&&t| !seen[t]) {
            return Err(Violation::DisconnectedVertex {
                vertex: v,
                nodes: (start, other),
            });
        }
    }
    for &(u, v) in g.edges() {
        if region.contains(u)
            && region.contains(v)
            && !d.bags().iter().any(|b| b.contains(u) && b.contains(v))
        {
            return Err(Violation::UncoveredEdge(u, v));
        }
    }
    Ok(())
}

/// Unfinished part of a partial decomposition: `bag(leaf) - bag(anchor)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flap {
    pub vertices: VertexSet,
    pub leaf: usize,
    pub anchor: usize,
}

/// A tree-decomposition read at threshold `k`: no internal bag is big and
/// at least one bag is small.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialDecomposition {
    td: TreeDecomposition,
    k: usize,
}

/// Wraps `d` as a partial (<k)-decomposition.
pub fn as_partial(d: TreeDecomposition, k: usize) -> Result<PartialDecomposition, DecompositionError> {
    let small = |t: usize| d.bag(t).len() <= k;
    if let Some(t) = (0..d.node_count()).find(|&t| !d.is_leaf(t) && !small(t)) {
        return Err(DecompositionError::BigInternalBag(t));
    }
    if !(0..d.node_count()).any(small) {
        return Err(DecompositionError::NoSmallBag);
    }
    Ok(PartialDecomposition { td: d, k })
}

impl PartialDecomposition {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn decomposition(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn into_decomposition(self) -> TreeDecomposition {
        self.td
    }

    pub fn is_small(&self, node: usize) -> bool {
        self.td.bag(node).len() <= self.k
    }

    /// True when every bag is small, i.e. this is a decomposition of width
    /// `< k`.
    pub fn is_complete(&self) -> bool {
        (0..self.td.node_count()).all(|t| self.is_small(t))
    }

    /// One flap per big leaf, in leaf id order.
    pub fn flaps(&self) -> Vec<Flap> {
        (0..self.td.node_count())
            .filter(|&t| !self.is_small(t))
            .map(|leaf| {
                // Big nodes are leaves of a tree with at least one small
                // node, so they have exactly one neighbour.
                let anchor = self.td.tree_neighbors(leaf)[0];
                Flap {
                    vertices: self.td.bag(leaf).difference(self.td.bag(anchor)),
                    leaf,
                    anchor,
                }
            })
            .collect()
    }

    pub fn flap_at(&self, leaf: usize) -> Option<Flap> {
        self.flaps().into_iter().find(|f| f.leaf == leaf)
    }
}

/// Star decomposition from `s`: centre bag `s` (node 0) and, for every
/// component `C` of `G - s` in order, a leaf with bag `C ∪ N(C)`.
pub fn star_decomposition(g: &Graph, s: &VertexSet, k: usize) -> Result<PartialDecomposition, DecompositionError> {
    if s.len() > k {
        return Err(DecompositionError::SeparatorTooBig { size: s.len(), k });
    }
    let mut bags = vec![s.clone()];
    for c in g.components(s) {
        bags.push(c.union(&g.neighborhood(&c)));
    }
    let edges: Vec<_> = (1..bags.len()).map(|leaf| (0, leaf)).collect();
    as_partial(TreeDecomposition::new(g.n(), bags, edges)?, k)
}

/// Builds a partial (<k)-decomposition in which `x` is a flap.
///
/// The centre (node 0) is `N(x)` padded with the smallest-id vertices
/// outside `x ∪ N(x)` until the leaf `x ∪ centre` (node 1) is big. Every
/// other component of `G - centre` gets its own leaf, as in a star.
pub fn realize_flap(g: &Graph, x: &VertexSet, k: usize) -> Result<PartialDecomposition, DecompositionError> {
    if !is_k_flap(g, x, k) {
        return Err(DecompositionError::NotAFlap(k));
    }
    let boundary = g.neighborhood(x);
    let closed = x.union(&boundary);
    let missing = (k + 1).saturating_sub(closed.len());
    let mut centre = boundary;
    centre.extend(g.vertices().difference(&closed).iter().take(missing));
    debug_assert!(centre.len() <= k);

    let mut bags = vec![centre.clone(), x.union(&centre)];
    for c in g.components(&centre) {
        if c.is_disjoint(x) {
            bags.push(c.union(&g.neighborhood(&c)));
        }
    }
    let edges: Vec<_> = (1..bags.len()).map(|leaf| (0, leaf)).collect();
    as_partial(TreeDecomposition::new(g.n(), bags, edges)?, k)
}

/// Identifies node `leaf1` of `p1` with node `leaf2` of `p2`.
///
/// Nodes of `p1` keep their ids; the remaining nodes of `p2` follow in
/// order. The two inputs must cover regions that meet exactly in the shared
/// bag.
pub fn glue(
    p1: &PartialDecomposition,
    leaf1: usize,
    p2: &PartialDecomposition,
    leaf2: usize,
) -> Result<PartialDecomposition, DecompositionError> {
    let (d1, d2) = (p1.decomposition(), p2.decomposition());
    if p1.k != p2.k {
        return Err(DecompositionError::ThresholdMismatch(p1.k, p2.k));
    }
    if d1.n() != d2.n() {
        return Err(DecompositionError::HostMismatch(d1.n(), d2.n()));
    }
    for (d, t) in [(d1, leaf1), (d2, leaf2)] {
        if t >= d.node_count() {
            return Err(DecompositionError::NodeOutOfRange(t));
        }
    }
    let shared = d1.bag(leaf1);
    if shared != d2.bag(leaf2) {
        return Err(DecompositionError::BagMismatch(shared.clone(), d2.bag(leaf2).clone()));
    }
    if &d1.covered().intersection(&d2.covered()) != shared {
        return Err(DecompositionError::OverlapViolation);
    }
    if shared.len() > p1.k && d1.degree(leaf1) + d2.degree(leaf2) >= 2 {
        return Err(DecompositionError::BigIdentifiedInternal);
    }

    let base = d1.node_count();
    let map = |t: usize| -> usize {
        match t.cmp(&leaf2) {
            std::cmp::Ordering::Equal => leaf1,
            std::cmp::Ordering::Less => base + t,
            std::cmp::Ordering::Greater => base + t - 1,
        }
    };
    let mut bags = d1.bags().to_vec();
    bags.extend(
        d2.bags()
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != leaf2)
            .map(|(_, b)| b.clone()),
    );
    let edges = d1
        .tree_edges()
        .iter()
        .copied()
        .chain(d2.tree_edges().iter().map(|&(a, b)| (map(a), map(b))));
    as_partial(TreeDecomposition::new(d1.n(), bags, edges)?, p1.k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().map(|v| v - 1).collect()
    }

    fn td(n: usize, bags: &[&[usize]], edges: &[(usize, usize)]) -> TreeDecomposition {
        TreeDecomposition::new(n, bags.iter().map(|b| set(b)).collect(), edges.iter().copied()).unwrap()
    }

    #[test]
    fn verify_examples() {
        let p3 = Graph::path(3);
        assert_eq!(verify_td(&p3, &td(3, &[&[1, 2], &[2, 3]], &[(0, 1)])), Ok(()));
        let v = verify_td(&p3, &td(3, &[&[1, 2], &[3]], &[(0, 1)])).unwrap_err();
        assert_eq!(v, Violation::UncoveredEdge(1, 2));
        assert_eq!(v.axiom(), "ii");
        let v = verify_td(&p3, &td(3, &[&[1, 2], &[3], &[1, 2]], &[(0, 1), (1, 2)])).unwrap_err();
        assert_eq!(
            v,
            Violation::DisconnectedVertex {
                vertex: 0,
                nodes: (0, 2)
            }
        );
        assert_eq!(v.axiom(), "iii");
    }

    #[test]
    fn verify_uncovered_vertex_and_host() {
        let p3 = Graph::path(3);
        assert_eq!(
            verify_td(&p3, &td(3, &[&[1, 2]], &[])),
            Err(Violation::UncoveredVertex(2))
        );
        assert!(matches!(
            verify_td(&p3, &td(4, &[&[1, 2, 3]], &[])),
            Err(Violation::HostSize { .. })
        ));
    }

    #[test]
    fn width_examples() {
        assert_eq!(td(3, &[&[1, 2], &[2, 3]], &[(0, 1)]).width(), 1);
        assert_eq!(td(4, &[&[1, 2, 3, 4]], &[]).width(), 3);
        assert_eq!(TreeDecomposition::trivial(0).width(), -1);
    }

    #[test]
    fn contracts_nested_bags() {
        let d = td(4, &[&[1], &[1, 2], &[1, 2, 3], &[1, 3, 4]], &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(d.contracted(), td(4, &[&[1, 2, 3], &[1, 3, 4]], &[(0, 1)]));
        let star = td(3, &[&[], &[1, 2], &[3]], &[(0, 1), (0, 2)]);
        let c = star.contracted();
        assert_eq!(c.node_count(), 2);
        assert_eq!(verify_td(&Graph::path(2).disjoint_union(&Graph::new(1)), &c), Ok(()));
    }

    #[test]
    fn rejects_non_trees() {
        let cyc = TreeDecomposition::new(3, vec![VertexSet::new(); 3], [(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(cyc, Err(DecompositionError::NotATree(_))));
        let split = TreeDecomposition::new(3, vec![VertexSet::new(); 4], [(0, 1), (2, 3), (0, 1)]);
        assert!(matches!(split, Err(DecompositionError::NotATree(_))));
        assert!(TreeDecomposition::new(1, vec![], []).is_err());
    }

    #[test]
    fn as_partial_examples() {
        let p3 = Graph::path(3);
        let star = star_decomposition(&p3, &set(&[2]), 1).unwrap();
        assert_eq!(star.decomposition().bags(), &[set(&[2]), set(&[1, 2]), set(&[2, 3])]);
        assert_eq!(
            as_partial(td(4, &[&[1, 2, 3, 4]], &[]), 2),
            Err(DecompositionError::NoSmallBag)
        );
        let path = td(3, &[&[1, 2, 3], &[2], &[1, 2, 3]], &[(0, 1), (1, 2)]);
        assert!(as_partial(path.clone(), 2).is_ok());
        let inner = td(3, &[&[2], &[1, 2, 3], &[2]], &[(0, 1), (1, 2)]);
        assert_eq!(as_partial(inner, 2), Err(DecompositionError::BigInternalBag(1)));
        // both leaves of a two-node tree big
        assert_eq!(
            as_partial(td(3, &[&[1, 2], &[2, 3]], &[(0, 1)]), 1),
            Err(DecompositionError::NoSmallBag)
        );
    }

    #[test]
    fn flap_examples() {
        let p5 = Graph::path(5);
        let star = star_decomposition(&p5, &set(&[2]), 1).unwrap();
        let flaps: Vec<_> = star.flaps().into_iter().map(|f| f.vertices).collect();
        assert_eq!(flaps, vec![set(&[1]), set(&[3, 4, 5])]);

        // P3 bags {1,2},{2,3} at k=1 has both leaves big, so it is rejected;
        // with a small middle bag both leaves are flaps.
        let p3 = Graph::path(3);
        let d = td(3, &[&[1, 2], &[2], &[2, 3]], &[(0, 1), (1, 2)]);
        assert_eq!(verify_td(&p3, &d), Ok(()));
        let flaps: Vec<_> = as_partial(d, 1).unwrap().flaps().into_iter().map(|f| f.vertices).collect();
        assert_eq!(flaps, vec![set(&[1]), set(&[3])]);

        let complete = as_partial(td(3, &[&[1, 2], &[2, 3]], &[(0, 1)]), 2).unwrap();
        assert!(complete.is_complete());
        assert!(complete.flaps().is_empty());
    }

    #[test]
    fn two_node_anchor_is_the_small_leaf() {
        let d = td(3, &[&[1, 2, 3], &[2]], &[(0, 1)]);
        let p = as_partial(d, 1).unwrap();
        assert_eq!(
            p.flaps(),
            vec![Flap {
                vertices: set(&[1, 3]),
                leaf: 0,
                anchor: 1
            }]
        );
    }

    #[test]
    fn star_examples() {
        let p5 = Graph::path(5);
        let s = star_decomposition(&p5, &set(&[2]), 1).unwrap();
        assert_eq!(s.decomposition().bags(), &[set(&[2]), set(&[1, 2]), set(&[2, 3, 4, 5])]);
        let c4 = Graph::cycle(4);
        let s = star_decomposition(&c4, &set(&[1, 3]), 2).unwrap();
        assert_eq!(s.decomposition().bags(), &[set(&[1, 3]), set(&[1, 2, 3]), set(&[1, 3, 4])]);
        let k4 = Graph::complete(4);
        let s = star_decomposition(&k4, &set(&[1, 2, 3]), 3).unwrap();
        assert_eq!(s.decomposition().bags(), &[set(&[1, 2, 3]), set(&[1, 2, 3, 4])]);
        assert_eq!(
            star_decomposition(&k4, &set(&[1, 2, 3]), 2),
            Err(DecompositionError::SeparatorTooBig { size: 3, k: 2 })
        );
        let whole = star_decomposition(&Graph::path(2), &set(&[1, 2]), 2).unwrap();
        assert_eq!(whole.decomposition().node_count(), 1);
    }

    #[test]
    fn realize_examples() {
        let p3 = Graph::path(3);
        let r = realize_flap(&p3, &set(&[3]), 2).unwrap();
        assert_eq!(r.decomposition().bags(), &[set(&[1, 2]), set(&[1, 2, 3])]);
        assert_eq!(r.flaps()[0].vertices, set(&[3]));

        let p5 = Graph::path(5);
        let r = realize_flap(&p5, &set(&[3, 4, 5]), 1).unwrap();
        assert_eq!(r.decomposition().bags(), &[set(&[2]), set(&[2, 3, 4, 5]), set(&[1, 2])]);
        assert!(r.flaps().iter().any(|f| f.vertices == set(&[3, 4, 5]) && f.anchor == 0));

        assert_eq!(
            realize_flap(&Graph::cycle(4), &set(&[2]), 1),
            Err(DecompositionError::NotAFlap(1))
        );
    }

    #[test]
    fn realize_merges_components_inside_x() {
        let p5 = Graph::path(5);
        let x = set(&[1, 3]);
        let r = realize_flap(&p5, &x, 2).unwrap();
        assert_eq!(verify_td(&p5, r.decomposition()), Ok(()));
        assert_eq!(r.decomposition().bag(1), &set(&[1, 2, 3, 4]));
        assert_eq!(r.flap_at(1).unwrap().vertices, x);
    }

    #[test]
    fn glue_examples() {
        let p3 = Graph::path(3);
        let star = star_decomposition(&p3, &set(&[2]), 2).unwrap();
        let single = as_partial(td(3, &[&[1, 2]], &[]), 2).unwrap();
        let glued = glue(&star, 1, &single, 0).unwrap();
        assert_eq!(glued, star);

        let other = as_partial(td(3, &[&[2, 3]], &[]), 2).unwrap();
        assert!(matches!(
            glue(&star, 1, &other, 0),
            Err(DecompositionError::BagMismatch(..))
        ));
        assert_eq!(glue(&star, 1, &star, 1), Err(DecompositionError::OverlapViolation));
    }

    #[test]
    fn glue_rejects_big_internal() {
        // two halves of P5 meeting in {3}, glued at big leaves
        let left = as_partial(td(5, &[&[1], &[1, 2, 3]], &[(0, 1)]), 1).unwrap();
        let right = as_partial(td(5, &[&[5], &[3, 4, 5]], &[(0, 1)]), 1).unwrap();
        let lb = as_partial(td(5, &[&[3], &[1, 2, 3]], &[(0, 1)]), 1).unwrap();
        let rb = as_partial(td(5, &[&[3], &[3, 4, 5]], &[(0, 1)]), 1).unwrap();
        assert!(matches!(glue(&left, 1, &right, 1), Err(DecompositionError::BagMismatch(..))));
        let glued = glue(&lb, 0, &rb, 0).unwrap();
        assert_eq!(verify_td(&Graph::path(5), glued.decomposition()), Ok(()));
        let a = as_partial(td(4, &[&[1, 2], &[1, 2, 3]], &[(0, 1)]), 2).unwrap();
        let b = as_partial(td(4, &[&[1, 2, 3], &[3, 4]], &[(0, 1)]), 2).unwrap();
        assert_eq!(glue(&a, 1, &b, 0), Err(DecompositionError::BigIdentifiedInternal));
        let b3 = as_partial(td(4, &[&[1, 2, 3], &[3, 4]], &[(0, 1)]), 3).unwrap();
        assert_eq!(glue(&a, 1, &b3, 0), Err(DecompositionError::ThresholdMismatch(2, 3)));
    }
}
