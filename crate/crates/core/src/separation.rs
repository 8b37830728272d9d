//! Minimum vertex separators between non-touching sets, and the merge of two
//! partial decompositions along such a separator.
//!
//! The merge works in three steps. First, find a minimum separator `S`
//! between flaps `X` and `Y`, with one disjoint path per vertex of `S`.
//! Second, restrict each decomposition to the far side of `S`, routing every
//! `s ∈ S` along the tree path from the flap leaf to a bag holding `s`.
//! Third, glue the two results at their flap leaves, which now both carry
//! exactly `S`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::decomposition::{as_partial, glue, DecompositionError, Flap, PartialDecomposition, TreeDecomposition};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparationError {
    #[error("both vertex sets must be nonempty")]
    EmptyInput,
    #[error("the vertex sets touch, no separator exists")]
    TouchingInputs,
    #[error("the flaps touch")]
    TouchingFlaps,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
}

fn invalid(msg: impl Into<String>) -> SeparationError {
    SeparationError::InvalidWitness(msg.into())
}

/// A separation `(A, B)` with `A ∩ B = S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    /// The separator `S`.
    pub s: VertexSet,
    /// `S` plus every component of `G - S` meeting `X`.
    pub a: VertexSet,
    /// `(V - A) ∪ S`.
    pub b: VertexSet,
}

/// One `X`–`Y` path, crossing the separator exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MengerPath {
    /// Vertices from a vertex of `X` to a vertex of `Y`. Only the endpoints
    /// lie in `X ∪ Y`.
    pub vertices: Vec<usize>,
    /// Index of the separator vertex in `vertices`.
    pub cut: usize,
}

impl MengerPath {
    pub fn separator_vertex(&self) -> usize {
        self.vertices[self.cut]
    }
}

/// Paths pairwise disjoint outside `X` and `Y`, one per separator vertex.
///
/// Paths may share their first vertex in `X` (or their last in `Y`), since
/// both sets are contracted to a single terminal for the flow.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DisjointPaths {
    pub paths: Vec<MengerPath>,
}

impl DisjointPaths {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    fn through(&self, s: usize) -> Option<&MengerPath> {
        self.paths.iter().find(|p| p.separator_vertex() == s)
    }

    /// `P_s`: from a vertex of `X` to `s`.
    pub fn toward_x(&self, s: usize) -> Option<Vec<usize>> {
        self.through(s).map(|p| p.vertices[..=p.cut].to_vec())
    }

    /// From a vertex of `Y` to `s`.
    pub fn toward_y(&self, s: usize) -> Option<Vec<usize>> {
        self.through(s)
            .map(|p| p.vertices[p.cut..].iter().rev().copied().collect())
    }
}

const INF: u32 = u32::MAX / 2;

struct FlowNet {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn sort_arcs(&mut self) {
        let head = &self.head;
        for list in &mut self.out {
            list.sort_by_key(|&a| (head[a], a));
        }
    }

    /// Residual BFS from `src`; returns the parent arc of every reached node.
    fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut via = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let w = self.head[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = Some(a);
                    queue.push_back(w);
                }
            }
        }
        via
    }
}

/// Minimum set `S`, disjoint from `x` and `y`, such that no component of
/// `G - S` meets both, together with `|S|` disjoint `x`–`y` paths.
///
/// The separator is the one closest to `x`: the boundary of what the source
/// still reaches in the residual network of a maximum unit vertex-capacity
/// flow.
pub fn min_xy_separator(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<(Separation, DisjointPaths), SeparationError> {
    if x.is_empty() || y.is_empty() {
        return Err(SeparationError::EmptyInput);
    }
    if g.touches(x, y) {
        return Err(SeparationError::TouchingInputs);
    }
    let n = g.n();
    let (vin, vout) = (|v: usize| 2 * v, |v: usize| 2 * v + 1);
    let (src, sink) = (2 * n, 2 * n + 1);
    let terminal = x.union(y);

    let mut net = FlowNet::new(2 * n + 2);
    let mut unit_arc = vec![usize::MAX; n];
    for (v, arc) in unit_arc.iter_mut().enumerate() {
        *arc = net.head.len();
        net.arc(vin(v), vout(v), if terminal.contains(v) { INF } else { 1 });
    }
    for &(u, v) in g.edges() {
        net.arc(vout(u), vin(v), INF);
        net.arc(vout(v), vin(u), INF);
    }
    for v in x {
        net.arc(src, vin(v), INF);
    }
    for v in y {
        net.arc(vout(v), sink, INF);
    }
    net.sort_arcs();
    let original = net.cap.clone();

    let mut value = 0;
    loop {
        let via = net.bfs(src);
        if via[sink].is_none() {
            break;
        }
        let mut node = sink;
        while let Some(a) = via[node] {
            net.cap[a] -= 1;
            net.cap[a ^ 1] += 1;
            node = net.head[a ^ 1];
        }
        value += 1;
    }

    let reached: Vec<bool> = {
        let via = net.bfs(src);
        (0..net.out.len()).map(|u| u == src || via[u].is_some()).collect()
    };
    let s: VertexSet = (0..n)
        .filter(|&v| !terminal.contains(v) && reached[vin(v)] && !reached[vout(v)])
        .collect();
    if s.len() != value {
        return Err(invalid(format!("cut of size {} for flow {}", s.len(), value)));
    }

    let mut flow: Vec<u32> = (0..net.cap.len())
        .map(|a| original[a].saturating_sub(net.cap[a]))
        .collect();
    let mut paths = Vec::with_capacity(value);
    for _ in 0..value {
        let walk = take_flow_path(&net, &mut flow, src, sink);
        let mut vertices: Vec<usize> = Vec::new();
        for node in walk {
            if node < 2 * n && vertices.last() != Some(&(node / 2)) {
                vertices.push(node / 2);
            }
        }
        let start = vertices.iter().rposition(|&v| x.contains(v)).unwrap();
        vertices.drain(..start);
        let end = vertices.iter().position(|&v| y.contains(v)).unwrap();
        vertices.truncate(end + 1);
        let cut = vertices
            .iter()
            .position(|&v| s.contains(v))
            .ok_or_else(|| invalid("flow path avoids the separator"))?;
        paths.push(MengerPath { vertices, cut });
    }
    paths.sort_by_key(MengerPath::separator_vertex);

    let mut a = s.clone();
    for c in g.components(&s) {
        if c.intersects(x) {
            a.union_with(&c);
        }
    }
    let b = g.vertices().difference(&a).union(&s);
    Ok((Separation { s, a, b }, DisjointPaths { paths }))
}

/// Pulls one unit of flow off a `src`–`sink` walk, preferring the smallest
/// next node and cutting out any cycle it runs into.
fn take_flow_path(net: &FlowNet, flow: &mut [u32], src: usize, sink: usize) -> Vec<usize> {
    let mut walk = vec![src];
    let mut arcs: Vec<usize> = Vec::new();
    let mut pos = vec![usize::MAX; net.out.len()];
    pos[src] = 0;
    let mut u = src;
    while u != sink {
        let a = *net.out[u]
            .iter()
            .find(|&&a| a % 2 == 0 && flow[a] > 0)
            .expect("flow conservation");
        let w = net.head[a];
        arcs.push(a);
        if pos[w] != usize::MAX {
            // cycle: cancel it and resume from w
            let from = pos[w];
            for &c in &arcs[from..] {
                flow[c] -= 1;
            }
            arcs.truncate(from);
            for &t in &walk[from + 1..] {
                pos[t] = usize::MAX;
            }
            walk.truncate(from + 1);
            u = w;
            continue;
        }
        pos[w] = walk.len();
        walk.push(w);
        u = w;
    }
    for &a in &arcs {
        flow[a] -= 1;
    }
    walk
}

/// Which side of a [`Separation`] a restricted decomposition keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Restricts `p` to one side of `sep`, turning the flap leaf into a leaf
/// with bag exactly `S`.
///
/// The flap at `flap_leaf` must lie on the removed side. Keeping side `B`
/// routes separator vertices along the paths toward `X`, keeping `A` along
/// the paths toward `Y`. Each bag becomes
/// `(bag ∩ kept) ∪ {s : node lies on the tree path from flap_leaf to t_s}`,
/// where `t_s` is the bag holding `s` nearest to the flap leaf (smallest id
/// on ties).
pub fn restrict_to_side(
    p: &PartialDecomposition,
    sep: &Separation,
    side: Side,
    flap_leaf: usize,
    paths: &DisjointPaths,
) -> Result<PartialDecomposition, SeparationError> {
    let d = p.decomposition();
    if flap_leaf >= d.node_count() {
        return Err(invalid(format!("no node {flap_leaf}")));
    }
    let keep = match side {
        Side::A => &sep.a,
        Side::B => &sep.b,
    };
    let dropped = d.covered().difference(keep);
    let flap = p
        .flap_at(flap_leaf)
        .ok_or_else(|| invalid(format!("node {flap_leaf} is not a flap leaf")))?;
    if !flap.vertices.is_subset(&dropped) {
        return Err(invalid("flap is not on the removed side"));
    }
    if paths.len() != sep.s.len() {
        return Err(invalid("path count differs from separator size"));
    }

    let (dist, parent) = d.bfs(flap_leaf);
    let mut bags: Vec<VertexSet> = d.bags().iter().map(|b| b.intersection(keep)).collect();
    for s in &sep.s {
        let path = match side {
            Side::B => paths.toward_x(s),
            Side::A => paths.toward_y(s),
        }
        .ok_or_else(|| invalid(format!("no path ends at separator vertex {s}")))?;
        let (&start, body) = path.split_first().unwrap();
        if !flap.vertices.contains(start) {
            return Err(invalid(format!("path to {s} does not start in the flap")));
        }
        if body[..body.len().saturating_sub(1)].iter().any(|&v| !dropped.contains(v)) {
            return Err(invalid(format!("path to {s} enters the kept side early")));
        }
        let target = (0..d.node_count())
            .filter(|&t| d.bag(t).contains(s))
            .min_by_key(|&t| (dist[t], t))
            .ok_or_else(|| invalid(format!("separator vertex {s} is in no bag")))?;
        let mut t = target;
        bags[t].insert(s);
        while let Some(up) = parent[t] {
            t = up;
            bags[t].insert(s);
        }
    }
    bags[flap_leaf] = sep.s.clone();

    if let Some(t) = (0..d.node_count()).find(|&t| bags[t].len() > d.bag(t).len()) {
        return Err(invalid(format!("bag {t} grew; paths do not match the decomposition")));
    }
    let restricted = TreeDecomposition::new(d.n(), bags, d.tree_edges().iter().copied())?;
    Ok(as_partial(restricted, p.k())?)
}

/// Combines partial (<k)-decompositions with non-touching flaps `x` and `y`
/// into one whose flaps are all contained in other flaps of the inputs.
pub fn merge_flaps_lemma1(
    g: &Graph,
    k: usize,
    px: &PartialDecomposition,
    x: &Flap,
    py: &PartialDecomposition,
    y: &Flap,
) -> Result<PartialDecomposition, SeparationError> {
    for (p, f, name) in [(px, x, "x"), (py, y, "y")] {
        if p.k() != k {
            return Err(invalid(format!("{name} side built at k = {}, not {k}", p.k())));
        }
        if !p.flaps().contains(f) {
            return Err(invalid(format!("{name} is not a flap of its decomposition")));
        }
    }
    if g.touches(&x.vertices, &y.vertices) {
        return Err(SeparationError::TouchingFlaps);
    }
    let (sep, paths) = min_xy_separator(g, &x.vertices, &y.vertices)?;
    let rx = restrict_to_side(px, &sep, Side::B, x.leaf, &paths)?;
    let ry = restrict_to_side(py, &sep, Side::A, y.leaf, &paths)?;
    Ok(glue(&rx, x.leaf, &ry, y.leaf)?)
}
