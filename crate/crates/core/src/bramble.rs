//! Brambles: families of connected, pairwise touching vertex sets.
//!
//! Two checks run against a bramble. The first computes its order exactly,
//! as the minimum size of a set meeting every element. The second takes any
//! tree-decomposition and finds a bag (or an adhesion) that meets every
//! element, which shows that the decomposition has width at least
//! order − 1.

use std::fmt;

use thiserror::Error;

use crate::decomposition::TreeDecomposition;
use crate::graph::Graph;
use crate::vertex_set::{size_then_lex, VertexSet};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrambleError {
    #[error("cover search over {what} = {value} exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("bramble is over {bramble} vertices, graph has {graph}")]
    HostMismatch { bramble: usize, graph: usize },
    #[error("tree edge {}-{} cannot be oriented consistently", .0 .0 + 1, .0 .1 + 1)]
    OrientationConflict((usize, usize)),
    #[error("bag {} at the end of the orientation misses an element", .0 + 1)]
    NotCovering(usize),
}

/// A bramble certificate over a host graph with `n` vertices.
///
/// The structure itself is not checked on construction; use
/// [`verify_bramble`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bramble {
    n: usize,
    elements: Vec<VertexSet>,
    claimed_order: Option<usize>,
}

impl Bramble {
    pub fn new(n: usize, elements: Vec<VertexSet>) -> Self {
        Self {
            n,
            elements,
            claimed_order: None,
        }
    }

    pub fn with_claimed_order(mut self, order: usize) -> Self {
        self.claimed_order = (order > 0).then_some(order);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Order written into the certificate, if any.
    pub fn claimed_order(&self) -> Option<usize> {
        self.claimed_order
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrambleViolation {
    HostSize { graph: usize, bramble: usize },
    EmptyElement(usize),
    VertexOutOfRange { element: usize, vertex: usize },
    Disconnected(usize),
    NotTouching(usize, usize),
}

impl fmt::Display for BrambleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HostSize { graph, bramble } => {
                write!(f, "bramble is over {bramble} vertices, graph has {graph}")
            }
            Self::EmptyElement(i) => write!(f, "element {} is empty", i + 1),
            Self::VertexOutOfRange { element, vertex } => {
                write!(f, "element {} has vertex {} outside the graph", element + 1, vertex + 1)
            }
            Self::Disconnected(i) => write!(f, "element {} is not connected", i + 1),
            Self::NotTouching(i, j) => write!(f, "elements {} and {} do not touch", i + 1, j + 1),
        }
    }
}

impl std::error::Error for BrambleViolation {}

/// Checks that every element is nonempty and connected, and that every two
/// elements touch.
pub fn verify_bramble(g: &Graph, b: &Bramble) -> Result<(), BrambleViolation> {
    if b.n() != g.n() {
        return Err(BrambleViolation::HostSize {
            graph: g.n(),
            bramble: b.n(),
        });
    }
    for (i, e) in b.elements().iter().enumerate() {
        if e.is_empty() {
            return Err(BrambleViolation::EmptyElement(i));
        }
        if let Some(vertex) = e.last().filter(|&v| v >= g.n()) {
            return Err(BrambleViolation::VertexOutOfRange { element: i, vertex });
        }
        if !g.is_connected_set(e) {
            return Err(BrambleViolation::Disconnected(i));
        }
    }
    for (i, a) in b.elements().iter().enumerate() {
        for (j, c) in b.elements().iter().enumerate().skip(i + 1) {
            if !g.touches(a, c) {
                return Err(BrambleViolation::NotTouching(i, j));
            }
        }
    }
    Ok(())
}

/// A minimum set of vertices meeting every element of `b`.
///
/// Supersets of other elements are dropped first, since anything meeting an
/// element meets its supersets. The element limit applies to what is left.
/// The search is a branch and bound that branches on the smallest unmet
/// element, tries its vertices in id order, and prunes with a packing of
/// disjoint unmet elements.
pub fn min_cover(g: &Graph, b: &Bramble, limits: &Limits) -> Result<VertexSet, BrambleError> {
    if b.n() != g.n() {
        return Err(BrambleError::HostMismatch {
            bramble: b.n(),
            graph: g.n(),
        });
    }
    let n_limit = limits.cover_n.min(64);
    if g.n() > n_limit {
        return Err(BrambleError::TooLarge {
            what: "vertices",
            value: g.n(),
            limit: n_limit,
        });
    }
    let mut sorted: Vec<&VertexSet> = b.elements().iter().collect();
    sorted.sort_by(|a, c| size_then_lex(a, c));
    let mut elements: Vec<u64> = Vec::new();
    for e in sorted {
        let m = e.to_mask().expect("checked against n <= 64");
        if !elements.iter().any(|&kept| kept & !m == 0) {
            elements.push(m);
        }
    }
    if elements.len() > limits.cover_elements {
        return Err(BrambleError::TooLarge {
            what: "minimal elements",
            value: elements.len(),
            limit: limits.cover_elements,
        });
    }
    // an empty element can never be met
    if elements.contains(&0) {
        return Ok(VertexSet::full(g.n()));
    }
    let mut best = (usize::MAX, 0u64);
    branch(&elements, 0, &mut best);
    Ok(VertexSet::from_mask(best.1))
}

fn branch(unmet: &[u64], chosen: u64, best: &mut (usize, u64)) {
    let size = chosen.count_ones() as usize;
    if unmet.is_empty() {
        if size < best.0 {
            *best = (size, chosen);
        }
        return;
    }
    if size + lower_bound(unmet) >= best.0 {
        return;
    }
    // elements are sorted by size, so the first unmet one is the smallest
    let mut pick = unmet[0];
    while pick != 0 {
        let v = pick & pick.wrapping_neg();
        pick &= pick - 1;
        let rest: Vec<u64> = unmet.iter().copied().filter(|&e| e & v == 0).collect();
        branch(&rest, chosen | v, best);
    }
}

fn lower_bound(unmet: &[u64]) -> usize {
    let mut used = 0u64;
    let mut packing = 0;
    for &e in unmet {
        if e & used == 0 {
            used |= e;
            packing += 1;
        }
    }
    let mut hits = [0usize; 64];
    for &e in unmet {
        let mut m = e;
        while m != 0 {
            hits[m.trailing_zeros() as usize] += 1;
            m &= m - 1;
        }
    }
    let most = hits.iter().copied().max().unwrap_or(1).max(1);
    packing.max(unmet.len().div_ceil(most))
}

/// Where a cover was found in a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverLocation {
    Bag(usize),
    /// The intersection of the bags at the two ends of a tree edge.
    Adhesion(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub location: CoverLocation,
    pub cover: VertexSet,
}

/// A bag or adhesion of `d` meeting every element of `b`.
///
/// Tree edges are scanned in order, and the first adhesion that meets every
/// element is returned. If none does, each tree edge is oriented toward the
/// side that holds the elements missing its adhesion. Following the
/// orientation from node 0 (smallest neighbour first) then ends in a
/// covering bag.
pub fn find_covering_bag(g: &Graph, d: &TreeDecomposition, b: &Bramble) -> Result<CoverWitness, BrambleError> {
    if b.n() != g.n() || d.n() != g.n() {
        return Err(BrambleError::HostMismatch {
            bramble: b.n(),
            graph: g.n(),
        });
    }
    let covers = |x: &VertexSet| b.elements().iter().all(|e| e.intersects(x));
    for &(t1, t2) in d.tree_edges() {
        let adhesion = d.bag(t1).intersection(d.bag(t2));
        if covers(&adhesion) {
            return Ok(CoverWitness {
                location: CoverLocation::Adhesion(t1, t2),
                cover: adhesion,
            });
        }
    }

    // toward[i] is the endpoint of tree edge i that the edge points to
    let mut toward = Vec::with_capacity(d.tree_edges().len());
    for &(t1, t2) in d.tree_edges() {
        let adhesion = d.bag(t1).intersection(d.bag(t2));
        let (nodes1, nodes2) = d.split_at_edge(t1, t2);
        let union = |nodes: &[usize]| {
            let mut out = VertexSet::new();
            nodes.iter().for_each(|&t| out.union_with(d.bag(t)));
            out
        };
        let (v1, v2) = (union(&nodes1), union(&nodes2));
        let mut side = None;
        for e in b.elements().iter().filter(|e| e.is_disjoint(&adhesion)) {
            let here = match (e.is_subset(&v1), e.is_subset(&v2)) {
                (true, false) => t1,
                (false, true) => t2,
                _ => return Err(BrambleError::OrientationConflict((t1, t2))),
            };
            if side.is_some_and(|s| s != here) {
                return Err(BrambleError::OrientationConflict((t1, t2)));
            }
            side = Some(here);
        }
        toward.push(side.expect("adhesion does not cover, so some element misses it"));
    }

    let mut t = 0;
    loop {
        let next = d
            .tree_edges()
            .iter()
            .zip(&toward)
            .filter(|(&(a, c), &head)| (a == t || c == t) && head != t)
            .map(|(_, &head)| head)
            .min();
        match next {
            Some(u) => t = u,
            None => break,
        }
    }
    let cover = d.bag(t).clone();
    if !covers(&cover) {
        return Err(BrambleError::NotCovering(t));
    }
    Ok(CoverWitness {
        location: CoverLocation::Bag(t),
        cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().map(|v| v - 1).collect()
    }

    fn bramble(n: usize, elements: &[&[usize]]) -> Bramble {
        Bramble::new(n, elements.iter().map(|e| set(e)).collect())
    }

    #[test]
    fn verify_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(verify_bramble(&c4, &bramble(4, &[&[1, 2], &[3], &[4]])), Ok(()));
        assert_eq!(
            verify_bramble(&c4, &bramble(4, &[&[1], &[3]])),
            Err(BrambleViolation::NotTouching(0, 1))
        );
        let p5 = Graph::path(5);
        assert_eq!(
            verify_bramble(&p5, &bramble(5, &[&[1, 3]])),
            Err(BrambleViolation::Disconnected(0))
        );
        assert_eq!(
            verify_bramble(&p5, &bramble(5, &[&[]])),
            Err(BrambleViolation::EmptyElement(0))
        );
    }

    #[test]
    fn min_cover_examples() {
        let limits = Limits::default();
        let k4 = Graph::complete(4);
        let singletons = bramble(4, &[&[1], &[2], &[3], &[4]]);
        assert_eq!(min_cover(&k4, &singletons, &limits), Ok(set(&[1, 2, 3, 4])));
        let c4 = Graph::cycle(4);
        let cover = min_cover(&c4, &bramble(4, &[&[1, 2], &[3], &[4]]), &limits).unwrap();
        assert_eq!(cover, set(&[1, 3, 4]));
        assert_eq!(min_cover(&c4, &bramble(4, &[&[2, 3]]), &limits).unwrap().len(), 1);
    }

    #[test]
    fn min_cover_guard() {
        let g = Graph::path(33);
        let b = bramble(33, &[&[1]]);
        assert!(matches!(
            min_cover(&g, &b, &Limits::default()),
            Err(BrambleError::TooLarge { what: "vertices", .. })
        ));
    }

    fn td(n: usize, bags: &[&[usize]], edges: &[(usize, usize)]) -> TreeDecomposition {
        TreeDecomposition::new(n, bags.iter().map(|b| set(b)).collect(), edges.iter().copied()).unwrap()
    }

    #[test]
    fn covering_bag_examples() {
        let k4 = Graph::complete(4);
        let w = find_covering_bag(&k4, &td(4, &[&[1, 2, 3, 4]], &[]), &bramble(4, &[&[1], &[2], &[3], &[4]])).unwrap();
        assert_eq!(w.location, CoverLocation::Bag(0));
        assert_eq!(w.cover, set(&[1, 2, 3, 4]));

        let c4 = Graph::cycle(4);
        let d = td(4, &[&[1, 2, 3], &[1, 3, 4]], &[(0, 1)]);
        let w = find_covering_bag(&c4, &d, &bramble(4, &[&[1, 2], &[3], &[4]])).unwrap();
        assert_eq!(w.location, CoverLocation::Bag(1));
        assert_eq!(w.cover, set(&[1, 3, 4]));

        let p3 = Graph::path(3);
        let w = find_covering_bag(&p3, &td(3, &[&[1, 2], &[2, 3]], &[(0, 1)]), &bramble(3, &[&[2]])).unwrap();
        assert_eq!(w.location, CoverLocation::Adhesion(0, 1));
        assert_eq!(w.cover, set(&[2]));
    }

    #[test]
    fn conflicting_orientation_is_reported() {
        // {1} and {3} do not touch on P3, so they pull the edge both ways
        let p3 = Graph::path(3);
        let d = td(3, &[&[1, 2], &[2, 3]], &[(0, 1)]);
        assert_eq!(
            find_covering_bag(&p3, &d, &bramble(3, &[&[1], &[3]])),
            Err(BrambleError::OrientationConflict((0, 1)))
        );
    }
}
