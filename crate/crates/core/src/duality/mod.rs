//! From tree-width `>= k` to a bramble of order `> k`.
//!
//! Start from the family of all `k`-flaps. It is upward closed and meets
//! every partial (<k)-decomposition in a flap. Drop inclusion-minimal
//! members one at a time for as long as the family still meets every
//! partial decomposition. Once no member can be dropped, members pairwise
//! touch, and the connected members form a bramble whose order exceeds `k`.

mod bits;
mod family;
mod refine;
mod treewidth;

use std::collections::HashSet;

use thiserror::Error;

pub use family::{flap_universe, is_k_flap, FlapFamily};
pub use treewidth::{treewidth, treewidth_dp_oracle, DP_ORACLE_MAX_N};

use crate::bramble::{min_cover, verify_bramble, Bramble, BrambleError};
use crate::decomposition::{verify_td, TreeDecomposition};
use crate::graph::Graph;
use crate::vertex_set::{size_then_lex, VertexSet};
use crate::Limits;
use family::{adjacency, universe_masks};
use refine::Refiner;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("tree-width is below {k}")]
    TreewidthTooSmall { k: usize },
    #[error("family is not upward closed: {member:?} is in, {missing:?} is not")]
    NotUpwardClosed { member: VertexSet, missing: VertexSet },
    #[error("{0:?} is not a flap at this threshold")]
    NotAFlap(VertexSet),
    #[error("family was built for k = {family}, asked about k = {asked}")]
    ThresholdMismatch { family: usize, asked: usize },
    #[error("the empty graph has no certificates")]
    EmptyGraph,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Bramble(#[from] BrambleError),
}

/// Whether every partial (<k)-decomposition of `g` has a flap in `fam`.
pub fn condition_i_holds(g: &Graph, k: usize, fam: &FlapFamily) -> Result<bool, DualityError> {
    if fam.k() != k {
        return Err(DualityError::ThresholdMismatch {
            family: fam.k(),
            asked: k,
        });
    }
    let adj = adjacency(g)?;
    let members: HashSet<u64> = fam.member_masks().into_iter().collect();
    let all = bits::full(g.n());
    for &c in &members {
        let outside = all & !c;
        let mut extra = outside;
        loop {
            let d = c | extra;
            if !members.contains(&d) && family::is_k_flap_mask(&adj, d, k) {
                return Err(DualityError::NotUpwardClosed {
                    member: VertexSet::from_mask(c),
                    missing: VertexSet::from_mask(d),
                });
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & outside;
        }
    }
    Ok(holds(&adj, k, &members))
}

fn holds(adj: &[u64], k: usize, members: &HashSet<u64>) -> bool {
    Refiner::new(adj, k, |c| members.contains(&c))
        .root_bag(adj.len())
        .is_none()
}

/// A family of `k`-flaps that meets every partial (<k)-decomposition, is
/// upward closed, and from which no minimal member can be dropped.
///
/// Candidates are tried by size, then lexicographically.
pub fn minimalize(g: &Graph, k: usize, limits: &Limits) -> Result<FlapFamily, DualityError> {
    limits.check(g.n(), limits.minimalize_n)?;
    let adj = adjacency(g)?;
    let mut universe = universe_masks(&adj, k);
    universe.sort_by_key(|&m| bits::size_lex_key(m));
    let mut members: HashSet<u64> = universe.iter().copied().collect();
    if !holds(&adj, k, &members) {
        return Err(DualityError::TreewidthTooSmall { k });
    }

    // Dropping members only makes the condition harder to meet, so a member
    // whose removal failed once can never be removed later. A single pass in
    // candidate order therefore reaches the same fixpoint as rescanning from
    // the start after every removal.
    let mut kept: Vec<u64> = Vec::new();
    for &x in &universe {
        if kept.iter().any(|&y| y & !x == 0) {
            kept.push(x);
            continue;
        }
        members.remove(&x);
        if !holds(&adj, k, &members) {
            members.insert(x);
            kept.push(x);
        }
    }

    for (i, &a) in kept.iter().enumerate() {
        if let Some(&b) = kept[i + 1..].iter().find(|&&b| !bits::touches(&adj, a, b)) {
            return Err(DualityError::Invariant(format!(
                "minimal family has non-touching members {:?} and {:?}",
                VertexSet::from_mask(a),
                VertexSet::from_mask(b)
            )));
        }
    }
    Ok(FlapFamily::from_masks(g.n(), k, &kept, &universe))
}

/// The connected members of `fam` as a bramble, with its exact order
/// recorded as the claimed order.
pub fn extract_bramble(g: &Graph, fam: &FlapFamily, limits: &Limits) -> Result<Bramble, DualityError> {
    let mut elements: Vec<VertexSet> = fam.members().filter(|x| g.is_connected_set(x)).cloned().collect();
    elements.sort_by(size_then_lex);
    let bramble = Bramble::new(g.n(), elements);
    verify_bramble(g, &bramble).map_err(|v| DualityError::Invariant(format!("extracted bramble: {v}")))?;
    let order = min_cover(g, &bramble, limits)?.len();
    if order <= fam.k() {
        return Err(DualityError::Invariant(format!(
            "extracted bramble has order {order}, expected more than {}",
            fam.k()
        )));
    }
    Ok(bramble.with_claimed_order(order))
}

/// A bramble of order `> k`, for `k <= tw(g)`.
pub fn synthesize_bramble(g: &Graph, k: usize, limits: &Limits) -> Result<Bramble, DualityError> {
    let fam = minimalize(g, k, limits)?;
    extract_bramble(g, &fam, limits)
}

/// Matching certificates: a decomposition of width `tw` and a bramble of
/// order `tw + 1`.
#[derive(Debug, Clone)]
pub struct DualityCertificates {
    pub tw: isize,
    pub decomposition: TreeDecomposition,
    pub bramble: Bramble,
    pub minimal_family: Option<FlapFamily>,
}

impl DualityCertificates {
    pub fn order(&self) -> usize {
        self.bramble.claimed_order().unwrap_or(0)
    }
}

pub fn duality_certificates(g: &Graph, limits: &Limits) -> Result<DualityCertificates, DualityError> {
    if g.n() == 0 {
        return Err(DualityError::EmptyGraph);
    }
    let (tw, decomposition) = treewidth(g, limits)?;
    verify_td(g, &decomposition).map_err(|v| DualityError::Invariant(format!("witness decomposition: {v}")))?;
    let k = tw as usize;
    let fam = minimalize(g, k, limits)?;
    let bramble = extract_bramble(g, &fam, limits)?;
    let order = bramble.claimed_order().unwrap_or(0);
    if order != k + 1 {
        return Err(DualityError::Invariant(format!("tree-width {tw} but bramble order {order}")));
    }
    Ok(DualityCertificates {
        tw,
        decomposition,
        bramble,
        minimal_family: Some(fam),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bramble::verify_bramble;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().map(|v| v - 1).collect()
    }

    fn universe(g: &Graph, k: usize) -> FlapFamily {
        flap_universe(g, k, &Limits::default()).unwrap()
    }

    #[test]
    fn condition_i_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(condition_i_holds(&c4, 2, &universe(&c4, 2)), Ok(true));
        let p3 = Graph::path(3);
        assert_eq!(condition_i_holds(&p3, 2, &universe(&p3, 2)), Ok(false));
        let empty = FlapFamily::from_members(&c4, 2, [], &Limits::default()).unwrap();
        assert_eq!(condition_i_holds(&c4, 2, &empty), Ok(false));
    }

    #[test]
    fn condition_i_rejects_non_closed_family() {
        let p5 = Graph::path(5);
        let fam = FlapFamily::from_members(&p5, 1, [set(&[5])], &Limits::default()).unwrap();
        assert!(matches!(
            condition_i_holds(&p5, 1, &fam),
            Err(DualityError::NotUpwardClosed { .. })
        ));
        assert!(matches!(
            condition_i_holds(&p5, 2, &fam),
            Err(DualityError::ThresholdMismatch { .. })
        ));
    }

    #[test]
    fn minimalize_examples() {
        let limits = Limits::default();
        let k4 = Graph::complete(4);
        let fam = minimalize(&k4, 3, &limits).unwrap();
        let b = extract_bramble(&k4, &fam, &limits).unwrap();
        assert_eq!(b.claimed_order(), Some(4));

        let c4 = Graph::cycle(4);
        let fam = minimalize(&c4, 2, &limits).unwrap();
        let b = extract_bramble(&c4, &fam, &limits).unwrap();
        assert_eq!(verify_bramble(&c4, &b), Ok(()));
        assert_eq!(b.claimed_order(), Some(3));

        assert_eq!(
            minimalize(&Graph::path(3), 2, &limits),
            Err(DualityError::TreewidthTooSmall { k: 2 })
        );
    }

    #[test]
    fn minimal_family_is_minimal() {
        let limits = Limits::default();
        let g = Graph::grid(2, 3);
        let fam = minimalize(&g, 2, &limits).unwrap();
        assert_eq!(condition_i_holds(&g, 2, &fam), Ok(true));
        for x in fam.minimal_members() {
            let rest = fam.members().filter(|m| **m != x).cloned();
            let smaller = FlapFamily::from_members(&g, 2, rest, &limits).unwrap();
            assert_eq!(condition_i_holds(&g, 2, &smaller), Ok(false), "{x:?} removable");
        }
    }

    #[test]
    fn synthesize_examples() {
        let limits = Limits::default();
        for (g, k, order) in [
            (Graph::cycle(4), 2, 3),
            (Graph::complete(4), 3, 4),
            (Graph::grid(3, 3), 3, 4),
            (Graph::path(5), 1, 2),
        ] {
            let b = synthesize_bramble(&g, k, &limits).unwrap();
            assert_eq!(verify_bramble(&g, &b), Ok(()));
            assert_eq!(min_cover(&g, &b, &limits).unwrap().len(), order);
        }
        assert_eq!(
            synthesize_bramble(&Graph::new(0), 0, &limits).unwrap_err(),
            DualityError::TreewidthTooSmall { k: 0 }
        );
    }

    #[test]
    fn certificate_examples() {
        let limits = Limits::default();
        let c = duality_certificates(&Graph::cycle(4), &limits).unwrap();
        assert_eq!((c.tw, c.order()), (2, 3));

        let c = duality_certificates(&Graph::new(1), &limits).unwrap();
        assert_eq!((c.tw, c.order()), (0, 1));
        assert_eq!(c.bramble.elements(), &[set(&[1])]);

        let g = Graph::complete(3).disjoint_union(&Graph::new(1));
        let c = duality_certificates(&g, &limits).unwrap();
        assert_eq!((c.tw, c.order()), (2, 3));
        assert!(c.bramble.elements().iter().all(|e| e.is_subset(&set(&[1, 2, 3]))));

        assert_eq!(
            duality_certificates(&Graph::new(0), &limits).unwrap_err(),
            DualityError::EmptyGraph
        );
    }

    #[test]
    fn deterministic() {
        let limits = Limits::default();
        let g = Graph::petersen();
        let a = synthesize_bramble(&g, 4, &Limits { minimalize_n: 10, ..limits });
        let b = synthesize_bramble(&g, 4, &Limits { minimalize_n: 10, ..limits });
        assert_eq!(a, b);
    }
}
