use std::collections::BTreeSet;

use super::bits;
use super::DualityError;
use crate::graph::Graph;
use crate::vertex_set::{size_then_lex, VertexSet};
use crate::Limits;

/// Whether `x` is the flap of some partial (<k)-decomposition of `g`.
///
/// That holds iff `x` is nonempty, `|N(x)| <= k`, and a big bag fits at all.
/// A witness decomposition is built by
/// [`realize_flap`](crate::decomposition::realize_flap).
pub fn is_k_flap(g: &Graph, x: &VertexSet, k: usize) -> bool {
    if x.is_empty() || g.check_set(x).is_err() {
        return false;
    }
    let boundary = g.neighborhood(x);
    boundary.len() <= k && (g.n() > k || x.len() + boundary.len() > k)
}

pub(crate) fn is_k_flap_mask(adj: &[u64], x: u64, k: usize) -> bool {
    x != 0 && adj.len() > k && bits::ones(bits::neighborhood(adj, x)) <= k
}

/// A set of `k`-flaps of one graph, with the flaps of the universe that are
/// not members kept alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlapFamily {
    k: usize,
    n: usize,
    members: BTreeSet<VertexSet>,
    removed: BTreeSet<VertexSet>,
}

pub(crate) fn adjacency(g: &Graph) -> Result<Vec<u64>, DualityError> {
    g.adjacency_masks().ok_or(DualityError::TooLarge { n: g.n(), limit: 64 })
}

pub(crate) fn universe_masks(adj: &[u64], k: usize) -> Vec<u64> {
    if adj.len() <= k {
        return Vec::new();
    }
    (1..=bits::full(adj.len()))
        .filter(|&x| is_k_flap_mask(adj, x, k))
        .collect()
}

/// Every `k`-flap of `g`.
pub fn flap_universe(g: &Graph, k: usize, limits: &Limits) -> Result<FlapFamily, DualityError> {
    limits.check(g.n(), limits.universe_n)?;
    let adj = adjacency(g)?;
    let members = universe_masks(&adj, k).into_iter().map(VertexSet::from_mask).collect();
    Ok(FlapFamily {
        k,
        n: g.n(),
        members,
        removed: BTreeSet::new(),
    })
}

impl FlapFamily {
    /// A family with exactly the given members. Fails if one of them is not
    /// a `k`-flap of `g`.
    pub fn from_members(
        g: &Graph,
        k: usize,
        members: impl IntoIterator<Item = VertexSet>,
        limits: &Limits,
    ) -> Result<Self, DualityError> {
        let members: BTreeSet<VertexSet> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|x| !is_k_flap(g, x, k)) {
            return Err(DualityError::NotAFlap(bad.clone()));
        }
        let universe = flap_universe(g, k, limits)?;
        let removed = universe.members.difference(&members).cloned().collect();
        Ok(Self {
            k,
            n: g.n(),
            members,
            removed,
        })
    }

    /// The smallest upward-closed family containing `seeds`.
    pub fn upward_closure(
        g: &Graph,
        k: usize,
        seeds: impl IntoIterator<Item = VertexSet>,
        limits: &Limits,
    ) -> Result<Self, DualityError> {
        let seeds: Vec<VertexSet> = seeds.into_iter().collect();
        if let Some(bad) = seeds.iter().find(|x| !is_k_flap(g, x, k)) {
            return Err(DualityError::NotAFlap(bad.clone()));
        }
        let universe = flap_universe(g, k, limits)?;
        let members: Vec<VertexSet> = universe
            .members
            .iter()
            .filter(|d| seeds.iter().any(|c| c.is_subset(d)))
            .cloned()
            .collect();
        Self::from_members(g, k, members, limits)
    }

    pub(crate) fn from_masks(n: usize, k: usize, members: &[u64], universe: &[u64]) -> Self {
        let members: BTreeSet<VertexSet> = members.iter().map(|&m| VertexSet::from_mask(m)).collect();
        let removed = universe
            .iter()
            .map(|&m| VertexSet::from_mask(m))
            .filter(|x| !members.contains(x))
            .collect();
        Self { k, n, members, removed }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn universe_n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &VertexSet) -> bool {
        self.members.contains(x)
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> impl Iterator<Item = &VertexSet> {
        self.members.iter()
    }

    /// Flaps of the universe that are not members.
    pub fn removed(&self) -> impl Iterator<Item = &VertexSet> {
        self.removed.iter()
    }

    /// Members with no proper subset in the family, by size then
    /// lexicographically.
    pub fn minimal_members(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .members
            .iter()
            .filter(|x| !self.members.iter().any(|y| y != *x && y.is_subset(x)))
            .cloned()
            .collect();
        out.sort_by(size_then_lex);
        out
    }

    pub(crate) fn member_masks(&self) -> Vec<u64> {
        self.members
            .iter()
            .map(|x| x.to_mask().expect("families live on at most 64 vertices"))
            .collect()
    }
}
