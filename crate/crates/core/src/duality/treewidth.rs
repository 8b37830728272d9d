use super::bits;
use super::family::{adjacency, is_k_flap_mask};
use super::refine::Refiner;
use super::DualityError;
use crate::decomposition::TreeDecomposition;
use crate::graph::Graph;
use crate::Limits;

/// Exact tree-width and a decomposition of that width.
///
/// For `K = 1, 2, ...` this runs the same nested-bag search as
/// [`condition_i_holds`](super::condition_i_holds) against the family of
/// all `K`-flaps, i.e. it looks for a decomposition with every bag of size at
/// most `K`. The first `K` that succeeds gives width `K - 1`. The empty graph
/// has tree-width `-1`.
pub fn treewidth(g: &Graph, limits: &Limits) -> Result<(isize, TreeDecomposition), DualityError> {
    limits.check(g.n(), limits.universe_n)?;
    let adj = adjacency(g)?;
    let n = g.n();
    if n == 0 {
        return Ok((-1, TreeDecomposition::trivial(0)));
    }
    for k in 1..=n {
        let mut search = Refiner::new(&adj, k, |c| is_k_flap_mask(&adj, c, k));
        if let Some(root) = search.root_bag(n) {
            let td = search.decomposition(n, root);
            debug_assert_eq!(td.width(), k as isize - 1);
            return Ok((k as isize - 1, td));
        }
    }
    unreachable!("a single bag of size n always works")
}

/// Largest number of vertices [`treewidth_dp_oracle`] accepts.
pub const DP_ORACLE_MAX_N: usize = 20;

/// Tree-width by dynamic programming over elimination orderings.
///
/// `TW(S) = min over v in S of max(TW(S - v), Q(S - v, v))`, where `Q(R, v)`
/// counts vertices outside `R ∪ {v}` reachable from `v` through `R`. This is
/// independent of the flap machinery and is meant as a cross-check.
pub fn treewidth_dp_oracle(g: &Graph) -> Result<isize, DualityError> {
    let n = g.n();
    if n > DP_ORACLE_MAX_N {
        return Err(DualityError::TooLarge {
            n,
            limit: DP_ORACLE_MAX_N,
        });
    }
    if n == 0 {
        return Ok(-1);
    }
    let adj = adjacency(g)?;
    let q = |eliminated: u64, v: usize| -> i8 {
        let mut inner = 1u64 << v;
        loop {
            let grown = inner | (bits::neighborhood(&adj, inner) & eliminated);
            if grown == inner {
                break;
            }
            inner = grown;
        }
        (bits::neighborhood(&adj, inner) & !eliminated).count_ones() as i8
    };
    let size = 1usize << n;
    let mut tw = vec![i8::MAX; size];
    tw[0] = -1;
    for set in 1..size as u64 {
        let mut best = i8::MAX;
        for v in bits::members(set) {
            let rest = set & !(1 << v);
            let cost = tw[rest as usize].max(q(rest, v));
            best = best.min(cost);
        }
        tw[set as usize] = best;
    }
    Ok(tw[size - 1] as isize)
}
