//! Word-sized vertex sets for the exponential searches (at most 64 vertices).

#[inline]
pub(crate) fn ones(mask: u64) -> usize {
    mask.count_ones() as usize
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn members(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// Open neighborhood of `set`.
#[inline]
pub(crate) fn neighborhood(adj: &[u64], set: u64) -> u64 {
    let mut out = 0;
    for v in members(set) {
        out |= adj[v];
    }
    out & !set
}

/// Components of the subgraph induced on `region`, ordered by smallest
/// member.
pub(crate) fn components(adj: &[u64], region: u64) -> Vec<u64> {
    let mut left = region;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let grown = neighborhood(adj, frontier) & left & !comp;
            comp |= grown;
            frontier = grown;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

pub(crate) fn touches(adj: &[u64], a: u64, b: u64) -> bool {
    a & b != 0 || neighborhood(adj, a) & b != 0
}

/// Calls `f` on every nonempty subset of `set` with at most `max` members,
/// by increasing size and, within a size, lexicographically. Stops early
/// when `f` returns `true` and hands back that subset.
pub(crate) fn find_subset(set: u64, max: usize, mut f: impl FnMut(u64) -> bool) -> Option<u64> {
    let items: Vec<usize> = members(set).collect();
    let max = max.min(items.len());
    let mut idx: Vec<usize> = Vec::with_capacity(max);
    for size in 1..=max {
        idx.clear();
        idx.extend(0..size);
        loop {
            let sub = idx.iter().fold(0u64, |m, &i| m | 1 << items[i]);
            if f(sub) {
                return Some(sub);
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && idx[i - 1] == items.len() - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Size first, then lexicographic on the ascending member lists.
pub(crate) fn size_lex_key(mask: u64) -> (usize, u64) {
    // Among equal-size sets, the one holding the smallest differing element
    // comes first; reversing the bits turns that into plain numeric order
    // with the larger value first.
    (ones(mask), !mask.reverse_bits())
}
