//! Nested decompositions that avoid a family of flaps.
//!
//! A component `C` (with `|N(C)| <= k`) is *refinable* when it is not in the
//! family, or when some small bag `W` with `N(C) ⊆ W ⊆ C ∪ N(C)` and
//! `W ∩ C ≠ ∅` splits `C` into refinable components. The whole graph admits
//! a partial (<k)-decomposition with no flap in the family iff some `W` with
//! `|W| <= k` leaves only refinable components. With the family of all
//! flaps this is exactly a search for a decomposition of width `< k`.

use std::collections::HashMap;

use super::bits;
use crate::decomposition::TreeDecomposition;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy)]
enum Step {
    /// Left as a leaf `C ∪ N(C)`.
    Leave,
    /// Refined through the bag `W`.
    Split(u64),
}

pub(crate) struct Refiner<'a, F> {
    adj: &'a [u64],
    k: usize,
    in_family: F,
    memo: HashMap<u64, Option<Step>>,
}

impl<'a, F: Fn(u64) -> bool> Refiner<'a, F> {
    pub(crate) fn new(adj: &'a [u64], k: usize, in_family: F) -> Self {
        Self {
            adj,
            k,
            in_family,
            memo: HashMap::new(),
        }
    }

    fn refine(&mut self, comp: u64) -> Option<Step> {
        if let Some(&known) = self.memo.get(&comp) {
            return known;
        }
        let step = self.search(comp);
        self.memo.insert(comp, step);
        step
    }

    fn search(&mut self, comp: u64) -> Option<Step> {
        if !(self.in_family)(comp) {
            return Some(Step::Leave);
        }
        let boundary = bits::neighborhood(self.adj, comp);
        let budget = self.k.checked_sub(bits::ones(boundary))?;
        if bits::ones(comp) <= budget {
            return Some(Step::Split(boundary | comp));
        }
        let adj = self.adj;
        bits::find_subset(comp, budget, |inner| {
            bits::components(adj, comp & !inner)
                .into_iter()
                .all(|c| self.refine(c).is_some())
        })
        .map(|inner| Step::Split(boundary | inner))
    }

    /// A top bag `W` (`|W| <= k`) whose removal leaves only refinable
    /// components, smallest first.
    pub(crate) fn root_bag(&mut self, n: usize) -> Option<u64> {
        let all = bits::full(n);
        let leaves_refinable = |this: &mut Self, w: u64| {
            bits::components(this.adj, all & !w)
                .into_iter()
                .all(|c| this.refine(c).is_some())
        };
        if leaves_refinable(self, 0) {
            return Some(0);
        }
        let k = self.k;
        bits::find_subset(all, k, |w| leaves_refinable(self, w))
    }

    /// Rebuilds the decomposition found below `root`, with nested bags
    /// contracted.
    pub(crate) fn decomposition(&mut self, n: usize, root: u64) -> TreeDecomposition {
        let mut bags = vec![VertexSet::from_mask(root)];
        let mut edges = Vec::new();
        let mut stack: Vec<(u64, usize)> = bits::components(self.adj, bits::full(n) & !root)
            .into_iter()
            .map(|c| (c, 0))
            .collect();
        stack.reverse();
        while let Some((comp, parent)) = stack.pop() {
            let node = bags.len();
            edges.push((parent, node));
            match self.refine(comp).expect("root_bag checked every component") {
                Step::Leave => {
                    bags.push(VertexSet::from_mask(comp | bits::neighborhood(self.adj, comp)));
                }
                Step::Split(w) => {
                    bags.push(VertexSet::from_mask(w));
                    let mut children = bits::components(self.adj, comp & !w);
                    children.reverse();
                    stack.extend(children.into_iter().map(|c| (c, node)));
                }
            }
        }
        TreeDecomposition::new(n, bags, edges)
            .expect("nested bags form a tree")
            .contracted()
    }
}
