#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twd::{Bramble, Graph, TreeDecomposition, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

/// Vertex pairs `(u, v)`, `u < v < n`, ordered by `v` then `u`, so the
/// pairs of a smaller `n` come first.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// The graph on `n` vertices whose edges are the bits of `mask` over
/// [`pairs`].
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(move |mask| graph_from_mask(n, mask))
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && g.components(&VertexSet::new()).len() == 1
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// A random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
    edges.extend(pairs(n).into_iter().filter(|_| rng.gen_bool(p)));
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_subset(rng: &mut impl Rng, n: usize, p: f64) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// Merges the two ends of tree edge `i` into one node holding both bags.
pub fn contract_edge(d: &TreeDecomposition, i: usize) -> TreeDecomposition {
    let (a, b) = d.tree_edges()[i];
    let mut bags = d.bags().to_vec();
    bags[a] = &bags[a] | &bags[b];
    bags.remove(b);
    let shift = |t: usize| if t == b { a } else if t > b { t - 1 } else { t };
    let edges: Vec<(usize, usize)> = d
        .tree_edges()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &(u, v))| (shift(u), shift(v)))
        .collect();
    TreeDecomposition::new(d.n(), bags, edges).unwrap()
}

/// The decomposition read off an elimination ordering: each vertex gets the
/// bag of itself and its later neighbours in the fill-in graph, hung below
/// the bag of the earliest of those neighbours.
pub fn elimination_decomposition(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut nbrs: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut bags = Vec::new();
    let mut parent = Vec::new();
    for &v in order {
        let later: VertexSet = nbrs[v].iter().filter(|&u| pos[u] > pos[v]).collect();
        for a in &later {
            for b in &later {
                if a != b {
                    nbrs[a].insert(b);
                }
            }
        }
        parent.push(later.iter().min_by_key(|&u| pos[u]).map(|u| pos[u]));
        let mut bag = later;
        bag.insert(v);
        bags.push(bag);
    }
    // eliminated vertices without later neighbours start new trees; chain
    // the roots together
    let mut edges = Vec::new();
    let mut last_root: Option<usize> = None;
    for (i, p) in parent.iter().enumerate() {
        match p {
            Some(p) => edges.push((i, *p)),
            None => {
                if let Some(r) = last_root {
                    edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    if bags.is_empty() {
        return TreeDecomposition::trivial(0);
    }
    TreeDecomposition::new(n, bags, edges).unwrap()
}

/// Smallest vertex set meeting every element, by trying all subsets in
/// order of size.
pub fn brute_min_cover(n: usize, b: &Bramble) -> usize {
    let elements: Vec<u64> = b.elements().iter().map(|e| e.to_mask().unwrap()).collect();
    (0..=n)
        .find(|&size| {
            (0u64..1 << n)
                .filter(|c| c.count_ones() as usize == size)
                .any(|c| elements.iter().all(|&e| e & c != 0))
        })
        .unwrap()
}

/// Size of a smallest set `S` outside `x ∪ y` such that no component of
/// `G - S` meets both `x` and `y`, by trying all subsets.
pub fn brute_min_separator(g: &Graph, x: &VertexSet, y: &VertexSet) -> usize {
    let n = g.n();
    let ends = (x | y).to_mask().unwrap();
    (0..=n)
        .find(|&size| {
            (0u64..1 << n).filter(|c| c.count_ones() as usize == size && c & ends == 0).any(|c| {
                let s = VertexSet::from_mask(c);
                let rest = VertexSet::full(n).difference(&s);
                g.components_within(&rest)
                    .iter()
                    .all(|comp| !(comp.intersects(x) && comp.intersects(y)))
            })
        })
        .unwrap()
}
