// Both certificates at once, and why they match: every decomposition has a
// bag meeting every bramble element.
//
// ```text
// cargo run --example duality
// ```

use std::error::Error;

use twd::{duality_certificates, find_covering_bag, CoverLocation, Graph, Limits, TreeDecomposition};

pub fn run() -> Result<(), Box<dyn Error>> {
    let g = Graph::grid(3, 3);
    let cert = duality_certificates(&g, &Limits::default())?;
    println!("3x3 grid: width {} decomposition, order {} bramble", cert.tw, cert.order());

    // any decomposition at all, even a wasteful one, has a covering bag
    let wasteful = TreeDecomposition::new(
        9,
        vec![
            (0..6).collect(),
            [2, 3, 4, 5, 6, 7, 8].into_iter().collect(),
            [0, 1, 2].into_iter().collect(),
        ],
        [(0, 1), (0, 2)],
    )?;
    for (name, d) in [("optimal", &cert.decomposition), ("wasteful", &wasteful)] {
        let w = find_covering_bag(&g, d, &cert.bramble)?;
        let at = match w.location {
            CoverLocation::Bag(t) => format!("bag {}", t + 1),
            CoverLocation::Adhesion(a, b) => format!("adhesion {}-{}", a + 1, b + 1),
        };
        let ids: Vec<usize> = w.cover.iter().map(|v| v + 1).collect();
        println!("{name:8} decomposition: {at} covers the bramble with {ids:?}");
        assert!(w.cover.len() >= cert.order());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
