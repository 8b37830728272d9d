// Partial decompositions and their flaps: star decompositions, flaps
// realized on demand, and the test that every partial decomposition leaves
// a flap in a given family.
//
// ```text
// cargo run --example flaps
// ```

use std::error::Error;

use twd::{
    condition_i_holds, flap_universe, is_k_flap, realize_flap, star_decomposition, verify_td, FlapFamily, Graph,
    Limits, VertexSet,
};

fn show(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let limits = Limits::default();
    let g = Graph::path(5);

    let star = star_decomposition(&g, &VertexSet::from([2]), 1)?;
    for f in star.flaps() {
        println!("star from 3 on P5, k = 1: flap {:?}", show(&f.vertices));
    }

    let x = VertexSet::from([3, 4]);
    assert!(is_k_flap(&g, &x, 1));
    let p = realize_flap(&g, &x, 1)?;
    verify_td(&g, p.decomposition())?;
    println!("{:?} is a 1-flap of P5, realized with {} bags", show(&x), p.decomposition().node_count());

    // tw(C4) = 2, so every partial (<2)-decomposition leaves a 2-flap, but
    // dropping all flaps but the whole vertex set is too much
    let c4 = Graph::cycle(4);
    let all = flap_universe(&c4, 2, &limits)?;
    println!("C4 has {} 2-flaps; condition holds: {}", all.len(), condition_i_holds(&c4, 2, &all)?);
    let top = FlapFamily::from_members(&c4, 2, [VertexSet::full(4)], &limits)?;
    println!("only the full set: condition holds: {}", condition_i_holds(&c4, 2, &top)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
