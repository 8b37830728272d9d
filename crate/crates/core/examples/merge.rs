// Merging two partial decompositions whose flaps do not touch, so that every
// flap of the result lies inside an older, different flap.
//
// ```text
// cargo run --example merge
// ```

use std::error::Error;

use twd::{merge_flaps_lemma1, star_decomposition, verify_td, Graph, VertexSet};

pub fn run() -> Result<(), Box<dyn Error>> {
    let g = Graph::path(7);
    let k = 1;
    let px = star_decomposition(&g, &VertexSet::from([2]), k)?;
    let py = star_decomposition(&g, &VertexSet::from([4]), k)?;
    let x = px.flaps().into_iter().find(|f| f.vertices.contains(0)).ok_or("no flap at 1")?;
    let y = py.flaps().into_iter().find(|f| f.vertices.contains(6)).ok_or("no flap at 7")?;

    let merged = merge_flaps_lemma1(&g, k, &px, &x, &py, &y)?;
    verify_td(&g, merged.decomposition())?;
    println!("merged {} + {} bags into {}", px.decomposition().node_count(), py.decomposition().node_count(), merged.decomposition().node_count());
    for f in merged.flaps() {
        let ids: Vec<usize> = f.vertices.iter().map(|v| v + 1).collect();
        println!("  flap {ids:?}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
