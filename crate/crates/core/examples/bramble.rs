// Brambles as lower-bound certificates: build one of order `tw + 1`, then
// compute its order independently.
//
// ```text
// cargo run --example bramble
// ```

use std::error::Error;

use twd::{min_cover, synthesize_bramble, treewidth, verify_bramble, Bramble, Graph, Limits};

pub fn run() -> Result<(), Box<dyn Error>> {
    let limits = Limits::default();

    // every row-plus-column cross of the 3x3 grid: connected and pairwise
    // intersecting, but three vertices on a diagonal meet them all
    let g = Graph::grid(3, 3);
    let crosses = (0..3)
        .flat_map(|r| (0..3).map(move |c| (0..3).map(|i| 3 * r + i).chain((0..3).map(|i| 3 * i + c)).collect()))
        .collect();
    let hand = Bramble::new(9, crosses);
    verify_bramble(&g, &hand)?;
    println!("grid crosses: order {}", min_cover(&g, &hand, &limits)?.len());

    for (name, g) in [("C6", Graph::cycle(6)), ("3x3 grid", Graph::grid(3, 3)), ("Petersen", Graph::petersen())] {
        let (tw, _) = treewidth(&g, &limits)?;
        let b = synthesize_bramble(&g, tw as usize, &limits)?;
        verify_bramble(&g, &b)?;
        let cover = min_cover(&g, &b, &limits)?;
        println!(
            "{name:9} tw = {tw}, bramble of {} elements, order {} (cover {:?})",
            b.len(),
            cover.len(),
            cover.iter().map(|v| v + 1).collect::<Vec<_>>()
        );
        assert_eq!(cover.len() as isize, tw + 1);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
