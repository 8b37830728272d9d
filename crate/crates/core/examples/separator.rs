// Minimum vertex separators and the matching vertex-disjoint paths.
//
// ```text
// cargo run --example separator
// ```

use std::error::Error;

use twd::{min_xy_separator, Graph, VertexSet};

pub fn run() -> Result<(), Box<dyn Error>> {
    let g = Graph::grid(3, 4);
    let left = VertexSet::from([0, 4, 8]);
    let right = VertexSet::from([3, 7, 11]);
    let (sep, paths) = min_xy_separator(&g, &left, &right)?;
    println!("3x4 grid, left column to right column");
    println!("  separator {:?}", sep.s.iter().map(|v| v + 1).collect::<Vec<_>>());
    println!("  side A {:?}", sep.a.iter().map(|v| v + 1).collect::<Vec<_>>());
    for p in &paths.paths {
        let ids: Vec<usize> = p.vertices.iter().map(|v| v + 1).collect();
        println!("  path {ids:?} crosses at {}", p.separator_vertex() + 1);
    }
    assert_eq!(paths.len(), sep.s.len());

    let c6 = Graph::cycle(6);
    let (sep, _) = min_xy_separator(&c6, &VertexSet::from([0]), &VertexSet::from([3]))?;
    println!("C6, 1 to 4: separator {:?}", sep.s.iter().map(|v| v + 1).collect::<Vec<_>>());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
