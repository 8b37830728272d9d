// Exact tree-width of a few classic graphs, with the witness decomposition
// checked and cross-checked against the elimination-ordering DP.
//
// ```text
// cargo run --example treewidth
// ```

use std::error::Error;

use twd::{treewidth, treewidth_dp_oracle, verify_td, Graph, Limits};

pub fn run() -> Result<(), Box<dyn Error>> {
    let graphs = [
        ("path P7", Graph::path(7)),
        ("cycle C6", Graph::cycle(6)),
        ("complete K5", Graph::complete(5)),
        ("3x3 grid", Graph::grid(3, 3)),
        ("Petersen", Graph::petersen()),
    ];
    for (name, g) in graphs {
        let (tw, td) = treewidth(&g, &Limits::default())?;
        verify_td(&g, &td)?;
        assert_eq!(treewidth_dp_oracle(&g)?, tw);
        println!("{name:12} tw = {tw}  ({} bags)", td.node_count());
        for (i, bag) in td.bags().iter().enumerate() {
            let ids: Vec<usize> = bag.iter().map(|v| v + 1).collect();
            println!("    bag {}: {ids:?}", i + 1);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
