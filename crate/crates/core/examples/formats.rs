// Reading and writing `.gr`, `.td` and `.br` files.
//
// ```text
// cargo run --example formats
// ```

use std::error::Error;

use twd::{parse_br, parse_gr, parse_td, synthesize_bramble, treewidth, write_br, write_gr, write_td, Limits};

const C5: &str = "c five-cycle\np tw 5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n";

pub fn run() -> Result<(), Box<dyn Error>> {
    let g = parse_gr(C5)?;
    print!("{}", write_gr(&g));

    let (_, td) = treewidth(&g, &Limits::default())?;
    let td_text = write_td(&td);
    print!("{td_text}");
    assert_eq!(parse_td(&td_text)?, td);

    let b = synthesize_bramble(&g, 2, &Limits::default())?;
    let br_text = write_br(&b);
    print!("{br_text}");
    assert_eq!(write_br(&parse_br(&br_text)?), br_text);

    match parse_td("s td 1 2 3\nb 1 1 4\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
