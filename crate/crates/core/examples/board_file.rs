// Parse and render the `cgb` text format and export DOT.

use std::error::Error;

use cgb::dot::export_dot;
use cgb::format::{parse_board_file, render_board_file};
use cgb::rules::winner;

const BOARD: &str = "\
cgb 1
vertices 4
triangles 2
t 0 1 2
t 0 2 3
sides 4
s R1 0 1
s B1 1 2
s R2 2 3
s B2 3 0
coloring 4
c 0 R
c 1 B
c 2 R
c 3 B
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (board, coloring) = parse_board_file(BOARD)?;
    assert_eq!(render_board_file(&board, &coloring), BOARD);

    let outcome = winner(&board, &coloring)?;
    print!("{}", export_dot(&board, &coloring, outcome.witness()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
