// Decide the winner of a full coloring and print a witness path.

use std::error::Error;

use cgb::generators::minimal_hex;
use cgb::rules::{winner, witness_path};
use cgb::{Coloring, SideLabel};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let board = minimal_hex();
    let coloring = Coloring::red_set(board.vertex_count(), &[0, 2]);

    let outcome = winner(&board, &coloring)?;
    println!("winner: {outcome}");
    if let Some(chain) = outcome.witness() {
        println!("chain: {chain}");
        let path = witness_path(&board, chain, SideLabel::R1, SideLabel::R2)?;
        println!("path from R1 to R2: {path:?}");
    }

    let swapped = winner(&board, &coloring.swapped())?;
    println!("with colors swapped: {swapped}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
