// Random self-play games; every game ends with exactly one winner.

use std::error::Error;

use cgb::generators::{gen_hex_dual, gen_y_dual};
use cgb::verify::selfplay;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (name, board) in [("hex 4x4", gen_hex_dual(4, 4)?), ("y5", gen_y_dual(5)?)] {
        let play = selfplay(&board, 200, 2024)?;
        let first = &play.records[0];
        println!("{name}: {}", play.tally);
        println!(
            "  first game: {} moves, decided after {:?}, winner {:?}",
            first.moves.len(),
            first.decided_at,
            first.winner()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
