// Turn a Hex position into a Y position with two pre-colored apexes and
// compare the winners.

use std::error::Error;

use cgb::generators::gen_hex_dual;
use cgb::reductions::extend_y_from_hex;
use cgb::rules::winner;
use cgb::Coloring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let hex = gen_hex_dual(3, 3)?;
    let ext = extend_y_from_hex(&hex)?;
    println!(
        "Y board: V={} apexes r0={} b0={} valid={}",
        ext.y_board.vertex_count(),
        ext.apex_r0,
        ext.apex_b0,
        ext.y_board.validate().ok()
    );

    // A vertical red column and its transpose.
    for red in [[0usize, 3, 6], [0, 1, 2]] {
        let coloring = Coloring::red_set(hex.vertex_count(), &red);
        let on_hex = winner(&hex, &coloring)?;
        let on_y = ext.y_outcome(&coloring)?;
        println!("red {red:?}: hex {on_hex}, extended Y {on_y}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
