// Double a Y board across l1, play the mirrored coloring as Hex and fold
// the winning chain back.

use std::error::Error;

use cgb::generators::gen_y_dual;
use cgb::reductions::double_y_to_hex;
use cgb::rules::winner;
use cgb::Coloring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let y = gen_y_dual(3)?;
    let d = double_y_to_hex(&y)?;
    println!(
        "double: V={} (Y has {}, l1 has {}), involution={}, fold simplicial={}",
        d.hex_board.vertex_count(),
        y.vertex_count(),
        d.l1().len(),
        d.reflect_is_involution(),
        d.fold.is_simplicial(&d.hex_board, &y),
    );

    let coloring = Coloring::red_set(y.vertex_count(), &[0, 1, 3]);
    let mirrored = d.mirror_coloring(&coloring);
    let hex_outcome = winner(&d.hex_board, &mirrored)?;
    println!("hex winner on the double: {hex_outcome}");
    if let Some(chain) = hex_outcome.witness() {
        println!("folded chain: {}", d.fold_chain(&mirrored, chain)?);
    }
    println!(
        "via hex: {}, direct: {}",
        d.y_winner(&coloring)?,
        winner(&y, &coloring)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
