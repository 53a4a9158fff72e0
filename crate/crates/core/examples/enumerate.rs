// Exhaustive and sampled tallies, plus a deliberately broken judge that
// the tally catches.

use std::error::Error;

use cgb::generators::{gen_hex_dual, gen_y_dual};
use cgb::rules::GoalStatus;
use cgb::verify::{enumerate_exhaustive, enumerate_with, sample_random};
use cgb::{Board, Coloring};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let hex = gen_hex_dual(3, 3)?;
    println!("hex 3x3 exhaustive: {}", enumerate_exhaustive(&hex, 20)?);

    let y = gen_y_dual(4)?;
    println!("y4 exhaustive:      {}", enumerate_exhaustive(&y, 20)?);
    println!("y4 sampled:         {}", sample_random(&y, 5000, 42)?);

    let never = |_: &Board, _: &Coloring| GoalStatus {
        red: false,
        blue: false,
    };
    let broken = enumerate_with(&hex, 20, &never)?;
    println!(
        "broken judge:       {broken} compliant={}",
        broken.is_compliant()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
