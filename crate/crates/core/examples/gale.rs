// Gale's augmented board: classify a coloring into V±/W± and check the
// retraction onto the four-vertex square.

use std::error::Error;

use cgb::gale::{augment, run};
use cgb::generators::gen_hex_dual;
use cgb::Coloring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let hex = gen_hex_dual(3, 3)?;
    let gale = augment(&hex)?;
    let d = &gale.d_board;
    println!(
        "D: V={} E={} T={} chi={}, S = {:?}",
        d.vertex_count(),
        d.edges().len(),
        d.triangles().len(),
        d.euler_characteristic(),
        gale.boundary(),
    );

    let coloring = Coloring::red_set(hex.vertex_count(), &[1, 4, 7, 2]);
    let result = run(&gale, &hex, &coloring)?;
    let p = &result.partition;
    println!(
        "V+ {:?}\nV- {:?}\nW+ {:?}\nW- {:?}",
        p.v_plus, p.v_minus, p.w_plus, p.w_minus
    );
    println!("{}", result.retraction);
    println!(
        "classification: {}, direct: {}",
        result.outcome, result.direct
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
