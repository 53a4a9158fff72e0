// Build the lattice boards and a seeded random board, then validate them.

use std::error::Error;

use cgb::generators::{generate, GenSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let specs = [
        GenSpec::HexDual { rows: 4, cols: 4 },
        GenSpec::YDual { n: 5 },
        GenSpec::Random {
            n_vertices: 12,
            n_sides: 4,
            seed: 7,
        },
        GenSpec::Random {
            n_vertices: 12,
            n_sides: 3,
            seed: 7,
        },
    ];
    for spec in specs {
        let board = generate(spec)?;
        let report = board.validate();
        println!(
            "{spec:?}: {} board, V={} E={} T={} chi={} validation={report}",
            board.kind(),
            board.vertex_count(),
            board.edges().len(),
            board.triangles().len(),
            board.euler_characteristic(),
        );
        for side in board.sides() {
            println!("  {} {:?}", side.label, side.path);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
