//! Standard lattice boards and seeded random disk triangulations.
//!
//! Random boards use [`ChaCha8Rng`] seeded with `seed_from_u64`, so a seed
//! always reproduces the same board with this crate.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::board::{Board, GameKind, Side, SideLabel, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("hex lattice needs rows, cols >= 2 (got {rows}x{cols})")]
    HexTooSmall { rows: usize, cols: usize },
    #[error("y lattice needs n >= 2 (got {0})")]
    YTooSmall(usize),
    #[error("random board needs at least 3 vertices (got {0})")]
    TooFewVertices(usize),
    #[error("side count must be 3 or 4 (got {0})")]
    BadSideCount(usize),
    #[error("{n_vertices} vertices cannot carry a boundary with {n_sides} sides")]
    BoundaryTooShort { n_vertices: usize, n_sides: usize },
}

/// Board description accepted by [`generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenSpec {
    HexDual {
        rows: usize,
        cols: usize,
    },
    YDual {
        n: usize,
    },
    Random {
        n_vertices: usize,
        n_sides: usize,
        seed: u64,
    },
}

pub fn generate(spec: GenSpec) -> Result<Board, GenError> {
    match spec {
        GenSpec::HexDual { rows, cols } => gen_hex_dual(rows, cols),
        GenSpec::YDual { n } => gen_y_dual(n),
        GenSpec::Random {
            n_vertices,
            n_sides,
            seed,
        } => gen_random(n_vertices, n_sides, seed),
    }
}

/// The two-triangle Hex board with diagonal 0-2 joining the corners
/// R1∩B2 = 0 and B1∩R2 = 2.
pub fn minimal_hex() -> Board {
    Board::build(
        4,
        vec![[0, 1, 2], [0, 2, 3]],
        vec![
            Side::new(SideLabel::R1, [0, 1]),
            Side::new(SideLabel::B1, [1, 2]),
            Side::new(SideLabel::R2, [2, 3]),
            Side::new(SideLabel::B2, [3, 0]),
        ],
    )
    .expect("static board")
}

/// Parallelogram lattice dual to a `rows x cols` Hex board.
///
/// Vertex `(i, j)` (column `i`, row `j`) has id `j * cols + i`. Each unit
/// cell is split along the `(i + 1, j)`–`(i, j + 1)` diagonal. R1 is row 0,
/// B1 column 0, R2 the last row and B2 the last column.
pub fn gen_hex_dual(rows: usize, cols: usize) -> Result<Board, GenError> {
    if rows < 2 || cols < 2 {
        return Err(GenError::HexTooSmall { rows, cols });
    }
    let id = |i: usize, j: usize| j * cols + i;
    let mut triangles = Vec::with_capacity(2 * (rows - 1) * (cols - 1));
    for j in 0..rows - 1 {
        for i in 0..cols - 1 {
            triangles.push([id(i, j), id(i + 1, j), id(i, j + 1)]);
            triangles.push([id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)]);
        }
    }
    let r1: Vec<_> = (0..cols).rev().map(|i| id(i, 0)).collect();
    let b1: Vec<_> = (0..rows).map(|j| id(0, j)).collect();
    let r2: Vec<_> = (0..cols).map(|i| id(i, rows - 1)).collect();
    let b2: Vec<_> = (0..rows).rev().map(|j| id(cols - 1, j)).collect();
    Ok(Board::build(
        rows * cols,
        triangles,
        vec![
            Side::new(SideLabel::R1, r1),
            Side::new(SideLabel::B1, b1),
            Side::new(SideLabel::R2, r2),
            Side::new(SideLabel::B2, b2),
        ],
    )
    .expect("lattice ids are in range"))
}

/// Triangular lattice dual to a Y board with `n` cells per side.
///
/// Vertex `(a, b)` with `a + b < n` is numbered row by row in `b`. l1 is the
/// row `b = 0`, l2 the hypotenuse and l3 the column `a = 0`.
pub fn gen_y_dual(n: usize) -> Result<Board, GenError> {
    if n < 2 {
        return Err(GenError::YTooSmall(n));
    }
    // Row b holds n - b vertices.
    let row_start = |b: usize| b * n - b * (b.saturating_sub(1)) / 2;
    let id = |a: usize, b: usize| row_start(b) + a;
    let mut triangles = Vec::with_capacity((n - 1) * (n - 1));
    for b in 0..n - 1 {
        for a in 0..n - 1 - b {
            triangles.push([id(a, b), id(a + 1, b), id(a, b + 1)]);
            if a + b + 2 < n {
                triangles.push([id(a + 1, b), id(a + 1, b + 1), id(a, b + 1)]);
            }
        }
    }
    let l1: Vec<_> = (0..n).map(|a| id(a, 0)).collect();
    let l2: Vec<_> = (0..n).map(|b| id(n - 1 - b, b)).collect();
    let l3: Vec<_> = (0..n).rev().map(|b| id(0, b)).collect();
    Ok(Board::build(
        n * (n + 1) / 2,
        triangles,
        vec![
            Side::new(SideLabel::L1, l1),
            Side::new(SideLabel::L2, l2),
            Side::new(SideLabel::L3, l3),
        ],
    )
    .expect("lattice ids are in range"))
}

/// Grows a random disk from one triangle by star subdivisions and boundary
/// attachments, then cuts the boundary into `n_sides` sides at random
/// corners.
pub fn gen_random(n_vertices: usize, n_sides: usize, seed: u64) -> Result<Board, GenError> {
    if n_vertices < 3 {
        return Err(GenError::TooFewVertices(n_vertices));
    }
    if n_sides != 3 && n_sides != 4 {
        return Err(GenError::BadSideCount(n_sides));
    }
    // Only attachments lengthen the boundary, one edge each.
    if 3 + (n_vertices - 3) < n_sides {
        return Err(GenError::BoundaryTooShort {
            n_vertices,
            n_sides,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triangles: Vec<[VertexId; 3]> = vec![[0, 1, 2]];
    // Boundary kept as an oriented cycle.
    let mut boundary: Vec<VertexId> = vec![0, 1, 2];
    let mut next = 3;

    while next < n_vertices {
        let remaining = n_vertices - next;
        let deficit = n_sides.saturating_sub(boundary.len());
        let attach = remaining <= deficit || rng.gen_bool(0.5);
        if attach {
            let pos = rng.gen_range(0..boundary.len());
            let (a, b) = (boundary[pos], boundary[(pos + 1) % boundary.len()]);
            triangles.push([a, b, next]);
            boundary.insert(pos + 1, next);
        } else {
            let t = rng.gen_range(0..triangles.len());
            let [a, b, c] = triangles[t];
            triangles[t] = [a, b, next];
            triangles.push([b, c, next]);
            triangles.push([c, a, next]);
        }
        next += 1;
    }

    let len = boundary.len();
    let mut positions: Vec<usize> = (0..len).collect();
    positions.shuffle(&mut rng);
    let mut corners = positions[..n_sides].to_vec();
    corners.sort_unstable();

    let kind = if n_sides == 3 {
        GameKind::Y
    } else {
        GameKind::Hex
    };
    let sides = kind
        .labels()
        .iter()
        .enumerate()
        .map(|(k, &label)| {
            let from = corners[k];
            let to = corners[(k + 1) % n_sides];
            let steps = (to + len - from) % len;
            let steps = if steps == 0 { len } else { steps };
            let path = (0..=steps)
                .map(|s| boundary[(from + s) % len])
                .collect::<Vec<_>>();
            Side::new(label, path)
        })
        .collect();

    Ok(Board::build(n_vertices, triangles, sides).expect("generated ids are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn minimal_hex_lattice() {
        let b = gen_hex_dual(2, 2).unwrap();
        assert_eq!(b.vertex_count(), 4);
        assert_eq!(b.edges().len(), 5);
        assert_eq!(b.triangles().len(), 2);
        assert!(b.validate().ok(), "{}", b.validate());
    }

    #[test]
    fn three_by_three_lattice() {
        let b = gen_hex_dual(3, 3).unwrap();
        assert_eq!(b.vertex_count(), 9);
        assert!(b.validate().ok(), "{}", b.validate());
        for s in b.sides() {
            assert_eq!(s.path.len(), 3, "side {}", s.label);
        }
        // 6 along rows, 6 along columns, one diagonal per cell
        assert_eq!(b.edges().len(), 6 + 6 + 4);
    }

    #[test]
    fn rectangular_lattice_validates() {
        let b = gen_hex_dual(2, 5).unwrap();
        assert!(b.validate().ok(), "{}", b.validate());
        assert_eq!(b.side(SideLabel::R1).unwrap().path.len(), 5);
        assert_eq!(b.side(SideLabel::B1).unwrap().path.len(), 2);
    }

    #[test]
    fn hex_size_errors() {
        assert_eq!(
            gen_hex_dual(1, 3),
            Err(GenError::HexTooSmall { rows: 1, cols: 3 })
        );
        assert!(gen_hex_dual(3, 1).is_err());
    }

    #[test]
    fn y_lattices() {
        let b = gen_y_dual(2).unwrap();
        assert_eq!(b.vertex_count(), 3);
        assert_eq!(b.triangles().len(), 1);
        for s in b.sides() {
            assert_eq!(s.path.len(), 2);
        }
        assert_eq!(b.side(SideLabel::L1).unwrap().path, vec![0, 1]);
        assert_eq!(b.side(SideLabel::L2).unwrap().path, vec![1, 2]);
        assert_eq!(b.side(SideLabel::L3).unwrap().path, vec![2, 0]);

        let b = gen_y_dual(3).unwrap();
        assert_eq!((b.vertex_count(), b.triangles().len()), (6, 4));
        assert!(b.validate().ok(), "{}", b.validate());

        let b = gen_y_dual(4).unwrap();
        assert_eq!((b.vertex_count(), b.triangles().len()), (10, 9));
        assert!(b.validate().ok(), "{}", b.validate());

        assert_eq!(gen_y_dual(1), Err(GenError::YTooSmall(1)));
    }

    #[test]
    fn lattice_boundary_lengths() {
        for n in 2..8 {
            assert_eq!(
                gen_hex_dual(n, n).unwrap().boundary_edges().len(),
                4 * (n - 1)
            );
            assert_eq!(gen_y_dual(n).unwrap().boundary_edges().len(), 3 * (n - 1));
        }
    }

    #[test]
    fn random_base_case_is_single_triangle() {
        for seed in 0..5 {
            let b = gen_random(3, 3, seed).unwrap();
            assert_eq!(b.triangles().len(), 1);
            assert!(b.validate().ok());
        }
        assert_eq!(
            gen_random(3, 4, 0),
            Err(GenError::BoundaryTooShort {
                n_vertices: 3,
                n_sides: 4
            })
        );
        assert_eq!(gen_random(2, 3, 0), Err(GenError::TooFewVertices(2)));
        assert_eq!(gen_random(5, 5, 0), Err(GenError::BadSideCount(5)));
    }

    #[test]
    fn random_is_deterministic() {
        let a = gen_random(10, 4, 1).unwrap();
        let b = gen_random(10, 4, 1).unwrap();
        assert_eq!(a, b);
        assert!(a.validate().ok(), "{}", a.validate());
        assert_eq!(a.kind(), GameKind::Hex);
    }

    #[test]
    fn four_vertices_four_sides_forces_an_attachment() {
        for seed in 0..20 {
            let b = gen_random(4, 4, seed).unwrap();
            assert!(b.validate().ok(), "seed {seed}: {}", b.validate());
        }
    }

    proptest! {
        #[test]
        fn random_boards_validate(n in 3usize..40, sides in 3usize..=4, seed in any::<u64>()) {
            prop_assume!(n >= sides);
            let b = gen_random(n, sides, seed).unwrap();
            let report = b.validate();
            prop_assert!(report.ok(), "{}", report);
            prop_assert_eq!(b.euler_characteristic(), 1);
            prop_assert_eq!(b.vertex_count(), n);
        }
    }
}
