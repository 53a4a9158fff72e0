//! Hex and Y connection games on arbitrary triangulations of a disk.
//!
//! Boards are simplicial disks whose boundary cycle is cut into labelled
//! sides (four for Hex, three for Y). The crate detects winners, builds the
//! constructions that turn one game into the other, builds Gale's augmented
//! board, and checks the no-draw property by exhaustive enumeration.

pub mod board;
pub mod cli;
pub mod dot;
pub mod format;
pub mod gale;
pub mod generators;
pub mod reductions;
pub mod rules;
pub mod verify;

pub use board::{Board, BoardError, GameKind, Side, SideLabel, ValidationReport, VertexId};
pub use rules::{Chain, Color, Coloring, Outcome, RulesError};
pub use verify::Tally;
