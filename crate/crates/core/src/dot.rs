//! Graphviz DOT rendering of boards.

use std::fmt::Write as _;

use crate::board::Board;
use crate::rules::{Chain, Color, Coloring};

/// Vertices ascending, edges in lexicographic order. Nodes are labelled
/// with their id and the sides they lie on and filled with their color;
/// edges with both ends in `highlight` are drawn bold.
pub fn export_dot(board: &Board, coloring: &Coloring, highlight: Option<&Chain>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph cgb {{");
    let _ = writeln!(s, "  node [shape=circle, style=filled];");
    for v in 0..board.vertex_count() {
        let sides: Vec<&str> = board
            .sides()
            .iter()
            .filter(|side| side.path.contains(&v))
            .map(|side| side.label.as_str())
            .collect();
        let label = if sides.is_empty() {
            v.to_string()
        } else {
            format!("{v}\\n{}", sides.join(" "))
        };
        let (fill, font) = match coloring.get(v) {
            Some(Color::Red) => ("red", "white"),
            Some(Color::Blue) => ("blue", "white"),
            None => ("white", "black"),
        };
        let _ = writeln!(
            s,
            "  {v} [label=\"{label}\", fillcolor=\"{fill}\", fontcolor=\"{font}\"];"
        );
    }
    for &(a, b) in board.edges() {
        let bold = highlight.is_some_and(|c| c.contains(a) && c.contains(b));
        if bold {
            let _ = writeln!(s, "  {a} -- {b} [penwidth=4];");
        } else {
            let _ = writeln!(s, "  {a} -- {b};");
        }
    }
    s.push_str("}\n");
    s
}
