//! The `cgb` text format for boards and colorings.
//!
//! ```text
//! cgb 1
//! vertices <N>
//! triangles <T>
//! t <i> <j> <k>
//! sides <S>
//! s <label> <v0> ... <vk>
//! coloring <M>          # optional
//! c <v> <R|B>
//! ```
//!
//! Tokens are separated by whitespace and `#` starts a comment.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::board::{Board, BoardError, Side, SideLabel, ValidationReport, VertexId};
use crate::rules::{Color, Coloring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Board(#[from] BoardError),
    #[error("board is not valid:\n{0}")]
    Invalid(ValidationReport),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next non-blank line with comments removed, as tokens.
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            self.last = i + 1;
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), FormatError> {
        self.next_tokens().ok_or_else(|| FormatError::Syntax {
            line: self.last + 1,
            message: format!("unexpected end of file, expected {what}"),
        })
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn number<T: FromStr>(line: usize, token: &str) -> Result<T, FormatError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("`{token}` is not a non-negative integer")))
}

/// `<keyword> <count>` header line.
fn header(lines: &mut Lines<'_>, keyword: &str) -> Result<usize, FormatError> {
    let (line, tokens) = lines.expect(keyword)?;
    match tokens.as_slice() {
        [k, n] if *k == keyword => number(line, n),
        _ => Err(syntax(line, format!("expected `{keyword} <count>`"))),
    }
}

/// Parses without validating the disk and side conditions.
pub fn parse_unchecked(text: &str) -> Result<(Board, Coloring), FormatError> {
    let mut lines = Lines::new(text);
    let (line, tokens) = lines.expect("`cgb 1` header")?;
    if tokens != ["cgb", "1"] {
        return Err(syntax(line, "expected `cgb 1` header"));
    }
    let vertex_count = header(&mut lines, "vertices")?;

    let triangle_count = header(&mut lines, "triangles")?;
    let mut triangles = Vec::with_capacity(triangle_count);
    for _ in 0..triangle_count {
        let (line, tokens) = lines.expect("triangle line")?;
        match tokens.as_slice() {
            ["t", a, b, c] => {
                triangles.push([number(line, a)?, number(line, b)?, number(line, c)?])
            }
            _ => return Err(syntax(line, "expected `t <i> <j> <k>`")),
        }
    }

    let side_count = header(&mut lines, "sides")?;
    let mut sides = Vec::with_capacity(side_count);
    for _ in 0..side_count {
        let (line, tokens) = lines.expect("side line")?;
        match tokens.as_slice() {
            ["s", label, rest @ ..] if !rest.is_empty() => {
                let label = SideLabel::from_str(label).map_err(|e| syntax(line, e.to_string()))?;
                let path = rest
                    .iter()
                    .map(|t| number(line, t))
                    .collect::<Result<Vec<VertexId>, _>>()?;
                sides.push(Side::new(label, path));
            }
            _ => return Err(syntax(line, "expected `s <label> <v0> ... <vk>`")),
        }
    }

    let mut coloring = Coloring::empty(vertex_count);
    if let Some((line, tokens)) = lines.next_tokens() {
        let count = match tokens.as_slice() {
            ["coloring", n] => number::<usize>(line, n)?,
            _ => return Err(syntax(line, "expected `coloring <count>` or end of file")),
        };
        for _ in 0..count {
            let (line, tokens) = lines.expect("coloring line")?;
            let (v, color) = match tokens.as_slice() {
                ["c", v, c] => (number::<VertexId>(line, v)?, *c),
                _ => return Err(syntax(line, "expected `c <v> <R|B>`")),
            };
            if v >= vertex_count {
                return Err(syntax(line, format!("vertex {v} out of range")));
            }
            if coloring.get(v).is_some() {
                return Err(syntax(line, format!("vertex {v} colored twice")));
            }
            let color = match color {
                "R" => Color::Red,
                "B" => Color::Blue,
                other => return Err(syntax(line, format!("color must be R or B, got `{other}`"))),
            };
            coloring.set(v, Some(color));
        }
        if let Some((line, _)) = lines.next_tokens() {
            return Err(syntax(line, "trailing content after coloring section"));
        }
    }

    let board = Board::build(vertex_count, triangles, sides)?;
    Ok((board, coloring))
}

/// Parses, builds and validates. A missing coloring section gives an
/// all-empty coloring.
pub fn parse_board_file(text: &str) -> Result<(Board, Coloring), FormatError> {
    let (board, coloring) = parse_unchecked(text)?;
    let report = board.validate();
    if !report.ok() {
        return Err(FormatError::Invalid(report));
    }
    Ok((board, coloring))
}

/// Renders in the `cgb` format. The coloring section is written only when
/// some vertex is colored.
pub fn render_board_file(board: &Board, coloring: &Coloring) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "cgb 1");
    let _ = writeln!(s, "vertices {}", board.vertex_count());
    let _ = writeln!(s, "triangles {}", board.triangles().len());
    for t in board.triangles() {
        let _ = writeln!(s, "t {} {} {}", t[0], t[1], t[2]);
    }
    let _ = writeln!(s, "sides {}", board.sides().len());
    for side in board.sides() {
        let _ = write!(s, "s {}", side.label);
        for v in &side.path {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
    }
    let colored: Vec<(VertexId, Color)> = coloring
        .cells()
        .iter()
        .enumerate()
        .filter_map(|(v, c)| c.map(|c| (v, c)))
        .collect();
    if !colored.is_empty() {
        let _ = writeln!(s, "coloring {}", colored.len());
        for (v, c) in colored {
            let _ = writeln!(s, "c {v} {}", c.letter());
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_hex_dual, gen_random};
    use proptest::prelude::*;

    const MINIMAL_Y: &str =
        "cgb 1\nvertices 3\ntriangles 1\nt 0 1 2\nsides 3\ns l1 0 1\ns l2 1 2\ns l3 2 0\n";

    #[test]
    fn parses_minimal_y() {
        let (b, c) = parse_board_file(MINIMAL_Y).unwrap();
        assert_eq!(b.vertex_count(), 3);
        assert_eq!(c, Coloring::empty(3));
        assert_eq!(render_board_file(&b, &c), MINIMAL_Y);
    }

    #[test]
    fn comments_and_coloring() {
        let text = "# a board\ncgb 1\nvertices 3 # three\n\ntriangles 1\nt 0 1 2\nsides 3\ns l1 0 1\ns l2 1 2\ns l3 2 0\ncoloring 1\nc 0 R\n";
        let (_, c) = parse_board_file(text).unwrap();
        assert_eq!(c.get(0), Some(Color::Red));
        assert_eq!(c.get(1), None);
    }

    #[test]
    fn swapped_sides_fail_validation() {
        let text = MINIMAL_Y.replace("s l2 1 2\ns l3 2 0", "s l3 2 0\ns l2 1 2");
        assert!(matches!(
            parse_board_file(&text),
            Err(FormatError::Invalid(_))
        ));
        assert!(parse_unchecked(&text).is_ok());
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_board_file("cgb 1\nvertices x\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Syntax {
                line: 2,
                message: "`x` is not a non-negative integer".into()
            }
        );
        let err = parse_board_file("cgb 2\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 1, .. }));
        let err = parse_board_file(&MINIMAL_Y.replace("s l3", "s l9")).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 8, .. }));
        let err = parse_board_file(&format!("{MINIMAL_Y}coloring 1\nc 5 R\n")).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 10, .. }));
        let err = parse_board_file(&format!("{MINIMAL_Y}coloring 1\nc 1 G\n")).unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 10, .. }));
        let err = parse_board_file("cgb 1\nvertices 3\ntriangles 2\nt 0 1 2\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 5, .. }));
        let err = parse_board_file(&MINIMAL_Y.replace("t 0 1 2", "t 0 1 1")).unwrap_err();
        assert!(matches!(
            err,
            FormatError::Board(BoardError::DegenerateTriangle { .. })
        ));
    }

    #[test]
    fn lattice_round_trip() {
        let b = gen_hex_dual(3, 4).unwrap();
        let c = Coloring::red_set(12, &[0, 5, 7]);
        let text = render_board_file(&b, &c);
        assert_eq!(parse_board_file(&text).unwrap(), (b, c));
    }

    proptest! {
        #[test]
        fn parse_inverts_render(
            n in 3usize..30,
            sides in 3usize..=4,
            seed in any::<u64>(),
            cells in proptest::collection::vec(0u8..3, 30),
        ) {
            prop_assume!(n >= sides);
            let b = gen_random(n, sides, seed).unwrap();
            let c = Coloring::from_cells(cells[..n].iter().map(|&x| match x {
                0 => None,
                1 => Some(Color::Red),
                _ => Some(Color::Blue),
            }).collect());
            let text = render_board_file(&b, &c);
            prop_assert_eq!(parse_board_file(&text).unwrap(), (b, c));
        }
    }
}
