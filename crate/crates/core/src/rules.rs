//! Colorings, monochromatic chains and winner detection.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::board::{Board, GameKind, SideLabel, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Red => f.write_str("red"),
            Color::Blue => f.write_str("blue"),
        }
    }
}

/// Per-vertex color assignment; `None` is an empty cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Option<Color>>);

impl Coloring {
    pub fn empty(vertex_count: usize) -> Self {
        Coloring(vec![None; vertex_count])
    }

    pub fn filled(vertex_count: usize, color: Color) -> Self {
        Coloring(vec![Some(color); vertex_count])
    }

    pub fn from_cells(cells: Vec<Option<Color>>) -> Self {
        Coloring(cells)
    }

    /// Full coloring: the listed vertices red, all others blue.
    pub fn red_set(vertex_count: usize, red: &[VertexId]) -> Self {
        let mut c = Coloring::filled(vertex_count, Color::Blue);
        for &v in red {
            c.set(v, Some(Color::Red));
        }
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.0[v]
    }

    pub fn set(&mut self, v: VertexId, color: Option<Color>) {
        self.0[v] = color;
    }

    pub fn cells(&self) -> &[Option<Color>] {
        &self.0
    }

    pub fn is_full(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    pub fn empty_vertices(&self) -> Vec<VertexId> {
        (0..self.0.len()).filter(|&v| self.0[v].is_none()).collect()
    }

    pub fn count(&self, color: Color) -> usize {
        self.0.iter().filter(|c| **c == Some(color)).count()
    }

    /// Red and Blue exchanged.
    pub fn swapped(&self) -> Coloring {
        Coloring(self.0.iter().map(|c| c.map(Color::other)).collect())
    }

    /// True when every colored vertex of `self` has the same color in `other`.
    pub fn is_extended_by(&self, other: &Coloring) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(a, b)| a.is_none() || a == b)
    }
}

/// A connected set of same-colored vertices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    pub color: Color,
    pub vertices: Vec<VertexId>,
}

impl Chain {
    pub fn new(color: Color, mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Chain { color, vertices }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn meets(&self, board: &Board, label: SideLabel) -> bool {
        self.vertices.iter().any(|&v| board.on_side(v, label))
    }

    /// Checks that every vertex carries the chain color and the induced
    /// subgraph is connected.
    pub fn is_chain_on(&self, board: &Board, coloring: &Coloring) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        if self
            .vertices
            .iter()
            .any(|&v| v >= board.vertex_count() || coloring.get(v) != Some(self.color))
        {
            return false;
        }
        is_connected(board, &self.vertices)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.color)?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// True when the sorted vertex set induces a connected subgraph.
pub fn is_connected(board: &Board, sorted: &[VertexId]) -> bool {
    let Some(&start) = sorted.first() else {
        return true;
    };
    let inside = |v: VertexId| sorted.binary_search(&v).is_ok();
    let mut seen = vec![false; board.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in board.neighbors(v) {
            if !seen[w] && inside(w) {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == sorted.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    RedWins(Chain),
    BlueWins(Chain),
    Undecided,
}

impl Outcome {
    pub fn color(&self) -> Option<Color> {
        match self {
            Outcome::RedWins(_) => Some(Color::Red),
            Outcome::BlueWins(_) => Some(Color::Blue),
            Outcome::Undecided => None,
        }
    }

    pub fn witness(&self) -> Option<&Chain> {
        match self {
            Outcome::RedWins(c) | Outcome::BlueWins(c) => Some(c),
            Outcome::Undecided => None,
        }
    }

    fn won_by(chain: Chain) -> Outcome {
        match chain.color {
            Color::Red => Outcome::RedWins(chain),
            Color::Blue => Outcome::BlueWins(chain),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.color() {
            Some(c) => write!(f, "{c}"),
            None => f.write_str("undecided"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RulesError {
    #[error("theorem violation: both players reach their goal ({red}; {blue})")]
    TheoremViolation { red: Chain, blue: Chain },
    #[error("coloring has {coloring} cells but the board has {board} vertices")]
    SizeMismatch { coloring: usize, board: usize },
    #[error("chain does not meet side {0}")]
    SideNotMet(SideLabel),
    #[error("board has no side labelled {0}")]
    MissingSide(SideLabel),
}

/// Whether each player's goal is met, evaluated independently.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GoalStatus {
    pub red: bool,
    pub blue: bool,
}

/// Both players' winning chains, if any, found without short-circuiting.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub red: Option<Chain>,
    pub blue: Option<Chain>,
}

impl Verdict {
    pub fn status(&self) -> GoalStatus {
        GoalStatus {
            red: self.red.is_some(),
            blue: self.blue.is_some(),
        }
    }
}

/// Side bitmask (over `board.sides()` positions) a chain must cover.
fn goal_mask(board: &Board, color: Color) -> u8 {
    let labels: &[SideLabel] = match (board.kind(), color) {
        (GameKind::Hex, Color::Red) => &[SideLabel::R1, SideLabel::R2],
        (GameKind::Hex, Color::Blue) => &[SideLabel::B1, SideLabel::B2],
        (GameKind::Y, _) => &[SideLabel::L1, SideLabel::L2, SideLabel::L3],
    };
    labels
        .iter()
        .map(|&l| board.side_index(l).map_or(0x80, |i| 1u8 << i))
        .fold(0, |acc, bit| acc | bit)
}

fn check_size(board: &Board, coloring: &Coloring) -> Result<(), RulesError> {
    if coloring.len() != board.vertex_count() {
        return Err(RulesError::SizeMismatch {
            coloring: coloring.len(),
            board: board.vertex_count(),
        });
    }
    Ok(())
}

/// Walks the components of one color, handing each (vertices, side mask)
/// to `visit`; stops early when `visit` returns true.
fn for_each_component(
    board: &Board,
    coloring: &Coloring,
    color: Color,
    mut visit: impl FnMut(&[VertexId], u8) -> bool,
) {
    let n = board.vertex_count();
    let mut seen = vec![false; n];
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] || coloring.get(start) != Some(color) {
            continue;
        }
        members.clear();
        seen[start] = true;
        queue.push_back(start);
        let mut mask = 0u8;
        while let Some(v) = queue.pop_front() {
            members.push(v);
            mask |= board.side_mask(v);
            for &w in board.neighbors(v) {
                if !seen[w] && coloring.get(w) == Some(color) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if visit(&members, mask) {
            return;
        }
    }
}

/// Maximal connected components of the subgraph induced by `color`.
pub fn monochrome_components(board: &Board, coloring: &Coloring, color: Color) -> Vec<Chain> {
    let mut out = Vec::new();
    for_each_component(board, coloring, color, |members, _| {
        out.push(Chain::new(color, members.to_vec()));
        false
    });
    out
}

fn winning_chain(board: &Board, coloring: &Coloring, color: Color) -> Option<Chain> {
    let goal = goal_mask(board, color);
    let mut found = None;
    for_each_component(board, coloring, color, |members, mask| {
        if mask & goal == goal {
            found = Some(Chain::new(color, members.to_vec()));
            true
        } else {
            false
        }
    });
    found
}

fn goal_met(board: &Board, coloring: &Coloring, color: Color) -> bool {
    let goal = goal_mask(board, color);
    let mut met = false;
    for_each_component(board, coloring, color, |_, mask| {
        met = mask & goal == goal;
        met
    });
    met
}

/// Evaluates both goals independently, so a double win is observable.
pub fn evaluate(board: &Board, coloring: &Coloring) -> Result<Verdict, RulesError> {
    check_size(board, coloring)?;
    Ok(Verdict {
        red: winning_chain(board, coloring, Color::Red),
        blue: winning_chain(board, coloring, Color::Blue),
    })
}

/// Allocation-light variant of [`evaluate`] for enumeration loops.
pub fn goals(board: &Board, coloring: &Coloring) -> GoalStatus {
    GoalStatus {
        red: goal_met(board, coloring, Color::Red),
        blue: goal_met(board, coloring, Color::Blue),
    }
}

/// Hex: red needs a chain meeting R1 and R2, blue one meeting B1 and B2.
/// Y: either player needs a chain meeting l1, l2 and l3. The witness is the
/// maximal component that meets the goal.
pub fn winner(board: &Board, coloring: &Coloring) -> Result<Outcome, RulesError> {
    let verdict = evaluate(board, coloring)?;
    match (verdict.red, verdict.blue) {
        (Some(red), Some(blue)) => Err(RulesError::TheoremViolation { red, blue }),
        (Some(chain), None) | (None, Some(chain)) => Ok(Outcome::won_by(chain)),
        (None, None) => Ok(Outcome::Undecided),
    }
}

/// Shortest path inside `chain` from a vertex of `side_a` to one of `side_b`.
pub fn witness_path(
    board: &Board,
    chain: &Chain,
    side_a: SideLabel,
    side_b: SideLabel,
) -> Result<Vec<VertexId>, RulesError> {
    for label in [side_a, side_b] {
        if board.side(label).is_none() {
            return Err(RulesError::MissingSide(label));
        }
        if !chain.meets(board, label) {
            return Err(RulesError::SideNotMet(label));
        }
    }
    let n = board.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &v in &chain.vertices {
        if board.on_side(v, side_a) {
            parent[v] = v;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        if board.on_side(v, side_b) {
            let mut path = vec![v];
            let mut cur = v;
            while parent[cur] != cur {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Ok(path);
        }
        for &w in board.neighbors(v) {
            if parent[w] == usize::MAX && chain.contains(w) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    // Chain meets side_b but the two are in different pieces of a
    // disconnected vertex set.
    Err(RulesError::SideNotMet(side_b))
}
