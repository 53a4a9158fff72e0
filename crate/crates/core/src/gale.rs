//! Gale's augmented board.
//!
//! Four pre-colored apexes r−, r+ (red) and b−, b+ (blue) are fanned over
//! R1, R2, B1 and B2 and joined into the 4-cycle S = (r−, b−, r+, b+),
//! which becomes the boundary of a larger disk D. Splitting the red
//! vertices by red-connectivity to r+ (V+ / V−) and the blue ones by
//! blue-connectivity to b+ (W+ / W−) gives a vertex map D → S. It is always
//! simplicial, and it fixes S exactly when neither player has won.

use std::fmt;

use thiserror::Error;

use crate::board::{Board, Edge, GameKind, Side, SideLabel, ValidationReport, VertexId};
use crate::reductions::VertexMap;
use crate::rules::{self, Chain, Color, Coloring, Outcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaleError {
    #[error("expected a hex board, got {0}")]
    WrongKind(GameKind),
    #[error("input board is not valid:\n{0}")]
    InvalidInput(ValidationReport),
    #[error("augmented board failed validation:\n{0}")]
    ConstructionInvalid(ValidationReport),
    #[error("coloring has {coloring} cells, augmented board has {board} vertices")]
    SizeMismatch { coloring: usize, board: usize },
    #[error("coloring is not full")]
    NotFull,
    #[error("apex {0} does not carry its fixed color")]
    ApexOverridden(VertexId),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

/// The augmented disk D around a Hex board.
#[derive(Clone, Debug)]
pub struct GaleBoard {
    pub d_board: Board,
    pub r_minus: VertexId,
    pub r_plus: VertexId,
    pub b_minus: VertexId,
    pub b_plus: VertexId,
    /// Hex board into D (identity on ids).
    pub embed: VertexMap,
    /// Apexes colored, everything else empty.
    pub pre_coloring: Coloring,
}

/// Builds D. The apexes get ids `V` (r−), `V + 1` (r+), `V + 2` (b−) and
/// `V + 3` (b+). D is labelled as a Hex board whose sides are the edges of
/// S, so a red chain meets R1 / R2 of D exactly when it contains r− / r+.
pub fn augment(hex_board: &Board) -> Result<GaleBoard, GaleError> {
    if hex_board.kind() != GameKind::Hex {
        return Err(GaleError::WrongKind(hex_board.kind()));
    }
    let report = hex_board.validate();
    if !report.ok() {
        return Err(GaleError::InvalidInput(report));
    }
    let n = hex_board.vertex_count();
    let (rm, rp, bm, bp) = (n, n + 1, n + 2, n + 3);
    let path = |l| &hex_board.side(l).expect("validated").path;
    let (r1, b1, r2, b2) = (
        path(SideLabel::R1),
        path(SideLabel::B1),
        path(SideLabel::R2),
        path(SideLabel::B2),
    );

    let mut triangles = hex_board.triangles().to_vec();
    for (apex, side) in [(rm, r1), (bm, b1), (rp, r2), (bp, b2)] {
        triangles.extend(side.windows(2).map(|w| [apex, w[0], w[1]]));
    }
    // Corner triangles: consecutive apexes and the corner between their sides.
    triangles.push([rm, bm, r1[r1.len() - 1]]);
    triangles.push([bm, rp, b1[b1.len() - 1]]);
    triangles.push([rp, bp, r2[r2.len() - 1]]);
    triangles.push([bp, rm, b2[b2.len() - 1]]);

    let sides = vec![
        Side::new(SideLabel::R1, [bp, rm]),
        Side::new(SideLabel::B1, [rm, bm]),
        Side::new(SideLabel::R2, [bm, rp]),
        Side::new(SideLabel::B2, [rp, bp]),
    ];
    let d_board = Board::build(n + 4, triangles, sides)
        .map_err(|e| GaleError::TheoremViolation(format!("augmentation is malformed: {e}")))?;
    let report = d_board.validate();
    if !report.ok() {
        return Err(GaleError::ConstructionInvalid(report));
    }

    let mut pre_coloring = Coloring::empty(n + 4);
    pre_coloring.set(rm, Some(Color::Red));
    pre_coloring.set(rp, Some(Color::Red));
    pre_coloring.set(bm, Some(Color::Blue));
    pre_coloring.set(bp, Some(Color::Blue));
    Ok(GaleBoard {
        d_board,
        r_minus: rm,
        r_plus: rp,
        b_minus: bm,
        b_plus: bp,
        embed: VertexMap::identity(n, n + 4),
        pre_coloring,
    })
}

impl GaleBoard {
    pub fn apexes(&self) -> [VertexId; 4] {
        [self.r_minus, self.r_plus, self.b_minus, self.b_plus]
    }

    /// Number of vertices of the original Hex board.
    pub fn interior_count(&self) -> usize {
        self.embed.source_len()
    }

    /// The boundary cycle S in order (r−, b−, r+, b+).
    pub fn boundary(&self) -> [VertexId; 4] {
        [self.r_minus, self.b_minus, self.r_plus, self.b_plus]
    }

    /// Pre-coloring with a Hex coloring copied through `embed`.
    pub fn lift(&self, hex_coloring: &Coloring) -> Coloring {
        let mut c = self.pre_coloring.clone();
        for v in 0..self.embed.source_len() {
            c.set(self.embed.apply(v), hex_coloring.get(v));
        }
        c
    }

    /// Drops the apexes from a chain of D.
    pub fn restrict(&self, chain: &Chain) -> Chain {
        let n = self.interior_count();
        Chain::new(
            chain.color,
            chain.vertices.iter().copied().filter(|&v| v < n).collect(),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    VPlus,
    VMinus,
    WPlus,
    WMinus,
}

/// The classes V+, V−, W+, W− of a full coloring of D, each sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalePartition {
    pub v_plus: Vec<VertexId>,
    pub v_minus: Vec<VertexId>,
    pub w_plus: Vec<VertexId>,
    pub w_minus: Vec<VertexId>,
}

impl GalePartition {
    pub fn block_of(&self, v: VertexId) -> Option<Block> {
        let has = |s: &Vec<VertexId>| s.binary_search(&v).is_ok();
        if has(&self.v_plus) {
            Some(Block::VPlus)
        } else if has(&self.v_minus) {
            Some(Block::VMinus)
        } else if has(&self.w_plus) {
            Some(Block::WPlus)
        } else if has(&self.w_minus) {
            Some(Block::WMinus)
        } else {
            None
        }
    }

    /// Blocks are pairwise disjoint and together hold every vertex.
    pub fn is_partition_of(&self, vertex_count: usize) -> bool {
        let mut hits = vec![0u8; vertex_count];
        for block in [&self.v_plus, &self.v_minus, &self.w_plus, &self.w_minus] {
            for &v in block {
                if v >= vertex_count {
                    return false;
                }
                hits[v] += 1;
            }
        }
        hits.iter().all(|&h| h == 1)
    }
}

/// Splits the colored vertices of D by connectivity to r+ and b+.
pub fn classify(gale: &GaleBoard, full_coloring: &Coloring) -> Result<GalePartition, GaleError> {
    let d = &gale.d_board;
    if full_coloring.len() != d.vertex_count() {
        return Err(GaleError::SizeMismatch {
            coloring: full_coloring.len(),
            board: d.vertex_count(),
        });
    }
    if !full_coloring.is_full() {
        return Err(GaleError::NotFull);
    }
    for apex in gale.apexes() {
        if full_coloring.get(apex) != gale.pre_coloring.get(apex) {
            return Err(GaleError::ApexOverridden(apex));
        }
    }

    let reach = |start: VertexId, color: Color| {
        let mut seen = vec![false; d.vertex_count()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in d.neighbors(v) {
                if !seen[w] && full_coloring.get(w) == Some(color) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    };
    let red_plus = reach(gale.r_plus, Color::Red);
    let blue_plus = reach(gale.b_plus, Color::Blue);

    let mut p = GalePartition {
        v_plus: Vec::new(),
        v_minus: Vec::new(),
        w_plus: Vec::new(),
        w_minus: Vec::new(),
    };
    for v in 0..d.vertex_count() {
        match (full_coloring.get(v), red_plus[v], blue_plus[v]) {
            (Some(Color::Red), true, _) => p.v_plus.push(v),
            (Some(Color::Red), false, _) => p.v_minus.push(v),
            (Some(Color::Blue), _, true) => p.w_plus.push(v),
            (Some(Color::Blue), _, false) => p.w_minus.push(v),
            (None, _, _) => unreachable!("checked full"),
        }
    }
    Ok(p)
}

/// Outcome of checking the would-be retraction D → S.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionReport {
    /// Every edge and triangle of D maps onto a vertex or an edge of S.
    pub simplicial: bool,
    /// r− ↦ r− and b− ↦ b−, i.e. the map restricts to the identity on S.
    pub identity_on_s: bool,
    /// Edges joining V+ to V− or W+ to W−.
    pub cross_edges: Vec<Edge>,
    /// Simplices whose image is not a simplex of S.
    pub non_simplicial: Vec<Vec<VertexId>>,
}

impl fmt::Display for RetractionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "simplicial={} identity_on_S={} cross_edges={}",
            self.simplicial,
            self.identity_on_s,
            self.cross_edges.len()
        )
    }
}

/// The map V− ↦ r−, V+ ↦ r+, W− ↦ b−, W+ ↦ b+ as a vertex map of D.
pub fn retraction_map(gale: &GaleBoard, partition: &GalePartition) -> VertexMap {
    let n = gale.d_board.vertex_count();
    let mut image = vec![0; n];
    for (block, target) in [
        (&partition.v_minus, gale.r_minus),
        (&partition.v_plus, gale.r_plus),
        (&partition.w_minus, gale.b_minus),
        (&partition.w_plus, gale.b_plus),
    ] {
        for &v in block {
            image[v] = target;
        }
    }
    VertexMap::new(n, image)
}

pub fn retraction_check(gale: &GaleBoard, partition: &GalePartition) -> RetractionReport {
    let d = &gale.d_board;
    let map = retraction_map(gale, partition);
    // S is a full subcomplex of D with no triangles, so checking the map
    // into D checks it into S.
    let non_simplicial = map.simplicial_failures(d, d);
    let cross_edges = d
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| {
            matches!(
                (partition.block_of(a), partition.block_of(b)),
                (Some(Block::VPlus), Some(Block::VMinus))
                    | (Some(Block::VMinus), Some(Block::VPlus))
                    | (Some(Block::WPlus), Some(Block::WMinus))
                    | (Some(Block::WMinus), Some(Block::WPlus))
            )
        })
        .collect();
    RetractionReport {
        simplicial: non_simplicial.is_empty(),
        identity_on_s: map.apply(gale.r_minus) == gale.r_minus
            && map.apply(gale.b_minus) == gale.b_minus,
        cross_edges,
        non_simplicial,
    }
}

/// Red wins iff r− ∈ V+, Blue wins iff b− ∈ W+. The witness is the whole
/// class, which is the component containing both apexes of that color.
pub fn winner_from_classification(
    gale: &GaleBoard,
    partition: &GalePartition,
) -> Result<Outcome, GaleError> {
    let red = partition.v_plus.binary_search(&gale.r_minus).is_ok();
    let blue = partition.w_plus.binary_search(&gale.b_minus).is_ok();
    match (red, blue) {
        (true, true) => Err(GaleError::TheoremViolation(
            "r− is red-connected to r+ and b− is blue-connected to b+".into(),
        )),
        (true, false) => Ok(Outcome::RedWins(Chain::new(
            Color::Red,
            partition.v_plus.clone(),
        ))),
        (false, true) => Ok(Outcome::BlueWins(Chain::new(
            Color::Blue,
            partition.w_plus.clone(),
        ))),
        (false, false) => Ok(Outcome::Undecided),
    }
}

/// Result of running the whole construction on one Hex coloring.
#[derive(Clone, Debug)]
pub struct GaleRun {
    pub partition: GalePartition,
    pub retraction: RetractionReport,
    pub outcome: Outcome,
    /// Winner of the original board, computed directly.
    pub direct: Outcome,
}

impl GaleRun {
    pub fn agrees(&self) -> bool {
        self.outcome.color() == self.direct.color()
    }
}

/// Lifts a full Hex coloring to D and runs classification, the retraction
/// check and both winner computations.
pub fn run(
    gale: &GaleBoard,
    hex_board: &Board,
    hex_coloring: &Coloring,
) -> Result<GaleRun, GaleError> {
    let lifted = gale.lift(hex_coloring);
    let partition = classify(gale, &lifted)?;
    let retraction = retraction_check(gale, &partition);
    let outcome = winner_from_classification(gale, &partition)?;
    let direct = rules::winner(hex_board, hex_coloring)
        .map_err(|e| GaleError::TheoremViolation(e.to_string()))?;
    Ok(GaleRun {
        partition,
        retraction,
        outcome,
        direct,
    })
}
