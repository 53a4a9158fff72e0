//! Constructions relating the two games.
//!
//! * Apex extension: a Hex board plus two pre-colored apexes is a Y position
//!   whose outcome matches the Hex outcome.
//! * Doubling: a Y board glued to its mirror image along l1 is a Hex board.
//!   The fold `p` maps the mirror back onto the original and the reflection
//!   `s` swaps the two copies, fixing l1.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::board::{edge, Board, GameKind, Side, SideLabel, ValidationReport, VertexId};
use crate::rules::{self, Chain, Color, Coloring, Outcome, RulesError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("input board is not valid:\n{0}")]
    InvalidInput(ValidationReport),
    #[error("expected a {expected} board, got {found}")]
    WrongKind { expected: GameKind, found: GameKind },
    #[error("edge {0}-{1} joins non-consecutive vertices of l1; the doubled complex would not be simplicial")]
    ChordOnGluingSide(VertexId, VertexId),
    #[error("constructed board failed validation:\n{0}")]
    ConstructionInvalid(ValidationReport),
    #[error("coloring is not full")]
    NotFull,
    #[error("coloring has {coloring} cells, board has {board} vertices")]
    SizeMismatch { coloring: usize, board: usize },
    #[error("coloring is not invariant under the reflection")]
    NotReflectionInvariant,
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Rules(#[from] RulesError),
}

fn require(board: &Board, kind: GameKind) -> Result<(), ReductionError> {
    if board.kind() != kind {
        return Err(ReductionError::WrongKind {
            expected: kind,
            found: board.kind(),
        });
    }
    let report = board.validate();
    if !report.ok() {
        return Err(ReductionError::InvalidInput(report));
    }
    Ok(())
}

fn finish(board: Board) -> Result<Board, ReductionError> {
    let report = board.validate();
    if report.ok() {
        Ok(board)
    } else {
        Err(ReductionError::ConstructionInvalid(report))
    }
}

fn side_path(board: &Board, label: SideLabel) -> &[VertexId] {
    &board
        .side(label)
        .expect("validated board has every side")
        .path
}

/// Vertex map between two boards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    target_len: usize,
    image: Vec<VertexId>,
}

impl VertexMap {
    pub fn new(target_len: usize, image: Vec<VertexId>) -> Self {
        debug_assert!(image.iter().all(|&v| v < target_len));
        VertexMap { target_len, image }
    }

    pub fn identity(source_len: usize, target_len: usize) -> Self {
        VertexMap::new(target_len, (0..source_len).collect())
    }

    pub fn source_len(&self) -> usize {
        self.image.len()
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.image[v]
    }

    pub fn images(&self) -> &[VertexId] {
        &self.image
    }

    /// Sorted image of a vertex set.
    pub fn apply_set(&self, vertices: &[VertexId]) -> Vec<VertexId> {
        let set: BTreeSet<_> = vertices.iter().map(|&v| self.image[v]).collect();
        set.into_iter().collect()
    }

    /// Edges and triangles of `source` whose image is not a simplex of
    /// `target` (an edge may collapse to a vertex, a triangle to an edge or
    /// a vertex).
    pub fn simplicial_failures(&self, source: &Board, target: &Board) -> Vec<Vec<VertexId>> {
        let mut bad = Vec::new();
        for &(a, b) in source.edges() {
            let (fa, fb) = (self.apply(a), self.apply(b));
            if fa != fb && !target.has_edge(fa, fb) {
                bad.push(vec![a, b]);
            }
        }
        for t in source.triangles() {
            let img: BTreeSet<_> = t.iter().map(|&v| self.apply(v)).collect();
            let ok = match img.len() {
                3 => {
                    let v: Vec<_> = img.into_iter().collect();
                    target.has_triangle(v[0], v[1], v[2])
                }
                _ => true,
            };
            if !ok {
                bad.push(t.to_vec());
            }
        }
        bad
    }

    pub fn is_simplicial(&self, source: &Board, target: &Board) -> bool {
        self.simplicial_failures(source, target).is_empty()
    }

    /// Every source vertex has the same color as its image.
    pub fn preserves_colors(&self, source: &Coloring, target: &Coloring) -> bool {
        (0..self.image.len()).all(|v| source.get(v) == target.get(self.image[v]))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &VertexMap) -> VertexMap {
        VertexMap::new(
            self.target_len,
            first.image.iter().map(|&v| self.image[v]).collect(),
        )
    }
}

/// A Hex board turned into a Y position by two pre-colored apexes.
#[derive(Clone, Debug)]
pub struct Extension {
    pub y_board: Board,
    /// Red on `apex_r0`, Blue on `apex_b0`, empty elsewhere.
    pub pre_coloring: Coloring,
    pub embed: VertexMap,
    pub apex_r0: VertexId,
    pub apex_b0: VertexId,
}

impl Extension {
    /// Pre-coloring with the Hex coloring copied through `embed`.
    pub fn lift(&self, hex_coloring: &Coloring) -> Coloring {
        let mut c = self.pre_coloring.clone();
        for v in 0..self.embed.source_len() {
            c.set(self.embed.apply(v), hex_coloring.get(v));
        }
        c
    }

    /// Y outcome on the extended board for a Hex coloring.
    pub fn y_outcome(&self, hex_coloring: &Coloring) -> Result<Outcome, ReductionError> {
        if hex_coloring.len() != self.embed.source_len() {
            return Err(ReductionError::SizeMismatch {
                coloring: hex_coloring.len(),
                board: self.embed.source_len(),
            });
        }
        Ok(rules::winner(&self.y_board, &self.lift(hex_coloring))?)
    }
}

/// Adds `r0` (joined to all of R2) and `b0` (joined to all of B1), and
/// relabels the boundary as l1 = (b0, B1∩R2, r0), l2 = r0 + B2,
/// l3 = R1 + b0. The apexes get ids `V` and `V + 1`.
pub fn extend_y_from_hex(hex_board: &Board) -> Result<Extension, ReductionError> {
    require(hex_board, GameKind::Hex)?;
    let n = hex_board.vertex_count();
    let (r0, b0) = (n, n + 1);
    let r1 = side_path(hex_board, SideLabel::R1);
    let b1 = side_path(hex_board, SideLabel::B1);
    let r2 = side_path(hex_board, SideLabel::R2);
    let b2 = side_path(hex_board, SideLabel::B2);

    let mut triangles = hex_board.triangles().to_vec();
    triangles.extend(r2.windows(2).map(|w| [r0, w[0], w[1]]));
    triangles.extend(b1.windows(2).map(|w| [b0, w[0], w[1]]));

    let corner = r2[0];
    let mut l2 = vec![r0];
    l2.extend_from_slice(b2);
    let mut l3 = r1.to_vec();
    l3.push(b0);
    let sides = vec![
        Side::new(SideLabel::L1, [b0, corner, r0]),
        Side::new(SideLabel::L2, l2),
        Side::new(SideLabel::L3, l3),
    ];
    let y_board = finish(Board::build(n + 2, triangles, sides).map_err(|e| {
        ReductionError::TheoremViolation(format!("extension produced a malformed complex: {e}"))
    })?)?;

    let mut pre_coloring = Coloring::empty(n + 2);
    pre_coloring.set(r0, Some(Color::Red));
    pre_coloring.set(b0, Some(Color::Blue));
    Ok(Extension {
        y_board,
        pre_coloring,
        embed: VertexMap::identity(n, n + 2),
        apex_r0: r0,
        apex_b0: b0,
    })
}

/// True iff the Y game on the extension and the Hex game on the original
/// board are won by the same color.
pub fn check_extension_equivalence(
    hex_board: &Board,
    full_coloring: &Coloring,
) -> Result<bool, ReductionError> {
    let ext = extend_y_from_hex(hex_board)?;
    extension_agrees(&ext, hex_board, full_coloring)
}

/// [`check_extension_equivalence`] against a prebuilt extension.
pub fn extension_agrees(
    ext: &Extension,
    hex_board: &Board,
    full_coloring: &Coloring,
) -> Result<bool, ReductionError> {
    if full_coloring.len() != hex_board.vertex_count() {
        return Err(ReductionError::SizeMismatch {
            coloring: full_coloring.len(),
            board: hex_board.vertex_count(),
        });
    }
    if !full_coloring.is_full() {
        return Err(ReductionError::NotFull);
    }
    let hex = rules::winner(hex_board, full_coloring)?;
    let y = ext.y_outcome(full_coloring)?;
    Ok(hex.color() == y.color())
}

/// A Y board glued to its mirror image along l1, viewed as a Hex board.
#[derive(Clone, Debug)]
pub struct Doubling {
    pub y_board: Board,
    pub hex_board: Board,
    /// Y board into the doubled board (identity on ids).
    pub embed: VertexMap,
    /// The reflection `s` of the doubled board.
    pub reflect: VertexMap,
    /// The fold `p` from the doubled board onto the Y board.
    pub fold: VertexMap,
    l1: Vec<VertexId>,
}

/// Mirrors a Y board across l1. Vertices on l1 keep their id; the mirror of
/// the `k`-th vertex off l1 (ascending id) gets id `V + k`. Sides of the
/// result are R1 = l3, B1 = l3', R2 = l2', B2 = l2.
pub fn double_y_to_hex(y_board: &Board) -> Result<Doubling, ReductionError> {
    require(y_board, GameKind::Y)?;
    let n = y_board.vertex_count();
    let l1 = side_path(y_board, SideLabel::L1).to_vec();
    let mut on_l1 = vec![false; n];
    for &v in &l1 {
        on_l1[v] = true;
    }
    let consecutive: BTreeSet<_> = l1.windows(2).map(|w| edge(w[0], w[1])).collect();
    if let Some(&(a, b)) = y_board
        .edges()
        .iter()
        .find(|&&(a, b)| on_l1[a] && on_l1[b] && !consecutive.contains(&(a, b)))
    {
        return Err(ReductionError::ChordOnGluingSide(a, b));
    }

    let mut mirror = (0..n).collect::<Vec<_>>();
    let mut next = n;
    for v in 0..n {
        if !on_l1[v] {
            mirror[v] = next;
            next += 1;
        }
    }
    let total = next;

    let mut reflect = (0..total).collect::<Vec<_>>();
    let mut fold = (0..total).collect::<Vec<_>>();
    for v in 0..n {
        if !on_l1[v] {
            reflect[v] = mirror[v];
            reflect[mirror[v]] = v;
            fold[mirror[v]] = v;
        }
    }

    let mut triangles = y_board.triangles().to_vec();
    triangles.extend(
        y_board
            .triangles()
            .iter()
            .map(|t| [mirror[t[0]], mirror[t[1]], mirror[t[2]]]),
    );

    let l2 = side_path(y_board, SideLabel::L2);
    let l3 = side_path(y_board, SideLabel::L3);
    let mirrored_rev = |p: &[VertexId]| p.iter().rev().map(|&v| mirror[v]).collect::<Vec<_>>();
    let sides = vec![
        Side::new(SideLabel::R1, l3.to_vec()),
        Side::new(SideLabel::B1, mirrored_rev(l3)),
        Side::new(SideLabel::R2, mirrored_rev(l2)),
        Side::new(SideLabel::B2, l2.to_vec()),
    ];
    let hex_board = finish(Board::build(total, triangles, sides).map_err(|e| {
        ReductionError::TheoremViolation(format!("doubling produced a malformed complex: {e}"))
    })?)?;

    Ok(Doubling {
        y_board: y_board.clone(),
        hex_board,
        embed: VertexMap::identity(n, total),
        reflect: VertexMap::new(total, reflect),
        fold: VertexMap::new(n, fold),
        l1,
    })
}

impl Doubling {
    /// The glued side, as vertex ids of the doubled board.
    pub fn l1(&self) -> &[VertexId] {
        &self.l1
    }

    /// Vertices fixed by the reflection, sorted.
    pub fn fixed_points(&self) -> Vec<VertexId> {
        (0..self.reflect.source_len())
            .filter(|&v| self.reflect.apply(v) == v)
            .collect()
    }

    pub fn reflect_is_involution(&self) -> bool {
        (0..self.reflect.source_len()).all(|v| self.reflect.apply(self.reflect.apply(v)) == v)
    }

    pub fn is_reflection_invariant(&self, coloring: &Coloring) -> bool {
        coloring.len() == self.hex_board.vertex_count()
            && (0..coloring.len()).all(|v| coloring.get(v) == coloring.get(self.reflect.apply(v)))
    }

    /// Copies a Y coloring onto both halves.
    pub fn mirror_coloring(&self, y_coloring: &Coloring) -> Coloring {
        let cells = (0..self.hex_board.vertex_count())
            .map(|v| y_coloring.get(self.fold.apply(v)))
            .collect();
        Coloring::from_cells(cells)
    }

    fn check_invariant(&self, coloring: &Coloring) -> Result<(), ReductionError> {
        if coloring.len() != self.hex_board.vertex_count() {
            return Err(ReductionError::SizeMismatch {
                coloring: coloring.len(),
                board: self.hex_board.vertex_count(),
            });
        }
        if !self.is_reflection_invariant(coloring) {
            return Err(ReductionError::NotReflectionInvariant);
        }
        Ok(())
    }

    /// Image of a chain of the doubled board under the fold.
    pub fn fold_chain(&self, coloring: &Coloring, chain: &Chain) -> Result<Chain, ReductionError> {
        self.check_invariant(coloring)?;
        let folded = Chain::new(chain.color, self.fold.apply_set(&chain.vertices));
        let y_coloring = self.fold_coloring(coloring);
        if !folded.is_chain_on(&self.y_board, &y_coloring) {
            return Err(ReductionError::TheoremViolation(format!(
                "folded set {folded} is not a chain"
            )));
        }
        Ok(folded)
    }

    /// Image of a chain under the reflection.
    pub fn reflect_chain(
        &self,
        coloring: &Coloring,
        chain: &Chain,
    ) -> Result<Chain, ReductionError> {
        self.check_invariant(coloring)?;
        Ok(Chain::new(
            chain.color,
            self.reflect.apply_set(&chain.vertices),
        ))
    }

    /// `C ∪ s(C)` for a chain `C` of the Y board.
    pub fn unfold_chain(&self, chain: &Chain) -> Chain {
        let mut vertices: Vec<_> = chain
            .vertices
            .iter()
            .map(|&v| self.embed.apply(v))
            .collect();
        vertices.extend(self.reflect.apply_set(&vertices));
        Chain::new(chain.color, vertices)
    }

    /// Restriction of a doubled-board coloring to the embedded Y board.
    fn fold_coloring(&self, coloring: &Coloring) -> Coloring {
        Coloring::from_cells(
            (0..self.y_board.vertex_count())
                .map(|v| coloring.get(self.embed.apply(v)))
                .collect(),
        )
    }

    /// Decides the Y game by playing Hex on the double and folding the
    /// winning chain back, checking each step of the argument on the way.
    pub fn y_winner(&self, y_coloring: &Coloring) -> Result<Outcome, ReductionError> {
        let n = self.y_board.vertex_count();
        if y_coloring.len() != n {
            return Err(ReductionError::SizeMismatch {
                coloring: y_coloring.len(),
                board: n,
            });
        }
        if !y_coloring.is_full() {
            return Err(ReductionError::NotFull);
        }
        let doubled = self.mirror_coloring(y_coloring);
        let hex_outcome = rules::winner(&self.hex_board, &doubled)?;
        let Some(wide) = hex_outcome.witness() else {
            return Err(ReductionError::TheoremViolation(
                "no Hex winner on the doubled board".into(),
            ));
        };
        if !self.l1.iter().any(|&v| wide.contains(v)) {
            return Err(ReductionError::TheoremViolation(format!(
                "Hex chain {wide} avoids l1"
            )));
        }
        let folded = self.fold_chain(&doubled, wide)?;
        for label in GameKind::Y.labels() {
            if !folded.meets(&self.y_board, *label) {
                return Err(ReductionError::TheoremViolation(format!(
                    "folded chain {folded} misses side {label}"
                )));
            }
        }
        let direct = rules::winner(&self.y_board, y_coloring)?;
        if direct.color() != Some(folded.color) {
            return Err(ReductionError::TheoremViolation(format!(
                "folded chain is {} but the direct winner is {direct}",
                folded.color
            )));
        }
        Ok(match folded.color {
            Color::Red => Outcome::RedWins(folded),
            Color::Blue => Outcome::BlueWins(folded),
        })
    }
}

pub fn mirror_coloring(doubling: &Doubling, y_coloring: &Coloring) -> Coloring {
    doubling.mirror_coloring(y_coloring)
}

pub fn fold_chain(
    doubling: &Doubling,
    coloring: &Coloring,
    chain: &Chain,
) -> Result<Chain, ReductionError> {
    doubling.fold_chain(coloring, chain)
}

pub fn reflect_chain(
    doubling: &Doubling,
    coloring: &Coloring,
    chain: &Chain,
) -> Result<Chain, ReductionError> {
    doubling.reflect_chain(coloring, chain)
}

/// Y winner computed through the doubled Hex board.
pub fn y_winner_via_hex(
    y_board: &Board,
    full_coloring: &Coloring,
) -> Result<Outcome, ReductionError> {
    double_y_to_hex(y_board)?.y_winner(full_coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_hex_dual, gen_y_dual, minimal_hex};

    fn all_colorings(n: usize) -> impl Iterator<Item = Coloring> {
        (0..1u32 << n).map(move |bits| {
            Coloring::from_cells(
                (0..n)
                    .map(|i| {
                        Some(if bits >> i & 1 == 0 {
                            Color::Red
                        } else {
                            Color::Blue
                        })
                    })
                    .collect(),
            )
        })
    }

    #[test]
    fn extension_of_minimal_lattice() {
        let hex = gen_hex_dual(2, 2).unwrap();
        let ext = extend_y_from_hex(&hex).unwrap();
        let y = &ext.y_board;
        assert_eq!(y.vertex_count(), 6);
        // Each apex fans over a one-edge side: +2 edges and +1 triangle apiece.
        assert_eq!((y.edges().len(), y.triangles().len()), (9, 4));
        assert_eq!(y.euler_characteristic(), 1);
        assert!(y.validate().ok());
        assert_eq!(ext.pre_coloring.get(ext.apex_r0), Some(Color::Red));
        assert_eq!(ext.pre_coloring.get(ext.apex_b0), Some(Color::Blue));
        assert_eq!(
            ext.pre_coloring.count(Color::Red) + ext.pre_coloring.count(Color::Blue),
            2
        );
        let l1 = &y.side(SideLabel::L1).unwrap().path;
        assert_eq!(l1.len(), 3);
        assert_eq!((l1[0], l1[2]), (ext.apex_b0, ext.apex_r0));
    }

    #[test]
    fn extension_grows_by_two() {
        for (r, c) in [(2, 2), (3, 3), (2, 5), (4, 3)] {
            let hex = gen_hex_dual(r, c).unwrap();
            let ext = extend_y_from_hex(&hex).unwrap();
            assert_eq!(ext.y_board.vertex_count(), hex.vertex_count() + 2);
        }
    }

    #[test]
    fn extension_matches_hex_on_minimal_board() {
        let hex = minimal_hex();
        let ext = extend_y_from_hex(&hex).unwrap();
        for c in all_colorings(4) {
            let h = rules::winner(&hex, &c).unwrap();
            let y = ext.y_outcome(&c).unwrap();
            assert_eq!(h.color(), y.color(), "{c:?}");
            assert!(check_extension_equivalence(&hex, &c).unwrap());
        }
        let c = Coloring::red_set(4, &[0, 2]);
        assert_eq!(rules::winner(&hex, &c).unwrap().color(), Some(Color::Red));
        assert!(check_extension_equivalence(&hex, &Coloring::filled(4, Color::Blue)).unwrap());
    }

    #[test]
    fn extension_rejects_bad_input() {
        let y = gen_y_dual(3).unwrap();
        assert!(matches!(
            extend_y_from_hex(&y),
            Err(ReductionError::WrongKind { .. })
        ));
        let hex = minimal_hex();
        assert_eq!(
            check_extension_equivalence(&hex, &Coloring::empty(4)),
            Err(ReductionError::NotFull)
        );
    }

    #[test]
    fn doubling_minimal_y() {
        let y = gen_y_dual(2).unwrap();
        let d = double_y_to_hex(&y).unwrap();
        let h = &d.hex_board;
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.triangles().len(), 2);
        // Diagonal is the old l1.
        assert!(h.has_edge(0, 1) && !h.is_boundary_edge(0, 1));
        assert_eq!(d.reflect.apply(2), 3);
        assert_eq!(d.fold.apply(3), 2);
        assert_eq!(d.fixed_points(), vec![0, 1]);
    }

    #[test]
    fn doubling_y3() {
        let y = gen_y_dual(3).unwrap();
        let d = double_y_to_hex(&y).unwrap();
        assert_eq!(d.hex_board.vertex_count(), 9);
        assert_eq!(d.hex_board.triangles().len(), 8);
        assert!(d.hex_board.validate().ok());
        let id = d.fold.after(&d.embed);
        assert_eq!(id, VertexMap::identity(6, 6));
        assert!(d.reflect_is_involution());
        let mut l1 = d.l1().to_vec();
        l1.sort_unstable();
        assert_eq!(d.fixed_points(), l1);
        assert!(d.reflect.is_simplicial(&d.hex_board, &d.hex_board));
        assert!(d.fold.is_simplicial(&d.hex_board, &d.y_board));
        assert_eq!(d.fold.after(&d.reflect), d.fold);

        // s swaps R1<->B1 and R2<->B2 as sets.
        let set = |l| {
            d.hex_board
                .side_vertices(l)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>()
        };
        assert_eq!(d.reflect.apply_set(&set(SideLabel::R1)), set(SideLabel::B1));
        assert_eq!(d.reflect.apply_set(&set(SideLabel::R2)), set(SideLabel::B2));
    }

    #[test]
    fn chord_on_l1_is_rejected() {
        // Fan of two triangles: l1 = 0-1-2 with chord 0-2.
        let y = Board::build(
            4,
            vec![[0, 1, 2], [0, 2, 3]],
            vec![
                Side::new(SideLabel::L1, [0, 1, 2]),
                Side::new(SideLabel::L2, [2, 3]),
                Side::new(SideLabel::L3, [3, 0]),
            ],
        )
        .unwrap();
        assert!(y.validate().ok());
        assert_eq!(
            double_y_to_hex(&y).unwrap_err(),
            ReductionError::ChordOnGluingSide(0, 2)
        );
    }

    #[test]
    fn mirror_and_chain_maps() {
        let y = gen_y_dual(2).unwrap();
        let d = double_y_to_hex(&y).unwrap();
        let red = Coloring::filled(3, Color::Red);
        assert_eq!(d.mirror_coloring(&red), Coloring::filled(4, Color::Red));

        let c = Coloring::red_set(3, &[0]);
        let m = mirror_coloring(&d, &c);
        assert_eq!((m.get(2), m.get(3)), (Some(Color::Blue), Some(Color::Blue)));
        assert!(d.is_reflection_invariant(&m));

        let lone = Chain::new(Color::Blue, vec![3]);
        assert_eq!(
            fold_chain(&d, &m, &lone).unwrap(),
            Chain::new(Color::Blue, vec![2])
        );
        let lone = Chain::new(Color::Blue, vec![2]);
        assert_eq!(
            reflect_chain(&d, &m, &lone).unwrap(),
            Chain::new(Color::Blue, vec![3])
        );
        assert_eq!(fold_chain(&d, &m, &lone).unwrap(), lone);

        let on_l1 = Chain::new(Color::Red, vec![0]);
        assert_eq!(reflect_chain(&d, &m, &on_l1).unwrap(), on_l1);

        let mut broken = m.clone();
        broken.set(3, Some(Color::Red));
        assert_eq!(
            fold_chain(&d, &broken, &lone),
            Err(ReductionError::NotReflectionInvariant)
        );
    }

    #[test]
    fn via_hex_small_cases() {
        let y = gen_y_dual(2).unwrap();
        let c = Coloring::red_set(3, &[0, 1]);
        let out = y_winner_via_hex(&y, &c).unwrap();
        assert_eq!(out, Outcome::RedWins(Chain::new(Color::Red, vec![0, 1])));

        let y3 = gen_y_dual(3).unwrap();
        let blue = Coloring::filled(6, Color::Blue);
        assert_eq!(
            y_winner_via_hex(&y3, &blue).unwrap().color(),
            Some(Color::Blue)
        );
        assert_eq!(
            y_winner_via_hex(&y3, &Coloring::empty(6)),
            Err(ReductionError::NotFull)
        );
    }

    #[test]
    fn via_hex_agrees_on_all_y3_colorings() {
        let y = gen_y_dual(3).unwrap();
        let d = double_y_to_hex(&y).unwrap();
        for c in all_colorings(6) {
            let direct = rules::winner(&y, &c).unwrap();
            let via = d.y_winner(&c).unwrap();
            assert_eq!(direct.color(), via.color());
            let w = via.witness().unwrap();
            assert!(w.is_chain_on(&y, &c));
            let both = d.unfold_chain(direct.witness().unwrap());
            for label in GameKind::Hex.labels() {
                assert!(both.meets(&d.hex_board, *label));
            }
        }
    }
}
