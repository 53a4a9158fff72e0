//! Exhaustive and sampled checks of the no-draw property, cross-checks of
//! the reductions, and random self-play.
//!
//! Exhaustive enumeration visits colorings by index: bit `i` of the index is
//! the color of the `i`-th free vertex in ascending id order (0 = Red,
//! 1 = Blue). Index ranges are split across rayon workers and the partial
//! tallies are summed, so results do not depend on the split.

use std::fmt;
use std::ops::{Add, AddAssign, Range};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::board::{Board, GameKind, Side, SideLabel, VertexId};
use crate::gale;
use crate::reductions::{self, ReductionError};
use crate::rules::{self, Color, Coloring, GoalStatus};

/// Largest number of free vertices enumerated by default.
pub const DEFAULT_GUARD: usize = 24;

const CHUNK: u64 = 1 << 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{free} free vertices exceed the enumeration guard of {guard}; use sampling instead")]
    GuardExceeded { free: usize, guard: usize },
    #[error("at least one trial is required")]
    NoTrials,
    #[error("at least one game is required")]
    NoGames,
    #[error("coloring has {coloring} cells, board has {board} vertices")]
    SizeMismatch { coloring: usize, board: usize },
}

/// Outcome counts over a set of full colorings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tally {
    pub total: u64,
    pub red_wins: u64,
    pub blue_wins: u64,
    pub draws: u64,
    pub double_wins: u64,
}

impl Tally {
    pub fn record(&mut self, status: GoalStatus) {
        self.total += 1;
        match (status.red, status.blue) {
            (true, false) => self.red_wins += 1,
            (false, true) => self.blue_wins += 1,
            (false, false) => self.draws += 1,
            (true, true) => self.double_wins += 1,
        }
    }

    /// No draws and no double wins.
    pub fn is_compliant(&self) -> bool {
        self.draws == 0 && self.double_wins == 0
    }

    pub fn is_consistent(&self) -> bool {
        self.red_wins + self.blue_wins + self.draws + self.double_wins == self.total
    }
}

impl Add for Tally {
    type Output = Tally;

    fn add(self, o: Tally) -> Tally {
        Tally {
            total: self.total + o.total,
            red_wins: self.red_wins + o.red_wins,
            blue_wins: self.blue_wins + o.blue_wins,
            draws: self.draws + o.draws,
            double_wins: self.double_wins + o.double_wins,
        }
    }
}

impl AddAssign for Tally {
    fn add_assign(&mut self, o: Tally) {
        *self = *self + o;
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "total={} red={} blue={} draw={} both={}",
            self.total, self.red_wins, self.blue_wins, self.draws, self.double_wins
        )
    }
}

/// Decides which goals a full coloring meets. Production code uses
/// [`StandardJudge`]; tests can plug in deliberately broken predicates.
pub trait Judge: Sync {
    fn judge(&self, board: &Board, coloring: &Coloring) -> GoalStatus;
}

impl<F> Judge for F
where
    F: Fn(&Board, &Coloring) -> GoalStatus + Sync,
{
    fn judge(&self, board: &Board, coloring: &Coloring) -> GoalStatus {
        self(board, coloring)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct StandardJudge;

impl Judge for StandardJudge {
    fn judge(&self, board: &Board, coloring: &Coloring) -> GoalStatus {
        rules::goals(board, coloring)
    }
}

/// The full coloring with index `index` over the `free` vertices of `base`.
pub fn coloring_at(base: &Coloring, free: &[VertexId], index: u64) -> Coloring {
    let mut c = base.clone();
    for (i, &v) in free.iter().enumerate() {
        let color = if index >> i & 1 == 0 {
            Color::Red
        } else {
            Color::Blue
        };
        c.set(v, Some(color));
    }
    c
}

/// Sequential tally over one index range.
pub fn enumerate_range(
    board: &Board,
    base: &Coloring,
    free: &[VertexId],
    range: Range<u64>,
    judge: &dyn Judge,
) -> Tally {
    let mut tally = Tally::default();
    let mut c = base.clone();
    for index in range {
        for (i, &v) in free.iter().enumerate() {
            let color = if index >> i & 1 == 0 {
                Color::Red
            } else {
                Color::Blue
            };
            c.set(v, Some(color));
        }
        tally.record(judge.judge(board, &c));
    }
    tally
}

fn check_guard(free: usize, guard: usize) -> Result<u64, VerifyError> {
    if free > guard || free >= 64 {
        return Err(VerifyError::GuardExceeded { free, guard });
    }
    Ok(1u64 << free)
}

/// Tallies every completion of `base` in parallel.
pub fn enumerate_from(
    board: &Board,
    base: &Coloring,
    guard: usize,
    judge: &dyn Judge,
) -> Result<Tally, VerifyError> {
    if base.len() != board.vertex_count() {
        return Err(VerifyError::SizeMismatch {
            coloring: base.len(),
            board: board.vertex_count(),
        });
    }
    let free = base.empty_vertices();
    let count = check_guard(free.len(), guard)?;
    let chunks = count.div_ceil(CHUNK);
    Ok((0..chunks)
        .into_par_iter()
        .map(|k| {
            let range = k * CHUNK..((k + 1) * CHUNK).min(count);
            enumerate_range(board, base, &free, range, judge)
        })
        .reduce(Tally::default, Add::add))
}

/// All `2^V` full colorings of the board.
pub fn enumerate_exhaustive(board: &Board, guard: usize) -> Result<Tally, VerifyError> {
    enumerate_with(board, guard, &StandardJudge)
}

pub fn enumerate_with(
    board: &Board,
    guard: usize,
    judge: &dyn Judge,
) -> Result<Tally, VerifyError> {
    enumerate_from(board, &Coloring::empty(board.vertex_count()), guard, judge)
}

/// Lowest-index completion of `base` that is a draw or a double win.
pub fn find_violation(
    board: &Board,
    base: &Coloring,
    guard: usize,
    judge: &dyn Judge,
) -> Result<Option<Coloring>, VerifyError> {
    let free = base.empty_vertices();
    let count = check_guard(free.len(), guard)?;
    Ok((0..count).into_par_iter().find_map_first(|index| {
        let c = coloring_at(base, &free, index);
        let s = judge.judge(board, &c);
        (s.red == s.blue).then_some(c)
    }))
}

fn random_coloring(n: usize, rng: &mut ChaCha8Rng) -> Coloring {
    Coloring::from_cells(
        (0..n)
            .map(|_| {
                Some(if rng.gen_bool(0.5) {
                    Color::Blue
                } else {
                    Color::Red
                })
            })
            .collect(),
    )
}

/// Tallies `trials` uniformly random full colorings.
pub fn sample_random(board: &Board, trials: u64, seed: u64) -> Result<Tally, VerifyError> {
    sample_with(board, trials, seed, &StandardJudge)
}

pub fn sample_with(
    board: &Board,
    trials: u64,
    seed: u64,
    judge: &dyn Judge,
) -> Result<Tally, VerifyError> {
    if trials == 0 {
        return Err(VerifyError::NoTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for _ in 0..trials {
        let c = random_coloring(board.vertex_count(), &mut rng);
        tally.record(judge.judge(board, &c));
    }
    Ok(tally)
}

/// One random game played to a full board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameRecord {
    /// Vertices in play order; Red moves first.
    pub moves: Vec<VertexId>,
    /// Number of moves after which the game first had a winner.
    pub decided_at: Option<usize>,
    /// Goals met on the final, full board.
    pub final_status: GoalStatus,
}

impl GameRecord {
    pub fn winner(&self) -> Option<Color> {
        match (self.final_status.red, self.final_status.blue) {
            (true, false) => Some(Color::Red),
            (false, true) => Some(Color::Blue),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfPlay {
    pub tally: Tally,
    pub records: Vec<GameRecord>,
}

/// Plays `games` games of uniformly random moves, Red first, until every
/// vertex is colored.
pub fn selfplay(board: &Board, games: u64, seed: u64) -> Result<SelfPlay, VerifyError> {
    selfplay_with(board, games, seed, &StandardJudge)
}

pub fn selfplay_with(
    board: &Board,
    games: u64,
    seed: u64,
    judge: &dyn Judge,
) -> Result<SelfPlay, VerifyError> {
    if games == 0 {
        return Err(VerifyError::NoGames);
    }
    let n = board.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    let mut records = Vec::with_capacity(games as usize);
    for _ in 0..games {
        let mut moves: Vec<VertexId> = (0..n).collect();
        moves.shuffle(&mut rng);
        let mut c = Coloring::empty(n);
        let mut decided_at = None;
        let mut status = GoalStatus::default();
        for (k, &v) in moves.iter().enumerate() {
            let color = if k % 2 == 0 { Color::Red } else { Color::Blue };
            c.set(v, Some(color));
            if decided_at.is_none() || k + 1 == n {
                status = judge.judge(board, &c);
                if decided_at.is_none() && (status.red || status.blue) {
                    decided_at = Some(k + 1);
                }
            }
        }
        tally.record(status);
        records.push(GameRecord {
            moves,
            decided_at,
            final_status: status,
        });
    }
    Ok(SelfPlay { tally, records })
}

/// The same triangulation with sides rotated one step, so that the red
/// goal of the result is the blue goal of `board` and vice versa.
pub fn swap_goals(board: &Board) -> Board {
    let sides = board.sides();
    let k = sides.len();
    let rotated = (0..k)
        .map(|i| Side::new(sides[i].label, sides[(i + 1) % k].path.clone()))
        .collect();
    Board::build(board.vertex_count(), board.triangles().to_vec(), rotated)
        .expect("same vertex ids")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

/// A failing board and coloring that reproduce a check failure.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub board: Board,
    pub coloring: Coloring,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    pub counterexample: Option<Counterexample>,
}

impl CheckResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: CheckStatus::Pass,
            detail: detail.into(),
            counterexample: None,
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: CheckStatus::Fail,
            detail: detail.into(),
            counterexample: None,
        }
    }

    fn skip(name: &'static str, reason: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: CheckStatus::Skipped(reason.into()),
            detail: String::new(),
            counterexample: None,
        }
    }

    fn with_example(mut self, board: &Board, coloring: Coloring) -> Self {
        self.counterexample = Some(Counterexample {
            board: board.clone(),
            coloring,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            CheckStatus::Pass => write!(f, "PASS {}", self.name)?,
            CheckStatus::Fail => write!(f, "FAIL {}", self.name)?,
            CheckStatus::Skipped(why) => return write!(f, "SKIP {} ({why})", self.name),
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
    /// Exhaustive tally of the board, when it was computed.
    pub tally: Option<Tally>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// A draw or a double win was counted.
    pub fn theorem_violation(&self) -> bool {
        self.tally.is_some_and(|t| !t.is_compliant())
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Default guard for the per-coloring parts of the suite.
pub const SUITE_GUARD: usize = 20;

pub fn invariant_suite(board: &Board) -> SuiteReport {
    invariant_suite_with(board, SUITE_GUARD, &StandardJudge)
}

/// Runs every check that applies to the board's kind. Stops after the
/// validation check if the board is not a valid disk.
pub fn invariant_suite_with(board: &Board, guard: usize, judge: &dyn Judge) -> SuiteReport {
    let mut report = SuiteReport::default();
    let validation = board.validate();
    if !validation.ok() {
        report.checks.push(CheckResult::fail(
            "validate",
            validation.to_string().replace('\n', "; "),
        ));
        return report;
    }
    report.checks.push(CheckResult::pass(
        "validate",
        format!(
            "V={} E={} T={} chi={}",
            board.vertex_count(),
            board.edges().len(),
            board.triangles().len(),
            board.euler_characteristic()
        ),
    ));

    let n = board.vertex_count();
    if n > guard {
        let why = format!("{n} vertices exceed guard {guard}");
        report
            .checks
            .push(CheckResult::skip("exactly-one-winner", why));
        return report;
    }
    let count = 1u64 << n;
    let all = || (0..count).into_par_iter();
    let empty = Coloring::empty(n);
    let free: Vec<VertexId> = (0..n).collect();
    let at = |i: u64| coloring_at(&empty, &free, i);

    let tally = enumerate_with(board, guard, judge).expect("guard checked");
    report.tally = Some(tally);
    if tally.is_compliant() {
        report
            .checks
            .push(CheckResult::pass("exactly-one-winner", tally.to_string()));
    } else {
        let mut check = CheckResult::fail("exactly-one-winner", tally.to_string());
        if let Ok(Some(c)) = find_violation(board, &empty, guard, judge) {
            check = check.with_example(board, c);
        }
        report.checks.push(check);
    }

    let swapped_board = swap_goals(board);
    let bad = all().find_map_first(|i| {
        let c = at(i);
        let a = judge.judge(board, &c);
        let b = judge.judge(&swapped_board, &c.swapped());
        (a.red != b.blue || a.blue != b.red).then_some(c)
    });
    report.checks.push(match bad {
        None => CheckResult::pass("color-swap", "swapping colors and goals swaps the winner"),
        Some(c) => CheckResult::fail("color-swap", "winner not swapped").with_example(board, c),
    });

    match board.kind() {
        GameKind::Y => y_checks(board, count, &at, &mut report),
        GameKind::Hex => hex_checks(board, count, &at, &mut report),
    }
    report
}

fn y_checks(
    board: &Board,
    count: u64,
    at: &(dyn Fn(u64) -> Coloring + Sync),
    report: &mut SuiteReport,
) {
    let checks = &mut report.checks;
    let d = match reductions::double_y_to_hex(board) {
        Ok(d) => d,
        Err(e @ ReductionError::ChordOnGluingSide(..)) => {
            checks.push(CheckResult::skip("doubling", e.to_string()));
            return;
        }
        Err(e) => {
            checks.push(CheckResult::fail("doubling", e.to_string()));
            return;
        }
    };
    checks.push(CheckResult::pass(
        "doubling",
        format!("double has {} vertices", d.hex_board.vertex_count()),
    ));

    let expect = |ok: bool, name: &'static str, detail: &str| {
        if ok {
            CheckResult::pass(name, detail)
        } else {
            CheckResult::fail(name, detail)
        }
    };
    let mut l1 = d.l1().to_vec();
    l1.sort_unstable();
    let side_set = |l| {
        d.hex_board
            .side_vertices(l)
            .expect("hex sides")
            .into_iter()
            .collect::<Vec<_>>()
    };
    checks.push(expect(
        d.reflect_is_involution(),
        "reflect-involution",
        "s∘s = id",
    ));
    checks.push(expect(
        d.fixed_points() == l1,
        "reflect-fixes-l1",
        "Fix(s) = l1",
    ));
    checks.push(expect(
        d.reflect.is_simplicial(&d.hex_board, &d.hex_board),
        "reflect-simplicial",
        "s maps simplices to simplices",
    ));
    checks.push(expect(
        d.reflect.apply_set(&side_set(SideLabel::R1)) == side_set(SideLabel::B1)
            && d.reflect.apply_set(&side_set(SideLabel::R2)) == side_set(SideLabel::B2),
        "reflect-sides",
        "s swaps R1<->B1 and R2<->B2",
    ));
    checks.push(expect(
        d.fold.is_simplicial(&d.hex_board, board),
        "fold-simplicial",
        "p maps simplices to simplices",
    ));
    checks.push(expect(
        d.fold.after(&d.reflect) == d.fold,
        "fold-reflect",
        "p∘s = p",
    ));
    checks.push(expect(
        d.fold.after(&d.embed)
            == reductions::VertexMap::identity(board.vertex_count(), board.vertex_count()),
        "fold-embed",
        "p is the identity on the embedded board",
    ));

    let bad = (0..count).into_par_iter().find_map_first(|i| {
        let c = at(i);
        let ok = match (d.y_winner(&c), rules::winner(board, &c)) {
            (Ok(via), Ok(direct)) => via.color() == direct.color(),
            _ => false,
        };
        (!ok).then_some(c)
    });
    checks.push(match bad {
        None => CheckResult::pass("via-hex", format!("{count} colorings agree")),
        Some(c) => {
            let why = d
                .y_winner(&c)
                .err()
                .map(|e| e.to_string())
                .unwrap_or_default();
            CheckResult::fail("via-hex", why).with_example(board, c)
        }
    });

    let bad = (0..count).into_par_iter().find_map_first(|i| {
        let c = at(i);
        let direct = rules::winner(board, &c).ok()?;
        let w = direct.witness()?;
        let both = d.unfold_chain(w);
        let ok = GameKind::Hex
            .labels()
            .iter()
            .all(|&l| both.meets(&d.hex_board, l))
            && both.is_chain_on(&d.hex_board, &d.mirror_coloring(&c));
        (!ok).then_some(c)
    });
    checks.push(match bad {
        None => CheckResult::pass("unfold-winner", "C ∪ s(C) meets all four sides"),
        Some(c) => {
            CheckResult::fail("unfold-winner", "C ∪ s(C) misses a side").with_example(board, c)
        }
    });

    let bad = (0..count).into_par_iter().find_map_first(|i| {
        let c = at(i);
        let m = d.mirror_coloring(&c);
        let ok = [Color::Red, Color::Blue].iter().all(|&color| {
            let (a, b) = match color {
                Color::Red => (SideLabel::R1, SideLabel::R2),
                Color::Blue => (SideLabel::B1, SideLabel::B2),
            };
            rules::monochrome_components(&d.hex_board, &m, color)
                .iter()
                .filter(|ch| ch.meets(&d.hex_board, a) && ch.meets(&d.hex_board, b))
                .all(|ch| d.l1().iter().any(|&v| ch.contains(v)))
        });
        (!ok).then_some(c)
    });
    checks.push(match bad {
        None => CheckResult::pass("double-chains-meet-l1", "every Hex winning chain meets l1"),
        Some(c) => CheckResult::fail("double-chains-meet-l1", "winning chain avoids l1")
            .with_example(board, c),
    });
}

fn hex_checks(
    board: &Board,
    count: u64,
    at: &(dyn Fn(u64) -> Coloring + Sync),
    report: &mut SuiteReport,
) {
    let checks = &mut report.checks;
    match reductions::extend_y_from_hex(board) {
        Err(e) => checks.push(CheckResult::fail("extension", e.to_string())),
        Ok(ext) => {
            checks.push(CheckResult::pass(
                "extension",
                format!("Y board has {} vertices", ext.y_board.vertex_count()),
            ));
            let bad = (0..count).into_par_iter().find_map_first(|i| {
                let c = at(i);
                let ok = reductions::extension_agrees(&ext, board, &c).unwrap_or(false);
                (!ok).then_some(c)
            });
            checks.push(match bad {
                None => {
                    CheckResult::pass("extension-equivalence", format!("{count} colorings agree"))
                }
                Some(c) => CheckResult::fail("extension-equivalence", "Y and Hex winners differ")
                    .with_example(board, c),
            });
        }
    }

    let g = match gale::augment(board) {
        Ok(g) => g,
        Err(e) => {
            checks.push(CheckResult::fail("gale-augment", e.to_string()));
            return;
        }
    };
    checks.push(CheckResult::pass(
        "gale-augment",
        format!(
            "D has V={} E={} T={} chi={}",
            g.d_board.vertex_count(),
            g.d_board.edges().len(),
            g.d_board.triangles().len(),
            g.d_board.euler_characteristic()
        ),
    ));

    type Probe = fn(&gale::GaleRun, usize) -> bool;
    let probes: [(&'static str, &'static str, Probe); 5] = [
        (
            "gale-partition",
            "V±/W± partition every vertex of D",
            |r, n| r.partition.is_partition_of(n),
        ),
        ("gale-cross-edges", "no V+/V− or W+/W− edges", |r, _| {
            r.retraction.cross_edges.is_empty()
        }),
        ("gale-simplicial", "D → S is simplicial", |r, _| {
            r.retraction.simplicial
        }),
        ("gale-not-identity-on-S", "D → S never fixes S", |r, _| {
            !r.retraction.identity_on_s
        }),
        (
            "gale-winner",
            "classification winner matches direct winner",
            |r, _| r.agrees() && r.outcome.color().is_some(),
        ),
    ];
    let d_count = g.d_board.vertex_count();
    for (name, detail, probe) in probes {
        let bad = (0..count).into_par_iter().find_map_first(|i| {
            let c = at(i);
            let ok = gale::run(&g, board, &c).is_ok_and(|r| probe(&r, d_count));
            (!ok).then_some(c)
        });
        checks.push(match bad {
            None => CheckResult::pass(name, detail),
            Some(c) => CheckResult::fail(name, detail).with_example(board, c),
        });
    }
}
