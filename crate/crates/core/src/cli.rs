//! The `cgb` command line.
//!
//! Exit codes: 0 success, 1 invalid input or board, 2 a draw or a double
//! win was observed, 3 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::board::{Board, GameKind, SideLabel};
use crate::dot::export_dot;
use crate::format::{parse_board_file, parse_unchecked, render_board_file, FormatError};
use crate::gale;
use crate::generators::{gen_hex_dual, gen_random, gen_y_dual};
use crate::reductions;
use crate::rules::{self, Coloring, RulesError};
use crate::verify::{self, CheckStatus, Judge, StandardJudge, Tally, DEFAULT_GUARD, SUITE_GUARD};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cgb",
    version,
    about = "Hex and Y on arbitrary disk triangulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a board file describes a valid disk with valid sides
    Validate { file: PathBuf },
    /// Report the winner of the coloring stored in a board file
    Winner { file: PathBuf },
    /// Tally every completion of the stored coloring
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// Tally uniformly random full colorings
    Sample {
        file: PathBuf,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Run every invariant check that applies to the board
    Suite {
        file: PathBuf,
        #[arg(long, default_value_t = SUITE_GUARD)]
        guard: usize,
    },
    /// Hex to Y by apex extension, or Y to Hex by doubling
    #[command(group(ArgGroup::new("direction").required(true).args(["to_y", "to_hex"])))]
    Reduce {
        #[arg(long)]
        to_y: bool,
        #[arg(long)]
        to_hex: bool,
        file: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Gale's augmented board and the V±/W± classification
    Gale {
        file: PathBuf,
        #[arg(long, default_value_t = SUITE_GUARD)]
        guard: usize,
    },
    /// Random games played to a full board
    Selfplay {
        file: PathBuf,
        #[arg(long)]
        games: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Generate a board file
    Gen {
        #[command(subcommand)]
        kind: GenCommand,
    },
    /// Render a board as Graphviz DOT
    Export {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct OutArg {
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Parallelogram lattice dual to a Hex board
    Hex {
        rows: usize,
        cols: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Triangular lattice dual to a Y board
    Y {
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Seeded random disk triangulation
    Random {
        n_vertices: usize,
        sides: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

enum Failure {
    Invalid(String),
    Violation(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line with the standard winner predicate.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_judge(args, out, err, &StandardJudge)
}

/// Runs the command line with `judge` deciding goals wherever colorings are
/// tallied (enumerate, sample, suite, selfplay).
pub fn run_with_judge<I, T>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
    judge: &dyn Judge,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out, judge) {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Violation(msg)) => {
            let _ = writeln!(err, "theorem violation: {msg}");
            EXIT_VIOLATION
        }
    }
}

fn load(path: &Path) -> Result<(Board, Coloring), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Ok(parse_board_file(&text)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn tally_exit(out: &mut dyn Write, tally: &Tally) -> Outcome {
    writeln!(out, "{tally}")?;
    Ok(if tally.is_compliant() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn execute(command: Command, out: &mut dyn Write, judge: &dyn Judge) -> Outcome {
    match command {
        Command::Validate { file } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", file.display())))?;
            let (board, _) = parse_unchecked(&text)?;
            let report = board.validate();
            if report.ok() {
                writeln!(
                    out,
                    "ok kind={} V={} E={} T={} chi={}",
                    board.kind(),
                    board.vertex_count(),
                    board.edges().len(),
                    board.triangles().len(),
                    board.euler_characteristic()
                )?;
                Ok(EXIT_OK)
            } else {
                for v in &report.violations {
                    writeln!(out, "violation {}: {}", v.rule, v.message)?;
                }
                Ok(EXIT_INVALID)
            }
        }
        Command::Winner { file } => {
            let (board, coloring) = load(&file)?;
            match rules::winner(&board, &coloring) {
                Ok(outcome) => {
                    writeln!(out, "{outcome}")?;
                    if let Some(chain) = outcome.witness() {
                        write!(out, "witness")?;
                        for v in &chain.vertices {
                            write!(out, " {v}")?;
                        }
                        writeln!(out)?;
                        if board.kind() == GameKind::Hex {
                            let (a, b) = match chain.color {
                                rules::Color::Red => (SideLabel::R1, SideLabel::R2),
                                rules::Color::Blue => (SideLabel::B1, SideLabel::B2),
                            };
                            if let Ok(path) = rules::witness_path(&board, chain, a, b) {
                                let p: Vec<String> = path.iter().map(|v| v.to_string()).collect();
                                writeln!(out, "path {}", p.join(" "))?;
                            }
                        }
                    }
                    Ok(EXIT_OK)
                }
                Err(RulesError::TheoremViolation { red, blue }) => {
                    writeln!(out, "both")?;
                    writeln!(out, "witness {red}")?;
                    writeln!(out, "witness {blue}")?;
                    Ok(EXIT_VIOLATION)
                }
                Err(e) => Err(Failure::Invalid(e.to_string())),
            }
        }
        Command::Enumerate { file, guard } => {
            let (board, coloring) = load(&file)?;
            let tally = verify::enumerate_from(&board, &coloring, guard, judge)
                .map_err(|e| Failure::Invalid(e.to_string()))?;
            tally_exit(out, &tally)
        }
        Command::Sample { file, trials, seed } => {
            let (board, _) = load(&file)?;
            let tally = verify::sample_with(&board, trials, seed, judge)
                .map_err(|e| Failure::Invalid(e.to_string()))?;
            tally_exit(out, &tally)
        }
        Command::Suite { file, guard } => {
            let (board, _) = load(&file)?;
            let report = verify::invariant_suite_with(&board, guard, judge);
            for check in &report.checks {
                writeln!(out, "{check}")?;
                if let Some(ex) = &check.counterexample {
                    writeln!(out, "# counterexample")?;
                    write!(out, "{}", render_board_file(&ex.board, &ex.coloring))?;
                }
            }
            if let Some(t) = &report.tally {
                writeln!(out, "{t}")?;
            }
            let failed = report
                .checks
                .iter()
                .filter(|c| c.status == CheckStatus::Fail)
                .count();
            writeln!(out, "{} checks, {failed} failed", report.checks.len())?;
            Ok(if report.theorem_violation() {
                EXIT_VIOLATION
            } else if failed > 0 {
                EXIT_INVALID
            } else {
                EXIT_OK
            })
        }
        Command::Reduce {
            to_y,
            to_hex: _,
            file,
            out: target,
        } => {
            let (board, coloring) = load(&file)?;
            let (result, colors) = if to_y {
                let ext = reductions::extend_y_from_hex(&board)
                    .map_err(|e| Failure::Invalid(e.to_string()))?;
                let c = ext.lift(&coloring);
                writeln!(out, "apex r0={} b0={}", ext.apex_r0, ext.apex_b0)?;
                (ext.y_board, c)
            } else {
                let d = reductions::double_y_to_hex(&board)
                    .map_err(|e| Failure::Invalid(e.to_string()))?;
                let c = d.mirror_coloring(&coloring);
                (d.hex_board, c)
            };
            write_file(&target, &render_board_file(&result, &colors))?;
            writeln!(
                out,
                "wrote {} ({} board, {} vertices)",
                target.display(),
                result.kind(),
                result.vertex_count()
            )?;
            Ok(EXIT_OK)
        }
        Command::Gale { file, guard } => gale_command(&file, guard, out),
        Command::Selfplay { file, games, seed } => {
            let (board, _) = load(&file)?;
            let play = verify::selfplay_with(&board, games, seed, judge)
                .map_err(|e| Failure::Invalid(e.to_string()))?;
            let decided: Vec<usize> = play.records.iter().filter_map(|r| r.decided_at).collect();
            if let (Some(min), Some(max)) = (decided.iter().min(), decided.iter().max()) {
                writeln!(out, "decided_at min={min} max={max}")?;
            }
            tally_exit(out, &play.tally)
        }
        Command::Gen { kind } => {
            let (board, target) = match kind {
                GenCommand::Hex { rows, cols, out } => (gen_hex_dual(rows, cols), out.out),
                GenCommand::Y { n, out } => (gen_y_dual(n), out.out),
                GenCommand::Random {
                    n_vertices,
                    sides,
                    seed,
                    out,
                } => (gen_random(n_vertices, sides, seed), out.out),
            };
            let board = board.map_err(|e| Failure::Invalid(e.to_string()))?;
            let text = render_board_file(&board, &Coloring::empty(board.vertex_count()));
            match target {
                Some(path) => {
                    write_file(&path, &text)?;
                    writeln!(out, "wrote {}", path.display())?;
                }
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Export { file, dot } => {
            let (board, coloring) = load(&file)?;
            let highlight = match rules::winner(&board, &coloring) {
                Ok(o) => o.witness().cloned(),
                Err(_) => None,
            };
            let text = export_dot(&board, &coloring, highlight.as_ref());
            match dot {
                Some(path) => {
                    write_file(&path, &text)?;
                    writeln!(out, "wrote {}", path.display())?;
                }
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn gale_command(file: &Path, guard: usize, out: &mut dyn Write) -> Outcome {
    let (board, coloring) = load(file)?;
    let g = gale::augment(&board).map_err(|e| Failure::Invalid(e.to_string()))?;
    let d = &g.d_board;
    writeln!(
        out,
        "D V={} E={} T={} chi={}",
        d.vertex_count(),
        d.edges().len(),
        d.triangles().len(),
        d.euler_characteristic()
    )?;
    writeln!(
        out,
        "S r-={} b-={} r+={} b+={}",
        g.r_minus, g.b_minus, g.r_plus, g.b_plus
    )?;
    let list = |vs: &[usize]| {
        vs.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };

    if coloring.is_full() {
        let run =
            gale::run(&g, &board, &coloring).map_err(|e| Failure::Violation(e.to_string()))?;
        let p = &run.partition;
        writeln!(out, "V+ {}", list(&p.v_plus))?;
        writeln!(out, "V- {}", list(&p.v_minus))?;
        writeln!(out, "W+ {}", list(&p.w_plus))?;
        writeln!(out, "W- {}", list(&p.w_minus))?;
        writeln!(out, "{}", run.retraction)?;
        writeln!(out, "winner {} direct {}", run.outcome, run.direct)?;
        let mut tally = Tally::default();
        tally.record(status_of(&run.outcome));
        return tally_exit(out, &tally);
    }

    let free = coloring.empty_vertices();
    if free.len() > guard {
        return Err(Failure::Invalid(format!(
            "{} free vertices exceed the guard of {guard}",
            free.len()
        )));
    }
    let mut tally = Tally::default();
    let (mut cross, mut non_simplicial, mut identity, mut disagree) = (0u64, 0u64, 0u64, 0u64);
    for index in 0..1u64 << free.len() {
        let c = verify::coloring_at(&coloring, &free, index);
        match gale::run(&g, &board, &c) {
            Ok(run) => {
                cross += u64::from(!run.retraction.cross_edges.is_empty());
                non_simplicial += u64::from(!run.retraction.simplicial);
                identity += u64::from(run.retraction.identity_on_s);
                disagree += u64::from(!run.agrees());
                tally.record(status_of(&run.outcome));
            }
            Err(gale::GaleError::TheoremViolation(_)) => {
                tally.record(rules::GoalStatus {
                    red: true,
                    blue: true,
                });
            }
            Err(e) => return Err(Failure::Invalid(e.to_string())),
        }
    }
    writeln!(
        out,
        "colorings={} cross_edges={cross} non_simplicial={non_simplicial} identity_on_S={identity} disagreements={disagree}",
        tally.total
    )?;
    let code = tally_exit(out, &tally)?;
    Ok(
        if code == EXIT_OK && cross + non_simplicial + identity + disagree > 0 {
            EXIT_INVALID
        } else {
            code
        },
    )
}

fn status_of(outcome: &rules::Outcome) -> rules::GoalStatus {
    rules::GoalStatus {
        red: matches!(outcome, rules::Outcome::RedWins(_)),
        blue: matches!(outcome, rules::Outcome::BlueWins(_)),
    }
}
