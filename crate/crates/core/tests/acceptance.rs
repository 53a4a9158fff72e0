//! Acceptance gate. Prints one line per criterion and exits non-zero if any
//! criterion fails or overruns its time limit.

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cgb::cli::{run_with_judge, EXIT_OK, EXIT_VIOLATION};
use cgb::dot::export_dot;
use cgb::format::{parse_board_file, render_board_file};
use cgb::gale::{augment, run as gale_run};
use cgb::generators::{gen_hex_dual, gen_random, gen_y_dual, minimal_hex};
use cgb::reductions::{double_y_to_hex, extend_y_from_hex};
use cgb::rules::{winner, GoalStatus};
use cgb::verify::{
    coloring_at, enumerate_exhaustive, enumerate_with, selfplay, Judge, StandardJudge, Tally,
};
use cgb::{Board, Coloring};

type Check = Result<String, String>;
type Criterion = (u32, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_full(n: usize) -> impl Iterator<Item = Coloring> {
    let free: Vec<usize> = (0..n).collect();
    let empty = Coloring::empty(n);
    (0..1u64 << n).map(move |i| coloring_at(&empty, &free, i))
}

fn exact_tally(board: &Board, red: u64, blue: u64) -> Check {
    let t = enumerate_exhaustive(board, 20).map_err(|e| e.to_string())?;
    ensure(t.draws == 0 && t.double_wins == 0, || {
        format!("not compliant: {t}")
    })?;
    ensure(t.red_wins == red && t.blue_wins == blue, || {
        format!("expected red={red} blue={blue}, got {t}")
    })?;
    Ok(t.to_string())
}

fn compliant_tally(board: &Board, total: u64) -> Check {
    let t = enumerate_exhaustive(board, 20).map_err(|e| e.to_string())?;
    ensure(t.total == total && t.is_compliant(), || format!("{t}"))?;
    Ok(t.to_string())
}

fn criterion_1() -> Check {
    exact_tally(&gen_y_dual(2).map_err(|e| e.to_string())?, 4, 4)
}

fn criterion_2() -> Check {
    exact_tally(&minimal_hex(), 8, 8)
}

fn criterion_3() -> Check {
    compliant_tally(&gen_hex_dual(3, 3).map_err(|e| e.to_string())?, 512)
}

fn criterion_4() -> Check {
    compliant_tally(&gen_y_dual(4).map_err(|e| e.to_string())?, 1024)
}

fn criterion_5() -> Check {
    let y = gen_y_dual(3).map_err(|e| e.to_string())?;
    let d = double_y_to_hex(&y).map_err(|e| e.to_string())?;
    let hex = &d.hex_board;
    ensure(d.fold.is_simplicial(hex, &y), || {
        "fold is not simplicial".into()
    })?;
    ensure(d.reflect.is_simplicial(hex, hex), || {
        "reflection is not simplicial".into()
    })?;
    ensure(d.reflect_is_involution(), || {
        "reflection is not an involution".into()
    })?;
    let mut l1 = d.l1().to_vec();
    l1.sort_unstable();
    ensure(d.fixed_points() == l1, || {
        format!("fixed points {:?} differ from l1 {l1:?}", d.fixed_points())
    })?;

    let mut count = 0;
    for c in all_full(y.vertex_count()) {
        let direct = winner(&y, &c).map_err(|e| e.to_string())?;
        let via = d.y_winner(&c).map_err(|e| e.to_string())?;
        ensure(via.color() == direct.color(), || {
            format!("via hex {via}, direct {direct}")
        })?;
        let doubled = d.mirror_coloring(&c);
        let wide = winner(hex, &doubled).map_err(|e| e.to_string())?;
        let chain = wide.witness().ok_or("no hex winner on the double")?;
        ensure(l1.iter().any(|&v| chain.contains(v)), || {
            format!("{chain} avoids l1")
        })?;
        count += 1;
    }
    Ok(format!(
        "{count} colorings, double has {} vertices",
        hex.vertex_count()
    ))
}

fn criterion_6() -> Check {
    let hex = gen_hex_dual(3, 3).map_err(|e| e.to_string())?;
    let ext = extend_y_from_hex(&hex).map_err(|e| e.to_string())?;
    let mut count = 0;
    for c in all_full(hex.vertex_count()) {
        let h = winner(&hex, &c).map_err(|e| e.to_string())?;
        let y = ext.y_outcome(&c).map_err(|e| e.to_string())?;
        ensure(h.color() == y.color(), || format!("hex {h}, extended {y}"))?;
        count += 1;
    }
    Ok(format!("{count} colorings agree"))
}

fn criterion_7() -> Check {
    let hex = gen_hex_dual(3, 3).map_err(|e| e.to_string())?;
    let gale = augment(&hex).map_err(|e| e.to_string())?;
    let d = &gale.d_board;
    ensure(d.validate().ok(), || d.validate().to_string())?;
    ensure(d.euler_characteristic() == 1, || {
        format!("chi={}", d.euler_characteristic())
    })?;
    let mut count = 0;
    for c in all_full(hex.vertex_count()) {
        let r = gale_run(&gale, &hex, &c).map_err(|e| e.to_string())?;
        ensure(r.partition.is_partition_of(d.vertex_count()), || {
            "blocks do not partition D".into()
        })?;
        ensure(r.retraction.cross_edges.is_empty(), || {
            format!("cross edges {:?}", r.retraction.cross_edges)
        })?;
        ensure(r.retraction.simplicial, || {
            format!("non-simplicial {:?}", r.retraction.non_simplicial)
        })?;
        ensure(!r.retraction.identity_on_s, || "retraction fixes S".into())?;
        ensure(r.agrees(), || {
            format!("classification {}, direct {}", r.outcome, r.direct)
        })?;
        count += 1;
    }
    Ok(format!(
        "D V={} E={} T={}, {count} colorings clean",
        d.vertex_count(),
        d.edges().len(),
        d.triangles().len()
    ))
}

fn criterion_8() -> Check {
    let mut sum = Tally::default();
    let (mut three, mut four) = (0, 0);
    for seed in 0..500u64 {
        let n = 4 + (seed % 11) as usize;
        let sides = 3 + (seed % 2) as usize;
        let b = gen_random(n, sides, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let report = b.validate();
        ensure(report.ok(), || format!("seed {seed}: {report}"))?;
        ensure(b.vertex_count() <= 14, || {
            format!("seed {seed}: too many vertices")
        })?;
        let t = enumerate_exhaustive(&b, 14).map_err(|e| e.to_string())?;
        ensure(t.is_compliant(), || format!("seed {seed}: {t}"))?;
        sum += t;
        if sides == 3 {
            three += 1;
        } else {
            four += 1;
        }
    }
    Ok(format!("{three} Y + {four} Hex boards, {sum}"))
}

fn criterion_9() -> Check {
    let mut lines = Vec::new();
    for (name, board) in [
        ("hex4x4", gen_hex_dual(4, 4).map_err(|e| e.to_string())?),
        ("y5", gen_y_dual(5).map_err(|e| e.to_string())?),
    ] {
        let first = selfplay(&board, 1000, 2024).map_err(|e| e.to_string())?;
        let again = selfplay(&board, 1000, 2024).map_err(|e| e.to_string())?;
        ensure(
            first.tally.is_compliant() && first.tally.total == 1000,
            || format!("{name}: {}", first.tally),
        )?;
        ensure(first.records.iter().all(|r| r.decided_at.is_some()), || {
            format!("{name}: undecided game")
        })?;
        ensure(first == again, || {
            format!("{name}: same seed gave different records")
        })?;
        lines.push(format!("{name} {}", first.tally));
    }
    Ok(lines.join("; "))
}

fn cgb_with(args: &[&str], judge: &dyn Judge) -> i32 {
    let mut out = Vec::new();
    let mut err = Vec::new();
    run_with_judge(
        std::iter::once("cgb").chain(args.iter().copied()),
        &mut out,
        &mut err,
        judge,
    )
}

fn criterion_10() -> Check {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let read =
        |name: &str| fs::read_to_string(golden.join(name)).map_err(|e| format!("{name}: {e}"));

    for name in ["minimal_y.cgb", "minimal_hex_red02.cgb", "hex3x3.cgb"] {
        let text = read(name)?;
        let (b, c) = parse_board_file(&text).map_err(|e| e.to_string())?;
        ensure(render_board_file(&b, &c) == text, || {
            format!("{name} does not round-trip")
        })?;
    }
    let (y, yc) = parse_board_file(&read("minimal_y.cgb")?).map_err(|e| e.to_string())?;
    ensure(export_dot(&y, &yc, None) == read("minimal_y.dot")?, || {
        "minimal_y.dot differs".into()
    })?;
    let (h, hc) = parse_board_file(&read("minimal_hex_red02.cgb")?).map_err(|e| e.to_string())?;
    let w = winner(&h, &hc).map_err(|e| e.to_string())?;
    ensure(
        export_dot(&h, &hc, w.witness()) == read("minimal_hex_red02.dot")?,
        || "minimal_hex_red02.dot differs".into(),
    )?;

    // Exit 2 if and only if the judge produces a draw or a double win.
    let hex3 = golden.join("hex3x3.cgb");
    let file = hex3.to_str().ok_or("non-UTF-8 path")?;
    let board = gen_hex_dual(3, 3).map_err(|e| e.to_string())?;
    let honest = StandardJudge;
    let lone_draw = |b: &Board, c: &Coloring| {
        if c.count(cgb::Color::Red) == 0 {
            GoalStatus {
                red: false,
                blue: false,
            }
        } else {
            honest.judge(b, c)
        }
    };
    let lone_double = |b: &Board, c: &Coloring| {
        if c.count(cgb::Color::Blue) == 0 {
            GoalStatus {
                red: true,
                blue: true,
            }
        } else {
            honest.judge(b, c)
        }
    };
    let judges: [(&str, &dyn Judge); 3] = [
        ("honest", &honest),
        ("one draw", &lone_draw),
        ("one double", &lone_double),
    ];
    for (name, judge) in judges {
        let t = enumerate_with(&board, 20, judge).map_err(|e| e.to_string())?;
        let code = cgb_with(&["enumerate", file], judge);
        let expected = if t.draws > 0 || t.double_wins > 0 {
            EXIT_VIOLATION
        } else {
            EXIT_OK
        };
        ensure(code == expected, || {
            format!("{name}: tally {t} but exit {code}")
        })?;
    }
    Ok("3 round-trips, 2 DOT goldens, exit codes 0/2/2".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, criterion_1, Duration::from_millis(100)),
        (2, criterion_2, Duration::from_millis(100)),
        (3, criterion_3, Duration::from_secs(1)),
        (4, criterion_4, Duration::from_secs(1)),
        (5, criterion_5, Duration::from_secs(10)),
        (6, criterion_6, Duration::from_secs(10)),
        (7, criterion_7, Duration::from_secs(10)),
        (8, criterion_8, Duration::from_secs(60)),
        (9, criterion_9, Duration::from_secs(30)),
        (10, criterion_10, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (id, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let line = match result {
            Ok(detail) if elapsed <= limit => format!("PASS criterion {id:>2}: {detail}"),
            Ok(detail) => format!("FAIL criterion {id:>2}: {detail}, over time limit"),
            Err(why) => format!("FAIL criterion {id:>2}: {why}"),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "{line} [{:.3}s / {:.1}s]",
            elapsed.as_secs_f64(),
            limit.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
