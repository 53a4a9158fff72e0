use cgb::generators::{gen_hex_dual, gen_random, gen_y_dual};
use cgb::reductions::{double_y_to_hex, extend_y_from_hex};
use cgb::rules::{goals, winner};
use cgb::verify::swap_goals;
use cgb::{Board, Color, Coloring};
use proptest::prelude::*;

fn board() -> impl Strategy<Value = Board> {
    (4usize..=14, 3usize..=4, any::<u64>()).prop_map(|(n, k, seed)| gen_random(n, k, seed).unwrap())
}

fn full_coloring(n: usize) -> impl Strategy<Value = Coloring> {
    proptest::collection::vec(any::<bool>(), n).prop_map(|bits| {
        Coloring::from_cells(
            bits.into_iter()
                .map(|red| Some(if red { Color::Red } else { Color::Blue }))
                .collect(),
        )
    })
}

fn board_and_coloring() -> impl Strategy<Value = (Board, Coloring)> {
    board().prop_flat_map(|b| {
        let n = b.vertex_count();
        (Just(b), full_coloring(n))
    })
}

proptest! {
    #[test]
    fn exactly_one_winner((b, c) in board_and_coloring()) {
        let g = goals(&b, &c);
        prop_assert!(g.red ^ g.blue);
        let outcome = winner(&b, &c).unwrap();
        prop_assert!(outcome.witness().unwrap().is_chain_on(&b, &c));
    }

    #[test]
    fn recoloring_toward_the_winner_keeps_the_win(
        (b, c) in board_and_coloring(),
        v in any::<prop::sample::Index>(),
    ) {
        let w = winner(&b, &c).unwrap().color().unwrap();
        let mut more = c.clone();
        more.set(v.index(b.vertex_count()), Some(w));
        prop_assert_eq!(winner(&b, &more).unwrap().color(), Some(w));
    }

    #[test]
    fn goals_are_monotone_in_partial_colorings(
        (b, c) in board_and_coloring(),
        mask in proptest::collection::vec(any::<bool>(), 14),
    ) {
        let mut partial = c.clone();
        for (v, erase) in mask.iter().enumerate().take(b.vertex_count()) {
            if *erase {
                partial.set(v, None);
            }
        }
        let before = goals(&b, &partial);
        let after = goals(&b, &c);
        prop_assert!(!before.red || after.red);
        prop_assert!(!before.blue || after.blue);
    }

    #[test]
    fn color_swap_with_swapped_goals((b, c) in board_and_coloring()) {
        let swapped = swap_goals(&b);
        let before = winner(&b, &c).unwrap().color().unwrap();
        let after = winner(&swapped, &c.swapped()).unwrap().color().unwrap();
        prop_assert_eq!(after, before.other());
    }

    #[test]
    fn reflection_is_an_involution_fixing_l1(n in 2usize..=7) {
        let y = gen_y_dual(n).unwrap();
        let d = double_y_to_hex(&y).unwrap();
        prop_assert!(d.reflect_is_involution());
        let mut l1 = d.l1().to_vec();
        l1.sort_unstable();
        prop_assert_eq!(d.fixed_points(), l1);
        prop_assert!(d.reflect.is_simplicial(&d.hex_board, &d.hex_board));
        prop_assert!(d.fold.is_simplicial(&d.hex_board, &y));
    }

    #[test]
    fn reflection_on_random_y_boards(seed in any::<u64>(), n in 4usize..=14) {
        let y = gen_random(n, 3, seed).unwrap();
        if let Ok(d) = double_y_to_hex(&y) {
            prop_assert!(d.reflect_is_involution());
            prop_assert!(d.hex_board.validate().ok());
            prop_assert_eq!(d.hex_board.vertex_count(), 2 * n - d.l1().len());
        }
    }

    #[test]
    fn doubling_agrees_with_direct_y(n in 2usize..=5, seed in any::<u64>()) {
        let y = gen_y_dual(n).unwrap();
        let c = Coloring::from_cells(
            (0..y.vertex_count())
                .map(|v| Some(if (seed >> (v % 64)) & 1 == 1 { Color::Red } else { Color::Blue }))
                .collect(),
        );
        let d = double_y_to_hex(&y).unwrap();
        prop_assert_eq!(d.y_winner(&c).unwrap().color(), winner(&y, &c).unwrap().color());
    }

    #[test]
    fn extension_agrees_on_lattices(rows in 2usize..=5, cols in 2usize..=5, seed in any::<u64>()) {
        let hex = gen_hex_dual(rows, cols).unwrap();
        let ext = extend_y_from_hex(&hex).unwrap();
        let c = Coloring::from_cells(
            (0..hex.vertex_count())
                .map(|v| Some(if (seed >> (v % 64)) & 1 == 1 { Color::Red } else { Color::Blue }))
                .collect(),
        );
        prop_assert_eq!(ext.y_outcome(&c).unwrap().color(), winner(&hex, &c).unwrap().color());
    }

    #[test]
    fn extension_of_random_hex_is_a_disk(n in 4usize..=14, seed in any::<u64>()) {
        let hex = gen_random(n, 4, seed).unwrap();
        let ext = extend_y_from_hex(&hex).unwrap();
        prop_assert!(ext.y_board.validate().ok(), "{}", ext.y_board.validate());
        prop_assert_eq!(ext.y_board.vertex_count(), n + 2);
    }
}
