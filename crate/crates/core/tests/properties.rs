use std::collections::BTreeSet;

use proptest::prelude::*;
use slidegrid::params::{gamma_t_path, gamma_t_path_closed_form, rho_path};
use slidegrid::*;

fn topology() -> impl Strategy<Value = Topology> {
    prop_oneof![Just(Topology::Rect), Just(Topology::Torus), Just(Topology::King)]
}

/// Any valid board up to 9x9, with a random start and obstacle density.
fn board() -> impl Strategy<Value = Board> {
    (topology(), 1..=9usize, 1..=9usize, any::<bool>())
        .prop_flat_map(|(t, rows, cols, walls)| {
            let walls = walls && t == Topology::Rect;
            let cells = rows * cols;
            (Just(t), Just(rows), Just(cols), Just(walls), 0..cells, prop::collection::vec(any::<u8>(), 2 * cells), 0..=60u8)
        })
        .prop_map(|(t, rows, cols, walls, start, noise, density)| {
            let start = Position::new(start / cols + 1, start % cols + 1);
            let hit = |i: usize| noise[i] % 100 < density;
            if walls {
                let mut set = BTreeSet::new();
                for r in 1..=rows {
                    for c in 1..=cols {
                        let i = 2 * ((r - 1) * cols + c - 1);
                        if c < cols && hit(i) {
                            set.insert(Wall::east_of(r, c));
                        }
                        if r < rows && hit(i + 1) {
                            set.insert(Wall::south_of(r, c));
                        }
                    }
                }
                Board::new(t, rows, cols, ObstacleSet::Walls(set), start).unwrap()
            } else {
                let blocks: BTreeSet<Position> = (0..rows * cols)
                    .filter(|&i| hit(i))
                    .map(|i| Position::new(i / cols + 1, i % cols + 1))
                    .filter(|&p| p != start)
                    .collect();
                Board::new(t, rows, cols, ObstacleSet::Blocks(blocks), start).unwrap()
            }
        })
}

fn torus_board() -> impl Strategy<Value = Board> {
    board().prop_filter("blocks on a torus", |b| b.topology() == Topology::Torus)
}

/// The square one step from `p` in `d`, if it exists and no wall is crossed.
fn step(b: &Board, p: Position, d: Direction) -> Option<Position> {
    let (dr, dc) = d.delta();
    let (n, m) = (b.rows() as isize, b.cols() as isize);
    let (mut r, mut c) = (p.row as isize + dr, p.col as isize + dc);
    if b.topology() == Topology::Torus {
        r = (r - 1).rem_euclid(n) + 1;
        c = (c - 1).rem_euclid(m) + 1;
    }
    if r < 1 || c < 1 || r > n || c > m {
        return None;
    }
    let q = Position::new(r as usize, c as usize);
    let crosses_wall = match d {
        Direction::E => b.wall_east_of(p),
        Direction::W => b.wall_east_of(q),
        Direction::S => b.wall_south_of(p),
        Direction::N => b.wall_south_of(q),
        _ => false,
    };
    (!crosses_wall && !b.is_block(q)).then_some(q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trip(b in board()) {
        let text = serialize_board(&b);
        prop_assert_eq!(parse_board(&text).unwrap(), b.clone());
        prop_assert_eq!(serialize_board(&parse_board(&text).unwrap()), text);
    }

    #[test]
    fn report_invariants(b in board()) {
        for mode in [Mode::Pass, Mode::Stop] {
            let r = verify(&b, mode);
            prop_assert!(r.stops.is_subset(&r.passed));
            prop_assert!(r.stops.contains(&b.start()));
            let covered = if mode == Mode::Pass { &r.passed } else { &r.stops };
            let missing: BTreeSet<Position> = b.free_squares().filter(|p| !covered.contains(p)).collect();
            prop_assert_eq!(&r.missing, &missing);
            prop_assert_eq!(r.complete, missing.is_empty());
        }
    }

    #[test]
    fn fast_engine_matches_reference(b in board()) {
        for mode in [Mode::Pass, Mode::Stop] {
            prop_assert_eq!(verify(&b, mode), verify_reference(&b, mode));
        }
        prop_assert_eq!(reachable_stops(&b), verify_reference(&b, Mode::Stop).stops);
    }

    #[test]
    fn stop_complete_implies_pass_complete(b in board()) {
        if verify(&b, Mode::Stop).complete {
            prop_assert!(verify(&b, Mode::Pass).complete);
        }
    }

    #[test]
    fn slides_end_against_an_obstacle(b in board()) {
        for p in reachable_stops(&b) {
            for (d, r) in legal_moves(&b, p).unwrap() {
                match r {
                    SlideResult::Moved { end, swept } => {
                        prop_assert_eq!(swept.first(), Some(&p));
                        prop_assert_eq!(swept.last(), Some(&end));
                        prop_assert!(swept.iter().all(|q| !b.is_block(*q)));
                        prop_assert_eq!(step(&b, end, d), None);
                        for w in swept.windows(2) {
                            prop_assert_eq!(step(&b, w[0], d), Some(w[1]));
                        }
                    }
                    SlideResult::Noop => prop_assert_eq!(step(&b, p, d), None),
                    SlideResult::Unbounded { swept } => {
                        prop_assert_eq!(b.topology(), Topology::Torus);
                        let len = if d.delta().0 == 0 { b.cols() } else { b.rows() };
                        prop_assert_eq!(swept.len(), len);
                    }
                }
            }
        }
    }

    #[test]
    fn walls_block_both_ways(b in board()) {
        if let Some(walls) = b.obstacles().wall_set() {
            for w in walls {
                let (a, c) = w.squares();
                let (fwd, back) = if c.row == a.row { (Direction::E, Direction::W) } else { (Direction::S, Direction::N) };
                prop_assert_eq!(slide(&b.with_start(a).unwrap(), a, fwd).unwrap(), SlideResult::Noop);
                prop_assert_eq!(slide(&b.with_start(c).unwrap(), c, back).unwrap(), SlideResult::Noop);
            }
        }
    }

    #[test]
    fn torus_translation_invariant(b in torus_board(), dr in 0..9usize, dc in 0..9usize) {
        let t = b.translated(dr, dc).unwrap();
        let shift = |p: &Position| Position::new((p.row - 1 + dr) % b.rows() + 1, (p.col - 1 + dc) % b.cols() + 1);
        for mode in [Mode::Pass, Mode::Stop] {
            let (r, s) = (verify(&b, mode), verify(&t, mode));
            prop_assert_eq!(r.complete, s.complete);
            prop_assert_eq!(r.stops.iter().map(shift).collect::<BTreeSet<_>>(), s.stops);
            prop_assert_eq!(r.passed.iter().map(shift).collect::<BTreeSet<_>>(), s.passed);
        }
    }

    #[test]
    fn transpose_preserves_verdict(b in board()) {
        let t = b.transposed();
        prop_assert_eq!(t.transposed(), b.clone());
        for mode in [Mode::Pass, Mode::Stop] {
            let (r, s) = (verify(&b, mode), verify(&t, mode));
            prop_assert_eq!(r.complete, s.complete);
            prop_assert_eq!(r.stops.len(), s.stops.len());
        }
    }

    #[test]
    fn min_moves_bounds(b in board(), target in 0..81usize) {
        let target = Position::new(target / 9 % b.rows() + 1, target % 9 % b.cols() + 1);
        prop_assume!(!b.is_block(target));
        let stops = reachable_stops(&b).len();
        for mode in [Mode::Pass, Mode::Stop] {
            let d = min_moves(&b, target, mode).unwrap();
            prop_assert_eq!(d == Some(0), target == b.start());
            if let Some(d) = d {
                prop_assert!(d <= stops * 4);
            }
            let covered = match mode {
                Mode::Pass => passed_squares(&b).contains(&target),
                Mode::Stop => reachable_stops(&b).contains(&target),
            };
            prop_assert_eq!(d.is_some(), covered);
        }
    }

    #[test]
    fn gamma_t_closed_form_matches_dp(n in 2..400usize) {
        prop_assert_eq!(gamma_t_path(n).unwrap(), gamma_t_path_closed_form(n).unwrap());
    }

    #[test]
    fn gamma_t_path_never_decreases(n in 2..2000usize) {
        prop_assert!(gamma_t_path(n).unwrap() <= gamma_t_path(n + 1).unwrap());
    }

    #[test]
    fn rho_path_is_ceiling_half(n in 2..1000usize) {
        prop_assert_eq!(rho_path(n).unwrap(), n.div_ceil(2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_respects_bounds_and_modes(
        t in prop_oneof![Just(Topology::Rect), Just(Topology::Torus)],
        rows in 1..=4usize,
        cols in 1..=4usize,
        walls in any::<bool>(),
    ) {
        let kind = if walls && t == Topology::Rect { ObstacleKind::Walls } else { ObstacleKind::Blocks };
        let opts = SolveOptions { workers: 2, ..Default::default() };
        let pass = solve_exact(&GameSpec::new(t, rows, cols, kind, Mode::Pass), &opts).unwrap();
        let stop_spec = GameSpec::new(t, rows, cols, kind, Mode::Stop);
        let stop = solve_exact(&stop_spec, &opts).unwrap();
        prop_assert_eq!(pass.status, SolveStatus::Optimal);
        prop_assert!(pass.lower_bound <= pass.optimum.unwrap());
        if let Some(s) = stop.optimum {
            prop_assert!(s >= pass.optimum.unwrap());
            prop_assert!(lower_bound(&stop_spec).value <= s);
            let w = stop.witness.unwrap();
            prop_assert_eq!(w.len(), s);
            prop_assert!(verify(&stop_spec.board(w).unwrap(), Mode::Stop).complete);
        } else {
            prop_assert_eq!(stop.status, SolveStatus::Infeasible);
        }
    }
}
