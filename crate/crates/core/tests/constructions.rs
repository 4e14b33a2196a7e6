use slidegrid::constructions::{construct, size_contract, Family};
use slidegrid::*;

#[test]
fn every_family_verifies_in_both_orientations() {
    for f in Family::ALL {
        for n in 1..=24 {
            for m in 1..=24 {
                let Ok(c) = construct(f, n, m) else {
                    assert!(f == Family::GridWs && n.min(m) == 1 && n.max(m) >= 3, "{f} {n}x{m}");
                    continue;
                };
                let (rows, cols) = if f == Family::KingBp { (n + 1, m + 1) } else { (n, m) };
                assert_eq!((c.board.rows(), c.board.cols()), (rows, cols));
                assert_eq!(c.board.start(), Position::new(1, 1));
                assert_eq!(c.board.obstacles().len(), c.claimed_size);
                assert!(verify(&c.board, f.mode()).complete, "{f} {n}x{m}");
                assert!(size_contract(f, n, m).admits(c.claimed_size) || (f == Family::GridBs && n.min(m) == 3));
            }
        }
    }
}

fn spec_for(f: Family, n: usize, m: usize) -> GameSpec {
    GameSpec::new(f.topology(), n, m, f.obstacle_kind(), f.mode())
}

#[test]
fn pass_families_are_optimal_on_small_boards() {
    let opts = SolveOptions { workers: 2, ..Default::default() };
    let cases = [(Family::GridBp, 6), (Family::TorusBp, 6), (Family::GridWp, 5)];
    for (f, max) in cases {
        for n in 1..=max {
            for m in 1..=n {
                let r = solve_exact(&spec_for(f, n, m), &opts).unwrap();
                assert_eq!(r.status, SolveStatus::Optimal, "{f} {n}x{m}");
                assert_eq!(Some(construct(f, n, m).unwrap().claimed_size), r.optimum, "{f} {n}x{m}");
            }
        }
    }
}

#[test]
fn narrow_stop_layouts_are_optimal() {
    let opts = SolveOptions { workers: 2, ..Default::default() };
    for (f, m, max) in [(Family::GridBs, 1, 6), (Family::GridBs, 2, 7), (Family::GridBs, 3, 7), (Family::GridWs, 2, 6)] {
        for n in m..=max {
            let r = solve_exact(&spec_for(f, n, m), &opts).unwrap();
            assert_eq!(Some(construct(f, n, m).unwrap().claimed_size), r.optimum, "{f} {n}x{m}");
        }
    }
}

#[test]
fn stop_families_respect_lower_bounds() {
    for f in [Family::GridBs, Family::GridWs] {
        for n in 3..=30 {
            for m in 3..=n {
                let c = construct(f, n, m).unwrap();
                assert!(lower_bound(&spec_for(f, n, m)).value <= c.claimed_size, "{f} {n}x{m}");
            }
        }
    }
}

#[test]
fn torus_layouts_survive_translation() {
    for m in 1..=14 {
        for n in m..=14 {
            let c = construct(Family::TorusBp, n, m).unwrap();
            for (dr, dc) in [(1, 0), (0, 1), (n / 2, m / 2)] {
                assert!(verify(&c.board.translated(dr, dc).unwrap(), Mode::Pass).complete, "{n}x{m}");
            }
        }
    }
}

#[test]
fn king_ladder_lengths() {
    for n in 1..=40 {
        for m in 1..=40 {
            let c = construct(Family::KingBp, n, m).unwrap();
            let g = gcd(n, m);
            assert_eq!(c.claimed_size, if g <= 3 { 0 } else { (g - 3).div_ceil(8) }, "{n}x{m}");
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
