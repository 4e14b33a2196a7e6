//! Blocks, stop mode, on `G_{n,m}`.
//!
//! The base layer is the lattice `{(i, j) : 3i + j ≡ 0 (mod 5)}`, which
//! dominates every inner square exactly once. Blocks of that lattice next
//! to the border get a partner on the border so the robot can get in and
//! out, and three corner rules close the remaining gaps.

use std::collections::BTreeSet;

use crate::board::Position;

/// Where the partner of a lattice block in row `n - 1` goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BottomRule {
    /// Straight below, at `(n, j)`.
    #[default]
    Below,
    /// Diagonally, at `(n, j - 1)`.
    BelowLeft,
}

fn lattice(i: usize, j: usize) -> bool {
    (3 * i + j).is_multiple_of(5)
}

/// The lattice, border and corner rules for `n, m >= 3`.
pub fn lattice_blocks(n: usize, m: usize, bottom: BottomRule) -> BTreeSet<Position> {
    assert!(n >= 3 && m >= 3);
    let p = Position::new;
    let inner = |i: usize, j: usize| (2..n).contains(&i) && (2..m).contains(&j);
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=m {
            if !lattice(i, j) {
                continue;
            }
            out.insert(p(i, j));
            if !inner(i, j) {
                continue;
            }
            if i == 2 {
                out.insert(p(1, j));
            }
            if i == n - 1 {
                out.insert(match bottom {
                    BottomRule::Below => p(n, j),
                    BottomRule::BelowLeft => p(n, j - 1),
                });
            }
            if j == 2 {
                out.insert(p(i, 1));
            }
            if j == m - 1 {
                out.insert(p(i, m));
            }
        }
    }
    debug_assert_eq!(out.contains(&p(2, m - 1)), m.is_multiple_of(5));
    for (cond, add) in [((2, m - 1), (1, m)), ((n - 1, 2), (n, 1)), ((n - 1, m - 1), (n, m))] {
        if out.contains(&p(cond.0, cond.1)) {
            out.insert(p(add.0, add.1));
        }
    }
    out
}

/// `n >= m`. The lattice needs an inner region at least two squares wide;
/// narrower boards use layouts found by the exact solver.
pub(super) fn blocks(n: usize, m: usize) -> Vec<Position> {
    match m {
        1 => full_rows(3, n, 1),
        2 if n == 2 => Vec::new(),
        2 => narrow(n, 2, &[(1, 2), (4, 1)], 5),
        3 if n == 4 => vec![Position::new(2, 1), Position::new(3, 3)],
        3 => narrow(n, 3, &[(1, 2), (3, 1), (4, 3), (6, 2)], 7),
        _ => lattice_blocks(n, m, BottomRule::Below).into_iter().collect(),
    }
}

/// On one to three columns the robot cannot be steered arbitrarily far
/// down, so everything from row `fill` on is blocked.
fn narrow(n: usize, m: usize, head: &[(usize, usize)], fill: usize) -> Vec<Position> {
    let mut out: Vec<Position> = head.iter().filter(|p| p.0 <= n).map(|&(r, c)| Position::new(r, c)).collect();
    out.extend(full_rows(fill, n, m));
    out
}

fn full_rows(from: usize, n: usize, m: usize) -> Vec<Position> {
    (from..=n).flat_map(|r| (1..=m).map(move |c| Position::new(r, c))).collect()
}
