//! Walls, stop mode, on `G_{n,m}`.
//!
//! Inner walls come from two seeds, east of `(2,2)` and south of `(3,2)`,
//! translated by `(1,1)`, `(0,4)` and `(4,0)`; every inner square gets
//! exactly one. Walls between an inner and a border square get a partner
//! on the border, plus a fixed wall south of `(2,1)` and two conditional
//! corner walls.

use std::collections::BTreeSet;

use crate::board::Wall;

/// `n, m >= 3`.
pub fn lattice_walls(n: usize, m: usize) -> BTreeSet<Wall> {
    assert!(n >= 3 && m >= 3);
    let inner = |i: usize, j: usize| (2..n).contains(&i) && (2..m).contains(&j);
    let mut w1 = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=m {
            let d = (i + 4 * m - j) % 4;
            if j < m && d == 0 && (inner(i, j) || inner(i, j + 1)) {
                w1.insert(Wall::east_of(i, j));
            }
            if i < n && d == 1 && (inner(i, j) || inner(i + 1, j)) {
                w1.insert(Wall::south_of(i, j));
            }
        }
    }
    let mut out = w1.clone();
    for w in &w1 {
        let (i, j) = (w.anchor.row, w.anchor.col);
        match w.side {
            crate::board::WallSide::SouthOf if i == 1 => {
                out.insert(Wall::east_of(1, j));
            }
            crate::board::WallSide::SouthOf if i == n - 1 => {
                out.insert(Wall::east_of(n, j - 1));
            }
            crate::board::WallSide::EastOf if j == 1 => {
                out.insert(Wall::south_of(i, 1));
            }
            crate::board::WallSide::EastOf if j == m - 1 => {
                out.insert(Wall::south_of(i - 1, m));
            }
            _ => {}
        }
    }
    out.insert(Wall::south_of(2, 1));
    if w1.contains(&Wall::south_of(n - 2, m - 1)) {
        out.insert(Wall::east_of(n, m - 2));
    }
    if w1.contains(&Wall::east_of(n - 1, m - 2)) {
        out.insert(Wall::south_of(n - 2, m));
    }
    out
}

/// `n >= m`; `None` when no wall placement exists.
pub(super) fn walls(n: usize, m: usize) -> Option<Vec<Wall>> {
    match (n, m) {
        (_, 1) if n <= 2 => Some(Vec::new()),
        (_, 1) => None,
        (_, 2) => Some(two_columns(n)),
        // On three columns the lattice strands an inner square when
        // n ≡ 2 (mod 4); laid out across the rows instead it works unless n ≡ 1.
        (_, 3) if n % 4 != 1 => Some(lattice_walls(3, n).into_iter().map(|w| w.transposed()).collect()),
        _ => Some(lattice_walls(n, m).into_iter().collect()),
    }
}

/// `⌊(n-1)/2⌋` walls, every other row, alternating columns and ending
/// just above the last row (optimal up to at least `n = 7`).
fn two_columns(n: usize) -> Vec<Wall> {
    let first = if n % 2 == 1 { 1 } else { 2 };
    (first..n - 1).step_by(2).enumerate().map(|(k, r)| Wall::south_of(r, 1 + k % 2)).collect()
}
