//! Walls, pass mode, on `G_{n,m}` with `n >= m`.
//!
//! Copies of an `n × 4` pattern start at column 2, each holding one wall
//! east of its first column in the top row and one east of its third
//! column in the bottom row. The last copy is cut at column `m - 1`; a
//! wall survives as long as it still separates two squares of the board.

use crate::board::Wall;

pub(super) fn walls(n: usize, m: usize) -> Vec<Wall> {
    debug_assert!(n >= m);
    match m {
        0..=2 => Vec::new(),
        3 => vec![Wall::east_of(1, 2)],
        _ => {
            let mut out = Vec::new();
            let mut first = 2;
            while first < m {
                out.push(Wall::east_of(1, first));
                if first + 2 < m {
                    out.push(Wall::east_of(n, first + 2));
                }
                first += 4;
            }
            out
        }
    }
}
