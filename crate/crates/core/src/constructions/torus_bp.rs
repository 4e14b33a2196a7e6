//! Blocks, pass mode, on the torus `T_{n,m}` with `n >= m`.
//!
//! For `m >= 6` a base solution on `T_{s,s}` (`6 <= s <= 13`) is grown by
//! steps of 8: eight new rows and columns are appended, and the `4 × 8`
//! pattern goes just below the lowest block, in the new columns. Starting
//! the pattern right after the rightmost block instead strands an empty
//! column whenever that block is not in the last column. Extra rows for
//! `n > m` are appended empty,
//! and the result is translated so the robot starts at `(1,1)`. All
//! positions on a torus are equivalent, so translation is free.

use crate::board::Position;

const PATTERN: [(usize, usize); 4] = [(1, 3), (2, 7), (3, 2), (4, 6)];

struct Base {
    size: usize,
    blocks: &'static [(usize, usize)],
    start: (usize, usize),
    /// Row and column deleted to get the even size below.
    gray: (usize, usize),
}

const BASES: [Base; 4] = [
    Base { size: 7, blocks: &[(3, 2), (4, 5), (2, 6)], start: (1, 2), gray: (7, 7) },
    Base { size: 9, blocks: &[(2, 4), (3, 8), (4, 3), (5, 7)], start: (2, 1), gray: (1, 2) },
    Base { size: 11, blocks: &[(2, 2), (3, 6), (4, 10), (5, 5), (6, 9)], start: (3, 2), gray: (1, 1) },
    Base {
        size: 13,
        blocks: &[(4, 3), (2, 4), (5, 8), (6, 12), (7, 7), (8, 11)],
        start: (2, 1),
        gray: (1, 2),
    },
];

/// Blocks and start for `T_{s,s}`, `6 <= s <= 13`, in the frame of the base figure.
fn base(s: usize) -> (Vec<(usize, usize)>, (usize, usize)) {
    let b = BASES.iter().find(|b| b.size == s || b.size == s + 1).expect("base size in 6..=13");
    if b.size == s {
        return (b.blocks.to_vec(), b.start);
    }
    let (gr, gc) = b.gray;
    let drop = |(r, c): (usize, usize)| {
        debug_assert!(r != gr && c != gc);
        (if r > gr { r - 1 } else { r }, if c > gc { c - 1 } else { c })
    };
    (b.blocks.iter().copied().map(drop).collect(), drop(b.start))
}

/// Blocks and start for `T_{m,m}`, `m >= 6`.
fn square(m: usize) -> (Vec<(usize, usize)>, (usize, usize)) {
    let s = 6 + (m - 6) % 8;
    let (mut blocks, start) = base(s);
    let mut size = s;
    for _ in 0..(m - s) / 8 {
        let i = blocks.iter().map(|b| b.0).max().unwrap();
        blocks.extend(PATTERN.iter().map(|&(r, c)| (i + r, size + c)));
        size += 8;
    }
    (blocks, start)
}

/// Shifts so `start` lands on `(1,1)` on an `n × m` torus.
fn normalise(blocks: &[(usize, usize)], start: (usize, usize), n: usize, m: usize) -> Vec<Position> {
    blocks
        .iter()
        .map(|&(r, c)| Position::new((r + n - start.0) % n + 1, (c + m - start.1) % m + 1))
        .collect()
}

/// Three blocks for `m = 3`.
const THREE: [(usize, usize); 3] = [(1, 2), (2, 1), (3, 3)];

/// Three blocks for `m` in 4..=5 (and extra empty rows).
const SMALL: [(usize, usize); 3] = [(1, 3), (2, 4), (3, 2)];

pub(super) fn blocks(n: usize, m: usize) -> Vec<Position> {
    debug_assert!(n >= m);
    let out = match m {
        1 => Vec::new(),
        2 => match n {
            2 => vec![Position::new(2, 2)],
            // n - 2 blocks are not enough here: one block leaves a row the robot sweeps but never turns in.
            3 => vec![Position::new(2, 1), Position::new(2, 2)],
            _ => std::iter::once(Position::new(3, 1))
                .chain(std::iter::once(3).chain(5..=n).map(|r| Position::new(r, 2)))
                .collect(),
        },
        3 => THREE.iter().map(|&(r, c)| Position::new(r, c)).collect(),
        4 | 5 => SMALL.iter().map(|&(r, c)| Position::new(r, c)).collect(),
        _ => {
            let (blocks, start) = square(m);
            normalise(&blocks, start, n, m)
        }
    };
    out
}

