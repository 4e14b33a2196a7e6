//! Blocks, pass mode, on `G_{n,m}` with `n >= m`.
//!
//! Column 1 stays empty. Columns from 2 on are tiled with copies of an
//! `n × 8` pattern, and the columns left over are filled by one of the
//! residue patterns below. Every pattern lives in rows `1, 2, n-1, n`.

use crate::board::Position;

/// Pattern rows, resolved against the board height.
#[derive(Debug, Clone, Copy)]
enum Row {
    Top,
    Second,
    Penultimate,
    Bottom,
}

use Row::*;

impl Row {
    fn resolve(self, n: usize) -> usize {
        match self {
            Top => 1,
            Second => 2,
            Penultimate => n - 1,
            Bottom => n,
        }
    }
}

/// Blocks of a pattern as `(row, column within the pattern)`.
type Pattern = &'static [(Row, usize)];

const COPY: Pattern = &[(Top, 2), (Bottom, 3), (Second, 6), (Penultimate, 7)];

/// Residue pattern for a given width.
fn residue(width: usize) -> Pattern {
    match width {
        4 | 5 => &[(Top, 2), (Bottom, 3)],
        6 => &[(Top, 2), (Bottom, 3), (Second, 6)],
        7 => &[(Top, 2), (Bottom, 3), (Second, 6), (Penultimate, 7)],
        8 => &[(Top, 2), (Bottom, 3), (Top, 6), (Penultimate, 7)],
        10 => &[(Top, 2), (Bottom, 3), (Penultimate, 6), (Top, 7), (Bottom, 10)],
        11 => &[(Top, 2), (Bottom, 3), (Penultimate, 6), (Top, 7), (Second, 10), (Bottom, 11)],
        17 => &[
            (Top, 2),
            (Bottom, 3),
            (Top, 6),
            (Penultimate, 7),
            (Bottom, 10),
            (Second, 11),
            (Bottom, 14),
            (Top, 15),
        ],
        _ => unreachable!("no residue pattern of width {width}"),
    }
}

fn place(out: &mut Vec<Position>, pattern: Pattern, first_col: usize, n: usize) {
    out.extend(pattern.iter().map(|&(r, c)| Position::new(r.resolve(n), first_col + c - 1)));
}

pub(super) fn blocks(n: usize, m: usize) -> Vec<Position> {
    debug_assert!(n >= m);
    let mut out = Vec::new();
    match m {
        0..=2 => {}
        3 => out.push(Position::new(n, 3)),
        4 => out.extend([Position::new(n, 3), Position::new(1, 4)]),
        10 => place(&mut out, residue(10), 1, n),
        _ => {
            let width = match (m - 2) % 8 {
                0 => 17,
                1 => 10,
                2 => 11,
                r => r + 1,
            };
            let copies = (m - 1 - width) / 8;
            for k in 0..copies {
                place(&mut out, COPY, 2 + 8 * k, n);
            }
            place(&mut out, residue(width), 2 + 8 * copies, n);
        }
    }
    out
}
