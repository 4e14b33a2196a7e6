//! Blocks, pass mode, on the king grid `K_{n+1,m+1}` with `m >= n`.

use crate::board::Position;

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `⌈(gcd(n,m) - 3) / 8⌉`, or 0 when the gcd is at most 3.
pub fn ladder_len(n: usize, m: usize) -> usize {
    gcd(n, m).saturating_sub(3).div_ceil(8)
}

/// Ladder blocks alternate between the bottom and top rows, two columns
/// apart, starting from `(n+1, n+1)`.
pub(super) fn blocks(n: usize, m: usize) -> Vec<Position> {
    debug_assert!(m >= n);
    (0..ladder_len(n, m))
        .map(|i| Position::new(if i % 2 == 0 { n + 1 } else { 1 }, n + 1 - 2 * i))
        .collect()
}
