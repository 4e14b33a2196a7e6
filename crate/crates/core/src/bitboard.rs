//! Bit-parallel exploration for rect and torus boards up to 64x64.
//!
//! Each row and column is a `u64`; a slide is a couple of masks and a
//! trailing/leading-zero count. One [`BitEngine`] is reused across many
//! placements by the solver, so loading obstacles and exploring never
//! allocates.

use crate::board::{Board, ObstacleSet, Position, Topology, Wall, WallSide};

pub(crate) const MAX_SIDE: usize = 64;

#[inline]
fn below(c: usize) -> u64 {
    // bits < c
    if c >= 64 {
        !0
    } else {
        (1u64 << c) - 1
    }
}

#[inline]
fn upto(c: usize) -> u64 {
    // bits <= c
    below(c + 1)
}

#[inline]
fn span(a: usize, b: usize) -> u64 {
    upto(b) & !below(a)
}

#[inline]
fn highest(x: u64) -> usize {
    63 - x.leading_zeros() as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LineSlide {
    Noop,
    Stop { at: usize, cover: u64 },
    Unbounded { cover: u64 },
}

/// Slide along one line of `len` cells from `pos`.
///
/// `blocks` marks blocked cells, `walls` bit `i` a wall between cell `i` and
/// `i + 1`. `forward` means increasing index.
#[inline]
pub(crate) fn line_slide(blocks: u64, walls: u64, len: usize, pos: usize, forward: bool, wrap: bool) -> LineSlide {
    if !wrap {
        let at = if forward {
            let stopper = (blocks >> 1) | walls | (1u64 << (len - 1));
            (stopper & !below(pos)).trailing_zeros() as usize
        } else {
            let stopper = (blocks << 1) | (walls << 1) | 1;
            highest(stopper & upto(pos))
        };
        return if at == pos {
            LineSlide::Noop
        } else if forward {
            LineSlide::Stop { at, cover: span(pos, at) }
        } else {
            LineSlide::Stop { at, cover: span(at, pos) }
        };
    }
    if blocks == 0 {
        return LineSlide::Unbounded { cover: below(len) };
    }
    if forward {
        let higher = blocks & !upto(pos);
        if higher != 0 {
            let b = higher.trailing_zeros() as usize;
            if b == pos + 1 {
                return LineSlide::Noop;
            }
            return LineSlide::Stop { at: b - 1, cover: span(pos, b - 1) };
        }
        let b = blocks.trailing_zeros() as usize;
        if b == 0 {
            if pos == len - 1 {
                return LineSlide::Noop;
            }
            return LineSlide::Stop { at: len - 1, cover: span(pos, len - 1) };
        }
        LineSlide::Stop { at: b - 1, cover: span(pos, len - 1) | span(0, b - 1) }
    } else {
        let lower = blocks & below(pos);
        if lower != 0 {
            let b = highest(lower);
            if b + 1 == pos {
                return LineSlide::Noop;
            }
            return LineSlide::Stop { at: b + 1, cover: span(b + 1, pos) };
        }
        let b = highest(blocks);
        if b == len - 1 {
            if pos == 0 {
                return LineSlide::Noop;
            }
            return LineSlide::Stop { at: 0, cover: span(0, pos) };
        }
        LineSlide::Stop { at: b + 1, cover: span(0, pos) | span(b + 1, len - 1) }
    }
}

/// Reusable exploration state for one board shape.
#[derive(Debug, Clone)]
pub(crate) struct BitEngine {
    rows: usize,
    cols: usize,
    torus: bool,
    row_blocks: Vec<u64>,
    col_blocks: Vec<u64>,
    east_walls: Vec<u64>,
    south_walls: Vec<u64>,
    seen: Vec<u64>,
    row_cov: Vec<u64>,
    col_cov: Vec<u64>,
    queue: Vec<(u8, u8)>,
}

impl BitEngine {
    pub(crate) fn supports(topology: Topology, rows: usize, cols: usize) -> bool {
        topology != Topology::King && rows <= MAX_SIDE && cols <= MAX_SIDE
    }

    pub(crate) fn new(topology: Topology, rows: usize, cols: usize) -> Self {
        assert!(Self::supports(topology, rows, cols), "bit engine needs a rect/torus board of side <= 64");
        Self {
            rows,
            cols,
            torus: topology == Topology::Torus,
            row_blocks: vec![0; rows],
            col_blocks: vec![0; cols],
            east_walls: vec![0; rows],
            south_walls: vec![0; cols],
            seen: vec![0; rows],
            row_cov: vec![0; rows],
            col_cov: vec![0; cols],
            queue: Vec::with_capacity(rows * cols),
        }
    }

    pub(crate) fn for_board(board: &Board) -> Self {
        let mut e = Self::new(board.topology(), board.rows(), board.cols());
        e.load(board.obstacles());
        e
    }

    pub(crate) fn clear(&mut self) {
        self.row_blocks.fill(0);
        self.col_blocks.fill(0);
        self.east_walls.fill(0);
        self.south_walls.fill(0);
    }

    pub(crate) fn load(&mut self, obstacles: &ObstacleSet) {
        self.clear();
        match obstacles {
            ObstacleSet::Blocks(b) => b.iter().for_each(|&p| self.set_block(p.row - 1, p.col - 1)),
            ObstacleSet::Walls(w) => w.iter().for_each(|&w| self.set_wall(w)),
        }
    }

    /// 0-based.
    #[inline]
    pub(crate) fn set_block(&mut self, r: usize, c: usize) {
        self.row_blocks[r] |= 1 << c;
        self.col_blocks[c] |= 1 << r;
    }

    #[inline]
    pub(crate) fn set_wall(&mut self, w: Wall) {
        let (r, c) = (w.anchor.row - 1, w.anchor.col - 1);
        match w.side {
            WallSide::EastOf => self.east_walls[r] |= 1 << c,
            WallSide::SouthOf => self.south_walls[c] |= 1 << r,
        }
    }

    #[inline]
    fn is_block(&self, r: usize, c: usize) -> bool {
        self.row_blocks[r] >> c & 1 == 1
    }

    /// Breadth-first closure of resting squares from `start` (0-based),
    /// recording every swept square.
    pub(crate) fn explore(&mut self, start: (usize, usize)) {
        debug_assert!(!self.is_block(start.0, start.1));
        self.seen.fill(0);
        self.row_cov.fill(0);
        self.col_cov.fill(0);
        self.queue.clear();
        self.seen[start.0] |= 1 << start.1;
        self.queue.push((start.0 as u8, start.1 as u8));
        let mut head = 0;
        while head < self.queue.len() {
            let (r, c) = self.queue[head];
            let (r, c) = (r as usize, c as usize);
            head += 1;
            for forward in [false, true] {
                match line_slide(self.row_blocks[r], self.east_walls[r], self.cols, c, forward, self.torus) {
                    LineSlide::Noop => {}
                    LineSlide::Unbounded { cover } => self.row_cov[r] |= cover,
                    LineSlide::Stop { at, cover } => {
                        self.row_cov[r] |= cover;
                        if self.seen[r] >> at & 1 == 0 {
                            self.seen[r] |= 1 << at;
                            self.queue.push((r as u8, at as u8));
                        }
                    }
                }
                match line_slide(self.col_blocks[c], self.south_walls[c], self.rows, r, forward, self.torus) {
                    LineSlide::Noop => {}
                    LineSlide::Unbounded { cover } => self.col_cov[c] |= cover,
                    LineSlide::Stop { at, cover } => {
                        self.col_cov[c] |= cover;
                        if self.seen[at] >> c & 1 == 0 {
                            self.seen[at] |= 1 << c;
                            self.queue.push((at as u8, c as u8));
                        }
                    }
                }
            }
        }
    }

    #[inline]
    fn free_row(&self, r: usize) -> u64 {
        !self.row_blocks[r] & below(self.cols)
    }

    /// Squares swept (or rested on) in row `r` after [`explore`](Self::explore).
    fn passed_row(&self, r: usize) -> u64 {
        let mut bits = self.row_cov[r] | self.seen[r];
        for c in 0..self.cols {
            bits |= (self.col_cov[c] >> r & 1) << c;
        }
        bits
    }

    pub(crate) fn stop_complete(&self) -> bool {
        (0..self.rows).all(|r| self.free_row(r) & !self.seen[r] == 0)
    }

    pub(crate) fn pass_complete(&self) -> bool {
        (0..self.rows).all(|r| self.free_row(r) & !self.passed_row(r) == 0)
    }

    pub(crate) fn stops(&self) -> Vec<Position> {
        self.collect(|r| self.seen[r])
    }

    pub(crate) fn passed(&self) -> Vec<Position> {
        self.collect(|r| self.passed_row(r))
    }

    fn collect(&self, row_bits: impl Fn(usize) -> u64) -> Vec<Position> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            let mut bits = row_bits(r);
            while bits != 0 {
                let c = bits.trailing_zeros() as usize;
                out.push(Position::new(r + 1, c + 1));
                bits &= bits - 1;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rect_line() {
        // ..#.. sliding right from 0 stops at 1
        assert_eq!(line_slide(0b00100, 0, 5, 0, true, false), LineSlide::Stop { at: 1, cover: 0b11 });
        assert_eq!(line_slide(0b00100, 0, 5, 1, true, false), LineSlide::Noop);
        assert_eq!(line_slide(0b00100, 0, 5, 4, false, false), LineSlide::Stop { at: 3, cover: 0b11000 });
        // wall between 1 and 2
        assert_eq!(line_slide(0, 0b10, 5, 0, true, false), LineSlide::Stop { at: 1, cover: 0b11 });
        assert_eq!(line_slide(0, 0b10, 5, 4, false, false), LineSlide::Stop { at: 2, cover: 0b11100 });
        assert_eq!(line_slide(0, 0, 64, 0, true, false), LineSlide::Stop { at: 63, cover: !0 });
    }

    #[test]
    fn torus_line() {
        assert_eq!(line_slide(0, 0, 5, 2, true, true), LineSlide::Unbounded { cover: 0b11111 });
        // block at 1, from 3 forward wraps to stop at 0
        assert_eq!(line_slide(0b00010, 0, 5, 3, true, true), LineSlide::Stop { at: 0, cover: 0b11001 });
        // block at 0, from 3 forward stops at 4
        assert_eq!(line_slide(0b00001, 0, 5, 3, true, true), LineSlide::Stop { at: 4, cover: 0b11000 });
        assert_eq!(line_slide(0b00001, 0, 5, 4, true, true), LineSlide::Noop);
        // block at 3, from 1 backward wraps to stop at 4
        assert_eq!(line_slide(0b01000, 0, 5, 1, false, true), LineSlide::Stop { at: 4, cover: 0b10011 });
        // block at 4, from 2 backward stops at 0
        assert_eq!(line_slide(0b10000, 0, 5, 2, false, true), LineSlide::Stop { at: 0, cover: 0b00111 });
        assert_eq!(line_slide(0b10000, 0, 5, 0, false, true), LineSlide::Noop);
        assert_eq!(line_slide(0b00100, 0, 5, 3, false, true), LineSlide::Noop);
    }
}
