//! Single-slide semantics for every topology and obstacle kind.
//!
//! This is the straightforward square-by-square implementation. The solver
//! uses the bit-parallel engine in [`crate::bitboard`], which is tested
//! against this one.

use std::fmt;

use thiserror::Error;

use crate::board::{Board, Position, Topology};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    N,
    S,
    E,
    W,
    NE,
    NW,
    SE,
    SW,
}

impl Direction {
    pub const ORTHOGONAL: [Direction; 4] = [Direction::N, Direction::S, Direction::E, Direction::W];
    pub const ALL: [Direction; 8] = [
        Direction::N,
        Direction::S,
        Direction::E,
        Direction::W,
        Direction::NE,
        Direction::NW,
        Direction::SE,
        Direction::SW,
    ];

    /// Directions the robot may slide in on the given topology.
    pub fn legal_for(topology: Topology) -> &'static [Direction] {
        match topology {
            Topology::King => &Self::ALL,
            Topology::Rect | Topology::Torus => &Self::ORTHOGONAL,
        }
    }

    pub fn is_diagonal(self) -> bool {
        matches!(self, Direction::NE | Direction::NW | Direction::SE | Direction::SW)
    }

    /// `(d_row, d_col)`, rows growing southwards.
    pub fn delta(self) -> (isize, isize) {
        match self {
            Direction::N => (-1, 0),
            Direction::S => (1, 0),
            Direction::E => (0, 1),
            Direction::W => (0, -1),
            Direction::NE => (-1, 1),
            Direction::NW => (-1, -1),
            Direction::SE => (1, 1),
            Direction::SW => (1, -1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::N => "N",
            Direction::S => "S",
            Direction::E => "E",
            Direction::W => "W",
            Direction::NE => "NE",
            Direction::NW => "NW",
            Direction::SE => "SE",
            Direction::SW => "SW",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one slide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlideResult {
    /// The robot came to rest at `end`. `swept` runs from the origin to
    /// `end` inclusive.
    Moved { end: Position, swept: Vec<Position> },
    /// The first step is already obstructed.
    Noop,
    /// Torus only: nothing on the cycle stops the robot. It never comes to
    /// rest, but it passes over every square of the cycle, listed in
    /// `swept` starting at the origin.
    Unbounded { swept: Vec<Position> },
}

impl SlideResult {
    pub fn end(&self) -> Option<Position> {
        match self {
            SlideResult::Moved { end, .. } => Some(*end),
            _ => None,
        }
    }

    pub fn swept(&self) -> &[Position] {
        match self {
            SlideResult::Moved { swept, .. } | SlideResult::Unbounded { swept } => swept,
            SlideResult::Noop => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{0} is outside the board")]
    OutOfBounds(Position),
    #[error("{0} is a block")]
    OnBlock(Position),
    #[error("direction {dir} is not available on {topology}")]
    IllegalDirection { dir: Direction, topology: Topology },
}

/// The square one step from `p` in direction `d`, if the robot may cross
/// into it (ignoring blocks).
fn step(board: &Board, p: Position, d: Direction) -> Option<Position> {
    let (dr, dc) = d.delta();
    let (n, m) = (board.rows(), board.cols());
    match board.topology() {
        Topology::Torus => {
            let r = (p.row as isize - 1 + dr).rem_euclid(n as isize) as usize + 1;
            let c = (p.col as isize - 1 + dc).rem_euclid(m as isize) as usize + 1;
            Some(Position::new(r, c))
        }
        Topology::Rect | Topology::King => {
            let r = p.row as isize + dr;
            let c = p.col as isize + dc;
            if r < 1 || c < 1 || r > n as isize || c > m as isize {
                return None;
            }
            let q = Position::new(r as usize, c as usize);
            let walled = match d {
                Direction::E => board.wall_east_of(p),
                Direction::W => board.wall_east_of(q),
                Direction::S => board.wall_south_of(p),
                Direction::N => board.wall_south_of(q),
                _ => false,
            };
            (!walled).then_some(q)
        }
    }
}

pub(crate) fn slide_unchecked(board: &Board, from: Position, d: Direction) -> SlideResult {
    let mut swept = vec![from];
    let mut cur = from;
    loop {
        match step(board, cur, d) {
            Some(next) if !board.is_block(next) => {
                if next == from {
                    // Wrapped all the way round a block-free torus cycle.
                    return SlideResult::Unbounded { swept };
                }
                swept.push(next);
                cur = next;
            }
            _ => break,
        }
    }
    if cur == from {
        SlideResult::Noop
    } else {
        SlideResult::Moved { end: cur, swept }
    }
}

/// Slides the robot from `from` in direction `d` until something stops it.
///
/// On rect and king boards the robot halts before a block, a wall or the
/// edge. On a torus indices wrap, so only blocks stop it; a cycle without
/// blocks yields [`SlideResult::Unbounded`]. Diagonal slides look only at
/// squares on their own ray.
pub fn slide(board: &Board, from: Position, d: Direction) -> Result<SlideResult, MoveError> {
    if !board.contains(from) {
        return Err(MoveError::OutOfBounds(from));
    }
    if board.is_block(from) {
        return Err(MoveError::OnBlock(from));
    }
    if d.is_diagonal() && board.topology() != Topology::King {
        return Err(MoveError::IllegalDirection { dir: d, topology: board.topology() });
    }
    Ok(slide_unchecked(board, from, d))
}

/// Every direction that actually moves the robot to a resting square.
pub fn legal_moves(board: &Board, from: Position) -> Result<Vec<(Direction, SlideResult)>, MoveError> {
    let mut out = Vec::new();
    for &d in Direction::legal_for(board.topology()) {
        let r = slide(board, from, d)?;
        if matches!(r, SlideResult::Moved { .. }) {
            out.push((d, r));
        }
    }
    Ok(out)
}
