//! Explicit obstacle placements for every family, checked by the verifier.
//!
//! Families are defined for `n >= m`; other shapes are built transposed and
//! flipped back (the start `(1,1)` is fixed by the transpose). The stop-mode
//! block family is the exception: its lattice rules work on any shape with
//! both sides at least 4, so those boards are built as asked.

mod grid_bp;
mod grid_bs;
mod grid_wp;
mod grid_ws;
mod king_bp;
mod torus_bp;

use std::fmt;

use thiserror::Error;

pub use grid_bs::{lattice_blocks, BottomRule};
pub use grid_ws::lattice_walls;
pub use king_bp::ladder_len;

use crate::board::{Board, ObstacleKind, ObstacleSet, Position, Topology};
use crate::params::{gamma_grid, gamma_t_path, rho_grid, rho_path};
use crate::verify::Mode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    GridBp,
    TorusBp,
    KingBp,
    GridBs,
    GridWp,
    GridWs,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::GridBp, Family::TorusBp, Family::KingBp, Family::GridBs, Family::GridWp, Family::GridWs];

    pub fn name(self) -> &'static str {
        match self {
            Family::GridBp => "grid_bp",
            Family::TorusBp => "torus_bp",
            Family::KingBp => "king_bp",
            Family::GridBs => "grid_bs",
            Family::GridWp => "grid_wp",
            Family::GridWs => "grid_ws",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn mode(self) -> Mode {
        match self {
            Family::GridBs | Family::GridWs => Mode::Stop,
            _ => Mode::Pass,
        }
    }

    pub fn topology(self) -> Topology {
        match self {
            Family::TorusBp => Topology::Torus,
            Family::KingBp => Topology::King,
            _ => Topology::Rect,
        }
    }

    pub fn obstacle_kind(self) -> ObstacleKind {
        match self {
            Family::GridWp | Family::GridWs => ObstacleKind::Walls,
            _ => ObstacleKind::Blocks,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub family: Family,
    pub board: Board,
    pub claimed_size: usize,
}

/// What a family promises about its size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SizeContract {
    Exact(usize),
    /// Inclusive bounds.
    Between { lower: usize, upper: f64 },
    /// No closed form applies at this shape.
    Unbounded,
}

impl SizeContract {
    pub fn admits(&self, size: usize) -> bool {
        match *self {
            SizeContract::Exact(k) => size == k,
            SizeContract::Between { lower, upper } => size >= lower && size as f64 <= upper,
            SizeContract::Unbounded => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("dimensions must be positive")]
    EmptyBoard,
    #[error("{family} has no placement on {n}x{m}: {reason}")]
    Infeasible { family: Family, n: usize, m: usize, reason: &'static str },
}

/// Builds the placement for `family` on an `n × m` board (for the king
/// family, on `K_{n+1,m+1}`), robot at `(1,1)`.
pub fn construct(family: Family, n: usize, m: usize) -> Result<Construction, ConstructError> {
    if n == 0 || m == 0 {
        return Err(ConstructError::EmptyBoard);
    }
    let transpose = match family {
        // The ladder is laid out along the longer side, which is the columns.
        Family::KingBp => n > m,
        Family::GridBs if n >= 4 && m >= 4 => false,
        _ => n < m,
    };
    let (a, b) = if transpose { (m, n) } else { (n, m) };
    let infeasible = |reason| ConstructError::Infeasible { family, n, m, reason };
    let (rows, cols) = if family == Family::KingBp { (a + 1, b + 1) } else { (a, b) };
    let obstacles = match family {
        Family::GridBp => ObstacleSet::Blocks(grid_bp::blocks(a, b).into_iter().collect()),
        Family::TorusBp => ObstacleSet::Blocks(torus_bp::blocks(a, b).into_iter().collect()),
        Family::KingBp => ObstacleSet::Blocks(king_bp::blocks(a, b).into_iter().collect()),
        Family::GridBs => ObstacleSet::Blocks(grid_bs::blocks(a, b).into_iter().collect()),
        Family::GridWp => ObstacleSet::Walls(grid_wp::walls(a, b).into_iter().collect()),
        Family::GridWs => {
            let walls = grid_ws::walls(a, b)
                .ok_or_else(|| infeasible("walls split a single column into pieces the robot cannot leave"))?;
            ObstacleSet::Walls(walls.into_iter().collect())
        }
    };
    let claimed_size = obstacles.len();
    let board = Board::new(family.topology(), rows, cols, obstacles, Position::new(1, 1))
        .expect("construction stays on the board and off the start");
    let board = if transpose { board.transposed() } else { board };
    Ok(Construction { family, board, claimed_size })
}

/// The size each family is known to achieve on an `n × m` board.
pub fn size_contract(family: Family, n: usize, m: usize) -> SizeContract {
    let (n, m) = (n.max(m), n.min(m));
    match family {
        Family::GridBp => SizeContract::Exact(match m {
            0..=2 => 0,
            3 => 1,
            10 => 5,
            _ => gamma_t_path(m - 2).expect("m >= 4"),
        }),
        Family::TorusBp => SizeContract::Exact(match m {
            1 => 0,
            2 if n <= 3 => n - 1,
            2 => n - 2,
            3..=5 => 3,
            _ => (m - 1).div_ceil(2),
        }),
        Family::KingBp => SizeContract::Exact(ladder_len(m, n)),
        Family::GridWp => SizeContract::Exact(match m {
            0..=2 => 0,
            3 => 1,
            _ => rho_path(m - 2).expect("m >= 4"),
        }),
        Family::GridBs if m >= 3 => {
            let g = gamma_grid(n - 2, m - 2).expect("positive").value;
            SizeContract::Between { lower: g, upper: g as f64 + 18.0 * (m + n) as f64 / 25.0 + 28.0 / 5.0 }
        }
        Family::GridWs if m >= 3 => {
            // A single inner square still needs one wall.
            let r = rho_grid(n - 2, m - 2).unwrap_or(1);
            SizeContract::Between { lower: r, upper: r as f64 + 3.0 * (m + n) as f64 / 4.0 + 3.0 }
        }
        Family::GridBs | Family::GridWs => SizeContract::Unbounded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    fn check(f: Family, n: usize, m: usize) -> Construction {
        let c = construct(f, n, m).unwrap();
        assert!(verify(&c.board, f.mode()).complete, "{f} {n}x{m}");
        c
    }

    #[test]
    fn grid_bp_examples() {
        assert_eq!(check(Family::GridBp, 12, 12).claimed_size, 6);
        assert_eq!(check(Family::GridBp, 10, 10).claimed_size, 5);
    }

    #[test]
    fn king_fig15() {
        let c = check(Family::KingBp, 19, 19);
        assert_eq!((c.board.rows(), c.board.cols()), (20, 20));
        let blocks: Vec<_> = c.board.obstacles().block_set().unwrap().iter().copied().collect();
        assert_eq!(blocks, vec![Position::new(1, 18), Position::new(20, 20)]);
    }

    #[test]
    fn torus_base() {
        assert_eq!(check(Family::TorusBp, 7, 7).claimed_size, 3);
    }

    #[test]
    fn walls_pass() {
        assert_eq!(check(Family::GridWp, 6, 6).claimed_size, 2);
    }

    #[test]
    fn fig12_layout() {
        let c = check(Family::GridBs, 8, 10);
        assert_eq!(c.claimed_size, 25);
        assert!(size_contract(Family::GridBs, 8, 10).admits(25));
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::from_name(f.name()), Some(f));
        }
    }
}
