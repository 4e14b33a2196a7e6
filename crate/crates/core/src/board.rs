//! Board geometry: positions, topologies, obstacle sets and the immutable
//! [`Board`] that every other module operates on.
//!
//! Positions are 1-based `(row, col)` with row 1 at the top.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A square of a board, 1-based, row 1 at the top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl Position {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl From<(usize, usize)> for Position {
    fn from((row, col): (usize, usize)) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// How the edges of the board behave.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    /// Rectangular grid, bounded by its outer edge.
    Rect,
    /// Rows and columns wrap around; slides stop only at blocks.
    Torus,
    /// Rectangular grid where the robot may also slide diagonally.
    King,
}

impl Topology {
    pub fn name(self) -> &'static str {
        match self {
            Topology::Rect => "rect",
            Topology::Torus => "torus",
            Topology::King => "king",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "rect" => Some(Topology::Rect),
            "torus" => Some(Topology::Torus),
            "king" => Some(Topology::King),
            _ => None,
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WallSide {
    /// Between `(r, c)` and `(r, c + 1)`.
    EastOf,
    /// Between `(r, c)` and `(r + 1, c)`.
    SouthOf,
}

/// A wall on the edge between two orthogonally adjacent squares.
///
/// Every interior edge has exactly one name: the square to its west
/// (`EastOf`) or to its north (`SouthOf`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wall {
    pub anchor: Position,
    pub side: WallSide,
}

impl Wall {
    pub const fn east_of(row: usize, col: usize) -> Self {
        Self { anchor: Position::new(row, col), side: WallSide::EastOf }
    }

    pub const fn south_of(row: usize, col: usize) -> Self {
        Self { anchor: Position::new(row, col), side: WallSide::SouthOf }
    }

    /// The two squares this wall separates.
    pub fn squares(&self) -> (Position, Position) {
        let a = self.anchor;
        match self.side {
            WallSide::EastOf => (a, Position::new(a.row, a.col + 1)),
            WallSide::SouthOf => (a, Position::new(a.row + 1, a.col)),
        }
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        let a = self.anchor;
        if a.row < 1 || a.col < 1 || a.row > rows || a.col > cols {
            return false;
        }
        match self.side {
            WallSide::EastOf => a.col < cols,
            WallSide::SouthOf => a.row < rows,
        }
    }

    /// Mirror image across the main diagonal.
    pub fn transposed(&self) -> Self {
        let a = self.anchor;
        match self.side {
            WallSide::EastOf => Wall::south_of(a.col, a.row),
            WallSide::SouthOf => Wall::east_of(a.col, a.row),
        }
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.side {
            WallSide::EastOf => "WE",
            WallSide::SouthOf => "WS",
        };
        write!(f, "{} {} {}", tag, self.anchor.row, self.anchor.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstacleKind {
    Blocks,
    Walls,
}

impl ObstacleKind {
    pub fn name(self) -> &'static str {
        match self {
            ObstacleKind::Blocks => "blocks",
            ObstacleKind::Walls => "walls",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "blocks" => Some(ObstacleKind::Blocks),
            "walls" => Some(ObstacleKind::Walls),
            _ => None,
        }
    }
}

impl fmt::Display for ObstacleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Either a set of blocked squares or a set of walls, never both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ObstacleSet {
    Blocks(BTreeSet<Position>),
    Walls(BTreeSet<Wall>),
}

impl ObstacleSet {
    pub fn empty(kind: ObstacleKind) -> Self {
        match kind {
            ObstacleKind::Blocks => ObstacleSet::Blocks(BTreeSet::new()),
            ObstacleKind::Walls => ObstacleSet::Walls(BTreeSet::new()),
        }
    }

    /// Collects blocks, rejecting repeats.
    pub fn blocks<I, P>(items: I) -> Result<Self, BoardError>
    where
        I: IntoIterator<Item = P>,
        P: Into<Position>,
    {
        let mut set = BTreeSet::new();
        for p in items {
            let p = p.into();
            if !set.insert(p) {
                return Err(BoardError::DuplicateBlock(p));
            }
        }
        Ok(ObstacleSet::Blocks(set))
    }

    /// Collects walls, rejecting repeats.
    pub fn walls<I>(items: I) -> Result<Self, BoardError>
    where
        I: IntoIterator<Item = Wall>,
    {
        let mut set = BTreeSet::new();
        for w in items {
            if !set.insert(w) {
                return Err(BoardError::DuplicateWall(w));
            }
        }
        Ok(ObstacleSet::Walls(set))
    }

    pub fn kind(&self) -> ObstacleKind {
        match self {
            ObstacleSet::Blocks(_) => ObstacleKind::Blocks,
            ObstacleSet::Walls(_) => ObstacleKind::Walls,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ObstacleSet::Blocks(b) => b.len(),
            ObstacleSet::Walls(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn block_set(&self) -> Option<&BTreeSet<Position>> {
        match self {
            ObstacleSet::Blocks(b) => Some(b),
            ObstacleSet::Walls(_) => None,
        }
    }

    pub fn wall_set(&self) -> Option<&BTreeSet<Wall>> {
        match self {
            ObstacleSet::Walls(w) => Some(w),
            ObstacleSet::Blocks(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("board dimensions must be positive, got {rows}x{cols}")]
    EmptyBoard { rows: usize, cols: usize },
    #[error("start square {0} is outside the board")]
    StartOutOfBounds(Position),
    #[error("block {0} is outside the board")]
    BlockOutOfBounds(Position),
    #[error("wall `{0}` does not separate two squares of the board")]
    WallOutOfBounds(Wall),
    #[error("block {0} occupies the start square")]
    BlockOnStart(Position),
    #[error("duplicate block {0}")]
    DuplicateBlock(Position),
    #[error("duplicate wall `{0}`")]
    DuplicateWall(Wall),
    #[error("walls unsupported on {0}")]
    WallsUnsupported(Topology),
}

/// An immutable game board: topology, dimensions, obstacles and start square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    topology: Topology,
    rows: usize,
    cols: usize,
    obstacles: ObstacleSet,
    start: Position,
    // Dense lookups, row-major, 0-based.
    blocked: Vec<bool>,
    east_wall: Vec<bool>,
    south_wall: Vec<bool>,
}

impl Board {
    pub fn new(
        topology: Topology,
        rows: usize,
        cols: usize,
        obstacles: ObstacleSet,
        start: Position,
    ) -> Result<Self, BoardError> {
        if rows == 0 || cols == 0 {
            return Err(BoardError::EmptyBoard { rows, cols });
        }
        let in_bounds = |p: Position| p.row >= 1 && p.col >= 1 && p.row <= rows && p.col <= cols;
        if !in_bounds(start) {
            return Err(BoardError::StartOutOfBounds(start));
        }
        let cells = rows * cols;
        let mut blocked = vec![false; cells];
        let mut east_wall = vec![false; cells];
        let mut south_wall = vec![false; cells];
        match &obstacles {
            ObstacleSet::Blocks(set) => {
                for &p in set {
                    if !in_bounds(p) {
                        return Err(BoardError::BlockOutOfBounds(p));
                    }
                    if p == start {
                        return Err(BoardError::BlockOnStart(p));
                    }
                    blocked[(p.row - 1) * cols + p.col - 1] = true;
                }
            }
            ObstacleSet::Walls(set) => {
                if topology != Topology::Rect {
                    return Err(BoardError::WallsUnsupported(topology));
                }
                for &w in set {
                    if !w.fits(rows, cols) {
                        return Err(BoardError::WallOutOfBounds(w));
                    }
                    let i = (w.anchor.row - 1) * cols + w.anchor.col - 1;
                    match w.side {
                        WallSide::EastOf => east_wall[i] = true,
                        WallSide::SouthOf => south_wall[i] = true,
                    }
                }
            }
        }
        Ok(Self { topology, rows, cols, obstacles, start, blocked, east_wall, south_wall })
    }

    /// Obstacle-free board with the robot at `(1, 1)`.
    pub fn empty(topology: Topology, rows: usize, cols: usize, kind: ObstacleKind) -> Result<Self, BoardError> {
        Self::new(topology, rows, cols, ObstacleSet::empty(kind), Position::new(1, 1))
    }

    /// Block board with the robot at `(1, 1)`.
    pub fn with_blocks<I, P>(topology: Topology, rows: usize, cols: usize, blocks: I) -> Result<Self, BoardError>
    where
        I: IntoIterator<Item = P>,
        P: Into<Position>,
    {
        Self::new(topology, rows, cols, ObstacleSet::blocks(blocks)?, Position::new(1, 1))
    }

    /// Rectangular wall board with the robot at `(1, 1)`.
    pub fn with_walls<I>(rows: usize, cols: usize, walls: I) -> Result<Self, BoardError>
    where
        I: IntoIterator<Item = Wall>,
    {
        Self::new(Topology::Rect, rows, cols, ObstacleSet::walls(walls)?, Position::new(1, 1))
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn start(&self) -> Position {
        self.start
    }

    pub fn obstacles(&self) -> &ObstacleSet {
        &self.obstacles
    }

    pub fn obstacle_kind(&self) -> ObstacleKind {
        self.obstacles.kind()
    }

    pub fn contains(&self, p: Position) -> bool {
        p.row >= 1 && p.col >= 1 && p.row <= self.rows && p.col <= self.cols
    }

    pub fn is_block(&self, p: Position) -> bool {
        self.contains(p) && self.blocked[self.index(p)]
    }

    /// Whether a wall separates `p` from its east neighbour.
    pub fn wall_east_of(&self, p: Position) -> bool {
        self.contains(p) && self.east_wall[self.index(p)]
    }

    /// Whether a wall separates `p` from its south neighbour.
    pub fn wall_south_of(&self, p: Position) -> bool {
        self.contains(p) && self.south_wall[self.index(p)]
    }

    /// Row-major iterator over every square.
    pub fn squares(&self) -> impl Iterator<Item = Position> + '_ {
        let cols = self.cols;
        (0..self.rows * cols).map(move |i| Position::new(i / cols + 1, i % cols + 1))
    }

    /// Squares the robot may occupy, row-major.
    pub fn free_squares(&self) -> impl Iterator<Item = Position> + '_ {
        self.squares().filter(move |&p| !self.is_block(p))
    }

    pub(crate) fn index(&self, p: Position) -> usize {
        (p.row - 1) * self.cols + p.col - 1
    }

    /// Same board, different start square.
    pub fn with_start(&self, start: Position) -> Result<Self, BoardError> {
        Self::new(self.topology, self.rows, self.cols, self.obstacles.clone(), start)
    }

    /// Mirror image across the main diagonal (rows become columns).
    pub fn transposed(&self) -> Self {
        let obstacles = match &self.obstacles {
            ObstacleSet::Blocks(b) => {
                ObstacleSet::Blocks(b.iter().map(|p| Position::new(p.col, p.row)).collect())
            }
            ObstacleSet::Walls(w) => ObstacleSet::Walls(w.iter().map(Wall::transposed).collect()),
        };
        let start = Position::new(self.start.col, self.start.row);
        Self::new(self.topology, self.cols, self.rows, obstacles, start)
            .expect("transposing a valid board yields a valid board")
    }

    /// Shifts every block and the start by `(dr, dc)` modulo the board size.
    /// Only meaningful on a torus, where all positions are equivalent.
    pub fn translated(&self, dr: usize, dc: usize) -> Result<Self, BoardError> {
        let (n, m) = (self.rows, self.cols);
        let shift = |p: Position| Position::new((p.row - 1 + dr) % n + 1, (p.col - 1 + dc) % m + 1);
        let obstacles = match &self.obstacles {
            ObstacleSet::Blocks(b) => ObstacleSet::Blocks(b.iter().copied().map(shift).collect()),
            ObstacleSet::Walls(_) => return Err(BoardError::WallsUnsupported(self.topology)),
        };
        Self::new(self.topology, n, m, obstacles, shift(self.start))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_block_on_start() {
        let err = Board::with_blocks(Topology::Rect, 3, 3, [(1, 1)]).unwrap_err();
        assert_eq!(err, BoardError::BlockOnStart(Position::new(1, 1)));
    }

    #[test]
    fn rejects_out_of_bounds() {
        assert!(matches!(
            Board::with_blocks(Topology::Rect, 3, 3, [(4, 1)]),
            Err(BoardError::BlockOutOfBounds(_))
        ));
        assert!(matches!(
            Board::with_walls(3, 3, [Wall::east_of(1, 3)]),
            Err(BoardError::WallOutOfBounds(_))
        ));
        assert!(matches!(
            Board::with_walls(3, 3, [Wall::south_of(3, 1)]),
            Err(BoardError::WallOutOfBounds(_))
        ));
        assert!(matches!(Board::empty(Topology::Rect, 0, 3, ObstacleKind::Blocks), Err(BoardError::EmptyBoard { .. })));
    }

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            ObstacleSet::blocks([(2, 2), (2, 2)]).unwrap_err(),
            BoardError::DuplicateBlock(Position::new(2, 2))
        );
        assert!(ObstacleSet::walls([Wall::east_of(1, 1), Wall::east_of(1, 1)]).is_err());
    }

    #[test]
    fn walls_only_on_rect() {
        for topo in [Topology::Torus, Topology::King] {
            let err = Board::new(topo, 3, 3, ObstacleSet::empty(ObstacleKind::Walls), Position::new(1, 1));
            assert_eq!(err.unwrap_err(), BoardError::WallsUnsupported(topo));
        }
    }

    #[test]
    fn wall_capacity() {
        for n in 1..6 {
            for m in 1..6 {
                let all: Vec<Wall> = (1..=n)
                    .flat_map(|r| (1..=m).flat_map(move |c| [Wall::east_of(r, c), Wall::south_of(r, c)]))
                    .filter(|w| w.fits(n, m))
                    .collect();
                assert_eq!(all.len(), n * (m - 1) + m * (n - 1));
                assert!(Board::with_walls(n, m, all).is_ok());
            }
        }
    }

    #[test]
    fn transpose_roundtrip() {
        let b = Board::with_walls(3, 4, [Wall::east_of(1, 3), Wall::south_of(2, 4)]).unwrap();
        let t = b.transposed();
        assert_eq!((t.rows(), t.cols()), (4, 3));
        assert!(t.wall_south_of(Position::new(3, 1)));
        assert!(t.wall_east_of(Position::new(4, 2)));
        assert_eq!(t.transposed(), b);
    }

    #[test]
    fn torus_translation_wraps() {
        let b = Board::with_blocks(Topology::Torus, 3, 4, [(3, 4)]).unwrap();
        let t = b.translated(1, 1).unwrap();
        assert!(t.is_block(Position::new(1, 1)));
        assert_eq!(t.start(), Position::new(2, 2));
    }
}
