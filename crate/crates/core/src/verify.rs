//! Reachability, coverage and shortest move counts.
//!
//! Rect and torus boards up to 64x64 go through the bit-parallel engine;
//! king boards and anything larger fall back to the square-by-square
//! reference, which is also kept public for cross-checking.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::bitboard::BitEngine;
use crate::board::{Board, Position};
use crate::slide::{slide_unchecked, Direction, MoveError, SlideResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Pass,
    Stop,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Pass => "pass",
            Mode::Stop => "stop",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "pass" => Some(Mode::Pass),
            "stop" => Some(Mode::Stop),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub mode: Mode,
    pub stops: BTreeSet<Position>,
    pub passed: BTreeSet<Position>,
    pub missing: BTreeSet<Position>,
    pub complete: bool,
}

impl VerificationReport {
    fn new(board: &Board, mode: Mode, stops: BTreeSet<Position>, passed: BTreeSet<Position>) -> Self {
        let covered = match mode {
            Mode::Pass => &passed,
            Mode::Stop => &stops,
        };
        let missing: BTreeSet<Position> = board.free_squares().filter(|p| !covered.contains(p)).collect();
        let complete = missing.is_empty();
        Self { mode, stops, passed, missing, complete }
    }
}

fn explore_reference(board: &Board) -> (BTreeSet<Position>, BTreeSet<Position>) {
    let mut stops = BTreeSet::from([board.start()]);
    let mut passed = stops.clone();
    let mut queue = VecDeque::from([board.start()]);
    while let Some(p) = queue.pop_front() {
        for &d in Direction::legal_for(board.topology()) {
            let r = slide_unchecked(board, p, d);
            passed.extend(r.swept().iter().copied());
            if let Some(end) = r.end() {
                if stops.insert(end) {
                    queue.push_back(end);
                }
            }
        }
    }
    (stops, passed)
}

fn explore(board: &Board) -> (BTreeSet<Position>, BTreeSet<Position>) {
    if BitEngine::supports(board.topology(), board.rows(), board.cols()) {
        let mut e = BitEngine::for_board(board);
        let s = board.start();
        e.explore((s.row - 1, s.col - 1));
        (e.stops().into_iter().collect(), e.passed().into_iter().collect())
    } else {
        explore_reference(board)
    }
}

/// Every square the robot can come to rest on, the start included.
pub fn reachable_stops(board: &Board) -> BTreeSet<Position> {
    explore(board).0
}

/// Every square swept by some slide from a reachable stop, plus the stops.
///
/// On a torus a slide along a block-free cycle never ends, but it still
/// sweeps the whole cycle and those squares count as passed.
pub fn passed_squares(board: &Board) -> BTreeSet<Position> {
    explore(board).1
}

pub fn verify(board: &Board, mode: Mode) -> VerificationReport {
    let (stops, passed) = explore(board);
    VerificationReport::new(board, mode, stops, passed)
}

/// [`verify`] using only the square-by-square slide implementation.
pub fn verify_reference(board: &Board, mode: Mode) -> VerificationReport {
    let (stops, passed) = explore_reference(board);
    VerificationReport::new(board, mode, stops, passed)
}

/// Verdict only; cheaper than building a full report.
pub fn is_complete(board: &Board, mode: Mode) -> bool {
    if BitEngine::supports(board.topology(), board.rows(), board.cols()) {
        let mut e = BitEngine::for_board(board);
        complete_from(&mut e, board.start(), mode)
    } else {
        verify_reference(board, mode).complete
    }
}

fn complete_from(e: &mut BitEngine, start: Position, mode: Mode) -> bool {
    e.explore((start.row - 1, start.col - 1));
    match mode {
        Mode::Pass => e.pass_complete(),
        Mode::Stop => e.stop_complete(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AllStartsReport {
    pub complete: bool,
    /// Row-major first start from which the board is incomplete.
    pub first_failure: Option<Position>,
}

fn start_fails(board: &Board, p: Position, mode: Mode) -> bool {
    if BitEngine::supports(board.topology(), board.rows(), board.cols()) {
        let mut e = BitEngine::for_board(board);
        !complete_from(&mut e, p, mode)
    } else {
        let b = board.with_start(p).expect("free square is a valid start");
        !verify_reference(&b, mode).complete
    }
}

/// Checks every non-block square as a start, in parallel.
pub fn verify_all_starts(board: &Board, mode: Mode) -> AllStartsReport {
    let starts: Vec<Position> = board.free_squares().collect();
    let first_failure = starts.par_iter().copied().find_first(|&p| start_fails(board, p, mode));
    AllStartsReport { complete: first_failure.is_none(), first_failure }
}

/// All starts (row-major) from which the board is incomplete.
pub fn failing_starts(board: &Board, mode: Mode) -> Vec<Position> {
    let starts: Vec<Position> = board.free_squares().collect();
    starts.into_par_iter().filter(|&p| start_fails(board, p, mode)).collect()
}

/// One move of a route: the direction taken and where the robot rests
/// afterwards (`None` for a final torus slide that never stops).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub dir: Direction,
    pub to: Option<Position>,
}

/// A shortest move sequence from the start that stops on `target`
/// (stop mode) or sweeps it (pass mode).
///
/// `Ok(None)` means unreachable. Moves are uniform-cost, so this is a
/// breadth-first search over resting squares.
pub fn shortest_route(board: &Board, target: Position, mode: Mode) -> Result<Option<Vec<Move>>, MoveError> {
    if !board.contains(target) {
        return Err(MoveError::OutOfBounds(target));
    }
    if board.is_block(target) {
        return Err(MoveError::OnBlock(target));
    }
    let start = board.start();
    if target == start {
        return Ok(Some(Vec::new()));
    }
    let idx = |p: Position| (p.row - 1) * board.cols() + (p.col - 1);
    let mut parent: Vec<Option<(Position, Direction)>> = vec![None; board.rows() * board.cols()];
    let mut seen = vec![false; board.rows() * board.cols()];
    seen[idx(start)] = true;
    let mut queue = VecDeque::from([start]);
    let unwind = |parent: &[Option<(Position, Direction)>], mut p: Position, mut tail: Vec<Move>| {
        while let Some((prev, d)) = parent[idx(p)] {
            tail.push(Move { dir: d, to: Some(p) });
            p = prev;
        }
        tail.reverse();
        tail
    };
    while let Some(p) = queue.pop_front() {
        for &d in Direction::legal_for(board.topology()) {
            let r = slide_unchecked(board, p, d);
            if mode == Mode::Pass && r.swept().contains(&target) {
                let last = Move { dir: d, to: r.end() };
                return Ok(Some(unwind(&parent, p, vec![last])));
            }
            if let SlideResult::Moved { end, .. } = r {
                if !seen[idx(end)] {
                    seen[idx(end)] = true;
                    parent[idx(end)] = Some((p, d));
                    if mode == Mode::Stop && end == target {
                        return Ok(Some(unwind(&parent, end, Vec::new())));
                    }
                    queue.push_back(end);
                }
            }
        }
    }
    Ok(None)
}

/// Length of [`shortest_route`].
pub fn min_moves(board: &Board, target: Position, mode: Mode) -> Result<Option<usize>, MoveError> {
    Ok(shortest_route(board, target, mode)?.map(|r| r.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{ObstacleKind, Topology, Wall};

    fn p(r: usize, c: usize) -> Position {
        Position::new(r, c)
    }

    fn fig2() -> Board {
        Board::with_blocks(Topology::Rect, 4, 4, [(2, 1), (3, 4)]).unwrap()
    }

    #[test]
    fn empty_square_board() {
        let b = Board::empty(Topology::Rect, 4, 4, ObstacleKind::Blocks).unwrap();
        assert_eq!(reachable_stops(&b), BTreeSet::from([p(1, 1), p(1, 4), p(4, 1), p(4, 4)]));
        assert_eq!(passed_squares(&b).len(), 12);
        let r = verify(&b, Mode::Pass);
        assert!(!r.complete);
        assert_eq!(r.missing, BTreeSet::from([p(2, 2), p(2, 3), p(3, 2), p(3, 3)]));
    }

    #[test]
    fn single_row() {
        let b = Board::empty(Topology::Rect, 1, 5, ObstacleKind::Blocks).unwrap();
        assert_eq!(reachable_stops(&b), BTreeSet::from([p(1, 1), p(1, 5)]));
        assert_eq!(passed_squares(&b).len(), 5);
    }

    #[test]
    fn two_by_two_stop() {
        let b = Board::empty(Topology::Rect, 2, 2, ObstacleKind::Blocks).unwrap();
        assert!(verify(&b, Mode::Stop).complete);
    }

    #[test]
    fn fig2_is_complete() {
        let b = fig2();
        assert!(verify(&b, Mode::Pass).complete);
        // (2,3) and (3,2) are swept but never rested on.
        let r = verify(&b, Mode::Stop);
        assert_eq!(r.stops.len(), 12);
        assert_eq!(r.missing, BTreeSet::from([p(2, 3), p(3, 2)]));
    }

    #[test]
    fn fig2_route_to_inner_square() {
        let b = fig2();
        assert_eq!(min_moves(&b, p(3, 3), Mode::Stop).unwrap(), Some(7));
        assert_eq!(min_moves(&b, p(1, 1), Mode::Stop).unwrap(), Some(0));
        assert_eq!(min_moves(&b, p(1, 3), Mode::Pass).unwrap(), Some(1));
        let route = shortest_route(&b, p(3, 3), Mode::Stop).unwrap().unwrap();
        assert_eq!(route.last().unwrap().to, Some(p(3, 3)));
        assert!(matches!(min_moves(&b, p(2, 1), Mode::Stop), Err(MoveError::OnBlock(_))));
    }

    #[test]
    fn pass_route_ends_with_sweep() {
        let b = fig2();
        let route = shortest_route(&b, p(3, 3), Mode::Pass).unwrap().unwrap();
        // Replay and check the last slide sweeps the target.
        let mut cur = b.start();
        for (i, mv) in route.iter().enumerate() {
            let r = slide_unchecked(&b, cur, mv.dir);
            if i + 1 == route.len() {
                assert!(r.swept().contains(&p(3, 3)));
            }
            assert_eq!(r.end(), mv.to);
            if let Some(e) = mv.to {
                cur = e;
            }
        }
    }

    #[test]
    fn unreachable_is_none() {
        let b = Board::empty(Topology::Rect, 3, 3, ObstacleKind::Blocks).unwrap();
        assert_eq!(min_moves(&b, p(2, 2), Mode::Pass).unwrap(), None);
    }

    #[test]
    fn all_starts() {
        let b = Board::empty(Topology::Rect, 1, 1, ObstacleKind::Blocks).unwrap();
        assert!(verify_all_starts(&b, Mode::Pass).complete);
        let b = Board::empty(Topology::Rect, 3, 3, ObstacleKind::Blocks).unwrap();
        let r = verify_all_starts(&b, Mode::Pass);
        assert_eq!(r.first_failure, Some(p(1, 1)));
        // Only the corners fail: from any other square the centre is swept.
        assert_eq!(failing_starts(&b, Mode::Pass), vec![p(1, 1), p(1, 3), p(3, 1), p(3, 3)]);
    }

    #[test]
    fn torus_with_few_blocks_fails_somewhere() {
        let b = Board::with_blocks(Topology::Torus, 5, 5, [(1, 3), (2, 4), (3, 2)]).unwrap();
        assert!(!verify_all_starts(&b, Mode::Pass).complete);
    }

    #[test]
    fn walls_require_every_square() {
        let b = Board::with_walls(1, 3, [Wall::east_of(1, 1)]).unwrap();
        let r = verify(&b, Mode::Stop);
        assert_eq!(r.stops, BTreeSet::from([p(1, 1)]));
        assert_eq!(r.missing.len(), 2);
    }

    #[test]
    fn engines_agree_on_king_fallback() {
        let b = Board::empty(Topology::King, 5, 7, ObstacleKind::Blocks).unwrap();
        assert_eq!(verify(&b, Mode::Pass), verify_reference(&b, Mode::Pass));
    }
}
