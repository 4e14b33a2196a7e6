//! Sliding-robot coverage games on grids, tori and king grids.
//!
//! A single robot slides until an obstacle stops it. A placement of blocks
//! (or walls) solves a board in *pass* mode when every free square is swept
//! by some reachable slide, and in *stop* mode when every free square is a
//! reachable resting square. This crate simulates slides, verifies
//! placements, computes the graph parameters behind the known bounds, emits
//! explicit placements for every family, and finds exact optima on small
//! boards.

pub(crate) mod bitboard;
pub mod board;
pub mod codec;
pub mod constructions;
pub mod params;
pub mod slide;
pub mod solver;
pub mod verify;

pub use board::{Board, BoardError, ObstacleKind, ObstacleSet, Position, Topology, Wall, WallSide};
pub use codec::{parse_board, render_ascii, serialize_board, ParseError};
pub use slide::{legal_moves, slide, Direction, MoveError, SlideResult};
pub use verify::{
    failing_starts, is_complete, min_moves, passed_squares, reachable_stops, shortest_route, verify,
    verify_all_starts, verify_reference, AllStartsReport, Mode, Move, VerificationReport,
};
pub use solver::{
    lower_bound, opt_formula, solve_decision, solve_exact, Decision, DecisionResult, Formula, GameSpec, LowerBound,
    SolveError, SolveOptions, SolveResult, SolveStatus,
};
