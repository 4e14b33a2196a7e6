//! Exact optima by exhaustive search over obstacle placements.
//!
//! Placements of size `k` are enumerated as `k`-combinations of a fixed
//! candidate list (squares other than the start, or interior edges), in
//! lexicographic order. The enumeration is cut into chunks by the first two
//! indices; workers take chunks in any order but a chunk is skipped only
//! when an earlier chunk already holds a witness, so the reported witness is
//! always the lexicographically smallest one, whatever the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::bitboard::BitEngine;
use crate::board::{Board, BoardError, ObstacleKind, ObstacleSet, Position, Topology, Wall};
use crate::constructions::{self, ladder_len, Family};
use crate::params::{gamma_grid, gamma_t_path, rho_grid, rho_path};
use crate::verify::{verify_reference, Mode};

/// One variant of the game on one board shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameSpec {
    pub topology: Topology,
    pub rows: usize,
    pub cols: usize,
    pub kind: ObstacleKind,
    pub mode: Mode,
    pub start: Position,
}

impl GameSpec {
    pub fn new(topology: Topology, rows: usize, cols: usize, kind: ObstacleKind, mode: Mode) -> Self {
        Self { topology, rows, cols, kind, mode, start: Position::new(1, 1) }
    }

    pub fn with_start(self, start: Position) -> Self {
        Self { start, ..self }
    }

    pub fn validate(&self) -> Result<(), BoardError> {
        Board::empty(self.topology, self.rows, self.cols, self.kind)?.with_start(self.start).map(|_| ())
    }

    pub fn board(&self, obstacles: ObstacleSet) -> Result<Board, BoardError> {
        Board::new(self.topology, self.rows, self.cols, obstacles, self.start)
    }

    /// `(long side, short side)`.
    fn sides(&self) -> (usize, usize) {
        (self.rows.max(self.cols), self.rows.min(self.cols))
    }

    fn starts_in_corner(&self) -> bool {
        self.start == Position::new(1, 1)
    }
}

impl fmt::Display for GameSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}x{} {} {} from {}",
            self.topology,
            self.rows,
            self.cols,
            self.kind.name(),
            self.mode,
            self.start
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBound {
    pub value: usize,
    pub source: &'static str,
}

/// Best lower bound the known counting arguments give for `spec`.
///
/// The grid arguments assume the robot starts in a corner; other starts on
/// a rectangle get 0 (a torus has no distinguished square).
pub fn lower_bound(spec: &GameSpec) -> LowerBound {
    let (n, m) = spec.sides();
    let none = LowerBound { value: 0, source: "none" };
    let pass = match (spec.topology, spec.kind) {
        (Topology::Rect, _) if !spec.starts_in_corner() => none,
        (Topology::Rect, ObstacleKind::Blocks) if m >= 4 => LowerBound {
            value: gamma_t_path(m - 2).expect("m >= 4"),
            source: "total domination of the inner columns: gamma_t(P_{m-2})",
        },
        (Topology::Torus, ObstacleKind::Blocks) => LowerBound {
            value: (m - 1).div_ceil(2),
            source: "each column needs a block beside it: ceil((m-1)/2)",
        },
        (Topology::Rect, ObstacleKind::Walls) if m >= 4 => LowerBound {
            value: rho_path(m - 2).expect("m >= 4"),
            source: "edge cover of the inner columns: rho(P_{m-2})",
        },
        _ => none,
    };
    if spec.mode == Mode::Pass || spec.topology != Topology::Rect || !spec.starts_in_corner() || m < 3 {
        return pass;
    }
    // A stop-complete board is pass-complete, so the pass bound carries over.
    let stop = match spec.kind {
        ObstacleKind::Blocks => LowerBound {
            value: gamma_grid(n - 2, m - 2).expect("positive sides").value,
            source: "domination of the inner grid: gamma(G_{n-2,m-2})",
        },
        ObstacleKind::Walls => LowerBound {
            value: rho_grid(n - 2, m - 2).unwrap_or(1),
            source: "edge cover of the inner grid: rho(G_{n-2,m-2})",
        },
    };
    if stop.value >= pass.value {
        stop
    } else {
        pass
    }
}

/// What the known theorems say about the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    Exact(usize),
    BoundsOnly { lower: usize, upper: Option<usize> },
}

/// Closed-form optimum where a theorem gives one, otherwise the best known
/// bounds (upper from the matching construction).
pub fn opt_formula(spec: &GameSpec) -> Formula {
    let (n, m) = spec.sides();
    let lower = lower_bound(spec).value;
    let upper = family_of(spec)
        .filter(|_| spec.starts_in_corner())
        .and_then(|f| {
            let (a, b) = if f == Family::KingBp { (spec.rows - 1, spec.cols - 1) } else { (spec.rows, spec.cols) };
            constructions::construct(f, a, b).ok()
        })
        .map(|c| c.claimed_size);
    let bounds = Formula::BoundsOnly { lower, upper };
    if !spec.starts_in_corner() && spec.topology != Topology::Torus {
        return bounds;
    }
    match (spec.topology, spec.kind, spec.mode) {
        (Topology::Rect, ObstacleKind::Blocks, Mode::Pass) => Formula::Exact(match m {
            0..=2 => 0,
            3 => 1,
            10 => 5,
            _ => gamma_t_path(m - 2).expect("m >= 4"),
        }),
        (Topology::Torus, ObstacleKind::Blocks, Mode::Pass) => match (n, m) {
            (_, 1) => Formula::Exact(0),
            (2, 2) => Formula::Exact(1),
            (3, 2) => Formula::Exact(2),
            (_, 2) => Formula::Exact(n - 2),
            (_, 3..=5) => Formula::Exact(3),
            _ => Formula::Exact((m - 1).div_ceil(2)),
        },
        (Topology::King, ObstacleKind::Blocks, Mode::Pass) => {
            let (a, b) = (spec.rows - 1, spec.cols - 1);
            if a == 0 || b == 0 || constructions_gcd(a, b) <= 3 {
                Formula::Exact(0)
            } else {
                Formula::BoundsOnly { lower: 1, upper: Some(ladder_len(a, b)) }
            }
        }
        (Topology::Rect, ObstacleKind::Walls, Mode::Pass) => Formula::Exact(match m {
            0..=2 => 0,
            3 => 1,
            _ => rho_path(m - 2).expect("m >= 4"),
        }),
        _ => bounds,
    }
}

fn constructions_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        constructions_gcd(b, a % b)
    }
}

fn family_of(spec: &GameSpec) -> Option<Family> {
    Some(match (spec.topology, spec.kind, spec.mode) {
        (Topology::Rect, ObstacleKind::Blocks, Mode::Pass) => Family::GridBp,
        (Topology::Rect, ObstacleKind::Blocks, Mode::Stop) => Family::GridBs,
        (Topology::Rect, ObstacleKind::Walls, Mode::Pass) => Family::GridWp,
        (Topology::Rect, ObstacleKind::Walls, Mode::Stop) => Family::GridWs,
        (Topology::Torus, ObstacleKind::Blocks, Mode::Pass) => Family::TorusBp,
        (Topology::King, ObstacleKind::Blocks, Mode::Pass) => Family::KingBp,
        _ => return None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: Duration,
    pub workers: usize,
    /// Skip placements whose mirror image is smaller, on square rectangles
    /// with the start on the diagonal.
    pub symmetry: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            budget: Duration::from_secs(60),
            workers: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            symmetry: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Found(ObstacleSet),
    NotFound,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionResult {
    pub decision: Decision,
    pub placements_tested: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    BudgetExhausted,
    /// No placement of any size works.
    Infeasible,
}

impl SolveStatus {
    pub fn name(self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::BudgetExhausted => "budget-exhausted",
            SolveStatus::Infeasible => "infeasible",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub optimum: Option<usize>,
    /// Lexicographically smallest optimal placement.
    pub witness: Option<ObstacleSet>,
    /// Proven lower bound: the optimum, or the first size not yet refuted.
    pub lower_bound: usize,
    pub bound_source: &'static str,
    pub placements_tested: u64,
    pub elapsed: Duration,
}

enum Candidates {
    Blocks(Vec<Position>),
    Walls(Vec<Wall>),
}

impl Candidates {
    fn for_spec(spec: &GameSpec) -> Self {
        let squares = (1..=spec.rows).flat_map(|r| (1..=spec.cols).map(move |c| Position::new(r, c)));
        match spec.kind {
            ObstacleKind::Blocks => Candidates::Blocks(squares.filter(|&p| p != spec.start).collect()),
            ObstacleKind::Walls => {
                let mut walls = Vec::new();
                for p in squares {
                    for w in [Wall::east_of(p.row, p.col), Wall::south_of(p.row, p.col)] {
                        if w.fits(spec.rows, spec.cols) {
                            walls.push(w);
                        }
                    }
                }
                walls.sort();
                Candidates::Walls(walls)
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            Candidates::Blocks(v) => v.len(),
            Candidates::Walls(v) => v.len(),
        }
    }

    fn obstacle_set(&self, idx: &[usize]) -> ObstacleSet {
        match self {
            Candidates::Blocks(v) => ObstacleSet::Blocks(idx.iter().map(|&i| v[i]).collect()),
            Candidates::Walls(v) => ObstacleSet::Walls(idx.iter().map(|&i| v[i]).collect()),
        }
    }

    /// Index of each candidate's mirror image across the main diagonal.
    fn mirror(&self) -> Vec<usize> {
        match self {
            Candidates::Blocks(v) => {
                v.iter().map(|p| v.binary_search(&Position::new(p.col, p.row)).expect("square board")).collect()
            }
            Candidates::Walls(v) => {
                v.iter().map(|w| v.binary_search(&w.transposed()).expect("square board")).collect()
            }
        }
    }
}

/// Checks placements for one spec, reusing buffers between calls.
struct Checker<'a> {
    spec: &'a GameSpec,
    candidates: &'a Candidates,
    engine: Option<BitEngine>,
}

impl<'a> Checker<'a> {
    fn new(spec: &'a GameSpec, candidates: &'a Candidates) -> Self {
        let engine = BitEngine::supports(spec.topology, spec.rows, spec.cols)
            .then(|| BitEngine::new(spec.topology, spec.rows, spec.cols));
        Self { spec, candidates, engine }
    }

    fn complete(&mut self, idx: &[usize]) -> bool {
        let Some(e) = self.engine.as_mut() else {
            let board = self.spec.board(self.candidates.obstacle_set(idx)).expect("candidates are valid");
            return verify_reference(&board, self.spec.mode).complete;
        };
        e.clear();
        match self.candidates {
            Candidates::Blocks(v) => idx.iter().for_each(|&i| e.set_block(v[i].row - 1, v[i].col - 1)),
            Candidates::Walls(v) => idx.iter().for_each(|&i| e.set_wall(v[i])),
        }
        let s = self.spec.start;
        e.explore((s.row - 1, s.col - 1));
        match self.spec.mode {
            Mode::Pass => e.pass_complete(),
            Mode::Stop => e.stop_complete(),
        }
    }
}

/// Advances the suffix `c[from..]` to the next combination of indices
/// below `n`. Returns false when exhausted.
fn next_combination(c: &mut [usize], from: usize, n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > from {
        i -= 1;
        if c[i] < n - (k - i) {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All valid prefixes of length `min(k, 2)`, in lexicographic order.
fn chunk_prefixes(n: usize, k: usize) -> Vec<Vec<usize>> {
    let p = k.min(2);
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..p).collect();
    loop {
        // the remaining k - p entries must fit after the prefix
        if p == 0 || n - 1 - c[p - 1] >= k - p {
            out.push(c.clone());
        }
        if !next_combination(&mut c, 0, n) {
            break;
        }
    }
    out
}

/// Whether some placement of exactly `k` obstacles is complete.
pub fn solve_decision(spec: &GameSpec, k: usize, opts: &SolveOptions) -> Result<DecisionResult, SolveError> {
    spec.validate()?;
    let begin = Instant::now();
    let deadline = begin + opts.budget;
    let candidates = Candidates::for_spec(spec);
    let n = candidates.len();
    let mirror = (opts.symmetry
        && spec.topology == Topology::Rect
        && spec.rows == spec.cols
        && spec.start.row == spec.start.col)
        .then(|| candidates.mirror());
    let prefixes = chunk_prefixes(n, k);

    let best = AtomicUsize::new(usize::MAX);
    let interrupted = AtomicUsize::new(usize::MAX);
    let timed_out = AtomicBool::new(false);
    let tested = AtomicU64::new(0);
    let found: Mutex<BTreeMap<usize, Vec<usize>>> = Mutex::new(BTreeMap::new());

    let scan = |chunk: usize, checker: &mut Checker, scratch: &mut Vec<usize>| {
        if chunk > best.load(Ordering::Relaxed) {
            return;
        }
        if timed_out.load(Ordering::Relaxed) || Instant::now() >= deadline {
            timed_out.store(true, Ordering::Relaxed);
            interrupted.fetch_min(chunk, Ordering::Relaxed);
            return;
        }
        let prefix = &prefixes[chunk];
        let mut c: Vec<usize> = prefix.clone();
        let start = prefix.last().map_or(0, |&x| x + 1);
        c.extend(start..start + (k - prefix.len()));
        let mut local = 0u64;
        loop {
            let skip = mirror.as_ref().is_some_and(|mir| {
                scratch.clear();
                scratch.extend(c.iter().map(|&i| mir[i]));
                scratch.sort_unstable();
                scratch.as_slice() < c.as_slice()
            });
            if !skip {
                local += 1;
                if checker.complete(&c) {
                    found.lock().unwrap().insert(chunk, c.clone());
                    best.fetch_min(chunk, Ordering::Relaxed);
                    break;
                }
            }
            if local.is_multiple_of(4096) {
                if Instant::now() >= deadline {
                    timed_out.store(true, Ordering::Relaxed);
                    interrupted.fetch_min(chunk, Ordering::Relaxed);
                    break;
                }
                if chunk > best.load(Ordering::Relaxed) {
                    break;
                }
            }
            if !next_combination(&mut c, prefix.len(), n) {
                break;
            }
        }
        tested.fetch_add(local, Ordering::Relaxed);
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| SolveError::Pool(e.to_string()))?;
    pool.install(|| {
        (0..prefixes.len()).into_par_iter().with_max_len(1).for_each_init(
            || (Checker::new(spec, &candidates), Vec::with_capacity(k)),
            |(checker, scratch), chunk| scan(chunk, checker, scratch),
        );
    });

    let best = best.into_inner();
    let interrupted = interrupted.into_inner();
    let decision = if best < interrupted {
        let idx = found.into_inner().unwrap().remove(&best).expect("recorded with best");
        Decision::Found(candidates.obstacle_set(&idx))
    } else if timed_out.into_inner() {
        Decision::Timeout
    } else {
        Decision::NotFound
    };
    Ok(DecisionResult { decision, placements_tested: tested.into_inner(), elapsed: begin.elapsed() })
}

/// Smallest `k` with a complete placement, searching upwards from the
/// lower bound.
pub fn solve_exact(spec: &GameSpec, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    spec.validate()?;
    let begin = Instant::now();
    let bound = lower_bound(spec);
    let max_k = Candidates::for_spec(spec).len();
    let mut tested = 0;
    let mut k = bound.value;
    let result = |status, optimum, witness, lower_bound, tested| SolveResult {
        status,
        optimum,
        witness,
        lower_bound,
        bound_source: bound.source,
        placements_tested: tested,
        elapsed: begin.elapsed(),
    };
    while k <= max_k {
        let remaining = opts.budget.saturating_sub(begin.elapsed());
        let d = solve_decision(spec, k, &SolveOptions { budget: remaining, ..*opts })?;
        tested += d.placements_tested;
        match d.decision {
            Decision::Found(w) => return Ok(result(SolveStatus::Optimal, Some(k), Some(w), k, tested)),
            Decision::Timeout => return Ok(result(SolveStatus::BudgetExhausted, None, None, k, tested)),
            Decision::NotFound => k += 1,
        }
    }
    Ok(result(SolveStatus::Infeasible, None, None, k, tested))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: Topology, n: usize, m: usize, kind: ObstacleKind, mode: Mode) -> GameSpec {
        GameSpec::new(t, n, m, kind, mode)
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 0, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(chunk_prefixes(4, 3), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(chunk_prefixes(3, 0), vec![Vec::<usize>::new()]);
        assert!(chunk_prefixes(2, 3).is_empty());
    }

    #[test]
    fn bounds() {
        let b = ObstacleKind::Blocks;
        assert_eq!(lower_bound(&spec(Topology::Rect, 12, 12, b, Mode::Pass)).value, 6);
        assert_eq!(lower_bound(&spec(Topology::Torus, 9, 9, b, Mode::Pass)).value, 4);
        assert_eq!(lower_bound(&spec(Topology::Rect, 5, 5, ObstacleKind::Walls, Mode::Stop)).value, 5);
        assert_eq!(lower_bound(&spec(Topology::King, 9, 9, b, Mode::Pass)).value, 0);
    }

    #[test]
    fn formulas() {
        let b = ObstacleKind::Blocks;
        assert_eq!(opt_formula(&spec(Topology::Rect, 15, 10, b, Mode::Pass)), Formula::Exact(5));
        assert_eq!(opt_formula(&spec(Topology::Rect, 5, 1, b, Mode::Pass)), Formula::Exact(0));
        assert_eq!(opt_formula(&spec(Topology::Torus, 7, 3, b, Mode::Pass)), Formula::Exact(3));
        assert!(matches!(opt_formula(&spec(Topology::Rect, 5, 5, b, Mode::Stop)), Formula::BoundsOnly { .. }));
    }

    #[test]
    fn decision_on_fig2_board() {
        let s = spec(Topology::Rect, 4, 4, ObstacleKind::Blocks, Mode::Pass);
        let opts = SolveOptions { workers: 2, ..Default::default() };
        assert_eq!(solve_decision(&s, 0, &opts).unwrap().decision, Decision::NotFound);
        let Decision::Found(w) = solve_decision(&s, 2, &opts).unwrap().decision else { panic!() };
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn small_optima() {
        let opts = SolveOptions { workers: 2, ..Default::default() };
        let r = solve_exact(&spec(Topology::Rect, 2, 2, ObstacleKind::Blocks, Mode::Stop), &opts).unwrap();
        assert_eq!((r.status, r.optimum), (SolveStatus::Optimal, Some(0)));
        let r = solve_exact(&spec(Topology::Rect, 3, 1, ObstacleKind::Walls, Mode::Stop), &opts).unwrap();
        assert_eq!(r.status, SolveStatus::Infeasible);
    }

    #[test]
    fn zero_budget_times_out() {
        let s = spec(Topology::Rect, 6, 6, ObstacleKind::Blocks, Mode::Pass);
        let opts = SolveOptions { budget: Duration::ZERO, workers: 1, symmetry: true };
        assert_eq!(solve_decision(&s, 3, &opts).unwrap().decision, Decision::Timeout);
        assert_eq!(solve_exact(&s, &opts).unwrap().status, SolveStatus::BudgetExhausted);
    }

    #[test]
    fn symmetry_keeps_witness() {
        let s = spec(Topology::Rect, 5, 5, ObstacleKind::Blocks, Mode::Pass);
        let on = solve_exact(&s, &SolveOptions { workers: 2, ..Default::default() }).unwrap();
        let off = solve_exact(&s, &SolveOptions { workers: 2, symmetry: false, ..Default::default() }).unwrap();
        assert_eq!(on.witness, off.witness);
        assert!(on.placements_tested <= off.placements_tested);
    }
}
