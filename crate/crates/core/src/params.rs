//! Graph parameters behind the lower bounds: total domination of paths,
//! edge covers of paths and grids, domination of grids.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamSource {
    ClosedForm,
    DynamicProgram,
    BruteForce,
    /// Closed form used outside the range where it is known to hold.
    FormulaRegime,
}

impl ParamSource {
    pub fn name(self) -> &'static str {
        match self {
            ParamSource::ClosedForm => "closed-form",
            ParamSource::DynamicProgram => "dynamic-program",
            ParamSource::BruteForce => "brute-force",
            ParamSource::FormulaRegime => "formula-regime",
        }
    }
}

impl fmt::Display for ParamSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamValue {
    pub value: usize,
    pub source: ParamSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("P_{0} has a vertex without neighbours")]
    PathTooShort(usize),
    #[error("G_{{{0},{1}}} has an isolated vertex")]
    IsolatedVertex(usize, usize),
    #[error("{0} vertices exceeds the brute-force limit of {BRUTE_LIMIT}")]
    TooLarge(usize),
    #[error("empty graph")]
    Empty,
}

/// Minimum total dominating set of `P_n`, by dynamic program.
#[allow(clippy::needless_range_loop)]
pub fn gamma_t_path(n: usize) -> Result<usize, ParamError> {
    if n < 2 {
        return Err(ParamError::PathTooShort(n));
    }
    const INF: usize = usize::MAX / 2;
    // best[a][b]: min size with x_{i-1} = a, x_i = b and vertices < i dominated.
    let mut best = [[INF; 2]; 2];
    best[0][0] = 0;
    best[0][1] = 1;
    for _ in 1..n {
        let mut next = [[INF; 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                if best[a][b] == INF {
                    continue;
                }
                for c in 0..2 {
                    // vertex i sees x_{i-1} and x_{i+1}
                    if a == 1 || c == 1 {
                        next[b][c] = next[b][c].min(best[a][b] + c);
                    }
                }
            }
        }
        best = next;
    }
    Ok(best[1][0].min(best[1][1]))
}

/// `2⌊n/4⌋ + 1` when `n ≡ 1 (mod 4)`, otherwise `2⌈n/4⌉`.
pub fn gamma_t_path_closed_form(n: usize) -> Result<usize, ParamError> {
    if n < 2 {
        return Err(ParamError::PathTooShort(n));
    }
    Ok(if n % 4 == 1 { 2 * (n / 4) + 1 } else { 2 * n.div_ceil(4) })
}

/// Minimum edge cover of `P_n`.
pub fn rho_path(n: usize) -> Result<usize, ParamError> {
    if n < 2 {
        return Err(ParamError::PathTooShort(n));
    }
    Ok(n.div_ceil(2))
}

/// Minimum edge cover of the `n × m` grid.
pub fn rho_grid(n: usize, m: usize) -> Result<usize, ParamError> {
    if n == 0 || m == 0 {
        return Err(ParamError::Empty);
    }
    if n * m == 1 {
        return Err(ParamError::IsolatedVertex(n, m));
    }
    Ok((n * m).div_ceil(2))
}

/// `⌊(n+2)(m+2)/5⌋ − 4`.
pub fn gamma_grid_closed_form(n: usize, m: usize) -> usize {
    ((n + 2) * (m + 2) / 5).saturating_sub(4)
}

/// Widest profile the exact domination program runs on.
pub const GAMMA_DP_MAX_WIDTH: usize = 14;
/// Longest side the exact domination program tabulates.
pub const GAMMA_DP_MAX_ROWS: usize = 64;

/// Domination number of the `n × m` grid.
///
/// Exact (row-profile dynamic program) when the short side is at most
/// [`GAMMA_DP_MAX_WIDTH`], closed form when both sides are at least 16.
/// A short side of 15 also gets the closed form, marked
/// [`ParamSource::FormulaRegime`].
pub fn gamma_grid(n: usize, m: usize) -> Result<ParamValue, ParamError> {
    if n == 0 || m == 0 {
        return Err(ParamError::Empty);
    }
    let (w, h) = (n.min(m), n.max(m));
    if w <= GAMMA_DP_MAX_WIDTH && h <= GAMMA_DP_MAX_ROWS {
        return Ok(ParamValue { value: domination_table(w)[h - 1], source: ParamSource::DynamicProgram });
    }
    let source = if w >= 16 { ParamSource::ClosedForm } else { ParamSource::FormulaRegime };
    Ok(ParamValue { value: gamma_grid_closed_form(n, m), source })
}

type Table = Arc<Vec<usize>>;

fn domination_table(width: usize) -> Table {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<OnceLock<Table>>>>> = OnceLock::new();
    let slot = {
        let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
        map.entry(width).or_default().clone()
    };
    slot.get_or_init(|| Arc::new(domination_by_rows(width, GAMMA_DP_MAX_ROWS))).clone()
}

/// `out[h - 1]` is the domination number of the `h × width` grid.
///
/// Broken-profile program over cells in row-major order. Each of the
/// `width` profile cells is 0 (chosen), 1 (dominated) or 2 (not yet
/// dominated); a cell leaving the profile must not be 2.
fn domination_by_rows(width: usize, rows: usize) -> Vec<usize> {
    const INF: u8 = u8::MAX;
    let w = width;
    let pow: Vec<usize> = (0..=w).map(|i| 3usize.pow(i as u32)).collect();
    let states = pow[w];
    let mut has_two = vec![false; states];
    for i in 1..states {
        has_two[i] = i % 3 == 2 || has_two[i / 3];
    }
    // A virtual row 0 of dominated, unchosen cells.
    let all_ones: usize = (0..w).map(|i| pow[i]).sum();
    let mut cur = vec![INF; states];
    let mut nxt = vec![INF; states];
    cur[all_ones] = 0;
    let mut out = Vec::with_capacity(rows);
    for _ in 0..rows {
        for c in 0..w {
            nxt.fill(INF);
            let hi_count = pow[w - c - 1];
            let (left_digits, lo_count) = if c == 0 { (1, 1) } else { (3, pow[c - 1]) };
            for hi in 0..hi_count {
                for up in 0..3 {
                    for left in 0..left_digits {
                        let base = hi * pow[c + 1] + up * pow[c] + if c == 0 { 0 } else { left * pow[c - 1] };
                        for lo in 0..lo_count {
                            let idx = base + lo;
                            let cost = cur[idx];
                            if cost == INF {
                                continue;
                            }
                            let left_chosen = c > 0 && left == 0;
                            // Leave (r, c) unchosen: the square above leaves for good.
                            if up != 2 {
                                let d = if up == 0 || left_chosen { 1 } else { 2 };
                                let j = idx - up * pow[c] + d * pow[c];
                                if cost < nxt[j] {
                                    nxt[j] = cost;
                                }
                            }
                            // Choose (r, c): dominates the square above and to the left.
                            let mut j = idx - up * pow[c];
                            if c > 0 && left == 2 {
                                j -= pow[c - 1];
                            }
                            let v = cost + 1;
                            if v < nxt[j] {
                                nxt[j] = v;
                            }
                        }
                    }
                }
            }
            std::mem::swap(&mut cur, &mut nxt);
        }
        let best = (0..states).filter(|&i| !has_two[i]).map(|i| cur[i]).min().unwrap_or(INF);
        out.push(best as usize);
    }
    out
}

/// Graphs small enough for exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallGraph {
    Path(usize),
    Grid(usize, usize),
}

pub const BRUTE_LIMIT: usize = 24;

impl SmallGraph {
    pub fn order(self) -> usize {
        match self {
            SmallGraph::Path(n) => n,
            SmallGraph::Grid(n, m) => n * m,
        }
    }

    /// Open neighbourhoods as bitmasks, vertices numbered row-major from 0.
    fn neighbours(self) -> Vec<u32> {
        let (rows, cols) = match self {
            SmallGraph::Path(n) => (1, n),
            SmallGraph::Grid(n, m) => (n, m),
        };
        let mut out = vec![0u32; rows * cols];
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    out[v] |= 1 << (v + 1);
                    out[v + 1] |= 1 << v;
                }
                if r + 1 < rows {
                    out[v] |= 1 << (v + cols);
                    out[v + cols] |= 1 << v;
                }
            }
        }
        out
    }
}

/// A minimum total dominating set, found by trying subsets in increasing
/// size. Vertices are numbered from 1, row-major for grids.
pub fn brute_total_dominating_set(g: SmallGraph) -> Result<Vec<usize>, ParamError> {
    let n = g.order();
    if n == 0 {
        return Err(ParamError::Empty);
    }
    if n > BRUTE_LIMIT {
        return Err(ParamError::TooLarge(n));
    }
    let nb = g.neighbours();
    if nb.contains(&0) {
        return Err(match g {
            SmallGraph::Path(n) => ParamError::PathTooShort(n),
            SmallGraph::Grid(a, b) => ParamError::IsolatedVertex(a, b),
        });
    }
    let full = (1u32 << n) - 1;
    for k in 1..=n {
        let mut set: u32 = (1 << k) - 1;
        while set <= full {
            if nb.iter().all(|&x| x & set != 0) {
                return Ok((0..n).filter(|&v| set >> v & 1 == 1).map(|v| v + 1).collect());
            }
            // next subset of the same size
            let c = set & set.wrapping_neg();
            let r = set + c;
            set = (((r ^ set) >> 2) / c) | r;
        }
    }
    unreachable!("the whole vertex set dominates a graph without isolated vertices")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_t_small() {
        assert_eq!(gamma_t_path(2).unwrap(), 2);
        assert_eq!(gamma_t_path(5).unwrap(), 3);
        assert_eq!(gamma_t_path(6).unwrap(), 4);
        assert_eq!(gamma_t_path(8).unwrap(), 4);
        assert_eq!(gamma_t_path(10).unwrap(), 6);
        assert!(gamma_t_path(1).is_err());
    }

    #[test]
    fn closed_form_tracks_program() {
        for n in 2..200 {
            assert_eq!(gamma_t_path(n), gamma_t_path_closed_form(n), "n = {n}");
        }
    }

    #[test]
    fn printed_floor_reading_is_wrong() {
        // 2⌊6/4⌋ = 2, but P_6 needs 4.
        let n = 6;
        assert_eq!(2 * (n / 4), 2);
        assert_eq!(gamma_t_path(n).unwrap(), 4);
    }

    #[test]
    fn p8_witness() {
        assert_eq!(brute_total_dominating_set(SmallGraph::Path(8)).unwrap(), vec![2, 3, 6, 7]);
        assert_eq!(brute_total_dominating_set(SmallGraph::Path(4)).unwrap(), vec![2, 3]);
        assert_eq!(brute_total_dominating_set(SmallGraph::Path(6)).unwrap().len(), 4);
        assert!(brute_total_dominating_set(SmallGraph::Path(25)).is_err());
    }

    #[test]
    fn covers() {
        assert_eq!(rho_path(2).unwrap(), 1);
        assert_eq!(rho_path(5).unwrap(), 3);
        assert_eq!(rho_grid(2, 2).unwrap(), 2);
        assert_eq!(rho_grid(3, 3).unwrap(), 5);
        assert_eq!(rho_grid(4, 6).unwrap(), 12);
        assert!(rho_grid(1, 1).is_err());
    }

    #[test]
    fn grid_domination() {
        assert_eq!(gamma_grid(1, 1).unwrap().value, 1);
        assert_eq!(gamma_grid(3, 3).unwrap().value, 3);
        assert_eq!(gamma_grid(1, 7).unwrap().value, 3);
        assert_eq!(gamma_grid(4, 4).unwrap().value, 4);
        let v = gamma_grid(16, 16).unwrap();
        assert_eq!(v, ParamValue { value: 60, source: ParamSource::ClosedForm });
        assert_eq!(gamma_grid(15, 30).unwrap().source, ParamSource::FormulaRegime);
    }
}
