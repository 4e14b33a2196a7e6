//! Plain-text board format and ASCII rendering.
//!
//! ```text
//! # comment
//! topology=rect rows=4 cols=4 start=1,1 obstacles=blocks
//! B 2 1
//! B 3 4
//! ```
//!
//! Wall boards use `WS r c` (between `(r,c)` and `(r+1,c)`) and `WE r c`
//! (between `(r,c)` and `(r,c+1)`).

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write;

use thiserror::Error;

use crate::board::{Board, BoardError, ObstacleKind, ObstacleSet, Position, Topology, Wall};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty document: missing header line")]
    MissingHeader,
    #[error("line {line}: malformed header: {reason}")]
    Header { line: usize, reason: String },
    #[error("line {line}: malformed obstacle line `{text}`")]
    Obstacle { line: usize, text: String },
    #[error("line {line}: `{tag}` lines are not allowed on a {kind} board")]
    WrongKind { line: usize, tag: String, kind: ObstacleKind },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: BoardError,
    },
}

impl ParseError {
    /// 1-based line the diagnostic refers to, when there is one.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::MissingHeader => None,
            ParseError::Header { line, .. }
            | ParseError::Obstacle { line, .. }
            | ParseError::WrongKind { line, .. }
            | ParseError::Invalid { line, .. } => Some(*line),
        }
    }
}

struct Header {
    topology: Topology,
    rows: usize,
    cols: usize,
    start: Position,
    kind: ObstacleKind,
}

fn parse_header(text: &str, line: usize) -> Result<Header, ParseError> {
    let bad = |reason: String| ParseError::Header { line, reason };
    let (mut topology, mut rows, mut cols, mut start, mut kind) = (None, None, None, None, None);
    for token in text.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| bad(format!("expected key=value, got `{token}`")))?;
        let seen = match key {
            "topology" => topology
                .replace(Topology::from_name(value).ok_or_else(|| bad(format!("unknown topology `{value}`")))?)
                .is_some(),
            "rows" => rows.replace(parse_dim(value).ok_or_else(|| bad(format!("bad rows `{value}`")))?).is_some(),
            "cols" => cols.replace(parse_dim(value).ok_or_else(|| bad(format!("bad cols `{value}`")))?).is_some(),
            "start" => start
                .replace(parse_pair(value).ok_or_else(|| bad(format!("bad start `{value}`, expected r,c")))?)
                .is_some(),
            "obstacles" => kind
                .replace(ObstacleKind::from_name(value).ok_or_else(|| bad(format!("unknown obstacle kind `{value}`")))?)
                .is_some(),
            other => return Err(bad(format!("unknown key `{other}`"))),
        };
        if seen {
            return Err(bad(format!("repeated key `{key}`")));
        }
    }
    Ok(Header {
        topology: topology.ok_or_else(|| bad("missing topology".into()))?,
        rows: rows.ok_or_else(|| bad("missing rows".into()))?,
        cols: cols.ok_or_else(|| bad("missing cols".into()))?,
        start: start.ok_or_else(|| bad("missing start".into()))?,
        kind: kind.ok_or_else(|| bad("missing obstacles".into()))?,
    })
}

fn parse_dim(s: &str) -> Option<usize> {
    s.parse().ok().filter(|&v| v > 0)
}

fn parse_pair(s: &str) -> Option<Position> {
    let (r, c) = s.split_once(',')?;
    Some(Position::new(r.trim().parse().ok()?, c.trim().parse().ok()?))
}

/// Parses a board document. Every invariant violation is reported with the
/// line that caused it.
pub fn parse_board(text: &str) -> Result<Board, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header_text) = lines.next().ok_or(ParseError::MissingHeader)?;
    let header = parse_header(header_text, header_line)?;
    let invalid = |line: usize| move |source: BoardError| ParseError::Invalid { line, source };

    if header.topology != Topology::Rect && header.kind == ObstacleKind::Walls {
        return Err(invalid(header_line)(BoardError::WallsUnsupported(header.topology)));
    }
    if !(1..=header.rows).contains(&header.start.row) || !(1..=header.cols).contains(&header.start.col) {
        return Err(invalid(header_line)(BoardError::StartOutOfBounds(header.start)));
    }

    let mut blocks = BTreeSet::new();
    let mut walls = BTreeSet::new();
    for (line, text) in lines {
        let mut parts = text.split_whitespace();
        let tag = parts.next().unwrap_or_default();
        let coords: Vec<Option<usize>> = parts.map(|t| t.parse().ok()).collect();
        let (r, c) = match coords.as_slice() {
            [Some(r), Some(c)] => (*r, *c),
            _ => return Err(ParseError::Obstacle { line, text: text.to_string() }),
        };
        match (tag, header.kind) {
            ("B", ObstacleKind::Blocks) => {
                let p = Position::new(r, c);
                if !(1..=header.rows).contains(&r) || !(1..=header.cols).contains(&c) {
                    return Err(invalid(line)(BoardError::BlockOutOfBounds(p)));
                }
                if p == header.start {
                    return Err(invalid(line)(BoardError::BlockOnStart(p)));
                }
                if !blocks.insert(p) {
                    return Err(invalid(line)(BoardError::DuplicateBlock(p)));
                }
            }
            ("WS" | "WE", ObstacleKind::Walls) => {
                let w = if tag == "WS" { Wall::south_of(r, c) } else { Wall::east_of(r, c) };
                if !w.fits(header.rows, header.cols) {
                    return Err(invalid(line)(BoardError::WallOutOfBounds(w)));
                }
                if !walls.insert(w) {
                    return Err(invalid(line)(BoardError::DuplicateWall(w)));
                }
            }
            ("B" | "WS" | "WE", kind) => {
                return Err(ParseError::WrongKind { line, tag: tag.to_string(), kind });
            }
            _ => return Err(ParseError::Obstacle { line, text: text.to_string() }),
        }
    }

    let obstacles = match header.kind {
        ObstacleKind::Blocks => ObstacleSet::Blocks(blocks),
        ObstacleKind::Walls => ObstacleSet::Walls(walls),
    };
    Board::new(header.topology, header.rows, header.cols, obstacles, header.start).map_err(invalid(header_line))
}

/// Canonical text form; obstacle lines in row-major order.
pub fn serialize_board(board: &Board) -> String {
    let mut out = format!(
        "topology={} rows={} cols={} start={},{} obstacles={}\n",
        board.topology(),
        board.rows(),
        board.cols(),
        board.start().row,
        board.start().col,
        board.obstacle_kind(),
    );
    match board.obstacles() {
        ObstacleSet::Blocks(blocks) => {
            for p in blocks {
                let _ = writeln!(out, "B {} {}", p.row, p.col);
            }
        }
        ObstacleSet::Walls(walls) => {
            for w in walls {
                let _ = writeln!(out, "{w}");
            }
        }
    }
    out
}

/// Text picture of a board: `#` block, `R` start, `*` overlay, `.` empty.
///
/// Block boards use one character per square. Wall boards interleave
/// half-step rows and columns, drawing walls as `-` and `|`.
pub fn render_ascii(board: &Board, overlay: Option<&BTreeSet<Position>>) -> String {
    let overlay: HashSet<Position> = overlay.map(|o| o.iter().copied().collect()).unwrap_or_default();
    let glyph = |p: Position| {
        if p == board.start() {
            'R'
        } else if board.is_block(p) {
            '#'
        } else if overlay.contains(&p) {
            '*'
        } else {
            '.'
        }
    };
    let mut out = String::new();
    let walls = board.obstacle_kind() == ObstacleKind::Walls;
    for r in 1..=board.rows() {
        for c in 1..=board.cols() {
            let p = Position::new(r, c);
            out.push(glyph(p));
            if walls && c < board.cols() {
                out.push(if board.wall_east_of(p) { '|' } else { ' ' });
            }
        }
        out.push('\n');
        if walls && r < board.rows() {
            for c in 1..=board.cols() {
                out.push(if board.wall_south_of(Position::new(r, c)) { '-' } else { ' ' });
                if c < board.cols() {
                    out.push(' ');
                }
            }
            out.push('\n');
        }
    }
    out
}
