//! SVG pictures of boards.

use std::fmt::Write;

use slidegrid::{Board, ObstacleSet, Position, Topology, VerificationReport, WallSide};

const CELL: usize = 32;
const MARGIN: usize = 8;

const BLOCK: &str = "#404040";
const EMPTY: &str = "#ffffff";
const STOPPED: &str = "#6baed6";
const PASSED: &str = "#c6dbef";
const MISSING: &str = "#fcae91";
const GRID: &str = "#bdbdbd";
const WALL: &str = "#000000";
const ROBOT: &str = "#d62728";

fn corner(i: usize) -> usize {
    MARGIN + i * CELL
}

/// Deterministic SVG for `board`. With a report, squares are shaded by
/// coverage: stopped on, passed over only, or missing.
pub fn render_svg(board: &Board, report: Option<&VerificationReport>) -> String {
    let (w, h) = (2 * MARGIN + board.cols() * CELL, 2 * MARGIN + board.rows() * CELL);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(
        s,
        "<title>{} {}x{} {}</title>",
        board.topology(),
        board.rows(),
        board.cols(),
        board.obstacle_kind()
    );
    for p in board.squares() {
        let fill = if board.is_block(p) {
            BLOCK
        } else {
            match report {
                Some(r) if r.stops.contains(&p) => STOPPED,
                Some(r) if r.passed.contains(&p) => PASSED,
                Some(r) if r.missing.contains(&p) => MISSING,
                _ => EMPTY,
            }
        };
        let _ = writeln!(
            s,
            r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="{GRID}" stroke-width="1"/>"#,
            corner(p.col - 1),
            corner(p.row - 1)
        );
    }
    if let ObstacleSet::Walls(walls) = board.obstacles() {
        for wall in walls {
            let Position { row, col } = wall.anchor;
            let (x1, y1, x2, y2) = match wall.side {
                WallSide::EastOf => (corner(col), corner(row - 1), corner(col), corner(row)),
                WallSide::SouthOf => (corner(col - 1), corner(row), corner(col), corner(row)),
            };
            let _ = writeln!(
                s,
                r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{WALL}" stroke-width="4" stroke-linecap="square"/>"#
            );
        }
    }
    // A torus has no boundary to bounce off; draw its edge dashed.
    let dash = if board.topology() == Topology::Torus { r#" stroke-dasharray="6 4""# } else { "" };
    let _ = writeln!(
        s,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="{WALL}" stroke-width="3"{dash}/>"#,
        board.cols() * CELL,
        board.rows() * CELL
    );
    let start = board.start();
    let _ = writeln!(
        s,
        r#"<circle cx="{}" cy="{}" r="{}" fill="{ROBOT}"/>"#,
        corner(start.col - 1) + CELL / 2,
        corner(start.row - 1) + CELL / 2,
        CELL * 3 / 10
    );
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use slidegrid::{verify, Mode, ObstacleKind};

    #[test]
    fn empty_two_by_two() {
        let b = Board::empty(Topology::Rect, 2, 2, ObstacleKind::Blocks).unwrap();
        let svg = render_svg(&b, None);
        assert_eq!(svg.matches("<rect x=").count(), 4 + 1);
        assert_eq!(svg, render_svg(&b, None));
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn blocks_and_shading() {
        let b = Board::with_blocks(Topology::Rect, 4, 4, [(2, 1), (3, 4)]).unwrap();
        let r = verify(&b, Mode::Stop);
        let svg = render_svg(&b, Some(&r));
        // (2,1) and (3,4) are dark
        assert!(svg.contains(&format!(r#"<rect x="8" y="40" width="32" height="32" fill="{BLOCK}""#)));
        assert!(svg.contains(&format!(r#"<rect x="104" y="72" width="32" height="32" fill="{BLOCK}""#)));
        // (2,3) is passed over but never a stop
        assert!(svg.contains(&format!(r#"<rect x="72" y="40" width="32" height="32" fill="{PASSED}""#)));
    }

    #[test]
    fn walls_are_segments() {
        let b = Board::with_walls(2, 2, [slidegrid::Wall::east_of(1, 1), slidegrid::Wall::south_of(1, 2)]).unwrap();
        let svg = render_svg(&b, None);
        assert!(svg.contains(r#"<line x1="40" y1="8" x2="40" y2="40""#));
        assert!(svg.contains(r#"<line x1="40" y1="40" x2="72" y2="40""#));
    }
}
