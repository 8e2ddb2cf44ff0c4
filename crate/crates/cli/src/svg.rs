//! Hand-written SVG region maps: one colored cell per divisor class, three
//! fixed colors, integer geometry only so output bytes are reproducible.

pub const COLOR_CONIC: &str = "#2a9d8f";
pub const COLOR_CM_ONLY: &str = "#e9c46a";
pub const COLOR_NOT_CM: &str = "#e8e8e8";

const CELL: i64 = 18;
const MARGIN_LEFT: i64 = 54;
const MARGIN_TOP: i64 = 30;
const MARGIN_BOTTOM: i64 = 44;
const MARGIN_RIGHT: i64 = 16;

/// Kind of one cell in a region map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Conic,
    CmOnly,
    NotCm,
}

impl Cell {
    fn color(self) -> &'static str {
        match self {
            Cell::Conic => COLOR_CONIC,
            Cell::CmOnly => COLOR_CM_ONLY,
            Cell::NotCm => COLOR_NOT_CM,
        }
    }
}

/// Renders a 2-D region map: `cell(i, j)` over `i` in `i_range` (left to
/// right) and `j` in `j_range` (bottom to top).
pub fn region_map_svg(
    title: &str,
    i_range: (i64, i64),
    j_range: (i64, i64),
    mut cell: impl FnMut(i64, i64) -> Cell,
) -> String {
    let cols = i_range.1 - i_range.0 + 1;
    let rows = j_range.1 - j_range.0 + 1;
    let width = MARGIN_LEFT + cols * CELL + MARGIN_RIGHT;
    let height = MARGIN_TOP + rows * CELL + MARGIN_BOTTOM;
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    s.push_str(&format!(
        "  <text x=\"{}\" y=\"18\" font-family=\"monospace\" font-size=\"13\">{}</text>\n",
        MARGIN_LEFT,
        xml_escape(title)
    ));
    for j in (j_range.0..=j_range.1).rev() {
        let row = j_range.1 - j; // 0 at the top
        let y = MARGIN_TOP + row * CELL;
        for i in i_range.0..=i_range.1 {
            let x = MARGIN_LEFT + (i - i_range.0) * CELL;
            s.push_str(&format!(
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" \
                 fill=\"{}\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n",
                cell(i, j).color()
            ));
        }
        // label every row on the left
        s.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"10\" \
             text-anchor=\"end\">j={j}</text>\n",
            MARGIN_LEFT - 6,
            y + CELL - 5
        ));
    }
    for i in i_range.0..=i_range.1 {
        let x = MARGIN_LEFT + (i - i_range.0) * CELL;
        s.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"10\" \
             text-anchor=\"middle\">{i}</text>\n",
            x + CELL / 2,
            MARGIN_TOP + rows * CELL + 14
        ));
    }
    s.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\">\
         i axis; {} conic (CM), {} CM only, {} not CM</text>\n",
        MARGIN_LEFT,
        MARGIN_TOP + rows * CELL + 32,
        COLOR_CONIC,
        COLOR_CM_ONLY,
        COLOR_NOT_CM
    ));
    s.push_str("</svg>\n");
    s
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
