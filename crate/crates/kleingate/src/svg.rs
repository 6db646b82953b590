//! Minimal self-contained SVG writers: no external fonts, inline styles only.
//!
//! Heatmaps use a fixed five-stop color ramp sampled linearly between
//! (0.00, #440154), (0.25, #3b528b), (0.50, #21918c), (0.75, #5ec962),
//! (1.00, #fde725), mapping the data minimum to 0 and the maximum to 1, so a
//! given grid always renders to the same bytes.

pub const BLUE: &str = "#1f4e9c";
pub const RED: &str = "#c23b22";

const RAMP: [(f64, [u8; 3]); 5] = [
    (0.00, [0x44, 0x01, 0x54]),
    (0.25, [0x3b, 0x52, 0x8b]),
    (0.50, [0x21, 0x91, 0x8c]),
    (0.75, [0x5e, 0xc9, 0x62]),
    (1.00, [0xfd, 0xe7, 0x25]),
];

fn ramp_color(t: f64) -> String {
    let t = t.clamp(0.0, 1.0);
    let mut lo = RAMP[0];
    let mut hi = RAMP[RAMP.len() - 1];
    for pair in RAMP.windows(2) {
        if t >= pair[0].0 && t <= pair[1].0 {
            lo = pair[0];
            hi = pair[1];
            break;
        }
    }
    let span = (hi.0 - lo.0).max(1e-12);
    let f = (t - lo.0) / span;
    let mix = |a: u8, b: u8| (a as f64 + f * (b as f64 - a as f64)).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(lo.1[0], hi.1[0]), mix(lo.1[1], hi.1[1]), mix(lo.1[2], hi.1[2]))
}

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_BOTTOM: f64 = 50.0;
const MARGIN_TOP: f64 = 34.0;
const MARGIN_RIGHT: f64 = 20.0;
const PLOT_W: f64 = 560.0;
const PLOT_H: f64 = 360.0;

fn open_svg(out: &mut String, title: &str) {
    let width = MARGIN_LEFT + PLOT_W + MARGIN_RIGHT;
    let height = MARGIN_TOP + PLOT_H + MARGIN_BOTTOM;
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"20\" font-family=\"monospace\" font-size=\"14\" \
         text-anchor=\"middle\">{title}</text>\n",
        MARGIN_LEFT + PLOT_W / 2.0
    ));
}

fn axis_labels(out: &mut String, x_label: &str, y_label: &str, x_range: (f64, f64), y_range: (f64, f64)) {
    let x0 = MARGIN_LEFT;
    let y0 = MARGIN_TOP + PLOT_H;
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" \
         text-anchor=\"middle\">{x_label}</text>\n",
        x0 + PLOT_W / 2.0,
        y0 + 36.0
    ));
    out.push_str(&format!(
        "<text x=\"16\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" \
         transform=\"rotate(-90 16 {:.1})\">{y_label}</text>\n",
        MARGIN_TOP + PLOT_H / 2.0,
        MARGIN_TOP + PLOT_H / 2.0
    ));
    // corner tick labels
    out.push_str(&format!(
        "<text x=\"{x0:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"10\">{:.4}</text>\n",
        y0 + 14.0,
        x_range.0
    ));
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"10\" \
         text-anchor=\"end\">{:.4}</text>\n",
        x0 + PLOT_W,
        y0 + 14.0,
        x_range.1
    ));
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{y0:.1}\" font-family=\"monospace\" font-size=\"10\" \
         text-anchor=\"end\">{:.4}</text>\n",
        x0 - 4.0,
        y_range.0
    ));
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"10\" \
         text-anchor=\"end\">{:.4}</text>\n",
        x0 - 4.0,
        MARGIN_TOP + 10.0,
        y_range.1
    ));
}

/// Heatmap of `grid[row][col]`: rows span `y_range` bottom-to-top, columns span
/// `x_range` left-to-right.
pub fn heatmap_svg(
    title: &str,
    x_label: &str,
    y_label: &str,
    x_range: (f64, f64),
    y_range: (f64, f64),
    grid: &[Vec<f64>],
) -> String {
    let rows = grid.len();
    let cols = grid.first().map(Vec::len).unwrap_or(0);
    assert!(rows > 0 && cols > 0, "heatmap grid must be nonempty");

    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for row in grid {
        for &v in row {
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    let span = (hi - lo).max(1e-300);

    let mut out = String::new();
    open_svg(&mut out, title);
    let cell_w = PLOT_W / cols as f64;
    let cell_h = PLOT_H / rows as f64;
    for (ri, row) in grid.iter().enumerate() {
        // row 0 is the bottom of the plot
        let y = MARGIN_TOP + PLOT_H - (ri + 1) as f64 * cell_h;
        for (ci, &v) in row.iter().enumerate() {
            let x = MARGIN_LEFT + ci as f64 * cell_w;
            let color = ramp_color((v - lo) / span);
            out.push_str(&format!(
                "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"{color}\"/>\n",
                cell_w + 0.05,
                cell_h + 0.05
            ));
        }
    }
    axis_labels(&mut out, x_label, y_label, x_range, y_range);
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"10\">range [{lo:.6e}, {hi:.6e}]</text>\n",
        MARGIN_LEFT,
        MARGIN_TOP + PLOT_H + 28.0
    ));
    out.push_str("</svg>\n");
    out
}

/// Line plot of one or more (x, y) series with fixed colors.
pub fn line_plot_svg(
    title: &str,
    x_label: &str,
    y_label: &str,
    series: &[(&str, &str, &[(f64, f64)])],
) -> String {
    let mut x_lo = f64::INFINITY;
    let mut x_hi = f64::NEG_INFINITY;
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for (_, _, pts) in series {
        for &(x, y) in *pts {
            x_lo = x_lo.min(x);
            x_hi = x_hi.max(x);
            y_lo = y_lo.min(y);
            y_hi = y_hi.max(y);
        }
    }
    let x_span = (x_hi - x_lo).max(1e-300);
    let y_span = (y_hi - y_lo).max(1e-300);

    let mut out = String::new();
    open_svg(&mut out, title);
    out.push_str(&format!(
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{PLOT_W}\" height=\"{PLOT_H}\" \
         fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n"
    ));
    for (idx, (name, color, pts)) in series.iter().enumerate() {
        let mut path = String::new();
        for &(x, y) in *pts {
            let px = MARGIN_LEFT + (x - x_lo) / x_span * PLOT_W;
            let py = MARGIN_TOP + PLOT_H - (y - y_lo) / y_span * PLOT_H;
            path.push_str(&format!("{px:.2},{py:.2} "));
        }
        out.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
            path.trim_end()
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"11\" \
             fill=\"{color}\">{name}</text>\n",
            MARGIN_LEFT + PLOT_W - 110.0,
            MARGIN_TOP + 16.0 + 14.0 * idx as f64
        ));
    }
    axis_labels(&mut out, x_label, y_label, (x_lo, x_hi), (y_lo, y_hi));
    out.push_str("</svg>\n");
    out
}
