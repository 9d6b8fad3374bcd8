//! Exporters: canonical JSON, a flat CSV of every lattice point in the
//! bounding box with its class, and a 2-dimensional SVG plot.

use gnslab_core::Point;

use crate::document::SemigroupDocument;
use crate::CliError;

/// Canonical pretty-printed JSON with a trailing newline.
pub fn to_json(doc: &SemigroupDocument) -> Result<String, CliError> {
    Ok(format!("{}\n", serde_json::to_string_pretty(doc)?))
}

/// Componentwise maximum over gaps and generators, plus a margin of one,
/// so every distinguished point sits strictly inside the plotted box.
fn bounding_box(doc: &SemigroupDocument) -> Vec<u32> {
    let mut bounds = vec![0u32; doc.dimension];
    for p in doc.gaps.iter().chain(doc.generators.iter()) {
        for (b, &c) in bounds.iter_mut().zip(p.coords()) {
            *b = (*b).max(c);
        }
    }
    for b in &mut bounds {
        *b += 1;
    }
    bounds
}

fn class_of(doc: &SemigroupDocument, p: &Point) -> &'static str {
    if doc.generators.iter().any(|g| g == p) {
        "generator"
    } else if doc.gaps.iter().any(|h| h == p) {
        "gap"
    } else {
        "element"
    }
}

/// Visits every point of the box `[0, bounds[0]] x ... x [0, bounds[d-1]]`
/// in lexicographic (row-major) order.
fn for_each_in_box(bounds: &[u32], f: &mut impl FnMut(&Point)) {
    fn rec(bounds: &[u32], prefix: &mut Vec<u32>, f: &mut impl FnMut(&Point)) {
        if prefix.len() == bounds.len() {
            f(&Point::new(prefix.clone()));
            return;
        }
        for v in 0..=bounds[prefix.len()] {
            prefix.push(v);
            rec(bounds, prefix, f);
            prefix.pop();
        }
    }
    rec(bounds, &mut vec![], f);
}

/// CSV of every lattice point in the bounding box, classed as `gap`,
/// `generator`, or `element`. Dimension 1 is padded with a constant
/// `y = 0` column so plotting tools get the same two-column shape as
/// dimension 2; dimension 3 uses `x,y,z`; higher dimensions use
/// `x1,...,xd`.
pub fn to_csv(doc: &SemigroupDocument) -> Result<String, CliError> {
    let bounds = bounding_box(doc);
    let mut out = String::new();
    match doc.dimension {
        1 | 2 => out.push_str("x,y,class\n"),
        3 => out.push_str("x,y,z,class\n"),
        d => {
            let cols: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
            out.push_str(&cols.join(","));
            out.push_str(",class\n");
        }
    }
    for_each_in_box(&bounds, &mut |p| {
        let mut coords: Vec<String> = p.coords().iter().map(u32::to_string).collect();
        if doc.dimension == 1 {
            coords.push("0".into());
        }
        out.push_str(&coords.join(","));
        out.push(',');
        out.push_str(class_of(doc, p));
        out.push('\n');
    });
    Ok(out)
}

const CELL: u32 = 32;
const PAD: u32 = 52;

/// SVG plot of a 2-dimensional document: gaps red, minimal generators
/// grey, remaining elements blue, with the mathematical orientation
/// (y grows upward).
pub fn to_svg(doc: &SemigroupDocument) -> Result<String, CliError> {
    if doc.dimension != 2 {
        return Err(CliError::UnsupportedDimension {
            dimension: doc.dimension,
        });
    }
    let bounds = bounding_box(doc);
    let (bx, by) = (bounds[0], bounds[1]);
    let width = 2 * PAD + bx * CELL;
    let height = 2 * PAD + by * CELL;
    let px = |x: u32| PAD + x * CELL;
    let py = |y: u32| PAD + (by - y) * CELL;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));

    // Grid.
    for x in 0..=bx {
        svg.push_str(&format!(
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#ddd\"/>\n",
            px(x),
            py(by),
            py(0)
        ));
    }
    for y in 0..=by {
        svg.push_str(&format!(
            "  <line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#ddd\"/>\n",
            py(y),
            px(0),
            px(bx)
        ));
    }

    // Axis labels, thinned so they stay readable on large boxes.
    let step = 1 + bx.max(by) / 16;
    for x in (0..=bx).step_by(step as usize) {
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" \
             fill=\"#444\">{x}</text>\n",
            px(x),
            py(0) + 20
        ));
    }
    for y in (0..=by).step_by(step as usize) {
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\" \
             fill=\"#444\">{y}</text>\n",
            px(0) - 10,
            py(y) + 4
        ));
    }

    // Points: elements first so the distinguished classes draw on top.
    let bounds_pts = bounds.clone();
    let mut circles = String::new();
    for_each_in_box(&bounds_pts, &mut |p| {
        let (x, y) = (p.coords()[0], p.coords()[1]);
        let (r, fill) = match class_of(doc, p) {
            "gap" => (7, "#d33c3c"),
            "generator" => (7, "#8a8a8a"),
            _ => (4, "#2d6cdf"),
        };
        circles.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{fill}\"/>\n",
            px(x),
            py(y)
        ));
    });
    svg.push_str(&circles);

    // Legend, kept inside the canvas even for tiny plots.
    let lx = width.saturating_sub(PAD + 96).max(8);
    for (i, (label, fill, r)) in [
        ("gap", "#d33c3c", 7),
        ("generator", "#8a8a8a", 7),
        ("element", "#2d6cdf", 4),
    ]
    .iter()
    .enumerate()
    {
        let ly = 18 + 20 * i as u32;
        svg.push_str(&format!(
            "  <circle cx=\"{lx}\" cy=\"{ly}\" r=\"{r}\" fill=\"{fill}\"/>\n"
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"13\" fill=\"#222\">{label}</text>\n",
            lx + 14,
            ly + 4
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
