//! SVG and TikZ drawings of support hulls and Newton polygons.
//!
//! Output is a pure function of the input: 40 px per lattice unit, a 20 px
//! margin, integer pixel coordinates throughout.

use std::fmt::Write;

use mixbound::geom::{Face, LatticePolygon};
use mixbound::newton::{NewtonPoint, NewtonPolygon, Ordinate};
use mixbound::{Error, ExponentVec, Rational, Result};

pub const UNIT: i64 = 40;
pub const MARGIN: i64 = 20;
pub const DOT_RADIUS: i64 = 3;
const LABEL_OFFSET: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Tikz,
}

/// An optional second panel with the Newton polygon for one face.
#[derive(Debug, Clone)]
pub struct NewtonPanel<'a> {
    pub title: String,
    pub points: &'a [NewtonPoint],
    pub polygon: &'a NewtonPolygon,
}

/// Integer pixel for `UNIT * q`, rounding halves up.
fn px(q: Rational) -> i64 {
    let (n, d) = (*q.numer() as i128, *q.denom() as i128);
    (2 * UNIT as i128 * n + d).div_euclid(2 * d) as i64
}

struct Frame {
    left: i64,
    xmin: i64,
    ymax: i64,
}

impl Frame {
    fn x(&self, v: i64) -> i64 {
        self.left + MARGIN + (v - self.xmin) * UNIT
    }

    fn y(&self, v: i64) -> i64 {
        MARGIN + (self.ymax - v) * UNIT
    }

    fn yq(&self, q: Rational) -> i64 {
        MARGIN + self.ymax * UNIT - px(q)
    }
}

fn range(values: impl Iterator<Item = i64>) -> (i64, i64) {
    values.fold((0, 0), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

fn floor_ceil(q: Rational) -> (i64, i64) {
    (q.floor().to_integer(), q.ceil().to_integer())
}

fn newton_extent(panel: &NewtonPanel<'_>) -> (i64, i64, i64, bool) {
    let xmax = panel.points.iter().map(|p| p.index as i64).max().unwrap_or(0);
    let mut ylo = 0;
    let mut yhi = 0;
    let mut has_inf = false;
    for p in panel.points {
        match p.ordinate {
            Ordinate::Finite(q) => {
                let (lo, hi) = floor_ceil(q);
                ylo = ylo.min(lo);
                yhi = yhi.max(hi);
            }
            Ordinate::Infinite => has_inf = true,
        }
    }
    // one extra row above for points at infinity
    if has_inf {
        yhi += 1;
    }
    (xmax, ylo, yhi, has_inf)
}

/// Draws the support, the hull with faces labelled `F1..FR` in
/// counter-clockwise order from the lex-smallest vertex, and optionally a
/// Newton polygon panel.
pub fn render_polygon(
    hull: &LatticePolygon,
    support: &[ExponentVec],
    faces: &[Face],
    newton: Option<&NewtonPanel<'_>>,
    format: Format,
) -> Result<String> {
    if !hull.is_polygon() {
        return Err(Error::DegenerateHull("only polygons can be drawn".into()));
    }
    match format {
        Format::Svg => Ok(svg(hull, support, faces, newton)),
        Format::Tikz => Ok(tikz(hull, support, faces, newton)),
    }
}

fn svg(
    hull: &LatticePolygon,
    support: &[ExponentVec],
    faces: &[Face],
    newton: Option<&NewtonPanel<'_>>,
) -> String {
    let (xmin, xmax) = range(support.iter().map(|p| p.e1));
    let (ymin, ymax) = range(support.iter().map(|p| p.e2));
    let hull_w = (xmax - xmin) * UNIT + 2 * MARGIN;
    let hull_h = (ymax - ymin) * UNIT + 2 * MARGIN;
    let mut width = hull_w;
    let mut height = hull_h;
    let newton_extent = newton.map(newton_extent);
    if let Some((nx, nlo, nhi, _)) = newton_extent {
        width += nx * UNIT + 2 * MARGIN;
        height = height.max((nhi - nlo) * UNIT + 2 * MARGIN);
    }

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let frame = Frame { left: 0, xmin, ymax };
    let _ = writeln!(s, r#"<g id="hull">"#);
    let _ = writeln!(
        s,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray"/>"#,
        frame.x(xmin),
        frame.y(0),
        frame.x(xmax),
        frame.y(0)
    );
    let _ = writeln!(
        s,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray"/>"#,
        frame.x(0),
        frame.y(ymin),
        frame.x(0),
        frame.y(ymax)
    );
    let pts: Vec<String> = hull
        .vertices()
        .iter()
        .map(|v| format!("{},{}", frame.x(v.e1), frame.y(v.e2)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polygon points="{}" fill="none" stroke="black"/>"#,
        pts.join(" ")
    );
    for p in support {
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="{DOT_RADIUS}" fill="black"/>"#,
            frame.x(p.e1),
            frame.y(p.e2)
        );
    }
    for (i, face) in faces.iter().enumerate() {
        let mx = (frame.x(face.start.e1) + frame.x(face.end.e1)) / 2;
        let my = (frame.y(face.start.e2) + frame.y(face.end.e2)) / 2;
        let lx = mx + LABEL_OFFSET * face.normal.e1.signum();
        let ly = my - LABEL_OFFSET * face.normal.e2.signum() + 4;
        let _ = writeln!(
            s,
            r#"<text x="{lx}" y="{ly}" font-size="12" text-anchor="middle">F{}</text>"#,
            i + 1
        );
    }
    let _ = writeln!(s, "</g>");

    if let (Some(panel), Some((nx, nlo, nhi, has_inf))) = (newton, newton_extent) {
        let frame = Frame {
            left: hull_w,
            xmin: 0,
            ymax: nhi,
        };
        let _ = writeln!(s, r#"<g id="newton">"#);
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="12">{}</text>"#,
            frame.x(0),
            MARGIN - 6,
            escape(&panel.title)
        );
        let _ = writeln!(
            s,
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray"/>"#,
            frame.x(0),
            frame.y(0),
            frame.x(nx),
            frame.y(0)
        );
        let _ = writeln!(
            s,
            r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray"/>"#,
            frame.x(0),
            frame.y(nlo),
            frame.x(0),
            frame.y(nhi)
        );
        let line: Vec<String> = panel
            .polygon
            .vertices
            .iter()
            .map(|&(i, q)| format!("{},{}", frame.x(i as i64), frame.yq(q)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="black"/>"#,
            line.join(" ")
        );
        for p in panel.points {
            match p.ordinate {
                Ordinate::Finite(q) => {
                    let _ = writeln!(
                        s,
                        r#"<circle cx="{}" cy="{}" r="{DOT_RADIUS}" fill="black"/>"#,
                        frame.x(p.index as i64),
                        frame.yq(q)
                    );
                }
                Ordinate::Infinite if has_inf => {
                    let _ = writeln!(
                        s,
                        r#"<circle cx="{}" cy="{}" r="{DOT_RADIUS}" fill="none" stroke="black"/>"#,
                        frame.x(p.index as i64),
                        frame.y(nhi)
                    );
                }
                Ordinate::Infinite => {}
            }
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn tikz_num(q: Rational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{{{}/{}}}", q.numer(), q.denom())
    }
}

fn tikz(
    hull: &LatticePolygon,
    support: &[ExponentVec],
    faces: &[Face],
    newton: Option<&NewtonPanel<'_>>,
) -> String {
    let (xmin, xmax) = range(support.iter().map(|p| p.e1));
    let (ymin, ymax) = range(support.iter().map(|p| p.e2));
    let mut s = String::new();
    s.push_str("\\begin{tikzpicture}[x=1cm,y=1cm]\n");
    let _ = writeln!(s, "  \\draw[gray] ({xmin},0) -- ({xmax},0);");
    let _ = writeln!(s, "  \\draw[gray] (0,{ymin}) -- (0,{ymax});");
    let path: Vec<String> = hull
        .vertices()
        .iter()
        .map(|v| format!("({},{})", v.e1, v.e2))
        .collect();
    let _ = writeln!(s, "  \\draw {} -- cycle;", path.join(" -- "));
    for p in support {
        let _ = writeln!(s, "  \\fill ({},{}) circle (1.5pt);", p.e1, p.e2);
    }
    for (i, face) in faces.iter().enumerate() {
        let mx = Rational::new(face.start.e1 + face.end.e1, 2)
            + Rational::new(3 * face.normal.e1.signum(), 10);
        let my = Rational::new(face.start.e2 + face.end.e2, 2)
            + Rational::new(3 * face.normal.e2.signum(), 10);
        let _ = writeln!(s, "  \\node at ({},{}) {{$F_{}$}};", tikz_num(mx), tikz_num(my), i + 1);
    }
    if let Some(panel) = newton {
        let dx = xmax + 2;
        let (nx, nlo, nhi, _) = newton_extent(panel);
        let _ = writeln!(s, "  \\begin{{scope}}[xshift={dx}cm]");
        let _ = writeln!(s, "    \\node[anchor=south west] at (0,{nhi}) {{{}}};", panel.title);
        let _ = writeln!(s, "    \\draw[gray] (0,0) -- ({nx},0);");
        let _ = writeln!(s, "    \\draw[gray] (0,{nlo}) -- (0,{nhi});");
        let line: Vec<String> = panel
            .polygon
            .vertices
            .iter()
            .map(|&(i, q)| format!("({},{})", i, tikz_num(q)))
            .collect();
        if line.len() > 1 {
            let _ = writeln!(s, "    \\draw {};", line.join(" -- "));
        }
        for p in panel.points {
            match p.ordinate {
                Ordinate::Finite(q) => {
                    let _ = writeln!(s, "    \\fill ({},{}) circle (1.5pt);", p.index, tikz_num(q));
                }
                Ordinate::Infinite => {
                    let _ = writeln!(s, "    \\draw ({},{nhi}) circle (1.5pt);", p.index);
                }
            }
        }
        s.push_str("  \\end{scope}\n");
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}
