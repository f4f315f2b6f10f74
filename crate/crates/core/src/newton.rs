//! Newton polygons with respect to valuations of the coefficient ring, and the
//! norm extensions they determine.
//!
//! A polynomial `f` is read as `sum_i q_i(y) x^i` for a main variable `x` and
//! coefficients in `F_p[y]`, after an [`AxisMap`] chooses which of `u1`, `u2`
//! plays `x` and whether `y` is inverted. A base valuation on `F_p[y]` gives
//! the points `(i, -log_p |q_i|)`; each segment of their lower hull with slope
//! `λ` yields an extension with `log_p |x| = λ`. Pulled back to the original
//! variables, `(log_p |u1|, log_p |u2|)` is an outward normal of a face of the
//! support hull.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{ExtInt, FpPoly};
use crate::geom::{convex_hull, faces, Face};
use crate::laurent::{check_generator, AxisMap, LaurentPoly, PolyInU1};
use crate::rational::{int, Rational};

/// A valuation on `F_p[y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseValuation {
    /// `|a| = p^(-ord_g a)` for an irreducible `g`.
    FiniteAt(FpPoly),
    /// `|a| = p^(deg a)`.
    InfinityDeg,
}

/// A base valuation together with the orientation that selects the
/// coefficient variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    kind: BaseValuation,
    map: AxisMap,
}

impl Valuation {
    /// `ord_g` on the coefficient ring; `g` must be irreducible.
    pub fn finite_at(g: FpPoly, map: AxisMap) -> Result<Self> {
        if !g.is_irreducible()? {
            return Err(Error::InvalidArgument(format!("{g} is not irreducible")));
        }
        Ok(Valuation {
            kind: BaseValuation::FiniteAt(g.monic()),
            map,
        })
    }

    /// `ord_y` on the coefficient ring, the valuation the face construction uses.
    pub fn at_variable(field: crate::field::Field, map: AxisMap) -> Self {
        Valuation {
            kind: BaseValuation::FiniteAt(FpPoly::t(field)),
            map,
        }
    }

    pub fn infinity(map: AxisMap) -> Self {
        Valuation {
            kind: BaseValuation::InfinityDeg,
            map,
        }
    }

    pub fn kind(&self) -> &BaseValuation {
        &self.kind
    }

    pub fn map(&self) -> AxisMap {
        self.map
    }

    /// `log_p |y|` of the coefficient variable itself.
    fn log_of_variable(&self) -> Rational {
        match &self.kind {
            BaseValuation::InfinityDeg => int(1),
            BaseValuation::FiniteAt(g) => {
                let y = FpPoly::t(g.field());
                let m = y.ord_at(g).finite().expect("y is nonzero");
                int(-m)
            }
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.map.coefficient_variable();
        let shown = if self.map.invert {
            format!("{var}^-1")
        } else {
            var.to_string()
        };
        match &self.kind {
            BaseValuation::FiniteAt(g) => write!(f, "ord[{}] on F_p[{shown}]", g.display_in(&shown)),
            BaseValuation::InfinityDeg => write!(f, "deg on F_p[{shown}]"),
        }
    }
}

/// A Newton-point ordinate; `Infinite` marks a zero coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ordinate {
    Finite(Rational),
    Infinite,
}

impl Ordinate {
    pub fn finite(self) -> Option<Rational> {
        match self {
            Ordinate::Finite(q) => Some(q),
            Ordinate::Infinite => None,
        }
    }
}

impl From<ExtInt> for Ordinate {
    fn from(e: ExtInt) -> Self {
        match e {
            ExtInt::Finite(n) => Ordinate::Finite(int(n)),
            ExtInt::Infinite => Ordinate::Infinite,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NewtonPoint {
    pub index: usize,
    pub ordinate: Ordinate,
}

impl fmt::Display for NewtonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ordinate {
            Ordinate::Finite(q) => write!(f, "({},{})", self.index, q),
            Ordinate::Infinite => write!(f, "({},inf)", self.index),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub slope: Rational,
    pub start: usize,
    pub end: usize,
}

/// Lower convex hull of the finite Newton points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(usize, Rational)>,
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    /// Value of the polygonal line at `x`, for `x` within its range.
    pub fn height_at(&self, x: usize) -> Option<Rational> {
        let first = self.vertices.first()?;
        if self.segments.is_empty() {
            return (first.0 == x).then_some(first.1);
        }
        self.segments.iter().find_map(|s| {
            if s.start <= x && x <= s.end {
                let y0 = self
                    .vertices
                    .iter()
                    .find(|v| v.0 == s.start)
                    .expect("segment endpoints are vertices")
                    .1;
                Some(y0 + s.slope * int((x - s.start) as i64))
            } else {
                None
            }
        })
    }
}

/// An extension of a base valuation to the quotient ring, recorded by the
/// log-vector `(log_p |u1|, log_p |u2|)` in the original variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedNorm {
    pub log_u1: Rational,
    pub log_u2: Rational,
    /// Slope of the Newton-polygon segment that produced this extension.
    pub slope: Rational,
    pub valuation: Valuation,
}

impl ExtendedNorm {
    pub fn log_vector(&self) -> (Rational, Rational) {
        (self.log_u1, self.log_u2)
    }
}

/// `(i, -log_p |q_i|)` for each coefficient of `f`.
pub fn newton_points(f: &PolyInU1, val: &BaseValuation) -> Vec<NewtonPoint> {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(index, q)| NewtonPoint {
            index,
            ordinate: match val {
                BaseValuation::FiniteAt(g) => q.ord_at(g).into(),
                BaseValuation::InfinityDeg => q.neg_log_infinity_norm().into(),
            },
        })
        .collect()
}

/// Lower convex hull of the finite points; infinite ordinates lie above every
/// line and are skipped. Collinear interior points are not vertices.
pub fn lower_hull(points: &[NewtonPoint]) -> NewtonPolygon {
    let mut finite: Vec<(usize, Rational)> = points
        .iter()
        .filter_map(|p| p.ordinate.finite().map(|y| (p.index, y)))
        .collect();
    finite.sort_by_key(|p| p.0);

    let turn = |o: (usize, Rational), a: (usize, Rational), b: (usize, Rational)| {
        let (ax, ay) = (int(a.0 as i64 - o.0 as i64), a.1 - o.1);
        let (bx, by) = (int(b.0 as i64 - o.0 as i64), b.1 - o.1);
        ax * by - ay * bx
    };
    let mut hull: Vec<(usize, Rational)> = Vec::new();
    for p in finite {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= Rational::zero() {
            hull.pop();
        }
        hull.push(p);
    }
    let segments = hull
        .windows(2)
        .map(|w| Segment {
            slope: (w[1].1 - w[0].1) / int((w[1].0 - w[0].0) as i64),
            start: w[0].0,
            end: w[1].0,
        })
        .collect();
    NewtonPolygon {
        vertices: hull,
        segments,
    }
}

/// The oriented polynomial `f` is viewed as under `map`.
fn oriented(f: &LaurentPoly, map: AxisMap) -> Result<PolyInU1> {
    map.apply_poly(f).as_poly_in_u1()
}

/// Newton points and lower hull of `f` under a valuation.
pub fn newton_polygon(f: &LaurentPoly, val: &Valuation) -> Result<(Vec<NewtonPoint>, NewtonPolygon)> {
    let q = oriented(f, val.map)?;
    let points = newton_points(&q, &val.kind);
    let poly = lower_hull(&points);
    Ok((points, poly))
}

/// One extension per Newton-polygon segment slope.
pub fn extended_norms(f: &LaurentPoly, val: &Valuation) -> Result<Vec<ExtendedNorm>> {
    check_generator(f)?;
    let (_, poly) = newton_polygon(f, val)?;
    let c = val.log_of_variable();
    Ok(poly
        .segments
        .iter()
        .map(|s| {
            let (log_u1, log_u2) = val.map.pull_back((s.slope, c));
            ExtendedNorm {
                log_u1,
                log_u2,
                slope: s.slope,
                valuation: val.clone(),
            }
        })
        .collect())
}

/// Everything the face construction computed for one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceNorm {
    pub face: Face,
    pub points: Vec<NewtonPoint>,
    pub polygon: NewtonPolygon,
    pub norm: ExtendedNorm,
}

/// Builds a norm whose log-vector is an outward normal of `face`.
///
/// Exchanges `u1` and `u2` when the face is vertical, inverts the coefficient
/// variable when the face points upwards, takes `ord_y` on the coefficient
/// ring and picks the Newton segment whose slope equals the face slope.
pub fn face_norm_for(f: &LaurentPoly, face: &Face) -> Result<FaceNorm> {
    check_generator(f)?;
    let hull = convex_hull(&f.support())?;
    if !faces(&hull)?.contains(face) {
        return Err(Error::FaceNotInHull);
    }
    let swap = face.direction.e1 == 0;
    let n = if swap { face.normal.swapped() } else { face.normal };
    let invert = n.e2 > 0;
    let map = AxisMap { swap, invert };
    let n = map.apply(face.normal);
    debug_assert!(n.e2 < 0);
    // (λ, -1) ∝ (n1, n2)
    let slope = Rational::new(n.e1, -n.e2);

    let val = Valuation::at_variable(f.field(), map);
    let (points, polygon) = newton_polygon(f, &val)?;
    if !polygon.segments.iter().any(|s| s.slope == slope) {
        return Err(Error::FaceNotInHull);
    }
    let (log_u1, log_u2) = map.pull_back((slope, int(-1)));
    Ok(FaceNorm {
        face: *face,
        points,
        polygon,
        norm: ExtendedNorm {
            log_u1,
            log_u2,
            slope,
            valuation: val,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::ExponentVec;
    use crate::field::Field;
    use crate::rational::vector_ratio;

    fn lp(field: Field, terms: &[((i64, i64), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(field, terms.iter().map(|&(e, c)| (e.into(), c)))
    }

    fn triangle() -> LaurentPoly {
        lp(Field::new(2).unwrap(), &[((0, 1), 1), ((1, 0), 1), ((3, 1), 1)])
    }

    fn pt(index: usize, y: Option<i64>) -> NewtonPoint {
        NewtonPoint {
            index,
            ordinate: y.map_or(Ordinate::Infinite, |y| Ordinate::Finite(int(y))),
        }
    }

    #[test]
    fn worked_example_points() {
        let f = triangle();
        let q = f.as_poly_in_u1().unwrap();
        let u2 = FpPoly::t(f.field());
        assert_eq!(
            newton_points(&q, &BaseValuation::FiniteAt(u2)),
            vec![pt(0, Some(1)), pt(1, Some(0)), pt(2, None), pt(3, Some(1))]
        );
        assert_eq!(
            newton_points(&q, &BaseValuation::InfinityDeg),
            vec![pt(0, Some(-1)), pt(1, Some(0)), pt(2, None), pt(3, Some(-1))]
        );
        let f2 = Field::new(2).unwrap();
        let lin = PolyInU1::new(f2, vec![FpPoly::one(f2), FpPoly::one(f2)]).unwrap();
        assert_eq!(
            newton_points(&lin, &BaseValuation::InfinityDeg),
            vec![pt(0, Some(0)), pt(1, Some(0))]
        );
    }

    #[test]
    fn worked_example_hulls() {
        let poly = lower_hull(&[pt(0, Some(1)), pt(1, Some(0)), pt(2, None), pt(3, Some(1))]);
        let slopes: Vec<_> = poly.segments.iter().map(|s| s.slope).collect();
        assert_eq!(slopes, vec![int(-1), Rational::new(1, 2)]);
        assert_eq!((poly.segments[1].start, poly.segments[1].end), (1, 3));

        let poly = lower_hull(&[pt(0, Some(-1)), pt(1, Some(0)), pt(2, None), pt(3, Some(-1))]);
        assert_eq!(poly.segments.len(), 1);
        assert_eq!(poly.segments[0].slope, int(0));
        assert_eq!((poly.segments[0].start, poly.segments[0].end), (0, 3));

        let poly = lower_hull(&[pt(0, Some(0)), pt(2, Some(0))]);
        assert_eq!(poly.segments.len(), 1);

        let single = lower_hull(&[pt(0, Some(3)), pt(1, None)]);
        assert!(single.segments.is_empty());
        assert_eq!(single.vertices.len(), 1);
    }

    #[test]
    fn worked_example_norms() {
        let f = triangle();
        let field = f.field();
        let at_u2 = Valuation::at_variable(field, AxisMap::IDENTITY);
        let norms: Vec<_> = extended_norms(&f, &at_u2)
            .unwrap()
            .iter()
            .map(|n| n.log_vector())
            .collect();
        assert_eq!(norms, vec![(int(-1), int(-1)), (Rational::new(1, 2), int(-1))]);

        let inf = Valuation::infinity(AxisMap::IDENTITY);
        let norms: Vec<_> = extended_norms(&f, &inf)
            .unwrap()
            .iter()
            .map(|n| n.log_vector())
            .collect();
        assert_eq!(norms, vec![(int(0), int(1))]);
    }

    #[test]
    fn linear_trinomial_bottom_face() {
        let f = lp(Field::new(2).unwrap(), &[((0, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        let val = Valuation::at_variable(f.field(), AxisMap::IDENTITY);
        let norms = extended_norms(&f, &val).unwrap();
        assert_eq!(norms.len(), 1);
        assert_eq!(norms[0].log_vector(), (int(0), int(-1)));
    }

    #[test]
    fn face_norms_are_outward_normals() {
        let f = triangle();
        let hull = convex_hull(&f.support()).unwrap();
        let fs = faces(&hull).unwrap();
        let got: Vec<_> = fs
            .iter()
            .map(|face| face_norm_for(&f, face).unwrap().norm.log_vector())
            .collect();
        assert_eq!(got[0], (int(-1), int(-1)));
        assert_eq!(got[1], (Rational::new(1, 2), int(-1)));
        assert_eq!(got[2], (int(0), int(1)));

        let g = lp(Field::new(2).unwrap(), &[((0, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        let gh = convex_hull(&g.support()).unwrap();
        for face in faces(&gh).unwrap() {
            let v = face_norm_for(&g, &face).unwrap().norm.log_vector();
            let n = (int(face.normal.e1), int(face.normal.e2));
            assert!(vector_ratio(v, n).unwrap() > int(0));
        }
        let diag = faces(&gh)
            .unwrap()
            .into_iter()
            .find(|fc| fc.start == ExponentVec::new(1, 0))
            .unwrap();
        assert_eq!(diag.normal, ExponentVec::new(1, 1));
    }

    #[test]
    fn foreign_face_is_rejected() {
        let f = triangle();
        let other = lp(f.field(), &[((0, 0), 1), ((5, 0), 1), ((0, 5), 1)]);
        let face = faces(&convex_hull(&other.support()).unwrap()).unwrap()[0];
        assert_eq!(face_norm_for(&f, &face), Err(Error::FaceNotInHull));
    }

    #[test]
    fn valuation_requires_irreducible() {
        let f2 = Field::new(2).unwrap();
        assert!(Valuation::finite_at(FpPoly::from_coeffs(f2, &[1, 0, 1]), AxisMap::IDENTITY).is_err());
        let v = Valuation::finite_at(FpPoly::from_coeffs(f2, &[1, 1]), AxisMap::IDENTITY).unwrap();
        // |u2| = 1 for ord at 1 + u2
        assert_eq!(v.log_of_variable(), int(0));
    }
}
