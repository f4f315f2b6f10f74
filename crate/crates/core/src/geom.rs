//! Integer convex-hull geometry of supports.
//!
//! Every predicate is an exact integer computation; cross products are taken
//! in `i128`, which cannot overflow for `i64` coordinates below `2^62`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exponent::ExponentVec;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    Point,
    Segment,
    Polygon,
}

/// Convex hull of a finite lattice point set.
///
/// `vertices` holds exactly the extreme points, counter-clockwise, starting at
/// the lexicographically smallest one. A segment stores its two endpoints in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<ExponentVec>,
    degeneracy: Degeneracy,
}

/// An edge of a hull with its primitive direction and primitive outward normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    pub start: ExponentVec,
    pub end: ExponentVec,
    pub direction: ExponentVec,
    pub normal: ExponentVec,
    pub lattice_length: i64,
}

/// `(a - o) x (b - o)`; positive for a counter-clockwise turn.
pub fn orientation(o: ExponentVec, a: ExponentVec, b: ExponentVec) -> i128 {
    (a - o).cross(b - o)
}

/// Andrew's monotone chain over exact orientation tests.
pub fn convex_hull(points: &[ExponentVec]) -> Result<LatticePolygon> {
    let mut pts: Vec<ExponentVec> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    match pts.len() {
        0 => return Err(Error::EmptyPointSet),
        1 => {
            return Ok(LatticePolygon {
                vertices: pts,
                degeneracy: Degeneracy::Point,
            })
        }
        _ => {}
    }

    let mut hull: Vec<ExponentVec> = Vec::with_capacity(pts.len() + 1);
    for &p in pts.iter() {
        while hull.len() >= 2 && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();

    let degeneracy = if hull.len() == 2 {
        Degeneracy::Segment
    } else {
        Degeneracy::Polygon
    };
    Ok(LatticePolygon {
        vertices: hull,
        degeneracy,
    })
}

impl LatticePolygon {
    pub fn vertices(&self) -> &[ExponentVec] {
        &self.vertices
    }

    pub fn degeneracy(&self) -> Degeneracy {
        self.degeneracy
    }

    pub fn is_polygon(&self) -> bool {
        self.degeneracy == Degeneracy::Polygon
    }

    /// True when `p` lies in the closed hull.
    pub fn contains(&self, p: ExponentVec) -> bool {
        match self.degeneracy {
            Degeneracy::Point => p == self.vertices[0],
            Degeneracy::Segment => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                orientation(a, b, p) == 0 && (p - a).dot(b - a) >= 0 && (p - b).dot(a - b) >= 0
            }
            Degeneracy::Polygon => {
                let n = self.vertices.len();
                (0..n).all(|i| orientation(self.vertices[i], self.vertices[(i + 1) % n], p) >= 0)
            }
        }
    }

    /// Componentwise bounds of the vertices.
    pub fn bounding_box(&self) -> (ExponentVec, ExponentVec) {
        let first = self.vertices[0];
        self.vertices.iter().fold((first, first), |(lo, hi), v| {
            (
                ExponentVec::new(lo.e1.min(v.e1), lo.e2.min(v.e2)),
                ExponentVec::new(hi.e1.max(v.e1), hi.e2.max(v.e2)),
            )
        })
    }

    /// Exact centroid of the vertex set.
    pub fn vertex_centroid(&self) -> (Rational, Rational) {
        let n = self.vertices.len() as i64;
        let (s1, s2) = self
            .vertices
            .iter()
            .fold((0i64, 0i64), |(a, b), v| (a + v.e1, b + v.e2));
        (Rational::new(s1, n), Rational::new(s2, n))
    }
}

fn make_face(start: ExponentVec, end: ExponentVec) -> Face {
    let d = end - start;
    let direction = d.primitive();
    Face {
        start,
        end,
        direction,
        // right-hand normal of a counter-clockwise edge points outwards
        normal: ExponentVec::new(direction.e2, -direction.e1),
        lattice_length: d.content(),
    }
}

/// Edges of a hull in counter-clockwise order from the lexicographically
/// smallest vertex. A segment yields a single face.
pub fn faces(poly: &LatticePolygon) -> Result<Vec<Face>> {
    let v = &poly.vertices;
    match poly.degeneracy {
        Degeneracy::Point => Err(Error::DegenerateHull("a point has no faces".into())),
        Degeneracy::Segment => Ok(vec![make_face(v[0], v[1])]),
        Degeneracy::Polygon => Ok((0..v.len())
            .map(|i| make_face(v[i], v[(i + 1) % v.len()]))
            .collect()),
    }
}

/// Face directions up to sign, canonicalized.
pub fn slope_set(faces: &[Face]) -> BTreeSet<ExponentVec> {
    faces
        .iter()
        .map(|f| f.direction.canonical_direction())
        .collect()
}

/// Canonical directions of all pairwise differences of a point set.
pub fn difference_directions(points: &[ExponentVec]) -> BTreeSet<ExponentVec> {
    let mut out = BTreeSet::new();
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i + 1..] {
            if a != b {
                out.insert((b - a).canonical_direction());
            }
        }
    }
    out
}

/// A homothety taking the vertex triangle of a hull onto a 3-point shape.
///
/// `assignment[i]` is the index of the shape point sent to vertex `i`, and
/// `shape[assignment[i+1]] - shape[assignment[i]] = ratio * (d[i+1] - d[i])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleMatch {
    pub assignment: [usize; 3],
    pub ratio: Rational,
}

/// Finds a homothety (ratio of either sign) between the shape and the vertices
/// of a triangular hull.
pub fn triangle_homothety(shape: &[ExponentVec; 3], poly: &LatticePolygon) -> Option<TriangleMatch> {
    if !poly.is_polygon() || poly.vertices.len() != 3 {
        return None;
    }
    if orientation(shape[0], shape[1], shape[2]) == 0 {
        return None;
    }
    let d = &poly.vertices;
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
    PERMS.iter().find_map(|&perm| {
        let mut ratio: Option<Rational> = None;
        for i in 0..3 {
            let j = (i + 1) % 3;
            let sd = shape[perm[j]] - shape[perm[i]];
            let dd = d[j] - d[i];
            if sd.cross(dd) != 0 {
                return None;
            }
            let q = if dd.e1 != 0 {
                Rational::new(sd.e1, dd.e1)
            } else {
                Rational::new(sd.e2, dd.e2)
            };
            match ratio {
                None => ratio = Some(q),
                Some(r) if r != q => return None,
                _ => {}
            }
        }
        ratio.map(|ratio| TriangleMatch {
            assignment: perm,
            ratio,
        })
    })
}

/// Orientation-preserving positive homothety between the shape and the hull
/// triangle, if one exists. Translations are ignored.
pub fn proportional_triangle_match(
    shape: &[ExponentVec; 3],
    poly: &LatticePolygon,
) -> Option<TriangleMatch> {
    triangle_homothety(shape, poly).filter(|m| m.ratio > Rational::from_integer(0))
}
