//! Alignment diagnostics for families of `r`-tuples against the faces of the
//! support hull.

use crate::error::{Error, Result};
use crate::exponent::ExponentVec;
use crate::geom::{convex_hull, faces, Degeneracy, Face};
use crate::laurent::{check_generator, LaurentPoly};
use crate::newton::face_norm_for;
use crate::rational::{int, Rational};

/// One tuple `(n_1^(j), ..., n_r^(j))` of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceEntry {
    pub j: i64,
    pub points: Vec<ExponentVec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFamily {
    r: usize,
    entries: Vec<SequenceEntry>,
}

impl SequenceFamily {
    /// All tuples must share one arity `r >= 2` and consist of distinct points.
    pub fn new(entries: Vec<SequenceEntry>) -> Result<Self> {
        let r = entries
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty family".into()))?
            .points
            .len();
        if r < 2 {
            return Err(Error::InvalidShape("tuples need at least two points".into()));
        }
        for e in &entries {
            if e.points.len() != r {
                return Err(Error::InvalidShape(format!("tuple {} has arity {}, expected {r}", e.j, e.points.len())));
            }
            for (i, a) in e.points.iter().enumerate() {
                if e.points[i + 1..].contains(a) {
                    return Err(Error::InvalidShape(format!("tuple {} repeats {a}", e.j)));
                }
            }
        }
        Ok(SequenceFamily { r, entries })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn entries(&self) -> &[SequenceEntry] {
        &self.entries
    }
}

/// Alignment of one tuple with one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceAlignment {
    pub face_index: usize,
    /// Log-vector of the norm attached to the face.
    pub norm: (Rational, Rational),
    /// Point with the largest `<n, v>`; ties go to the lex-smallest point.
    pub maximizer: ExponentVec,
    pub runner_up: ExponentVec,
    pub gap: Rational,
    /// Lattice distance from the runner-up to the line through the maximizer
    /// parallel to the face.
    pub offset: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleDiagnostics {
    pub j: i64,
    pub faces: Vec<FaceAlignment>,
    /// Lattice lengths of the faces of the tuple's own hull.
    pub tuple_face_lengths: Vec<i64>,
    /// Longest over shortest of those lengths; absent for a point hull.
    pub length_ratio: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceDiagnostics {
    pub faces: Vec<Face>,
    pub rows: Vec<TupleDiagnostics>,
}

fn inner(n: ExponentVec, v: (Rational, Rational)) -> Rational {
    v.0 * int(n.e1) + v.1 * int(n.e2)
}

/// For each tuple and each face of the hull of `f`, locates the two tuple
/// points of largest norm and measures how far they are from spanning a
/// line parallel to the face.
pub fn sequence_diagnostics(f: &LaurentPoly, fam: &SequenceFamily) -> Result<SequenceDiagnostics> {
    check_generator(f)?;
    let hull = convex_hull(&f.support())?;
    let fs = faces(&hull)?;
    let norms = fs
        .iter()
        .map(|face| face_norm_for(f, face).map(|fnorm| fnorm.norm.log_vector()))
        .collect::<Result<Vec<_>>>()?;

    let rows = fam
        .entries
        .iter()
        .map(|entry| {
            let mut pts = entry.points.clone();
            pts.sort_unstable();
            let alignments = fs
                .iter()
                .zip(&norms)
                .enumerate()
                .map(|(face_index, (face, &v))| {
                    // stable sort on the lex-sorted points keeps ties lex-ordered
                    let mut ranked: Vec<(Rational, ExponentVec)> =
                        pts.iter().map(|&n| (inner(n, v), n)).collect();
                    ranked.sort_by_key(|&(q, _)| std::cmp::Reverse(q));
                    let (top, maximizer) = ranked[0];
                    let (second, runner_up) = ranked[1];
                    let offset = face.direction.primitive().cross(runner_up - maximizer).unsigned_abs();
                    FaceAlignment {
                        face_index,
                        norm: v,
                        maximizer,
                        runner_up,
                        gap: top - second,
                        offset: offset as i64,
                    }
                })
                .collect();
            let own = convex_hull(&pts)?;
            let lengths: Vec<i64> = match own.degeneracy() {
                Degeneracy::Point => Vec::new(),
                _ => faces(&own)?.iter().map(|face| face.lattice_length).collect(),
            };
            let length_ratio = match (lengths.iter().max(), lengths.iter().min()) {
                (Some(&hi), Some(&lo)) => Some(Rational::new(hi, lo)),
                _ => None,
            };
            Ok(TupleDiagnostics {
                j: entry.j,
                faces: alignments,
                tuple_face_lengths: lengths,
                length_ratio,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceDiagnostics { faces: fs, rows })
}
