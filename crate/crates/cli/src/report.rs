//! JSON report types. Every rational is written as a reduced `{num, den}`
//! pair with `den > 0`.

use mixbound::geom::Face;
use mixbound::mixing::{
    IrreducibilityCertificate, MixingReport, SearchConfig, SearchSummary, SequenceDiagnostics,
    ShapeVerdict, VolochScan, Witness,
};
use mixbound::newton::{FaceNorm, NewtonPoint, NewtonPolygon, Ordinate};
use mixbound::{ExponentVec, Rational};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: i64,
    pub den: i64,
}

impl From<Rational> for RationalJson {
    fn from(q: Rational) -> Self {
        // Ratio keeps itself reduced with a positive denominator
        RationalJson {
            num: *q.numer(),
            den: *q.denom(),
        }
    }
}

pub type Point = [i64; 2];

fn point(e: ExponentVec) -> Point {
    [e.e1, e.e2]
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceJson {
    pub label: String,
    pub start: Point,
    pub end: Point,
    pub direction: Point,
    pub normal: Point,
    pub lattice_length: i64,
}

impl FaceJson {
    pub fn new(index: usize, face: &Face) -> Self {
        FaceJson {
            label: format!("F{}", index + 1),
            start: point(face.start),
            end: point(face.end),
            direction: point(face.direction),
            normal: point(face.normal),
            lattice_length: face.lattice_length,
        }
    }
}

/// A Newton-point ordinate: a rational, or the string `"inf"`.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum OrdinateJson {
    Finite(RationalJson),
    Infinite(&'static str),
}

#[derive(Debug, Clone, Serialize)]
pub struct NewtonPointJson {
    pub index: usize,
    pub ordinate: OrdinateJson,
}

impl From<&NewtonPoint> for NewtonPointJson {
    fn from(p: &NewtonPoint) -> Self {
        NewtonPointJson {
            index: p.index,
            ordinate: match p.ordinate {
                Ordinate::Finite(q) => OrdinateJson::Finite(q.into()),
                Ordinate::Infinite => OrdinateJson::Infinite("inf"),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SegmentJson {
    pub slope: RationalJson,
    pub start: usize,
    pub end: usize,
}

pub fn segments(poly: &NewtonPolygon) -> Vec<SegmentJson> {
    poly.segments
        .iter()
        .map(|s| SegmentJson {
            slope: s.slope.into(),
            start: s.start,
            end: s.end,
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct NormJson {
    pub log_u1: RationalJson,
    pub log_u2: RationalJson,
    pub slope: RationalJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct NewtonJson {
    pub face: String,
    pub valuation: String,
    pub main_variable: &'static str,
    pub points: Vec<NewtonPointJson>,
    pub segments: Vec<SegmentJson>,
    pub extended_norm: NormJson,
}

impl NewtonJson {
    pub fn new(index: usize, fnorm: &FaceNorm) -> Self {
        let n = &fnorm.norm;
        NewtonJson {
            face: format!("F{}", index + 1),
            valuation: n.valuation.to_string(),
            main_variable: n.valuation.map().main_variable(),
            points: fnorm.points.iter().map(Into::into).collect(),
            segments: segments(&fnorm.polygon),
            extended_norm: NormJson {
                log_u1: n.log_u1.into(),
                log_u2: n.log_u2.into(),
                slope: n.slope.into(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsJson {
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub exact: Option<usize>,
    pub conditional: bool,
    pub not_mixing: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IrreducibilityJson {
    pub method: &'static str,
    pub detail: String,
}

impl From<&IrreducibilityCertificate> for IrreducibilityJson {
    fn from(c: &IrreducibilityCertificate) -> Self {
        let method = match c {
            IrreducibilityCertificate::Eisenstein { .. } => "eisenstein",
            IrreducibilityCertificate::BruteForce { .. } => "brute_force",
            IrreducibilityCertificate::Reducible { .. } => "reducible",
            IrreducibilityCertificate::Unverified => "unverified",
        };
        IrreducibilityJson {
            method,
            detail: c.describe(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub prime: u32,
    pub poly: String,
    pub support: Vec<Point>,
    pub hull_vertices: Vec<Point>,
    pub faces: Vec<FaceJson>,
    pub newton: Vec<NewtonJson>,
    pub irreducibility: IrreducibilityJson,
    pub bounds: BoundsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape_verdicts: Option<Vec<VerdictJson>>,
    pub notes: Vec<String>,
}

impl ReportJson {
    pub fn new(report: &MixingReport, norms: &[FaceNorm]) -> Self {
        let f = &report.f;
        ReportJson {
            prime: f.field().p(),
            poly: f.to_string(),
            support: f.support().into_iter().map(point).collect(),
            hull_vertices: report.hull.vertices().iter().copied().map(point).collect(),
            faces: report
                .faces
                .iter()
                .enumerate()
                .map(|(i, face)| FaceJson::new(i, face))
                .collect(),
            newton: norms
                .iter()
                .enumerate()
                .map(|(i, n)| NewtonJson::new(i, n))
                .collect(),
            irreducibility: (&report.irreducibility).into(),
            bounds: BoundsJson {
                lower: report.lower_bound,
                upper: report.upper_bound,
                exact: report.exact_order,
                conditional: report.conditional,
                not_mixing: report.not_mixing,
            },
            shape_verdicts: None,
            notes: report.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub k: u64,
    pub points: Vec<Point>,
    pub coefficients: Vec<String>,
    pub constant: bool,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            k: w.k,
            points: w.points.iter().copied().map(point).collect(),
            coefficients: w.coefficients.iter().map(|m| m.to_string()).collect(),
            constant: w.constant,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchedJson {
    pub kmax: u64,
    pub windows: Vec<u32>,
    pub constants_excluded: bool,
    pub notes: Vec<String>,
}

impl From<&SearchSummary> for SearchedJson {
    fn from(s: &SearchSummary) -> Self {
        SearchedJson {
            kmax: s.kmax,
            windows: s.windows.clone(),
            constants_excluded: s.constants_excluded,
            notes: s.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictJson {
    pub shape: Vec<Point>,
    pub verdict: &'static str,
    pub certifying: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    /// Dilations at which a constant witness was re-expanded.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lifts: Vec<u64>,
    pub kmax: u64,
    pub windows: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub searched: Option<SearchedJson>,
}

impl VerdictJson {
    pub fn new(shape: &[ExponentVec], verdict: &ShapeVerdict, config: &SearchConfig) -> Self {
        let mut out = VerdictJson {
            shape: shape.iter().copied().map(point).collect(),
            verdict: verdict.name(),
            certifying: false,
            reason: None,
            witness: None,
            lifts: Vec::new(),
            kmax: config.kmax,
            windows: config.windows.clone(),
            searched: None,
        };
        match verdict {
            ShapeVerdict::CertifiedNonMixing { witness, lifts } => {
                out.certifying = true;
                out.witness = Some(witness.into());
                out.lifts = lifts.clone();
            }
            ShapeVerdict::GeometricallyMixing { reason } => {
                out.certifying = true;
                out.reason = Some(reason.to_string());
            }
            ShapeVerdict::RelationFound { witness, searched } => {
                out.witness = Some(witness.into());
                out.searched = Some(searched.into());
            }
            ShapeVerdict::Unresolved { searched } => out.searched = Some(searched.into()),
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlignmentJson {
    pub face: String,
    pub norm: [RationalJson; 2],
    pub maximizer: Point,
    pub runner_up: Point,
    pub gap: RationalJson,
    pub offset: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TupleJson {
    pub j: i64,
    pub faces: Vec<AlignmentJson>,
    pub tuple_face_lengths: Vec<i64>,
    pub length_ratio: Option<RationalJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagnosticsJson {
    pub prime: u32,
    pub poly: String,
    pub faces: Vec<FaceJson>,
    pub rows: Vec<TupleJson>,
}

impl DiagnosticsJson {
    pub fn new(f: &mixbound::LaurentPoly, d: &SequenceDiagnostics) -> Self {
        DiagnosticsJson {
            prime: f.field().p(),
            poly: f.to_string(),
            faces: d
                .faces
                .iter()
                .enumerate()
                .map(|(i, face)| FaceJson::new(i, face))
                .collect(),
            rows: d
                .rows
                .iter()
                .map(|row| TupleJson {
                    j: row.j,
                    faces: row
                        .faces
                        .iter()
                        .map(|a| AlignmentJson {
                            face: format!("F{}", a.face_index + 1),
                            norm: [a.norm.0.into(), a.norm.1.into()],
                            maximizer: point(a.maximizer),
                            runner_up: point(a.runner_up),
                            gap: a.gap.into(),
                            offset: a.offset,
                        })
                        .collect(),
                    tuple_face_lengths: row.tuple_face_lengths.clone(),
                    length_ratio: row.length_ratio.map(Into::into),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SkeletonJson {
    pub e: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VolochJson {
    pub mmax: u64,
    pub solutions: Vec<u64>,
    pub skeleton: Vec<SkeletonJson>,
}

impl From<&VolochScan> for VolochJson {
    fn from(s: &VolochScan) -> Self {
        VolochJson {
            mmax: s.mmax,
            solutions: s.solutions.clone(),
            skeleton: s
                .skeleton
                .iter()
                .map(|c| SkeletonJson { e: c.e, holds: c.holds })
                .collect(),
        }
    }
}
