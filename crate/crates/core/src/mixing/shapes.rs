//! Mixing shapes: geometric criteria and the search for non-mixing witnesses.

use std::fmt;

use rayon::prelude::*;

use super::order_bounds;
use crate::error::{Error, Result};
use crate::exponent::ExponentVec;
use crate::geom::{convex_hull, difference_directions, faces, orientation, slope_set, triangle_homothety};
use crate::laurent::{check_generator, combination_solve, combine, exact_divides, in_ideal, LaurentPoly, SolveOptions};

/// Largest exponent coordinate for which a Frobenius lift is re-expanded.
const LIFT_CHECK_LIMIT: i64 = 1 << 12;

/// Why a shape is mixing on geometric grounds alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometricReason {
    /// A face direction of the hull is not a difference direction of the shape.
    MissingDirection(ExponentVec),
    /// The shape has at most `R - 1` points, below the lower bound on the
    /// order of mixing.
    OrderBound { shape_size: usize, lower_bound: usize },
    /// The shape is not homothetic to the hull triangle.
    NotSimilar,
}

impl fmt::Display for GeometricReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometricReason::MissingDirection(d) => {
                write!(f, "face direction {d} missing from shape differences")
            }
            GeometricReason::OrderBound {
                shape_size,
                lower_bound,
            } => write!(f, "shape size {shape_size} <= R-1 = {lower_bound}"),
            GeometricReason::NotSimilar => write!(f, "shape not similar to the hull triangle"),
        }
    }
}

/// A relation `sum_i m_i u^{k n_i} ∈ <f>`, verified on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub k: u64,
    /// Shape points, translated so that the lex-smallest one is the origin.
    pub points: Vec<ExponentVec>,
    pub coefficients: Vec<LaurentPoly>,
    pub constant: bool,
}

impl Witness {
    pub fn new(
        f: &LaurentPoly,
        k: u64,
        points: Vec<ExponentVec>,
        coefficients: Vec<LaurentPoly>,
    ) -> Result<Self> {
        if k == 0 || points.len() != coefficients.len() || points.is_empty() {
            return Err(Error::InvalidWitness);
        }
        if coefficients.iter().all(|m| m.is_zero() || exact_divides(f, m).is_some()) {
            return Err(Error::InvalidWitness);
        }
        let w = Witness {
            k,
            constant: coefficients.iter().all(LaurentPoly::is_constant),
            points,
            coefficients,
        };
        if !w.holds_at(f, k)? {
            return Err(Error::InvalidWitness);
        }
        Ok(w)
    }

    /// Whether the same coefficients give a relation at dilation `k`.
    pub fn holds_at(&self, f: &LaurentPoly, k: u64) -> Result<bool> {
        let k = i64::try_from(k).map_err(|_| Error::InvalidArgument("dilation too large".into()))?;
        let dilated: Vec<_> = self.points.iter().map(|n| n.scale(k)).collect();
        in_ideal(&combine(&self.coefficients, &dilated), f)
    }
}

/// Bounds covered by a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSummary {
    pub kmax: u64,
    pub windows: Vec<u32>,
    /// Constant witnesses were ruled out for every `k <= kmax`.
    pub constants_excluded: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeVerdict {
    /// A constant witness; `lifts` lists the dilations `k p^j` re-checked by
    /// expansion.
    CertifiedNonMixing { witness: Witness, lifts: Vec<u64> },
    GeometricallyMixing { reason: GeometricReason },
    /// A relation with non-constant coefficients. It does not certify
    /// non-mixing since Frobenius changes the coefficients.
    RelationFound { witness: Witness, searched: SearchSummary },
    Unresolved { searched: SearchSummary },
}

impl ShapeVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            ShapeVerdict::CertifiedNonMixing { .. } => "CertifiedNonMixing",
            ShapeVerdict::GeometricallyMixing { .. } => "GeometricallyMixing",
            ShapeVerdict::RelationFound { .. } => "RelationFound",
            ShapeVerdict::Unresolved { .. } => "Unresolved",
        }
    }
}

/// Search bounds for [`shape_witness_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub kmax: u64,
    pub windows: Vec<u32>,
    /// Look for constant witnesses at every `k` before any window search.
    pub constants_first: bool,
    pub threads: usize,
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            kmax: 16,
            windows: vec![0, 1, 2],
            constants_first: true,
            threads: threads_from_env(),
            node_budget: 1 << 20,
        }
    }
}

/// `MIXBOUND_THREADS`, defaulting to one worker.
pub fn threads_from_env() -> usize {
    std::env::var("MIXBOUND_THREADS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(1)
}

fn distinct(shape: &[ExponentVec]) -> bool {
    let mut s = shape.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len() == shape.len()
}

/// Geometric mixing criteria: a face direction of the hull missing from the
/// shape's differences, or a shape of at most `R - 1` points.
pub fn shape_prefilter(f: &LaurentPoly, shape: &[ExponentVec]) -> Result<Option<GeometricReason>> {
    check_generator(f)?;
    if shape.len() < 2 || !distinct(shape) {
        return Err(Error::InvalidShape("need at least two distinct points".into()));
    }
    let hull = convex_hull(&f.support())?;
    let fs = faces(&hull)?;
    let diffs = difference_directions(shape);
    if let Some(&d) = slope_set(&fs).iter().find(|d| !diffs.contains(d)) {
        return Ok(Some(GeometricReason::MissingDirection(d)));
    }
    if hull.is_polygon() && shape.len() < fs.len() {
        return Ok(Some(GeometricReason::OrderBound {
            shape_size: shape.len(),
            lower_bound: fs.len() - 1,
        }));
    }
    Ok(None)
}

type Attempt = Result<Option<Vec<LaurentPoly>>>;

fn run_grid<F>(tasks: &[(u64, u32)], threads: usize, solve: F) -> Vec<((u64, u32), Attempt)>
where
    F: Fn(u64, u32) -> Attempt + Sync,
{
    if threads <= 1 {
        let mut out = Vec::new();
        for &(k, w) in tasks {
            let r = solve(k, w);
            let done = matches!(r, Ok(Some(_)) | Err(Error::InvalidWitness));
            out.push(((k, w), r));
            if done {
                break;
            }
        }
        return out;
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build();
    let run = || {
        tasks
            .par_iter()
            .map(|&(k, w)| ((k, w), solve(k, w)))
            .collect::<Vec<_>>()
    };
    match pool {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

/// Searches for relations `sum_i m_i u^{k n_i} ∈ <f>` over `k = 1..=kmax`
/// and the window schedule.
///
/// Constant witnesses certify non-mixing: raising the relation to the
/// `p^j`-th power fixes the constants and gives relations at every `k p^j`.
/// With `constants_first` the constant search runs over all `k` before the
/// windowed grid (`k` outer, window inner). Results are reduced in grid order,
/// so the verdict does not depend on the thread count.
pub fn shape_witness_search(
    f: &LaurentPoly,
    shape: &[ExponentVec],
    config: &SearchConfig,
) -> Result<ShapeVerdict> {
    if config.kmax == 0 {
        return Err(Error::InvalidArgument("kmax must be positive".into()));
    }
    if config.windows.is_empty() {
        return Err(Error::InvalidArgument("empty window schedule".into()));
    }
    if let Some(reason) = shape_prefilter(f, shape)? {
        return Ok(ShapeVerdict::GeometricallyMixing { reason });
    }
    let origin = *shape.iter().min().expect("nonempty");
    let points: Vec<ExponentVec> = shape.iter().map(|&n| n - origin).collect();
    if points
        .iter()
        .any(|n| !n.scale(config.kmax as i64).within_limit())
    {
        return Err(Error::InvalidArgument("dilated shape exceeds exponent limit".into()));
    }

    let solve = |k: u64, w: u32| {
        let dilated: Vec<_> = points.iter().map(|n| n.scale(k as i64)).collect();
        let opts = SolveOptions {
            node_budget: config.node_budget,
            ..SolveOptions::window(w)
        };
        combination_solve(f, &dilated, opts)
    };

    let mut tasks = Vec::new();
    if config.constants_first {
        tasks.extend((1..=config.kmax).map(|k| (k, 0)));
    }
    for k in 1..=config.kmax {
        for &w in &config.windows {
            if !(config.constants_first && w == 0) {
                tasks.push((k, w));
            }
        }
    }

    let mut notes = Vec::new();
    let mut constants_clean = config.constants_first;
    for ((k, w), attempt) in run_grid(&tasks, config.threads, solve) {
        match attempt {
            Ok(None) => {}
            Ok(Some(coeffs)) => {
                let witness = Witness::new(f, k, points.clone(), coeffs)?;
                let searched = SearchSummary {
                    kmax: config.kmax,
                    windows: config.windows.clone(),
                    constants_excluded: constants_clean,
                    notes,
                };
                if witness.constant {
                    let lifts = frobenius_lifts(f, &witness)?;
                    return Ok(ShapeVerdict::CertifiedNonMixing { witness, lifts });
                }
                return Ok(ShapeVerdict::RelationFound { witness, searched });
            }
            Err(Error::SearchBudget(msg)) => {
                if w == 0 {
                    constants_clean = false;
                }
                notes.push(format!("k={k}, W={w}: {msg}"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(ShapeVerdict::Unresolved {
        searched: SearchSummary {
            kmax: config.kmax,
            windows: config.windows.clone(),
            constants_excluded: constants_clean || config.windows.contains(&0),
            notes,
        },
    })
}

/// Re-expands a constant witness at `k p` and `k p^2`, skipping dilations
/// whose exponents leave [`LIFT_CHECK_LIMIT`].
fn frobenius_lifts(f: &LaurentPoly, w: &Witness) -> Result<Vec<u64>> {
    let p = f.field().p() as u64;
    let reach = w
        .points
        .iter()
        .map(|n| n.e1.abs().max(n.e2.abs()))
        .max()
        .unwrap_or(0) as u64;
    let mut lifts = Vec::new();
    let mut k = w.k;
    for _ in 0..2 {
        k *= p;
        if reach * k > LIFT_CHECK_LIMIT as u64 {
            break;
        }
        if !w.holds_at(f, k)? {
            return Err(Error::InvalidWitness);
        }
        lifts.push(k);
    }
    Ok(lifts)
}

/// Classifies a 3-point shape by the order bound, the similarity criterion
/// for triangular hulls and, for similar triangles, the witness search.
pub fn three_shape_classify(
    f: &LaurentPoly,
    shape: &[ExponentVec; 3],
    config: &SearchConfig,
) -> Result<ShapeVerdict> {
    if !distinct(shape) {
        return Err(Error::InvalidShape("shape points must be distinct".into()));
    }
    let report = order_bounds(f)?;
    if report.not_mixing {
        return Err(Error::DegenerateHull("segment hull".into()));
    }
    let unresolved = |note: &str| ShapeVerdict::Unresolved {
        searched: SearchSummary {
            kmax: 0,
            windows: Vec::new(),
            constants_excluded: false,
            notes: vec![note.to_string()],
        },
    };
    if report.r > 3 {
        return Ok(ShapeVerdict::GeometricallyMixing {
            reason: GeometricReason::OrderBound {
                shape_size: 3,
                lower_bound: report.r - 1,
            },
        });
    }
    if orientation(shape[0], shape[1], shape[2]) == 0 {
        return Ok(unresolved("collinear shape"));
    }
    match triangle_homothety(shape, &report.hull) {
        None => Ok(ShapeVerdict::GeometricallyMixing {
            reason: GeometricReason::NotSimilar,
        }),
        Some(m) if m.ratio < 0.into() => Ok(unresolved(
            "shape is a negatively scaled (point-reflected) copy of the hull triangle",
        )),
        Some(_) => {
            let verdict = shape_witness_search(f, shape, config)?;
            debug_assert!(!matches!(verdict, ShapeVerdict::CertifiedNonMixing { .. }) || report.r <= 3);
            Ok(verdict)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn lp(terms: &[((i64, i64), i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            Field::new(2).unwrap(),
            terms.iter().map(|&(e, c)| (e.into(), c)),
        )
    }

    fn pts(v: &[(i64, i64)]) -> Vec<ExponentVec> {
        v.iter().map(|&p| p.into()).collect()
    }

    fn trinomial() -> LaurentPoly {
        lp(&[((0, 0), 1), ((1, 0), 1), ((0, 1), 1)])
    }

    fn four_term() -> LaurentPoly {
        lp(&[((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((0, 2), 1)])
    }

    fn config(kmax: u64, windows: &[u32]) -> SearchConfig {
        SearchConfig {
            kmax,
            windows: windows.to_vec(),
            threads: 1,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn prefilter_examples() {
        let f = four_term();
        assert_eq!(
            shape_prefilter(&f, &pts(&[(0, 0), (1, 0), (0, 1)])).unwrap(),
            Some(GeometricReason::MissingDirection((1, -2).into()))
        );
        assert_eq!(shape_prefilter(&f, &pts(&[(0, 0), (1, 0), (0, 2)])).unwrap(), None);
        let pentagon = lp(&[((6, 0), 1), ((5, 1), 1), ((3, 2), 1), ((0, 1), 1), ((0, 3), 1)]);
        let shape = pts(&[(6, 0), (5, 1), (3, 2)]);
        let reason = shape_prefilter(&pentagon, &shape).unwrap().unwrap();
        assert!(matches!(
            reason,
            GeometricReason::MissingDirection(_) | GeometricReason::OrderBound { .. }
        ));
    }

    #[test]
    fn support_is_certified_non_mixing() {
        let f = trinomial();
        let v = shape_witness_search(&f, &pts(&[(0, 0), (1, 0), (0, 1)]), &config(1, &[0])).unwrap();
        let ShapeVerdict::CertifiedNonMixing { witness, lifts } = v else {
            panic!("{v:?}");
        };
        assert_eq!(witness.k, 1);
        assert_eq!(witness.coefficients, vec![LaurentPoly::one(f.field()); 3]);
        assert_eq!(lifts, vec![2, 4]);
    }

    #[test]
    fn four_term_relation_is_not_certifying() {
        let f = four_term();
        let v = shape_witness_search(&f, &pts(&[(0, 0), (1, 0), (0, 2)]), &config(4, &[1])).unwrap();
        let ShapeVerdict::RelationFound { witness, searched } = v else {
            panic!("{v:?}");
        };
        assert_eq!(witness.k, 1);
        assert!(!witness.constant);
        assert_eq!(witness.coefficients[2], lp(&[((0, 0), 1), ((0, -1), 1)]));
        assert!(searched.constants_excluded);
    }

    #[test]
    fn missing_direction_short_circuits_search() {
        let v = shape_witness_search(&trinomial(), &pts(&[(0, 0), (2, 0), (0, 1)]), &config(8, &[2]))
            .unwrap();
        assert_eq!(
            v,
            ShapeVerdict::GeometricallyMixing {
                reason: GeometricReason::MissingDirection((1, -1).into())
            }
        );
    }

    #[test]
    fn threads_do_not_change_verdict() {
        let f = four_term();
        let shape = pts(&[(0, 0), (1, 0), (0, 2)]);
        let serial = shape_witness_search(&f, &shape, &config(3, &[0, 1])).unwrap();
        let parallel = shape_witness_search(
            &f,
            &shape,
            &SearchConfig {
                threads: 3,
                ..config(3, &[0, 1])
            },
        )
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn bad_search_parameters() {
        let f = trinomial();
        let shape = pts(&[(0, 0), (1, 0)]);
        assert!(shape_witness_search(&f, &shape, &config(0, &[0])).is_err());
        assert!(shape_witness_search(&f, &shape, &config(1, &[])).is_err());
    }

    #[test]
    fn corrupted_witness_is_rejected() {
        let f = trinomial();
        let one = LaurentPoly::one(f.field());
        let points = pts(&[(0, 0), (1, 0), (0, 1)]);
        assert!(Witness::new(&f, 1, points.clone(), vec![one.clone(); 3]).is_ok());
        let bad = vec![one.clone(), one.clone(), LaurentPoly::zero(f.field())];
        assert_eq!(Witness::new(&f, 1, points, bad), Err(Error::InvalidWitness));
    }

    #[test]
    fn classifier_examples() {
        let f = four_term();
        let cfg = config(2, &[0, 1]);
        let translated: [ExponentVec; 3] = [(5, 5).into(), (6, 5).into(), (5, 7).into()];
        assert!(matches!(
            three_shape_classify(&f, &translated, &cfg).unwrap(),
            ShapeVerdict::RelationFound { .. }
        ));
        let wrong: [ExponentVec; 3] = [(0, 0).into(), (1, 0).into(), (0, 1).into()];
        assert!(matches!(
            three_shape_classify(&f, &wrong, &cfg).unwrap(),
            ShapeVerdict::GeometricallyMixing { .. }
        ));
        let reflected: [ExponentVec; 3] = [(0, 0).into(), (-1, 0).into(), (0, -2).into()];
        assert!(matches!(
            three_shape_classify(&f, &reflected, &cfg).unwrap(),
            ShapeVerdict::Unresolved { .. }
        ));
        let line: [ExponentVec; 3] = [(0, 0).into(), (1, 0).into(), (2, 0).into()];
        assert!(matches!(
            three_shape_classify(&f, &line, &cfg).unwrap(),
            ShapeVerdict::Unresolved { .. }
        ));
        let pentagon = lp(&[((6, 0), 1), ((5, 1), 1), ((3, 2), 1), ((0, 1), 1), ((0, 3), 1)]);
        assert_eq!(
            three_shape_classify(&pentagon, &wrong, &cfg).unwrap(),
            ShapeVerdict::GeometricallyMixing {
                reason: GeometricReason::OrderBound {
                    shape_size: 3,
                    lower_bound: 4
                }
            }
        );
    }
}
