//! Mixing analysis: irreducibility, order-of-mixing bounds, shape
//! classification and the diagnostics built on them.
//!
//! For an irreducible non-monomial `f` whose support hull is an `R`-gon the
//! order of mixing `M` of the associated action satisfies
//! `R - 1 <= M <= |S(f)| - 1`, with equality throughout when every support
//! point is a vertex.

mod diagnostics;
mod irreducible;
mod shapes;
mod voloch;

pub use diagnostics::{
    sequence_diagnostics, FaceAlignment, SequenceDiagnostics, SequenceEntry, SequenceFamily,
    TupleDiagnostics,
};
pub use irreducible::{
    brute_force, certify, eisenstein_certify, IrreducibilityCertificate, BRUTE_FORCE_BIDEGREE,
};
pub use shapes::{
    shape_prefilter, shape_witness_search, three_shape_classify, GeometricReason, SearchConfig,
    SearchSummary, ShapeVerdict, Witness,
};
pub use voloch::{voloch_identity_scan, SkeletonCheck, VolochScan};

use crate::error::Result;
use crate::geom::{convex_hull, faces, Degeneracy, Face, LatticePolygon};
use crate::laurent::{check_generator, AxisMap, LaurentPoly};

/// Result of [`order_bounds`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixingReport {
    pub f: LaurentPoly,
    pub irreducibility: IrreducibilityCertificate,
    pub support_size: usize,
    pub hull: LatticePolygon,
    pub faces: Vec<Face>,
    /// Number of faces of the hull.
    pub r: usize,
    /// `R - 1`; absent for segment hulls.
    pub lower_bound: Option<usize>,
    /// `|S(f)| - 1`; absent for segment hulls.
    pub upper_bound: Option<usize>,
    pub exact_order: Option<usize>,
    /// Set when the hull is a segment: the action is not mixing at all.
    pub not_mixing: bool,
    /// The bounds assume irreducibility, which was not established.
    pub conditional: bool,
    pub notes: Vec<String>,
}

/// Bounds on the order of mixing of the action defined by `f`.
pub fn order_bounds(f: &LaurentPoly) -> Result<MixingReport> {
    check_generator(f)?;
    let support = f.support();
    let hull = convex_hull(&support)?;
    let fs = faces(&hull)?;
    let irreducibility = certify(f)?;
    let mut notes = Vec::new();

    let (lower, upper, exact, not_mixing) = match hull.degeneracy() {
        Degeneracy::Segment => {
            notes.push("support hull is a segment: the action is not mixing".to_string());
            (None, None, None, true)
        }
        _ => {
            let r = fs.len();
            let exact = (support.len() == hull.vertices().len()).then_some(r - 1);
            (Some(r - 1), Some(support.len() - 1), exact, false)
        }
    };

    let conditional = irreducibility.is_irreducible() != Some(true);
    match &irreducibility {
        IrreducibilityCertificate::Unverified => {
            notes.push("irreducibility not verified; bounds are conditional".to_string())
        }
        IrreducibilityCertificate::Reducible { factor } => notes.push(format!(
            "f is reducible (factor {factor}); bounds assume an irreducible f"
        )),
        _ => {}
    }
    notes.extend(known_example_notes(f));

    Ok(MixingReport {
        f: f.clone(),
        irreducibility,
        support_size: support.len(),
        r: fs.len(),
        hull,
        faces: fs,
        lower_bound: lower,
        upper_bound: upper,
        exact_order: exact,
        not_mixing,
        conditional,
        notes,
    })
}

/// Remarks attached to a few well-known polynomials, matched up to
/// translation and the exchange of `u1` and `u2`.
fn known_example_notes(f: &LaurentPoly) -> Vec<String> {
    let field = f.field();
    if field.p() != 2 {
        return Vec::new();
    }
    let Ok((_, g)) = f.normalize() else {
        return Vec::new();
    };
    let swap = AxisMap { swap: true, invert: false };
    let swapped = match swap.apply_poly(&g).normalize() {
        Ok((_, s)) => s,
        Err(_) => return Vec::new(),
    };
    let build = |terms: &[(i64, i64)]| {
        LaurentPoly::from_terms(field, terms.iter().map(|&e| (e.into(), 1)))
    };
    let pentagon = build(&[(6, 0), (5, 1), (3, 2), (0, 1), (0, 3)]);
    let four_term = build(&[(0, 0), (1, 0), (0, 1), (0, 2)]);
    let mut notes = Vec::new();
    if g == pentagon {
        notes.push(
            "pentagon example: R = |S(f)| = 5 forces order 4 (4-fold mixing); \
             a stated order of 5 for this polynomial is inconsistent with the bounds"
                .to_string(),
        );
    }
    if g == four_term || swapped == four_term {
        notes.push(
            "this system is known to be 3-mixing, the upper bound; the Voloch identity \
             (1+t+t^2)^m = 1+t^(2m) has no solution, which rules out order-3 \
             non-mixing sequences"
                .to_string(),
        );
        if swapped == four_term {
            notes.push(
                "1+u1+u1^2+u2 is 1+u1+u2+u2^2 with u1 and u2 exchanged; \
                 both define the same system up to that symmetry"
                    .to_string(),
            );
        }
    }
    notes
}
