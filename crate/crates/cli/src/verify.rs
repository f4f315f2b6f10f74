//! The `verify-paper` checks: every worked example rebuilt from literals and
//! compared against its known answer.

use serde::Serialize;

use mixbound::geom::{convex_hull, faces};
use mixbound::laurent::AxisMap;
use mixbound::mixing::{
    order_bounds, shape_witness_search, three_shape_classify, voloch_identity_scan,
    IrreducibilityCertificate, SearchConfig, ShapeVerdict,
};
use mixbound::newton::{extended_norms, face_norm_for, newton_polygon, Valuation};
use mixbound::parse::{parse_poly, parse_shape};
use mixbound::{ExponentVec, Field, LaurentPoly, Rational};

use crate::commands::figure;
use crate::render::Format;

pub const TRIANGLE_SVG: &str = include_str!("../golden/triangle.svg");
pub const PENTAGON_SVG: &str = include_str!("../golden/pentagon.svg");

pub const TRIANGLE: &str = "u2+u1+u1^3u2";
pub const QUADRILATERAL: &str = "u1^2+u1u2^2+u2^3+u2";
pub const PENTAGON: &str = "u1^6+u1^5u2+u1^3u2^2+u2+u2^3";
pub const FOUR_TERM: &str = "1+u1+u2+u2^2";
pub const TRINOMIAL: &str = "1+u1+u2";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Summary {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn eq(&mut self, check: &str, expected: impl Into<String>, got: impl Into<String>) {
        let (expected, got) = (expected.into(), got.into());
        self.0.push(Check {
            check: check.to_string(),
            pass: expected == got,
            expected,
            got,
        });
    }

    fn run(&mut self, check: &str, expected: &str, got: Result<String, String>) {
        match got {
            Ok(g) => self.eq(check, expected, g),
            Err(e) => self.eq(check, expected, format!("error: {e}")),
        }
    }
}

fn f2() -> Field {
    Field::new(2).expect("2 is prime")
}

fn poly(text: &str) -> Result<LaurentPoly, String> {
    parse_poly(text, f2()).map_err(|e| e.to_string())
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn pair((a, b): (Rational, Rational)) -> String {
    format!("({a},{b})")
}

fn hull_summary(text: &str) -> Result<String, String> {
    let f = poly(text)?;
    let hull = convex_hull(&f.support()).map_err(|e| e.to_string())?;
    let fs = faces(&hull).map_err(|e| e.to_string())?;
    Ok(format!(
        "vertices {} normals {}",
        join(hull.vertices()),
        join(fs.iter().map(|f| f.normal))
    ))
}

fn bounds_summary(text: &str) -> Result<String, String> {
    let r = order_bounds(&poly(text)?).map_err(|e| e.to_string())?;
    let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let method = match r.irreducibility {
        IrreducibilityCertificate::Eisenstein { .. } => "eisenstein",
        IrreducibilityCertificate::BruteForce { .. } => "brute-force",
        IrreducibilityCertificate::Reducible { .. } => "reducible",
        IrreducibilityCertificate::Unverified => "unverified",
    };
    Ok(format!(
        "R={} |S|={} bounds [{},{}] exact {} {}",
        r.r,
        r.support_size,
        show(r.lower_bound),
        show(r.upper_bound),
        show(r.exact_order),
        method
    ))
}

fn newton_summary(val: Valuation) -> Result<String, String> {
    let f = poly(TRIANGLE)?;
    let (points, polygon) = newton_polygon(&f, &val).map_err(|e| e.to_string())?;
    let norms = extended_norms(&f, &val).map_err(|e| e.to_string())?;
    Ok(format!(
        "points {} slopes {} norms {}",
        join(&points),
        join(polygon.segments.iter().map(|s| s.slope)),
        join(norms.iter().map(|n| pair(n.log_vector())))
    ))
}

fn face_norm_summary() -> Result<String, String> {
    let f = poly(TRIANGLE)?;
    let hull = convex_hull(&f.support()).map_err(|e| e.to_string())?;
    let fs = faces(&hull).map_err(|e| e.to_string())?;
    let norms = fs
        .iter()
        .map(|face| face_norm_for(&f, face).map(|n| pair(n.norm.log_vector())))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok(norms.join(","))
}

fn note_present(text: &str, needle: &str) -> Result<String, String> {
    let r = order_bounds(&poly(text)?).map_err(|e| e.to_string())?;
    Ok(r.notes.iter().any(|n| n.contains(needle)).to_string())
}

fn config(kmax: u64, windows: &[u32]) -> SearchConfig {
    SearchConfig {
        kmax,
        windows: windows.to_vec(),
        ..SearchConfig::default()
    }
}

fn points(text: &str) -> Result<Vec<ExponentVec>, String> {
    parse_shape(text).map_err(|e| e.to_string())
}

fn witness_summary(v: &ShapeVerdict) -> String {
    match v {
        ShapeVerdict::CertifiedNonMixing { witness, lifts } => format!(
            "CertifiedNonMixing k={} m=({}) lifts {}",
            witness.k,
            join(&witness.coefficients),
            join(lifts)
        ),
        ShapeVerdict::RelationFound { witness, searched } => format!(
            "RelationFound k={} m=({}) constants excluded {}",
            witness.k,
            join(&witness.coefficients),
            searched.constants_excluded
        ),
        other => other.name().to_string(),
    }
}

fn trinomial_witness() -> Result<String, String> {
    let f = poly(TRINOMIAL)?;
    let v = shape_witness_search(&f, &points("(0,0);(1,0);(0,1)")?, &config(1, &[0]))
        .map_err(|e| e.to_string())?;
    Ok(witness_summary(&v))
}

fn classify(text: &str, shape: &str, kmax: u64, windows: &[u32]) -> Result<String, String> {
    let f = poly(text)?;
    let shape: [ExponentVec; 3] = points(shape)?
        .try_into()
        .map_err(|_| "expected three points".to_string())?;
    let v = three_shape_classify(&f, &shape, &config(kmax, windows)).map_err(|e| e.to_string())?;
    Ok(witness_summary(&v))
}

fn voloch() -> String {
    let scan = voloch_identity_scan(4096);
    format!(
        "{} solutions, skeleton e<={} {}",
        scan.solutions.len(),
        scan.skeleton.last().map_or(0, |c| c.e),
        if scan.all_skeleton_checks_hold() { "holds" } else { "fails" }
    )
}

fn svg(text: &str) -> Result<String, String> {
    figure(&poly(text)?, None, Format::Svg).map_err(|e| e.message)
}

fn golden(check: &mut Checks, name: &str, text: &str, expected: &str) {
    let got = svg(text);
    let verdict = match &got {
        Ok(s) if s == expected => "identical".to_string(),
        Ok(s) => format!("differs ({} vs {} bytes)", s.len(), expected.len()),
        Err(e) => format!("error: {e}"),
    };
    check.eq(name, "identical", verdict);
}

/// Runs every check.
pub fn verify_paper() -> Summary {
    let mut c = Checks(Vec::new());

    c.run(
        "hull of u2+u1+u1^3u2",
        "vertices (0,1),(1,0),(3,1) normals (-1,-1),(1,-2),(0,1)",
        hull_summary(TRIANGLE),
    );
    c.run(
        "newton points (0,1),(1,0),(2,inf),(3,1) for ord[u2]",
        "points (0,1),(1,0),(2,inf),(3,1) slopes -1,1/2 norms (-1,-1),(1/2,-1)",
        newton_summary(Valuation::at_variable(f2(), AxisMap::IDENTITY)),
    );
    c.run(
        "newton points (0,-1),(1,0),(2,inf),(3,-1) for deg",
        "points (0,-1),(1,0),(2,inf),(3,-1) slopes 0 norms (0,1)",
        newton_summary(Valuation::infinity(AxisMap::IDENTITY)),
    );
    c.run(
        "face norms of u2+u1+u1^3u2 are outward normals",
        "(-1,-1),(1/2,-1),(0,1)",
        face_norm_summary(),
    );
    c.run(
        "triangle u2+u1+u1^3u2 has exact order 2",
        "R=3 |S|=3 bounds [2,2] exact 2 eisenstein",
        bounds_summary(TRIANGLE),
    );
    c.run(
        "quadrilateral u1^2+u1u2^2+u2^3+u2 has order of mixing 3",
        "R=4 |S|=4 bounds [3,3] exact 3 eisenstein",
        bounds_summary(QUADRILATERAL),
    );
    c.run(
        "hull of u1^2+u1u2^2+u2^3+u2",
        "vertices (0,1),(2,0),(1,2),(0,3) normals (-1,-2),(2,1),(1,1),(-1,0)",
        hull_summary(QUADRILATERAL),
    );
    c.run(
        "pentagon R=5, bounds [4,4]",
        "R=5 |S|=5 bounds [4,4] exact 4 eisenstein",
        bounds_summary(PENTAGON),
    );
    c.run(
        "pentagon discrepancy note",
        "true",
        note_present(PENTAGON, "inconsistent"),
    );
    c.run(
        "1+u1+u2+u2^2 bounds [2,3]",
        "R=3 |S|=4 bounds [2,3] exact - eisenstein",
        bounds_summary(FOUR_TERM),
    );
    c.run(
        "1+u1+u2+u2^2 is 3-mixing note",
        "true",
        note_present(FOUR_TERM, "3-mixing"),
    );
    c.run(
        "S(1+u1+u2) is a non-mixing shape",
        "CertifiedNonMixing k=1 m=(1,1,1) lifts 2,4",
        trinomial_witness(),
    );
    c.run(
        "shape (0,0);(1,0);(0,1) for 1+u1+u2+u2^2",
        "GeometricallyMixing",
        classify(FOUR_TERM, "(0,0);(1,0);(0,1)", 16, &[0, 1, 2]),
    );
    c.run(
        "shape (0,0);(1,0);(0,2) for 1+u1+u2+u2^2",
        "RelationFound k=1 m=(1,1,u2^-1 + 1) constants excluded true",
        classify(FOUR_TERM, "(0,0);(1,0);(0,2)", 16, &[0, 1, 2]),
    );
    c.eq(
        "voloch scan mmax=4096 -> 0 solutions",
        "0 solutions, skeleton e<=12 holds",
        voloch(),
    );
    golden(&mut c, "triangle svg matches golden file", TRIANGLE, TRIANGLE_SVG);
    golden(&mut c, "pentagon svg matches golden file", PENTAGON, PENTAGON_SVG);

    let checks = c.0;
    let passed = checks.iter().filter(|c| c.pass).count();
    Summary {
        passed,
        failed: checks.len() - passed,
        checks,
    }
}
