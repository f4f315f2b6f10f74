//! Command implementations. Each returns the text for stdout and an exit code.

use std::fmt::Write as _;
use std::path::Path;

use mixbound::geom::{convex_hull, faces};
use mixbound::mixing::{
    order_bounds, sequence_diagnostics, shape_witness_search, three_shape_classify,
    voloch_identity_scan, SearchConfig, SequenceEntry, SequenceFamily, ShapeVerdict,
};
use mixbound::newton::{face_norm_for, FaceNorm};
use mixbound::parse::{parse_poly, parse_sequence_file, parse_shape};
use mixbound::{Error, ExponentVec, Field, LaurentPoly};

use crate::render::{render_polygon, Format, NewtonPanel};
use crate::report::{DiagnosticsJson, ReportJson, VerdictJson, VolochJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ZeroPolynomial
            | Error::MonomialGenerator
            | Error::ConstantPolynomial
            | Error::EmptyPointSet
            | Error::DegenerateHull(_) => EXIT_DEGENERATE,
            Error::InvalidWitness => EXIT_MISMATCH,
            _ => EXIT_PARSE,
        };
        let message = match &e {
            Error::Parse {
                line,
                column,
                message,
            } => format!("parse error at {line}:{column}: {message}"),
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

pub type CmdResult = std::result::Result<Outcome, Failure>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
        }
    }
}

pub fn field(p: u64) -> Result<Field, Failure> {
    Ok(Field::new(p)?)
}

pub fn poly(p: u64, text: &str) -> Result<LaurentPoly, Failure> {
    Ok(parse_poly(text, field(p)?)?)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write {}: {e}", path.display())))
}

/// Norm data for every face; faces of a segment hull are skipped when no
/// norm can be attached.
pub fn face_norms(f: &LaurentPoly) -> Result<Vec<FaceNorm>, Failure> {
    let hull = convex_hull(&f.support())?;
    let fs = faces(&hull)?;
    let mut out = Vec::new();
    for face in &fs {
        match face_norm_for(f, face) {
            Ok(n) => out.push(n),
            Err(e) if hull.is_polygon() => return Err(e.into()),
            Err(_) => {}
        }
    }
    Ok(out)
}

/// Runs the 3-point classifier for 3-point shapes and the plain witness
/// search otherwise.
pub fn classify_shape(
    f: &LaurentPoly,
    shape: &[ExponentVec],
    config: &SearchConfig,
    search_only: bool,
) -> Result<ShapeVerdict, Failure> {
    match <[ExponentVec; 3]>::try_from(shape) {
        Ok(three) if !search_only => Ok(three_shape_classify(f, &three, config)?),
        _ => Ok(shape_witness_search(f, shape, config)?),
    }
}

pub struct AnalyzeArgs<'a> {
    pub prime: u64,
    pub poly: &'a str,
    pub pretty: bool,
    pub svg: Option<&'a Path>,
    pub tikz: Option<&'a Path>,
    pub shapes: &'a [String],
    pub config: SearchConfig,
}

pub fn analyze_report(f: &LaurentPoly, shapes: &[Vec<ExponentVec>], config: &SearchConfig) -> Result<ReportJson, Failure> {
    let report = order_bounds(f)?;
    let norms = face_norms(f)?;
    let mut json = ReportJson::new(&report, &norms);
    if !shapes.is_empty() {
        let mut verdicts = Vec::new();
        for shape in shapes {
            let v = classify_shape(f, shape, config, false)?;
            verdicts.push(VerdictJson::new(shape, &v, config));
        }
        json.shape_verdicts = Some(verdicts);
    }
    Ok(json)
}

pub fn analyze(args: &AnalyzeArgs<'_>) -> CmdResult {
    let f = poly(args.prime, args.poly)?;
    let shapes = args
        .shapes
        .iter()
        .map(|s| parse_shape(s))
        .collect::<mixbound::Result<Vec<_>>>()?;
    let report = analyze_report(&f, &shapes, &args.config)?;
    for (path, format) in [(args.svg, Format::Svg), (args.tikz, Format::Tikz)] {
        if let Some(path) = path {
            write_file(path, &figure(&f, None, format)?)?;
        }
    }
    let stdout = if args.pretty {
        pretty_report(&report)
    } else {
        json(&report)
    };
    Ok(Outcome::ok(stdout))
}

fn pretty_report(r: &ReportJson) -> String {
    let mut s = String::new();
    let fmt_pt = |p: &[i64; 2]| format!("({},{})", p[0], p[1]);
    let _ = writeln!(s, "f = {} over F_{}", r.poly, r.prime);
    let _ = writeln!(
        s,
        "support ({}): {}",
        r.support.len(),
        r.support.iter().map(fmt_pt).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(
        s,
        "hull: {}",
        r.hull_vertices.iter().map(fmt_pt).collect::<Vec<_>>().join(" ")
    );
    for face in &r.faces {
        let _ = writeln!(
            s,
            "  {} {} -> {}  normal {}  length {}",
            face.label,
            fmt_pt(&face.start),
            fmt_pt(&face.end),
            fmt_pt(&face.normal),
            face.lattice_length
        );
    }
    for n in &r.newton {
        let q = |x: &crate::report::RationalJson| {
            if x.den == 1 {
                x.num.to_string()
            } else {
                format!("{}/{}", x.num, x.den)
            }
        };
        let _ = writeln!(
            s,
            "  {}: {} -> log|u| = ({},{})",
            n.face,
            n.valuation,
            q(&n.extended_norm.log_u1),
            q(&n.extended_norm.log_u2)
        );
    }
    let _ = writeln!(s, "irreducibility: {}", r.irreducibility.detail);
    let b = &r.bounds;
    let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let _ = writeln!(
        s,
        "order of mixing: lower {} upper {} exact {}{}",
        show(b.lower),
        show(b.upper),
        show(b.exact),
        if b.conditional { " (conditional)" } else { "" }
    );
    if let Some(vs) = &r.shape_verdicts {
        for v in vs {
            let _ = writeln!(
                s,
                "shape {}: {}",
                v.shape.iter().map(fmt_pt).collect::<Vec<_>>().join(";"),
                v.verdict
            );
        }
    }
    for note in &r.notes {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

pub fn shape_test(
    prime: u64,
    poly_text: &str,
    shape_text: &str,
    config: &SearchConfig,
    search_only: bool,
) -> CmdResult {
    let f = poly(prime, poly_text)?;
    let shape = parse_shape(shape_text)?;
    let verdict = classify_shape(&f, &shape, config, search_only)?;
    Ok(Outcome::ok(json(&VerdictJson::new(&shape, &verdict, config))))
}

pub fn seq_diagnose(prime: u64, poly_text: &str, tuples: &[String], file: Option<&Path>) -> CmdResult {
    let f = poly(prime, poly_text)?;
    let mut entries = Vec::new();
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
        entries.extend(parse_sequence_file(&text)?);
    }
    // tuples given on the command line are numbered after the file's
    for t in tuples {
        let j = entries.last().map_or(1, |e: &SequenceEntry| e.j + 1);
        entries.push(SequenceEntry {
            j,
            points: parse_shape(t)?,
        });
    }
    let fam = SequenceFamily::new(entries)?;
    let d = sequence_diagnostics(&f, &fam)?;
    Ok(Outcome::ok(json(&DiagnosticsJson::new(&f, &d))))
}

pub fn voloch_scan(mmax: u64) -> CmdResult {
    if mmax == 0 {
        return Err(Failure::new(EXIT_PARSE, "--mmax must be positive"));
    }
    let scan = voloch_identity_scan(mmax);
    Ok(Outcome::ok(json(&VolochJson::from(&scan))))
}

/// The hull drawing of `f`, with the Newton panel of face `newton_face`
/// (1-based) when given.
pub fn figure(f: &LaurentPoly, newton_face: Option<usize>, format: Format) -> Result<String, Failure> {
    let support = f.support();
    let hull = convex_hull(&support)?;
    let fs = faces(&hull)?;
    let norm = match newton_face {
        Some(i) => {
            let face = i
                .checked_sub(1)
                .and_then(|i| fs.get(i))
                .ok_or_else(|| Failure::new(EXIT_PARSE, format!("no face F{i}")))?;
            Some(face_norm_for(f, face)?)
        }
        None => None,
    };
    let panel = norm.as_ref().map(|n| NewtonPanel {
        title: format!("F{}: {}", newton_face.unwrap_or(0), n.norm.valuation),
        points: &n.points,
        polygon: &n.polygon,
    });
    Ok(render_polygon(&hull, &support, &fs, panel.as_ref(), format)?)
}

pub fn render(
    prime: u64,
    poly_text: &str,
    format: Format,
    newton_face: Option<usize>,
    output: Option<&Path>,
) -> CmdResult {
    let f = poly(prime, poly_text)?;
    let doc = figure(&f, newton_face, format)?;
    match output {
        Some(path) => {
            write_file(path, &doc)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(doc)),
    }
}
