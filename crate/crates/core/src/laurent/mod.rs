//! Bivariate Laurent polynomials over `F_p` and divisibility in
//! `F_p[u1^±1, u2^±1]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::ExponentVec;
use crate::field::{Field, FpPoly};

mod solve;

pub use solve::{combination_solve, SolveOptions};

/// A finite sum `sum c(n) u^n` with nonzero coefficients in `F_p`.
///
/// Terms iterate in lexicographic order of `(e1, e2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: Field,
    terms: BTreeMap<ExponentVec, u32>,
}

impl LaurentPoly {
    pub fn zero(field: Field) -> Self {
        LaurentPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        LaurentPoly::monomial(field, ExponentVec::ZERO, 1)
    }

    pub fn constant(field: Field, c: i64) -> Self {
        LaurentPoly::monomial(field, ExponentVec::ZERO, c)
    }

    pub fn monomial(field: Field, e: ExponentVec, c: i64) -> Self {
        LaurentPoly::from_terms(field, [(e, c)])
    }

    /// Sums the given terms, merging repeated exponents and dropping zeros.
    pub fn from_terms<I>(field: Field, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVec, i64)>,
    {
        let mut poly = LaurentPoly::zero(field);
        for (e, c) in terms {
            poly.add_term(e, field.reduce(c));
        }
        poly
    }

    fn add_term(&mut self, e: ExponentVec, c: u32) {
        if c == 0 {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(e).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True for nonzero elements of `F_p`.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains_key(&ExponentVec::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: ExponentVec) -> u32 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (ExponentVec, u32)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// The support `S(f)`, in lexicographic order.
    pub fn support(&self) -> Vec<ExponentVec> {
        self.terms.keys().copied().collect()
    }

    /// Lexicographically largest exponent.
    pub fn lex_max(&self) -> Option<ExponentVec> {
        self.terms.keys().next_back().copied()
    }

    pub fn lex_min(&self) -> Option<(ExponentVec, u32)> {
        self.terms.iter().next().map(|(&e, &c)| (e, c))
    }

    /// Componentwise minimum and maximum exponents.
    pub fn bounding_box(&self) -> Option<(ExponentVec, ExponentVec)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| {
            (
                ExponentVec::new(lo.e1.min(e.e1), lo.e2.min(e.e2)),
                ExponentVec::new(hi.e1.max(e.e1), hi.e2.max(e.e2)),
            )
        }))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        let mut out = LaurentPoly::zero(f);
        for (e, a) in self.terms() {
            out.add_term(e, f.mul(a, c));
        }
        out
    }

    /// Multiplication by the unit `u^shift`.
    pub fn shift(&self, shift: ExponentVec) -> Self {
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect(),
        }
    }

    /// Applies an injective map to every exponent.
    pub fn map_exponents(&self, map: impl Fn(ExponentVec) -> ExponentVec) -> Self {
        let mut out = LaurentPoly::zero(self.field);
        for (e, c) in self.terms() {
            out.add_term(map(e), c);
        }
        out
    }

    /// `f(u^k)`: every exponent multiplied by `k`.
    pub fn dilate(&self, k: i64) -> Self {
        self.map_exponents(|e| e.scale(k))
    }

    pub fn add(&self, other: &LaurentPoly) -> Self {
        assert_eq!(self.field, other.field);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        LaurentPoly {
            field: f,
            terms: self.terms.iter().map(|(&e, &c)| (e, f.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> Self {
        assert_eq!(self.field, other.field);
        let f = self.field;
        let mut out = LaurentPoly::zero(f);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, f.mul(x, y));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(LaurentPoly::one(self.field), |acc, _| acc.mul(self))
    }

    /// Splits `f = u^shift * f'` with `f'` a polynomial in which each variable
    /// attains exponent zero.
    pub fn normalize(&self) -> Result<(ExponentVec, LaurentPoly)> {
        let (lo, _) = self.bounding_box().ok_or(Error::ZeroPolynomial)?;
        Ok((lo, self.shift(-lo)))
    }

    /// The normalized form viewed in `(F_p[u2])[u1]`.
    pub fn as_poly_in_u1(&self) -> Result<PolyInU1> {
        let (shift, g) = self.normalize()?;
        let (_, hi) = g.bounding_box().expect("nonzero");
        let f = self.field;
        let mut columns = vec![vec![0u32; hi.e2 as usize + 1]; hi.e1 as usize + 1];
        for (e, c) in g.terms() {
            columns[e.e1 as usize][e.e2 as usize] = c;
        }
        let coeffs = columns
            .into_iter()
            .map(|col| FpPoly::from_residues(f, col))
            .collect();
        Ok(PolyInU1 {
            field: f,
            coeffs,
            shift,
        })
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text: terms in lexicographic exponent order, coefficients in
    /// `[1, p)`, negative exponents written as `u2^-1`. Parses back to the
    /// same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut factors = Vec::new();
            for (name, k) in [("u1", e.e1), ("u2", e.e2)] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            match (c, factors.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => f.write_str(&factors.join("*"))?,
                (_, false) => write!(f, "{c}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A normalized Laurent polynomial written as `sum_i q_i(u2) u1^i`, together
/// with the monomial `u^shift` that was divided out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyInU1 {
    field: Field,
    coeffs: Vec<FpPoly>,
    shift: ExponentVec,
}

impl PolyInU1 {
    /// Builds the representation directly from coefficient polynomials in
    /// `u2`; `coeffs` must have nonzero first and last entries.
    pub fn new(field: Field, coeffs: Vec<FpPoly>) -> Result<Self> {
        match (coeffs.first(), coeffs.last()) {
            (Some(a), Some(b)) if !a.is_zero() && !b.is_zero() => Ok(PolyInU1 {
                field,
                coeffs,
                shift: ExponentVec::ZERO,
            }),
            _ => Err(Error::InvalidArgument(
                "first and last u1-coefficients must be nonzero".into(),
            )),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FpPoly] {
        &self.coeffs
    }

    /// Degree in `u1`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn shift(&self) -> ExponentVec {
        self.shift
    }

    /// Expands back to the original Laurent polynomial (shift reapplied).
    pub fn to_laurent(&self) -> LaurentPoly {
        let terms = self.coeffs.iter().enumerate().flat_map(|(i, q)| {
            q.coeffs()
                .iter()
                .enumerate()
                .map(move |(j, &c)| (ExponentVec::new(i as i64, j as i64), c as i64))
        });
        LaurentPoly::from_terms(self.field, terms).shift(self.shift)
    }
}

/// Orientation change of the exponent lattice: optionally exchange `u1` and
/// `u2`, then optionally replace the second variable by its inverse.
///
/// As a matrix `M` acting on exponent vectors this is orthogonal, so outward
/// normals transform by `M` and log-vectors pull back by `M^T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AxisMap {
    pub swap: bool,
    pub invert: bool,
}

impl AxisMap {
    pub const IDENTITY: AxisMap = AxisMap {
        swap: false,
        invert: false,
    };

    /// The four orientations in the fixed order used by certificate searches.
    pub const ALL: [AxisMap; 4] = [
        AxisMap {
            swap: false,
            invert: false,
        },
        AxisMap {
            swap: false,
            invert: true,
        },
        AxisMap {
            swap: true,
            invert: false,
        },
        AxisMap {
            swap: true,
            invert: true,
        },
    ];

    pub fn apply(self, e: ExponentVec) -> ExponentVec {
        let e = if self.swap { e.swapped() } else { e };
        if self.invert {
            ExponentVec::new(e.e1, -e.e2)
        } else {
            e
        }
    }

    /// `M^T v` for a pair of coordinates.
    pub fn pull_back<T: std::ops::Neg<Output = T>>(self, v: (T, T)) -> (T, T) {
        let v = if self.invert { (v.0, -v.1) } else { v };
        if self.swap {
            (v.1, v.0)
        } else {
            v
        }
    }

    pub fn apply_poly(self, f: &LaurentPoly) -> LaurentPoly {
        f.map_exponents(|e| self.apply(e))
    }

    /// Name of the variable in the main (polynomial) slot.
    pub fn main_variable(self) -> &'static str {
        if self.swap {
            "u2"
        } else {
            "u1"
        }
    }

    /// Name of the variable whose polynomials form the coefficient ring.
    pub fn coefficient_variable(self) -> &'static str {
        if self.swap {
            "u1"
        } else {
            "u2"
        }
    }
}

/// Content in `F_p[u2]` of a polynomial in `u1`.
fn u1_content(q: &[FpPoly]) -> FpPoly {
    FpPoly::content(q).expect("nonzero polynomial")
}

/// Returns `q` with `g = f * q` when `f` divides `g` in the Laurent ring.
///
/// Both operands are normalized (dividing by a monomial, which is a unit),
/// split into content in `F_p[u2]` and primitive part, and the primitive
/// parts are divided in `(F_p[u2])[u1]`. For a genuine multiple every
/// leading-coefficient division along the way is exact, so an inexact step
/// proves non-divisibility.
pub fn exact_divides(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    let field = f.field;
    if f.is_zero() {
        return None;
    }
    if g.is_zero() {
        return Some(LaurentPoly::zero(field));
    }
    let fu = f.as_poly_in_u1().ok()?;
    let gu = g.as_poly_in_u1().ok()?;
    if gu.degree() < fu.degree() {
        return None;
    }
    let cf = u1_content(&fu.coeffs);
    let cg = u1_content(&gu.coeffs);
    let c = cg.exact_div(&cf)?;
    let pf: Vec<FpPoly> = fu.coeffs.iter().map(|q| q.exact_div(&cf).unwrap()).collect();
    let mut rem: Vec<FpPoly> = gu.coeffs.iter().map(|q| q.exact_div(&cg).unwrap()).collect();

    let n = fu.degree();
    let lead = &pf[n];
    let mut quot = vec![FpPoly::zero(field); gu.degree() - n + 1];
    for i in (0..quot.len()).rev() {
        if rem[i + n].is_zero() {
            continue;
        }
        let qi = rem[i + n].exact_div(lead)?;
        for (j, fj) in pf.iter().enumerate() {
            if !fj.is_zero() {
                rem[i + j] = &rem[i + j] - &(&qi * fj);
            }
        }
        quot[i] = qi;
    }
    if rem.iter().any(|r| !r.is_zero()) {
        return None;
    }
    let mut q = LaurentPoly::zero(field);
    for (i, qi) in quot.iter().enumerate() {
        let qi = qi * &c;
        for (j, &a) in qi.coeffs().iter().enumerate() {
            q.add_term(ExponentVec::new(i as i64, j as i64), a);
        }
    }
    Some(q.shift(gu.shift - fu.shift))
}

/// Membership of `g` in the principal ideal `<f>`.
pub fn in_ideal(g: &LaurentPoly, f: &LaurentPoly) -> Result<bool> {
    check_generator(f)?;
    Ok(g.is_zero() || exact_divides(f, g).is_some())
}

/// Rejects generators for which `<f>` is not a proper nonzero ideal.
pub fn check_generator(f: &LaurentPoly) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if f.is_monomial() {
        Err(Error::MonomialGenerator)
    } else {
        Ok(())
    }
}

/// `sum_i m_i u^{points[i]}`.
pub fn combine(coeffs: &[LaurentPoly], points: &[ExponentVec]) -> LaurentPoly {
    assert_eq!(coeffs.len(), points.len());
    let field = coeffs[0].field;
    coeffs
        .iter()
        .zip(points)
        .fold(LaurentPoly::zero(field), |acc, (m, &a)| acc.add(&m.shift(a)))
}
