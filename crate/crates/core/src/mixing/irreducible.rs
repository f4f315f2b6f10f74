//! Irreducibility certificates for the generator `f`.

use crate::exponent::ExponentVec;
use crate::field::{Field, FpPoly};
use crate::laurent::{check_generator, exact_divides, AxisMap, LaurentPoly, PolyInU1};
use crate::Result;

/// Largest normalized bidegree handled by the exhaustive factor search.
pub const BRUTE_FORCE_BIDEGREE: (usize, usize) = (4, 4);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// Eisenstein's criterion at the prime `prime` of the coefficient ring,
    /// with the polynomial oriented by `map`.
    Eisenstein { map: AxisMap, prime: FpPoly },
    /// Exhaustive search found no factor.
    BruteForce { max_bidegree: (usize, usize) },
    /// A proper factor was found; `f` is not irreducible.
    Reducible { factor: LaurentPoly },
    Unverified,
}

impl IrreducibilityCertificate {
    pub fn is_irreducible(&self) -> Option<bool> {
        match self {
            IrreducibilityCertificate::Eisenstein { .. }
            | IrreducibilityCertificate::BruteForce { .. } => Some(true),
            IrreducibilityCertificate::Reducible { .. } => Some(false),
            IrreducibilityCertificate::Unverified => None,
        }
    }

    /// Re-checks the certificate against `f`.
    pub fn verify(&self, f: &LaurentPoly) -> bool {
        match self {
            IrreducibilityCertificate::Eisenstein { map, prime } => map
                .apply_poly(f)
                .as_poly_in_u1()
                .map(|q| eisenstein_holds(&q, prime))
                .unwrap_or(false),
            IrreducibilityCertificate::BruteForce { .. } => {
                matches!(brute_force(f), Some(IrreducibilityCertificate::BruteForce { .. }))
            }
            IrreducibilityCertificate::Reducible { factor } => {
                !factor.is_monomial()
                    && exact_divides(factor, f).is_some_and(|h| !h.is_zero() && !h.is_monomial())
            }
            IrreducibilityCertificate::Unverified => true,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            IrreducibilityCertificate::Eisenstein { map, prime } => format!(
                "Eisenstein at {} in F_p[{}{}][{}]",
                prime.display_in(map.coefficient_variable()),
                map.coefficient_variable(),
                if map.invert { "^-1" } else { "" },
                map.main_variable()
            ),
            IrreducibilityCertificate::BruteForce { max_bidegree } => format!(
                "no factor up to bidegree ({},{})",
                max_bidegree.0, max_bidegree.1
            ),
            IrreducibilityCertificate::Reducible { factor } => format!("reducible, factor {factor}"),
            IrreducibilityCertificate::Unverified => "unverified".to_string(),
        }
    }
}

/// Eisenstein's conditions for `q_0 + ... + q_n x^n` at `g`, including
/// primitivity.
fn eisenstein_holds(q: &PolyInU1, g: &FpPoly) -> bool {
    let c = q.coeffs();
    let n = q.degree();
    if n == 0 || g.is_constant() {
        return false;
    }
    let g2 = g * g;
    c[..n].iter().all(|qi| g.divides(qi))
        && !g.divides(&c[n])
        && !g2.divides(&c[0])
        && FpPoly::content(c).map(|ct| ct.is_one()).unwrap_or(false)
}

/// Monic irreducible factors of `a` of degree at most two, plus `a` itself
/// when it is irreducible.
fn small_prime_factors(a: &FpPoly) -> Vec<FpPoly> {
    let field = a.field();
    let p = field.p();
    let mut out = Vec::new();
    for r in 0..p {
        if a.eval(r) == 0 {
            out.push(FpPoly::from_residues(field, vec![field.neg(r), 1]));
        }
    }
    if p <= 256 {
        for c in 0..p {
            for b in 0..p {
                let g = FpPoly::from_residues(field, vec![c, b, 1]);
                if g.divides(a) && g.is_irreducible().unwrap_or(false) {
                    out.push(g);
                }
            }
        }
    }
    if !a.is_constant() && a.is_irreducible().unwrap_or(false) {
        let m = a.monic();
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// Tries Eisenstein's criterion in the four orientations of [`AxisMap::ALL`],
/// with primes drawn from the small irreducible factors of the constant
/// coefficient.
pub fn eisenstein_certify(f: &LaurentPoly) -> Option<IrreducibilityCertificate> {
    check_generator(f).ok()?;
    for map in AxisMap::ALL {
        let q = map.apply_poly(f).as_poly_in_u1().ok()?;
        if q.degree() == 0 {
            continue;
        }
        for g in small_prime_factors(&q.coeffs()[0]) {
            if eisenstein_holds(&q, &g) {
                return Some(IrreducibilityCertificate::Eisenstein { map, prime: g });
            }
        }
    }
    None
}

fn all_polys_up_to(field: Field, max_deg: usize) -> Vec<FpPoly> {
    let p = field.p();
    let mut out = vec![FpPoly::zero(field)];
    let mut digits = vec![0u32; max_deg + 1];
    loop {
        let mut i = 0;
        loop {
            if i > max_deg {
                return out;
            }
            digits[i] += 1;
            if digits[i] == p {
                digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
        out.push(FpPoly::from_residues(field, digits.clone()));
    }
}

fn monic_divisors(a: &FpPoly) -> Vec<FpPoly> {
    let deg = match a.degree() {
        crate::field::Degree::Finite(d) => d,
        crate::field::Degree::NegInf => return Vec::new(),
    };
    all_polys_up_to(a.field(), deg)
        .into_iter()
        .filter(|g| !g.is_zero() && g.is_monic() && g.divides(a))
        .collect()
}

/// Exhaustive factor search for `p ∈ {2,3}` and normalized bidegree at most
/// [`BRUTE_FORCE_BIDEGREE`]; `None` outside that range.
///
/// A nontrivial factorization of the normalized `f = sum q_i u1^i` either
/// has a factor in `F_p[u2]` (a nontrivial content) or a factor of
/// `u1`-degree `a` with `1 <= a <= deg/2`; the latter's top and bottom
/// coefficients divide `q_n` and `q_0`.
pub fn brute_force(f: &LaurentPoly) -> Option<IrreducibilityCertificate> {
    let field = f.field();
    if !matches!(field.p(), 2 | 3) || check_generator(f).is_err() {
        return None;
    }
    let (_, g) = f.normalize().ok()?;
    let (_, hi) = g.bounding_box()?;
    let (d1, d2) = (hi.e1 as usize, hi.e2 as usize);
    if d1 > BRUTE_FORCE_BIDEGREE.0 || d2 > BRUTE_FORCE_BIDEGREE.1 {
        return None;
    }
    let found = |factor: LaurentPoly| Some(IrreducibilityCertificate::Reducible { factor });
    let certified = Some(IrreducibilityCertificate::BruteForce {
        max_bidegree: BRUTE_FORCE_BIDEGREE,
    });

    // univariate cases
    if d1 == 0 || d2 == 0 {
        let uni = if d1 == 0 {
            g.as_poly_in_u1().ok()?.coeffs()[0].clone()
        } else {
            AxisMap { swap: true, invert: false }
                .apply_poly(&g)
                .as_poly_in_u1()
                .ok()?
                .coeffs()[0]
                .clone()
        };
        if uni.is_irreducible().ok()? {
            return certified;
        }
        let factor = monic_divisors(&uni)
            .into_iter()
            .find(|d| !d.is_constant() && d.degree() < uni.degree())?;
        let lift = |q: &FpPoly| {
            let terms = q.coeffs().iter().enumerate().map(|(j, &c)| {
                let e = if d1 == 0 {
                    ExponentVec::new(0, j as i64)
                } else {
                    ExponentVec::new(j as i64, 0)
                };
                (e, c as i64)
            });
            LaurentPoly::from_terms(field, terms)
        };
        return found(lift(&factor));
    }

    let q = g.as_poly_in_u1().ok()?;
    let c = q.coeffs();
    let content = FpPoly::content(c).ok()?;
    if !content.is_one() {
        let terms = content
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, &a)| (ExponentVec::new(0, j as i64), a as i64));
        return found(LaurentPoly::from_terms(field, terms));
    }

    let bottoms = monic_divisors(&c[0]);
    let tops = monic_divisors(&c[d1]);
    let middles = all_polys_up_to(field, d2);
    let scalars: Vec<u32> = (1..field.p()).collect();
    for a in 1..=d1 / 2 {
        for top in &tops {
            for bottom in &bottoms {
                for &s in &scalars {
                    let low = bottom.scale(s);
                    let mut idx = vec![0usize; a - 1];
                    loop {
                        let mut coeffs = vec![low.clone()];
                        coeffs.extend(idx.iter().map(|&k| middles[k].clone()));
                        coeffs.push(top.clone());
                        let candidate = PolyInU1::new(field, coeffs).ok()?.to_laurent();
                        if exact_divides(&candidate, &g).is_some() {
                            return found(candidate);
                        }
                        // odometer over the middle coefficients
                        let mut i = 0;
                        while i < idx.len() {
                            idx[i] += 1;
                            if idx[i] < middles.len() {
                                break;
                            }
                            idx[i] = 0;
                            i += 1;
                        }
                        if i == idx.len() {
                            break;
                        }
                    }
                }
            }
        }
    }
    certified
}

/// Eisenstein first, then the exhaustive search, else `Unverified`.
pub fn certify(f: &LaurentPoly) -> Result<IrreducibilityCertificate> {
    check_generator(f)?;
    Ok(eisenstein_certify(f)
        .or_else(|| brute_force(f))
        .unwrap_or(IrreducibilityCertificate::Unverified))
}
