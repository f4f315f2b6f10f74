//! Prime fields `F_p` and dense univariate polynomials over them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The prime field `F_p`, `2 <= p < 2^16`.
///
/// Residues are stored as `u32` in `[0, p)`; every product of two residues
/// fits in 32 bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 16)).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        let is_prime = (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { p: p as u32 })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

/// Degree of a univariate polynomial; the zero polynomial has degree `-inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInf, Degree::NegInf) => Ordering::Equal,
            (Degree::NegInf, _) => Ordering::Less,
            (_, Degree::NegInf) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

/// An integer extended by a single `+inf`, used for valuations of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtInt {
    Finite(i64),
    Infinite,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(n) => Some(n),
            ExtInt::Infinite => None,
        }
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::Infinite, ExtInt::Infinite) => Ordering::Equal,
            (ExtInt::Infinite, _) => Ordering::Greater,
            (_, ExtInt::Infinite) => Ordering::Less,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(n) => write!(f, "{n}"),
            ExtInt::Infinite => f.write_str("inf"),
        }
    }
}

/// Dense polynomial over `F_p`; `coeffs[i]` is the coefficient of `t^i`.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial is
/// the empty vector and reports [`Degree::NegInf`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: Field,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn zero(field: Field) -> Self {
        FpPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        FpPoly::constant(field, 1)
    }

    pub fn constant(field: Field, c: i64) -> Self {
        FpPoly::from_coeffs(field, &[c])
    }

    /// The polynomial `t`.
    pub fn t(field: Field) -> Self {
        FpPoly::monomial(field, 1, 1)
    }

    pub fn monomial(field: Field, c: i64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = field.reduce(c);
        FpPoly::from_residues(field, coeffs)
    }

    /// Builds a polynomial from integer coefficients, reducing them mod p.
    pub fn from_coeffs(field: Field, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.reduce(c)).collect();
        FpPoly::from_residues(field, coeffs)
    }

    /// Builds a polynomial from residues already in `[0, p)`.
    pub fn from_residues(field: Field, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.p()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { field, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as a plain integer; panics on the zero polynomial.
    fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        FpPoly::from_residues(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        FpPoly {
            field: self.field,
            coeffs,
        }
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.reduce(i as i64), c))
            .collect();
        FpPoly::from_residues(f, coeffs)
    }

    fn check_field(&self, other: &FpPoly) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &FpPoly) -> Result<(FpPoly, FpPoly)> {
        self.check_field(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = self.field;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((FpPoly::zero(f), self.clone()));
        }
        let n = divisor.deg();
        let lead_inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - n];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + n], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(n);
        Ok((FpPoly::from_residues(f, quot), FpPoly::from_residues(f, rem)))
    }

    pub fn rem(&self, divisor: &FpPoly) -> Result<FpPoly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &FpPoly) -> Option<FpPoly> {
        match self.divrem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &FpPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        self.check_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, mut e: u64) -> FpPoly {
        let mut base = self.clone();
        let mut acc = FpPoly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, mut e: u64, modulus: &FpPoly) -> Result<FpPoly> {
        let mut base = self.rem(modulus)?;
        let mut acc = FpPoly::one(self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^e)`. Coefficients in `F_p` are fixed by Frobenius, so this is
    /// `self(t^(p^e))`.
    pub fn frobenius_pow(&self, e: u32) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let step = (self.field.p() as usize).pow(e);
        let mut coeffs = vec![0; self.deg() * step + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c;
        }
        FpPoly::from_residues(self.field, coeffs)
    }

    /// Multiplicity of the irreducible `g` in `self`; `Infinite` for zero.
    pub fn ord_at(&self, g: &FpPoly) -> ExtInt {
        if self.is_zero() {
            return ExtInt::Infinite;
        }
        assert!(!g.is_constant(), "ord_at needs a non-constant prime");
        let mut rest = self.clone();
        let mut m = 0;
        while let Some(q) = rest.exact_div(g) {
            rest = q;
            m += 1;
        }
        ExtInt::Finite(m)
    }

    /// `-log_p |a|_inf = -deg a`; `Infinite` for zero.
    pub fn neg_log_infinity_norm(&self) -> ExtInt {
        match self.degree() {
            Degree::NegInf => ExtInt::Infinite,
            Degree::Finite(d) => ExtInt::Finite(-(d as i64)),
        }
    }

    /// Deterministic irreducibility test over `F_p`.
    ///
    /// Rejects inseparable and non-squarefree input via the derivative, then
    /// checks `gcd(t^(p^i) - t, a) = 1` for every `i <= deg a / 2`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            Degree::NegInf | Degree::Finite(0) => return Err(Error::ConstantPolynomial),
            Degree::Finite(n) => n,
        };
        if n == 1 {
            return Ok(true);
        }
        let a = self.monic();
        let da = a.derivative();
        if da.is_zero() || !a.gcd(&da).is_one() {
            return Ok(false);
        }
        let p = self.field.p() as u64;
        let t = FpPoly::t(self.field);
        let mut h = t.clone();
        for _ in 1..=n / 2 {
            h = h.powmod(p, &a)?;
            if !a.gcd(&(&h - &t)).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Monic gcd of a list of polynomials; errors when every entry is zero.
    pub fn content(polys: &[FpPoly]) -> Result<FpPoly> {
        let mut nonzero = polys.iter().filter(|q| !q.is_zero());
        let first = nonzero.next().ok_or(Error::ZeroPolynomial)?;
        let mut g = first.monic();
        for q in nonzero {
            if g.is_one() {
                break;
            }
            g = g.gcd(q);
        }
        Ok(g)
    }

    /// Writes the polynomial in the variable `var`, lowest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: &FpPoly) -> FpPoly {
        self.check_field(rhs);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        FpPoly::from_residues(f, coeffs)
    }
}

impl Sub for &FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: &FpPoly) -> FpPoly {
        self.check_field(rhs);
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        FpPoly::from_residues(f, coeffs)
    }
}

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        let f = self.field;
        FpPoly::from_residues(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: &FpPoly) -> FpPoly {
        self.check_field(rhs);
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(f);
        }
        // Accumulate in u64 and reduce once per output coefficient.
        let p = f.p() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] += (a * b) as u64;
            }
            if i % 1024 == 1023 {
                acc.iter_mut().for_each(|c| *c %= p);
            }
        }
        FpPoly::from_residues(f, acc.into_iter().map(|c| (c % p) as u32).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FpPoly {
            type Output = FpPoly;
            fn $m(self, rhs: FpPoly) -> FpPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2).unwrap()
    }

    fn poly(field: Field, c: &[i64]) -> FpPoly {
        FpPoly::from_coeffs(field, c)
    }

    #[test]
    fn field_rejects_composites_and_range() {
        assert_eq!(Field::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Field::new(1), Err(Error::ModulusOutOfRange(1)));
        assert_eq!(Field::new(65536), Err(Error::ModulusOutOfRange(65536)));
        assert!(Field::new(65521).is_ok());
        let f = Field::new(7).unwrap();
        assert_eq!(f.mul(f.inv(3), 3), 1);
    }

    #[test]
    fn gcd_of_square_in_char_two() {
        let f = f2();
        // t^2 + 1 = (t + 1)^2
        assert_eq!(poly(f, &[1, 0, 1]).gcd(&poly(f, &[1, 1])), poly(f, &[1, 1]));
    }

    #[test]
    fn divrem_exact_factor() {
        let f = f2();
        let (q, r) = poly(f, &[0, 1, 0, 1]).divrem(&poly(f, &[0, 1])).unwrap();
        assert_eq!(q, poly(f, &[1, 0, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_by_zero_is_an_error() {
        let f = f2();
        assert_eq!(
            poly(f, &[1, 1]).divrem(&FpPoly::zero(f)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn squaring_trinomial() {
        let f = f2();
        let a = poly(f, &[1, 1, 1]);
        assert_eq!(&a * &a, poly(f, &[1, 0, 1, 0, 1]));
        assert_eq!(a.frobenius_pow(1), poly(f, &[1, 0, 1, 0, 1]));
        assert_eq!(a.frobenius_pow(0), a);
    }

    #[test]
    fn frobenius_matches_repeated_squaring() {
        let f = f2();
        let a = poly(f, &[1, 1]);
        let squared_twice = {
            let s = &a * &a;
            &s * &s
        };
        assert_eq!(a.frobenius_pow(2), squared_twice);
        assert_eq!(a.frobenius_pow(2), poly(f, &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn valuations() {
        let f = f2();
        let u = FpPoly::t(f);
        assert_eq!(poly(f, &[0, 1, 0, 1]).ord_at(&u), ExtInt::Finite(1));
        assert_eq!(poly(f, &[0, 0, 1]).ord_at(&u), ExtInt::Finite(2));
        assert_eq!(FpPoly::zero(f).ord_at(&u), ExtInt::Infinite);
        assert_eq!(u.neg_log_infinity_norm(), ExtInt::Finite(-1));
        assert_eq!(FpPoly::one(f).neg_log_infinity_norm(), ExtInt::Finite(0));
        assert_eq!(FpPoly::zero(f).neg_log_infinity_norm(), ExtInt::Infinite);
    }

    #[test]
    fn irreducibility_small_cases() {
        let f = f2();
        assert!(poly(f, &[1, 1, 1]).is_irreducible().unwrap());
        assert!(!poly(f, &[1, 0, 1]).is_irreducible().unwrap());
        assert!(FpPoly::t(f).is_irreducible().unwrap());
        assert_eq!(
            FpPoly::one(f).is_irreducible(),
            Err(Error::ConstantPolynomial)
        );
        let f3 = Field::new(3).unwrap();
        // t^2 + 1 has no roots mod 3
        assert!(poly(f3, &[1, 0, 1]).is_irreducible().unwrap());
        // t^3 - t + 1 is irreducible over F_3, (t^2+1)^2 is not
        assert!(poly(f3, &[1, -1, 0, 1]).is_irreducible().unwrap());
        assert!(!poly(f3, &[1, 0, 2, 0, 1]).is_irreducible().unwrap());
    }

    #[test]
    fn content_of_lists() {
        let f = f2();
        let u = FpPoly::t(f);
        let list = [u.clone(), poly(f, &[0, 0, 1]), poly(f, &[0, 1, 0, 1])];
        assert_eq!(FpPoly::content(&list).unwrap(), u);
        let list = [u.clone(), FpPoly::one(f), u.clone()];
        assert_eq!(FpPoly::content(&list).unwrap(), FpPoly::one(f));
        assert_eq!(
            FpPoly::content(&[poly(f, &[0, 0, 1])]).unwrap(),
            poly(f, &[0, 0, 1])
        );
        assert_eq!(
            FpPoly::content(&[FpPoly::zero(f)]),
            Err(Error::ZeroPolynomial)
        );
        let f5 = Field::new(5).unwrap();
        assert!(FpPoly::content(&[poly(f5, &[0, 3])]).unwrap().is_monic());
    }

    #[test]
    fn display() {
        let f = Field::new(5).unwrap();
        assert_eq!(poly(f, &[1, 0, 3]).to_string(), "1 + 3*t^2");
        assert_eq!(FpPoly::zero(f).to_string(), "0");
    }
}
