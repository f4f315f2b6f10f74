use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;

/// Largest coordinate magnitude accepted from external input.
pub const COORD_LIMIT: i64 = 1 << 20;

/// An exponent vector `(e1, e2)` of the monomial `u1^e1 u2^e2`, also used for
/// lattice points and integer direction vectors.
///
/// The derived ordering is lexicographic in `(e1, e2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExponentVec {
    pub e1: i64,
    pub e2: i64,
}

impl ExponentVec {
    pub const ZERO: ExponentVec = ExponentVec { e1: 0, e2: 0 };

    pub const fn new(e1: i64, e2: i64) -> Self {
        ExponentVec { e1, e2 }
    }

    pub fn scale(self, k: i64) -> Self {
        ExponentVec::new(self.e1 * k, self.e2 * k)
    }

    pub fn dot(self, other: ExponentVec) -> i128 {
        self.e1 as i128 * other.e1 as i128 + self.e2 as i128 * other.e2 as i128
    }

    /// `self.e1 * other.e2 - self.e2 * other.e1`.
    pub fn cross(self, other: ExponentVec) -> i128 {
        self.e1 as i128 * other.e2 as i128 - self.e2 as i128 * other.e1 as i128
    }

    pub fn is_zero(self) -> bool {
        self.e1 == 0 && self.e2 == 0
    }

    pub fn content(self) -> i64 {
        self.e1.gcd(&self.e2)
    }

    /// Divides out the gcd of the coordinates; the zero vector is returned as is.
    pub fn primitive(self) -> Self {
        let g = self.content();
        if g == 0 {
            self
        } else {
            ExponentVec::new(self.e1 / g, self.e2 / g)
        }
    }

    /// Primitive direction with the first nonzero coordinate positive.
    pub fn canonical_direction(self) -> Self {
        let v = self.primitive();
        if v.e1 < 0 || (v.e1 == 0 && v.e2 < 0) {
            -v
        } else {
            v
        }
    }

    pub fn swapped(self) -> Self {
        ExponentVec::new(self.e2, self.e1)
    }

    pub fn within_limit(self) -> bool {
        self.e1.abs() <= COORD_LIMIT && self.e2.abs() <= COORD_LIMIT
    }
}

impl Add for ExponentVec {
    type Output = ExponentVec;
    fn add(self, rhs: Self) -> Self {
        ExponentVec::new(self.e1 + rhs.e1, self.e2 + rhs.e2)
    }
}

impl Sub for ExponentVec {
    type Output = ExponentVec;
    fn sub(self, rhs: Self) -> Self {
        ExponentVec::new(self.e1 - rhs.e1, self.e2 - rhs.e2)
    }
}

impl Neg for ExponentVec {
    type Output = ExponentVec;
    fn neg(self) -> Self {
        ExponentVec::new(-self.e1, -self.e2)
    }
}

impl From<(i64, i64)> for ExponentVec {
    fn from((e1, e2): (i64, i64)) -> Self {
        ExponentVec::new(e1, e2)
    }
}

impl fmt::Display for ExponentVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.e1, self.e2)
    }
}
