//! Exact rationals used for slopes, ordinates and log-vectors.

use num_traits::{Signed, Zero};

pub type Rational = num_rational::Ratio<i64>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

/// Returns `Some(t)` with `a = t * b` when `a` is a rational multiple of the
/// nonzero vector `b`.
pub fn vector_ratio(a: (Rational, Rational), b: (Rational, Rational)) -> Option<Rational> {
    if b.0.is_zero() && b.1.is_zero() {
        return None;
    }
    // cross product must vanish
    if a.0 * b.1 != a.1 * b.0 {
        return None;
    }
    Some(if !b.0.is_zero() { a.0 / b.0 } else { a.1 / b.1 })
}
