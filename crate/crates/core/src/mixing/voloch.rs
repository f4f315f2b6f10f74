//! Scan for solutions of `(1+t+t^2)^m = 1+t^(2m)` over `F_2[t]`.

use crate::field::{Field, FpPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonCheck {
    pub e: u32,
    /// `(1+t+t^2)^(2^e) = 1 + t^(2^e) + t^(2^(e+1))`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolochScan {
    pub mmax: u64,
    pub solutions: Vec<u64>,
    /// One check per 2-adic valuation `e` occurring among `1..=mmax`.
    pub skeleton: Vec<SkeletonCheck>,
}

impl VolochScan {
    pub fn all_skeleton_checks_hold(&self) -> bool {
        self.skeleton.iter().all(|c| c.holds)
    }
}

fn f2() -> Field {
    Field::new(2).expect("2 is prime")
}

fn base() -> FpPoly {
    FpPoly::from_coeffs(f2(), &[1, 1, 1])
}

fn binomial(a: usize) -> FpPoly {
    FpPoly::one(f2()) + FpPoly::monomial(f2(), 1, a)
}

/// Compares `(1+t+t^2)^m` with `1+t^(2m)` for `m = 1..=mmax`.
///
/// Powers are accumulated by repeated multiplication; powers of two are
/// cross-checked against square-and-multiply.
pub fn voloch_identity_scan(mmax: u64) -> VolochScan {
    let g = base();
    let mut acc = FpPoly::one(f2());
    let mut solutions = Vec::new();
    for m in 1..=mmax {
        acc = &acc * &g;
        if m.is_power_of_two() {
            debug_assert_eq!(acc, g.pow(m));
        }
        if acc == binomial(2 * m as usize) {
            solutions.push(m);
        }
    }
    let emax = if mmax == 0 { 0 } else { 63 - mmax.leading_zeros() };
    let skeleton = (0..=emax)
        .filter(|_| mmax > 0)
        .map(|e| {
            let q = 1usize << e;
            let mut lhs = g.clone();
            for _ in 0..e {
                lhs = &lhs * &lhs;
            }
            debug_assert_eq!(lhs, g.frobenius_pow(e));
            let rhs = binomial(q) + FpPoly::monomial(f2(), 1, 2 * q);
            SkeletonCheck { e, holds: lhs == rhs }
        })
        .collect();
    VolochScan {
        mmax,
        solutions,
        skeleton,
    }
}
