//! Independent oracles for the relation solver.
//!
//! Ideal membership is decided here by lex-order multivariate division in
//! `F_p[u1,u2]` after clearing monomials, which shares no code with the
//! content/primitive-part route of the library. Constant relations are then
//! found by enumerating every tuple of nonzero constants.

use std::collections::BTreeMap;

use mixbound::laurent::{combination_solve, combine, in_ideal, SolveOptions};
use mixbound::{ExponentVec, Field, LaurentPoly};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, TestRng, TestRunner};

type Dense = BTreeMap<(i64, i64), u32>;

fn to_dense(f: &LaurentPoly) -> Dense {
    let (lo1, lo2) = f
        .terms()
        .fold((i64::MAX, i64::MAX), |(a, b), (e, _)| (a.min(e.e1), b.min(e.e2)));
    f.terms().map(|(e, c)| ((e.e1 - lo1, e.e2 - lo2), c)).collect()
}

fn divisible(g: &LaurentPoly, f: &LaurentPoly) -> bool {
    if g.is_zero() {
        return true;
    }
    let field = f.field();
    let p = field.p() as u64;
    let f = to_dense(f);
    let mut r = to_dense(g);
    let (&lt, &lc) = f.iter().next_back().unwrap();
    let inv = (1..p).find(|&x| x * lc as u64 % p == 1).unwrap() as u32;
    while let Some((&m, &c)) = r.iter().next_back() {
        if m.0 < lt.0 || m.1 < lt.1 {
            return false;
        }
        let q = (m.0 - lt.0, m.1 - lt.1);
        let qc = field.mul(c, inv);
        for (&e, &fc) in &f {
            let key = (e.0 + q.0, e.1 + q.1);
            let cur = r.get(&key).copied().unwrap_or(0);
            let v = field.sub(cur, field.mul(qc, fc));
            if v == 0 {
                r.remove(&key);
            } else {
                r.insert(key, v);
            }
        }
    }
    true
}

fn constant_relation_exists(f: &LaurentPoly, points: &[ExponentVec]) -> bool {
    let field = f.field();
    let p = field.p();
    let r = points.len();
    let mut digits = vec![1u32; r];
    loop {
        let coeffs: Vec<_> = digits
            .iter()
            .map(|&c| LaurentPoly::constant(field, c as i64))
            .collect();
        if divisible(&combine(&coeffs, points), f) {
            return true;
        }
        let mut i = 0;
        while i < r {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 1;
            i += 1;
        }
        if i == r {
            return false;
        }
    }
}

#[test]
fn oracle_membership_agrees_on_known_cases() {
    let f2 = Field::new(2).unwrap();
    let f = LaurentPoly::from_terms(f2, [((0, 0).into(), 1), ((1, 0).into(), 1), ((0, 1).into(), 1)]);
    assert!(divisible(&f.mul(&f).shift((-3, 2).into()), &f));
    assert!(!divisible(&LaurentPoly::one(f2), &f));
    assert!(!divisible(&f.add(&LaurentPoly::one(f2)), &f));
}

fn instance() -> impl Strategy<Value = (LaurentPoly, Vec<ExponentVec>, i64)> {
    prop::sample::select(vec![2u64, 3])
        .prop_flat_map(|p| {
            let field = Field::new(p).unwrap();
            (
                Just(field),
                prop::collection::btree_map((0i64..3, 0i64..3), 1..p as i64, 2..=3),
                prop::collection::btree_set((0i64..3, 0i64..3), 2..=3),
                any::<bool>(),
                1i64..=4,
            )
        })
        .prop_map(|(field, terms, shape, use_support, k)| {
            let f = LaurentPoly::from_terms(field, terms.into_iter().map(|(e, c)| (e.into(), c)));
            let shape: Vec<ExponentVec> = if use_support {
                f.support()
            } else {
                shape.into_iter().map(Into::into).collect()
            };
            (f, shape, k)
        })
}

#[test]
fn solver_matches_constant_enumeration() {
    let mut runner = TestRunner::new_with_rng(
        Config::default(),
        TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    let strategy = instance();
    let (mut found, mut total) = (0, 0);
    while total < 100 {
        let (f, shape, k) = strategy.new_tree(&mut runner).unwrap().current();
        if f.is_monomial() {
            continue;
        }
        total += 1;
        let points: Vec<_> = shape.iter().map(|n| n.scale(k)).collect();
        let expected = constant_relation_exists(&f, &points);
        let got = combination_solve(&f, &points, SolveOptions::constants()).unwrap();
        assert_eq!(got.is_some(), expected, "f = {f}, points = {points:?}");
        if let Some(m) = got {
            found += 1;
            assert!(m.iter().all(|c| c.is_constant() && !c.is_zero()));
            let relation = combine(&m, &points);
            assert!(in_ideal(&relation, &f).unwrap());
            assert!(divisible(&relation, &f));
        }
    }
    assert!(found > 0);
}
