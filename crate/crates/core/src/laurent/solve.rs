//! Search for relations `sum_i m_i u^{a_i} = q f` with bounded `m_i`.

use std::collections::BTreeMap;

use super::{check_generator, combine, exact_divides, LaurentPoly};
use crate::error::{Error, Result};
use crate::exponent::ExponentVec;
use crate::geom::convex_hull;
use crate::linalg::Matrix;

/// Bounds for [`combination_solve`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Each `m_i` is supported in the box `[-window, window]^2`.
    pub window: u32,
    /// Restrict every `m_i` to `F_p`.
    pub constants_only: bool,
    /// Node budget for the lexicographic search over the kernel.
    pub node_budget: u64,
}

impl SolveOptions {
    pub fn constants() -> Self {
        SolveOptions {
            window: 0,
            constants_only: true,
            node_budget: 1 << 20,
        }
    }

    pub fn window(window: u32) -> Self {
        SolveOptions {
            window,
            constants_only: window == 0,
            node_budget: 1 << 20,
        }
    }
}

/// Finds `m_1..m_r`, none of them in `<f>`, with `sum m_i u^{points[i]}` in
/// `<f>`.
///
/// The `m_i` range over the span of the box monomials, with the monomials
/// `x + lexmax(f)` removed for every `x` whose translate `x + bbox(f)` fits in
/// the box. That span is a complement of `<f>` inside the box, so a nonzero
/// coefficient block is never a multiple of `f`, and every box solution has
/// the same coefficient blocks modulo `f` as some reduced solution.
///
/// The cofactor `q` is supported on `{x : x + hull(f) ⊆ hull(points + box)}`.
/// Among the kernel vectors with every block nonzero, the lexicographically
/// smallest in the unknown order (blocks in point order, monomials
/// lexicographic inside each block) is selected, then divided by the unit
/// that makes the lowest term of `m_1` equal to `1`. The final relation is
/// re-checked by exact division.
pub fn combination_solve(
    f: &LaurentPoly,
    points: &[ExponentVec],
    opts: SolveOptions,
) -> Result<Option<Vec<LaurentPoly>>> {
    check_generator(f)?;
    if points.is_empty() {
        return Err(Error::InvalidShape("no points".into()));
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != points.len() {
        return Err(Error::InvalidShape("points must be distinct".into()));
    }
    let field = f.field();

    let w = if opts.constants_only { 0 } else { opts.window as i64 };
    let (flo, fhi) = f.bounding_box().expect("nonzero");
    let lead = f.lex_max().expect("nonzero");
    let mut block: Vec<ExponentVec> = Vec::new();
    for e1 in -w..=w {
        for e2 in -w..=w {
            let e = ExponentVec::new(e1, e2);
            let x = e - lead;
            let fits = x.e1 + flo.e1 >= -w
                && x.e1 + fhi.e1 <= w
                && x.e2 + flo.e2 >= -w
                && x.e2 + fhi.e2 <= w;
            if !fits {
                block.push(e);
            }
        }
    }

    // cofactor support
    let corners = [(-w, -w), (-w, w), (w, -w), (w, w)];
    let spread: Vec<ExponentVec> = points
        .iter()
        .flat_map(|&a| corners.iter().map(move |&c| a + ExponentVec::from(c)))
        .collect();
    let hull = convex_hull(&spread)?;
    let fverts = convex_hull(&f.support())?.vertices().to_vec();
    let (hlo, hhi) = hull.bounding_box();
    let mut cofactor = Vec::new();
    for e1 in (hlo.e1 - flo.e1)..=(hhi.e1 - fhi.e1) {
        for e2 in (hlo.e2 - flo.e2)..=(hhi.e2 - fhi.e2) {
            let x = ExponentVec::new(e1, e2);
            if fverts.iter().all(|&v| hull.contains(x + v)) {
                cofactor.push(x);
            }
        }
    }

    let r = points.len();
    let nb = block.len();
    let nm = r * nb;
    let ncols = nm + cofactor.len();

    // one equation per monomial, indexed on first sight
    let mut rows: BTreeMap<ExponentVec, Vec<u32>> = BTreeMap::new();
    let mut entry = |z: ExponentVec, col: usize, val: u32| {
        let row = rows.entry(z).or_insert_with(|| vec![0; ncols]);
        row[col] = field.add(row[col], val);
    };
    for (i, &a) in points.iter().enumerate() {
        for (j, &e) in block.iter().enumerate() {
            entry(a + e, i * nb + j, 1);
        }
    }
    for (j, &x) in cofactor.iter().enumerate() {
        for (y, c) in f.terms() {
            entry(x + y, nm + j, field.neg(c));
        }
    }
    let matrix = Matrix::from_rows(field, ncols, rows.into_values().collect());

    // q is determined by the m-part, so the projection is injective on the kernel
    let projected: Vec<Vec<u32>> = matrix
        .kernel()
        .into_iter()
        .map(|mut v| {
            v.truncate(nm);
            v
        })
        .collect();
    if projected.is_empty() {
        return Ok(None);
    }
    let mut basis = Matrix::from_rows(field, nm, projected);
    basis.rref();
    let Some(v) = lex_min_nonzero_blocks(field.p(), basis.rows(), r, nb, opts.node_budget)? else {
        return Ok(None);
    };

    let mut coeffs: Vec<LaurentPoly> = (0..r)
        .map(|i| {
            LaurentPoly::from_terms(
                field,
                block
                    .iter()
                    .enumerate()
                    .map(|(j, &e)| (e, v[i * nb + j] as i64)),
            )
        })
        .collect();
    let (low, c) = coeffs[0].lex_min().expect("nonzero block");
    let inv = field.inv(c);
    for m in coeffs.iter_mut() {
        *m = m.shift(-low).scale(inv);
    }

    let relation = combine(&coeffs, points);
    if exact_divides(f, &relation).is_none() || coeffs.iter().any(|m| exact_divides(f, m).is_some())
    {
        return Err(Error::InvalidWitness);
    }
    Ok(Some(coeffs))
}

/// Lexicographically smallest vector in the row space of an RREF basis whose
/// `r` consecutive blocks of width `nb` are all nonzero.
///
/// For an RREF basis ordered by pivot column, the coordinate at the `k`-th
/// pivot is the `k`-th combination coefficient and earlier coordinates only
/// depend on earlier coefficients, so lexicographic order on vectors equals
/// lexicographic order on combination coefficients. A depth-first search over
/// coefficients in increasing order therefore meets the minimum first.
fn lex_min_nonzero_blocks(
    p: u32,
    rows: &[Vec<u32>],
    r: usize,
    nb: usize,
    budget: u64,
) -> Result<Option<Vec<u32>>> {
    let d = rows.len();
    let n = r * nb;
    // live[k][i]: some row at index >= k is nonzero in block i
    let mut live = vec![vec![false; r]; d + 1];
    for k in (0..d).rev() {
        for i in 0..r {
            live[k][i] = live[k + 1][i] || rows[k][i * nb..(i + 1) * nb].iter().any(|&x| x != 0);
        }
    }

    struct Search<'a> {
        p: u32,
        rows: &'a [Vec<u32>],
        live: Vec<Vec<bool>>,
        r: usize,
        nb: usize,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn block_nonzero(&self, v: &[u32], i: usize) -> bool {
            v[i * self.nb..(i + 1) * self.nb].iter().any(|&x| x != 0)
        }

        fn go(&mut self, k: usize, acc: &mut Vec<u32>) -> Result<bool> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudget(format!(
                    "more than {} kernel combinations visited",
                    self.budget
                )));
            }
            if (0..self.r).any(|i| !self.live[k][i] && !self.block_nonzero(acc, i)) {
                return Ok(false);
            }
            if k == self.rows.len() {
                return Ok(true);
            }
            let row = &self.rows[k];
            for c in 0..self.p {
                if c > 0 {
                    for (x, &y) in acc.iter_mut().zip(row) {
                        *x = (*x + y) % self.p;
                    }
                }
                if self.go(k + 1, acc)? {
                    return Ok(true);
                }
            }
            // c = p - 1 was added last; one more step returns to the start
            for (x, &y) in acc.iter_mut().zip(row) {
                *x = (*x + y) % self.p;
            }
            Ok(false)
        }
    }

    let mut search = Search {
        p,
        rows,
        live,
        r,
        nb,
        nodes: 0,
        budget,
    };
    let mut acc = vec![0; n];
    Ok(if search.go(0, &mut acc)? { Some(acc) } else { None })
}
