//! Dense linear algebra over `F_p`.

use crate::field::Field;

/// Row-major dense matrix over `F_p`.
#[derive(Debug, Clone)]
pub(crate) struct Matrix {
    field: Field,
    cols: usize,
    rows: Vec<Vec<u32>>,
}

impl Matrix {
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { field, cols, rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Reduced row echelon form in place. Returns the pivot columns; the
    /// nonzero rows come first, in increasing pivot order.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(pr) = (r..self.rows.len()).find(|&i| self.rows[i][c] != 0) else {
                continue;
            };
            self.rows.swap(r, pr);
            let inv = f.inv(self.rows[r][c]);
            for x in self.rows[r][c..].iter_mut() {
                *x = f.mul(*x, inv);
            }
            let (before, rest) = self.rows.split_at_mut(r);
            let (pivot_row, after) = rest.split_first_mut().unwrap();
            for row in before.iter_mut().chain(after.iter_mut()) {
                let factor = row[c];
                if factor == 0 {
                    continue;
                }
                for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if y != 0 {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows.len() {
                break;
            }
        }
        self.rows.truncate(r);
        pivots
    }

    /// Basis of the right kernel `{x : A x = 0}`, one vector per free column,
    /// in increasing free-column order.
    pub fn kernel(mut self) -> Vec<Vec<u32>> {
        let f = self.field;
        let pivots = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (row, &pc) in self.rows.iter().zip(&pivots) {
                    v[pc] = f.neg(row[free]);
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = Field::new(5).unwrap();
        let rows = vec![vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![3, 1, 4, 2]];
        let m = Matrix::from_rows(f, 4, rows.clone());
        let ker = m.kernel();
        assert!(!ker.is_empty());
        for v in &ker {
            for row in &rows {
                let s = row
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn rref_is_reduced() {
        let f = Field::new(3).unwrap();
        let mut m = Matrix::from_rows(f, 3, vec![vec![0, 2, 1], vec![1, 1, 0], vec![1, 0, 1]]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.rows(), &[vec![1, 0, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let f = Field::new(2).unwrap();
        let m = Matrix::from_rows(f, 2, vec![vec![1, 0], vec![1, 1]]);
        assert!(m.kernel().is_empty());
    }
}
