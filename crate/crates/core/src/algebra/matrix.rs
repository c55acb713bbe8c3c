//! Dense matrices over GF(p) with Gaussian elimination.

use super::field::Gf;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    k: Gf,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(k: Gf, rows: usize, cols: usize) -> Matrix {
        Matrix {
            k,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(k: Gf, n: usize) -> Matrix {
        let mut m = Matrix::zeros(k, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors of equal length `cols`.
    pub fn from_rows(k: Gf, cols: usize, rows: Vec<Vec<u64>>) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&v| k.reduce(v)));
        }
        Matrix {
            k,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(k: Gf, rows: usize, cols: &[Vec<u64>]) -> Matrix {
        let mut m = Matrix::zeros(k, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, k.reduce(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Gf {
        self.k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.k, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let k = self.k;
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| k.add(acc, k.mul(self.get(i, j), v[j]))))
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss–Jordan elimination; the pivot is the first nonzero entry at or
    /// below the current row.
    pub fn echelon(&self) -> Echelon {
        let k = self.k;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = k.inv(m.get(r, c));
            for j in c..m.cols {
                let v = k.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = k.sub(m.get(i, j), k.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Returns `(rank, kernel basis)`. Each free column contributes one basis
    /// vector with a 1 in that column.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<u64>>) {
        let k = self.k;
        let Echelon { reduced, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let kernel = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = k.neg(reduced.get(row, free));
                }
                v
            })
            .collect();
        (pivots.len(), kernel)
    }

    pub fn kernel(&self) -> Vec<Vec<u64>> {
        self.rank_and_kernel().1
    }

    /// Solves `self * x = b`, returning one solution (free variables zero).
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.k, self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, self.k.reduce(bi));
        }
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = reduced.get(row, self.cols);
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k() -> Gf {
        Gf::new(11).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let (r, ker) = Matrix::identity(k(), 3).rank_and_kernel();
        assert_eq!((r, ker.len()), (3, 0));
        let (r, ker) = Matrix::zeros(k(), 2, 5).rank_and_kernel();
        assert_eq!((r, ker.len()), (0, 5));
    }

    #[test]
    fn empty_shapes() {
        let (r, ker) = Matrix::zeros(k(), 0, 4).rank_and_kernel();
        assert_eq!((r, ker.len()), (0, 4));
        let (r, ker) = Matrix::zeros(k(), 3, 0).rank_and_kernel();
        assert_eq!((r, ker.len()), (0, 0));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Matrix::from_rows(k(), 2, vec![vec![1, 1], vec![2, 2]]);
        assert!(m.solve(&[1, 3]).is_none());
        let x = m.solve(&[1, 2]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![1, 2]);
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..7, 0usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(0u64..5, c), r)
                .prop_map(move |rows| Matrix::from_rows(Gf::new(5).unwrap(), c, rows))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose(m in arb_matrix()) {
            let (r, ker) = m.rank_and_kernel();
            prop_assert_eq!(r + ker.len(), m.cols());
            prop_assert!(r <= m.rows().min(m.cols()));
            prop_assert_eq!(r, m.transpose().rank());
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(|&e| e == 0));
            }
            prop_assert_eq!(Matrix::from_columns(m.field(), m.cols(), &ker).rank(), ker.len());
        }
    }
}
