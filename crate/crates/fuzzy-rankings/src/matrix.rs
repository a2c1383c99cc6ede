//! Dense row-major square matrices of `f64`.
//!
//! Preference data in this crate is tiny (a handful of objects), so the type
//! keeps a flat `Vec<f64>` and implements only the arithmetic the ranking
//! operations actually use.

/// Shape defect found while assembling a matrix from rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeDefect {
    /// 1-based index of the offending row, or 0 when the row count itself is wrong.
    pub row: usize,
    pub len: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, data: vec![0.0; n * n] }
    }

    /// Builds an n×n matrix from `rows`; every row must have length `rows.len()`.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, ShapeDefect> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(ShapeDefect { row: i + 1, len: row.len(), expected: n });
            }
            data.extend_from_slice(row);
        }
        Ok(SquareMatrix { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.n];
        for row in self.rows() {
            for (s, v) in sums.iter_mut().zip(row) {
                *s += v;
            }
        }
        sums
    }

    /// Entrywise absolute difference. Panics if sizes differ; callers check first.
    pub fn abs_diff(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| (a - b).abs()).collect();
        SquareMatrix { n: self.n, data }
    }

    pub fn max_abs_diff(&self, other: &SquareMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_entry(&self) -> f64 {
        self.data.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Ordinary matrix product.
    pub fn matmul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Row-wise prefix sums: out[i][j] = sum of self[i][0..=j].
    pub fn cumulative_rows(&self) -> SquareMatrix {
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += self.get(i, j);
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Accumulates `weight * other` into `self`, entry by entry.
    pub fn add_scaled(&mut self, other: &SquareMatrix, weight: f64) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += weight * b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_rows_rejects_ragged() {
        let err = SquareMatrix::from_rows(&[vec![1.0, 0.0], vec![1.0]]).unwrap_err();
        assert_eq!(err, ShapeDefect { row: 2, len: 1, expected: 2 });
    }

    #[test]
    fn cumulative_rows_prefix_sums() {
        let m = SquareMatrix::from_rows(&[vec![0.3, 0.5, 0.2], vec![0.1, 0.1, 0.8], vec![0.6, 0.4, 0.0]])
            .unwrap();
        let c = m.cumulative_rows();
        assert_eq!(c.row(0), &[0.3, 0.8, 1.0]);
        assert_eq!(c.get(1, 2), 1.0);
    }

    #[test]
    fn matmul_identity() {
        let m = SquareMatrix::from_rows(&[vec![0.7, 0.3], vec![0.3, 0.7]]).unwrap();
        let mut id = SquareMatrix::zeros(2);
        id.set(0, 0, 1.0);
        id.set(1, 1, 1.0);
        assert_eq!(m.matmul(&id), m);
    }
}
