use std::fmt;

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::vector::Vector;
use crate::error::{Error, Result};

/// A dense rectangular matrix of exact rationals, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: Vec<Vector>,
    ncols: usize,
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub rank: usize,
    pub echelon: Matrix,
    pub pivot_columns: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: Vec<Vector>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vector::dim);
        if let Some(bad) = rows.iter().find(|r| r.dim() != ncols) {
            return Err(Error::Dimension {
                expected: ncols,
                found: bad.dim(),
            });
        }
        Ok(Matrix { rows, ncols })
    }

    /// An empty matrix with a fixed column count.
    pub fn with_columns(ncols: usize) -> Self {
        Matrix { rows: Vec::new(), ncols }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| Vector::from_ints(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: (0..n).map(|i| Vector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            rows: vec![Vector::zeros(ncols); nrows],
            ncols,
        }
    }

    /// The orthogonal reflection `x -> x - 2 (x, alpha) / (alpha, alpha) alpha`.
    pub fn reflection(alpha: &Vector) -> Result<Self> {
        let norm = alpha.dot(alpha);
        if norm.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let factor = Rational::from_integer(2) / norm;
        let n = alpha.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let delta = if i == j { Rational::one() } else { Rational::zero() };
                        delta - &factor * &(&alpha[i] * &alpha[j])
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix { rows, ncols: n })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Vector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn push_row(&mut self, row: Vector) -> Result<()> {
        if row.dim() != self.ncols {
            return Err(Error::Dimension {
                expected: self.ncols,
                found: row.dim(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Matrix {
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.ncols, v.dim(), "matrix-vector dimension mismatch");
        self.rows.iter().map(|r| r.dot(v)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.nrows(), "matrix product dimension mismatch");
        let t = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| t.rows.iter().map(|c| r.dot(c)).collect())
            .collect();
        Matrix {
            rows,
            ncols: other.ncols,
        }
    }

    /// `M^T M = I`.
    pub fn is_orthogonal(&self) -> bool {
        self.nrows() == self.ncols && self.transpose().mul(self) == Matrix::identity(self.ncols)
    }

    /// Exact Gauss-Jordan elimination. Pivots are taken left to right, the
    /// first nonzero entry in each column, so the result is deterministic.
    pub fn row_reduce(&self) -> RowEchelon {
        let mut rows: Vec<Vec<Rational>> =
            self.rows.iter().map(|r| r.coords().to_vec()).collect();
        let nrows = rows.len();
        let mut pivot_columns = Vec::new();
        let mut r = 0;
        for col in 0..self.ncols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][col].recip();
            for x in rows[r].iter_mut().skip(col) {
                *x = &*x * &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivot_columns.push(col);
            r += 1;
        }
        RowEchelon {
            rank: r,
            echelon: Matrix {
                rows: rows.into_iter().map(Vector::new).collect(),
                ncols: self.ncols,
            },
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.nrows();
        if n != self.ncols {
            return None;
        }
        let augmented = Matrix {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut c = r.coords().to_vec();
                    c.extend(Vector::unit(n, i).into_coords());
                    Vector::new(c)
                })
                .collect(),
            ncols: 2 * n,
        };
        let red = augmented.row_reduce();
        if red.pivot_columns.iter().copied().take(n).ne(0..n) {
            return None;
        }
        Some(Matrix {
            rows: red
                .echelon
                .rows
                .into_iter()
                .map(|r| Vector::new(r.into_coords().split_off(n)))
                .collect(),
            ncols: n,
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn identity_has_full_rank() {
        let red = Matrix::identity(3).row_reduce();
        assert_eq!(red.rank, 3);
        assert_eq!(red.pivot_columns, vec![0, 1, 2]);
        assert_eq!(red.echelon, Matrix::identity(3));
    }

    #[test]
    fn shift_matrix_is_invertible() {
        // rows (1, 1) and (s/(n+1), -r/(n+1)) for 1 <= r <= n
        for n in 1..=8i64 {
            for r in 1..=n {
                let s = n + 1 - r;
                let m = Matrix::new(vec![
                    Vector::from_ints(&[1, 1]),
                    Vector::new(vec![rat(s, n + 1), rat(-r, n + 1)]),
                ])
                .unwrap();
                assert_eq!(m.rank(), 2, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = Matrix::new(vec![Vector::zeros(2), Vector::zeros(3)]).unwrap_err();
        assert!(matches!(err, Error::Dimension { .. }));
    }

    #[test]
    fn reflection_is_orthogonal_involution() {
        let alpha = Vector::scaled(2, &[-1, -1, -1, -1, -1, -1, -1, -1]);
        let s = Matrix::reflection(&alpha).unwrap();
        assert!(s.is_orthogonal());
        assert_eq!(s.mul(&s), Matrix::identity(8));
        assert_eq!(s.apply(&alpha), -&alpha);
        assert!(matches!(Matrix::reflection(&Vector::zeros(3)), Err(Error::ZeroRoot)));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        let singular = Matrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }
}
