//! The m×J weight matrix with unit-norm columns that couples the seed
//! vectors to the kernel family.

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use num_complex::Complex64;

const COLUMN_NORM_TOL: f64 = 1e-10;

/// Column-normalized weights α_j^i: row i = seed vector index (1..m),
/// column j = eigenvalue index. Every column satisfies Σ_i |α_j^i|² = 1.
#[derive(Debug, Clone)]
pub struct AlphaMatrix {
    entries: CMatrix,
}

impl AlphaMatrix {
    pub fn new(entries: CMatrix) -> Result<Self> {
        for col in 0..entries.ncols() {
            let normsq: f64 = entries.column(col).iter().map(|v| v.norm_sqr()).sum();
            if (normsq - 1.0).abs() > COLUMN_NORM_TOL {
                return Err(Error::ColumnNotNormalized { col, normsq });
            }
        }
        Ok(AlphaMatrix { entries })
    }

    /// The all-ones matrix for m = 1 (single orbit, α ≡ 1).
    pub fn ones(j: usize) -> Self {
        AlphaMatrix {
            entries: CMatrix::from_element(1, j, Complex64::new(1.0, 0.0)),
        }
    }

    pub fn m(&self) -> usize {
        self.entries.nrows()
    }

    pub fn columns(&self) -> usize {
        self.entries.ncols()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    /// The m×p submatrix selecting the given columns.
    pub fn column_submatrix(&self, group: &[usize]) -> CMatrix {
        CMatrix::from_fn(self.m(), group.len(), |r, c| self.entries[(r, group[c])])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unnormalized_column() {
        let e = CMatrix::from_row_slice(
            2,
            1,
            &[Complex64::new(0.5, 0.0), Complex64::new(0.5, 0.0)],
        );
        assert!(AlphaMatrix::new(e).is_err());
    }

    #[test]
    fn accepts_unit_columns() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let e = CMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(s, 0.0),
                Complex64::ZERO,
                Complex64::new(0.0, s),
            ],
        );
        let a = AlphaMatrix::new(e).unwrap();
        assert_eq!(a.m(), 2);
        assert_eq!(a.columns(), 2);
    }
}
