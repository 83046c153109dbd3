//! Thin wrappers over nalgebra for the Hermitian eigenproblems and singular
//! values the library reduces everything to.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Relative residual accepted for Hermitian eigen solves.
const EIGEN_RESIDUAL_TOL: f64 = 1e-9;

/// Extremal eigenvalues (min, max) of a Hermitian matrix.
///
/// Panics if the solver's residual ‖Gv − θv‖ exceeds 1e-9·‖G‖ for an
/// extremal pair, which would invalidate every constant derived from it.
pub fn hermitian_extremal_eigenvalues(g: &CMatrix) -> (f64, f64) {
    assert!(!g.is_empty(), "eigenproblem of an empty matrix");
    let eig = g.clone().symmetric_eigen();
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut imin = 0;
    let mut imax = 0;
    for (i, &v) in eig.eigenvalues.iter().enumerate() {
        if v < min {
            min = v;
            imin = i;
        }
        if v > max {
            max = v;
            imax = i;
        }
    }
    let scale = g.norm().max(1e-300);
    for &i in &[imin, imax] {
        let v = eig.eigenvectors.column(i);
        let resid = (g * v - v * Complex64::from(eig.eigenvalues[i])).norm();
        assert!(
            resid <= EIGEN_RESIDUAL_TOL * scale,
            "eigen residual {resid:e} exceeds tolerance"
        );
    }
    (min, max)
}

/// Smallest singular value of a (possibly rectangular) complex matrix.
pub fn sigma_min(a: &CMatrix) -> f64 {
    let svd = a.clone().svd(false, false);
    svd.singular_values
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Hermitian defect max |G − G*| entrywise, used by invariant checks.
pub fn hermitian_defect(g: &CMatrix) -> f64 {
    (g - g.adjoint()).camax()
}
