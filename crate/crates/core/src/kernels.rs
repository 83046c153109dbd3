//! Normalized reproducing kernels k_λ = (1 − |λ|²)^{1/2}·K_λ of the Hardy
//! space, their Gram matrices, Riesz/Bessel constants, minimum-norm
//! interpolation and kernel-difference Bessel constants.
//!
//! All constants are extremal eigenvalues of exactly assembled Hermitian
//! forms; at finite J nothing is truncated.

use crate::disk::{DiskPoint, PointSequence};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_extremal_eigenvalues, CMatrix, CVector};
use num_complex::Complex64;

/// ⟨k_μ, k_λ⟩ = (1 − |λ|²)^{1/2}(1 − |μ|²)^{1/2} / (1 − μ̄λ).
pub fn kernel_inner(lambda: DiskPoint, mu: DiskPoint) -> Complex64 {
    let l = lambda.value();
    let m = mu.value();
    let num = (lambda.weight() * mu.weight()).sqrt();
    num / (Complex64::new(1.0, 0.0) - m.conj() * l)
}

/// ‖k_v − k_w‖² = 2 − 2·Re⟨k_v, k_w⟩.
pub fn kernel_distance_sq(v: DiskPoint, w: DiskPoint) -> f64 {
    2.0 - 2.0 * kernel_inner(v, w).re
}

/// Gram matrix of the kernel family at `points`.
///
/// Entries are G[j][k] = ⟨k_{λ_k}, k_{λ_j}⟩, so that the squared norm of a
/// combination Σ β_j k_{λ_j} is the quadratic form β*Gβ.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    entries: CMatrix,
    source: PointSequence,
}

impl GramMatrix {
    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn source(&self) -> &[DiskPoint] {
        &self.source
    }

    pub fn dim(&self) -> usize {
        self.source.len()
    }

    /// ‖Σ β_j k_{λ_j}‖² = β*Gβ, exact for the finite family.
    pub fn combination_norm_sq(&self, beta: &CVector) -> f64 {
        (beta.adjoint() * &self.entries * beta)[(0, 0)].re
    }
}

pub fn gram(points: &[DiskPoint]) -> GramMatrix {
    let j = points.len();
    let entries = CMatrix::from_fn(j, j, |r, c| kernel_inner(points[r], points[c]));
    GramMatrix {
        entries,
        source: points.to_vec(),
    }
}

fn find_repeat(points: &[DiskPoint]) -> Option<(usize, usize)> {
    for a in 0..points.len() {
        for b in (a + 1)..points.len() {
            if points[a].value() == points[b].value() {
                return Some((a, b));
            }
        }
    }
    None
}

/// Two-sided Riesz constants of the kernel family.
#[derive(Debug, Clone, Copy)]
pub struct RieszBounds {
    /// Lower constant C₀ (min Gram eigenvalue); positive iff Riesz sequence.
    pub c0: f64,
    /// Upper constant C₁ (max Gram eigenvalue).
    pub c1: f64,
    /// Set when the point list has repetitions, which forces C₀ = 0.
    pub degenerate: bool,
}

/// C₀·Σ|c_j|² ≤ ‖Σ c_j k_{λ_j}‖² ≤ C₁·Σ|c_j|² with the extremal Gram
/// eigenvalues. Repeated points are reported as degenerate with C₀ = 0
/// rather than rejected.
pub fn riesz_bounds(points: &[DiskPoint]) -> RieszBounds {
    if points.is_empty() {
        return RieszBounds {
            c0: 1.0,
            c1: 1.0,
            degenerate: false,
        };
    }
    if find_repeat(points).is_some() {
        let (_, c1) = hermitian_extremal_eigenvalues(gram(points).entries());
        return RieszBounds {
            c0: 0.0,
            c1,
            degenerate: true,
        };
    }
    let (c0, c1) = hermitian_extremal_eigenvalues(gram(points).entries());
    RieszBounds {
        c0,
        c1,
        degenerate: false,
    }
}

/// Squared norm of the minimum-norm H² function g with ⟨g, k_{λ_j}⟩ = c_j.
///
/// g lies in the model space spanned by the kernels, g = Σ a_k k_{λ_k} with
/// Ga = c, so ‖g‖² = a*Ga = c*G⁻¹c. Exact at finite J.
pub fn min_norm_interpolant_normsq(points: &[DiskPoint], c: &CVector) -> Result<f64> {
    if c.len() != points.len() {
        return Err(Error::LengthMismatch {
            got: c.len(),
            expected: points.len(),
        });
    }
    if let Some((a, b)) = find_repeat(points) {
        return Err(Error::RepeatedPoints(a, b));
    }
    if points.is_empty() {
        return Ok(0.0);
    }
    let g = gram(points);
    let chol = g
        .entries
        .clone()
        .cholesky()
        .ok_or(Error::RepeatedPoints(0, 0))?;
    let a = chol.solve(c);
    Ok((c.adjoint() * a)[(0, 0)].re.max(0.0))
}

/// Exact Bessel constant of the difference family {k_{λ_j} − k_{λ'_j}}:
/// the largest eigenvalue of its Gram matrix, assembled by expanding each
/// entry into four kernel inner products.
pub fn diff_bessel(points: &[DiskPoint], perturbed: &[DiskPoint]) -> Result<f64> {
    if points.len() != perturbed.len() {
        return Err(Error::LengthMismatch {
            got: perturbed.len(),
            expected: points.len(),
        });
    }
    let j = points.len();
    if j == 0 {
        return Ok(0.0);
    }
    let g = CMatrix::from_fn(j, j, |r, c| {
        kernel_inner(points[r], points[c]) - kernel_inner(points[r], perturbed[c])
            - kernel_inner(perturbed[r], points[c])
            + kernel_inner(perturbed[r], perturbed[c])
    });
    let (_, max) = hermitian_extremal_eigenvalues(&g);
    Ok(max.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::{mobius, DiskPoint};

    #[test]
    fn kernel_inner_examples() {
        let z = DiskPoint::real(0.5);
        assert!((kernel_inner(z, z) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let v = kernel_inner(DiskPoint::real(0.0), z);
        assert!((v.re - 0.75f64.sqrt()).abs() < 1e-15);
        assert!(v.im == 0.0);
        let w = kernel_inner(z, DiskPoint::real(-0.5));
        assert!((w.re - 0.6).abs() < 1e-15);
    }

    #[test]
    fn gram_examples() {
        let g = gram(&[DiskPoint::real(0.3)]);
        assert!((g.entries()[(0, 0)].re - 1.0).abs() < 1e-15);

        let p = DiskPoint::real(0.4);
        let g = gram(&[p, p]);
        let (min, max) = hermitian_extremal_eigenvalues(g.entries());
        assert!(min.abs() < 1e-12 && (max - 2.0).abs() < 1e-12);

        let g = gram(&[DiskPoint::real(0.0), DiskPoint::real(0.5)]);
        assert!((g.entries()[(0, 1)].re - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn riesz_two_points() {
        let rb = riesz_bounds(&[DiskPoint::real(0.0), DiskPoint::real(0.5)]);
        let off = 0.75f64.sqrt();
        assert!((rb.c0 - (1.0 - off)).abs() < 1e-12);
        assert!((rb.c1 - (1.0 + off)).abs() < 1e-12);
        assert!(!rb.degenerate);
    }

    #[test]
    fn riesz_single_and_degenerate() {
        let rb = riesz_bounds(&[DiskPoint::real(0.2)]);
        assert!((rb.c0 - 1.0).abs() < 1e-14 && (rb.c1 - 1.0).abs() < 1e-14);
        let p = DiskPoint::real(0.2);
        let rb = riesz_bounds(&[p, p]);
        assert!(rb.degenerate && rb.c0 == 0.0);
    }

    #[test]
    fn riesz_radial_sixteen_positive() {
        let pts: Vec<_> = (1..=16)
            .map(|j| DiskPoint::real(1.0 - 0.5f64.powi(j)))
            .collect();
        let rb = riesz_bounds(&pts);
        assert!(rb.c0 > 0.0);
        // regression baseline for the radial model sequence
        assert!((rb.c0 - 4.145985595052906e-5).abs() < 1e-12, "c0 = {}", rb.c0);
    }

    #[test]
    fn min_norm_trivial_cases() {
        let p = [DiskPoint::real(0.3)];
        let c = CVector::from_element(1, Complex64::new(1.0, 0.0));
        assert!((min_norm_interpolant_normsq(&p, &c).unwrap() - 1.0).abs() < 1e-12);

        let pts = [DiskPoint::real(0.3), DiskPoint::real(-0.4)];
        let c = CVector::zeros(2);
        assert!(min_norm_interpolant_normsq(&pts, &c).unwrap().abs() < 1e-15);
    }

    #[test]
    fn min_norm_within_interpolation_bound() {
        // points {0.5, -0.5}: delta = 0.8, bound (2/δ⁴)(1 − 2 ln δ)
        let pts = [DiskPoint::real(0.5), DiskPoint::real(-0.5)];
        let c = CVector::from_vec(vec![Complex64::new(1.0, 0.0), Complex64::ZERO]);
        let v = min_norm_interpolant_normsq(&pts, &c).unwrap();
        let delta: f64 = 0.8;
        let bound = 2.0 / delta.powi(4) * (1.0 - 2.0 * delta.ln());
        assert!(v > 0.0 && v <= bound, "v = {v}, bound = {bound}");
    }

    #[test]
    fn min_norm_rejects_bad_input() {
        let p = DiskPoint::real(0.3);
        let c = CVector::zeros(2);
        assert!(min_norm_interpolant_normsq(&[p, p], &c).is_err());
        assert!(min_norm_interpolant_normsq(&[p], &c).is_err());
    }

    #[test]
    fn diff_bessel_zero_and_single() {
        let pts = [DiskPoint::real(0.3), DiskPoint::real(-0.2)];
        assert!(diff_bessel(&pts, &pts).unwrap() < 1e-14);

        // single pair (0, 0.1): 1x1 Gram, 2 - 2 sqrt(1 - 0.01)
        let v = diff_bessel(&[DiskPoint::real(0.0)], &[DiskPoint::real(0.1)]).unwrap();
        let expect = 2.0 - 2.0 * 0.99f64.sqrt();
        assert!((v - expect).abs() < 1e-14);
    }

    #[test]
    fn diff_bessel_radial_scaling() {
        let pts: Vec<_> = (1..=16)
            .map(|j| DiskPoint::real(1.0 - 0.5f64.powi(j)))
            .collect();
        let eta = 0.1;
        let pert: Vec<_> = pts
            .iter()
            .map(|&l| DiskPoint::new(mobius(l, DiskPoint::real(-eta), false)).unwrap())
            .collect();
        let v = diff_bessel(&pts, &pert).unwrap();
        // crude bound 2N eta^2 from the kernel distance estimate
        assert!(v <= 2.0 * 16.0 * eta * eta);
        assert!(v > 0.0);
    }

    #[test]
    fn diff_bessel_length_mismatch() {
        assert!(diff_bessel(&[DiskPoint::real(0.1)], &[]).is_err());
    }
}
