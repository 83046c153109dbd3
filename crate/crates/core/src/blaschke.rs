//! Finite Blaschke products B(z) = ∏ ϕ_{λᵢ}(z), factor omission, and the
//! uniform separation constant δ(B) = inf_j |B_j(λ_j)|.

use crate::disk::{mobius, rho_to_set, DiskPoint, PointSequence};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// A finite Blaschke product given by its zeros. An empty zero list is the
/// constant function 1.
#[derive(Debug, Clone, Default)]
pub struct BlaschkeProduct {
    zeros: PointSequence,
}

impl BlaschkeProduct {
    pub fn new(zeros: PointSequence) -> Self {
        BlaschkeProduct { zeros }
    }

    pub fn zeros(&self) -> &[DiskPoint] {
        &self.zeros
    }

    /// Evaluate the product at `z`, skipping the factors listed in `omit`.
    ///
    /// `omit = [j]` realizes B_j = ∏_{i≠j} ϕ_{λᵢ}.
    pub fn evaluate(&self, z: DiskPoint, omit: &[usize]) -> Result<Complex64> {
        for &j in omit {
            if j >= self.zeros.len() {
                return Err(Error::OmitOutOfRange {
                    index: j,
                    len: self.zeros.len(),
                });
            }
        }
        let mut out = Complex64::new(1.0, 0.0);
        for (i, &zero) in self.zeros.iter().enumerate() {
            if !omit.contains(&i) {
                out *= mobius(zero, z, true);
            }
        }
        Ok(out)
    }

    /// The uniform separation constant δ(B) = min_j |B_j(λ_j)|.
    ///
    /// A single zero gives 1 (empty product over i ≠ j); a repeated zero
    /// gives 0. The empty product also reports 1.
    pub fn delta(&self) -> f64 {
        let mut d: f64 = 1.0;
        for (j, &zero) in self.zeros.iter().enumerate() {
            let v = self.evaluate(zero, &[j]).expect("index in range");
            d = d.min(v.norm());
        }
        d
    }

    /// Sampled estimate of inf{|B(z)| : ρ(z, zeros) ≥ γ} over a bounded
    /// region around the zeros.
    ///
    /// By the minimum modulus principle the infimum over the region lies on
    /// its boundary, so the grid samples (a) `samples` equispaced points on
    /// the pseudo-hyperbolic circle of radius γ around each zero, and (b) a
    /// deterministic polar grid over the disk hull of the zeros expanded by
    /// a γ margin, keeping only points at distance ≥ γ from the zero set.
    /// The returned minimum is an upper estimate of the true infimum.
    pub fn lower_bound_off_zeros(&self, gamma: f64, samples: usize) -> Result<f64> {
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(Error::BadGamma(gamma));
        }
        if samples == 0 {
            return Err(Error::ZeroSamples);
        }
        if self.zeros.is_empty() {
            return Ok(1.0);
        }

        let mut min_mod = f64::INFINITY;
        let mut visit = |z: DiskPoint| {
            let v = self.evaluate(z, &[]).unwrap().norm();
            min_mod = min_mod.min(v);
        };

        // collar circles at distance exactly gamma around each zero
        for &zero in &self.zeros {
            let (ec, er) = crate::disk::Ball::new(zero, gamma)?.euclidean();
            for k in 0..samples {
                let th = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
                let z = ec + er * Complex64::new(th.cos(), th.sin());
                if let Ok(p) = DiskPoint::new(z) {
                    if rho_to_set(p, &self.zeros) >= gamma - 1e-12 {
                        visit(p);
                    }
                }
            }
        }

        // polar grid over the hull of the zeros plus margin
        let max_mod = self
            .zeros
            .iter()
            .map(|z| z.value().norm())
            .fold(0.0, f64::max);
        let r_out = ((max_mod + gamma) / (1.0 + max_mod * gamma)).min(1.0 - 1e-9);
        let radial = samples.max(8);
        for ir in 0..=radial {
            let r = r_out * ir as f64 / radial as f64;
            for k in 0..samples {
                let th = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
                let p = DiskPoint::new(Complex64::from_polar(r, th)).unwrap();
                if rho_to_set(p, &self.zeros) >= gamma {
                    visit(p);
                }
            }
        }

        Ok(if min_mod.is_finite() { min_mod } else { 1.0 })
    }
}
