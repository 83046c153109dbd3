//! Pseudo-hyperbolic geometry of the open unit disk.
//!
//! The metric is ρ(z, w) = |(z − w)/(1 − z̄w)|, invariant under the disk
//! automorphisms φ_λ(z) = (λ − z)/(1 − λ̄z). Balls Δ(z, r) are taken in
//! this metric; as point sets they are Euclidean disks, which is what the
//! plotting code relies on.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Margin keeping points away from the unit circle so that denominators
/// 1 − λ̄z stay bounded away from zero.
pub const BOUNDARY_MARGIN: f64 = 1e-12;

/// A point strictly inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint(Complex64);

impl DiskPoint {
    pub fn new(value: Complex64) -> Result<Self> {
        if value.norm() < 1.0 - BOUNDARY_MARGIN {
            Ok(DiskPoint(value))
        } else {
            Err(Error::OutsideDisk(value, BOUNDARY_MARGIN))
        }
    }

    pub fn from_re_im(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    /// Real point on the diameter; panics if |x| is not below 1.
    /// Convenience for tests and generators.
    pub fn real(x: f64) -> Self {
        Self::from_re_im(x, 0.0).expect("real point outside the disk")
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    /// 1 − |λ|², the weight the point carries in atomic Carleson measures.
    pub fn weight(self) -> f64 {
        1.0 - self.0.norm_sqr()
    }
}

impl From<DiskPoint> for Complex64 {
    fn from(p: DiskPoint) -> Complex64 {
        p.0
    }
}

/// Finite ordered list of disk points; repetitions are allowed.
pub type PointSequence = Vec<DiskPoint>;

/// Pseudo-hyperbolic ball Δ(center, radius).
#[derive(Debug, Clone, Copy)]
pub struct Ball {
    center: DiskPoint,
    radius: f64,
}

impl Ball {
    pub fn new(center: DiskPoint, radius: f64) -> Result<Self> {
        if radius > 0.0 && radius < 1.0 {
            Ok(Ball { center, radius })
        } else {
            Err(Error::BadRadius(radius))
        }
    }

    pub fn center(&self) -> DiskPoint {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn contains(&self, z: DiskPoint) -> bool {
        rho(self.center, z) < self.radius
    }

    /// Euclidean center and radius of the same point set, for rendering.
    pub fn euclidean(&self) -> (Complex64, f64) {
        let c = self.center.value();
        let r = self.radius;
        let denom = 1.0 - r * r * c.norm_sqr();
        (c * (1.0 - r * r) / denom, r * (1.0 - c.norm_sqr()) / denom)
    }
}

/// The pseudo-hyperbolic metric ρ(z, w) = |(z − w)/(1 − z̄w)|.
pub fn rho(z: DiskPoint, w: DiskPoint) -> f64 {
    let (z, w) = (z.value(), w.value());
    ((z - w) / (Complex64::new(1.0, 0.0) - z.conj() * w)).norm()
}

/// Distance from a point to a nonempty set of points.
pub fn rho_to_set(z: DiskPoint, set: &[DiskPoint]) -> f64 {
    set.iter()
        .map(|&w| rho(z, w))
        .fold(f64::INFINITY, f64::min)
}

/// The Möbius automorphism φ_λ(z) = (λ − z)/(1 − λ̄z).
///
/// With `normalized`, returns ϕ_λ = (λ̄/|λ|)·φ_λ, the factor used in
/// Blaschke products; ϕ_0 = φ_0 is the identity z ↦ z.
pub fn mobius(lambda: DiskPoint, z: DiskPoint, normalized: bool) -> Complex64 {
    let l = lambda.value();
    let zv = z.value();
    if l == Complex64::ZERO {
        return zv;
    }
    let phi = (l - zv) / (Complex64::new(1.0, 0.0) - l.conj() * zv);
    if normalized {
        l.conj() / l.norm() * phi
    } else {
        phi
    }
}

/// Whether two pseudo-hyperbolic balls of equal radius intersect.
///
/// Exact for this metric: the balls meet iff ρ(centers) < 2r/(1 + r²),
/// the hyperbolic sum of the radii.
pub fn balls_intersect(a: &Ball, b: &Ball) -> Result<bool> {
    if a.radius != b.radius {
        return Err(Error::UnequalRadii(a.radius, b.radius));
    }
    let r = a.radius;
    Ok(rho(a.center, b.center) < 2.0 * r / (1.0 + r * r))
}
