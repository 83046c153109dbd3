//! Seeded generators for benchmark point sequences and weight matrices.

use crate::alpha::AlphaMatrix;
use crate::disk::{mobius, DiskPoint, PointSequence};
use crate::linalg::CMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// λ_j = 1 − 2⁻ʲ for j = 1..n: the standard exponentially thinning
/// interpolating sequence on the radius.
pub fn radial(n: usize) -> PointSequence {
    (1..=n)
        .map(|j| DiskPoint::real(1.0 - 0.5f64.powi(j as i32)))
        .collect()
}

/// `pairs` anchors spread on the circle of radius `anchor_radius`, each with
/// a companion at pseudo-hyperbolic distance exactly `rho` (placed via a
/// Möbius shift of a real offset).
pub fn perturbed_pairs(pairs: usize, anchor_radius: f64, rho: f64) -> PointSequence {
    assert!((0.0..1.0).contains(&anchor_radius) && (0.0..1.0).contains(&rho));
    let mut out = Vec::with_capacity(2 * pairs);
    for k in 0..pairs {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / pairs.max(1) as f64;
        let anchor = DiskPoint::new(Complex64::from_polar(anchor_radius, theta)).unwrap();
        let companion =
            DiskPoint::new(mobius(anchor, DiskPoint::real(-rho), false)).unwrap();
        out.push(anchor);
        out.push(companion);
    }
    out
}

/// `clusters` cluster centers on a circle, each expanded into `size` points
/// inside the pseudo-hyperbolic ball of radius `spread` around the center.
pub fn clustered(
    clusters: usize,
    size: usize,
    center_radius: f64,
    spread: f64,
    seed: u64,
) -> PointSequence {
    assert!((0.0..1.0).contains(&center_radius) && (0.0..1.0).contains(&spread));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(clusters * size);
    for k in 0..clusters {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / clusters.max(1) as f64;
        let center = DiskPoint::new(Complex64::from_polar(center_radius, theta)).unwrap();
        for _ in 0..size {
            let r = spread * rng.gen::<f64>().sqrt();
            let phi = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
            let local = DiskPoint::new(Complex64::from_polar(r, phi)).unwrap();
            out.push(DiskPoint::new(mobius(center, local, false)).unwrap());
        }
    }
    out
}

/// `n` points drawn with radii 1 − 2^(−u·depth) for uniform u, spread over
/// uniform angles. Thinning in the radius keeps the associated measure
/// Carleson with high probability.
pub fn random_carleson(n: usize, depth: f64, seed: u64) -> PointSequence {
    assert!(depth > 0.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = 1.0 - 0.5f64.powf(rng.gen::<f64>() * depth);
            let theta = 2.0 * std::f64::consts::PI * rng.gen::<f64>();
            DiskPoint::new(Complex64::from_polar(r, theta)).unwrap()
        })
        .collect()
}

/// A seeded random m×j weight matrix with unit-norm columns.
pub fn random_alpha(m: usize, j: usize, seed: u64) -> AlphaMatrix {
    assert!(m >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = CMatrix::from_fn(m, j, |_, _| {
        Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
    });
    for mut col in entries.column_iter_mut() {
        let norm: f64 = col.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        for v in col.iter_mut() {
            *v /= Complex64::from(norm);
        }
    }
    AlphaMatrix::new(entries).expect("columns normalized by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::rho;

    #[test]
    fn radial_matches_formula() {
        let pts = radial(4);
        assert_eq!(pts.len(), 4);
        assert!((pts[2].value().re - 0.875).abs() < 1e-15);
        assert_eq!(pts[2].value().im, 0.0);
    }

    #[test]
    fn pairs_have_exact_distance() {
        let pts = perturbed_pairs(3, 0.6, 0.05);
        assert_eq!(pts.len(), 6);
        for k in 0..3 {
            let d = rho(pts[2 * k], pts[2 * k + 1]);
            assert!((d - 0.05).abs() < 1e-12, "pair {k}: {d}");
        }
    }

    #[test]
    fn clusters_stay_within_spread() {
        let pts = clustered(3, 4, 0.7, 0.1, 11);
        assert_eq!(pts.len(), 12);
        for (k, chunk) in pts.chunks(4).enumerate() {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / 3.0;
            let center = DiskPoint::new(Complex64::from_polar(0.7, theta)).unwrap();
            for &z in chunk {
                assert!(rho(center, z) <= 0.1 + 1e-12);
            }
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_carleson(20, 10.0, 7);
        let b = random_carleson(20, 10.0, 7);
        assert_eq!(
            a.iter().map(|p| p.value()).collect::<Vec<_>>(),
            b.iter().map(|p| p.value()).collect::<Vec<_>>()
        );
        let x = clustered(2, 3, 0.5, 0.2, 9);
        let y = clustered(2, 3, 0.5, 0.2, 9);
        assert_eq!(
            x.iter().map(|p| p.value()).collect::<Vec<_>>(),
            y.iter().map(|p| p.value()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn random_alpha_columns_normalized() {
        let a = random_alpha(3, 5, 42);
        assert_eq!(a.m(), 3);
        assert_eq!(a.columns(), 5);
    }
}
