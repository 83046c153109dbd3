//! Exact ground truth for multi-orbital systems {Aⁿaⁱ} of a diagonal
//! operator A: the closed-form frame operator in coefficient space, its
//! truncated-orbit approximations with a certified tail bound, and
//! standard-basis diagnostics.

use crate::alpha::AlphaMatrix;
use crate::carleson::weighted_frame_operator;
use crate::disk::PointSequence;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_extremal_eigenvalues, CMatrix, CVector};
use num_complex::Complex64;

/// A diagonal operator (its eigenvalues) together with m seed vectors.
#[derive(Debug, Clone)]
pub struct OrbitSystem {
    pub eigenvalues: PointSequence,
    pub vectors: Vec<CVector>,
}

impl OrbitSystem {
    pub fn new(eigenvalues: PointSequence, vectors: Vec<CVector>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::NoVectors);
        }
        let j = eigenvalues.len();
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != j {
                return Err(Error::VectorLengthMismatch {
                    index,
                    got: v.len(),
                    expected: j,
                });
            }
        }
        Ok(OrbitSystem {
            eigenvalues,
            vectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn m(&self) -> usize {
        self.vectors.len()
    }
}

/// The normalized form a_j^i = d_j·ᾱ_j^i·(1 − |λ_j|²)^{1/2} of a system.
#[derive(Debug, Clone)]
pub struct NormalizedSystem {
    pub eigenvalues: PointSequence,
    pub d: Vec<f64>,
    pub alpha: AlphaMatrix,
    /// C with C⁻¹ ≤ d_j ≤ C.
    pub bound_c: f64,
}

/// Two-sided frame bounds (extremal eigenvalues of the frame operator).
#[derive(Debug, Clone, Copy)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
}

/// Factor a system into the positive profile d and the column-normalized
/// weight matrix α. A coordinate where every seed vanishes is a witness
/// that the system cannot be a frame and is rejected.
pub fn normalize(system: &OrbitSystem) -> Result<NormalizedSystem> {
    let j = system.dim();
    let m = system.m();
    let mut d = Vec::with_capacity(j);
    let mut alpha = CMatrix::zeros(m, j);
    for col in 0..j {
        let colnorm_sq: f64 = system.vectors.iter().map(|v| v[col].norm_sqr()).sum();
        if colnorm_sq == 0.0 {
            return Err(Error::ZeroColumn(col));
        }
        let colnorm = colnorm_sq.sqrt();
        d.push((colnorm_sq / system.eigenvalues[col].weight()).sqrt());
        for (i, v) in system.vectors.iter().enumerate() {
            alpha[(i, col)] = v[col].conj() / colnorm;
        }
    }
    let dmax = d.iter().copied().fold(f64::MIN, f64::max);
    let dmin = d.iter().copied().fold(f64::MAX, f64::min);
    let bound_c = if j == 0 { 1.0 } else { dmax.max(1.0 / dmin) };
    Ok(NormalizedSystem {
        eigenvalues: system.eigenvalues.clone(),
        d,
        alpha: AlphaMatrix::new(alpha)?,
        bound_c,
    })
}

/// Reconstruct the seed vectors from a normalized system.
pub fn reconstruct(ns: &NormalizedSystem) -> OrbitSystem {
    let j = ns.eigenvalues.len();
    let vectors = (0..ns.alpha.m())
        .map(|i| {
            CVector::from_fn(j, |col, _| {
                ns.alpha.entry(i, col).conj()
                    * Complex64::from(ns.d[col] * ns.eigenvalues[col].weight().sqrt())
            })
        })
        .collect();
    OrbitSystem {
        eigenvalues: ns.eigenvalues.clone(),
        vectors,
    }
}

/// Exact frame bounds of the normalized orbit system: the extremal
/// eigenvalues of M = Σ_i Dᵢ*·G·Dᵢ, which by the orbit/kernel identity is
/// the frame operator of {Aⁿãⁱ} in coefficient space.
pub fn exact_frame_bounds(ns: &NormalizedSystem) -> FrameBounds {
    let m = weighted_frame_operator(&ns.eigenvalues, &ns.alpha);
    let (lower, upper) = hermitian_extremal_eigenvalues(&m);
    FrameBounds {
        lower: lower.max(0.0),
        upper,
    }
}

/// Frame bounds of the partial sums over orbit indices n = 0..=N, plus the
/// certified deviation ‖M − M_N‖ ≤ m·J·ρ_max^{2(N+1)}/(1 − ρ_max²).
pub fn truncated_orbit_bounds(ns: &NormalizedSystem, n_terms: usize) -> (FrameBounds, f64) {
    let j = ns.eigenvalues.len();
    let mut m_n = CMatrix::zeros(j, j);
    for i in 0..ns.alpha.m() {
        // normalized seed entries: ã_j = ᾱ_j (1 − |λ_j|²)^{1/2}
        let seed = CVector::from_fn(j, |col, _| {
            ns.alpha.entry(i, col).conj() * Complex64::from(ns.eigenvalues[col].weight().sqrt())
        });
        let mut powed = seed.clone();
        for n in 0..=n_terms {
            if n > 0 {
                for col in 0..j {
                    powed[col] *= ns.eigenvalues[col].value();
                }
            }
            m_n += &powed * powed.adjoint();
        }
    }
    let (lower, upper) = hermitian_extremal_eigenvalues(&m_n);
    let rho_max = ns
        .eigenvalues
        .iter()
        .map(|l| l.value().norm())
        .fold(0.0, f64::max);
    let tail = if rho_max == 0.0 {
        0.0
    } else {
        ns.alpha.m() as f64 * j as f64 * rho_max.powi(2 * (n_terms as i32 + 1))
            / (1.0 - rho_max * rho_max)
    };
    (
        FrameBounds {
            lower: lower.max(0.0),
            upper,
        },
        tail,
    )
}

/// Smallest N whose tail bound drops below `tol`, capped at `max_n`.
pub fn tail_truncation_order(ns: &NormalizedSystem, tol: f64, max_n: usize) -> usize {
    for n in 0..=max_n {
        let j = ns.eigenvalues.len();
        let rho_max = ns
            .eigenvalues
            .iter()
            .map(|l| l.value().norm())
            .fold(0.0, f64::max);
        let tail = if rho_max == 0.0 {
            0.0
        } else {
            ns.alpha.m() as f64 * j as f64 * rho_max.powi(2 * (n as i32 + 1))
                / (1.0 - rho_max * rho_max)
        };
        if tail < tol {
            return n;
        }
    }
    max_n
}

/// Per-coordinate profile of the orbit sums against the standard basis:
/// Σ_n Σ_i |⟨Aⁿaⁱ, e_j⟩|² = (Σ_i |a_j^i|²)/(1 − |λ_j|²), which equals d_j².
#[derive(Debug, Clone)]
pub struct BasisProfile {
    pub ratios: Vec<f64>,
    /// Coordinates where the ratio vanishes (not-a-frame witnesses).
    pub zero_coordinates: Vec<usize>,
    pub min: f64,
    pub max: f64,
}

pub fn standard_basis_profile(system: &OrbitSystem) -> BasisProfile {
    let mut ratios = Vec::with_capacity(system.dim());
    let mut zero_coordinates = Vec::new();
    for col in 0..system.dim() {
        let num: f64 = system.vectors.iter().map(|v| v[col].norm_sqr()).sum();
        let ratio = num / system.eigenvalues[col].weight();
        if ratio == 0.0 {
            zero_coordinates.push(col);
        }
        ratios.push(ratio);
    }
    let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    BasisProfile {
        ratios,
        zero_coordinates,
        min,
        max,
    }
}

/// Tail frames on (Ker A)^⊥: the predicted lower bound
/// D²·min_{λ_j ≠ 0} |λ_j|^{2n₀} for the orbit tail n ≥ n₀, together with
/// the exact minimum eigenvalue of the tail frame operator on the nonzero
/// coordinates.
#[derive(Debug, Clone, Copy)]
pub struct TailBound {
    pub predicted: f64,
    pub exact: f64,
    /// Set when every eigenvalue is zero (the tail is empty).
    pub degenerate: bool,
}

pub fn tail_lower_bound(ns: &NormalizedSystem, n0: u32) -> TailBound {
    assert!(n0 >= 1, "n0 must be at least 1");
    let keep: Vec<usize> = (0..ns.eigenvalues.len())
        .filter(|&j| ns.eigenvalues[j].value() != Complex64::ZERO)
        .collect();
    if keep.is_empty() {
        return TailBound {
            predicted: 0.0,
            exact: 0.0,
            degenerate: true,
        };
    }
    let sub_points: PointSequence = keep.iter().map(|&j| ns.eigenvalues[j]).collect();
    let sub_alpha = AlphaMatrix::new(ns.alpha.column_submatrix(&keep))
        .expect("columns stay unit-norm under selection");
    let m_sub = weighted_frame_operator(&sub_points, &sub_alpha);
    let (d_sq, _) = hermitian_extremal_eigenvalues(&m_sub);
    let min_pow = sub_points
        .iter()
        .map(|l| l.value().norm().powi(2 * n0 as i32))
        .fold(f64::INFINITY, f64::min);

    // exact tail operator: entries scaled by λ_j^{n0} λ̄_k^{n0}
    let k = keep.len();
    let tail_op = CMatrix::from_fn(k, k, |r, c| {
        m_sub[(r, c)]
            * sub_points[r].value().powu(n0)
            * sub_points[c].value().conj().powu(n0)
    });
    let (exact, _) = hermitian_extremal_eigenvalues(&tail_op);
    TailBound {
        predicted: d_sq.max(0.0) * min_pow,
        exact: exact.max(0.0),
        degenerate: false,
    }
}
