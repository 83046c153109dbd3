//! Certification of the frame property for multi-orbital systems
//! {Aⁿaⁱ : n ≥ 0, 1 ≤ i ≤ m} of a diagonalizable operator with spectrum in
//! the open unit disk, via the geometry of the eigenvalue sequence and the
//! singular values of the associated weight matrix, cross-checked against
//! exact finite-dimensional frame bounds.

pub mod alpha;
pub mod blaschke;
pub mod carleson;
pub mod certifier;
pub mod disk;
pub mod error;
pub mod generators;
pub mod kernels;
pub mod linalg;
pub mod oracle;
pub mod separation;

pub use alpha::AlphaMatrix;
pub use blaschke::BlaschkeProduct;
pub use carleson::{carleson_norm, multi_bessel, AtomicMeasure};
pub use certifier::{certify, certify_necessary, CertifyConfig, FrameCertificate, Verdict};
pub use disk::{rho, DiskPoint, PointSequence};
pub use error::{Error, Result};
pub use kernels::{gram, riesz_bounds, GramMatrix, RieszBounds};
pub use oracle::{exact_frame_bounds, normalize, FrameBounds, NormalizedSystem, OrbitSystem};
pub use separation::{decompose, separation_radius, DecomposeConfig, Decomposition};
