//! Library-wide default tolerances.
//!
//! The underlying geometry is exact; the artifact is floating point. Every
//! near-zero decision goes through one of these named constants so that the
//! provenance of a threshold is always visible at the call site.

/// Sign classification of near-zero scalars (causal type, singular flags,
/// lightlike self-products of unit-scale vectors).
pub const CLASSIFY: f64 = 1e-9;

/// Frame-constraint checks at public boundaries (Delta_4 / Delta_1 membership,
/// orthonormality of derived frames).
pub const CONSTRAINT: f64 = 1e-6;

/// Hard abort limit for constraint drift during frame integration.
pub const DRIFT_LIMIT: f64 = 1e-4;

/// A sampled function counts as "not identically zero" when its sup over the
/// grid exceeds this. Density of the support is not decidable from samples;
/// the sup-norm is the testable surrogate.
pub const NOT_IDENTICALLY_ZERO: f64 = 1e-8;

/// Minimum coefficient magnitude when solving a mate condition pointwise.
pub const SOLVE_COEFFICIENT: f64 = 1e-8;

/// Largest condition residual accepted when constructing a mate.
pub const MATE_CONDITION: f64 = 1e-6;

/// Tangency defect allowed on constructed paths (n-component of the numerical
/// curve derivative).
pub const TANGENCY: f64 = 1e-4;

/// Default node count for sampled paths and derived grid fields.
pub const DEFAULT_SAMPLES: usize = 2001;
