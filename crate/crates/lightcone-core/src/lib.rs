//! Lightcone framed curves in Lorentz-Minkowski 3-space.
//!
//! The library provides, bottom up:
//!
//! - [`minkowski`]: the pseudo-scalar product, the Lorentzian cross product,
//!   causal classification and lightcone normalization on `R^3_1`;
//! - [`frame`]: null pairs, the derived pseudo-orthonormal triple, tilde null
//!   vectors and the point map between the two fibration spaces;
//! - [`expr`] / [`field`]: a small expression language and sampled scalar
//!   fields with difference and quadrature utilities;
//! - [`engine`]: frame-equation integration (existence), curvature
//!   extraction, gauge changes, reflection, congruence testing (uniqueness)
//!   and causal/singular classification;
//! - [`mates`]: the thirteen Bertrand mate constructions with their
//!   existence conditions, solved coefficient functions, closed-form mate
//!   curvatures and a numerical verification report;
//! - [`gallery`]: built-in parameterized example curves with closed-form
//!   base curves for oracle comparisons.
//!
//! ```
//! use lightcone_core::*;
//!
//! let entry = example_trig(2.0, 1.0, 1, 2)?;
//! let path = reconstruct(&entry.quintuple, &entry.initial, 2001, &Default::default())?;
//! assert!(path.delta4_drift() < 1e-6);
//!
//! // Build and check the evolute-like mate along the upper null direction.
//! let (mate, spec) = special_mate(&path, &entry.quintuple, SpecialMate::EvoluteAlongLplus)?;
//! let report = verify_mate(&path, &entry.quintuple, &spec)?;
//! assert!(report.pass && mate.delta4_drift() < 1e-6);
//! # Ok::<(), lightcone_core::Error>(())
//! ```

pub mod engine;
pub mod error;
pub mod expr;
pub mod field;
pub mod frame;
pub mod gallery;
pub mod mates;
pub mod minkowski;
pub mod stencil;
pub mod tol;

pub use engine::{
    circle_frame_path, classify_point, congruent, diagnose, extract_curvature, gauge_transform,
    reconstruct, to_adapted, CurvatureQuintuple, Diagnostics, FramedCurvePath, InitialFrame,
    ReconstructOptions,
};
pub use error::{Error, Result};
pub use expr::{Expr, Params};
pub use field::{Interval, ScalarField};
pub use frame::{null_pair_to_ortho, ortho_to_null_pair, phi_map, tilde_null, NullPair, OrthoFrame};
pub use gallery::{example_kappa3, example_trig, GalleryEntry, Kappa3Variant};
pub use mates::{
    condition_residual, construct_mate, mate_curvature_formula, solve_lambda, special_mate,
    verify_mate, ConditionResidual, MateKind, MateReport, MateSpec, SignBranch, SpecialMate,
    TildeChoice,
};
pub use minkowski::{det3, CausalType, LorentzTransform, MinkowskiVec};

#[cfg(test)]
mod thread_safety {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_immutable_and_shareable() {
        // Everything is a plain value; evaluation is pure, so paths, fields
        // and specs can be used from concurrent contexts freely.
        assert_send_sync::<MinkowskiVec>();
        assert_send_sync::<NullPair>();
        assert_send_sync::<OrthoFrame>();
        assert_send_sync::<ScalarField>();
        assert_send_sync::<CurvatureQuintuple>();
        assert_send_sync::<FramedCurvePath>();
        assert_send_sync::<MateSpec>();
        assert_send_sync::<GalleryEntry>();
        assert_send_sync::<Error>();
    }
}
