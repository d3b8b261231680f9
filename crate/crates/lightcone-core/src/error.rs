use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("vector is not lightlike: <x,x> = {self_product:.3e} exceeds tolerance {tol:.3e}")]
    NotLightlike { self_product: f64, tol: f64 },

    #[error("degenerate lightlike vector: first component {x1:.3e} is within tolerance of zero")]
    DegenerateLightlike { x1: f64 },

    #[error("frame constraint violated: {what} = {value:.6e} (tolerance {tol:.1e})")]
    Constraint {
        what: &'static str,
        value: f64,
        tol: f64,
    },

    #[error("parse error at byte {offset}: expected {expected}, found {found}")]
    Parse {
        offset: usize,
        expected: String,
        found: String,
    },

    #[error("unknown function `{name}` at byte {offset}")]
    UnknownFunction { offset: usize, name: String },

    #[error("unbound parameter `{name}`")]
    UnboundParameter { name: String },

    #[error("domain error: {what} at t = {t}")]
    EvalDomain { what: &'static str, t: f64 },

    #[error("t = {t} lies outside the field interval [{t0}, {t1}]")]
    OutOfInterval { t: f64, t0: f64, t1: f64 },

    #[error("interval too short for the difference stencil: h = {h:.3e} on length {len:.3e}")]
    StencilTooWide { h: f64, len: f64 },

    #[error("grid field needs at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("interval [{b0}, {b1}] does not match [{a0}, {a1}]")]
    IntervalMismatch { a0: f64, a1: f64, b0: f64, b1: f64 },

    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },

    #[error(
        "frame constraint drift {drift:.3e} exceeded the hard limit {limit:.1e}; \
         increase the sample count"
    )]
    IntegrationFailure { drift: f64, limit: f64 },

    #[error("gauge function vanishes near t = {t}: |c| = {value:.3e}")]
    GaugeVanishes { t: f64, value: f64 },

    #[error(
        "condition not solvable on the grid: coefficient magnitude {coef:.3e} \
         at t = {t} is below {min:.1e}"
    )]
    UnsolvableOnGrid { t: f64, coef: f64, min: f64 },

    #[error("invalid mate spec: {0}")]
    MateSpec(String),

    #[error(
        "mate condition violated: max residual {residual:.3e} at t = {t} \
         (tolerance {tol:.1e})"
    )]
    ConditionViolated { residual: f64, t: f64, tol: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
