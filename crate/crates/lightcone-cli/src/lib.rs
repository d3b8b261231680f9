//! `lightcone` — reconstruct lightcone framed curves from curvature data,
//! build and verify Bertrand mates, and export sampled paths.
//!
//! Exit codes are a stable contract: 0 success, 1 input error, 2 integration
//! or path-invariant failure, 3 mate-condition failure.

pub mod cli;
pub mod export;
pub mod gallery_specs;
pub mod spec_file;

use lightcone_core::Error as CoreError;

pub use cli::{main_entry, run, Cli, Command};

/// A command failure with its process exit code.
#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    pub fn input(message: String) -> Self {
        Self { message, code: 1 }
    }

    pub fn from_core(e: CoreError) -> Self {
        let code = match &e {
            CoreError::IntegrationFailure { .. } => 2,
            CoreError::ConditionViolated { .. } | CoreError::UnsolvableOnGrid { .. } => 3,
            _ => 1,
        };
        Self {
            message: e.to_string(),
            code,
        }
    }

    pub(crate) fn check_failed(name: &str, value: f64, limit: f64, code: u8) -> Self {
        Self {
            message: format!("failed={name} value={value:.6e} limit={limit:.1e}"),
            code,
        }
    }

    pub fn message(&self) -> &str {
        &self.message
    }

    pub fn code(&self) -> u8 {
        self.code
    }
}
