//! The on-disk curve spec: one TOML document drives reconstruction, mate
//! construction and verification.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use lightcone_core::mates::nsn_lambda;
use lightcone_core::{
    solve_lambda, CurvatureQuintuple, Error as CoreError, InitialFrame, Interval, MateKind,
    MateSpec, MinkowskiVec, NullPair, ScalarField, SignBranch,
};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveSpecFile {
    /// Output grid size; defaults to 2001. Top-level key, so it must be
    /// declared before the first table when writing specs by hand.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    pub interval: IntervalBlock,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, f64>,
    pub curvature: CurvatureBlock,
    pub initial_frame: FrameBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mate: Option<MateBlock>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntervalBlock {
    pub t0: f64,
    pub t1: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurvatureBlock {
    pub k1: String,
    pub k2: String,
    pub k3: String,
    pub alpha: String,
    pub beta: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameBlock {
    pub gamma0: [f64; 3],
    pub lplus: [f64; 3],
    pub lminus: [f64; 3],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MateBlock {
    /// One of the thirteen kind names.
    pub kind: String,
    /// Expression for the translation coefficient; omitted means "solve the
    /// condition for it" (or accumulate it, for the involute kind).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    /// Expression for `k` (lightlike kinds) or `theta` (rotation kinds).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aux: Option<String>,
    /// +1 or -1; the hyperbolic kinds' branch. Defaults to +1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

/// Everything a command needs, decoded and validated.
pub struct LoadedSpec {
    pub samples: usize,
    pub quintuple: CurvatureQuintuple,
    pub initial: InitialFrame,
    pub mate: Option<MateBlock>,
}

impl CurveSpecFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let text = toml::to_string_pretty(self)
            .map_err(|e| CliError::input(format!("cannot serialize spec: {e}")))?;
        crate::export::write_atomic(path, text.as_bytes())
    }

    pub fn load(&self, samples_override: Option<usize>) -> Result<LoadedSpec, CliError> {
        let samples = samples_override.or(self.samples).unwrap_or(2001);
        if samples < 5 {
            return Err(CliError::input(format!(
                "samples must be at least 5, got {samples}"
            )));
        }
        let interval = Interval::new(self.interval.t0, self.interval.t1)
            .map_err(|e| CliError::input(format!("interval: {e}")))?;

        let field = |key: &str, src: &str| -> Result<ScalarField, CliError> {
            let mut f = ScalarField::parse(src, interval)
                .map_err(|e| CliError::input(format!("curvature.{key}: {e}")))?;
            for (name, value) in &self.params {
                f = f.with_param(name, value_checked(*value, name)?);
            }
            Ok(f)
        };
        let quintuple = CurvatureQuintuple::new(
            field("k1", &self.curvature.k1)?,
            field("k2", &self.curvature.k2)?,
            field("k3", &self.curvature.k3)?,
            field("alpha", &self.curvature.alpha)?,
            field("beta", &self.curvature.beta)?,
        )
        .map_err(|e| CliError::input(format!("curvature: {e}")))?;

        // Evaluate once now so unbound parameters surface as input errors.
        for (key, f) in ["k1", "k2", "k3", "alpha", "beta"]
            .iter()
            .zip(quintuple.fields())
        {
            f.eval(interval.t0)
                .map_err(|e| CliError::input(format!("curvature.{key}: {e}")))?;
        }

        let vec = |v: [f64; 3]| MinkowskiVec::new(v[0], v[1], v[2]);
        let pair = NullPair::new(vec(self.initial_frame.lplus), vec(self.initial_frame.lminus))
            .map_err(|e| CliError::input(format!("initial_frame: {e}")))?;
        let initial = InitialFrame::new(vec(self.initial_frame.gamma0), pair)
            .map_err(|e| CliError::input(format!("initial_frame: {e}")))?;

        Ok(LoadedSpec {
            samples,
            quintuple,
            initial,
            mate: self.mate.clone(),
        })
    }
}

fn value_checked(v: f64, name: &str) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::input(format!("params.{name} is not finite")))
    }
}

/// Turn the optional mate block into a full spec, solving for the
/// coefficient function when the file leaves it out.
pub fn build_mate_spec(
    block: &MateBlock,
    quintuple: &CurvatureQuintuple,
    params: &BTreeMap<String, f64>,
    samples: usize,
) -> Result<MateSpec, CliError> {
    let interval = quintuple.interval();
    let kind: MateKind = block
        .kind
        .parse()
        .map_err(|e: CoreError| CliError::input(format!("mate.kind: {e}")))?;

    let parse_field = |key: &str, src: &str| -> Result<ScalarField, CliError> {
        let mut f = ScalarField::parse(src, interval)
            .map_err(|e| CliError::input(format!("mate.{key}: {e}")))?;
        for (name, value) in params {
            f = f.with_param(name, *value);
        }
        f.eval(interval.t0)
            .map_err(|e| CliError::input(format!("mate.{key}: {e}")))?;
        Ok(f)
    };

    let aux = match &block.aux {
        Some(src) => Some(parse_field("aux", src)?),
        None if kind.uses_k() || kind.uses_theta() => {
            return Err(CliError::input(format!(
                "mate.aux is required for kind {kind}"
            )))
        }
        None => None,
    };

    let lambda = match &block.lambda {
        Some(src) => parse_field("lambda", src)?,
        None => match kind {
            MateKind::NSN => nsn_lambda(quintuple, interval.t0, samples)
                .map_err(CliError::from_core)?,
            MateKind::NN => ScalarField::constant(1.0, interval),
            _ => solve_lambda(quintuple, kind, aux.as_ref(), samples)
                .map_err(CliError::from_core)?,
        },
    };

    let sign = match block.sign.unwrap_or(1) {
        1 => SignBranch::Plus,
        -1 => SignBranch::Minus,
        other => {
            return Err(CliError::input(format!(
                "mate.sign must be 1 or -1, got {other}"
            )))
        }
    };

    MateSpec::new(kind, lambda, aux, sign).map_err(|e| CliError::input(format!("mate: {e}")))
}
