//! Gallery entries rendered as curve spec files, so every built-in example
//! is reproducible from the command line alone.

use std::collections::BTreeMap;

use lightcone_core::{gallery, MateKind};

use crate::spec_file::{
    CurvatureBlock, CurveSpecFile, FrameBlock, IntervalBlock, MateBlock,
};
use crate::CliError;

pub fn descriptions() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "trig",
            "circle-frame family; params p, q (amplitudes), n, m (frequencies)",
        ),
        (
            "kappa3-sin",
            "prescribed k3 = sin t; mixed type with two singular points",
        ),
        (
            "kappa3-sinh",
            "prescribed k3 = sinh t; spacelike with one singular point",
        ),
    ]
}

/// Render a gallery entry as a spec file, optionally with a mate block for
/// one of the kinds the entry is known to admit.
pub fn emit(
    name: &str,
    params: &[(String, f64)],
    samples: Option<usize>,
    mate: Option<&str>,
) -> Result<CurveSpecFile, CliError> {
    let mut map = BTreeMap::new();
    for (k, v) in params {
        map.insert(k.clone(), *v);
    }
    let entry = gallery::by_name(name, &map).map_err(CliError::from_core)?;

    let curvature = match name {
        "trig" => CurvatureBlock {
            k1: "0".into(),
            k2: "-(n/2)".into(),
            k3: "n/2".into(),
            alpha: "((p+q)/2)*sin(m*t)".into(),
            beta: "((p-q)/2)*sin(m*t)".into(),
        },
        "kappa3-sin" => CurvatureBlock {
            k1: "0".into(),
            k2: "0".into(),
            k3: "sin(t)".into(),
            alpha: "sin(t)*cos(t)".into(),
            beta: "cos(t)".into(),
        },
        "kappa3-sinh" => CurvatureBlock {
            k1: "0".into(),
            k2: "0".into(),
            k3: "sinh(t)".into(),
            alpha: "sinh(t)*cosh(t)".into(),
            beta: "-sinh(t)".into(),
        },
        other => {
            return Err(CliError::input(format!(
                "no spec template for gallery entry `{other}`"
            )))
        }
    };

    let mate = match mate {
        None => None,
        Some(kind_name) => {
            let kind: MateKind = kind_name
                .parse()
                .map_err(|e: lightcone_core::Error| CliError::input(e.to_string()))?;
            Some(mate_block(name, kind)?)
        }
    };

    let iv = entry.interval();
    let v = |x: lightcone_core::MinkowskiVec| [x.x1, x.x2, x.x3];
    Ok(CurveSpecFile {
        interval: IntervalBlock { t0: iv.t0, t1: iv.t1 },
        samples,
        params: entry.params.clone(),
        curvature,
        initial_frame: FrameBlock {
            gamma0: v(entry.initial.gamma0),
            lplus: v(entry.initial.pair0.lplus),
            lminus: v(entry.initial.pair0.lminus),
        },
        mate,
    })
}

/// Coefficient functions each entry is known to admit, per kind. Expressions
/// may reference the entry's parameters.
fn mate_block(entry: &str, kind: MateKind) -> Result<MateBlock, CliError> {
    use MateKind::*;
    let block = |lambda: Option<&str>, aux: Option<&str>| MateBlock {
        kind: kind.name().to_string(),
        lambda: lambda.map(str::to_string),
        aux: aux.map(str::to_string),
        sign: None,
    };
    let found = match entry {
        "trig" => match kind {
            LpLp | LpLm => Some(block(Some("((p-q)/n)*sin(m*t)"), Some("1"))),
            LmLp | LmLm => Some(block(Some("-((p+q)/n)*sin(m*t)"), Some("1"))),
            TpLp | TpLm => Some(block(Some("((p+q)/n)*sin(m*t)"), Some("1"))),
            TmLp | TmLm => Some(block(Some("((p-q)/n)*sin(m*t)"), Some("1"))),
            NT => Some(block(Some("sin(t)"), Some("0"))),
            NN => Some(block(Some("1"), None)),
            NSNS => Some(block(Some("(p/n)*tanh(t/4)*sin(m*t)"), Some("t/4"))),
            NNS => Some(block(Some("((q-p*tanh(t/4))/n)*sin(m*t)"), Some("t/4"))),
            NSN => Some(block(None, None)),
        },
        "kappa3-sin" => match kind {
            LpLp | LpLm => Some(block(Some("cos(t)"), Some("sin(t)"))),
            LmLp | LmLm => Some(block(Some("1"), Some("0"))),
            TpLp | TpLm => Some(block(Some("2*cos(t)"), Some("1"))),
            TmLp | TmLm => Some(block(Some("-2*cos(t)"), Some("-1"))),
            NT => Some(block(Some("sin(t)-1"), Some("t"))),
            NN => Some(block(Some("1"), None)),
            NSN => Some(block(None, None)),
            NSNS | NNS => None,
        },
        "kappa3-sinh" => match kind {
            LpLp | LpLm => Some(block(Some("-sinh(t)"), Some("sinh(t)"))),
            LmLp | LmLm => Some(block(Some("1"), Some("0"))),
            TpLp | TpLm => Some(block(Some("2*cosh(t)"), Some("1"))),
            TmLp | TmLm => Some(block(Some("-2*cosh(t)"), Some("-1"))),
            NSNS => Some(block(Some("tanh(t)*(cosh(t)-1)"), Some("t"))),
            NNS => Some(block(Some("exp(-2*t)*cosh(t)+1"), Some("t"))),
            NN => Some(block(Some("1"), None)),
            NSN => Some(block(None, None)),
            NT => None,
        },
        _ => None,
    };
    found.ok_or_else(|| {
        CliError::input(format!(
            "no known coefficient functions for kind {kind} on entry `{entry}`"
        ))
    })
}
