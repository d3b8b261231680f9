//! Built-in example curves: a trigonometric circle-frame family and a
//! two-instance family with prescribed third curvature, both with closed-form
//! base curves for oracle comparisons.

use std::f64::consts::PI;

use crate::engine::{CurvatureQuintuple, InitialFrame};
use crate::error::{Error, Result};
use crate::expr::Params;
use crate::field::{Interval, ScalarField};
use crate::frame::NullPair;
use crate::minkowski::MinkowskiVec;

/// A named, parameterized curve with its curvature quintuple, initial frame
/// and (when available in closed form) the base curve itself.
#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub name: String,
    pub params: Params,
    pub quintuple: CurvatureQuintuple,
    pub closed_form_gamma: Option<[ScalarField; 3]>,
    pub initial: InitialFrame,
}

impl GalleryEntry {
    pub fn interval(&self) -> Interval {
        self.quintuple.interval()
    }

    /// Evaluate the closed-form base curve, when present.
    pub fn gamma_at(&self, t: f64) -> Result<Option<MinkowskiVec>> {
        match &self.closed_form_gamma {
            None => Ok(None),
            Some([g1, g2, g3]) => Ok(Some(MinkowskiVec::new(
                g1.eval(t)?,
                g2.eval(t)?,
                g3.eval(t)?,
            ))),
        }
    }
}

/// Names addressable from the command line.
pub fn names() -> [&'static str; 3] {
    ["trig", "kappa3-sin", "kappa3-sinh"]
}

/// Look up an entry by CLI name. `params` overrides the trigonometric
/// family's defaults `p = 2, q = 1, n = 1, m = 2`; the other entries take no
/// parameters.
pub fn by_name(name: &str, params: &Params) -> Result<GalleryEntry> {
    match name {
        "trig" => {
            let get = |key: &str, default: f64| params.get(key).copied().unwrap_or(default);
            let n = get("n", 1.0);
            let m = get("m", 2.0);
            if n < 1.0 || m < 1.0 || n.fract() != 0.0 || m.fract() != 0.0 {
                return Err(Error::Invalid(format!(
                    "trig frequencies must be positive integers, got n = {n}, m = {m}"
                )));
            }
            example_trig(get("p", 2.0), get("q", 1.0), n as u32, m as u32)
        }
        "kappa3-sin" => Ok(example_kappa3(Kappa3Variant::Sin)),
        "kappa3-sinh" => Ok(example_kappa3(Kappa3Variant::Sinh)),
        other => Err(Error::Invalid(format!(
            "unknown gallery entry `{other}`; available: {:?}",
            names()
        ))),
    }
}

/// Circle-frame family on `[0, 2pi]`: the frame turns with angle `n t` and
/// the velocity coefficients are `alpha = ((p+q)/2) sin(mt)`,
/// `beta = ((p-q)/2) sin(mt)`, so the curvature is
/// `(0, -n/2, n/2, alpha, beta)`. The base curve integrates in closed form,
/// with separate branches for `n != m` and `n = m`.
pub fn example_trig(p: f64, q: f64, n: u32, m: u32) -> Result<GalleryEntry> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid(
            "trig frequencies must be positive".to_string(),
        ));
    }
    let iv = Interval::new(0.0, 2.0 * PI)?;
    let mut params = Params::new();
    params.insert("p".to_string(), p);
    params.insert("q".to_string(), q);
    params.insert("n".to_string(), n as f64);
    params.insert("m".to_string(), m as f64);

    let field = |src: &str| -> Result<ScalarField> {
        Ok(ScalarField::parse(src, iv)?.with_params(&params))
    };

    let quintuple = CurvatureQuintuple::new(
        field("0")?,
        field("-(n/2)")?,
        field("n/2")?,
        field("((p+q)/2)*sin(m*t)")?,
        field("((p-q)/2)*sin(m*t)")?,
    )?;

    let gamma = if n != m {
        [
            field("-(p/m)*cos(m*t)")?,
            field("-(q/2)*(cos((m-n)*t)/(m-n) + cos((m+n)*t)/(m+n))")?,
            field("(q/2)*(sin((m-n)*t)/(m-n) - sin((m+n)*t)/(m+n))")?,
        ]
    } else {
        [
            field("-(p/m)*cos(m*t)")?,
            field("-(q/(4*m))*cos(2*m*t)")?,
            field("(q/2)*t - (q/(4*m))*sin(2*m*t)")?,
        ]
    };

    let gamma0 = MinkowskiVec::new(
        gamma[0].eval(iv.t0)?,
        gamma[1].eval(iv.t0)?,
        gamma[2].eval(iv.t0)?,
    );
    // The circle frame at t = 0 is the canonical pair.
    let initial = InitialFrame::new(gamma0, NullPair::canonical())?;

    Ok(GalleryEntry {
        name: "trig".to_string(),
        params,
        quintuple,
        closed_form_gamma: Some(gamma),
        initial,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kappa3Variant {
    /// `k3 = sin t, alpha = sin t cos t, beta = cos t` on `[0, 2pi]`;
    /// a mixed-type curve with singular points at `pi/2` and `3pi/2`.
    Sin,
    /// `k3 = sinh t, alpha = sinh t cosh t, beta = -sinh t` on `[-2, 2]`;
    /// spacelike with a singular point at `t = 0`.
    Sinh,
}

/// Family with `k1 = k2 = 0` and prescribed `k3`: the lower null vector is
/// the constant `(1, -1, 0)` and the base curve integrates in closed form.
pub fn example_kappa3(variant: Kappa3Variant) -> GalleryEntry {
    match variant {
        Kappa3Variant::Sin => build_kappa3(
            "kappa3-sin",
            Interval::new(0.0, 2.0 * PI).unwrap(),
            ["sin(t)", "sin(t)*cos(t)", "cos(t)"],
            [
                "-0.25*cos(t)^4 - 0.5*cos(t)^2 + sin(t)",
                "0.25*cos(t)^4 - 0.5*cos(t)^2 - sin(t)",
                "(2/3)*cos(t)^3",
            ],
            // K = integral of k3 = -cos t.
            "-cos(t)",
        ),
        Kappa3Variant::Sinh => build_kappa3(
            "kappa3-sinh",
            Interval::new(-2.0, 2.0).unwrap(),
            ["sinh(t)", "sinh(t)*cosh(t)", "-sinh(t)"],
            [
                "0.25*cosh(t)^4 + 0.5*cosh(t)^2 - cosh(t)",
                "-0.25*cosh(t)^4 + 0.5*cosh(t)^2 + cosh(t)",
                "(2/3)*cosh(t)^3",
            ],
            "cosh(t)",
        ),
    }
}

fn build_kappa3(
    name: &str,
    iv: Interval,
    [k3, alpha, beta]: [&str; 3],
    gamma_src: [&str; 3],
    accumulated_k3: &str,
) -> GalleryEntry {
    let field = |src: &str| ScalarField::parse(src, iv).expect("builtin expression parses");
    let quintuple = CurvatureQuintuple::new(
        field("0"),
        field("0"),
        field(k3),
        field(alpha),
        field(beta),
    )
    .expect("builtin quintuple shares one interval");
    let gamma = [field(gamma_src[0]), field(gamma_src[1]), field(gamma_src[2])];

    // l+ = (K^2 + 1, 1 - K^2, 2K) with K the accumulated third curvature;
    // l- is the constant (1, -1, 0).
    let k = field(accumulated_k3).eval(iv.t0).unwrap();
    let pair = NullPair::new(
        MinkowskiVec::new(k * k + 1.0, 1.0 - k * k, 2.0 * k),
        MinkowskiVec::new(1.0, -1.0, 0.0),
    )
    .expect("builtin frame satisfies the pair constraints");
    let gamma0 = MinkowskiVec::new(
        gamma[0].eval(iv.t0).unwrap(),
        gamma[1].eval(iv.t0).unwrap(),
        gamma[2].eval(iv.t0).unwrap(),
    );

    GalleryEntry {
        name: name.to_string(),
        params: Params::new(),
        quintuple,
        closed_form_gamma: Some(gamma),
        initial: InitialFrame::new(gamma0, pair).unwrap(),
    }
}
