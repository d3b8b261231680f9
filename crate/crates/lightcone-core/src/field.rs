//! Scalar functions on a parameter interval, given either as a parsed
//! expression or as uniform-grid samples, plus the difference/quadrature
//! utilities every downstream module shares.

use crate::error::{Error, Result};
use crate::expr::{Expr, Params};

/// Closed parameter interval `[t0, t1]` with `t1 > t0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub t0: f64,
    pub t1: f64,
}

impl Interval {
    pub fn new(t0: f64, t1: f64) -> Result<Self> {
        if !(t0.is_finite() && t1.is_finite()) || t1 <= t0 {
            return Err(Error::Invalid(format!(
                "interval requires finite t1 > t0, got [{t0}, {t1}]"
            )));
        }
        Ok(Self { t0, t1 })
    }

    pub fn length(&self) -> f64 {
        self.t1 - self.t0
    }

    pub fn contains(&self, t: f64) -> bool {
        let slack = 1e-9 * self.length().max(1.0);
        t >= self.t0 - slack && t <= self.t1 + slack
    }

    pub fn approx_eq(&self, other: &Interval) -> bool {
        let scale = self.length().abs().max(1.0);
        (self.t0 - other.t0).abs() <= 1e-9 * scale && (self.t1 - other.t1).abs() <= 1e-9 * scale
    }

    /// The `i`-th of `n` uniformly spaced nodes.
    pub fn node(&self, i: usize, n: usize) -> f64 {
        self.t0 + self.length() * (i as f64) / ((n - 1) as f64)
    }

    pub fn step(&self, n: usize) -> f64 {
        self.length() / ((n - 1) as f64)
    }
}

#[derive(Debug, Clone)]
enum FieldKind {
    Expr(Expr),
    Grid(Vec<f64>),
}

/// A scalar function on an interval.
///
/// Expression fields evaluate anywhere (the interval only scopes default
/// difference steps); grid fields interpolate their samples with a local
/// cubic and reject parameters outside the interval.
#[derive(Debug, Clone)]
pub struct ScalarField {
    interval: Interval,
    params: Params,
    kind: FieldKind,
}

/// Minimum sample count for a grid field.
pub const MIN_GRID_SAMPLES: usize = 5;

impl ScalarField {
    pub fn from_expr(expr: Expr, interval: Interval) -> Self {
        Self {
            interval,
            params: Params::new(),
            kind: FieldKind::Expr(expr),
        }
    }

    /// Parse an expression string into a field on `interval`.
    pub fn parse(src: &str, interval: Interval) -> Result<Self> {
        Ok(Self::from_expr(Expr::parse(src)?, interval))
    }

    pub fn constant(value: f64, interval: Interval) -> Self {
        Self::from_expr(Expr::constant(value), interval)
    }

    pub fn grid(interval: Interval, values: Vec<f64>) -> Result<Self> {
        if values.len() < MIN_GRID_SAMPLES {
            return Err(Error::TooFewSamples {
                min: MIN_GRID_SAMPLES,
                got: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "grid field samples",
            });
        }
        Ok(Self {
            interval,
            params: Params::new(),
            kind: FieldKind::Grid(values),
        })
    }

    /// Sample a closure on `n` uniform nodes.
    pub fn from_fn(interval: Interval, n: usize, mut f: impl FnMut(f64) -> f64) -> Result<Self> {
        let values = (0..n).map(|i| f(interval.node(i, n))).collect();
        Self::grid(interval, values)
    }

    pub fn with_params(mut self, params: &Params) -> Self {
        for (k, v) in params {
            self.params.insert(k.clone(), *v);
        }
        self
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn is_grid(&self) -> bool {
        matches!(self.kind, FieldKind::Grid(_))
    }

    pub fn grid_len(&self) -> Option<usize> {
        match &self.kind {
            FieldKind::Grid(v) => Some(v.len()),
            FieldKind::Expr(_) => None,
        }
    }

    /// Pointwise negation; exact on both representations.
    pub fn negated(&self) -> Self {
        let kind = match &self.kind {
            FieldKind::Expr(e) => FieldKind::Expr(Expr::Neg(Box::new(e.clone()))),
            FieldKind::Grid(v) => FieldKind::Grid(v.iter().map(|x| -x).collect()),
        };
        Self {
            interval: self.interval,
            params: self.params.clone(),
            kind,
        }
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        match &self.kind {
            FieldKind::Expr(e) => e.eval(t, &self.params),
            FieldKind::Grid(values) => {
                if !self.interval.contains(t) {
                    return Err(Error::OutOfInterval {
                        t,
                        t0: self.interval.t0,
                        t1: self.interval.t1,
                    });
                }
                Ok(cubic_interpolate(&self.interval, values, t))
            }
        }
    }

    /// Default finite-difference step: `(t1 - t0) * 1e-5`, at least `1e-8`.
    pub fn default_step(&self) -> f64 {
        (self.interval.length() * 1e-5).max(1e-8)
    }

    /// Second-order difference quotient: central in the interior, one-sided
    /// at the interval ends.
    pub fn differentiate(&self, t: f64, h: f64) -> Result<f64> {
        if h <= 0.0 {
            return Err(Error::Invalid(format!("step must be positive, got {h}")));
        }
        let iv = self.interval;
        if 2.0 * h > iv.length() {
            return Err(Error::StencilTooWide {
                h,
                len: iv.length(),
            });
        }
        if t - h >= iv.t0 && t + h <= iv.t1 {
            Ok((self.eval(t + h)? - self.eval(t - h)?) / (2.0 * h))
        } else if t - h < iv.t0 {
            let f0 = self.eval(t)?;
            let f1 = self.eval(t + h)?;
            let f2 = self.eval(t + 2.0 * h)?;
            Ok((-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h))
        } else {
            let f0 = self.eval(t)?;
            let f1 = self.eval(t - h)?;
            let f2 = self.eval(t - 2.0 * h)?;
            Ok((3.0 * f0 - 4.0 * f1 + f2) / (2.0 * h))
        }
    }

    pub fn derivative(&self, t: f64) -> Result<f64> {
        self.differentiate(t, self.default_step())
    }

    /// Composite Simpson approximation of the integral from `from` to `to`
    /// with (at least) `n` panels.
    pub fn integrate(&self, from: f64, to: f64, n: usize) -> Result<f64> {
        if from == to {
            return Ok(0.0);
        }
        if to < from {
            return Ok(-self.integrate(to, from, n)?);
        }
        let mut m = n.max(2);
        if m % 2 == 1 {
            m += 1;
        }
        let h = (to - from) / (m as f64);
        let mut sum = self.eval(from)? + self.eval(to)?;
        for i in 1..m {
            let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += weight * self.eval(from + h * (i as f64))?;
        }
        Ok(sum * h / 3.0)
    }

    /// Antiderivative as a grid field on this field's interval, normalized to
    /// vanish at `base`. Fourth-order cumulative Simpson on `n` nodes.
    pub fn antiderivative(&self, base: f64, n: usize) -> Result<ScalarField> {
        let n = n.max(MIN_GRID_SAMPLES);
        let iv = self.interval;
        let h = iv.step(n);
        let samples: Vec<f64> = (0..n)
            .map(|i| self.eval(iv.node(i, n)))
            .collect::<Result<_>>()?;
        let field = ScalarField::grid(iv, cumulative_simpson(h, &samples))?;
        let shift = field.eval(base)?;
        match field.kind {
            FieldKind::Grid(values) => {
                ScalarField::grid(iv, values.into_iter().map(|v| v - shift).collect())
            }
            FieldKind::Expr(_) => unreachable!(),
        }
    }

    /// Sup of `|f|` over `n` uniform nodes.
    pub fn max_abs(&self, n: usize) -> Result<f64> {
        let mut sup: f64 = 0.0;
        for i in 0..n.max(2) {
            sup = sup.max(self.eval(self.interval.node(i, n.max(2)))?.abs());
        }
        Ok(sup)
    }
}

/// Cumulative integral of uniform samples with step `h`, starting at zero.
/// Simpson pairs chained two nodes at a time; the first step is seeded with
/// a four-point rule so the odd and even chains agree to the same order.
pub(crate) fn cumulative_simpson(h: f64, samples: &[f64]) -> Vec<f64> {
    let n = samples.len();
    let mut acc = vec![0.0; n];
    if n >= 4 {
        acc[1] =
            h / 24.0 * (9.0 * samples[0] + 19.0 * samples[1] - 5.0 * samples[2] + samples[3]);
    } else if n == 3 {
        acc[1] = h / 12.0 * (5.0 * samples[0] + 8.0 * samples[1] - samples[2]);
    }
    for k in 2..n {
        acc[k] = acc[k - 2] + h / 3.0 * (samples[k - 2] + 4.0 * samples[k - 1] + samples[k]);
    }
    acc
}

/// Local cubic Lagrange interpolation through the four nodes nearest `t`.
/// Reproduces polynomials of degree <= 3 exactly.
fn cubic_interpolate(iv: &Interval, values: &[f64], t: f64) -> f64 {
    let n = values.len();
    let h = iv.step(n);
    let pos = (t - iv.t0) / h;
    // Window start: one node left of the containing cell, clamped.
    let i0 = (pos.floor() as isize - 1).clamp(0, n as isize - 4) as usize;
    let mut acc = 0.0;
    for j in 0..4 {
        let xj = (i0 + j) as f64;
        let mut w = 1.0;
        for k in 0..4 {
            if k != j {
                let xk = (i0 + k) as f64;
                w *= (pos - xk) / (xj - xk);
            }
        }
        acc += w * values[i0 + j];
    }
    acc
}
