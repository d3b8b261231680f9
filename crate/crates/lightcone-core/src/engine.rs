//! Lightcone framed curves: integrate the frame equations from a curvature
//! quintuple, extract curvature back from sampled frames, gauge changes,
//! reflection, congruence testing and pointwise classification.
//!
//! The frame system carried by every curve is
//!
//! ```text
//! dl+/dt = k1 l+ + 2 k3 n        dgamma/dt = alpha l+ + beta l-
//! dl-/dt = -k1 l- + 2 k2 n
//! dn/dt  = k2 l+ + k3 l-
//! ```
//!
//! together with the derived pseudo-orthonormal system in (nT, nS, n) with
//! coefficients `kT = k2 + k3`, `kS = k2 - k3`, `a = alpha + beta`,
//! `b = alpha - beta`.

use crate::error::{Error, Result};
use crate::field::{cumulative_simpson, Interval, ScalarField};
use crate::frame::{null_pair_to_ortho_unchecked, NullPair};
use crate::minkowski::{CausalType, LorentzTransform, MinkowskiVec};
use crate::stencil::vector_sequence_derivative;
use crate::tol;

/// The five scalar fields determining a lightcone framed curve up to
/// congruence.
#[derive(Debug, Clone)]
pub struct CurvatureQuintuple {
    pub k1: ScalarField,
    pub k2: ScalarField,
    pub k3: ScalarField,
    pub alpha: ScalarField,
    pub beta: ScalarField,
}

impl CurvatureQuintuple {
    pub fn new(
        k1: ScalarField,
        k2: ScalarField,
        k3: ScalarField,
        alpha: ScalarField,
        beta: ScalarField,
    ) -> Result<Self> {
        let iv = k1.interval();
        for f in [&k2, &k3, &alpha, &beta] {
            let other = f.interval();
            if !iv.approx_eq(&other) {
                return Err(Error::IntervalMismatch {
                    a0: iv.t0,
                    a1: iv.t1,
                    b0: other.t0,
                    b1: other.t1,
                });
            }
        }
        Ok(Self {
            k1,
            k2,
            k3,
            alpha,
            beta,
        })
    }

    pub fn interval(&self) -> Interval {
        self.k1.interval()
    }

    pub fn fields(&self) -> [&ScalarField; 5] {
        [&self.k1, &self.k2, &self.k3, &self.alpha, &self.beta]
    }

    pub fn eval(&self, t: f64) -> Result<[f64; 5]> {
        Ok([
            self.k1.eval(t)?,
            self.k2.eval(t)?,
            self.k3.eval(t)?,
            self.alpha.eval(t)?,
            self.beta.eval(t)?,
        ])
    }

    /// `kT = k2 + k3`.
    pub fn kappa_t(&self, t: f64) -> Result<f64> {
        Ok(self.k2.eval(t)? + self.k3.eval(t)?)
    }

    /// `kS = k2 - k3`.
    pub fn kappa_s(&self, t: f64) -> Result<f64> {
        Ok(self.k2.eval(t)? - self.k3.eval(t)?)
    }

    /// `a = alpha + beta`.
    pub fn a(&self, t: f64) -> Result<f64> {
        Ok(self.alpha.eval(t)? + self.beta.eval(t)?)
    }

    /// `b = alpha - beta`.
    pub fn b(&self, t: f64) -> Result<f64> {
        Ok(self.alpha.eval(t)? - self.beta.eval(t)?)
    }

    /// Curvature of the curve with the two null directions swapped:
    /// `(-k1, -k3, -k2, beta, alpha)`. Exact field-level transform.
    pub fn reflect(&self) -> Self {
        Self {
            k1: self.k1.negated(),
            k2: self.k3.negated(),
            k3: self.k2.negated(),
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }

    /// Resample all five fields onto a shared `n`-node grid.
    pub fn to_grid(&self, n: usize) -> Result<Self> {
        let iv = self.interval();
        let mut out: Vec<ScalarField> = Vec::with_capacity(5);
        for f in self.fields() {
            let values: Vec<f64> = (0..n)
                .map(|i| f.eval(iv.node(i, n)))
                .collect::<Result<_>>()?;
            out.push(ScalarField::grid(iv, values)?);
        }
        let beta = out.pop().unwrap();
        let alpha = out.pop().unwrap();
        let k3 = out.pop().unwrap();
        let k2 = out.pop().unwrap();
        let k1 = out.pop().unwrap();
        Self::new(k1, k2, k3, alpha, beta)
    }
}

/// Initial data pinning down the solution of the frame system.
#[derive(Debug, Clone, Copy)]
pub struct InitialFrame {
    pub gamma0: MinkowskiVec,
    pub pair0: NullPair,
}

impl InitialFrame {
    pub fn new(gamma0: MinkowskiVec, pair0: NullPair) -> Result<Self> {
        pair0.validate(tol::CONSTRAINT)?;
        Ok(Self { gamma0, pair0 })
    }

    /// `gamma0 = 0`, `l+ = (1,1,0)`, `l- = (1,-1,0)`.
    pub fn canonical() -> Self {
        Self {
            gamma0: MinkowskiVec::ZERO,
            pair0: NullPair::canonical(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReconstructOptions {
    /// Re-project the null pair and normal after every step. Off by default;
    /// the untouched integrator is the analyzable baseline and the projection
    /// perturbs the computed curve.
    pub renormalize: bool,
    /// Abort when the pair constraints drift beyond this.
    pub drift_limit: f64,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        Self {
            renormalize: false,
            drift_limit: tol::DRIFT_LIMIT,
        }
    }
}

/// A sampled lightcone framed curve: uniform parameter grid with the base
/// curve, the null pair and the normal at every node.
#[derive(Debug, Clone)]
pub struct FramedCurvePath {
    interval: Interval,
    gamma: Vec<MinkowskiVec>,
    lplus: Vec<MinkowskiVec>,
    lminus: Vec<MinkowskiVec>,
    normal: Vec<MinkowskiVec>,
    delta4_drift: f64,
    wedge_defect: f64,
}

impl FramedCurvePath {
    pub fn from_parts(
        interval: Interval,
        gamma: Vec<MinkowskiVec>,
        lplus: Vec<MinkowskiVec>,
        lminus: Vec<MinkowskiVec>,
        normal: Vec<MinkowskiVec>,
    ) -> Result<Self> {
        let n = gamma.len();
        if n < 5 || lplus.len() != n || lminus.len() != n || normal.len() != n {
            return Err(Error::Invalid(format!(
                "path needs >= 5 nodes with matching lengths, got {n}"
            )));
        }
        let mut path = Self {
            interval,
            gamma,
            lplus,
            lminus,
            normal,
            delta4_drift: 0.0,
            wedge_defect: 0.0,
        };
        path.refresh_drift();
        Ok(path)
    }

    fn refresh_drift(&mut self) {
        let mut drift: f64 = 0.0;
        let mut wedge: f64 = 0.0;
        for i in 0..self.len() {
            let pair = NullPair::new_unchecked(self.lplus[i], self.lminus[i]);
            drift = drift.max(pair.defect());
            wedge = wedge.max((pair.normal() - self.normal[i]).max_abs());
        }
        self.delta4_drift = drift;
        self.wedge_defect = wedge;
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn t(&self, i: usize) -> f64 {
        self.interval.node(i, self.len())
    }

    pub fn step(&self) -> f64 {
        self.interval.step(self.len())
    }

    pub fn gammas(&self) -> &[MinkowskiVec] {
        &self.gamma
    }

    pub fn lplus(&self) -> &[MinkowskiVec] {
        &self.lplus
    }

    pub fn lminus(&self) -> &[MinkowskiVec] {
        &self.lminus
    }

    pub fn normals(&self) -> &[MinkowskiVec] {
        &self.normal
    }

    /// Largest pair-constraint defect over the nodes.
    pub fn delta4_drift(&self) -> f64 {
        self.delta4_drift
    }

    /// Largest deviation between the stored normal and `-1/2 l+ ^ l-`.
    pub fn wedge_defect(&self) -> f64 {
        self.wedge_defect
    }

    /// Numerical derivative of the base curve at every node.
    pub fn gamma_derivatives(&self) -> Vec<MinkowskiVec> {
        vector_sequence_derivative(self.step(), &self.gamma)
    }

    /// Largest n-component of the numerical curve derivative; zero for an
    /// exact lightcone framed curve.
    pub fn tangency_residual(&self) -> f64 {
        let dg = self.gamma_derivatives();
        (0..self.len())
            .map(|i| dg[i].pseudo_dot(self.normal[i]).abs())
            .fold(0.0, f64::max)
    }

    /// Check the pair constraints and the tangency condition at every node.
    pub fn validate(&self, pair_tol: f64, tangency_tol: f64) -> Result<()> {
        if self.delta4_drift > pair_tol {
            return Err(Error::Constraint {
                what: "Delta_4 drift",
                value: self.delta4_drift,
                tol: pair_tol,
            });
        }
        let tangency = self.tangency_residual();
        if tangency > tangency_tol {
            return Err(Error::Constraint {
                what: "tangency residual",
                value: tangency,
                tol: tangency_tol,
            });
        }
        Ok(())
    }

    /// Apply a Lorentz transform and translation to every node.
    pub fn transformed(&self, a: &LorentzTransform, shift: MinkowskiVec) -> Self {
        let map = |vs: &[MinkowskiVec]| vs.iter().map(|v| a.apply(*v)).collect();
        let gamma = self.gamma.iter().map(|v| a.apply(*v) + shift).collect();
        let mut path = Self {
            interval: self.interval,
            gamma,
            lplus: map(&self.lplus),
            lminus: map(&self.lminus),
            normal: map(&self.normal),
            delta4_drift: 0.0,
            wedge_defect: 0.0,
        };
        path.refresh_drift();
        path
    }

    /// The unique congruence mapping this path's initial frame onto
    /// `target`'s, computed in the (nT, nS, n) basis at the first node.
    pub fn congruence_onto(&self, target: &Self) -> (LorentzTransform, MinkowskiVec) {
        let frame_matrix = |p: &Self| {
            let ortho =
                null_pair_to_ortho_unchecked(&NullPair::new_unchecked(p.lplus[0], p.lminus[0]));
            LorentzTransform::from_columns(ortho.nt, ortho.ns, ortho.n)
        };
        let a = frame_matrix(target).compose(&frame_matrix(self).pseudo_orthonormal_inverse());
        let shift = target.gamma[0] - a.apply(self.gamma[0]);
        (a, shift)
    }

    /// Sup-norm distance between base curves after congruence alignment.
    pub fn aligned_gamma_deviation(&self, target: &Self) -> Result<f64> {
        if self.len() != target.len() || !self.interval.approx_eq(&target.interval) {
            return Err(Error::Invalid(
                "paths must share grid and interval for comparison".to_string(),
            ));
        }
        let (a, shift) = self.congruence_onto(target);
        let sup = (0..self.len())
            .map(|i| (a.apply(self.gamma[i]) + shift - target.gamma[i]).max_abs())
            .fold(0.0, f64::max);
        Ok(sup)
    }
}

#[derive(Clone, Copy)]
struct State {
    g: MinkowskiVec,
    lp: MinkowskiVec,
    lm: MinkowskiVec,
    n: MinkowskiVec,
}

impl State {
    fn axpy(self, h: f64, d: Self) -> Self {
        Self {
            g: self.g + d.g * h,
            lp: self.lp + d.lp * h,
            lm: self.lm + d.lm * h,
            n: self.n + d.n * h,
        }
    }
}

fn frame_rhs(q: &CurvatureQuintuple, t: f64, s: &State) -> Result<State> {
    let [k1, k2, k3, alpha, beta] = q.eval(t)?;
    Ok(State {
        g: s.lp * alpha + s.lm * beta,
        lp: s.lp * k1 + s.n * (2.0 * k3),
        lm: s.lm * (-k1) + s.n * (2.0 * k2),
        n: s.lp * k2 + s.lm * k3,
    })
}

fn rk4_step(q: &CurvatureQuintuple, t: f64, h: f64, s: State) -> Result<State> {
    let k1 = frame_rhs(q, t, &s)?;
    let k2 = frame_rhs(q, t + 0.5 * h, &s.axpy(0.5 * h, k1))?;
    let k3 = frame_rhs(q, t + 0.5 * h, &s.axpy(0.5 * h, k2))?;
    let k4 = frame_rhs(q, t + h, &s.axpy(h, k3))?;
    Ok(State {
        g: s.g + (k1.g + (k2.g + k3.g) * 2.0 + k4.g) * (h / 6.0),
        lp: s.lp + (k1.lp + (k2.lp + k3.lp) * 2.0 + k4.lp) * (h / 6.0),
        lm: s.lm + (k1.lm + (k2.lm + k3.lm) * 2.0 + k4.lm) * (h / 6.0),
        n: s.n + (k1.n + (k2.n + k3.n) * 2.0 + k4.n) * (h / 6.0),
    })
}

/// Restore the pair constraints after a step: remove the null defects along
/// the opposite lightlike direction, rescale the pairing to -2 and rebuild
/// the normal from the wedge.
fn project_state(s: &mut State) {
    let pairing = s.lp.pseudo_dot(s.lm);
    s.lp = s.lp - s.lm * (s.lp.pseudo_dot(s.lp) / (2.0 * pairing));
    s.lm = s.lm - s.lp * (s.lm.pseudo_dot(s.lm) / (2.0 * pairing));
    let pairing = s.lp.pseudo_dot(s.lm);
    if pairing < 0.0 {
        let r = (-2.0 / pairing).sqrt();
        s.lp = s.lp * r;
        s.lm = s.lm * r;
    }
    s.n = s.lp.wedge(s.lm) * -0.5;
}

/// Integrate the frame system from `init` over the quintuple's interval with
/// `n` output nodes (classical fixed-step RK4 on the 12-dimensional state).
pub fn reconstruct(
    q: &CurvatureQuintuple,
    init: &InitialFrame,
    n: usize,
    opts: &ReconstructOptions,
) -> Result<FramedCurvePath> {
    if n < 5 {
        return Err(Error::TooFewSamples { min: 5, got: n });
    }
    init.pair0.validate(tol::CONSTRAINT)?;
    let iv = q.interval();
    let h = iv.step(n);

    let mut state = State {
        g: init.gamma0,
        lp: init.pair0.lplus,
        lm: init.pair0.lminus,
        n: init.pair0.normal(),
    };
    let mut gamma = Vec::with_capacity(n);
    let mut lplus = Vec::with_capacity(n);
    let mut lminus = Vec::with_capacity(n);
    let mut normal = Vec::with_capacity(n);
    let mut drift: f64 = 0.0;

    for i in 0..n {
        let pair = NullPair::new_unchecked(state.lp, state.lm);
        drift = drift.max(pair.defect());
        if drift > opts.drift_limit {
            return Err(Error::IntegrationFailure {
                drift,
                limit: opts.drift_limit,
            });
        }
        gamma.push(state.g);
        lplus.push(state.lp);
        lminus.push(state.lm);
        normal.push(state.n);
        if i + 1 < n {
            state = rk4_step(q, iv.node(i, n), h, state)?;
            if opts.renormalize {
                project_state(&mut state);
            }
        }
    }

    FramedCurvePath::from_parts(iv, gamma, lplus, lminus, normal)
}

/// Read the curvature quintuple back off a sampled path. The formulas are
/// forced by the frame system: `k1 = -1/2 <dl+, l->`, `k3 = 1/2 <dl+, n>`,
/// `k2 = 1/2 <dl-, n>`, `alpha = -1/2 <dgamma, l->`, `beta = -1/2 <dgamma, l+>`.
pub fn extract_curvature(path: &FramedCurvePath) -> Result<CurvatureQuintuple> {
    if path.delta4_drift() > tol::DRIFT_LIMIT {
        return Err(Error::Constraint {
            what: "Delta_4 drift",
            value: path.delta4_drift(),
            tol: tol::DRIFT_LIMIT,
        });
    }
    let h = path.step();
    let dlp = vector_sequence_derivative(h, &path.lplus);
    let dlm = vector_sequence_derivative(h, &path.lminus);
    let dg = vector_sequence_derivative(h, &path.gamma);
    let n = path.len();
    let mut k1 = Vec::with_capacity(n);
    let mut k2 = Vec::with_capacity(n);
    let mut k3 = Vec::with_capacity(n);
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for i in 0..n {
        k1.push(-0.5 * dlp[i].pseudo_dot(path.lminus[i]));
        k3.push(0.5 * dlp[i].pseudo_dot(path.normal[i]));
        k2.push(0.5 * dlm[i].pseudo_dot(path.normal[i]));
        alpha.push(-0.5 * dg[i].pseudo_dot(path.lminus[i]));
        beta.push(-0.5 * dg[i].pseudo_dot(path.lplus[i]));
    }
    let iv = path.interval();
    CurvatureQuintuple::new(
        ScalarField::grid(iv, k1)?,
        ScalarField::grid(iv, k2)?,
        ScalarField::grid(iv, k3)?,
        ScalarField::grid(iv, alpha)?,
        ScalarField::grid(iv, beta)?,
    )
}

/// Change the lightcone frame by `l+ -> l+/c`, `l- -> c l-`. The curvature
/// transforms as `k1 -> k1 - c'/c`, `k2 -> c k2`, `k3 -> k3/c`,
/// `alpha -> c alpha`, `beta -> beta/c`.
pub fn gauge_transform(q: &CurvatureQuintuple, c: &ScalarField) -> Result<CurvatureQuintuple> {
    let iv = q.interval();
    if !iv.approx_eq(&c.interval()) {
        let other = c.interval();
        return Err(Error::IntervalMismatch {
            a0: iv.t0,
            a1: iv.t1,
            b0: other.t0,
            b1: other.t1,
        });
    }
    let n = c
        .grid_len()
        .or_else(|| q.fields().iter().filter_map(|f| f.grid_len()).max())
        .unwrap_or(tol::DEFAULT_SAMPLES);
    let mut k1 = Vec::with_capacity(n);
    let mut k2 = Vec::with_capacity(n);
    let mut k3 = Vec::with_capacity(n);
    let mut alpha = Vec::with_capacity(n);
    let mut beta = Vec::with_capacity(n);
    for i in 0..n {
        let t = iv.node(i, n);
        let ct = c.eval(t)?;
        if ct.abs() < tol::CLASSIFY {
            return Err(Error::GaugeVanishes { t, value: ct });
        }
        let dct = c.derivative(t)?;
        let [q1, q2, q3, qa, qb] = q.eval(t)?;
        k1.push(q1 - dct / ct);
        k2.push(ct * q2);
        k3.push(q3 / ct);
        alpha.push(ct * qa);
        beta.push(qb / ct);
    }
    CurvatureQuintuple::new(
        ScalarField::grid(iv, k1)?,
        ScalarField::grid(iv, k2)?,
        ScalarField::grid(iv, k3)?,
        ScalarField::grid(iv, alpha)?,
        ScalarField::grid(iv, beta)?,
    )
}

/// Gauge into the adapted frame: `c = exp(int k1)` kills the transformed k1.
/// Returns the adapted quintuple and the gauge function used.
pub fn to_adapted(q: &CurvatureQuintuple) -> Result<(CurvatureQuintuple, ScalarField)> {
    let iv = q.interval();
    let n = q
        .fields()
        .iter()
        .filter_map(|f| f.grid_len())
        .max()
        .unwrap_or(tol::DEFAULT_SAMPLES);
    let accum = q.k1.antiderivative(iv.t0, n)?;
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        values.push(accum.eval(iv.node(i, n))?.exp());
    }
    let c = ScalarField::grid(iv, values)?;
    let adapted = gauge_transform(q, &c)?;
    Ok((adapted, c))
}

/// Build the path of a curve given in a lightcone circle frame:
/// `l+ = (1, cos theta, sin theta)`, `l- = (1, -cos theta, -sin theta)`,
/// `n = (0, -sin theta, cos theta)`; the base curve is accumulated from
/// `dgamma = alpha l+ + beta l-`. Its curvature is
/// `(0, -theta'/2, theta'/2, alpha, beta)`.
pub fn circle_frame_path(
    theta: &ScalarField,
    alpha: &ScalarField,
    beta: &ScalarField,
    gamma0: MinkowskiVec,
    n: usize,
) -> Result<FramedCurvePath> {
    if n < 5 {
        return Err(Error::TooFewSamples { min: 5, got: n });
    }
    let iv = theta.interval();
    for f in [alpha, beta] {
        if !iv.approx_eq(&f.interval()) {
            let other = f.interval();
            return Err(Error::IntervalMismatch {
                a0: iv.t0,
                a1: iv.t1,
                b0: other.t0,
                b1: other.t1,
            });
        }
    }
    let h = iv.step(n);
    let mut lplus = Vec::with_capacity(n);
    let mut lminus = Vec::with_capacity(n);
    let mut normal = Vec::with_capacity(n);
    let mut dgamma = Vec::with_capacity(n);
    for i in 0..n {
        let t = iv.node(i, n);
        let (s, c) = theta.eval(t)?.sin_cos();
        let lp = MinkowskiVec::new(1.0, c, s);
        let lm = MinkowskiVec::new(1.0, -c, -s);
        lplus.push(lp);
        lminus.push(lm);
        normal.push(MinkowskiVec::new(0.0, -s, c));
        dgamma.push(lp * alpha.eval(t)? + lm * beta.eval(t)?);
    }
    let acc1 = cumulative_simpson(h, &dgamma.iter().map(|v| v.x1).collect::<Vec<_>>());
    let acc2 = cumulative_simpson(h, &dgamma.iter().map(|v| v.x2).collect::<Vec<_>>());
    let acc3 = cumulative_simpson(h, &dgamma.iter().map(|v| v.x3).collect::<Vec<_>>());
    let gamma = (0..n)
        .map(|i| gamma0 + MinkowskiVec::new(acc1[i], acc2[i], acc3[i]))
        .collect();
    FramedCurvePath::from_parts(iv, gamma, lplus, lminus, normal)
}

/// Sup-norm agreement of two quintuples on a shared sample grid; the grid is
/// the finest one either quintuple carries (default 1001 nodes).
pub fn congruent(q1: &CurvatureQuintuple, q2: &CurvatureQuintuple, tol: f64) -> Result<bool> {
    let iv = q1.interval();
    if !iv.approx_eq(&q2.interval()) {
        let other = q2.interval();
        return Err(Error::IntervalMismatch {
            a0: iv.t0,
            a1: iv.t1,
            b0: other.t0,
            b1: other.t1,
        });
    }
    let n = q1
        .fields()
        .iter()
        .chain(q2.fields().iter())
        .filter_map(|f| f.grid_len())
        .max()
        .unwrap_or(1001);
    for i in 0..n {
        let t = iv.node(i, n);
        let a = q1.eval(t)?;
        let b = q2.eval(t)?;
        for k in 0..5 {
            if (a[k] - b[k]).abs() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Causal character of the base curve at `t`, plus a singular-point flag.
/// The sign of `alpha*beta` classifies; both coefficients within `tol` of
/// zero marks a singular point (where the velocity vanishes).
pub fn classify_point(
    q: &CurvatureQuintuple,
    t: f64,
    tol: f64,
) -> Result<(CausalType, bool)> {
    let alpha = q.alpha.eval(t)?;
    let beta = q.beta.eval(t)?;
    if alpha.abs() <= tol && beta.abs() <= tol {
        return Ok((CausalType::Zero, true));
    }
    let p = alpha * beta;
    let causal = if p.abs() <= tol {
        CausalType::Lightlike
    } else if p < 0.0 {
        CausalType::Spacelike
    } else {
        CausalType::Timelike
    };
    Ok((causal, false))
}

/// Residual battery for a path against the quintuple that is supposed to
/// generate it. All derivatives are numerical; every entry is a sup over the
/// grid.
#[derive(Debug, Clone)]
pub struct Diagnostics {
    pub delta4_drift: f64,
    pub wedge_defect: f64,
    pub tangency_residual: f64,
    /// `|<dgamma, dgamma> + 4 alpha beta|`.
    pub metric_identity: f64,
    /// Residuals of the three lightcone frame equations.
    pub frame_residuals: [f64; 3],
    /// Residuals of the three (nT, nS, n) equations.
    pub dual_frame_residuals: [f64; 3],
    /// Sup-norm mismatch between `q` and the curvature extracted numerically.
    pub extraction_mismatch: [f64; 5],
    /// Parameter values of grid nodes flagged singular.
    pub singular_ts: Vec<f64>,
}

impl Diagnostics {
    pub fn max_frame_residual(&self) -> f64 {
        self.frame_residuals
            .iter()
            .chain(self.dual_frame_residuals.iter())
            .fold(0.0_f64, |acc, r| acc.max(*r))
    }
}

pub fn diagnose(path: &FramedCurvePath, q: &CurvatureQuintuple) -> Result<Diagnostics> {
    let n = path.len();
    let h = path.step();
    let dg = vector_sequence_derivative(h, &path.gamma);
    let dlp = vector_sequence_derivative(h, &path.lplus);
    let dlm = vector_sequence_derivative(h, &path.lminus);
    let dn = vector_sequence_derivative(h, &path.normal);

    let extracted = extract_curvature(path)?;
    let mut metric: f64 = 0.0;
    let mut frame = [0.0_f64; 3];
    let mut dual = [0.0_f64; 3];
    let mut mismatch = [0.0_f64; 5];
    let mut tangency: f64 = 0.0;
    let mut singular = Vec::new();

    for i in 0..n {
        let t = path.t(i);
        let [k1, k2, k3, alpha, beta] = q.eval(t)?;
        let lp = path.lplus[i];
        let lm = path.lminus[i];
        let nn = path.normal[i];

        metric = metric.max((dg[i].pseudo_dot(dg[i]) + 4.0 * alpha * beta).abs());
        tangency = tangency.max(dg[i].pseudo_dot(nn).abs());

        frame[0] = frame[0].max((dlp[i] - (lp * k1 + nn * (2.0 * k3))).max_abs());
        frame[1] = frame[1].max((dlm[i] - (lm * (-k1) + nn * (2.0 * k2))).max_abs());
        frame[2] = frame[2].max((dn[i] - (lp * k2 + lm * k3)).max_abs());

        // Derived system in the pseudo-orthonormal triple.
        let nt = (lp + lm) * 0.5;
        let ns = (lp - lm) * 0.5;
        let dnt = (dlp[i] + dlm[i]) * 0.5;
        let dns = (dlp[i] - dlm[i]) * 0.5;
        let kt = k2 + k3;
        let ks = k2 - k3;
        dual[0] = dual[0].max((dnt - (ns * k1 + nn * kt)).max_abs());
        dual[1] = dual[1].max((dns - (nt * k1 - nn * ks)).max_abs());
        dual[2] = dual[2].max((dn[i] - (nt * kt + ns * ks)).max_abs());

        let got = extracted.eval(t)?;
        let want = [k1, k2, k3, alpha, beta];
        for k in 0..5 {
            mismatch[k] = mismatch[k].max((got[k] - want[k]).abs());
        }

        if alpha.abs() <= tol::CLASSIFY && beta.abs() <= tol::CLASSIFY {
            singular.push(t);
        }
    }

    Ok(Diagnostics {
        delta4_drift: path.delta4_drift(),
        wedge_defect: path.wedge_defect(),
        tangency_residual: tangency,
        metric_identity: metric,
        frame_residuals: frame,
        dual_frame_residuals: dual,
        extraction_mismatch: mismatch,
        singular_ts: singular,
    })
}
