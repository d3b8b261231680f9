//! Bertrand mates of lightcone framed curves.
//!
//! For each of the thirteen direction pairings this module can (i) evaluate
//! the existence condition pointwise, (ii) solve for the free coefficient
//! function where the condition is linear in it, (iii) construct the partner
//! curve in closed form from the source frames, (iv) evaluate the partner's
//! curvature from the closed-form table, and (v) cross-check the table
//! against numerical extraction on the constructed path.
//!
//! Kind naming follows the direction pair: `LpLp` pairs the source's upper
//! null direction with the mate's upper null direction, `Tp`/`Tm` are the
//! tilde null directions carried by the orthonormal triple, and `NT`, `NN`,
//! `NSNS`, `NNS`, `NSN` pair the triple's vectors themselves.

use std::fmt;
use std::str::FromStr;

use crate::engine::{extract_curvature, CurvatureQuintuple, FramedCurvePath};
use crate::error::{Error, Result};
use crate::field::{Interval, ScalarField};
use crate::minkowski::MinkowskiVec;
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MateKind {
    LpLp,
    LpLm,
    LmLp,
    LmLm,
    TpLp,
    TpLm,
    TmLp,
    TmLm,
    NT,
    NN,
    NSNS,
    NNS,
    NSN,
}

impl MateKind {
    pub const ALL: [MateKind; 13] = [
        MateKind::LpLp,
        MateKind::LpLm,
        MateKind::LmLp,
        MateKind::LmLm,
        MateKind::TpLp,
        MateKind::TpLm,
        MateKind::TmLp,
        MateKind::TmLm,
        MateKind::NT,
        MateKind::NN,
        MateKind::NSNS,
        MateKind::NNS,
        MateKind::NSN,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MateKind::LpLp => "LpLp",
            MateKind::LpLm => "LpLm",
            MateKind::LmLp => "LmLp",
            MateKind::LmLm => "LmLm",
            MateKind::TpLp => "TpLp",
            MateKind::TpLm => "TpLm",
            MateKind::TmLp => "TmLp",
            MateKind::TmLm => "TmLm",
            MateKind::NT => "NT",
            MateKind::NN => "NN",
            MateKind::NSNS => "NSNS",
            MateKind::NNS => "NNS",
            MateKind::NSN => "NSN",
        }
    }

    /// Kinds whose condition involves the free function `k`.
    pub fn uses_k(&self) -> bool {
        matches!(
            self,
            MateKind::LpLp
                | MateKind::LpLm
                | MateKind::LmLp
                | MateKind::LmLm
                | MateKind::TpLp
                | MateKind::TpLm
                | MateKind::TmLp
                | MateKind::TmLm
        )
    }

    /// Kinds whose condition involves the free angle `theta`.
    pub fn uses_theta(&self) -> bool {
        matches!(self, MateKind::NT | MateKind::NSNS | MateKind::NNS)
    }

    /// Kinds admitting a mate for every curve (no pointwise condition).
    pub fn always_exists(&self) -> bool {
        matches!(self, MateKind::NN | MateKind::NSN)
    }

    /// Kinds with a hyperbolic-rotation sign branch.
    pub fn uses_sign(&self) -> bool {
        matches!(self, MateKind::NSNS | MateKind::NNS)
    }

    /// Whether the mate's designated vector is its lower null direction
    /// (these kinds are the frame swaps of their `*Lp` partners).
    fn designates_lminus(&self) -> bool {
        matches!(
            self,
            MateKind::LpLm | MateKind::LmLm | MateKind::TpLm | MateKind::TmLm
        )
    }
}

impl fmt::Display for MateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MateKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MateKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown mate kind `{s}`")))
    }
}

/// Sign branch of the hyperbolic frame rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignBranch {
    #[default]
    Plus,
    Minus,
}

impl SignBranch {
    pub fn value(&self) -> f64 {
        match self {
            SignBranch::Plus => 1.0,
            SignBranch::Minus => -1.0,
        }
    }
}

/// A mate kind with its free data: the translation coefficient `lambda` and,
/// where the kind requires one, the auxiliary function (`k` for the lightlike
/// kinds, `theta` for the rotation/boost kinds).
#[derive(Debug, Clone)]
pub struct MateSpec {
    pub kind: MateKind,
    pub lambda: ScalarField,
    pub aux: Option<ScalarField>,
    pub sign: SignBranch,
}

impl MateSpec {
    pub fn new(
        kind: MateKind,
        lambda: ScalarField,
        aux: Option<ScalarField>,
        sign: SignBranch,
    ) -> Result<Self> {
        let iv = lambda.interval();
        if let Some(a) = &aux {
            if !iv.approx_eq(&a.interval()) {
                let other = a.interval();
                return Err(Error::IntervalMismatch {
                    a0: iv.t0,
                    a1: iv.t1,
                    b0: other.t0,
                    b1: other.t1,
                });
            }
        }
        if (kind.uses_k() || kind.uses_theta()) && aux.is_none() {
            return Err(Error::MateSpec(format!(
                "kind {kind} needs an auxiliary function ({})",
                if kind.uses_k() { "k" } else { "theta" }
            )));
        }
        let probe = 1001;
        let sup = lambda.max_abs(probe)?;
        if sup <= tol::NOT_IDENTICALLY_ZERO {
            return Err(Error::MateSpec(format!(
                "lambda is identically zero on the grid (sup = {sup:.3e})"
            )));
        }
        if kind == MateKind::NN {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for i in 0..probe {
                let v = lambda.eval(iv.node(i, probe))?;
                lo = lo.min(v);
                hi = hi.max(v);
            }
            if hi - lo > 1e-10 * sup.max(1.0) {
                return Err(Error::MateSpec(format!(
                    "the NN kind needs a constant lambda; observed spread {:.3e}",
                    hi - lo
                )));
            }
        }
        Ok(Self {
            kind,
            lambda,
            aux,
            sign,
        })
    }

    /// The auxiliary function, defaulting to zero for kinds that ignore it.
    fn aux_value(&self, t: f64) -> Result<f64> {
        match &self.aux {
            Some(f) => f.eval(t),
            None => Ok(0.0),
        }
    }

    fn aux_derivative(&self, t: f64) -> Result<f64> {
        match &self.aux {
            Some(f) => f.derivative(t),
            None => Ok(0.0),
        }
    }
}

/// Pointwise values of a kind's defining scalar equation on a uniform grid.
#[derive(Debug, Clone)]
pub struct ConditionResidual {
    interval: Interval,
    values: Vec<f64>,
}

impl ConditionResidual {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sup(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Parameter value where the residual is largest.
    pub fn argmax_t(&self) -> f64 {
        let mut best = 0;
        for (i, v) in self.values.iter().enumerate() {
            if v.abs() > self.values[best].abs() {
                best = i;
            }
        }
        self.interval.node(best, self.values.len())
    }
}

/// Left-hand side of the kind's existence condition at one parameter value.
/// For the always-satisfiable kinds the "condition" is the deviation of
/// lambda from its required form: constancy for `NN`, an antiderivative of
/// `-b` for `NSN` (measured relative to lambda's own value at the left end,
/// so the free integration constant drops out).
fn condition_value(
    q: &CurvatureQuintuple,
    spec: &MateSpec,
    t: f64,
    nsn_b_accumulated: Option<&ScalarField>,
) -> Result<f64> {
    let [k1, k2, k3, alpha, beta] = q.eval(t)?;
    let lambda = spec.lambda.eval(t)?;
    match spec.kind {
        MateKind::LpLp | MateKind::LpLm => Ok(spec.aux_value(t)? * beta - lambda * k3),
        MateKind::LmLp | MateKind::LmLm => Ok(spec.aux_value(t)? * alpha - lambda * k2),
        MateKind::TpLp | MateKind::TpLm => {
            let k = spec.aux_value(t)?;
            Ok(k * (alpha + beta) + alpha - beta + lambda * (k1 + k2 - k3))
        }
        MateKind::TmLp | MateKind::TmLm => {
            let k = spec.aux_value(t)?;
            Ok(k * (alpha + beta) - alpha + beta - lambda * (k1 - k2 + k3))
        }
        MateKind::NT => {
            let theta = spec.aux_value(t)?;
            Ok(lambda * (k2 + k3) * theta.cos() - (alpha - beta + lambda * k1) * theta.sin())
        }
        MateKind::NSNS => {
            let theta = spec.aux_value(t)?;
            Ok(lambda * (k2 - k3) * theta.cosh() + (alpha + beta + lambda * k1) * theta.sinh())
        }
        MateKind::NNS => {
            let theta = spec.aux_value(t)?;
            Ok((alpha + beta + lambda * (k2 + k3)) * theta.sinh()
                - (alpha - beta + lambda * (k2 - k3)) * theta.cosh())
        }
        MateKind::NN => {
            let iv = spec.lambda.interval();
            Ok(lambda - spec.lambda.eval(iv.t0)?)
        }
        MateKind::NSN => {
            let iv = spec.lambda.interval();
            let accumulated = nsn_b_accumulated
                .expect("NSN residual needs the accumulated b field")
                .eval(t)?;
            Ok(lambda - spec.lambda.eval(iv.t0)? + accumulated)
        }
    }
}

/// Evaluate the kind's defining equation on `n` uniform nodes.
pub fn condition_residual(
    q: &CurvatureQuintuple,
    spec: &MateSpec,
    n: usize,
) -> Result<ConditionResidual> {
    let iv = q.interval();
    let accumulated = if spec.kind == MateKind::NSN {
        let b = sample_b(q, n)?;
        Some(b.antiderivative(iv.t0, n.max(tol::DEFAULT_SAMPLES))?)
    } else {
        None
    };
    let values = (0..n)
        .map(|i| condition_value(q, spec, iv.node(i, n), accumulated.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConditionResidual {
        interval: iv,
        values,
    })
}

fn sample_b(q: &CurvatureQuintuple, n: usize) -> Result<ScalarField> {
    let iv = q.interval();
    let n = n.max(tol::DEFAULT_SAMPLES);
    let values = (0..n)
        .map(|i| q.b(iv.node(i, n)))
        .collect::<Result<Vec<_>>>()?;
    ScalarField::grid(iv, values)
}

/// Solve the kind's condition for `lambda` pointwise on `n` nodes. The
/// coefficient of `lambda` must stay away from zero on the whole grid;
/// the first offending node is reported otherwise. `NN` returns the constant
/// one and `NSN` the antiderivative of `-b` vanishing at the left endpoint.
pub fn solve_lambda(
    q: &CurvatureQuintuple,
    kind: MateKind,
    aux: Option<&ScalarField>,
    n: usize,
) -> Result<ScalarField> {
    let iv = q.interval();
    match kind {
        MateKind::NN => Ok(ScalarField::constant(1.0, iv)),
        MateKind::NSN => nsn_lambda(q, iv.t0, n),
        _ => {
            let aux = match aux {
                Some(f) => f,
                None => {
                    return Err(Error::MateSpec(format!(
                        "solving the {kind} condition needs the auxiliary function"
                    )))
                }
            };
            let mut values = Vec::with_capacity(n);
            for i in 0..n {
                let t = iv.node(i, n);
                let [k1, k2, k3, alpha, beta] = q.eval(t)?;
                let av = aux.eval(t)?;
                // Write the condition as numerator + lambda * coefficient = 0.
                let (numerator, coefficient) = match kind {
                    MateKind::LpLp | MateKind::LpLm => (av * beta, -k3),
                    MateKind::LmLp | MateKind::LmLm => (av * alpha, -k2),
                    MateKind::TpLp | MateKind::TpLm => {
                        (av * (alpha + beta) + alpha - beta, k1 + k2 - k3)
                    }
                    MateKind::TmLp | MateKind::TmLm => {
                        (av * (alpha + beta) - alpha + beta, -(k1 - k2 + k3))
                    }
                    MateKind::NT => (
                        -(alpha - beta) * av.sin(),
                        (k2 + k3) * av.cos() - k1 * av.sin(),
                    ),
                    MateKind::NSNS => (
                        (alpha + beta) * av.sinh(),
                        (k2 - k3) * av.cosh() + k1 * av.sinh(),
                    ),
                    MateKind::NNS => (
                        (alpha + beta) * av.sinh() - (alpha - beta) * av.cosh(),
                        (k2 + k3) * av.sinh() - (k2 - k3) * av.cosh(),
                    ),
                    MateKind::NN | MateKind::NSN => unreachable!(),
                };
                if coefficient.abs() < tol::SOLVE_COEFFICIENT {
                    return Err(Error::UnsolvableOnGrid {
                        t,
                        coef: coefficient,
                        min: tol::SOLVE_COEFFICIENT,
                    });
                }
                values.push(-numerator / coefficient);
            }
            ScalarField::grid(iv, values)
        }
    }
}

/// The involute coefficient `lambda = -int b`, normalized to vanish at
/// `base`. Changing the base point shifts the mate along the spacelike
/// normal.
pub fn nsn_lambda(q: &CurvatureQuintuple, base: f64, n: usize) -> Result<ScalarField> {
    let b = sample_b(q, n)?;
    let anti = b.antiderivative(base, n.max(tol::DEFAULT_SAMPLES))?;
    Ok(anti.negated())
}

struct SourceNode {
    lp: MinkowskiVec,
    lm: MinkowskiVec,
    n: MinkowskiVec,
    nt: MinkowskiVec,
    ns: MinkowskiVec,
}

impl SourceNode {
    fn of(path: &FramedCurvePath, i: usize) -> Self {
        let lp = path.lplus()[i];
        let lm = path.lminus()[i];
        Self {
            lp,
            lm,
            n: path.normals()[i],
            nt: (lp + lm) * 0.5,
            ns: (lp - lm) * 0.5,
        }
    }
}

/// The translation direction v of a kind, from the source frame.
fn direction_vector(kind: MateKind, s: &SourceNode) -> MinkowskiVec {
    match kind {
        MateKind::LpLp | MateKind::LpLm => s.lp,
        MateKind::LmLp | MateKind::LmLm => s.lm,
        MateKind::TpLp | MateKind::TpLm => s.nt + s.n,
        MateKind::TmLp | MateKind::TmLm => s.nt - s.n,
        MateKind::NT => s.nt,
        MateKind::NN | MateKind::NNS => s.n,
        MateKind::NSNS | MateKind::NSN => s.ns,
    }
}

/// The mate's frame pair per the closed-form table. The `*Lm` kinds carry
/// the swapped pair of their `*Lp` partners.
fn mate_pair(
    kind: MateKind,
    s: &SourceNode,
    aux: f64,
    sign: f64,
) -> (MinkowskiVec, MinkowskiVec) {
    let k = aux;
    let (up, down) = match kind {
        MateKind::LpLp | MateKind::LpLm => (s.lp, s.lp * (k * k) + s.lm + s.n * (2.0 * k)),
        MateKind::LmLp | MateKind::LmLm => (s.lm, s.lp + s.lm * (k * k) + s.n * (2.0 * k)),
        MateKind::TpLp | MateKind::TpLm => (
            s.nt + s.n,
            s.nt * (k * k + 1.0) - s.ns * (2.0 * k) + s.n * (k * k - 1.0),
        ),
        MateKind::TmLp | MateKind::TmLm => (
            s.nt - s.n,
            s.nt * (k * k + 1.0) + s.ns * (2.0 * k) + s.n * (1.0 - k * k),
        ),
        MateKind::NT => {
            let (st, ct) = k.sin_cos();
            let nt = s.nt;
            let ns = s.n * st + s.ns * ct;
            (nt + ns, nt - ns)
        }
        MateKind::NN => (s.lp, s.lm),
        MateKind::NSNS => {
            let nt = (s.n * k.sinh() + s.nt * k.cosh()) * sign;
            (nt + s.ns, nt - s.ns)
        }
        MateKind::NNS => {
            let nt = (s.nt * k.cosh() + s.ns * k.sinh()) * (-sign);
            (nt + s.n, nt - s.n)
        }
        MateKind::NSN => (s.nt + s.n, s.nt - s.n),
    };
    if kind.designates_lminus() {
        (down, up)
    } else {
        (up, down)
    }
}

/// The mate's vector that the direction identity pins to v.
fn designated_vector(kind: MateKind, lp: MinkowskiVec, lm: MinkowskiVec) -> MinkowskiVec {
    match kind {
        MateKind::LpLp | MateKind::LmLp | MateKind::TpLp | MateKind::TmLp => lp,
        MateKind::LpLm | MateKind::LmLm | MateKind::TpLm | MateKind::TmLm => lm,
        MateKind::NT => (lp + lm) * 0.5,
        MateKind::NSNS | MateKind::NNS => (lp - lm) * 0.5,
        MateKind::NN | MateKind::NSN => lp.wedge(lm) * -0.5,
    }
}

/// Build the partner path `gamma + lambda v` with the kind's closed-form
/// frames. The condition residual must stay within [`tol::MATE_CONDITION`]
/// on the path grid; the constructed path is validated against the pair
/// constraints and the tangency condition before it is returned.
pub fn construct_mate(
    path: &FramedCurvePath,
    q: &CurvatureQuintuple,
    spec: &MateSpec,
) -> Result<FramedCurvePath> {
    let n = path.len();
    let residual = condition_residual(q, spec, n)?;
    if residual.sup() > tol::MATE_CONDITION {
        return Err(Error::ConditionViolated {
            residual: residual.sup(),
            t: residual.argmax_t(),
            tol: tol::MATE_CONDITION,
        });
    }

    let mut gamma = Vec::with_capacity(n);
    let mut lplus = Vec::with_capacity(n);
    let mut lminus = Vec::with_capacity(n);
    let mut normal = Vec::with_capacity(n);
    for i in 0..n {
        let t = path.t(i);
        let s = SourceNode::of(path, i);
        let lambda = spec.lambda.eval(t)?;
        let (lp, lm) = mate_pair(spec.kind, &s, spec.aux_value(t)?, spec.sign.value());
        gamma.push(path.gammas()[i] + direction_vector(spec.kind, &s) * lambda);
        normal.push(lp.wedge(lm) * -0.5);
        lplus.push(lp);
        lminus.push(lm);
    }
    let mate = FramedCurvePath::from_parts(path.interval(), gamma, lplus, lminus, normal)?;
    mate.validate(tol::CONSTRAINT.max(10.0 * path.delta4_drift()), tol::TANGENCY)?;
    Ok(mate)
}

fn reflect5([k1, k2, k3, alpha, beta]: [f64; 5]) -> [f64; 5] {
    [-k1, -k3, -k2, beta, alpha]
}

fn from_bar_form(k1: f64, kt: f64, ks: f64, a: f64, b: f64) -> [f64; 5] {
    [
        k1,
        0.5 * (kt + ks),
        0.5 * (kt - ks),
        0.5 * (a + b),
        0.5 * (a - b),
    ]
}

/// The mate's curvature quintuple from the per-kind closed forms, sampled on
/// `n` nodes. Statements in `(k1, kT, kS, a, b)` form are converted back to
/// the quintuple; the `*Lm` kinds are the frame reflections of their `*Lp`
/// partners.
pub fn mate_curvature_formula(
    q: &CurvatureQuintuple,
    spec: &MateSpec,
    n: usize,
) -> Result<CurvatureQuintuple> {
    let iv = q.interval();
    let mut cols: [Vec<f64>; 5] = Default::default();
    for c in cols.iter_mut() {
        c.reserve(n);
    }
    for i in 0..n {
        let t = iv.node(i, n);
        let [k1, k2, k3, alpha, beta] = q.eval(t)?;
        let (kt, ks) = (k2 + k3, k2 - k3);
        let (a, b) = (alpha + beta, alpha - beta);
        let lambda = spec.lambda.eval(t)?;
        let dlambda = spec.lambda.derivative(t)?;
        let k = spec.aux_value(t)?;
        let dk = spec.aux_derivative(t)?;
        let sign = spec.sign.value();

        let bar = match spec.kind {
            MateKind::LpLp | MateKind::LpLm => {
                let base = [
                    k1 - 2.0 * k3 * k,
                    dk + k1 * k + k2 - k3 * k * k,
                    k3,
                    alpha + dlambda + lambda * k1 - beta * k * k,
                    beta,
                ];
                if spec.kind == MateKind::LpLm {
                    reflect5(base)
                } else {
                    base
                }
            }
            MateKind::LmLp | MateKind::LmLm => {
                let base = [
                    -k1 - 2.0 * k * k2,
                    -dk + k * k1 + k * k * k2 - k3,
                    -k2,
                    beta + dlambda - lambda * k1 - alpha * k * k,
                    alpha,
                ];
                if spec.kind == MateKind::LmLm {
                    reflect5(base)
                } else {
                    base
                }
            }
            MateKind::TpLp | MateKind::TpLm => {
                let half_k2 = 0.5 * k * k;
                let base = from_bar_form(
                    k * k1 + kt + k * ks,
                    (half_k2 - 1.0) * k1 + k * kt + half_k2 * ks + dk,
                    half_k2 * k1 + k * kt + (half_k2 + 1.0) * ks + dk,
                    dlambda + lambda * kt - half_k2 * a + a,
                    dlambda + lambda * kt - half_k2 * a,
                );
                if spec.kind == MateKind::TpLm {
                    reflect5(base)
                } else {
                    base
                }
            }
            MateKind::TmLp | MateKind::TmLm => {
                let half_k2 = 0.5 * k * k;
                let base = from_bar_form(
                    -k * k1 - kt + k * ks,
                    -(half_k2 - 1.0) * k1 - k * kt + half_k2 * ks + dk,
                    -half_k2 * k1 - k * kt + (half_k2 + 1.0) * ks + dk,
                    dlambda - lambda * kt - half_k2 * a + a,
                    dlambda - lambda * kt - half_k2 * a,
                );
                if spec.kind == MateKind::TmLm {
                    reflect5(base)
                } else {
                    base
                }
            }
            MateKind::NT => {
                let (st, ct) = k.sin_cos();
                from_bar_form(
                    k1 * ct + kt * st,
                    kt * ct - k1 * st,
                    ks - dk,
                    a + dlambda,
                    lambda * kt * st + (b + lambda * k1) * ct,
                )
            }
            MateKind::NN => [k1, k2, k3, alpha + lambda * k2, beta + lambda * k3],
            MateKind::NSNS => {
                let (sh, ch) = (k.sinh(), k.cosh());
                from_bar_form(
                    sign * (k1 * ch + ks * sh),
                    dk + kt,
                    sign * (k1 * sh + ks * ch),
                    sign * (lambda * ks * sh + (a + lambda * k1) * ch),
                    b + dlambda,
                )
            }
            MateKind::NNS => {
                let (sh, ch) = (k.sinh(), k.cosh());
                from_bar_form(
                    -sign * (kt * ch - ks * sh),
                    -(dk + k1),
                    sign * (kt * sh - ks * ch),
                    -sign * ((a + lambda * kt) * ch - (b + lambda * ks) * sh),
                    dlambda,
                )
            }
            MateKind::NSN => from_bar_form(kt, -k1, ks, a + lambda * k1, -lambda * ks),
        };
        for (c, v) in cols.iter_mut().zip(bar) {
            c.push(v);
        }
    }
    let [c1, c2, c3, ca, cb] = cols;
    CurvatureQuintuple::new(
        ScalarField::grid(iv, c1)?,
        ScalarField::grid(iv, c2)?,
        ScalarField::grid(iv, c3)?,
        ScalarField::grid(iv, ca)?,
        ScalarField::grid(iv, cb)?,
    )
}

/// Numerical cross-check of one mate construction.
#[derive(Debug, Clone)]
pub struct MateReport {
    pub kind: MateKind,
    /// Sup of the existence condition on the grid, and where it peaks.
    pub condition_sup: f64,
    pub condition_argmax_t: f64,
    /// Pair-constraint drift of the constructed mate.
    pub delta4_drift: f64,
    /// Deviation between the mate's stored normal and its wedge.
    pub wedge_defect: f64,
    /// n-component of the mate's numerical velocity.
    pub tangency_residual: f64,
    /// Sup-norm deviation of the designated mate vector from (sign times)
    /// the source direction, and the sign that matched.
    pub direction_deviation: f64,
    pub direction_sign: i8,
    /// Per-field sup-norm gap between the closed-form mate curvature and the
    /// curvature extracted numerically from the constructed path.
    pub curvature_discrepancy: [f64; 5],
    pub pass: bool,
}

impl MateReport {
    pub fn max_curvature_discrepancy(&self) -> f64 {
        self.curvature_discrepancy
            .iter()
            .fold(0.0_f64, |acc, v| acc.max(*v))
    }
}

/// Build the mate, extract its curvature numerically, compare with the
/// closed-form table field by field, and check the direction identity.
pub fn verify_mate(
    path: &FramedCurvePath,
    q: &CurvatureQuintuple,
    spec: &MateSpec,
) -> Result<MateReport> {
    let n = path.len();
    let residual = condition_residual(q, spec, n)?;
    let mate = construct_mate(path, q, spec)?;
    let extracted = extract_curvature(&mate)?;
    let formula = mate_curvature_formula(q, spec, n)?;

    let mut discrepancy = [0.0_f64; 5];
    for i in 0..n {
        let t = path.t(i);
        let got = extracted.eval(t)?;
        let want = formula.eval(t)?;
        for k in 0..5 {
            discrepancy[k] = discrepancy[k].max((got[k] - want[k]).abs());
        }
    }

    let mut dev_plus: f64 = 0.0;
    let mut dev_minus: f64 = 0.0;
    for i in 0..n {
        let s = SourceNode::of(path, i);
        let v = direction_vector(spec.kind, &s);
        let w = designated_vector(spec.kind, mate.lplus()[i], mate.lminus()[i]);
        dev_plus = dev_plus.max((w - v).max_abs());
        dev_minus = dev_minus.max((w + v).max_abs());
    }
    let (direction_deviation, direction_sign) = if dev_plus <= dev_minus {
        (dev_plus, 1)
    } else {
        (dev_minus, -1)
    };

    let report = MateReport {
        kind: spec.kind,
        condition_sup: residual.sup(),
        condition_argmax_t: residual.argmax_t(),
        delta4_drift: mate.delta4_drift(),
        wedge_defect: mate.wedge_defect(),
        tangency_residual: mate.tangency_residual(),
        direction_deviation,
        direction_sign,
        curvature_discrepancy: discrepancy,
        pass: false,
    };
    let pass = report.condition_sup <= tol::MATE_CONDITION
        && report.delta4_drift <= tol::CONSTRAINT.max(10.0 * path.delta4_drift())
        && report.tangency_residual <= tol::TANGENCY
        && report.direction_deviation <= tol::CONSTRAINT
        && report.max_curvature_discrepancy() <= 1e-4;
    Ok(MateReport { pass, ..report })
}

/// Distinguished mate constructions with canonical coefficient choices:
/// evolute-like mates along each lightlike direction and the pseudo-circular
/// involute along the spacelike normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialMate {
    /// `k = 1, lambda = beta/k3`; the mate's lower null vector closes onto
    /// `2 (nT + n)`. Needs `k3` bounded away from zero.
    EvoluteAlongLplus,
    /// `k = k3, lambda = beta`; defined whenever `beta` is not identically
    /// zero.
    BetaMateAlongLplus,
    /// `k = 1, lambda = alpha/k2`. Needs `k2` bounded away from zero.
    EvoluteAlongLminus,
    /// `k = k2, lambda = alpha`; defined whenever `alpha` is not identically
    /// zero.
    AlphaMateAlongLminus,
    /// Direction `nT + n` with the chosen constant `k`; needs
    /// `k1 + k2 - k3` bounded away from zero.
    EvoluteAlongTildePlus(TildeChoice),
    /// Direction `nT - n`; needs `k1 - k2 + k3` bounded away from zero.
    EvoluteAlongTildeMinus(TildeChoice),
    /// The always-defined involute `gamma - (int b) nS`; `base` fixes the
    /// integration constant (left endpoint when `None`).
    PseudoCircularInvolute { base: Option<f64> },
}

/// Constant `k` used by the tilde-direction evolutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TildeChoice {
    Zero,
    PlusOne,
    MinusOne,
}

impl TildeChoice {
    fn value(&self) -> f64 {
        match self {
            TildeChoice::Zero => 0.0,
            TildeChoice::PlusOne => 1.0,
            TildeChoice::MinusOne => -1.0,
        }
    }
}

/// Build one of the distinguished mates of a path. Returns the constructed
/// partner together with the spec it used, so it can be re-verified or
/// exported like any other mate.
pub fn special_mate(
    path: &FramedCurvePath,
    q: &CurvatureQuintuple,
    which: SpecialMate,
) -> Result<(FramedCurvePath, MateSpec)> {
    let iv = q.interval();
    let n = path.len();
    let sample = |f: &dyn Fn(f64) -> Result<f64>| -> Result<ScalarField> {
        let values = (0..n).map(|i| f(iv.node(i, n))).collect::<Result<Vec<_>>>()?;
        ScalarField::grid(iv, values)
    };
    let spec = match which {
        SpecialMate::EvoluteAlongLplus => {
            let k = ScalarField::constant(1.0, iv);
            let lambda = solve_lambda(q, MateKind::LpLp, Some(&k), n)?;
            MateSpec::new(MateKind::LpLp, lambda, Some(k), SignBranch::Plus)?
        }
        SpecialMate::BetaMateAlongLplus => {
            let k = sample(&|t| q.k3.eval(t))?;
            let lambda = sample(&|t| q.beta.eval(t))?;
            MateSpec::new(MateKind::LpLp, lambda, Some(k), SignBranch::Plus)?
        }
        SpecialMate::EvoluteAlongLminus => {
            let k = ScalarField::constant(1.0, iv);
            let lambda = solve_lambda(q, MateKind::LmLp, Some(&k), n)?;
            MateSpec::new(MateKind::LmLp, lambda, Some(k), SignBranch::Plus)?
        }
        SpecialMate::AlphaMateAlongLminus => {
            let k = sample(&|t| q.k2.eval(t))?;
            let lambda = sample(&|t| q.alpha.eval(t))?;
            MateSpec::new(MateKind::LmLp, lambda, Some(k), SignBranch::Plus)?
        }
        SpecialMate::EvoluteAlongTildePlus(choice) => {
            let k = ScalarField::constant(choice.value(), iv);
            let lambda = solve_lambda(q, MateKind::TpLp, Some(&k), n)?;
            MateSpec::new(MateKind::TpLp, lambda, Some(k), SignBranch::Plus)?
        }
        SpecialMate::EvoluteAlongTildeMinus(choice) => {
            let k = ScalarField::constant(choice.value(), iv);
            let lambda = solve_lambda(q, MateKind::TmLp, Some(&k), n)?;
            MateSpec::new(MateKind::TmLp, lambda, Some(k), SignBranch::Plus)?
        }
        SpecialMate::PseudoCircularInvolute { base } => {
            let lambda = nsn_lambda(q, base.unwrap_or(iv.t0), n)?;
            MateSpec::new(MateKind::NSN, lambda, None, SignBranch::Plus)?
        }
    };
    let mate = construct_mate(path, q, &spec)?;
    Ok((mate, spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{reconstruct, InitialFrame, ReconstructOptions};
    use crate::gallery;

    fn iv01() -> Interval {
        Interval::new(0.0, 1.0).unwrap()
    }

    fn constant_quintuple(values: [f64; 5], interval: Interval) -> CurvatureQuintuple {
        let [k1, k2, k3, a, b] = values;
        CurvatureQuintuple::new(
            ScalarField::constant(k1, interval),
            ScalarField::constant(k2, interval),
            ScalarField::constant(k3, interval),
            ScalarField::constant(a, interval),
            ScalarField::constant(b, interval),
        )
        .unwrap()
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in MateKind::ALL {
            assert_eq!(kind.name().parse::<MateKind>().unwrap(), kind);
        }
        assert!("bogus".parse::<MateKind>().is_err());
    }

    #[test]
    fn lightlike_mate_formula_on_constants() {
        // q = (0, -1/2, 1/2, 1, 1/2) with k = 1: the closed forms give
        // k1 -> -1, k2 -> -1, k3 -> 1/2.
        let q = constant_quintuple([0.0, -0.5, 0.5, 1.0, 0.5], iv01());
        let one = ScalarField::constant(1.0, iv01());
        let lambda = solve_lambda(&q, MateKind::LpLp, Some(&one), 101).unwrap();
        let spec = MateSpec::new(MateKind::LpLp, lambda, Some(one), SignBranch::Plus).unwrap();
        let bar = mate_curvature_formula(&q, &spec, 101).unwrap();
        let got = bar.eval(0.5).unwrap();
        assert!((got[0] + 1.0).abs() < 1e-9);
        assert!((got[1] + 1.0).abs() < 1e-9);
        assert!((got[2] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn trivial_line_translates_along_lplus() {
        let q = constant_quintuple([0.0, 0.0, 0.0, 1.0, 0.0], iv01());
        let path = reconstruct(&q, &InitialFrame::canonical(), 101, &Default::default()).unwrap();
        let zero = ScalarField::constant(0.0, iv01());
        let lambda = ScalarField::constant(1.0, iv01());
        let spec = MateSpec::new(MateKind::LpLp, lambda, Some(zero), SignBranch::Plus).unwrap();
        let mate = construct_mate(&path, &q, &spec).unwrap();
        for i in 0..mate.len() {
            let want = path.gammas()[i] + path.lplus()[i];
            assert!((mate.gammas()[i] - want).max_abs() < 1e-12);
            assert!((mate.lplus()[i] - path.lplus()[i]).max_abs() < 1e-12);
            assert!((mate.lminus()[i] - path.lminus()[i]).max_abs() < 1e-12);
        }
        let back = extract_curvature(&mate).unwrap();
        let got = back.eval(0.5).unwrap();
        let want = [0.0, 0.0, 0.0, 1.0, 0.0];
        for k in 0..5 {
            assert!((got[k] - want[k]).abs() < 1e-9, "{got:?}");
        }
    }

    #[test]
    fn nn_mate_is_a_parallel_curve() {
        let e = gallery::example_trig(2.0, 1.0, 1, 2).unwrap();
        let q = &e.quintuple;
        let path = reconstruct(q, &e.initial, 801, &Default::default()).unwrap();
        let lambda = ScalarField::constant(1.0, e.interval());
        let spec = MateSpec::new(MateKind::NN, lambda, None, SignBranch::Plus).unwrap();
        let mate = construct_mate(&path, q, &spec).unwrap();
        for i in 0..mate.len() {
            let shift = mate.gammas()[i] - path.gammas()[i];
            assert!((shift - path.normals()[i]).max_abs() < 1e-12);
            // Parallel-curve property: the offset has constant pseudo-norm.
            assert!((shift.pseudo_dot(shift) - 1.0).abs() < 1e-10);
            assert!((mate.lplus()[i] - path.lplus()[i]).max_abs() < 1e-12);
        }
        // Curvature shift (k1, k2, k3, alpha + l k2, beta + l k3),
        // compared on formula grid nodes where interpolation is exact.
        let bar = mate_curvature_formula(q, &spec, 801).unwrap();
        for i in [0, 137, 400, 800] {
            let t = e.interval().node(i, 801);
            let base = q.eval(t).unwrap();
            let got = bar.eval(t).unwrap();
            assert!((got[3] - (base[3] + base[1])).abs() < 1e-12);
            assert!((got[4] - (base[4] + base[2])).abs() < 1e-12);
        }
    }

    #[test]
    fn nn_requires_constant_lambda() {
        let lambda = ScalarField::parse("sin(t)", iv01()).unwrap();
        assert!(matches!(
            MateSpec::new(MateKind::NN, lambda, None, SignBranch::Plus),
            Err(Error::MateSpec(_))
        ));
    }

    #[test]
    fn identically_zero_lambda_is_rejected() {
        let lambda = ScalarField::constant(0.0, iv01());
        assert!(matches!(
            MateSpec::new(MateKind::NN, lambda, None, SignBranch::Plus),
            Err(Error::MateSpec(_))
        ));
    }

    #[test]
    fn solve_lambda_reports_vanishing_coefficient() {
        // k3 = 0 with beta not identically zero leaves the LpLp condition
        // unsolvable for lambda.
        let q = constant_quintuple([0.0, -0.5, 0.0, 1.0, 1.0], iv01());
        let one = ScalarField::constant(1.0, iv01());
        assert!(matches!(
            solve_lambda(&q, MateKind::LpLp, Some(&one), 101),
            Err(Error::UnsolvableOnGrid { .. })
        ));
    }

    #[test]
    fn condition_violation_blocks_construction() {
        let e = gallery::example_trig(2.0, 1.0, 1, 2).unwrap();
        let q = &e.quintuple;
        let path = reconstruct(q, &e.initial, 501, &Default::default()).unwrap();
        // lambda = 1, k = 0 leaves residual -lambda k3 = -1/2.
        let zero = ScalarField::constant(0.0, e.interval());
        let lambda = ScalarField::constant(1.0, e.interval());
        let spec = MateSpec::new(MateKind::LpLp, lambda, Some(zero), SignBranch::Plus).unwrap();
        assert!(matches!(
            construct_mate(&path, q, &spec),
            Err(Error::ConditionViolated { .. })
        ));
    }

    #[test]
    fn lm_variants_swap_the_frame_pair() {
        let e = gallery::example_trig(2.0, 1.0, 1, 2).unwrap();
        let q = &e.quintuple;
        let path = reconstruct(q, &e.initial, 501, &Default::default()).unwrap();
        let one = ScalarField::constant(1.0, e.interval());
        for (lp_kind, lm_kind) in [
            (MateKind::LpLp, MateKind::LpLm),
            (MateKind::LmLp, MateKind::LmLm),
            (MateKind::TpLp, MateKind::TpLm),
            (MateKind::TmLp, MateKind::TmLm),
        ] {
            let lambda = solve_lambda(q, lp_kind, Some(&one), 501).unwrap();
            let spec_p =
                MateSpec::new(lp_kind, lambda.clone(), Some(one.clone()), SignBranch::Plus)
                    .unwrap();
            let spec_m =
                MateSpec::new(lm_kind, lambda, Some(one.clone()), SignBranch::Plus).unwrap();
            let mate_p = construct_mate(&path, q, &spec_p).unwrap();
            let mate_m = construct_mate(&path, q, &spec_m).unwrap();
            for i in 0..mate_p.len() {
                assert!((mate_p.lplus()[i] - mate_m.lminus()[i]).max_abs() < 1e-10);
                assert!((mate_p.lminus()[i] - mate_m.lplus()[i]).max_abs() < 1e-10);
                assert!((mate_p.gammas()[i] - mate_m.gammas()[i]).max_abs() < 1e-10);
            }
        }
    }

    #[test]
    fn evolute_along_lplus_closes_onto_the_tilde_direction() {
        let e = gallery::example_trig(2.0, 1.0, 1, 2).unwrap();
        let q = &e.quintuple;
        let path = reconstruct(q, &e.initial, 801, &Default::default()).unwrap();
        let (mate, spec) = special_mate(&path, q, SpecialMate::EvoluteAlongLplus).unwrap();
        // lambda = beta/k3 = (p - q)/n sin(mt) = sin 2t.
        for i in 0..path.len() {
            let t = path.t(i);
            assert!(
                (spec.lambda.eval(t).unwrap() - (2.0 * t).sin()).abs() < 1e-10,
                "lambda at {t}"
            );
            // Mate lower vector = l+ + l- + 2n = 2 (nT + n).
            let s = SourceNode::of(&path, i);
            let want = (s.nt + s.n) * 2.0;
            assert!((mate.lminus()[i] - want).max_abs() < 1e-10);
        }
    }

    #[test]
    fn pseudo_circular_involute_shifts_along_the_spacelike_normal() {
        let e = gallery::example_trig(2.0, 1.0, 1, 2).unwrap();
        let q = &e.quintuple;
        let path = reconstruct(q, &e.initial, 801, &Default::default()).unwrap();
        let base = std::f64::consts::FRAC_PI_4;
        let (mate, _spec) =
            special_mate(&path, q, SpecialMate::PseudoCircularInvolute { base: Some(base) })
                .unwrap();
        for i in 0..path.len() {
            let t = path.t(i);
            let s = SourceNode::of(&path, i);
            let want = path.gammas()[i] + s.ns * (0.5 * (2.0 * t).cos());
            assert!((mate.gammas()[i] - want).max_abs() < 1e-9, "node {i}");
        }
    }

    #[test]
    fn nsn_permutes_the_curvature() {
        // The involute's curvature in (k1, kT, kS) form is (kT, -k1, kS)
        // for the frame assignment used here, checked against extraction.
        let e = gallery::example_trig(2.0, 1.0, 1, 2).unwrap();
        let q = &e.quintuple;
        let path = reconstruct(q, &e.initial, 2001, &Default::default()).unwrap();
        let (mate, spec) =
            special_mate(&path, q, SpecialMate::PseudoCircularInvolute { base: None }).unwrap();
        let bar = extract_curvature(&mate).unwrap();
        for i in 0..path.len() {
            let t = path.t(i);
            let kt = q.kappa_t(t).unwrap();
            let ks = q.kappa_s(t).unwrap();
            let k1 = q.k1.eval(t).unwrap();
            assert!((bar.k1.eval(t).unwrap() - kt).abs() < 1e-7);
            assert!((bar.kappa_t(t).unwrap() + k1).abs() < 1e-7);
            assert!((bar.kappa_s(t).unwrap() - ks).abs() < 1e-7);
        }
        let _ = spec;
    }

    #[test]
    fn tilde_evolute_with_vanishing_denominator_errors() {
        // k1 + kS = 0 identically excludes the tilde-plus evolute.
        let q = constant_quintuple([0.5, -0.75, -0.25, 1.0, 0.5], iv01());
        // k1 + k2 - k3 = 0.5 - 0.75 + 0.25 = 0.
        let e = reconstruct(&q, &InitialFrame::canonical(), 101, &ReconstructOptions::default())
            .unwrap();
        assert!(matches!(
            special_mate(&e, &q, SpecialMate::EvoluteAlongTildePlus(TildeChoice::Zero)),
            Err(Error::UnsolvableOnGrid { .. })
        ));
    }
}
