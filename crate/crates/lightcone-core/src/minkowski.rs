//! Value-level Lorentzian linear algebra on R^3_1.
//!
//! The metric is `<x, y> = -x1*y1 + x2*y2 + x3*y3`; the first coordinate is
//! the timelike axis. All operations are pure and allocation-free.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::tol;

/// A vector in Lorentz-Minkowski 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MinkowskiVec {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

/// Causal character of a vector under the pseudo-scalar product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalType {
    Spacelike,
    Lightlike,
    Timelike,
    /// The zero vector, which the sign classification does not cover.
    Zero,
}

impl fmt::Display for CausalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CausalType::Spacelike => "spacelike",
            CausalType::Lightlike => "lightlike",
            CausalType::Timelike => "timelike",
            CausalType::Zero => "zero",
        };
        f.write_str(s)
    }
}

impl MinkowskiVec {
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0);
    /// Unit vector along the timelike axis.
    pub const E1: Self = Self::new(1.0, 0.0, 0.0);
    pub const E2: Self = Self::new(0.0, 1.0, 0.0);
    pub const E3: Self = Self::new(0.0, 0.0, 1.0);

    /// Pseudo-scalar product `-x1*y1 + x2*y2 + x3*y3`.
    pub fn pseudo_dot(self, other: Self) -> f64 {
        -self.x1 * other.x1 + self.x2 * other.x2 + self.x3 * other.x3
    }

    /// Lorentzian cross product, defined through `<w, x ^ y> = det(w, x, y)`.
    ///
    /// Expanding the determinant along its first row `(-e1, e2, e3)` gives a
    /// vector pseudo-orthogonal to both arguments.
    pub fn wedge(self, other: Self) -> Self {
        Self {
            x1: -(self.x2 * other.x3 - self.x3 * other.x2),
            x2: -(self.x1 * other.x3 - self.x3 * other.x1),
            x3: self.x1 * other.x2 - self.x2 * other.x1,
        }
    }

    /// `sqrt(|<x, x>|)`.
    pub fn pseudo_norm(self) -> f64 {
        self.pseudo_dot(self).abs().sqrt()
    }

    /// Euclidean sup-norm of the components; used for drift and comparison
    /// metrics, not for the geometry itself.
    pub fn max_abs(self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// Classify by the sign of the self-product, treating `|<x,x>| <= tol` as
    /// lightlike and vectors with all components `<= tol` in magnitude as zero.
    pub fn causal_type(self, tol: f64) -> CausalType {
        if self.max_abs() <= tol {
            return CausalType::Zero;
        }
        let s = self.pseudo_dot(self);
        if s.abs() <= tol {
            CausalType::Lightlike
        } else if s > 0.0 {
            CausalType::Spacelike
        } else {
            CausalType::Timelike
        }
    }

    /// Scale a lightlike vector so that its first component is 1, landing on
    /// the lightcone circle.
    pub fn normalize_lightlike(self) -> Result<Self> {
        self.normalize_lightlike_tol(tol::CLASSIFY)
    }

    pub fn normalize_lightlike_tol(self, tol: f64) -> Result<Self> {
        let s = self.pseudo_dot(self);
        let scale = self.max_abs().max(1.0);
        if s.abs() > tol * scale * scale {
            return Err(Error::NotLightlike {
                self_product: s,
                tol,
            });
        }
        if self.x1.abs() <= tol * scale {
            return Err(Error::DegenerateLightlike { x1: self.x1 });
        }
        Ok(Self::new(1.0, self.x2 / self.x1, self.x3 / self.x1))
    }
}

impl Add for MinkowskiVec {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x1 + rhs.x1, self.x2 + rhs.x2, self.x3 + rhs.x3)
    }
}

impl Sub for MinkowskiVec {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x1 - rhs.x1, self.x2 - rhs.x2, self.x3 - rhs.x3)
    }
}

impl Neg for MinkowskiVec {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x1, -self.x2, -self.x3)
    }
}

impl Mul<f64> for MinkowskiVec {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

impl Mul<MinkowskiVec> for f64 {
    type Output = MinkowskiVec;
    fn mul(self, v: MinkowskiVec) -> MinkowskiVec {
        v * self
    }
}

impl Div<f64> for MinkowskiVec {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.x1 / s, self.x2 / s, self.x3 / s)
    }
}

impl fmt::Display for MinkowskiVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x1, self.x2, self.x3)
    }
}

/// 3x3 determinant of three row vectors; the oracle for the wedge identity.
pub fn det3(w: MinkowskiVec, x: MinkowskiVec, y: MinkowskiVec) -> f64 {
    w.x1 * (x.x2 * y.x3 - x.x3 * y.x2) - w.x2 * (x.x1 * y.x3 - x.x3 * y.x1)
        + w.x3 * (x.x1 * y.x2 - x.x2 * y.x1)
}

/// An element of the Lorentz group acting on `MinkowskiVec`, stored as a plain
/// 3x3 matrix. Only the compositions the library needs are exposed: rotations
/// about the timelike axis, boosts in the (x1, x2) plane, and frame-change
/// matrices assembled from pseudo-orthonormal triples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzTransform {
    /// Row-major entries.
    pub m: [[f64; 3]; 3],
}

impl LorentzTransform {
    pub const IDENTITY: Self = Self {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    /// Euclidean rotation by `phi` in the (x2, x3) plane; fixes the timelike axis.
    pub fn rotation(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Self {
            m: [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]],
        }
    }

    /// Hyperbolic boost by rapidity `chi` in the (x1, x2) plane.
    pub fn boost(chi: f64) -> Self {
        let c = chi.cosh();
        let s = chi.sinh();
        Self {
            m: [[c, s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(c1: MinkowskiVec, c2: MinkowskiVec, c3: MinkowskiVec) -> Self {
        Self {
            m: [
                [c1.x1, c2.x1, c3.x1],
                [c1.x2, c2.x2, c3.x2],
                [c1.x3, c2.x3, c3.x3],
            ],
        }
    }

    pub fn apply(&self, v: MinkowskiVec) -> MinkowskiVec {
        let m = &self.m;
        MinkowskiVec::new(
            m[0][0] * v.x1 + m[0][1] * v.x2 + m[0][2] * v.x3,
            m[1][0] * v.x1 + m[1][1] * v.x2 + m[1][2] * v.x3,
            m[2][0] * v.x1 + m[2][1] * v.x2 + m[2][2] * v.x3,
        )
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..3).map(|k| self.m[i][k] * rhs.m[k][j]).sum();
            }
        }
        Self { m }
    }

    /// Inverse of a matrix whose columns form a pseudo-orthonormal triple
    /// (timelike, spacelike, spacelike): `F^-1 = Z F^T Z` with Z = diag(-1,1,1).
    pub fn pseudo_orthonormal_inverse(&self) -> Self {
        let m = &self.m;
        // Z M^T Z negates the first row and first column of the transpose.
        Self {
            m: [
                [m[0][0], -m[1][0], -m[2][0]],
                [-m[0][1], m[1][1], m[2][1]],
                [-m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}
