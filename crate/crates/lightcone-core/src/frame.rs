//! Pointwise frame objects: null pairs, the derived pseudo-orthonormal
//! triple, tilde null vectors, and the contact point map between the two
//! double-fibration spaces.

use crate::error::{Error, Result};
use crate::minkowski::MinkowskiVec;
use crate::tol;

/// A pair of null vectors with `<l+, l-> = -2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullPair {
    pub lplus: MinkowskiVec,
    pub lminus: MinkowskiVec,
}

impl NullPair {
    /// Checked constructor; verifies both null constraints and the pairing.
    pub fn new(lplus: MinkowskiVec, lminus: MinkowskiVec) -> Result<Self> {
        let pair = Self::new_unchecked(lplus, lminus);
        pair.validate(tol::CONSTRAINT)?;
        Ok(pair)
    }

    /// Fast path for inner loops that already maintain the constraints.
    pub fn new_unchecked(lplus: MinkowskiVec, lminus: MinkowskiVec) -> Self {
        Self { lplus, lminus }
    }

    /// The canonical pair ((1,1,0), (1,-1,0)).
    pub fn canonical() -> Self {
        Self::new_unchecked(
            MinkowskiVec::new(1.0, 1.0, 0.0),
            MinkowskiVec::new(1.0, -1.0, 0.0),
        )
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let checks: [(&'static str, f64); 3] = [
            ("<l+, l+>", self.lplus.pseudo_dot(self.lplus)),
            ("<l-, l->", self.lminus.pseudo_dot(self.lminus)),
            ("<l+, l-> + 2", self.lplus.pseudo_dot(self.lminus) + 2.0),
        ];
        for (what, value) in checks {
            if !value.is_finite() || value.abs() > tol {
                return Err(Error::Constraint { what, value, tol });
            }
        }
        Ok(())
    }

    /// Largest constraint defect; zero for an exact pair.
    pub fn defect(&self) -> f64 {
        self.lplus
            .pseudo_dot(self.lplus)
            .abs()
            .max(self.lminus.pseudo_dot(self.lminus).abs())
            .max((self.lplus.pseudo_dot(self.lminus) + 2.0).abs())
    }

    /// The unit spacelike vector `-1/2 l+ ^ l-` completing the lightcone frame.
    pub fn normal(&self) -> MinkowskiVec {
        self.lplus.wedge(self.lminus) * -0.5
    }
}

/// A pseudo-orthonormal triple (timelike, spacelike, spacelike) with
/// `n = nT ^ nS`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoFrame {
    pub nt: MinkowskiVec,
    pub ns: MinkowskiVec,
    pub n: MinkowskiVec,
}

impl OrthoFrame {
    pub fn new(nt: MinkowskiVec, ns: MinkowskiVec, n: MinkowskiVec) -> Result<Self> {
        let frame = Self::new_unchecked(nt, ns, n);
        frame.validate(tol::CONSTRAINT)?;
        Ok(frame)
    }

    pub fn new_unchecked(nt: MinkowskiVec, ns: MinkowskiVec, n: MinkowskiVec) -> Self {
        Self { nt, ns, n }
    }

    pub fn canonical() -> Self {
        Self::new_unchecked(MinkowskiVec::E1, MinkowskiVec::E2, MinkowskiVec::E3)
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let wedge_defect = (self.nt.wedge(self.ns) - self.n).max_abs();
        let checks: [(&'static str, f64); 7] = [
            ("<nT, nT> + 1", self.nt.pseudo_dot(self.nt) + 1.0),
            ("<nS, nS> - 1", self.ns.pseudo_dot(self.ns) - 1.0),
            ("<n, n> - 1", self.n.pseudo_dot(self.n) - 1.0),
            ("<nT, nS>", self.nt.pseudo_dot(self.ns)),
            ("<nT, n>", self.nt.pseudo_dot(self.n)),
            ("<nS, n>", self.ns.pseudo_dot(self.n)),
            ("nT ^ nS - n", wedge_defect),
        ];
        for (what, value) in checks {
            if !value.is_finite() || value.abs() > tol {
                return Err(Error::Constraint { what, value, tol });
            }
        }
        Ok(())
    }
}

/// Linear change from a null pair to its pseudo-orthonormal triple:
/// `nT = (l+ + l-)/2`, `nS = (l+ - l-)/2`, `n = -1/2 l+ ^ l-`.
pub fn null_pair_to_ortho(pair: &NullPair) -> Result<OrthoFrame> {
    pair.validate(tol::CONSTRAINT)?;
    let frame = null_pair_to_ortho_unchecked(pair);
    frame.validate(tol::CONSTRAINT)?;
    Ok(frame)
}

pub fn null_pair_to_ortho_unchecked(pair: &NullPair) -> OrthoFrame {
    OrthoFrame::new_unchecked(
        (pair.lplus + pair.lminus) * 0.5,
        (pair.lplus - pair.lminus) * 0.5,
        pair.normal(),
    )
}

/// Inverse change of frame: `l+ = nT + nS`, `l- = nT - nS`.
pub fn ortho_to_null_pair(frame: &OrthoFrame) -> Result<NullPair> {
    frame.validate(tol::CONSTRAINT)?;
    Ok(ortho_to_null_pair_unchecked(frame))
}

pub fn ortho_to_null_pair_unchecked(frame: &OrthoFrame) -> NullPair {
    NullPair::new_unchecked(frame.nt + frame.ns, frame.nt - frame.ns)
}

/// The second pair of null vectors carried by the triple:
/// `(nT + n, nT - n)`, again a point of the null-pair space.
pub fn tilde_null(frame: &OrthoFrame) -> (MinkowskiVec, MinkowskiVec) {
    (frame.nt + frame.n, frame.nt - frame.n)
}

/// Point map between the two fibration spaces:
/// `(v, w) -> ((v+w)/2, (v-w)/2)` sends null pairs to orthogonal
/// (timelike, spacelike) unit pairs.
pub fn phi_map(pair: &NullPair) -> (MinkowskiVec, MinkowskiVec) {
    (
        (pair.lplus + pair.lminus) * 0.5,
        (pair.lplus - pair.lminus) * 0.5,
    )
}
