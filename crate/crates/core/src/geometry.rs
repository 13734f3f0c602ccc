//! Atom-pair configurations relative to a mirror in the plane `z = 0`.
//!
//! Both atoms share the proper acceleration `a` along `x`, parallel to the
//! plate and perpendicular to their constant separation:
//!
//! - [`Alignment::Perpendicular`]: atoms on the `z` axis at `z` and `z + L`;
//!   the image of the far atom sits at distance `ℛ = L + 2z` from the near one.
//! - [`Alignment::Parallel`]: atoms at height `z`, a distance `D` apart along
//!   `y`; the image distance is `R = √(D² + 4z²)`.
//!
//! World lines are never sampled: every formula depends only on
//! `(alignment, separation, z, a)`.

use crate::error::{non_negative, positive, Result};
use crate::hyperbolic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Alignment {
    Perpendicular,
    Parallel,
}

/// A validated pair configuration in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PairGeometry {
    alignment: Alignment,
    separation: f64,
    z: f64,
    a: f64,
}

impl PairGeometry {
    /// `separation` must be positive. `z` may be zero (atoms touching the
    /// mirror), which is where the image and direct distances coincide.
    pub fn new(alignment: Alignment, separation: f64, z: f64, a: f64) -> Result<Self> {
        Ok(Self {
            alignment,
            separation: positive("separation", separation)?,
            z: non_negative("mirror distance z", z)?,
            a: non_negative("acceleration", a)?,
        })
    }

    pub fn perpendicular(l: f64, z: f64, a: f64) -> Result<Self> {
        Self::new(Alignment::Perpendicular, l, z, a)
    }

    pub fn parallel(d: f64, z: f64, a: f64) -> Result<Self> {
        Self::new(Alignment::Parallel, d, z, a)
    }

    #[inline]
    pub fn alignment(&self) -> Alignment {
        self.alignment
    }

    /// `L` or `D`.
    #[inline]
    pub fn separation(&self) -> f64 {
        self.separation
    }

    /// Distance of the nearer atom from the mirror.
    #[inline]
    pub fn z(&self) -> f64 {
        self.z
    }

    #[inline]
    pub fn acceleration(&self) -> f64 {
        self.a
    }

    pub fn with_acceleration(&self, a: f64) -> Result<Self> {
        Self::new(self.alignment, self.separation, self.z, a)
    }

    pub fn with_separation(&self, separation: f64) -> Result<Self> {
        Self::new(self.alignment, separation, self.z, self.a)
    }

    pub fn with_z(&self, z: f64) -> Result<Self> {
        Self::new(self.alignment, self.separation, z, self.a)
    }

    pub fn image_distances(&self) -> ImageDistances {
        image_distance(self)
    }
}

/// Direct and image distances of a configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageDistances {
    /// `L` or `D`.
    pub direct: f64,
    /// `ℛ = L + 2z` or `R = √(D² + 4z²)`.
    pub image: f64,
    /// `R̃² = D² − 4z²` for the parallel alignment. Signed; never square-rooted.
    pub rtilde_sq: Option<f64>,
}

pub fn image_distance(g: &PairGeometry) -> ImageDistances {
    let s = g.separation;
    let z = g.z;
    match g.alignment {
        Alignment::Perpendicular => ImageDistances {
            direct: s,
            image: s + 2.0 * z,
            rtilde_sq: None,
        },
        Alignment::Parallel => ImageDistances {
            direct: s,
            image: libm::hypot(s, 2.0 * z),
            rtilde_sq: Some(s * s - 4.0 * z * z),
        },
    }
}

/// Chord `(2/a)·sinh(a·Δτ/2)` spanned on a hyperbolic world line of proper
/// acceleration `a` over proper time `dtau`. Equals `dtau` at `a = 0`.
#[inline]
pub fn rindler_interval(a: f64, dtau: f64) -> f64 {
    hyperbolic::sinh_stretch(a, dtau)
}
