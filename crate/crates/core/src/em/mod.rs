//! Resonance interaction through the electromagnetic field.
//!
//! The field susceptibility along the two world lines is parametrised by two
//! tensors `f_ij(a, d, ω)` and `h_ij(a, d, ω)` per case (mirror or free
//! space, atoms stacked perpendicular or parallel to the plate). The energy
//! follows by contracting
//!
//! ```text
//! P_ij = f_ij(ω₀)·sin Θ − h_ij(ω₀)·cos Θ,   Θ = (2ω₀/a)·asinh(a·d/2)
//! ```
//!
//! with the two transition dipoles. The acceleration is along `x`; the
//! mirror is the plane `z = 0`.

mod coefficients;
mod energy;
mod tensors;

pub use coefficients::{ParCoefficients, PerpCoefficients, Slot, Table, TensorCoefficients};
pub use energy::{
    em_energy, em_energy_par, em_energy_perp, em_energy_perp_split, em_energy_with, PerpSplit,
};
pub use tensors::{
    fh_par_boundary, fh_par_boundary_with, fh_par_free, fh_par_free_with, fh_perp_boundary,
    fh_perp_boundary_with, fh_perp_free, fh_perp_free_with, p_tensor, PairSymmetry,
    SusceptibilityTensor, TensorCase,
};

use core::fmt;
use core::str::FromStr;

use crate::error::{positive, Error, Result};
use crate::geometry::PairGeometry;
use crate::BellSign;

pub type Matrix3 = [[f64; 3]; 3];
pub type Vector3 = [f64; 3];

pub(crate) const ZERO3: Matrix3 = [[0.0; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X = 0,
    Y = 1,
    Z = 2,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn unit(self) -> Vector3 {
        let mut v = [0.0; 3];
        v[self as usize] = 1.0;
        v
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

/// Transition dipoles of atoms A and B, in units of `e·eV⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DipolePair {
    pub mu_a: Vector3,
    pub mu_b: Vector3,
}

impl DipolePair {
    pub fn new(mu_a: Vector3, mu_b: Vector3) -> Result<Self> {
        for v in mu_a.iter().chain(mu_b.iter()) {
            crate::error::finite("dipole component", *v)?;
        }
        Ok(Self { mu_a, mu_b })
    }

    pub fn preset(preset: Preset, magnitude: f64) -> Self {
        let (a, b) = preset.axes();
        let scale = |axis: Axis| axis.unit().map(|v| v * magnitude);
        Self { mu_a: scale(a), mu_b: scale(b) }
    }

    /// `μᴬᵢ·μᴮⱼ`
    pub fn product(&self, i: Axis, j: Axis) -> f64 {
        self.mu_a[i as usize] * self.mu_b[j as usize]
    }

    pub fn scaled(&self, ka: f64, kb: f64) -> Self {
        Self {
            mu_a: self.mu_a.map(|v| v * ka),
            mu_b: self.mu_b.map(|v| v * kb),
        }
    }
}

/// Dipole orientations that isolate specific tensor components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Preset {
    /// μᴬ ∥ x, μᴮ ∥ z
    CrossXz,
    /// μᴬ ∥ x, μᴮ ∥ y
    CrossXy,
    /// μᴬ ∥ y, μᴮ ∥ z
    CrossYz,
    /// both along y
    ParallelYy,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::CrossXz, Preset::CrossXy, Preset::CrossYz, Preset::ParallelYy];

    pub fn axes(self) -> (Axis, Axis) {
        match self {
            Preset::CrossXz => (Axis::X, Axis::Z),
            Preset::CrossXy => (Axis::X, Axis::Y),
            Preset::CrossYz => (Axis::Y, Axis::Z),
            Preset::ParallelYy => (Axis::Y, Axis::Y),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::CrossXz => "cross-xz",
            Preset::CrossXy => "cross-xy",
            Preset::CrossYz => "cross-yz",
            Preset::ParallelYy => "parallel-yy",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or(Error::Usage("unknown dipole preset (cross-xz, cross-xy, cross-yz, parallel-yy)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmParams {
    pub geometry: PairGeometry,
    /// Transition frequency ω₀ in eV.
    pub omega0: f64,
    pub dipoles: DipolePair,
    pub sign: BellSign,
}

impl EmParams {
    pub fn new(geometry: PairGeometry, omega0: f64, dipoles: DipolePair, sign: BellSign) -> Result<Self> {
        Ok(Self { geometry, omega0: positive("omega0", omega0)?, dipoles, sign })
    }
}
