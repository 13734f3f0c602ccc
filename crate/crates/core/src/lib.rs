//! Resonance dipole-dipole interaction between two uniformly accelerated,
//! maximally entangled two-level atoms near a perfectly reflecting plate.
//!
//! The crate is `no_std` (with `alloc`) and purely computational:
//!
//! - [`units`]: natural units (ħ = c = k_B = 1, energies in eV) and SI conversions.
//! - [`geometry`]: the two atom-pair configurations and their image distances.
//! - [`scalar`]: closed-form energies for the massless scalar field, with the
//!   far-zone, intermediate-zone and static limits.
//! - [`em`]: electromagnetic susceptibility tensors and energy shifts for
//!   arbitrary real dipole orientations.
//! - [`validation`]: independent oracles and the consistency suite.
//!
//! ```
//! use rdi_core::geometry::PairGeometry;
//! use rdi_core::scalar::{scalar_energy_static, ScalarParams};
//! use rdi_core::BellSign;
//!
//! let g = PairGeometry::perpendicular(7.5e-2, 2.0e-2, 0.0).unwrap();
//! let p = ScalarParams::new(g, 4.17, 1.0, BellSign::Symmetric).unwrap();
//! let e = scalar_energy_static(&p).unwrap();
//! assert!((e.total + 9.891e-2).abs() < 1e-5);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod em;
pub mod error;
pub mod geometry;
pub mod hyperbolic;
pub mod scalar;
pub mod units;
pub mod validation;

pub use error::{Error, Result};

/// Selector for the correlated two-atom state.
///
/// `Symmetric` is the superradiant combination, `Antisymmetric` the subradiant
/// one. Energies that carry a state sign are odd under the swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum BellSign {
    Symmetric,
    Antisymmetric,
}

impl BellSign {
    /// `+1.0` for the symmetric state, `-1.0` for the antisymmetric one.
    #[inline]
    pub fn value(self) -> f64 {
        match self {
            BellSign::Symmetric => 1.0,
            BellSign::Antisymmetric => -1.0,
        }
    }

    #[inline]
    pub fn flipped(self) -> Self {
        match self {
            BellSign::Symmetric => BellSign::Antisymmetric,
            BellSign::Antisymmetric => BellSign::Symmetric,
        }
    }
}

/// Free-space part, mirror-induced part and their sum, all in eV.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnergyBreakdown {
    pub free_term: f64,
    pub boundary_term: f64,
    pub total: f64,
}

impl EnergyBreakdown {
    /// Builds a breakdown whose total is the floating-point sum of the parts.
    #[inline]
    pub fn new(free_term: f64, boundary_term: f64) -> Self {
        Self {
            free_term,
            boundary_term,
            total: free_term + boundary_term,
        }
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self::new(k * self.free_term, k * self.boundary_term)
    }

    pub fn negated(&self) -> Self {
        Self::new(-self.free_term, -self.boundary_term)
    }
}
