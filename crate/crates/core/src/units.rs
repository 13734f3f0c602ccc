//! Natural units (ħ = c = k_B = 1) with energies in eV.
//!
//! | role         | natural unit | SI unit |
//! |--------------|--------------|---------|
//! | energy       | eV           | J       |
//! | length       | eV⁻¹         | m       |
//! | acceleration | eV           | m/s²    |
//! | temperature  | eV           | K       |
//!
//! Charges follow the rationalised (Heaviside-Lorentz) convention, so the
//! elementary charge is `√(4πα)` and a dipole moment is measured in eV⁻¹.

use core::f64::consts::PI;
use core::fmt;

use crate::error::{finite, non_negative, Error, Result};

/// CODATA 2018 values shared by the model and every oracle.
pub mod constants {
    /// ħ in eV·s.
    pub const HBAR_EV_S: f64 = 6.582_119_569e-16;
    /// c in m/s (exact).
    pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
    /// ħc in eV·m.
    pub const HBAR_C_EV_M: f64 = 1.973_269_804e-7;
    /// k_B in eV/K.
    pub const BOLTZMANN_EV_PER_K: f64 = 8.617_333_262e-5;
    /// Elementary charge in C (exact); also joules per eV.
    pub const ELEMENTARY_CHARGE_C: f64 = 1.602_176_634e-19;
    /// Fine-structure constant.
    pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;
    /// Bohr radius in m.
    pub const BOHR_RADIUS_M: f64 = 5.291_772_109_03e-11;
}

use constants::*;

/// Physical role of a [`NaturalQuantity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Energy,
    Length,
    Acceleration,
    Temperature,
}

impl Role {
    pub fn natural_unit(self) -> &'static str {
        match self {
            Role::Length => "eV^-1",
            Role::Energy | Role::Acceleration | Role::Temperature => "eV",
        }
    }

    pub fn si_unit(self) -> &'static str {
        match self {
            Role::Energy => "J",
            Role::Length => "m",
            Role::Acceleration => "m/s^2",
            Role::Temperature => "K",
        }
    }

    // Multiplier taking an SI magnitude to natural units.
    fn si_to_natural_factor(self) -> f64 {
        match self {
            Role::Energy => 1.0 / ELEMENTARY_CHARGE_C,
            Role::Length => 1.0 / HBAR_C_EV_M,
            Role::Acceleration => HBAR_EV_S / SPEED_OF_LIGHT,
            Role::Temperature => BOLTZMANN_EV_PER_K,
        }
    }
}

/// A magnitude tagged with the role it plays, stored in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NaturalQuantity {
    value: f64,
    role: Role,
}

impl NaturalQuantity {
    pub fn new(value: f64, role: Role) -> Result<Self> {
        finite("quantity", value)?;
        Ok(Self { value, role })
    }

    /// Converts a non-negative SI magnitude.
    pub fn from_si(si_value: f64, role: Role) -> Result<Self> {
        non_negative(role_name(role), si_value)?;
        Self::new(si_value * role.si_to_natural_factor(), role)
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.value
    }

    #[inline]
    pub fn role(&self) -> Role {
        self.role
    }

    pub fn to_si(&self) -> f64 {
        self.value / self.role.si_to_natural_factor()
    }

    /// Returns the value if the quantity has the expected role.
    pub fn expect_role(&self, role: Role) -> Result<f64> {
        if self.role == role {
            Ok(self.value)
        } else {
            Err(Error::Usage("quantity has the wrong physical role"))
        }
    }
}

impl fmt::Display for NaturalQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.9e} {}", self.value, self.role.natural_unit())
    }
}

fn role_name(role: Role) -> &'static str {
    match role {
        Role::Energy => "energy",
        Role::Length => "length",
        Role::Acceleration => "acceleration",
        Role::Temperature => "temperature",
    }
}

/// Metres to eV⁻¹.
pub fn length_si_to_natural(meters: f64) -> Result<NaturalQuantity> {
    NaturalQuantity::from_si(meters, Role::Length)
}

/// m/s² to eV (ħa/c).
pub fn acceleration_si_to_natural(m_per_s2: f64) -> Result<NaturalQuantity> {
    NaturalQuantity::from_si(m_per_s2, Role::Acceleration)
}

/// Joules to eV.
pub fn energy_si_to_natural(joules: f64) -> Result<NaturalQuantity> {
    NaturalQuantity::from_si(joules, Role::Energy)
}

/// Kelvin to eV.
pub fn temperature_si_to_natural(kelvin: f64) -> Result<NaturalQuantity> {
    NaturalQuantity::from_si(kelvin, Role::Temperature)
}

/// Unruh temperature `a/2π` of a uniformly accelerated observer.
pub fn unruh_temperature(a: NaturalQuantity) -> Result<NaturalQuantity> {
    let a = non_negative("acceleration", a.expect_role(Role::Acceleration)?)?;
    NaturalQuantity::new(a / (2.0 * PI), Role::Temperature)
}

/// Unruh temperature in kelvin for an acceleration in m/s²: `ħa / (2π k_B c)`.
pub fn unruh_temperature_kelvin(m_per_s2: f64) -> Result<f64> {
    Ok(unruh_temperature(acceleration_si_to_natural(m_per_s2)?)?.to_si())
}

/// Unruh temperature in kelvin for an acceleration in cm/s².
pub fn unruh_temperature_kelvin_cgs(cm_per_s2: f64) -> Result<f64> {
    non_negative("acceleration", cm_per_s2)?;
    unruh_temperature_kelvin(cm_per_s2 * 1e-2)
}

/// Elementary charge in rationalised natural units, `√(4πα)`.
pub fn elementary_charge() -> f64 {
    libm::sqrt(4.0 * PI * FINE_STRUCTURE)
}

/// Atomic unit of dipole moment `e·a₀` in eV⁻¹.
pub fn bohr_dipole() -> f64 {
    elementary_charge() * BOHR_RADIUS_M / HBAR_C_EV_M
}

/// Converts a dipole moment in C·m to eV⁻¹. Sign is preserved.
pub fn dipole_si_to_natural(coulomb_meters: f64) -> Result<f64> {
    finite("dipole moment", coulomb_meters)?;
    Ok(coulomb_meters / ELEMENTARY_CHARGE_C * elementary_charge() / HBAR_C_EV_M)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hbar_c_is_one_inverse_ev() {
        let l = length_si_to_natural(1.973_269_8e-7).unwrap();
        assert!((l.value() - 1.0).abs() < 1e-7);
        assert_eq!(l.role(), Role::Length);
        assert_eq!(length_si_to_natural(0.0).unwrap().value(), 0.0);
    }

    #[test]
    fn ten_nanometres() {
        let l = length_si_to_natural(1e-8).unwrap().value();
        assert!((l - 5.07e-2).abs() < 1e-4, "{l}");
    }

    #[test]
    fn acceleration_anchor() {
        let a = acceleration_si_to_natural(1e18).unwrap().value();
        assert!((a - 2.2e-6).abs() < 0.01e-6, "{a}");
        let a = acceleration_si_to_natural(1e20).unwrap().value();
        assert!((a - 2.195e-4).abs() < 0.001e-4, "{a}");
        assert_eq!(acceleration_si_to_natural(0.0).unwrap().value(), 0.0);
    }

    #[test]
    fn negative_inputs_rejected() {
        assert!(matches!(length_si_to_natural(-1.0), Err(Error::Domain { .. })));
        assert!(matches!(
            acceleration_si_to_natural(-1.0),
            Err(Error::Domain { .. })
        ));
        assert!(unruh_temperature_kelvin(-3.0).is_err());
        assert!(length_si_to_natural(f64::NAN).is_err());
    }

    #[test]
    fn unruh_values() {
        let zero = NaturalQuantity::new(0.0, Role::Acceleration).unwrap();
        assert_eq!(unruh_temperature(zero).unwrap().value(), 0.0);
        let t = unruh_temperature_kelvin(1e20).unwrap();
        assert!((t - 0.405).abs() < 1e-3, "{t}");
        // 1e23 cm/s² gives a few kelvin.
        let t = unruh_temperature_kelvin_cgs(1e23).unwrap();
        assert!(t > 1.0 && t < 10.0, "{t}");
    }

    #[test]
    fn unruh_rejects_wrong_role() {
        let l = NaturalQuantity::new(1.0, Role::Length).unwrap();
        assert!(matches!(unruh_temperature(l), Err(Error::Usage(_))));
    }

    #[test]
    fn bohr_dipole_magnitude() {
        // e ≈ 0.3028, a₀ ≈ 2.68e-4 eV⁻¹.
        let mu = bohr_dipole();
        assert!((mu - 8.1209e-5).abs() < 1e-8, "{mu}");
        let from_si = dipole_si_to_natural(ELEMENTARY_CHARGE_C * BOHR_RADIUS_M).unwrap();
        assert!(((from_si - mu) / mu).abs() < 1e-14);
    }
}
