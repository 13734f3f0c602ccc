//! Turning the point flags into model parameters.

use rdi_core::em::{em_energy, DipolePair, EmParams, Vector3};
use rdi_core::geometry::{Alignment, PairGeometry};
use rdi_core::scalar::{scalar_energy, scalar_energy_static, ScalarParams};
use rdi_core::units::{self, bohr_dipole};
use rdi_core::{BellSign, EnergyBreakdown};

use crate::args::{Field, GeometryArg, Magnitude, Param, PointArgs, State, Units};
use crate::config;
use crate::error::{CliError, Result};

/// A fully specified configuration in natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Model {
    Scalar(ScalarParams),
    Em(EmParams),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub model: Model,
    pub units: Units,
}

/// Applies `--config`, checks for missing or clashing flags and converts
/// SI inputs.
pub fn resolve(flags: &PointArgs) -> Result<Point> {
    let args = match &flags.config {
        Some(path) => config::merge(flags, config::load(path)?),
        None => flags.clone(),
    };
    let units = args.units.unwrap_or(Units::Natural);
    let field = args.field.unwrap_or(Field::Scalar);
    let alignment = match args.geometry.unwrap_or(GeometryArg::Perp) {
        GeometryArg::Perp => Alignment::Perpendicular,
        GeometryArg::Par => Alignment::Parallel,
    };
    let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| CliError::usage(format!("missing --{flag}")));
    let a = to_natural(Param::A, need(args.a, "a")?, units)?;
    let sep = to_natural(Param::Sep, need(args.sep, "sep")?, units)?;
    let z = to_natural(Param::Z, need(args.z, "z")?, units)?;
    let omega0 = need(args.omega0, "omega0")?;
    let sign = match args.state.unwrap_or(State::Sym) {
        State::Sym => BellSign::Symmetric,
        State::Anti => BellSign::Antisymmetric,
    };
    let geometry = PairGeometry::new(alignment, sep, z, a)?;

    let model = match field {
        Field::Scalar => {
            let em_flags = args.dipole_a.is_some()
                || args.dipole_b.is_some()
                || args.preset.is_some()
                || args.dipole_scale.is_some();
            if em_flags {
                return Err(CliError::usage("dipole flags only apply to --field em"));
            }
            Model::Scalar(ScalarParams::new(geometry, omega0, args.lambda_sq.unwrap_or(1.0), sign)?)
        }
        Field::Em => {
            if args.lambda_sq.is_some() {
                return Err(CliError::usage("--lambda-sq only applies to --field scalar"));
            }
            Model::Em(EmParams::new(geometry, omega0, dipoles(&args, units)?, sign)?)
        }
    };
    Ok(Point { model, units })
}

fn dipoles(args: &PointArgs, units: Units) -> Result<DipolePair> {
    let explicit = args.dipole_a.is_some() || args.dipole_b.is_some();
    match (args.preset, explicit) {
        (Some(_), true) => Err(CliError::usage("--preset cannot be combined with --dipole-a/--dipole-b")),
        (Some(preset), false) => {
            let magnitude = match args.dipole_scale.unwrap_or(Magnitude::Value(1.0)) {
                Magnitude::Bohr => bohr_dipole(),
                Magnitude::Value(v) => dipole_to_natural(v, units)?,
            };
            Ok(DipolePair::preset(preset, magnitude))
        }
        (None, _) => {
            if args.dipole_scale.is_some() {
                return Err(CliError::usage("--dipole-scale needs --preset"));
            }
            let (Some(a), Some(b)) = (args.dipole_a, args.dipole_b) else {
                return Err(CliError::usage("--field em needs --preset or both --dipole-a and --dipole-b"));
            };
            let convert = |v: [f64; 3]| -> Result<Vector3> {
                Ok([dipole_to_natural(v[0], units)?, dipole_to_natural(v[1], units)?, dipole_to_natural(v[2], units)?])
            };
            Ok(DipolePair::new(convert(a)?, convert(b)?)?)
        }
    }
}

fn dipole_to_natural(v: f64, units: Units) -> Result<f64> {
    match units {
        Units::Natural => Ok(v),
        Units::Si => Ok(units::dipole_si_to_natural(v)?),
    }
}

/// Converts a value of `param` given in `units`. ω₀ is in eV either way.
pub fn to_natural(param: Param, value: f64, units: Units) -> Result<f64> {
    if units == Units::Natural || param == Param::Omega0 {
        return Ok(value);
    }
    let q = match param {
        Param::A => units::acceleration_si_to_natural(value)?,
        _ => units::length_si_to_natural(value)?,
    };
    Ok(q.value())
}

impl Model {
    pub fn geometry(&self) -> PairGeometry {
        match self {
            Model::Scalar(p) => p.geometry,
            Model::Em(p) => p.geometry,
        }
    }

    /// Copy with one parameter replaced by a natural-unit value.
    pub fn with(&self, param: Param, value: f64) -> Result<Model> {
        let g = self.geometry();
        let geometry = match param {
            Param::A => g.with_acceleration(value)?,
            Param::Sep => g.with_separation(value)?,
            Param::Z => g.with_z(value)?,
            Param::Omega0 => g,
        };
        Ok(match *self {
            Model::Scalar(p) => {
                let omega0 = if param == Param::Omega0 { value } else { p.omega0 };
                Model::Scalar(ScalarParams::new(geometry, omega0, p.lambda_sq, p.sign)?)
            }
            Model::Em(p) => {
                let omega0 = if param == Param::Omega0 { value } else { p.omega0 };
                Model::Em(EmParams::new(geometry, omega0, p.dipoles, p.sign)?)
            }
        })
    }

    pub fn energy(&self) -> Result<EnergyBreakdown> {
        Ok(match self {
            Model::Scalar(p) => scalar_energy(p)?,
            Model::Em(p) => em_energy(p)?,
        })
    }

    /// The same configuration for atoms at rest.
    pub fn static_energy(&self) -> Result<EnergyBreakdown> {
        Ok(match self {
            Model::Scalar(p) => scalar_energy_static(p)?,
            Model::Em(_) => self.with(Param::A, 0.0)?.energy()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rdi_core::em::Preset;

    fn perp() -> PointArgs {
        PointArgs { a: Some(1.0), sep: Some(0.075), z: Some(0.02), omega0: Some(4.17), ..Default::default() }
    }

    #[test]
    fn defaults_to_symmetric_scalar() {
        let p = resolve(&perp()).unwrap();
        let Model::Scalar(s) = p.model else { panic!() };
        assert_eq!(s.lambda_sq, 1.0);
        assert_eq!(s.sign, BellSign::Symmetric);
    }

    #[test]
    fn missing_and_clashing_flags() {
        let mut a = perp();
        a.z = None;
        assert!(matches!(resolve(&a), Err(CliError::Usage(_))));

        let mut a = perp();
        a.preset = Some(Preset::CrossXz);
        assert!(matches!(resolve(&a), Err(CliError::Usage(_))));

        let mut a = perp();
        a.field = Some(Field::Em);
        assert!(matches!(resolve(&a), Err(CliError::Usage(_))));
        a.preset = Some(Preset::CrossXz);
        a.dipole_a = Some([1.0, 0.0, 0.0]);
        assert!(matches!(resolve(&a), Err(CliError::Usage(_))));
    }

    #[test]
    fn zero_separation_is_rejected() {
        let mut a = perp();
        a.sep = Some(0.0);
        let e = resolve(&a).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn si_lengths_are_converted() {
        let mut a = perp();
        a.units = Some(Units::Si);
        a.sep = Some(1.5e-8);
        a.a = Some(0.0);
        let p = resolve(&a).unwrap();
        assert!((p.model.geometry().separation() - 7.6016e-2).abs() < 1e-5);
    }
}
