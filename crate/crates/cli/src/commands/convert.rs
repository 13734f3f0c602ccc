use rdi_core::units::{self, unruh_temperature_kelvin, NaturalQuantity, Role};

use crate::args::{ConvertArgs, Quantity, Units};
use crate::error::CliError;
use crate::format::sci;
use crate::{Context, Outcome, Result};

pub fn run(args: &ConvertArgs, ctx: &mut Context<'_>) -> Result<Outcome> {
    let line = convert(args.quantity, args.value, args.to)?;
    writeln!(ctx.out, "{line}")?;
    Ok(Outcome::Success)
}

pub fn convert(quantity: Quantity, value: f64, to: Units) -> Result<String> {
    let role = match quantity {
        Quantity::Length => Role::Length,
        Quantity::Acceleration => Role::Acceleration,
        Quantity::Energy => Role::Energy,
        Quantity::Temperature => Role::Temperature,
        Quantity::Dipole => {
            // C·m per eV⁻¹
            let per_natural = 1.0 / units::dipole_si_to_natural(1.0)?;
            return Ok(match to {
                Units::Natural => format!("{} eV^-1", sci(units::dipole_si_to_natural(value)?)),
                Units::Si => format!("{} C*m", sci(value * per_natural)),
            });
        }
        Quantity::Unruh => {
            if to == Units::Si {
                return Err(CliError::usage("unruh only converts m/s^2 to K"));
            }
            return Ok(format!("{} K", sci(unruh_temperature_kelvin(value)?)));
        }
    };
    Ok(match to {
        Units::Natural => {
            let q = NaturalQuantity::from_si(value, role)?;
            format!("{} {}", sci(q.value()), role.natural_unit())
        }
        Units::Si => {
            let q = NaturalQuantity::new(value, role)?;
            format!("{} {}", sci(q.to_si()), role.si_unit())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn there_and_back() {
        let s = convert(Quantity::Length, 1.5e-8, Units::Natural).unwrap();
        assert!(s.ends_with("eV^-1"));
        let v: f64 = s.split(' ').next().unwrap().parse().unwrap();
        let back = convert(Quantity::Length, v, Units::Si).unwrap();
        let m: f64 = back.split(' ').next().unwrap().parse().unwrap();
        assert!((m / 1.5e-8 - 1.0).abs() < 1e-8);
    }

    #[test]
    fn unruh_of_earth_scale_acceleration() {
        let s = convert(Quantity::Unruh, 1e20, Units::Natural).unwrap();
        let k: f64 = s.split(' ').next().unwrap().parse().unwrap();
        assert!((k / 0.405 - 1.0).abs() < 1e-2);
        assert!(convert(Quantity::Unruh, 1.0, Units::Si).is_err());
    }
}
