//! Plain `key = value` files holding defaults for the point flags.
//!
//! Keys are the long flag names without dashes (`lambda-sq`, `dipole-a`, ...).
//! Blank lines and lines starting with `#` are skipped. Flags given on the
//! command line always win over the file.

use std::fs;
use std::path::Path;

use clap::ValueEnum;

use crate::args::{parse_magnitude, parse_preset, parse_vec3, PointArgs};
use crate::error::{CliError, Result};

pub fn load(path: &Path) -> Result<PointArgs> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse(&text).map_err(|e| match e {
        CliError::Usage(m) => CliError::usage(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse(text: &str) -> Result<PointArgs> {
    let mut out = PointArgs::default();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("line {}: expected key = value", n + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        set(&mut out, key, value).map_err(|m| CliError::usage(format!("line {}: {key}: {m}", n + 1)))?;
    }
    Ok(out)
}

fn set(out: &mut PointArgs, key: &str, value: &str) -> std::result::Result<(), String> {
    fn num(v: &str) -> std::result::Result<f64, String> {
        v.parse().map_err(|_| format!("`{v}` is not a number"))
    }
    fn choice<T: ValueEnum>(v: &str) -> std::result::Result<T, String> {
        T::from_str(v, false)
    }
    match key {
        "field" => out.field = Some(choice(value)?),
        "geometry" => out.geometry = Some(choice(value)?),
        "a" => out.a = Some(num(value)?),
        "sep" => out.sep = Some(num(value)?),
        "z" => out.z = Some(num(value)?),
        "omega0" => out.omega0 = Some(num(value)?),
        "state" => out.state = Some(choice(value)?),
        "lambda-sq" => out.lambda_sq = Some(num(value)?),
        "dipole-a" => out.dipole_a = Some(parse_vec3(value)?),
        "dipole-b" => out.dipole_b = Some(parse_vec3(value)?),
        "preset" => out.preset = Some(parse_preset(value)?),
        "dipole-scale" => out.dipole_scale = Some(parse_magnitude(value)?),
        "units" => out.units = Some(choice(value)?),
        _ => return Err("unknown key".into()),
    }
    Ok(())
}

/// Fields set in `flags` win; the rest come from `file`.
pub fn merge(flags: &PointArgs, file: PointArgs) -> PointArgs {
    PointArgs {
        config: flags.config.clone(),
        field: flags.field.or(file.field),
        geometry: flags.geometry.or(file.geometry),
        a: flags.a.or(file.a),
        sep: flags.sep.or(file.sep),
        z: flags.z.or(file.z),
        omega0: flags.omega0.or(file.omega0),
        state: flags.state.or(file.state),
        lambda_sq: flags.lambda_sq.or(file.lambda_sq),
        dipole_a: flags.dipole_a.or(file.dipole_a),
        dipole_b: flags.dipole_b.or(file.dipole_b),
        preset: flags.preset.or(file.preset),
        dipole_scale: flags.dipole_scale.or(file.dipole_scale),
        units: flags.units.or(file.units),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::{Field, GeometryArg, Magnitude};

    #[test]
    fn parses_every_key() {
        let c = parse(
            "# figure geometry\nfield = em\ngeometry=par\na=1\nsep = 0.075\nz=0.02\nomega0=4.17\n\
             state=anti\nlambda-sq=2\ndipole-a=1,0,0\ndipole-b = 0, 0, 1\npreset=cross-xz\n\
             dipole-scale=bohr\nunits=si\n",
        )
        .unwrap();
        assert_eq!(c.field, Some(Field::Em));
        assert_eq!(c.geometry, Some(GeometryArg::Par));
        assert_eq!(c.sep, Some(0.075));
        assert_eq!(c.dipole_b, Some([0.0, 0.0, 1.0]));
        assert_eq!(c.dipole_scale, Some(Magnitude::Bohr));
    }

    #[test]
    fn flags_override_file() {
        let file = parse("a = 1\nz = 0.5").unwrap();
        let flags = PointArgs { a: Some(3.0), ..Default::default() };
        let m = merge(&flags, file);
        assert_eq!(m.a, Some(3.0));
        assert_eq!(m.z, Some(0.5));
    }

    #[test]
    fn rejects_junk() {
        assert!(parse("colour = blue").is_err());
        assert!(parse("a 1").is_err());
        assert!(parse("geometry = diagonal").is_err());
    }
}
