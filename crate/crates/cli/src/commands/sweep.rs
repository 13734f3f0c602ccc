use std::fs::File;
use std::io::Write;

use crate::args::{Param, Scale, SweepArgs};
use crate::error::CliError;
use crate::format::sci;
use crate::point::{resolve, to_natural, Model};
use crate::{Context, Outcome, Result};

pub const HEADER: [&str; 5] = ["param", "free", "boundary", "total", "static_total"];

/// `points` values from `from` to `to`, both ends exact.
pub fn grid(from: f64, to: f64, points: usize, scale: Scale) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(CliError::usage("--points must be at least 2"));
    }
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(CliError::usage("--from must be below --to"));
    }
    if scale == Scale::Log && from <= 0.0 {
        return Err(CliError::usage("a log sweep needs --from > 0"));
    }
    let last = (points - 1) as f64;
    let (lo, hi) = (from.ln(), to.ln());
    Ok((0..points)
        .map(|i| {
            let t = i as f64 / last;
            match (i, scale) {
                (0, _) => from,
                (i, _) if i == points - 1 => to,
                (_, Scale::Lin) => from + (to - from) * t,
                (_, Scale::Log) => (lo + (hi - lo) * t).exp(),
            }
        })
        .collect())
}

/// Writes the sweep as CSV. `values` are in the units the user chose.
pub fn write_csv<W: Write>(out: W, base: &Model, param: Param, values: &[f64], units: crate::args::Units) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(HEADER)?;
    for &v in values {
        let m = base.with(param, to_natural(param, v, units)?)?;
        let e = m.energy()?;
        let s = m.static_energy()?;
        w.write_record([sci(v), sci(e.free_term), sci(e.boundary_term), sci(e.total), sci(s.total)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn run(args: &SweepArgs, ctx: &mut Context<'_>) -> Result<Outcome> {
    let point = resolve(&args.point)?;
    let values = grid(args.from, args.to, args.points, args.scale)?;
    let target = match (&args.out, &ctx.output_dir) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => Some(dir.join(format!("sweep_{}.csv", args.param.name()))),
        (None, None) => None,
    };
    match target {
        Some(path) => {
            let file = File::create(&path).map_err(|e| CliError::io(&path, e))?;
            write_csv(file, &point.model, args.param, &values, point.units)?;
            writeln!(ctx.out, "{}", path.display())?;
        }
        None => write_csv(&mut *ctx.out, &point.model, args.param, &values, point.units)?,
    }
    Ok(Outcome::Success)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_checks() {
        assert!(grid(0.0, 1.0, 1, Scale::Lin).is_err());
        assert!(grid(1.0, 1.0, 3, Scale::Lin).is_err());
        assert!(grid(0.0, 1.0, 3, Scale::Log).is_err());
        let g = grid(1e-8, 1e-2, 61, Scale::Log).unwrap();
        assert_eq!(g[0], 1e-8);
        assert_eq!(g[60], 1e-2);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(grid(-1.0, 1.0, 3, Scale::Lin).unwrap(), vec![-1.0, 0.0, 1.0]);
    }
}
