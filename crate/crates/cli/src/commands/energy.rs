use rdi_core::units::constants::ELEMENTARY_CHARGE_C;

use crate::args::{EnergyArgs, OutputFormat, Units};
use crate::format::sci;
use crate::point::resolve;
use crate::{Context, Outcome, Result};

pub fn run(args: &EnergyArgs, ctx: &mut Context<'_>) -> Result<Outcome> {
    let point = resolve(&args.point)?;
    let e = point.model.energy()?;
    let rows = [("free", e.free_term), ("boundary", e.boundary_term), ("total", e.total)];
    match args.format {
        OutputFormat::Text => {
            for (name, ev) in rows {
                write!(ctx.out, "{name:<9}{} eV", sci(ev))?;
                if point.units == Units::Si {
                    write!(ctx.out, "  {} J", sci(ev * ELEMENTARY_CHARGE_C))?;
                }
                writeln!(ctx.out)?;
            }
        }
        OutputFormat::Json => {
            // Same nine digits as the text output.
            let rounded = |x: f64| -> f64 { sci(x).parse().unwrap_or(x) };
            let mut record = serde_json::Map::new();
            for (name, ev) in rows {
                record.insert(format!("{name}_ev"), rounded(ev).into());
                if point.units == Units::Si {
                    record.insert(format!("{name}_j"), rounded(ev * ELEMENTARY_CHARGE_C).into());
                }
            }
            serde_json::to_writer(&mut *ctx.out, &record)?;
            writeln!(ctx.out)?;
        }
    }
    Ok(Outcome::Success)
}
