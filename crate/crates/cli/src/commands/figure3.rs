//! Scalar resonance energy against acceleration at the reference geometry
//! `L = D = 7.5e-2 eV⁻¹`, `z = 2e-2 eV⁻¹`, `ω₀ = 4.17 eV`, with `λ² = 1` and
//! the symmetric state.

use std::fs::{self, File};
use std::path::{Path, PathBuf};

use rdi_core::geometry::PairGeometry;
use rdi_core::scalar::{scalar_energy, scalar_energy_static, ScalarParams};
use rdi_core::BellSign;

use crate::args::{Figure3Args, Scale};
use crate::commands::sweep::grid;
use crate::error::CliError;
use crate::format::sci;
use crate::{Context, Outcome, Result};

pub const CSV_NAME: &str = "figure3.csv";
pub const SCRIPT_NAME: &str = "figure3.gp";
pub const HEADER: [&str; 5] = ["a", "perp_accelerated", "par_accelerated", "perp_static", "par_static"];

pub fn rows(args: &Figure3Args) -> Result<Vec<[f64; 5]>> {
    let params = |g: PairGeometry| ScalarParams::new(g, args.omega0, 1.0, BellSign::Symmetric);
    let perp0 = params(PairGeometry::perpendicular(args.sep, args.z, 0.0)?)?;
    let par0 = params(PairGeometry::parallel(args.sep, args.z, 0.0)?)?;
    let perp_static = scalar_energy_static(&perp0)?.total;
    let par_static = scalar_energy_static(&par0)?.total;
    grid(args.from, args.to, args.points, Scale::Log)?
        .into_iter()
        .map(|a| {
            let perp = scalar_energy(&params(perp0.geometry.with_acceleration(a)?)?)?.total;
            let par = scalar_energy(&params(par0.geometry.with_acceleration(a)?)?)?.total;
            Ok([a, perp, par, perp_static, par_static])
        })
        .collect()
}

fn script(csv_name: &str) -> String {
    format!(
        "# gnuplot {SCRIPT_NAME}\n\
         set datafile separator ','\n\
         set key autotitle columnhead\n\
         set logscale x\n\
         set format x '10^{{%L}}'\n\
         set xlabel 'a [eV]'\n\
         set ylabel 'delta E [eV / lambda^2]'\n\
         set terminal pngcairo size 900,600\n\
         set output 'figure3.png'\n\
         plot '{csv_name}' using 1:2 with lines lw 2, \\\n\
         \x20    '' using 1:3 with lines lw 2, \\\n\
         \x20    '' using 1:4 with lines dt 2, \\\n\
         \x20    '' using 1:5 with lines dt 2\n"
    )
}

pub fn write(dir: &Path, args: &Figure3Args) -> Result<(PathBuf, PathBuf)> {
    let rows = rows(args)?;
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let csv_path = dir.join(CSV_NAME);
    let file = File::create(&csv_path).map_err(|e| CliError::io(&csv_path, e))?;
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(file);
    w.write_record(HEADER)?;
    for r in &rows {
        w.write_record(r.map(sci))?;
    }
    w.flush().map_err(|e| CliError::io(&csv_path, e))?;
    let gp_path = dir.join(SCRIPT_NAME);
    fs::write(&gp_path, script(CSV_NAME)).map_err(|e| CliError::io(&gp_path, e))?;
    Ok((csv_path, gp_path))
}

pub fn run(args: &Figure3Args, ctx: &mut Context<'_>) -> Result<Outcome> {
    let dir = args
        .out_dir
        .clone()
        .or_else(|| ctx.output_dir.clone())
        .unwrap_or_else(|| PathBuf::from("."));
    let (csv_path, gp_path) = write(&dir, args)?;
    writeln!(ctx.out, "{}", csv_path.display())?;
    writeln!(ctx.out, "{}", gp_path.display())?;
    Ok(Outcome::Success)
}
