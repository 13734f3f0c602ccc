use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rdi_core::em::Preset;

#[derive(Debug, Parser)]
#[command(name = "rdi", version, about = "Resonance interaction of accelerated atoms near a mirror")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy shift at a single point.
    Energy(EnergyArgs),
    /// Energy shifts along one parameter, written as CSV.
    Sweep(SweepArgs),
    /// Scalar energies against acceleration for both alignments, plus a gnuplot script.
    Figure3(Figure3Args),
    /// Run the oracle suite and print one JSON record per comparison.
    Validate(ValidateArgs),
    /// Convert a quantity between SI and natural units.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Field {
    Scalar,
    Em,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryArg {
    Perp,
    Par,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum State {
    Sym,
    Anti,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Natural,
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Lin,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Param {
    A,
    Sep,
    Z,
    Omega0,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::Sep => "sep",
            Param::Z => "z",
            Param::Omega0 => "omega0",
        }
    }
}

/// Flags describing one configuration. Anything left unset is taken from
/// `--config`, then from the defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct PointArgs {
    /// key=value file with defaults for any of these flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub field: Option<Field>,
    #[arg(long, value_enum)]
    pub geometry: Option<GeometryArg>,
    /// Proper acceleration [eV, or m/s² with --units si].
    #[arg(long)]
    pub a: Option<f64>,
    /// Interatomic distance L or D [eV⁻¹, or m].
    #[arg(long)]
    pub sep: Option<f64>,
    /// Height above the mirror [eV⁻¹, or m].
    #[arg(long)]
    pub z: Option<f64>,
    /// Transition frequency [eV in both unit systems].
    #[arg(long)]
    pub omega0: Option<f64>,
    #[arg(long, value_enum)]
    pub state: Option<State>,
    /// Scalar coupling λ².
    #[arg(long = "lambda-sq")]
    pub lambda_sq: Option<f64>,
    /// Dipole of atom A as x,y,z [eV⁻¹, or C·m].
    #[arg(long = "dipole-a", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub dipole_a: Option<[f64; 3]>,
    #[arg(long = "dipole-b", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub dipole_b: Option<[f64; 3]>,
    /// Named orientation: cross-xz, cross-xy, cross-yz, parallel-yy.
    #[arg(long, value_parser = parse_preset)]
    pub preset: Option<Preset>,
    /// Dipole magnitude for --preset: a number or `bohr` for e·a₀.
    #[arg(long = "dipole-scale", value_parser = parse_magnitude)]
    pub dipole_scale: Option<Magnitude>,
    #[arg(long, value_enum)]
    pub units: Option<Units>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Magnitude {
    Value(f64),
    Bohr,
}

pub fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z but got `{s}`"));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|_| format!("`{p}` is not a number"))?;
    }
    Ok(v)
}

pub fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e: rdi_core::Error| e.to_string())
}

pub fn parse_magnitude(s: &str) -> Result<Magnitude, String> {
    if s.eq_ignore_ascii_case("bohr") {
        return Ok(Magnitude::Bohr);
    }
    s.parse().map(Magnitude::Value).map_err(|_| format!("`{s}` is neither a number nor `bohr`"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EnergyArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum)]
    pub param: Param,
    #[arg(long, allow_hyphen_values = true)]
    pub from: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub to: f64,
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = Scale::Lin)]
    pub scale: Scale,
    /// Output file; defaults to `sweep_<param>.csv` in RDI_OUTPUT_DIR, else stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Figure3Args {
    /// Directory for figure3.csv and figure3.gp; defaults to RDI_OUTPUT_DIR, else `.`.
    #[arg(long = "out-dir")]
    pub out_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 801)]
    pub points: usize,
    #[arg(long, default_value_t = 1e-4)]
    pub from: f64,
    #[arg(long, default_value_t = 1e4)]
    pub to: f64,
    #[arg(long, default_value_t = 7.5e-2)]
    pub sep: f64,
    #[arg(long, default_value_t = 2.0e-2)]
    pub z: f64,
    #[arg(long, default_value_t = 4.17)]
    pub omega0: f64,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Only cases whose id starts with this prefix (scalar, em-static, ...).
    #[arg(long)]
    pub filter: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Length,
    Acceleration,
    Energy,
    Temperature,
    Dipole,
    /// Acceleration in m/s² to the Unruh temperature in K (one direction only).
    Unruh,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(value_enum)]
    pub quantity: Quantity,
    #[arg(allow_hyphen_values = true)]
    pub value: f64,
    /// Direction: `natural` reads SI and prints natural units, `si` the reverse.
    #[arg(long, value_enum, default_value_t = Units::Natural)]
    pub to: Units,
}
