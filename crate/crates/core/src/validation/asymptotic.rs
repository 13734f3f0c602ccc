//! Where the far-zone and intermediate-zone forms agree with the exact
//! scalar energy.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{Alignment, PairGeometry};
use crate::hyperbolic::retarded_phase;
use crate::scalar::{scalar_energy, scalar_energy_far_zone, scalar_energy_intermediate, ScalarParams};
use crate::BellSign;

use super::OracleReport;

pub const ASYMPTOTIC_TOLERANCE: f64 = 1e-2;
/// Points whose exact phase has `|cos Θ|` below this are skipped.
pub const PHASE_FILTER: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    FarZone,
    Intermediate,
}

impl Regime {
    fn tag(self) -> &'static str {
        match self {
            Regime::FarZone => "far",
            Regime::Intermediate => "intermediate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub alignment: Alignment,
    pub a: f64,
    pub separation: f64,
    pub z: f64,
    pub omega0: f64,
}

/// Relative error of the asymptotic form against [`scalar_energy`], free and
/// mirror terms compared separately.
pub fn asymptotic_error_map(regime: Regime, grid: &[GridPoint]) -> Result<Vec<OracleReport>> {
    let mut out = Vec::new();
    for g in grid {
        let geometry = PairGeometry::new(g.alignment, g.separation, g.z, g.a)?;
        let p = ScalarParams::new(geometry, g.omega0, 1.0, BellSign::Symmetric)?;
        let exact = scalar_energy(&p)?;
        let approx = match regime {
            Regime::FarZone => scalar_energy_far_zone(&p)?,
            Regime::Intermediate => scalar_energy_intermediate(&p)?,
        };
        let d = geometry.image_distances();
        let terms = [
            ("free", d.direct, approx.free_term, exact.free_term),
            ("boundary", d.image, approx.boundary_term, exact.boundary_term),
        ];
        for (name, dist, model, oracle) in terms {
            let phase = retarded_phase(g.a, dist, g.omega0);
            if libm::fabs(libm::cos(phase)) <= PHASE_FILTER {
                continue;
            }
            let id = format!(
                "asymptotic/{}/{}/a={:e}/sep={:e}/z={:e}/w0={}/{name}",
                regime.tag(),
                alignment_tag(g.alignment),
                g.a,
                g.separation,
                g.z,
                g.omega0
            );
            out.push(OracleReport::relative(id, model, oracle, ASYMPTOTIC_TOLERANCE));
        }
    }
    if out.is_empty() {
        return Err(Error::Usage("asymptotic grid is empty after phase filtering"));
    }
    Ok(out)
}

pub(crate) fn alignment_tag(a: Alignment) -> &'static str {
    match a {
        Alignment::Perpendicular => "perp",
        Alignment::Parallel => "par",
    }
}

/// Decades of `a·distance` swept by the standard grids.
pub const DECADES: [i32; 3] = [2, 3, 4];

/// Standard grid at `a·distance = 10^k`.
///
/// Far zone: direct distance 1, two mirror heights, `ω₀ ∈ {0.1, 0.3, 1}`.
/// The far-zone logarithm trails the exact phase by `(2ω₀/a)·ln 2`, so the
/// frequencies stay well below `a`.
///
/// Intermediate zone: image distance 1 with `a = 10^k` and direct distance
/// `10^(-2k)`, so that `a·direct = 10^(-k)`.
pub fn standard_grid(regime: Regime, k: i32) -> Vec<GridPoint> {
    let scale = libm::pow(10.0, k as f64);
    let mut out = Vec::new();
    for alignment in [Alignment::Perpendicular, Alignment::Parallel] {
        match regime {
            Regime::FarZone => {
                for z in [0.5, 2.0] {
                    for omega0 in [0.1, 0.3, 1.0] {
                        out.push(GridPoint { alignment, a: scale, separation: 1.0, z, omega0 });
                    }
                }
            }
            Regime::Intermediate => {
                let sep = 1.0 / (scale * scale);
                let z = match alignment {
                    Alignment::Perpendicular => 0.5 * (1.0 - sep),
                    Alignment::Parallel => 0.5 * libm::sqrt(1.0 - sep * sep),
                };
                for omega0 in [0.3, 1.0] {
                    out.push(GridPoint { alignment, a: scale, separation: sep, z, omega0 });
                }
            }
        }
    }
    out
}

/// Largest relative error per decade of the standard grids, as
/// `(a·distance, max error)`.
pub fn decade_maxima(regime: Regime) -> Result<Vec<(f64, f64)>> {
    DECADES
        .iter()
        .map(|&k| {
            let reports = asymptotic_error_map(regime, &standard_grid(regime, k))?;
            let worst = reports.iter().map(|r| r.rel_error).fold(0.0, f64::max);
            Ok((libm::pow(10.0, k as f64), worst))
        })
        .collect()
}

pub fn strictly_decreasing(series: &[(f64, f64)]) -> bool {
    series.windows(2).all(|w| w[1].1 < w[0].1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_is_usage_error() {
        assert!(matches!(asymptotic_error_map(Regime::FarZone, &[]), Err(Error::Usage(_))));
    }

    #[test]
    fn filtered_out_grid_is_usage_error() {
        // ω₀ chosen so that both phases sit on cosine zeros at a → small.
        let a = 1e-9;
        let l = 1.0;
        let w = core::f64::consts::FRAC_PI_2;
        let z = 1.0; // image 3: ω₀·3 = 3π/2
        let g = GridPoint { alignment: Alignment::Perpendicular, a, separation: l, z, omega0: w };
        assert!(asymptotic_error_map(Regime::FarZone, &[g]).is_err());
    }

    #[test]
    fn standard_grids_pass_and_improve() {
        for regime in [Regime::FarZone, Regime::Intermediate] {
            let m = decade_maxima(regime).unwrap();
            assert!(m.iter().all(|(_, e)| *e < ASYMPTOTIC_TOLERANCE), "{m:?}");
            assert!(strictly_decreasing(&m), "{m:?}");
        }
    }

    #[test]
    fn far_zone_top_decade_is_tight() {
        let reports = asymptotic_error_map(Regime::FarZone, &standard_grid(Regime::FarZone, 4)).unwrap();
        assert!(reports.iter().all(|r| r.rel_error < 1e-6));
    }
}
