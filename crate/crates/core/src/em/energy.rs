use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::Alignment;
use crate::EnergyBreakdown;

use super::coefficients::TensorCoefficients;
use super::tensors::{
    fh_par_boundary_with, fh_par_free_with, fh_perp_boundary_with, fh_perp_free_with, p_tensor,
};
use super::{Axis, DipolePair, EmParams, Matrix3};

use Axis::{X, Y, Z};

/// Perpendicular energy separated into the diagonal contraction and the
/// `xz` cross contraction. The diagonal part is odd in the Bell sign, the
/// cross part even.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerpSplit {
    pub diagonal: EnergyBreakdown,
    pub cross: EnergyBreakdown,
}

impl PerpSplit {
    pub fn combined(&self) -> EnergyBreakdown {
        EnergyBreakdown::new(
            self.diagonal.free_term + self.cross.free_term,
            self.diagonal.boundary_term + self.cross.boundary_term,
        )
    }
}

fn diagonal(mu: &DipolePair, p: &Matrix3) -> f64 {
    Axis::ALL.iter().map(|&i| mu.product(i, i) * p[i as usize][i as usize]).sum()
}

fn sym(mu: &DipolePair, i: Axis, j: Axis) -> f64 {
    mu.product(i, j) + mu.product(j, i)
}

fn antisym(mu: &DipolePair, i: Axis, j: Axis) -> f64 {
    mu.product(i, j) - mu.product(j, i)
}

/// Either alignment.
pub fn em_energy(p: &EmParams) -> Result<EnergyBreakdown> {
    em_energy_with(&TensorCoefficients::REFERENCE, p)
}

pub fn em_energy_with(c: &TensorCoefficients, p: &EmParams) -> Result<EnergyBreakdown> {
    match p.geometry.alignment() {
        Alignment::Perpendicular => Ok(perp_split(c, p)?.combined()),
        Alignment::Parallel => par(c, p),
    }
}

/// Atoms stacked along `z`:
///
/// ```text
/// δE⁽ᵇ⁾ = ∓(1/4π)[Σᵢ μᴬᵢμᴮᵢ Pᵇᵢᵢ ± (μᴬₓμᴮ_z + μᴬ_zμᴮₓ) Pᵇₓ_z]    at ℛ = L + 2z
/// δE⁽⁰⁾ = ±(1/4π)[Σᵢ μᴬᵢμᴮᵢ P⁰ᵢᵢ ± (μᴬₓμᴮ_z − μᴬ_zμᴮₓ) P⁰ₓ_z]    at L
/// ```
///
/// with every upper sign belonging to the symmetric state.
pub fn em_energy_perp(p: &EmParams) -> Result<EnergyBreakdown> {
    Ok(em_energy_perp_split(p)?.combined())
}

pub fn em_energy_perp_split(p: &EmParams) -> Result<PerpSplit> {
    perp_split(&TensorCoefficients::REFERENCE, p)
}

fn perp_split(c: &TensorCoefficients, p: &EmParams) -> Result<PerpSplit> {
    if p.geometry.alignment() != Alignment::Perpendicular {
        return Err(Error::Usage("perpendicular energy needs a perpendicular geometry"));
    }
    crate::error::positive("omega0", p.omega0)?;
    let a = p.geometry.acceleration();
    let dist = p.geometry.image_distances();
    let w = p.omega0;
    let pb = p_tensor(&fh_perp_boundary_with(c, a, dist.image, w)?, a, dist.image, w)?;
    let p0 = p_tensor(&fh_perp_free_with(c, a, dist.direct, w)?, a, dist.direct, w)?;

    let s = p.sign.value();
    let q = 1.0 / (4.0 * PI);
    let mu = &p.dipoles;
    let xz = (X as usize, Z as usize);
    Ok(PerpSplit {
        diagonal: EnergyBreakdown::new(s * q * diagonal(mu, &p0), -(s * q * diagonal(mu, &pb))),
        cross: EnergyBreakdown::new(
            s * q * (s * antisym(mu, X, Z) * p0[xz.0][xz.1]),
            -(s * q * (s * sym(mu, X, Z) * pb[xz.0][xz.1])),
        ),
    })
}

/// Atoms side by side along `y`:
///
/// ```text
/// δE⁽ᵇ⁾ = −(1/4π)[Σᵢ μᴬᵢμᴮᵢ Pᵇᵢᵢ + (μᴬₓμᴮ_y − μᴬ_yμᴮₓ)Pᵇₓ_y
///                 + (μᴬₓμᴮ_z + μᴬ_zμᴮₓ)Pᵇₓ_z + (μᴬ_yμᴮ_z − μᴬ_zμᴮ_y)Pᵇ_yz]   at R
/// δE⁽⁰⁾ = +(1/4π)[Σᵢ μᴬᵢμᴮᵢ P⁰ᵢᵢ + (μᴬₓμᴮ_y − μᴬ_yμᴮₓ)P⁰ₓ_y]             at D
/// ```
///
/// No state sign enters; `p.sign` is ignored.
pub fn em_energy_par(p: &EmParams) -> Result<EnergyBreakdown> {
    par(&TensorCoefficients::REFERENCE, p)
}

fn par(c: &TensorCoefficients, p: &EmParams) -> Result<EnergyBreakdown> {
    if p.geometry.alignment() != Alignment::Parallel {
        return Err(Error::Usage("parallel energy needs a parallel geometry"));
    }
    crate::error::positive("omega0", p.omega0)?;
    let a = p.geometry.acceleration();
    let dist = p.geometry.image_distances();
    let w = p.omega0;
    let tb = fh_par_boundary_with(c, a, dist.direct, p.geometry.z(), w)?;
    let pb = p_tensor(&tb, a, dist.image, w)?;
    let p0 = p_tensor(&fh_par_free_with(c, a, dist.direct, w)?, a, dist.direct, w)?;

    let q = 1.0 / (4.0 * PI);
    let mu = &p.dipoles;
    let at = |m: &Matrix3, i: Axis, j: Axis| m[i as usize][j as usize];
    let boundary = diagonal(mu, &pb)
        + antisym(mu, X, Y) * at(&pb, X, Y)
        + sym(mu, X, Z) * at(&pb, X, Z)
        + antisym(mu, Y, Z) * at(&pb, Y, Z);
    let free = diagonal(mu, &p0) + antisym(mu, X, Y) * at(&p0, X, Y);
    Ok(EnergyBreakdown::new(q * free, -(q * boundary)))
}
