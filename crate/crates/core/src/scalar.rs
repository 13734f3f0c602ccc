//! Resonance interaction through a massless scalar field obeying Dirichlet
//! conditions on the plate.
//!
//! With `Θ(d) = (2ω₀/a)·asinh(a·d/2)` and `𝒩(d) = √(1 + a²d²/4)` the
//! interaction is carried by the kernel
//!
//! ```text
//! K(d) = cos Θ(d) / (d·𝒩(d))
//! ```
//!
//! evaluated at the direct distance (free-space term) and at the image
//! distance (mirror term):
//!
//! ```text
//! δE = ∓ (λ²/16π) · [K(direct) − K(image)]      upper sign: symmetric state
//! ```
//!
//! Both alignments share the same kernel; only their image distance differs.

use core::f64::consts::PI;

use crate::error::{non_negative, positive, Error, Result};
use crate::geometry::{ImageDistances, PairGeometry};
use crate::hyperbolic::{redshift, retarded_phase};
use crate::{BellSign, EnergyBreakdown};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarParams {
    pub geometry: PairGeometry,
    /// Transition frequency ω₀ in eV.
    pub omega0: f64,
    /// Dimensionless coupling squared λ².
    pub lambda_sq: f64,
    pub sign: BellSign,
}

impl ScalarParams {
    pub fn new(geometry: PairGeometry, omega0: f64, lambda_sq: f64, sign: BellSign) -> Result<Self> {
        Ok(Self {
            geometry,
            omega0: positive("omega0", omega0)?,
            lambda_sq: non_negative("lambda_sq", lambda_sq)?,
            sign,
        })
    }

    fn checked(&self) -> Result<&Self> {
        positive("omega0", self.omega0)?;
        non_negative("lambda_sq", self.lambda_sq)?;
        Ok(self)
    }
}

/// `K(d) = cos((2ω₀/a)·asinh(a·d/2)) / (d·√(1 + a²d²/4))`; `cos(ω₀d)/d` at `a = 0`.
pub fn scalar_kernel(a: f64, d: f64, omega0: f64) -> Result<f64> {
    positive("distance", d)?;
    non_negative("acceleration", a)?;
    positive("omega0", omega0)?;
    Ok(kernel(a, d, omega0))
}

#[inline]
fn kernel(a: f64, d: f64, omega0: f64) -> f64 {
    libm::cos(retarded_phase(a, d, omega0)) / (d * redshift(a, d))
}

/// Per-frequency weight `sin((2ω/a)·asinh(a·d/2)) / (d·√(1 + a²d²/4))` of the
/// field susceptibility along the two world lines.
pub fn scalar_spectral_kernel(a: f64, d: f64, omega: f64) -> Result<f64> {
    positive("distance", d)?;
    non_negative("acceleration", a)?;
    non_negative("omega", omega)?;
    Ok(libm::sin(retarded_phase(a, d, omega)) / (d * redshift(a, d)))
}

// ∓ on the free term, ± on the mirror term. Written as `-(s·q·K)` and
// `s·q·K` so that equal kernels cancel bitwise.
fn assemble(sign: BellSign, prefactor: f64, free: f64, image: f64) -> EnergyBreakdown {
    let s = sign.value();
    EnergyBreakdown::new(-(s * (prefactor * free)), s * (prefactor * image))
}

fn distances(p: &ScalarParams) -> ImageDistances {
    p.geometry.image_distances()
}

/// Exact closed form for either alignment.
pub fn scalar_energy(p: &ScalarParams) -> Result<EnergyBreakdown> {
    p.checked()?;
    let d = distances(p);
    let a = p.geometry.acceleration();
    let q = p.lambda_sq / (16.0 * PI);
    Ok(assemble(
        p.sign,
        q,
        kernel(a, d.direct, p.omega0),
        kernel(a, d.image, p.omega0),
    ))
}

#[inline]
fn near_zone_term(d: f64, omega0: f64) -> f64 {
    libm::cos(omega0 * d) / d
}

// cos((2ω₀/a)·ln(a·d/2)) / (a·d²)
#[inline]
fn far_zone_term(a: f64, d: f64, omega0: f64) -> f64 {
    libm::cos(2.0 * omega0 / a * libm::log(0.5 * a * d)) / (a * d * d)
}

/// Atoms at rest: `∓(λ²/16π)[cos(ω₀·direct)/direct − cos(ω₀·image)/image]`.
/// The acceleration stored in the geometry is ignored.
pub fn scalar_energy_static(p: &ScalarParams) -> Result<EnergyBreakdown> {
    p.checked()?;
    let d = distances(p);
    let q = p.lambda_sq / (16.0 * PI);
    Ok(assemble(
        p.sign,
        q,
        near_zone_term(d.direct, p.omega0),
        near_zone_term(d.image, p.omega0),
    ))
}

/// Far-zone form, meant for `image > direct ≫ 1/a`:
/// `∓(λ²/8πa)[cos((2ω₀/a)ln(aL/2))/L² − cos((2ω₀/a)ln(aℛ/2))/ℛ²]`.
///
/// The regime is not enforced. Note that `asinh(x) → ln(2x)` for large `x`,
/// so the logarithm above lags the exact phase by `(2ω₀/a)·ln 2`; the form is
/// accurate only while that offset is small.
pub fn scalar_energy_far_zone(p: &ScalarParams) -> Result<EnergyBreakdown> {
    p.checked()?;
    let a = far_zone_acceleration(p)?;
    let d = distances(p);
    let q = p.lambda_sq / (8.0 * PI);
    Ok(assemble(
        p.sign,
        q,
        far_zone_term(a, d.direct, p.omega0),
        far_zone_term(a, d.image, p.omega0),
    ))
}

/// Intermediate zone `image ≫ 1/a ≫ direct`:
/// `∓(λ²/8π)[cos(ω₀L)/(2L) − cos((2ω₀/a)ln(aℛ/2))/(aℛ²)]`.
///
/// The free term coincides bitwise with [`scalar_energy_static`], the mirror
/// term with [`scalar_energy_far_zone`].
pub fn scalar_energy_intermediate(p: &ScalarParams) -> Result<EnergyBreakdown> {
    p.checked()?;
    let a = far_zone_acceleration(p)?;
    let d = distances(p);
    let q = p.lambda_sq / (8.0 * PI);
    Ok(assemble(
        p.sign,
        q,
        0.5 * near_zone_term(d.direct, p.omega0),
        far_zone_term(a, d.image, p.omega0),
    ))
}

fn far_zone_acceleration(p: &ScalarParams) -> Result<f64> {
    let a = p.geometry.acceleration();
    if a > 0.0 {
        Ok(a)
    } else {
        Err(Error::domain("acceleration", "> 0 for asymptotic forms", a))
    }
}

/// Envelope `1/(d·𝒩(d))` of the kernel, used to judge phase zeros.
pub fn kernel_envelope(a: f64, d: f64) -> f64 {
    1.0 / (d * redshift(a, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Alignment;

    const L: f64 = 7.5e-2;
    const Z: f64 = 2.0e-2;
    const W0: f64 = 4.17;

    fn params(alignment: Alignment, sep: f64, z: f64, a: f64, sign: BellSign) -> ScalarParams {
        let g = PairGeometry::new(alignment, sep, z, a).unwrap();
        ScalarParams::new(g, W0, 1.0, sign).unwrap()
    }

    #[test]
    fn kernel_at_half_period() {
        let k = scalar_kernel(0.0, PI / W0, W0).unwrap();
        assert!((k + W0 / PI).abs() < 1e-14);
    }

    #[test]
    fn kernel_accelerated_example() {
        // cos(asinh 1)/√2
        let k = scalar_kernel(2.0, 1.0, 1.0).unwrap();
        assert!((k - 0.449_784_872_289_726).abs() < 1e-14, "{k}");
    }

    #[test]
    fn kernel_near_inertial() {
        for w in [0.3, 1.0, 4.17] {
            let d = 1.0;
            let a = 1e-6 / d;
            let k = scalar_kernel(a, d, w).unwrap();
            let k0 = scalar_kernel(0.0, d, w).unwrap();
            assert!(((k - k0) / k0).abs() < 1e-10);
        }
    }

    #[test]
    fn kernel_rejects_bad_distance() {
        assert!(scalar_kernel(1.0, 0.0, 1.0).is_err());
        assert!(scalar_kernel(1.0, -2.0, 1.0).is_err());
        assert!(scalar_kernel(-1.0, 2.0, 1.0).is_err());
    }

    #[test]
    fn spectral_kernel_values() {
        assert_eq!(scalar_spectral_kernel(2.0, 1.0, 0.0).unwrap(), 0.0);
        let v = scalar_spectral_kernel(0.0, 1.3, 2.0).unwrap();
        assert!((v - libm::sin(2.6) / 1.3).abs() < 1e-15);
        let v = scalar_spectral_kernel(2.0, 1.0, 1.0).unwrap();
        assert!((v - 0.545_613_020_976_694_5).abs() < 1e-14, "{v}");
    }

    #[test]
    fn mirror_contact_cancels_exactly() {
        for a in [0.0, 1e-3, 2.0, 300.0] {
            let p = params(Alignment::Perpendicular, L, 0.0, a, BellSign::Symmetric);
            let e = scalar_energy(&p).unwrap();
            assert_eq!(e.total, 0.0);
            assert_eq!(e.free_term, -e.boundary_term);
        }
    }

    #[test]
    fn sign_flip_negates_components() {
        let s = scalar_energy(&params(Alignment::Parallel, L, Z, 3.0, BellSign::Symmetric)).unwrap();
        let t = scalar_energy(&params(Alignment::Parallel, L, Z, 3.0, BellSign::Antisymmetric)).unwrap();
        assert_eq!(s, t.negated());
    }

    #[test]
    fn static_reference_values() {
        let e = scalar_energy_static(&params(Alignment::Perpendicular, L, Z, 0.0, BellSign::Symmetric))
            .unwrap();
        assert!((e.total + 0.098_909_663_183_339_36).abs() < 1e-15, "{}", e.total);
        let e =
            scalar_energy_static(&params(Alignment::Parallel, L, Z, 0.0, BellSign::Symmetric)).unwrap();
        assert!((e.total + 0.032_888_669_523_495_48).abs() < 1e-15, "{}", e.total);
    }

    #[test]
    fn static_cosine_zeros() {
        // ω₀·L = π/2 and ω₀·ℛ = 3π/2 with ℛ = L + 2z.
        let l = PI / 2.0 / W0;
        let z = (3.0 * PI / 2.0 / W0 - l) / 2.0;
        let e = scalar_energy_static(&params(Alignment::Perpendicular, l, z, 0.0, BellSign::Symmetric))
            .unwrap();
        assert!(e.total.abs() < 1e-14, "{}", e.total);
    }

    #[test]
    fn section_estimate_acceleration_is_static_like() {
        let p = params(Alignment::Perpendicular, L, Z, 2.2e-6, BellSign::Symmetric);
        let e = scalar_energy(&p).unwrap();
        let s = scalar_energy_static(&p).unwrap();
        assert!((e.total + 9.89e-2).abs() < 1e-4);
        assert!(((e.total - s.total) / s.total).abs() < 1e-10);
    }

    #[test]
    fn asymptotic_forms_need_acceleration() {
        let p = params(Alignment::Perpendicular, L, Z, 0.0, BellSign::Symmetric);
        assert!(scalar_energy_far_zone(&p).is_err());
        assert!(scalar_energy_intermediate(&p).is_err());
    }

    #[test]
    fn intermediate_reuses_limits_bitwise() {
        for (a, sign) in [(1e2, BellSign::Symmetric), (7.3, BellSign::Antisymmetric)] {
            let p = params(Alignment::Perpendicular, 1e-3, 4.0, a, sign);
            let mid = scalar_energy_intermediate(&p).unwrap();
            let stat = scalar_energy_static(&p).unwrap();
            let far = scalar_energy_far_zone(&p).unwrap();
            assert_eq!(mid.free_term, stat.free_term);
            assert_eq!(mid.boundary_term, far.boundary_term);
        }
    }

    #[test]
    fn far_zone_free_envelope_quarter_on_doubling() {
        // With ω₀/a → 0 the cosine is ~1 and only the 1/L² envelope remains.
        let mut p = params(Alignment::Perpendicular, 10.0, 100.0, 1e3, BellSign::Symmetric);
        p.omega0 = 1e-9;
        let e1 = scalar_energy_far_zone(&p).unwrap().free_term;
        p.geometry = p.geometry.with_separation(20.0).unwrap();
        let e2 = scalar_energy_far_zone(&p).unwrap().free_term;
        assert!((e2 / e1 - 0.25).abs() < 1e-12);
    }

    #[test]
    fn far_zone_tracks_exact_form() {
        let d = 1.0;
        for (ad, tol) in [(1e2, 1e-2), (1e4, 1e-6)] {
            let mut p = params(Alignment::Perpendicular, d, 0.8, ad / d, BellSign::Symmetric);
            p.omega0 = 0.3;
            let far = scalar_energy_far_zone(&p).unwrap();
            let exact = scalar_energy(&p).unwrap();
            let rel = ((far.free_term - exact.free_term) / exact.free_term).abs();
            assert!(rel < tol, "a·d={ad} rel={rel}");
        }
    }
}
