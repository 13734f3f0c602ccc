//! Light-cone evaluation of the scalar kernel.
//!
//! The commutator of a massless field is supported on the light cone, so the
//! kernel reduces to the retarded crossing `Δτ*` of the source world line with
//! the past light cone of the observation event, weighted by the Jacobian of
//! the delta function. Nothing here calls the closed-form kernel; the only
//! shared ingredient is the world-line interval.

use core::f64::consts::PI;

use crate::error::{positive, Error, Result};
use crate::geometry::rindler_interval;
use crate::scalar::ScalarParams;
use crate::EnergyBreakdown;

/// Bisection stops once the bracket is this fraction of its upper end.
pub const BISECTION_WIDTH: f64 = 1e-3;
/// Newton stops once the step is this fraction of the iterate.
pub const NEWTON_TOLERANCE: f64 = 1e-12;
/// Bisection and Newton steps together.
pub const MAX_STEPS: usize = 200;
/// Central-difference step, relative to `Δτ*`.
pub const DIFFERENCE_STEP: f64 = 1e-6;

/// Proper-time lapse `Δτ*` at which the interval `(2/a)·sinh(aΔτ/2)` reaches
/// `d`, with the number of steps used.
pub fn light_cone_crossing(a: f64, d: f64) -> Result<(f64, usize)> {
    positive("acceleration", a)?;
    positive("distance", d)?;
    let g = |t: f64| rindler_interval(a, t) - d;

    // sinh(x) ≥ x, so the interval at Δτ = d is already at least d.
    let (mut lo, mut hi) = (0.0, d);
    let mut steps = 0;
    while hi - lo > BISECTION_WIDTH * hi {
        steps += 1;
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let mut t = 0.5 * (lo + hi);
    loop {
        if steps >= MAX_STEPS {
            return Err(Error::NoConvergence { iterations: steps, last: t });
        }
        steps += 1;
        let residual = g(t);
        if residual == 0.0 {
            return Ok((t, steps));
        }
        let h = DIFFERENCE_STEP * t;
        let slope = (g(t + h) - g(t - h)) / (2.0 * h);
        let step = residual / slope;
        let mut next = t - step;
        if !(next >= lo && next <= hi) || !step.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if g(next) < 0.0 {
            lo = lo.max(next);
        } else {
            hi = hi.min(next);
        }
        let done = (next - t).abs() <= NEWTON_TOLERANCE * next;
        t = next;
        if done {
            return Ok((t, steps));
        }
    }
}

// Differences along two hyperbolae t = sinh(aτ)/a, x = cosh(aτ)/a that are
// offset by `d` transverse to the acceleration. Written in product form to
// avoid cancelling the large cosh terms.
fn separations(a: f64, d: f64, tau: f64, tau_src: f64) -> (f64, f64) {
    let mean = 0.5 * a * (tau + tau_src);
    let half = libm::sinh(0.5 * a * (tau - tau_src));
    let dt = 2.0 * libm::cosh(mean) * half / a;
    let dx = 2.0 * libm::sinh(mean) * half / a;
    (dt, libm::sqrt(dx * dx + d * d))
}

/// `1/(|Δx|·|∂(Δt − |Δx|)/∂τ'|)` at the retarded crossing, observation at
/// `τ = Δτ*/2` and source at `τ' = −Δτ*/2`.
pub fn light_cone_weight(a: f64, d: f64, dtau: f64) -> f64 {
    let tau = 0.5 * dtau;
    let cone = |src: f64| {
        let (dt, r) = separations(a, d, tau, src);
        dt - r
    };
    let h = DIFFERENCE_STEP * dtau;
    let slope = (cone(-tau + h) - cone(-tau - h)) / (2.0 * h);
    let (_, r) = separations(a, d, tau, -tau);
    1.0 / (r * slope.abs())
}

/// The scalar kernel from the light-cone construction: `cos(ω₀Δτ*)` times the
/// delta-function weight, taken at the retarded crossing.
pub fn scalar_delta_root_oracle(a: f64, d: f64, omega0: f64) -> Result<f64> {
    let (dtau, _) = light_cone_crossing(a, d)?;
    Ok(libm::cos(omega0 * dtau) * light_cone_weight(a, d, dtau))
}

/// Energy assembled from oracle kernels at the direct and image distances.
///
/// The source-field term is `2 × (1/8π) × (−1) × (s/4) × λ²` times the kernel
/// of the free propagator, and the Dirichlet image enters with opposite sign.
pub fn scalar_oracle_energy(p: &ScalarParams) -> Result<EnergyBreakdown> {
    let a = p.geometry.acceleration();
    let d = p.geometry.image_distances();
    let coupling = -2.0 * (1.0 / (8.0 * PI)) * (p.sign.value() / 4.0) * p.lambda_sq;
    let free = coupling * scalar_delta_root_oracle(a, d.direct, p.omega0)?;
    let boundary = -coupling * scalar_delta_root_oracle(a, d.image, p.omega0)?;
    Ok(EnergyBreakdown::new(free, boundary))
}
