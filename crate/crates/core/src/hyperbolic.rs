//! `(2/a)·sinh(a·x/2)` and `(2/a)·asinh(a·x/2)` with a Taylor branch near the
//! inertial limit, plus the redshift factor `√(1 + a²x²/4)`.
//!
//! Both maps tend to `x` as `a → 0`. Below [`SERIES_THRESHOLD`] in `a·x` the
//! closed forms are replaced by their expansions through `(a·x)⁴`; the first
//! dropped term is of relative size `(a·x)⁶ / 3·10⁵`, far below `f64` resolution.

/// Value of `a·x` under which the series branch is used.
pub const SERIES_THRESHOLD: f64 = 1e-4;

/// `(2/a)·sinh(a·x/2)`, the proper-time to chord map on a hyperbolic world line.
#[inline]
pub fn sinh_stretch(a: f64, x: f64) -> f64 {
    let ax = a * x;
    if ax.abs() < SERIES_THRESHOLD {
        let s = ax * ax;
        x * (1.0 + s / 24.0 + s * s / 1920.0)
    } else {
        2.0 / a * libm::sinh(0.5 * ax)
    }
}

/// `(2/a)·asinh(a·x/2)`, the inverse of [`sinh_stretch`] in `x`.
#[inline]
pub fn asinh_stretch(a: f64, x: f64) -> f64 {
    let ax = a * x;
    if ax.abs() < SERIES_THRESHOLD {
        let s = ax * ax;
        x * (1.0 - s / 24.0 + 3.0 * s * s / 640.0)
    } else {
        2.0 / a * libm::asinh(0.5 * ax)
    }
}

/// `√(1 + a²x²/4)`.
#[inline]
pub fn redshift(a: f64, x: f64) -> f64 {
    let h = 0.5 * a * x;
    libm::sqrt(1.0 + h * h)
}

/// Accumulated phase `ω·(2/a)·asinh(a·d/2)` of a mode of frequency `omega`
/// between world lines a distance `d` apart; `ω·d` at `a = 0`.
#[inline]
pub fn retarded_phase(a: f64, d: f64, omega: f64) -> f64 {
    omega * asinh_stretch(a, d)
}
