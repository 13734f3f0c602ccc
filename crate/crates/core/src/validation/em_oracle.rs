//! Independent forms of the electromagnetic tensors.

use crate::em::{fh_perp_free_with, Axis, Matrix3, SusceptibilityTensor, TensorCoefficients, Vector3};
use crate::error::{positive, Error, Result};

/// Mirror reflection `z → −z` applied to the field at the image point.
pub const MIRROR: Vector3 = [1.0, 1.0, -1.0];

fn unit(n: Vector3) -> Result<Vector3> {
    let len = libm::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if !len.is_finite() || len <= 0.0 {
        return Err(Error::Usage("direction must be a finite non-zero vector"));
    }
    Ok(n.map(|v| v / len))
}

/// The resonance dipole tensor between two atoms at rest,
///
/// ```text
/// V_ij = (δᵢⱼ − 3nᵢnⱼ)(cos ω₀d / d³ + ω₀ sin ω₀d / d²) − (δᵢⱼ − nᵢnⱼ) ω₀² cos ω₀d / d
/// ```
///
/// with `n̂` the unit separation vector.
pub fn em_static_oracle(d: f64, n_axis: Vector3, omega0: f64) -> Result<Matrix3> {
    positive("distance", d)?;
    let n = unit(n_axis)?;
    let (s, c) = (libm::sin(omega0 * d), libm::cos(omega0 * d));
    let near = c / (d * d * d) + omega0 * s / (d * d);
    let far = omega0 * omega0 * c / d;
    let mut v = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            v[i][j] = (delta - 3.0 * n[i] * n[j]) * near - (delta - n[i] * n[j]) * far;
        }
    }
    Ok(v)
}

/// Scale of the static tensor, used to judge components near a zero.
pub fn static_envelope(d: f64, omega0: f64) -> f64 {
    1.0 / (d * d * d) + omega0 / (d * d) + omega0 * omega0 / d
}

/// Column `j` multiplied by `MIRROR[j]`.
pub fn mirrored(m: &Matrix3) -> Matrix3 {
    let mut out = *m;
    for row in out.iter_mut() {
        for (v, s) in row.iter_mut().zip(MIRROR) {
            *v *= s;
        }
    }
    out
}

/// The free tensor for a separation along `e` (perpendicular to the
/// acceleration `k = x̂`), built from the free perpendicular tensor `t` by
/// rotating its `z` axis onto `e`:
///
/// ```text
/// G = t_xx k⊗k + t_zz e⊗e + t_yy m⊗m + t_xz (k⊗e − e⊗k),   m = k × e
/// ```
pub fn rotated_free(t: &SusceptibilityTensor, e: Vector3) -> Result<(Matrix3, Matrix3)> {
    let e = unit(e)?;
    if e[0].abs() > 1e-12 {
        return Err(Error::Usage("direction must be perpendicular to the acceleration"));
    }
    let k = Axis::X.unit();
    let m = [0.0, -e[2], e[1]];
    let build = |g: &Matrix3| {
        let (kk, ee, mm, ke) = (g[0][0], g[2][2], g[1][1], g[0][2]);
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = kk * k[i] * k[j] + ee * e[i] * e[j] + mm * m[i] * m[j] + ke * (k[i] * e[j] - e[i] * k[j]);
            }
        }
        out
    };
    Ok((build(&t.f), build(&t.h)))
}

/// Mirror-term `f` and `h` predicted from the free tensor at the image: the
/// free tensor along `e = (x_A − x̄_B)/|x_A − x̄_B|` at the image distance,
/// reflected on the source index.
pub fn image_boundary(
    c: &TensorCoefficients,
    a: f64,
    image: f64,
    e: Vector3,
    omega: f64,
) -> Result<(Matrix3, Matrix3)> {
    let t = fh_perp_free_with(c, a, image, omega)?;
    let (f, h) = rotated_free(&t, e)?;
    Ok((mirrored(&f), mirrored(&h)))
}

/// Direction from atom A to the image of atom B for the two alignments.
pub fn image_direction_perp() -> Vector3 {
    [0.0, 0.0, 1.0]
}

pub fn image_direction_par(d: f64, z: f64) -> Vector3 {
    [0.0, -d, 2.0 * z]
}
