use crate::error::{positive, Result};
use crate::hyperbolic::retarded_phase;

use super::coefficients::{ParCoefficients, PerpCoefficients, TensorCoefficients};
use super::{Axis, Matrix3, ZERO3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TensorCase {
    PerpBoundary,
    PerpFree,
    ParBoundary,
    ParFree,
}

/// Behaviour of an off-diagonal pair under `i ↔ j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSymmetry {
    Symmetric,
    Antisymmetric,
}

impl PairSymmetry {
    fn sign(self) -> f64 {
        match self {
            PairSymmetry::Symmetric => 1.0,
            PairSymmetry::Antisymmetric => -1.0,
        }
    }
}

use Axis::{X, Y, Z};
use PairSymmetry::{Antisymmetric, Symmetric};

const PERP_BOUNDARY_OFF: &[(Axis, Axis, PairSymmetry)] = &[(X, Z, Symmetric)];
const PERP_FREE_OFF: &[(Axis, Axis, PairSymmetry)] = &[(X, Z, Antisymmetric)];
const PAR_BOUNDARY_OFF: &[(Axis, Axis, PairSymmetry)] =
    &[(X, Y, Antisymmetric), (X, Z, Symmetric), (Y, Z, Antisymmetric)];
const PAR_FREE_OFF: &[(Axis, Axis, PairSymmetry)] = &[(X, Y, Antisymmetric)];

impl TensorCase {
    /// Off-diagonal pairs `(i, j)` with `i < j` that this case populates.
    pub fn off_diagonal(self) -> &'static [(Axis, Axis, PairSymmetry)] {
        match self {
            TensorCase::PerpBoundary => PERP_BOUNDARY_OFF,
            TensorCase::PerpFree => PERP_FREE_OFF,
            TensorCase::ParBoundary => PAR_BOUNDARY_OFF,
            TensorCase::ParFree => PAR_FREE_OFF,
        }
    }

    pub fn is_boundary(self) -> bool {
        matches!(self, TensorCase::PerpBoundary | TensorCase::ParBoundary)
    }

    /// Symmetry of the `(i, j)` pair, `None` for diagonal or unpopulated pairs.
    pub fn symmetry(self, i: Axis, j: Axis) -> Option<PairSymmetry> {
        self.off_diagonal()
            .iter()
            .find(|(p, q, _)| (*p == i && *q == j) || (*p == j && *q == i))
            .map(|(_, _, s)| *s)
    }
}

/// The `f_ij` and `h_ij` functions of one case at one `(a, distance, ω)`.
///
/// Both matrices are stored in full; entries outside the populated pairs are
/// exactly zero and the lower triangle is filled according to the pair
/// symmetry.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SusceptibilityTensor {
    pub case: TensorCase,
    pub f: Matrix3,
    pub h: Matrix3,
}

impl SusceptibilityTensor {
    pub fn f(&self, i: Axis, j: Axis) -> f64 {
        self.f[i as usize][j as usize]
    }

    pub fn h(&self, i: Axis, j: Axis) -> f64 {
        self.h[i as usize][j as usize]
    }

    fn from_parts(case: TensorCase, diag_f: [f64; 3], diag_h: [f64; 3], off: &[(f64, f64)]) -> Self {
        let mut f = ZERO3;
        let mut h = ZERO3;
        for k in 0..3 {
            f[k][k] = diag_f[k];
            h[k][k] = diag_h[k];
        }
        for (&(i, j, sym), &(fv, hv)) in case.off_diagonal().iter().zip(off) {
            let (i, j) = (i as usize, j as usize);
            f[i][j] = fv;
            h[i][j] = hv;
            f[j][i] = sym.sign() * fv;
            h[j][i] = sym.sign() * hv;
        }
        Self { case, f, h }
    }

    /// Whether the stored matrices honour the symmetry flags and the zero
    /// pattern of the case.
    pub fn symmetry_holds(&self) -> bool {
        for i in Axis::ALL {
            for j in Axis::ALL {
                if i == j {
                    continue;
                }
                let (fij, fji) = (self.f(i, j), self.f(j, i));
                let (hij, hji) = (self.h(i, j), self.h(j, i));
                let ok = match self.case.symmetry(i, j) {
                    Some(s) => fji == s.sign() * fij && hji == s.sign() * hij,
                    None => fij == 0.0 && hij == 0.0,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

struct Powers {
    n: f64,
    n2: f64,
    n3: f64,
    n4: f64,
    n5: f64,
    u: f64,
}

fn powers(n_quarter: f64, a: f64, d: f64) -> Powers {
    let u = a * a * d * d;
    let n2 = 1.0 + n_quarter * u;
    let n = libm::sqrt(n2);
    let n4 = n2 * n2;
    Powers { n, n2, n3: n2 * n, n4, n5: n4 * n, u }
}

fn perp_components(c: &PerpCoefficients, a: f64, d: f64, w: f64) -> ([f64; 3], [f64; 3], (f64, f64)) {
    let Powers { n, n2, n3, n4, n5, u } = powers(c.n_quarter, a, d);
    let d2 = d * d;
    let d3 = d2 * d;
    let w2 = w * w;

    let f_xx = w * (c.f_xx[0] + c.f_xx[1] * u) / (n4 * d2);
    let f_yy = w * (c.f_yy[0] + c.f_yy[1] * u) / (n2 * d2);
    let f_zz = w * (c.f_zz[0] + c.f_zz[1] * u + c.f_zz[2] * u * u) / (n4 * d2);
    let f_xz = c.f_xz[0] * a * w * (c.f_xz[1] + c.f_xz[2] * u) / (n4 * d);

    let h_xx = (c.h_xx[0] + c.h_xx[1] * u + c.h_xx[2] * u * u) / (n5 * d3) + c.h_xx[3] * w2 / (n3 * d);
    let h_yy = c.h_yy[0] / (n3 * d3) + c.h_yy[1] * w2 / (n * d);
    let h_zz = c.h_zz[0] * (c.h_zz[1] + c.h_zz[2] * u) / (n5 * d3) + c.h_zz[3] * a * a * d * w2 / n3;
    let h_xz = c.h_xz[0] * a * (c.h_xz[1] + c.h_xz[2] * u) / (n5 * d2) + c.h_xz[3] * a * w2 / n3;

    ([f_xx, f_yy, f_zz], [h_xx, h_yy, h_zz], (f_xz, h_xz))
}

/// Mirror contribution for atoms stacked along `z`, evaluated at the image
/// distance `ℛ = L + 2z`.
pub fn fh_perp_boundary(a: f64, r_img: f64, omega: f64) -> Result<SusceptibilityTensor> {
    fh_perp_boundary_with(&TensorCoefficients::REFERENCE, a, r_img, omega)
}

pub fn fh_perp_boundary_with(
    c: &TensorCoefficients,
    a: f64,
    r_img: f64,
    omega: f64,
) -> Result<SusceptibilityTensor> {
    check(a, omega)?;
    positive("image distance", r_img)?;
    let (f, h, off) = perp_components(&c.perp_boundary, a, r_img, omega);
    Ok(SusceptibilityTensor::from_parts(TensorCase::PerpBoundary, f, h, &[off]))
}

/// Free-space contribution for atoms a distance `L` apart along `z`.
pub fn fh_perp_free(a: f64, l: f64, omega: f64) -> Result<SusceptibilityTensor> {
    fh_perp_free_with(&TensorCoefficients::REFERENCE, a, l, omega)
}

pub fn fh_perp_free_with(c: &TensorCoefficients, a: f64, l: f64, omega: f64) -> Result<SusceptibilityTensor> {
    check(a, omega)?;
    positive("separation", l)?;
    let (f, h, off) = perp_components(&c.perp_free, a, l, omega);
    Ok(SusceptibilityTensor::from_parts(TensorCase::PerpFree, f, h, &[off]))
}

/// Free-space contribution for atoms a distance `D` apart along `y`: the
/// perpendicular free tensor with the `y` and `z` labels exchanged.
pub fn fh_par_free(a: f64, d: f64, omega: f64) -> Result<SusceptibilityTensor> {
    fh_par_free_with(&TensorCoefficients::REFERENCE, a, d, omega)
}

pub fn fh_par_free_with(c: &TensorCoefficients, a: f64, d: f64, omega: f64) -> Result<SusceptibilityTensor> {
    let t = fh_perp_free_with(c, a, d, omega)?;
    let swap = |m: &Matrix3| {
        let p = [0usize, 2, 1];
        let mut out = ZERO3;
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = m[p[i]][p[j]];
            }
        }
        out
    };
    Ok(SusceptibilityTensor { case: TensorCase::ParFree, f: swap(&t.f), h: swap(&t.h) })
}

/// Mirror contribution for atoms a distance `D` apart along `y`, each at
/// height `z`, with `R = √(D² + 4z²)`.
pub fn fh_par_boundary(a: f64, d: f64, z: f64, omega: f64) -> Result<SusceptibilityTensor> {
    fh_par_boundary_with(&TensorCoefficients::REFERENCE, a, d, z, omega)
}

pub fn fh_par_boundary_with(
    c: &TensorCoefficients,
    a: f64,
    d: f64,
    z: f64,
    omega: f64,
) -> Result<SusceptibilityTensor> {
    check(a, omega)?;
    positive("separation", d)?;
    positive("z", z)?;
    let (f, h, off) = par_components(&c.par_boundary, a, d, z, omega);
    Ok(SusceptibilityTensor::from_parts(TensorCase::ParBoundary, f, h, &off))
}

#[allow(clippy::type_complexity)]
fn par_components(c: &ParCoefficients, a: f64, d: f64, z: f64, w: f64) -> ([f64; 3], [f64; 3], [(f64, f64); 3]) {
    let d2 = d * d;
    let z2 = z * z;
    let r2 = d2 + 4.0 * z2;
    let r = libm::sqrt(r2);
    let r3 = r2 * r;
    let r4 = r2 * r2;
    let r5 = r4 * r;
    let Powers { n3, n4, n5, u, .. } = powers(c.n_quarter, a, r);
    let u2 = u * u;
    let w2 = w * w;

    let f_xx = w * (c.f_xx[0] + c.f_xx[1] * u) / (n4 * r2);
    let k = &c.f_yy;
    let f_yy = w * (k[0] * z2 + k[1] * d2 + k[2] * u * (d2 + k[3] * z2) + k[4] * u2 * (d2 + k[5] * z2)) / (n4 * r4);
    let k = &c.f_zz;
    let f_zz = k[6] * w * (z2 * (k[0] + k[1] * u + k[2] * u2) - d2 * (k[3] + k[4] * u + k[5] * u2)) / (n4 * r4);
    let f_xy = c.f_xy[0] * w * a * d * (c.f_xy[1] + c.f_xy[2] * u) / (n4 * r2);
    let f_xz = c.f_xz[0] * w * a * z * (c.f_xz[1] + c.f_xz[2] * u) / (n4 * r2);
    let k = &c.f_yz;
    let f_yz = k[0] * w * z * d * (k[1] + k[2] * u + k[3] * u2) / (n4 * r4);

    let k = &c.h_xx;
    let h_xx = (k[0] + k[1] * u + k[2] * u2) / (n5 * r3) + k[3] * w2 / (n3 * r);
    let k = &c.h_yy;
    let h_yy = (k[0] * d2 + k[1] * z2 + k[2] * u * (k[3] * d2 + k[4] * z2)) / (n5 * r5)
        + w2 * (k[5] * z2 + k[6] * u * (k[7] * d2 + k[8] * z2)) / (n3 * r3);
    let k = &c.h_zz;
    let h_zz = (d2 * (k[0] + k[1] * u) + k[2] * z2 * (k[3] + k[4] * u)) / (n5 * r5)
        + w2 * (k[5] * z2 * u + k[6] * d2 * (k[7] + k[8] * u)) / (n3 * r3);
    let k = &c.h_xy;
    let h_xy = k[0] * a * d * (k[1] + k[2] * u) / (n5 * r3) + k[3] * w2 * a * d / (n3 * r);
    let k = &c.h_xz;
    let h_xz = k[0] * a * z * (k[1] + k[2] * u) / (n5 * r3) + k[3] * w2 * a * z / (n3 * r);
    let k = &c.h_yz;
    let h_yz = k[0] * z * d * (k[1] + k[2] * u) / (n5 * r5) + k[3] * w2 * z * d * (k[4] + k[5] * u) / (n3 * r3);

    ([f_xx, f_yy, f_zz], [h_xx, h_yy, h_zz], [(f_xy, h_xy), (f_xz, h_xz), (f_yz, h_yz)])
}

fn check(a: f64, omega: f64) -> Result<()> {
    crate::error::non_negative("acceleration", a)?;
    crate::error::non_negative("omega", omega)?;
    Ok(())
}

/// `P_ij = f_ij·sin Θ − h_ij·cos Θ` with `Θ = (2ω₀/a)·asinh(a·d/2)`.
///
/// `t` must have been evaluated at `ω = omega0` and `d` must be the distance
/// belonging to its case: image distance for mirror terms, direct distance
/// for free terms.
pub fn p_tensor(t: &SusceptibilityTensor, a: f64, d: f64, omega0: f64) -> Result<Matrix3> {
    positive("distance", d)?;
    check(a, omega0)?;
    let theta = retarded_phase(a, d, omega0);
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let mut p = ZERO3;
    for ((row, f), h) in p.iter_mut().zip(&t.f).zip(&t.h) {
        for ((v, f), h) in row.iter_mut().zip(f).zip(h) {
            *v = f * s - h * c;
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn perp_boundary_static_values() {
        let (r, w) = (1.7, 0.9);
        let t = fh_perp_boundary(0.0, r, w).unwrap();
        assert!(close(t.f(X, X), w / (r * r), 1e-15));
        assert!(close(t.h(X, X), -1.0 / (r * r * r) + w * w / r, 1e-15));
        assert!(close(t.f(Z, Z), 2.0 * w / (r * r), 1e-15));
        assert!(close(t.h(Z, Z), -2.0 / (r * r * r), 1e-15));
        assert_eq!(t.f(X, Z), 0.0);
        assert_eq!(t.h(X, Z), 0.0);
    }

    #[test]
    fn perp_boundary_unit_point() {
        let t = fh_perp_boundary(1.0, 1.0, 1.0).unwrap();
        assert!(close(t.f(X, X), 1.28, 1e-15));
    }

    #[test]
    fn perp_free_static_values() {
        let (l, w) = (0.4, 2.0);
        let t = fh_perp_free(0.0, l, w).unwrap();
        assert!(close(t.f(Z, Z), -2.0 * w / (l * l), 1e-15));
        assert!(close(t.h(Z, Z), 2.0 / (l * l * l), 1e-15));
    }

    #[test]
    fn perp_free_cross_is_linear_in_a() {
        let (l, w) = (0.8, 1.3);
        let lead = -(1.0 / (2.0 * l * l) + w * w / 2.0);
        for a in [1e-4, 1e-6] {
            let t = fh_perp_free(a, l, w).unwrap();
            assert!(close(t.h(X, Z) / a, lead, 1e-6));
            assert_eq!(t.h(Z, X), -t.h(X, Z));
        }
    }

    #[test]
    fn par_free_is_relabelled_perp_free() {
        let (a, d, w) = (0.7, 1.4, 2.1);
        let p = fh_perp_free(a, d, w).unwrap();
        let q = fh_par_free(a, d, w).unwrap();
        assert_eq!(q.f(Y, Y), p.f(Z, Z));
        assert_eq!(q.f(Z, Z), p.f(Y, Y));
        assert_eq!(q.h(Y, Y), p.h(Z, Z));
        assert_eq!(q.f(X, Y), p.f(X, Z));
        assert_eq!(q.f(Y, X), -q.f(X, Y));
        assert_eq!(q.f(X, Z), 0.0);
        assert!(q.symmetry_holds());
    }

    #[test]
    fn par_boundary_static_values() {
        let (d, z, w) = (1.1, 0.6, 1.7);
        let t = fh_par_boundary(0.0, d, z, w).unwrap();
        let r = (d * d + 4.0 * z * z).sqrt();
        assert_eq!(t.f(X, Y), 0.0);
        assert_eq!(t.f(X, Z), 0.0);
        assert_eq!(t.h(X, Y), 0.0);
        let expect = 6.0 * z * d / r.powi(5) - 2.0 * w * w * z * d / r.powi(3);
        assert!(close(t.h(Y, Z), expect, 1e-14));
        assert!(t.f(Y, Z) != 0.0);
    }

    #[test]
    fn par_boundary_equal_split() {
        // D = 2z: the D² − 4z² groupings vanish.
        let (z, a, w) = (0.5, 1.3, 0.8);
        let d = 2.0 * z;
        let t = fh_par_boundary(a, d, z, w).unwrap();
        let r2 = d * d + 4.0 * z * z;
        let n2 = 1.0 + a * a * r2 / 4.0;
        let expect = w * (4.0 * z * z - 2.0 * d * d - 0.25 * a * a * r2 * (d * d - 12.0 * z * z)) / (n2 * n2 * r2 * r2);
        assert!(close(t.f(Y, Y), expect, 1e-14));
    }

    #[test]
    fn flags_hold_for_every_case() {
        for (a, d, z, w) in [(0.0, 1.0, 0.5, 1.0), (2.0, 0.3, 0.7, 4.0)] {
            for t in [
                fh_perp_boundary(a, d + 2.0 * z, w).unwrap(),
                fh_perp_free(a, d, w).unwrap(),
                fh_par_boundary(a, d, z, w).unwrap(),
                fh_par_free(a, d, w).unwrap(),
            ] {
                assert!(t.symmetry_holds(), "{:?}", t.case);
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(fh_perp_boundary(1.0, 0.0, 1.0).is_err());
        assert!(fh_perp_free(1.0, -1.0, 1.0).is_err());
        assert!(fh_par_boundary(1.0, 1.0, 0.0, 1.0).is_err());
        assert!(fh_par_boundary(1.0, 0.0, 1.0, 1.0).is_err());
        assert!(fh_par_free(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn static_p_tensor_textbook_forms() {
        let (l, w) = (0.9, 2.3);
        let t = fh_perp_free(0.0, l, w).unwrap();
        let p = p_tensor(&t, 0.0, l, w).unwrap();
        let (s, c) = ((w * l).sin(), (w * l).cos());
        let xx = w * s / (l * l) + (1.0 / l.powi(3) - w * w / l) * c;
        let zz = -2.0 * w * s / (l * l) - 2.0 * c / l.powi(3);
        assert!(close(p[0][0], xx, 1e-13));
        assert!(close(p[2][2], zz, 1e-13));
        assert_eq!(p[0][1], 0.0);
    }
}
