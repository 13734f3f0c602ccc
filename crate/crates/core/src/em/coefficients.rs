//! Numerical coefficients of the closed-form susceptibility functions.
//!
//! Every number that appears in the f/h expressions lives in one of these
//! tables, so that the validation suite can perturb a single entry and check
//! that something notices. The layout of each slot is documented next to the
//! field; `u` stands for `a²d²` with `d` the relevant distance and `𝒩² = 1 +
//! n_quarter·u`.

use alloc::vec::Vec;

/// Coefficients shared by the two perpendicular cases (mirror and free).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerpCoefficients {
    /// `𝒩² = 1 + n_quarter·a²d²`
    pub n_quarter: f64,
    /// `ω(c0 + c1·u) / (𝒩⁴d²)`
    pub f_xx: [f64; 2],
    /// `ω(c0 + c1·u) / (𝒩²d²)`
    pub f_yy: [f64; 2],
    /// `ω(c0 + c1·u + c2·u²) / (𝒩⁴d²)`
    pub f_zz: [f64; 3],
    /// `c0·aω(c1 + c2·u) / (𝒩⁴d)`
    pub f_xz: [f64; 3],
    /// `(c0 + c1·u + c2·u²) / (𝒩⁵d³) + c3·ω² / (𝒩³d)`
    pub h_xx: [f64; 4],
    /// `c0 / (𝒩³d³) + c1·ω² / (𝒩d)`
    pub h_yy: [f64; 2],
    /// `c0(c1 + c2·u) / (𝒩⁵d³) + c3·a²dω² / 𝒩³`
    pub h_zz: [f64; 4],
    /// `c0·a(c1 + c2·u) / (𝒩⁵d²) + c3·aω² / 𝒩³`
    pub h_xz: [f64; 4],
}

/// Coefficients of the parallel mirror case; `u = a²R²` with `R = √(D² + 4z²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParCoefficients {
    pub n_quarter: f64,
    /// `ω(c0 + c1·u) / (𝒩⁴R²)`
    pub f_xx: [f64; 2],
    /// `ω[c0·z² + c1·D² + c2·u(D² + c3·z²) + c4·u²(D² + c5·z²)] / (𝒩⁴R⁴)`
    pub f_yy: [f64; 6],
    /// `c6·ω[z²(c0 + c1·u + c2·u²) − D²(c3 + c4·u + c5·u²)] / (𝒩⁴R⁴)`
    pub f_zz: [f64; 7],
    /// `c0·ωaD(c1 + c2·u) / (𝒩⁴R²)`
    pub f_xy: [f64; 3],
    /// `c0·ωaz(c1 + c2·u) / (𝒩⁴R²)`
    pub f_xz: [f64; 3],
    /// `c0·ωzD(c1 + c2·u + c3·u²) / (𝒩⁴R⁴)`
    pub f_yz: [f64; 4],
    /// `(c0 + c1·u + c2·u²) / (𝒩⁵R³) + c3·ω² / (𝒩³R)`
    pub h_xx: [f64; 4],
    /// `(c0·D² + c1·z² + c2·u(c3·D² + c4·z²)) / (𝒩⁵R⁵)
    ///  + ω²[c5·z² + c6·u(c7·D² + c8·z²)] / (𝒩³R³)`
    pub h_yy: [f64; 9],
    /// `(D²(c0 + c1·u) + c2·z²(c3 + c4·u)) / (𝒩⁵R⁵)
    ///  + ω²[c5·z²u + c6·D²(c7 + c8·u)] / (𝒩³R³)`
    pub h_zz: [f64; 9],
    /// `c0·aD(c1 + c2·u) / (𝒩⁵R³) + c3·ω²aD / (𝒩³R)`
    pub h_xy: [f64; 4],
    /// `c0·az(c1 + c2·u) / (𝒩⁵R³) + c3·ω²az / (𝒩³R)`
    pub h_xz: [f64; 4],
    /// `c0·zD(c1 + c2·u) / (𝒩⁵R⁵) + c3·ω²zD(c4 + c5·u) / (𝒩³R³)`
    pub h_yz: [f64; 6],
}

/// The full set used by [`fh_perp_boundary_with`](super::fh_perp_boundary_with)
/// and friends. The free parallel case has no table of its own: it is the
/// free perpendicular case with `y` and `z` exchanged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TensorCoefficients {
    pub perp_boundary: PerpCoefficients,
    pub perp_free: PerpCoefficients,
    pub par_boundary: ParCoefficients,
}

pub const PERP_BOUNDARY: PerpCoefficients = PerpCoefficients {
    n_quarter: 0.25,
    f_xx: [1.0, 1.0],
    f_yy: [1.0, 0.5],
    f_zz: [2.0, 0.25, 0.125],
    f_xz: [-0.5, 1.0, -0.5],
    h_xx: [-1.0, -0.5, -0.25, 1.0],
    h_yy: [-1.0, 1.0],
    h_zz: [-2.0, 1.0, 0.625, 0.25],
    h_xz: [0.5, 1.0, 1.0, 0.5],
};

pub const PERP_FREE: PerpCoefficients = PerpCoefficients {
    n_quarter: 0.25,
    f_xx: [1.0, 1.0],
    f_yy: [1.0, 0.5],
    f_zz: [-2.0, -0.25, -0.125],
    f_xz: [0.5, 1.0, -0.5],
    h_xx: [-1.0, -0.5, -0.25, 1.0],
    h_yy: [-1.0, 1.0],
    h_zz: [2.0, 1.0, 0.625, -0.25],
    h_xz: [-0.5, 1.0, 1.0, -0.5],
};

pub const PAR_BOUNDARY: ParCoefficients = ParCoefficients {
    n_quarter: 0.25,
    f_xx: [1.0, 1.0],
    f_yy: [4.0, -2.0, -0.25, -12.0, -0.125, -4.0],
    f_zz: [16.0, 2.0, 1.0, 2.0, 1.5, 0.25, 0.5],
    f_xy: [-0.5, 1.0, -0.5],
    f_xz: [-1.0, 1.0, -0.5],
    f_yz: [-2.0, 3.0, 1.0, 0.25],
    h_xx: [-1.0, -0.5, -0.25, 1.0],
    h_yy: [2.0, -4.0, 0.25, 5.0, -4.0, 4.0, -0.25, 1.0, -4.0],
    h_zz: [1.0, 0.25, -8.0, 1.0, 0.625, 1.0, -1.0, 1.0, 0.25],
    h_xy: [0.5, 1.0, 1.0, 0.5],
    h_xz: [1.0, 1.0, 1.0, 1.0],
    h_yz: [6.0, 1.0, 0.5, -2.0, 1.0, 0.5],
};

impl TensorCoefficients {
    pub const REFERENCE: TensorCoefficients = TensorCoefficients {
        perp_boundary: PERP_BOUNDARY,
        perp_free: PERP_FREE,
        par_boundary: PAR_BOUNDARY,
    };

    /// Every coefficient with a stable name such as `perp_free.h_zz[3]`.
    pub fn slots_mut(&mut self) -> Vec<(Slot, &mut f64)> {
        let mut out = Vec::new();
        perp_slots(Table::PerpBoundary, &mut self.perp_boundary, &mut out);
        perp_slots(Table::PerpFree, &mut self.perp_free, &mut out);
        par_slots(&mut self.par_boundary, &mut out);
        out
    }

    pub fn slot_count() -> usize {
        let mut c = TensorCoefficients::REFERENCE;
        c.slots_mut().len()
    }

    /// Copy of `self` with slot `index` multiplied by `1 + relative`.
    pub fn perturbed(&self, index: usize, relative: f64) -> Option<(Slot, TensorCoefficients)> {
        let mut copy = *self;
        let slot = {
            let mut slots = copy.slots_mut();
            let (slot, value) = slots.get_mut(index)?;
            **value *= 1.0 + relative;
            *slot
        };
        Some((slot, copy))
    }
}

impl Default for TensorCoefficients {
    fn default() -> Self {
        Self::REFERENCE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    PerpBoundary,
    PerpFree,
    ParBoundary,
}

/// Name of one coefficient: table, function, position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub table: Table,
    pub function: &'static str,
    pub index: usize,
}

impl core::fmt::Display for Slot {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let table = match self.table {
            Table::PerpBoundary => "perp_boundary",
            Table::PerpFree => "perp_free",
            Table::ParBoundary => "par_boundary",
        };
        write!(f, "{table}.{}[{}]", self.function, self.index)
    }
}

fn push<'a>(table: Table, function: &'static str, values: &'a mut [f64], out: &mut Vec<(Slot, &'a mut f64)>) {
    for (index, v) in values.iter_mut().enumerate() {
        out.push((Slot { table, function, index }, v));
    }
}

fn perp_slots<'a>(table: Table, c: &'a mut PerpCoefficients, out: &mut Vec<(Slot, &'a mut f64)>) {
    push(table, "n_quarter", core::slice::from_mut(&mut c.n_quarter), out);
    push(table, "f_xx", &mut c.f_xx, out);
    push(table, "f_yy", &mut c.f_yy, out);
    push(table, "f_zz", &mut c.f_zz, out);
    push(table, "f_xz", &mut c.f_xz, out);
    push(table, "h_xx", &mut c.h_xx, out);
    push(table, "h_yy", &mut c.h_yy, out);
    push(table, "h_zz", &mut c.h_zz, out);
    push(table, "h_xz", &mut c.h_xz, out);
}

fn par_slots<'a>(c: &'a mut ParCoefficients, out: &mut Vec<(Slot, &'a mut f64)>) {
    let t = Table::ParBoundary;
    push(t, "n_quarter", core::slice::from_mut(&mut c.n_quarter), out);
    push(t, "f_xx", &mut c.f_xx, out);
    push(t, "f_yy", &mut c.f_yy, out);
    push(t, "f_zz", &mut c.f_zz, out);
    push(t, "f_xy", &mut c.f_xy, out);
    push(t, "f_xz", &mut c.f_xz, out);
    push(t, "f_yz", &mut c.f_yz, out);
    push(t, "h_xx", &mut c.h_xx, out);
    push(t, "h_yy", &mut c.h_yy, out);
    push(t, "h_zz", &mut c.h_zz, out);
    push(t, "h_xy", &mut c.h_xy, out);
    push(t, "h_xz", &mut c.h_xz, out);
    push(t, "h_yz", &mut c.h_yz, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_count_matches_tables() {
        let perp = 1 + 2 + 2 + 3 + 3 + 4 + 2 + 4 + 4;
        let par = 1 + 2 + 6 + 7 + 3 + 3 + 4 + 4 + 9 + 9 + 4 + 4 + 6;
        assert_eq!(TensorCoefficients::slot_count(), 2 * perp + par);
    }

    #[test]
    fn perturbation_touches_one_slot() {
        let base = TensorCoefficients::REFERENCE;
        let (slot, p) = base.perturbed(5, 1e-3).unwrap();
        assert_eq!(slot.function, "f_zz");
        assert_eq!(slot.index, 0);
        assert_eq!(p.perp_boundary.f_zz[0], 2.0 * (1.0 + 1e-3));
        assert_eq!(p.perp_free, base.perp_free);
        assert!(base.perturbed(TensorCoefficients::slot_count(), 1e-3).is_none());
    }

    #[test]
    fn slot_names_are_unique() {
        let mut c = TensorCoefficients::REFERENCE;
        let names: Vec<_> = c.slots_mut().into_iter().map(|(s, _)| s).collect();
        for (i, a) in names.iter().enumerate() {
            assert!(names[i + 1..].iter().all(|b| b != a), "{a}");
        }
    }
}
