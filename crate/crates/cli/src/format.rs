//! Number formatting shared by every command.

/// Nine significant digits in scientific notation, e.g. `-9.89096632e-2`.
pub fn sci(x: f64) -> String {
    format!("{x:.8e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_digits_round_trip() {
        let x = -0.098_909_663_183_339_36;
        let s = sci(x);
        assert_eq!(s, "-9.89096632e-2");
        let back: f64 = s.parse().unwrap();
        assert!(((back - x) / x).abs() < 5e-9);
    }
}
