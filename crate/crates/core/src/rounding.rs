//! Presentation rounding. Library values are always full precision.

fn scale(x: f64, exp: i32) -> f64 {
    let r = if exp >= 0 {
        (x * 10f64.powi(exp)).round() / 10f64.powi(exp)
    } else {
        (x / 10f64.powi(-exp)).round() * 10f64.powi(-exp)
    };
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Round to `digits` significant figures (half away from zero).
pub fn round_sig(x: f64, digits: u32) -> f64 {
    if x == 0.0 || !x.is_finite() || digits == 0 {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    scale(x, digits as i32 - 1 - magnitude)
}

/// Round to `places` decimal places (half away from zero).
pub fn round_places(x: f64, places: u32) -> f64 {
    if !x.is_finite() {
        return x;
    }
    scale(x, places as i32)
}

/// Round half up to the nearest non-negative integer.
pub fn round_half_up(x: f64) -> f64 {
    (x + 0.5).floor()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_figures() {
        assert_eq!(round_sig(0.381_439_851, 3), 0.381);
        assert_eq!(round_sig(0.033_98, 3), 0.034);
        assert_eq!(round_sig(7.298e-2, 3), 7.30e-2);
        assert_eq!(round_sig(2.425e-5, 1), 2e-5);
        assert_eq!(round_sig(12345.0, 2), 12000.0);
        assert_eq!(round_sig(0.0, 3), 0.0);
        assert_eq!(round_sig(-0.0456, 2), -0.046);
    }

    #[test]
    fn places() {
        assert_eq!(round_places(0.240_99, 3), 0.241);
        assert_eq!(round_places(0.0305, 2), 0.03);
        assert_eq!(round_places(-0.0004, 3), 0.0);
    }

    #[test]
    fn half_up() {
        assert_eq!(round_half_up(11.5), 12.0);
        assert_eq!(round_half_up(11.49), 11.0);
        assert_eq!(round_half_up(30970.547), 30971.0);
    }
}
