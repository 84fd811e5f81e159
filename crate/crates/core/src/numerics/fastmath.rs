//! Scalar special functions used by the activation kernels.

/// Abramowitz–Stegun 7.1.26 rational approximation of erf, max absolute
/// error 1.5e-7 — below f32 round-off, so this is the exact erf at f32
/// precision while staying cheap enough for the hot path.
pub fn erf_f32(x: f32) -> f32 {
    const P: f32 = 0.327_591_1;
    const A1: f32 = 0.254_829_592;
    const A2: f32 = -0.284_496_736;
    const A3: f32 = 1.421_413_741;
    const A4: f32 = -1.453_152_027;
    const A5: f32 = 1.061_405_429;

    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    let x = x.abs();
    let t = 1.0 / (1.0 + P * x);
    let poly = ((((A5 * t + A4) * t + A3) * t + A2) * t + A1) * t;
    sign * (1.0 - poly * (-x * x).exp())
}

pub const INV_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;
pub const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erf_f32_matches_reference() {
        let mut max_err = 0.0f64;
        let mut x = -6.0f64;
        while x <= 6.0 {
            let approx = erf_f32(x as f32) as f64;
            let exact = libm::erf(x);
            max_err = max_err.max((approx - exact).abs());
            x += 0.001;
        }
        assert!(max_err < 2.5e-7, "erf approximation error {max_err}");
    }

    #[test]
    fn erf_f32_odd_and_saturating() {
        assert_eq!(erf_f32(0.0), 0.0);
        assert_eq!(erf_f32(-1.5), -erf_f32(1.5));
        assert!((erf_f32(10.0) - 1.0).abs() < 1e-7);
        assert!((erf_f32(-10.0) + 1.0).abs() < 1e-7);
    }
}
