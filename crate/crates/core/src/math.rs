//! Thin wrappers over libm so the rest of the crate reads like std float code.

pub(crate) const PI: f64 = core::f64::consts::PI;
pub(crate) const TAU: f64 = 2.0 * PI;

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn tan(x: f64) -> f64 {
    libm::tan(x)
}

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn pow(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub(crate) fn asin(x: f64) -> f64 {
    libm::asin(x)
}

#[inline]
pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

/// x^(1/4) for x >= 0.
#[inline]
pub(crate) fn quartic_root(x: f64) -> f64 {
    sqrt(sqrt(x))
}

/// Wraps x into [0, period).
#[inline]
pub(crate) fn wrap(x: f64, period: f64) -> f64 {
    let y = x - period * floor(x / period);
    if y >= period {
        y - period
    } else {
        y
    }
}

/// Integer power by repeated squaring; deterministic and exact for small n.
pub(crate) fn powi(x: f64, n: i64) -> f64 {
    let (mut base, mut n) = if n < 0 { (1.0 / x, n.unsigned_abs()) } else { (x, n as u64) };
    let mut acc = 1.0;
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    acc
}
