//! Monotone cubic (Fritsch–Carlson) interpolation tables.
//!
//! All torus tables (actions, angle coordinates, inverses) are stored as
//! `PchipTable`s: C^1 piecewise-cubic Hermite interpolants whose node
//! derivatives are limited so that locally monotone data stays monotone.
//! Inverse tables are built by swapping the roles of abscissa and ordinate,
//! which is valid exactly because monotonicity is preserved.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct InterpError(pub String);

impl fmt::Display for InterpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "interpolation table: {}", self.0)
    }
}

impl core::error::Error for InterpError {}

/// A cubic Hermite table with Fritsch–Carlson limited derivatives.
#[derive(Debug, Clone)]
pub struct PchipTable {
    xs: Vec<f64>,
    ys: Vec<f64>,
    ds: Vec<f64>,
}

impl PchipTable {
    /// Builds a table over strictly increasing abscissae.
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self, InterpError> {
        let n = xs.len();
        if n < 2 || ys.len() != n {
            return Err(InterpError(String::from("need at least two matching nodes")));
        }
        for w in xs.windows(2) {
            if !(w[1] > w[0]) {
                return Err(InterpError(String::from("abscissae not strictly increasing")));
            }
        }
        let mut h = Vec::with_capacity(n - 1);
        let mut slope = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            h.push(xs[i + 1] - xs[i]);
            slope.push((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]));
        }
        let mut ds = Vec::with_capacity(n);
        ds.push(endpoint_derivative(h[0], h.get(1).copied().unwrap_or(h[0]), slope[0], slope.get(1).copied().unwrap_or(slope[0])));
        for i in 1..n - 1 {
            ds.push(interior_derivative(h[i - 1], h[i], slope[i - 1], slope[i]));
        }
        ds.push(endpoint_derivative(
            h[n - 2],
            if n >= 3 { h[n - 3] } else { h[n - 2] },
            slope[n - 2],
            if n >= 3 { slope[n - 3] } else { slope[n - 2] },
        ));
        Ok(PchipTable { xs, ys, ds })
    }

    pub fn x_min(&self) -> f64 {
        self.xs[0]
    }

    pub fn x_max(&self) -> f64 {
        *self.xs.last().unwrap()
    }

    pub fn nodes(&self) -> (&[f64], &[f64]) {
        (&self.xs, &self.ys)
    }

    /// Evaluates the interpolant. Queries are clamped to the table range;
    /// tables are always built to cover the domain they serve.
    pub fn eval(&self, x: f64) -> f64 {
        let x = x.max(self.xs[0]).min(*self.xs.last().unwrap());
        let i = self.cell_of(x);
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let h = x1 - x0;
        let t = (x - x0) / h;
        let (y0, y1, d0, d1) = (self.ys[i], self.ys[i + 1], self.ds[i], self.ds[i + 1]);
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1
    }

    /// Derivative of the interpolant.
    pub fn eval_deriv(&self, x: f64) -> f64 {
        let x = x.max(self.xs[0]).min(*self.xs.last().unwrap());
        let i = self.cell_of(x);
        let (x0, x1) = (self.xs[i], self.xs[i + 1]);
        let h = x1 - x0;
        let t = (x - x0) / h;
        let (y0, y1, d0, d1) = (self.ys[i], self.ys[i + 1], self.ds[i], self.ds[i + 1]);
        let t2 = t * t;
        let dh00 = (6.0 * t2 - 6.0 * t) / h;
        let dh10 = (3.0 * t2 - 4.0 * t + 1.0) / h;
        let dh01 = (-6.0 * t2 + 6.0 * t) / h;
        let dh11 = (3.0 * t2 - 2.0 * t) / h;
        dh00 * y0 + dh10 * h * d0 + dh01 * y1 + dh11 * h * d1
    }

    /// True when the ordinates are strictly monotone (either direction).
    pub fn strictly_monotone(&self) -> bool {
        let inc = self.ys.windows(2).all(|w| w[1] > w[0]);
        let dec = self.ys.windows(2).all(|w| w[1] < w[0]);
        inc || dec
    }

    /// Builds the inverse table y -> x; requires strictly monotone ordinates.
    pub fn inverse(&self) -> Result<PchipTable, InterpError> {
        if !self.strictly_monotone() {
            return Err(InterpError(String::from("cannot invert a non-monotone table")));
        }
        if self.ys[1] > self.ys[0] {
            PchipTable::new(self.ys.clone(), self.xs.clone())
        } else {
            // reversed so the new abscissae are increasing
            let xs: Vec<f64> = self.ys.iter().rev().copied().collect();
            let ys: Vec<f64> = self.xs.iter().rev().copied().collect();
            PchipTable::new(xs, ys)
        }
    }

    fn cell_of(&self, x: f64) -> usize {
        let n = self.xs.len();
        let mut lo = 0usize;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.xs[mid] <= x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

/// A C^2 cubic spline with not-a-knot end conditions, for smooth tables
/// that are not monotone (the PCHIP limiter would flatten their extrema
/// to O(h^2) accuracy). Strictly a fallback for interpolation, never for
/// inversion.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// second derivatives at the nodes
    m2: Vec<f64>,
}

impl CubicSpline {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self, InterpError> {
        let n = xs.len();
        if n < 4 || ys.len() != n {
            return Err(InterpError(String::from("cubic spline needs at least four nodes")));
        }
        for w in xs.windows(2) {
            if !(w[1] > w[0]) {
                return Err(InterpError(String::from("abscissae not strictly increasing")));
            }
        }
        // Clamped spline with end slopes from one-sided cubic fits; the
        // resulting tridiagonal system is diagonally dominant.
        let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
        let slope_lo = cubic_end_slope(&xs[..4], &ys[..4], xs[0]);
        let slope_hi = cubic_end_slope(&xs[n - 4..], &ys[n - 4..], xs[n - 1]);
        let mut a = alloc::vec![0.0; n]; // sub-diagonal
        let mut b = alloc::vec![0.0; n]; // diagonal
        let mut c = alloc::vec![0.0; n]; // super-diagonal
        let mut d = alloc::vec![0.0; n]; // rhs
        b[0] = 2.0 * h[0];
        c[0] = h[0];
        d[0] = 6.0 * ((ys[1] - ys[0]) / h[0] - slope_lo);
        for i in 1..n - 1 {
            a[i] = h[i - 1];
            b[i] = 2.0 * (h[i - 1] + h[i]);
            c[i] = h[i];
            d[i] = 6.0 * ((ys[i + 1] - ys[i]) / h[i] - (ys[i] - ys[i - 1]) / h[i - 1]);
        }
        a[n - 1] = h[n - 2];
        b[n - 1] = 2.0 * h[n - 2];
        d[n - 1] = 6.0 * (slope_hi - (ys[n - 1] - ys[n - 2]) / h[n - 2]);
        // Thomas algorithm
        let mut cp = alloc::vec![0.0; n];
        let mut dp = alloc::vec![0.0; n];
        cp[0] = c[0] / b[0];
        dp[0] = d[0] / b[0];
        for i in 1..n {
            let denom = b[i] - a[i] * cp[i - 1];
            cp[i] = if i < n - 1 { c[i] / denom } else { 0.0 };
            dp[i] = (d[i] - a[i] * dp[i - 1]) / denom;
        }
        let mut m2 = alloc::vec![0.0; n];
        m2[n - 1] = dp[n - 1];
        for i in (0..n - 1).rev() {
            m2[i] = dp[i] - cp[i] * m2[i + 1];
        }
        Ok(CubicSpline { xs, ys, m2 })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x = x.max(self.xs[0]).min(*self.xs.last().unwrap());
        let n = self.xs.len();
        let mut lo = 0usize;
        let mut hi = n - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.xs[mid] <= x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let h = self.xs[lo + 1] - self.xs[lo];
        let t = x - self.xs[lo];
        let s = self.xs[lo + 1] - x;
        (self.m2[lo] * s * s * s + self.m2[lo + 1] * t * t * t) / (6.0 * h)
            + (self.ys[lo] / h - self.m2[lo] * h / 6.0) * s
            + (self.ys[lo + 1] / h - self.m2[lo + 1] * h / 6.0) * t
    }
}

/// Slope at `at` of the cubic through four nodes (Lagrange differentiation).
fn cubic_end_slope(xs: &[f64], ys: &[f64], at: f64) -> f64 {
    let mut total = 0.0;
    for j in 0..4 {
        // derivative of the j-th Lagrange basis at `at`
        let mut dl = 0.0;
        for m in 0..4 {
            if m == j {
                continue;
            }
            let mut prod = 1.0;
            for k in 0..4 {
                if k == j || k == m {
                    continue;
                }
                prod *= (at - xs[k]) / (xs[j] - xs[k]);
            }
            dl += prod / (xs[j] - xs[m]);
        }
        total += ys[j] * dl;
    }
    total
}

/// Fritsch–Butland weighted harmonic mean, zero across extrema.
fn interior_derivative(h0: f64, h1: f64, s0: f64, s1: f64) -> f64 {
    if s0 == 0.0 || s1 == 0.0 || (s0 > 0.0) != (s1 > 0.0) {
        return 0.0;
    }
    let w0 = 2.0 * h1 + h0;
    let w1 = h1 + 2.0 * h0;
    (w0 + w1) / (w0 / s0 + w1 / s1)
}

/// Non-centered three-point estimate with the usual monotonicity clamp.
fn endpoint_derivative(h0: f64, h1: f64, s0: f64, s1: f64) -> f64 {
    let d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if d * s0 <= 0.0 {
        0.0
    } else if s0 * s1 <= 0.0 && d.abs() > 3.0 * s0.abs() {
        3.0 * s0
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn pchip_on_monotone_data_at_table_density() {
        // 4096 nodes is the density the torus tables use; all PCHIP tables
        // in this crate interpolate strictly monotone data.
        let n = 4096;
        let xs: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64 * 3.0).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| x + 0.3 * libm::sin(x)).collect();
        let t = PchipTable::new(xs, ys).unwrap();
        let mut worst: f64 = 0.0;
        for i in 0..10000 {
            let x = i as f64 / 9999.0 * 3.0;
            worst = worst.max((t.eval(x) - (x + 0.3 * libm::sin(x))).abs());
        }
        assert!(worst < 1e-9, "worst {worst}");
    }

    #[test]
    fn spline_on_oscillatory_data_at_table_density() {
        let n = 4096;
        let xs: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64 * 6.28).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| libm::cos(3.0 * x)).collect();
        let t = CubicSpline::new(xs, ys).unwrap();
        let mut worst: f64 = 0.0;
        for i in 0..20000 {
            let x = i as f64 / 19999.0 * 6.28;
            worst = worst.max((t.eval(x) - libm::cos(3.0 * x)).abs());
        }
        assert!(worst < 1e-10, "worst {worst}");
    }

    #[test]
    fn monotone_data_stays_monotone() {
        // steep monotone data with widely varying slopes
        let xs: Vec<f64> = alloc::vec![0.0, 0.1, 0.2, 1.0, 1.1, 3.0];
        let ys: Vec<f64> = alloc::vec![0.0, 0.001, 1.0, 1.001, 2.0, 2.1];
        let t = PchipTable::new(xs, ys).unwrap();
        let mut prev = t.eval(0.0);
        for i in 1..=3000 {
            let x = i as f64 / 1000.0;
            let y = t.eval(x);
            assert!(y >= prev - 1e-14, "not monotone at {x}");
            prev = y;
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let n = 400;
        let xs: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64 * 2.0).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| x + 0.3 * libm::sin(x)).collect();
        let t = PchipTable::new(xs.clone(), ys).unwrap();
        let inv = t.inverse().unwrap();
        for i in 0..500 {
            let x = i as f64 / 499.0 * 2.0;
            let err = (inv.eval(t.eval(x)) - x).abs();
            assert!(err < 1e-9, "roundtrip err {err} at {x}");
        }
    }
}
