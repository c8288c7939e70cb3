//! Gauss–Legendre quadrature with endpoint-singularity substitutions.
//!
//! All action-type integrands in this problem behave like `(u - a)^(+1/2)`
//! or `(u - a)^(-1/2)` at a caustic endpoint (simple turning point or
//! shore). The substitution `u = a + s^2` turns both into smooth functions
//! of `s`, after which plain Gauss–Legendre panels converge spectrally.
//! [`integrate_sqrt_endpoints`] splits the interval at its midpoint and
//! applies the substitution on whichever halves are flagged singular.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::expr::EvalError;
use crate::math;

#[derive(Debug, Clone, PartialEq)]
pub enum QuadError {
    /// Adaptive refinement hit the depth limit; carries the achieved estimate.
    NonConvergence { achieved: f64, target: f64 },
    /// The integrand itself failed (expression domain fault, etc.).
    Integrand(String),
    BadInterval,
}

impl fmt::Display for QuadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadError::NonConvergence { achieved, target } => write!(
                f,
                "quadrature did not reach the error target {:.3e} (achieved {:.3e})",
                target, achieved
            ),
            QuadError::Integrand(msg) => write!(f, "integrand evaluation failed: {}", msg),
            QuadError::BadInterval => f.write_str("invalid integration interval"),
        }
    }
}

impl core::error::Error for QuadError {}

impl From<EvalError> for QuadError {
    fn from(e: EvalError) -> Self {
        QuadError::Integrand(format!("{}", e))
    }
}

/// A Gauss–Legendre rule on [-1, 1]; nodes by Newton iteration on P_n.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let m = (n + 1) / 2;
        for i in 0..m {
            // Tricomi-style initial guess, then Newton on P_n.
            let mut x = math::cos(math::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes.push(x);
            weights.push(w);
        }
        // mirror to the full rule
        for i in (0..m).rev() {
            if nodes[i] != 0.0 {
                nodes.push(-nodes[i]);
                weights.push(weights[i]);
            }
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Applies the rule to `f` on [a, b].
    pub fn integrate<F>(&self, a: f64, b: f64, mut f: F) -> Result<f64, QuadError>
    where
        F: FnMut(f64) -> Result<f64, QuadError>,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x)?;
        }
        Ok(acc * half)
    }
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// How an endpoint of the physical interval behaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    /// Integrand smooth up to the endpoint.
    Regular,
    /// Integrand has a `(u - end)^(±1/2)` factor: substitute `u = end ± s^2`.
    SqrtSingular,
}

/// Result of an adaptive integration: the value and an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
}

/// Adaptive panel integration of a smooth integrand: each panel is accepted
/// when the 64-node value agrees with the 32-node value to the panel's share
/// of `tol`, else bisected.
pub fn integrate_smooth<F>(f: &mut F, a: f64, b: f64, tol: f64) -> Result<Quadrature, QuadError>
where
    F: FnMut(f64) -> Result<f64, QuadError>,
{
    if !(b >= a) || !a.is_finite() || !b.is_finite() {
        return Err(QuadError::BadInterval);
    }
    if a == b {
        return Ok(Quadrature { value: 0.0, error_estimate: 0.0 });
    }
    let lo = GaussLegendre::new(32);
    let hi = GaussLegendre::new(64);
    let mut total = 0.0;
    let mut err_total = 0.0;
    // explicit stack of (panel, depth)
    let mut stack: Vec<(f64, f64, u32)> = alloc::vec![(a, b, 0)];
    while let Some((pa, pb, depth)) = stack.pop() {
        let coarse = lo.integrate(pa, pb, &mut *f)?;
        let fine = hi.integrate(pa, pb, &mut *f)?;
        let disc = (fine - coarse).abs();
        let share = tol * ((pb - pa) / (b - a)).max(1e-3);
        if disc <= share || depth >= 28 {
            if depth >= 28 && disc > share {
                return Err(QuadError::NonConvergence { achieved: disc, target: share });
            }
            total += fine;
            err_total += disc;
        } else {
            let mid = 0.5 * (pa + pb);
            stack.push((pa, mid, depth + 1));
            stack.push((mid, pb, depth + 1));
        }
    }
    Ok(Quadrature { value: total, error_estimate: err_total })
}

/// Integrates `f` over [a, b] where either endpoint may carry a square-root
/// singularity (integrand or its reciprocal vanishing like a square root).
pub fn integrate_sqrt_endpoints<F>(
    f: &mut F,
    a: f64,
    b: f64,
    left: Endpoint,
    right: Endpoint,
    tol: f64,
) -> Result<Quadrature, QuadError>
where
    F: FnMut(f64) -> Result<f64, QuadError>,
{
    if !(b >= a) || !a.is_finite() || !b.is_finite() {
        return Err(QuadError::BadInterval);
    }
    if a == b {
        return Ok(Quadrature { value: 0.0, error_estimate: 0.0 });
    }
    let mid = 0.5 * (a + b);
    let half_tol = 0.5 * tol;
    let left_part = match left {
        Endpoint::Regular => integrate_smooth(f, a, mid, half_tol)?,
        Endpoint::SqrtSingular => {
            let smax = math::sqrt(mid - a);
            let mut g = |s: f64| -> Result<f64, QuadError> { Ok(2.0 * s * f(a + s * s)?) };
            integrate_smooth(&mut g, 0.0, smax, half_tol)?
        }
    };
    let right_part = match right {
        Endpoint::Regular => integrate_smooth(f, mid, b, half_tol)?,
        Endpoint::SqrtSingular => {
            let smax = math::sqrt(b - mid);
            let mut g = |s: f64| -> Result<f64, QuadError> { Ok(2.0 * s * f(b - s * s)?) };
            integrate_smooth(&mut g, 0.0, smax, half_tol)?
        }
    };
    Ok(Quadrature {
        value: left_part.value + right_part.value,
        error_estimate: left_part.error_estimate + right_part.error_estimate,
    })
}
