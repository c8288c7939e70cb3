//! Independent reference implementations used to validate the main
//! numerical paths: a plain adaptive Simpson integrator (no Gauss panels,
//! no endpoint substitutions), clipped-interval extrapolation for
//! inverse-square-root endpoint singularities, and a fixed-step RK4
//! integrator for the Hamiltonian flow. Nothing here shares code with the
//! quadrature or table machinery it cross-checks.

use alloc::vec::Vec;

use crate::expr::{Bindings, EvalError, Var};
use crate::model::DepthModel;

/// Classic recursive adaptive Simpson.
pub fn adaptive_simpson(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn recurse(
        f: &mut impl FnMut(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        // the minimum depth guards against spuriously small estimates on
        // integrands whose samples accidentally align (e.g. trig on [0, 2pi])
        if depth >= 50 || (depth >= 6 && delta.abs() <= 15.0 * tol) {
            left + right + delta / 15.0
        } else {
            recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
                + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)
        }
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, a, b);
    recurse(f, a, b, fa, fm, fb, whole, tol, 0)
}

/// Integral over `[a, b]` of an integrand with (at worst) inverse-sqrt
/// singularities at both endpoints, by clipping `eps` off each end and
/// extrapolating in `sqrt(eps)`: `I(eps) = I - C sqrt(eps) + O(eps^{3/2})`,
/// so `I = 2 I(eps/4) - I(eps)`.
pub fn clipped_extrapolated(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    eps: f64,
    tol: f64,
) -> f64 {
    let coarse = adaptive_simpson(f, a + eps, b - eps, tol);
    let fine = adaptive_simpson(f, a + 0.25 * eps, b - 0.25 * eps, tol);
    2.0 * fine - coarse
}

/// One Hamiltonian trajectory state.
#[derive(Debug, Clone, Copy)]
pub struct PhasePoint {
    pub t: f64,
    pub u: f64,
    pub v: f64,
    pub p_u: f64,
    pub p_v: f64,
}

/// Fixed-step RK4 for `H = (p_u^2 + p_v^2) D0(u, v)`; returns the sampled
/// trajectory including the start point.
pub fn rk4_trajectory(
    model: &DepthModel,
    start: PhasePoint,
    dt: f64,
    steps: usize,
) -> Result<Vec<PhasePoint>, EvalError> {
    let deriv = |s: &PhasePoint| -> Result<[f64; 4], EvalError> {
        let bu = Bindings::u(s.u);
        let (f1, df1) = model.f1.eval_dual(&bu, Var::U)?;
        let (f2, df2) = model.f2.eval_dual(&bu, Var::U)?;
        let (g, dg) = model.g.eval_dual(&Bindings::v(s.v), Var::V)?;
        let denom = f1 + f2 * g;
        let d0 = f2 / denom;
        let p_sq = s.p_u * s.p_u + s.p_v * s.p_v;
        // dD0/du = (f2' f1 - f2 f1')/denom^2, dD0/dv = -f2^2 g'/denom^2
        let d0_u = (df2 * f1 - f2 * df1) / (denom * denom);
        let d0_v = -(f2 * f2 * dg) / (denom * denom);
        Ok([
            2.0 * d0 * s.p_u,
            2.0 * d0 * s.p_v,
            -p_sq * d0_u,
            -p_sq * d0_v,
        ])
    };
    let mut out = Vec::with_capacity(steps + 1);
    let mut state = start;
    out.push(state);
    for _ in 0..steps {
        let k1 = deriv(&state)?;
        let mid1 = advance(&state, &k1, 0.5 * dt);
        let k2 = deriv(&mid1)?;
        let mid2 = advance(&state, &k2, 0.5 * dt);
        let k3 = deriv(&mid2)?;
        let end = advance(&state, &k3, dt);
        let k4 = deriv(&end)?;
        state = PhasePoint {
            t: state.t + dt,
            u: state.u + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            v: state.v + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
            p_u: state.p_u + dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]),
            p_v: state.p_v + dt / 6.0 * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]),
        };
        out.push(state);
    }
    Ok(out)
}

fn advance(s: &PhasePoint, k: &[f64; 4], dt: f64) -> PhasePoint {
    PhasePoint {
        t: s.t + dt,
        u: s.u + dt * k[0],
        v: s.v + dt * k[1],
        p_u: s.p_u + dt * k[2],
        p_v: s.p_v + dt * k[3],
    }
}

/// Energy `H0` and the first integral `F` at a phase point, for
/// conservation checks on oracle trajectories.
pub fn invariants(model: &DepthModel, s: &PhasePoint) -> Result<(f64, f64), EvalError> {
    let f = model.f_at(s.u)?;
    let g = model.g_at(s.v)?;
    let h0 = (s.p_u * s.p_u + s.p_v * s.p_v) / (f + g);
    let first = (s.p_u * s.p_u * g - s.p_v * s.p_v * f) / (f + g);
    Ok((h0, first))
}
