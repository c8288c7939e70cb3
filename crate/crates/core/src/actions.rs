//! Turning points, action integrals, frequencies, Bohr–Sommerfeld
//! quantization, and the action defect.
//!
//! On the torus `{H0 = E, F = -kappa}` the momenta satisfy
//! `p_u^2 = E f(u) - kappa` and `p_v^2 = E g(v) + kappa`. The u-motion is
//! bounded by caustics: simple turning points where `E f1 - kappa f2`
//! changes sign, or shores where `f2` vanishes. Actions are
//!
//! ```text
//! I1 = (1/pi)  int_{uL0}^{uR0} sqrt(E f1/f2 - kappa) du,
//! I2 = (1/2pi) int_0^{2pi}     sqrt(E g + kappa)     dv,
//! ```
//!
//! and the quantization conditions read `I1 = h (nu1 + 1/2)`, `I2 = h nu2`
//! (Maslov index 1/2 on the u-cycle, 0 on the v-cycle).
//!
//! All u-integrands behave like `(u - u*)^(±1/2)` at a caustic of either
//! kind, so every u-quadrature goes through the `u = u* ± s^2` substitution
//! in [`crate::quad`]. Torus tables are sampled on a grid clustered the same
//! way (`u = uL0 + span sin^2(pi t/2)`), which makes every tabulated
//! function smooth in the table parameter even across caustics.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::expr::EvalError;
use crate::interp::{InterpError, PchipTable};
use crate::math;
use crate::model::{CausticCase, DepthModel, Side};
use crate::quad::{self, Endpoint, GaussLegendre, QuadError};

const TABLE_NODES: usize = 4096;
const ACTION_TOL: f64 = 1e-11;

#[derive(Debug, Clone, PartialEq)]
pub enum ActionsError {
    /// No sign change of the radicand found on a non-coastal side.
    NoTurningPoint { side: Side, detail: String },
    /// The classically allowed set has more than one component.
    MultiWell { components: usize },
    /// Newton failed or left the admissible kappa window.
    Quantization(String),
    /// The 2x2 action Jacobian is numerically singular.
    SingularJacobian { det: f64, norm: f64 },
    Quad(QuadError),
    Eval(EvalError),
    Interp(InterpError),
}

impl fmt::Display for ActionsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionsError::NoTurningPoint { side, detail } => {
                write!(f, "no turning point on the {} side: {}", side, detail)
            }
            ActionsError::MultiWell { components } => write!(
                f,
                "the allowed region has {} components; only single-well motion is supported",
                components
            ),
            ActionsError::Quantization(msg) => write!(f, "quantization solve failed: {}", msg),
            ActionsError::SingularJacobian { det, norm } => write!(
                f,
                "action Jacobian numerically singular (det {:.3e}, norm {:.3e})",
                det, norm
            ),
            ActionsError::Quad(e) => write!(f, "{}", e),
            ActionsError::Eval(e) => write!(f, "{}", e),
            ActionsError::Interp(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for ActionsError {}

impl From<QuadError> for ActionsError {
    fn from(e: QuadError) -> Self {
        ActionsError::Quad(e)
    }
}

impl From<EvalError> for ActionsError {
    fn from(e: EvalError) -> Self {
        ActionsError::Eval(e)
    }
}

impl From<InterpError> for ActionsError {
    fn from(e: InterpError) -> Self {
        ActionsError::Interp(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausticKind {
    Simple,
    Coastal,
}

/// One caustic bounding the u-motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CausticDescriptor {
    pub side: Side,
    pub kind: CausticKind,
    pub location: f64,
}

/// A quantized mode: quantum numbers, semiclassical parameter, the
/// quantized actions `I1 = h(nu1 + 1/2)`, `I2 = h nu2`, and the action
/// defect `q = I^nu - I` relative to a reference torus.
#[derive(Debug, Clone, Copy)]
pub struct QuantizedMode {
    pub nu: (i64, i64),
    pub h: f64,
    pub i_nu: (f64, f64),
    pub q: (f64, f64),
}

impl QuantizedMode {
    pub fn new(nu: (i64, i64), h: f64, reference_actions: (f64, f64)) -> Self {
        let i_nu = (h * (nu.0 as f64 + 0.5), h * nu.1 as f64);
        QuantizedMode {
            nu,
            h,
            i_nu,
            q: (i_nu.0 - reference_actions.0, i_nu.1 - reference_actions.1),
        }
    }

    pub fn q_over_h(&self) -> (f64, f64) {
        (self.q.0 / self.h, self.q.1 / self.h)
    }
}

/// The action defect and whether it exceeds the configured `O(h)` bound.
#[derive(Debug, Clone, Copy)]
pub struct DefectReport {
    pub q: (f64, f64),
    pub q_over_h: (f64, f64),
    pub exceeds_bound: bool,
}

/// `q = I^nu - I` for a fixed torus; warns (via the flag) when `|q|/h`
/// exceeds `bound` (the constant in the `q = O(h)` assumption).
pub fn action_defect(torus: &TorusData, nu: (i64, i64), h: f64, bound: f64) -> DefectReport {
    let mode = QuantizedMode::new(nu, h, (torus.action_u, torus.action_v));
    let qh = mode.q_over_h();
    DefectReport {
        q: mode.q,
        q_over_h: qh,
        exceeds_bound: qh.0.abs() > bound || qh.1.abs() > bound,
    }
}

/// One invariant torus with everything downstream modules need: caustics,
/// actions, frequencies, the `T1` normalizer, and monotone tables for
/// `S_L`, `S_2`, `eta`, `alpha^1` and their inverses.
#[derive(Debug, Clone)]
pub struct TorusData {
    pub energy: f64,
    pub kappa: f64,
    pub caustics: (CausticDescriptor, CausticDescriptor),
    /// I1 and I2.
    pub action_u: f64,
    pub action_v: f64,
    pub omega: (f64, f64),
    /// `T1 = int du / (sqrt(E f1 - kappa f2) sqrt(f2))`.
    pub t1: f64,
    /// `S_L(u_R0) = pi I1`.
    pub s_total: f64,
    /// `eta(2pi)`.
    pub eta_full: f64,
    /// quadrature error reported by the table builder
    pub table_error: f64,
    // tables in the clustered parameter t in [0,1], u = uL0 + span sin^2(pi t / 2)
    s_l_of_t: PchipTable,
    alpha1_of_t: PchipTable,
    t_of_alpha1: PchipTable,
    // v tables on [0, 2pi]
    s2_of_v: PchipTable,
    eta_of_v: PchipTable,
    v_of_eta: PchipTable,
}

impl TorusData {
    pub fn u_min(&self) -> f64 {
        self.caustics.0.location
    }

    pub fn u_max(&self) -> f64 {
        self.caustics.1.location
    }

    pub fn span(&self) -> f64 {
        self.u_max() - self.u_min()
    }

    /// Clustered table parameter of a physical u (exact closed form).
    #[inline]
    pub fn t_of_u(&self, u: f64) -> f64 {
        let y = ((u - self.u_min()) / self.span()).clamp(0.0, 1.0);
        2.0 / math::PI * math::asin(math::sqrt(y))
    }

    #[inline]
    pub fn u_of_t(&self, t: f64) -> f64 {
        let s = math::sin(0.5 * math::PI * t);
        self.u_min() + self.span() * s * s
    }

    /// `S_L(u)`, increasing from 0 to `s_total` over the motion interval.
    pub fn s_left(&self, u: f64) -> f64 {
        self.s_l_of_t.eval(self.t_of_u(u))
    }

    /// `S_R(u) = S_L(u_R0) - S_L(u)`.
    pub fn s_right(&self, u: f64) -> f64 {
        (self.s_total - self.s_left(u)).max(0.0)
    }

    /// Angle coordinate `alpha^1(u)` in [0, pi].
    pub fn alpha1_of_u(&self, u: f64) -> f64 {
        self.alpha1_of_t.eval(self.t_of_u(u))
    }

    pub fn u_of_alpha1(&self, alpha1: f64) -> f64 {
        // even periodic continuation: fold onto [0, pi]
        let a = math::wrap(alpha1, math::TAU);
        let folded = if a <= math::PI { a } else { math::TAU - a };
        self.u_of_t(self.t_of_alpha1.eval(folded))
    }

    /// `S_2(v) = int_0^v sqrt(E g + kappa)`, continued additively beyond
    /// one period.
    pub fn s2(&self, v: f64) -> f64 {
        let winding = math::floor(v / math::TAU);
        let rest = v - winding * math::TAU;
        winding * 2.0 * math::PI * self.action_v + self.s2_of_v.eval(rest)
    }

    /// `eta(v) = int_0^v dv/sqrt(E g + kappa)`, continued additively.
    pub fn eta(&self, v: f64) -> f64 {
        let winding = math::floor(v / math::TAU);
        let rest = v - winding * math::TAU;
        winding * self.eta_full + self.eta_of_v.eval(rest)
    }

    /// Inverse of `eta`, continued additively.
    pub fn v_of_eta(&self, x: f64) -> f64 {
        let winding = math::floor(x / self.eta_full);
        let rest = x - winding * self.eta_full;
        winding * math::TAU + self.v_of_eta.eval(rest)
    }
}

// ---------------------------------------------------------------------------
// Turning points
// ---------------------------------------------------------------------------

/// Radicand of the u-momentum: `r(u) = E f1(u) - kappa f2(u)`.
fn radicand(model: &DepthModel, energy: f64, kappa: f64, u: f64) -> Result<f64, EvalError> {
    Ok(energy * model.f1_at(u)? - kappa * model.f2_at(u)?)
}

/// Finds the caustics bounding the single classically allowed u-interval.
///
/// Coastal sides return the configured shore endpoint. Simple sides locate
/// the sign change of the radicand by bisection refined with secant steps
/// to 1e-13 absolute. More than one allowed component is rejected.
pub fn find_turning_points(
    model: &DepthModel,
    energy: f64,
    kappa: f64,
) -> Result<(CausticDescriptor, CausticDescriptor), ActionsError> {
    let scan_lo = if model.u_left.is_finite() { model.u_left } else { -50.0 };
    let scan_hi = if model.u_right.is_finite() { model.u_right } else { 50.0 };
    let n = 2048usize;
    let mut values = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let u = scan_lo + (scan_hi - scan_lo) * i as f64 / n as f64;
        values.push((u, radicand(model, energy, kappa, u)?));
    }
    // count connected components of {r > 0}
    let mut components = 0usize;
    let mut inside = false;
    for &(_, r) in &values {
        if r > 0.0 && !inside {
            components += 1;
            inside = true;
        } else if r <= 0.0 {
            inside = false;
        }
    }
    if components > 1 {
        return Err(ActionsError::MultiWell { components });
    }
    if components == 0 {
        return Err(ActionsError::NoTurningPoint {
            side: Side::Left,
            detail: format!("radicand nowhere positive on [{}, {}]", scan_lo, scan_hi),
        });
    }
    let first_pos = values.iter().position(|&(_, r)| r > 0.0).unwrap();
    let last_pos = values.iter().rposition(|&(_, r)| r > 0.0).unwrap();

    let left = if model.case.has_shore(Side::Left) {
        CausticDescriptor { side: Side::Left, kind: CausticKind::Coastal, location: model.u_left }
    } else {
        if first_pos == 0 {
            return Err(ActionsError::NoTurningPoint {
                side: Side::Left,
                detail: String::from("radicand already positive at the scan boundary"),
            });
        }
        let (a, b) = (values[first_pos - 1].0, values[first_pos].0);
        let location = refine_root(model, energy, kappa, a, b)?;
        validate_simple_root(model, energy, kappa, location, Side::Left)?;
        CausticDescriptor { side: Side::Left, kind: CausticKind::Simple, location }
    };
    let right = if model.case.has_shore(Side::Right) {
        CausticDescriptor { side: Side::Right, kind: CausticKind::Coastal, location: model.u_right }
    } else {
        if last_pos == values.len() - 1 {
            return Err(ActionsError::NoTurningPoint {
                side: Side::Right,
                detail: String::from("radicand still positive at the scan boundary"),
            });
        }
        let (a, b) = (values[last_pos].0, values[last_pos + 1].0);
        let location = refine_root(model, energy, kappa, a, b)?;
        validate_simple_root(model, energy, kappa, location, Side::Right)?;
        CausticDescriptor { side: Side::Right, kind: CausticKind::Simple, location }
    };
    Ok((left, right))
}

/// Bisection to a narrow bracket, then secant polish.
fn refine_root(
    model: &DepthModel,
    energy: f64,
    kappa: f64,
    mut a: f64,
    mut b: f64,
) -> Result<f64, ActionsError> {
    let mut fa = radicand(model, energy, kappa, a)?;
    let fb = radicand(model, energy, kappa, b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    debug_assert!(fa * fb < 0.0);
    for _ in 0..60 {
        let mid = 0.5 * (a + b);
        let fm = radicand(model, energy, kappa, mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if b - a < 1e-13 {
            break;
        }
    }
    // secant polish from the bracket ends
    let mut x0 = a;
    let mut x1 = b;
    let mut f0 = radicand(model, energy, kappa, x0)?;
    let mut f1 = radicand(model, energy, kappa, x1)?;
    for _ in 0..8 {
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() || x2 < a - 1e-12 || x2 > b + 1e-12 {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = radicand(model, energy, kappa, x1)?;
        if (x1 - x0).abs() < 1e-15 {
            break;
        }
    }
    Ok(x1)
}

fn validate_simple_root(
    model: &DepthModel,
    energy: f64,
    kappa: f64,
    location: f64,
    side: Side,
) -> Result<(), ActionsError> {
    let r = radicand(model, energy, kappa, location)?;
    let scale = (energy * model.f1_at(location)?).abs() + (kappa * model.f2_at(location)?).abs();
    if r.abs() > 1e-12 * scale.max(1e-30) {
        return Err(ActionsError::NoTurningPoint {
            side,
            detail: format!("root residual {:.3e} exceeds 1e-12 of scale {:.3e}", r, scale),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Action integrals and frequencies
// ---------------------------------------------------------------------------

/// S-type integrand `sqrt((E f1 - kappa f2)/f2)`; the radicand is clamped
/// at zero against roundoff right at a simple caustic.
fn p_u_integrand(model: &DepthModel, energy: f64, kappa: f64, u: f64) -> Result<f64, QuadError> {
    let r = energy * model.f1_at(u)? - kappa * model.f2_at(u)?;
    let f2 = model.f2_at(u)?;
    Ok(math::sqrt((r / f2).max(0.0)))
}

/// `(I1, I2)` by endpoint-substituted adaptive quadrature, absolute error
/// target 1e-10.
pub fn action_integrals(
    model: &DepthModel,
    energy: f64,
    kappa: f64,
) -> Result<(f64, f64), ActionsError> {
    let (left, right) = find_turning_points(model, energy, kappa)?;
    action_integrals_between(model, energy, kappa, left.location, right.location)
}

fn action_integrals_between(
    model: &DepthModel,
    energy: f64,
    kappa: f64,
    u_lo: f64,
    u_hi: f64,
) -> Result<(f64, f64), ActionsError> {
    let mut f = |u: f64| p_u_integrand(model, energy, kappa, u);
    let s1 = quad::integrate_sqrt_endpoints(
        &mut f,
        u_lo,
        u_hi,
        Endpoint::SqrtSingular,
        Endpoint::SqrtSingular,
        ACTION_TOL,
    )?;
    let mut g = |v: f64| -> Result<f64, QuadError> {
        let gg = model.g_at(v)?;
        let r = energy * gg + kappa;
        if r <= 0.0 {
            return Err(QuadError::Integrand(format!(
                "E g(v) + kappa = {:.3e} is not positive at v = {}",
                r, v
            )));
        }
        Ok(math::sqrt(r))
    };
    let s2 = quad::integrate_smooth(&mut g, 0.0, math::TAU, ACTION_TOL)?;
    Ok((s1.value / math::PI, s2.value / math::TAU))
}

/// The frequency vector `(omega1, omega2)` in the normalization of the
/// straightened flow `dalpha/dt = omega / f(alpha)` with
/// `f = f1 + f2 g`: `omega1 = 2pi/T1` exactly, and the ratio
/// `omega2/omega1` (the rotation number, normalization-free) from the
/// inverse Jacobian of `(E, kappa) -> (I1, I2)`, computed with
/// Richardson-extrapolated central differences (relative step 1e-5).
pub fn frequencies(
    model: &DepthModel,
    energy: f64,
    kappa: f64,
) -> Result<(f64, f64), ActionsError> {
    let jac = action_jacobian(model, energy, kappa)?;
    let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    let norm = math::sqrt(
        jac[0][0] * jac[0][0] + jac[0][1] * jac[0][1] + jac[1][0] * jac[1][0] + jac[1][1] * jac[1][1],
    );
    if det.abs() < 1e-12 * norm * norm {
        return Err(ActionsError::SingularJacobian { det, norm });
    }
    // dE/dI = first row of the inverse; only its direction is used
    let de_di = (jac[1][1] / det, -jac[0][1] / det);
    let omega1 = math::TAU / t1_integral(model, energy, kappa)?;
    Ok((omega1, omega1 * de_di.1 / de_di.0))
}

/// `T1 = int du / (sqrt(E f1 - kappa f2) sqrt(f2))` over the motion
/// interval.
fn t1_integral(model: &DepthModel, energy: f64, kappa: f64) -> Result<f64, ActionsError> {
    let (left, right) = find_turning_points(model, energy, kappa)?;
    let mut w = |u: f64| -> Result<f64, QuadError> {
        let r = (energy * model.f1_at(u)? - kappa * model.f2_at(u)?).max(1e-300);
        let f2 = model.f2_at(u)?.max(1e-300);
        Ok(1.0 / math::sqrt(r * f2))
    };
    let q = quad::integrate_sqrt_endpoints(
        &mut w,
        left.location,
        right.location,
        Endpoint::SqrtSingular,
        Endpoint::SqrtSingular,
        ACTION_TOL,
    )?;
    Ok(q.value)
}

fn action_jacobian(model: &DepthModel, energy: f64, kappa: f64) -> Result<[[f64; 2]; 2], ActionsError> {
    let scale_e = energy.abs().max(1.0);
    let scale_k = kappa.abs().max(1.0);
    let column = |de: f64, dk: f64| -> Result<[f64; 2], ActionsError> {
        let plus = action_integrals(model, energy + de, kappa + dk)?;
        let minus = action_integrals(model, energy - de, kappa - dk)?;
        let twostep = 2.0 * (de + dk);
        Ok([(plus.0 - minus.0) / twostep, (plus.1 - minus.1) / twostep])
    };
    let richardson = |coarse: [f64; 2], fine: [f64; 2]| {
        [(4.0 * fine[0] - coarse[0]) / 3.0, (4.0 * fine[1] - coarse[1]) / 3.0]
    };
    let de = 1e-5 * scale_e;
    let col_e = richardson(column(de, 0.0)?, column(0.5 * de, 0.0)?);
    let dk = 1e-5 * scale_k;
    let col_k = richardson(column(0.0, dk)?, column(0.0, 0.5 * dk)?);
    Ok([[col_e[0], col_k[0]], [col_e[1], col_k[1]]])
}

// ---------------------------------------------------------------------------
// Quantization
// ---------------------------------------------------------------------------

/// Result of a Bohr–Sommerfeld solve at fixed energy.
#[derive(Debug, Clone, Copy)]
pub struct QuantizationSolution {
    pub kappa: f64,
    pub h: f64,
    pub mode: QuantizedMode,
    pub iterations: u32,
    pub residual: f64,
}

/// Solves `I1(kappa) = h (nu1 + 1/2)`, `I2(kappa) = h nu2` for
/// `(kappa, h)` at fixed `energy` by a damped 2-D Newton iteration with
/// analytic kappa-derivatives. The returned mode has `q = 0` (it is exactly
/// quantized on its own torus).
pub fn solve_quantization(
    model: &DepthModel,
    nu: (i64, i64),
    energy: f64,
) -> Result<QuantizationSolution, ActionsError> {
    if nu.0 < 1 || nu.1 < 1 {
        return Err(ActionsError::Quantization(format!(
            "quantum numbers must be >= 1, got ({}, {})",
            nu.0, nu.1
        )));
    }
    let target_ratio = (nu.0 as f64 + 0.5) / nu.1 as f64;
    let (mut k_lo, mut k_hi) = kappa_window(model, energy)?;
    // bisection on the monotone action ratio for a starting kappa
    let ratio_at = |k: f64| -> Result<f64, ActionsError> {
        let (i1, i2) = action_integrals(model, energy, k)?;
        Ok(i1 / i2)
    };
    // the window bounds are heuristic; walk in until both ends evaluate
    let width = k_hi - k_lo;
    let mut r_lo = ratio_at(k_lo);
    for _ in 0..24 {
        if r_lo.is_ok() {
            break;
        }
        k_lo += 0.04 * width;
        r_lo = ratio_at(k_lo);
    }
    let r_lo = r_lo?;
    let mut r_hi = ratio_at(k_hi);
    for _ in 0..24 {
        if r_hi.is_ok() {
            break;
        }
        k_hi -= 0.04 * width;
        r_hi = ratio_at(k_hi);
    }
    let r_hi = r_hi?;
    if !((r_lo - target_ratio) * (r_hi - target_ratio) < 0.0) {
        return Err(ActionsError::Quantization(format!(
            "action ratio {:.4} not bracketed: ratio({:.4}) = {:.4}, ratio({:.4}) = {:.4}",
            target_ratio, k_lo, r_lo, k_hi, r_hi
        )));
    }
    for _ in 0..60 {
        let mid = 0.5 * (k_lo + k_hi);
        let r = ratio_at(mid)?;
        if (r - target_ratio) * (r_lo - target_ratio) > 0.0 {
            k_lo = mid;
        } else {
            k_hi = mid;
        }
        if k_hi - k_lo < 1e-9 * (1.0 + k_lo.abs()) {
            break;
        }
    }
    let mut kappa = 0.5 * (k_lo + k_hi);
    let (i1, _) = action_integrals(model, energy, kappa)?;
    let mut h = i1 / (nu.0 as f64 + 0.5);

    // Newton on r = (I1 - h(nu1+1/2), I2 - h nu2)
    let (window_lo, window_hi) = kappa_window(model, energy)?;
    let mut residual = f64::MAX;
    for iter in 0..50 {
        let (i1, i2) = action_integrals(model, energy, kappa)?;
        let r1 = i1 - h * (nu.0 as f64 + 0.5);
        let r2 = i2 - h * nu.1 as f64;
        residual = r1.abs().max(r2.abs());
        // convergence measured in the papers' S-units (2 pi I)
        if residual * math::TAU <= 1e-12 {
            // the mode is exactly quantized on its own torus: q = 0
            let i_nu = (h * (nu.0 as f64 + 0.5), h * nu.1 as f64);
            let mode = QuantizedMode { nu, h, i_nu, q: (0.0, 0.0) };
            return Ok(QuantizationSolution { kappa, h, mode, iterations: iter, residual });
        }
        let di1 = d_i1_d_kappa(model, energy, kappa)?;
        let di2 = d_i2_d_kappa(model, energy, kappa)?;
        let j = [[di1, -(nu.0 as f64 + 0.5)], [di2, -(nu.1 as f64)]];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.abs() < 1e-300 {
            return Err(ActionsError::Quantization(String::from("singular Newton Jacobian")));
        }
        let mut dk = (-r1 * j[1][1] + r2 * j[0][1]) / det;
        let mut dh = (-r2 * j[0][0] + r1 * j[1][0]) / det;
        // damp steps that would leave the admissible window or break the
        // action evaluation
        let mut scale = 1.0f64;
        while scale > 1e-6
            && (kappa + scale * dk <= window_lo
                || kappa + scale * dk >= window_hi
                || action_integrals(model, energy, kappa + scale * dk).is_err())
        {
            scale *= 0.5;
        }
        dk *= scale;
        dh *= scale;
        kappa += dk;
        h += dh;
        if h <= 0.0 {
            return Err(ActionsError::Quantization(format!("h became non-positive ({})", h)));
        }
    }
    Err(ActionsError::Quantization(format!(
        "Newton did not converge in 50 iterations (residual {:.3e})",
        residual
    )))
}

/// `dI1/dkappa = -(1/2pi) int sqrt(f2)/sqrt(E f1 - kappa f2) du`.
fn d_i1_d_kappa(model: &DepthModel, energy: f64, kappa: f64) -> Result<f64, ActionsError> {
    let (left, right) = find_turning_points(model, energy, kappa)?;
    let mut f = |u: f64| -> Result<f64, QuadError> {
        let r = (energy * model.f1_at(u)? - kappa * model.f2_at(u)?).max(1e-300);
        Ok(math::sqrt(model.f2_at(u)? / r))
    };
    let q = quad::integrate_sqrt_endpoints(
        &mut f,
        left.location,
        right.location,
        Endpoint::SqrtSingular,
        Endpoint::SqrtSingular,
        ACTION_TOL,
    )?;
    Ok(-q.value / math::TAU)
}

/// `dI2/dkappa = (1/4pi) int dv / sqrt(E g + kappa)`.
fn d_i2_d_kappa(model: &DepthModel, energy: f64, kappa: f64) -> Result<f64, ActionsError> {
    let mut f = |v: f64| -> Result<f64, QuadError> {
        let r = energy * model.g_at(v)? + kappa;
        if r <= 0.0 {
            return Err(QuadError::Integrand(format!("E g + kappa = {:.3e} <= 0", r)));
        }
        Ok(1.0 / math::sqrt(r))
    };
    let q = quad::integrate_smooth(&mut f, 0.0, math::TAU, ACTION_TOL)?;
    Ok(q.value / (2.0 * math::TAU))
}

/// Admissible kappa window at fixed energy: `E g + kappa > 0` everywhere
/// and a nonempty single-well u-motion.
fn kappa_window(model: &DepthModel, energy: f64) -> Result<(f64, f64), ActionsError> {
    let mut g_min = f64::MAX;
    for i in 0..=2048 {
        let v = math::TAU * i as f64 / 2048.0;
        g_min = g_min.min(model.g_at(v)?);
    }
    let lo = -energy * g_min;
    // upper limit from the u-side: kappa must stay below E f on the well
    let scan_lo = if model.u_left.is_finite() { model.u_left } else { -50.0 };
    let scan_hi = if model.u_right.is_finite() { model.u_right } else { 50.0 };
    let mut f_min = f64::MAX;
    let mut f_max = f64::MIN;
    for i in 1..2048 {
        let u = scan_lo + (scan_hi - scan_lo) * i as f64 / 2048.0;
        let f = model.f_at(u)?;
        f_min = f_min.min(f);
        f_max = f_max.max(f);
    }
    let hi = match model.case {
        // both shores: single well only below the interior minimum of f
        CausticCase::B => energy * f_min,
        // at least one simple caustic: up to the maximum of f
        CausticCase::A | CausticCase::C => energy * f_max,
    };
    let width = hi - lo;
    if !(width > 0.0) {
        return Err(ActionsError::Quantization(format!(
            "empty kappa window: ({:.6}, {:.6})",
            lo, hi
        )));
    }
    Ok((lo + 1e-6 * width, hi - 1e-6 * width))
}

// ---------------------------------------------------------------------------
// Torus construction (tables)
// ---------------------------------------------------------------------------

/// Builds the full torus data at `(energy, kappa)`: caustics, actions,
/// frequencies, `T1`, and all tables.
pub fn build_torus(model: &DepthModel, energy: f64, kappa: f64) -> Result<TorusData, ActionsError> {
    let (left, right) = find_turning_points(model, energy, kappa)?;
    let (a, b) = (left.location, right.location);
    let span = b - a;
    let (i1, i2) = action_integrals_between(model, energy, kappa, a, b)?;
    let omega = frequencies(model, energy, kappa)?;

    // clustered parameter grid and the u-nodes
    let n = TABLE_NODES;
    let ts: Vec<f64> = (0..n).map(|j| j as f64 / (n - 1) as f64).collect();
    let us: Vec<f64> = ts
        .iter()
        .map(|&t| {
            let s = math::sin(0.5 * math::PI * t);
            a + span * s * s
        })
        .collect();

    let rule = GaussLegendre::new(16);
    let rule_check = GaussLegendre::new(32);

    // cumulative tables for S_L and the alpha^1 integral (W integrand)
    let mut p_of = |u: f64| p_u_integrand(model, energy, kappa, u);
    let (s_vals, err_s) = cumulative_clustered(&mut p_of, a, b, &us, &rule, &rule_check)?;
    let mut w_of = |u: f64| -> Result<f64, QuadError> {
        let r = (energy * model.f1_at(u)? - kappa * model.f2_at(u)?).max(1e-300);
        let f2 = model.f2_at(u)?.max(1e-300);
        Ok(1.0 / math::sqrt(r * f2))
    };
    let (w_vals, err_w) = cumulative_clustered(&mut w_of, a, b, &us, &rule, &rule_check)?;
    let t1 = *w_vals.last().unwrap();
    let alpha1: Vec<f64> = w_vals.iter().map(|&w| math::PI * w / t1).collect();
    let s_total = *s_vals.last().unwrap();

    // consistency: the table total must agree with the adaptive action
    let table_error = err_s + err_w;
    let s_adaptive = math::PI * i1;
    if (s_total - s_adaptive).abs() > 1e-8 * s_adaptive.abs().max(1.0) {
        return Err(ActionsError::Quantization(format!(
            "table/adaptive action mismatch: {:.12e} vs {:.12e}",
            s_total, s_adaptive
        )));
    }

    let s_l_of_t = PchipTable::new(ts.clone(), s_vals)?;
    let alpha1_of_t = PchipTable::new(ts.clone(), alpha1.clone())?;
    // inverse: alpha^1 is strictly increasing in t
    let t_of_alpha1 = PchipTable::new(alpha1, ts)?;

    // v tables on a uniform grid
    let nv = TABLE_NODES;
    let vs: Vec<f64> = (0..nv).map(|j| math::TAU * j as f64 / (nv - 1) as f64).collect();
    let mut s2_vals = Vec::with_capacity(nv);
    let mut eta_vals = Vec::with_capacity(nv);
    let mut s2_acc = 0.0;
    let mut eta_acc = 0.0;
    s2_vals.push(0.0);
    eta_vals.push(0.0);
    for j in 1..nv {
        let (v0, v1) = (vs[j - 1], vs[j]);
        let ds2 = rule_check.integrate(v0, v1, |v| {
            let r = energy * model.g_at(v)? + kappa;
            if r <= 0.0 {
                return Err(QuadError::Integrand(format!("E g + kappa = {:.3e} <= 0 at v = {}", r, v)));
            }
            Ok(math::sqrt(r))
        })?;
        let deta = rule_check.integrate(v0, v1, |v| {
            let r = energy * model.g_at(v)? + kappa;
            if r <= 0.0 {
                return Err(QuadError::Integrand(format!("E g + kappa = {:.3e} <= 0 at v = {}", r, v)));
            }
            Ok(1.0 / math::sqrt(r))
        })?;
        s2_acc += ds2;
        eta_acc += deta;
        s2_vals.push(s2_acc);
        eta_vals.push(eta_acc);
    }
    let eta_full = eta_acc;
    let s2_of_v = PchipTable::new(vs.clone(), s2_vals)?;
    let eta_of_v = PchipTable::new(vs, eta_vals)?;
    let v_of_eta = eta_of_v.inverse()?;

    Ok(TorusData {
        energy,
        kappa,
        caustics: (left, right),
        action_u: i1,
        action_v: i2,
        omega,
        t1,
        s_total,
        eta_full,
        table_error,
        s_l_of_t,
        alpha1_of_t,
        t_of_alpha1,
        s2_of_v,
        eta_of_v,
        v_of_eta,
    })
}

/// Cumulative integrals of `f` at the clustered nodes, integrating each cell
/// in the substituted variable (`s = sqrt(u-a)` on the left half,
/// `s = sqrt(b-u)` on the right half). Returns the cumulative values and an
/// error estimate from comparing the 16- and 32-node rules.
fn cumulative_clustered<F>(
    f: &mut F,
    a: f64,
    b: f64,
    us: &[f64],
    rule: &GaussLegendre,
    rule_check: &GaussLegendre,
) -> Result<(Vec<f64>, f64), ActionsError>
where
    F: FnMut(f64) -> Result<f64, QuadError>,
{
    let mid = 0.5 * (a + b);
    let mut out = Vec::with_capacity(us.len());
    let mut acc = 0.0;
    let mut err = 0.0;
    out.push(0.0);
    for j in 1..us.len() {
        let (u0, u1) = (us[j - 1], us[j]);
        let cell_mid = 0.5 * (u0 + u1);
        let (coarse, fine) = if cell_mid < mid {
            let (s0, s1) = (math::sqrt(u0 - a), math::sqrt(u1 - a));
            let mut g = |s: f64| -> Result<f64, QuadError> { Ok(2.0 * s * f(a + s * s)?) };
            (rule.integrate(s0, s1, &mut g)?, rule_check.integrate(s0, s1, &mut g)?)
        } else {
            let (s0, s1) = (math::sqrt(b - u1), math::sqrt(b - u0));
            let mut g = |s: f64| -> Result<f64, QuadError> { Ok(2.0 * s * f(b - s * s)?) };
            (rule.integrate(s0, s1, &mut g)?, rule_check.integrate(s0, s1, &mut g)?)
        };
        acc += fine;
        err += (fine - coarse).abs();
        out.push(acc);
    }
    Ok((out, err))
}
