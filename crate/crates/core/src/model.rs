//! The problem definition: depth decomposition `f = f1/f2`, angular profile
//! `g`, scalar perturbation `D1`, cylinder geometry, and the caustic case.
//!
//! The unperturbed depth is `D0(u,v) = 1/(f(u)+g(v)) = f2/(f1 + f2 g)`. A
//! *shore* is a cylinder endpoint where `f2` vanishes simply, which makes
//! `D0` vanish with nonzero normal derivative there; the perturbation `D1`
//! must vanish at every shore. The case tag records where `f = f1/f2` blows
//! up:
//!
//! * (A) — `f` bounded near both endpoints of the motion: two simple
//!   caustics, no shore.
//! * (B) — `f -> inf` at both endpoints: two coastal caustics (shores).
//! * (C) — `f -> inf` at the left endpoint only.

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::expr::{Bindings, EvalError, Expr, Var, VarSet};

/// Left/right side of the motion interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausticCase {
    A,
    B,
    C,
}

impl fmt::Display for CausticCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CausticCase::A => "A",
            CausticCase::B => "B",
            CausticCase::C => "C",
        })
    }
}

impl CausticCase {
    /// Whether the given side is a declared shore in this case.
    pub fn has_shore(&self, side: Side) -> bool {
        match (self, side) {
            (CausticCase::A, _) => false,
            (CausticCase::B, _) => true,
            (CausticCase::C, Side::Left) => true,
            (CausticCase::C, Side::Right) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// A named invariant failed; the string is the full diagnostic.
    Invalid(String),
    Eval(EvalError),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Invalid(msg) => f.write_str(msg),
            ModelError::Eval(e) => write!(f, "model evaluation failed: {}", e),
        }
    }
}

impl core::error::Error for ModelError {}

impl From<EvalError> for ModelError {
    fn from(e: EvalError) -> Self {
        ModelError::Eval(e)
    }
}

fn invalid(msg: String) -> ModelError {
    ModelError::Invalid(msg)
}

/// Raw, unvalidated model data as it comes out of a configuration file.
#[derive(Debug, Clone)]
pub struct ModelInput {
    pub u_left: f64,
    pub u_right: f64,
    pub f1: Expr,
    pub f2: Expr,
    pub g: Expr,
    pub d1: Expr,
    pub mu: u8,
    pub case: CausticCase,
}

/// A validated problem definition. Immutable after load; all evaluation is
/// pure, so the model is safe to share across threads.
#[derive(Debug, Clone)]
pub struct DepthModel {
    pub u_left: f64,
    pub u_right: f64,
    pub f1: Expr,
    pub f2: Expr,
    pub g: Expr,
    pub d1: Expr,
    pub mu: u8,
    pub case: CausticCase,
}

impl DepthModel {
    pub fn endpoint(&self, side: Side) -> f64 {
        match side {
            Side::Left => self.u_left,
            Side::Right => self.u_right,
        }
    }

    pub fn f1_at(&self, u: f64) -> Result<f64, EvalError> {
        self.f1.eval(&Bindings::u(u))
    }

    pub fn f2_at(&self, u: f64) -> Result<f64, EvalError> {
        self.f2.eval(&Bindings::u(u))
    }

    pub fn g_at(&self, v: f64) -> Result<f64, EvalError> {
        self.g.eval(&Bindings::v(v))
    }

    pub fn d1_at(&self, u: f64, v: f64) -> Result<f64, EvalError> {
        self.d1.eval(&Bindings::uv(u, v))
    }

    /// `f(u) = f1(u)/f2(u)`; infinite at a shore.
    pub fn f_at(&self, u: f64) -> Result<f64, EvalError> {
        let f1 = self.f1_at(u)?;
        let f2 = self.f2_at(u)?;
        Ok(f1 / f2)
    }

    /// The common denominator `f1(u) + f2(u) g(v)`, smooth on the closed
    /// cylinder and positive where the model is valid.
    pub fn denom_at(&self, u: f64, v: f64) -> Result<f64, EvalError> {
        Ok(self.f1_at(u)? + self.f2_at(u)? * self.g_at(v)?)
    }

    /// The subprincipal-symbol view of this model's perturbation.
    pub fn subprincipal(&self) -> SubprincipalSymbol<'_> {
        SubprincipalSymbol { model: self }
    }
}

/// `H_sub = D1(u,v) (p_u^2 + p_v^2)`, the scalar perturbation symbol.
#[derive(Debug, Clone, Copy)]
pub struct SubprincipalSymbol<'a> {
    model: &'a DepthModel,
}

impl SubprincipalSymbol<'_> {
    /// The raw definition at a phase-space point.
    pub fn raw(&self, u: f64, v: f64, p_u: f64, p_v: f64) -> Result<f64, EvalError> {
        Ok(self.model.d1_at(u, v)? * (p_u * p_u + p_v * p_v))
    }

    /// Restricted to a torus of energy `E`, where `p_u^2 + p_v^2 = E (f+g)`:
    /// `H_sub|_Lambda = D1 E (f1 + f2 g)/f2`. Finite up to the shore because
    /// `D1` vanishes there faster than `f2`.
    pub fn on_torus(&self, energy: f64, u: f64, v: f64) -> Result<f64, EvalError> {
        let f2 = self.model.f2_at(u)?;
        Ok(self.model.d1_at(u, v)? * energy * self.model.denom_at(u, v)? / f2)
    }
}

/// Validates and freezes a model definition.
///
/// Fails with a named diagnostic when an invariant is violated: wrong free
/// variables, `f2` not vanishing (or vanishing without slope) at a declared
/// shore, `f2` vanishing inside, `D1` not vanishing at a shore, or a case
/// tag inconsistent with the detected behavior of `f`.
pub fn load_model(input: ModelInput) -> Result<DepthModel, ModelError> {
    let model = DepthModel {
        u_left: input.u_left,
        u_right: input.u_right,
        f1: input.f1,
        f2: input.f2,
        g: input.g,
        d1: input.d1,
        mu: input.mu,
        case: input.case,
    };
    if !(model.u_left < model.u_right) {
        return Err(invalid(format!(
            "cylinder bounds out of order: u_left = {}, u_right = {}",
            model.u_left, model.u_right
        )));
    }
    if model.mu > 1 {
        return Err(invalid(format!("mu must be 0 or 1, got {}", model.mu)));
    }
    check_vars("f1", &model.f1, VarSet { u: true, v: false })?;
    check_vars("f2", &model.f2, VarSet { u: true, v: false })?;
    check_vars("g", &model.g, VarSet { u: false, v: true })?;
    check_vars("D1", &model.d1, VarSet { u: true, v: true })?;

    for side in [Side::Left, Side::Right] {
        if model.case.has_shore(side) {
            check_shore(&model, side)?;
        } else {
            check_open_side(&model, side)?;
        }
    }
    check_f2_positive_inside(&model)?;
    let detected = classify_case(&model)?;
    if detected != model.case {
        return Err(invalid(format!(
            "configured case {} does not match detected behavior of f = f1/f2 (looks like case {})",
            model.case, detected
        )));
    }
    Ok(model)
}

fn check_vars(name: &str, expr: &Expr, allowed: VarSet) -> Result<(), ModelError> {
    let vars = expr.free_vars();
    if !vars.subset_of(allowed) {
        return Err(invalid(format!(
            "{} may only depend on {}: found a disallowed variable",
            name,
            if allowed.u && allowed.v { "u and v" } else if allowed.u { "u" } else { "v" }
        )));
    }
    Ok(())
}

/// Finite sampling window for validation scans, clipping infinite bounds.
fn scan_window(model: &DepthModel) -> (f64, f64) {
    let lo = if model.u_left.is_finite() { model.u_left } else { -50.0 };
    let hi = if model.u_right.is_finite() { model.u_right } else { 50.0 };
    (lo, hi)
}

fn check_shore(model: &DepthModel, side: Side) -> Result<(), ModelError> {
    let end = model.endpoint(side);
    if !end.is_finite() {
        return Err(invalid(format!("declared shore at u_{} must be a finite endpoint", side)));
    }
    let f2_end = model.f2_at(end)?;
    // scale from a few interior samples
    let (lo, hi) = scan_window(model);
    let mut scale = 0.0f64;
    for i in 1..64 {
        let u = lo + (hi - lo) * i as f64 / 64.0;
        scale = scale.max(model.f2_at(u)?.abs());
    }
    if f2_end.abs() > 1e-12 * (1.0 + scale) {
        return Err(invalid(format!(
            "f2 does not vanish at declared shore u_{} = {} (f2 = {:.3e})",
            side, end, f2_end
        )));
    }
    let (_, df2) = model.f2.eval_dual(&Bindings::u(end), Var::U)?;
    if df2.abs() < 1e-8 {
        return Err(invalid(format!(
            "f2 vanishes at shore u_{} = {} but its u-derivative {:.3e} is zero there",
            side, end, df2
        )));
    }
    // D1 must vanish along the whole shore line
    for j in 0..256 {
        let v = crate::math::TAU * j as f64 / 256.0;
        let d1 = model.d1_at(end, v)?;
        if d1.abs() > 1e-12 {
            return Err(invalid(format!(
                "D1 does not vanish at coastal endpoint u_{} = {} (D1({}, {:.4}) = {:.3e})",
                side, end, end, v, d1
            )));
        }
    }
    // D1/f2 must tend to zero at the shore (H_sub stays smooth on the torus)
    let span = hi - lo;
    let into = |eps: f64| match side {
        Side::Left => end + eps,
        Side::Right => end - eps,
    };
    let mut prev = f64::MAX;
    for &eps in &[1e-3, 1e-4, 1e-5] {
        let u = into(eps * span);
        let mut worst = 0.0f64;
        for j in 0..16 {
            let v = crate::math::TAU * j as f64 / 16.0;
            let ratio = model.d1_at(u, v)?.abs() / model.f2_at(u)?.abs().max(1e-300);
            worst = worst.max(ratio);
        }
        // must decrease (or at least not grow) approaching the shore
        if !(worst <= prev * 1.05) {
            return Err(invalid(format!(
                "D1 does not vanish fast enough at shore u_{}: |D1/f2| grows toward the shore",
                side
            )));
        }
        prev = worst;
    }
    Ok(())
}

fn check_open_side(model: &DepthModel, side: Side) -> Result<(), ModelError> {
    let end = model.endpoint(side);
    if !end.is_finite() {
        return Ok(()); // polynomial-growth assumption; nothing to check here
    }
    let (lo, hi) = scan_window(model);
    let span = hi - lo;
    let mut min_abs = f64::MAX;
    for i in 0..=64 {
        let offset = 0.01 * span * i as f64 / 64.0;
        let u = match side {
            Side::Left => end + offset,
            Side::Right => end - offset,
        };
        min_abs = min_abs.min(model.f2_at(u)?.abs());
    }
    if min_abs < 1e-8 {
        return Err(invalid(format!(
            "f2 comes within {:.3e} of zero near the non-shore endpoint u_{}",
            min_abs, side
        )));
    }
    Ok(())
}

fn check_f2_positive_inside(model: &DepthModel) -> Result<(), ModelError> {
    let (lo, hi) = scan_window(model);
    for i in 1..1024 {
        let u = lo + (hi - lo) * i as f64 / 1024.0;
        let f2 = model.f2_at(u)?;
        if f2 <= 0.0 {
            return Err(invalid(format!("f2({}) = {:.3e} is not positive in the interior", u, f2)));
        }
    }
    Ok(())
}

/// Detects the caustic case from the behavior of `f = f1/f2` at the
/// endpoints: a side is *unbounded* when `f2` vanishes there while `f1`
/// does not.
pub fn classify_case(model: &DepthModel) -> Result<CausticCase, ModelError> {
    let unbounded = |side: Side| -> Result<bool, ModelError> {
        let end = model.endpoint(side);
        if !end.is_finite() {
            return Ok(false);
        }
        let f2 = model.f2_at(end)?;
        let f1 = model.f1_at(end)?;
        Ok(f2.abs() < 1e-9 && f1.abs() > 1e-9)
    };
    match (unbounded(Side::Left)?, unbounded(Side::Right)?) {
        (false, false) => Ok(CausticCase::A),
        (true, true) => Ok(CausticCase::B),
        (true, false) => Ok(CausticCase::C),
        (false, true) => Err(invalid(String::from(
            "f blows up at the right endpoint only; flip the u-axis to get case C",
        ))),
    }
}

/// The depth `D0(u,v) = f2/(f1 + f2 g)`; strictly positive strictly inside
/// the motion interval, zero at a shore.
pub fn depth(model: &DepthModel, u: f64, v: f64) -> Result<f64, ModelError> {
    let f2 = model.f2_at(u)?;
    let denom = model.denom_at(u, v)?;
    Ok(f2 / denom)
}
