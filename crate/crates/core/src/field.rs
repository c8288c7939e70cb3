//! Evaluation of the glued leading-term eigenfunction.
//!
//! Away from caustics the field is a two-branch WKB wave
//!
//! ```text
//! psi ~ N e^{i S2(v)/h} [ Abar_1 e^{i(S_L/h - pi/4)} + Abar_2 e^{-i(S_L/h - pi/4)} ] / (2 sqrt(pi))
//! ```
//!
//! whose branch amplitudes are the transport solution `A` times the defect
//! Bloch factor, sampled over the physical point on each branch:
//! `Abar_1 = A(a1, a2p) e^{i(q1 a1 + q2 a2p)/h}` on `p_u > 0` and
//! `Abar_2 = A(-a1, a2m) e^{i(-q1 a1 + q2 a2m)/h}` on `p_u < 0`, with
//! `a2p/a2m` the two sheet values of `alpha^2`. Near each caustic the two
//! branches are glued by one special function: with the even/odd
//! combinations `E = (Abar_1 + Abar_2)/2`, `O = ±(Abar_1 - Abar_2)/2`
//! (branch-continued through the right caustic by the `e^{2 pi i q1/h}`
//! Bloch phase), a simple caustic uses the Airy pair
//!
//! ```text
//! T = E (3S/2h)^{1/6} Ai(-(3S/2h)^{2/3}) + i O (3S/2h)^{-1/6} Ai'(-(3S/2h)^{2/3})
//! ```
//!
//! and a coastal caustic the Bessel pair `sqrt(S/2h) (E J0(S/h) + i O J1(S/h))`.
//! Both reduce to the same WKB wave in the interior, make the odd part
//! vanish at their own caustic, and keep the glued field single-valued in
//! `v` (the `e^{2 pi i (I2+q2)/h} = 1` quantization of the v-cycle).
//!
//! The naive factorization of the printed representations is `0 * inf` on a
//! caustic line; the evaluator regroups each product into factors that
//! extend smoothly through the caustic and switches to short Taylor patches
//! where the floating-point quotients degenerate (|S| < 0.1 h by default).
//!
//! Exported fields are scaled by `sqrt(h)` relative to the raw formulas so
//! that the L2 norm stays O(1) along a quantum-number ray.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::actions::{CausticKind, QuantizedMode};
use crate::expr::{EvalError, Var};
use crate::interp::PchipTable;
use crate::math;
use crate::model::{CausticCase, Side};
use crate::quad::GaussLegendre;
use crate::special::{airy_ai, airy_ai_prime, bessel_j0, bessel_j1};
use crate::torus::{AngleChart, Sheet, TorusError};
use crate::transport::TransportSolution;

#[derive(Debug, Clone, PartialEq)]
pub enum FieldError {
    Torus(String),
    Eval(EvalError),
    /// A non-finite value appeared; carries the location.
    NonFinite { u: f64, v: f64, what: &'static str },
    Config(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::Torus(msg) => f.write_str(msg),
            FieldError::Eval(e) => write!(f, "{}", e),
            FieldError::NonFinite { u, v, what } => {
                write!(f, "non-finite {} at (u, v) = ({}, {})", what, u, v)
            }
            FieldError::Config(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for FieldError {}

impl From<EvalError> for FieldError {
    fn from(e: EvalError) -> Self {
        FieldError::Eval(e)
    }
}

impl From<TorusError> for FieldError {
    fn from(e: TorusError) -> Self {
        FieldError::Torus(format!("{}", e))
    }
}

// ---------------------------------------------------------------------------
// Partition of unity
// ---------------------------------------------------------------------------

/// A C-infinity smoothstep: 0 for x <= -1, 1 for x >= 1, the normalized
/// integral of exp(-1/(1-t^2)) between.
#[derive(Debug, Clone)]
pub struct SmoothStep {
    table: PchipTable,
}

impl SmoothStep {
    pub fn new() -> Self {
        let rule = GaussLegendre::new(24);
        let bump = |t: f64| -> Result<f64, crate::quad::QuadError> {
            let w = 1.0 - t * t;
            Ok(if w <= 0.0 { 0.0 } else { math::exp(-1.0 / w) })
        };
        let n = 2048;
        let mut xs = Vec::with_capacity(n + 1);
        let mut ys = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        xs.push(-1.0);
        ys.push(0.0);
        for j in 1..=n {
            let x0 = -1.0 + 2.0 * (j - 1) as f64 / n as f64;
            let x1 = -1.0 + 2.0 * j as f64 / n as f64;
            acc += rule.integrate(x0, x1, bump).unwrap();
            xs.push(x1);
            ys.push(acc);
        }
        let total = acc;
        for y in ys.iter_mut() {
            *y /= total;
        }
        // exact endpoints
        *ys.last_mut().unwrap() = 1.0;
        SmoothStep { table: PchipTable::new(xs, ys).unwrap() }
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x <= -1.0 {
            0.0
        } else if x >= 1.0 {
            1.0
        } else {
            self.table.eval(x)
        }
    }
}

impl Default for SmoothStep {
    fn default() -> Self {
        Self::new()
    }
}

// ---------------------------------------------------------------------------
// Spec-level helper operations
// ---------------------------------------------------------------------------

/// The defect multipliers
/// `B^L_± = exp((i/h) q1 (± alpha1 - pi))`, `B^R_± = exp(±(i/h) q1 (alpha1 - pi))`;
/// all unit modulus.
pub fn defect_multipliers(
    chart: &AngleChart,
    q1: f64,
    h: f64,
    u: f64,
) -> (Complex64, Complex64, Complex64, Complex64) {
    let a1 = chart.torus.alpha1_of_u(u);
    let phase = |x: f64| Complex64::new(math::cos(x), math::sin(x));
    let b_l_plus = phase(q1 * (a1 - math::PI) / h);
    let b_l_minus = phase(q1 * (-a1 - math::PI) / h);
    let b_r_plus = phase(q1 * (a1 - math::PI) / h);
    let b_r_minus = phase(-q1 * (a1 - math::PI) / h);
    (b_l_plus, b_l_minus, b_r_plus, b_r_minus)
}

/// The even/odd amplitude combinations in their printed form
/// `A_ev^{L/R} = (B_+ A(a1,a2) + B_- A(-a1,a2))/2 * e^{i q2 a2/h}` (and the
/// odd partner with the sign of the first term flipped), with `a2` the
/// plus-sheet value over `(u, v)`.
pub fn amplitude_combinations(
    chart: &AngleChart,
    transport: &TransportSolution,
    q: (f64, f64),
    h: f64,
    u: f64,
    v: f64,
) -> (Complex64, Complex64, Complex64, Complex64) {
    let (a1, a2) = chart.alpha_of_uv(u, v, Sheet::Plus);
    let (bl_p, bl_m, br_p, br_m) = defect_multipliers(chart, q.0, h, u);
    let a_fwd = transport.amplitude(a1, a2);
    let a_bwd = transport.amplitude(-a1, a2);
    let bloch2 = Complex64::new(math::cos(q.1 * a2 / h), math::sin(q.1 * a2 / h));
    let ev_l = 0.5 * (bl_p * a_fwd + bl_m * a_bwd) * bloch2;
    let odd_l = 0.5 * (-bl_p * a_fwd + bl_m * a_bwd) * bloch2;
    let ev_r = 0.5 * (br_p * a_fwd + br_m * a_bwd) * bloch2;
    let odd_r = 0.5 * (-br_p * a_fwd + br_m * a_bwd) * bloch2;
    (ev_l, odd_l, ev_r, odd_r)
}

// ---------------------------------------------------------------------------
// Field evaluation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub struct FieldOptions {
    pub grid_u: usize,
    pub grid_v: usize,
    /// center of the partition transition, in alpha1
    pub partition_center: f64,
    /// half-width of the transition, in alpha1
    pub partition_width: f64,
    /// switch to Taylor patches where `S/h` falls below this
    pub caustic_patch_action: f64,
}

impl Default for FieldOptions {
    fn default() -> Self {
        FieldOptions {
            grid_u: 512,
            grid_v: 512,
            partition_center: 0.5 * math::PI,
            partition_width: math::PI / 8.0,
            caustic_patch_action: 0.1,
        }
    }
}

/// Caustic-line data for one side with a simple caustic: the smooth-factor
/// limits and the quadratic patch nodes.
#[derive(Debug, Clone)]
struct SimplePatch {
    /// patch active for |u - u_star| < reach (S/h below threshold there)
    reach: f64,
    u_star: f64,
    /// (u, value) nodes for the quadratic interpolation of Q and P
    q_nodes: [(f64, f64); 3],
    p_nodes: [(f64, f64); 3],
}

impl SimplePatch {
    fn quad_eval(nodes: &[(f64, f64); 3], u: f64) -> f64 {
        let (x0, y0) = nodes[0];
        let (x1, y1) = nodes[1];
        let (x2, y2) = nodes[2];
        y0 * (u - x1) * (u - x2) / ((x0 - x1) * (x0 - x2))
            + y1 * (u - x0) * (u - x2) / ((x1 - x0) * (x1 - x2))
            + y2 * (u - x0) * (u - x1) / ((x2 - x0) * (x2 - x1))
    }
}

/// One side's prepared caustic data.
#[derive(Debug, Clone)]
enum SideKind {
    Simple(SimplePatch),
    /// coastal: the limit of `(S^2/f2)^(1/4) (E f1 - kappa f2)^(-1/4)`
    Coastal { shore_limit: f64 },
}

/// A prepared evaluator for one mode's field. Immutable; row evaluation is
/// safe to run from several threads.
pub struct FieldEvaluator<'a> {
    pub chart: &'a AngleChart,
    pub transport: &'a TransportSolution,
    pub mode: QuantizedMode,
    pub opts: FieldOptions,
    smoothstep: SmoothStep,
    sides: [SideKind; 2],
    /// e^{i (S_total/h - pi/2)}
    glue: Complex64,
    /// e^{2 pi i q1 / h}, the u-cycle Bloch phase
    bloch_u: Complex64,
    /// amplitude convention: sqrt(h) times the raw representation
    norm_scale: f64,
}

impl<'a> FieldEvaluator<'a> {
    pub fn new(
        chart: &'a AngleChart,
        transport: &'a TransportSolution,
        mode: QuantizedMode,
        opts: FieldOptions,
    ) -> Result<Self, FieldError> {
        let torus = &chart.torus;
        let h = mode.h;
        let prep = |side: Side| -> Result<SideKind, FieldError> {
            let caustic =
                if side == Side::Left { torus.caustics.0 } else { torus.caustics.1 };
            match caustic.kind {
                CausticKind::Coastal => {
                    // C = (S^2/f2)^(1/4) (E f1 - k f2)^(-1/4) -> sqrt(2/|f2'|)
                    let (_, df2) = chart
                        .model
                        .f2
                        .eval_dual(&crate::expr::Bindings::u(caustic.location), Var::U)?;
                    Ok(SideKind::Coastal { shore_limit: math::sqrt(2.0 / df2.abs()) })
                }
                CausticKind::Simple => {
                    let u_star = caustic.location;
                    // c1 = |d(E f - kappa)/du| = |E f1' - kappa f2'|/f2 at u*
                    let b = crate::expr::Bindings::u(u_star);
                    let (_, df1) = chart.model.f1.eval_dual(&b, Var::U)?;
                    let (f2, df2) = chart.model.f2.eval_dual(&b, Var::U)?;
                    let c1 = (torus.energy * df1 - torus.kappa * df2).abs() / f2;
                    let q_limit = math::pow(c1, -1.0 / 6.0) / math::sqrt(f2);
                    let sign = if side == Side::Left { 1.0 } else { -1.0 };
                    let p_limit = sign * math::TAU
                        / (torus.t1 * f2 * math::sqrt(f2) * math::pow(c1, 5.0 / 6.0));
                    // patch reach: where S reaches the threshold
                    let target = opts.caustic_patch_action * h;
                    let s_of = |u: f64| match side {
                        Side::Left => torus.s_left(u),
                        Side::Right => torus.s_right(u),
                    };
                    let into = |d: f64| match side {
                        Side::Left => u_star + d,
                        Side::Right => u_star - d,
                    };
                    let mut lo = 0.0f64;
                    let mut hi = torus.span() * 0.45;
                    for _ in 0..60 {
                        let mid = 0.5 * (lo + hi);
                        if s_of(into(mid)) < target {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    let reach = hi;
                    // patch nodes: the limit plus two one-sided samples
                    // evaluated where the direct quotients are still clean
                    let mk = |d: f64| -> Result<(f64, (f64, f64)), FieldError> {
                        let u = into(d);
                        let s = s_of(u);
                        let xi = math::pow(1.5 * s, 2.0 / 3.0);
                        let f1v = chart.model.f1_at(u)?;
                        let f2v = chart.model.f2_at(u)?;
                        let rad = torus.energy * f1v - torus.kappa * f2v;
                        let q = math::quartic_root(xi / (f2v * rad));
                        let s1 = match side {
                            Side::Left => torus.alpha1_of_u(u),
                            Side::Right => torus.alpha1_of_u(u) - math::PI,
                        };
                        let p = s1 / math::quartic_root(xi * f2v * rad);
                        Ok((u, (q, p)))
                    };
                    let (u1, (q1v, p1v)) = mk(reach)?;
                    let (u2, (q2v, p2v)) = mk(2.0 * reach)?;
                    Ok(SideKind::Simple(SimplePatch {
                        reach,
                        u_star,
                        q_nodes: [(u_star, q_limit), (u1, q1v), (u2, q2v)],
                        p_nodes: [(u_star, p_limit), (u1, p1v), (u2, p2v)],
                    }))
                }
            }
        };
        let sides = [prep(Side::Left)?, prep(Side::Right)?];
        let total_phase = torus.s_total / h - 0.5 * math::PI;
        let bloch_angle = math::TAU * mode.q.0 / h;
        Ok(FieldEvaluator {
            chart,
            transport,
            mode,
            opts,
            smoothstep: SmoothStep::new(),
            sides,
            glue: Complex64::new(math::cos(total_phase), math::sin(total_phase)),
            bloch_u: Complex64::new(math::cos(bloch_angle), math::sin(bloch_angle)),
            norm_scale: math::sqrt(h),
        })
    }

    /// `(rho_L, rho_R)` at a physical `u`; exactly (1,0)/(0,1) outside the
    /// transition strip and summing to one everywhere.
    pub fn partition(&self, u: f64) -> (f64, f64) {
        let a1 = self.chart.torus.alpha1_of_u(u);
        let x = (self.opts.partition_center - a1) / self.opts.partition_width;
        let rho_l = self.smoothstep.eval(x);
        (rho_l, 1.0 - rho_l)
    }

    /// The two branch amplitudes over `(u, v)` plus the phase derivative
    /// data needed by the odd-ratio limits.
    fn branch_amplitudes(&self, u: f64, v: f64) -> (Complex64, Complex64, f64, f64, f64) {
        let torus = &self.chart.torus;
        let h = self.mode.h;
        let (q1, q2) = self.mode.q;
        let a1 = torus.alpha1_of_u(u);
        let base = math::TAU * torus.eta(v) / torus.eta_full;
        let corr = self.chart.correction(a1);
        let a2p = base + corr;
        let a2m = base - corr;
        let phase = |x: f64| Complex64::new(math::cos(x), math::sin(x));
        let abar1 = self.transport.amplitude(a1, a2p) * phase((q1 * a1 + q2 * a2p) / h);
        let abar2 = self.transport.amplitude(-a1, a2m) * phase((-q1 * a1 + q2 * a2m) / h);
        (abar1, abar2, a1, base, corr)
    }

    /// Limit of `O_X / s` at the caustic of side `side`, where
    /// `O_L = (K(s) - K(-s))/2` with `K` the branch amplitude as a function
    /// of the signed angle.
    fn odd_ratio_limit(&self, side: Side, base2: f64) -> Result<Complex64, FieldError> {
        let h = self.mode.h;
        let (q1, q2) = self.mode.q;
        let a1_star = match side {
            Side::Left => 0.0,
            Side::Right => math::PI,
        };
        let (phi, d1, d2) = self.transport.phi_and_grad(a1_star, base2);
        let corr_d = self.chart.correction_deriv(a1_star)?;
        // K'(0) = i (dPhi1 + corr' dPhi2 + (q1 + q2 corr')/h) K(0)
        let slope = d1 + corr_d * d2 + (q1 + q2 * corr_d) / h;
        let k0_angle = phi + (q1 * a1_star + q2 * base2) / h;
        let k0 = Complex64::new(math::cos(k0_angle), math::sin(k0_angle));
        let deriv = Complex64::new(0.0, slope) * k0;
        Ok(match side {
            // O_L/s -> K'(0)
            Side::Left => deriv,
            // O_R/s -> -e^{i pi q1/h} H'(0); the pi-offset phase is in k0
            Side::Right => -deriv,
        })
    }

    /// One side's glued special-function combination `T_X` (the product of
    /// the printed `W` with the singular prefactor factors, regrouped into
    /// smooth quantities).
    fn side_term(
        &self,
        side: Side,
        u: f64,
        even: Complex64,
        odd: Complex64,
        a1: f64,
        base2: f64,
    ) -> Result<Complex64, FieldError> {
        let torus = &self.chart.torus;
        let h = self.mode.h;
        let s_action = match side {
            Side::Left => torus.s_left(u),
            Side::Right => torus.s_right(u),
        };
        let kind = match side {
            Side::Left => &self.sides[0],
            Side::Right => &self.sides[1],
        };
        match kind {
            SideKind::Coastal { shore_limit } => {
                let x = s_action / h;
                let span = torus.span();
                let shore = match side {
                    Side::Left => torus.u_min(),
                    Side::Right => torus.u_max(),
                };
                let c_factor = if (u - shore).abs() < 1e-9 * span {
                    *shore_limit
                } else {
                    let f2 = self.chart.model.f2_at(u)?;
                    let f1 = self.chart.model.f1_at(u)?;
                    let rad = torus.energy * f1 - torus.kappa * f2;
                    math::quartic_root(s_action * s_action / (f2 * rad))
                };
                Ok(c_factor / math::sqrt(2.0 * h)
                    * (even * bessel_j0(x) + Complex64::new(0.0, 1.0) * odd * bessel_j1(x)))
            }
            SideKind::Simple(patch) => {
                let zeta = math::pow(1.5 * s_action / h, 2.0 / 3.0);
                let ai = airy_ai(-zeta);
                let aip = airy_ai_prime(-zeta);
                let s1 = match side {
                    Side::Left => a1,
                    Side::Right => a1 - math::PI,
                };
                let inside_patch = (u - patch.u_star).abs() < patch.reach;
                let (q_factor, p_factor) = if inside_patch {
                    (
                        SimplePatch::quad_eval(&patch.q_nodes, u),
                        SimplePatch::quad_eval(&patch.p_nodes, u),
                    )
                } else {
                    let f2 = self.chart.model.f2_at(u)?;
                    let f1 = self.chart.model.f1_at(u)?;
                    let rad = (torus.energy * f1 - torus.kappa * f2).max(1e-300);
                    let xi = math::pow(1.5 * s_action, 2.0 / 3.0);
                    (
                        math::quartic_root(xi / (f2 * rad)),
                        s1 / math::quartic_root(xi * f2 * rad),
                    )
                };
                let odd_ratio = if s1.abs() < 1e-3 {
                    self.odd_ratio_limit(side, base2)?
                } else {
                    odd / s1
                };
                let h6 = math::pow(h, 1.0 / 6.0);
                Ok(even * (q_factor / h6 * ai)
                    + Complex64::new(0.0, 1.0) * odd_ratio * (p_factor * h6 * aip))
            }
        }
    }

    /// The two chart representations at a point of the overlap strip: the
    /// left-caustic term and the glue-phased right-caustic term. They agree
    /// to O(h) where both are valid.
    pub fn chart_representations(
        &self,
        u: f64,
        v: f64,
    ) -> Result<(Complex64, Complex64), FieldError> {
        let (abar1, abar2, a1, base2, _corr) = self.branch_amplitudes(u, v);
        let even_l = 0.5 * (abar1 + abar2);
        let odd_l = 0.5 * (abar1 - abar2);
        let left = self.side_term(Side::Left, u, even_l, odd_l, a1, base2)?;
        let abar2_r = abar2 * self.bloch_u;
        let even_r = 0.5 * (abar1 + abar2_r);
        let odd_r = 0.5 * (abar2_r - abar1);
        let right = self.glue * self.side_term(Side::Right, u, even_r, odd_r, a1, base2)?;
        Ok((left, right))
    }

    /// Fits the overlap constant `C` in
    /// `|T_L - glue T_R| <= C h max|T|` over the transition strip
    /// `alpha1 in [pi/2 - delta/2, pi/2 + delta/2]`.
    pub fn overlap_constant(&self, n_u: usize, n_v: usize) -> Result<f64, FieldError> {
        let delta = self.opts.partition_width;
        let center = self.opts.partition_center;
        let mut max_diff = 0.0f64;
        let mut max_t = 0.0f64;
        for i in 0..n_u {
            let a1 = center - 0.5 * delta + delta * i as f64 / (n_u - 1) as f64;
            let u = self.chart.torus.u_of_alpha1(a1);
            for j in 0..n_v {
                let v = math::TAU * j as f64 / n_v as f64;
                let (left, right) = self.chart_representations(u, v)?;
                max_diff = max_diff.max((left - right).norm());
                max_t = max_t.max(left.norm().max(right.norm()));
            }
        }
        Ok(max_diff / (self.mode.h * max_t))
    }

    /// The field value at one physical point.
    pub fn psi(&self, u: f64, v: f64) -> Result<Complex64, FieldError> {
        let torus = &self.chart.torus;
        let u = u.max(torus.u_min()).min(torus.u_max());
        let (abar1, abar2, a1, base2, _corr) = self.branch_amplitudes(u, v);
        let (rho_l, rho_r) = self.partition(u);

        let mut total = Complex64::default();
        if rho_l > 0.0 {
            let even = 0.5 * (abar1 + abar2);
            let odd = 0.5 * (abar1 - abar2);
            total += rho_l * self.side_term(Side::Left, u, even, odd, a1, base2)?;
        }
        if rho_r > 0.0 {
            // continue the second branch through the right caustic
            let abar2_r = abar2 * self.bloch_u;
            let even = 0.5 * (abar1 + abar2_r);
            let odd = 0.5 * (abar2_r - abar1);
            total +=
                rho_r * self.glue * self.side_term(Side::Right, u, even, odd, a1, base2)?;
        }

        // common prefactor, with the 1/sqrt(2h) absorbed into norm_scale
        let f1 = self.chart.model.f1_at(u)?;
        let f2 = self.chart.model.f2_at(u)?;
        let g = self.chart.model.g_at(v)?;
        let pv2 = torus.energy * g + torus.kappa;
        let n0 = math::sqrt(0.5 * math::PI * (f1 + f2 * g)) / math::quartic_root(pv2);
        let s2 = torus.s2(v) / self.mode.h;
        let osc = Complex64::new(math::cos(s2), math::sin(s2));
        let value = self.norm_scale / math::sqrt(self.mode.h) * n0 * osc * total;
        if !value.is_finite() {
            return Err(FieldError::NonFinite { u, v, what: "psi" });
        }
        Ok(value)
    }

    /// Evaluates rows `[row_lo, row_hi)` of the field grid into `out`
    /// (row-major, v fastest). The grid spans the motion interval in u
    /// (inclusive) and `[0, 2pi)` in v (periodic, endpoint excluded).
    pub fn eval_rows(
        &self,
        grid: &FieldGrid,
        row_lo: usize,
        row_hi: usize,
        out: &mut [Complex64],
    ) -> Result<(), FieldError> {
        debug_assert_eq!(out.len(), (row_hi - row_lo) * grid.n_v);
        for (slot, i) in (row_lo..row_hi).enumerate() {
            let u = grid.u_at(i);
            for j in 0..grid.n_v {
                let v = grid.v_at(j);
                out[slot * grid.n_v + j] = self.psi(u, v)?;
            }
        }
        Ok(())
    }

    /// Full-grid evaluation (single-threaded).
    pub fn evaluate(&self) -> Result<WaveField, FieldError> {
        let grid = FieldGrid::over_torus(&self.chart.torus, self.opts.grid_u, self.opts.grid_v);
        let mut values = alloc::vec![Complex64::default(); grid.n_u * grid.n_v];
        self.eval_rows(&grid, 0, grid.n_u, &mut values)?;
        Ok(WaveField::assemble(grid, values, self))
    }
}

/// A rectangular evaluation lattice.
#[derive(Debug, Clone, Copy)]
pub struct FieldGrid {
    pub n_u: usize,
    pub n_v: usize,
    pub u_lo: f64,
    pub du: f64,
    pub dv: f64,
}

impl FieldGrid {
    pub fn over_torus(torus: &crate::actions::TorusData, n_u: usize, n_v: usize) -> Self {
        FieldGrid {
            n_u,
            n_v,
            u_lo: torus.u_min(),
            du: torus.span() / (n_u - 1) as f64,
            dv: math::TAU / n_v as f64,
        }
    }

    #[inline]
    pub fn u_at(&self, i: usize) -> f64 {
        self.u_lo + self.du * i as f64
    }

    #[inline]
    pub fn v_at(&self, j: usize) -> f64 {
        self.dv * j as f64
    }
}

/// Run metadata carried with an evaluated field.
#[derive(Debug, Clone)]
pub struct FieldMeta {
    pub energy: f64,
    pub kappa: f64,
    pub nu: (i64, i64),
    pub h: f64,
    pub lambda: f64,
    /// asymptotic eigenvalue `E + h lambda`
    pub curly_e: f64,
    pub case: CausticCase,
    /// exported values are this factor times the raw representation
    pub amplitude_scale: f64,
}

/// Complex field samples on a `(u, v)` lattice plus run metadata.
#[derive(Debug, Clone)]
pub struct WaveField {
    pub grid: FieldGrid,
    pub values: Vec<Complex64>,
    pub meta: FieldMeta,
}

impl WaveField {
    fn assemble(grid: FieldGrid, values: Vec<Complex64>, ev: &FieldEvaluator<'_>) -> Self {
        Self::from_parts(grid, values, ev.chart, ev.transport, ev.mode)
    }

    /// Assembles a field from externally evaluated rows (e.g. a threaded
    /// driver calling [`FieldEvaluator::eval_rows`]).
    pub fn from_parts(
        grid: FieldGrid,
        values: Vec<Complex64>,
        chart: &AngleChart,
        transport: &TransportSolution,
        mode: QuantizedMode,
    ) -> Self {
        let torus = &chart.torus;
        WaveField {
            grid,
            values,
            meta: FieldMeta {
                energy: torus.energy,
                kappa: torus.kappa,
                nu: mode.nu,
                h: mode.h,
                lambda: transport.lambda,
                curly_e: torus.energy + mode.h * transport.lambda,
                case: chart.model.case,
                amplitude_scale: math::sqrt(mode.h),
            },
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.grid.n_v + j]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Grid-trapezoid L2 norm over the full lattice.
    pub fn l2_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.grid.n_u {
            let w_u = if i == 0 || i == self.grid.n_u - 1 { 0.5 } else { 1.0 };
            for j in 0..self.grid.n_v {
                acc += w_u * self.at(i, j).norm_sqr();
            }
        }
        math::sqrt(acc * self.grid.du * self.grid.dv)
    }
}
