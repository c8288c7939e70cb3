//! Angle coordinates on the invariant torus, the invariant measure factor,
//! and the restriction of the subprincipal symbol.
//!
//! The chart is
//!
//! ```text
//! alpha1(u) = (pi/T1) int_{uL0}^u du' / (sqrt(E f1 - kappa f2) sqrt(f2)),
//! alpha2(u,v) = 2pi eta(v)/eta(2pi) + corr(alpha1(u)),
//! corr(a)   = (2 T1/eta(2pi)) int_0^a (<f2> - f2(u(a'))) da',
//! ```
//!
//! with `alpha1 in (0, pi)` on the branch `p_u > 0`, continued evenly to
//! the other branch. In these coordinates the flow is straightened up to
//! the scalar factor `f(alpha) = c (f1 + f2 g)`: `dalpha/dt = omega/f`.
//! The correction integrand is even about `alpha1 = 0` and `pi` with zero
//! mean, so `corr` vanishes at `0`, `pi`, and `2pi`; that is exactly what
//! glues the two branches continuously across both caustics.
//!
//! On the second branch (`p_u < 0`) the chart value over the same physical
//! point `(u,v)` is `(-alpha1, alpha2_minus)` with
//! `alpha2_minus = 2pi eta/eta(2pi) - corr(alpha1)`; both sheets are
//! exposed because the caustic representations sample amplitudes on both.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::actions::{ActionsError, CausticKind, TorusData};
use crate::expr::EvalError;
use crate::fft;
use crate::interp::{CubicSpline, InterpError};
use crate::math;
use crate::model::DepthModel;

#[derive(Debug, Clone, PartialEq)]
pub enum TorusError {
    Actions(String),
    Eval(EvalError),
    Interp(InterpError),
    /// `H_sub` failed to stay finite approaching a shore.
    ShoreSingular { alpha1: f64, value: f64 },
    NonMonotoneChart(String),
}

impl fmt::Display for TorusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusError::Actions(msg) => f.write_str(msg),
            TorusError::Eval(e) => write!(f, "{}", e),
            TorusError::Interp(e) => write!(f, "{}", e),
            TorusError::ShoreSingular { alpha1, value } => write!(
                f,
                "subprincipal symbol not finite at the shore (alpha1 = {}, value = {:.3e}); D1 must vanish faster than f2",
                alpha1, value
            ),
            TorusError::NonMonotoneChart(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for TorusError {}

impl From<EvalError> for TorusError {
    fn from(e: EvalError) -> Self {
        TorusError::Eval(e)
    }
}

impl From<InterpError> for TorusError {
    fn from(e: InterpError) -> Self {
        TorusError::Interp(e)
    }
}

impl From<ActionsError> for TorusError {
    fn from(e: ActionsError) -> Self {
        TorusError::Actions(format!("{}", e))
    }
}

/// Which branch of the torus lies over a physical point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sheet {
    /// `p_u > 0`, chart value `(alpha1, alpha2_plus)`.
    Plus,
    /// `p_u < 0`, chart value `(-alpha1, alpha2_minus)`.
    Minus,
}

const CORR_GRID: usize = 4096;
/// modes kept when integrating the correction spectrally
const CORR_MODES: usize = 512;

/// The angle chart of one torus, with everything the transport and field
/// stages evaluate pointwise.
#[derive(Debug, Clone)]
pub struct AngleChart {
    pub model: DepthModel,
    pub torus: TorusData,
    /// `<f2>` averaged over alpha1.
    pub mean_f2: f64,
    /// Normalization `c = omega1 T1/(2pi)` of the measure factor.
    pub measure_const: f64,
    /// spectral tail dropped when building the correction table
    pub corr_tail: f64,
    corr: CubicSpline,
}

/// Builds the chart tables: `u(alpha1)` comes from the torus, `<f2>` by the
/// trapezoid mean over 4096 uniform alpha1-samples, and the correction term
/// by spectral integration of its mean-zero periodic integrand.
pub fn build_chart(model: &DepthModel, torus: TorusData) -> Result<AngleChart, TorusError> {
    let n = CORR_GRID;
    let mut f2_samples = Vec::with_capacity(n);
    for j in 0..n {
        let alpha = math::TAU * j as f64 / n as f64;
        let u = torus.u_of_alpha1(alpha);
        f2_samples.push(model.f2_at(u)?);
    }
    let mean_f2 = f2_samples.iter().sum::<f64>() / n as f64;

    // corr(a) = (2 T1/eta(2pi)) * int_0^a (<f2> - f2) da', spectrally:
    // X_k/(i k) for k != 0, inverse transform, pinned to corr(0) = 0.
    let mut spectrum: Vec<Complex64> =
        f2_samples.iter().map(|&x| Complex64::new(mean_f2 - x, 0.0)).collect();
    fft::fft_inplace(&mut spectrum, false);
    let mut tail = 0.0;
    for (bin, value) in spectrum.iter_mut().enumerate() {
        let k = fft::signed_wavenumber(bin, n);
        if k == 0 || k.unsigned_abs() as usize > CORR_MODES {
            if k != 0 {
                tail += value.norm() / (n as f64 * k.unsigned_abs() as f64);
            }
            *value = Complex64::new(0.0, 0.0);
        } else {
            *value /= Complex64::new(0.0, k as f64);
        }
    }
    fft::fft_inplace(&mut spectrum, true);
    let scale = 2.0 * torus.t1 / torus.eta_full;
    let base = spectrum[0].re;
    let mut grid_alpha = Vec::with_capacity(n + 1);
    let mut corr_vals = Vec::with_capacity(n + 1);
    for (j, value) in spectrum.iter().enumerate() {
        grid_alpha.push(math::TAU * j as f64 / n as f64);
        corr_vals.push(scale * (value.re - base));
    }
    grid_alpha.push(math::TAU);
    corr_vals.push(0.0);
    let corr = CubicSpline::new(grid_alpha, corr_vals)?;

    let measure_const = torus.omega.0 * torus.t1 / math::TAU;
    Ok(AngleChart { model: model.clone(), torus, mean_f2, measure_const, corr_tail: scale * tail, corr })
}

impl AngleChart {
    /// The second term of `alpha2`, tabulated on `[0, 2pi]`; odd about 0
    /// and pi, zero at 0, pi, 2pi.
    pub fn correction(&self, alpha1: f64) -> f64 {
        self.corr.eval(math::wrap(alpha1, math::TAU))
    }

    /// d(corr)/d(alpha1), analytic from the integrand.
    pub fn correction_deriv(&self, alpha1: f64) -> Result<f64, TorusError> {
        let u = self.torus.u_of_alpha1(alpha1);
        Ok(2.0 * self.torus.t1 / self.torus.eta_full * (self.mean_f2 - self.model.f2_at(u)?))
    }

    /// `(alpha1, alpha2)` over the physical point on the requested sheet.
    /// `alpha2` is continuous in `v` (not wrapped).
    pub fn alpha_of_uv(&self, u: f64, v: f64, sheet: Sheet) -> (f64, f64) {
        let a1 = self.torus.alpha1_of_u(u);
        let base = math::TAU * self.torus.eta(v) / self.torus.eta_full;
        match sheet {
            Sheet::Plus => (a1, base + self.correction(a1)),
            Sheet::Minus => (-a1, base - self.correction(a1)),
        }
    }

    /// Physical `v` (mod 2pi) of a chart point; inverts
    /// `alpha2 = 2pi eta(v)/eta(2pi) + corr(alpha1)` where `corr` follows
    /// the odd periodic extension on the second branch.
    pub fn v_of_alpha(&self, alpha1: f64, alpha2: f64) -> f64 {
        let a1 = math::wrap(alpha1, math::TAU);
        // corr as built already follows the odd extension on (pi, 2pi)
        let eta_target = (alpha2 - self.corr.eval(a1)) * self.torus.eta_full / math::TAU;
        math::wrap(self.torus.v_of_eta(math::wrap(eta_target, self.torus.eta_full)), math::TAU)
    }

    /// `u` over a chart point (even continuation in `alpha1`).
    pub fn u_of_alpha(&self, alpha1: f64) -> f64 {
        self.torus.u_of_alpha1(alpha1)
    }

    /// The measure factor `f(alpha) = c (f1(u) + f2(u) g(v))`; positive on
    /// the whole torus including coastal caustics.
    pub fn measure_factor(&self, alpha1: f64, alpha2: f64) -> Result<f64, TorusError> {
        let u = self.u_of_alpha(alpha1);
        let v = self.v_of_alpha(alpha1, alpha2);
        Ok(self.measure_const * self.model.denom_at(u, v)?)
    }

    /// `H_sub` restricted to the torus, as a function of the chart point:
    /// `E D1 (f1 + f2 g)/f2`, with the validated limit 0 on a shore line.
    pub fn h_sub(&self, alpha1: f64, alpha2: f64) -> Result<f64, TorusError> {
        if self.model.mu == 0 {
            return Ok(0.0);
        }
        let u = self.u_of_alpha(alpha1);
        let v = self.v_of_alpha(alpha1, alpha2);
        self.h_sub_at_uv(u, v)
    }

    /// Same as [`AngleChart::h_sub`] but at a physical point.
    pub fn h_sub_at_uv(&self, u: f64, v: f64) -> Result<f64, TorusError> {
        if self.model.mu == 0 {
            return Ok(0.0);
        }
        let span = self.torus.span();
        let at_shore = |kind: CausticKind, end: f64| {
            kind == CausticKind::Coastal && (u - end).abs() < 1e-12 * span
        };
        if at_shore(self.torus.caustics.0.kind, self.torus.caustics.0.location)
            || at_shore(self.torus.caustics.1.kind, self.torus.caustics.1.location)
        {
            // D1 vanishes faster than f2 at a shore (validated at load)
            return Ok(0.0);
        }
        let f2 = self.model.f2_at(u)?;
        let value = self.torus.energy * self.model.d1_at(u, v)? * self.model.denom_at(u, v)? / f2;
        if !value.is_finite() {
            return Err(TorusError::ShoreSingular { alpha1: self.torus.alpha1_of_u(u), value });
        }
        Ok(value)
    }

    /// Samples `f(alpha)` and `H_sub(alpha)` on a uniform `n x n` torus
    /// grid (row-major, `alpha1` along rows).
    pub fn sample_grids(&self, n: usize) -> Result<(Vec<f64>, Vec<f64>), TorusError> {
        let mut f_grid = Vec::with_capacity(n * n);
        let mut h_grid = Vec::with_capacity(n * n);
        for i in 0..n {
            let a1 = math::TAU * i as f64 / n as f64;
            let u = self.u_of_alpha(a1);
            let f1 = self.model.f1_at(u)?;
            let f2 = self.model.f2_at(u)?;
            let corr = self.correction(a1);
            for j in 0..n {
                let a2 = math::TAU * j as f64 / n as f64;
                let eta_target = (a2 - corr) * self.torus.eta_full / math::TAU;
                let v = math::wrap(
                    self.torus.v_of_eta(math::wrap(eta_target, self.torus.eta_full)),
                    math::TAU,
                );
                let g = self.model.g_at(v)?;
                let denom = f1 + f2 * g;
                f_grid.push(self.measure_const * denom);
                if self.model.mu == 0 {
                    h_grid.push(0.0);
                } else {
                    let hs = if f2 == 0.0 {
                        0.0
                    } else {
                        self.torus.energy * self.model.d1_at(u, v)? * denom / f2
                    };
                    if !hs.is_finite() {
                        return Err(TorusError::ShoreSingular { alpha1: a1, value: hs });
                    }
                    h_grid.push(hs);
                }
            }
        }
        Ok((f_grid, h_grid))
    }
}
