//! Fourier solution of the transport equation on the 2-torus:
//!
//! ```text
//! (<omega, d/dalpha> + i f(alpha)(H_sub - lambda) + i <omega, q>/h) A = 0.
//! ```
//!
//! Writing `A = exp(i Phi)` and `G = f (H_sub - lambda) + <omega, q>/h`,
//! the phase solves `<omega, dPhi> = -G`, i.e. `Phi_k = i G_k / <omega, k>`
//! for `k != 0`. Solvability is the vanishing of the mean `G_0`, which the
//! eigenvalue correction
//!
//! ```text
//! lambda = (mean(f H_sub) + <omega, q>/h) / mean(f)
//! ```
//!
//! enforces. `G` is real, so `Phi_{-k} = conj(Phi_k)`, `Phi` is real and
//! `|A| = 1`. Divisors `<omega, k>` below the configured floor are refused
//! rather than skipped: a dropped near-resonant mode would silently break
//! the residual guarantee. The practical surrogate for the Diophantine
//! assumption is the resonance report over the truncation range.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::fft;
use crate::math;
use crate::torus::{AngleChart, TorusError};

/// Default truncation order of the Fourier solve.
pub const DEFAULT_TRUNCATION: usize = 16;
/// Default refusal threshold for small divisors.
pub const DEFAULT_DIVISOR_FLOOR: f64 = 1e-8;
/// Grid used for the spectral transform (power of two).
const TRANSPORT_GRID: usize = 256;
/// Grid used for the lambda means.
const LAMBDA_GRID: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub enum TransportError {
    /// A divisor `<omega, k>` within the truncation range fell below the
    /// floor; the torus is too close to resonant for this solve.
    SmallDivisor { k: (i64, i64), divisor: f64, floor: f64 },
    Torus(String),
    BadGrid(String),
}

impl fmt::Display for TransportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransportError::SmallDivisor { k, divisor, floor } => write!(
                f,
                "small divisor: <omega, k> = {:.3e} at k = ({}, {}) is below the floor {:.1e}",
                divisor, k.0, k.1, floor
            ),
            TransportError::Torus(msg) => f.write_str(msg),
            TransportError::BadGrid(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for TransportError {}

impl From<TorusError> for TransportError {
    fn from(e: TorusError) -> Self {
        TransportError::Torus(format!("{}", e))
    }
}

/// The eigenvalue correction `lambda`, by trapezoid means on a 512x512
/// alpha-grid (spectrally accurate for smooth periodic integrands).
pub fn compute_lambda(chart: &AngleChart, q: (f64, f64), h: f64) -> Result<f64, TransportError> {
    let (f_grid, h_grid) = chart.sample_grids(LAMBDA_GRID)?;
    let n = (LAMBDA_GRID * LAMBDA_GRID) as f64;
    let mean_f = f_grid.iter().sum::<f64>() / n;
    let mean_fh = f_grid.iter().zip(&h_grid).map(|(a, b)| a * b).sum::<f64>() / n;
    let omega = chart.torus.omega;
    Ok((mean_fh + (omega.0 * q.0 + omega.1 * q.1) / h) / mean_f)
}

/// Fourier data of the solved transport equation.
#[derive(Debug, Clone)]
pub struct TransportSolution {
    pub lambda: f64,
    /// truncation order N: coefficients kept for 0 < |k|_inf <= N
    pub truncation: usize,
    pub omega: (f64, f64),
    /// `G_k` on the dense `(2N+1)^2` stencil
    g_coeffs: Vec<Complex64>,
    /// `Phi_k = i G_k / <omega, k>`
    phi_coeffs: Vec<Complex64>,
    /// smallest `|<omega, k>|` over the computed range
    pub min_divisor: f64,
    /// sum of `|G_k|` over the computed tail beyond N
    pub residual_bound: f64,
    /// `|G_0|` after lambda was inserted (solvability defect)
    pub mean_defect: f64,
}

impl TransportSolution {
    #[inline]
    fn idx(&self, k1: i64, k2: i64) -> usize {
        let n = self.truncation as i64;
        ((k1 + n) * (2 * n + 1) + (k2 + n)) as usize
    }

    pub fn phi_coeff(&self, k1: i64, k2: i64) -> Complex64 {
        self.phi_coeffs[self.idx(k1, k2)]
    }

    pub fn g_coeff(&self, k1: i64, k2: i64) -> Complex64 {
        self.g_coeffs[self.idx(k1, k2)]
    }

    /// The real phase `Phi(alpha)`.
    pub fn phi(&self, alpha1: f64, alpha2: f64) -> f64 {
        self.phi_horner(alpha1, alpha2).0
    }

    /// `A(alpha) = exp(i Phi(alpha))`, unit modulus by construction.
    pub fn amplitude(&self, alpha1: f64, alpha2: f64) -> Complex64 {
        let phi = self.phi(alpha1, alpha2);
        Complex64::new(math::cos(phi), math::sin(phi))
    }

    /// `(Phi, dPhi/dalpha1, dPhi/dalpha2)` in one pass.
    pub fn phi_and_grad(&self, alpha1: f64, alpha2: f64) -> (f64, f64, f64) {
        let (phi, d1, d2) = self.phi_horner(alpha1, alpha2);
        (phi, d1, d2)
    }

    fn phi_horner(&self, alpha1: f64, alpha2: f64) -> (f64, f64, f64) {
        let n = self.truncation as i64;
        let z1 = Complex64::new(math::cos(alpha1), math::sin(alpha1));
        let z2 = Complex64::new(math::cos(alpha2), math::sin(alpha2));
        // row sums over k2 by Horner in z2, then the k1 factors
        let mut phi = Complex64::default();
        let mut d1 = Complex64::default();
        let mut d2 = Complex64::default();
        let mut w1 = Complex64::new(math::cos(-(n as f64) * alpha1), math::sin(-(n as f64) * alpha1));
        for k1 in -n..=n {
            let mut row = Complex64::default();
            let mut row_d2 = Complex64::default();
            for k2 in (-n..=n).rev() {
                let c = self.phi_coeffs[self.idx(k1, k2)];
                row = row * z2 + c;
                row_d2 = row_d2 * z2 + c * Complex64::new(0.0, k2 as f64);
            }
            // rows above were Horner-evaluated as sum c_k2 z2^(k2 + n)
            let base = w1;
            phi += base * row;
            d1 += base * row * Complex64::new(0.0, k1 as f64);
            d2 += base * row_d2;
            w1 *= z1;
        }
        // undo the z2^n offset from the Horner loop
        let shift = Complex64::new(math::cos(-(n as f64) * alpha2), math::sin(-(n as f64) * alpha2));
        ((phi * shift).re, (d1 * shift).re, (d2 * shift).re)
    }
}

/// Solves the transport equation from grid samples of `G` (row-major
/// `n_grid x n_grid`, `alpha1` along rows). The public entry point
/// [`solve_transport`] samples `G` from a chart; tests may inject grids.
pub fn solve_transport_from_grid(
    mut g_grid: Vec<Complex64>,
    n_grid: usize,
    omega: (f64, f64),
    lambda: f64,
    truncation: usize,
    divisor_floor: f64,
) -> Result<TransportSolution, TransportError> {
    if g_grid.len() != n_grid * n_grid || !n_grid.is_power_of_two() {
        return Err(TransportError::BadGrid(format!(
            "grid must be a square power of two, got {} points",
            g_grid.len()
        )));
    }
    if truncation * 2 >= n_grid {
        return Err(TransportError::BadGrid(format!(
            "truncation {} too large for a {}^2 grid",
            truncation, n_grid
        )));
    }
    fft::fft2_inplace(&mut g_grid, n_grid, n_grid, false);
    let scale = 1.0 / (n_grid * n_grid) as f64;
    let n = truncation as i64;
    let side = (2 * n + 1) as usize;
    let mut g_coeffs = vec![Complex64::default(); side * side];
    let mut phi_coeffs = vec![Complex64::default(); side * side];
    let mut min_divisor = f64::MAX;
    let bin_of = |k: i64| -> usize {
        if k >= 0 {
            k as usize
        } else {
            (n_grid as i64 + k) as usize
        }
    };
    for k1 in -n..=n {
        for k2 in -n..=n {
            let g_k = g_grid[bin_of(k1) * n_grid + bin_of(k2)] * scale;
            let at = ((k1 + n) * (2 * n + 1) + (k2 + n)) as usize;
            g_coeffs[at] = g_k;
            if k1 == 0 && k2 == 0 {
                continue;
            }
            let divisor = omega.0 * k1 as f64 + omega.1 * k2 as f64;
            if divisor.abs() < divisor_floor {
                return Err(TransportError::SmallDivisor {
                    k: (k1, k2),
                    divisor,
                    floor: divisor_floor,
                });
            }
            min_divisor = min_divisor.min(divisor.abs());
            phi_coeffs[at] = Complex64::new(0.0, 1.0) * g_k / divisor;
        }
    }
    // tail estimate: everything the truncation drops, up to the grid Nyquist
    let mut residual_bound = 0.0;
    let half = (n_grid / 2) as i64;
    for b1 in 0..n_grid {
        let k1 = fft::signed_wavenumber(b1, n_grid);
        for b2 in 0..n_grid {
            let k2 = fft::signed_wavenumber(b2, n_grid);
            if k1.abs().max(k2.abs()) > n && k1.abs() < half && k2.abs() < half {
                residual_bound += g_grid[b1 * n_grid + b2].norm() * scale;
            }
        }
    }
    let mean_defect = g_coeffs[((n) * (2 * n + 1) + n) as usize].norm();
    Ok(TransportSolution {
        lambda,
        truncation,
        omega,
        g_coeffs,
        phi_coeffs,
        min_divisor,
        residual_bound,
        mean_defect,
    })
}

/// Samples `G = f (H_sub - lambda) + <omega, q>/h` on the spectral grid and
/// solves for the amplitude phase.
pub fn solve_transport(
    chart: &AngleChart,
    q: (f64, f64),
    h: f64,
    lambda: f64,
    truncation: usize,
    divisor_floor: f64,
) -> Result<TransportSolution, TransportError> {
    let omega = chart.torus.omega;
    let (f_grid, h_grid) = chart.sample_grids(TRANSPORT_GRID)?;
    let defect_term = (omega.0 * q.0 + omega.1 * q.1) / h;
    let g_grid: Vec<Complex64> = f_grid
        .iter()
        .zip(&h_grid)
        .map(|(&f, &hs)| Complex64::new(f * (hs - lambda) + defect_term, 0.0))
        .collect();
    solve_transport_from_grid(g_grid, TRANSPORT_GRID, omega, lambda, truncation, divisor_floor)
}

/// Sup-norm of the transport residual
/// `<omega, dA> + i (f (H_sub - lambda) + <omega, q>/h) A` over an
/// `n x n` grid, with `dA` by pseudospectral differentiation of sampled
/// `A` values (independent of the Fourier construction of `Phi`).
///
/// Near-resonant tori give the phase large low-divisor modes whose
/// exponential harmonics widen A's spectrum; `n` must stay comfortably
/// above twice that width or the differentiation aliases (512 is enough
/// for every shipped fixture).
pub fn transport_residual_sup(
    chart: &AngleChart,
    solution: &TransportSolution,
    q: (f64, f64),
    h: f64,
    n: usize,
) -> Result<f64, TransportError> {
    let omega = chart.torus.omega;
    let mut a_grid = vec![Complex64::default(); n * n];
    for i in 0..n {
        let a1 = math::TAU * i as f64 / n as f64;
        for j in 0..n {
            let a2 = math::TAU * j as f64 / n as f64;
            a_grid[i * n + j] = solution.amplitude(a1, a2);
        }
    }
    // spectral d/dalpha1 and d/dalpha2
    let mut spec = a_grid.clone();
    fft::fft2_inplace(&mut spec, n, n, false);
    let mut d1 = spec.clone();
    let mut d2 = spec;
    for b1 in 0..n {
        let k1 = fft::signed_wavenumber(b1, n) as f64;
        for b2 in 0..n {
            let k2 = fft::signed_wavenumber(b2, n) as f64;
            d1[b1 * n + b2] *= Complex64::new(0.0, k1);
            d2[b1 * n + b2] *= Complex64::new(0.0, k2);
        }
    }
    fft::fft2_inplace(&mut d1, n, n, true);
    fft::fft2_inplace(&mut d2, n, n, true);

    let (f_grid, h_grid) = chart.sample_grids(n)?;
    let defect_term = (omega.0 * q.0 + omega.1 * q.1) / h;
    let mut sup = 0.0f64;
    for idx in 0..n * n {
        let transportive = omega.0 * d1[idx] + omega.1 * d2[idx];
        let zeroth = Complex64::new(0.0, f_grid[idx] * (h_grid[idx] - solution.lambda) + defect_term)
            * a_grid[idx];
        sup = sup.max((transportive + zeroth).norm());
    }
    Ok(sup)
}

// ---------------------------------------------------------------------------
// Resonances
// ---------------------------------------------------------------------------

/// One near-resonance: the integer vector and its divisor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resonance {
    pub k: (i64, i64),
    pub divisor: f64,
}

/// The ten smallest divisors over `|k|_inf <= n` plus fitted Diophantine
/// constants `|<omega,k>| >= c1/(|k1|+|k2|)^c2` over the scanned range.
#[derive(Debug, Clone)]
pub struct ResonanceReport {
    pub smallest: Vec<Resonance>,
    pub c1: f64,
    pub c2: f64,
    pub scanned_up_to: usize,
}

/// Scans one representative of each `±k` pair, ascending by `|<omega,k>|`.
pub fn resonance_report(omega: (f64, f64), n: usize) -> ResonanceReport {
    let nn = n as i64;
    let mut all: Vec<Resonance> = Vec::new();
    for k1 in 0..=nn {
        let k2_range = if k1 == 0 { 1..=nn } else { -nn..=nn };
        for k2 in k2_range {
            let divisor = omega.0 * k1 as f64 + omega.1 * k2 as f64;
            all.push(Resonance { k: (k1, k2), divisor });
        }
    }
    all.sort_by(|a, b| a.divisor.abs().partial_cmp(&b.divisor.abs()).unwrap());
    let smallest: Vec<Resonance> = all.iter().take(10).copied().collect();

    // Diophantine fit on the running record minima of
    // d -> min |<omega,k>| over |k1|+|k2| = d.
    let max_degree = 2 * n;
    let mut per_degree = vec![f64::MAX; max_degree + 1];
    for r in &all {
        let d = (r.k.0.abs() + r.k.1.abs()) as usize;
        if d <= max_degree {
            per_degree[d] = per_degree[d].min(r.divisor.abs());
        }
    }
    let mut records: Vec<(f64, f64)> = Vec::new();
    let mut best = f64::MAX;
    for (d, &m) in per_degree.iter().enumerate().skip(1) {
        if m < best && m > 0.0 && m < f64::MAX {
            best = m;
            records.push((math::ln(d as f64), math::ln(m)));
        }
    }
    let (c1, c2) = if records.len() >= 2 {
        let n_pts = records.len() as f64;
        let sx: f64 = records.iter().map(|p| p.0).sum();
        let sy: f64 = records.iter().map(|p| p.1).sum();
        let sxx: f64 = records.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = records.iter().map(|p| p.0 * p.1).sum();
        let denom = n_pts * sxx - sx * sx;
        let slope = if denom.abs() > 1e-30 { (n_pts * sxy - sx * sy) / denom } else { 0.0 };
        let c2 = (-slope).max(1.0);
        // pull c1 down until the bound holds over the whole scan
        let mut c1 = f64::MAX;
        for r in &all {
            let d = (r.k.0.abs() + r.k.1.abs()) as f64;
            if r.divisor.abs() > 0.0 {
                c1 = c1.min(r.divisor.abs() * math::pow(d, c2));
            }
        }
        (c1, c2)
    } else {
        (0.0, 1.0)
    };
    ResonanceReport { smallest, c1, c2, scanned_up_to: n }
}
