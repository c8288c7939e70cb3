//! Heatmap rendering of `Re psi`: a fixed diverging colormap symmetric
//! about zero, on the cylinder rectangle and optionally in physical
//! coordinates `x = e^u (cos v, sin v)`.

use std::path::Path;

use ctw_core::field::WaveField;

use crate::png;

/// Diverging blue-white-red, `t` in [-1, 1].
fn colormap(t: f64) -> (u8, u8, u8) {
    let t = t.clamp(-1.0, 1.0);
    let lerp = |a: f64, b: f64, x: f64| (a + (b - a) * x).round().clamp(0.0, 255.0) as u8;
    if t < 0.0 {
        let x = 1.0 + t; // 0 at deep blue, 1 at white
        (lerp(33.0, 255.0, x), lerp(68.0, 255.0, x), lerp(181.0, 255.0, x))
    } else {
        (lerp(255.0, 178.0, t), lerp(255.0, 24.0, t), lerp(255.0, 43.0, t))
    }
}

const BACKGROUND: (u8, u8, u8) = (245, 245, 245);

/// Bilinear sample of `Re psi` at fractional grid coordinates; v wraps.
fn sample_re(field: &WaveField, u: f64, v: f64) -> f64 {
    let grid = &field.grid;
    let fu = ((u - grid.u_lo) / grid.du).clamp(0.0, (grid.n_u - 1) as f64);
    let iv = v.rem_euclid(2.0 * std::f64::consts::PI) / grid.dv;
    let i0 = (fu.floor() as usize).min(grid.n_u - 2);
    let j0 = (iv.floor() as usize) % grid.n_v;
    let j1 = (j0 + 1) % grid.n_v;
    let (su, sv) = (fu - i0 as f64, iv - iv.floor());
    let f00 = field.at(i0, j0).re;
    let f01 = field.at(i0, j1).re;
    let f10 = field.at(i0 + 1, j0).re;
    let f11 = field.at(i0 + 1, j1).re;
    f00 * (1.0 - su) * (1.0 - sv) + f10 * su * (1.0 - sv) + f01 * (1.0 - su) * sv + f11 * su * sv
}

/// The cylinder rectangle: u rightward, v upward.
pub fn heatmap_cylinder(field: &WaveField, path: &Path) -> std::io::Result<()> {
    let (width, height) = (720usize, 540usize);
    let vmax = field.values.iter().map(|z| z.re.abs()).fold(0.0, f64::max).max(1e-300);
    let grid = &field.grid;
    let u_span = grid.du * (grid.n_u - 1) as f64;
    let mut pixels = Vec::with_capacity(width * height);
    for row in 0..height {
        // v decreases downward so v = 0 sits at the bottom edge
        let v = 2.0 * std::f64::consts::PI * (height - 1 - row) as f64 / (height - 1) as f64;
        for col in 0..width {
            let u = grid.u_lo + u_span * col as f64 / (width - 1) as f64;
            pixels.push(colormap(sample_re(field, u, v) / vmax));
        }
    }
    png::write_rgb(path, width, height, &pixels)
}

/// The physical annulus `x = e^u (cos v, sin v)`.
pub fn heatmap_physical(field: &WaveField, path: &Path) -> std::io::Result<()> {
    let size = 720usize;
    let vmax = field.values.iter().map(|z| z.re.abs()).fold(0.0, f64::max).max(1e-300);
    let grid = &field.grid;
    let u_hi = grid.u_at(grid.n_u - 1);
    let r_max = u_hi.exp() * 1.02;
    let r_min = grid.u_lo.exp();
    let mut pixels = Vec::with_capacity(size * size);
    for row in 0..size {
        let x2 = r_max * (1.0 - 2.0 * row as f64 / (size - 1) as f64);
        for col in 0..size {
            let x1 = r_max * (2.0 * col as f64 / (size - 1) as f64 - 1.0);
            let r = (x1 * x1 + x2 * x2).sqrt();
            if r < r_min || r > u_hi.exp() || r == 0.0 {
                pixels.push(BACKGROUND);
                continue;
            }
            let u = r.ln();
            let v = x2.atan2(x1).rem_euclid(2.0 * std::f64::consts::PI);
            pixels.push(colormap(sample_re(field, u, v) / vmax));
        }
    }
    png::write_rgb(path, size, size, &pixels)
}
