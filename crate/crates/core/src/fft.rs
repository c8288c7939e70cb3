//! Minimal power-of-two complex FFT, enough for the 256x256 torus grids
//! used by the transport solver and for cumulative Fourier integrals.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::math;

/// In-place radix-2 Cooley–Tukey transform. `data.len()` must be a power of
/// two. The inverse transform divides by the length.
pub fn fft_inplace(data: &mut [Complex64], inverse: bool) {
    let n = data.len();
    assert!(n.is_power_of_two(), "fft length must be a power of two");
    // bit-reversal permutation
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            data.swap(i, j);
        }
    }
    let sign = if inverse { 1.0 } else { -1.0 };
    let mut len = 2;
    while len <= n {
        let ang = sign * math::TAU / len as f64;
        let wlen = Complex64::new(math::cos(ang), math::sin(ang));
        let mut i = 0;
        while i < n {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let a = data[i + k];
                let b = data[i + k + len / 2] * w;
                data[i + k] = a + b;
                data[i + k + len / 2] = a - b;
                w *= wlen;
            }
            i += len;
        }
        len <<= 1;
    }
    if inverse {
        let scale = 1.0 / n as f64;
        for x in data.iter_mut() {
            *x *= scale;
        }
    }
}

/// 2-D transform of a row-major `rows x cols` grid (both powers of two).
pub fn fft2_inplace(data: &mut [Complex64], rows: usize, cols: usize, inverse: bool) {
    assert_eq!(data.len(), rows * cols);
    for r in 0..rows {
        fft_inplace(&mut data[r * cols..(r + 1) * cols], inverse);
    }
    let mut column: Vec<Complex64> = vec![Complex64::default(); rows];
    for c in 0..cols {
        for r in 0..rows {
            column[r] = data[r * cols + c];
        }
        fft_inplace(&mut column, inverse);
        for r in 0..rows {
            data[r * cols + c] = column[r];
        }
    }
}

/// Maps an FFT bin index to its signed wavenumber in -n/2..n/2.
#[inline]
pub fn signed_wavenumber(bin: usize, n: usize) -> i64 {
    if bin <= n / 2 {
        bin as i64
    } else {
        bin as i64 - n as i64
    }
}
