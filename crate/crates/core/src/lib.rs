//! Construction and verification of semiclassical asymptotic eigenfunctions
//! of the degenerate operator `-h^2 <grad, (D0 I + mu h D1 I) grad>` on a
//! cylinder, for standing coastal-trapped waves.
//!
//! The pipeline is:
//!
//! 1. [`model`] — the problem data: depth split `f = f1/f2`, angular profile
//!    `g`, perturbation `D1`, caustic case (A)/(B)/(C).
//! 2. [`actions`] — turning points, action integrals, frequencies,
//!    Bohr–Sommerfeld quantization and the action defect `q`.
//! 3. [`torus`] — angle coordinates on the invariant torus, the invariant
//!    measure factor and the subprincipal symbol restricted to the torus.
//! 4. [`transport`] — Fourier solution of the transport equation, the
//!    eigenvalue correction `lambda` and resonance diagnostics.
//! 5. [`field`] — evaluation of the glued leading term via Airy (simple
//!    caustic) and Bessel (coastal caustic) representations.
//! 6. [`verify`] — discretized operator application, residual norms and
//!    convergence-order studies.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI
//! crate.

#![no_std]

extern crate alloc;

pub mod actions;
pub mod expr;
pub mod model;
pub mod fft;
pub mod field;
pub mod interp;
mod math;
pub mod oracle;
pub mod quad;
pub mod special;
pub mod torus;
pub mod transport;
pub mod verify;

pub use num_complex::Complex64;
