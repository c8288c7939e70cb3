//! Double-precision special functions needed by the caustic representations:
//! Airy Ai and Ai' at simple caustics, Bessel J0 and J1 at coastal caustics.
//!
//! Target accuracy is 1e-10 relative (1e-13 absolute near zeros) on the
//! ranges the field evaluator uses: Airy on [-40, 10], Bessel on [0, 200].

mod airy;
mod airy_tables;
mod bessel;

pub use airy::{airy_ai, airy_ai_prime};
pub use bessel::{bessel_j0, bessel_j1};
