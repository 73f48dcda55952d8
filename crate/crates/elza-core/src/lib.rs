//! Numerical machinery for self-dual L-functions of degree at most two:
//! elliptic-curve L-functions, quadratic Dirichlet L-functions, and the
//! Riemann zeta function, together with the zero statistics and
//! ratios-conjecture predictions built on top of them.
//!
//! The crate is organised around the pipeline
//!
//! * [`arith`] — prime sieves, Kronecker symbol, fundamental discriminants;
//! * [`curve`] — Weierstrass models, point counts `a(p)`, Hecke coefficients;
//! * [`zeta`] — Euler–Maclaurin zeta with derivatives, complex gamma
//!   functions, the incomplete gamma function, and certified zeta zeros;
//! * [`lfunc`] — a smoothed approximate-functional-equation engine for
//!   self-dual L-functions with a single gamma factor, Hardy Z functions,
//!   and certified zero lists;
//! * [`bias`] — prime-coefficient bias statistics for elliptic curves;
//! * [`predict`] — theoretical prediction curves (local corrections,
//!   one-level density, pair correlation, limiting kernels);
//! * [`stats`] — empirical histograms of zeros and discrepancy measures.
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm`
//! feature instead of `std` for freestanding builds. All computations are
//! pure functions of their inputs, so values may be shared freely across
//! threads; parallel drivers live in the companion CLI crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("elza-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod arith;
pub mod bias;
pub mod curve;
pub mod eval;
pub mod lfunc;
pub mod predict;
pub mod quad;
pub mod stats;
pub mod zeta;

pub use eval::ComplexEval;
