//! Generalized trigonometric and hyperbolic functions with two exponents.
//!
//! For `q > 1` and `p > q/(q+1)`, `sin_{p,q}` is the inverse of
//! `y ↦ ∫_0^y (1 - t^q)^{-1/p} dt` and `sinh_{p,q}` the inverse of
//! `y ↦ ∫_0^y (1 + t^q)^{-1/p} dt`. The crate evaluates these functions and
//! their companions to near machine precision, transports between the two
//! families, checks the known closed-form multiple-angle and addition
//! formulas, and runs a verification suite over all of it.
//!
//! ```
//! use pqtrig::{sin_pq, ParamPair};
//! let pq = ParamPair::new(1.0, 2.0)?;
//! // sin_{1,2} is the hyperbolic tangent
//! assert!((sin_pq(&pq, 1.0)?.value - 1f64.tanh()).abs() < 1e-15);
//! # Ok::<(), pqtrig::Error>(())
//! ```

pub mod duality;
pub mod error;
pub mod formulas;
pub mod gtf;
pub mod params;
pub mod quadrature;
pub mod verify;
mod roots;

pub use error::{Error, Result};
pub use formulas::{FormulaEval, FormulaId, FormulaInput};
pub use gtf::{
    cos_pq, cosh_pq, sin_pq, sincos_pq, sinh_pq, sinhcosh_pq, tan_pq, tau_pq, EvalResult, SinCos, SinhCosh,
};
pub use params::{conjugate, half_period, r_map, ExtReal, ParamPair};
pub use quadrature::{arcsin_pq, arcsin_to_one, arsinh_pq, log_beta, QuadResult};
pub use verify::{run_suite, run_suite_with, CheckReport, SuiteConfig};
