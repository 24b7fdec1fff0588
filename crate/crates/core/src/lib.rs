//! q-exponential special functions and numerical/exact verification of the
//! q-plane-wave representation of the Dirac delta.
//!
//! * [`qexp`]: q-exponential, q-trigonometric functions and the nascent delta kernel.
//! * [`exactpi`]: exact big-rational evaluation of the Gamma-ratio sums whose value is π.
//! * [`quadrature`]: adaptive Gauss-Kronrod engine and the arctan-family π integrals.
//! * [`delta`]: sifting-property harness, Taylor-term integrals and q-plane-wave norms.
//! * [`verify`]: the pinned verification checks shared by the CLI and the test suites.
//!
//! The floating-point layers are generic over [`Real`]; the aliases below fix `f64`.

pub mod delta;
pub mod error;
pub mod exactpi;
pub mod qexp;
pub mod quadrature;
mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub type QParam64 = qexp::QParam<f64>;
pub type Alpha64 = qexp::Alpha<f64>;
pub type QComplex64 = qexp::QComplex<f64>;
pub type NascentDeltaSpec64 = qexp::NascentDeltaSpec<f64>;
pub type Interval64 = quadrature::Interval<f64>;
pub type QuadResult64 = quadrature::QuadResult<f64>;
pub type RParam64 = quadrature::RParam<f64>;
