//! Exact truncated-series machinery for the uniformizing differential
//! equations of punctured spheres and the derivatives of their solutions
//! with respect to the accessory parameters.
//!
//! The crate is layered bottom-up:
//!
//! - [`scalar`] / [`series`]: exact rationals, first-order jets, and truncated
//!   Laurent series with composition, reversion, `exp`/`log`, `θ = t·d/dt`
//!   and the Eichler `m³`-division.
//! - [`frobenius`]: the operator `L = (P y')' + P₁ y`, its coefficient
//!   recurrence, the Frobenius basis `{y, y log t + b}` and three independent
//!   routes to `∂y/∂ρᵢ`.
//! - [`deform`]: the mirror-map style series `Q`, `T`, `F`, the weight-four
//!   series `Hᵢ`, and the accessory derivatives at fixed `T` or fixed `Q`.
//! - [`quasimod`]: quasimodular elements in the `φ`-basis, the derivations
//!   `D`, `W`, `δ`, and the lift of `∂ᵢ,Q` to quasimodular forms.
//! - [`etaq`]: eta-quotient expansions as an independent q-series oracle.
//! - [`gamma16`]: the built-in four-punctured example and its reference tables.
//! - [`suites`]: named verification suites producing pass/fail checks.
//! - [`cli`]: configuration files, argument handling and report output.

pub mod cli;
pub mod deform;
pub mod error;
pub mod etaq;
pub mod frobenius;
pub mod gamma16;
pub mod quasimod;
pub mod scalar;
pub mod series;
pub mod suites;

pub use error::{DeformError, EtaError, FrobeniusError, SeriesError};
pub use scalar::{int, parse_rational, rat, Jet, Rational, Scalar};
pub use series::{LogSeries, Poly, Series};
