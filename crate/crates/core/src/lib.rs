//! Verification toolkit for the non-compact quantum dilogarithm and the
//! modular double of simply-laced quantum groups.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation:
//!
//! * [`qdilog`]: evaluation of `G_b` and `g_b`, pole/zero classification,
//!   residues and asymptotic checks.
//! * [`quadrature`]: adaptive Gauss-Kronrod integration along horizontal
//!   lines of the complex plane.
//! * [`contour`]: direct numerical checks of the tau-binomial integral, the
//!   4-5 relation and the 6-9 identity.
//! * [`qalgebra`]: exact noncommutative normal ordering over `Q(q^{1/2})`
//!   and the integer-power Kac, Serre-sum, q-binomial and coproduct checks.
//! * [`repcheck`]: the difference-operator representation of the modular
//!   double of `gl(N)` and pointwise verification of its relations.
//! * [`suite`]: the ordered job lists run by the command line.
//!
//! IO, timing, concurrency and the command line live in the `mdlab` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod contour;
pub mod error;
pub mod qalgebra;
pub mod qdilog;
pub mod quadrature;
pub mod report;
pub mod suite;
pub mod repcheck;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use qdilog::BParam;
pub use quadrature::QuadratureConfig;
pub use report::{CheckReport, IdentityId, ParamValue};
