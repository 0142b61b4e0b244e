//! Exact q-series arithmetic for theta functions, Appell-Lerch sums and the
//! 10th order mock theta functions `X` and `chi`, with a registry of
//! identities that can be checked coefficient by coefficient.
//!
//! ```
//! use qmock::{EvalContext, Monomial, theta::jtheta};
//!
//! let ctx = EvalContext::new(16).unwrap();
//! // J_1 = j(q, q^3) = (q; q)_inf
//! let euler = jtheta(Monomial::q(1), Monomial::q(3), &ctx).unwrap();
//! assert_eq!(euler.to_string(), "1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + O(q^16)");
//! ```

pub mod appell;
pub mod cli;
pub mod error;
pub mod expr;
pub mod identity;
pub mod mock;
pub mod monomial;
pub mod oracle;
pub mod selftest;
pub mod series;
pub mod theta;

pub use error::{Error, GenericityError, Result};
pub use monomial::Monomial;
pub use series::{first_mismatch, Coefficient, EvalContext, LaurentSeries, Mismatch};
