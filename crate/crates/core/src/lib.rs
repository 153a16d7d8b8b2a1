//! Exact computer algebra for degenerate Euler-Genocchi polynomial families.
//!
//! The crate builds the generalized degenerate Euler-Genocchi polynomials
//! `A^{(r)}_{n,lambda}(x)`, their order-`alpha` extension, the degenerate
//! Euler and Genocchi families, degenerate Stirling numbers of the second
//! kind, incomplete Bell polynomials and alternating degenerate power sums
//! as sparse polynomials over arbitrary-precision rationals, and verifies a
//! catalog of identities between them as exact polynomial equalities.
//!
//! Layering:
//!
//! * [`poly`] / [`series`] / [`bell`] / [`comb`] - scalar-generic exact
//!   algebra: sparse polynomials in `{x, lambda, alpha}` and truncated
//!   exponential generating functions;
//! * [`families`] - constructors for every named sequence, usually with two
//!   independent computation routes;
//! * [`identity`] - the identity catalog, grid sweeps and reports;
//! * [`table`] - table building and CSV/JSON/LaTeX/text rendering.
//!
//! ```
//! use degenpoly::{families, Poly, Var};
//!
//! // G_{2,lambda}(x) = 2x - 1
//! let g2: Poly = families::genocchi_order_poly(2, 1);
//! assert_eq!(g2.to_string(), "2*x - 1");
//! ```

pub mod bell;
pub mod comb;
pub mod error;
pub mod families;
pub mod identity;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod table;

pub use error::{Error, Result};
pub use poly::{falling_factorial, Monomial, MultiPoly, Var};
pub use scalar::Scalar;
pub use series::EgfSeries;

/// The exact coefficient field: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// Polynomial over [`Rat`] in `{x, lambda, alpha}`.
pub type Poly = MultiPoly<Rat>;

/// Truncated EGF over [`Rat`].
pub type Series = EgfSeries<Rat>;
