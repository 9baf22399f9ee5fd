//! Gaussian matrix moments in the zero-replica limit and the knot data they encode.
//!
//! * [`exactmoments`]: exact multi-trace moments as polynomials in `N`.
//! * [`genfunc`]: the sinh-product replica generating series and one-point series.
//! * [`seifert`]: Seifert matrix families, Alexander and Conway polynomials.
//! * [`zeros`]: certified polynomial roots and the unit-circle zero locus.
//! * [`bands`]: floor numbering on strand-and-rung ladder diagrams.
//! * [`knotpoly`]: planar diagrams, Kauffman bracket, Jones and Vassiliev data.
//! * [`catalogue`]: the knot to Gaussian-mean table.

pub mod bands;
pub mod catalogue;
pub mod exactmoments;
pub mod genfunc;
pub mod knotpoly;
pub mod poly;
pub mod seifert;
pub mod series;
pub mod zeros;

pub use poly::{Coeff, LaurentPoly, Poly};
pub use series::PowerSeries;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Exact polynomial in the matrix dimension `N`.
pub type NPolynomial = Poly<Rational>;
/// Univariate polynomial with big-integer coefficients.
pub type IntPolynomial = Poly<num_bigint::BigInt>;
/// Laurent polynomial with big-integer coefficients.
pub type IntLaurent = LaurentPoly<num_bigint::BigInt>;
/// Truncated multivariate series with rational coefficients.
pub type MultiSeries = PowerSeries<Rational>;
