//! Replica generating series and one-point series identities, in exact arithmetic.

mod bernoulli;
mod bessel;
mod onepoint;
mod replica;

use num_bigint::BigInt;
use thiserror::Error;

pub use bernoulli::{bernoulli_numbers, oneloop_bernoulli_coeffs, oneloop_magnitude};
pub use bessel::{
    bessel_j1, bessel_large_n_check, bessel_limit, scaled_coefficients, scaled_onepoint,
};
pub use onepoint::{
    exact_single_trace, full_expansion_leading, full_expansion_second, onepoint_full_expansion,
    onepoint_order_n_harmonic, onepoint_order_n_series, onepoint_series, onepoint_series_closed,
    reassembled_moment, Series,
};
pub use replica::{
    intersection_number, replica_generating_series, replica_generating_series_direct,
    replica_moment_from_series, replica_series_coefficient, trivalent_closed_form,
    trivalent_replica,
};

use crate::exactmoments::MomentError;
use crate::Rational;

/// Default truncation degree of the replica series.
pub const DEFAULT_DEGREE: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenfuncError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by the linear form left a non-zero remainder")]
    NonZeroRemainder,
    #[error(transparent)]
    Moment(#[from] MomentError),
}

pub(crate) fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::from(1u8);
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Records of the homogeneous degree-`degree` part, sorted by decreasing exponent vector.
pub fn coefficients_at_degree(
    k: usize,
    degree: u32,
) -> Result<Vec<(Vec<u32>, Rational)>, GenfuncError> {
    let s = replica_generating_series(k, degree)?;
    let mut out: Vec<_> = s
        .terms()
        .filter(|(e, _)| e.iter().sum::<u32>() == degree)
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

/// Degree-16 coefficients of the three-variable series, one per exponent pattern
/// `n_1 ≥ n_2 ≥ n_3`.
pub fn three_vertex_sigma16() -> Result<Vec<(Vec<u32>, Rational)>, GenfuncError> {
    Ok(coefficients_at_degree(3, 16)?
        .into_iter()
        .filter(|(e, _)| e[0] >= e[1] && e[1] >= e[2])
        .collect())
}
