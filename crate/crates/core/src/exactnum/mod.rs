//! Exact scalars, dense univariate polynomials and the divisor-sum function.

mod poly;
mod rational;
mod sigma;

pub use poly::{shift_integer, Poly};
pub(crate) use poly::eval_homogeneous;
pub use rational::{
    format_fixed, parse_rational, rational_from_f64, rational_to_f64, sign, Rational,
};
pub use sigma::{sigma, SigmaTable};
