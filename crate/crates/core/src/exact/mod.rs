//! Exact scalars, dense homogeneous forms and linear algebra over Q.

mod form;
mod matrix;
mod parse;
mod rational;
mod subspace;

pub use form::{monomials, Form, MonomialBasis, Ring};
pub use matrix::{Echelon, MatrixQ};
pub use parse::{parse_form, parse_forms, FormHint};
pub use rational::{binomial, factorial, format_rational, parse_rational, rat, Rational};
pub use subspace::Subspace;
