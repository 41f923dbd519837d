//! Exact coefficient rings and combinatorial helpers.

mod combinat;
mod gaussian;
mod poly;
mod rational;
mod ring;

pub use combinat::{binomial, binomial_int, factorial, q_binomial, q_factorial, q_int};
pub use gaussian::GaussianRational;
pub use poly::{qpoly, Poly, QPolynomial};
pub use rational::{q, ParseRationalError, Rational};
pub use ring::{Field, Ring};
