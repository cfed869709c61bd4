//! Exact computations on standard-graded Hilbert schemes.
//!
//! The crate works in `S = Q[x_0, ..., x_n]` with exact rational arithmetic and
//! provides Gröbner bases, Hilbert functions, lex-segment and strongly stable
//! ideals, generic initial ideals, tangent dimensions `dim Hom(I, S/I)_0` and
//! weight degenerations, together with a set of built-in scenarios that check
//! the component structure of several Hilbert schemes.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod monomial_ideal;
pub mod parse;
pub mod ring;
pub mod scenarios;

pub use error::{Error, Result};
pub use groebner::{CoordinateChange, GradedIdeal, GroebnerBasis};
pub use monomial_ideal::MonomialIdeal;
pub use ring::{Monomial, MonomialOrder, Polynomial, Ring, UniPoly};
