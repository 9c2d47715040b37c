//! Bézout matrices of polynomials written in Newton bases.
//!
//! The centerpiece is [`bezout::bezout_newton_preserving`], an O(n²)
//! recurrence that produces the Bézout matrix directly in the Newton basis
//! the inputs are written in. Around it sit the pieces needed to check and
//! use it:
//!
//! - [`field`]: the scalar abstraction, implemented for exact rationals
//!   ([`Rational`]) and `f64`.
//! - [`count`]: an explicit operation-counting context threaded through the
//!   arithmetic of every algorithm.
//! - [`poly`]: node vectors, Newton and monomial polynomials, conversions,
//!   transition matrices and random instances.
//! - [`matrix`]: a small dense matrix type with exact-friendly elimination.
//! - [`bezout`]: the preserving recurrence, the monomial construction, the
//!   basis-transformation pipeline and an interpolation oracle.
//! - [`confederate`]: companion and confederate matrices and three ways of
//!   computing the confederate resultant matrix `G(C_N(F))`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bezout;
pub mod confederate;
pub mod count;
pub mod error;
pub mod field;
pub mod matrix;
pub mod poly;

pub use count::{with_counting, OpCounter, Ops, Uncounted};
pub use error::Error;
pub use field::{parse_scalar, Field, Rational, ScalarParseError};
pub use matrix::DenseMatrix;
pub use poly::{MonomialPolynomial, NewtonPolynomial, NodeVector};
