//! Scalar fields: exact rationals and binary64 floats.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("malformed scalar {0:?}")]
    Malformed(alloc::string::String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(alloc::string::String),
}

/// A field the algorithms run over.
///
/// Arithmetic is exposed as by-reference methods so the generic code never
/// needs higher-ranked operator bounds; it is normally invoked through an
/// [`Ops`](crate::Ops) context, which does the operation counting.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// `true` when arithmetic is exact and equality tests are meaningful.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Panics on an exact division by zero; float division follows IEEE 754.
    fn div_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Approximate absolute value, used only to rank pivots in float mode.
    fn magnitude(&self) -> f64;

    /// Parses the scalar text format, see [`parse_scalar`].
    fn parse(text: &str) -> Result<Self, ScalarParseError>;
}

/// Parses `-?d+`, `-?d+/d+` and, for floats, decimal notation.
///
/// Rationals come back reduced; floats round to nearest.
pub fn parse_scalar<F: Field>(text: &str) -> Result<F, ScalarParseError> {
    F::parse(text)
}

fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn is_natural_literal(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Splits `text` into integer numerator and optional natural denominator.
fn split_fraction(text: &str) -> Option<(&str, Option<&str>)> {
    match text.split_once('/') {
        Some((num, den)) if is_integer_literal(num) && is_natural_literal(den) => Some((num, Some(den))),
        Some(_) => None,
        None if is_integer_literal(text) => Some((text, None)),
        None => None,
    }
}

impl Field for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn parse(text: &str) -> Result<Self, ScalarParseError> {
        let text = text.trim();
        let malformed = || ScalarParseError::Malformed(text.into());
        let (num, den) = split_fraction(text).ok_or_else(malformed)?;
        let num = BigInt::from_str(num).map_err(|_| malformed())?;
        let den = match den {
            Some(d) => BigInt::from_str(d).map_err(|_| malformed())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ScalarParseError::ZeroDenominator(text.into()));
        }
        Ok(BigRational::new(num, den))
    }
}

impl Field for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn magnitude(&self) -> f64 {
        if *self < 0.0 {
            -*self
        } else {
            *self
        }
    }

    fn parse(text: &str) -> Result<Self, ScalarParseError> {
        let text = text.trim();
        let malformed = || ScalarParseError::Malformed(text.into());
        if let Some((num, Some(den))) = split_fraction(text) {
            let num: f64 = num.parse().map_err(|_| malformed())?;
            let den: f64 = den.parse().map_err(|_| malformed())?;
            if den == 0.0 {
                return Err(ScalarParseError::ZeroDenominator(text.into()));
            }
            return Ok(num / den);
        }
        // Rust's float grammar also admits "inf"/"NaN"; only finite decimals pass.
        let ok = !text.is_empty()
            && text.bytes().all(|b| b.is_ascii_digit() || matches!(b, b'-' | b'+' | b'.' | b'e' | b'E'));
        let value: f64 = if ok { text.parse().map_err(|_| malformed())? } else { return Err(malformed()) };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(malformed())
        }
    }
}
