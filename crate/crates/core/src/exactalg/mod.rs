//! Exact rational arithmetic on bivariate polynomials.
//!
//! Everything here is over ℚ. Polynomials are sparse maps from
//! [`Monomial2`] to [`Rational`] iterated in graded-lexicographic order,
//! which is also the order used for matrix indexing elsewhere in the crate.

mod laplacian;
mod poly;
mod tensor;

pub use laplacian::{
    apply_laplacian, harmonic_basis, harmonic_element, right_inverse, right_inverse_monomial,
    truncate_jet, HarmonicFamily,
};
pub use poly::{Monomial2, Poly2};
pub use tensor::{Summand, TensorElem};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Parses `p`, `-p` or `p/q` into a rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => text
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Exact conversion of a finite `f64` (a dyadic rational) into a [`Rational`].
pub fn rational_from_f64(value: f64) -> Result<Rational> {
    Rational::from_float(value).ok_or_else(|| Error::Parse(format!("non-finite number {value}")))
}

/// Serde adapter that writes rationals as `"p/q"` strings and accepts either
/// such strings or JSON numbers.
pub mod serde_rational {
    use super::{format_rational, parse_rational, rational_from_f64, Rational};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Text(String),
        Int(i64),
        Float(f64),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Text(t) => parse_rational(&t).map_err(D::Error::custom),
            Repr::Int(i) => Ok(super::int(i)),
            Repr::Float(f) => rational_from_f64(f).map_err(D::Error::custom),
        }
    }
}
