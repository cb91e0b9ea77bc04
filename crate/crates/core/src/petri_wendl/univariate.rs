use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::exactalg::Rational;

/// Dense univariate polynomial over ℚ, coefficients by increasing power.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x + c`.
    pub fn linear(c: Rational) -> Self {
        UniPoly::new(vec![c, Rational::one()])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<Rational> {
        let mut out = self.coeffs.clone();
        out.resize(len.max(out.len()), Rational::zero());
        out
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let a = self.padded(n);
        let b = rhs.padded(n);
        UniPoly::new(a.into_iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*m")?,
                _ => write!(f, "{c}*m^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn arithmetic_and_eval() {
        let a = UniPoly::linear(int(1));
        let b = UniPoly::linear(int(-1));
        let prod = &a * &b;
        assert_eq!(prod, UniPoly::new(vec![int(-1), int(0), int(1)]));
        assert_eq!(prod.degree(), Some(2));
        assert_eq!(prod.eval(&int(3)), int(8));
        assert_eq!((&a + &b).eval(&rat(1, 2)), int(1));
        assert!((&a + &a.scale(&int(-1))).is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(prod.to_string(), "1*m^2 + -1");
    }
}
