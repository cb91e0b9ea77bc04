use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{parse_rational, Rational};
use crate::error::{Error, Result};

/// The monomial `x1^e1 * x2^e2`.
///
/// Ordered graded-lexicographically: first by total degree, then by the
/// exponent of `x1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial2 {
    pub e1: u32,
    pub e2: u32,
}

impl Monomial2 {
    pub const ONE: Monomial2 = Monomial2 { e1: 0, e2: 0 };

    pub const fn new(e1: u32, e2: u32) -> Self {
        Monomial2 { e1, e2 }
    }

    pub const fn degree(self) -> u32 {
        self.e1 + self.e2
    }

    /// All monomials of total degree exactly `d`, in increasing order.
    pub fn of_degree(d: u32) -> impl Iterator<Item = Monomial2> {
        (0..=d).map(move |e1| Monomial2::new(e1, d - e1))
    }

    /// All monomials of total degree at most `d`, in increasing order.
    pub fn up_to_degree(d: u32) -> impl Iterator<Item = Monomial2> {
        (0..=d).flat_map(Monomial2::of_degree)
    }

    pub fn times(self, other: Monomial2) -> Monomial2 {
        Monomial2::new(self.e1 + other.e1, self.e2 + other.e2)
    }
}

impl Ord for Monomial2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.e1.cmp(&other.e1))
    }
}

impl PartialOrd for Monomial2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut factors = Vec::with_capacity(2);
        for (name, e) in [("x1", self.e1), ("x2", self.e2)] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        f.write_str(&factors.join("*"))
    }
}

/// Sparse bivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Monomial2, Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly2::term(c, Monomial2::ONE)
    }

    pub fn monomial(e1: u32, e2: u32) -> Self {
        Poly2::term(Rational::one(), Monomial2::new(e1, e2))
    }

    pub fn term(c: Rational, m: Monomial2) -> Self {
        let mut p = Poly2::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial2, Rational)>>(terms: I) -> Self {
        let mut p = Poly2::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial2) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing graded-lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial2, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial2> + '_ {
        self.terms.keys().copied()
    }

    pub fn add_term(&mut self, m: Monomial2, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// The common degree of all terms, if the polynomial is nonzero and
    /// homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Leading coefficient in graded-lex order.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial2) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(k, v)| (k.times(m), v.clone())).collect(),
        }
    }

    /// Coefficient vector against a list of monomials.
    pub fn coefficients_on(&self, basis: &[Monomial2]) -> Vec<Rational> {
        basis.iter().map(|m| self.coeff(*m)).collect()
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly2 {
    type Err = Error;

    /// Parses the canonical text form, e.g. `1/4*x1^2 - 3*x1*x2 + 2`.
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = Poly2::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' && bytes[i - 1] != b'/' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'-') => (-Rational::one(), &piece[1..]),
                Some(b'+') => (Rational::one(), &piece[1..]),
                _ => (Rational::one(), piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {text:?}")));
            }
            let mut coeff = sign;
            let mut mono = Monomial2::ONE;
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (var, exp) = match rest.split_once('^') {
                        Some((v, e)) => (
                            v,
                            e.parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                        ),
                        None => (rest, 1),
                    };
                    match var {
                        "1" => mono.e1 += exp,
                        "2" => mono.e2 += exp,
                        _ => return Err(Error::Parse(format!("unknown variable in {factor:?}"))),
                    }
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            poly.add_term(mono, coeff);
        }
        Ok(poly)
    }
}

impl Serialize for Poly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        for (m, c) in rhs.iter() {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly2> for Poly2 {
    fn sub_assign(&mut self, rhs: &Poly2) {
        for (m, c) in rhs.iter() {
            self.add_term(*m, -c);
        }
    }
}

impl Add<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(mut self, rhs: Poly2) -> Poly2 {
        self += &rhs;
        self
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(mut self, rhs: Poly2) -> Poly2 {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}

impl Mul<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (ma, ca) in self.iter() {
            for (mb, cb) in rhs.iter() {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn graded_lex_order() {
        let mut ms = vec![
            Monomial2::new(0, 2),
            Monomial2::new(3, 0),
            Monomial2::new(1, 1),
            Monomial2::ONE,
            Monomial2::new(2, 0),
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial2::ONE,
                Monomial2::new(0, 2),
                Monomial2::new(1, 1),
                Monomial2::new(2, 0),
                Monomial2::new(3, 0),
            ]
        );
        assert_eq!(Monomial2::up_to_degree(16).count(), 153);
    }

    #[test]
    fn canonical_text() {
        let p = Poly2::from_terms([
            (Monomial2::new(2, 0), rat(1, 4)),
            (Monomial2::new(0, 2), rat(1, 4)),
        ]);
        assert_eq!(p.to_string(), "1/4*x1^2 + 1/4*x2^2");
        let q = Poly2::from_terms([
            (Monomial2::new(1, 1), int(-3)),
            (Monomial2::ONE, int(2)),
            (Monomial2::new(3, 1), int(1)),
        ]);
        assert_eq!(q.to_string(), "x1^3*x2 - 3*x1*x2 + 2");
        assert_eq!((-&q).to_string(), "-x1^3*x2 + 3*x1*x2 - 2");
        assert_eq!(Poly2::zero().to_string(), "0");
    }

    #[test]
    fn parse_accepts_canonical_form() {
        let p: Poly2 = "1/4*x1^2 + 1/4*x2^2".parse().unwrap();
        assert_eq!(p.coeff(Monomial2::new(2, 0)), rat(1, 4));
        let q: Poly2 = "-x1^3*x2 + 3*x1*x2 - 2".parse().unwrap();
        assert_eq!(q.to_string(), "-x1^3*x2 + 3*x1*x2 - 2");
        let r: Poly2 = "x1*x1 - x1^2".parse().unwrap();
        assert!(r.is_zero());
        assert!("x3".parse::<Poly2>().is_err());
        assert!("1 +".parse::<Poly2>().is_err());
        assert!("".parse::<Poly2>().is_err());
    }

    #[test]
    fn arithmetic_drops_zeros() {
        let a: Poly2 = "x1 + x2".parse().unwrap();
        let b: Poly2 = "x1 - x2".parse().unwrap();
        assert_eq!((&a * &b).to_string(), "x1^2 - x2^2");
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff.len(), 0);
        assert_eq!(a.scale(&int(0)), Poly2::zero());
    }

    #[test]
    fn degrees() {
        let p: Poly2 = "x1^2 + x1*x2".parse().unwrap();
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q: Poly2 = "x1^2 + 1".parse().unwrap();
        assert_eq!(q.homogeneous_degree(), None);
        assert_eq!(q.degree(), Some(2));
        assert_eq!(Poly2::zero().degree(), None);
    }
}
