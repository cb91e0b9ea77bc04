use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use super::univariate::UniPoly;
use crate::exactalg::{int, rat, Monomial2, Rational, TensorElem};
use crate::linalg::Matrix;

/// `E(E+1) + F(F+1)` with `E = m+l-α+1`, `F = m+d-l-β+1`.
pub fn p_numerator_product(m: i64, l: i64, d: i64, alpha: i64, beta: i64) -> Rational {
    let e = m + l - alpha + 1;
    let f = m + d - l - beta + 1;
    int(e * (e + 1) + f * (f + 1))
}

/// `2(m + (e+f+1)/2)² + 2(l + (e-f)/2)² - 1/2` with `e = 1-α`, `f = 1+d-β`.
pub fn p_numerator_completed_square(m: i64, l: i64, d: i64, alpha: i64, beta: i64) -> Rational {
    let e = 1 - alpha;
    let f = 1 + d - beta;
    let a = int(m) + rat(e + f + 1, 2);
    let b = int(l) + rat(e - f, 2);
    int(2) * &a * &a + int(2) * &b * &b - rat(1, 2)
}

/// `2(m+l-α+2)(m+l-α+1)(m+d-l-β+2)(m+d-l-β+1)`.
pub fn p_denominator(m: i64, l: i64, d: i64, alpha: i64, beta: i64) -> Rational {
    let e = m + l - alpha + 1;
    let f = m + d - l - beta + 1;
    int(2) * int(e) * int(e + 1) * int(f) * int(f + 1)
}

fn lin(offset: i64) -> UniPoly {
    UniPoly::linear(int(offset))
}

fn p_poly(l: i64, d: i64, alpha: i64, beta: i64) -> UniPoly {
    let e = l - alpha + 1;
    let f = d - l - beta + 1;
    let prod = &(&lin(e) * &lin(e + 1)) * &(&lin(f) * &lin(f + 1));
    prod.scale(&int(2))
}

fn big_p_poly(l: i64, d: i64, alpha: i64, beta: i64) -> UniPoly {
    let e = l - alpha + 1;
    let f = d - l - beta + 1;
    &(&lin(e) * &lin(e + 1)) + &(&lin(f) * &lin(f + 1))
}

/// `q(m,l) = P(m,l) · Π_{k≠l} p(m,k)` for `k, l ∈ 0..=d`, a polynomial in `m`
/// of degree `4d+2`.
pub fn q_polynomial(l: u32, d: u32, alpha: u32, beta: u32) -> UniPoly {
    let (l, d, a, b) = (l as i64, d as i64, alpha as i64, beta as i64);
    (0..=d)
        .filter(|&k| k != l)
        .fold(big_p_poly(l, d, a, b), |acc, k| &acc * &p_poly(k, d, a, b))
}

/// Linear independence of `{q(m,l)}_{l=0..d}` for parities `(0,0)`.
pub fn q_independence_check(d: u32) -> bool {
    q_independence_check_with(d, 0, 0)
}

/// Rank test on the `(d+1) × (4d+3)` coefficient matrix of the `q(m,l)`.
pub fn q_independence_check_with(d: u32, alpha: u32, beta: u32) -> bool {
    let width = 4 * d as usize + 3;
    let rows: Vec<Vec<Rational>> = (0..=d)
        .map(|l| q_polynomial(l, d, alpha, beta).padded(width))
        .collect();
    Matrix::from_rows(rows).rank() == d as usize + 1
}

/// `m ↦ Σ_l c_l Ã(m,l)` where `c_l` is the coefficient of
/// `x1^{l-α} x2^α ⊗ x1^{d-l-β} x2^β` in `B` and
/// `Ã(m,l) = 1/(2(m+l-α+2)(m+l-α+1)) + 1/(2(m+d-l-β+2)(m+d-l-β+1))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientSeries {
    pub alpha: u32,
    pub beta: u32,
    pub degree: u32,
    /// Nonzero `(l, c_l)` pairs.
    #[serde(serialize_with = "serialize_terms")]
    pub terms: Vec<(u32, Rational)>,
}

fn serialize_terms<S: serde::Serializer>(
    terms: &[(u32, Rational)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(terms.len()))?;
    for (l, c) in terms {
        seq.serialize_element(&(l, c.to_string()))?;
    }
    seq.end()
}

impl CoefficientSeries {
    pub fn is_trivial(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Ã(m,l)`. Only called for `l` with `α ≤ l ≤ d - β`, where both
    /// denominators are positive.
    fn a_tilde(&self, m: i64, l: i64) -> Rational {
        let (d, a, b) = (self.degree as i64, self.alpha as i64, self.beta as i64);
        let e = m + l - a + 1;
        let f = m + d - l - b + 1;
        rat(1, 2 * e * (e + 1)) + rat(1, 2 * f * (f + 1))
    }

    pub fn evaluate(&self, m: u32) -> Rational {
        self.terms
            .iter()
            .map(|(l, c)| c * self.a_tilde(m as i64, *l as i64))
            .sum()
    }

    /// `Σ_l c_l q(m,l)`, the series times `Π_k p(m,k)`.
    pub fn numerator(&self) -> UniPoly {
        self.terms.iter().fold(UniPoly::zero(), |acc, (l, c)| {
            &acc + &q_polynomial(*l, self.degree, self.alpha, self.beta).scale(c)
        })
    }

    /// Integers `m` in `lo..=hi` where the series vanishes.
    pub fn integer_zeros(&self, lo: u32, hi: u32) -> Vec<u32> {
        (lo..=hi).filter(|&m| self.evaluate(m).is_zero()).collect()
    }
}

/// The series of `B` for parities `alpha`, `beta`. `B` should be
/// homogeneous; without a degree the series is empty.
pub fn coefficient_series(b: &TensorElem, alpha: u32, beta: u32) -> CoefficientSeries {
    let degree = b.degree().unwrap_or(0);
    let exp = b.expansion();
    let terms = (alpha..=degree.saturating_sub(beta))
        .filter(|&l| l + beta <= degree)
        .filter_map(|l| {
            let key = (
                Monomial2::new(l - alpha, alpha),
                Monomial2::new(degree - l - beta, beta),
            );
            exp.get(&key).map(|c| (l, c.clone()))
        })
        .collect();
    CoefficientSeries {
        alpha,
        beta,
        degree,
        terms,
    }
}

/// Parity pairs whose series has at least one nonzero coefficient.
pub fn admissible_parities(b: &TensorElem) -> Vec<(u32, u32)> {
    [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .filter(|&(a, c)| !coefficient_series(b, a, c).is_trivial())
        .collect()
}

/// The pair given by the minimality rule: `α` is the least `x2`-exponent in
/// `{0,1}` occurring in a left factor, `β` the same for right factors.
pub fn proof_parities(b: &TensorElem) -> Option<(u32, u32)> {
    let exp = b.expansion();
    let lefts: BTreeSet<u32> = exp.keys().map(|(l, _)| l.e2).filter(|&e| e <= 1).collect();
    let rights: BTreeSet<u32> = exp.keys().map(|(_, r)| r.e2).filter(|&e| e <= 1).collect();
    Some((*lefts.first()?, *rights.first()?))
}
