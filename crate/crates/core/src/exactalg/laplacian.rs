use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{binomial, factorial, Monomial2, Poly2, Rational};

/// `∂₁²p + ∂₂²p`.
pub fn apply_laplacian(p: &Poly2) -> Poly2 {
    let mut out = Poly2::zero();
    for (m, c) in p.iter() {
        if m.e1 >= 2 {
            let k = BigInt::from(m.e1) * (m.e1 - 1);
            out.add_term(Monomial2::new(m.e1 - 2, m.e2), c * Rational::from_integer(k));
        }
        if m.e2 >= 2 {
            let k = BigInt::from(m.e2) * (m.e2 - 1);
            out.add_term(Monomial2::new(m.e1, m.e2 - 2), c * Rational::from_integer(k));
        }
    }
    out
}

/// The two families of homogeneous harmonics.
///
/// Writing a degree-`d` harmonic as `Σ aᵢ x1^{d-i} x2^i`, the recurrence
/// `aᵢ(d-i)(d-i-1) + a_{i+2}(i+2)(i+1) = 0` splits the coefficients by the
/// parity of `i`. The even family is normalized by `a₀ = 1` and the odd one
/// by `a₁ = d`, so they are `Re (x1 + i x2)^d` and `Im (x1 + i x2)^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HarmonicFamily {
    Even,
    Odd,
}

impl HarmonicFamily {
    pub fn parity(self) -> u32 {
        match self {
            HarmonicFamily::Even => 0,
            HarmonicFamily::Odd => 1,
        }
    }
}

/// A single basis harmonic of degree `d`. The odd family is zero at `d = 0`.
pub fn harmonic_element(d: u32, family: HarmonicFamily) -> Poly2 {
    let mut p = Poly2::zero();
    match family {
        HarmonicFamily::Even => {
            for i in 0..=d / 2 {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let c = Rational::from_integer(binomial(d, 2 * i) * sign);
                p.add_term(Monomial2::new(d - 2 * i, 2 * i), c);
            }
        }
        HarmonicFamily::Odd => {
            if d == 0 {
                return p;
            }
            let a1 = Rational::from_integer(BigInt::from(d));
            for i in 0..=(d - 1) / 2 {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let c = Rational::new(binomial(d, 2 * i + 1) * sign, BigInt::from(d)) * &a1;
                p.add_term(Monomial2::new(d - 2 * i - 1, 2 * i + 1), c);
            }
        }
    }
    p
}

/// Basis of the homogeneous degree-`d` harmonics: `{1}` for `d = 0`, the even
/// and odd families otherwise.
pub fn harmonic_basis(d: u32) -> Vec<Poly2> {
    if d == 0 {
        vec![harmonic_element(0, HarmonicFamily::Even)]
    } else {
        vec![
            harmonic_element(d, HarmonicFamily::Even),
            harmonic_element(d, HarmonicFamily::Odd),
        ]
    }
}

/// Explicit right inverse of the Laplacian on a monomial:
///
/// `R̂(x1^m x2^n) = Σ_{i ≤ n/2} Aᵢ x1^{m+2+2i} x2^{n-2i} + Σ_{i ≤ m/2} Bᵢ x1^{m-2i} x2^{n+2+2i}`
///
/// with `Aᵢ = (-1)^i m! n! / (2 (n-2i)! (m+2+2i)!)` and `Bᵢ` the same with
/// `m` and `n` exchanged. Each sum contributes half of the monomial under Δ.
pub fn right_inverse_monomial(m: u32, n: u32) -> Poly2 {
    let mn = factorial(m) * factorial(n);
    let mut out = Poly2::zero();
    for i in 0..=n / 2 {
        let den = factorial(n - 2 * i) * factorial(m + 2 + 2 * i) * 2;
        let c = Rational::new(signed(&mn, i), den);
        out.add_term(Monomial2::new(m + 2 + 2 * i, n - 2 * i), c);
    }
    for i in 0..=m / 2 {
        let den = factorial(m - 2 * i) * factorial(n + 2 + 2 * i) * 2;
        let c = Rational::new(signed(&mn, i), den);
        out.add_term(Monomial2::new(m - 2 * i, n + 2 + 2 * i), c);
    }
    out
}

fn signed(value: &BigInt, i: u32) -> BigInt {
    if i.is_multiple_of(2) {
        value.clone()
    } else {
        -value
    }
}

/// Linear extension of [`right_inverse_monomial`].
pub fn right_inverse(p: &Poly2) -> Poly2 {
    let mut out = Poly2::zero();
    for (m, c) in p.iter() {
        if c.is_zero() {
            continue;
        }
        out += &right_inverse_monomial(m.e1, m.e2).scale(c);
    }
    out
}

/// Drops every term of total degree above `l`.
pub fn truncate_jet(p: &Poly2, l: u32) -> Poly2 {
    Poly2::from_terms(
        p.iter()
            .filter(|(m, _)| m.degree() <= l)
            .map(|(m, c)| (*m, c.clone())),
    )
}
