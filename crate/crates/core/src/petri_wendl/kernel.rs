use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{
    apply_laplacian, harmonic_element, HarmonicFamily, Monomial2, Poly2, Rational, TensorElem,
};
use crate::linalg::Matrix;

/// `Σ cᵢ pᵢ·qᵢ`.
pub fn petri_map(b: &TensorElem) -> Poly2 {
    let mut out = Poly2::zero();
    for (left, right) in b.factor_pairs() {
        out += &(&left * right);
    }
    out
}

/// A basis tensor `h_l ⊗ h_{d-l}` of harmonic factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarmonicPair {
    pub left_degree: u32,
    pub left_family: HarmonicFamily,
    pub right_degree: u32,
    pub right_family: HarmonicFamily,
}

impl HarmonicPair {
    pub fn left(&self) -> Poly2 {
        harmonic_element(self.left_degree, self.left_family)
    }

    pub fn right(&self) -> Poly2 {
        harmonic_element(self.right_degree, self.right_family)
    }
}

fn families(degree: u32) -> &'static [HarmonicFamily] {
    if degree == 0 {
        &[HarmonicFamily::Even]
    } else {
        &[HarmonicFamily::Even, HarmonicFamily::Odd]
    }
}

/// Basis of the degree-`d` part of `ker Δ ⊗ ker Δ`.
pub fn harmonic_tensor_basis(d: u32) -> Vec<HarmonicPair> {
    let mut out = Vec::new();
    for l in 0..=d {
        for &lf in families(l) {
            for &rf in families(d - l) {
                out.push(HarmonicPair {
                    left_degree: l,
                    left_family: lf,
                    right_degree: d - l,
                    right_family: rf,
                });
            }
        }
    }
    out
}

/// A homogeneous element of `ker ω̂_Δ` with harmonic factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PetriKernelElement {
    tensor: TensorElem,
    degree: u32,
    certificate: Vec<Rational>,
}

impl PetriKernelElement {
    /// Checks homogeneity, harmonicity of every factor, and that the Petri
    /// map vanishes. The certificate holds the coefficient of
    /// `x1^{d-d'} x2^{d'}` in the product for `d' = 0..=d`, all zero.
    pub fn new(tensor: TensorElem, degree: u32) -> Result<Self> {
        for s in tensor.summands() {
            for factor in [&s.left, &s.right] {
                if !apply_laplacian(factor).is_zero() {
                    return Err(Error::InvalidInput(format!("factor {factor} is not harmonic")));
                }
            }
            if s.coeff.is_zero() {
                continue;
            }
            match (s.left.homogeneous_degree(), s.right.homogeneous_degree()) {
                (Some(a), Some(b)) if a + b == degree => {}
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "summand {} ⊗ {} is not homogeneous of degree {degree}",
                        s.left, s.right
                    )))
                }
            }
        }
        let product = petri_map(&tensor);
        let certificate: Vec<Rational> = Monomial2::of_degree(degree)
            .map(|m| product.coeff(m))
            .collect();
        if !product.is_zero() {
            return Err(Error::InvalidInput(format!(
                "petri map of the tensor is {product}, not zero"
            )));
        }
        Ok(PetriKernelElement {
            tensor,
            degree,
            certificate,
        })
    }

    pub fn tensor(&self) -> &TensorElem {
        &self.tensor
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn certificate(&self) -> &[Rational] {
        &self.certificate
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    /// Rational linear combination of kernel elements of the same degree.
    pub fn combine(elements: &[PetriKernelElement], coeffs: &[Rational]) -> Result<Self> {
        let degree = elements
            .first()
            .map(|e| e.degree)
            .ok_or_else(|| Error::InvalidInput("empty combination".into()))?;
        let mut tensor = TensorElem::zero();
        for (e, c) in elements.iter().zip(coeffs) {
            if e.degree != degree {
                return Err(Error::InvalidInput("mixed degrees in combination".into()));
            }
            if !c.is_zero() {
                tensor = tensor.add(&e.tensor.scale(c));
            }
        }
        PetriKernelElement::new(tensor.canonicalize(), degree)
    }
}

/// Basis of the degree-`d` homogeneous kernel of the Petri map on harmonic
/// tensors.
///
/// Solves the linear system whose rows are the coefficients of the product
/// monomials `x1^{d-d'} x2^{d'}`, `d' = 0..=d`, and whose columns are the
/// basis tensors of [`harmonic_tensor_basis`].
pub fn petri_kernel_basis(d: u32) -> Vec<PetriKernelElement> {
    let pairs = harmonic_tensor_basis(d);
    let products: Vec<Poly2> = pairs.iter().map(|p| &p.left() * &p.right()).collect();
    let monomials: Vec<Monomial2> = Monomial2::of_degree(d).collect();
    let system = Matrix::from_fn(monomials.len(), pairs.len(), |r, c| {
        products[c].coeff(monomials[r])
    });
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut tensor = TensorElem::zero();
            for (pair, c) in pairs.iter().zip(v) {
                if !c.is_zero() {
                    tensor.push(c, pair.left(), pair.right());
                }
            }
            PetriKernelElement::new(tensor, d).expect("nullspace vector is a kernel element")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn petri_map_examples() {
        assert_eq!(petri_map(&TensorElem::simple(int(1), Poly2::one(), Poly2::one())), Poly2::one());
        let mut t = TensorElem::zero();
        t.push(int(1), p("x1"), p("1"));
        t.push(int(-1), p("1"), p("x1"));
        assert!(petri_map(&t).is_zero());
        let u = TensorElem::simple(int(1), p("x1^2 - x2^2"), p("x1*x2"));
        assert_eq!(petri_map(&u), p("x1^3*x2 - x1*x2^3"));
    }

    #[test]
    fn tensor_space_dimensions() {
        assert_eq!(harmonic_tensor_basis(0).len(), 1);
        assert_eq!(harmonic_tensor_basis(1).len(), 4);
        assert_eq!(harmonic_tensor_basis(2).len(), 8);
        assert_eq!(harmonic_tensor_basis(5).len(), 20);
    }

    #[test]
    fn degree_zero_and_one_kernels() {
        assert!(petri_kernel_basis(0).is_empty());
        let basis = petri_kernel_basis(1);
        assert_eq!(basis.len(), 2);
        let mut a = TensorElem::zero();
        a.push(int(1), p("x1"), p("1"));
        a.push(int(-1), p("1"), p("x1"));
        let mut b = TensorElem::zero();
        b.push(int(1), p("x2"), p("1"));
        b.push(int(-1), p("1"), p("x2"));
        // span equality: each expected element is a combination of the basis
        let expansions: Vec<_> = basis.iter().map(|e| e.tensor().clone()).collect();
        let span = |t: &TensorElem| {
            let keys: Vec<_> = {
                let mut k: Vec<_> = expansions
                    .iter()
                    .chain(std::iter::once(t))
                    .flat_map(|e| e.expansion().into_keys())
                    .collect();
                k.sort();
                k.dedup();
                k
            };
            let cols: Vec<_> = expansions.iter().chain(std::iter::once(t)).map(|e| e.expansion()).collect();
            Matrix::from_fn(keys.len(), cols.len(), |r, c| {
                cols[c].get(&keys[r]).cloned().unwrap_or_else(Rational::zero)
            })
            .rank()
        };
        assert_eq!(span(&a), 2);
        assert_eq!(span(&b), 2);
    }

    #[test]
    fn kernel_element_rejects_bad_input() {
        let not_kernel = TensorElem::simple(int(1), p("x1"), p("1"));
        assert!(PetriKernelElement::new(not_kernel, 1).is_err());
        let not_harmonic = TensorElem::simple(int(1), p("x1^2"), p("1"));
        assert!(PetriKernelElement::new(not_harmonic, 2).is_err());
    }

    #[test]
    fn certificates_are_zero() {
        for d in 0..=4 {
            for e in petri_kernel_basis(d) {
                assert_eq!(e.certificate().len() as u32, d + 1);
                assert!(e.certificate().iter().all(Zero::is_zero));
                assert!(petri_map(e.tensor()).is_zero());
                assert_eq!(e.tensor().degree(), Some(d));
            }
        }
    }
}
