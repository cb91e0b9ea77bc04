use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Monomial2, Poly2, Rational};
use crate::linalg::Matrix;

/// One term `c · p ⊗ q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Summand {
    #[serde(with = "super::serde_rational")]
    pub coeff: Rational,
    pub left: Poly2,
    pub right: Poly2,
}

/// A finite sum `Σ cᵢ pᵢ ⊗ qᵢ` of tensors of bivariate polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorElem {
    summands: Vec<Summand>,
}

impl TensorElem {
    pub fn zero() -> Self {
        TensorElem::default()
    }

    pub fn from_summands(summands: Vec<Summand>) -> Self {
        TensorElem { summands }
    }

    pub fn simple(coeff: Rational, left: Poly2, right: Poly2) -> Self {
        TensorElem {
            summands: vec![Summand { coeff, left, right }],
        }
    }

    pub fn push(&mut self, coeff: Rational, left: Poly2, right: Poly2) {
        self.summands.push(Summand { coeff, left, right });
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// `Σ c q ⊗ p` for `Σ c p ⊗ q`.
    pub fn swapped(&self) -> TensorElem {
        TensorElem {
            summands: self
                .summands
                .iter()
                .map(|s| Summand {
                    coeff: s.coeff.clone(),
                    left: s.right.clone(),
                    right: s.left.clone(),
                })
                .collect(),
        }
    }

    /// `B = -swap(B)` after expansion.
    pub fn is_antisymmetric(&self) -> bool {
        self.add(&self.swapped()).is_zero()
    }

    pub fn scale(&self, c: &Rational) -> TensorElem {
        TensorElem {
            summands: self
                .summands
                .iter()
                .map(|s| Summand {
                    coeff: &s.coeff * c,
                    left: s.left.clone(),
                    right: s.right.clone(),
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        TensorElem { summands }
    }

    /// Expansion in the monomial tensor basis `x^a ⊗ x^b`. Two tensors are
    /// equal iff their expansions are.
    pub fn expansion(&self) -> BTreeMap<(Monomial2, Monomial2), Rational> {
        let mut out: BTreeMap<(Monomial2, Monomial2), Rational> = BTreeMap::new();
        for s in &self.summands {
            if s.coeff.is_zero() {
                continue;
            }
            for (ml, cl) in s.left.iter() {
                let scaled = &s.coeff * cl;
                for (mr, cr) in s.right.iter() {
                    *out.entry((*ml, *mr)).or_insert_with(Rational::zero) += &scaled * cr;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.expansion().is_empty()
    }

    pub fn equivalent(&self, other: &TensorElem) -> bool {
        self.expansion() == other.expansion()
    }

    /// Total degree `deg p + deg q` if every monomial tensor in the
    /// expansion has the same one.
    pub fn degree(&self) -> Option<u32> {
        let exp = self.expansion();
        let mut degrees = exp.keys().map(|(a, b)| a.degree() + b.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Merges proportional summands.
    ///
    /// Each factor is scaled to leading coefficient one (the scalars move
    /// into the coefficient), identical factor pairs are merged, and summands
    /// that become zero are dropped. The result is deterministic.
    pub fn canonicalize(&self) -> TensorElem {
        let mut merged: BTreeMap<(String, String), (Rational, Poly2, Poly2)> = BTreeMap::new();
        for s in &self.summands {
            let (Some(lc_l), Some(lc_r)) = (s.left.leading_coeff(), s.right.leading_coeff()) else {
                continue;
            };
            let coeff = &s.coeff * lc_l * lc_r;
            if coeff.is_zero() {
                continue;
            }
            let left = s.left.scale(&lc_l.recip());
            let right = s.right.scale(&lc_r.recip());
            let key = (left.to_string(), right.to_string());
            merged
                .entry(key)
                .and_modify(|e| e.0 += &coeff)
                .or_insert((coeff, left, right));
        }
        TensorElem {
            summands: merged
                .into_values()
                .filter(|(c, _, _)| !c.is_zero())
                .map(|(coeff, left, right)| Summand { coeff, left, right })
                .collect(),
        }
    }

    /// Tensor rank: the smallest number of simple tensors summing to this
    /// element, i.e. the rank of its coefficient matrix.
    pub fn rank(&self) -> usize {
        let exp = self.expansion();
        if exp.is_empty() {
            return 0;
        }
        let lefts: Vec<Monomial2> = exp.keys().map(|k| k.0).collect::<BTreeSet<_>>().into_iter().collect();
        let rights: Vec<Monomial2> = exp.keys().map(|k| k.1).collect::<BTreeSet<_>>().into_iter().collect();
        let m = Matrix::from_fn(lefts.len(), rights.len(), |r, c| {
            exp.get(&(lefts[r], rights[c]))
                .cloned()
                .unwrap_or_else(Rational::zero)
        });
        m.rank()
    }

    /// Left and right factors as polynomial lists (coefficients folded into
    /// the left factor).
    pub fn factor_pairs(&self) -> impl Iterator<Item = (Poly2, &Poly2)> + '_ {
        self.summands
            .iter()
            .map(|s| (s.left.scale(&s.coeff), &s.right))
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if s.coeff.is_one() {
                write!(f, "({}) ⊗ ({})", s.left, s.right)?;
            } else {
                write!(f, "{}·({}) ⊗ ({})", s.coeff, s.left, s.right)?;
            }
        }
        Ok(())
    }
}
