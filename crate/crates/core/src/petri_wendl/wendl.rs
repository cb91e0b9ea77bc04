use std::collections::BTreeMap;

use num_traits::Zero;

use super::sparse::{exact_rank, SparseMatrix};
use crate::exactalg::{right_inverse, Monomial2, Poly2, TensorElem};

/// `L_B(A) = Σ c [R̂(A·p)·q + p·R̂(A·q)]` over the summands `c·p ⊗ q` of `B`.
pub fn wendl_apply(b: &TensorElem, a: Monomial2) -> Poly2 {
    let mut out = Poly2::zero();
    for s in b.summands() {
        if s.coeff.is_zero() {
            continue;
        }
        let left = right_inverse(&s.left.mul_monomial(a));
        let right = right_inverse(&s.right.mul_monomial(a));
        let term = &(&left * &s.right) + &(&s.left * &right);
        out += &term.scale(&s.coeff);
    }
    out
}

/// `L_B` restricted to inputs of degree at most `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WendlMatrix {
    rows: BTreeMap<Monomial2, usize>,
    cols: BTreeMap<Monomial2, usize>,
    matrix: SparseMatrix,
}

impl WendlMatrix {
    pub fn rows(&self) -> &BTreeMap<Monomial2, usize> {
        &self.rows
    }

    pub fn cols(&self) -> &BTreeMap<Monomial2, usize> {
        &self.cols
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn column_count(&self) -> usize {
        self.matrix.cols()
    }

    pub fn rank(&self) -> usize {
        exact_rank(&self.matrix)
    }

    /// The image of the input monomial `a` as a polynomial.
    pub fn column_poly(&self, a: Monomial2) -> Option<Poly2> {
        let c = *self.cols.get(&a)?;
        let by_index: Vec<Monomial2> = self.rows.keys().copied().collect();
        Some(Poly2::from_terms(
            self.matrix
                .column(c)
                .iter()
                .map(|(r, v)| (by_index[*r], v.clone())),
        ))
    }
}

/// Rows are all monomials of degree at most `l + d + 2` where `d` is the
/// degree of `B` (`d = 0` when `B` has no degree), columns all monomials of
/// degree at most `l`, both in graded-lex order.
pub fn wendl_matrix(b: &TensorElem, l: u32) -> WendlMatrix {
    let d = b.degree().unwrap_or(0);
    let rows: BTreeMap<Monomial2, usize> = Monomial2::up_to_degree(l + d + 2)
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let col_monomials: Vec<Monomial2> = Monomial2::up_to_degree(l).collect();
    let columns: Vec<Vec<_>> = col_monomials
        .iter()
        .map(|&a| {
            wendl_apply(b, a)
                .iter()
                .map(|(m, v)| (rows[m], v.clone()))
                .collect()
        })
        .collect();
    let cols = col_monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    WendlMatrix {
        matrix: SparseMatrix::from_columns(rows.len(), columns),
        rows,
        cols,
    }
}

/// Rank of `L_B` on each homogeneous input degree `0..=lmax`.
///
/// For homogeneous `B` the map sends degree `j` into degree `j + d + 2`, so
/// `rk L^{≤l}` is the partial sum of these block ranks.
pub fn graded_ranks(b: &TensorElem, lmax: u32) -> Vec<usize> {
    use rayon::prelude::*;
    (0..=lmax)
        .into_par_iter()
        .map(|j| {
            let inputs: Vec<Monomial2> = Monomial2::of_degree(j).collect();
            let images: Vec<Poly2> = inputs.iter().map(|&a| wendl_apply(b, a)).collect();
            let mut row_index: BTreeMap<Monomial2, usize> = BTreeMap::new();
            for p in &images {
                for m in p.monomials() {
                    let next = row_index.len();
                    row_index.entry(m).or_insert(next);
                }
            }
            let columns = images
                .iter()
                .map(|p| p.iter().map(|(m, v)| (row_index[m], v.clone())).collect())
                .collect();
            exact_rank(&SparseMatrix::from_columns(row_index.len(), columns))
        })
        .collect()
}
