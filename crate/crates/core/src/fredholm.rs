//! Finite-dimensional model of the Fredholm stratification.
//!
//! An operator `T: X → Y` comes with splittings `X = V ⊕ K` and `Y = I ⊕ C`
//! given as index sets. In block form
//!
//! ```text
//!     T = | A  B |   V → I,  K → I
//!         | C  D |   V → C,  K → C
//! ```
//!
//! and when `A` is invertible the Schur reduction `ℐ(T) = D - C A⁻¹ B` has
//! the same kernel and cokernel dimensions as `T`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{int, rat, Rational};
use crate::linalg::Matrix;
use crate::orbifold::{twisted_index_from_quotients, IndexConvention};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteOperator {
    matrix: Matrix,
    kernel_cols: Vec<usize>,
    cokernel_rows: Vec<usize>,
}

impl FiniteOperator {
    /// `kernel_cols` is the index set of `K` in `X`, `cokernel_rows` that of
    /// `C` in `Y`. The complements must have equal size.
    pub fn new(matrix: Matrix, kernel_cols: Vec<usize>, cokernel_rows: Vec<usize>) -> Result<Self> {
        check_index_set("K", &kernel_cols, matrix.cols())?;
        check_index_set("C", &cokernel_rows, matrix.rows())?;
        if matrix.rows() - cokernel_rows.len() != matrix.cols() - kernel_cols.len() {
            return Err(Error::InvalidInput(format!(
                "A-block is {}x{}, not square",
                matrix.rows() - cokernel_rows.len(),
                matrix.cols() - kernel_cols.len()
            )));
        }
        Ok(FiniteOperator {
            matrix,
            kernel_cols,
            cokernel_rows,
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn kernel_cols(&self) -> &[usize] {
        &self.kernel_cols
    }

    pub fn cokernel_rows(&self) -> &[usize] {
        &self.cokernel_rows
    }

    fn v_cols(&self) -> Vec<usize> {
        (0..self.matrix.cols()).filter(|c| !self.kernel_cols.contains(c)).collect()
    }

    fn i_rows(&self) -> Vec<usize> {
        (0..self.matrix.rows()).filter(|r| !self.cokernel_rows.contains(r)).collect()
    }

    /// The blocks `(A, B, C, D)`.
    pub fn blocks(&self) -> (Matrix, Matrix, Matrix, Matrix) {
        let (v, i) = (self.v_cols(), self.i_rows());
        let (k, c) = (&self.kernel_cols, &self.cokernel_rows);
        (
            self.matrix.submatrix(&i, &v),
            self.matrix.submatrix(&i, k),
            self.matrix.submatrix(c, &v),
            self.matrix.submatrix(c, k),
        )
    }

    /// The same splitting with the `B`, `C`, `D` blocks set to zero: the base
    /// operator whose kernel is `K` and cokernel is `C`.
    pub fn base(&self) -> FiniteOperator {
        let mut m = Matrix::zeros(self.matrix.rows(), self.matrix.cols());
        let (v, i) = (self.v_cols(), self.i_rows());
        for &r in &i {
            for &c in &v {
                m.set(r, c, self.matrix.get(r, c).clone());
            }
        }
        FiniteOperator {
            matrix: m,
            kernel_cols: self.kernel_cols.clone(),
            cokernel_rows: self.cokernel_rows.clone(),
        }
    }
}

fn check_index_set(name: &str, set: &[usize], bound: usize) -> Result<()> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != set.len() || sorted.last().is_some_and(|&m| m >= bound) {
        return Err(Error::InvalidInput(format!(
            "{name} must be distinct indices below {bound}"
        )));
    }
    Ok(())
}

/// `ℐ(T) = D - C A⁻¹ B` as a `dim C × dim K` matrix.
pub fn schur_reduce(t: &FiniteOperator) -> Result<Matrix> {
    let (a, b, c, d) = t.blocks();
    let a_inv = a.inverse().ok_or(Error::SingularBlock)?;
    Ok(d.sub(&c.mul(&a_inv).mul(&b)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelDims {
    pub ker_t: usize,
    pub coker_t: usize,
    pub ker_reduced: usize,
    pub coker_reduced: usize,
}

impl KernelDims {
    pub fn equivalent(&self) -> bool {
        self.ker_t == self.ker_reduced && self.coker_t == self.coker_reduced
    }
}

pub fn kernel_dims(t: &FiniteOperator) -> Result<KernelDims> {
    let reduced = schur_reduce(t)?;
    let rank_t = t.matrix.rank();
    let rank_r = reduced.rank();
    Ok(KernelDims {
        ker_t: t.matrix.nullspace().len(),
        coker_t: t.matrix.rows() - rank_t,
        ker_reduced: reduced.nullspace().len(),
        coker_reduced: reduced.rows() - rank_r,
    })
}

/// Whether `T` and `ℐ(T)` have the same kernel and cokernel dimensions.
pub fn verify_kernel_equivalence(t: &FiniteOperator) -> Result<bool> {
    kernel_dims(t).map(|d| d.equivalent())
}

/// Random operator of size at most 12×12 with an invertible `A`-block.
///
/// Half of the draws set `D = C A⁻¹ B + R` with `R` of a chosen small rank,
/// so that `ℐ(T) = R` and the kernel of `T` is nontrivial.
pub fn random_operator<R: Rng>(rng: &mut R) -> FiniteOperator {
    loop {
        let n_v = rng.gen_range(1..=8);
        let n_k = rng.gen_range(0..=4);
        let n_c = rng.gen_range(0..=4);
        let a = random_matrix(rng, n_v, n_v);
        let Some(a_inv) = a.inverse() else { continue };
        let b = random_matrix(rng, n_v, n_k);
        let c = random_matrix(rng, n_c, n_v);
        let d = if rng.gen_bool(0.5) {
            let r = rng.gen_range(0..=n_k.min(n_c));
            let low = random_matrix(rng, n_c, r).mul(&random_matrix(rng, r, n_k));
            c.mul(&a_inv).mul(&b).add(&low)
        } else {
            random_matrix(rng, n_c, n_k)
        };
        let rows = n_v + n_c;
        let cols = n_v + n_k;
        let mut row_perm: Vec<usize> = (0..rows).collect();
        let mut col_perm: Vec<usize> = (0..cols).collect();
        row_perm.shuffle(rng);
        col_perm.shuffle(rng);
        let mut m = Matrix::zeros(rows, cols);
        for (r, &pr) in row_perm.iter().enumerate() {
            for (cc, &pc) in col_perm.iter().enumerate() {
                let v = match (r < n_v, cc < n_v) {
                    (true, true) => a.get(r, cc),
                    (true, false) => b.get(r, cc - n_v),
                    (false, true) => c.get(r - n_v, cc),
                    (false, false) => d.get(r - n_v, cc - n_v),
                };
                m.set(pr, pc, v.clone());
            }
        }
        let kernel_cols = (n_v..cols).map(|c| col_perm[c]).collect();
        let cokernel_rows = (n_v..rows).map(|r| row_perm[r]).collect();
        return FiniteOperator::new(m, kernel_cols, cokernel_rows).expect("valid splitting");
    }
}

fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(0.2) {
            Rational::from_integer(0.into())
        } else {
            rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))
        }
    })
}

/// `d·c`.
pub fn codim_plain(d: u64, c: u64) -> u64 {
    d * c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumComponent {
    /// Dimension of the endomorphism algebra.
    pub k: u64,
    /// Kernel dimension.
    pub d: u64,
    /// Cokernel dimension.
    #[serde(default)]
    pub c: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumQuery {
    pub components: Vec<StratumComponent>,
    /// `n = dim M`.
    #[serde(default)]
    pub n: u32,
    /// Number of orbifold points.
    #[serde(default)]
    pub s: u32,
}

/// `Σ kᵢ dᵢ cᵢ`.
pub fn codim_equivariant(q: &StratumQuery) -> u64 {
    q.components.iter().map(|c| c.k * c.d * c.c).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumBound {
    #[serde(with = "crate::exactalg::serde_rational")]
    pub index: Rational,
    #[serde(with = "crate::exactalg::serde_rational")]
    pub codim: Rational,
    #[serde(with = "crate::exactalg::serde_rational")]
    pub bound: Rational,
    pub two_s_plus_one: u64,
    pub top_stratum: bool,
}

/// Codimension `Σ kᵢ dᵢ (dᵢ - index)` of a stratum, where the index is the
/// proof-convention twisted index of the rank-`(n-2)` normal bundle over
/// points with the given quotient dimensions, against the lower bound
/// `(n-2)s/2 + 1`.
pub fn codim_stratum_bound(q: &StratumQuery, per_point_quotient_dims: &[usize]) -> Result<StratumBound> {
    if q.n < 6 {
        return Err(Error::Precondition(format!("n = {} is below 6", q.n)));
    }
    if per_point_quotient_dims.len() != q.s as usize {
        return Err(Error::Precondition(format!(
            "{} quotient dimensions given for s = {}",
            per_point_quotient_dims.len(),
            q.s
        )));
    }
    if per_point_quotient_dims.contains(&0) {
        return Err(Error::Precondition("every quotient dimension must be at least 1".into()));
    }
    if q.components.iter().all(|c| c.k * c.d == 0) {
        return Err(Error::Precondition("the stratum has no kernel".into()));
    }
    let index = twisted_index_from_quotients(q.n - 2, per_point_quotient_dims, IndexConvention::Proof)?;
    let codim: Rational = q
        .components
        .iter()
        .map(|c| int((c.k * c.d) as i64) * (int(c.d as i64) - &index))
        .sum();
    let bound = rat((q.n as i64 - 2) * q.s as i64, 2) + int(1);
    let two_s_plus_one = 2 * q.s as u64 + 1;
    Ok(StratumBound {
        top_stratum: codim == int(two_s_plus_one as i64),
        index,
        codim,
        bound,
        two_s_plus_one,
    })
}

/// The two conditions under which the codimension is exactly `2s+1`: a
/// single component with `d = 1`, `k = 1` and all others without kernel,
/// and either no orbifold points or `n = 6` with every quotient of
/// dimension 1.
pub fn top_stratum_conditions(q: &StratumQuery, per_point_quotient_dims: &[usize]) -> bool {
    let with_kernel: Vec<&StratumComponent> = q.components.iter().filter(|c| c.d * c.k > 0).collect();
    let single = with_kernel.len() == 1 && with_kernel[0].d == 1 && with_kernel[0].k == 1;
    single && (q.s == 0 || (q.n == 6 && per_point_quotient_dims.iter().all(|&x| x == 1)))
}

/// JSON input of the `codim` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimSpec {
    #[serde(flatten)]
    pub query: StratumQuery,
    #[serde(default)]
    pub quotient_dims: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn diag(values: &[Rational]) -> Matrix {
        Matrix::from_fn(values.len(), values.len(), |r, c| {
            if r == c {
                values[r].clone()
            } else {
                int(0)
            }
        })
    }

    #[test]
    fn diagonal_examples() {
        let t = FiniteOperator::new(diag(&[int(1), int(0)]), vec![1], vec![1]).unwrap();
        assert_eq!(schur_reduce(&t).unwrap(), Matrix::zeros(1, 1));
        let eps = rat(1, 1000);
        let t = FiniteOperator::new(diag(&[int(1), eps.clone()]), vec![1], vec![1]).unwrap();
        let r = schur_reduce(&t).unwrap();
        assert_eq!(r.get(0, 0), &eps);
        assert_eq!(kernel_dims(&t).unwrap().ker_t, 0);
    }

    #[test]
    fn singular_block_is_reported() {
        let t = FiniteOperator::new(diag(&[int(0), int(1)]), vec![1], vec![1]).unwrap();
        assert_eq!(schur_reduce(&t), Err(Error::SingularBlock));
        assert!(FiniteOperator::new(Matrix::identity(3), vec![0], vec![]).is_err());
        assert!(FiniteOperator::new(Matrix::identity(3), vec![0, 0], vec![1, 2]).is_err());
    }

    #[test]
    fn identity_and_base_operator() {
        let id = FiniteOperator::new(Matrix::identity(4), vec![], vec![]).unwrap();
        assert!(verify_kernel_equivalence(&id).unwrap());
        assert_eq!(kernel_dims(&id).unwrap().ker_t, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = random_operator(&mut rng);
        let base = t.base();
        let reduced = schur_reduce(&base).unwrap();
        assert!(reduced.is_zero());
        assert!(verify_kernel_equivalence(&base).unwrap());
        assert_eq!(kernel_dims(&base).unwrap().ker_t, base.kernel_cols().len());
    }

    #[test]
    fn codim_arithmetic() {
        assert_eq!(codim_plain(1, 1), 1);
        assert_eq!(codim_plain(0, 7), 0);
        assert_eq!(codim_plain(3, 2), 6);
        let q = |cs: &[(u64, u64, u64)]| StratumQuery {
            components: cs.iter().map(|&(k, d, c)| StratumComponent { k, d, c }).collect(),
            n: 6,
            s: 0,
        };
        assert_eq!(codim_equivariant(&q(&[(1, 1, 1)])), 1);
        assert_eq!(codim_equivariant(&q(&[])), 0);
        assert_eq!(codim_equivariant(&q(&[(1, 1, 2), (4, 1, 1)])), 6);
    }

    #[test]
    fn stratum_bound_examples() {
        let single = |n, s| StratumQuery {
            components: vec![StratumComponent { k: 1, d: 1, c: 1 }],
            n,
            s,
        };
        let b = codim_stratum_bound(&single(8, 1), &[1]).unwrap();
        assert_eq!((b.index.clone(), b.codim.clone(), b.bound.clone()), (int(-3), int(4), int(4)));
        assert!(!b.top_stratum);
        let b = codim_stratum_bound(&single(6, 1), &[1]).unwrap();
        assert_eq!(b.codim, int(3));
        assert!(b.top_stratum);
        let b = codim_stratum_bound(&single(8, 0), &[]).unwrap();
        assert_eq!(b.codim, int(1));
        assert!(b.top_stratum);
        assert!(codim_stratum_bound(&single(5, 0), &[]).is_err());
        assert!(codim_stratum_bound(&single(8, 1), &[0]).is_err());
        assert!(codim_stratum_bound(&single(8, 2), &[1]).is_err());
    }

    #[test]
    fn codim_spec_parses() {
        let spec: CodimSpec = serde_json::from_str(
            r#"{"n": 8, "s": 1, "components": [{"k": 1, "d": 1, "c": 1}], "quotient_dims": [1]}"#,
        )
        .unwrap();
        assert_eq!(codim_stratum_bound(&spec.query, &spec.quotient_dims).unwrap().codim, int(4));
    }
}
