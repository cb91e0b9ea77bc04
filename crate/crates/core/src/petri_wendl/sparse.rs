use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::exactalg::Rational;
use crate::linalg::{bareiss_rank, clear_denominators, Matrix};

/// Column-major sparse matrix over ℚ. Each column keeps its nonzero
/// entries sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from columns of `(row, value)` entries. Zeros are
    /// dropped and duplicate rows summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, Rational)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|(r, _)| *r);
                let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    assert!(r < rows, "row index {r} out of range");
                    match merged.last_mut() {
                        Some((lr, lv)) if *lr == r => *lv += v,
                        _ => merged.push((r, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                merged
            })
            .collect();
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let columns = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            columns,
        }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.columns[c]
            .binary_search_by_key(&r, |(row, _)| *row)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Applies `row_perm[r]` as the new index of row `r` and reorders
    /// columns so that new column `c` is old column `col_order[c]`.
    pub fn permuted(&self, row_perm: &[usize], col_order: &[usize]) -> SparseMatrix {
        let columns = col_order
            .iter()
            .map(|&c| {
                self.columns[c]
                    .iter()
                    .map(|(r, v)| (row_perm[*r], v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(self.rows, columns)
    }

    /// Splits rows and columns into the connected components of the
    /// bipartite nonzero pattern. Empty rows and columns are dropped.
    fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.rows + self.cols();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (c, col) in self.columns.iter().enumerate() {
            for (r, _) in col {
                let a = find(&mut parent, *r);
                let b = find(&mut parent, self.rows + c);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> =
            std::collections::BTreeMap::new();
        for (c, col) in self.columns.iter().enumerate() {
            if col.is_empty() {
                continue;
            }
            let root = find(&mut parent, self.rows + c);
            groups.entry(root).or_default().1.push(c);
        }
        let mut touched = vec![false; self.rows];
        for col in &self.columns {
            for (r, _) in col {
                touched[*r] = true;
            }
        }
        for (r, _) in touched.iter().enumerate().filter(|(_, t)| **t) {
            let root = find(&mut parent, r);
            groups.entry(root).or_default().0.push(r);
        }
        groups.into_values().collect()
    }

    /// Integer rows (denominators cleared per row) of the submatrix.
    fn integer_rows(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<BigInt>> {
        let mut index = vec![usize::MAX; self.rows];
        for (i, &r) in rows.iter().enumerate() {
            index[r] = i;
        }
        let mut dense = vec![vec![Rational::zero(); cols.len()]; rows.len()];
        for (j, &c) in cols.iter().enumerate() {
            for (r, v) in &self.columns[c] {
                if index[*r] != usize::MAX {
                    dense[index[*r]][j] = v.clone();
                }
            }
        }
        dense.iter().map(|row| clear_denominators(row)).collect()
    }
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

fn reduce(v: &BigInt) -> u64 {
    v.mod_floor(&BigInt::from(PRIME))
        .to_u64()
        .expect("residue fits in u64")
}

/// Rank of an integer matrix modulo a fixed prime. Never exceeds the rank
/// over ℚ.
fn modular_rank(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(reduce).collect()).collect();
    let nrows = m.len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = powmod(m[rank][col], PRIME - 2);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let f = mulmod(row[col], inv);
            for c in col..cols {
                if pivot[c] != 0 {
                    row[c] = (row[c] + PRIME - mulmod(f, pivot[c])) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn component_rank(rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let full = rows.len().min(cols);
    if modular_rank(&rows, cols) == full {
        return full;
    }
    bareiss_rank(rows, cols)
}

/// Exact rank over ℚ.
///
/// The matrix is split into independent blocks along the connected
/// components of its nonzero pattern. A block whose rank modulo a large
/// prime is already maximal has that rank over ℚ. The remaining blocks go
/// through fraction-free elimination. Blocks are independent so the result
/// does not depend on scheduling.
pub fn exact_rank(m: &SparseMatrix) -> usize {
    m.components()
        .into_par_iter()
        .map(|(rows, cols)| {
            let int_rows = m.integer_rows(&rows, &cols);
            component_rank(int_rows, cols.len())
        })
        .sum()
}

/// Fraction-free elimination on the whole matrix, with no block splitting
/// and no modular shortcut.
pub fn bareiss_only_rank(m: &SparseMatrix) -> usize {
    let rows: Vec<usize> = (0..m.rows()).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    bareiss_rank(m.integer_rows(&rows, &cols), m.cols())
}
