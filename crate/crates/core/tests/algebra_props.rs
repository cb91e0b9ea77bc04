use mtc_core::exactalg::{apply_laplacian, harmonic_basis, int, right_inverse, Poly2};
use mtc_core::linalg::Matrix;
use mtc_core::petri_wendl::{bareiss_only_rank, exact_rank, SparseMatrix};
use mtc_core::{Monomial2, Rational};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly2> {
    prop::collection::vec((0u32..7, 0u32..7, -20i64..20, 1i64..6), 0..6).prop_map(|terms| {
        Poly2::from_terms(
            terms
                .into_iter()
                .map(|(a, b, n, d)| (Monomial2::new(a, b), Rational::new(n.into(), d.into()))),
        )
    })
}

fn sparse() -> impl Strategy<Value = SparseMatrix> {
    (1usize..9, 1usize..9).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((0..r, -3i64..4), 0..4), c)
            .prop_map(move |cols| {
                SparseMatrix::from_columns(
                    r,
                    cols.into_iter()
                        .map(|col| col.into_iter().map(|(i, v)| (i, int(v))).collect())
                        .collect(),
                )
            })
    })
}

proptest! {
    #[test]
    fn right_inverse_is_a_right_inverse(p in poly()) {
        prop_assert_eq!(apply_laplacian(&right_inverse(&p)), p);
    }

    #[test]
    fn text_round_trip(p in poly()) {
        prop_assert_eq!(p.to_string().parse::<Poly2>().unwrap(), p);
    }

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn laplacian_is_linear(p in poly(), q in poly(), c in -5i64..5) {
        let lhs = apply_laplacian(&(&p + &q.scale(&int(c))));
        let rhs = &apply_laplacian(&p) + &apply_laplacian(&q).scale(&int(c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_rank_matches_dense_oracle(m in sparse()) {
        let dense: Matrix = m.to_dense();
        prop_assert_eq!(exact_rank(&m), dense.rank());
        prop_assert_eq!(bareiss_only_rank(&m), dense.rank());
        prop_assert_eq!(exact_rank(&m), dense.transpose().rank());
    }

    #[test]
    fn exact_rank_is_permutation_invariant(m in sparse(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut rows: Vec<usize> = (0..m.rows()).collect();
        let mut cols: Vec<usize> = (0..m.cols()).collect();
        rows.shuffle(&mut rng);
        cols.shuffle(&mut rng);
        prop_assert_eq!(exact_rank(&m.permuted(&rows, &cols)), exact_rank(&m));
    }
}

#[test]
fn harmonic_basis_lies_in_kernel() {
    for d in 0..=30 {
        let basis = harmonic_basis(d);
        assert_eq!(basis.len(), if d == 0 { 1 } else { 2 });
        for h in basis {
            assert!(apply_laplacian(&h).is_zero());
            assert_eq!(h.homogeneous_degree(), Some(d));
        }
    }
}
