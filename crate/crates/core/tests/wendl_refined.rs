use mtc_core::petri_wendl::{
    bound_hypothesis, coefficient_series, graded_ranks, petri_kernel_basis, proof_parities,
    sample_kernel_elements, wendl_bound_rows,
};

#[test]
fn wendl_map_vanishes_exactly_on_antisymmetric_elements() {
    for d in 1..=2 {
        for b in sample_kernel_elements(d, 3, 17) {
            let ranks = graded_ranks(b.tensor(), 8);
            let total: usize = ranks.iter().sum();
            assert_eq!(total == 0, b.tensor().is_antisymmetric(), "d = {d}");
        }
    }
}

#[test]
fn bound_holds_when_the_symmetric_part_is_nonzero() {
    let d = 2;
    let l = bound_hypothesis(d);
    let mut checked = 0;
    for b in sample_kernel_elements(d, 5, 1).into_iter().filter(|b| !b.tensor().is_antisymmetric()) {
        let report = wendl_bound_rows(&b, &[l, l + 2, l + 4]);
        assert!(report.pass(), "{:?}", report.per_l);
        assert_eq!(report.empirical_threshold, 0);
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn degree_one_kernel_is_antisymmetric() {
    let basis = petri_kernel_basis(1);
    assert_eq!(basis.len(), 2);
    assert!(basis.iter().all(|b| b.tensor().is_antisymmetric()));
}

#[test]
fn nontrivial_series_respect_the_zero_bound() {
    for d in 1..=4 {
        for b in sample_kernel_elements(d, 5, 3) {
            let (a, c) = proof_parities(b.tensor()).unwrap();
            let s = coefficient_series(b.tensor(), a, c);
            let zeros = s.integer_zeros(0, 4 * d + 10).len();
            if s.numerator().is_zero() {
                assert_eq!(zeros as u32, 4 * d + 11);
            } else {
                assert!(zeros as u32 <= 4 * d + 2, "d = {d}: {zeros} zeros");
            }
        }
    }
}
