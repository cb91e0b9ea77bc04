use mtc_core::exactalg::{int, rat};
use mtc_core::orbifold::{
    hecke_euler_char, local_system_degree, quotient_dim, random_local_system, twisted_index,
    twisted_index_riemann_roch, untwisted_index_check, IndexConvention,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn riemann_roch_chain_matches_closed_form(seed in any::<u64>(), rk in 1u32..5) {
        let ls = random_local_system(&mut ChaCha8Rng::seed_from_u64(seed));
        let closed = twisted_index(rk, &ls, IndexConvention::Proof).unwrap();
        prop_assert_eq!(twisted_index_riemann_roch(rk, &ls).unwrap(), closed.clone());
        let statement = twisted_index(rk, &ls, IndexConvention::Statement).unwrap();
        prop_assert_eq!(statement, closed * int(2));
    }

    #[test]
    fn hecke_shift_is_total_quotient(seed in any::<u64>(), chi in -20i64..20) {
        let ls = random_local_system(&mut ChaCha8Rng::seed_from_u64(seed));
        let total: usize = ls.monodromy().values().map(quotient_dim).sum();
        prop_assert_eq!(hecke_euler_char(&int(chi), &ls), int(chi - total as i64));
        prop_assert_eq!(local_system_degree(&ls), rat(total as i64, 2));
        prop_assert_eq!(untwisted_index_check(&ls.multiplicity()), 0);
    }
}
