//! Counting minimal tori along a generic path of metrics.
//!
//! Each embedded torus `T` carries a sign map `δ: H¹(T, ℤ₂) → {±1}` and hence
//! a type `±k`. A scenario records how these tori are born, die and double
//! along `t ∈ [0, 1]`, together with a compact open selection of
//! (torus, covering degree) pairs. The weighted count
//! `Σ multiplicity · n_{type}^d` is invariant across every wall exactly when
//! the weight table satisfies the wall relations, which
//! [`solve_weight_table`] solves for.

mod count;
pub mod fixtures;
mod random;
mod scenario;
mod weights;
mod z2;

pub use count::{
    check_invariance, evaluate_count, event_ledger, ledger_terms, EventLedger, IntervalCount,
    InvarianceReport, LedgerTerm,
};
pub use random::{random_scenario, random_scenarios, MAX_EVENTS, MAX_STRANDS};
pub use scenario::{Event, Scenario, SelectionEntry, Side, Strand};
pub use weights::{
    doubling_relation, parse_assignment, relation_system, solve_weight_table,
    solve_weight_table_with, Relation, WeightTable, DEGREES,
};
pub use z2::{
    propagate_double, pullback_structure, type_of, DeltaMap, PullbackStructure, TorusType,
    Z2Class,
};

/// `n_{type}^d` in the canonical table.
pub fn weight(t: TorusType, d: u32) -> i64 {
    WeightTable::canonical().weight(t, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn count_examples() {
        let f = &fixtures::diagram_fixtures()[0];
        let s = f.scenario.with_selection(vec![]).unwrap();
        let table = WeightTable::canonical();
        assert_eq!(evaluate_count(&s, &rat(1, 4), &table).unwrap(), 0);
        let one = |d, m| {
            f.scenario
                .with_selection(vec![SelectionEntry { strand: "base".into(), degree: d, multiplicity: m }])
                .unwrap()
        };
        assert_eq!(evaluate_count(&one(1, 1), &rat(1, 4), &table).unwrap(), 1);
        let plus_two = fixtures::diagram_fixtures()[4].scenario.clone();
        let s = plus_two
            .with_selection(vec![SelectionEntry { strand: "base".into(), degree: 2, multiplicity: 3 }])
            .unwrap();
        let def = WeightTable::definition_verbatim();
        assert_eq!(evaluate_count(&s, &rat(1, 4), &def).unwrap(), 6);
        assert_eq!(evaluate_count(&s, &rat(1, 4), &table).unwrap(), -6);
        assert!(evaluate_count(&s, &rat(1, 2), &table).is_err());
    }

    #[test]
    fn diagram_a_and_corrupted_table() {
        let s = &fixtures::diagram_fixtures()[0].scenario;
        let ok = check_invariance(s, &WeightTable::canonical()).unwrap();
        assert!(ok.pass);
        assert_eq!(ok.intervals.iter().map(|i| i.count).collect::<Vec<_>>(), vec![-1, -1]);
        let bad = WeightTable::canonical().with(TorusType::plus(1), 2, 0);
        let r = check_invariance(s, &bad).unwrap();
        assert!(!r.pass);
        let v = r.first_violation.unwrap();
        assert_eq!((v.event_index, v.imbalance), (0, 1));
    }

    #[test]
    fn birth_death_only_passes() {
        let f = fixtures::ledger_fixtures().into_iter().find(|f| f.name == "ledger_antisymmetry").unwrap();
        let r = check_invariance(&f.scenario, &WeightTable::canonical()).unwrap();
        assert!(r.pass && r.intervals.iter().all(|i| i.count == 0));
        for i in 0..f.scenario.events().len() {
            assert_eq!(event_ledger(&f.scenario, i, &WeightTable::canonical()).unwrap().imbalance, 0);
        }
    }
}
