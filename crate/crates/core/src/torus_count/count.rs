use num_traits::{One, Zero};
use serde::Serialize;

use super::scenario::{Event, Scenario};
use super::weights::WeightTable;
use super::z2::{type_of, TorusType};
use crate::error::{Error, Result};
use crate::exactalg::{int, Rational};

/// One selected `(strand, degree)` pair and what it adds to the count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerTerm {
    pub strand: String,
    pub degree: u32,
    #[serde(rename = "type")]
    pub ty: TorusType,
    pub weight: i64,
    pub multiplicity: u32,
}

impl LedgerTerm {
    pub fn value(&self) -> i64 {
        self.weight * self.multiplicity as i64
    }
}

/// The selected terms alive at `t`, optionally restricted to some strands.
pub fn ledger_terms(
    s: &Scenario,
    t: &Rational,
    table: &WeightTable,
    only: Option<&[&str]>,
) -> Result<Vec<LedgerTerm>> {
    if *t < Rational::zero() || *t > Rational::one() {
        return Err(Error::InvalidInput("t must lie in [0, 1]".into()));
    }
    let mut out = Vec::new();
    for e in s.selection() {
        if e.multiplicity == 0 || only.is_some_and(|o| !o.contains(&e.strand.as_str())) {
            continue;
        }
        if let Some(delta) = s.delta_at(&e.strand, t)? {
            let ty = type_of(&delta);
            out.push(LedgerTerm {
                strand: e.strand.clone(),
                degree: e.degree,
                ty,
                weight: table.weight(ty, e.degree),
                multiplicity: e.multiplicity,
            });
        }
    }
    Ok(out)
}

/// `n(g_t, 𝒰_t) = Σ multiplicity · n_{type}^d` over selected pairs alive at `t`.
pub fn evaluate_count(s: &Scenario, t: &Rational, table: &WeightTable) -> Result<i64> {
    Ok(ledger_terms(s, t, table, None)?.iter().map(LedgerTerm::value).sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalCount {
    #[serde(with = "crate::exactalg::serde_rational")]
    pub t_lo: Rational,
    #[serde(with = "crate::exactalg::serde_rational")]
    pub t_hi: Rational,
    pub count: i64,
}

/// The local ledger of one wall: the terms of the strands it touches on
/// both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EventLedger {
    pub event_index: usize,
    #[serde(with = "crate::exactalg::serde_rational")]
    pub t: Rational,
    pub kind: String,
    pub left: Vec<LedgerTerm>,
    pub right: Vec<LedgerTerm>,
    /// Right total minus left total.
    pub imbalance: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub table: String,
    pub intervals: Vec<IntervalCount>,
    pub pass: bool,
    pub first_violation: Option<EventLedger>,
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

pub fn event_ledger(s: &Scenario, index: usize, table: &WeightTable) -> Result<EventLedger> {
    let e = &s.events()[index];
    let t = e.t();
    let lo = if index == 0 { Rational::zero() } else { s.events()[index - 1].t().clone() };
    let hi = s.events().get(index + 1).map_or(Rational::one(), |n| n.t().clone());
    let touched = e.strands();
    let left = ledger_terms(s, &midpoint(&lo, t), table, Some(&touched))?;
    let right = ledger_terms(s, &midpoint(t, &hi), table, Some(&touched))?;
    let total = |v: &[LedgerTerm]| v.iter().map(LedgerTerm::value).sum::<i64>();
    Ok(EventLedger {
        event_index: index,
        t: t.clone(),
        kind: match e {
            Event::BirthDeath { .. } => "birth_death".into(),
            Event::Doubling { .. } => "doubling".into(),
        },
        imbalance: total(&right) - total(&left),
        left,
        right,
    })
}

/// Counts on every open interval between consecutive walls. Fails with
/// [`Error::SelectionNotClosed`] if the selection is not compact open.
pub fn check_invariance(s: &Scenario, table: &WeightTable) -> Result<InvarianceReport> {
    s.check_selection_closed()?;
    let mut cuts = vec![Rational::zero()];
    cuts.extend(s.events().iter().map(|e| e.t().clone()));
    cuts.push(Rational::one());
    let intervals = cuts
        .windows(2)
        .map(|w| {
            Ok(IntervalCount {
                count: evaluate_count(s, &midpoint(&w[0], &w[1]), table)?,
                t_lo: w[0].clone(),
                t_hi: w[1].clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let first_violation = match intervals.windows(2).position(|w| w[0].count != w[1].count) {
        Some(i) => Some(event_ledger(s, i, table)?),
        None => None,
    };
    Ok(InvarianceReport {
        table: table.name().to_string(),
        pass: first_violation.is_none(),
        intervals,
        first_violation,
    })
}
