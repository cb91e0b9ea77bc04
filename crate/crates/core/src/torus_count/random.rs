use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::scenario::{Event, Scenario, SelectionEntry, Side, Strand};
use super::weights::DEGREES;
use super::z2::{propagate_double, DeltaMap, Z2Class};
use crate::exactalg::{rat, Rational};

pub const MAX_STRANDS: usize = 8;
pub const MAX_EVENTS: usize = 10;

struct Builder {
    strands: Vec<Strand>,
    /// Current sign map of every strand still alive to the right of the
    /// last processed event.
    open: BTreeMap<String, DeltaMap>,
    events: Vec<Event>,
}

impl Builder {
    fn add(&mut self, birth: Rational, death: Rational, delta0: DeltaMap) -> String {
        let id = format!("s{}", self.strands.len());
        if death.is_one() {
            self.open.insert(id.clone(), delta0);
        }
        self.strands.push(Strand {
            id: id.clone(),
            birth,
            death,
            delta0,
        });
        id
    }
}

fn random_delta(rng: &mut impl Rng) -> DeltaMap {
    let bits: u8 = rng.gen_range(0..16);
    DeltaMap::from_signs(std::array::from_fn(|i| if bits >> i & 1 == 1 { -1 } else { 1 }))
        .expect("signs are ±1")
}

/// A legal scenario with at most [`MAX_STRANDS`] strands and
/// [`MAX_EVENTS`] walls of both kinds on both sides, and a random selection
/// closed under the event rules.
///
/// Children and pairs that live to the left of their wall are created
/// retroactively from `t = 0`.
pub fn random_scenario(rng: &mut impl Rng) -> Scenario {
    let mut b = Builder {
        strands: Vec::new(),
        open: BTreeMap::new(),
        events: Vec::new(),
    };
    let initial = rng.gen_range(0..=3);
    for _ in 0..initial {
        let d = random_delta(rng);
        b.add(Rational::zero(), Rational::one(), d);
    }
    let n_events = rng.gen_range(1..=MAX_EVENTS);
    let mut ticks: Vec<i64> = (1..100).collect();
    ticks.shuffle(rng);
    let mut ticks = ticks[..n_events].to_vec();
    ticks.sort_unstable();

    for tick in ticks {
        let t = rat(tick, 100);
        let room = MAX_STRANDS - b.strands.len();
        let can_double = room >= 1 && !b.open.is_empty();
        let can_pair = room >= 2;
        let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let (left_span, right_span) = ((Rational::zero(), t.clone()), (t.clone(), Rational::one()));
        if can_double && (!can_pair || rng.gen_bool(0.6)) {
            let bases: Vec<String> = b.open.keys().cloned().collect();
            let base_id = bases.choose(rng).expect("nonempty").clone();
            let iota0 = *Z2Class::NONZERO.choose(rng).expect("nonempty");
            let before = b.open[&base_id];
            let after = before.flipped(iota0);
            b.open.insert(base_id.clone(), after);
            let (seen, (birth, death)) = match side {
                Side::Left => (before, left_span),
                Side::Right => (after, right_span),
            };
            let child_id = b.add(birth, death, propagate_double(&seen, iota0).expect("ι₀ ≠ 0"));
            b.events.push(Event::Doubling {
                t,
                base_id,
                iota0,
                child_id,
                side,
            });
        } else if can_pair {
            let shared = random_delta(rng);
            let (birth, death) = match side {
                Side::Left => left_span,
                Side::Right => right_span,
            };
            let plus_id = b.add(birth.clone(), death.clone(), shared.with(Z2Class::ZERO, 1));
            let minus_id = b.add(birth, death, shared.with(Z2Class::ZERO, -1));
            b.events.push(Event::BirthDeath {
                t,
                plus_id,
                minus_id,
                side,
            });
        }
    }

    let selection = random_closed_selection(&b.strands, &b.events, rng);
    let mut events = b.events;
    events.shuffle(rng);
    Scenario::new(b.strands, events, selection).expect("generated scenario is legal")
}

/// Nodes `(strand, degree)` glued by the closure rules get one shared
/// multiplicity in `0..=3`. Classes containing a child at the top degree
/// are forced to zero, since the base would have to sit above the range.
fn random_closed_selection(strands: &[Strand], events: &[Event], rng: &mut impl Rng) -> Vec<SelectionEntry> {
    let nodes: Vec<(usize, u32)> = (0..strands.len())
        .flat_map(|s| DEGREES.into_iter().map(move |d| (s, d)))
        .collect();
    let index = |s: usize, d: u32| s * DEGREES.len() + DEGREES.iter().position(|x| *x == d).expect("degree");
    let pos = |id: &str| strands.iter().position(|s| s.id == id).expect("strand");
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut forced = vec![false; nodes.len()];
    let top = *DEGREES.last().expect("nonempty");
    for e in events {
        match e {
            Event::BirthDeath { plus_id, minus_id, .. } => {
                for d in DEGREES {
                    let (a, c) = (find(&mut parent, index(pos(plus_id), d)), find(&mut parent, index(pos(minus_id), d)));
                    parent[a] = c;
                }
            }
            Event::Doubling { base_id, child_id, .. } => {
                for d in DEGREES.into_iter().filter(|d| 2 * d <= top) {
                    let (a, c) = (find(&mut parent, index(pos(child_id), d)), find(&mut parent, index(pos(base_id), 2 * d)));
                    parent[a] = c;
                }
                forced[index(pos(child_id), top)] = true;
            }
        }
    }
    let mut root_forced = vec![false; nodes.len()];
    for (i, _) in forced.iter().enumerate().filter(|(_, f)| **f) {
        let r = find(&mut parent, i);
        root_forced[r] = true;
    }
    let mut chosen: BTreeMap<usize, u32> = BTreeMap::new();
    let mut out = Vec::new();
    for (i, (s, d)) in nodes.iter().enumerate() {
        let r = find(&mut parent, i);
        let m = *chosen
            .entry(r)
            .or_insert_with(|| if root_forced[r] { 0 } else { rng.gen_range(0..=3) });
        if m > 0 {
            out.push(SelectionEntry {
                strand: strands[*s].id.clone(),
                degree: *d,
                multiplicity: m,
            });
        }
    }
    out
}

/// `n` scenarios from a ChaCha8 stream seeded with `seed`.
pub fn random_scenarios(seed: u64, n: usize) -> Vec<Scenario> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_scenario(&mut rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_scenarios_are_legal_and_closed() {
        for s in random_scenarios(7, 200) {
            assert!(s.strands().len() <= MAX_STRANDS);
            assert!(!s.events().is_empty() && s.events().len() <= MAX_EVENTS);
            s.check_selection_closed().unwrap();
        }
        assert_eq!(random_scenarios(3, 5), random_scenarios(3, 5));
    }

    #[test]
    fn both_kinds_and_sides_occur() {
        let mut seen = std::collections::BTreeSet::new();
        for s in random_scenarios(11, 100) {
            for e in s.events() {
                seen.insert((e.kind(), e.side()));
            }
        }
        assert_eq!(seen.len(), 4);
    }
}
