//! Hand-built scenarios: the twelve local doubling diagrams and one scenario
//! per family of wall relations.

use num_traits::{One, Zero};

use super::scenario::{Event, Scenario, SelectionEntry, Side, Strand};
use super::z2::{propagate_double, DeltaMap, TorusType, Z2Class};
use crate::exactalg::{rat, Rational};

/// A named scenario and the wall relation it exercises.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub relation: String,
    pub scenario: Scenario,
}

fn sel(strand: &str, degree: u32) -> SelectionEntry {
    SelectionEntry {
        strand: strand.into(),
        degree,
        multiplicity: 1,
    }
}

/// A base that starts at type `start` and crosses one doubling wall per
/// entry of `walls`, each raising `k` by one. Wall `j` sits at
/// `(j+1)/(n+1)`, its child `c{j}` lives on `walls[j]`, and the base is
/// selected at every degree in `base_degrees` with the children at half.
fn doubling_chain(start: TorusType, walls: &[Side], base_degrees: &[u32]) -> Scenario {
    let n = walls.len() as i64;
    let mut delta = DeltaMap::of_type(start);
    let mut strands = vec![Strand {
        id: "base".into(),
        birth: Rational::zero(),
        death: Rational::one(),
        delta0: delta,
    }];
    let mut events = Vec::new();
    let mut selection: Vec<SelectionEntry> = base_degrees.iter().map(|d| sel("base", *d)).collect();
    for (j, side) in walls.iter().enumerate() {
        let t = rat(j as i64 + 1, n + 1);
        let iota0 = Z2Class::NONZERO[start.k as usize + j];
        let after = delta.flipped(iota0);
        let id = format!("c{j}");
        let (birth, death, seen) = match side {
            Side::Left => (Rational::zero(), t.clone(), delta),
            Side::Right => (t.clone(), Rational::one(), after),
        };
        strands.push(Strand {
            id: id.clone(),
            birth,
            death,
            delta0: propagate_double(&seen, iota0).expect("ι₀ is nontrivial"),
        });
        events.push(Event::Doubling {
            t,
            base_id: "base".into(),
            iota0,
            child_id: id.clone(),
            side: *side,
        });
        selection.extend(base_degrees.iter().map(|d| sel(&id, d / 2)));
        delta = after;
    }
    Scenario::new(strands, events, selection).expect("fixture is legal")
}

/// Diagrams `a`..`l`: the base crosses from `±k` to `±(k+1)` for `k = 0, 1, 2`
/// with the child on the lower (`a, c, e, g, i, k`) or upper side, selected
/// as `{base@2, child@1}`.
pub fn diagram_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    let mut letter = b'a';
    for sign in [1i8, -1] {
        for k in 0..3u8 {
            let start = TorusType::new(sign, k).expect("valid type");
            let end = TorusType::new(sign, k + 1).expect("valid type");
            for side in [Side::Left, Side::Right] {
                let where_ = if side == Side::Left { "lower" } else { "upper" };
                out.push(Fixture {
                    name: format!("diagram_{}", letter as char),
                    relation: format!("{start} -> {end}, child on the {where_} side"),
                    scenario: doubling_chain(start, &[side], &[2]),
                });
                letter += 1;
            }
        }
    }
    out
}

fn birth_death_pairs() -> Scenario {
    let mut strands = Vec::new();
    let mut events = Vec::new();
    let mut selection = Vec::new();
    for k in 0..4u8 {
        let t = rat(k as i64 + 1, 5);
        let side = if k % 2 == 0 { Side::Right } else { Side::Left };
        let (birth, death) = match side {
            Side::Right => (t.clone(), Rational::one()),
            Side::Left => (Rational::zero(), t.clone()),
        };
        for (prefix, ty) in [("p", TorusType::plus(k)), ("m", TorusType::minus(k))] {
            let id = format!("{prefix}{k}");
            strands.push(Strand {
                id: id.clone(),
                birth: birth.clone(),
                death: death.clone(),
                delta0: DeltaMap::of_type(ty),
            });
            selection.extend([1, 2, 4, 8, 16].map(|d| sel(&id, d)));
        }
        events.push(Event::BirthDeath {
            t,
            plus_id: format!("p{k}"),
            minus_id: format!("m{k}"),
            side,
        });
    }
    Scenario::new(strands, events, selection).expect("fixture is legal")
}

/// One scenario for each family of wall relations used to pin down the
/// weights.
pub fn ledger_fixtures() -> Vec<Fixture> {
    use Side::{Left, Right};
    let all_doubled = [2, 4, 8, 16];
    let fx = |name: &str, relation: &str, scenario: Scenario| Fixture {
        name: name.into(),
        relation: relation.into(),
        scenario,
    };
    vec![
        fx(
            "ledger_plus_chain",
            "-1 + n_{+k}^2 = n_{+k+1}^2",
            doubling_chain(TorusType::plus(0), &[Left, Left, Left], &[2]),
        ),
        fx(
            "ledger_minus_chain",
            "+1 + n_{-k}^2 = n_{-k-1}^2",
            doubling_chain(TorusType::minus(0), &[Left, Left, Left], &[2]),
        ),
        fx(
            "ledger_lower_child",
            "n_{-0}^d + n_{+0}^{2d} = n_{+1}^{2d}",
            doubling_chain(TorusType::plus(0), &[Left], &all_doubled),
        ),
        fx(
            "ledger_upper_child",
            "n_{+0}^d + n_{+1}^{2d} = n_{+0}^{2d}",
            doubling_chain(TorusType::plus(0), &[Right], &all_doubled),
        ),
        fx("ledger_antisymmetry", "n_{+k}^d = -n_{-k}^d", birth_death_pairs()),
        fx(
            "ledger_degree_four",
            "n_{-j}^2 + n_{+k}^4 = n_{+k+1}^4",
            doubling_chain(TorusType::plus(0), &[Left, Left, Left], &[4]),
        ),
    ]
}

pub fn all_fixtures() -> Vec<Fixture> {
    let mut v = diagram_fixtures();
    v.extend(ledger_fixtures());
    v
}
