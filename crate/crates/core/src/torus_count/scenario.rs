use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::weights::DEGREES;
use super::z2::{propagate_double, DeltaMap, Z2Class};
use crate::error::{Error, Result};
use crate::exactalg::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strand {
    pub id: String,
    #[serde(with = "crate::exactalg::serde_rational")]
    pub birth: Rational,
    #[serde(with = "crate::exactalg::serde_rational")]
    pub death: Rational,
    pub delta0: DeltaMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Event {
    /// Two strands of opposite trivial sign that exist on `side` of `t`
    /// and meet at `t`.
    BirthDeath {
        #[serde(with = "crate::exactalg::serde_rational")]
        t: Rational,
        plus_id: String,
        minus_id: String,
        side: Side,
    },
    /// `δ(ι₀)` of the base flips at `t`. The child lives on `side` and
    /// converges to the double cover classified by `ι₀`.
    Doubling {
        #[serde(with = "crate::exactalg::serde_rational")]
        t: Rational,
        base_id: String,
        iota0: Z2Class,
        child_id: String,
        side: Side,
    },
}

impl Event {
    pub fn t(&self) -> &Rational {
        match self {
            Event::BirthDeath { t, .. } | Event::Doubling { t, .. } => t,
        }
    }

    pub fn side(&self) -> Side {
        match self {
            Event::BirthDeath { side, .. } | Event::Doubling { side, .. } => *side,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Event::BirthDeath { .. } => "birth_death",
            Event::Doubling { .. } => "doubling",
        }
    }

    /// Strands that start or stop at this event.
    pub fn endpoint_strands(&self) -> Vec<&str> {
        match self {
            Event::BirthDeath { plus_id, minus_id, .. } => vec![plus_id, minus_id],
            Event::Doubling { child_id, .. } => vec![child_id],
        }
    }

    pub fn strands(&self) -> Vec<&str> {
        match self {
            Event::BirthDeath { plus_id, minus_id, .. } => vec![plus_id, minus_id],
            Event::Doubling { base_id, child_id, .. } => vec![base_id, child_id],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionEntry {
    pub strand: String,
    pub degree: u32,
    pub multiplicity: u32,
}

/// A generic path of metrics on `[0, 1]`: the tori along it, the walls they
/// cross, and a compact open set of (torus, covering degree) pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scenario {
    strands: Vec<Strand>,
    events: Vec<Event>,
    selection: Vec<SelectionEntry>,
}

#[derive(Deserialize)]
struct RawScenario {
    strands: Vec<Strand>,
    events: Vec<Event>,
    #[serde(default)]
    selection: Vec<SelectionEntry>,
}

impl Scenario {
    /// Validates the local models and sorts events by time.
    pub fn new(strands: Vec<Strand>, mut events: Vec<Event>, selection: Vec<SelectionEntry>) -> Result<Self> {
        events.sort_by(|a, b| a.t().cmp(b.t()));
        let s = Scenario {
            strands,
            events,
            selection,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawScenario = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Scenario::new(raw.strands, raw.events, raw.selection)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("scenario serializes")
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn selection(&self) -> &[SelectionEntry] {
        &self.selection
    }

    pub fn with_selection(&self, selection: Vec<SelectionEntry>) -> Result<Self> {
        Scenario::new(self.strands.clone(), self.events.clone(), selection)
    }

    pub fn strand(&self, id: &str) -> Option<&Strand> {
        self.strands.iter().find(|s| s.id == id)
    }

    fn need(&self, id: &str) -> Result<&Strand> {
        self.strand(id)
            .ok_or_else(|| Error::InvalidScenario(format!("unknown strand {id:?}")))
    }

    pub fn is_event_time(&self, t: &Rational) -> bool {
        self.events.iter().any(|e| e.t() == t)
    }

    pub fn alive(&self, strand: &Strand, t: &Rational) -> bool {
        strand.birth <= *t && *t <= strand.death
    }

    /// The sign map of `strand` just after `t` (or at `t` when `t` is not a
    /// wall of the strand).
    fn delta_after(&self, strand: &Strand, t: &Rational) -> DeltaMap {
        self.events
            .iter()
            .filter(|e| e.t() <= t)
            .fold(strand.delta0, |d, e| match e {
                Event::Doubling { base_id, iota0, .. } if *base_id == strand.id => d.flipped(*iota0),
                _ => d,
            })
    }

    fn delta_before(&self, strand: &Strand, t: &Rational) -> DeltaMap {
        self.events
            .iter()
            .filter(|e| e.t() < t)
            .fold(strand.delta0, |d, e| match e {
                Event::Doubling { base_id, iota0, .. } if *base_id == strand.id => d.flipped(*iota0),
                _ => d,
            })
    }

    fn delta_on(&self, strand: &Strand, t: &Rational, side: Side) -> DeltaMap {
        match side {
            Side::Left => self.delta_before(strand, t),
            Side::Right => self.delta_after(strand, t),
        }
    }

    /// `δ` of `id` at a time `t` that is not an event time. `None` if the
    /// strand does not exist at `t`.
    pub fn delta_at(&self, id: &str, t: &Rational) -> Result<Option<DeltaMap>> {
        if self.is_event_time(t) {
            return Err(Error::InvalidInput(format!(
                "t = {} is an event time",
                format_rational(t)
            )));
        }
        let s = self.need(id)?;
        Ok(self.alive(s, t).then(|| self.delta_after(s, t)))
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidScenario(msg));
        let mut ids = BTreeSet::new();
        for s in &self.strands {
            if s.id.is_empty() || !ids.insert(s.id.as_str()) {
                return bad(format!("strand id {:?} is empty or repeated", s.id));
            }
            if s.birth < Rational::zero() || s.death > Rational::one() || s.birth >= s.death {
                return bad(format!("strand {:?} needs 0 <= birth < death <= 1", s.id));
            }
        }
        let mut times = BTreeSet::new();
        for e in &self.events {
            let t = e.t();
            if *t <= Rational::zero() || *t >= Rational::one() {
                return bad(format!("event time {} is not interior to (0, 1)", format_rational(t)));
            }
            if !times.insert(t.clone()) {
                return bad(format!("two events at t = {}", format_rational(t)));
            }
            let names = e.strands();
            if names[0] == names[1] {
                return bad(format!("event at {} uses strand {:?} twice", format_rational(t), names[0]));
            }
            for n in names {
                self.need(n)?;
            }
        }
        let mut starts: BTreeMap<&str, &Rational> = BTreeMap::new();
        let mut stops: BTreeMap<&str, &Rational> = BTreeMap::new();
        for e in &self.events {
            let slot = match e.side() {
                Side::Right => &mut starts,
                Side::Left => &mut stops,
            };
            for id in e.endpoint_strands() {
                if slot.insert(id, e.t()).is_some() {
                    return bad(format!("strand {id:?} is created or removed by two events"));
                }
            }
        }
        for s in &self.strands {
            let expect_start = (!s.birth.is_zero()).then_some(&s.birth);
            let expect_stop = (!s.death.is_one()).then_some(&s.death);
            if starts.get(s.id.as_str()).copied() != expect_start {
                return bad(format!(
                    "strand {:?} is born at {} but no event on its right creates it there",
                    s.id,
                    format_rational(&s.birth)
                ));
            }
            if stops.get(s.id.as_str()).copied() != expect_stop {
                return bad(format!(
                    "strand {:?} dies at {} but no event on its left removes it there",
                    s.id,
                    format_rational(&s.death)
                ));
            }
        }
        for e in &self.events {
            let t = e.t();
            let at = format_rational(t);
            match e {
                Event::BirthDeath {
                    plus_id,
                    minus_id,
                    side,
                    ..
                } => {
                    let p = self.delta_on(self.need(plus_id)?, t, *side);
                    let m = self.delta_on(self.need(minus_id)?, t, *side);
                    if p.get(Z2Class::ZERO) != 1 || m.get(Z2Class::ZERO) != -1 {
                        return bad(format!("birth-death at {at}: {plus_id:?} needs δ(0) = +1 and {minus_id:?} δ(0) = -1"));
                    }
                    if Z2Class::NONZERO.iter().any(|c| p.get(*c) != m.get(*c)) {
                        return bad(format!("birth-death at {at}: the pair differs on a nontrivial class"));
                    }
                }
                Event::Doubling {
                    base_id,
                    iota0,
                    child_id,
                    side,
                    ..
                } => {
                    let base = self.need(base_id)?;
                    if !(base.birth < *t && *t < base.death) {
                        return bad(format!("doubling at {at}: base {base_id:?} must exist on both sides"));
                    }
                    if iota0.is_zero() {
                        return bad(format!("doubling at {at}: ι₀ must be nontrivial"));
                    }
                    let expected = propagate_double(&self.delta_on(base, t, *side), *iota0)?;
                    let child = self.delta_on(self.need(child_id)?, t, *side);
                    if child != expected {
                        return bad(format!(
                            "doubling at {at}: child {child_id:?} has the wrong sign map for ι₀ = {iota0}"
                        ));
                    }
                }
            }
        }
        let mut seen = BTreeSet::new();
        for entry in &self.selection {
            self.need(&entry.strand)?;
            if !DEGREES.contains(&entry.degree) {
                return bad(format!("degree {} is outside {DEGREES:?}", entry.degree));
            }
            if !seen.insert((entry.strand.as_str(), entry.degree)) {
                return bad(format!("({:?}, {}) selected twice", entry.strand, entry.degree));
            }
        }
        Ok(())
    }

    pub fn multiplicity(&self, id: &str, degree: u32) -> u32 {
        self.selection
            .iter()
            .find(|e| e.strand == id && e.degree == degree)
            .map_or(0, |e| e.multiplicity)
    }

    /// A doubling child is selected at `d` exactly when its base is selected
    /// at `2d`, and a birth-death pair is selected identically.
    pub fn check_selection_closed(&self) -> Result<()> {
        for e in &self.events {
            let at = format_rational(e.t());
            match e {
                Event::BirthDeath { plus_id, minus_id, .. } => {
                    for d in DEGREES {
                        if self.multiplicity(plus_id, d) != self.multiplicity(minus_id, d) {
                            return Err(Error::SelectionNotClosed(format!(
                                "birth-death at {at}: {plus_id:?} and {minus_id:?} differ at degree {d}"
                            )));
                        }
                    }
                }
                Event::Doubling { base_id, child_id, .. } => {
                    for d in DEGREES {
                        let base = DEGREES.contains(&(2 * d)).then(|| self.multiplicity(base_id, 2 * d));
                        let child = self.multiplicity(child_id, d);
                        if base.unwrap_or(0) != child {
                            return Err(Error::SelectionNotClosed(format!(
                                "doubling at {at}: child {child_id:?} at degree {d} has multiplicity {child}, base {base_id:?} at degree {} has {}",
                                2 * d,
                                base.map_or("none".to_string(), |b| b.to_string())
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
