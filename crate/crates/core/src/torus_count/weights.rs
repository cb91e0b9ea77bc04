use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::z2::{propagate_double, type_of, DeltaMap, TorusType, Z2Class};
use crate::error::{Error, Result};
use crate::exactalg::{int, Rational};
use crate::linalg::Matrix;

/// Covering degrees that take part in event coupling.
pub const DEGREES: [u32; 5] = [1, 2, 4, 8, 16];

/// Integer weights `n_{±k}^d`. Missing entries read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    name: String,
    weights: BTreeMap<(TorusType, u32), i64>,
}

#[derive(Serialize, Deserialize)]
struct WeightEntry {
    #[serde(rename = "type")]
    ty: TorusType,
    degree: u32,
    weight: i64,
}

#[derive(Serialize, Deserialize)]
struct WeightTableFile {
    name: String,
    weights: Vec<WeightEntry>,
}

impl WeightTable {
    pub fn empty(name: impl Into<String>) -> Self {
        WeightTable {
            name: name.into(),
            weights: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self, t: TorusType, d: u32) -> i64 {
        self.weights.get(&(t, d)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, t: TorusType, d: u32, w: i64) {
        if w == 0 {
            self.weights.remove(&(t, d));
        } else {
            self.weights.insert((t, d), w);
        }
    }

    pub fn with(mut self, t: TorusType, d: u32, w: i64) -> Self {
        self.set(t, d, w);
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `(n_{s0}^d, .., n_{s3}^d)` for the sign `s`.
    pub fn column(&self, sign: i8, d: u32) -> [i64; 4] {
        std::array::from_fn(|k| self.weight(TorusType { sign, k: k as u8 }, d))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.weights
            .iter()
            .all(|((t, d), w)| self.weight(t.opposite(), *d) == -w)
    }

    /// `ε` at `d = 1`, `∓k` at `d = 2`, `±⌊k/2⌋` at `d = 4`, zero elsewhere.
    ///
    /// This is the table forced by the wall-crossing relations with
    /// `n₂ = n₄ = n₈ = 0`.
    pub fn canonical() -> Self {
        let mut t = WeightTable::empty("canonical");
        for ty in TorusType::all() {
            let s = ty.sign as i64;
            let k = ty.k as i64;
            t.set(ty, 1, s);
            t.set(ty, 2, -s * k);
            t.set(ty, 4, s * (k / 2));
        }
        t
    }

    /// `ε` at `d = 1`, `±k` at `d = 2`, `±⌊k/2⌋` at `d = 4`, zero elsewhere,
    /// with the sign of the type in front of each entry.
    pub fn definition_verbatim() -> Self {
        let mut t = WeightTable::empty("definition");
        for ty in TorusType::all() {
            let s = ty.sign as i64;
            let k = ty.k as i64;
            t.set(ty, 1, s);
            t.set(ty, 2, s * k);
            t.set(ty, 4, s * (k / 2));
        }
        t
    }

    /// `canonical`, `derived` (solver output with zero normalization) or
    /// `definition`.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "canonical" => Ok(WeightTable::canonical()),
            "definition" => Ok(WeightTable::definition_verbatim()),
            "derived" => Ok(solve_weight_table(4, &[0; 4])?.renamed("derived")),
            _ => Err(Error::InvalidInput(format!("unknown weight table {name:?}"))),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let file = WeightTableFile {
            name: self.name.clone(),
            weights: self
                .weights
                .iter()
                .map(|((ty, degree), weight)| WeightEntry {
                    ty: *ty,
                    degree: *degree,
                    weight: *weight,
                })
                .collect(),
        };
        serde_json::to_value(file).expect("weight table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: WeightTableFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = WeightTable::empty(file.name);
        for e in file.weights {
            t.set(e.ty, e.degree, e.weight);
        }
        Ok(t)
    }
}

/// Parses `"+1@2=5"` as `n_{+1}^2 = 5`.
pub fn parse_assignment(s: &str) -> Result<(TorusType, u32, i64)> {
    let bad = || Error::Parse(format!("{s:?} is not of the form <type>@<degree>=<value>"));
    let (lhs, value) = s.split_once('=').ok_or_else(bad)?;
    let (ty, degree) = lhs.trim().split_once('@').ok_or_else(bad)?;
    Ok((
        ty.trim().parse()?,
        degree.trim().parse().map_err(|_| bad())?,
        value.trim().parse().map_err(|_| bad())?,
    ))
}

/// `Σ coeff · n_t^d = constant`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub family: String,
    pub terms: Vec<(TorusType, u32, i64)>,
    pub constant: i64,
}

impl Relation {
    pub fn assignment(family: &str, t: TorusType, d: u32, value: i64) -> Self {
        Relation {
            family: family.into(),
            terms: vec![(t, d, 1)],
            constant: value,
        }
    }

    pub fn holds_in(&self, table: &WeightTable) -> bool {
        self.terms
            .iter()
            .map(|(t, d, c)| c * table.weight(*t, *d))
            .sum::<i64>()
            == self.constant
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (t, d, c)) in self.terms.iter().enumerate() {
            let sign = match (i, *c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let mag = if c.abs() == 1 { String::new() } else { format!("{}*", c.abs()) };
            write!(f, "{sign}{mag}n_{{{t}}}^{d}")?;
        }
        write!(f, " = {}", self.constant)
    }
}

/// The ledger of one doubling wall whose child lives on the side where the
/// base has sign map `delta`: `n_child^d + n_with^{2d} = n_other^{2d}`.
pub fn doubling_relation(delta: &DeltaMap, iota0: Z2Class, d: u32) -> Result<Relation> {
    let with = type_of(delta);
    let other = type_of(&delta.flipped(iota0));
    let child = type_of(&propagate_double(delta, iota0)?);
    let terms = vec![(child, d, 1), (with, 2 * d, 1), (other, 2 * d, -1)];
    Ok(Relation {
        family: "doubling".into(),
        terms,
        constant: 0,
    })
}

/// Degree-one values, antisymmetry, and every doubling wall (all sixteen
/// sign maps, all three `ι₀`) between degrees `d` and `2d ≤ 2^max_power`.
pub fn relation_system(max_power: u32) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for t in TorusType::all() {
        out.push(Relation::assignment("degree one", t, 1, t.sign as i64));
    }
    for j in 1..=max_power {
        let big = 1u32 << j;
        for k in 0..4 {
            out.push(Relation {
                family: "birth-death".into(),
                terms: vec![(TorusType::plus(k), big, 1), (TorusType::minus(k), big, 1)],
                constant: 0,
            });
        }
        for delta in DeltaMap::all() {
            for iota0 in Z2Class::NONZERO {
                out.push(doubling_relation(&delta, iota0, big / 2)?);
            }
        }
    }
    Ok(out)
}

pub fn solve_weight_table(max_power: u32, normalization: &[i64]) -> Result<WeightTable> {
    solve_weight_table_with(max_power, normalization, &[])
}

/// Solves the relation system together with `n_{+0}^{2^j} = normalization[j-1]`
/// and any `extra` relations.
pub fn solve_weight_table_with(
    max_power: u32,
    normalization: &[i64],
    extra: &[Relation],
) -> Result<WeightTable> {
    if max_power == 0 || max_power > 8 {
        return Err(Error::InvalidInput(format!("max_power {max_power} is outside 1..=8")));
    }
    if normalization.len() != max_power as usize {
        return Err(Error::InvalidInput(format!(
            "normalization needs {max_power} values for n_{{+0}}^{{2^j}}, got {}",
            normalization.len()
        )));
    }
    let mut relations = relation_system(max_power)?;
    for (j, v) in normalization.iter().enumerate() {
        relations.push(Relation::assignment(
            "normalization",
            TorusType::plus(0),
            1 << (j + 1),
            *v,
        ));
    }
    relations.extend_from_slice(extra);

    let unknowns: Vec<(TorusType, u32)> = (0..=max_power)
        .flat_map(|j| TorusType::all().map(move |t| (t, 1u32 << j)))
        .collect();
    let index: BTreeMap<_, _> = unknowns.iter().enumerate().map(|(i, u)| (*u, i)).collect();
    let n = unknowns.len();
    let mut m = Matrix::zeros(relations.len(), n + 1);
    for (r, rel) in relations.iter().enumerate() {
        for (t, d, c) in &rel.terms {
            let col = *index.get(&(*t, *d)).ok_or_else(|| {
                Error::InvalidInput(format!("relation mentions n_{{{t}}}^{d} outside the degree range"))
            })?;
            m.set(r, col, m.get(r, col) + int(*c));
        }
        m.set(r, n, int(rel.constant));
    }
    let (reduced, pivots) = m.rref();
    if pivots.contains(&n) {
        let culprit = relations
            .iter()
            .filter(|r| r.family == "normalization" || r.family == "injected")
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::Inconsistent(format!(
            "no table satisfies the wall relations together with {culprit}"
        )));
    }
    if pivots.len() < n {
        return Err(Error::Underdetermined(n - pivots.len()));
    }
    let mut table = WeightTable::empty("solved");
    for (row, col) in pivots.iter().enumerate() {
        let v: &Rational = reduced.get(row, n);
        let v = v.to_integer().to_i64().filter(|_| v.is_integer()).ok_or_else(|| {
            Error::Inconsistent(format!("n_{{{}}}^{} = {v} is not an integer", unknowns[*col].0, unknowns[*col].1))
        })?;
        let (t, d) = unknowns[*col];
        table.set(t, d, v);
    }
    Ok(table)
}
