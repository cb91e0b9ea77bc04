use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A class in `H¹(T, ℤ₂) ≅ ℤ₂²`, i.e. a double cover of the torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2Class {
    pub a: u8,
    pub b: u8,
}

impl Z2Class {
    pub const ZERO: Z2Class = Z2Class { a: 0, b: 0 };
    pub const E1: Z2Class = Z2Class { a: 1, b: 0 };
    pub const E2: Z2Class = Z2Class { a: 0, b: 1 };
    pub const E12: Z2Class = Z2Class { a: 1, b: 1 };
    pub const ALL: [Z2Class; 4] = [Z2Class::ZERO, Z2Class::E1, Z2Class::E2, Z2Class::E12];
    pub const NONZERO: [Z2Class; 3] = [Z2Class::E1, Z2Class::E2, Z2Class::E12];

    pub fn new(a: u8, b: u8) -> Result<Self> {
        if a > 1 || b > 1 {
            return Err(Error::InvalidInput(format!("({a},{b}) is not a class mod 2")));
        }
        Ok(Z2Class { a, b })
    }

    pub fn is_zero(self) -> bool {
        self == Z2Class::ZERO
    }

    pub fn plus(self, other: Z2Class) -> Z2Class {
        Z2Class {
            a: self.a ^ other.a,
            b: self.b ^ other.b,
        }
    }

    fn index(self) -> usize {
        (self.a + 2 * self.b) as usize
    }
}

impl fmt::Display for Z2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.a, self.b)
    }
}

impl FromStr for Z2Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "00" => Ok(Z2Class::ZERO),
            "10" => Ok(Z2Class::E1),
            "01" => Ok(Z2Class::E2),
            "11" => Ok(Z2Class::E12),
            _ => Err(Error::Parse(format!("{s:?} is not one of 00, 10, 01, 11"))),
        }
    }
}

impl Serialize for Z2Class {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Z2Class {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `δ: H¹(T, ℤ₂) → {±1}`, the sign of the determinant of the Jacobi
/// operator twisted by each double cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMap {
    signs: [i8; 4],
}

impl DeltaMap {
    pub const PLUS: DeltaMap = DeltaMap { signs: [1; 4] };

    /// Signs in the order `00, 10, 01, 11`.
    pub fn from_signs(signs: [i8; 4]) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidInput(format!("{signs:?} contains a value other than ±1")));
        }
        Ok(DeltaMap { signs })
    }

    pub fn get(&self, c: Z2Class) -> i8 {
        self.signs[c.index()]
    }

    pub fn with(mut self, c: Z2Class, sign: i8) -> DeltaMap {
        assert!(sign == 1 || sign == -1);
        self.signs[c.index()] = sign;
        self
    }

    pub fn flipped(self, c: Z2Class) -> DeltaMap {
        let s = self.get(c);
        self.with(c, -s)
    }

    /// All sixteen sign maps.
    pub fn all() -> impl Iterator<Item = DeltaMap> {
        (0u8..16).map(|bits| DeltaMap {
            signs: std::array::from_fn(|i| if bits >> i & 1 == 1 { -1 } else { 1 }),
        })
    }

    /// A representative of the given type: the first `k` nontrivial classes
    /// in the order `10, 01, 11` get `-1`.
    pub fn of_type(t: TorusType) -> DeltaMap {
        let mut d = DeltaMap::PLUS.with(Z2Class::ZERO, t.sign);
        for c in Z2Class::NONZERO.iter().take(t.k as usize) {
            d = d.with(*c, -1);
        }
        d
    }
}

impl Serialize for DeltaMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, i8> = Z2Class::ALL
            .iter()
            .map(|c| (c.to_string(), self.get(*c)))
            .collect();
        m.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DeltaMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let m = BTreeMap::<String, i8>::deserialize(d)?;
        let mut signs = [0i8; 4];
        for (k, v) in &m {
            let c: Z2Class = k.parse().map_err(D::Error::custom)?;
            signs[c.index()] = *v;
        }
        if m.len() != 4 {
            return Err(D::Error::custom("delta map must list all four classes"));
        }
        DeltaMap::from_signs(signs).map_err(D::Error::custom)
    }
}

/// Type `±k`: the sign at the trivial class and the number of nontrivial
/// classes with sign `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusType {
    pub sign: i8,
    pub k: u8,
}

impl TorusType {
    pub fn new(sign: i8, k: u8) -> Result<Self> {
        if (sign != 1 && sign != -1) || k > 3 {
            return Err(Error::InvalidInput(format!("no torus type with sign {sign} and k = {k}")));
        }
        Ok(TorusType { sign, k })
    }

    pub fn plus(k: u8) -> Self {
        TorusType::new(1, k).expect("k ≤ 3")
    }

    pub fn minus(k: u8) -> Self {
        TorusType::new(-1, k).expect("k ≤ 3")
    }

    pub fn opposite(self) -> Self {
        TorusType {
            sign: -self.sign,
            k: self.k,
        }
    }

    /// All eight types, `+0..+3` then `-0..-3`.
    pub fn all() -> impl Iterator<Item = TorusType> {
        [1i8, -1].into_iter().flat_map(|s| (0..4).map(move |k| TorusType { sign: s, k }))
    }
}

impl fmt::Display for TorusType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign > 0 { '+' } else { '-' }, self.k)
    }
}

impl FromStr for TorusType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let sign = match chars.next() {
            Some('+') => 1,
            Some('-') => -1,
            _ => return Err(Error::Parse(format!("torus type {s:?} must start with + or -"))),
        };
        let k: u8 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("torus type {s:?} needs a digit 0..3")))?;
        TorusType::new(sign, k)
    }
}

impl Serialize for TorusType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TorusType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn type_of(delta: &DeltaMap) -> TorusType {
    let k = Z2Class::NONZERO.iter().filter(|c| delta.get(**c) == -1).count() as u8;
    TorusType {
        sign: delta.get(Z2Class::ZERO),
        k,
    }
}

/// `π*: H¹(T) → H¹(T₀)` for the double cover `T₀ → T` classified by `ι₀`.
///
/// Classes of the cover `T₀` are written in coordinates in which the image
/// of `π*` is `{00, image_class}`. The kernel is `{00, ι₀}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PullbackStructure {
    pub iota0: Z2Class,
    pub image: [Z2Class; 2],
    /// Fibers of `π*` over the two image classes, as classes of `T`.
    pub fibers: BTreeMap<Z2Class, [Z2Class; 2]>,
    /// The two classes of `T₀` not in the image.
    pub outside: [Z2Class; 2],
}

impl PullbackStructure {
    pub fn pullback(&self, kappa: Z2Class) -> Z2Class {
        *self
            .fibers
            .iter()
            .find(|(_, f)| f.contains(&kappa))
            .map(|(c, _)| c)
            .expect("fibers cover H¹(T)")
    }
}

pub fn pullback_structure(iota0: Z2Class) -> Result<PullbackStructure> {
    let image_class = match iota0 {
        Z2Class::E1 => Z2Class::E2,
        Z2Class::E2 | Z2Class::E12 => Z2Class::E1,
        _ => return Err(Error::InvalidInput("ι₀ must be a nontrivial class".into())),
    };
    let kappa = Z2Class::NONZERO
        .into_iter()
        .find(|c| *c != iota0)
        .expect("two other nonzero classes");
    let fibers = BTreeMap::from([
        (Z2Class::ZERO, [Z2Class::ZERO, iota0]),
        (image_class, [kappa, kappa.plus(iota0)]),
    ]);
    let outside: Vec<Z2Class> = Z2Class::NONZERO
        .into_iter()
        .filter(|c| *c != image_class)
        .collect();
    Ok(PullbackStructure {
        iota0,
        image: [Z2Class::ZERO, image_class],
        fibers,
        outside: [outside[0], outside[1]],
    })
}

/// Sign map of the embedded torus `T₀` that appears near the double cover
/// of `T` classified by `ι₀`:
///
/// * `δ'(0) = -δ(ι₀) δ(0)`
/// * `δ'(ι) = Π_{π*κ = ι} δ(κ)` for the nonzero image class
/// * `δ'(ι) = +1` off the image
pub fn propagate_double(delta: &DeltaMap, iota0: Z2Class) -> Result<DeltaMap> {
    let pb = pullback_structure(iota0)?;
    let mut out = DeltaMap::PLUS.with(Z2Class::ZERO, -delta.get(iota0) * delta.get(Z2Class::ZERO));
    let image_class = pb.image[1];
    let fiber = pb.fibers[&image_class];
    out = out.with(image_class, delta.get(fiber[0]) * delta.get(fiber[1]));
    Ok(out)
}
