//! Cyclic local systems on orbifold Riemann surfaces and the index
//! bookkeeping of twisted Jacobi operators.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{int, rat, Rational};

/// Orders `ϖ(x) ≥ 2` at finitely many points, `1` elsewhere.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityFunction {
    points: BTreeMap<String, u32>,
}

impl MultiplicityFunction {
    pub fn new(points: BTreeMap<String, u32>) -> Result<Self> {
        if let Some((id, order)) = points.iter().find(|(_, &o)| o < 2) {
            return Err(Error::InvalidInput(format!(
                "point {id} has order {order}, orbifold orders must be at least 2"
            )));
        }
        Ok(MultiplicityFunction { points })
    }

    pub fn empty() -> Self {
        MultiplicityFunction::default()
    }

    /// `ϖ(x)`, which is 1 off the support.
    pub fn order(&self, id: &str) -> u32 {
        self.points.get(id).copied().unwrap_or(1)
    }

    /// The support `Z_ϖ`.
    pub fn support(&self) -> impl Iterator<Item = &str> {
        self.points.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `z ↦ diag(z^{w₁}, …, z^{w_r})` for the cyclic group of order `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicRep {
    order: u32,
    weights: Vec<u32>,
}

impl CyclicRep {
    pub fn new(order: u32, weights: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("cyclic group order must be positive".into()));
        }
        if let Some(w) = weights.iter().find(|&&w| w >= order) {
            return Err(Error::InvalidInput(format!(
                "weight {w} is not reduced mod {order}"
            )));
        }
        Ok(CyclicRep { order, weights })
    }

    pub fn trivial(order: u32, rank: usize) -> Self {
        CyclicRep {
            order: order.max(1),
            weights: vec![0; rank],
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }
}

/// `dim V^ρ`: the number of zero weights.
pub fn invariant_dim(rep: &CyclicRep) -> usize {
    rep.weights.iter().filter(|&&w| w == 0).count()
}

/// `dim V/V^ρ`.
pub fn quotient_dim(rep: &CyclicRep) -> usize {
    rep.rank() - invariant_dim(rep)
}

/// A rank-`r` Euclidean local system with cyclic monodromy at each orbifold
/// point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSystem {
    rank: usize,
    monodromy: BTreeMap<String, CyclicRep>,
}

impl LocalSystem {
    pub fn new(rank: usize, monodromy: BTreeMap<String, CyclicRep>) -> Result<Self> {
        if let Some((id, rep)) = monodromy.iter().find(|(_, r)| r.rank() != rank) {
            return Err(Error::InvalidInput(format!(
                "monodromy at {id} has {} weights, the local system has rank {rank}",
                rep.rank()
            )));
        }
        Ok(LocalSystem { rank, monodromy })
    }

    /// Checks that the monodromy is given exactly on `Z_ϖ` with matching
    /// orders.
    pub fn on(multiplicity: &MultiplicityFunction, rank: usize, monodromy: BTreeMap<String, CyclicRep>) -> Result<Self> {
        let ls = LocalSystem::new(rank, monodromy)?;
        ls.check_against(multiplicity)?;
        Ok(ls)
    }

    pub fn check_against(&self, multiplicity: &MultiplicityFunction) -> Result<()> {
        for (id, rep) in &self.monodromy {
            let order = multiplicity.order(id);
            if order != rep.order() {
                return Err(Error::InvalidInput(format!(
                    "monodromy at {id} has order {}, the multiplicity is {order}",
                    rep.order()
                )));
            }
        }
        if let Some(id) = multiplicity.support().find(|id| !self.monodromy.contains_key(*id)) {
            return Err(Error::InvalidInput(format!("no monodromy given at orbifold point {id}")));
        }
        Ok(())
    }

    pub fn trivial(multiplicity: &MultiplicityFunction, rank: usize) -> Self {
        LocalSystem {
            rank,
            monodromy: multiplicity
                .points
                .iter()
                .map(|(id, &k)| (id.clone(), CyclicRep::trivial(k, rank)))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn monodromy(&self) -> &BTreeMap<String, CyclicRep> {
        &self.monodromy
    }

    /// The multiplicity function read off the monodromy orders. Points of
    /// order 1 are left out.
    pub fn multiplicity(&self) -> MultiplicityFunction {
        MultiplicityFunction {
            points: self
                .monodromy
                .iter()
                .filter(|(_, r)| r.order() > 1)
                .map(|(id, r)| (id.clone(), r.order()))
                .collect(),
        }
    }

    /// `dim V/V^{ρ_x}` per point, in point order.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.monodromy.values().map(quotient_dim).collect()
    }

    pub fn total_quotient(&self) -> usize {
        self.quotient_dims().iter().sum()
    }

    /// `N ⊗ V` for a normal bundle `N` of complex rank `rk` with trivial
    /// monodromy: each weight is repeated `rk` times.
    pub fn tensor_trivial(&self, rk: usize) -> LocalSystem {
        LocalSystem {
            rank: self.rank * rk,
            monodromy: self
                .monodromy
                .iter()
                .map(|(id, rep)| {
                    let weights = rep.weights.iter().flat_map(|&w| std::iter::repeat_n(w, rk)).collect();
                    (id.clone(), CyclicRep { order: rep.order, weights })
                })
                .collect(),
        }
    }
}

/// `χ(E_{ϖ,ρ}) = χ(E_ϖ) - Σ_x dim E_x/E_x^{ρ_x}`.
pub fn hecke_euler_char(chi_base: &Rational, ls: &LocalSystem) -> Rational {
    chi_base - int(ls.total_quotient() as i64)
}

/// `deg 𝒱_ϖ = ½ Σ_x dim V/V^{ρ_x}`.
pub fn local_system_degree(ls: &LocalSystem) -> Rational {
    rat(ls.total_quotient() as i64, 2)
}

/// Which normalization of the twisted index to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexConvention {
    /// `-rk Σ dim V/V^ρ`.
    Statement,
    /// `-½ rk Σ dim V/V^ρ`.
    #[default]
    Proof,
}

impl std::str::FromStr for IndexConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "statement" => Ok(IndexConvention::Statement),
            "proof" => Ok(IndexConvention::Proof),
            other => Err(Error::Parse(format!("unknown index convention {other:?}"))),
        }
    }
}

impl std::fmt::Display for IndexConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            IndexConvention::Statement => "statement",
            IndexConvention::Proof => "proof",
        })
    }
}

/// Closed form of the twisted index from the per-point quotient dimensions.
pub fn twisted_index_from_quotients(rk: u32, quotients: &[usize], convention: IndexConvention) -> Result<Rational> {
    if rk == 0 {
        return Err(Error::Precondition("normal bundle rank must be at least 1".into()));
    }
    let total = int(quotients.iter().sum::<usize>() as i64) * int(rk as i64);
    Ok(match convention {
        IndexConvention::Statement => -total,
        IndexConvention::Proof => -total / int(2),
    })
}

/// `index 𝒥^V` for a normal bundle of complex rank `rk`.
pub fn twisted_index(rk: u32, ls: &LocalSystem, convention: IndexConvention) -> Result<Rational> {
    twisted_index_from_quotients(rk, &ls.quotient_dims(), convention)
}

/// The proof-convention index through Riemann–Roch.
///
/// `χ(N ⊗ V) = dim V · index 𝒥 + rk · deg V` before the Hecke modification,
/// with `index 𝒥 = 0`. Twisting `N ⊗ V` at each point then subtracts its
/// quotient dimension, which is `rk` times that of `V`.
pub fn twisted_index_riemann_roch(rk: u32, ls: &LocalSystem) -> Result<Rational> {
    if rk == 0 {
        return Err(Error::Precondition("normal bundle rank must be at least 1".into()));
    }
    let untwisted = int(untwisted_index_check(&ls.multiplicity()));
    let chi_base = int(ls.rank() as i64) * untwisted + int(rk as i64) * local_system_degree(ls);
    Ok(hecke_euler_char(&chi_base, &ls.tensor_trivial(rk as usize)))
}

/// Rank 1..=4 with 0..=4 orbifold points of order 2..=7 and uniform random
/// weights.
pub fn random_local_system<R: rand::Rng>(rng: &mut R) -> LocalSystem {
    let rank = rng.gen_range(1..=4);
    let monodromy = (0..rng.gen_range(0..=4))
        .map(|i| {
            let order = rng.gen_range(2..=7);
            let weights = (0..rank).map(|_| rng.gen_range(0..order)).collect();
            (format!("x{i}"), CyclicRep::new(order, weights).expect("weights below the order"))
        })
        .collect();
    LocalSystem::new(rank, monodromy).expect("ranks agree")
}

/// Index of the pulled-back Jacobi operator on the orbifold, computed as the
/// twisted index of the trivial rank-one system. Always 0.
pub fn untwisted_index_check(multiplicity: &MultiplicityFunction) -> i64 {
    let trivial = LocalSystem::trivial(multiplicity, 1);
    let index = twisted_index(1, &trivial, IndexConvention::Statement).expect("rank 1 is valid");
    i64::try_from(index.to_integer()).expect("index fits")
}

/// Drops the orbifold points where the monodromy is trivial.
pub fn normalize_multiplicity(
    multiplicity: &MultiplicityFunction,
    ls: &LocalSystem,
) -> Result<(MultiplicityFunction, LocalSystem)> {
    ls.check_against(multiplicity)?;
    let monodromy: BTreeMap<String, CyclicRep> = ls
        .monodromy
        .iter()
        .filter(|(_, rep)| !rep.is_trivial())
        .map(|(id, rep)| (id.clone(), rep.clone()))
        .collect();
    let points = monodromy.iter().map(|(id, r)| (id.clone(), r.order())).collect();
    Ok((
        MultiplicityFunction { points },
        LocalSystem {
            rank: ls.rank,
            monodromy,
        },
    ))
}

/// Minimal kernel dimension of `D^V` for a degree-`d` cover: 0 without
/// kernel, 1 for `d ≤ 2`, 2 otherwise.
pub fn kernel_dim_rule(d: u32, ker_nontrivial: bool) -> u32 {
    match (ker_nontrivial, d) {
        (false, _) => 0,
        (true, 0..=2) => 1,
        (true, _) => 2,
    }
}

/// Permutations of `{1..d}` assigned to generators of the fundamental group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSpec {
    pub degree: usize,
    pub generator_images: Vec<Vec<usize>>,
}

impl CoverSpec {
    pub fn new(degree: usize, generator_images: Vec<Vec<usize>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidInput("cover degree must be positive".into()));
        }
        for img in &generator_images {
            let seen: BTreeSet<usize> = img.iter().copied().collect();
            if img.len() != degree || seen != (1..=degree).collect() {
                return Err(Error::InvalidInput(format!(
                    "{img:?} is not a permutation of 1..={degree}"
                )));
            }
        }
        Ok(CoverSpec {
            degree,
            generator_images,
        })
    }

    /// A cover of the torus. The two images must commute, since `π₁(T²)` is
    /// abelian.
    pub fn torus(degree: usize, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        let cover = CoverSpec::new(degree, vec![a, b])?;
        let (a, b) = (to_zero_based(&cover.generator_images[0]), to_zero_based(&cover.generator_images[1]));
        if compose(&a, &b) != compose(&b, &a) {
            return Err(Error::InvalidInput("torus generator images must commute".into()));
        }
        Ok(cover)
    }

    fn zero_based(&self) -> Vec<Vec<usize>> {
        self.generator_images.iter().map(|g| to_zero_based(g)).collect()
    }
}

fn to_zero_based(p: &[usize]) -> Vec<usize> {
    p.iter().map(|&i| i - 1).collect()
}

/// `(p ∘ q)(i) = p(q(i))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

/// A finite permutation group on `{0..degree}`, stored as its full element
/// list in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Vec<usize>>,
}

impl PermutationGroup {
    /// Closure of the generators (zero-based images) under composition.
    pub fn generated_by(degree: usize, generators: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for s in generators {
                let h = compose(s, &g);
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        PermutationGroup {
            degree,
            elements: seen.into_iter().collect(),
        }
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut swap: Vec<usize> = (0..degree).collect();
            swap.swap(0, 1);
            let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
            gens = vec![swap, cycle];
        }
        PermutationGroup::generated_by(degree, &gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || (0..self.degree).all(|j| self.elements.iter().any(|g| g[0] == j))
    }
}

pub fn fixed_points(g: &[usize]) -> usize {
    g.iter().enumerate().filter(|(i, &j)| *i == j).count()
}

/// Burnside count `(1/|G|) Σ_g #Fix(g)`: the dimension of the invariants of
/// the permutation representation.
pub fn group_invariant_dim(group: &PermutationGroup) -> usize {
    let total: usize = group.elements.iter().map(|g| fixed_points(g)).sum();
    assert_eq!(total % group.order(), 0, "Burnside sum is divisible by |G|");
    total / group.order()
}

/// `φ_* ℝ` for a connected cover: the rank-`d` permutation representation
/// together with the finite group through which the monodromy factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pushforward {
    pub rank: usize,
    pub group: PermutationGroup,
    /// `#Fix(g)` for each group element, in the group's element order.
    pub fixed_point_counts: Vec<usize>,
}

impl Pushforward {
    pub fn invariant_dim(&self) -> usize {
        group_invariant_dim(&self.group)
    }
}

pub fn pushforward_local_system(cover: &CoverSpec) -> Result<Pushforward> {
    let group = PermutationGroup::generated_by(cover.degree, &cover.zero_based());
    if !group.is_transitive() {
        return Err(Error::DisconnectedCover(cover.degree));
    }
    let fixed_point_counts = group.elements.iter().map(|g| fixed_points(g)).collect();
    Ok(Pushforward {
        rank: cover.degree,
        group,
        fixed_point_counts,
    })
}

/// JSON input of the `index` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSpec {
    pub rank_normal: u32,
    #[serde(default)]
    pub convention: IndexConvention,
    #[serde(default)]
    pub points: Vec<PointSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSpec {
    pub id: String,
    pub order: u32,
    pub weights: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub convention: IndexConvention,
    pub index: String,
    pub riemann_roch_index: String,
    pub degree: String,
    pub per_point_quotients: Vec<PointQuotient>,
    pub normalized_points: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointQuotient {
    pub id: String,
    pub quotient_dim: usize,
}

impl IndexSpec {
    pub fn local_system(&self) -> Result<(MultiplicityFunction, LocalSystem)> {
        let rank = self.points.first().map_or(0, |p| p.weights.len());
        let mut orders = BTreeMap::new();
        let mut monodromy = BTreeMap::new();
        for p in &self.points {
            if orders.insert(p.id.clone(), p.order).is_some() {
                return Err(Error::InvalidInput(format!("duplicate point id {}", p.id)));
            }
            monodromy.insert(p.id.clone(), CyclicRep::new(p.order, p.weights.clone())?);
        }
        let multiplicity = MultiplicityFunction::new(orders)?;
        let ls = LocalSystem::on(&multiplicity, rank, monodromy)?;
        Ok((multiplicity, ls))
    }

    pub fn evaluate(&self) -> Result<IndexReport> {
        let (multiplicity, ls) = self.local_system()?;
        let index = twisted_index(self.rank_normal, &ls, self.convention)?;
        let rr = twisted_index_riemann_roch(self.rank_normal, &ls)?;
        let (normalized, _) = normalize_multiplicity(&multiplicity, &ls)?;
        Ok(IndexReport {
            convention: self.convention,
            index: index.to_string(),
            riemann_roch_index: rr.to_string(),
            degree: local_system_degree(&ls).to_string(),
            per_point_quotients: ls
                .monodromy()
                .iter()
                .map(|(id, rep)| PointQuotient {
                    id: id.clone(),
                    quotient_dim: quotient_dim(rep),
                })
                .collect(),
            normalized_points: normalized.support().map(str::to_string).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(k: u32, w: &[u32]) -> CyclicRep {
        CyclicRep::new(k, w.to_vec()).unwrap()
    }

    fn system(points: &[(&str, u32, &[u32])]) -> LocalSystem {
        let rank = points.first().map_or(1, |p| p.2.len());
        LocalSystem::new(
            rank,
            points.iter().map(|(id, k, w)| (id.to_string(), rep(*k, w))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn invariant_and_quotient_dims() {
        assert_eq!(invariant_dim(&rep(2, &[0, 1])), 1);
        assert_eq!(invariant_dim(&rep(3, &[0, 0, 0])), 3);
        assert_eq!(invariant_dim(&rep(4, &[1, 2, 3])), 0);
        assert_eq!(quotient_dim(&rep(2, &[0, 1])), 1);
        assert_eq!(quotient_dim(&rep(5, &[1, 2, 3, 4])), 4);
        assert_eq!(quotient_dim(&rep(2, &[0, 0])), 0);
        assert!(CyclicRep::new(3, vec![3]).is_err());
    }

    #[test]
    fn euler_characteristic_and_degree() {
        let ls = system(&[("a", 2, &[1, 0]), ("b", 3, &[1, 2])]);
        assert_eq!(hecke_euler_char(&int(0), &ls), int(-3));
        assert_eq!(hecke_euler_char(&int(5), &system(&[])), int(5));
        assert_eq!(hecke_euler_char(&int(5), &system(&[("a", 2, &[1])])), int(4));
        assert_eq!(local_system_degree(&system(&[("a", 2, &[1]), ("b", 2, &[1])])), int(1));
        assert_eq!(local_system_degree(&system(&[])), int(0));
        assert_eq!(local_system_degree(&system(&[("a", 2, &[1])])), rat(1, 2));
    }

    #[test]
    fn twisted_index_examples() {
        let one = system(&[("p", 2, &[1])]);
        assert_eq!(twisted_index(6, &one, IndexConvention::Proof).unwrap(), int(-3));
        assert_eq!(twisted_index(6, &one, IndexConvention::Statement).unwrap(), int(-6));
        assert_eq!(twisted_index(3, &system(&[]), IndexConvention::Proof).unwrap(), int(0));
        let two = system(&[("p", 2, &[1]), ("q", 2, &[1])]);
        assert_eq!(twisted_index(4, &two, IndexConvention::Proof).unwrap(), int(-4));
        assert!(twisted_index(0, &two, IndexConvention::Proof).is_err());
        for ls in [one, two] {
            assert_eq!(
                twisted_index_riemann_roch(6, &ls).unwrap(),
                twisted_index(6, &ls, IndexConvention::Proof).unwrap()
            );
        }
    }

    #[test]
    fn untwisted_index_is_zero() {
        assert_eq!(untwisted_index_check(&MultiplicityFunction::empty()), 0);
        let one = MultiplicityFunction::new(BTreeMap::from([("x".to_string(), 3)])).unwrap();
        assert_eq!(untwisted_index_check(&one), 0);
        let five = MultiplicityFunction::new((0..5).map(|i| (format!("p{i}"), 2 + i)).collect()).unwrap();
        assert_eq!(untwisted_index_check(&five), 0);
    }

    #[test]
    fn normalization_drops_trivial_points() {
        let ls = system(&[("a", 2, &[0, 0]), ("b", 3, &[1, 0])]);
        let w = ls.multiplicity();
        let (w2, ls2) = normalize_multiplicity(&w, &ls).unwrap();
        assert_eq!(w2.support().collect::<Vec<_>>(), vec!["b"]);
        assert!(ls2.quotient_dims().iter().all(|&q| q >= 1));
        assert_eq!(normalize_multiplicity(&w2, &ls2).unwrap(), (w2.clone(), ls2.clone()));
        let empty = system(&[]);
        let (w3, _) = normalize_multiplicity(&MultiplicityFunction::empty(), &empty).unwrap();
        assert!(w3.is_empty());
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let w = MultiplicityFunction::new(BTreeMap::from([("a".to_string(), 3)])).unwrap();
        let mono = BTreeMap::from([("a".to_string(), rep(2, &[1]))]);
        assert!(LocalSystem::on(&w, 1, mono).is_err());
        assert!(MultiplicityFunction::new(BTreeMap::from([("a".to_string(), 1)])).is_err());
    }

    #[test]
    fn pushforward_examples() {
        let swap = CoverSpec::torus(2, vec![2, 1], vec![1, 2]).unwrap();
        let pf = pushforward_local_system(&swap).unwrap();
        assert_eq!(pf.rank, 2);
        assert_eq!(pf.group.order(), 2);
        assert_eq!(pf.fixed_point_counts, vec![2, 0]);
        let trivial = pushforward_local_system(&CoverSpec::new(1, vec![vec![1], vec![1]]).unwrap()).unwrap();
        assert_eq!((trivial.rank, trivial.invariant_dim()), (1, 1));
        let cyc = CoverSpec::torus(3, vec![2, 3, 1], vec![1, 2, 3]).unwrap();
        assert_eq!(pushforward_local_system(&cyc).unwrap().invariant_dim(), 1);
        let split = CoverSpec::new(2, vec![vec![1, 2], vec![1, 2]]).unwrap();
        assert_eq!(pushforward_local_system(&split), Err(Error::DisconnectedCover(2)));
        assert!(CoverSpec::torus(3, vec![2, 1, 3], vec![1, 3, 2]).is_err());
    }

    #[test]
    fn burnside_counts() {
        assert_eq!(group_invariant_dim(&PermutationGroup::generated_by(4, &[])), 4);
        let s3 = PermutationGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(group_invariant_dim(&s3), 1);
        let z2 = PermutationGroup::generated_by(2, &[vec![1, 0]]);
        assert_eq!(group_invariant_dim(&z2), 1);
    }

    #[test]
    fn kernel_dimension_rule() {
        assert_eq!(kernel_dim_rule(2, true), 1);
        assert_eq!(kernel_dim_rule(5, true), 2);
        assert_eq!(kernel_dim_rule(7, false), 0);
        assert_eq!(kernel_dim_rule(1, false), 0);
    }

    #[test]
    fn index_spec_round_trip() {
        let spec: IndexSpec = serde_json::from_str(
            r#"{"rank_normal": 6, "points": [{"id": "p", "order": 2, "weights": [1]}]}"#,
        )
        .unwrap();
        assert_eq!(spec.convention, IndexConvention::Proof);
        let report = spec.evaluate().unwrap();
        assert_eq!(report.index, "-3");
        assert_eq!(report.riemann_roch_index, "-3");
        assert_eq!(report.degree, "1/2");
        let bad: IndexSpec = serde_json::from_str(
            r#"{"rank_normal": 6, "points": [{"id": "p", "order": 1, "weights": [0]}]}"#,
        )
        .unwrap();
        assert!(bad.evaluate().is_err());
    }
}
