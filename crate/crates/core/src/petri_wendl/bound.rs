use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::bound_hypothesis;
use super::kernel::{petri_kernel_basis, PetriKernelElement};
use super::wendl::graded_ranks;
use crate::error::{Error, Result};
use crate::exactalg::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub l: u32,
    pub columns: usize,
    pub rank: usize,
    pub bound: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WendlBoundReport {
    pub degree: u32,
    pub per_l: Vec<BoundRow>,
    /// Least `l0` such that `rank ≥ ⌈l/2⌉` for every `l` in `l0..=max(l_values)`.
    pub empirical_threshold: u32,
    /// `rk L^{≤l}` for `l = 0..=max(l_values)`.
    pub cumulative_ranks: Vec<usize>,
}

impl WendlBoundReport {
    pub fn pass(&self) -> bool {
        self.per_l.iter().all(|r| r.pass)
    }
}

fn columns_up_to(l: u32) -> usize {
    let l = l as usize;
    (l + 1) * (l + 2) / 2
}

/// Rank rows and threshold without enforcing the hypothesis or the bound.
pub fn wendl_bound_rows(b: &PetriKernelElement, l_values: &[u32]) -> WendlBoundReport {
    let lmax = l_values.iter().copied().max().unwrap_or(0);
    let cumulative: Vec<usize> = graded_ranks(b.tensor(), lmax)
        .into_iter()
        .scan(0, |acc, r| {
            *acc += r;
            Some(*acc)
        })
        .collect();
    let holds = |l: u32| cumulative[l as usize] >= (l as usize).div_ceil(2);
    let per_l = l_values
        .iter()
        .map(|&l| BoundRow {
            l,
            columns: columns_up_to(l),
            rank: cumulative[l as usize],
            bound: (l as usize).div_ceil(2),
            pass: holds(l),
        })
        .collect();
    let mut threshold = lmax + 1;
    while threshold > 0 && holds(threshold - 1) {
        threshold -= 1;
    }
    WendlBoundReport {
        degree: b.degree(),
        per_l,
        empirical_threshold: threshold,
        cumulative_ranks: cumulative,
    }
}

/// Checks `rk L_B^{≤l} ≥ ⌈l/2⌉` for each requested `l`.
///
/// Rejects a zero `B` and any `l` below `10d+6`. A rank under the bound is
/// returned as [`Error::BoundViolated`] for the first offending `l`.
pub fn verify_wendl_bound(b: &PetriKernelElement, l_values: &[u32]) -> Result<WendlBoundReport> {
    if b.is_zero() {
        return Err(Error::Precondition("kernel element is zero".into()));
    }
    let min = bound_hypothesis(b.degree());
    if let Some(&l) = l_values.iter().find(|&&l| l < min) {
        return Err(Error::Precondition(format!(
            "l = {l} is below 10d+6 = {min} for degree {}",
            b.degree()
        )));
    }
    let report = wendl_bound_rows(b, l_values);
    if let Some(row) = report.per_l.iter().find(|r| !r.pass) {
        return Err(Error::BoundViolated {
            l: row.l,
            rank: row.rank,
            bound: row.bound,
        });
    }
    Ok(report)
}

/// The kernel basis of degree `d` followed by `extra` random combinations
/// with integer coefficients in `-3..=3`, not all zero.
pub fn sample_kernel_elements(d: u32, extra: usize, seed: u64) -> Vec<PetriKernelElement> {
    let basis = petri_kernel_basis(d);
    let mut out = basis.clone();
    if basis.is_empty() {
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(d));
    while out.len() < basis.len() + extra {
        let coeffs: Vec<Rational> = (0..basis.len()).map(|_| int(rng.gen_range(-3..=3))).collect();
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        let e = PetriKernelElement::combine(&basis, &coeffs).expect("combination of kernel elements");
        out.push(e);
    }
    out
}
