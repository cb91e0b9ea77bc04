//! The polynomial Petri map of the Laplacian symbol and Wendl's rank
//! condition.
//!
//! Kernel elements are degree-`d` tensors of harmonic polynomials whose
//! pointwise product vanishes. For such a `B` the Wendl map sends a
//! monomial `A` to `ω̂((R̂A ⊗ 1 + 1 ⊗ R̂A) B)`, where `R̂` is the explicit right
//! inverse from [`crate::exactalg::right_inverse`] and the monomial is
//! multiplied into the factor it is paired with.

mod bound;
mod kernel;
mod series;
mod sparse;
mod univariate;
mod wendl;

pub use bound::{
    sample_kernel_elements, verify_wendl_bound, wendl_bound_rows, BoundRow, WendlBoundReport,
};
pub use kernel::{
    harmonic_tensor_basis, petri_kernel_basis, petri_map, HarmonicPair, PetriKernelElement,
};
pub use series::{
    admissible_parities, coefficient_series, p_denominator, p_numerator_completed_square,
    p_numerator_product, proof_parities, q_independence_check, q_independence_check_with,
    q_polynomial, CoefficientSeries,
};
pub use sparse::{bareiss_only_rank, exact_rank, SparseMatrix};
pub use univariate::UniPoly;
pub use wendl::{graded_ranks, wendl_apply, wendl_matrix, WendlMatrix};

/// Smallest truncation order covered by the rank bound for degree `d`.
pub fn bound_hypothesis(d: u32) -> u32 {
    10 * d + 6
}
