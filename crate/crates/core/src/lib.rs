//! Exact-arithmetic verification workbench for the minimal-torus counting
//! calculus.
//!
//! The crate is split along the lines of the underlying theory:
//!
//! * [`exactalg`]: rational bivariate polynomials, the Laplacian symbol, its
//!   harmonic kernel and an explicit right inverse.
//! * [`linalg`]: dense exact matrices (Bareiss rank, reduced echelon form,
//!   nullspaces, inverses).
//! * [`petri_wendl`]: the polynomial Petri map, its homogeneous kernel, the
//!   Wendl map `L_{Δ,B}` and the verification of its rank lower bound.
//! * [`fredholm`]: a finite-dimensional model of the Schur reduction and the
//!   Brill–Noether codimension formulas.
//! * [`orbifold`]: cyclic local systems, Hecke-modified Euler
//!   characteristics, twisted indices and permutation representations.
//! * [`torus_count`]: the wall-crossing count of minimal tori and its
//!   invariance checker.

pub mod error;
pub mod exactalg;
pub mod fredholm;
pub mod linalg;
pub mod orbifold;
pub mod petri_wendl;
pub mod torus_count;

pub use error::{Error, Result};
pub use exactalg::{Monomial2, Poly2, Rational, TensorElem};
