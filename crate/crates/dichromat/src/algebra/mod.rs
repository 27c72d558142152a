//! Exact arithmetic: the cyclotomic field Q(zeta_N) and integer matrix
//! inertia.

mod cyclo;
mod inertia;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloNumber};
pub use inertia::{inertia, InertiaTriple};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero in Q(zeta)")]
    DivisionByZero,
    #[error("mixed cyclotomic moduli: {0} vs {1}")]
    MixedModuli(u32, u32),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric")]
    NotSymmetric,
}
