//! Casimir elements of aw(n), their centrality, and the space they span.

mod gamma;
mod omega;

use thiserror::Error;

pub use gamma::{
    action_matrix, check_centrality, express_in_gamma, gamma_action, gamma_unit, r0_matrix_gamma4, GammaVector,
};
pub use omega::{elements, format_subset, gamma_basis, omega, omega3, omega3_formula, subset, PartitionedSet, Subset};

#[derive(Debug, Error)]
pub enum CasimirError {
    #[error("subsets must satisfy I1 < I2 < I3: {0}")]
    Unordered(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("omega_S needs |S| >= 3, got {0}")]
    TooSmall(String),
    #[error("not central: {0}")]
    NotCentral(String),
    #[error("not in Gamma_{0} (within bounds)")]
    NotInGamma(u8),
    #[error("inconclusive: {0}")]
    Undetermined(String),
    #[error("no rewriting system at n={0}")]
    NoRewriting(u8),
    #[error("{0}")]
    Rewrite(String),
    #[error("{0} does not act on Gamma_n here")]
    Unsupported(String),
}

#[cfg(test)]
mod tests;
