//! Generating functions and the iterated residue operator in the region
//! `|z_1| ≪ … ≪ |z_μ|`, with consistency checks against localization.

pub mod catalog;
pub mod checks;
pub mod gf;
pub mod laurent;
pub mod residue;

pub use catalog::{kq_catalog, phi_generating_function, sigma_generating_function};
pub use checks::{asym_consistency, asym_consistency_with, residue_vs_localization, AsymReport, CheckReport};
pub use gf::GeneratingFunction;
pub use laurent::{laurent_expand, LaurentSlice};
pub use residue::{discriminant, iterated_residue, iterated_residue_with, residue_tp};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ResidueError {
    #[error("ill-posed in the asymptotic region: {0}")]
    IllPosed(String),
    #[error("no generating function for {0}")]
    NotInCatalog(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Algebra(#[from] thom_algebra::AlgebraError),
    #[error(transparent)]
    Schur(#[from] thom_schur::SchurError),
    #[error(transparent)]
    Euler(#[from] thom_euler::EulerError),
    #[error(transparent)]
    Engine(#[from] thom_engine::EngineError),
    #[error(transparent)]
    Phi(#[from] thom_phi::PhiError),
}
