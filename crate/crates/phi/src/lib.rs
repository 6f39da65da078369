//! The `Φ_{m,r}` singularities, whose algebras come from corank strata of
//! symmetric matrices, and the Segre coefficients of `Sym²ℂ^n`.

pub mod family;
pub mod segre;

pub use family::{phi_codim, phi_tp_localized, phi_tp_schur, veronese_check, PhiLocalized};
pub use segre::{segre_coeff, segre_series_check, strict_sequences, SegreIndex};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PhiError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Engine(#[from] thom_engine::EngineError),
}
