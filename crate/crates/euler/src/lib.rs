//! Virtual tangent Euler classes `e(Q, I)`: the shipped `μ ≤ 4` tables,
//! lookup through orbit permutations and suspensions, and reciprocity.

pub mod algebra;
pub mod reciprocity;
pub mod table;

pub use algebra::{AlgebraId, Family};
pub use reciprocity::{
    complete_by_reciprocity, homogeneity_constant, max_square_is_symmetric, reciprocity_sum, reciprocity_sum_at,
    sample_points,
};
pub use table::{alpha_point, load_table, macros, Entry, EntryValue, EulerTable, Provenance, Term};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EulerError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown or malformed algebra '{0}'")]
    BadAlgebra(String),
    #[error("no Euler data for {0}")]
    UnknownAlgebra(String),
    #[error("no entry for {0} at {1}")]
    MissingEntry(String, String),
    #[error("ideal {ideal} does not have codimension {mu} required by {algebra}")]
    InconsistentMu { algebra: String, ideal: String, mu: usize },
    #[error("ideal {0} is a descendant; give it in its own variables")]
    NotMinimal(String),
    #[error("reciprocity is a tautology for {0}")]
    Tautological(String),
    #[error("symbolic reciprocity is not attempted for mu = {0}; use the pointwise form")]
    SymbolicTooLarge(usize),
    #[error("shipped M^2 entry of {0} disagrees with reciprocity")]
    ReciprocityMismatch(String),
    #[error("entry of {0} at {1} is not homogeneous of the expected degree")]
    Inhomogeneous(String, String),
    #[error(transparent)]
    Algebra(#[from] thom_algebra::AlgebraError),
}
