//! Exact arithmetic substrate: sparse polynomials over Q, linear forms,
//! rational functions with factored denominators, an expression parser
//! and an exact linear solver.

pub mod linform;
pub mod linsolve;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod ratfn;
pub mod sym;
pub mod var;

pub use linform::{resultant, LinForm, WeightSet};
pub use poly::{q, qf, MPoly, Monomial, Q};
pub use ratfn::RatFn;
pub use var::{Ns, VarId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("no value assigned to variable {0}")]
    MissingAssignment(VarId),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: String },
    #[error("0 times infinity")]
    ZeroTimesInfinite,
    #[error("value is infinite")]
    InfiniteValue,
    #[error("stabilizer order must be positive")]
    ZeroStabilizer,
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}
