//! Finite-codimension monomial ideals: enumeration, weights, descendants,
//! orbit representatives.

pub mod enumerate;
pub mod ideal;
pub mod parse;

pub use enumerate::{canonical_representatives, computed_representatives, enumerate_ideals, locate, Representative};
pub use ideal::{Exponent, MonomialGerm, MonomialIdeal};
pub use parse::{parse_ideal, parse_ideal_in};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("exponent vector {0:?} has the wrong length or is zero")]
    BadExponent(Vec<u32>),
    #[error("complement is not divisor-closed at {0:?}")]
    NotDivisorClosed(Vec<u32>),
    #[error("no pure power of variable {0}: infinite codimension")]
    InfiniteCodimension(usize),
    #[error("a germ needs at least one coordinate")]
    EmptyGerm,
    #[error("ideal mentions {found} variables, expected at most {n}")]
    TooManyVariables { found: usize, n: usize },
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}
