//! Thom polynomials from Euler data: the localization sum, conversion to
//! quotient variables, lowering, interpolation of Euler classes, Thom
//! series and the classical closed formulas.

pub mod classical;
pub mod localize;
pub mod oracle;
pub mod quotient;
pub mod series;
pub mod thompoly;

pub use classical::{iab_from_iiiab, porteous, porteous_root, sigma_power_tp, subgrassmannian_tp};
pub use localize::{localize_tp, localize_tp_symbolic, shipped_table, LocSum};
pub use oracle::{infer_degree, PointEval, PolyOracle, Sampler, WeightProduct};
pub use quotient::{
    euler_via_interpolation, extrapolate_table, lower, lower_tp, padded_germ, restrict, restrict_quotient, rho,
    to_quotient,
};
pub use series::{d_stable, thom_series, tp_quotient, working_dims, ThomSeries};
pub use thompoly::{supersymmetry_check, QuotientForm, RootBody, RootForm, ThomPolynomial, TpForm};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EngineError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("expected a {0}-form Thom polynomial")]
    WrongForm(&'static str),
    #[error("localization sum for {0} is not a polynomial; the Euler data is inconsistent")]
    NotPolynomial(String),
    #[error("not supersymmetric: no quotient-variable polynomial maps to it")]
    NotSupersymmetric,
    #[error("sample points did not determine the quotient form")]
    Underdetermined,
    #[error("degree {degree} is not below the uniqueness bound {bound}")]
    DegreeBound { degree: u32, bound: usize },
    #[error("{0}")]
    TooLarge(&'static str),
    #[error("{0} is not a monomial in the quotient variables")]
    NotQuotient(String),
    #[error("monomial {monomial} has more than {width} factors")]
    TooWide { monomial: String, width: usize },
    #[error("class lives on (n, p) = ({n}, {p}) but the germ has ({fn_}, {fp})")]
    Arity { n: usize, p: usize, fn_: usize, fp: usize },
    #[error("cannot pad {generators} generators into {p} coordinates")]
    Padding { generators: usize, p: usize },
    #[error("d-stability fails for {algebra} between l = {l} and l + 1")]
    DStability { algebra: String, l: usize },
    #[error(transparent)]
    Euler(#[from] thom_euler::EulerError),
    #[error(transparent)]
    Ideal(#[from] thom_ideals::IdealError),
    #[error(transparent)]
    Schur(#[from] thom_schur::SchurError),
    #[error(transparent)]
    Algebra(#[from] thom_algebra::AlgebraError),
}
