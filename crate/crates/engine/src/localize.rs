//! The fixed-point sum over codimension-μ monomial ideals.

use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thom_algebra::{resultant, LinForm, MPoly, RatFn, VarId, Q};
use thom_euler::{alpha_point, AlgebraId, EntryValue, EulerTable, Family};
use thom_ideals::{enumerate_ideals, MonomialIdeal};

use crate::oracle::{weight_value, PointEval};
use crate::thompoly::{RootForm, ThomPolynomial, TpForm};
use crate::EngineError;

enum Recip {
    /// `1/e(Q, I)` as a rational function in `α`.
    Exact(RatFn),
    /// Only available through the table's pointwise reciprocity.
    Pointwise(MonomialIdeal),
}

struct FixedPoint {
    weights: Vec<Vec<i64>>,
    recip: Recip,
}

/// `Σ_I res(B | W_I) / e(Q, I)` over the ideals of `M_n` of codimension μ.
pub struct LocSum {
    q: AlgebraId,
    n: usize,
    p: usize,
    points: Vec<FixedPoint>,
    table: Arc<EulerTable>,
}

impl LocSum {
    pub fn new(q: &AlgebraId, n: usize, p: usize, table: Arc<EulerTable>) -> Result<Self, EngineError> {
        if n == 0 || p < n {
            return Err(EngineError::Precondition(format!("need p >= n >= 1, got n={n}, p={p}")));
        }
        if !table.has_algebra(q) {
            return Err(EngineError::Euler(thom_euler::EulerError::UnknownAlgebra(q.to_string())));
        }
        let mut points = Vec::new();
        for ideal in enumerate_ideals(n, q.mu()) {
            let recip = match table.lookup(q, &ideal)? {
                EntryValue::Exact(f) if f.is_infinite() => continue,
                EntryValue::Exact(f) => Recip::Exact(f.reciprocal()),
                EntryValue::Pointwise => Recip::Pointwise(ideal.clone()),
            };
            let weights = ideal.complement().iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect();
            points.push(FixedPoint { weights, recip });
        }
        Ok(LocSum { q: q.clone(), n, p, points, table })
    }

    pub fn fixed_points(&self) -> usize {
        self.points.len()
    }

    /// The sum as a rational function, certified to be a polynomial.
    pub fn expand(&self) -> Result<MPoly, EngineError> {
        let bs: Vec<LinForm> = (1..=self.p).map(|j| LinForm::var(VarId::beta(j))).collect();
        let parts: Vec<Result<RatFn, EngineError>> = self
            .points
            .par_iter()
            .map(|fp| {
                let Recip::Exact(r) = &fp.recip else { return Err(EngineError::TooLarge("pointwise Euler class")) };
                let ws: Vec<LinForm> = fp
                    .weights
                    .iter()
                    .map(|w| {
                        LinForm::from_pairs(w.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (VarId::alpha(i + 1), Q::from_integer(c.into()))))
                    })
                    .collect();
                Ok(r.try_mul(&RatFn::from_poly(resultant(&bs, &ws)))?)
            })
            .collect();
        let mut acc = RatFn::zero();
        for p in parts {
            acc = acc.try_add(&p?)?;
        }
        acc.to_poly().map_err(|_| EngineError::NotPolynomial(self.q.to_string()))
    }
}

impl PointEval for LocSum {
    fn n(&self) -> usize {
        self.n
    }
    fn p(&self) -> usize {
        self.p
    }
    fn eval(&self, alpha: &[Q], beta: &[Q]) -> Option<Q> {
        let pt = alpha_point(alpha);
        let mut acc = Q::zero();
        for fp in &self.points {
            let r = match &fp.recip {
                Recip::Exact(f) => f.eval(&pt).ok()??,
                Recip::Pointwise(i) => self.table.reciprocal_at(&self.q, i, alpha).ok()??,
            };
            if r.is_zero() {
                continue;
            }
            let mut num = Q::one();
            for w in &fp.weights {
                let wv = weight_value(w, alpha);
                for b in beta {
                    num *= b - &wv;
                }
            }
            acc += num * r;
        }
        Some(acc)
    }
}

fn expected_codim(q: &AlgebraId, n: usize, p: usize) -> Option<u32> {
    let l = p as i64 - n as i64;
    let d = q.mu() as i64 * l + q.gamma()? as i64;
    u32::try_from(d).ok()
}

/// `Tp_Q(n, p)` by localization, as an exact point oracle.
pub fn localize_tp(q: &AlgebraId, n: usize, p: usize, table: Arc<EulerTable>) -> Result<ThomPolynomial, EngineError> {
    if q.family == Family::Phi {
        return Err(EngineError::Precondition("Phi algebras have no Euler table; use the phi crate".into()));
    }
    let sum = LocSum::new(q, n, p, table)?;
    let codim = expected_codim(q, n, p).ok_or_else(|| EngineError::Precondition(format!("no degree data for {q}")))?;
    let mut r = RootForm::oracle(n, p, Arc::new(sum));
    r.width = Some(q.mu());
    Ok(ThomPolynomial { form: TpForm::Root(r), codim })
}

/// `Tp_Q(n, p)` by localization, expanded and certified polynomial.
pub fn localize_tp_symbolic(q: &AlgebraId, n: usize, p: usize, table: Arc<EulerTable>) -> Result<ThomPolynomial, EngineError> {
    let sum = LocSum::new(q, n, p, table)?;
    let poly = sum.expand()?;
    let codim = poly.total_degree().unwrap_or(0);
    let mut r = RootForm::poly(n, p, poly);
    r.width = Some(q.mu());
    Ok(ThomPolynomial { form: TpForm::Root(r), codim })
}

/// The shipped table behind an `Arc`, shared by every oracle.
pub fn shipped_table() -> Arc<EulerTable> {
    static T: std::sync::OnceLock<Arc<EulerTable>> = std::sync::OnceLock::new();
    T.get_or_init(|| Arc::new(EulerTable::shipped().clone())).clone()
}
