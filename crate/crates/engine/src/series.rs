//! `tp_Q(l)` in quotient variables, d-stability and the Thom series.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thom_algebra::{Ns, Q};
use thom_euler::{AlgebraId, EulerTable, Family};

use crate::localize::localize_tp;
use crate::quotient::{lower_tp, to_quotient};
use crate::thompoly::ThomPolynomial;
use crate::EngineError;

/// The `(n, p)` used to compute `tp_Q(l)`: `n = max(1, μ−1)` (`r` for
/// `Σ^r`), raised until the degree is below the uniqueness bound.
pub fn working_dims(q: &AlgebraId, l: usize) -> Result<(usize, usize), EngineError> {
    let gamma = q.gamma().ok_or_else(|| EngineError::Precondition(format!("no degree data for {q}")))? as usize;
    let d = q.mu() * l + gamma;
    let mut n = if q.family == Family::Sigma { q.mu() } else { q.mu().saturating_sub(1).max(1) };
    while d >= (n + 1) * (n + l + 1) {
        n += 1;
    }
    Ok((n, n + l))
}

/// `tp_Q(l)` from the Euler table.
pub fn tp_quotient(q: &AlgebraId, l: usize, table: Arc<EulerTable>) -> Result<ThomPolynomial, EngineError> {
    let (n, p) = working_dims(q, l)?;
    to_quotient(&localize_tp(q, n, p, table)?)
}

/// `tp_Q(l+1)♭(μ) = tp_Q(l)`.
pub fn d_stable(q: &AlgebraId, lower_tp_l: &ThomPolynomial, upper: &ThomPolynomial) -> Result<bool, EngineError> {
    let low = lower_tp(upper, q.mu())?;
    Ok(low.expansion()? == lower_tp_l.expansion()?)
}

/// `Σ a_K d_{K_1}⋯d_{K_μ}`, keyed by the ascending index vector `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThomSeries {
    pub mu: usize,
    pub terms: BTreeMap<Vec<i64>, Q>,
    /// Every `K` with `max K ≤ index_bound` is present (or has coefficient 0).
    pub index_bound: i64,
}

impl ThomSeries {
    pub fn coeff(&self, k: &[i64]) -> Q {
        let mut key = k.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_else(Q::zero)
    }

    /// `Σ K_i`, shared by every term.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|k| k.iter().sum::<i64>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }
}

fn fmt_d(f: &mut fmt::Formatter<'_>, i: i64) -> fmt::Result {
    if i < 0 {
        write!(f, "d_{{{i}}}")
    } else {
        write!(f, "d_{i}")
    }
}

impl fmt::Display for ThomSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // d_0^μ first, then by decreasing spread
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by_key(|k| (k[k.len() - 1] - k[0], k.iter().rev().cloned().collect::<Vec<_>>()));
        for (n, k) in keys.into_iter().enumerate() {
            let c = &self.terms[k];
            if n > 0 {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            let mut i = 0;
            while i < k.len() {
                let mut j = i;
                while j < k.len() && k[j] == k[i] {
                    j += 1;
                }
                fmt_d(f, k[i])?;
                if j - i > 1 {
                    write!(f, "^{}", j - i)?;
                }
                i = j;
            }
        }
        write!(f, " + …")
    }
}

/// Reads the series off `tp_Q(L)` for the smallest `L` that shows every
/// index vector with `max K ≤ index_bound`, checking d-stability for
/// `l = 0..L` on the way.
pub fn thom_series(q: &AlgebraId, table: Arc<EulerTable>, index_bound: i64) -> Result<ThomSeries, EngineError> {
    let mu = q.mu() as i64;
    let gamma = q.gamma().ok_or_else(|| EngineError::Precondition(format!("no degree data for {q}")))? as i64;
    let s = gamma - mu;
    let big_l = ((mu - 1) * index_bound - s - 1).max(0) as usize;
    let mut prev: Option<ThomPolynomial> = None;
    for l in 0..=big_l {
        let tp = tp_quotient(q, l, table.clone())?;
        if let Some(p) = &prev {
            if !d_stable(q, p, &tp)? {
                return Err(EngineError::DStability { algebra: q.to_string(), l: l - 1 });
            }
        }
        prev = Some(tp);
    }
    let tp = prev.expect("at least one l");
    let h = tp.quotient()?.c_poly();
    let shift = big_l as i64 + 1;
    let mut terms = BTreeMap::new();
    for (mono, c) in h.terms() {
        let mut k = Vec::new();
        for &(v, e) in mono.pairs() {
            debug_assert_eq!(v.ns, Ns::C);
            for _ in 0..e {
                k.push(v.index as i64 - shift);
            }
        }
        if k.len() > mu as usize {
            return Err(EngineError::TooWide { monomial: mono.to_string(), width: mu as usize });
        }
        k.resize(mu as usize, -shift);
        k.sort_unstable();
        if k[k.len() - 1] <= index_bound {
            terms.insert(k, c.clone());
        }
    }
    Ok(ThomSeries { mu: mu as usize, terms, index_bound })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn working_dims_respect_the_bound() {
        assert_eq!(working_dims(&AlgebraId::a(2), 0).unwrap(), (1, 1));
        assert_eq!(working_dims(&AlgebraId::sigma(2), 1).unwrap(), (2, 3));
        let (n, p) = working_dims(&AlgebraId::sigma21(), 2).unwrap();
        assert!(4 * 2 + 7 < (n + 1) * (p + 1));
    }
}
