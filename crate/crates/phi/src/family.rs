//! Thom polynomials of `Φ_{m,r}`: the localization sum over the fixed
//! points of `P(Sym²ℂ^n)` and the closed Schur-basis formula.

use std::sync::Arc;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thom_algebra::Q;
use thom_engine::thompoly::delta_value;
use thom_engine::{lower_tp, PointEval, RootForm, ThomPolynomial, TpForm};
use thom_schur::{Partition, SchurExpansion};

use crate::segre::{segre_coeff, strict_sequences};
use crate::PhiError;

fn binom2(k: u32) -> u32 {
    k * k.saturating_sub(1) / 2
}

/// `codim Φ_{m,r}(n, n+l) = (m+1)l + C(m+1,2) + C(r+1,2) + 1`.
pub fn phi_codim(m: u32, r: u32, l: u32) -> u32 {
    (m + 1) * l + binom2(m + 1) + binom2(r + 1) + 1
}

/// `res(B|A) Σ_{i≤j} [E_ij]/e_ij · [X(n,r)]|_{f_ij}` evaluated at points.
pub struct PhiLocalized {
    n: usize,
    r: usize,
    p: usize,
    pairs: Vec<(usize, usize)>,
}

impl PhiLocalized {
    pub fn new(n: usize, r: usize, p: usize) -> Self {
        let pairs = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        PhiLocalized { n, r, p, pairs }
    }

    /// `2^r Δ_{ρ_r}(α_1 − w/2, …, α_n − w/2)`
    fn x_class(&self, alpha: &[Q], w: &Q) -> Q {
        if self.r == 0 {
            return Q::one();
        }
        let half = w / Q::from_integer(2.into());
        let mut e = vec![Q::one()];
        for a in alpha {
            let x = a - &half;
            e.push(Q::zero());
            for k in (1..e.len()).rev() {
                let add = &e[k - 1] * &x;
                e[k] += add;
            }
        }
        let rho: Vec<u32> = (1..=self.r as u32).rev().collect();
        delta_value(&rho, &e) * Q::from_integer((1i64 << self.r).into())
    }

    fn term(&self, alpha: &[Q], beta: &[Q], (i, j): (usize, usize)) -> Option<Q> {
        let w = &alpha[i] + &alpha[j];
        let mut num = Q::one();
        for b in beta {
            num *= b - &w;
        }
        let mut den = Q::one();
        for &(k, l) in &self.pairs {
            if (k, l) != (i, j) {
                den *= &alpha[k] + &alpha[l] - &w;
            }
        }
        if den.is_zero() {
            return None;
        }
        Some(num / den * self.x_class(alpha, &w))
    }
}

impl PointEval for PhiLocalized {
    fn n(&self) -> usize {
        self.n
    }
    fn p(&self) -> usize {
        self.p
    }
    fn eval(&self, alpha: &[Q], beta: &[Q]) -> Option<Q> {
        let terms: Option<Vec<Q>> = self.pairs.par_iter().map(|&ij| self.term(alpha, beta, ij)).collect();
        let sum: Q = terms?.into_iter().sum();
        let mut base = Q::one();
        for b in beta {
            for a in alpha {
                base *= b - a;
            }
        }
        Some(base * sum)
    }
}

/// `Tp_{Φ_{n,r}}(n, p)` in Chern roots.
pub fn phi_tp_localized(n: usize, r: usize, p: usize) -> Result<ThomPolynomial, PhiError> {
    if !(r < n && n <= p) {
        return Err(PhiError::Precondition(format!("need 0 <= r < n <= p, got r = {r}, n = {n}, p = {p}")));
    }
    let mut root = RootForm::oracle(n, p, Arc::new(PhiLocalized::new(n, r, p)));
    root.width = Some(n + 1);
    let codim = phi_codim(n as u32, r as u32, (p - n) as u32);
    Ok(ThomPolynomial { form: TpForm::Root(root), codim })
}

/// `tp_{Φ_{m,m−s}}(l) = Σ_I ((I)) Δ_{I'}`, summed over all strictly
/// decreasing `I ≥ 0` of length `s`; terms outside the stated range
/// straighten to zero.
pub fn phi_tp_schur(m: u32, s: u32, l: u32) -> Result<ThomPolynomial, PhiError> {
    if !(1 <= s && s <= m) {
        return Err(PhiError::Precondition(format!("need 1 <= s <= m, got s = {s}, m = {m}")));
    }
    let (m, s, l) = (m as i64, s as i64, l as i64);
    let mut e = SchurExpansion::new();
    for idx in strict_sequences(s as usize, l + m - s + 1) {
        let total: i64 = idx.iter().sum();
        let mut seq: Vec<i64> = idx.iter().enumerate().map(|(k, &i)| l + 1 + k as i64 + i).collect();
        seq.extend(std::iter::repeat_n(l + m, (m - s) as usize));
        seq.push(l + m + 1 - s - total);
        e.add_raw(&seq, Q::from_integer(segre_coeff(&idx)));
    }
    let codim = phi_codim(m as u32, (m - s) as u32, l as u32);
    Ok(ThomPolynomial { form: TpForm::Quotient(thom_engine::QuotientForm { l, expansion: e }), codim })
}

/// `♭(n+1)^{l+1} tp_{Φ_{n,n−1}}(l) = 2^{n−1} Δ_{(n−1)^n}`.
pub fn veronese_check(n: u32, l: u32) -> Result<bool, PhiError> {
    if n == 0 {
        return Err(PhiError::Precondition("need n >= 1".into()));
    }
    let mut tp = phi_tp_schur(n, 1, l)?;
    for _ in 0..=l {
        tp = lower_tp(&tp, n as usize + 1)?;
    }
    let want = SchurExpansion::single(Partition::rect(n - 1, n as usize), Q::from_integer((1i64 << (n - 1)).into()));
    Ok(tp.expansion()? == &want)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codimensions() {
        assert_eq!(phi_codim(1, 0, 0), 2);
        assert_eq!(phi_codim(2, 1, 0), 5);
        assert_eq!(phi_codim(2, 0, 0), 4);
    }

    #[test]
    fn a2_from_the_closed_formula() {
        let tp = phi_tp_schur(1, 1, 0).unwrap();
        assert_eq!(tp.expansion().unwrap().to_string(), "Δ_{1,1} + 2Δ_{2}");
    }

    #[test]
    fn preconditions() {
        assert!(phi_tp_localized(2, 2, 3).is_err());
        assert!(phi_tp_localized(3, 0, 2).is_err());
        assert!(phi_tp_schur(2, 3, 0).is_err());
    }
}
