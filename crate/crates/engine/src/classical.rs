//! Closed formulas: Porteous, `Σ^{n,…,n}`, subgrassmannian classes and the
//! `I_{a,b}` / `III_{a,b}` lowering relation.

use std::sync::Arc;

use num_traits::{One, Zero};
use thom_algebra::Q;
use thom_schur::{Partition, SchurExpansion};

use crate::oracle::{weight_value, PointEval, WeightProduct};
use crate::quotient::lower_tp;
use crate::thompoly::{QuotientForm, RootForm, ThomPolynomial, TpForm};
use crate::EngineError;

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent vectors of total degree `deg` in `n` variables, in lex order.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Vec<i64>> {
    fn rec(n: usize, deg: u32, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n - 1 {
            cur.push(deg as i64);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=deg).rev() {
            cur.push(e as i64);
            rec(n, deg - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, deg, &mut Vec::new(), &mut out);
    }
    out
}

/// `Δ_{(n+l)^n}`.
pub fn porteous(n: usize, l: usize) -> ThomPolynomial {
    let e = SchurExpansion::single(Partition::rect((n + l) as u32, n), Q::one());
    ThomPolynomial { form: TpForm::Quotient(QuotientForm { l: l as i64, expansion: e }), codim: (n * (n + l)) as u32 }
}

/// `res(β_1..β_p | α_1..α_n)`.
pub fn porteous_root(n: usize, p: usize) -> ThomPolynomial {
    let weights = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    weight_class(n, p, weights, Some(n))
}

fn weight_class(n: usize, p: usize, weights: Vec<Vec<i64>>, width: Option<usize>) -> ThomPolynomial {
    let codim = (p * weights.len()) as u32;
    let o = WeightProduct { n, p, weights };
    let mut r = RootForm::oracle(n, p, Arc::new(o));
    r.width = width;
    ThomPolynomial { form: TpForm::Root(r), codim }
}

fn weights_below(n: usize, d: u32) -> Vec<Vec<i64>> {
    (1..d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

/// `[Σ^{n,…,n}(n,p)]` with the degree-`d` monomials as coordinates:
/// `res(B | {Σ a_i α_i : 0 < |a| < d})`.
pub fn sigma_power_tp(n: usize, d: u32, p: usize) -> Result<ThomPolynomial, EngineError> {
    if n == 0 || d == 0 {
        return Err(EngineError::Precondition("need n, d >= 1".into()));
    }
    let need = binom(n + d as usize - 1, d as usize);
    if p < need {
        return Err(EngineError::Precondition(format!("p = {p} is below the {need} monomials of degree {d}")));
    }
    Ok(weight_class(n, p, weights_below(n, d), None))
}

/// `[Σ^{n^k}(n,p)] · Σ_{|S|=d} [E_S]/e_S` over subsets `S` of the weights of
/// `Hom(Sym^{k+1} ℂ^n, ℂ)`.
pub struct SubGrassmannian {
    n: usize,
    p: usize,
    base: WeightProduct,
    w: Vec<Vec<i64>>,
    subsets: Vec<Vec<usize>>,
}

fn subsets(m: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, d, &mut Vec::new(), &mut out);
    out
}

impl PointEval for SubGrassmannian {
    fn n(&self) -> usize {
        self.n
    }
    fn p(&self) -> usize {
        self.p
    }
    fn eval(&self, alpha: &[Q], beta: &[Q]) -> Option<Q> {
        let ws: Vec<Q> = self.w.iter().map(|w| weight_value(w, alpha)).collect();
        let mut sum = Q::zero();
        for s in &self.subsets {
            let mut num = Q::one();
            let mut den = Q::one();
            for &i in s {
                for b in beta {
                    num *= b - &ws[i];
                }
                for j in 0..ws.len() {
                    if !s.contains(&j) {
                        den *= &ws[i] - &ws[j];
                    }
                }
            }
            if den.is_zero() {
                return None;
            }
            sum += num / den;
        }
        Some(self.base.eval(alpha, beta)? * sum)
    }
}

/// The subgrassmannian class; `d` counts the removed weights.
pub fn subgrassmannian_tp(n: usize, k: u32, d: usize, p: usize) -> Result<ThomPolynomial, EngineError> {
    if n == 0 || k == 0 || p < n {
        return Err(EngineError::Precondition("need k >= 1 and p >= n >= 1".into()));
    }
    let w = monomials_of_degree(n, k + 1);
    if d >= w.len() {
        return Err(EngineError::Precondition(format!("d = {d} must be below dim P = {}", w.len())));
    }
    let base = WeightProduct { n, p, weights: weights_below(n, k + 1) };
    let codim = (p * base.weights.len() + d * p - d * (w.len() - d)) as u32;
    let o = SubGrassmannian { n, p, base, subsets: subsets(w.len(), d), w };
    Ok(ThomPolynomial { form: TpForm::Root(RootForm::oracle(n, p, Arc::new(o))), codim })
}

/// `tp_{I_{a,b}}(0) = tp_{III_{a,b}}(1)♭(a+b−2)`.
pub fn iab_from_iiiab(tp_iii_at_1: &ThomPolynomial, a: u32, b: u32) -> Result<ThomPolynomial, EngineError> {
    if a < 2 || b < 2 {
        return Err(EngineError::Precondition("need a, b >= 2".into()));
    }
    let m = (a + b - 2) as usize;
    if tp_iii_at_1.expansion()?.max_len() > m {
        return Err(EngineError::TooWide { monomial: tp_iii_at_1.expansion()?.to_string(), width: m });
    }
    lower_tp(tp_iii_at_1, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use thom_algebra::parse::parse_poly;

    #[test]
    fn one_variable_power() {
        let tp = sigma_power_tp(1, 3, 1).unwrap();
        let want = parse_poly("(b1 - a1)*(b1 - 2*a1)").unwrap();
        assert_eq!(tp.root().unwrap().symbolic().unwrap(), want);
        assert!(sigma_power_tp(2, 2, 2).is_err());
    }

    #[test]
    fn porteous_small() {
        assert_eq!(porteous(1, 3).expansion().unwrap().to_string(), "Δ_{4}");
        assert_eq!(porteous(2, 0).quotient().unwrap().c_poly(), parse_poly("c2^2 - c1*c3").unwrap());
    }

    #[test]
    fn degree_monomials() {
        assert_eq!(monomials_of_degree(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }
}
