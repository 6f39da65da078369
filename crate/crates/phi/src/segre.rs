//! Segre coefficients `((I))` of `Sym²ℂ^n` in the Schur basis.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thom_algebra::{LinForm, MPoly, Q, VarId};
use thom_schur::{delta_alphabet, Partition};

/// A strictly decreasing sequence `i_1 > … > i_s ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegreIndex(Vec<u32>);

impl SegreIndex {
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        parts.windows(2).all(|w| w[0] > w[1]).then_some(SegreIndex(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `conj(I − ρ_{s−1})`, the partition paired with `((I))` in the
    /// Segre expansion.
    pub fn partition(&self) -> Partition {
        let s = self.0.len();
        let shifted: Vec<u32> = self.0.iter().enumerate().map(|(k, &i)| i - (s - 1 - k) as u32).collect();
        Partition::from_multiset(shifted).conjugate()
    }
}

thread_local! {
    static CACHE: RefCell<HashMap<Vec<i64>, BigInt>> = RefCell::new(HashMap::new());
}

fn valid(idx: &[i64]) -> bool {
    idx.last().is_none_or(|&x| x >= 0) && idx.windows(2).all(|w| w[0] > w[1])
}

/// `((I))`; zero for sequences that are not strictly decreasing and
/// nonnegative.
pub fn segre_coeff(idx: &[i64]) -> BigInt {
    if !valid(idx) {
        return BigInt::zero();
    }
    if idx.is_empty() || idx == [0] {
        return BigInt::one();
    }
    if let Some(v) = CACHE.with(|c| c.borrow().get(idx).cloned()) {
        return v;
    }
    let r = idx.len();
    let mut acc = BigInt::zero();
    let mut lowered = idx.to_vec();
    for k in 0..r {
        lowered[k] -= 1;
        acc += segre_coeff(&lowered);
        lowered[k] += 1;
    }
    acc *= 2;
    if idx[r - 1] == 0 {
        acc += segre_coeff(&idx[..r - 1]);
    }
    let (v, rem) = (&acc / r, &acc % r);
    debug_assert!(rem.is_zero(), "recursion for {idx:?} is not integral");
    CACHE.with(|c| c.borrow_mut().insert(idx.to_vec(), v.clone()));
    v
}

/// Strictly decreasing nonnegative sequences of length `len` with sum at
/// most `max_sum`.
pub fn strict_sequences(len: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn rec(len: usize, below: i64, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let left = (len - cur.len() - 1) as i64;
        // the remaining entries need at least 0 + 1 + … + (left − 1)
        let floor = left * (left - 1).max(0) / 2;
        for i in (left..below).rev() {
            if i + floor > budget {
                continue;
            }
            cur.push(i);
            rec(len, i, budget - i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_sum >= 0 {
        rec(len, max_sum + 1, max_sum, &mut Vec::new(), &mut out);
    }
    out
}

fn truncate(p: &MPoly, deg: u32) -> MPoly {
    MPoly::from_terms(p.terms().filter(|(m, _)| m.degree() <= deg).map(|(m, c)| (m.clone(), c.clone())))
}

/// Checks `1/∏_{i≤j}(1 − α_i − α_j) = Σ_I ((I)) Δ_{conj(I−ρ_{n−1})}(α)`
/// through total degree `degree_bound`.
pub fn segre_series_check(n: usize, degree_bound: u32) -> bool {
    if n == 0 {
        return true;
    }
    let alpha = |i: usize| MPoly::var(VarId::alpha(i));
    let mut lhs = MPoly::one();
    for i in 1..=n {
        for j in i..=n {
            let w = &alpha(i) + &alpha(j);
            let mut geo = MPoly::one();
            let mut pw = MPoly::one();
            for _ in 0..degree_bound {
                pw = &pw * &w;
                geo += &pw;
            }
            lhs = truncate(&(&lhs * &geo), degree_bound);
        }
    }
    let xs: Vec<LinForm> = (1..=n).map(|i| LinForm::var(VarId::alpha(i))).collect();
    let shift = (n * (n - 1) / 2) as i64;
    let mut rhs = MPoly::zero();
    for idx in strict_sequences(n, degree_bound as i64 + shift) {
        let parts: Vec<u32> = idx.iter().map(|&i| i as u32).collect();
        let si = SegreIndex::new(parts).expect("strict");
        let c = Q::from_integer(segre_coeff(&idx));
        rhs += &delta_alphabet(&si.partition(), &xs).scale(&c);
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(segre_coeff(&[2, 1]), BigInt::from(3));
        assert_eq!(segre_coeff(&[3, 1]), BigInt::from(10));
        assert_eq!(segre_coeff(&[1, 1]), BigInt::zero());
        assert_eq!(segre_coeff(&[1, -1]), BigInt::zero());
    }

    #[test]
    fn sequences() {
        assert_eq!(strict_sequences(2, 2), vec![vec![2, 0], vec![1, 0]]);
        assert_eq!(strict_sequences(3, 2), Vec::<Vec<i64>>::new());
        assert_eq!(strict_sequences(1, 1), vec![vec![1], vec![0]]);
    }

    #[test]
    fn partition_of_index() {
        // I − ρ_1 = (2, 0), conjugate (1, 1)
        let si = SegreIndex::new(vec![3, 0]).unwrap();
        assert_eq!(si.partition().parts(), &[1, 1]);
    }
}
