//! Quotient variables `c_k`: coefficients of `∏(1+β_j t) / ∏(1+α_i t)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thom_algebra::{MPoly, Monomial, Ns, VarId, Q};

use crate::partition::Partition;

/// `c^ν = ∏ c_{ν_i}`.
pub fn c_monomial(nu: &Partition) -> Monomial {
    Monomial::from_pairs(nu.parts().iter().map(|&k| (VarId::c(k as usize), 1)))
}

/// The index multiset of a pure c-monomial (`c_0` factors dropped).
pub fn c_partition(m: &Monomial) -> Option<Partition> {
    let mut parts = Vec::new();
    for &(v, e) in m.pairs() {
        if v.ns != Ns::C {
            return None;
        }
        if v.index > 0 {
            parts.extend(std::iter::repeat_n(v.index as u32, e as usize));
        }
    }
    Some(Partition::from_multiset(parts))
}

/// Weighted degree with `deg c_i = i`, for pure c-polynomials.
pub fn c_degree(m: &Monomial) -> u32 {
    m.pairs().iter().map(|&(v, e)| v.index.max(0) as u32 * e).sum()
}

/// `c_0..c_kmax` as polynomials in `α_1..α_n, β_1..β_p`.
pub fn rho_c(n: usize, p: usize, kmax: usize) -> Vec<MPoly> {
    // 1/∏(1+α t): complete homogeneous in -α
    let mut inv = vec![MPoly::zero(); kmax + 1];
    inv[0] = MPoly::one();
    for i in 1..=n {
        let a = MPoly::var(VarId::alpha(i));
        let mut next = vec![MPoly::zero(); kmax + 1];
        let mut pw = MPoly::one();
        let mut powers = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            powers.push(if k % 2 == 0 { pw.clone() } else { -&pw });
            pw = &pw * &a;
        }
        for k in 0..=kmax {
            let mut s = MPoly::zero();
            for j in 0..=k {
                if !inv[j].is_zero() {
                    s += &(&inv[j] * &powers[k - j]);
                }
            }
            next[k] = s;
        }
        inv = next;
    }
    let mut num = vec![MPoly::one()];
    for j in 1..=p {
        let b = MPoly::var(VarId::beta(j));
        let mut next = num.clone();
        next.push(MPoly::zero());
        for k in 1..next.len() {
            next[k] = &num.get(k).cloned().unwrap_or_default() + &(&num[k - 1] * &b);
        }
        num = next;
    }
    (0..=kmax)
        .map(|k| {
            let mut s = MPoly::zero();
            for j in 0..=k.min(p) {
                s += &(&num[j] * &inv[k - j]);
            }
            s
        })
        .collect()
}

/// `ρ_{n,p}`: substitutes the root expressions for every `c_k` in `h`.
pub fn rho(n: usize, p: usize, h: &MPoly) -> MPoly {
    let kmax = h.vars().iter().filter(|v| v.ns == Ns::C).map(|v| v.index as usize).max().unwrap_or(0);
    let cs = rho_c(n, p, kmax);
    let mut asg = BTreeMap::new();
    for (k, c) in cs.into_iter().enumerate() {
        asg.insert(VarId::c(k), c);
    }
    h.substitute_partial(&asg)
}

/// Numeric `c_0..c_kmax` at a point.
pub fn c_values(alpha: &[Q], beta: &[Q], kmax: usize) -> Vec<Q> {
    let mut inv = vec![Q::zero(); kmax + 1];
    inv[0] = Q::one();
    for a in alpha {
        // multiply by 1/(1 + a t)
        for k in 1..=kmax {
            let prev = inv[k - 1].clone();
            inv[k] -= a * prev;
        }
    }
    let mut out = inv;
    for b in beta {
        for k in (1..=kmax).rev() {
            let prev = out[k - 1].clone();
            out[k] += b * prev;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use thom_algebra::parse::parse_poly;
    use thom_algebra::q;

    #[test]
    fn first_quotient_variables() {
        let cs = rho_c(1, 1, 2);
        assert_eq!(cs[1], parse_poly("b1 - a1").unwrap());
        assert_eq!(cs[2], parse_poly("a1^2 - a1*b1").unwrap());
    }

    #[test]
    fn numeric_matches_symbolic() {
        let cs = rho_c(2, 3, 6);
        let al = [q(3), q(-2)];
        let be = [q(5), q(1), q(-7)];
        let vals = c_values(&al, &be, 6);
        let mut pt = std::collections::HashMap::new();
        for (i, a) in al.iter().enumerate() {
            pt.insert(VarId::alpha(i + 1), a.clone());
        }
        for (i, b) in be.iter().enumerate() {
            pt.insert(VarId::beta(i + 1), b.clone());
        }
        for k in 0..=6 {
            assert_eq!(cs[k].eval(&pt).unwrap(), vals[k]);
        }
    }
}
