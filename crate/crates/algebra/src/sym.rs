use std::collections::BTreeMap;

use crate::perm::{permutations, sign};
use crate::poly::{MPoly, Q};
use crate::ratfn::RatFn;
use crate::var::{Ns, VarId};
use crate::AlgebraError;

fn permute_ns(f: &RatFn, ns: Ns, sigma: &[usize]) -> RatFn {
    f.rename(|v| {
        if v.ns == ns && v.index >= 1 && (v.index as usize) <= sigma.len() {
            VarId::new(ns, sigma[v.index as usize - 1] as i32 + 1)
        } else {
            v
        }
    })
}

/// Permutes `α_1..α_n` by `σ`: `α_i ↦ α_{σ(i)}` (0-based `σ`).
pub fn permute_alpha(f: &RatFn, sigma: &[usize]) -> RatFn {
    permute_ns(f, Ns::Alpha, sigma)
}

pub fn permute_alpha_poly(p: &MPoly, sigma: &[usize]) -> MPoly {
    p.rename(|v| {
        if v.ns == Ns::Alpha && v.index >= 1 && (v.index as usize) <= sigma.len() {
            VarId::alpha(sigma[v.index as usize - 1] + 1)
        } else {
            v
        }
    })
}

/// `(1/stab) Σ_{σ∈S_n} f(α_σ)`.
pub fn symmetrize(f: &RatFn, n: usize, stabilizer_order: u64) -> Result<RatFn, AlgebraError> {
    if stabilizer_order == 0 {
        return Err(AlgebraError::ZeroStabilizer);
    }
    let mut acc = RatFn::zero();
    for s in permutations(n) {
        acc = acc.try_add(&permute_alpha(f, &s))?;
    }
    Ok(acc.scale(&Q::new(1.into(), stabilizer_order.into())))
}

/// `Σ_{σ∈S_μ} ε(σ) f(z_σ)`.
pub fn asymmetrize(f: &RatFn, mu: usize) -> Result<RatFn, AlgebraError> {
    let mut acc = RatFn::zero();
    for s in permutations(mu) {
        let g = permute_ns(f, Ns::Z, &s);
        let g = if sign(&s) < 0 { g.neg() } else { g };
        acc = acc.try_add(&g)?;
    }
    Ok(acc)
}

/// Replaces `α_i` by `z_i`.
pub fn alpha_to_z(f: &RatFn) -> RatFn {
    f.rename(|v| if v.ns == Ns::Alpha { VarId::new(Ns::Z, v.index) } else { v })
}

/// Checks that `p` is invariant under swapping adjacent variables of a namespace.
pub fn is_symmetric_in(p: &MPoly, ns: Ns, n: usize) -> bool {
    (1..n).all(|i| {
        let mut asg = BTreeMap::new();
        asg.insert(VarId::new(ns, i as i32), MPoly::var(VarId::new(ns, i as i32 + 1)));
        asg.insert(VarId::new(ns, i as i32 + 1), MPoly::var(VarId::new(ns, i as i32)));
        p.substitute_partial(&asg) == *p
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ratfn;

    #[test]
    fn symmetrize_examples() {
        let f = parse_ratfn("a1^2*a2").unwrap();
        assert_eq!(symmetrize(&f, 2, 1).unwrap(), parse_ratfn("a1^2*a2 + a2^2*a1").unwrap());
        let g = parse_ratfn("a1*a2").unwrap();
        assert_eq!(symmetrize(&g, 2, 2).unwrap(), g);
    }

    #[test]
    fn asymmetrize_examples() {
        assert!(asymmetrize(&RatFn::one(), 2).unwrap().is_zero());
        assert_eq!(asymmetrize(&parse_ratfn("z1").unwrap(), 2).unwrap(), parse_ratfn("z1 - z2").unwrap());
        let k = parse_ratfn("1/(2*z1-z2)").unwrap();
        let expect = parse_ratfn("3*(z1-z2)/((2*z1-z2)*(z1-2*z2))").unwrap();
        assert_eq!(asymmetrize(&k, 2).unwrap(), expect);
    }
}
