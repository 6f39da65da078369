//! Exact checks of the factorization formula and the Gustafson-Milne identity.

use thom_algebra::{resultant, LinForm, MPoly, RatFn, VarId, Q};

use crate::delta::{delta_alphabet, delta_quotient};
use crate::partition::Partition;
use crate::quotient::rho;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("precondition violated: {0}")]
    Precondition(String),
}

fn alphabet(v: fn(usize) -> VarId, n: usize) -> Vec<LinForm> {
    (1..=n).map(|i| LinForm::var(v(i))).collect()
}

/// Both sides of the factorization formula after `ρ_{n,p}`:
/// `ρ(Δ_{p^n+λ,μ})` and `res(B|A)·Δ_μ(B)·Δ_{λ̄}(−A)`.
pub fn factorization_sides(
    n: usize,
    p: u32,
    lambda: &Partition,
    mu: &Partition,
) -> Result<(MPoly, MPoly), IdentityError> {
    if lambda.len() > n {
        return Err(IdentityError::Precondition(format!("λ = ({lambda}) has more than {n} parts")));
    }
    if n > 0 && p + lambda.part(n - 1) < mu.part(0) {
        return Err(IdentityError::Precondition(format!("(p^n+λ, μ) is not a partition for μ = ({mu})")));
    }
    if n == 0 && mu.part(0) > p && p > 0 {
        return Err(IdentityError::Precondition("μ too wide".into()));
    }
    let mut parts: Vec<u32> = (0..n).map(|i| p + lambda.part(i)).collect();
    parts.extend_from_slice(mu.parts());
    let big = Partition::new(parts).expect("checked above");
    let left = rho(n, p as usize, &delta_quotient(&big));

    let a = alphabet(VarId::alpha, n);
    let b = alphabet(VarId::beta, p as usize);
    let minus_a: Vec<LinForm> = a.iter().map(|x| x.scale(&Q::from_integer((-1).into()))).collect();
    let right = &(&resultant(&b, &a) * &delta_alphabet(mu, &b)) * &delta_alphabet(&lambda.conjugate(), &minus_a);
    Ok((left, right))
}

pub fn factorization_identity(n: usize, p: u32, lambda: &Partition, mu: &Partition) -> Result<bool, IdentityError> {
    let (l, r) = factorization_sides(n, p, lambda, mu)?;
    Ok(l == r)
}

fn subsets(m: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, s, cur, out);
            cur.pop();
        }
    }
    rec(0, m, s, &mut cur, &mut out);
    out
}

/// `Δ_μ(xs) = Σ_{|H|=s} Δ_{s^{m−s},μ}(x_H) / res(x_H|x_H̄)` with `m = |xs|`.
pub fn gustafson_milne_identity(s: usize, mu: &Partition, xs: &[LinForm]) -> Result<bool, IdentityError> {
    let m = xs.len();
    if s > m || mu.part(0) as usize > s {
        return Err(IdentityError::Precondition(format!("need μ_1 ≤ s ≤ m, got μ_1={}, s={s}, m={m}", mu.part(0))));
    }
    let mut parts = vec![s as u32; m - s];
    parts.extend_from_slice(mu.parts());
    let big = Partition::new(parts).expect("μ_1 ≤ s");
    let mut sum = RatFn::zero();
    for h in subsets(m, s) {
        let xh: Vec<LinForm> = h.iter().map(|&i| xs[i].clone()).collect();
        let xc: Vec<LinForm> = (0..m).filter(|i| !h.contains(i)).map(|i| xs[i].clone()).collect();
        let den: Vec<(MPoly, u32)> = xh
            .iter()
            .flat_map(|a| xc.iter().map(move |b| (a.sub(b).to_poly(), 1)))
            .collect();
        let term = RatFn::from_parts(delta_alphabet(&big, &xh), den)
            .map_err(|e| IdentityError::Precondition(e.to_string()))?;
        sum = sum.try_add(&term).map_err(|e| IdentityError::Precondition(e.to_string()))?;
    }
    Ok(sum == RatFn::from_poly(delta_alphabet(mu, xs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn factorization_small() {
        let (l, r) = factorization_sides(1, 1, &Partition::empty(), &Partition::empty()).unwrap();
        assert_eq!(l, thom_algebra::parse::parse_poly("b1 - a1").unwrap());
        assert_eq!(l, r);
        assert!(factorization_identity(2, 2, &Partition::empty(), &Partition::empty()).unwrap());
        assert!(factorization_identity(1, 2, &p("1"), &p("1")).unwrap());
        assert!(factorization_identity(2, 1, &p("2,1"), &p("1")).unwrap());
        assert!(factorization_identity(1, 1, &p("1"), &p("3")).is_err());
    }

    #[test]
    fn gustafson_milne_small() {
        let xs = |m: usize| (1..=m).map(|i| LinForm::var(VarId::alpha(i))).collect::<Vec<_>>();
        assert!(gustafson_milne_identity(1, &p("1"), &xs(2)).unwrap());
        assert!(gustafson_milne_identity(2, &p("2,1"), &xs(3)).unwrap());
        assert!(gustafson_milne_identity(3, &p("2,1"), &xs(3)).unwrap());
        assert!(gustafson_milne_identity(2, &p("2,2,1"), &xs(4)).unwrap());
        assert!(gustafson_milne_identity(1, &p("2"), &xs(3)).is_err());
    }
}
