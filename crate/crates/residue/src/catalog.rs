//! Generating functions `k_Q` for the algebras with `μ ≤ 4` and the
//! `Σ^r`, `Φ_{m+r,r}` families.

use std::collections::BTreeMap;

use num_traits::One;
use thom_algebra::{q, LinForm, MPoly, Monomial, VarId, Q};
use thom_euler::AlgebraId;

use crate::gf::GeneratingFunction;

fn z(i: usize) -> LinForm {
    LinForm::var(VarId::z(i))
}

/// `z_i + z_j − z_s`; `i = j` gives `2z_i − z_s`.
fn form(i: usize, j: usize, s: usize) -> LinForm {
    z(i).add(&z(j)).sub(&z(s))
}

fn reciprocal(mu: usize, scalar: Q, forms: &[(usize, usize, usize)]) -> GeneratingFunction {
    let den = forms.iter().map(|&(i, j, s)| form(i, j, s)).collect();
    GeneratingFunction::new(mu, MPoly::one(), den, Q::one() / scalar).expect("catalog entry")
}

/// `k_{Σ^r} = ∏_{i=1}^{r−1} z_i^i`.
pub fn sigma_generating_function(r: usize) -> GeneratingFunction {
    let num = MPoly::term(Monomial::from_pairs((1..r).map(|i| (VarId::z(i), i as u32))), Q::one());
    GeneratingFunction::new(r, num, vec![], Q::one()).expect("catalog entry")
}

/// `k_{Φ_{m+r,r}} = ∏_{i=1}^{r−1} z_{m+1+i}^i / (2^{m−1} (2z_1 − z_{m+1}) ∏_{i<m} (z_i + z_{i+1} − z_{m+1}))`
/// in `μ = m + r + 1` variables.
pub fn phi_generating_function(m: usize, r: usize) -> GeneratingFunction {
    assert!(m >= 1, "m >= 1");
    let mu = m + r + 1;
    let num = MPoly::term(Monomial::from_pairs((1..r).map(|i| (VarId::z(m + 1 + i), i as u32))), Q::one());
    let mut den = vec![form(1, 1, m + 1)];
    den.extend((1..m).map(|i| form(i, i + 1, m + 1)));
    let scalar = Q::one() / Q::from_integer((1i64 << (m - 1)).into());
    GeneratingFunction::new(mu, num, den, scalar).expect("catalog entry")
}

/// One representative `k_Q` per algebra; `k_Q` is not unique.
pub fn kq_catalog() -> BTreeMap<AlgebraId, GeneratingFunction> {
    let mut c = BTreeMap::new();
    c.insert(AlgebraId::a(1), GeneratingFunction::new(1, MPoly::one(), vec![], Q::one()).expect("A_1"));
    c.insert(AlgebraId::a(2), reciprocal(2, q(1), &[(1, 1, 2)]));
    c.insert(AlgebraId::a(3), reciprocal(3, q(1), &[(1, 1, 2), (1, 1, 3), (1, 2, 3)]));
    c.insert(AlgebraId::i2(2, 2), reciprocal(3, q(2), &[(1, 1, 3), (1, 2, 3)]));
    c.insert(AlgebraId::iii(2, 3), reciprocal(3, q(1), &[(1, 1, 3)]));
    c.insert(AlgebraId::iii(2, 4), reciprocal(4, q(1), &[(1, 1, 2), (1, 2, 3), (1, 1, 4), (1, 2, 4)]));
    // the printed form has 2z_1 − z_4 where 2z_2 − z_4 belongs; as printed its residue is 0
    c.insert(AlgebraId::iii(3, 3), reciprocal(4, q(4), &[(1, 1, 3), (1, 2, 3), (1, 2, 4), (2, 2, 4)]));
    c.insert(AlgebraId::i2(2, 3), reciprocal(4, q(1), &[(1, 1, 4), (2, 2, 3), (2, 2, 4), (1, 2, 4), (2, 3, 4)]));
    c.insert(AlgebraId::sigma21(), reciprocal(4, q(1), &[(1, 1, 3), (1, 2, 3), (1, 1, 4)]));
    for r in 1..=3 {
        c.insert(AlgebraId::sigma(r as u32), sigma_generating_function(r));
    }
    for total in 1..=3usize {
        for r in 0..total {
            c.insert(AlgebraId::phi(total as u32, r as u32), phi_generating_function(total - r, r));
        }
    }
    c
}
