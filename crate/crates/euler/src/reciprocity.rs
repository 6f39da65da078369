//! `Σ_I 1/e(Q, I) = 0` over the codimension-μ monomial ideals in μ variables.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thom_algebra::perm::permutations;
use thom_algebra::sym::permute_alpha;
use thom_algebra::{MPoly, RatFn, VarId, Q};
use thom_ideals::{enumerate_ideals, MonomialIdeal};

use crate::algebra::AlgebraId;
use crate::table::{EntryValue, EulerTable};
use crate::EulerError;

/// `Σ 1/e(Q, I)` over all ideals except `M_μ²`, symbolically.
fn partial_sum(table: &EulerTable, q: &AlgebraId) -> Result<RatFn, EulerError> {
    let mu = q.mu();
    let sq = MonomialIdeal::max_square(mu);
    let mut acc = RatFn::zero();
    for i in enumerate_ideals(mu, mu) {
        if i == sq {
            continue;
        }
        match table.lookup(q, &i)? {
            EntryValue::Exact(f) => acc = acc.try_add(&f.reciprocal()).map_err(EulerError::Algebra)?,
            EntryValue::Pointwise => return Err(EulerError::SymbolicTooLarge(mu)),
        }
    }
    Ok(acc)
}

/// Solves the reciprocity relation for `e(Q, M_μ²)`.
pub fn complete_by_reciprocity(table: &EulerTable, q: &AlgebraId) -> Result<RatFn, EulerError> {
    let mu = q.mu();
    if mu == 1 {
        return Err(EulerError::Tautological(q.to_string()));
    }
    if mu > 3 {
        return Err(EulerError::SymbolicTooLarge(mu));
    }
    let s = partial_sum(table, q)?;
    if s.is_zero() {
        return Err(EulerError::Tautological(q.to_string()));
    }
    Ok(s.reciprocal().neg().split_factors(&small_linear_forms(mu, 3)))
}

/// Primitive linear forms `Σ c_i α_i` with `|c_i| ≤ bound`, fewest
/// variables first.
fn small_linear_forms(mu: usize, bound: i64) -> Vec<MPoly> {
    let mut coeffs: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..mu {
        coeffs = coeffs.into_iter().flat_map(|c| (-bound..=bound).map(move |x| [c.clone(), vec![x]].concat())).collect();
    }
    coeffs.sort_by_key(|c| (c.iter().filter(|&&x| x != 0).count(), c.iter().map(|x| x.abs()).sum::<i64>()));
    let mut out: Vec<MPoly> = Vec::new();
    for c in coeffs {
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        let mut f = MPoly::zero();
        for (i, &x) in c.iter().enumerate() {
            f += &MPoly::var(VarId::alpha(i + 1)).scale(&Q::from_integer(x.into()));
        }
        let (_, f) = f.primitive_part();
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

/// The full symbolic reciprocity sum, for tables whose `M_μ²` entry is exact.
pub fn reciprocity_sum(table: &EulerTable, q: &AlgebraId) -> Result<RatFn, EulerError> {
    let mu = q.mu();
    let rest = partial_sum(table, q)?;
    match table.lookup(q, &MonomialIdeal::max_square(mu))? {
        EntryValue::Exact(f) => rest.try_add(&f.reciprocal()).map_err(EulerError::Algebra),
        EntryValue::Pointwise => Err(EulerError::SymbolicTooLarge(mu)),
    }
}

/// Deterministic sample points with small distinct integer coordinates.
pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..dim).map(|_| Q::from_integer(rng.gen_range(-40i64..=40).into())).collect()).collect()
}

/// `e(Q, M_μ²)` must be `S_μ`-invariant. Checked symbolically for exact
/// entries and at sample points for pointwise ones.
pub fn max_square_is_symmetric(table: &EulerTable, q: &AlgebraId, samples: usize) -> Result<bool, EulerError> {
    let mu = q.mu();
    let sq = MonomialIdeal::max_square(mu);
    match table.lookup(q, &sq)? {
        EntryValue::Exact(f) => Ok(permutations(mu).iter().all(|s| permute_alpha(&f, s) == f)),
        EntryValue::Pointwise => {
            let perms = permutations(mu);
            let mut checked = 0;
            for pt in sample_points(mu, samples * 4, 0x5eed ^ mu as u64) {
                let Some(base) = table.max_square_reciprocal_at(q, &pt)? else { continue };
                for s in &perms {
                    let moved: Vec<Q> = s.iter().map(|&i| pt[i].clone()).collect();
                    match table.max_square_reciprocal_at(q, &moved)? {
                        Some(v) if v == base => {}
                        Some(_) => return Ok(false),
                        None => {}
                    }
                }
                checked += 1;
                if checked == samples {
                    break;
                }
            }
            Ok(checked == samples)
        }
    }
}

/// The constant `a` with `deg e(Q, I_i) = n(i)·μ − a` over the finite
/// exact entries.
pub fn homogeneity_constant(table: &EulerTable, q: &AlgebraId) -> Result<i64, EulerError> {
    let mu = q.mu() as i64;
    let mut a: Option<i64> = None;
    for t in table.terms(q)? {
        let EntryValue::Exact(f) = &t.value else { continue };
        let d = f.degree().ok_or_else(|| EulerError::Inhomogeneous(q.to_string(), t.ideal.to_string()))?;
        let here = t.ideal.n() as i64 * mu - d;
        match a {
            None => a = Some(here),
            Some(x) if x == here => {}
            Some(_) => return Err(EulerError::Inhomogeneous(q.to_string(), t.ideal.to_string())),
        }
    }
    a.ok_or_else(|| EulerError::UnknownAlgebra(q.to_string()))
}

/// `Σ_I 1/e(Q, I)` at a point; ideals with a pole there make it `None`.
pub fn reciprocity_sum_at(table: &EulerTable, q: &AlgebraId, vals: &[Q]) -> Result<Option<Q>, EulerError> {
    let mu = q.mu();
    let mut acc = Q::zero();
    for i in enumerate_ideals(mu, mu) {
        match table.reciprocal_at(q, &i, vals)? {
            Some(v) => acc += v,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use thom_algebra::parse::parse_ratfn;

    #[test]
    fn a2_from_two_fixed_points() {
        let t = crate::table::load_table("A_2 | (x^3) | 1\n").unwrap();
        let got = complete_by_reciprocity(&t, &AlgebraId::a(2)).unwrap();
        assert_eq!(got, parse_ratfn("(1/3)*(a1-2*a2)*(a2-2*a1)").unwrap());
    }

    #[test]
    fn single_fixed_point_is_tautological() {
        let t = EulerTable::shipped();
        assert!(matches!(complete_by_reciprocity(t, &AlgebraId::a(1)), Err(EulerError::Tautological(_))));
    }
}
