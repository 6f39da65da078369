//! `RES(k_Q · dis_μ · ∏ z_i^l D_i)` by Laurent coefficient extraction.

use num_traits::Signed;
use thom_algebra::{MPoly, Monomial, VarId};
use thom_engine::ThomPolynomial;
use thom_schur::schur_expand;

use crate::gf::GeneratingFunction;
use crate::laurent::laurent_expand;
use crate::ResidueError;

/// `∏_{i<j} (z_i − z_j)`.
pub fn discriminant(mu: usize) -> MPoly {
    let mut acc = MPoly::one();
    for i in 1..=mu {
        for j in i + 1..=mu {
            acc = &acc * &(&MPoly::var(VarId::z(i)) - &MPoly::var(VarId::z(j)));
        }
    }
    acc
}

/// The residue with the default truncation `l + 1`.
pub fn iterated_residue(k: &GeneratingFunction, l: usize) -> Result<MPoly, ResidueError> {
    iterated_residue_with(k, l, l as i64 + 1)
}

/// With `D_i = Σ c_j z_i^{−j}`, the coefficient of `∏ z_i^{−1}` picks
/// `∏ c_{a_i+l+1}` from each Laurent term `z^a` of `k · dis_μ`. The sign
/// is fixed so that the lexicographically largest Schur term is positive.
pub fn iterated_residue_with(k: &GeneratingFunction, l: usize, truncation: i64) -> Result<MPoly, ResidueError> {
    let need = l as i64 + 1;
    if truncation < need {
        return Err(ResidueError::Precondition(format!("truncation {truncation} is below l + 1 = {need}")));
    }
    let slice = laurent_expand(k, &discriminant(k.mu), truncation)?;
    let mut h = MPoly::zero();
    for (a, c) in &slice.terms {
        if a.iter().any(|&x| x < -need) {
            continue;
        }
        let m = Monomial::from_pairs(a.iter().map(|&x| (x + need) as usize).filter(|&j| j > 0).map(|j| (VarId::c(j), 1)));
        h.add_term(m, c.clone());
    }
    let e = schur_expand(&h)?;
    if e.top().is_some_and(|(_, c)| c.is_negative()) {
        h = -h;
    }
    Ok(h)
}

/// The residue as a quotient-form class.
pub fn residue_tp(k: &GeneratingFunction, l: usize) -> Result<ThomPolynomial, ResidueError> {
    let h = iterated_residue(k, l)?;
    Ok(ThomPolynomial::from_expansion(l as i64, schur_expand(&h)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use thom_algebra::parse::parse_poly;
    use thom_algebra::Q;

    #[test]
    fn a1_is_a_single_chern_class() {
        let k = GeneratingFunction::new(1, MPoly::one(), vec![], Q::one()).unwrap();
        for l in 0..4 {
            assert_eq!(iterated_residue(&k, l).unwrap(), MPoly::var(VarId::c(l + 1)));
        }
    }

    #[test]
    fn a2_at_zero() {
        let k = GeneratingFunction::parse(2, "1/(2*z1-z2)").unwrap();
        assert_eq!(iterated_residue(&k, 0).unwrap(), parse_poly("c1^2 + c2").unwrap());
    }

    #[test]
    fn short_truncation_is_refused() {
        let k = GeneratingFunction::parse(2, "1/(2*z1-z2)").unwrap();
        assert!(iterated_residue_with(&k, 2, 2).is_err());
    }
}
