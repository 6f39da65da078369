//! The residue form against the localization form, and the asymmetrization
//! identity `Asym_μ(k_Q) · e(Q, M_μ²)|_{α:=z} = ±dis_μ`.

use std::sync::Arc;

use num_traits::{One, Zero};
use thom_algebra::perm::{permutations, sign};
use thom_algebra::sym::{alpha_to_z, asymmetrize};
use thom_algebra::Q;
use thom_engine::{to_quotient, tp_quotient, Sampler};
use thom_euler::{AlgebraId, EntryValue, EulerTable, Family};
use thom_ideals::MonomialIdeal;
use thom_phi::phi_tp_localized;

use crate::catalog::kq_catalog;
use crate::gf::GeneratingFunction;
use crate::residue::{discriminant, residue_tp};
use crate::ResidueError;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub passed: bool,
    pub details: Vec<String>,
}

fn catalog_entry(q: &AlgebraId) -> Result<GeneratingFunction, ResidueError> {
    kq_catalog().remove(q).ok_or_else(|| ResidueError::NotInCatalog(q.to_string()))
}

/// `RES(k_Q …)` against `to_quotient(localize_tp(Q))` for `l ≤ l_max`.
/// `Φ_{m,r}` is localized over `P(Sym²ℂ^m)` instead of an Euler table.
pub fn residue_vs_localization(q: &AlgebraId, l_max: usize, table: Arc<EulerTable>) -> Result<CheckReport, ResidueError> {
    let k = catalog_entry(q)?;
    let mut details = Vec::new();
    let mut passed = true;
    for l in 0..=l_max {
        let res = residue_tp(&k, l)?;
        let loc = if q.family == Family::Phi {
            let (m, r) = (q.params[0] as usize, q.params[1] as usize);
            to_quotient(&phi_tp_localized(m, r, m + l)?)?
        } else {
            tp_quotient(q, l, table.clone())?
        };
        let (a, b) = (res.expansion()?, loc.expansion()?);
        if a == b {
            details.push(format!("{q} l={l}: {a}"));
        } else {
            passed = false;
            details.push(format!("{q} l={l}: residue {a} but localization {b}"));
        }
    }
    Ok(CheckReport { passed, details })
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymReport {
    pub holds: bool,
    /// `ε` with `Asym_μ(k_Q) · e = ε · dis_μ`, when determined.
    pub sign: Option<i64>,
    pub symbolic: bool,
}

fn dis_value(z: &[Q]) -> Q {
    let mut acc = Q::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            acc *= &z[i] - &z[j];
        }
    }
    acc
}

fn asym_value(k: &GeneratingFunction, z: &[Q]) -> Option<Q> {
    let mut acc = Q::zero();
    for s in permutations(k.mu) {
        let moved: Vec<Q> = s.iter().map(|&i| z[i].clone()).collect();
        let v = k.eval(&moved)?;
        acc += if sign(&s) < 0 { -v } else { v };
    }
    Some(acc)
}

const SAMPLES: usize = 6;

/// Checks the identity symbolically when `e(Q, M_μ²)` is stored exactly,
/// and at seeded points otherwise. Both signs are accepted.
pub fn asym_consistency(q: &AlgebraId, table: &EulerTable) -> Result<AsymReport, ResidueError> {
    asym_consistency_with(&catalog_entry(q)?, q, table)
}

/// The same check for a candidate `k` that is not in the catalog.
pub fn asym_consistency_with(k: &GeneratingFunction, q: &AlgebraId, table: &EulerTable) -> Result<AsymReport, ResidueError> {
    let mu = k.mu;
    let sq = MonomialIdeal::max_square(mu);
    if let EntryValue::Exact(e) = table.lookup(q, &sq)? {
        if e.is_infinite() {
            return Ok(AsymReport { holds: false, sign: None, symbolic: true });
        }
        let prod = asymmetrize(&k.to_ratfn()?, mu)?.try_mul(&alpha_to_z(&e))?;
        let dis = discriminant(mu);
        let sign = match prod.to_poly() {
            Ok(p) if p == dis => Some(1),
            Ok(p) if p == -dis => Some(-1),
            _ => None,
        };
        return Ok(AsymReport { holds: sign.is_some(), sign, symbolic: true });
    }
    let mut sampler = Sampler::new(0xa5e7 + mu as u64);
    let mut sign: Option<i64> = None;
    let mut used = 0;
    for _ in 0..SAMPLES * 8 {
        if used == SAMPLES {
            break;
        }
        let z = sampler.values(mu);
        let Some(lhs) = asym_value(k, &z) else { continue };
        let Some(recip) = table.reciprocal_at(q, &sq, &z)? else { continue };
        let rhs = dis_value(&z) * recip;
        if rhs.is_zero() {
            continue;
        }
        let eps = if lhs == rhs {
            1
        } else if lhs == -rhs.clone() {
            -1
        } else {
            return Ok(AsymReport { holds: false, sign: None, symbolic: false });
        };
        if sign.is_some_and(|s| s != eps) {
            return Ok(AsymReport { holds: false, sign: None, symbolic: false });
        }
        sign = Some(eps);
        used += 1;
    }
    Ok(AsymReport { holds: sign.is_some(), sign, symbolic: false })
}
