//! Conversion to quotient variables, lowering, restriction to monomial
//! germs, and interpolation of Euler classes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thom_algebra::linsolve::{solve_exact, SolveError};
use thom_algebra::{resultant, MPoly, Monomial, Ns, RatFn, VarId, Q};
use thom_euler::{AlgebraId, EulerTable, Provenance};
use thom_ideals::{MonomialGerm, MonomialIdeal};
use thom_schur::quotient::rho_c;
use thom_schur::{c_values, partitions, schur_expand, Partition, SchurExpansion};

use crate::oracle::Sampler;
use crate::thompoly::{delta_value, QuotientForm, RootForm, ThomPolynomial, TpForm};
use crate::EngineError;

pub use thom_schur::rho;

const EXTRA_ROWS: usize = 10;

fn solve_in_basis(tp: &RootForm, d: u32, basis: &[Partition], seed: u64) -> Result<Vec<Q>, SolveError> {
    let need = basis.len() + EXTRA_ROWS;
    let mut sampler = Sampler::new(seed);
    let pts: Vec<(Vec<Q>, Vec<Q>)> = (0..need * 2).map(|_| sampler.point(tp.n, tp.p)).collect();
    let rows: Vec<Option<(Vec<Q>, Q)>> = pts
        .par_iter()
        .map(|(a, b)| {
            let v = tp.eval(a, b)?;
            let c = c_values(a, b, d as usize + basis.iter().map(|l| l.len()).max().unwrap_or(0));
            Some((basis.iter().map(|l| delta_value(l.parts(), &c)).collect(), v))
        })
        .collect();
    let (m, rhs): (Vec<Vec<Q>>, Vec<Q>) = rows.into_iter().flatten().take(need).unzip();
    solve_exact(&m, &rhs)
}

/// The unique `h` with `ρ_{n,p}(h) = tp`, in the Δ basis.
pub fn to_quotient(tp: &ThomPolynomial) -> Result<ThomPolynomial, EngineError> {
    let r = tp.root()?;
    let d = tp.codim;
    let bound = (r.n + 1) * (r.p + 1);
    if d as usize >= bound {
        return Err(EngineError::DegreeBound { degree: d, bound });
    }
    let seed = 0xc0ffee ^ ((r.n as u64) << 8) ^ ((r.p as u64) << 16) ^ d as u64;
    let mut widths = vec![None];
    if let Some(w) = r.width {
        widths.insert(0, Some(w));
    }
    for w in widths {
        let basis = partitions(d, w);
        match solve_in_basis(r, d, &basis, seed) {
            Ok(x) => {
                let mut e = SchurExpansion::new();
                for (l, c) in basis.into_iter().zip(x) {
                    e.add(l, c);
                }
                return Ok(ThomPolynomial::from_expansion(r.p as i64 - r.n as i64, e).with_codim(d));
            }
            Err(SolveError::Inconsistent) => continue,
            Err(SolveError::RankDeficient) => return Err(EngineError::Underdetermined),
        }
    }
    Err(EngineError::NotSupersymmetric)
}

impl ThomPolynomial {
    fn with_codim(mut self, d: u32) -> Self {
        self.codim = d;
        self
    }
}

/// `♭(m)`: `c^K ↦ c^{K−1}` on width-`m` monomials padded with `c_0`.
pub fn lower(h: &MPoly, m: usize) -> Result<MPoly, EngineError> {
    let mut out = MPoly::zero();
    for (mono, c) in h.terms() {
        let mut idx = Vec::new();
        for &(v, e) in mono.pairs() {
            if v.ns != Ns::C {
                return Err(EngineError::NotQuotient(mono.to_string()));
            }
            if v.index > 0 {
                idx.extend(std::iter::repeat_n(v.index, e as usize));
            }
        }
        if idx.len() > m {
            return Err(EngineError::TooWide { monomial: mono.to_string(), width: m });
        }
        idx.resize(m, 0);
        if idx.contains(&0) {
            continue;
        }
        let low = Monomial::from_pairs(idx.iter().filter(|&&k| k > 1).map(|&k| (VarId::c((k - 1) as usize), 1)));
        out.add_term(low, c.clone());
    }
    Ok(out)
}

/// `♭(m)` on a quotient-form class.
pub fn lower_tp(tp: &ThomPolynomial, m: usize) -> Result<ThomPolynomial, EngineError> {
    let q = tp.quotient()?;
    let low = lower(&q.c_poly(), m)?;
    let e = schur_expand(&low)?;
    Ok(ThomPolynomial::from_expansion(q.l - 1, e).with_codim(tp.codim.saturating_sub(m as u32)))
}

fn beta_substitution(f: &MonomialGerm) -> BTreeMap<VarId, MPoly> {
    f.weights().iter().enumerate().map(|(j, w)| (VarId::beta(j + 1), w.to_poly())).collect()
}

/// `tp|_f`: `β_i ↦` weight of the `i`-th coordinate monomial of `f`.
pub fn restrict(tp: &RootForm, f: &MonomialGerm) -> Result<MPoly, EngineError> {
    if tp.n != f.n || tp.p != f.p() {
        return Err(EngineError::Arity { n: tp.n, p: tp.p, fn_: f.n, fp: f.p() });
    }
    let poly = tp.symbolic().ok_or(EngineError::TooLarge("root form has no expansion"))?;
    Ok(poly.substitute_partial(&beta_substitution(f)))
}

/// Restriction of `ρ_{n,n+l}(h)` to `f`, computed in the quotient variables.
pub fn restrict_quotient(q: &QuotientForm, f: &MonomialGerm) -> Result<MPoly, EngineError> {
    let (n, p) = (f.n, f.p());
    if p as i64 - n as i64 != q.l {
        return Err(EngineError::Arity { n, p: (n as i64 + q.l).max(0) as usize, fn_: n, fp: p });
    }
    let h = q.c_poly();
    let kmax = h.vars().iter().filter(|v| v.ns == Ns::C).map(|v| v.index as usize).max().unwrap_or(0);
    let sub = beta_substitution(f);
    let asg: BTreeMap<VarId, MPoly> =
        rho_c(n, p, kmax).into_iter().enumerate().map(|(k, c)| (VarId::c(k), c.substitute_partial(&sub))).collect();
    Ok(h.substitute_partial(&asg))
}

fn interpolate(restricted: MPoly, f: &MonomialGerm) -> Result<RatFn, EngineError> {
    if restricted.is_zero() {
        return Ok(RatFn::Infinite);
    }
    let ideal = f.ideal()?;
    let num = resultant(&f.weights(), &ideal.quotient_weights());
    Ok(RatFn::from_parts(num, vec![(restricted, 1)])?)
}

/// `e(Q, I_f) = res(W_f | W_{Q_f}) / tp|_f`; a vanishing restriction gives `∞`.
pub fn euler_via_interpolation(tp: &ThomPolynomial, f: &MonomialGerm) -> Result<RatFn, EngineError> {
    let restricted = match &tp.form {
        TpForm::Root(r) => restrict(r, f)?,
        TpForm::Quotient(q) => restrict_quotient(q, f)?,
    };
    interpolate(restricted, f)
}

/// `min_generators(I)` padded to `p` coordinates by repeating the generator
/// of highest degree (the first one on ties).
pub fn padded_germ(ideal: &MonomialIdeal, p: usize) -> Result<MonomialGerm, EngineError> {
    let gens = ideal.min_generators();
    if gens.len() > p {
        return Err(EngineError::Padding { generators: gens.len(), p });
    }
    let deg = |v: &Vec<u32>| v.iter().sum::<u32>();
    let top = gens.iter().fold(&gens[0], |best, g| if deg(g) > deg(best) { g } else { best }).clone();
    let mut coords = gens;
    coords.resize(p, top);
    Ok(MonomialGerm::new(ideal.n(), coords)?)
}

/// Rebuilds the Euler data of `q` from a known `tp_Q(l₀)` in quotient form.
pub fn extrapolate_table(q: &AlgebraId, known: &ThomPolynomial) -> Result<EulerTable, EngineError> {
    let qf = known.quotient()?;
    if qf.l < 0 {
        return Err(EngineError::Precondition("negative l".into()));
    }
    let mu = q.mu();
    let mut table = EulerTable::new();
    for rep in table.representatives(q) {
        if rep.n() >= mu {
            continue;
        }
        let f = padded_germ(&rep.ideal, rep.n() + qf.l as usize)?;
        let e = euler_via_interpolation(known, &f)?;
        table.insert(q, &rep.ideal, e, Provenance::Extrapolated)?;
    }
    table.complete()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use thom_algebra::parse::parse_poly;

    #[test]
    fn lowering_examples() {
        let h = parse_poly("c2^2 + c1*c3 + 2*c4").unwrap();
        assert_eq!(lower(&h, 2).unwrap(), parse_poly("c1^2 + c2").unwrap());
        assert_eq!(lower(&parse_poly("c1").unwrap(), 1).unwrap(), MPoly::one());
        assert_eq!(lower(&parse_poly("c1^2").unwrap(), 2).unwrap(), MPoly::one());
        assert!(lower(&parse_poly("c1^3").unwrap(), 2).is_err());
    }

    #[test]
    fn a1_restricted_to_a_fold() {
        let tp = RootForm::poly(1, 1, parse_poly("b1 - a1").unwrap());
        let f = MonomialGerm::new(1, vec![vec![2]]).unwrap();
        assert_eq!(restrict(&tp, &f).unwrap(), parse_poly("a1").unwrap());
    }
}
