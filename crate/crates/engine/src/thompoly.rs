//! Thom polynomials in Chern roots and in quotient variables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use thom_algebra::{MPoly, VarId, Q};
use thom_schur::SchurExpansion;

use crate::oracle::{PointEval, Sampler};
use crate::EngineError;

/// The body of a root-form class: an expanded polynomial, or an exact
/// point oracle for sums that are too large to expand.
#[derive(Clone)]
pub enum RootBody {
    Poly(MPoly),
    Oracle(Arc<dyn PointEval>),
}

impl fmt::Debug for RootBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootBody::Poly(p) => write!(f, "Poly({p})"),
            RootBody::Oracle(_) => write!(f, "Oracle"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootForm {
    pub n: usize,
    pub p: usize,
    pub body: RootBody,
    /// Maximal length of the partitions expected in the quotient form.
    pub width: Option<usize>,
}

impl RootForm {
    pub fn poly(n: usize, p: usize, poly: MPoly) -> Self {
        RootForm { n, p, body: RootBody::Poly(poly), width: None }
    }

    pub fn oracle(n: usize, p: usize, o: Arc<dyn PointEval>) -> Self {
        RootForm { n, p, body: RootBody::Oracle(o), width: None }
    }

    pub fn eval(&self, alpha: &[Q], beta: &[Q]) -> Option<Q> {
        match &self.body {
            RootBody::Poly(f) => f.eval(&crate::oracle::point_map(alpha, beta)).ok(),
            RootBody::Oracle(o) => o.eval(alpha, beta),
        }
    }

    /// The expanded polynomial, if the body can produce one.
    pub fn symbolic(&self) -> Option<MPoly> {
        match &self.body {
            RootBody::Poly(f) => Some(f.clone()),
            RootBody::Oracle(o) => o.symbolic(),
        }
    }
}

impl PointEval for RootForm {
    fn n(&self) -> usize {
        self.n
    }
    fn p(&self) -> usize {
        self.p
    }
    fn eval(&self, alpha: &[Q], beta: &[Q]) -> Option<Q> {
        RootForm::eval(self, alpha, beta)
    }
    fn symbolic(&self) -> Option<MPoly> {
        RootForm::symbolic(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientForm {
    /// `l = p − n`
    pub l: i64,
    pub expansion: SchurExpansion,
}

impl QuotientForm {
    pub fn c_poly(&self) -> MPoly {
        self.expansion.to_poly()
    }
}

#[derive(Clone, Debug)]
pub enum TpForm {
    Root(RootForm),
    Quotient(QuotientForm),
}

#[derive(Clone, Debug)]
pub struct ThomPolynomial {
    pub form: TpForm,
    pub codim: u32,
}

impl ThomPolynomial {
    pub fn root(&self) -> Result<&RootForm, EngineError> {
        match &self.form {
            TpForm::Root(r) => Ok(r),
            TpForm::Quotient(_) => Err(EngineError::WrongForm("root")),
        }
    }

    pub fn quotient(&self) -> Result<&QuotientForm, EngineError> {
        match &self.form {
            TpForm::Quotient(q) => Ok(q),
            TpForm::Root(_) => Err(EngineError::WrongForm("quotient")),
        }
    }

    pub fn expansion(&self) -> Result<&SchurExpansion, EngineError> {
        self.quotient().map(|q| &q.expansion)
    }

    pub fn from_expansion(l: i64, expansion: SchurExpansion) -> Self {
        let codim = expansion.weight().unwrap_or(0);
        ThomPolynomial { form: TpForm::Quotient(QuotientForm { l, expansion }), codim }
    }
}

fn swap_vars(f: &MPoly, a: VarId, b: VarId) -> MPoly {
    f.rename(|v| if v == a { b } else if v == b { a } else { v })
}

fn symbolic_supersymmetric(f: &MPoly, n: usize, p: usize) -> bool {
    for i in 1..n {
        if &swap_vars(f, VarId::alpha(i), VarId::alpha(i + 1)) != f {
            return false;
        }
    }
    for j in 1..p {
        if &swap_vars(f, VarId::beta(j), VarId::beta(j + 1)) != f {
            return false;
        }
    }
    let t = MPoly::var(VarId::t());
    let mut asg = BTreeMap::new();
    asg.insert(VarId::alpha(n), t.clone());
    asg.insert(VarId::beta(p), t);
    f.substitute_partial(&asg).degree_in(VarId::t()) == 0
}

/// Separate symmetry in α and β, and independence of `t` after
/// `α_n = β_p = t`. Oracle bodies are checked at seeded sample points.
pub fn supersymmetry_check(tp: &RootForm) -> bool {
    let (n, p) = (tp.n, tp.p);
    if n == 0 || p == 0 {
        return false;
    }
    if let RootBody::Poly(f) = &tp.body {
        return symbolic_supersymmetric(f, n, p);
    }
    let mut s = Sampler::new(0x5u64 + 17 * n as u64 + p as u64);
    let mut checked = 0;
    for _ in 0..64 {
        if checked == 3 {
            break;
        }
        let (a, b) = s.point(n, p);
        let Some(base) = tp.eval(&a, &b) else { continue };
        let mut ok = true;
        let mut defined = true;
        for i in 0..n.saturating_sub(1) {
            let mut a2 = a.clone();
            a2.swap(i, i + 1);
            match tp.eval(&a2, &b) {
                Some(v) => ok &= v == base,
                None => defined = false,
            }
        }
        for j in 0..p.saturating_sub(1) {
            let mut b2 = b.clone();
            b2.swap(j, j + 1);
            match tp.eval(&a, &b2) {
                Some(v) => ok &= v == base,
                None => defined = false,
            }
        }
        let t = s.values(2);
        let mut vals = Vec::new();
        for tv in &t {
            let (mut a2, mut b2) = (a.clone(), b.clone());
            a2[n - 1] = tv.clone();
            b2[p - 1] = tv.clone();
            vals.push(tp.eval(&a2, &b2));
        }
        match (&vals[0], &vals[1]) {
            (Some(x), Some(y)) => ok &= x == y,
            _ => defined = false,
        }
        if !ok {
            return false;
        }
        if defined {
            checked += 1;
        }
    }
    checked > 0
}

/// Numeric value of `Δ_λ = det(c_{λ_i+j−i})` from `c_0, c_1, …`.
pub fn delta_value(parts: &[u32], c: &[Q]) -> Q {
    let k = parts.len();
    let entry = |i: usize, j: usize| -> Q {
        let idx = parts[i] as i64 + j as i64 - i as i64;
        if idx < 0 {
            Q::zero()
        } else {
            c.get(idx as usize).cloned().unwrap_or_else(Q::zero)
        }
    };
    let mut m: Vec<Vec<Q>> = (0..k).map(|i| (0..k).map(|j| entry(i, j)).collect()).collect();
    det(&mut m)
}

fn det(m: &mut [Vec<Q>]) -> Q {
    let k = m.len();
    let mut acc = Q::from_integer(1.into());
    for col in 0..k {
        let Some(piv) = (col..k).find(|&r| !m[r][col].is_zero()) else { return Q::zero() };
        if piv != col {
            m.swap(piv, col);
            acc = -acc;
        }
        let pv = m[col][col].clone();
        acc *= &pv;
        for r in col + 1..k {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            let (top, rest) = m.split_at_mut(r);
            for (dst, src) in rest[0][col..k].iter_mut().zip(&top[col][col..k]) {
                let sub = &f * src;
                *dst -= sub;
            }
        }
    }
    acc
}
