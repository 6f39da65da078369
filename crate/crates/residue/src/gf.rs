use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thom_algebra::parse::parse_ratfn;
use thom_algebra::{LinForm, MPoly, Ns, RatFn, VarId, Q};

use crate::ResidueError;

/// `scalar · h(z) / ∏ ω_a(z)` with linear `ω_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratingFunction {
    pub mu: usize,
    pub numerator: MPoly,
    pub denominator: Vec<LinForm>,
    pub scalar: Q,
}

fn check_vars<'a>(mu: usize, vars: impl IntoIterator<Item = &'a VarId>) -> Result<(), ResidueError> {
    for v in vars {
        if v.ns != Ns::Z || v.index < 1 || v.index as usize > mu {
            return Err(ResidueError::IllPosed(format!("{v} is not one of z1..z{mu}")));
        }
    }
    Ok(())
}

impl GeneratingFunction {
    pub fn new(mu: usize, numerator: MPoly, denominator: Vec<LinForm>, scalar: Q) -> Result<Self, ResidueError> {
        check_vars(mu, &numerator.vars())?;
        for w in &denominator {
            if w.is_zero() {
                return Err(ResidueError::IllPosed("zero denominator factor".into()));
            }
            check_vars(mu, w.coeffs().keys())?;
        }
        Ok(GeneratingFunction { mu, numerator, denominator, scalar })
    }

    /// `1 / (scalar · ∏ ω_a)` from integer coefficient rows `[c_1, …, c_μ]`.
    pub fn reciprocal_of(mu: usize, scalar: Q, rows: &[&[i64]]) -> Result<Self, ResidueError> {
        let den = rows
            .iter()
            .map(|r| {
                LinForm::from_pairs(
                    r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (VarId::z(i + 1), Q::from_integer(c.into()))),
                )
            })
            .collect();
        Self::new(mu, MPoly::one(), den, Q::one() / scalar)
    }

    pub fn from_ratfn(mu: usize, f: &RatFn) -> Result<Self, ResidueError> {
        let scalar = f.scalar().ok_or_else(|| ResidueError::IllPosed("infinite".into()))?.clone();
        let mut num = MPoly::one();
        for (g, k) in f.num_factors() {
            num = &num * &g.pow(*k);
        }
        let mut den = Vec::new();
        for (g, k) in f.den_factors() {
            let w = LinForm::from_poly(g).ok_or_else(|| ResidueError::IllPosed(format!("non-linear factor {g}")))?;
            den.extend(std::iter::repeat_n(w, *k as usize));
        }
        Self::new(mu, num, den, scalar)
    }

    /// Parses an expression in `z1, …, z_μ` such as `1/(2*(2*z1-z3)*(z1+z2-z3))`.
    pub fn parse(mu: usize, src: &str) -> Result<Self, ResidueError> {
        Self::from_ratfn(mu, &parse_ratfn(src)?)
    }

    pub fn to_ratfn(&self) -> Result<RatFn, ResidueError> {
        let den: Vec<(MPoly, u32)> = self.denominator.iter().map(|w| (w.to_poly(), 1)).collect();
        Ok(RatFn::from_parts(self.numerator.scale(&self.scalar), den)?)
    }

    /// `deg h − #ω`, for a homogeneous nonzero numerator.
    pub fn degree(&self) -> Option<i64> {
        if self.numerator.is_zero() || !self.numerator.is_homogeneous() {
            return None;
        }
        Some(self.numerator.total_degree()? as i64 - self.denominator.len() as i64)
    }

    pub fn eval(&self, z: &[Q]) -> Option<Q> {
        let pt: HashMap<VarId, Q> = z.iter().enumerate().map(|(i, v)| (VarId::z(i + 1), v.clone())).collect();
        let mut den = Q::one();
        for w in &self.denominator {
            den *= w.eval(&pt)?;
        }
        if den.is_zero() {
            return None;
        }
        Some(self.numerator.eval(&pt).ok()? * &self.scalar / den)
    }

    /// The denominator as index triples `(i, j, s)` for `z_i + z_j − z_s`
    /// (`i = j` for `2z_i − z_s`), if it has that shape and no repeats.
    pub fn triples(&self) -> Option<Vec<(usize, usize, usize)>> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for w in &self.denominator {
            let (_, w) = w.canonical();
            let c: Vec<(usize, i64)> =
                w.coeffs().iter().map(|(v, c)| (v.index as usize, thom_algebra::poly::q_to_i64(c).unwrap_or(0))).collect();
            let t = match c.as_slice() {
                [(i, 2), (s, -1)] if i < s => (*i, *i, *s),
                [(i, -2), (s, 1)] if i < s => (*i, *i, *s),
                [(i, 1), (j, 1), (s, -1)] if j < s => (*i, *j, *s),
                [(i, -1), (j, -1), (s, 1)] if j < s => (*i, *j, *s),
                _ => return None,
            };
            if !seen.insert(t) {
                return None;
            }
            out.push(t);
        }
        Some(out)
    }
}

impl fmt::Display for GeneratingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.scale(&self.scalar);
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        write!(f, "({num})/(")?;
        for (i, w) in self.denominator.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "({w})")?;
        }
        write!(f, ")")
    }
}
