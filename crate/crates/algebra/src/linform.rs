use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::poly::{MPoly, Monomial, Q};
use crate::var::VarId;

/// Homogeneous linear form with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinForm {
    coeffs: BTreeMap<VarId, Q>,
}

pub type WeightSet = Vec<LinForm>;

impl LinForm {
    pub fn zero() -> Self {
        LinForm { coeffs: BTreeMap::new() }
    }

    pub fn var(v: VarId) -> Self {
        LinForm::from_pairs([(v, Q::one())])
    }

    pub fn from_pairs<I: IntoIterator<Item = (VarId, Q)>>(pairs: I) -> Self {
        let mut coeffs: BTreeMap<VarId, Q> = BTreeMap::new();
        for (v, c) in pairs {
            *coeffs.entry(v).or_insert_with(Q::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LinForm { coeffs }
    }

    /// `Σ a_j α_j` for an integer exponent vector (1-based alpha indices).
    pub fn alpha_weight(exps: &[u32]) -> Self {
        LinForm::from_pairs(
            exps.iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(j, &e)| (VarId::alpha(j + 1), Q::from_integer((e as i64).into()))),
        )
    }

    /// Reads a linear polynomial; `None` if it has a constant or nonlinear term.
    pub fn from_poly(p: &MPoly) -> Option<Self> {
        let mut pairs = Vec::new();
        for (m, c) in p.terms() {
            match m.pairs() {
                [(v, 1)] => pairs.push((*v, c.clone())),
                _ => return None,
            }
        }
        Some(LinForm::from_pairs(pairs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<VarId, Q> {
        &self.coeffs
    }

    pub fn coeff(&self, v: VarId) -> Q {
        self.coeffs.get(&v).cloned().unwrap_or_else(Q::zero)
    }

    pub fn to_poly(&self) -> MPoly {
        MPoly::from_terms(self.coeffs.iter().map(|(v, c)| (Monomial::var(*v), c.clone())))
    }

    pub fn eval(&self, point: &HashMap<VarId, Q>) -> Option<Q> {
        let mut s = Q::zero();
        for (v, c) in &self.coeffs {
            s += c * point.get(v)?;
        }
        Some(s)
    }

    pub fn scale(&self, c: &Q) -> LinForm {
        LinForm::from_pairs(self.coeffs.iter().map(|(v, a)| (*v, a * c)))
    }

    pub fn add(&self, other: &LinForm) -> LinForm {
        LinForm::from_pairs(self.coeffs.iter().chain(other.coeffs.iter()).map(|(v, c)| (*v, c.clone())))
    }

    pub fn sub(&self, other: &LinForm) -> LinForm {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> LinForm {
        LinForm::from_pairs(self.coeffs.iter().map(|(v, c)| (f(*v), c.clone())))
    }

    /// Coprime integer coefficients, positive on the first variable.
    pub fn canonical(&self) -> (Q, LinForm) {
        let (s, p) = self.to_poly().primitive_part();
        (s, LinForm::from_poly(&p).expect("linear"))
    }

    /// Largest variable with a nonzero coefficient.
    pub fn top_var(&self) -> Option<(VarId, Q)> {
        self.coeffs.iter().next_back().map(|(v, c)| (*v, c.clone()))
    }
}

/// `∏_{s∈S, t∈T} (s − t)`.
pub fn resultant(s: &[LinForm], t: &[LinForm]) -> MPoly {
    let mut acc = MPoly::one();
    for a in s {
        for b in t {
            acc = &acc * &a.sub(b).to_poly();
        }
    }
    acc
}

/// Numeric resultant of already evaluated weights.
pub fn resultant_values(s: &[Q], t: &[Q]) -> Q {
    let mut acc = Q::one();
    for a in s {
        for b in t {
            acc *= a - b;
        }
    }
    acc
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (v, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if a.is_one() {
                write!(f, "{v}")?;
            } else if a.is_integer() {
                write!(f, "{}*{v}", a.numer())?;
            } else {
                write!(f, "({}/{})*{v}", a.numer(), a.denom())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
