use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::var::VarId;
use crate::AlgebraError;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse exponent vector: sorted by variable, all exponents positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut m: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial(m.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        match self.0.binary_search_by(|&(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let out = other
            .0
            .iter()
            .filter_map(|&(v, e)| {
                let r = e - self.exponent(v);
                (r > 0).then_some((v, r))
            })
            .collect();
        Monomial(out)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic; earlier variables weigh more.
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        for (x, y) in self.0.iter().zip(other.0.iter()) {
            if x.0 != y.0 {
                return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
            }
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(q(n))
    }

    pub fn var(v: VarId) -> Self {
        MPoly::term(Monomial::var(v), Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(it: I) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Q)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Total degree when every variable `v` is weighted by `w(v)`.
    pub fn weighted_degrees(&self, w: impl Fn(VarId) -> i64) -> BTreeSet<i64> {
        self.terms
            .keys()
            .map(|m| m.pairs().iter().map(|&(v, e)| w(v) * e as i64).sum())
            .collect()
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn product<'a, I: IntoIterator<Item = &'a MPoly>>(it: I) -> MPoly {
        let mut acc = MPoly::one();
        for p in it {
            acc = &acc * p;
        }
        acc
    }

    /// Evaluates at a point; every occurring variable must be assigned.
    pub fn eval(&self, point: &HashMap<VarId, Q>) -> Result<Q, AlgebraError> {
        let mut powers: HashMap<(VarId, u32), Q> = HashMap::new();
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let base = point.get(&v).ok_or(AlgebraError::MissingAssignment(v))?;
                let p = powers.entry((v, e)).or_insert_with(|| pow_q(base, e));
                t *= &*p;
            }
            total += t;
        }
        Ok(total)
    }

    /// Exact substitution of polynomials for variables.
    pub fn substitute(&self, assignment: &BTreeMap<VarId, MPoly>) -> Result<MPoly, AlgebraError> {
        let mut cache: HashMap<(VarId, u32), MPoly> = HashMap::new();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                let base = assignment.get(&v).ok_or(AlgebraError::MissingAssignment(v))?;
                let p = cache.entry((v, e)).or_insert_with(|| base.pow(e));
                t = &t * &*p;
            }
            out += &t;
        }
        Ok(out)
    }

    /// Substitutes only the listed variables, leaving the rest alone.
    pub fn substitute_partial(&self, assignment: &BTreeMap<VarId, MPoly>) -> MPoly {
        let mut full = assignment.clone();
        for v in self.vars() {
            full.entry(v).or_insert_with(|| MPoly::var(v));
        }
        self.substitute(&full).expect("total assignment")
    }

    /// Renames variables through an injective map.
    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> MPoly {
        MPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (f(v), e))), c.clone())),
        )
    }

    /// Quotient `self / d`, or the remainder when `d` does not divide.
    pub fn exact_divide(&self, d: &MPoly) -> Result<MPoly, AlgebraError> {
        let (lm, lc) = match d.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(AlgebraError::DivisionByZero),
        };
        if let Some(c) = d.constant_value() {
            return Ok(self.scale(&(Q::one() / c)));
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        let mut leftover = MPoly::zero();
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = &c / &lc;
                for (dm, dc) in d.terms.iter() {
                    rem.add_term(dm.mul(&qm), -(dc * &qc));
                }
                quot.add_term(qm, qc);
            } else {
                rem.terms.remove(&m);
                leftover.add_term(m, c);
            }
        }
        if leftover.is_zero() {
            Ok(quot)
        } else {
            Err(AlgebraError::NotDivisible { remainder: leftover.to_string() })
        }
    }

    /// Divides out `d` as often as it goes; returns the multiplicity.
    pub fn divide_out(&self, d: &MPoly, max: u32) -> (MPoly, u32) {
        let mut cur = self.clone();
        let mut k = 0;
        while k < max && !cur.is_zero() {
            match cur.exact_divide(d) {
                Ok(q) => {
                    cur = q;
                    k += 1;
                }
                Err(_) => break,
            }
        }
        (cur, k)
    }

    /// Scales to integer coprime coefficients with positive leading term.
    /// Returns the scalar `s` with `self = s * result`.
    pub fn primitive_part(&self) -> (Q, MPoly) {
        if self.is_zero() {
            return (Q::zero(), MPoly::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den_lcm / c.denom());
            g = num_integer::Integer::gcd(&g, &n);
        }
        let mut s = BigRational::new(g, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            s = -s;
        }
        let inv = Q::one() / &s;
        (s, self.scale(&inv))
    }

    /// Degree-`k` homogeneous component.
    pub fn homogeneous_part(&self, k: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficients as a polynomial in `v` (key = exponent of v).
    pub fn coefficients_in(&self, v: VarId) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = Monomial::from_pairs(m.pairs().iter().copied().filter(|&(w, _)| w != v));
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }
}

pub fn pow_q(b: &Q, e: u32) -> Q {
    num_traits::pow::pow(b.clone(), e as usize)
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn fmt_coeff_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Q, body: &dyn fmt::Display, body_is_one: bool) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let coeff_str = if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("({}/{})", a.numer(), a.denom())
    };
    if body_is_one {
        write!(f, "{coeff_str}")
    } else if a.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{coeff_str}*{body}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            fmt_coeff_term(f, k == 0, c, m, m.is_one())?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        if small.len() == 1 {
            let (m, c) = small.terms.iter().next().unwrap();
            return big.mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(small.len() * big.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl From<VarId> for MPoly {
    fn from(v: VarId) -> Self {
        MPoly::var(v)
    }
}

/// Integer value of a rational, if it is one and fits.
pub fn q_to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> MPoly {
        MPoly::var(VarId::alpha(i))
    }

    #[test]
    fn grlex_leading_term() {
        let p = &(&a(1) * &a(2)) + &a(1).pow(2);
        assert_eq!(p.leading().unwrap().0, &Monomial::from_pairs([(VarId::alpha(1), 2)]));
    }

    #[test]
    fn divide_difference_of_squares() {
        let n = &a(1).pow(2) - &a(2).pow(2);
        let d = &a(1) - &a(2);
        assert_eq!(n.exact_divide(&d).unwrap(), &a(1) + &a(2));
        assert!(a(1).exact_divide(&a(2)).is_err());
    }

    #[test]
    fn primitive_part_sign_and_content() {
        let p = (&a(2).scale(&qf(-2, 3))) + &a(1).scale(&qf(4, 3));
        let (s, pp) = p.primitive_part();
        assert_eq!(s, qf(2, 3));
        assert_eq!(pp, &a(1).scale(&q(2)) - &a(2));
    }

    #[test]
    fn substitute_square() {
        let c1 = MPoly::var(VarId::c(1));
        let mut asg = BTreeMap::new();
        asg.insert(VarId::c(1), &MPoly::var(VarId::beta(1)) - &a(1));
        let r = c1.pow(2).substitute(&asg).unwrap();
        let b = MPoly::var(VarId::beta(1));
        let expect = &(&b.pow(2) - &(&a(1) * &b).scale(&q(2))) + &a(1).pow(2);
        assert_eq!(r, expect);
    }
}
