use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::poly::{MPoly, Q};
use crate::var::VarId;
use crate::AlgebraError;

/// A factor list: normalized non-constant polynomials with multiplicities.
type Factors = Vec<(MPoly, u32)>;

/// Rational function `scalar · ∏num / ∏den` with both sides kept factored,
/// or the absent value `Infinite`.
#[derive(Clone)]
pub enum RatFn {
    Finite(Frac),
    Infinite,
}

#[derive(Clone)]
pub struct Frac {
    scalar: Q,
    num: Factors,
    den: Factors,
}

fn push_factor(list: &mut Factors, f: MPoly, k: u32) {
    if k == 0 {
        return;
    }
    match list.iter_mut().find(|(g, _)| *g == f) {
        Some(slot) => slot.1 += k,
        None => list.push((f, k)),
    }
}

fn expand(list: &Factors) -> MPoly {
    let mut acc = MPoly::one();
    for (f, k) in list {
        acc = &acc * &f.pow(*k);
    }
    acc
}

impl Frac {
    fn zero() -> Self {
        Frac { scalar: Q::zero(), num: vec![], den: vec![] }
    }

    fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    /// Splits `p` into its content and a normalized factor.
    fn absorb_num(&mut self, p: MPoly, k: u32) {
        if k == 0 {
            return;
        }
        if let Some(c) = p.constant_value() {
            self.scalar *= num_traits::pow::pow(c, k as usize);
            return;
        }
        let (s, pp) = p.primitive_part();
        self.scalar *= num_traits::pow::pow(s, k as usize);
        push_factor(&mut self.num, pp, k);
    }

    fn absorb_den(&mut self, p: MPoly, k: u32) -> Result<(), AlgebraError> {
        if k == 0 {
            return Ok(());
        }
        if let Some(c) = p.constant_value() {
            if c.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            self.scalar /= num_traits::pow::pow(c, k as usize);
            return Ok(());
        }
        let (s, pp) = p.primitive_part();
        self.scalar /= num_traits::pow::pow(s, k as usize);
        push_factor(&mut self.den, pp, k);
        Ok(())
    }

    /// Cancels identical factors between numerator and denominator.
    fn cancel_matching(&mut self) {
        if self.scalar.is_zero() {
            self.num.clear();
            self.den.clear();
            return;
        }
        for (f, k) in self.num.iter_mut() {
            if let Some(slot) = self.den.iter_mut().find(|(g, _)| g == f) {
                let m = (*k).min(slot.1);
                *k -= m;
                slot.1 -= m;
            }
        }
        self.num.retain(|(_, k)| *k > 0);
        self.den.retain(|(_, k)| *k > 0);
    }

    /// Tries to divide numerator factors by denominator factors.
    fn cancel_by_division(&mut self) {
        if self.den.is_empty() || self.scalar.is_zero() {
            return;
        }
        let num = std::mem::take(&mut self.num);
        let mut new_num: Factors = Vec::new();
        for (f, k) in num {
            for _ in 0..k {
                let mut cur = f.clone();
                for slot in self.den.iter_mut() {
                    if slot.1 == 0 {
                        continue;
                    }
                    let (q, used) = cur.divide_out(&slot.0, slot.1);
                    if used > 0 {
                        cur = q;
                        slot.1 -= used;
                    }
                }
                let (s, pp) = cur.primitive_part();
                self.scalar *= s;
                if !pp.is_constant() {
                    push_factor(&mut new_num, pp, 1);
                }
            }
        }
        self.num = new_num;
        self.den.retain(|(_, k)| *k > 0);
        self.cancel_matching();
    }
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn::Finite(Frac::zero())
    }

    pub fn one() -> Self {
        RatFn::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        RatFn::Finite(Frac { scalar: c, num: vec![], den: vec![] })
    }

    pub fn from_poly(p: MPoly) -> Self {
        let mut f = Frac { scalar: Q::one(), num: vec![], den: vec![] };
        f.absorb_num(p, 1);
        if f.scalar.is_zero() {
            return RatFn::zero();
        }
        RatFn::Finite(f)
    }

    /// `num / ∏ den_i^{k_i}`.
    pub fn from_parts(num: MPoly, den: Vec<(MPoly, u32)>) -> Result<Self, AlgebraError> {
        let mut f = Frac { scalar: Q::one(), num: vec![], den: vec![] };
        f.absorb_num(num, 1);
        for (d, k) in den {
            f.absorb_den(d, k)?;
        }
        f.cancel_matching();
        f.cancel_by_division();
        Ok(RatFn::Finite(f))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, RatFn::Infinite)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RatFn::Finite(f) if f.is_zero())
    }

    pub fn scalar(&self) -> Option<&Q> {
        match self {
            RatFn::Finite(f) => Some(&f.scalar),
            RatFn::Infinite => None,
        }
    }

    pub fn num_factors(&self) -> &[(MPoly, u32)] {
        match self {
            RatFn::Finite(f) => &f.num,
            RatFn::Infinite => &[],
        }
    }

    pub fn den_factors(&self) -> &[(MPoly, u32)] {
        match self {
            RatFn::Finite(f) => &f.den,
            RatFn::Infinite => &[],
        }
    }

    /// Expanded numerator including the scalar.
    pub fn numerator(&self) -> Option<MPoly> {
        match self {
            RatFn::Finite(f) => Some(expand(&f.num).scale(&f.scalar)),
            RatFn::Infinite => None,
        }
    }

    /// Expanded denominator (scalar-free).
    pub fn denominator(&self) -> Option<MPoly> {
        match self {
            RatFn::Finite(f) => Some(expand(&f.den)),
            RatFn::Infinite => None,
        }
    }

    /// The polynomial this equals, if the denominator divides out.
    pub fn to_poly(&self) -> Result<MPoly, AlgebraError> {
        match self {
            RatFn::Infinite => Err(AlgebraError::InfiniteValue),
            RatFn::Finite(f) => {
                let mut n = expand(&f.num).scale(&f.scalar);
                for (d, k) in &f.den {
                    for _ in 0..*k {
                        n = n.exact_divide(d)?;
                    }
                }
                Ok(n)
            }
        }
    }

    pub fn try_mul(&self, other: &RatFn) -> Result<RatFn, AlgebraError> {
        match (self, other) {
            (RatFn::Infinite, x) | (x, RatFn::Infinite) => {
                if x.is_zero() {
                    Err(AlgebraError::ZeroTimesInfinite)
                } else {
                    Ok(RatFn::Infinite)
                }
            }
            (RatFn::Finite(a), RatFn::Finite(b)) => {
                if a.is_zero() || b.is_zero() {
                    return Ok(RatFn::zero());
                }
                let mut out = a.clone();
                out.scalar *= &b.scalar;
                for (f, k) in &b.num {
                    push_factor(&mut out.num, f.clone(), *k);
                }
                for (f, k) in &b.den {
                    push_factor(&mut out.den, f.clone(), *k);
                }
                out.cancel_matching();
                Ok(RatFn::Finite(out))
            }
        }
    }

    pub fn try_add(&self, other: &RatFn) -> Result<RatFn, AlgebraError> {
        let (a, b) = match (self, other) {
            (RatFn::Infinite, _) | (_, RatFn::Infinite) => return Ok(RatFn::Infinite),
            (RatFn::Finite(a), RatFn::Finite(b)) => (a, b),
        };
        if a.is_zero() {
            return Ok(other.clone());
        }
        if b.is_zero() {
            return Ok(self.clone());
        }
        // common numerator factors stay factored
        let mut common: Factors = Vec::new();
        let mut a_num = a.num.clone();
        let mut b_num = b.num.clone();
        for (f, k) in a_num.iter_mut() {
            if let Some(slot) = b_num.iter_mut().find(|(g, _)| g == f) {
                let m = (*k).min(slot.1);
                *k -= m;
                slot.1 -= m;
                push_factor(&mut common, f.clone(), m);
            }
        }
        let mut lcd: Factors = a.den.clone();
        for (f, k) in &b.den {
            match lcd.iter_mut().find(|(g, _)| g == f) {
                Some(slot) => slot.1 = slot.1.max(*k),
                None => lcd.push((f.clone(), *k)),
            }
        }
        let cofactor = |den: &Factors| -> Factors {
            lcd.iter()
                .map(|(f, k)| {
                    let have = den.iter().find(|(g, _)| g == f).map(|x| x.1).unwrap_or(0);
                    (f.clone(), k - have)
                })
                .filter(|(_, k)| *k > 0)
                .collect()
        };
        let ta = &expand(&a_num).scale(&a.scalar) * &expand(&cofactor(&a.den));
        let tb = &expand(&b_num).scale(&b.scalar) * &expand(&cofactor(&b.den));
        let sum = &ta + &tb;
        if sum.is_zero() {
            return Ok(RatFn::zero());
        }
        let mut out = Frac { scalar: Q::one(), num: common, den: vec![] };
        let mut rest = sum;
        for (f, k) in lcd {
            let (q, used) = rest.divide_out(&f, k);
            rest = q;
            push_factor(&mut out.den, f, k - used);
        }
        out.den.retain(|(_, k)| *k > 0);
        out.absorb_num(rest, 1);
        out.cancel_matching();
        Ok(RatFn::Finite(out))
    }

    /// Peels the given factors (typically linear forms) off every stored
    /// factor by trial division, then cancels. The value is unchanged.
    pub fn split_factors(&self, candidates: &[MPoly]) -> RatFn {
        let RatFn::Finite(f) = self else { return RatFn::Infinite };
        if f.is_zero() {
            return RatFn::zero();
        }
        let split = |list: &Factors| -> Factors {
            let mut out: Factors = Vec::new();
            for (g, k) in list {
                let mut rest = g.clone();
                for c in candidates {
                    let (q, used) = rest.divide_out(c, u32::MAX);
                    if used > 0 {
                        rest = q;
                        push_factor(&mut out, c.clone(), used * k);
                    }
                }
                push_factor(&mut out, rest, *k);
            }
            out
        };
        let mut out = Frac { scalar: f.scalar.clone(), num: vec![], den: vec![] };
        for (g, k) in split(&f.num) {
            out.absorb_num(g, k);
        }
        for (g, k) in split(&f.den) {
            out.absorb_den(g, k).expect("nonzero factor");
        }
        out.cancel_matching();
        RatFn::Finite(out)
    }

    pub fn neg(&self) -> RatFn {
        match self {
            RatFn::Infinite => RatFn::Infinite,
            RatFn::Finite(f) => {
                let mut g = f.clone();
                g.scalar = -g.scalar;
                RatFn::Finite(g)
            }
        }
    }

    pub fn scale(&self, c: &Q) -> RatFn {
        match self {
            RatFn::Infinite => RatFn::Infinite,
            RatFn::Finite(f) => {
                if c.is_zero() {
                    return RatFn::zero();
                }
                let mut g = f.clone();
                g.scalar *= c;
                RatFn::Finite(g)
            }
        }
    }

    /// Reciprocal; `1/∞ = 0` and `1/0 = ∞`.
    pub fn reciprocal(&self) -> RatFn {
        match self {
            RatFn::Infinite => RatFn::zero(),
            RatFn::Finite(f) if f.is_zero() => RatFn::Infinite,
            RatFn::Finite(f) => RatFn::Finite(Frac {
                scalar: Q::one() / &f.scalar,
                num: f.den.clone(),
                den: f.num.clone(),
            }),
        }
    }

    pub fn try_div(&self, other: &RatFn) -> Result<RatFn, AlgebraError> {
        match (self, other) {
            (RatFn::Infinite, RatFn::Infinite) => Err(AlgebraError::ZeroTimesInfinite),
            _ => self.try_mul(&other.reciprocal()),
        }
    }

    pub fn pow(&self, k: i32) -> Result<RatFn, AlgebraError> {
        let base = if k < 0 { self.reciprocal() } else { self.clone() };
        let e = k.unsigned_abs();
        match base {
            RatFn::Infinite => {
                if e == 0 {
                    Ok(RatFn::one())
                } else {
                    Ok(RatFn::Infinite)
                }
            }
            RatFn::Finite(f) => {
                if e == 0 {
                    return Ok(RatFn::one());
                }
                Ok(RatFn::Finite(Frac {
                    scalar: num_traits::pow::pow(f.scalar.clone(), e as usize),
                    num: f.num.iter().map(|(g, m)| (g.clone(), m * e)).collect(),
                    den: f.den.iter().map(|(g, m)| (g.clone(), m * e)).collect(),
                }))
            }
        }
    }

    /// Value at a point; `None` for a pole or `Infinite`.
    pub fn eval(&self, point: &HashMap<VarId, Q>) -> Result<Option<Q>, AlgebraError> {
        let f = match self {
            RatFn::Infinite => return Ok(None),
            RatFn::Finite(f) => f,
        };
        if f.scalar.is_zero() {
            return Ok(Some(Q::zero()));
        }
        let mut d = Q::one();
        for (g, k) in &f.den {
            d *= num_traits::pow::pow(g.eval(point)?, *k as usize);
        }
        if d.is_zero() {
            return Ok(None);
        }
        let mut n = f.scalar.clone();
        for (g, k) in &f.num {
            n *= num_traits::pow::pow(g.eval(point)?, *k as usize);
        }
        Ok(Some(n / d))
    }

    /// Substitutes polynomials for variables in every factor.
    pub fn substitute(&self, assignment: &BTreeMap<VarId, MPoly>) -> Result<RatFn, AlgebraError> {
        let f = match self {
            RatFn::Infinite => return Ok(RatFn::Infinite),
            RatFn::Finite(f) => f,
        };
        let mut out = Frac { scalar: f.scalar.clone(), num: vec![], den: vec![] };
        for (g, k) in &f.den {
            out.absorb_den(g.substitute(assignment)?, *k)?;
        }
        for (g, k) in &f.num {
            out.absorb_num(g.substitute(assignment)?, *k);
        }
        out.cancel_matching();
        if out.scalar.is_zero() {
            return Ok(RatFn::zero());
        }
        Ok(RatFn::Finite(out))
    }

    pub fn rename(&self, f: impl Fn(VarId) -> VarId + Copy) -> RatFn {
        match self {
            RatFn::Infinite => RatFn::Infinite,
            RatFn::Finite(fr) => {
                let mut out = Frac { scalar: fr.scalar.clone(), num: vec![], den: vec![] };
                for (g, k) in &fr.num {
                    out.absorb_num(g.rename(f), *k);
                }
                for (g, k) in &fr.den {
                    out.absorb_den(g.rename(f), *k).expect("renaming keeps factors nonzero");
                }
                out.cancel_matching();
                RatFn::Finite(out)
            }
        }
    }

    /// Numerator degree minus denominator degree, when all factors are homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let f = match self {
            RatFn::Infinite => return None,
            RatFn::Finite(f) => f,
        };
        if f.scalar.is_zero() {
            return None;
        }
        let mut d: i64 = 0;
        for (g, k) in &f.num {
            if !g.is_homogeneous() {
                return None;
            }
            d += g.total_degree()? as i64 * *k as i64;
        }
        for (g, k) in &f.den {
            if !g.is_homogeneous() {
                return None;
            }
            d -= g.total_degree()? as i64 * *k as i64;
        }
        Some(d)
    }

    pub fn vars(&self) -> std::collections::BTreeSet<VarId> {
        let mut s = std::collections::BTreeSet::new();
        for (g, _) in self.num_factors().iter().chain(self.den_factors()) {
            s.extend(g.vars());
        }
        s
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (RatFn::Infinite, RatFn::Infinite) => true,
            (RatFn::Finite(a), RatFn::Finite(b)) => {
                if a.is_zero() || b.is_zero() {
                    return a.is_zero() && b.is_zero();
                }
                let l = &expand(&a.num).scale(&a.scalar) * &expand(&b.den);
                let r = &expand(&b.num).scale(&b.scalar) * &expand(&a.den);
                l == r
            }
            _ => false,
        }
    }
}

impl From<MPoly> for RatFn {
    fn from(p: MPoly) -> Self {
        RatFn::from_poly(p)
    }
}

impl From<Q> for RatFn {
    fn from(c: Q) -> Self {
        RatFn::constant(c)
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        self.try_add(rhs).expect("rational function addition")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self.try_add(&rhs.neg()).expect("rational function subtraction")
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        self.try_mul(rhs).expect("0 times infinity")
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        self.try_div(rhs).expect("0 times infinity")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn::neg(self)
    }
}

fn fmt_factors(f: &mut fmt::Formatter<'_>, list: &Factors) -> fmt::Result {
    for (k, (g, m)) in list.iter().enumerate() {
        if k > 0 {
            write!(f, "*")?;
        }
        let single = g.len() == 1;
        match (single, *m) {
            (true, 1) => write!(f, "{g}")?,
            (true, _) => write!(f, "({g})^{m}")?,
            (false, 1) => write!(f, "({g})")?,
            (false, _) => write!(f, "({g})^{m}")?,
        }
    }
    Ok(())
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fr = match self {
            RatFn::Infinite => return write!(f, "INF"),
            RatFn::Finite(fr) => fr,
        };
        if fr.scalar.is_zero() {
            return write!(f, "0");
        }
        let s = &fr.scalar;
        let a = s.abs();
        if s.is_negative() {
            write!(f, "-")?;
        }
        let mut wrote = false;
        if !a.is_one() || fr.num.is_empty() {
            if a.is_integer() {
                write!(f, "{}", a.numer())?;
            } else {
                write!(f, "({}/{})", a.numer(), a.denom())?;
            }
            wrote = true;
        }
        if !fr.num.is_empty() {
            if wrote {
                write!(f, "*")?;
            }
            fmt_factors(f, &fr.num)?;
        }
        if !fr.den.is_empty() {
            write!(f, "/(")?;
            fmt_factors(f, &fr.den)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn a(i: usize) -> MPoly {
        MPoly::var(VarId::alpha(i))
    }

    #[test]
    fn opposite_poles_cancel() {
        let x = RatFn::from_parts(MPoly::one(), vec![(&a(1) - &a(2), 1)]).unwrap();
        let y = RatFn::from_parts(MPoly::one(), vec![(&a(2) - &a(1), 1)]).unwrap();
        assert!((&x + &y).is_zero());
    }

    #[test]
    fn infinite_conventions() {
        assert!(RatFn::Infinite.reciprocal().is_zero());
        assert!(RatFn::zero().reciprocal().is_infinite());
        assert!(RatFn::Infinite.try_mul(&RatFn::zero()).is_err());
    }

    #[test]
    fn sum_cancels_to_polynomial() {
        // a1^2/(a1-a2) + a2^2/(a2-a1) = a1 + a2
        let x = RatFn::from_parts(a(1).pow(2), vec![(&a(1) - &a(2), 1)]).unwrap();
        let y = RatFn::from_parts(a(2).pow(2), vec![(&a(2) - &a(1), 1)]).unwrap();
        let s = &x + &y;
        assert!(s.den_factors().is_empty());
        assert_eq!(s.to_poly().unwrap(), &a(1) + &a(2));
    }

    #[test]
    fn reciprocal_roundtrip() {
        let x = RatFn::from_parts((&a(1) - &a(2).scale(&q(2))).scale(&q(3)), vec![(&a(1) + &a(2), 2)]).unwrap();
        assert_eq!(&x * &x.reciprocal(), RatFn::one());
    }
}
