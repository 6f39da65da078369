use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use thom_algebra::{LinForm, MPoly, Q};

use crate::delta::{delta_alphabet, delta_quotient, straighten};
use crate::partition::{partitions, Partition};
use crate::quotient::c_partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurError {
    #[error("term {0} is not a pure monomial in the quotient variables")]
    NotQuotient(String),
    #[error("partition {0} has more than {1} parts")]
    TooWide(Partition, usize),
}

/// Where the Δ's live: abstract quotient variables or an explicit alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum SchurContext {
    #[default]
    Quotient,
    Alphabet(Vec<LinForm>),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    pub coeffs: BTreeMap<Partition, Q>,
    pub context: SchurContext,
}

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn single(lambda: Partition, c: Q) -> Self {
        let mut e = SchurExpansion::new();
        e.add(lambda, c);
        e
    }

    pub fn add(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            let key = self.coeffs.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).unwrap();
            self.coeffs.remove(&key);
        }
    }

    /// Adds `c · Δ_seq` for a raw index sequence, straightening it first.
    pub fn add_raw(&mut self, seq: &[i64], c: Q) {
        if let Some((s, lam)) = straighten(seq) {
            self.add(lam, if s < 0 { -c } else { c });
        }
    }

    pub fn merge(&mut self, other: &SchurExpansion) {
        for (l, c) in &other.coeffs {
            self.add(l.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Q) -> SchurExpansion {
        let mut out = SchurExpansion { coeffs: BTreeMap::new(), context: self.context.clone() };
        for (l, a) in &self.coeffs {
            out.add(l.clone(), a * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    /// Common weight, if all terms share one.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.coeffs.keys().map(|l| l.weight());
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn max_len(&self) -> usize {
        self.coeffs.keys().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn all_nonnegative_integers(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// The flattened polynomial (in c's, or in the alphabet).
    pub fn to_poly(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (l, c) in &self.coeffs {
            let d = match &self.context {
                SchurContext::Quotient => delta_quotient(l),
                SchurContext::Alphabet(xs) => delta_alphabet(l, xs),
            };
            out += &d.scale(c);
        }
        out
    }

    /// Lexicographically largest partition and its coefficient.
    pub fn top(&self) -> Option<(&Partition, &Q)> {
        self.coeffs.iter().next_back()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                if a.is_integer() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "({}/{})", a.numer(), a.denom())?;
                }
            }
            write!(f, "Δ_{{{l}}}")?;
        }
        Ok(())
    }
}

/// Kostka numbers `K_{λν}` by horizontal-strip removal, memoized.
#[derive(Default)]
pub struct Kostka {
    memo: HashMap<(Vec<u32>, Vec<u32>), u128>,
}

impl Kostka {
    pub fn new() -> Self {
        Kostka::default()
    }

    pub fn get(&mut self, lambda: &Partition, nu: &Partition) -> u128 {
        if lambda.weight() != nu.weight() || !lambda.dominates(nu) {
            return 0;
        }
        self.rec(lambda.parts().to_vec(), nu.parts().to_vec())
    }

    fn rec(&mut self, lam: Vec<u32>, nu: Vec<u32>) -> u128 {
        if nu.is_empty() {
            return u128::from(lam.is_empty());
        }
        if lam.len() > nu.len() {
            return 0;
        }
        let key = (lam.clone(), nu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = *nu.last().unwrap();
        let rest = nu[..nu.len() - 1].to_vec();
        let mut total = 0u128;
        let mut strips = Vec::new();
        horizontal_strips(&lam, r, &mut Vec::new(), 0, &mut strips);
        for mu in strips {
            total += self.rec(mu, rest.clone());
        }
        self.memo.insert(key, total);
        total
    }
}

/// All `μ ⊂ λ` with `λ/μ` a horizontal strip of size `r`.
fn horizontal_strips(lam: &[u32], r: u32, cur: &mut Vec<u32>, i: usize, out: &mut Vec<Vec<u32>>) {
    if i == lam.len() {
        if r == 0 {
            let mut m = cur.clone();
            while m.last() == Some(&0) {
                m.pop();
            }
            out.push(m);
        }
        return;
    }
    let lo = lam.get(i + 1).copied().unwrap_or(0);
    let hi = lam[i];
    for mu_i in (lo..=hi).rev() {
        let take = hi - mu_i;
        if take > r {
            break;
        }
        cur.push(mu_i);
        horizontal_strips(lam, r - take, cur, i + 1, out);
        cur.pop();
    }
}

/// Expands a polynomial in the quotient variables in the Δ basis, using
/// `c^ν = Σ_λ K_{λν} Δ_λ`.
pub fn schur_expand(p: &MPoly) -> Result<SchurExpansion, SchurError> {
    let mut out = SchurExpansion::new();
    let mut kostka = Kostka::new();
    let mut parts_by_weight: HashMap<u32, Vec<Partition>> = HashMap::new();
    for (m, c) in p.terms() {
        let nu = c_partition(m).ok_or_else(|| SchurError::NotQuotient(m.to_string()))?;
        let d = nu.weight();
        let cands = parts_by_weight.entry(d).or_insert_with(|| partitions(d, None));
        for lam in cands.iter() {
            if lam.len() > nu.len() || !lam.dominates(&nu) {
                continue;
            }
            let k = kostka.get(lam, &nu);
            if k > 0 {
                out.add(lam.clone(), c * Q::from_integer(k.into()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use thom_algebra::parse::parse_poly;
    use thom_algebra::q;

    #[test]
    fn a2_series_start() {
        let e = schur_expand(&parse_poly("c1^2 + c2").unwrap()).unwrap();
        assert_eq!(e.to_string(), "Δ_{1,1} + 2Δ_{2}");
        assert!(schur_expand(&MPoly::zero()).unwrap().is_zero());
    }

    #[test]
    fn kostka_values() {
        let mut k = Kostka::new();
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(k.get(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(k.get(&p("3,2"), &p("2,2,1")), 2);
        assert_eq!(k.get(&p("2,2"), &p("3,1")), 0);
    }

    #[test]
    fn roundtrip_small_weights() {
        for d in 0..=7 {
            let mut e = SchurExpansion::new();
            for (i, l) in partitions(d, None).into_iter().enumerate() {
                e.add(l, q(i as i64 - 2));
            }
            assert_eq!(schur_expand(&e.to_poly()).unwrap(), e);
        }
    }
}
