//! Laurent expansion in the region `|z_1| ≪ |z_2| ≪ … ≪ |z_μ|`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use thom_algebra::{MPoly, Ns, Q};

use crate::gf::GeneratingFunction;
use crate::ResidueError;

type Exps = Vec<i64>;

/// Laurent coefficients of an expansion, exact for every exponent vector
/// whose suffix sums satisfy `Σ_{i≥t} a_i ≥ −(μ−t+1)·truncation`; in
/// particular for every `a` with all `a_i ≥ −truncation`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSlice {
    pub mu: usize,
    pub terms: BTreeMap<Exps, Q>,
    pub truncation: i64,
}

impl LaurentSlice {
    pub fn coeff(&self, a: &[i64]) -> Q {
        self.terms.get(a).cloned().unwrap_or_else(Q::zero)
    }
}

fn exponents(p: &MPoly, mu: usize) -> Result<HashMap<Exps, Q>, ResidueError> {
    let mut out = HashMap::new();
    for (m, c) in p.terms() {
        let mut a = vec![0i64; mu];
        for &(v, e) in m.pairs() {
            if v.ns != Ns::Z || v.index < 1 || v.index as usize > mu {
                return Err(ResidueError::IllPosed(format!("{v} in a z-polynomial")));
            }
            a[v.index as usize - 1] += e as i64;
        }
        out.insert(a, c.clone());
    }
    Ok(out)
}

struct Bounds(Vec<i64>);

impl Bounds {
    fn new(mu: usize, t: i64) -> Self {
        Bounds((0..mu).map(|k| -((mu - k) as i64) * t).collect())
    }

    fn suffix(a: &[i64], k: usize) -> i64 {
        a[k..].iter().sum()
    }

    fn admits(&self, a: &[i64]) -> bool {
        (0..a.len()).all(|k| Self::suffix(a, k) >= self.0[k])
    }
}

fn mul_poly(x: &HashMap<Exps, Q>, y: &HashMap<Exps, Q>) -> HashMap<Exps, Q> {
    let mut out: HashMap<Exps, Q> = HashMap::new();
    for (a, c) in x {
        for (b, d) in y {
            let e: Exps = a.iter().zip(b).map(|(u, v)| u + v).collect();
            *out.entry(e).or_insert_with(Q::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expands `prefactor · k` term by term. Each `1/ω` with dominant variable
/// `z_s` becomes `Σ_j (−L)^j / (u z_s)^{j+1}`, where `ω = u z_s + L`.
pub fn laurent_expand(k: &GeneratingFunction, prefactor: &MPoly, truncation: i64) -> Result<LaurentSlice, ResidueError> {
    let mu = k.mu;
    let bounds = Bounds::new(mu, truncation);
    let num = k.numerator.scale(&k.scalar);
    let mut cur = mul_poly(&exponents(&num, mu)?, &exponents(prefactor, mu)?);
    cur.retain(|a, _| bounds.admits(a));
    for w in &k.denominator {
        let (top, u) = w.top_var().ok_or_else(|| ResidueError::IllPosed(format!("{w} has no dominant variable")))?;
        let s = top.index as usize - 1;
        // −L/u, homogeneous of degree one in z_1..z_{s−1}
        let mut ratio: HashMap<Exps, Q> = HashMap::new();
        for (v, c) in w.coeffs() {
            if *v != top {
                let mut a = vec![0; mu];
                a[v.index as usize - 1] = 1;
                ratio.insert(a, -c / &u);
            }
        }
        let mut powers: Vec<HashMap<Exps, Q>> = vec![HashMap::from([(vec![0; mu], u.recip())])];
        let mut next: HashMap<Exps, Q> = HashMap::new();
        for (a, c) in &cur {
            let room = Bounds::suffix(a, s) - 1 - bounds.0[s];
            if room < 0 {
                continue;
            }
            for j in 0..=room as usize {
                if powers.len() <= j {
                    let p = mul_poly(&powers[j - 1], &ratio);
                    powers.push(p);
                }
                for (b, d) in &powers[j] {
                    let mut e: Exps = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    e[s] -= 1 + j as i64;
                    if bounds.admits(&e) {
                        *next.entry(e).or_insert_with(Q::zero) += c * d;
                    }
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    Ok(LaurentSlice { mu, terms: cur.into_iter().collect(), truncation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use thom_algebra::q;

    #[test]
    fn geometric_expansion() {
        let k = GeneratingFunction::reciprocal_of(2, Q::one(), &[&[2, -1]]).unwrap();
        let s = laurent_expand(&k, &MPoly::one(), 6).unwrap();
        for j in 0..5 {
            assert_eq!(s.coeff(&[j, -j - 1]), -q(1 << j));
        }
        assert!(s.terms.keys().all(|a| a[0] >= 0 && a[0] + a[1] == -1));
    }

    #[test]
    fn constant_is_itself() {
        let k = GeneratingFunction::new(3, MPoly::one(), vec![], Q::one()).unwrap();
        let s = laurent_expand(&k, &MPoly::one(), 2).unwrap();
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.coeff(&[0, 0, 0]), q(1));
    }
}
