use std::collections::BTreeSet;
use std::fmt;

use thom_algebra::perm::permutations;
use thom_algebra::{resultant, LinForm, MPoly, VarId};

use crate::IdealError;

pub type Exponent = Vec<u32>;

/// A finite-codimension monomial ideal in `x_1..x_n`, stored as the set of
/// standard monomials of positive degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    n: usize,
    complement: BTreeSet<Exponent>,
}

fn unit(n: usize, i: usize) -> Exponent {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Checks divisor closure and builds the ideal.
    pub fn from_complement(n: usize, complement: BTreeSet<Exponent>) -> Result<Self, IdealError> {
        for v in &complement {
            if v.len() != n || is_zero(v) {
                return Err(IdealError::BadExponent(v.clone()));
            }
            for i in 0..n {
                if v[i] > 0 {
                    let mut w = v.clone();
                    w[i] -= 1;
                    if !is_zero(&w) && !complement.contains(&w) {
                        return Err(IdealError::NotDivisorClosed(v.clone()));
                    }
                }
            }
        }
        Ok(MonomialIdeal { n, complement })
    }

    pub(crate) fn from_complement_unchecked(n: usize, complement: BTreeSet<Exponent>) -> Self {
        MonomialIdeal { n, complement }
    }

    /// The ideal generated by monomials; fails unless every variable has a
    /// pure power among them.
    pub fn from_generators(n: usize, gens: &[Exponent]) -> Result<Self, IdealError> {
        for g in gens {
            if g.len() != n || is_zero(g) {
                return Err(IdealError::BadExponent(g.clone()));
            }
        }
        for i in 0..n {
            if !gens.iter().any(|g| g[i] > 0 && g.iter().enumerate().all(|(j, &e)| j == i || e == 0)) {
                return Err(IdealError::InfiniteCodimension(i + 1));
            }
        }
        let in_ideal = |v: &[u32]| gens.iter().any(|g| divides(g, v));
        let mut complement = BTreeSet::new();
        let mut frontier: Vec<Exponent> = (0..n).map(|i| unit(n, i)).filter(|u| !in_ideal(u)).collect();
        while let Some(v) = frontier.pop() {
            if !complement.insert(v.clone()) {
                continue;
            }
            for i in 0..n {
                let mut w = v.clone();
                w[i] += 1;
                if !in_ideal(&w) && !complement.contains(&w) {
                    frontier.push(w);
                }
            }
        }
        Ok(MonomialIdeal { n, complement })
    }

    /// `M_n^2`.
    pub fn max_square(n: usize) -> Self {
        MonomialIdeal { n, complement: (0..n).map(|i| unit(n, i)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn codim(&self) -> usize {
        self.complement.len()
    }

    pub fn complement(&self) -> &BTreeSet<Exponent> {
        &self.complement
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        !is_zero(v) && !self.complement.contains(v)
    }

    /// Number of variables not in the ideal (`dim M/(I+M²)`).
    pub fn used_vars(&self) -> usize {
        (0..self.n).filter(|&i| self.complement.contains(&unit(self.n, i))).count()
    }

    /// `{Σ a_j α_j : x^a ∉ I}`, the positive form of `−W_{Q_I}`.
    pub fn quotient_weights(&self) -> Vec<LinForm> {
        self.complement.iter().map(|v| LinForm::alpha_weight(v)).collect()
    }

    /// `I + (x_{n+1})`.
    pub fn descendant(&self) -> MonomialIdeal {
        let complement = self
            .complement
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.push(0);
                w
            })
            .collect();
        MonomialIdeal { n: self.n + 1, complement }
    }

    /// `res(α_{n+1} | −W_{Q_I})`.
    pub fn suspension_factor(&self) -> MPoly {
        resultant(&[LinForm::var(VarId::alpha(self.n + 1))], &self.quotient_weights())
    }

    /// Descendant into `m ≥ n` variables.
    pub fn embed(&self, m: usize) -> MonomialIdeal {
        let mut out = self.clone();
        while out.n < m {
            out = out.descendant();
        }
        out
    }

    /// The minimal monomial generators, in decreasing lexicographic order.
    pub fn min_generators(&self) -> Vec<Exponent> {
        let mut cands: BTreeSet<Exponent> = (0..self.n).map(|i| unit(self.n, i)).collect();
        for v in &self.complement {
            for i in 0..self.n {
                let mut w = v.clone();
                w[i] += 1;
                cands.insert(w);
            }
        }
        let mut gens: Vec<Exponent> = cands
            .into_iter()
            .filter(|v| {
                self.contains(v)
                    && (0..self.n).all(|i| {
                        if v[i] == 0 {
                            return true;
                        }
                        let mut w = v.clone();
                        w[i] -= 1;
                        !self.contains(&w)
                    })
            })
            .collect();
        gens.sort_by(|a, b| b.cmp(a));
        gens
    }

    /// `σ·I`, moving coordinate `i` to `σ(i)`; matches `α_i ↦ α_{σ(i)}`.
    pub fn permute(&self, sigma: &[usize]) -> MonomialIdeal {
        assert_eq!(sigma.len(), self.n);
        let complement = self
            .complement
            .iter()
            .map(|v| {
                let mut w = vec![0; self.n];
                for i in 0..self.n {
                    w[sigma[i]] = v[i];
                }
                w
            })
            .collect();
        MonomialIdeal { n: self.n, complement }
    }

    /// `|{σ ∈ S_n : σ·I = I}|`.
    pub fn stabilizer_order(&self) -> u64 {
        permutations(self.n).iter().filter(|s| self.permute(s) == *self).count() as u64
    }

    /// Stabilizer of the descendant in `S_m`.
    pub fn stabilizer_order_in(&self, m: usize) -> u64 {
        let extra: u64 = (1..=(m.saturating_sub(self.n)) as u64).product();
        self.stabilizer_order() * extra
    }

    /// Distinct images under `S_n`.
    pub fn orbit(&self) -> BTreeSet<MonomialIdeal> {
        permutations(self.n).iter().map(|s| self.permute(s)).collect()
    }

    /// The lexicographically smallest complement in the orbit, with a
    /// permutation `σ` such that `σ·self` is it.
    pub fn canonical(&self) -> (MonomialIdeal, Vec<usize>) {
        permutations(self.n)
            .into_iter()
            .map(|s| (self.permute(&s), s))
            .min_by(|a, b| a.0.complement.cmp(&b.0.complement))
            .expect("S_n is nonempty")
    }

    /// Drops unused trailing structure: returns the ideal in the used
    /// variables and `σ` with `σ·reduced.embed(n) = self`.
    pub fn reduce(&self) -> (MonomialIdeal, Vec<usize>) {
        let used: Vec<usize> = (0..self.n).filter(|&i| self.complement.contains(&unit(self.n, i))).collect();
        let unused: Vec<usize> = (0..self.n).filter(|i| !used.contains(i)).collect();
        let k = used.len();
        let complement = self.complement.iter().map(|v| used.iter().map(|&i| v[i]).collect()).collect();
        // new coordinate j sits at old coordinate order[j]
        let order: Vec<usize> = used.iter().chain(unused.iter()).copied().collect();
        (MonomialIdeal { n: k, complement }, order)
    }

    /// Writes the ideal with variable names `x,y,z,u` (n ≤ 4) or `x1..xn`.
    pub fn generator_string(&self) -> String {
        let gens: Vec<String> = self.min_generators().iter().map(|g| monomial_string(self.n, g)).collect();
        format!("({})", gens.join(","))
    }
}

pub fn var_name(n: usize, i: usize) -> String {
    if n <= 4 {
        ["x", "y", "z", "u"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

pub fn monomial_string(n: usize, e: &[u32]) -> String {
    let mut s = String::new();
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if n > 4 && !s.is_empty() {
            s.push('*');
        }
        s.push_str(&var_name(n, i));
        if k > 1 {
            s.push_str(&format!("^{k}"));
        }
    }
    s
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator_string())
    }
}

/// Monomial germ `f = (x^{w_1}, …, x^{w_p})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialGerm {
    pub n: usize,
    pub coords: Vec<Exponent>,
}

impl MonomialGerm {
    pub fn new(n: usize, coords: Vec<Exponent>) -> Result<Self, IdealError> {
        if coords.is_empty() {
            return Err(IdealError::EmptyGerm);
        }
        let g = MonomialGerm { n, coords };
        g.ideal()?;
        Ok(g)
    }

    pub fn p(&self) -> usize {
        self.coords.len()
    }

    /// `W_f`: the weights of the coordinate monomials.
    pub fn weights(&self) -> Vec<LinForm> {
        self.coords.iter().map(|v| LinForm::alpha_weight(v)).collect()
    }

    pub fn ideal(&self) -> Result<MonomialIdeal, IdealError> {
        MonomialIdeal::from_generators(self.n, &self.coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use thom_algebra::parse::parse_poly;

    #[test]
    fn weights_and_suspension() {
        let i = parse_ideal("(x^2,y^2)").unwrap();
        let w: Vec<MPoly> = i.quotient_weights().iter().map(|l| l.to_poly()).collect();
        assert_eq!(w.len(), 3);
        assert!(w.contains(&parse_poly("a1 + a2").unwrap()));
        let x3 = parse_ideal("(x^3)").unwrap();
        assert_eq!(x3.suspension_factor(), parse_poly("(a2 - a1)*(a2 - 2*a1)").unwrap());
        let d = x3.descendant();
        assert_eq!(d.to_string(), "(x^3,y)");
        assert_eq!(d.codim(), 2);
    }

    #[test]
    fn generators() {
        assert_eq!(MonomialIdeal::max_square(2).to_string(), "(x^2,xy,y^2)");
        assert_eq!(parse_ideal("(x^2,y^2)").unwrap().to_string(), "(x^2,y^2)");
        assert_eq!(parse_ideal("(x^2,xy,y^3,x*y^2)").unwrap().to_string(), "(x^2,xy,y^3)");
        let g = MonomialGerm::new(2, vec![vec![1, 1], vec![3, 0], vec![0, 3]]).unwrap();
        let c: Vec<Exponent> = g.ideal().unwrap().complement().iter().cloned().collect();
        assert_eq!(c, vec![vec![0, 1], vec![0, 2], vec![1, 0], vec![2, 0]]);
        assert!(MonomialGerm::new(2, vec![vec![2, 0], vec![1, 1]]).is_err());
    }

    #[test]
    fn orbits() {
        let i = parse_ideal("(x^2,xy,y^3)").unwrap();
        assert_eq!(i.stabilizer_order(), 1);
        assert_eq!(i.orbit().len(), 2);
        assert_eq!(MonomialIdeal::max_square(3).stabilizer_order(), 6);
        let (c, s) = i.canonical();
        assert_eq!(i.permute(&s), c);
        let e = parse_ideal("(x, y^2, z)").unwrap();
        let (r, order) = e.reduce();
        assert_eq!(r.n(), 1);
        let mut inv = vec![0; order.len()];
        for (j, &o) in order.iter().enumerate() {
            inv[j] = o;
        }
        assert_eq!(r.embed(3).permute(&inv), e);
    }
}
