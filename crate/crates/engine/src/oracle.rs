//! Exact point evaluation of root-form classes.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thom_algebra::{resultant, LinForm, MPoly, VarId, Q};

/// A polynomial in `α_1..α_n, β_1..β_p` that can be evaluated exactly.
pub trait PointEval: Send + Sync {
    fn n(&self) -> usize;
    fn p(&self) -> usize;
    /// `None` when a summand has a pole at the point.
    fn eval(&self, alpha: &[Q], beta: &[Q]) -> Option<Q>;
    /// The expanded polynomial, when it is cheap to produce.
    fn symbolic(&self) -> Option<MPoly> {
        None
    }
}

pub fn point_map(alpha: &[Q], beta: &[Q]) -> std::collections::HashMap<VarId, Q> {
    let mut m = std::collections::HashMap::new();
    for (i, a) in alpha.iter().enumerate() {
        m.insert(VarId::alpha(i + 1), a.clone());
    }
    for (j, b) in beta.iter().enumerate() {
        m.insert(VarId::beta(j + 1), b.clone());
    }
    m
}

/// Integer weight `Σ w_i α_i` evaluated at a point.
pub fn weight_value(w: &[i64], alpha: &[Q]) -> Q {
    w.iter().zip(alpha).map(|(&c, a)| a * Q::from_integer(c.into())).sum()
}

/// `res(β_1..β_p | W)` for a fixed integer weight set `W`.
#[derive(Clone, Debug)]
pub struct WeightProduct {
    pub n: usize,
    pub p: usize,
    pub weights: Vec<Vec<i64>>,
}

impl WeightProduct {
    pub fn linforms(&self) -> Vec<LinForm> {
        self.weights
            .iter()
            .map(|w| {
                LinForm::from_pairs(
                    w.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (VarId::alpha(i + 1), Q::from_integer(c.into()))),
                )
            })
            .collect()
    }
}

impl PointEval for WeightProduct {
    fn n(&self) -> usize {
        self.n
    }
    fn p(&self) -> usize {
        self.p
    }
    fn eval(&self, alpha: &[Q], beta: &[Q]) -> Option<Q> {
        let ws: Vec<Q> = self.weights.iter().map(|w| weight_value(w, alpha)).collect();
        let mut acc = Q::one();
        for b in beta {
            for w in &ws {
                acc *= b - w;
            }
        }
        Some(acc)
    }
    fn symbolic(&self) -> Option<MPoly> {
        let bs: Vec<LinForm> = (1..=self.p).map(|j| LinForm::var(VarId::beta(j))).collect();
        Some(resultant(&bs, &self.linforms()))
    }
}

/// An explicit polynomial.
#[derive(Clone, Debug)]
pub struct PolyOracle {
    pub n: usize,
    pub p: usize,
    pub poly: MPoly,
}

impl PointEval for PolyOracle {
    fn n(&self) -> usize {
        self.n
    }
    fn p(&self) -> usize {
        self.p
    }
    fn eval(&self, alpha: &[Q], beta: &[Q]) -> Option<Q> {
        self.poly.eval(&point_map(alpha, beta)).ok()
    }
    fn symbolic(&self) -> Option<MPoly> {
        Some(self.poly.clone())
    }
}

/// Deterministic integer sample points.
pub struct Sampler {
    rng: ChaCha8Rng,
    range: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), range: 60 }
    }

    pub fn values(&mut self, k: usize) -> Vec<Q> {
        (0..k).map(|_| Q::from_integer(self.rng.gen_range(-self.range..=self.range).into())).collect()
    }

    pub fn point(&mut self, n: usize, p: usize) -> (Vec<Q>, Vec<Q>) {
        (self.values(n), self.values(p))
    }
}

/// The degree of a homogeneous polynomial oracle, from `f(2x) = 2^d f(x)`.
/// `None` if it vanishes at every tried point or is not homogeneous there.
pub fn infer_degree(o: &dyn PointEval, seed: u64) -> Option<u32> {
    let mut s = Sampler::new(seed);
    let two = Q::from_integer(2.into());
    for _ in 0..40 {
        let (a, b) = s.point(o.n(), o.p());
        let Some(v) = o.eval(&a, &b) else { continue };
        if v.is_zero() {
            continue;
        }
        let a2: Vec<Q> = a.iter().map(|x| x * &two).collect();
        let b2: Vec<Q> = b.iter().map(|x| x * &two).collect();
        let Some(w) = o.eval(&a2, &b2) else { continue };
        let mut r = w / v;
        let mut d = 0;
        while r > Q::one() && r.is_integer() {
            r /= &two;
            d += 1;
        }
        return (r == Q::one()).then_some(d);
    }
    None
}
