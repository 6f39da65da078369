use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use thom_algebra::parse::{parse_ratfn_with, Env};
use thom_algebra::sym::permute_alpha;
use thom_algebra::{resultant, LinForm, RatFn, VarId, Q};
use thom_ideals::{canonical_representatives, enumerate_ideals, locate, parse_ideal, MonomialIdeal, Representative};

use crate::algebra::{AlgebraId, Family};
use crate::EulerError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Shipped,
    Extrapolated,
    Reciprocity,
    Synthetic,
}

/// A stored class: an exact rational function (possibly `∞`), or the
/// `M_μ²` entry that is only available pointwise through reciprocity.
#[derive(Clone, Debug, PartialEq)]
pub enum EntryValue {
    Exact(RatFn),
    Pointwise,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub value: EntryValue,
    pub provenance: Provenance,
}

/// One finite summand of the localization formula.
#[derive(Clone, Debug)]
pub struct Term {
    pub ideal: MonomialIdeal,
    pub stabilizer: u64,
    pub value: EntryValue,
}

pub const CLUB: &str = "(a1-a2)*(a1-a3)*(a1-2*a2)*(a1-2*a3)*(a2-a3)^2";
pub const SPADE: &str = "(a1-a3)^2*(a2-a3)^2*(a1-a2-a3)*(a2-a1-a3)";

pub fn macros() -> Env {
    let mut env = Env::new();
    env.insert("CLUB".into(), thom_algebra::parse::parse_ratfn(CLUB).expect("macro"));
    env.insert("SPADE".into(), thom_algebra::parse::parse_ratfn(SPADE).expect("macro"));
    env
}

pub fn alpha_point(vals: &[Q]) -> HashMap<VarId, Q> {
    vals.iter().enumerate().map(|(i, v)| (VarId::alpha(i + 1), v.clone())).collect()
}

fn reps_for(mu: usize) -> &'static [Representative] {
    static CACHE: OnceLock<Vec<Vec<Representative>>> = OnceLock::new();
    let small = CACHE.get_or_init(|| (0..=4).map(|m| if m == 0 { vec![] } else { canonical_representatives(m) }).collect());
    if mu <= 4 {
        return &small[mu];
    }
    static BIG: OnceLock<std::sync::Mutex<BTreeMap<usize, &'static [Representative]>>> = OnceLock::new();
    let mut big = BIG.get_or_init(Default::default).lock().expect("poisoned");
    big.entry(mu).or_insert_with(|| Box::leak(canonical_representatives(mu).into_boxed_slice()))
}

/// `(rep index, σ)` for every codimension-μ ideal in μ variables other than `M_μ²`.
fn reciprocity_orbit(mu: usize) -> Vec<(usize, Vec<usize>)> {
    let reps = reps_for(mu);
    let sq = MonomialIdeal::max_square(mu);
    enumerate_ideals(mu, mu)
        .into_iter()
        .filter(|i| *i != sq)
        .map(|i| locate(reps, &i).expect("every ideal has a representative"))
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct EulerTable {
    entries: BTreeMap<AlgebraId, BTreeMap<usize, Entry>>,
}

impl EulerTable {
    pub fn new() -> Self {
        EulerTable::default()
    }

    /// The paper's `μ ≤ 4` data with the `M_μ²` entries completed.
    pub fn shipped() -> &'static EulerTable {
        static T: OnceLock<EulerTable> = OnceLock::new();
        T.get_or_init(|| {
            let mut t = load_table(include_str!("../data/euler_classes.tbl")).expect("shipped table parses");
            t.complete().expect("shipped table completes");
            t
        })
    }

    pub fn algebras(&self) -> impl Iterator<Item = &AlgebraId> {
        self.entries.keys()
    }

    pub fn representatives(&self, q: &AlgebraId) -> &'static [Representative] {
        reps_for(q.mu())
    }

    fn max_square_index(mu: usize) -> usize {
        reps_for(mu).iter().position(|r| r.ideal == MonomialIdeal::max_square(mu)).expect("M² is a representative")
    }

    /// Stores `e(Q, I)` for any ideal in `I`'s orbit using exactly `n(I)` variables.
    pub fn insert(&mut self, q: &AlgebraId, ideal: &MonomialIdeal, value: RatFn, provenance: Provenance) -> Result<(), EulerError> {
        let mu = q.mu();
        if ideal.codim() != mu {
            return Err(EulerError::InconsistentMu { algebra: q.to_string(), ideal: ideal.to_string(), mu });
        }
        if ideal.used_vars() != ideal.n() {
            return Err(EulerError::NotMinimal(ideal.to_string()));
        }
        let reps = reps_for(mu);
        let (idx, sigma) = locate(reps, ideal).ok_or_else(|| EulerError::MissingEntry(q.to_string(), ideal.to_string()))?;
        let mut inv = vec![0; sigma.len()];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s] = i;
        }
        let stored = permute_alpha(&value, &inv);
        self.entries.entry(q.clone()).or_default().insert(idx, Entry { value: EntryValue::Exact(stored), provenance });
        Ok(())
    }

    pub fn entry(&self, q: &AlgebraId, rep_index: usize) -> Option<&Entry> {
        self.entries.get(q)?.get(&rep_index)
    }

    pub fn has_algebra(&self, q: &AlgebraId) -> bool {
        q.family == Family::Sigma || self.entries.contains_key(q)
    }

    /// Completes missing `M_μ²` entries: symbolically for `μ ≤ 3`,
    /// pointwise for `μ ≥ 4`. Existing ones are checked.
    pub fn complete(&mut self) -> Result<(), EulerError> {
        let algs: Vec<AlgebraId> = self.entries.keys().cloned().collect();
        for q in algs {
            let mu = q.mu();
            if mu == 1 {
                continue;
            }
            let sq = Self::max_square_index(mu);
            let missing: Vec<String> = reps_for(mu)
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != sq && self.entry(&q, *i).is_none())
                .map(|(_, r)| r.ideal.to_string())
                .collect();
            if !missing.is_empty() {
                continue;
            }
            match self.entry(&q, sq).cloned() {
                Some(Entry { value: EntryValue::Exact(given), .. }) => {
                    if mu <= 3 {
                        let solved = crate::reciprocity::complete_by_reciprocity(self, &q)?;
                        if solved != given {
                            return Err(EulerError::ReciprocityMismatch(q.to_string()));
                        }
                    }
                }
                Some(_) => {}
                None => {
                    let value = if mu <= 3 {
                        EntryValue::Exact(crate::reciprocity::complete_by_reciprocity(self, &q)?)
                    } else {
                        EntryValue::Pointwise
                    };
                    self.entries
                        .entry(q.clone())
                        .or_default()
                        .insert(sq, Entry { value, provenance: Provenance::Reciprocity });
                }
            }
        }
        Ok(())
    }

    /// The finite summands `(I_i, stabilizer, e(Q, I_i))`.
    pub fn terms(&self, q: &AlgebraId) -> Result<Vec<Term>, EulerError> {
        if q.family == Family::Sigma {
            let r = q.mu();
            let ideal = MonomialIdeal::max_square(r);
            let stabilizer = (1..=r as u64).product();
            return Ok(vec![Term { ideal, stabilizer, value: EntryValue::Exact(RatFn::one()) }]);
        }
        let ents = self.entries.get(q).ok_or_else(|| EulerError::UnknownAlgebra(q.to_string()))?;
        let reps = reps_for(q.mu());
        let mut out = Vec::new();
        for (i, r) in reps.iter().enumerate() {
            let e = ents.get(&i).ok_or_else(|| EulerError::MissingEntry(q.to_string(), r.ideal.to_string()))?;
            if let EntryValue::Exact(f) = &e.value {
                if f.is_infinite() {
                    continue;
                }
            }
            out.push(Term { ideal: r.ideal.clone(), stabilizer: r.stabilizer, value: e.value.clone() });
        }
        Ok(out)
    }

    fn rep_value(&self, q: &AlgebraId, idx: usize) -> Result<EntryValue, EulerError> {
        if q.family == Family::Sigma {
            let is_sq = reps_for(q.mu())[idx].ideal == MonomialIdeal::max_square(q.mu());
            return Ok(EntryValue::Exact(if is_sq { RatFn::one() } else { RatFn::Infinite }));
        }
        let r = &reps_for(q.mu())[idx];
        self.entry(q, idx)
            .map(|e| e.value.clone())
            .ok_or_else(|| EulerError::MissingEntry(q.to_string(), r.ideal.to_string()))
    }

    /// `e(Q, I)` for any codimension-μ monomial ideal, via the witnessing
    /// permutation and suspension factors. `Pointwise` entries come back
    /// as `EntryValue::Pointwise`; evaluate them with `reciprocal_at`.
    pub fn lookup(&self, q: &AlgebraId, ideal: &MonomialIdeal) -> Result<EntryValue, EulerError> {
        let mu = q.mu();
        if ideal.codim() != mu {
            return Err(EulerError::InconsistentMu { algebra: q.to_string(), ideal: ideal.to_string(), mu });
        }
        let reps = reps_for(mu);
        let (idx, sigma) = locate(reps, ideal).ok_or_else(|| EulerError::MissingEntry(q.to_string(), ideal.to_string()))?;
        let f = match self.rep_value(q, idx)? {
            EntryValue::Pointwise => return Ok(EntryValue::Pointwise),
            EntryValue::Exact(f) => f,
        };
        if f.is_infinite() {
            return Ok(EntryValue::Exact(f));
        }
        let rep = &reps[idx].ideal;
        let w = rep.quotient_weights();
        let mut g = f;
        for j in rep.n() + 1..=ideal.n() {
            let s = resultant(&[LinForm::var(VarId::alpha(j))], &w);
            g = g.try_mul(&RatFn::from_poly(s)).map_err(EulerError::Algebra)?;
        }
        Ok(EntryValue::Exact(permute_alpha(&g, &sigma)))
    }

    /// `1/e(Q, I)` at `α = vals`; `∞` entries give 0, `None` at a pole.
    pub fn reciprocal_at(&self, q: &AlgebraId, ideal: &MonomialIdeal, vals: &[Q]) -> Result<Option<Q>, EulerError> {
        let mu = q.mu();
        let reps = reps_for(mu);
        let (idx, sigma) = locate(reps, ideal).ok_or_else(|| EulerError::MissingEntry(q.to_string(), ideal.to_string()))?;
        let moved: Vec<Q> = sigma.iter().map(|&s| vals[s].clone()).collect();
        self.rep_reciprocal_at(q, idx, ideal.n(), &moved)
    }

    /// `1/e(Q, desc(I_idx))` in `n` variables at an unpermuted point.
    fn rep_reciprocal_at(&self, q: &AlgebraId, idx: usize, n: usize, vals: &[Q]) -> Result<Option<Q>, EulerError> {
        let rep = &reps_for(q.mu())[idx].ideal;
        let k = rep.n();
        let inv_rep = match self.rep_value(q, idx)? {
            EntryValue::Exact(f) => match f.reciprocal().eval(&alpha_point(&vals[..k])).map_err(EulerError::Algebra)? {
                Some(v) => v,
                None => return Ok(None),
            },
            EntryValue::Pointwise => match self.max_square_reciprocal_at(q, &vals[..k])? {
                Some(v) => v,
                None => return Ok(None),
            },
        };
        if inv_rep.is_zero() {
            return Ok(Some(inv_rep));
        }
        let weights: Vec<Q> = rep
            .complement()
            .iter()
            .map(|v| v.iter().zip(vals).map(|(&a, x)| x * Q::from_integer(a.into())).sum())
            .collect();
        let mut susp = Q::one();
        for x in &vals[k..n] {
            for w in &weights {
                susp *= x - w;
            }
        }
        if susp.is_zero() {
            return Ok(None);
        }
        Ok(Some(inv_rep / susp))
    }

    /// The rows given as input, in the `load_table` format. Entries
    /// completed by reciprocity are left out, so `load_table(t.to_text())`
    /// equals `t` before completion.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (q, ents) in &self.entries {
            let reps = reps_for(q.mu());
            for (idx, e) in ents {
                if e.provenance == Provenance::Reciprocity {
                    continue;
                }
                if let EntryValue::Exact(f) = &e.value {
                    out.push_str(&format!("{q} | {} | {f}\n", reps[*idx].ideal));
                }
            }
        }
        out
    }

    /// `1/e(Q, M_μ²) = −Σ_{I ≠ M_μ²} 1/e(Q, I)` at a point of `μ` coordinates.
    pub fn max_square_reciprocal_at(&self, q: &AlgebraId, vals: &[Q]) -> Result<Option<Q>, EulerError> {
        type Orbits = BTreeMap<usize, std::sync::Arc<Vec<(usize, Vec<usize>)>>>;
        static ORBITS: OnceLock<std::sync::Mutex<Orbits>> = OnceLock::new();
        let mu = q.mu();
        let orbit = {
            let mut m = ORBITS.get_or_init(Default::default).lock().expect("poisoned");
            m.entry(mu).or_insert_with(|| std::sync::Arc::new(reciprocity_orbit(mu))).clone()
        };
        let sq = Self::max_square_index(mu);
        let mut acc = Q::zero();
        for (idx, sigma) in orbit.iter() {
            if *idx == sq {
                continue;
            }
            let moved: Vec<Q> = sigma.iter().map(|&s| vals[s].clone()).collect();
            match self.rep_reciprocal_at(q, *idx, mu, &moved)? {
                Some(v) => acc += v,
                None => return Ok(None),
            }
        }
        Ok(Some(-acc))
    }
}

/// Parses the line format `<algebra> | <ideal> | <expression>`.
pub fn load_table(src: &str) -> Result<EulerTable, EulerError> {
    let env = macros();
    let mut t = EulerTable::new();
    for (ln, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('|').collect();
        if fields.len() != 3 {
            return Err(EulerError::Parse { line: ln + 1, col: 1, msg: "expected three '|'-separated fields".into() });
        }
        let offset = |k: usize| fields[..k].iter().map(|f| f.len() + 1).sum::<usize>();
        let q: AlgebraId = fields[0]
            .parse()
            .map_err(|_| EulerError::Parse { line: ln + 1, col: 1, msg: format!("unknown algebra '{}'", fields[0].trim()) })?;
        let ideal = parse_ideal(fields[1].trim()).map_err(|e| EulerError::Parse {
            line: ln + 1,
            col: offset(1) + 1,
            msg: e.to_string(),
        })?;
        let lead = fields[2].len() - fields[2].trim_start().len();
        let value = parse_ratfn_with(fields[2].trim(), &env).map_err(|e| match e {
            thom_algebra::AlgebraError::Parse { col, msg } => {
                EulerError::Parse { line: ln + 1, col: offset(2) + lead + col, msg }
            }
            other => EulerError::Parse { line: ln + 1, col: offset(2) + 1, msg: other.to_string() },
        })?;
        t.insert(&q, &ideal, value, Provenance::Shipped).map_err(|e| match e {
            EulerError::InconsistentMu { .. } | EulerError::NotMinimal(_) => {
                EulerError::Parse { line: ln + 1, col: offset(1) + 1, msg: e.to_string() }
            }
            other => other,
        })?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use thom_algebra::parse::parse_ratfn;
    use thom_algebra::q;

    #[test]
    fn rows_load_exactly() {
        let t = load_table("A_2 | (x^2,xy,y^2) | (1/3)*(a1-2*a2)*(a2-2*a1)\nI_{2,2} | (x^4) | INF\n").unwrap();
        let a2 = AlgebraId::a(2);
        let v = t.lookup(&a2, &MonomialIdeal::max_square(2)).unwrap();
        assert_eq!(v, EntryValue::Exact(parse_ratfn("(1/3)*(a1-2*a2)*(a2-2*a1)").unwrap()));
        let i22 = AlgebraId::i2(2, 2);
        assert_eq!(t.lookup(&i22, &parse_ideal("(x^4)").unwrap()).unwrap(), EntryValue::Exact(RatFn::Infinite));
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = load_table("# header\nA_2 | (x^3) | 1 + * a1\n").unwrap_err();
        assert!(matches!(e, EulerError::Parse { line: 2, .. }), "{e:?}");
        let e = load_table("A_2 | (x^4) | 1\n").unwrap_err();
        assert!(matches!(e, EulerError::Parse { line: 1, col: 6, .. }), "{e:?}");
    }

    #[test]
    fn shipped_lookups() {
        let t = EulerTable::shipped();
        let a2 = AlgebraId::a(2);
        let got = t.lookup(&a2, &parse_ideal("(x,y^3)").unwrap()).unwrap();
        assert_eq!(got, EntryValue::Exact(parse_ratfn("(a1-a2)*(a1-2*a2)").unwrap()));
        let a3 = AlgebraId::a(3);
        let got = t.lookup(&a3, &parse_ideal("(x^2,y^2)").unwrap()).unwrap();
        let want = parse_ratfn("(a1-a2)^2*(2*a1-a2)*(a1-2*a2)/(a1+a2)").unwrap();
        assert_eq!(got, EntryValue::Exact(want));
        let s21 = AlgebraId::sigma21();
        assert_eq!(t.lookup(&s21, &parse_ideal("(x^5)").unwrap()).unwrap(), EntryValue::Exact(RatFn::Infinite));
        let club = parse_ratfn("CLUB").err();
        assert!(club.is_some());
        assert_eq!(
            parse_ratfn_with("CLUB", &macros()).unwrap(),
            parse_ratfn("(a1-a2)*(a1-a3)*(a1-2*a2)*(a1-2*a3)*(a2-a3)^2").unwrap()
        );
        let v = t.reciprocal_at(&a3, &parse_ideal("(x^2,y^2)").unwrap(), &[q(3), q(5)]).unwrap().unwrap();
        assert_eq!(v, qf(-8, 28));
    }

    #[test]
    fn text_round_trip() {
        let src = include_str!("../data/euler_classes.tbl");
        let t = load_table(src).unwrap();
        let text = t.to_text();
        let again = load_table(&text).unwrap();
        assert_eq!(again, t);
        assert_eq!(again.to_text(), text);
    }

    fn qf(n: i64, d: i64) -> Q {
        thom_algebra::qf(n, d)
    }
}
