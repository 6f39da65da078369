use std::collections::BTreeSet;

use crate::ideal::{Exponent, MonomialIdeal};
use crate::parse::parse_ideal;

/// Cells that can be added to a divisor-closed set keeping it closed.
fn addable(n: usize, set: &BTreeSet<Exponent>) -> Vec<Exponent> {
    let mut cands: BTreeSet<Exponent> = BTreeSet::new();
    let zero = vec![0u32; n];
    for base in set.iter().chain(std::iter::once(&zero)) {
        for i in 0..n {
            let mut w = base.clone();
            w[i] += 1;
            if set.contains(&w) {
                continue;
            }
            let closed = (0..n).all(|j| {
                if w[j] == 0 {
                    return true;
                }
                let mut d = w.clone();
                d[j] -= 1;
                d == zero || set.contains(&d)
            });
            if closed {
                cands.insert(w);
            }
        }
    }
    cands.into_iter().collect()
}

/// All codimension-`m` monomial ideals in `n` variables, in lexicographic
/// order of their sorted complements.
pub fn enumerate_ideals(n: usize, m: usize) -> Vec<MonomialIdeal> {
    let mut level: BTreeSet<BTreeSet<Exponent>> = BTreeSet::new();
    level.insert(BTreeSet::new());
    for _ in 0..m {
        let mut next = BTreeSet::new();
        for s in &level {
            for c in addable(n, s) {
                let mut t = s.clone();
                t.insert(c);
                next.insert(t);
            }
        }
        level = next;
    }
    level.into_iter().map(|c| MonomialIdeal::from_complement_unchecked(n, c)).collect()
}

/// One fixed-point representative `I_i ⊂ M_{n(i)}` per orbit type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub ideal: MonomialIdeal,
    pub stabilizer: u64,
}

impl Representative {
    pub fn n(&self) -> usize {
        self.ideal.n()
    }
}

const SHIPPED: [&[&str]; 4] = [
    &["(x^2)"],
    &["(x^3)", "(x^2,xy,y^2)"],
    &["(x^4)", "(x^2,y^2)", "(x^2,xy,y^3)", "(x^2,y^2,z^2,xy,yz,zx)"],
    &[
        "(x^5)",
        "(x^2,xy,y^4)",
        "(x^3,xy,y^3)",
        "(x^2,xy^2,y^3)",
        "(x^2,y^2,z^3,xy,yz,zx)",
        "(x^2,y^2,z^2,xy,xz)",
        "(x^2,y^2,z^2,u^2,xy,xz,xu,yz,yu,zu)",
    ],
];

/// The list `I_i` for codimension `m`: the tabulated shapes for `m ≤ 4`,
/// orbit reduction (minimal variables, lexicographically smallest
/// complement) beyond.
pub fn canonical_representatives(m: usize) -> Vec<Representative> {
    if (1..=4).contains(&m) {
        return SHIPPED[m - 1]
            .iter()
            .map(|s| {
                let ideal = parse_ideal(s).expect("shipped ideal");
                let stabilizer = ideal.stabilizer_order();
                Representative { ideal, stabilizer }
            })
            .collect();
    }
    computed_representatives(m)
}

/// Orbit reduction over `enumerate_ideals(m, m)`.
pub fn computed_representatives(m: usize) -> Vec<Representative> {
    let mut seen: BTreeSet<(usize, MonomialIdeal)> = BTreeSet::new();
    for i in enumerate_ideals(m, m) {
        let (r, _) = i.reduce();
        let (c, _) = r.canonical();
        seen.insert((c.n(), c));
    }
    seen.into_iter()
        .map(|(_, ideal)| {
            let stabilizer = ideal.stabilizer_order();
            Representative { ideal, stabilizer }
        })
        .collect()
}

/// The representative of `I`'s orbit and a permutation `σ` of `1..n` with
/// `σ·rep.embed(n) = I`.
pub fn locate(reps: &[Representative], ideal: &MonomialIdeal) -> Option<(usize, Vec<usize>)> {
    let n = ideal.n();
    let (reduced, order) = ideal.reduce();
    let k = reduced.n();
    for (idx, rep) in reps.iter().enumerate() {
        if rep.n() != k {
            continue;
        }
        for s in thom_algebra::perm::permutations(k) {
            if rep.ideal.permute(&s) == reduced {
                // rep --s--> reduced (first k coordinates), then coordinate j ↦ order[j]
                let mut sigma: Vec<usize> = (0..n).collect();
                for (j, slot) in sigma.iter_mut().enumerate() {
                    let mid = if j < k { s[j] } else { j };
                    *slot = order[mid];
                }
                return Some((idx, sigma));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ideals(2, 2).len(), 3);
        assert_eq!(enumerate_ideals(1, 3).len(), 1);
        assert_eq!(enumerate_ideals(3, 3).len(), 13);
        assert_eq!(enumerate_ideals(4, 4).len(), 59);
    }

    #[test]
    fn shipped_match_computed() {
        for m in 1..=4 {
            let shipped = canonical_representatives(m);
            let computed = computed_representatives(m);
            assert_eq!(shipped.len(), computed.len());
            for r in &shipped {
                let c = r.ideal.canonical().0;
                assert!(computed.iter().any(|x| x.ideal == c && x.stabilizer == r.stabilizer));
            }
        }
    }

    #[test]
    fn locate_witness() {
        let reps = canonical_representatives(3);
        for i in enumerate_ideals(3, 3) {
            let (idx, sigma) = locate(&reps, &i).unwrap();
            assert_eq!(reps[idx].ideal.embed(3).permute(&sigma), i);
        }
    }
}
