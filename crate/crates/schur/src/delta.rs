use std::collections::HashMap;

use thom_algebra::{LinForm, MPoly, VarId};

use crate::partition::Partition;

/// `det(E(a_i + j − i))` for a raw index sequence `a`, where `E` gives the
/// matrix entry for each index (returning `None` for a zero entry).
///
/// Rows are expanded bottom-up with the set of used columns as state; the
/// Toeplitz band structure keeps the number of states small.
pub fn jt_det(seq: &[i64], entry: &dyn Fn(i64) -> Option<MPoly>) -> MPoly {
    let l = seq.len();
    if l == 0 {
        return MPoly::one();
    }
    assert!(l < 64, "determinant too large");
    let mut cache: HashMap<i64, Option<MPoly>> = HashMap::new();
    let mut get = |k: i64| -> Option<MPoly> { cache.entry(k).or_insert_with(|| entry(k)).clone() };
    let mut states: HashMap<u64, MPoly> = HashMap::new();
    states.insert(0, MPoly::one());
    for i in (0..l).rev() {
        let mut next: HashMap<u64, MPoly> = HashMap::new();
        for (mask, val) in &states {
            for j in 0..l {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let Some(e) = get(seq[i] + j as i64 - i as i64) else { continue };
                let below = (mask & ((1u64 << j) - 1)).count_ones();
                let mut t = val * &e;
                if below % 2 == 1 {
                    t = -t;
                }
                let slot = next.entry(mask | (1 << j)).or_insert_with(MPoly::zero);
                *slot += &t;
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    states.remove(&((1u64 << l) - 1)).unwrap_or_else(MPoly::zero)
}

fn c_entry(k: i64) -> Option<MPoly> {
    match k {
        k if k < 0 => None,
        0 => Some(MPoly::one()),
        k => Some(MPoly::var(VarId::c(k as usize))),
    }
}

/// `Δ_λ = det(c_{λ_i + j − i})` with `c_0 = 1`.
pub fn delta_quotient(lambda: &Partition) -> MPoly {
    jt_det(&lambda.padded(0), &c_entry)
}

/// Jacobi-Trudi determinant of a raw integer sequence in quotient variables.
pub fn delta_raw(seq: &[i64]) -> MPoly {
    jt_det(seq, &c_entry)
}

/// Rewrites `Δ_seq` for an arbitrary integer sequence as `sign · Δ_λ`,
/// or `None` when it vanishes.
pub fn straighten(seq: &[i64]) -> Option<(i64, Partition)> {
    let r = seq.len();
    let mut b: Vec<i64> = seq.iter().enumerate().map(|(i, &a)| a - i as i64).collect();
    // sort decreasing, tracking the permutation sign
    let mut sign = 1;
    for i in 0..r {
        for j in 0..r - 1 - i {
            if b[j] < b[j + 1] {
                b.swap(j, j + 1);
                sign = -sign;
            } else if b[j] == b[j + 1] {
                return None;
            }
        }
    }
    if b.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts: Vec<i64> = b.iter().enumerate().map(|(i, &x)| x + i as i64).collect();
    if parts.last().is_some_and(|&x| x < 0) {
        return None;
    }
    Some((sign, Partition::from_signed(&parts).expect("straightened sequence is a partition")))
}

/// Elementary symmetric polynomials `σ_0..σ_k` of the given linear forms.
pub fn elementary(xs: &[LinForm]) -> Vec<MPoly> {
    let mut e = vec![MPoly::one()];
    for x in xs {
        let xp = x.to_poly();
        let mut next = e.clone();
        next.push(MPoly::zero());
        for k in 1..next.len() {
            next[k] = &e.get(k).cloned().unwrap_or_else(MPoly::zero) + &(&e[k - 1] * &xp);
        }
        e = next;
    }
    e
}

/// `Δ_λ(xs) = det(σ_{λ_i + j − i}(xs))`.
pub fn delta_alphabet(lambda: &Partition, xs: &[LinForm]) -> MPoly {
    let e = elementary(xs);
    let entry = |k: i64| -> Option<MPoly> {
        if k < 0 || k as usize >= e.len() {
            None
        } else {
            Some(e[k as usize].clone())
        }
    };
    jt_det(&lambda.padded(0), &entry)
}
