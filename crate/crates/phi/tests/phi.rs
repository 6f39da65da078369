use num_bigint::BigInt;
use num_traits::{One, Zero};
use thom_algebra::{q, qf, Q};
use thom_engine::thompoly::delta_value;
use thom_engine::{shipped_table, subgrassmannian_tp, supersymmetry_check, to_quotient, tp_quotient};
use thom_euler::AlgebraId;
use thom_phi::*;

#[test]
fn segre_numbers() {
    for i in 0..=10 {
        assert_eq!(segre_coeff(&[i]), BigInt::from(1u64 << i), "(({i}))");
    }
    for i in 1..=8 {
        assert_eq!(segre_coeff(&[i, 0]), BigInt::from((1u64 << i) - 1), "(({i},0))");
    }
    assert_eq!(segre_coeff(&[2, 1]), BigInt::from(3));
    assert_eq!(segre_coeff(&[3, 1]), BigInt::from(10));
    for len in 1..=4 {
        for idx in strict_sequences(len, 12) {
            assert!(segre_coeff(&idx) > BigInt::zero(), "{idx:?}");
        }
    }
}

#[test]
fn segre_series() {
    assert!(segre_series_check(1, 10));
    for n in 2..=3 {
        assert!(segre_series_check(n, 4), "n = {n}");
    }
}

#[test]
fn localized_matches_closed_formula() {
    for (n, r) in [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)] {
        for l in 0..=2 {
            let loc = phi_tp_localized(n, r, n + l).unwrap();
            assert!(supersymmetry_check(loc.root().unwrap()), "Φ_{{{n},{r}}} at l = {l}");
            let got = to_quotient(&loc).unwrap();
            let want = phi_tp_schur(n as u32, (n - r) as u32, l as u32).unwrap();
            assert_eq!(got.expansion().unwrap(), want.expansion().unwrap(), "Φ_{{{n},{r}}} at l = {l}");
            assert!(want.expansion().unwrap().all_nonnegative_integers());
        }
    }
}

#[test]
fn small_members_are_known_algebras() {
    let table = shipped_table();
    for l in 0..=2u32 {
        let a2 = tp_quotient(&AlgebraId::a(2), l as usize, table.clone()).unwrap();
        assert_eq!(phi_tp_schur(1, 1, l).unwrap().expansion().unwrap(), a2.expansion().unwrap());
        let i22 = tp_quotient(&AlgebraId::i2(2, 2), l as usize, table.clone()).unwrap();
        assert_eq!(phi_tp_schur(2, 2, l).unwrap().expansion().unwrap(), i22.expansion().unwrap());
        let iii23 = tp_quotient(&AlgebraId::iii(2, 3), l as usize, table.clone()).unwrap();
        assert_eq!(phi_tp_schur(2, 1, l).unwrap().expansion().unwrap(), iii23.expansion().unwrap());
    }
}

#[test]
fn partitions_have_the_codimension() {
    for m in 1..=4u32 {
        for s in 1..=m {
            for l in 0..=3 {
                let tp = phi_tp_schur(m, s, l).unwrap();
                assert_eq!(tp.codim, phi_codim(m, m - s, l));
                if let Some(w) = tp.expansion().unwrap().weight() {
                    assert_eq!(w, tp.codim, "m = {m}, s = {s}, l = {l}");
                }
            }
        }
    }
}

#[test]
fn restricted_summation_agrees() {
    // the stated range i_s ≥ m − s, |I| ≤ l + m − s + 1, summed without straightening
    for m in 1..=4u32 {
        for s in 1..=m {
            for l in 0..=2u32 {
                let (mi, si, li) = (m as i64, s as i64, l as i64);
                let mut e = thom_schur::SchurExpansion::new();
                for idx in strict_sequences(s as usize, li + mi - si + 1) {
                    if idx[idx.len() - 1] < mi - si {
                        continue;
                    }
                    let total: i64 = idx.iter().sum();
                    let mut parts: Vec<u32> =
                        idx.iter().enumerate().map(|(k, &i)| (li + 1 + k as i64 + i) as u32).collect();
                    parts.extend(std::iter::repeat_n(l + m, (m - s) as usize));
                    parts.push((li + mi + 1 - si - total) as u32);
                    e.add(thom_schur::Partition::from_multiset(parts), Q::from_integer(segre_coeff(&idx)));
                }
                assert_eq!(&e, phi_tp_schur(m, s, l).unwrap().expansion().unwrap(), "m = {m}, s = {s}, l = {l}");
            }
        }
    }
}

#[test]
fn rank_one_member_of_the_subgrassmannian() {
    for n in 2..=3 {
        for p in n..=n + 1 {
            let sub = to_quotient(&subgrassmannian_tp(n, 1, 1, p).unwrap()).unwrap();
            let phi = to_quotient(&phi_tp_localized(n, 0, p).unwrap()).unwrap();
            assert_eq!(sub.expansion().unwrap(), phi.expansion().unwrap(), "n = {n}, p = {p}");
        }
    }
}

#[test]
fn veronese_lowering() {
    for n in 1..=3 {
        for l in 0..=2 {
            assert!(veronese_check(n, l).unwrap(), "n = {n}, l = {l}");
        }
    }
}

/// `Δ_{ρ_s}` of a numeric alphabet.
fn staircase_value(s: usize, xs: &[Q]) -> Q {
    let mut e = vec![Q::one()];
    for x in xs {
        e.push(Q::zero());
        for k in (1..e.len()).rev() {
            let add = &e[k - 1] * x;
            e[k] += add;
        }
    }
    let rho: Vec<u32> = (1..=s as u32).rev().collect();
    delta_value(&rho, &e)
}

fn subsets(m: usize, s: usize) -> Vec<Vec<usize>> {
    (0u32..1 << m).filter(|b| b.count_ones() as usize == s).map(|b| (0..m).filter(|i| b >> i & 1 == 1).collect()).collect()
}

#[test]
fn two_form_lemma_is_independent_of_y() {
    let g: Vec<Q> = vec![q(3), qf(-5, 2), q(7), qf(1, 3)];
    for m in 2..=4 {
        for s in 1..m {
            let gs = &g[..m];
            let mut lhs = Q::zero();
            for h in subsets(m, s) {
                let inside: Vec<Q> = h.iter().map(|&i| gs[i].clone()).collect();
                let mut res = Q::one();
                let mut cross = Q::one();
                for &i in &h {
                    for j in (0..m).filter(|j| !h.contains(j)) {
                        res *= &gs[i] - &gs[j];
                        cross *= &gs[i] + &gs[j];
                    }
                }
                lhs += staircase_value(s, &inside) / res * cross;
            }
            let at = |y: Q| {
                let mut xs = gs.to_vec();
                xs.push(y.clone());
                xs.push(-y);
                staircase_value(s, &xs)
            };
            assert_eq!(at(Q::zero()), at(qf(11, 7)), "m = {m}, s = {s}");
            assert_eq!(lhs, at(Q::zero()), "m = {m}, s = {s}");
        }
    }
}
