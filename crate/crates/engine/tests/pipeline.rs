use std::time::Instant;

use thom_algebra::parse::{parse_poly, parse_ratfn};
use thom_algebra::{q, MPoly, VarId};
use thom_engine::*;
use thom_euler::{AlgebraId, EntryValue};
use thom_ideals::{parse_ideal, MonomialGerm};

fn c_poly(tp: &ThomPolynomial) -> MPoly {
    tp.quotient().unwrap().c_poly()
}

/// `c_{l+1}² + Σ_{i≥1} 2^{i−1} c_{l+1−i} c_{l+1+i}`, with `c_0 = 1`.
fn a2_series(l: usize) -> MPoly {
    let c = |k: usize| if k == 0 { MPoly::one() } else { MPoly::var(VarId::c(k)) };
    let mut h = &c(l + 1) * &c(l + 1);
    for i in 1..=l + 1 {
        h += &(&c(l + 1 - i) * &c(l + 1 + i)).scale(&q(1 << (i - 1)));
    }
    h
}

#[test]
fn a2_matches_the_series() {
    let t0 = Instant::now();
    for l in 0..=4 {
        let tp = tp_quotient(&AlgebraId::a(2), l, shipped_table()).unwrap();
        assert_eq!(c_poly(&tp), a2_series(l), "l = {l}");
        assert_eq!(tp.codim as usize, 2 * l + 2);
    }
    eprintln!("A2 series: {:?}", t0.elapsed());
}

#[test]
fn a3_at_zero() {
    let tp = tp_quotient(&AlgebraId::a(3), 0, shipped_table()).unwrap();
    assert_eq!(c_poly(&tp), parse_poly("c1^3 + 3*c1*c2 + 2*c3").unwrap());
}

#[test]
fn porteous_in_roots() {
    for n in 1..=3 {
        for l in 0..=3 {
            let got = to_quotient(&porteous_root(n, n + l)).unwrap();
            assert_eq!(got.expansion().unwrap(), porteous(n, l).expansion().unwrap(), "n={n} l={l}");
        }
    }
}

#[test]
fn a3_restricted_to_f22() {
    let tp = localize_tp_symbolic(&AlgebraId::a(3), 2, 2, shipped_table()).unwrap();
    let f = MonomialGerm::new(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
    let r = restrict(tp.root().unwrap(), &f).unwrap();
    assert_eq!(r, parse_poly("(a1+a2)*a1*a2").unwrap());
    let e = euler_via_interpolation(&tp, &f).unwrap();
    assert_eq!(e, parse_ratfn("(a1-a2)^2*(2*a1-a2)*(a1-2*a2)/(a1+a2)").unwrap());
}

#[test]
fn a2_fold_interpolates_to_one() {
    let tp = localize_tp_symbolic(&AlgebraId::a(2), 1, 1, shipped_table()).unwrap();
    let f = MonomialGerm::new(1, vec![vec![3]]).unwrap();
    assert_eq!(euler_via_interpolation(&tp, &f).unwrap(), parse_ratfn("1").unwrap());
}

#[test]
fn extrapolation_reproduces_a3() {
    let a3 = AlgebraId::a(3);
    let tp1 = tp_quotient(&a3, 1, shipped_table()).unwrap();
    let t = extrapolate_table(&a3, &tp1).unwrap();
    let i = parse_ideal("(x^2,xy,y^3)").unwrap();
    assert_eq!(t.lookup(&a3, &i).unwrap(), EntryValue::Exact(parse_ratfn("(1/2)*(3*a2-a1)*(a1-a2)^2").unwrap()));
    let j = parse_ideal("(x^2,y^2)").unwrap();
    assert_eq!(
        t.lookup(&a3, &j).unwrap(),
        EntryValue::Exact(parse_ratfn("(a1-a2)^2*(2*a1-a2)*(a1-2*a2)/(a1+a2)").unwrap())
    );
    for rep in t.representatives(&a3) {
        assert_eq!(t.lookup(&a3, &rep.ideal).unwrap(), thom_euler::EulerTable::shipped().lookup(&a3, &rep.ideal).unwrap(), "{}", rep.ideal);
    }
}

#[test]
fn catalog_properties() {
    let t = shipped_table();
    for q in AlgebraId::catalog().into_iter().chain([AlgebraId::a(4), AlgebraId::sigma(2)]) {
        let mut prev: Option<ThomPolynomial> = None;
        for l in 0..=2 {
            let tp = tp_quotient(&q, l, t.clone()).unwrap();
            let e = tp.expansion().unwrap();
            assert!(e.all_nonnegative_integers(), "{q} l={l}: {e}");
            assert_eq!(e.weight(), Some((q.mu() * l) as u32 + q.gamma().unwrap()), "{q} l={l}");
            assert!(e.max_len() <= q.mu());
            if let Some(p) = &prev {
                assert!(d_stable(&q, p, &tp).unwrap(), "{q} l={l}");
            }
            prev = Some(tp);
        }
        let (n, p) = working_dims(&q, 1).unwrap();
        let root = localize_tp(&q, n, p, t.clone()).unwrap();
        assert!(supersymmetry_check(root.root().unwrap()), "{q}");
        let up = to_quotient(&localize_tp(&q, n + 1, p + 1, t.clone()).unwrap()).unwrap();
        assert_eq!(up.expansion().unwrap(), to_quotient(&root).unwrap().expansion().unwrap(), "{q}");
    }
}

#[test]
fn a4_at_zero() {
    let tp = tp_quotient(&AlgebraId::a(4), 0, shipped_table()).unwrap();
    assert_eq!(c_poly(&tp), parse_poly("c1^4 + 6*c1^2*c2 + 2*c2^2 + 9*c1*c3 + 6*c4").unwrap());
}

#[test]
fn sigma2_is_porteous() {
    for l in 0..=2 {
        let tp = tp_quotient(&AlgebraId::sigma(2), l, shipped_table()).unwrap();
        assert_eq!(tp.expansion().unwrap(), porteous(2, l).expansion().unwrap());
    }
}

#[test]
fn padding_does_not_matter() {
    let a3 = AlgebraId::a(3);
    let tp1 = tp_quotient(&a3, 1, shipped_table()).unwrap();
    let i = parse_ideal("(x^2,y^2)").unwrap();
    let f1 = padded_germ(&i, 3).unwrap();
    let f2 = MonomialGerm::new(2, vec![vec![2, 0], vec![0, 2], vec![0, 2]]).unwrap();
    assert_ne!(f1, f2);
    assert_eq!(euler_via_interpolation(&tp1, &f1).unwrap(), euler_via_interpolation(&tp1, &f2).unwrap());
    assert!(padded_germ(&parse_ideal("(x^2,xy,y^2)").unwrap(), 2).is_err());
}

#[test]
fn wrong_class_restricts_to_zero() {
    // (x^2, y^2) is not in the closure of III_{2,3}
    let tp = tp_quotient(&AlgebraId::iii(2, 3), 0, shipped_table()).unwrap();
    let f = MonomialGerm::new(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
    assert!(euler_via_interpolation(&tp, &f).unwrap().is_infinite());
}

#[test]
fn iab_from_iiiab_small() {
    let t = shipped_table();
    let iii = tp_quotient(&AlgebraId::iii(2, 3), 1, t.clone()).unwrap();
    let low = iab_from_iiiab(&iii, 2, 3).unwrap();
    let i23 = tp_quotient(&AlgebraId::i2(2, 3), 0, t).unwrap();
    assert_eq!(low.expansion().unwrap(), i23.expansion().unwrap());
    let s = iab_from_iiiab(&porteous(2, 1), 2, 2).unwrap();
    assert_eq!(s.expansion().unwrap(), porteous(2, 0).expansion().unwrap());
}

#[test]
fn a2_thom_series() {
    let s = thom_series(&AlgebraId::a(2), shipped_table(), 3).unwrap();
    assert_eq!(s.coeff(&[0, 0]), q(1));
    assert_eq!(s.coeff(&[-1, 1]), q(1));
    assert_eq!(s.coeff(&[-2, 2]), q(2));
    assert_eq!(s.coeff(&[-3, 3]), q(4));
    assert_eq!(s.terms.len(), 4);
    assert_eq!(s.to_string(), "d_0^2 + d_{-1}d_1 + 2d_{-2}d_2 + 4d_{-3}d_3 + …");
}

#[test]
fn a3_series_head() {
    let s = thom_series(&AlgebraId::a(3), shipped_table(), 1).unwrap();
    // tp_{A_3}(0) = c1^3 + 3c1c2 + 2c3 is the d_{-1}..d_1 window at l = 0
    assert_eq!(s.coeff(&[0, 0, 0]), q(1));
    assert_eq!(s.coeff(&[-1, 0, 1]), q(3));
    assert_eq!(s.coeff(&[-1, -1, 2]), q(0));
    assert_eq!(s.degree(), Some(0));
}

#[test]
fn sigma_power_and_subgrassmannian() {
    let a = sigma_power_tp(2, 2, 3).unwrap();
    let want = parse_poly("(b1-a1)*(b1-a2)*(b2-a1)*(b2-a2)*(b3-a1)*(b3-a2)").unwrap();
    assert_eq!(a.root().unwrap().symbolic().unwrap(), want);
    let g = subgrassmannian_tp(2, 1, 0, 3).unwrap();
    let mut s = Sampler::new(3);
    for _ in 0..5 {
        let (x, y) = s.point(2, 3);
        assert_eq!(g.root().unwrap().eval(&x, &y), a.root().unwrap().eval(&x, &y));
    }
    let g1 = subgrassmannian_tp(2, 1, 1, 3).unwrap();
    assert!(supersymmetry_check(g1.root().unwrap()));
    assert_eq!(infer_degree(g1.root().unwrap(), 1), Some(g1.codim));
    let q1 = to_quotient(&g1).unwrap();
    assert!(q1.expansion().unwrap().all_nonnegative_integers());
    assert!(subgrassmannian_tp(2, 1, 3, 3).is_err());
}

#[test]
fn a3_quotient_restriction_matches_roots() {
    let tp = tp_quotient(&AlgebraId::a(3), 0, shipped_table()).unwrap();
    let f = MonomialGerm::new(2, vec![vec![3, 0], vec![0, 1]]).unwrap();
    let sym = localize_tp_symbolic(&AlgebraId::a(3), 2, 2, shipped_table()).unwrap();
    assert_eq!(restrict_quotient(tp.quotient().unwrap(), &f).unwrap(), restrict(sym.root().unwrap(), &f).unwrap());
}
