use thom_algebra::parse::parse_poly;
use thom_algebra::{q, MPoly, VarId};
use thom_engine::shipped_table;
use thom_euler::{AlgebraId, EulerTable};
use thom_residue::*;

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn geometric_expansions() {
    let k = GeneratingFunction::parse(2, "1/(2*z1-z2)").unwrap();
    let s = laurent_expand(&k, &MPoly::one(), 8).unwrap();
    for j in 0..7 {
        assert_eq!(s.coeff(&[j, -j - 1]), -q(1 << j));
    }
    // 1/(z1+z2−z3) = −Σ_k (z1+z2)^k / z3^{k+1}
    let k = GeneratingFunction::parse(3, "1/(z1+z2-z3)").unwrap();
    let s = laurent_expand(&k, &MPoly::one(), 6).unwrap();
    for deg in 0..5 {
        for a in 0..=deg {
            assert_eq!(s.coeff(&[a, deg - a, -deg - 1]), -q(binom(deg, a)), "z1^{a} z2^{} / z3^{}", deg - a, deg + 1);
        }
    }
    let one = GeneratingFunction::parse(2, "1").unwrap();
    let s = laurent_expand(&one, &MPoly::one(), 3).unwrap();
    assert_eq!(s.terms.len(), 1);
    assert_eq!(s.coeff(&[0, 0]), q(1));
}

#[test]
fn ill_posed_inputs() {
    assert!(GeneratingFunction::parse(2, "1/(z1+z3)").is_err());
    assert!(GeneratingFunction::parse(2, "1/(z1^2+z2)").is_err());
}

/// `c_{l+1}² + Σ_{i≥1} 2^{i−1} c_{l+1−i} c_{l+1+i}`.
fn a2_series(l: usize) -> MPoly {
    let c = |k: usize| if k == 0 { MPoly::one() } else { MPoly::var(VarId::c(k)) };
    let mut h = &c(l + 1) * &c(l + 1);
    for i in 1..=l + 1 {
        h += &(&c(l + 1 - i) * &c(l + 1 + i)).scale(&q(1 << (i - 1)));
    }
    h
}

#[test]
fn residues_of_morin_classes() {
    let cat = kq_catalog();
    for l in 0..=4 {
        assert_eq!(iterated_residue(&cat[&AlgebraId::a(1)], l).unwrap(), MPoly::var(VarId::c(l + 1)));
        assert_eq!(iterated_residue(&cat[&AlgebraId::a(2)], l).unwrap(), a2_series(l), "l = {l}");
    }
    assert_eq!(iterated_residue(&cat[&AlgebraId::a(3)], 0).unwrap(), parse_poly("c1^3 + 3*c1*c2 + 2*c3").unwrap());
}

#[test]
fn catalog_matches_printed_forms() {
    let cat = kq_catalog();
    let printed = [
        (AlgebraId::i2(2, 2), 3, "1/(2*(2*z1-z3)*(z1+z2-z3))"),
        (AlgebraId::iii(2, 3), 3, "1/(2*z1-z3)"),
        (AlgebraId::sigma21(), 4, "1/((2*z1-z3)*(z1+z2-z3)*(2*z1-z4))"),
        (AlgebraId::iii(2, 4), 4, "1/((2*z1-z2)*(z1+z2-z3)*(2*z1-z4)*(z1+z2-z4))"),
        (AlgebraId::i2(2, 3), 4, "1/((2*z1-z4)*(2*z2-z3)*(2*z2-z4)*(z1+z2-z4)*(z2+z3-z4))"),
        (AlgebraId::a(3), 3, "1/((2*z1-z2)*(2*z1-z3)*(z1+z2-z3))"),
        (AlgebraId::sigma(3), 3, "z1*z2^2"),
    ];
    for (alg, mu, src) in printed {
        let want = GeneratingFunction::parse(mu, src).unwrap();
        let got = &cat[&alg];
        for z in [[q(3), q(-7), q(11), q(2)], [q(5), q(1), q(-4), q(9)]] {
            assert_eq!(got.eval(&z[..mu]), want.eval(&z[..mu]), "{alg}");
        }
    }
}

#[test]
fn printed_three_three_form_vanishes() {
    let k = GeneratingFunction::parse(4, "1/(4*(2*z1-z3)*(z1+z2-z3)*(2*z1-z4)*(z1+z2-z4))").unwrap();
    for l in 0..=2 {
        assert!(iterated_residue(&k, l).unwrap().is_zero());
    }
}

#[test]
fn catalog_degrees_and_shapes() {
    for (alg, k) in kq_catalog() {
        let mu = alg.mu() as i64;
        let gamma = alg.gamma().unwrap() as i64;
        assert_eq!(k.mu as i64, mu, "{alg}");
        assert_eq!(k.degree(), Some(gamma - mu * (mu + 1) / 2), "{alg}");
        assert!(k.triples().is_some(), "{alg}");
    }
}

#[test]
fn residue_equals_localization() {
    let table = shipped_table();
    for alg in kq_catalog().keys() {
        let r = residue_vs_localization(alg, 2, table.clone()).unwrap();
        assert!(r.passed, "{:?}", r.details);
    }
}

#[test]
fn outputs_are_width_mu_and_positive() {
    for (alg, k) in kq_catalog() {
        for l in 0..=2 {
            let h = iterated_residue(&k, l).unwrap();
            let tp = residue_tp(&k, l).unwrap();
            let e = tp.expansion().unwrap();
            assert!(e.all_nonnegative_integers(), "{alg} l = {l}");
            assert!(e.max_len() <= alg.mu(), "{alg} l = {l}");
            if !h.is_zero() {
                assert_eq!(e.weight(), Some((alg.mu() * l) as u32 + alg.gamma().unwrap()), "{alg} l = {l}");
            }
        }
    }
}

#[test]
fn truncation_does_not_matter() {
    for (alg, k) in kq_catalog() {
        if alg.mu() > 3 {
            continue;
        }
        for l in 0..=2 {
            let a = iterated_residue_with(&k, l, l as i64 + 1).unwrap();
            let b = iterated_residue_with(&k, l, l as i64 + 4).unwrap();
            assert_eq!(a, b, "{alg} l = {l}");
        }
    }
}

#[test]
fn asymmetrization_identity() {
    let table = EulerTable::shipped();
    let mut algebras = AlgebraId::catalog();
    algebras.extend((1..=3).map(AlgebraId::sigma));
    for alg in algebras {
        let r = asym_consistency(&alg, table).unwrap();
        assert!(r.holds, "{alg}: {r:?}");
        assert!(r.symbolic == (alg.mu() <= 3), "{alg}");
    }
    // the sign is −1 for A_2, since Asym_2(1/(2z1−z2)) = 3(z1−z2)/((2z1−z2)(z1−2z2))
    assert_eq!(asym_consistency(&AlgebraId::a(2), table).unwrap().sign, Some(-1));
}
