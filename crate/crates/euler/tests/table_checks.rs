use thom_algebra::parse::parse_ratfn;
use thom_algebra::perm::permutations;
use thom_algebra::sym::permute_alpha;
use thom_euler::{
    homogeneity_constant, max_square_is_symmetric, reciprocity_sum, reciprocity_sum_at, sample_points, AlgebraId,
    EntryValue, EulerTable, Provenance,
};
use thom_ideals::{enumerate_ideals, MonomialIdeal};

#[test]
fn a2_max_square_is_reproduced() {
    let t = EulerTable::shipped();
    let a2 = AlgebraId::a(2);
    assert!(reciprocity_sum(t, &a2).unwrap().is_zero());
    let sq = t.lookup(&a2, &MonomialIdeal::max_square(2)).unwrap();
    assert_eq!(sq, EntryValue::Exact(parse_ratfn("(1/3)*(a1-2*a2)*(a2-2*a1)").unwrap()));
}

#[test]
fn completed_entries_are_symmetric() {
    let t = EulerTable::shipped();
    for q in t.algebras().filter(|q| q.mu() >= 2) {
        assert!(max_square_is_symmetric(t, q, 3).unwrap(), "{q}");
        let sq_idx = t.representatives(q).iter().position(|r| r.ideal == MonomialIdeal::max_square(q.mu())).unwrap();
        if q.mu() >= 3 {
            assert_eq!(t.entry(q, sq_idx).unwrap().provenance, Provenance::Reciprocity);
        }
    }
}

#[test]
fn pointwise_sums_vanish() {
    let t = EulerTable::shipped();
    for q in t.algebras().filter(|q| q.mu() >= 2) {
        let mut done = 0;
        for pt in sample_points(q.mu(), 12, 7) {
            if let Some(v) = reciprocity_sum_at(t, q, &pt).unwrap() {
                assert!(v == num_traits::Zero::zero(), "{q}");
                done += 1;
            }
        }
        assert!(done > 0);
    }
}

/// `deg e(Q, I_i) = n(i)·μ − γ(Q)` for every finite shipped entry.
#[test]
fn homogeneity_matches_gamma() {
    let t = EulerTable::shipped();
    for q in AlgebraId::catalog().iter().chain([AlgebraId::a(4)].iter()) {
        assert_eq!(homogeneity_constant(t, q).unwrap(), q.gamma().unwrap() as i64, "{q}");
    }
}

#[test]
fn lookup_is_equivariant() {
    let t = EulerTable::shipped();
    let a3 = AlgebraId::a(3);
    for i in enumerate_ideals(3, 3) {
        let EntryValue::Exact(base) = t.lookup(&a3, &i).unwrap() else { panic!() };
        for s in permutations(3) {
            let EntryValue::Exact(moved) = t.lookup(&a3, &i.permute(&s)).unwrap() else { panic!() };
            assert_eq!(moved, permute_alpha(&base, &s));
        }
    }
}
