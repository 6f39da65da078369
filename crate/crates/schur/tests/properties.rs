use proptest::prelude::*;
use thom_algebra::{q, LinForm, VarId};
use thom_schur::{delta_alphabet, partitions, schur_expand, Partition, SchurExpansion};

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..6, 0..6).prop_map(Partition::from_multiset)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugate_is_involution(l in partition_strategy()) {
        prop_assert_eq!(l.conjugate().conjugate(), l);
    }

    #[test]
    fn expansion_roundtrip(d in 0u32..=10, picks in prop::collection::vec((0usize..64, -5i64..5), 1..5)) {
        let all = partitions(d, None);
        let mut e = SchurExpansion::new();
        for (i, c) in picks {
            e.add(all[i % all.len()].clone(), q(c));
        }
        prop_assert_eq!(schur_expand(&e.to_poly()).unwrap(), e);
    }

    #[test]
    fn column_bound_vanishing(l in partition_strategy(), m in 0usize..4) {
        let xs: Vec<LinForm> = (1..=m).map(|i| LinForm::var(VarId::alpha(i))).collect();
        let d = delta_alphabet(&l, &xs);
        if l.len() > m {
            prop_assert!(d.is_zero());
        }
    }
}

#[test]
fn a3_start_is_nonnegative() {
    let p = thom_algebra::parse::parse_poly("c1^3 + 3*c1*c2 + 2*c3").unwrap();
    let e = schur_expand(&p).unwrap();
    assert!(e.all_nonnegative_integers());
    assert_eq!(e.coeff(&"1,1,1".parse().unwrap()), q(1));
    assert_eq!(e.to_string(), "Δ_{1,1,1} + 5Δ_{2,1} + 6Δ_{3}");
}
