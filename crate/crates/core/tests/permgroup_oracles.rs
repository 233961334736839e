use minram::permgroup::oracle::{all_subgroups, count_classes_brute, normalizer_exhaustive};
use minram::permgroup::subgroups::EnumBudget;
use minram::permgroup::{
    conjugating_element, normalizer, quotient, subgroups_up_to_conjugacy, AbstractGroup, Perm, PermGroup,
};
use proptest::prelude::*;

fn classes(g: &PermGroup) -> usize {
    let c = subgroups_up_to_conjugacy(g, EnumBudget::default()).unwrap();
    assert!(c.complete);
    c.reps.len()
}

#[test]
fn class_counts_match_brute_force_up_to_order_120() {
    for g in [
        PermGroup::symmetric(3),
        PermGroup::symmetric(4),
        PermGroup::alternating(4),
        PermGroup::alternating(5),
        PermGroup::symmetric(5),
    ] {
        let subs = all_subgroups(&g);
        assert_eq!(classes(&g), count_classes_brute(&g, &subs), "order {}", g.order());
    }
}

#[test]
fn class_counts_of_degree_six_and_seven() {
    assert_eq!(classes(&PermGroup::symmetric(6)), 56);
    assert_eq!(classes(&PermGroup::alternating(6)), 22);
    assert_eq!(classes(&PermGroup::alternating(7)), 40);
    assert_eq!(classes(&PermGroup::symmetric(7)), 96);
}

#[test]
fn backtrack_normalizer_matches_exhaustive_on_every_subgroup_of_s6() {
    for n in 1..=6 {
        let sn = PermGroup::symmetric(n);
        let subs = all_subgroups(&sn);
        for (gens, _) in &subs {
            let h = PermGroup::new(n, gens.clone()).unwrap();
            let bt = normalizer(&sn, &h).unwrap();
            let ex = normalizer_exhaustive(&sn, &h);
            assert_eq!(bt.order_usize(), ex.len(), "H = {:?}", h.gen_strings());
            assert!(ex.iter().all(|g| bt.contains(g)));
        }
    }
}

#[test]
fn s6_has_1455_subgroups() {
    let s6 = PermGroup::symmetric(6);
    let subs = all_subgroups(&s6);
    assert_eq!(subs.len(), 1455);
    assert_eq!(count_classes_brute(&s6, &subs), 56);
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_order_matches_closure(gens in prop::collection::vec(perm_strategy(6), 0..3)) {
        let g = PermGroup::new(6, gens.clone()).unwrap();
        let (elems, _) = minram::permgroup::subgroups::closure(6, &gens);
        prop_assert_eq!(g.order_usize(), elems.len());
        for e in &elems {
            prop_assert!(g.contains(e));
        }
    }

    #[test]
    fn quotient_axioms_and_order(gens in prop::collection::vec(perm_strategy(5), 1..3)) {
        let s5 = PermGroup::symmetric(5);
        let h = PermGroup::new(5, gens).unwrap();
        let n = normalizer(&s5, &h).unwrap();
        let q = quotient(&n, &h).unwrap();
        prop_assert_eq!(q.group.order() * h.order_usize(), n.order_usize());
        let rows = q.group.rows();
        prop_assert!(AbstractGroup::from_table(rows, None).is_ok());
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(gens in prop::collection::vec(perm_strategy(5), 1..3), relabel in perm_strategy(5)) {
        let a = PermGroup::new(5, gens).unwrap();
        let b = a.conjugate(&relabel);
        let ta = AbstractGroup::from_perm_group(&a).unwrap().0;
        let tb = AbstractGroup::from_perm_group(&b).unwrap().0;
        let w = ta.is_isomorphic(&ta).unwrap();
        prop_assert!(ta.verify_hom(&ta, &w));
        let f = ta.is_isomorphic(&tb).unwrap();
        let g = tb.is_isomorphic(&ta).unwrap();
        prop_assert!(ta.verify_hom(&tb, &f));
        prop_assert!(tb.verify_hom(&ta, &g));
    }

    #[test]
    fn conjugate_subgroups_are_detected(gens in prop::collection::vec(perm_strategy(6), 1..3), c in perm_strategy(6)) {
        let s6 = PermGroup::symmetric(6);
        let h = PermGroup::new(6, gens).unwrap();
        let k = h.conjugate(&c);
        let g = conjugating_element(&s6, &h, &k).unwrap();
        prop_assert!(h.conjugate(&g).same_group(&k));
    }
}
