//! Randomized invariants over small permutation groups, abelian groups and
//! their actions.

use proptest::prelude::*;

use nilact::abelian::{ab_to_table, automorphisms, AbGroup};
use nilact::actions::{check_witt_hall, gamma_functoriality_counterexample, gamma_series_default, Action};
use nilact::frattini::{frattini_subgroup, maximal_subgroups};
use nilact::grpcore::{group_from_perms, is_homomorphism, is_normal, lower_central_series_default, Permutation};
use nilact::localize::is_product_of_localizations;
use nilact::Limits;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).expect("a shuffle is a permutation"))
}

fn perm_group() -> impl Strategy<Value = nilact::grpcore::GroupTable> {
    (2usize..=5).prop_flat_map(|d| prop::collection::vec(perm(d), 1..=2)).prop_map(|gens| {
        let d = gens[0].degree();
        group_from_perms(d, &gens, 120).expect("inside S5").0
    })
}

fn ab_group() -> impl Strategy<Value = AbGroup> {
    prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 5, 6, 8, 9]), 1..=3)
        .prop_filter("order at most 72", |v| v.iter().product::<u64>() <= 72)
        .prop_map(|v| AbGroup::new(0, &v).expect("positive moduli"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tables_are_groups(g in perm_group()) {
        prop_assert!(g.check_axioms().is_ok());
    }

    #[test]
    fn lower_central_terms_are_normal_and_decreasing(g in perm_group()) {
        let s = lower_central_series_default(&g);
        for w in s.terms.windows(2) {
            prop_assert!(w[1].is_subgroup_of(&w[0]));
        }
        for t in &s.terms {
            prop_assert!(is_normal(&g, t));
        }
    }

    #[test]
    fn frattini_is_normal_and_inside_every_maximal(g in perm_group()) {
        let lim = Limits::default();
        prop_assume!(g.order() <= lim.lattice_cap);
        let phi = frattini_subgroup(&g, &lim).unwrap();
        prop_assert!(is_normal(&g, &phi));
        for m in maximal_subgroups(&g, &lim).unwrap() {
            prop_assert!(phi.is_subgroup_of(&m));
        }
    }

    #[test]
    fn conjugation_series_identities(g in perm_group(), f in 0u32..120, h in 0u32..120, b in 0u32..120) {
        let n = g.order() as u32;
        let act = Action::conjugation(&g);
        prop_assert!(check_witt_hall(&act, f % n, h % n, b % n));
        prop_assert_eq!(gamma_functoriality_counterexample(&act), None);
        // for conjugation the G-commutator series is the lower central series
        let lcs = lower_central_series_default(&g);
        let gamma = gamma_series_default(&act);
        prop_assert_eq!(lcs.orders(), gamma.orders());
    }

    #[test]
    fn automorphisms_are_table_automorphisms(a in ab_group(), pick in any::<prop::sample::Index>()) {
        let lim = Limits::default();
        prop_assume!(nilact::abelian::aut_order(&a).unwrap() <= lim.order_cap as u128);
        let t = ab_to_table(&a, 100).unwrap();
        let auts = automorphisms(&a, &lim).unwrap();
        prop_assert_eq!(auts.len() as u128, nilact::abelian::aut_order(&a).unwrap());
        let f = pick.get(&auts);
        let map = t.map_of(f);
        prop_assert!(is_homomorphism(&t.table, &t.table, &map));
        let mut sorted = map.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, t.table.elements().collect::<Vec<_>>());
    }

    #[test]
    fn abelian_groups_are_products_of_localizations(a in ab_group()) {
        let t = ab_to_table(&a, 100).unwrap();
        prop_assert!(is_product_of_localizations(&t.table).unwrap());
    }

    #[test]
    fn automorphism_actions_satisfy_witt_hall(a in ab_group(), f in any::<prop::sample::Index>(), g in any::<prop::sample::Index>(), b in 0u32..72) {
        let lim = Limits::default();
        prop_assume!(nilact::abelian::aut_order(&a).unwrap() <= lim.order_cap as u128);
        let aut = nilact::abelian::aut_group(&a, &lim).unwrap();
        let (act, t) = Action::tautological(&aut, lim.order_cap).unwrap();
        let n = aut.order();
        prop_assert!(check_witt_hall(&act, f.index(n) as u32, g.index(n) as u32, b % t.table.order() as u32));
    }
}
