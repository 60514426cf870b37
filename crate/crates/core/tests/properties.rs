mod common;

use std::collections::BTreeSet;

use common::*;
use ics_core::closed_forms::{ics_count_ordinal_sum, ordinal_sum_orbit_structure};
use ics_core::ics::{
    count_ics, enumerate_ics, enumerate_ics_ordered, from_antichain_pair, is_interval_closed,
    regions, to_antichain_pair,
};
use ics_core::rowmotion::{
    inverse_rowmotion, orbit_decomposition, orbit_of, rowmotion_global, rowmotion_ordinal_sum,
    rowmotion_toggles, toggle,
};
use ics_core::stats::{homomesy_report, Rational};
use ics_core::{IntervalClosedSet, Order, Poset, Statistic};
use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn posets(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n, 0.1f64..0.6)
        .prop_flat_map(|(n, d)| {
            (
                Just(n),
                proptest::collection::vec(proptest::bool::weighted(d), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, pairs)| poset_from_pairs(n, &pairs))
}

fn poset_and_mask(max_n: usize) -> impl Strategy<Value = (Poset, u32)> {
    posets(max_n).prop_flat_map(|p| {
        let n = p.len();
        (Just(p), 0u32..1 << n)
    })
}

fn compositions() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..=4, 1..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn membership_matches_definition((p, mask) in poset_and_mask(10)) {
        let s = p.subset((0..p.len()).filter(|&x| mask >> x & 1 == 1)).unwrap();
        prop_assert_eq!(is_interval_closed(&p, &s).unwrap(), oracle_closed(&p, &s));
        prop_assert_eq!(IntervalClosedSet::new(&p, s.clone()).is_ok(), oracle_closed(&p, &s));
    }

    #[test]
    fn enumeration_matches_brute_force(p in posets(10)) {
        let got: Vec<Vec<usize>> = enumerate_ics(&p).iter().map(|i| i.to_vec()).collect();
        let want: Vec<Vec<usize>> = oracle_ics(&p).into_iter().collect();
        prop_assert_eq!(got.len(), want.len());
        prop_assert_eq!(count_ics(&p), want.len() as u64);
        let got: BTreeSet<Vec<usize>> = got.into_iter().collect();
        prop_assert_eq!(got, want.into_iter().collect::<BTreeSet<_>>());
    }

    #[test]
    fn canonical_enumeration_is_sorted_and_generation_agrees(p in posets(10)) {
        let canonical = enumerate_ics_ordered(&p, Order::Canonical);
        prop_assert!(canonical.windows(2).all(|w| w[0] < w[1]));
        let mut generated = enumerate_ics_ordered(&p, Order::Generation);
        generated.sort();
        prop_assert_eq!(generated, canonical);
    }

    #[test]
    fn antichain_pairs_round_trip(p in posets(9)) {
        for i in enumerate_ics(&p) {
            let pair = to_antichain_pair(&p, &i).unwrap();
            prop_assert!(p.is_antichain(&pair.max_part));
            prop_assert!(p.is_antichain(&pair.floor_part));
            prop_assert!(pair.max_part.is_disjoint(&pair.floor_part));
            prop_assert_eq!(from_antichain_pair(&p, &pair).unwrap(), i);
        }
    }

    #[test]
    fn region_outputs_are_antichains(p in posets(9)) {
        for i in enumerate_ics(&p) {
            let r = regions(&p, &i).unwrap();
            prop_assert!(p.is_antichain(&r.ceiling));
            prop_assert!(p.is_antichain(&r.floor));
            prop_assert!(r.inc.is_disjoint(&i));
            prop_assert_eq!(r.inc.union(&r.comp), p.full_subset());
        }
    }

    #[test]
    fn toggles_are_closed_involutions(p in posets(9)) {
        for i in enumerate_ics(&p) {
            for x in 0..p.len() {
                let t = toggle(&p, &i, x).unwrap();
                prop_assert_eq!(t.as_subset(), &oracle_toggle(&p, &i, x));
                prop_assert_eq!(toggle(&p, &t, x).unwrap(), i.clone());
            }
        }
    }

    #[test]
    fn rowmotion_descriptions_agree(p in posets(10)) {
        let ext = p.linear_extension();
        for i in enumerate_ics(&p) {
            let by_toggles = rowmotion_toggles(&p, &i, Some(&ext)).unwrap();
            prop_assert_eq!(&rowmotion_global(&p, &i).unwrap(), &by_toggles);
            prop_assert_eq!(by_toggles.as_subset(), &oracle_rowmotion(&p, &i, &ext));
        }
    }

    #[test]
    fn rowmotion_ignores_the_linear_extension(p in posets(9), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let exts: Vec<Vec<usize>> = (0..5).map(|_| random_linear_extension(&p, &mut rng)).collect();
        for i in enumerate_ics(&p) {
            let reference = rowmotion_global(&p, &i).unwrap();
            for e in &exts {
                prop_assert_eq!(&rowmotion_toggles(&p, &i, Some(e)).unwrap(), &reference);
            }
        }
    }

    #[test]
    fn inverse_undoes_rowmotion(p in posets(10)) {
        for i in enumerate_ics(&p) {
            let row = rowmotion_global(&p, &i).unwrap();
            prop_assert_eq!(&inverse_rowmotion(&p, &row).unwrap(), &i);
            prop_assert_eq!(&rowmotion_global(&p, &inverse_rowmotion(&p, &i).unwrap()).unwrap(), &i);
        }
    }

    #[test]
    fn dual_has_the_same_interval_closed_sets(p in posets(10)) {
        let d = p.dual();
        let here: BTreeSet<Vec<usize>> = enumerate_ics(&p).iter().map(|i| i.to_vec()).collect();
        let there: BTreeSet<Vec<usize>> = enumerate_ics(&d).iter().map(|i| i.to_vec()).collect();
        prop_assert_eq!(here, there);
    }

    #[test]
    fn orbits_partition_and_follow_rowmotion(p in posets(10)) {
        let d = orbit_decomposition(&p).unwrap();
        let mut seen = BTreeSet::new();
        let mut lcm = BigUint::from(1u32);
        for o in &d.orbits {
            let m = o.members();
            prop_assert_eq!(m[0].clone(), m.iter().min().unwrap().clone());
            for k in 0..m.len() {
                prop_assert!(seen.insert(m[k].to_vec()));
                prop_assert_eq!(&rowmotion_global(&p, &m[k]).unwrap(), &m[(k + 1) % m.len()]);
            }
            prop_assert_eq!(&orbit_of(&p, o.representative()).unwrap(), o);
            lcm = lcm.lcm(&BigUint::from(o.len()));
        }
        prop_assert_eq!(seen.len(), d.total);
        prop_assert_eq!(d.total as u64, count_ics(&p));
        prop_assert_eq!(&d.order, &lcm);
        let sizes = d.sizes();
        prop_assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn extremal_toggleability_is_zero_mesic(p in posets(9)) {
        let mut extremes = p.minimal_elements();
        extremes.extend(p.maximal_elements());
        for x in extremes {
            let r = homomesy_report(&p, Statistic::Toggleability(x)).unwrap();
            prop_assert!(r.homomesic);
            prop_assert_eq!(r.c, Some(Rational::from(0)));
        }
    }

    #[test]
    fn averages_weighted_by_size_give_the_total(p in posets(9)) {
        for stat in [Statistic::Cardinality, Statistic::MaxMinusMin, Statistic::MinCount] {
            let r = homomesy_report(&p, stat).unwrap();
            let weighted: Rational = r.orbit_averages.iter().map(|(a, s)| a * Rational::from(*s as i64)).sum();
            let direct: i64 = enumerate_ics(&p).iter().map(|i| stat.evaluate(&p, i).unwrap()).sum();
            prop_assert_eq!(weighted, Rational::from(direct));
            prop_assert_eq!(r.global_average * Rational::from(count_ics(&p) as i64), Rational::from(direct));
        }
    }

    #[test]
    fn ordinal_sum_formulas(layers in compositions()) {
        let p = Poset::ordinal_sum_of_antichains(&layers).unwrap();
        prop_assert_eq!(ics_count_ordinal_sum(&layers).unwrap(), count_ics(&p) as u128);
        for i in enumerate_ics(&p) {
            prop_assert_eq!(
                rowmotion_ordinal_sum(&p, &layers, &i).unwrap(),
                rowmotion_global(&p, &i).unwrap()
            );
        }
        let d = orbit_decomposition(&p).unwrap();
        let observed: Vec<(usize, u128)> =
            d.size_histogram().into_iter().map(|(s, c)| (s, c as u128)).collect();
        prop_assert_eq!(observed, ordinal_sum_orbit_structure(&layers).unwrap().histogram());
    }

    #[test]
    fn descriptions_round_trip(p in posets(12)) {
        let q = Poset::from_json(&p.to_json()).unwrap();
        prop_assert!(q == p);
        prop_assert!(p.dual().dual() == p);
    }

    #[test]
    fn subset_algebra_matches_sets(
        a in proptest::collection::btree_set(0usize..200, 0..40),
        b in proptest::collection::btree_set(0usize..200, 0..40),
    ) {
        let p = Poset::antichain(200).unwrap();
        let sa = p.subset(a.iter().copied()).unwrap();
        let sb = p.subset(b.iter().copied()).unwrap();
        let v = |s: BTreeSet<usize>| s.into_iter().collect::<Vec<_>>();
        prop_assert_eq!(sa.union(&sb).to_vec(), v(a.union(&b).copied().collect()));
        prop_assert_eq!(sa.intersection(&sb).to_vec(), v(a.intersection(&b).copied().collect()));
        prop_assert_eq!(sa.difference(&sb).to_vec(), v(a.difference(&b).copied().collect()));
        prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        prop_assert_eq!(sa.complement().len(), 200 - a.len());
        prop_assert_eq!(sa.first(), a.iter().next().copied());
    }
}

#[test]
fn rejects_sets_from_another_poset() {
    let p = Poset::chain(3).unwrap();
    let q = Poset::antichain(3).unwrap();
    let i = IntervalClosedSet::full(&q);
    assert!(rowmotion_global(&p, &i).is_err());
    assert!(toggle(&p, &IntervalClosedSet::empty(&p), 3).is_err());
}

#[test]
fn gapped_chain_subset_is_rejected() {
    let p = Poset::chain(3).unwrap();
    assert!(IntervalClosedSet::new(&p, p.subset([0, 2]).unwrap()).is_err());
    assert_eq!(ics(&p, &[0, 1]).len(), 2);
}
