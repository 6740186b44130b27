mod common;

use std::collections::BTreeSet;

use dirac_core::complexes::AlexanderDual;
use dirac_core::graphs::{clique_complex, is_chordal, verify_chordless_cycle, verify_elimination_order, Chordality, Graph};
use dirac_core::homological::{betti_table, is_shelling_order, shelling_order};
use dirac_core::ideals::{facet_ideal, has_linear_quotients, linear_quotients_order, power, stanley_reisner_ideal};
use dirac_core::quasitrees::{is_leaf_order, leaf_order};
use dirac_core::{FieldChoice, Limits, Monomial, MonomialIdeal, SimplicialComplex, VertexSet};
use itertools::Itertools;
use proptest::prelude::*;

fn complex_strategy(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..1u64 << n, 1..=max_facets).prop_map(move |ms| {
            let faces = ms.iter().map(|&m| VertexSet::from_bits(n, m).unwrap()).collect();
            SimplicialComplex::generated_by(n, faces).unwrap()
        })
    })
}

fn pure_strategy(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max_n).prop_flat_map(move |n| {
        (1..n).prop_flat_map(move |d| {
            let sets: Vec<Vec<usize>> = (1..=n).combinations(d).collect();
            prop::sample::subsequence(sets.clone(), 1..=max_facets.min(sets.len()))
                .prop_map(move |fs| SimplicialComplex::from_lists(n, &fs).unwrap())
        })
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn ideal_strategy(max_n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens).prop_filter_map(
            "needs a non-unit generator",
            move |es| {
                let gens: Vec<Monomial> = es.into_iter().filter(|e| e.iter().any(|&x| x > 0)).map(Monomial::new).collect();
                (!gens.is_empty()).then(|| MonomialIdeal::generated_by(n, gens).unwrap())
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dual_matches_brute_force(c in complex_strategy(7, 6)) {
        let got: BTreeSet<Vec<usize>> = match c.alexander_dual() {
            AlexanderDual::Void => BTreeSet::new(),
            AlexanderDual::Complex(d) => d.facet_lists().into_iter().collect(),
        };
        prop_assert_eq!(got, common::dual_facets(&c));
    }

    #[test]
    fn dual_is_an_involution(c in complex_strategy(7, 6)) {
        if let AlexanderDual::Complex(d) = c.alexander_dual() {
            let back = d.alexander_dual().into_complex().unwrap();
            prop_assert_eq!(back.facet_lists(), c.facet_lists());
        }
    }

    #[test]
    fn nonfaces_match_brute_force(c in complex_strategy(7, 6)) {
        let m = c.minimal_nonfaces();
        let got: BTreeSet<Vec<usize>> = m.nonfaces.iter().map(|s| s.members()).collect();
        prop_assert_eq!(&got, &common::minimal_nonfaces(&c));
        prop_assert_eq!(m.is_flag, common::is_flag(&c));
    }

    #[test]
    fn dual_stanley_reisner_is_complement_facet_ideal(c in complex_strategy(7, 6)) {
        if let AlexanderDual::Complex(d) = c.alexander_dual() {
            prop_assert_eq!(stanley_reisner_ideal(&d).unwrap(), facet_ideal(&c.complement_complex().unwrap()).unwrap());
        }
    }

    #[test]
    fn leaf_order_matches_brute_force(c in complex_strategy(7, 6)) {
        let order = leaf_order(&c).unwrap();
        prop_assert_eq!(order.is_some(), common::is_quasi_tree(&c));
        if let Some(o) = order {
            prop_assert!(is_leaf_order(&c, &o));
        }
    }

    #[test]
    fn shelling_matches_brute_force(c in pure_strategy(6, 7)) {
        let order = shelling_order(&c, &Limits::default()).unwrap();
        prop_assert_eq!(order.is_some(), common::is_shellable(&c));
        if let Some(o) = order {
            prop_assert!(is_shelling_order(&c, &o));
        }
    }

    #[test]
    fn chordality_matches_brute_force(g in graph_strategy(8)) {
        match is_chordal(&g) {
            Chordality::Chordal { order } => {
                prop_assert!(common::is_chordal(&g));
                prop_assert!(verify_elimination_order(&g, &order));
            }
            Chordality::NotChordal { cycle } => {
                prop_assert!(!common::is_chordal(&g));
                prop_assert!(verify_chordless_cycle(&g, &cycle));
            }
        }
    }

    #[test]
    fn clique_complex_matches_brute_force(g in graph_strategy(8)) {
        let cc = clique_complex(&g, &Limits::default()).unwrap();
        prop_assert_eq!(cc.facet_lists().into_iter().collect::<BTreeSet<_>>(), common::clique_complex_facets(&g));
    }

    #[test]
    fn linear_quotients_match_brute_force(i in ideal_strategy(5, 6, 2)) {
        let order = linear_quotients_order(&i, &Limits::default()).unwrap();
        prop_assert_eq!(order.is_some(), common::has_linear_quotient_order(i.generators()));
        if let Some(o) = order {
            prop_assert!(has_linear_quotients(&o));
            prop_assert!(common::is_linear_quotient_order(&o));
        }
    }

    #[test]
    fn betti_matches_taylor(i in ideal_strategy(5, 5, 2), gf2 in any::<bool>()) {
        let (field, p) = if gf2 { (FieldChoice::Prime(2), Some(2)) } else { (FieldChoice::Rationals, None) };
        let table = betti_table(&i, field, &Limits::default()).unwrap();
        let got: std::collections::BTreeMap<(usize, Vec<u32>), usize> =
            table.entries().map(|e| ((e.i, e.multidegree), e.rank)).collect();
        prop_assert_eq!(got, common::taylor_betti(&i, p));
    }

    #[test]
    fn powers_are_minimal_products(i in ideal_strategy(4, 4, 2), k in 1u32..=3) {
        let mut products = vec![Monomial::one(i.num_vars())];
        for _ in 0..k {
            products = products.iter().cartesian_product(i.generators()).map(|(a, b)| a.mul(b)).collect();
        }
        let want: BTreeSet<Monomial> =
            products.iter().filter(|a| !products.iter().any(|b| b != *a && b.divides(a))).cloned().collect();
        let got: BTreeSet<Monomial> = power(&i, k).unwrap().generators().iter().cloned().collect();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn real_projective_plane_depends_on_the_field() {
    let rp2 = common::cx(
        6,
        &[&[1, 2, 4], &[1, 2, 6], &[1, 3, 5], &[1, 3, 6], &[1, 4, 5], &[2, 3, 4], &[2, 3, 5], &[2, 5, 6], &[3, 4, 6], &[4, 5, 6]],
    );
    let i = stanley_reisner_ideal(&rp2).unwrap();
    let tables: Vec<_> = [(FieldChoice::Rationals, None), (FieldChoice::Prime(2), Some(2))]
        .into_iter()
        .map(|(field, p)| {
            let t = betti_table(&i, field, &Limits::default()).unwrap();
            let got: std::collections::BTreeMap<(usize, Vec<u32>), usize> =
                t.entries().map(|e| ((e.i, e.multidegree), e.rank)).collect();
            assert_eq!(got, common::taylor_betti(&i, p));
            t
        })
        .collect();
    assert_ne!(tables[0], tables[1]);
}

#[test]
fn small_shelling_oracle_sanity() {
    assert!(common::is_shellable(&common::cx(4, &[&[1, 2], &[2, 3], &[3, 4]])));
    assert!(!common::is_shellable(&common::cx(4, &[&[1, 2], &[3, 4]])));
    assert!(common::is_quasi_tree(&common::cx(6, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[3, 4, 6]])));
    assert!(!common::is_quasi_tree(&common::cx(6, &[&[1, 2, 3], &[3, 4, 5], &[2, 4, 6]])));
}
