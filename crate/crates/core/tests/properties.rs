mod common;

use std::sync::{Arc, OnceLock};

use common::*;
use hurwitz_core::classify::enumerate_data;
use hurwitz_core::extension::{conjugators, induced_automorphism, ExtensionHandle};
use hurwitz_core::hurwitz::{full_twist_word, sphere_word};
use hurwitz_core::orbit::{Canon, Canonicalizer, Mover};
use hurwitz_core::*;
use proptest::prelude::*;

struct Case {
    group: Arc<PermGroup>,
    auts: AutGroup,
    data: Vec<Datum>,
}

/// Every datum for a handful of small `(G, n)`, built once.
fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        let lim = Limits::default();
        let mut groups: Vec<(Arc<PermGroup>, usize)> = Vec::new();
        for g in small_groups() {
            groups.push((g.clone(), 3));
            groups.push((g, 4));
        }
        groups.push((example_group(), 5));
        groups.push((Arc::new(builtin::alternating(4)), 4));
        groups
            .into_iter()
            .filter_map(|(group, n)| {
                let data = enumerate_data(&group, n, &lim).unwrap();
                (!data.is_empty()).then(|| Case {
                    auts: automorphism_group(&group),
                    group,
                    data,
                })
            })
            .collect()
    })
}

fn any_datum() -> impl Strategy<Value = (usize, usize)> {
    (0..cases().len()).prop_flat_map(|c| (Just(c), 0..cases()[c].data.len()))
}

fn random_word(n: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..12).prop_map(move |letters| {
        let text: Vec<String> = letters
            .iter()
            .map(|&(i, pos)| {
                if pos {
                    format!("s{i}")
                } else {
                    format!("s{i}^-1")
                }
            })
            .collect();
        BraidWord::parse(&text.join(" "), n).unwrap()
    })
}

fn datum_and_word() -> impl Strategy<Value = (usize, usize, BraidWord)> {
    any_datum().prop_flat_map(|(c, k)| {
        let n = cases()[c].data[k].len();
        (Just(c), Just(k), random_word(n))
    })
}

fn tuple(d: &Datum) -> Vec<Perm> {
    d.perms().cloned().collect()
}

fn letters(w: &BraidWord) -> Letters {
    w.letters()
        .iter()
        .map(|l| (l.index, l.sign == Sign::Pos))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn word_action_matches_reference((c, k, w) in datum_and_word()) {
        let d = &cases()[c].data[k];
        let moved = apply_word(d, &w).unwrap();
        prop_assert_eq!(tuple(&moved), apply_letters(&tuple(d), &letters(&w)));
    }

    #[test]
    fn words_preserve_validity_and_genus((c, k, w) in datum_and_word()) {
        let d = &cases()[c].data[k];
        let moved = apply_word(d, &w).unwrap();
        prop_assert!(validate(&tuple(&moved), d.group()).is_ok());
        prop_assert_eq!(moved.genus(), d.genus());
        let back = apply_word(&moved, &w.inverse()).unwrap();
        prop_assert_eq!(&back, d);
    }

    #[test]
    fn reduction_does_not_change_the_action((c, k, w) in datum_and_word()) {
        let d = &cases()[c].data[k];
        let doubled = w.then(&w.inverse()).then(&w);
        prop_assert_eq!(apply_word(d, &doubled).unwrap(), apply_word(d, &w).unwrap());
        prop_assert_eq!(apply_word(d, &doubled.reduced()).unwrap(), apply_word(d, &w).unwrap());
    }

    #[test]
    fn canonical_forms_are_idempotent_and_invariant((c, k) in any_datum(), g in 0usize..64, a in 0usize..64) {
        let case = &cases()[c];
        let d = &case.data[k];
        let inn = d.inn_canonical();
        prop_assert_eq!(inn.inn_canonical(), inn.clone());
        let g = case.group.elements().nth(g % case.group.order()).unwrap();
        prop_assert_eq!(d.conjugate_by(g).inn_canonical(), inn.clone());
        prop_assert!(inn.entries() <= d.entries());

        let aut = d.aut_canonical(&case.auts);
        prop_assert_eq!(aut.aut_canonical(&case.auts), aut.clone());
        let eta = &case.auts.automorphisms()[a % case.auts.len()];
        prop_assert_eq!(d.map_by(eta).aut_canonical(&case.auts), aut.clone());
        prop_assert!(aut.entries() <= inn.entries());
    }

    #[test]
    fn pure_generators_preserve_classes((c, k) in any_datum()) {
        let d = &cases()[c].data[k];
        let g = d.group();
        for a in pure_generators(d.len()).unwrap() {
            let moved = apply_word(d, &a.word).unwrap();
            for (x, y) in d.entries().iter().zip(moved.entries()) {
                prop_assert_eq!(g.class_of(*x), g.class_of(*y));
            }
        }
    }

    #[test]
    fn full_twist_acts_by_conjugation((c, k) in any_datum()) {
        let d = &cases()[c].data[k];
        let n = d.len();
        for w in [sphere_word(n).unwrap(), full_twist_word(n).unwrap()] {
            let moved = apply_word(d, &w).unwrap();
            prop_assert!(!conjugators(d.group(), d.entries(), moved.entries()).is_empty());
        }
    }

    #[test]
    fn orbit_does_not_depend_on_the_start((c, k) in any_datum(), pick in 0usize..1000) {
        let case = &cases()[c];
        let d = &case.data[k];
        let lim = Limits::default();
        for canon in [Canonicalizer::Exact, Canonicalizer::Inn, Canonicalizer::Aut(&case.auts)] {
            let movers = Mover::pure(d.len()).unwrap();
            let orbit = enumerate_orbit(d, &movers, canon, &lim).unwrap();
            let other = orbit.member(pick % orbit.size());
            let again = enumerate_orbit(&other, &movers, canon, &lim).unwrap();
            prop_assert_eq!(again.size(), orbit.size());
            prop_assert_eq!(again.least_key(), orbit.least_key());
            let mut reversed = movers.clone();
            reversed.reverse();
            prop_assert_eq!(enumerate_orbit(d, &reversed, canon, &lim).unwrap().size(), orbit.size());
            // the transversal words reach their points
            let p = pick % orbit.size();
            let reached = apply_word(d, &orbit.word_to(p)).unwrap();
            prop_assert_eq!(canon.key(d.group(), reached.entries()), orbit.keys()[p].clone());
        }
    }

    #[test]
    fn orbit_sizes_relate_across_levels((c, k) in any_datum()) {
        let case = &cases()[c];
        let d = &case.data[k];
        let lim = Limits::default();
        let movers = Mover::pure(d.len()).unwrap();
        let exact = enumerate_orbit(d, &movers, Canonicalizer::Exact, &lim).unwrap().size();
        let inn = enumerate_orbit(d, &movers, Canonicalizer::Inn, &lim).unwrap().size();
        let aut = enumerate_orbit(d, &movers, Canonicalizer::Aut(&case.auts), &lim).unwrap().size();
        prop_assert!(exact >= inn && inn >= aut);
        prop_assert_eq!((exact * case.group.order()) % inn, 0);
        prop_assert_eq!((inn * case.auts.out_order()) % aut, 0);
    }

    #[test]
    fn schreier_generators_fix_the_basepoint((c, k) in any_datum()) {
        let case = &cases()[c];
        let d = &case.data[k];
        let lim = Limits::default();
        for canon in [Canon::Exact, Canon::Inn, Canon::Aut] {
            let h = ExtensionHandle::level(d, canon, Some(&case.auts), &lim).unwrap();
            for s in h.stabilizer_generators().unwrap() {
                prop_assert!(h.fixes(&s.word, Some(&case.auts)).unwrap());
                let moved = apply_word(d, &s.word).unwrap();
                let key = Canonicalizer::new(canon, Some(&case.auts)).unwrap();
                prop_assert_eq!(key.key(d.group(), moved.entries()), key.key(d.group(), d.entries()));
            }
        }
    }

    #[test]
    fn eps_is_multiplicative((c, k) in any_datum()) {
        let case = &cases()[c];
        let d = &case.data[k];
        let lim = Limits::default();
        let h = ExtensionHandle::level(d, Canon::Aut, Some(&case.auts), &lim).unwrap();
        let gens = h.stabilizer_generators().unwrap();
        for a in gens.iter().take(4) {
            for b in gens.iter().take(4) {
                let ea = induced_automorphism(&case.auts, d, &a.word).unwrap().unwrap();
                let eb = induced_automorphism(&case.auts, d, &b.word).unwrap().unwrap();
                let eab = induced_automorphism(&case.auts, d, &a.word.then(&b.word)).unwrap().unwrap();
                let autos = case.auts.automorphisms();
                prop_assert_eq!(&autos[eab], &autos[ea].compose(&autos[eb]));
            }
        }
    }

    #[test]
    fn intersection_index_is_bounded((c, k) in any_datum()) {
        let case = &cases()[c];
        let d = &case.data[k];
        let lim = Limits::default();
        let inn = ExtensionHandle::level(d, Canon::Inn, Some(&case.auts), &lim).unwrap();
        let aut = ExtensionHandle::level(d, Canon::Aut, Some(&case.auts), &lim).unwrap();
        let both = intersect_actions(inn.action(), aut.action()).unwrap();
        prop_assert!(both.is_bijective() && both.is_transitive());
        prop_assert!(both.index() >= inn.index().max(aut.index()));
        prop_assert!(both.index() <= inn.index() * aut.index());
    }
}

#[test]
fn validation_agrees_with_exhaustive_oracle() {
    for g in small_groups() {
        let oracle = OracleGroup::of(&g);
        assert_eq!(oracle.order(), g.order());
        for n in 1..=3 {
            let mut digits = vec![0usize; n];
            'outer: loop {
                let t: Vec<Perm> = digits.iter().map(|&d| oracle.elements[d].clone()).collect();
                assert_eq!(validate(&t, &g).is_ok(), oracle.is_datum(&t), "{t:?}");
                for pos in (0..n).rev() {
                    digits[pos] += 1;
                    if digits[pos] < oracle.order() {
                        continue 'outer;
                    }
                    digits[pos] = 0;
                }
                break;
            }
        }
        let all4 = oracle.all_data(4);
        assert_eq!(
            enumerate_data(&g, 4, &Limits::default()).unwrap().len(),
            all4.len()
        );
        for t in &all4 {
            assert!(validate(t, &g).is_ok());
        }
    }
}

#[test]
fn automorphism_counts_agree_with_oracle() {
    for g in small_groups() {
        let oracle = OracleGroup::of(&g);
        assert_eq!(
            automorphism_group(&g).len(),
            oracle.automorphisms().len(),
            "{:?}",
            g.name()
        );
    }
}

#[test]
fn validation_errors_in_order() {
    let g = example_group();
    let p = |s: &str| Perm::parse(s, 3).unwrap();
    let err = validate(&[p("(1 2)"), p("(1 2)")], &g).unwrap_err();
    assert!(matches!(err, Error::TooFewEntries(2)));
    let err = validate(&[p("(1 2)"), p("()"), p("(1 2)")], &g).unwrap_err();
    assert!(matches!(err, Error::TrivialEntry { index: 2 }));
    let err = validate(&[p("(1 2)"), p("(1 2)"), p("(1 2)")], &g).unwrap_err();
    assert!(matches!(err, Error::ProductNotIdentity(_)));
    let err = validate(&[p("(1 2)"), p("(1 2)"), p("(1 2)"), p("(1 2)")], &g).unwrap_err();
    assert!(matches!(
        err,
        Error::ProperSubgroup {
            generated: 2,
            order: 6
        }
    ));
    assert!(!err.is_hypothesis());
}

#[test]
fn centerless_conjugator_is_unique_only_without_center() {
    let lim = Limits::default();
    let s3 = example_group();
    for d in enumerate_data(&s3, 4, &lim).unwrap() {
        let moved = apply_word(&d, &sphere_word(4).unwrap()).unwrap();
        assert_eq!(conjugators(&s3, d.entries(), moved.entries()).len(), 1);
    }
    for g in [
        Arc::new(builtin::dihedral(4)),
        Arc::new(builtin::quaternion()),
    ] {
        assert!(!g.is_centerless());
        let d = enumerate_data(&g, 4, &lim).unwrap().remove(0);
        assert_eq!(
            conjugators(&g, d.entries(), d.entries()).len(),
            g.center_elems().len()
        );
        assert!(matches!(
            centerless_minimum(&d, &lim),
            Err(Error::NotCenterless(2))
        ));
    }
}

#[test]
fn abelian_groups_collapse() {
    let lim = Limits::default();
    for g in small_groups().into_iter().filter(|g| g.is_abelian()) {
        for d in enumerate_data(&g, 4, &lim).unwrap() {
            let movers = Mover::pure(4).unwrap();
            let exact = enumerate_orbit(&d, &movers, Canonicalizer::Exact, &lim).unwrap();
            assert_eq!(exact.size(), 1);
            assert_eq!(abelian_certificate(&d, &lim).unwrap().orbit_size, 1);
        }
    }
    let d = Datum::parse(&example_group(), &example_tuple()).unwrap();
    assert!(matches!(
        abelian_certificate(&d, &lim),
        Err(Error::NotAbelian)
    ));
}

#[test]
fn caps_fail_loudly() {
    let g = Arc::new(builtin::symmetric(4));
    let d = enumerate_data(&g, 4, &Limits::default())
        .unwrap()
        .pop()
        .unwrap();
    let tight = Limits {
        orbit_cap: 1,
        ..Limits::default()
    };
    let full = Mover::full(4).unwrap();
    let err = enumerate_orbit(&d, &full, Canonicalizer::Exact, &tight).unwrap_err();
    assert!(err.is_cap());
    assert!(
        PermGroup::with_cap(5, builtin::symmetric(5).generators().to_vec(), 10)
            .unwrap_err()
            .is_cap()
    );
}
