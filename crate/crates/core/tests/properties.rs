//! Randomized law checks with fixed seeds.
mod common;

use common::{random_graph, rng, spherical_by_classification};
use dyercat::fixtures::gamma;
use dyercat::presentation::{Embedding, Variant};
use dyercat::scwol::{development_ball, dyer_scwol, scwol_product};
use dyercat::sigma::sigma_ball;
use dyercat::{Budget, DyerGraph, Syllable, SyllableWord, VertexSet, WordEngine};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn config(cases: u32, seed: u64) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn word(g: &DyerGraph, raw: &[(usize, i64)]) -> SyllableWord {
    let n = g.vertex_count();
    SyllableWord(
        raw.iter()
            .map(|&(v, e)| Syllable::new(v % n, if e == 0 { 1 } else { e }))
            .collect(),
    )
}

fn raw_word(max: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..8, -2i64..=2), 0..=max)
}

proptest! {
    #![proptest_config(config(128, 11))]

    #[test]
    fn scwol_axioms_hold(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 4);
        let x = dyer_scwol(&g);
        prop_assert_eq!(x.check_axioms(), Ok(()));
        prop_assert!(x.is_connected());
        let small = random_graph(&mut rng(seed ^ 1), 2);
        let y = dyer_scwol(&small);
        let p = scwol_product(&[&x, &y]);
        prop_assert_eq!(p.check_axioms(), Ok(()));
        let cells = |s: &dyercat::scwol::DyerScwol| s.vertex_count() + s.edge_count();
        prop_assert_eq!(
            p.edge_count(),
            cells(&x) * cells(&y) - x.vertex_count() * y.vertex_count()
        );
    }

    #[test]
    fn sphericity_is_downward_closed(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 5);
        for s in g.all().subsets() {
            let sph = g.is_spherical_set(s);
            prop_assert_eq!(sph, spherical_by_classification(&g, s), "{}", g.format_set(s));
            if sph {
                for t in s.subsets() {
                    prop_assert!(g.is_spherical_set(t));
                }
            }
        }
    }

    #[test]
    fn twists_are_commuting_involutions(raw in raw_word(6), e1 in 0u64..16, e2 in 0u64..16) {
        let g = gamma(4, 3);
        for variant in [Variant::Lambda, Variant::Omega] {
            let emb = Embedding::new(&g, variant);
            let n = emb.normal_graph();
            let engine = WordEngine::new(n, Budget::default());
            let w = word(n, &raw);
            let mask = |bits: u64| -> VertexSet {
                emb.twisted().iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, v)| v).collect()
            };
            let (a, b) = (mask(e1), mask(e2));
            prop_assert_eq!(emb.act(a, &emb.act(a, &w)), w.clone());
            let ab = emb.act(a, &emb.act(b, &w));
            prop_assert_eq!(&ab, &emb.act(b, &emb.act(a, &w)));
            prop_assert_eq!(&ab, &emb.act(a.symmetric_difference(b), &w));
            // the action is well defined on group elements
            let r = engine.reduce(&w).unwrap();
            prop_assert_eq!(engine.reduce(&emb.act(a, &w)).unwrap(), engine.reduce(&emb.act(a, &r)).unwrap());
        }
    }

    #[test]
    fn coset_rep_is_constant_on_cosets(raw in raw_word(5), pick in any::<prop::sample::Index>(), el in any::<prop::sample::Index>()) {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        let sets = g.spherical_subsets();
        let x = sets[pick.index(sets.len())];
        let table = e.finite_group(e.finite_part(x)).unwrap();
        let d = table.element(el.index(table.order()));
        let w = word(&g, &raw);
        let rep = e.coset_rep(&w, x).unwrap();
        prop_assert_eq!(&e.coset_rep(&w.concat(d), x).unwrap(), &rep);
        prop_assert_eq!(&e.coset_rep(&rep, x).unwrap(), &rep);
        let q = e.reduce(&rep.inverse().concat(&w)).unwrap();
        prop_assert!(table.index_of(&q).is_some());
    }

    #[test]
    fn reduction_laws(raw in raw_word(6), raw2 in raw_word(4)) {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        let (w, v) = (word(&g, &raw), word(&g, &raw2));
        let r = e.reduce(&w).unwrap();
        prop_assert_eq!(e.reduce(&r).unwrap(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert!(e.is_trivial(&w.concat(&w.inverse())).unwrap());
        prop_assert_eq!(e.reduce(&w.concat(&v)).unwrap(), e.reduce(&r.concat(&v)).unwrap());
    }
}

proptest! {
    #![proptest_config(config(100, 23))]

    #[test]
    fn balls_grow_monotonically(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 3);
        let e = WordEngine::new(&g, Budget::default());
        let b1 = e.ball(1).unwrap();
        let b2 = e.ball(2).unwrap();
        prop_assert!(b1.elements.iter().all(|w| b2.contains(w)));
        let d0 = development_ball(&e, 0).unwrap();
        let d1 = development_ball(&e, 1).unwrap();
        prop_assert!(d0.scwol.vertices().iter().all(|v| d1.index_of(v).is_some()));
        let s1 = sigma_ball(&e, 1).unwrap();
        let s2 = sigma_ball(&e, 2).unwrap();
        for (k, v) in s1.vertices.iter().enumerate() {
            let j = s2.index_of(v);
            prop_assert!(j.is_some());
            if s1.interior[k] {
                prop_assert!(s2.interior[j.unwrap()]);
            }
        }
        prop_assert!(s1.edges.len() <= s2.edges.len());
    }
}
