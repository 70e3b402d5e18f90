mod common;

use std::collections::BTreeSet;
use std::f64::consts::PI;

use common::{a3, a3_path, raag_triangle};
use dyercat::fixtures::{dihedral, gamma, single};
use dyercat::scwol::{CosetVertex, Development};
use dyercat::sigma::{certify_ball, check_metric_flag, sigma_ball, vertex_bijection, vertex_link, SigmaBall};
use dyercat::{Budget, DyerGraph, Order, SyllableWord, VertexSet, WordEngine};

fn ball_and_checks(g: &DyerGraph, r: usize) -> SigmaBall {
    let e = WordEngine::new(g, Budget::default());
    let ball = sigma_ball(&e, r).unwrap();
    let dev = Development::new(&e);
    assert_eq!(ball.check_vertex_sets(&dev).unwrap(), None);
    assert_eq!(ball.check_gluing(&dev).unwrap(), None);
    assert_eq!(ball.check_edge_labels(&e).unwrap(), None);
    ball
}

#[test]
fn gamma43_ball_is_consistent() {
    let g = gamma(4, 3);
    let ball = ball_and_checks(&g, 2);
    assert!(ball.interior_count() > 1);
    let cert = certify_ball(&ball, &g).unwrap();
    assert!(cert.passed(), "{}", cert.to_text(&g));
    assert_eq!(cert.skipped + cert.verdicts.len(), ball.vertices.len());
}

#[test]
fn j_of_a_cube_vertex() {
    let g = gamma(4, 3);
    let e = WordEngine::new(&g, Budget::default());
    let block = dyercat::sigma::elementary_block(&e, g.set_of(&["a", "b"]).unwrap()).unwrap();
    let b = e.parse("b").unwrap();
    let images = vertex_bijection(&e, &block, &SyllableWord::empty()).unwrap();
    let ba = e.parse("b a").unwrap();
    let k = (0..block.vertex_count()).find(|&k| block.word_of(k).0 == ba).unwrap();
    assert_eq!(images[k].rep, e.reduce(&b.concat(&e.parse("a").unwrap())).unwrap());
    assert_eq!(images[k].display(&g), "(a b;{})");
}

/// Adjacent link vertices carry distinct labels, cliques sit on complete
/// subgraphs, and a clique spans a simplex iff X together with its labels
/// is spherical.
fn link_laws(g: &DyerGraph, r: usize) {
    let ball = ball_and_checks(g, r);
    for v in 0..ball.vertices.len() {
        if !ball.interior[v] {
            continue;
        }
        let x = ball.vertices[v].set;
        let lk = vertex_link(&ball, v, g).unwrap();
        for (&(a, b), &d) in &lk.edges {
            assert_ne!(lk.labels[a], lk.labels[b]);
            assert!(d >= PI / 2.0 - 1e-12);
        }
        for c in lk.cliques() {
            let labels: VertexSet = c.iter().map(|&i| lk.labels[i]).collect();
            assert_eq!(labels.len(), c.len());
            for (i, u) in labels.iter().enumerate() {
                assert!(labels.iter().skip(i + 1).all(|w| g.label(u, w).is_some()));
            }
            assert_eq!(lk.spans_simplex(&c), g.is_spherical_set(x.union(labels)), "clique {c:?}");
        }
        assert!(check_metric_flag(&lk).passed());
    }
}

#[test]
fn simplex_existence_gamma43() {
    link_laws(&gamma(4, 3), 2);
}

#[test]
fn simplex_existence_small_graphs() {
    link_laws(&dihedral(3), 2);
    link_laws(&a3(), 2);
    link_laws(&a3_path(), 2);
    link_laws(&raag_triangle(), 2);
    link_laws(&gamma(3, 4), 2);
    link_laws(&single(Order::Finite(4)), 2);
}

#[test]
fn translation_preserves_labels() {
    let g = gamma(4, 3);
    let e = WordEngine::new(&g, Budget::default());
    let small = sigma_ball(&e, 1).unwrap();
    let big = sigma_ball(&e, 2).unwrap();
    for d in ["a", "b", "c", "d", "a^-1"] {
        let d = e.parse(d).unwrap();
        let moved = |v: &CosetVertex| {
            let t = CosetVertex { rep: e.coset_rep(&d.concat(&v.rep), v.set).unwrap(), set: v.set };
            big.index_of(&t).expect("translate lies in the larger ball")
        };
        for edge in &small.edges {
            let (a, b) = (moved(&small.vertices[edge.a]), moved(&small.vertices[edge.b]));
            assert_eq!(big.edge_between(a, b).map(|x| x.label), Some(edge.label));
        }
    }
}

#[test]
fn coxeter_balls_are_cayley_graphs() {
    for g in [dihedral(4), a3(), a3_path()] {
        let e = WordEngine::new(&g, Budget::default());
        let ball = ball_and_checks(&g, 2);
        assert!(ball.vertices.iter().all(|v| v.set.is_empty()));
        for v in 0..ball.vertices.len() {
            if !ball.interior[v] {
                continue;
            }
            let nb = ball.neighbours(v);
            assert_eq!(nb.len(), g.vertex_count());
            let labels: BTreeSet<usize> = nb.iter().map(|p| p.1).collect();
            assert_eq!(labels.len(), g.vertex_count());
            for (w, s) in nb {
                let expect = e.reduce(&ball.vertices[v].rep.concat(&SyllableWord::letter(s, 1))).unwrap();
                assert_eq!(ball.vertices[w].rep, expect);
            }
        }
    }
}

#[test]
fn raag_blocks_are_salvetti_cubes() {
    let g = raag_triangle();
    let e = WordEngine::new(&g, Budget::default());
    let ball = ball_and_checks(&g, 2);
    for b in &ball.blocks {
        let members: BTreeSet<SyllableWord> = b.members.iter().map(|&k| ball.vertices[k].rep.clone()).collect();
        let cube: BTreeSet<SyllableWord> = b
            .at
            .set
            .subsets()
            .map(|l| e.reduce(&b.at.rep.concat(&dyercat::scwol::phi_of(l))).unwrap())
            .collect();
        assert_eq!(members, cube);
    }
    let cert = certify_ball(&ball, &g).unwrap();
    assert!(cert.passed());
    for v in 0..ball.vertices.len() {
        if ball.interior[v] {
            let lk = vertex_link(&ball, v, &g).unwrap();
            assert_eq!(lk.vertex_count(), 6);
            assert!(lk.edges.values().all(|&d| (d - PI / 2.0).abs() < 1e-12));
        }
    }
}

#[test]
fn obj_and_dot_emitters() {
    let g = gamma(4, 3);
    let ball = ball_and_checks(&g, 1);
    let obj = ball.to_obj().unwrap();
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), ball.vertices.len());
    assert!(obj.lines().any(|l| l.starts_with("f ")));
    let dot = ball.to_dot(&g);
    assert_eq!(dot.matches(" -- ").count(), ball.edges.len());
    let ball = ball_and_checks(&single(Order::Infinite), 2);
    assert_eq!(ball.vertices.len(), 5);
}
