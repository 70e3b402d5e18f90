//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use dyercat::fixtures::build;
use dyercat::graph::ExtendedM;
use dyercat::{DyerGraph, Order, VertexSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Right-angled Artin triangle: three infinite-order vertices, pairwise
/// commuting.
pub fn raag_triangle() -> DyerGraph {
    let inf = Order::Infinite;
    build(&[("a", inf), ("b", inf), ("c", inf)], &[("a", "b", 2), ("b", "c", 2), ("a", "c", 2)]).unwrap()
}

/// Coxeter A₃: a–b and b–c braid, a and c commute.
pub fn a3() -> DyerGraph {
    let two = Order::Finite(2);
    build(&[("a", two), ("b", two), ("c", two)], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 2)]).unwrap()
}

/// The path a–b–c with m = 3 and no a–c edge (so a c has infinite order).
pub fn a3_path() -> DyerGraph {
    let two = Order::Finite(2);
    build(&[("a", two), ("b", two), ("c", two)], &[("a", "b", 3), ("b", "c", 3)]).unwrap()
}

/// Random valid Dyer graph on 1..=max_n vertices.
pub fn random_graph(r: &mut impl Rng, max_n: usize) -> DyerGraph {
    let n = r.gen_range(1..=max_n);
    let orders: Vec<Order> = (0..n)
        .map(|_| match r.gen_range(0..6) {
            0 | 1 | 2 => Order::Finite(2),
            3 => Order::Finite(r.gen_range(3..=5)),
            _ => Order::Infinite,
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(0.6) {
                let both_two = orders[i] == Order::Finite(2) && orders[j] == Order::Finite(2);
                let m = if both_two { [2, 2, 3, 3, 4, 5, 6][r.gen_range(0..7)] } else { 2 };
                edges.push((format!("v{i}"), format!("v{j}"), m));
            }
        }
    }
    DyerGraph::new((0..n).map(|i| (format!("v{i}"), orders[i])).collect(), edges).unwrap()
}

fn coxeter_m(g: &DyerGraph, u: usize, v: usize) -> Option<u32> {
    match g.m(u, v) {
        ExtendedM::Finite(m) => Some(m),
        ExtendedM::Infinite => None,
    }
}

/// Finite irreducible Coxeter diagrams by type: A, B, D, E, F, H, I.
fn finite_component(g: &DyerGraph, comp: &[usize]) -> bool {
    let n = comp.len();
    if n == 1 {
        return true;
    }
    let mut edges = Vec::new();
    for (x, &u) in comp.iter().enumerate() {
        for &v in &comp[x + 1..] {
            match coxeter_m(g, u, v) {
                None => return false,
                Some(2) => {}
                Some(m) => edges.push((u, v, m)),
            }
        }
    }
    if n == 2 {
        return true;
    }
    if edges.len() != n - 1 {
        return false;
    }
    let deg = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let big: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) >= 3).collect();
    match big.len() {
        0 => {
            if branch.is_empty() {
                return true;
            }
            if branch.len() > 1 || deg(branch[0]) > 3 {
                return false;
            }
            let c = branch[0];
            let mut arms: Vec<usize> = edges
                .iter()
                .filter(|e| e.0 == c || e.1 == c)
                .map(|e| {
                    let (mut prev, mut cur, mut len) = (c, if e.0 == c { e.1 } else { e.0 }, 1);
                    loop {
                        let next = edges.iter().find_map(|f| {
                            if f.0 == cur && f.1 != prev {
                                Some(f.1)
                            } else if f.1 == cur && f.0 != prev {
                                Some(f.0)
                            } else {
                                None
                            }
                        });
                        match next {
                            Some(x) => {
                                prev = cur;
                                cur = x;
                                len += 1;
                            }
                            None => return len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            // 1/(p+1) + 1/(q+1) + 1/(r+1) > 1
            let (p, q, r) = (arms[0] + 1, arms[1] + 1, arms[2] + 1);
            q * r + p * r + p * q > p * q * r
        }
        1 => {
            if !branch.is_empty() {
                return false;
            }
            let (u, v, m) = *big[0];
            let end = deg(u) == 1 || deg(v) == 1;
            match m {
                4 => end || n == 4,
                5 => end && n <= 4,
                _ => false,
            }
        }
        _ => false,
    }
}

/// Sphericity by classification: a clique whose V₂ part is a finite
/// Coxeter group.
pub fn spherical_by_classification(g: &DyerGraph, set: VertexSet) -> bool {
    let vs: Vec<usize> = set.iter().collect();
    for (x, &u) in vs.iter().enumerate() {
        for &v in &vs[x + 1..] {
            if g.label(u, v).is_none() {
                return false;
            }
        }
    }
    let two: Vec<usize> = vs.iter().copied().filter(|&v| g.order(v) == Order::Finite(2)).collect();
    // components of the Coxeter diagram (pairs with m ≠ 2)
    let mut seen = vec![false; two.len()];
    for s in 0..two.len() {
        if seen[s] {
            continue;
        }
        let mut comp = vec![two[s]];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            for t in 0..two.len() {
                if !seen[t] && coxeter_m(g, comp[k], two[t]) != Some(2) {
                    seen[t] = true;
                    comp.push(two[t]);
                }
            }
            k += 1;
        }
        if !finite_component(g, &comp) {
            return false;
        }
    }
    true
}
