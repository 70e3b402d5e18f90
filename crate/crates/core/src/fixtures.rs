//! Small named graphs used by tests, examples and the CLI docs.

use crate::graph::{DyerGraph, Order};

/// Γ_{m,p}: a:∞, b:2, c:2, d:p with edges ab:2, bc:m, cd:2.
pub fn gamma(m: u32, p: u32) -> DyerGraph {
    DyerGraph::new(
        vec![
            ("a".into(), Order::Infinite),
            ("b".into(), Order::Finite(2)),
            ("c".into(), Order::Finite(2)),
            ("d".into(), Order::Finite(p)),
        ],
        vec![("a".into(), "b".into(), 2), ("b".into(), "c".into(), m), ("c".into(), "d".into(), 2)],
    )
    .expect("Γ_{m,p} is a valid Dyer graph")
}

/// One vertex `v` of the given order.
pub fn single(f: Order) -> DyerGraph {
    DyerGraph::new(vec![("v".into(), f)], vec![]).expect("valid")
}

/// Dihedral Coxeter graph I₂(m) on vertices b, c.
pub fn dihedral(m: u32) -> DyerGraph {
    DyerGraph::new(
        vec![("b".into(), Order::Finite(2)), ("c".into(), Order::Finite(2))],
        vec![("b".into(), "c".into(), m)],
    )
    .expect("valid")
}

/// Builds a graph from compact specs, e.g. `&[("a", Order::Infinite)]` and
/// `&[("a", "b", 2)]`.
pub fn build(vertices: &[(&str, Order)], edges: &[(&str, &str, u32)]) -> crate::Result<DyerGraph> {
    DyerGraph::new(
        vertices.iter().map(|(v, f)| (v.to_string(), *f)).collect(),
        edges.iter().map(|(u, v, m)| (u.to_string(), v.to_string(), *m)).collect(),
    )
}
