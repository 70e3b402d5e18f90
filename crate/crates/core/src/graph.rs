//! Dyer graphs: labelled simplicial graphs, validation, the cosine matrix and
//! the spherical subsets.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_positive_definite, PD_PIVOT_TOL};

/// Hard cap on the number of vertices (subsets are stored as `u64` masks).
pub const MAX_VERTICES: usize = 64;

/// Vertex label: the order of the generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_infinite(self) -> bool {
        matches!(self, Order::Infinite)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// `m(u, v)` extended to all pairs: 1 on the diagonal, infinity off edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtendedM {
    Finite(u32),
    Infinite,
}

/// A set of vertices, stored as a bit mask over vertex indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(i: usize) -> Self {
        VertexSet(1 << i)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << i))
    }

    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    pub fn symmetric_difference(self, o: Self) -> Self {
        VertexSet(self.0 ^ o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == full { None } else { Some((c.wrapping_sub(full)) & full) };
            Some(VertexSet(c))
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// The partition V = V2 ⊔ Vp ⊔ V∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub v2: VertexSet,
    pub vp: VertexSet,
    pub vinf: VertexSet,
}

/// Symmetric matrix of cos(π − π/m(u,v)) over an ordered vertex list.
#[derive(Clone, Debug, PartialEq)]
pub struct CosineMatrix {
    pub vertices: Vec<usize>,
    pub entries: Vec<Vec<f64>>,
}

impl CosineMatrix {
    pub fn is_positive_definite(&self) -> bool {
        is_positive_definite(&self.entries, PD_PIVOT_TOL)
    }
}

/// Why a candidate graph was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphIssue {
    NonSimplicial { u: String, v: String, reason: &'static str },
    BadLabelConstraint { u: String, v: String, m: u32, vertex: String, f: Order },
    MissingLabel(String),
    InvalidLabel(String),
    UnknownVertex(String),
    DuplicateVertex(String),
    InvalidId(String),
    ReservedId(String),
    TooManyVertices(usize),
}

impl fmt::Display for GraphIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphIssue::NonSimplicial { u, v, reason } => {
                write!(f, "non-simplicial edge {{{u},{v}}}: {reason}")
            }
            GraphIssue::BadLabelConstraint { u, v, m, vertex, f: o } => write!(
                f,
                "edge {{{u},{v}}} has m={m} but endpoint {vertex} has f={o} (must be 2)"
            ),
            GraphIssue::MissingLabel(what) => write!(f, "missing label: {what}"),
            GraphIssue::InvalidLabel(what) => write!(f, "invalid label: {what}"),
            GraphIssue::UnknownVertex(v) => write!(f, "edge references unknown vertex `{v}`"),
            GraphIssue::DuplicateVertex(v) => write!(f, "duplicate vertex `{v}`"),
            GraphIssue::InvalidId(v) => write!(f, "invalid vertex id `{v}`"),
            GraphIssue::ReservedId(v) => {
                write!(f, "vertex id `{v}` clashes with the primed copy of another vertex")
            }
            GraphIssue::TooManyVertices(n) => {
                write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}")
            }
        }
    }
}

/// A validated Dyer graph. Vertices are stored sorted by id, so vertex
/// indices follow the lexicographic order of ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyerGraph {
    ids: Vec<String>,
    orders: Vec<Order>,
    labels: Vec<Vec<Option<u32>>>,
}

// ---- raw (unvalidated) document ----

#[derive(Deserialize)]
#[serde(untagged)]
enum RawOrder {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct RawVertex {
    id: Option<String>,
    f: Option<RawOrder>,
}

#[derive(Deserialize)]
struct RawEdge {
    u: Option<String>,
    v: Option<String>,
    m: Option<i64>,
}

#[derive(Deserialize)]
struct RawGraph {
    vertices: Vec<RawVertex>,
    #[serde(default)]
    edges: Vec<RawEdge>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum OutOrder {
    Int(u32),
    Text(&'static str),
}

#[derive(Serialize)]
struct OutVertex<'a> {
    id: &'a str,
    f: OutOrder,
}

#[derive(Serialize)]
struct OutEdge<'a> {
    u: &'a str,
    v: &'a str,
    m: u32,
}

#[derive(Serialize)]
struct OutGraph<'a> {
    vertices: Vec<OutVertex<'a>>,
    edges: Vec<OutEdge<'a>>,
}

fn id_is_valid(id: &str) -> bool {
    !id.is_empty()
        && !id.chars().any(|c| c.is_whitespace() || matches!(c, '^' | '{' | '}' | ',' | '@'))
}

impl DyerGraph {
    /// Builds and validates a graph. Every problem found is reported.
    pub fn new(vertices: Vec<(String, Order)>, edges: Vec<(String, String, u32)>) -> Result<Self> {
        let mut issues = Vec::new();
        let mut map: BTreeMap<String, Order> = BTreeMap::new();
        for (id, f) in vertices {
            if !id_is_valid(&id) {
                issues.push(GraphIssue::InvalidId(id));
                continue;
            }
            if let Order::Finite(n) = f {
                if n < 2 {
                    issues.push(GraphIssue::InvalidLabel(format!("f({id}) = {n} < 2")));
                }
            }
            if map.insert(id.clone(), f).is_some() {
                issues.push(GraphIssue::DuplicateVertex(id));
            }
        }
        if map.len() > MAX_VERTICES {
            issues.push(GraphIssue::TooManyVertices(map.len()));
            return Err(Error::Validation(issues));
        }
        // `v'` names the primed copy of a vertex with f(v) != 2
        for id in map.keys() {
            if let Some(base) = id.strip_suffix('\'') {
                if map.get(base).is_some_and(|&f| f != Order::Finite(2)) {
                    issues.push(GraphIssue::ReservedId(id.clone()));
                }
            }
        }
        let ids: Vec<String> = map.keys().cloned().collect();
        let orders: Vec<Order> = map.values().copied().collect();
        let n = ids.len();
        let mut labels = vec![vec![None; n]; n];
        let index = |s: &str| ids.binary_search_by(|x| x.as_str().cmp(s)).ok();
        for (u, v, m) in edges {
            let (Some(i), Some(j)) = (index(&u), index(&v)) else {
                for w in [&u, &v] {
                    if index(w).is_none() {
                        issues.push(GraphIssue::UnknownVertex(w.clone()));
                    }
                }
                continue;
            };
            if i == j {
                issues.push(GraphIssue::NonSimplicial { u, v, reason: "loop" });
                continue;
            }
            if labels[i][j].is_some() {
                issues.push(GraphIssue::NonSimplicial { u, v, reason: "duplicate edge" });
                continue;
            }
            if m < 2 {
                issues.push(GraphIssue::InvalidLabel(format!("m({u},{v}) = {m} < 2")));
                continue;
            }
            for k in [i, j] {
                if orders[k] != Order::Finite(2) && m != 2 {
                    issues.push(GraphIssue::BadLabelConstraint {
                        u: u.clone(),
                        v: v.clone(),
                        m,
                        vertex: ids[k].clone(),
                        f: orders[k],
                    });
                }
            }
            labels[i][j] = Some(m);
            labels[j][i] = Some(m);
        }
        if issues.is_empty() {
            Ok(DyerGraph { ids, orders, labels })
        } else {
            Err(Error::Validation(issues))
        }
    }

    /// Parses and validates the JSON document
    /// `{vertices:[{id,f}], edges:[{u,v,m}]}` with `f` an integer or `"inf"`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGraph = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut issues = Vec::new();
        let mut vertices = Vec::new();
        for (k, rv) in raw.vertices.into_iter().enumerate() {
            let Some(id) = rv.id else {
                issues.push(GraphIssue::MissingLabel(format!("vertex #{k} has no id")));
                continue;
            };
            let f = match rv.f {
                None => {
                    issues.push(GraphIssue::MissingLabel(format!("vertex `{id}` has no f")));
                    continue;
                }
                Some(RawOrder::Text(s)) if s == "inf" => Order::Infinite,
                Some(RawOrder::Text(s)) => {
                    issues.push(GraphIssue::InvalidLabel(format!("f({id}) = \"{s}\"")));
                    continue;
                }
                Some(RawOrder::Int(n)) if (2..=u32::MAX as i64).contains(&n) => {
                    Order::Finite(n as u32)
                }
                Some(RawOrder::Int(n)) => {
                    issues.push(GraphIssue::InvalidLabel(format!("f({id}) = {n}")));
                    continue;
                }
            };
            vertices.push((id, f));
        }
        let mut edges = Vec::new();
        for (k, re) in raw.edges.into_iter().enumerate() {
            match (re.u, re.v, re.m) {
                (Some(u), Some(v), Some(m)) if (2..=u32::MAX as i64).contains(&m) => {
                    edges.push((u, v, m as u32))
                }
                (Some(u), Some(v), Some(m)) => {
                    issues.push(GraphIssue::InvalidLabel(format!("m({u},{v}) = {m}")))
                }
                (Some(u), Some(v), None) => {
                    issues.push(GraphIssue::MissingLabel(format!("edge {{{u},{v}}} has no m")))
                }
                _ => issues.push(GraphIssue::MissingLabel(format!("edge #{k} lacks an endpoint"))),
            }
        }
        match DyerGraph::new(vertices, edges) {
            Ok(g) if issues.is_empty() => Ok(g),
            Ok(_) => Err(Error::Validation(issues)),
            Err(Error::Validation(more)) => {
                issues.extend(more);
                Err(Error::Validation(issues))
            }
            Err(e) => Err(e),
        }
    }

    /// Canonical serialization: vertices sorted by id, edges by endpoint ids.
    pub fn to_json(&self) -> String {
        let vertices = self
            .ids
            .iter()
            .zip(&self.orders)
            .map(|(id, f)| OutVertex {
                id,
                f: match f {
                    Order::Finite(n) => OutOrder::Int(*n),
                    Order::Infinite => OutOrder::Text("inf"),
                },
            })
            .collect();
        let edges = self
            .edges()
            .map(|(i, j, m)| OutEdge { u: &self.ids[i], v: &self.ids[j], m })
            .collect();
        let mut s = serde_json::to_string_pretty(&OutGraph { vertices, edges })
            .expect("graph serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    /// Resolves a list of ids to a vertex set.
    pub fn set_of(&self, ids: &[&str]) -> Result<VertexSet> {
        ids.iter().map(|s| self.require(s)).collect()
    }

    pub fn order(&self, i: usize) -> Order {
        self.orders[i]
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Edge label, `None` if `i` and `j` are not adjacent.
    pub fn label(&self, i: usize, j: usize) -> Option<u32> {
        self.labels[i][j]
    }

    /// Edges `(i, j, m)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |i| {
            ((i + 1)..n).filter_map(move |j| self.labels[i][j].map(|m| (i, j, m)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn partition(&self) -> VertexPartition {
        let mut p = VertexPartition {
            v2: VertexSet::EMPTY,
            vp: VertexSet::EMPTY,
            vinf: VertexSet::EMPTY,
        };
        for (i, f) in self.orders.iter().enumerate() {
            match f {
                Order::Finite(2) => p.v2.insert(i),
                Order::Finite(_) => p.vp.insert(i),
                Order::Infinite => p.vinf.insert(i),
            }
        }
        p
    }

    pub fn is_coxeter(&self) -> bool {
        self.orders.iter().all(|&f| f == Order::Finite(2))
    }

    /// The full subgraph on `set`, with restricted labels.
    pub fn induced(&self, set: VertexSet) -> DyerGraph {
        let keep: Vec<usize> = set.iter().collect();
        DyerGraph {
            ids: keep.iter().map(|&i| self.ids[i].clone()).collect(),
            orders: keep.iter().map(|&i| self.orders[i]).collect(),
            labels: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.labels[i][j]).collect())
                .collect(),
        }
    }

    pub fn induced_subgraph(&self, ids: &[&str]) -> Result<DyerGraph> {
        Ok(self.induced(self.set_of(ids)?))
    }

    pub fn m(&self, i: usize, j: usize) -> ExtendedM {
        if i == j {
            ExtendedM::Finite(1)
        } else {
            match self.labels[i][j] {
                Some(m) => ExtendedM::Finite(m),
                None => ExtendedM::Infinite,
            }
        }
    }

    pub fn extended_m(&self, u: &str, v: &str) -> Result<ExtendedM> {
        Ok(self.m(self.require(u)?, self.require(v)?))
    }

    /// cos(π − π/m(i, j)); −1 for non-adjacent pairs.
    pub fn cosine(&self, i: usize, j: usize) -> f64 {
        match self.m(i, j) {
            ExtendedM::Finite(m) => (PI - PI / m as f64).cos(),
            ExtendedM::Infinite => -1.0,
        }
    }

    pub fn cosine_matrix_of(&self, vertices: &[usize]) -> CosineMatrix {
        CosineMatrix {
            vertices: vertices.to_vec(),
            entries: vertices
                .iter()
                .map(|&i| vertices.iter().map(|&j| self.cosine(i, j)).collect())
                .collect(),
        }
    }

    pub fn cosine_matrix(&self, ids: &[&str]) -> Result<CosineMatrix> {
        let v = ids.iter().map(|s| self.require(s)).collect::<Result<Vec<_>>>()?;
        Ok(self.cosine_matrix_of(&v))
    }

    fn is_clique(&self, set: VertexSet) -> bool {
        let v: Vec<usize> = set.iter().collect();
        v.iter()
            .enumerate()
            .all(|(k, &i)| v[k + 1..].iter().all(|&j| self.labels[i][j].is_some()))
    }

    pub fn is_spherical_set(&self, set: VertexSet) -> bool {
        self.is_clique(set)
            && self
                .cosine_matrix_of(&set.iter().collect::<Vec<_>>())
                .is_positive_definite()
    }

    pub fn is_spherical(&self, ids: &[&str]) -> Result<bool> {
        Ok(self.is_spherical_set(self.set_of(ids)?))
    }

    /// All spherical subsets, ordered by size and then lexicographically.
    /// Cliques are grown one vertex at a time; a non-spherical clique is not
    /// extended since sphericity is closed under subsets.
    pub fn spherical_subsets(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut out = vec![VertexSet::EMPTY];
        let mut stack = vec![(VertexSet::EMPTY, 0usize)];
        while let Some((set, from)) = stack.pop() {
            for k in from..n {
                if set.iter().all(|i| self.labels[i][k].is_some()) {
                    let next = set.with(k);
                    if self.is_spherical_set(next) {
                        out.push(next);
                        stack.push((next, k + 1));
                    }
                }
            }
        }
        out.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>()))
        });
        out
    }

    /// `{a,b}` style rendering of a subset.
    pub fn format_set(&self, set: VertexSet) -> String {
        let names: Vec<&str> = set.iter().map(|i| self.ids[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn gamma43() -> DyerGraph {
        DyerGraph::new(
            vec![
                ("a".into(), Order::Infinite),
                ("b".into(), Order::Finite(2)),
                ("c".into(), Order::Finite(2)),
                ("d".into(), Order::Finite(3)),
            ],
            vec![
                ("a".into(), "b".into(), 2),
                ("b".into(), "c".into(), 4),
                ("c".into(), "d".into(), 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn partition_of_gamma43() {
        let g = gamma43();
        let p = g.partition();
        assert_eq!(g.format_set(p.v2), "{b,c}");
        assert_eq!(g.format_set(p.vp), "{d}");
        assert_eq!(g.format_set(p.vinf), "{a}");
    }

    #[test]
    fn label_constraint_is_enforced() {
        let bad = DyerGraph::new(
            vec![("u".into(), Order::Finite(3)), ("v".into(), Order::Finite(2))],
            vec![("u".into(), "v".into(), 4)],
        );
        assert!(matches!(
            bad,
            Err(Error::Validation(ref v)) if matches!(v[0], GraphIssue::BadLabelConstraint { .. })
        ));
        let bad = DyerGraph::new(
            vec![("u".into(), Order::Infinite), ("v".into(), Order::Finite(2))],
            vec![("u".into(), "v".into(), 3)],
        );
        assert!(matches!(bad, Err(Error::Validation(_))));
    }

    #[test]
    fn structural_errors() {
        let r = DyerGraph::new(
            vec![("u".into(), Order::Finite(2))],
            vec![("u".into(), "u".into(), 2), ("u".into(), "w".into(), 2)],
        );
        let Err(Error::Validation(issues)) = r else { panic!() };
        assert!(matches!(issues[0], GraphIssue::NonSimplicial { .. }));
        assert!(matches!(issues[1], GraphIssue::UnknownVertex(_)));
        let r = DyerGraph::new(
            vec![("u".into(), Order::Finite(3)), ("u'".into(), Order::Finite(2))],
            vec![],
        );
        assert!(matches!(r, Err(Error::Validation(ref v)) if v[0] == GraphIssue::ReservedId("u'".into())));
    }

    #[test]
    fn json_missing_labels() {
        let r = DyerGraph::from_json(r#"{"vertices":[{"id":"a"}],"edges":[]}"#);
        assert!(matches!(r, Err(Error::Validation(ref v)) if matches!(v[0], GraphIssue::MissingLabel(_))));
        let r = DyerGraph::from_json(
            r#"{"vertices":[{"id":"a","f":2},{"id":"b","f":2}],"edges":[{"u":"a","v":"b"}]}"#,
        );
        assert!(matches!(r, Err(Error::Validation(ref v)) if matches!(v[0], GraphIssue::MissingLabel(_))));
        assert!(matches!(DyerGraph::from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let text = r#"{"edges":[{"u":"c","v":"b","m":4},{"u":"b","v":"a","m":2},{"u":"d","v":"c","m":2}],
            "vertices":[{"id":"d","f":3},{"id":"c","f":2},{"id":"b","f":2},{"id":"a","f":"inf"}]}"#;
        let g = DyerGraph::from_json(text).unwrap();
        assert_eq!(g, gamma43());
        let canon = g.to_json();
        assert_eq!(DyerGraph::from_json(&canon).unwrap().to_json(), canon);
        assert!(canon.find("\"a\"").unwrap() < canon.find("\"d\"").unwrap());
    }

    #[test]
    fn extended_m_and_cosines() {
        let g = gamma43();
        assert_eq!(g.extended_m("b", "c").unwrap(), ExtendedM::Finite(4));
        assert_eq!(g.extended_m("b", "d").unwrap(), ExtendedM::Infinite);
        assert_eq!(g.extended_m("b", "b").unwrap(), ExtendedM::Finite(1));
        assert!(g.extended_m("b", "z").is_err());
        let c = g.cosine_matrix(&["b", "c"]).unwrap();
        let h = -(2f64.sqrt()) / 2.0;
        assert!((c.entries[0][1] - h).abs() < 1e-12 && (c.entries[0][0] - 1.0).abs() < 1e-12);
        let c = g.cosine_matrix(&["b", "d"]).unwrap();
        assert_eq!(c.entries, vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
    }

    #[test]
    fn sphericity_examples() {
        let g = gamma43();
        assert!(g.is_spherical(&["b", "c"]).unwrap());
        assert!(g.is_spherical(&["a", "b"]).unwrap());
        assert!(!g.is_spherical(&["b", "d"]).unwrap());
        let subs: Vec<String> = g.spherical_subsets().into_iter().map(|s| g.format_set(s)).collect();
        assert_eq!(subs, ["{}", "{a}", "{b}", "{c}", "{d}", "{a,b}", "{b,c}", "{c,d}"]);
        let empty = DyerGraph::new(vec![], vec![]).unwrap();
        assert_eq!(empty.spherical_subsets(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn induced_subgraph_restricts_labels() {
        let g = gamma43();
        let h = g.induced_subgraph(&["b", "c"]).unwrap();
        assert_eq!(h.ids(), ["b", "c"]);
        assert_eq!(h.label(0, 1), Some(4));
        assert_eq!(g.induced(g.all()), g);
        assert_eq!(g.induced(VertexSet::EMPTY).vertex_count(), 0);
    }

    #[test]
    fn subsets_iterator() {
        let s = VertexSet(0b1010);
        let all: Vec<u64> = s.subsets().map(|x| x.0).collect();
        assert_eq!(all, vec![0, 0b10, 0b1000, 0b1010]);
    }
}
