//! Small categories without loops, the scwol of spherical subsets, the
//! associated complex of groups and balls in its development.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::graph::{DyerGraph, VertexSet};
use crate::presentation::{dyer_presentation, Presentation};
use crate::word::{FiniteGroupTable, Syllable, SyllableWord, WordEngine};

/// Vertices, edges with source `i` and target `t`, and the composition
/// `(α, β) ↦ αβ`, defined exactly when `i(α) = t(β)`.
#[derive(Clone, Debug)]
pub struct Scwol<V, E> {
    vertices: Vec<V>,
    edges: Vec<E>,
    source: Vec<usize>,
    target: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
}

impl<V, E> Scwol<V, E> {
    /// Raw constructor; call [`Scwol::check_axioms`] to validate.
    pub fn new(
        vertices: Vec<V>,
        edges: Vec<(E, usize, usize)>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Self {
        let mut es = Vec::with_capacity(edges.len());
        let mut source = Vec::with_capacity(edges.len());
        let mut target = Vec::with_capacity(edges.len());
        for (e, i, t) in edges {
            es.push(e);
            source.push(i);
            target.push(t);
        }
        Scwol { vertices, edges: es, source, target, compose }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &V {
        &self.vertices[v]
    }

    pub fn edges(&self) -> &[E] {
        &self.edges
    }

    pub fn edge(&self, a: usize) -> &E {
        &self.edges[a]
    }

    pub fn i(&self, a: usize) -> usize {
        self.source[a]
    }

    pub fn t(&self, a: usize) -> usize {
        self.target[a]
    }

    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.compose.get(&(a, b)).copied()
    }

    pub fn compositions(&self) -> usize {
        self.compose.len()
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(move |&a| self.target[a] == v)
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(move |&a| self.source[a] == v)
    }

    /// i ≠ t; composition total on composable pairs with i(αβ) = i(β) and
    /// t(αβ) = t(α); associativity.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        for a in 0..self.edges.len() {
            if self.source[a] == self.target[a] {
                return Err(format!("edge {a} is a loop"));
            }
        }
        let mut into: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for b in 0..self.edges.len() {
            into[self.target[b]].push(b);
        }
        let mut pairs = 0;
        for a in 0..self.edges.len() {
            for &b in &into[self.source[a]] {
                pairs += 1;
                let Some(ab) = self.compose(a, b) else {
                    return Err(format!("composable pair ({a},{b}) has no composite"));
                };
                if self.source[ab] != self.source[b] || self.target[ab] != self.target[a] {
                    return Err(format!("composite of ({a},{b}) has wrong endpoints"));
                }
                for &c in &into[self.source[b]] {
                    let bc = self.compose(b, c).ok_or("missing composite")?;
                    let left = self.compose(ab, c).ok_or("missing composite")?;
                    let right = self.compose(a, bc).ok_or("missing composite")?;
                    if left != right {
                        return Err(format!("associativity fails for ({a},{b},{c})"));
                    }
                }
            }
        }
        if pairs != self.compose.len() {
            return Err("composition defined on a non-composable pair".into());
        }
        Ok(())
    }

    /// Connected as an undirected graph.
    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || self.bfs_tree(0).len() + 1 == self.vertices.len()
    }

    /// Edges of a breadth-first spanning tree of the component of `root`.
    pub fn bfs_tree(&self, root: usize) -> Vec<usize> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices.len()];
        for a in 0..self.edges.len() {
            adj[self.source[a]].push((a, self.target[a]));
            adj[self.target[a]].push((a, self.source[a]));
        }
        let mut seen = vec![false; self.vertices.len()];
        seen[root] = true;
        let mut tree = Vec::new();
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(a, w) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    tree.push(a);
                    queue.push_back(w);
                }
            }
        }
        tree
    }

    /// The full subscwol on `keep`: all edges between kept vertices.
    pub fn full_subscwol(&self, keep: &[usize]) -> Scwol<V, E>
    where
        V: Clone,
        E: Clone,
    {
        let vmap: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let kept: Vec<usize> = (0..self.edges.len())
            .filter(|&a| vmap.contains_key(&self.source[a]) && vmap.contains_key(&self.target[a]))
            .collect();
        let emap: HashMap<usize, usize> = kept.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let compose = self
            .compose
            .iter()
            .filter_map(|(&(a, b), &ab)| Some(((*emap.get(&a)?, *emap.get(&b)?), emap[&ab])))
            .collect();
        Scwol::new(
            keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            kept.iter()
                .map(|&a| (self.edges[a].clone(), vmap[&self.source[a]], vmap[&self.target[a]]))
                .collect(),
            compose,
        )
    }

    /// Graphviz rendering; edges point from i(α) to t(α).
    pub fn to_dot(&self, vname: impl Fn(&V) -> String, ename: impl Fn(&E) -> String) -> String {
        let mut out = String::from("digraph scwol {\n");
        for v in &self.vertices {
            writeln!(out, "  \"{}\";", vname(v)).unwrap();
        }
        for a in 0..self.edges.len() {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                vname(&self.vertices[self.source[a]]),
                vname(&self.vertices[self.target[a]]),
                ename(&self.edges[a])
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Scwol of a finite strict poset on `0..n`: one edge `(a, b)` for each
/// `b < a`, from b to a, composing as `(a,b)(b,c) = (a,c)`.
pub fn scwol_from_poset(
    n: usize,
    less: impl Fn(usize, usize) -> bool,
) -> Result<Scwol<usize, (usize, usize)>> {
    for a in 0..n {
        if less(a, a) {
            return Err(Error::NotAPartialOrder(format!("{a} < {a}")));
        }
        for b in 0..n {
            if less(a, b) && less(b, a) {
                return Err(Error::NotAPartialOrder(format!("{a} < {b} < {a}")));
            }
            for c in 0..n {
                if less(a, b) && less(b, c) && !less(a, c) {
                    return Err(Error::NotAPartialOrder(format!("{a} < {b} < {c} but not {a} < {c}")));
                }
            }
        }
    }
    let mut edges = Vec::new();
    let mut index = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            if less(b, a) {
                index.insert((a, b), edges.len());
                edges.push(((a, b), b, a));
            }
        }
    }
    let mut compose = HashMap::new();
    for (&(a, b), &ab) in &index {
        for (&(b2, c), &bc) in &index {
            if b2 == b {
                compose.insert((ab, bc), index[&(a, c)]);
            }
        }
    }
    Ok(Scwol::new((0..n).collect(), edges, compose))
}

/// A component of a product cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Vertex(usize),
    Edge(usize),
}

/// Product of scwols. Vertices are tuples of vertex indices; an edge is a
/// tuple with an edge in a nonempty set S of factors and a vertex elsewhere.
pub fn scwol_product<V, E>(factors: &[&Scwol<V, E>]) -> Scwol<Vec<usize>, Vec<Cell>> {
    let mut vertices: Vec<Vec<usize>> = vec![Vec::new()];
    for f in factors {
        vertices = vertices
            .into_iter()
            .flat_map(|t| {
                (0..f.vertex_count()).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    let vindex: HashMap<Vec<usize>, usize> =
        vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let mut cells: Vec<Vec<Cell>> = vec![Vec::new()];
    for f in factors {
        let options: Vec<Cell> = (0..f.vertex_count())
            .map(Cell::Vertex)
            .chain((0..f.edge_count()).map(Cell::Edge))
            .collect();
        cells = cells
            .into_iter()
            .flat_map(|t| {
                options.iter().map(move |&c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    cells.retain(|t| t.iter().any(|c| matches!(c, Cell::Edge(_))));
    let end = |t: &[Cell], src: bool| -> Vec<usize> {
        t.iter()
            .zip(factors)
            .map(|(c, f)| match *c {
                Cell::Vertex(v) => v,
                Cell::Edge(a) if src => f.i(a),
                Cell::Edge(a) => f.t(a),
            })
            .collect()
    };
    let eindex: HashMap<Vec<Cell>, usize> =
        cells.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
    let src: Vec<usize> = cells.iter().map(|c| vindex[&end(c, true)]).collect();
    let tgt: Vec<usize> = cells.iter().map(|c| vindex[&end(c, false)]).collect();
    let mut into: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for b in 0..cells.len() {
        into[tgt[b]].push(b);
    }
    let mut compose = HashMap::new();
    for a in 0..cells.len() {
        for &b in &into[src[a]] {
            let c: Vec<Cell> = cells[a]
                .iter()
                .zip(&cells[b])
                .zip(factors)
                .map(|((&x, &y), f)| match (x, y) {
                    (Cell::Vertex(v), Cell::Vertex(_)) => Cell::Vertex(v),
                    (Cell::Edge(e), Cell::Vertex(_)) | (Cell::Vertex(_), Cell::Edge(e)) => Cell::Edge(e),
                    (Cell::Edge(e), Cell::Edge(g)) => {
                        Cell::Edge(f.compose(e, g).expect("factor composition"))
                    }
                })
                .collect();
            compose.insert((a, b), eindex[&c]);
        }
    }
    let edges = cells.into_iter().enumerate().map(|(k, c)| (c, src[k], tgt[k])).collect();
    Scwol::new(vertices, edges, compose)
}

/// Edge `(X, Y, ω)` of the Dyer scwol: X ⊊ Y spherical, ω ⊆ (Y∖X) ∩ V∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyerEdge {
    pub from: VertexSet,
    pub to: VertexSet,
    pub omega: VertexSet,
}

impl DyerEdge {
    pub fn display(&self, g: &DyerGraph) -> String {
        format!(
            "({},{},{})",
            g.format_set(self.from),
            g.format_set(self.to),
            g.format_set(self.omega)
        )
    }
}

pub type DyerScwol = Scwol<VertexSet, DyerEdge>;

/// The scwol 𝒳(Γ) on the spherical subsets, composing as
/// `(Y,Z,ω′)(X,Y,ω) = (X,Z,ω ∪ ω′)`.
pub fn dyer_scwol(g: &DyerGraph) -> DyerScwol {
    let vinf = g.partition().vinf;
    let sets = g.spherical_subsets();
    let vindex: HashMap<VertexSet, usize> = sets.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let mut edges = Vec::new();
    for &x in &sets {
        for &y in &sets {
            if x != y && x.is_subset(y) {
                for omega in y.difference(x).intersection(vinf).subsets() {
                    edges.push((DyerEdge { from: x, to: y, omega }, vindex[&x], vindex[&y]));
                }
            }
        }
    }
    let eindex: HashMap<DyerEdge, usize> = edges.iter().enumerate().map(|(k, e)| (e.0, k)).collect();
    let mut compose = HashMap::new();
    for (a, ea) in edges.iter().enumerate() {
        for (b, eb) in edges.iter().enumerate() {
            if eb.0.to == ea.0.from {
                let c = DyerEdge { from: eb.0.from, to: ea.0.to, omega: ea.0.omega.union(eb.0.omega) };
                compose.insert((a, b), eindex[&c]);
            }
        }
    }
    Scwol::new(sets, edges, compose)
}

/// Local groups D^f_X on the Dyer scwol, with the inclusions as edge maps.
#[derive(Clone, Debug)]
pub struct ComplexOfGroups {
    pub base: DyerScwol,
    pub local: Vec<Rc<FiniteGroupTable>>,
    /// Generators of each local group, as vertices of Γ.
    pub generators: Vec<Vec<usize>>,
    /// Per edge, the image of each generator of G_{i(α)} in G_{t(α)}.
    pub psi: Vec<Vec<(usize, usize)>>,
}

/// The morphism to D: inclusions on local groups, φ(X,Y,ω) = Π_{v∈ω} x_v.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub edge_elements: Vec<SyllableWord>,
}

/// Π_{v ∈ ω} x_v in increasing vertex order.
pub fn phi_of(omega: VertexSet) -> SyllableWord {
    SyllableWord(omega.iter().map(|v| Syllable::new(v, 1)).collect())
}

pub fn dyer_complex_of_groups(engine: &WordEngine) -> Result<(ComplexOfGroups, Morphism)> {
    let base = dyer_scwol(engine.graph());
    let mut local = Vec::new();
    let mut generators = Vec::new();
    for &x in base.vertices() {
        let fx = engine.finite_part(x);
        local.push(engine.finite_group(fx)?);
        generators.push(fx.iter().collect());
    }
    let psi = base
        .edges()
        .iter()
        .map(|e| engine.finite_part(e.from).iter().map(|v| (v, v)).collect())
        .collect();
    let edge_elements = base.edges().iter().map(|e| phi_of(e.omega)).collect();
    Ok((ComplexOfGroups { base, local, generators, psi }, Morphism { edge_elements }))
}

impl ComplexOfGroups {
    /// Each ψ_α is injective with image in G_{t(α)}, and ψ_{αβ} = ψ_α ψ_β.
    pub fn check(&self) -> std::result::Result<(), String> {
        let b = &self.base;
        for a in 0..b.edge_count() {
            let (src, tgt) = (b.i(a), b.t(a));
            let target_gens = &self.generators[tgt];
            let mut steps = Vec::new();
            for &(s, img) in &self.psi[a] {
                if !self.generators[src].contains(&s) || !target_gens.contains(&img) {
                    return Err(format!("edge {a}: generator map leaves the local groups"));
                }
                let t = &self.local[tgt];
                steps.extend((0..t.steps().len()).filter(|&k| t.steps()[k].gen == img));
            }
            // the subgroup generated by the images has the order of the source group
            let t = &self.local[tgt];
            let mut seen = vec![false; t.order()];
            seen[0] = true;
            let mut queue = VecDeque::from([0]);
            let mut count = 1;
            while let Some(e) = queue.pop_front() {
                for &s in &steps {
                    let f = t.right_mul(e, s);
                    if !seen[f] {
                        seen[f] = true;
                        count += 1;
                        queue.push_back(f);
                    }
                }
            }
            if count != self.local[src].order() {
                return Err(format!("edge {a}: ψ is not injective"));
            }
        }
        for a in 0..b.edge_count() {
            for c in b.incoming(b.i(a)) {
                let ac = b.compose(a, c).ok_or("missing composite")?;
                for &(s, img) in &self.psi[c] {
                    let via = self.psi[a].iter().find(|p| p.0 == img).map(|p| p.1);
                    let direct = self.psi[ac].iter().find(|p| p.0 == s).map(|p| p.1);
                    if via != direct {
                        return Err(format!("ψ not compatible with composition ({a},{c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

impl Morphism {
    /// Ad(φ(α))∘φ_{i(α)} = φ_{t(α)}∘ψ_α on generators, φ(αβ) = φ(α)φ(β), and
    /// each local group maps injectively (its canonical words are reduced in D).
    pub fn check(&self, cx: &ComplexOfGroups, engine: &WordEngine) -> Result<std::result::Result<(), String>> {
        let b = &cx.base;
        for a in 0..b.edge_count() {
            let g = &self.edge_elements[a];
            for &(s, img) in &cx.psi[a] {
                let w = g
                    .concat(&SyllableWord::letter(s, 1))
                    .concat(&g.inverse())
                    .concat(&SyllableWord::letter(img, -1));
                if !engine.is_trivial(&w)? {
                    return Ok(Err(format!("edge {a}: conjugation condition fails")));
                }
            }
            for c in b.incoming(b.i(a)) {
                let ac = b.compose(a, c).expect("composable");
                let w = self.edge_elements[ac]
                    .inverse()
                    .concat(g)
                    .concat(&self.edge_elements[c]);
                if !engine.is_trivial(&w)? {
                    return Ok(Err(format!("φ not multiplicative on ({a},{c})")));
                }
            }
        }
        for t in &cx.local {
            for w in t.elements() {
                if engine.reduce(w)? != *w {
                    return Ok(Err(format!("local element {} is not reduced in D", engine.display(w))));
                }
            }
        }
        Ok(Ok(()))
    }
}

/// The coset vertex `(g D^f_X, X)` of the development, with `g` the least
/// reduced word of the coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetVertex {
    pub rep: SyllableWord,
    pub set: VertexSet,
}

impl CosetVertex {
    pub fn identity(set: VertexSet) -> Self {
        CosetVertex { rep: SyllableWord::empty(), set }
    }

    pub fn display(&self, g: &DyerGraph) -> String {
        let w = if self.rep.is_empty() { "e".to_string() } else { self.rep.display(g.ids()) };
        format!("({w};{})", g.format_set(self.set))
    }
}

/// Edge `(g D^f_X, (X,Y,ω))`, stored with the rep of its source coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetEdge {
    pub rep: SyllableWord,
    pub edge: DyerEdge,
}

/// Incidence in the development 𝒞 = D(𝒳(Γ), φ), computed on demand.
pub struct Development<'e, 'g> {
    engine: &'e WordEngine<'g>,
    base: DyerScwol,
    order: HashMap<VertexSet, usize>,
}

impl<'e, 'g> Development<'e, 'g> {
    pub fn new(engine: &'e WordEngine<'g>) -> Self {
        let base = dyer_scwol(engine.graph());
        let order = base.vertices().iter().enumerate().map(|(k, &s)| (s, k)).collect();
        Development { engine, base, order }
    }

    pub fn engine(&self) -> &'e WordEngine<'g> {
        self.engine
    }

    pub fn base(&self) -> &DyerScwol {
        &self.base
    }

    pub fn vertex(&self, g: &SyllableWord, x: VertexSet) -> Result<CosetVertex> {
        Ok(CosetVertex { rep: self.engine.coset_rep(g, x)?, set: x })
    }

    /// t(g, (X,Y,ω)) = (g φ(ω)⁻¹ D^f_Y, Y).
    pub fn target(&self, rep: &SyllableWord, e: &DyerEdge) -> Result<CosetVertex> {
        self.vertex(&rep.concat(&phi_of(e.omega).inverse()), e.to)
    }

    /// Outgoing edges of `v` with their targets.
    pub fn outgoing(&self, v: &CosetVertex) -> Result<Vec<(DyerEdge, CosetVertex)>> {
        let k = self.order[&v.set];
        self.base
            .outgoing(k)
            .map(|a| {
                let e = *self.base.edge(a);
                Ok((e, self.target(&v.rep, &e)?))
            })
            .collect()
    }

    /// Incoming edges of `v = (gD^f_X, X)`: sources `(g d φ(ω) D^f_Z, Z)` for
    /// d ∈ D^f_X and each edge (Z, X, ω).
    pub fn incoming(&self, v: &CosetVertex) -> Result<Vec<(CosetVertex, DyerEdge)>> {
        let k = self.order[&v.set];
        let table = self.engine.finite_group(self.engine.finite_part(v.set))?;
        let mut out = BTreeSet::new();
        for a in self.base.incoming(k) {
            let e = *self.base.edge(a);
            let phi = phi_of(e.omega);
            for d in table.elements() {
                let src = self.vertex(&v.rep.concat(d).concat(&phi), e.from)?;
                out.insert((src, e));
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Vertices (g, X) for g in the element ball of radius `r`.
    pub fn ball(&self, r: usize) -> Result<DevelopmentBall> {
        let elements = self.engine.ball(r)?;
        let mut verts = BTreeSet::new();
        for h in &elements.elements {
            for &x in self.base.vertices() {
                verts.insert((self.order[&x], self.vertex(h, x)?));
            }
        }
        // order: by subset, then shortlex on reps
        let mut verts: Vec<(usize, CosetVertex)> = verts.into_iter().collect();
        verts.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.rep.shortlex_cmp(&b.1.rep)));
        let verts: Vec<CosetVertex> = verts.into_iter().map(|p| p.1).collect();
        let index: HashMap<CosetVertex, usize> =
            verts.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let mut edges = Vec::new();
        let mut eindex: HashMap<(usize, DyerEdge), usize> = HashMap::new();
        let mut interior = Vec::with_capacity(verts.len());
        for (k, v) in verts.iter().enumerate() {
            let mut inside = true;
            for (e, t) in self.outgoing(v)? {
                match index.get(&t) {
                    Some(&ti) => {
                        eindex.insert((k, e), edges.len());
                        edges.push((CosetEdge { rep: v.rep.clone(), edge: e }, k, ti));
                    }
                    None => inside = false,
                }
            }
            if inside {
                inside = self.incoming(v)?.iter().all(|(s, _)| index.contains_key(s));
            }
            interior.push(inside);
        }
        let mut into: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
        for (b, e) in edges.iter().enumerate() {
            into[e.2].push(b);
        }
        let mut compose = HashMap::new();
        for (a, ea) in edges.iter().enumerate() {
            for &b in &into[ea.1] {
                let eb = &edges[b];
                let c = DyerEdge {
                    from: eb.0.edge.from,
                    to: ea.0.edge.to,
                    omega: ea.0.edge.omega.union(eb.0.edge.omega),
                };
                let ab = *eindex
                    .get(&(eb.1, c))
                    .expect("composite of ball edges lies in the ball");
                compose.insert((a, b), ab);
            }
        }
        Ok(DevelopmentBall {
            radius: r,
            scwol: Scwol::new(verts, edges, compose),
            index,
            interior,
        })
    }
}

/// Finite portion of the development, with interior flags (a vertex is
/// interior when all its neighbours in 𝒞 lie in the ball).
#[derive(Clone, Debug)]
pub struct DevelopmentBall {
    pub radius: usize,
    pub scwol: Scwol<CosetVertex, CosetEdge>,
    index: HashMap<CosetVertex, usize>,
    pub interior: Vec<bool>,
}

pub fn development_ball(engine: &WordEngine, r: usize) -> Result<DevelopmentBall> {
    Development::new(engine).ball(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    In,
    Out,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Neighbourhood {
    Star,
    Link,
}

impl DevelopmentBall {
    pub fn index_of(&self, v: &CosetVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Full subscwol on the in- or out-neighbours of an interior vertex,
    /// with the vertex itself for the star.
    pub fn star_link(
        &self,
        v: usize,
        direction: Direction,
        which: Neighbourhood,
        g: &DyerGraph,
    ) -> Result<Scwol<CosetVertex, CosetEdge>> {
        if !self.interior[v] {
            return Err(Error::BoundaryVertex(self.scwol.vertex(v).display(g)));
        }
        let s = &self.scwol;
        let mut keep: BTreeSet<usize> = match direction {
            Direction::In => s.incoming(v).map(|a| s.i(a)).collect(),
            Direction::Out => s.outgoing(v).map(|a| s.t(a)).collect(),
        };
        if which == Neighbourhood::Star {
            keep.insert(v);
        }
        Ok(s.full_subscwol(&keep.into_iter().collect::<Vec<_>>()))
    }

    /// One line per vertex and per edge.
    pub fn to_text(&self, g: &DyerGraph) -> String {
        let s = &self.scwol;
        let mut out = format!(
            "radius {}: {} vertices ({} interior), {} edges\n",
            self.radius,
            s.vertex_count(),
            self.interior.iter().filter(|&&b| b).count(),
            s.edge_count()
        );
        for (k, v) in s.vertices().iter().enumerate() {
            let tag = if self.interior[k] { "interior" } else { "boundary" };
            writeln!(out, "vertex {} {tag}", v.display(g)).unwrap();
        }
        for a in 0..s.edge_count() {
            writeln!(
                out,
                "edge {} {} -> {}",
                s.edge(a).edge.display(g),
                s.vertex(s.i(a)).display(g),
                s.vertex(s.t(a)).display(g)
            )
            .unwrap();
        }
        out
    }
}

/// Presentation of π₁ of the complex of groups relative to a maximal tree
/// `tree` (default: breadth-first from the first vertex). Generators are the
/// local generators and α⁺, α⁻ for every edge.
pub fn fundamental_group_presentation(
    cx: &ComplexOfGroups,
    g: &DyerGraph,
    tree: Option<&[usize]>,
) -> Result<Presentation> {
    let b = &cx.base;
    if !b.is_connected() {
        return Err(Error::NotConnected);
    }
    let tree: Vec<usize> = match tree {
        Some(t) => {
            check_tree(b, t)?;
            t.to_vec()
        }
        None => b.bfs_tree(0),
    };
    let mut names = Vec::new();
    let mut local_index: HashMap<(usize, usize), usize> = HashMap::new();
    for (x, gens) in cx.generators.iter().enumerate() {
        for &v in gens {
            local_index.insert((x, v), names.len());
            names.push(format!("{}@{}", g.id(v), g.format_set(*b.vertex(x))));
        }
    }
    let plus = |a: usize| names.len() + 2 * a;
    let edge_names: Vec<String> = b
        .edges()
        .iter()
        .flat_map(|e| {
            let base = format!("[{}>{}|{}]", g.format_set(e.from), g.format_set(e.to), g.format_set(e.omega));
            [format!("{base}+"), format!("{base}-")]
        })
        .collect();
    let minus = |a: usize| plus(a) + 1;
    let l = |gen: usize, exp: i64| Syllable::new(gen, exp);
    let mut relators = Vec::new();
    for (x, gens) in cx.generators.iter().enumerate() {
        let set: VertexSet = gens.iter().copied().collect();
        let local = dyer_presentation(&g.induced(set));
        for r in local.relators {
            relators.push(SyllableWord(
                r.syllables().iter().map(|s| l(local_index[&(x, gens[s.gen])], s.exp)).collect(),
            ));
        }
    }
    for a in 0..b.edge_count() {
        relators.push(SyllableWord(vec![l(plus(a), 1), l(minus(a), 1)]));
    }
    for a in 0..b.edge_count() {
        for c in b.incoming(b.i(a)) {
            let ac = b.compose(a, c).expect("composable");
            relators.push(SyllableWord(vec![l(plus(a), 1), l(plus(c), 1), l(plus(ac), -1)]));
        }
    }
    for a in 0..b.edge_count() {
        for &(s, img) in &cx.psi[a] {
            // ψ_α(s) = α⁺ s α⁻
            relators.push(SyllableWord(vec![
                l(local_index[&(b.t(a), img)], 1),
                l(minus(a), -1),
                l(local_index[&(b.i(a), s)], -1),
                l(plus(a), -1),
            ]));
        }
    }
    for &a in &tree {
        relators.push(SyllableWord(vec![l(plus(a), 1)]));
    }
    let mut generators = names;
    generators.extend(edge_names);
    Ok(Presentation { generators, relators })
}

fn check_tree<V, E>(b: &Scwol<V, E>, tree: &[usize]) -> Result<()> {
    let n = b.vertex_count();
    if tree.len() + 1 != n {
        return Err(Error::NotATree(format!("{} edges for {n} vertices", tree.len())));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &a in tree {
        if a >= b.edge_count() {
            return Err(Error::NotATree(format!("no edge {a}")));
        }
        let (x, y) = (find(&mut parent, b.i(a)), find(&mut parent, b.t(a)));
        if x == y {
            return Err(Error::NotATree("cycle".into()));
        }
        parent[x] = y;
    }
    Ok(())
}
