//! The piecewise Euclidean complex Σ: elementary blocks, finite balls glued
//! from them, edge labels, vertex links and the metric flag certificate.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::graph::{DyerGraph, ExtendedM, Order, VertexSet};
use crate::linalg::{is_positive_definite, PD_PIVOT_TOL};
use crate::polytope::{canonical_representation, polytope, CoxeterPolytope};
use crate::scwol::{phi_of, CosetVertex, Development};
use crate::word::{Syllable, SyllableWord, WordEngine};

/// Tolerance for comparing distances of glued vertex pairs.
pub const GLUE_TOL: f64 = 1e-9;

/// Tolerance for link edge lengths against π/2.
pub const ANGLE_TOL: f64 = 1e-12;

/// A vertex of a star factor: the center `c_v` or the tip `x_v^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StarPoint {
    Center,
    Tip(u32),
}

/// Vertex `(w, λ, hZ)` of rC(Y): `w` indexes the group table of D_{Y₂},
/// `star` has one entry per vertex of Y_p in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockVertex {
    pub w: usize,
    pub lambda: VertexSet,
    pub star: Vec<StarPoint>,
}

/// A cell of rC(Y), as a set of block-vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCell {
    pub dim: usize,
    pub vertices: Vec<usize>,
}

/// rC(Y) = Cox(Y₂) × [0,1]^{|Y∞|} × Π_{v∈Y_p} star(v).
#[derive(Clone, Debug)]
pub struct ElementaryBlock {
    pub y: VertexSet,
    pub y2: VertexSet,
    pub yinf: VertexSet,
    pub yp: Vec<usize>,
    orders: Vec<u32>,
    cox: Option<CoxeterPolytope>,
    /// Elements of D_{Y₂} as words over Γ, indexed like the table.
    cox_words: Vec<SyllableWord>,
    pub vertices: Vec<BlockVertex>,
    index: HashMap<BlockVertex, usize>,
    /// `(a, b, label)` with `a < b`.
    pub edges: Vec<(usize, usize, usize)>,
    neighbours: Vec<Vec<(usize, usize)>>,
}

pub fn elementary_block(engine: &WordEngine, y: VertexSet) -> Result<ElementaryBlock> {
    let g = engine.graph();
    if !g.is_spherical_set(y) {
        return Err(Error::NotSpherical(g.format_set(y)));
    }
    let part = g.partition();
    let y2 = y.intersection(part.v2);
    let yinf = y.intersection(part.vinf);
    let yp: Vec<usize> = y.intersection(part.vp).iter().collect();
    let orders: Vec<u32> = yp
        .iter()
        .map(|&v| match g.order(v) {
            Order::Finite(f) => f,
            Order::Infinite => unreachable!("V_p vertices have finite order"),
        })
        .collect();
    let y2_ids: Vec<usize> = y2.iter().collect();
    let (cox, cox_words) = if y2.is_empty() {
        (None, vec![SyllableWord::empty()])
    } else {
        let sub = g.induced(y2);
        let rep = canonical_representation(&sub)?;
        let p = polytope(&sub, &rep, engine.budget())?;
        let words = p
            .table()
            .elements()
            .iter()
            .map(|w| {
                SyllableWord(w.syllables().iter().map(|s| Syllable::new(y2_ids[s.gen], s.exp)).collect())
            })
            .collect();
        (Some(p), words)
    };
    let mut stars: Vec<Vec<StarPoint>> = vec![Vec::new()];
    for &f in &orders {
        stars = stars
            .into_iter()
            .flat_map(|s| {
                std::iter::once(StarPoint::Center)
                    .chain((0..f).map(StarPoint::Tip))
                    .map(move |p| {
                        let mut s = s.clone();
                        s.push(p);
                        s
                    })
            })
            .collect();
    }
    let mut vertices = Vec::new();
    for w in 0..cox_words.len() {
        for lambda in yinf.subsets() {
            for s in &stars {
                vertices.push(BlockVertex { w, lambda, star: s.clone() });
            }
        }
    }
    let index: HashMap<BlockVertex, usize> =
        vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let mut edges = Vec::new();
    for (a, v) in vertices.iter().enumerate() {
        let mut push = |u: BlockVertex, label: usize| {
            let b = index[&u];
            if a < b {
                edges.push((a, b, label));
            }
        };
        if let Some(p) = &cox {
            for (k, &s) in y2_ids.iter().enumerate() {
                let step = p.table().steps().iter().position(|x| x.gen == k).expect("generator step");
                push(BlockVertex { w: p.table().right_mul(v.w, step), ..v.clone() }, s);
            }
        }
        for s in yinf.iter() {
            push(BlockVertex { lambda: v.lambda.symmetric_difference(VertexSet::singleton(s)), ..v.clone() }, s);
        }
        for (k, &s) in yp.iter().enumerate() {
            if v.star[k] == StarPoint::Center {
                for t in 0..orders[k] {
                    let mut star = v.star.clone();
                    star[k] = StarPoint::Tip(t);
                    push(BlockVertex { star, ..v.clone() }, s);
                }
            }
        }
    }
    edges.sort_unstable();
    let mut neighbours = vec![Vec::new(); vertices.len()];
    for &(a, b, l) in &edges {
        neighbours[a].push((b, l));
        neighbours[b].push((a, l));
    }
    Ok(ElementaryBlock { y, y2, yinf, yp, orders, cox, cox_words, vertices, index, edges, neighbours })
}

impl ElementaryBlock {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn dimension(&self) -> usize {
        self.y.len()
    }

    pub fn index_of(&self, v: &BlockVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn neighbours(&self, a: usize) -> &[(usize, usize)] {
        &self.neighbours[a]
    }

    /// `(w φ(λ) h, Z)`: the word whose coset `·D^f_Z` is j(w, λ, hZ).
    pub fn word_of(&self, a: usize) -> (SyllableWord, VertexSet) {
        let v = &self.vertices[a];
        let mut word = self.cox_words[v.w].concat(&phi_of(v.lambda));
        let mut z = VertexSet::EMPTY;
        for (k, &s) in self.yp.iter().enumerate() {
            match v.star[k] {
                StarPoint::Center => z.insert(s),
                StarPoint::Tip(0) => {}
                StarPoint::Tip(t) => word.0.push(Syllable::new(s, t as i64)),
            }
        }
        (word, z)
    }

    /// ℓ₂ product of the factor metrics; star edges and cube edges have
    /// length 1, tips of one star are 2 apart.
    pub fn distance(&self, a: usize, b: usize) -> f64 {
        let (u, v) = (&self.vertices[a], &self.vertices[b]);
        let dc = self.cox.as_ref().map_or(0.0, |p| p.distance(u.w, v.w));
        let mut sq = dc * dc + u.lambda.symmetric_difference(v.lambda).len() as f64;
        for (p, q) in u.star.iter().zip(&v.star) {
            sq += match (p, q) {
                _ if p == q => 0.0,
                (StarPoint::Tip(_), StarPoint::Tip(_)) => 4.0,
                _ => 1.0,
            };
        }
        sq.sqrt()
    }

    /// Cells as products of a Cox(Y₂) face, a subcube and a star cell per
    /// v ∈ Y_p.
    pub fn cells(&self) -> Vec<BlockCell> {
        let cox_faces: Vec<(usize, Vec<usize>)> = match &self.cox {
            Some(p) => p.faces().iter().map(|f| (f.subset.len(), f.members.clone())).collect(),
            None => vec![(0, vec![0])],
        };
        let mut cube_faces: Vec<(usize, Vec<VertexSet>)> = Vec::new();
        for free in self.yinf.subsets() {
            for base in self.yinf.difference(free).subsets() {
                cube_faces.push((free.len(), free.subsets().map(|s| base.union(s)).collect()));
            }
        }
        let mut star_cells: Vec<(usize, Vec<Vec<StarPoint>>)> = vec![(0, vec![Vec::new()])];
        for &f in &self.orders {
            let mut options: Vec<(usize, Vec<StarPoint>)> = vec![(0, vec![StarPoint::Center])];
            for t in 0..f {
                options.push((0, vec![StarPoint::Tip(t)]));
                options.push((1, vec![StarPoint::Center, StarPoint::Tip(t)]));
            }
            let mut next = Vec::new();
            for (d, pts) in &star_cells {
                for (e, opt) in &options {
                    let mut combined = Vec::new();
                    for p in pts {
                        for &o in opt {
                            let mut q = p.clone();
                            q.push(o);
                            combined.push(q);
                        }
                    }
                    next.push((d + e, combined));
                }
            }
            star_cells = next;
        }
        let mut cells = Vec::new();
        for (dc, ws) in &cox_faces {
            for (dq, lambdas) in &cube_faces {
                for (ds, stars) in &star_cells {
                    let mut vs = Vec::new();
                    for &w in ws {
                        for &lambda in lambdas {
                            for star in stars {
                                vs.push(self.index[&BlockVertex { w, lambda, star: star.clone() }]);
                            }
                        }
                    }
                    vs.sort_unstable();
                    cells.push(BlockCell { dim: dc + dq + ds, vertices: vs });
                }
            }
        }
        cells
    }

    /// Coordinates for drawing: Cox(Y₂) in orthonormal coordinates, the cube
    /// as 0/1 coordinates, each star flat in its own plane.
    pub fn coordinates(&self, a: usize) -> Vec<f64> {
        let v = &self.vertices[a];
        let mut out = Vec::new();
        if let Some(p) = &self.cox {
            out.extend(p.euclidean(&p.points()[v.w]).iter());
        }
        out.extend(self.yinf.iter().map(|s| if v.lambda.contains(s) { 1.0 } else { 0.0 }));
        for (k, pt) in v.star.iter().enumerate() {
            match *pt {
                StarPoint::Center => out.extend([0.0, 0.0]),
                StarPoint::Tip(t) => {
                    let th = 2.0 * PI * t as f64 / self.orders[k] as f64;
                    out.extend([th.cos(), th.sin()]);
                }
            }
        }
        out
    }

    pub fn ambient_dimension(&self) -> usize {
        self.y2.len() + self.yinf.len() + 2 * self.yp.len()
    }
}

/// j_base: block vertices of rC(Y) to vertices of Σ(base·Y).
pub fn vertex_bijection(
    engine: &WordEngine,
    block: &ElementaryBlock,
    base: &SyllableWord,
) -> Result<Vec<CosetVertex>> {
    (0..block.vertex_count())
        .map(|a| {
            let (w, z) = block.word_of(a);
            Ok(CosetVertex { rep: engine.coset_rep(&base.concat(&w), z)?, set: z })
        })
        .collect()
}

/// V_p(gY): the vertices of St_in(gY, 𝒞) whose subset lies in V_p.
pub fn vp_of(dev: &Development, gy: &CosetVertex) -> Result<BTreeSet<CosetVertex>> {
    let vp = dev.engine().graph().partition().vp;
    let mut out: BTreeSet<CosetVertex> =
        dev.incoming(gy)?.into_iter().map(|(s, _)| s).filter(|s| s.set.is_subset(vp)).collect();
    if gy.set.is_subset(vp) {
        out.insert(gy.clone());
    }
    Ok(out)
}

/// Images of j_base are distinct and exhaust V_p(base·Y).
pub fn verify_bijection(dev: &Development, block: &ElementaryBlock, base: &SyllableWord) -> Result<bool> {
    let images = vertex_bijection(dev.engine(), block, base)?;
    let distinct: BTreeSet<CosetVertex> = images.iter().cloned().collect();
    if distinct.len() != images.len() {
        return Ok(false);
    }
    let gy = dev.vertex(base, block.y)?;
    Ok(distinct == vp_of(dev, &gy)?)
}

/// Label of the Σ-edge between `a = kX` and `b = lZ`, from the coset data
/// alone: same subset and k⁻¹l a generator (V₂) or x_v^{±1} (V∞), or
/// subsets differing by one v ∈ V_p with k⁻¹l ∈ ⟨x_v⟩.
pub fn edge_label(engine: &WordEngine, a: &CosetVertex, b: &CosetVertex) -> Result<usize> {
    let g = engine.graph();
    let part = g.partition();
    let unlabelable = || Error::UnlabelableEdge(format!("{} -- {}", a.display(g), b.display(g)));
    let da = engine.finite_group(engine.finite_part(a.set))?;
    let db = engine.finite_group(engine.finite_part(b.set))?;
    let middle = a.rep.inverse().concat(&b.rep);
    let mut quotients = BTreeSet::new();
    for d1 in da.elements() {
        for d2 in db.elements() {
            quotients.insert(engine.reduce(&d1.concat(&middle).concat(d2))?);
        }
    }
    let single = |w: &SyllableWord| -> Option<Syllable> {
        match w.syllables() {
            [s] => Some(*s),
            _ => None,
        }
    };
    if a.set == b.set {
        for q in &quotients {
            if let Some(s) = single(q) {
                if (part.v2.contains(s.gen) && s.exp == 1) || (part.vinf.contains(s.gen) && s.exp.abs() == 1) {
                    return Ok(s.gen);
                }
            }
        }
        return Err(unlabelable());
    }
    let diff = a.set.symmetric_difference(b.set);
    let nested = a.set.is_subset(b.set) || b.set.is_subset(a.set);
    if nested && diff.len() == 1 {
        let v = diff.iter().next().expect("one vertex");
        if part.vp.contains(v) && quotients.iter().any(|q| q.is_empty() || single(q).is_some_and(|s| s.gen == v)) {
            return Ok(v);
        }
    }
    Err(unlabelable())
}

/// A block Σ(gY) placed in a ball: `members[k]` is the ball vertex of the
/// k-th block vertex.
#[derive(Clone, Debug)]
pub struct PlacedBlock {
    pub at: CosetVertex,
    pub members: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaEdge {
    pub a: usize,
    pub b: usize,
    pub label: usize,
}

/// Union of blocks reached in `radius` hops from (ε, ∅): each hop adds every
/// block Σ(gY) containing a vertex reached so far.
#[derive(Clone, Debug)]
pub struct SigmaBall {
    pub radius: usize,
    pub vertices: Vec<CosetVertex>,
    index: HashMap<CosetVertex, usize>,
    pub blocks: Vec<PlacedBlock>,
    block_index: HashMap<CosetVertex, usize>,
    shapes: HashMap<VertexSet, Rc<ElementaryBlock>>,
    pub edges: Vec<SigmaEdge>,
    edge_index: HashMap<(usize, usize), usize>,
    /// Blocks containing each vertex.
    pub containing: Vec<Vec<usize>>,
    pub interior: Vec<bool>,
}

/// Blocks containing the Σ-vertex `v`: Σ(v) and Σ(t(α)) for α out of v.
pub fn blocks_at(dev: &Development, v: &CosetVertex) -> Result<BTreeSet<CosetVertex>> {
    let mut out: BTreeSet<CosetVertex> = dev.outgoing(v)?.into_iter().map(|(_, t)| t).collect();
    out.insert(v.clone());
    Ok(out)
}

pub fn sigma_ball(engine: &WordEngine, radius: usize) -> Result<SigmaBall> {
    let dev = Development::new(engine);
    let mut ball = SigmaBall {
        radius,
        vertices: Vec::new(),
        index: HashMap::new(),
        blocks: Vec::new(),
        block_index: HashMap::new(),
        shapes: HashMap::new(),
        edges: Vec::new(),
        edge_index: HashMap::new(),
        containing: Vec::new(),
        interior: Vec::new(),
    };
    let mut frontier = vec![ball.add_vertex(CosetVertex::identity(VertexSet::EMPTY))];
    for _ in 0..radius {
        let mut next = Vec::new();
        for v in frontier {
            for gy in blocks_at(&dev, &ball.vertices[v].clone())? {
                if ball.block_index.contains_key(&gy) {
                    continue;
                }
                let shape = match ball.shapes.get(&gy.set) {
                    Some(s) => s.clone(),
                    None => {
                        let s = Rc::new(elementary_block(engine, gy.set)?);
                        ball.shapes.insert(gy.set, s.clone());
                        s
                    }
                };
                let mut members = Vec::with_capacity(shape.vertex_count());
                for cv in vertex_bijection(engine, &shape, &gy.rep)? {
                    let known = ball.index.contains_key(&cv);
                    let k = ball.add_vertex(cv);
                    if !known {
                        next.push(k);
                    }
                    members.push(k);
                }
                let b = ball.blocks.len();
                for &m in &members {
                    ball.containing[m].push(b);
                }
                for &(x, y, label) in &shape.edges {
                    let key = (members[x].min(members[y]), members[x].max(members[y]));
                    match ball.edge_index.get(&key) {
                        Some(&e) if ball.edges[e].label != label => {
                            return Err(Error::UnlabelableEdge(format!(
                                "conflicting labels on {} -- {}",
                                ball.vertices[key.0].display(engine.graph()),
                                ball.vertices[key.1].display(engine.graph())
                            )));
                        }
                        Some(_) => {}
                        None => {
                            ball.edge_index.insert(key, ball.edges.len());
                            ball.edges.push(SigmaEdge { a: key.0, b: key.1, label });
                        }
                    }
                }
                ball.block_index.insert(gy.clone(), b);
                ball.blocks.push(PlacedBlock { at: gy, members });
            }
        }
        frontier = next;
    }
    for v in 0..ball.vertices.len() {
        let all_in = blocks_at(&dev, &ball.vertices[v])?.iter().all(|b| ball.block_index.contains_key(b));
        ball.interior.push(all_in);
    }
    Ok(ball)
}

impl SigmaBall {
    fn add_vertex(&mut self, v: CosetVertex) -> usize {
        if let Some(&k) = self.index.get(&v) {
            return k;
        }
        self.index.insert(v.clone(), self.vertices.len());
        self.vertices.push(v);
        self.containing.push(Vec::new());
        self.vertices.len() - 1
    }

    pub fn index_of(&self, v: &CosetVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn block_of(&self, at: &CosetVertex) -> Option<usize> {
        self.block_index.get(at).copied()
    }

    pub fn shape(&self, b: usize) -> &ElementaryBlock {
        &self.shapes[&self.blocks[b].at.set]
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<&SigmaEdge> {
        self.edge_index.get(&(a.min(b), a.max(b))).map(|&e| &self.edges[e])
    }

    pub fn interior_count(&self) -> usize {
        self.interior.iter().filter(|&&b| b).count()
    }

    /// Neighbours of `v` with edge labels, sorted.
    pub fn neighbours(&self, v: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|e| match () {
                _ if e.a == v => Some((e.b, e.label)),
                _ if e.b == v => Some((e.a, e.label)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.at.set.len()).max().unwrap_or(0)
    }

    /// Vertex-set law: each block's vertex set, computed through j_g, equals
    /// V_p(gY) computed from the development, and the ball's vertices are
    /// the union of these sets. Returns a description of the first failure.
    pub fn check_vertex_sets(&self, dev: &Development) -> Result<Option<String>> {
        let g = dev.engine().graph();
        let mut union = BTreeSet::new();
        for b in &self.blocks {
            let images: BTreeSet<CosetVertex> = b.members.iter().map(|&k| self.vertices[k].clone()).collect();
            if images.len() != b.members.len() {
                return Ok(Some(format!("j is not injective on block {}", b.at.display(g))));
            }
            let expected = vp_of(dev, &b.at)?;
            if images != expected {
                return Ok(Some(format!("block {} has the wrong vertex set", b.at.display(g))));
            }
            union.extend(expected);
        }
        let all: BTreeSet<CosetVertex> = self.vertices.iter().cloned().collect();
        if !self.blocks.is_empty() && all != union {
            return Ok(Some("ball vertices differ from the union of block vertex sets".into()));
        }
        Ok(None)
    }

    /// Gluing: for each block Σ(gY) and hZ ∈ St_in(gY), V_p(hZ) ⊆ V_p(gY),
    /// distances agree to [`GLUE_TOL`], and cells and edge labels of Σ(hZ)
    /// are cells and labels of Σ(gY).
    pub fn check_gluing(&self, dev: &Development) -> Result<Option<String>> {
        let engine = dev.engine();
        let g = engine.graph();
        let mut sub_shapes: HashMap<VertexSet, Rc<ElementaryBlock>> = self.shapes.clone();
        for (bi, b) in self.blocks.iter().enumerate() {
            let big = self.shape(bi);
            let local: HashMap<&CosetVertex, usize> =
                b.members.iter().enumerate().map(|(k, &m)| (&self.vertices[m], k)).collect();
            let big_cells: HashSet<Vec<usize>> = big
                .cells()
                .into_iter()
                .map(|c| {
                    let mut vs: Vec<usize> = c.vertices.iter().map(|&k| b.members[k]).collect();
                    vs.sort_unstable();
                    vs
                })
                .collect();
            let mut subs: Vec<CosetVertex> = dev.incoming(&b.at)?.into_iter().map(|(s, _)| s).collect();
            subs.dedup();
            for hz in subs {
                let small = match sub_shapes.get(&hz.set) {
                    Some(s) => s.clone(),
                    None => {
                        let s = Rc::new(elementary_block(engine, hz.set)?);
                        sub_shapes.insert(hz.set, s.clone());
                        s
                    }
                };
                let images = vertex_bijection(engine, &small, &hz.rep)?;
                let mut into = Vec::with_capacity(images.len());
                for im in &images {
                    match local.get(im) {
                        Some(&k) => into.push(k),
                        None => {
                            return Ok(Some(format!(
                                "V_p({}) is not inside V_p({})",
                                hz.display(g),
                                b.at.display(g)
                            )))
                        }
                    }
                }
                for x in 0..into.len() {
                    for y in x + 1..into.len() {
                        let (d0, d1) = (small.distance(x, y), big.distance(into[x], into[y]));
                        if (d0 - d1).abs() > GLUE_TOL {
                            return Ok(Some(format!(
                                "distance {d0} in {} but {d1} in {}",
                                hz.display(g),
                                b.at.display(g)
                            )));
                        }
                    }
                }
                for &(x, y, label) in &small.edges {
                    let same = big.neighbours(into[x]).iter().any(|&(n, l)| n == into[y] && l == label);
                    if !same {
                        return Ok(Some(format!("edge label changes from {} into {}", hz.display(g), b.at.display(g))));
                    }
                }
                for c in small.cells() {
                    let mut vs: Vec<usize> = c.vertices.iter().map(|&k| b.members[into[k]]).collect();
                    vs.sort_unstable();
                    if !big_cells.contains(&vs) {
                        return Ok(Some(format!("a cell of {} is not a cell of {}", hz.display(g), b.at.display(g))));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Compares every ball edge label with [`edge_label`].
    pub fn check_edge_labels(&self, engine: &WordEngine) -> Result<Option<String>> {
        for e in &self.edges {
            let l = edge_label(engine, &self.vertices[e.a], &self.vertices[e.b])?;
            if l != e.label {
                let g = engine.graph();
                return Ok(Some(format!(
                    "edge {} -- {} built with label {} but labels as {}",
                    self.vertices[e.a].display(g),
                    self.vertices[e.b].display(g),
                    g.id(e.label),
                    g.id(l)
                )));
            }
        }
        Ok(None)
    }

    /// Labeled 1-skeleton.
    pub fn to_dot(&self, g: &DyerGraph) -> String {
        let mut out = String::from("graph sigma {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let shape = if self.interior[k] { "ellipse" } else { "box" };
            writeln!(out, "  \"{}\" [shape={shape}];", v.display(g)).unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}\"];",
                self.vertices[e.a].display(g),
                self.vertices[e.b].display(g),
                g.id(e.label)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Wavefront OBJ: blocks drawn in product coordinates, each translated
    /// to agree with the first already placed vertex it shares. Needs every
    /// block to fit in three coordinates.
    pub fn to_obj(&self) -> Result<String> {
        for b in 0..self.blocks.len() {
            let d = self.shape(b).ambient_dimension();
            if d > 3 {
                return Err(Error::InvalidArgument(format!(
                    "OBJ output needs blocks drawable in 3 coordinates, got {d}"
                )));
            }
        }
        let mut pos: Vec<Option<[f64; 3]>> = vec![None; self.vertices.len()];
        let pad = |c: Vec<f64>| [0, 1, 2].map(|k| c.get(k).copied().unwrap_or(0.0));
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (bi, b) in self.blocks.iter().enumerate() {
            let shape = self.shape(bi);
            let local: Vec<[f64; 3]> = (0..shape.vertex_count()).map(|k| pad(shape.coordinates(k))).collect();
            let shift = b
                .members
                .iter()
                .enumerate()
                .find_map(|(k, &m)| pos[m].map(|p| [0, 1, 2].map(|i| p[i] - local[k][i])))
                .unwrap_or([0.0; 3]);
            for (k, &m) in b.members.iter().enumerate() {
                if pos[m].is_none() {
                    pos[m] = Some([0, 1, 2].map(|i| local[k][i] + shift[i]));
                }
            }
            for cell in shape.cells().into_iter().filter(|c| c.dim == 2) {
                let cyc = polygon_order(shape, &cell.vertices);
                faces.insert(cyc.into_iter().map(|k| b.members[k]).collect());
            }
        }
        let mut out = format!("# Sigma ball: {} vertices, {} blocks\n", self.vertices.len(), self.blocks.len());
        for p in &pos {
            let p = p.unwrap_or([0.0; 3]);
            writeln!(out, "v {:.9} {:.9} {:.9}", p[0], p[1], p[2]).unwrap();
        }
        for e in &self.edges {
            writeln!(out, "l {} {}", e.a + 1, e.b + 1).unwrap();
        }
        for f in &faces {
            let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
            writeln!(out, "f {}", idx.join(" ")).unwrap();
        }
        Ok(out)
    }
}

/// Vertices of a 2-cell in cyclic order, walking its boundary edges.
fn polygon_order(shape: &ElementaryBlock, cell: &[usize]) -> Vec<usize> {
    let inside: HashSet<usize> = cell.iter().copied().collect();
    let mut cycle = vec![cell[0]];
    let mut prev = usize::MAX;
    let mut cur = cell[0];
    loop {
        let next = shape
            .neighbours(cur)
            .iter()
            .map(|&(n, _)| n)
            .find(|&n| inside.contains(&n) && n != prev);
        match next {
            Some(n) if n != cell[0] => {
                cycle.push(n);
                prev = cur;
                cur = n;
            }
            _ => break,
        }
    }
    cycle
}

/// Piecewise spherical link: vertices labeled by Γ, edges with lengths,
/// maximal simplices.
#[derive(Clone, Debug)]
pub struct LinkComplex {
    pub labels: Vec<usize>,
    /// Ball vertex behind each link vertex, when extracted from a ball.
    pub targets: Vec<Option<usize>>,
    pub edges: BTreeMap<(usize, usize), f64>,
    pub faces: Vec<Vec<usize>>,
}

impl LinkComplex {
    /// Builds a link from explicit data; `faces` are the simplices of
    /// dimension ≥ 1 (subsets are implied).
    pub fn new(labels: Vec<usize>, edges: Vec<(usize, usize, f64)>, faces: Vec<Vec<usize>>) -> Self {
        let n = labels.len();
        LinkComplex {
            labels,
            targets: vec![None; n],
            edges: edges.into_iter().map(|(a, b, d)| ((a.min(b), a.max(b)), d)).collect(),
            faces: faces
                .into_iter()
                .map(|mut f| {
                    f.sort_unstable();
                    f
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn length(&self, a: usize, b: usize) -> Option<f64> {
        self.edges.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn spans_simplex(&self, set: &[usize]) -> bool {
        set.len() <= 1 || self.faces.iter().any(|f| set.iter().all(|v| f.binary_search(v).is_ok()))
    }

    /// All pairwise adjacent sets of size ≥ 2, each sorted.
    pub fn cliques(&self) -> Vec<Vec<usize>> {
        fn grow(lk: &LinkComplex, current: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
            for v in from..lk.vertex_count() {
                if current.iter().all(|&u| lk.length(u, v).is_some()) {
                    current.push(v);
                    if current.len() >= 2 {
                        out.push(current.clone());
                    }
                    grow(lk, current, v + 1, out);
                    current.pop();
                }
            }
        }
        let mut out = Vec::new();
        grow(self, &mut Vec::new(), 0, &mut out);
        out
    }

    /// Matrix of cos d(u, v) on a clique.
    pub fn cosine_matrix(&self, clique: &[usize]) -> Vec<Vec<f64>> {
        clique
            .iter()
            .map(|&u| {
                clique
                    .iter()
                    .map(|&v| if u == v { 1.0 } else { self.length(u, v).expect("clique").cos() })
                    .collect()
            })
            .collect()
    }

    /// Sorted vertex ids of the labels.
    pub fn label_names(&self, g: &DyerGraph) -> Vec<String> {
        let mut v: Vec<String> = self.labels.iter().map(|&l| g.id(l).to_string()).collect();
        v.sort();
        v
    }
}

/// π − π/m(u, v).
pub fn link_length(g: &DyerGraph, u: usize, v: usize) -> f64 {
    match g.m(u, v) {
        ExtendedM::Finite(m) => PI - PI / m as f64,
        ExtendedM::Infinite => PI,
    }
}

/// Union over blocks containing `v` of the block links. Within a block the
/// link is the join of one vertex per neighbour label, so its maximal
/// simplices pick one neighbour for each label.
pub fn vertex_link(ball: &SigmaBall, v: usize, g: &DyerGraph) -> Result<LinkComplex> {
    if !ball.interior[v] {
        return Err(Error::BoundaryVertex(ball.vertices[v].display(g)));
    }
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut labels = Vec::new();
    let mut targets = Vec::new();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for &b in &ball.containing[v] {
        let shape = ball.shape(b);
        let members = &ball.blocks[b].members;
        let k = members.iter().position(|&m| m == v).expect("member");
        let mut by_label: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(n, l) in shape.neighbours(k) {
            let target = members[n];
            let id = *ids.entry(target).or_insert_with(|| {
                labels.push(l);
                targets.push(Some(target));
                labels.len() - 1
            });
            if labels[id] != l {
                return Err(Error::UnlabelableEdge(format!(
                    "edge at {} carries two labels",
                    ball.vertices[v].display(g)
                )));
            }
            by_label.entry(l).or_default().push(id);
        }
        let mut choices: Vec<Vec<usize>> = vec![Vec::new()];
        for group in by_label.values() {
            choices = choices
                .into_iter()
                .flat_map(|c| {
                    group.iter().map(move |&x| {
                        let mut c = c.clone();
                        c.push(x);
                        c
                    })
                })
                .collect();
        }
        for mut c in choices {
            if c.len() >= 2 {
                c.sort_unstable();
                faces.insert(c);
            }
        }
    }
    let mut edges = BTreeMap::new();
    for f in &faces {
        for (i, &a) in f.iter().enumerate() {
            for &b in &f[i + 1..] {
                edges.insert((a, b), link_length(g, labels[a], labels[b]));
            }
        }
    }
    let faces: Vec<Vec<usize>> = faces
        .iter()
        .filter(|f| !faces.iter().any(|h| h.len() > f.len() && f.iter().all(|x| h.binary_search(x).is_ok())))
        .cloned()
        .collect();
    Ok(LinkComplex { labels, targets, edges, faces })
}

/// Outcome of the two link checks.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagReport {
    /// Every edge has length ≥ π/2.
    pub edges_ok: bool,
    pub short_edge: Option<(usize, usize)>,
    /// A clique spans a simplex exactly when its cosine matrix is PD.
    pub flag_ok: bool,
    pub witness: Option<Vec<usize>>,
    pub cliques: usize,
}

impl FlagReport {
    pub fn passed(&self) -> bool {
        self.edges_ok && self.flag_ok
    }
}

pub fn check_metric_flag(lk: &LinkComplex) -> FlagReport {
    let short_edge = lk
        .edges
        .iter()
        .find(|(_, &d)| d < PI / 2.0 - ANGLE_TOL)
        .map(|(&e, _)| e);
    let cliques = lk.cliques();
    let witness = cliques
        .iter()
        .find(|c| lk.spans_simplex(c) != is_positive_definite(&lk.cosine_matrix(c), PD_PIVOT_TOL))
        .cloned();
    FlagReport {
        edges_ok: short_edge.is_none(),
        short_edge,
        flag_ok: witness.is_none(),
        witness,
        cliques: cliques.len(),
    }
}

#[derive(Clone, Debug)]
pub struct VertexVerdict {
    pub vertex: CosetVertex,
    pub link_vertices: usize,
    pub report: FlagReport,
}

/// Local CAT(0) certificate over the interior of a ball. Simple
/// connectedness is not checked here.
#[derive(Clone, Debug)]
pub struct Cat0Certificate {
    pub radius: usize,
    pub verdicts: Vec<VertexVerdict>,
    pub skipped: usize,
}

impl Cat0Certificate {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.report.passed())
    }

    pub fn to_text(&self, g: &DyerGraph) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            let r = &v.report;
            let mut line = format!(
                "{} link={} edges={} flag={}",
                v.vertex.display(g),
                v.link_vertices,
                if r.edges_ok { "ok" } else { "FAIL" },
                if r.flag_ok { "ok" } else { "FAIL" }
            );
            if let Some(w) = &r.witness {
                write!(line, " witness={w:?}").unwrap();
            }
            writeln!(out, "{line}").unwrap();
        }
        writeln!(
            out,
            "{} radius={} interior={} skipped={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.radius,
            self.verdicts.len(),
            self.skipped
        )
        .unwrap();
        out
    }
}

pub fn certify_ball(ball: &SigmaBall, g: &DyerGraph) -> Result<Cat0Certificate> {
    let mut verdicts = Vec::new();
    for v in 0..ball.vertices.len() {
        if !ball.interior[v] {
            continue;
        }
        let lk = vertex_link(ball, v, g)?;
        verdicts.push(VertexVerdict {
            vertex: ball.vertices[v].clone(),
            link_vertices: lk.vertex_count(),
            report: check_metric_flag(&lk),
        });
    }
    Ok(Cat0Certificate { radius: ball.radius, skipped: ball.vertices.len() - verdicts.len(), verdicts })
}

pub fn certify_cat0(engine: &WordEngine, radius: usize) -> Result<Cat0Certificate> {
    if radius == 0 {
        return Err(Error::InvalidArgument("certificate needs radius at least 1".into()));
    }
    certify_ball(&sigma_ball(engine, radius)?, engine.graph())
}

/// (dim Σ, dim Σ(W)) with dim Σ(W) = max |Y| + |V_p| + |V∞ ∖ Y|.
pub fn dimension_stats(g: &DyerGraph) -> (usize, usize) {
    let part = g.partition();
    let sets = g.spherical_subsets();
    let dim = sets.iter().map(|y| y.len()).max().unwrap_or(0);
    let dim_w = sets
        .iter()
        .map(|y| y.len() + part.vp.len() + part.vinf.difference(*y).len())
        .max()
        .unwrap_or(0);
    debug_assert!(dim <= dim_w);
    (dim, dim_w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dihedral, gamma, single};
    use crate::word::Budget;

    #[test]
    fn block_sizes() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        let count = |ids: &[&str]| elementary_block(&e, g.set_of(ids).unwrap()).unwrap().vertex_count();
        assert_eq!(count(&["a", "b"]), 4);
        assert_eq!(count(&["b", "c"]), 8);
        assert_eq!(count(&["c", "d"]), 8);
        assert_eq!(count(&[]), 1);
        assert!(matches!(
            elementary_block(&e, g.set_of(&["a", "c"]).unwrap()),
            Err(Error::NotSpherical(_))
        ));
    }

    #[test]
    fn bijection_examples() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        let dev = Development::new(&e);
        for y in g.spherical_subsets() {
            let block = elementary_block(&e, y).unwrap();
            assert!(verify_bijection(&dev, &block, &SyllableWord::empty()).unwrap());
        }
        let ab = elementary_block(&e, g.set_of(&["a", "b"]).unwrap()).unwrap();
        let images = vertex_bijection(&e, &ab, &SyllableWord::empty()).unwrap();
        let shown: Vec<String> = images.iter().map(|v| v.display(&g)).collect();
        assert!(shown.contains(&"(b a;{})".to_string()) || shown.contains(&"(a b;{})".to_string()));
        let d = elementary_block(&e, g.set_of(&["d"]).unwrap()).unwrap();
        let images = vertex_bijection(&e, &d, &SyllableWord::empty()).unwrap();
        assert_eq!(images[0].display(&g), "(e;{d})");
    }

    #[test]
    fn small_balls() {
        let g = single(Order::Finite(3));
        let e = WordEngine::new(&g, Budget::default());
        let ball = sigma_ball(&e, 2).unwrap();
        assert_eq!((ball.vertices.len(), ball.edges.len()), (4, 3));

        let g = dihedral(4);
        let e = WordEngine::new(&g, Budget::default());
        let ball = sigma_ball(&e, 1).unwrap();
        assert_eq!((ball.vertices.len(), ball.edges.len()), (8, 8));
        let labels: BTreeSet<usize> = ball.edges.iter().map(|x| x.label).collect();
        assert_eq!(labels.len(), 2);

        let g = single(Order::Infinite);
        let e = WordEngine::new(&g, Budget::default());
        let ball = sigma_ball(&e, 3).unwrap();
        assert_eq!(ball.vertices.len(), ball.edges.len() + 1);
        assert!(ball.vertices.iter().all(|v| v.set.is_empty()));
    }

    #[test]
    fn labels_of_examples() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        let at = |w: &str, s: &[&str]| CosetVertex { rep: e.parse(w).unwrap(), set: g.set_of(s).unwrap() };
        let o = at("", &[]);
        assert_eq!(g.id(edge_label(&e, &o, &at("b", &[])).unwrap()), "b");
        assert_eq!(g.id(edge_label(&e, &o, &at("a", &[])).unwrap()), "a");
        assert_eq!(g.id(edge_label(&e, &o, &at("", &["d"])).unwrap()), "d");
        assert!(edge_label(&e, &o, &at("b c", &[])).is_err());
    }

    #[test]
    fn gamma43_links() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        let ball = sigma_ball(&e, 2).unwrap();
        let o = ball.index_of(&CosetVertex::identity(VertexSet::EMPTY)).unwrap();
        let lk = vertex_link(&ball, o, &g).unwrap();
        assert_eq!(lk.label_names(&g), ["a", "a", "b", "c", "d"]);
        let (b, c) = (g.index_of("b").unwrap(), g.index_of("c").unwrap());
        let bi = lk.labels.iter().position(|&l| l == b).unwrap();
        let ci = lk.labels.iter().position(|&l| l == c).unwrap();
        assert!((lk.length(bi, ci).unwrap() - 3.0 * PI / 4.0).abs() < 1e-12);
        assert!(check_metric_flag(&lk).passed());
        let center = ball.index_of(&CosetVertex::identity(g.set_of(&["d"]).unwrap())).unwrap();
        let lk = vertex_link(&ball, center, &g).unwrap();
        assert_eq!(lk.label_names(&g), ["c", "d", "d", "d"]);
    }

    #[test]
    fn affine_triangle_control() {
        let t = 2.0 * PI / 3.0;
        let edges = vec![(0, 1, t), (1, 2, t), (0, 2, t)];
        let hollow = LinkComplex::new(vec![0, 1, 2], edges.clone(), vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert!(check_metric_flag(&hollow).passed());
        let filled = LinkComplex::new(vec![0, 1, 2], edges, vec![vec![0, 1, 2]]);
        let r = check_metric_flag(&filled);
        assert!(!r.passed());
        assert_eq!(r.witness, Some(vec![0, 1, 2]));
        let point = LinkComplex::new(vec![0], vec![], vec![]);
        assert!(check_metric_flag(&point).passed());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension_stats(&gamma(4, 3)), (2, 4));
        assert_eq!(dimension_stats(&single(Order::Finite(2))), (1, 1));
    }
}
