//! Canonical reflection representation of a finite Coxeter group and its
//! Coxeter polytope, the convex hull of the orbit of x₀ = Σ α*_s.

use std::collections::VecDeque;
use std::f64::consts::PI;
use std::fmt::Write as _;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::{DyerGraph, VertexSet};
use crate::word::{enumerate_finite_dyer_group, Budget, FiniteGroupTable, SyllableWord};

/// Tolerance for the numeric checks in this module.
pub const GEOM_TOL: f64 = 1e-9;

/// Reflections ρ(s)x = x − 2⟨α_s, x⟩α_s written in the basis of simple roots,
/// with ⟨α_s, α_t⟩ = B_st = −cos(π/m(s,t)).
#[derive(Clone, Debug)]
pub struct ReflectionRep {
    pub generators: Vec<usize>,
    pub form: DMatrix<f64>,
    pub reflections: Vec<DMatrix<f64>>,
}

impl ReflectionRep {
    /// Representation of the Coxeter group on `gens` (indices into `g`,
    /// all of order 2). Finiteness is not checked here.
    pub fn new(g: &DyerGraph, gens: &[usize]) -> Self {
        let n = gens.len();
        let form = DMatrix::from_fn(n, n, |i, j| g.cosine(gens[i], gens[j]));
        let reflections = (0..n)
            .map(|s| {
                let mut r = DMatrix::identity(n, n);
                for j in 0..n {
                    r[(s, j)] -= 2.0 * form[(s, j)];
                }
                r
            })
            .collect();
        ReflectionRep { generators: gens.to_vec(), form, reflections }
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn inner(&self, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
        (x.transpose() * &self.form * y)[(0, 0)]
    }

    /// ρ(w); `None` if `w` uses a generator outside the representation.
    pub fn matrix_of(&self, w: &SyllableWord) -> Option<DMatrix<f64>> {
        let n = self.dim();
        let mut m = DMatrix::identity(n, n);
        for s in w.syllables() {
            let k = self.generators.iter().position(|&g| g == s.gen)?;
            if s.exp.rem_euclid(2) == 1 {
                m *= &self.reflections[k];
            }
        }
        Some(m)
    }

    /// Every ρ(s) is an involution preserving the form.
    pub fn check_invariants(&self, tol: f64) -> bool {
        let n = self.dim();
        let id = DMatrix::<f64>::identity(n, n);
        self.reflections.iter().all(|r| {
            (r * r - &id).amax() < tol && (r.transpose() * &self.form * r - &self.form).amax() < tol
        })
    }

    /// x₀ = B⁻¹·1, the sum of the dual basis vectors.
    pub fn base_point(&self) -> DVector<f64> {
        self.dual_sum(VertexSet::full(self.dim()))
    }

    /// Σ α*_s over positions in `which`.
    fn dual_sum(&self, which: VertexSet) -> DVector<f64> {
        let n = self.dim();
        let rhs = DVector::from_fn(n, |i, _| if which.contains(i) { 1.0 } else { 0.0 });
        self.form.clone().lu().solve(&rhs).expect("form of a finite group is invertible")
    }
}

/// Representation for a finite Coxeter graph (all f = 2, spherical).
pub fn canonical_representation(cox: &DyerGraph) -> Result<ReflectionRep> {
    if !cox.is_coxeter() {
        return Err(Error::NotCoxeter);
    }
    if !cox.is_spherical_set(cox.all()) {
        return Err(Error::NotFinite);
    }
    let gens: Vec<usize> = (0..cox.vertex_count()).collect();
    Ok(ReflectionRep::new(cox, &gens))
}

/// A face: the vertices ρ(wu)x₀, u ∈ W_T, of one coset wW_T.
#[derive(Clone, Debug)]
pub struct Face {
    pub subset: VertexSet,
    /// Least reduced word of the coset.
    pub rep: SyllableWord,
    /// Element indices, sorted.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CoxeterPolytope {
    graph: DyerGraph,
    rep: ReflectionRep,
    table: FiniteGroupTable,
    base_point: DVector<f64>,
    points: Vec<DVector<f64>>,
    faces: Vec<Face>,
}

pub fn polytope(cox: &DyerGraph, rep: &ReflectionRep, budget: Budget) -> Result<CoxeterPolytope> {
    let table = enumerate_finite_dyer_group(cox, cox.all(), budget)?;
    let x0 = rep.base_point();
    let points = table
        .elements()
        .iter()
        .map(|w| rep.matrix_of(w).expect("words over S") * &x0)
        .collect();
    let faces = cosets(cox, &table);
    Ok(CoxeterPolytope {
        graph: cox.clone(),
        rep: rep.clone(),
        table,
        base_point: x0,
        points,
        faces,
    })
}

fn cosets(cox: &DyerGraph, table: &FiniteGroupTable) -> Vec<Face> {
    let mut faces = Vec::new();
    for t in cox.spherical_subsets() {
        let steps: Vec<usize> = (0..table.steps().len())
            .filter(|&k| t.contains(table.steps()[k].gen))
            .collect();
        let mut seen = vec![false; table.order()];
        for start in 0..table.order() {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(e) = queue.pop_front() {
                for &s in &steps {
                    let f = table.right_mul(e, s);
                    if !seen[f] {
                        seen[f] = true;
                        members.push(f);
                        queue.push_back(f);
                    }
                }
            }
            members.sort_unstable();
            let rep = members
                .iter()
                .map(|&i| table.element(i))
                .min_by(|a, b| a.shortlex_cmp(b))
                .expect("nonempty coset")
                .clone();
            faces.push(Face { subset: t, rep, members });
        }
    }
    faces
}

impl CoxeterPolytope {
    pub fn representation(&self) -> &ReflectionRep {
        &self.rep
    }

    pub fn table(&self) -> &FiniteGroupTable {
        &self.table
    }

    pub fn base_point(&self) -> &DVector<f64> {
        &self.base_point
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    /// ρ(w)x₀ in root coordinates, indexed like the group table.
    pub fn points(&self) -> &[DVector<f64>] {
        &self.points
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Edges: cosets of the rank-one parabolics.
    pub fn edges(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.subset.len() == 1)
    }

    /// Distance in the invariant form.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        let d = &self.points[i] - &self.points[j];
        self.rep.inner(&d, &d).max(0.0).sqrt()
    }

    /// Angle at x₀ between the edges toward ρ(s)x₀ and ρ(t)x₀.
    pub fn corner_angle(&self, s: usize, t: usize) -> f64 {
        let idx = |g: usize| {
            self.table
                .index_of(&SyllableWord::letter(g, 1))
                .expect("generators are elements")
        };
        let u = &self.points[idx(s)] - &self.base_point;
        let v = &self.points[idx(t)] - &self.base_point;
        let c = self.rep.inner(&u, &v) / (self.rep.inner(&u, &u) * self.rep.inner(&v, &v)).sqrt();
        c.clamp(-1.0, 1.0).acos()
    }

    /// Orthonormal coordinates: with B = LLᵀ, x ↦ Lᵀx.
    pub fn euclidean(&self, x: &DVector<f64>) -> DVector<f64> {
        let l = self.rep.form.clone().cholesky().expect("positive definite").l();
        l.transpose() * x
    }

    /// Vertices of a rank-two face in cyclic order (walk alternating the
    /// two generators).
    fn polygon(&self, face: &Face) -> Vec<usize> {
        let gens: Vec<usize> = face.subset.iter().collect();
        let step = |g: usize| {
            self.table
                .steps()
                .iter()
                .position(|s| s.gen == g)
                .expect("generator step")
        };
        let (s, t) = (step(gens[0]), step(gens[1]));
        let start = self.table.index_of(&face.rep).expect("rep is an element");
        let mut cycle = vec![start];
        let mut cur = start;
        let mut use_s = true;
        loop {
            cur = self.table.right_mul(cur, if use_s { s } else { t });
            use_s = !use_s;
            if cur == start {
                break;
            }
            cycle.push(cur);
        }
        cycle
    }

    /// Wavefront OBJ for ranks 1 to 3.
    pub fn to_obj(&self) -> Result<String> {
        let n = self.rep.dim();
        if !(1..=3).contains(&n) {
            return Err(Error::InvalidArgument(format!("OBJ output needs rank 1..3, got {n}")));
        }
        let mut out = format!("# Coxeter polytope: {} vertices\n", self.points.len());
        for p in &self.points {
            let e = self.euclidean(p);
            let c = |k: usize| if k < e.len() { e[k] } else { 0.0 };
            writeln!(out, "v {:.9} {:.9} {:.9}", c(0), c(1), c(2)).unwrap();
        }
        if n == 1 {
            writeln!(out, "l 1 2").unwrap();
        }
        for face in self.faces.iter().filter(|f| f.subset.len() == 2) {
            let idx: Vec<String> = self.polygon(face).iter().map(|i| (i + 1).to_string()).collect();
            writeln!(out, "f {}", idx.join(" ")).unwrap();
        }
        Ok(out)
    }

    /// One line per face: `T={..} rep=<word> vertices=[..]`.
    pub fn face_dump(&self) -> String {
        let mut out = String::new();
        for f in &self.faces {
            let vs: Vec<String> = f
                .members
                .iter()
                .map(|&i| display_or_e(self.table.element(i), &self.graph))
                .collect();
            writeln!(
                out,
                "T={} rep={} vertices=[{}]",
                self.graph.format_set(f.subset),
                display_or_e(&f.rep, &self.graph),
                vs.join(", ")
            )
            .unwrap();
        }
        out
    }
}

fn display_or_e(w: &SyllableWord, g: &DyerGraph) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.display(g.ids())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FacePosetReport {
    pub ok: bool,
    pub faces: usize,
    pub witness: Option<String>,
}

/// Compares the coset poset {wW_T} with the faces cut out by linear
/// functionals: coset wW_T should be exactly the set of vertices maximizing
/// ⟨ρ(w)y_T, ·⟩ with y_T = Σ_{s∉T} α*_s, distinct cosets give distinct
/// vertex sets, and inclusion of cosets matches inclusion of vertex sets.
pub fn face_poset_check(p: &CoxeterPolytope) -> FacePosetReport {
    let fail = |w: String| FacePosetReport { ok: false, faces: p.faces.len(), witness: Some(w) };
    let n = p.rep.dim();
    for f in &p.faces {
        let outside = VertexSet::full(n).difference(f.subset);
        let y = p.rep.matrix_of(&f.rep).expect("rep over S") * p.rep.dual_sum(outside);
        let vals: Vec<f64> = p.points.iter().map(|x| p.rep.inner(&y, x)).collect();
        let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let argmax: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] > max - 1e-7).collect();
        if argmax != f.members {
            return fail(format!(
                "coset {} of T={} is not the face cut out by its functional",
                display_or_e(&f.rep, &p.graph),
                p.graph.format_set(f.subset)
            ));
        }
    }
    let mut sets: Vec<&Vec<usize>> = p.faces.iter().map(|f| &f.members).collect();
    sets.sort();
    sets.dedup();
    if sets.len() != p.faces.len() {
        return fail("two cosets share a vertex set".into());
    }
    for a in &p.faces {
        for b in &p.faces {
            // algebraic inclusion: T ⊆ T' and rep(b)⁻¹ rep(a) ∈ W_T'
            let ia = p.table.index_of(&a.rep).unwrap();
            let ib = p.table.index_of(&b.rep).unwrap();
            let q = p.table.product(p.table.inverse(ib), ia);
            let in_parabolic = p.table.element(q).syllables().iter().all(|s| b.subset.contains(s.gen));
            let algebraic = a.subset.is_subset(b.subset) && in_parabolic;
            let geometric = a.members.iter().all(|m| b.members.binary_search(m).is_ok());
            if algebraic != geometric {
                return fail(format!(
                    "inclusion mismatch between {}W_{} and {}W_{}",
                    display_or_e(&a.rep, &p.graph),
                    p.graph.format_set(a.subset),
                    display_or_e(&b.rep, &p.graph),
                    p.graph.format_set(b.subset)
                ));
            }
        }
    }
    FacePosetReport { ok: true, faces: p.faces.len(), witness: None }
}

/// Translation u = x₀ − x₀,T carrying the polytope of W_T onto the face
/// Cox_T(W) through x₀, with the largest vertex mismatch observed.
#[derive(Clone, Debug)]
pub struct Isometry {
    pub translation: DVector<f64>,
    pub max_error: f64,
}

pub fn subpolytope_isometry(p: &CoxeterPolytope, t: VertexSet) -> Result<Isometry> {
    let n = p.rep.dim();
    if !t.is_subset(VertexSet::full(n)) {
        return Err(Error::InvalidArgument("subset outside the generating set".into()));
    }
    let pos: Vec<usize> = t.iter().collect();
    let k = pos.len();
    let mut x0t = DVector::zeros(n);
    if k > 0 {
        let bt = DMatrix::from_fn(k, k, |i, j| p.rep.form[(pos[i], pos[j])]);
        let sol = bt.lu().solve(&DVector::from_element(k, 1.0)).expect("invertible");
        for (i, &q) in pos.iter().enumerate() {
            x0t[q] = sol[i];
        }
    }
    let u = &p.base_point - &x0t;
    let mut max_error: f64 = 0.0;
    for (i, w) in p.table.elements().iter().enumerate() {
        let gens_ok = w.syllables().iter().all(|s| t.contains(s.gen));
        if !gens_ok {
            continue;
        }
        let image = p.rep.matrix_of(w).unwrap() * &x0t + &u;
        let d = &image - &p.points[i];
        max_error = max_error.max(p.rep.inner(&d, &d).max(0.0).sqrt());
    }
    Ok(Isometry { translation: u, max_error })
}

/// π − π/m.
pub fn dihedral_corner(m: u32) -> f64 {
    PI - PI / m as f64
}
