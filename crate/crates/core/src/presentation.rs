//! Group presentations, the Coxeter graphs Λ and Ω, the maps between the
//! semidirect products and their Coxeter groups, and a mechanical check of
//! the embedding theorem.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DyerGraph, Order, VertexPartition, VertexSet};
use crate::linalg::smith_diagonal;
use crate::word::{tits_reduce_coxeter, Budget, Syllable, SyllableWord, WordEngine};

/// Generators plus relators over the generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<SyllableWord>,
}

/// Abelian invariants: free rank plus torsion coefficients (each > 1, in
/// divisibility order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelianization {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl Presentation {
    /// First line `generators: ...`, then one relator per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\n", self.generators.join(" "));
        for r in &self.relators {
            writeln!(out, "{}", r.display(&self.generators)).unwrap();
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Presentation> {
        let mut lines = text.lines();
        let head = lines.next().ok_or_else(|| Error::Parse("empty presentation".into()))?;
        let gens = head
            .strip_prefix("generators:")
            .ok_or_else(|| Error::Parse("missing `generators:` line".into()))?;
        let generators: Vec<String> = gens.split_whitespace().map(String::from).collect();
        let relators = lines
            .filter(|l| !l.trim().is_empty())
            .map(|l| SyllableWord::parse(l, |s| generators.iter().position(|g| g == s)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation { generators, relators })
    }

    pub fn abelianization(&self) -> Abelianization {
        let n = self.generators.len();
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; n];
                for s in r.syllables() {
                    row[s.gen] += s.exp;
                }
                row
            })
            .collect();
        let diag = smith_diagonal(&rows, n);
        Abelianization {
            rank: n - diag.len(),
            torsion: diag.into_iter().filter(|&d| d > 1).map(|d| d as u64).collect(),
        }
    }
}

/// `[u, v]_m`, the alternating word of length m starting with u.
pub fn alternating(u: usize, v: usize, m: u32) -> SyllableWord {
    SyllableWord(
        (0..m as usize)
            .map(|k| Syllable::new(if k % 2 == 0 { u } else { v }, 1))
            .collect(),
    )
}

/// Generators in id order; relators `x_v^{f(v)}` for finite f, then
/// `[x_u,x_v]_m ([x_v,x_u]_m)^{-1}` for every edge.
pub fn dyer_presentation(g: &DyerGraph) -> Presentation {
    let mut relators = Vec::new();
    for v in 0..g.vertex_count() {
        if let Order::Finite(f) = g.order(v) {
            relators.push(SyllableWord::letter(v, f as i64));
        }
    }
    for (u, v, m) in g.edges() {
        relators.push(alternating(u, v, m).concat(&alternating(v, u, m).inverse()));
    }
    Presentation { generators: g.ids().to_vec(), relators }
}

/// A Dyer graph with every vertex label equal to 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledCoxeterGraph(DyerGraph);

impl LabeledCoxeterGraph {
    pub fn new(g: DyerGraph) -> Result<Self> {
        if g.is_coxeter() {
            Ok(LabeledCoxeterGraph(g))
        } else {
            Err(Error::NotCoxeter)
        }
    }

    pub fn graph(&self) -> &DyerGraph {
        &self.0
    }
}

fn primed(id: &str) -> String {
    format!("{id}'")
}

/// Λ: Γ with every label set to 2, plus a primed vertex v′ for each
/// v ∈ Vp ∪ V∞ joined to everything except v (label 2); v′ is joined to v
/// with label f(v) when f(v) is finite.
pub fn lambda_graph(g: &DyerGraph) -> LabeledCoxeterGraph {
    let p = g.partition();
    let twisted = p.vp.union(p.vinf);
    let mut vertices: Vec<(String, Order)> =
        g.ids().iter().map(|v| (v.clone(), Order::Finite(2))).collect();
    let mut edges: Vec<(String, String, u32)> =
        g.edges().map(|(u, v, m)| (g.id(u).into(), g.id(v).into(), m)).collect();
    for u in twisted.iter() {
        vertices.push((primed(g.id(u)), Order::Finite(2)));
        for v in 0..g.vertex_count() {
            if v != u {
                edges.push((primed(g.id(u)), g.id(v).into(), 2));
            }
        }
        for v in twisted.iter().filter(|&v| v > u) {
            edges.push((primed(g.id(u)), primed(g.id(v)), 2));
        }
        if let Order::Finite(f) = g.order(u) {
            edges.push((g.id(u).into(), primed(g.id(u)), f));
        }
    }
    let lam = DyerGraph::new(vertices, edges).expect("Λ of a valid graph is valid");
    LabeledCoxeterGraph(lam)
}

/// Ω: two copies of Γ glued along V2 ∪ Vp, one on V and one on
/// V2 ∪ Vp ∪ V∞′; for u, v ∈ V∞ the pair v, u′ is an edge (label 2) iff u, v
/// is. Labels: 2 on V2 ∪ V∞ ∪ V∞′, f on Vp.
pub fn omega_graph(g: &DyerGraph) -> DyerGraph {
    let p = g.partition();
    let mut vertices: Vec<(String, Order)> = (0..g.vertex_count())
        .map(|v| {
            let f = if p.vp.contains(v) { g.order(v) } else { Order::Finite(2) };
            (g.id(v).to_string(), f)
        })
        .collect();
    let mut edges: Vec<(String, String, u32)> =
        g.edges().map(|(u, v, m)| (g.id(u).into(), g.id(v).into(), m)).collect();
    for u in p.vinf.iter() {
        vertices.push((primed(g.id(u)), Order::Finite(2)));
    }
    for (u, v, m) in g.edges() {
        let (ui, vi) = (p.vinf.contains(u), p.vinf.contains(v));
        match (ui, vi) {
            (false, false) => {}
            (true, false) => edges.push((primed(g.id(u)), g.id(v).into(), m)),
            (false, true) => edges.push((g.id(u).into(), primed(g.id(v)), m)),
            (true, true) => {
                edges.push((primed(g.id(u)), primed(g.id(v)), m));
                edges.push((g.id(u).into(), primed(g.id(v)), 2));
                edges.push((primed(g.id(u)), g.id(v).into(), 2));
            }
        }
    }
    DyerGraph::new(vertices, edges).expect("Ω of a valid graph is valid")
}

/// Which of the two embeddings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// D ⋊_ξ (ℤ/2)^{|Vp ∪ V∞|} inside W(Λ).
    Lambda,
    /// D(Ω) ⋊_κ (ℤ/2)^{|Vp ∪ V∞|} inside W(Λ).
    Omega,
}

/// A letter of the semidirect product: a syllable of the normal subgroup
/// (indexed in its Dyer graph) or the twist attached to a vertex of Γ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ULetter {
    X(Syllable),
    Twist(usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UWord(pub Vec<ULetter>);

impl UWord {
    pub fn inverse(&self) -> UWord {
        UWord(
            self.0
                .iter()
                .rev()
                .map(|l| match *l {
                    ULetter::X(s) => ULetter::X(Syllable::new(s.gen, -s.exp)),
                    t => t,
                })
                .collect(),
        )
    }

    fn power(&self, e: i64) -> UWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        UWord((0..e.unsigned_abs()).flat_map(|_| base.0.iter().copied()).collect())
    }
}

/// `d · ε`, with `d` canonical in the normal subgroup and `ε` the set of
/// twists (as vertices of Γ).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemidirectElement {
    pub d: SyllableWord,
    pub eps: VertexSet,
}

/// The data of one embedding of Γ's group into W(Λ).
#[derive(Clone, Debug)]
pub struct Embedding {
    gamma: DyerGraph,
    variant: Variant,
    partition: VertexPartition,
    lambda: DyerGraph,
    normal: DyerGraph,
    lam_of: Vec<usize>,
    lam_prime: Vec<Option<usize>>,
    /// normal-subgroup index → (Γ vertex, primed copy?)
    normal_back: Vec<(usize, bool)>,
    normal_of: Vec<usize>,
    normal_prime: Vec<Option<usize>>,
    /// Λ index → (Γ vertex, primed copy?)
    lam_back: Vec<(usize, bool)>,
}

impl Embedding {
    pub fn new(gamma: &DyerGraph, variant: Variant) -> Embedding {
        let lambda = lambda_graph(gamma).0;
        let normal = match variant {
            Variant::Lambda => gamma.clone(),
            Variant::Omega => omega_graph(gamma),
        };
        let n = gamma.vertex_count();
        let find = |g: &DyerGraph, s: String| g.index_of(&s);
        let lam_of: Vec<usize> = (0..n).map(|v| find(&lambda, gamma.id(v).into()).unwrap()).collect();
        let lam_prime: Vec<Option<usize>> = (0..n).map(|v| find(&lambda, primed(gamma.id(v)))).collect();
        let normal_of: Vec<usize> = (0..n).map(|v| find(&normal, gamma.id(v).into()).unwrap()).collect();
        let normal_prime: Vec<Option<usize>> =
            (0..n).map(|v| find(&normal, primed(gamma.id(v)))).collect();
        let back = |size: usize, of: &[usize], prime: &[Option<usize>]| {
            let mut b = vec![(usize::MAX, false); size];
            for v in 0..n {
                b[of[v]] = (v, false);
                if let Some(p) = prime[v] {
                    b[p] = (v, true);
                }
            }
            b
        };
        let lam_back = back(lambda.vertex_count(), &lam_of, &lam_prime);
        let normal_back = back(normal.vertex_count(), &normal_of, &normal_prime);
        Embedding {
            partition: gamma.partition(),
            gamma: gamma.clone(),
            variant,
            lambda,
            normal,
            lam_of,
            lam_prime,
            normal_back,
            normal_of,
            normal_prime,
            lam_back,
        }
    }

    pub fn lambda(&self) -> &DyerGraph {
        &self.lambda
    }

    /// Γ for the Λ variant, Ω for the Ω variant.
    pub fn normal_graph(&self) -> &DyerGraph {
        &self.normal
    }

    /// Vertices of Γ carrying a twist: Vp ∪ V∞.
    pub fn twisted(&self) -> VertexSet {
        self.partition.vp.union(self.partition.vinf)
    }

    pub fn index(&self) -> u64 {
        1u64 << self.twisted().len()
    }

    fn x(&self, v: usize) -> ULetter {
        ULetter::X(Syllable::new(self.normal_of[v], 1))
    }

    /// φ: W(Λ) → U on a word over Λ.
    pub fn phi(&self, w: &SyllableWord) -> UWord {
        let mut out = Vec::new();
        for s in w.syllables() {
            let (u, is_prime) = self.lam_back[s.gen];
            let img = if is_prime {
                vec![ULetter::Twist(u)]
            } else if self.partition.v2.contains(u) {
                vec![self.x(u)]
            } else if self.variant == Variant::Omega && self.partition.vinf.contains(u) {
                vec![self.x(u)]
            } else {
                vec![ULetter::Twist(u), self.x(u)]
            };
            out.extend(UWord(img).power(s.exp).0);
        }
        UWord(out)
    }

    /// ψ: U → W(Λ), returning a word over Λ.
    pub fn psi(&self, w: &UWord) -> SyllableWord {
        let y = |g: usize| Syllable::new(g, 1);
        let mut out = Vec::new();
        for l in &w.0 {
            match *l {
                ULetter::Twist(u) => out.push(y(self.lam_prime[u].expect("twisted vertex"))),
                ULetter::X(s) => {
                    let (u, is_prime) = self.normal_back[s.gen];
                    let yu = y(self.lam_of[u]);
                    let img = if is_prime {
                        let yp = y(self.lam_prime[u].expect("primed"));
                        vec![yp, yu, yp]
                    } else if self.partition.v2.contains(u)
                        || (self.variant == Variant::Omega && self.partition.vinf.contains(u))
                    {
                        vec![yu]
                    } else {
                        vec![y(self.lam_prime[u].expect("twisted vertex")), yu]
                    };
                    let img = if s.exp < 0 {
                        img.into_iter().rev().collect()
                    } else {
                        img
                    };
                    for _ in 0..s.exp.unsigned_abs() {
                        out.extend_from_slice(&img);
                    }
                }
            }
        }
        SyllableWord(out)
    }

    /// The twist action of `eps` on one syllable of the normal subgroup.
    pub fn act_syllable(&self, eps: VertexSet, s: Syllable) -> Syllable {
        let (u, is_prime) = self.normal_back[s.gen];
        if !eps.contains(u) {
            return s;
        }
        match self.variant {
            Variant::Lambda => Syllable::new(s.gen, -s.exp),
            Variant::Omega if self.partition.vp.contains(u) => Syllable::new(s.gen, -s.exp),
            Variant::Omega => {
                let target = if is_prime { self.normal_of[u] } else { self.normal_prime[u].unwrap() };
                Syllable::new(target, s.exp)
            }
        }
    }

    /// ξ_ε (Λ variant) or κ_ε (Ω variant) applied to a word, unreduced.
    pub fn act(&self, eps: VertexSet, w: &SyllableWord) -> SyllableWord {
        SyllableWord(w.syllables().iter().map(|&s| self.act_syllable(eps, s)).collect())
    }

    /// Pushes every twist to the right: ε·x = ε(x)·ε.
    pub fn normal_form(&self, w: &UWord, engine: &WordEngine) -> Result<SemidirectElement> {
        let mut d = Vec::new();
        let mut eps = VertexSet::EMPTY;
        for l in &w.0 {
            match *l {
                ULetter::X(s) => d.push(self.act_syllable(eps, s)),
                ULetter::Twist(u) => eps = eps.symmetric_difference(VertexSet::singleton(u)),
            }
        }
        Ok(SemidirectElement { d: engine.reduce(&SyllableWord(d))?, eps })
    }

    pub fn display_u(&self, w: &UWord) -> String {
        let twist = match self.variant {
            Variant::Lambda => "xi",
            Variant::Omega => "kappa",
        };
        w.0.iter()
            .map(|l| match *l {
                ULetter::Twist(u) => format!("{twist}_{}", self.gamma.id(u)),
                ULetter::X(s) => SyllableWord(vec![s]).display(self.normal.ids()),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Relators of U: those of the normal subgroup, twists are commuting
    /// involutions, and the conjugation action on each generator.
    pub fn u_relators(&self) -> Vec<UWord> {
        let mut rels: Vec<UWord> = dyer_presentation(&self.normal)
            .relators
            .into_iter()
            .map(|r| UWord(r.0.into_iter().map(ULetter::X).collect()))
            .collect();
        let tw: Vec<usize> = self.twisted().iter().collect();
        for &u in &tw {
            rels.push(UWord(vec![ULetter::Twist(u); 2]));
        }
        for (i, &u) in tw.iter().enumerate() {
            for &v in &tw[i + 1..] {
                let (a, b) = (ULetter::Twist(u), ULetter::Twist(v));
                rels.push(UWord(vec![a, b, a, b]));
            }
        }
        for &u in &tw {
            for g in 0..self.normal.vertex_count() {
                let x = Syllable::new(g, 1);
                // ε x ε = ε(x), written as ε x ε ε(x)^{-1}
                let image = self.act_syllable(VertexSet::singleton(u), x);
                rels.push(UWord(vec![
                    ULetter::Twist(u),
                    ULetter::X(x),
                    ULetter::Twist(u),
                    ULetter::X(Syllable::new(image.gen, -image.exp)),
                ]));
            }
        }
        rels
    }

    /// Generators of U: x_g for every vertex of the normal subgroup's graph,
    /// then the twists.
    pub fn u_generators(&self) -> Vec<UWord> {
        (0..self.normal.vertex_count())
            .map(|g| UWord(vec![ULetter::X(Syllable::new(g, 1))]))
            .chain(self.twisted().iter().map(|u| UWord(vec![ULetter::Twist(u)])))
            .collect()
    }

    /// Checks, in order: φ kills every relator of W(Λ); ψ kills every
    /// relator of U; φψ and ψφ fix all generators. The index is 2^{|Vp ∪ V∞|}.
    pub fn verify(&self, budget: Budget) -> VerificationReport {
        let engine = WordEngine::new(&self.normal, budget);
        let mut checks = Vec::new();
        let outcome = |r: Result<bool>, detail: &dyn Fn() -> String| match r {
            Ok(true) => CheckOutcome::Pass,
            Ok(false) => CheckOutcome::Fail(detail()),
            Err(Error::SearchBudgetExceeded(m)) => CheckOutcome::Budget(m),
            Err(e) => CheckOutcome::Fail(e.to_string()),
        };
        let lam = &self.lambda;
        for r in dyer_presentation(lam).relators {
            let img = self.phi(&r);
            let res = self.normal_form(&img, &engine);
            let ok = res.as_ref().map(|e| e.d.is_empty() && e.eps.is_empty()).map_err(Clone::clone);
            checks.push(CheckLine {
                family: "phi(W relator)",
                item: r.display(lam.ids()),
                outcome: outcome(ok, &|| format!("image {} is not trivial", self.display_u(&img))),
            });
        }
        for r in self.u_relators() {
            let img = self.psi(&r);
            let ok = tits_reduce_coxeter(&img, lam, budget).map(|w| w.is_empty());
            checks.push(CheckLine {
                family: "psi(U relator)",
                item: self.display_u(&r),
                outcome: outcome(ok, &|| format!("image {} is not trivial", img.display(lam.ids()))),
            });
        }
        for x in self.u_generators() {
            let back = self.phi(&self.psi(&x));
            let ok = (|| Ok(self.normal_form(&back, &engine)? == self.normal_form(&x, &engine)?))();
            checks.push(CheckLine {
                family: "phi(psi(x)) = x",
                item: self.display_u(&x),
                outcome: outcome(ok, &|| format!("got {}", self.display_u(&back))),
            });
        }
        for y in 0..lam.vertex_count() {
            let yw = SyllableWord::letter(y, 1);
            let back = self.psi(&self.phi(&yw));
            let ok = tits_reduce_coxeter(&back.concat(&yw), lam, budget).map(|w| w.is_empty());
            checks.push(CheckLine {
                family: "psi(phi(y)) = y",
                item: lam.id(y).to_string(),
                outcome: outcome(ok, &|| format!("got {}", back.display(lam.ids()))),
            });
        }
        VerificationReport { variant: self.variant, index: self.index(), checks }
    }
}

pub fn phi_map(w: &SyllableWord, g: &DyerGraph, variant: Variant) -> UWord {
    Embedding::new(g, variant).phi(w)
}

pub fn psi_map(w: &UWord, g: &DyerGraph, variant: Variant) -> SyllableWord {
    Embedding::new(g, variant).psi(w)
}

/// ξ_ε on a word of D, normalized.
pub fn xi_action(eps: VertexSet, w: &SyllableWord, g: &DyerGraph) -> Result<SyllableWord> {
    let e = Embedding::new(g, Variant::Lambda);
    WordEngine::new(g, Budget::default()).normalize(&e.act(eps, w))
}

/// κ_ε on a word of D(Ω), normalized. `w` is indexed in Ω.
pub fn kappa_action(eps: VertexSet, w: &SyllableWord, g: &DyerGraph) -> Result<SyllableWord> {
    let e = Embedding::new(g, Variant::Omega);
    WordEngine::new(e.normal_graph(), Budget::default()).normalize(&e.act(eps, w))
}

pub fn semidirect_normal_form(
    w: &UWord,
    g: &DyerGraph,
    variant: Variant,
    budget: Budget,
) -> Result<SemidirectElement> {
    let e = Embedding::new(g, variant);
    let engine = WordEngine::new(e.normal_graph(), budget);
    e.normal_form(w, &engine)
}

pub fn verify_embedding_theorem(g: &DyerGraph, variant: Variant, budget: Budget) -> VerificationReport {
    Embedding::new(g, variant).verify(budget)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    Budget(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub family: &'static str,
    pub item: String,
    pub outcome: CheckOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub variant: Variant,
    pub index: u64,
    pub checks: Vec<CheckLine>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome == CheckOutcome::Pass)
    }

    pub fn budget_exceeded(&self) -> bool {
        self.checks.iter().any(|c| matches!(c.outcome, CheckOutcome::Budget(_)))
    }

    /// `PASS index=N` or `FAIL index=N`.
    pub fn summary(&self) -> String {
        format!("{} index={}", if self.passed() { "PASS" } else { "FAIL" }, self.index)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "variant: {}\n",
            match self.variant {
                Variant::Lambda => "lambda",
                Variant::Omega => "omega",
            }
        );
        for c in &self.checks {
            let status = match &c.outcome {
                CheckOutcome::Pass => "ok".to_string(),
                CheckOutcome::Fail(m) => format!("FAIL ({m})"),
                CheckOutcome::Budget(m) => format!("BUDGET ({m})"),
            };
            writeln!(out, "{}: {} ... {}", c.family, c.item, status).unwrap();
        }
        writeln!(out, "{}", self.summary()).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{build, gamma, single};

    #[test]
    fn presentation_of_gamma43() {
        let g = gamma(4, 3);
        let p = dyer_presentation(&g);
        let text = p.to_text();
        assert_eq!(
            text,
            "generators: a b c d\nb^2\nc^2\nd^3\na b a^-1 b^-1\nb c b c b^-1 c^-1 b^-1 c^-1\nc d c^-1 d^-1\n"
        );
        assert_eq!(Presentation::parse_text(&text).unwrap(), p);
        let ab = p.abelianization();
        assert_eq!((ab.rank, ab.torsion.clone()), (1, vec![2, 6]));
    }

    #[test]
    fn small_presentations() {
        let free = build(&[("x", Order::Infinite), ("y", Order::Infinite)], &[]).unwrap();
        let p = dyer_presentation(&free);
        assert!(p.relators.is_empty());
        assert_eq!(p.abelianization().rank, 2);
        let p = dyer_presentation(&single(Order::Finite(2)));
        assert_eq!(p.to_text(), "generators: v\nv^2\n");
    }

    #[test]
    fn lambda_of_gamma43() {
        let g = gamma(4, 3);
        let lam = lambda_graph(&g);
        let l = lam.graph();
        assert_eq!(l.ids(), ["a", "a'", "b", "c", "d", "d'"]);
        let m = |u: &str, v: &str| l.label(l.index_of(u).unwrap(), l.index_of(v).unwrap());
        assert_eq!(m("d", "d'"), Some(3));
        assert_eq!(m("a", "a'"), None);
        assert_eq!(m("a'", "d'"), Some(2));
        assert_eq!(m("a'", "c"), Some(2));
        assert_eq!(m("b", "c"), Some(4));
        assert_eq!(m("b", "d"), None);
        let single_inf = lambda_graph(&single(Order::Infinite));
        assert_eq!(single_inf.graph().edge_count(), 0);
        let cox = crate::fixtures::dihedral(5);
        assert_eq!(lambda_graph(&cox).graph(), &cox);
    }

    #[test]
    fn omega_of_gamma43() {
        let g = gamma(4, 3);
        let o = omega_graph(&g);
        assert_eq!(o.ids(), ["a", "a'", "b", "c", "d"]);
        let edges: Vec<(String, String, u32)> =
            o.edges().map(|(u, v, m)| (o.id(u).into(), o.id(v).into(), m)).collect();
        assert_eq!(
            edges,
            [
                ("a".into(), "b".into(), 2),
                ("a'".into(), "b".into(), 2),
                ("b".into(), "c".into(), 4),
                ("c".into(), "d".into(), 2)
            ]
        );
        let f: Vec<Order> = (0..5).map(|v| o.order(v)).collect();
        assert_eq!(f, [2, 2, 2, 2, 3].map(Order::Finite));
        let free = build(&[("x", Order::Infinite), ("y", Order::Infinite)], &[]).unwrap();
        let o = omega_graph(&free);
        assert_eq!((o.vertex_count(), o.edge_count()), (4, 0));
        assert!(o.is_coxeter());
    }

    #[test]
    fn phi_and_psi_examples() {
        let g = gamma(4, 3);
        let e = Embedding::new(&g, Variant::Lambda);
        let lw = |s: &str| SyllableWord::parse(s, |x| e.lambda().index_of(x)).unwrap();
        assert_eq!(e.display_u(&e.phi(&lw("d"))), "xi_d d");
        assert_eq!(e.display_u(&e.phi(&lw("b"))), "b");
        let engine = WordEngine::new(&g, Budget::default());
        let nf = e.normal_form(&e.phi(&lw("d' d")), &engine).unwrap();
        assert_eq!((engine.display(&nf.d), nf.eps), ("d".to_string(), VertexSet::EMPTY));
        let x = |v: &str| ULetter::X(Syllable::new(g.index_of(v).unwrap(), 1));
        let tw = |v: &str| ULetter::Twist(g.index_of(v).unwrap());
        assert_eq!(e.psi(&UWord(vec![x("d")])).display(e.lambda().ids()), "d' d");
        assert_eq!(e.psi(&UWord(vec![tw("a")])).display(e.lambda().ids()), "a'");
        assert_eq!(e.psi(&UWord(vec![x("b")])).display(e.lambda().ids()), "b");
    }

    #[test]
    fn twist_actions() {
        let g = gamma(4, 3);
        let a = g.set_of(&["a"]).unwrap();
        let w = SyllableWord::parse("a^2 b", |x| g.index_of(x)).unwrap();
        assert_eq!(xi_action(a, &w, &g).unwrap().display(g.ids()), "a^-2 b");
        let o = omega_graph(&g);
        let w = SyllableWord::parse("a b", |x| o.index_of(x)).unwrap();
        assert_eq!(kappa_action(a, &w, &g).unwrap().display(o.ids()), "a' b");
    }

    #[test]
    fn semidirect_examples() {
        let g = gamma(4, 3);
        let x = |v: &str, e: i64| ULetter::X(Syllable::new(g.index_of(v).unwrap(), e));
        let tw = |v: &str| ULetter::Twist(g.index_of(v).unwrap());
        let nf = |w: Vec<ULetter>| semidirect_normal_form(&UWord(w), &g, Variant::Lambda, Budget::default()).unwrap();
        let r = nf(vec![tw("d"), x("b", 1), tw("d")]);
        assert_eq!((r.d.display(g.ids()), r.eps), ("b".into(), VertexSet::EMPTY));
        let r = nf(vec![tw("a"), x("a", 1)]);
        assert_eq!((r.d.display(g.ids()), r.eps), ("a^-1".into(), g.set_of(&["a"]).unwrap()));
        let r = nf(vec![x("d", 1), tw("d"), x("d", 1)]);
        assert_eq!((r.d.display(g.ids()), r.eps), ("".into(), g.set_of(&["d"]).unwrap()));
    }

    #[test]
    fn embedding_theorem_gamma43() {
        let g = gamma(4, 3);
        for v in [Variant::Lambda, Variant::Omega] {
            let r = verify_embedding_theorem(&g, v, Budget::default());
            assert!(r.passed(), "{}", r.to_text());
            assert_eq!(r.summary(), "PASS index=4");
        }
        let cox = crate::fixtures::dihedral(3);
        let r = verify_embedding_theorem(&cox, Variant::Lambda, Budget::default());
        assert_eq!(r.summary(), "PASS index=1");
    }
}
