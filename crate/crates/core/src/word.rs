//! Words in Dyer groups: syllable normal forms, the closure search that
//! solves the word problem, finite group tables, balls and coset
//! representatives.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::rc::Rc;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::{DyerGraph, Order, VertexPartition, VertexSet};
use crate::polytope::ReflectionRep;

/// One syllable `x_gen^exp`. The generator is an index into some alphabet,
/// usually the vertex list of a [`DyerGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

impl Syllable {
    pub fn new(gen: usize, exp: i64) -> Self {
        Syllable { gen, exp }
    }
}

// positive exponents first (ascending), then negative ones by magnitude
fn exp_key(e: i64) -> (bool, u64) {
    (e < 0, e.unsigned_abs())
}

impl Ord for Syllable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gen
            .cmp(&other.gen)
            .then_with(|| exp_key(self.exp).cmp(&exp_key(other.exp)))
    }
}

impl PartialOrd for Syllable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A word as a list of syllables. The derived order is lexicographic on
/// syllables; use [`SyllableWord::shortlex_cmp`] to compare by length first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SyllableWord(pub Vec<Syllable>);

impl SyllableWord {
    pub fn empty() -> Self {
        SyllableWord(Vec::new())
    }

    pub fn letter(gen: usize, exp: i64) -> Self {
        SyllableWord(vec![Syllable::new(gen, exp)])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &SyllableWord) -> SyllableWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SyllableWord(v)
    }

    pub fn inverse(&self) -> SyllableWord {
        SyllableWord(self.0.iter().rev().map(|s| Syllable::new(s.gen, -s.exp)).collect())
    }

    pub fn shortlex_cmp(&self, other: &SyllableWord) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }

    /// Parses whitespace-separated tokens `v`, `v^k`, `v^-1`.
    pub fn parse(text: &str, lookup: impl Fn(&str) -> Option<usize>) -> Result<SyllableWord> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                None => (tok, 1),
                Some((name, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    if e == 0 {
                        return Err(Error::Parse(format!("zero exponent in `{tok}`")));
                    }
                    (name, e)
                }
            };
            let gen = lookup(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            out.push(Syllable::new(gen, exp));
        }
        Ok(SyllableWord(out))
    }

    /// Renders with the given generator names; the empty word renders as "".
    pub fn display(&self, names: &[String]) -> String {
        self.0
            .iter()
            .map(|s| match s.exp {
                1 => names[s.gen].clone(),
                e => format!("{}^{}", names[s.gen], e),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Search budgets. Exceeding one yields an error rather than a guess.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Longest normalized input word accepted, in syllables.
    pub max_word_len: usize,
    /// Largest closure (and largest ball) explored.
    pub max_closure: usize,
    /// Largest finite group enumerated.
    pub max_group_order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_word_len: 24, max_closure: 1_000_000, max_group_order: 20_000 }
    }
}

impl Budget {
    /// Parses overrides such as `closure=5000,length=30,order=100`. A bare
    /// integer sets the closure cap.
    pub fn parse_overrides(mut self, spec: &str) -> Result<Budget> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part.split_once('=').unwrap_or(("closure", part));
            let n: usize = val
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad budget value `{part}`")))?;
            if n == 0 {
                return Err(Error::Parse(format!("budget `{part}` must be positive")));
            }
            match key.trim() {
                "closure" => self.max_closure = n,
                "length" => self.max_word_len = n,
                "order" => self.max_group_order = n,
                k => return Err(Error::Parse(format!("unknown budget key `{k}`"))),
            }
        }
        Ok(self)
    }
}

/// Multiplication table of a finite group D^f_X = D_{X2} × Π C_f(v).
#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    subset: VertexSet,
    periods: HashMap<usize, u32>,
    steps: Vec<Syllable>,
    step_index: HashMap<(usize, i64), usize>,
    elements: Vec<SyllableWord>,
    index: HashMap<SyllableWord, usize>,
    right: Vec<Vec<usize>>,
}

impl FiniteGroupTable {
    pub fn subset(&self) -> VertexSet {
        self.subset
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Generating syllables `x_v^e`, `1 ≤ e < f(v)`.
    pub fn steps(&self) -> &[Syllable] {
        &self.steps
    }

    /// Canonical words, identity first, in breadth-first order.
    pub fn elements(&self) -> &[SyllableWord] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SyllableWord {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &SyllableWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `elements[e] · steps[s]`.
    pub fn right_mul(&self, e: usize, s: usize) -> usize {
        self.right[e][s]
    }

    /// Evaluates an arbitrary word; `None` if it uses a foreign generator.
    pub fn eval_from(&self, start: usize, w: &SyllableWord) -> Option<usize> {
        let mut cur = start;
        for s in w.syllables() {
            let f = *self.periods.get(&s.gen)? as i64;
            let e = s.exp.rem_euclid(f);
            if e != 0 {
                cur = self.right[cur][self.step_index[&(s.gen, e)]];
            }
        }
        Some(cur)
    }

    pub fn eval(&self, w: &SyllableWord) -> Option<usize> {
        self.eval_from(0, w)
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.eval_from(a, &self.elements[b]).expect("own words evaluate")
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.eval(&self.elements[a].inverse()).expect("own words evaluate")
    }
}

/// Elements within a given step distance of the identity. Steps are
/// `x_v^e` (1 ≤ e < f(v)) for finite f and `x_v^{±1}` for f = ∞.
#[derive(Clone, Debug)]
pub struct BallEnumeration {
    pub radius: usize,
    pub elements: Vec<SyllableWord>,
    pub distance: Vec<usize>,
    pub parent: Vec<Option<(usize, Syllable)>>,
    index: HashMap<SyllableWord, usize>,
}

impl BallEnumeration {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &SyllableWord) -> bool {
        self.index.contains_key(w)
    }

    pub fn index_of(&self, w: &SyllableWord) -> Option<usize> {
        self.index.get(w).copied()
    }
}

const CACHE_LIMIT: usize = 2_000_000;

/// Word-problem solver bound to one Dyer graph. Results are memoized, which
/// does not change any answer.
pub struct WordEngine<'g> {
    graph: &'g DyerGraph,
    budget: Budget,
    partition: VertexPartition,
    cache: RefCell<HashMap<Vec<Syllable>, SyllableWord>>,
    tables: RefCell<HashMap<VertexSet, Rc<FiniteGroupTable>>>,
}

impl<'g> WordEngine<'g> {
    pub fn new(graph: &'g DyerGraph, budget: Budget) -> Self {
        WordEngine {
            graph,
            budget,
            partition: graph.partition(),
            cache: RefCell::new(HashMap::new()),
            tables: RefCell::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &'g DyerGraph {
        self.graph
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn parse(&self, text: &str) -> Result<SyllableWord> {
        SyllableWord::parse(text, |s| self.graph.index_of(s))
    }

    pub fn display(&self, w: &SyllableWord) -> String {
        w.display(self.graph.ids())
    }

    fn check_gens(&self, w: &SyllableWord) -> Result<()> {
        match w.syllables().iter().find(|s| s.gen >= self.graph.vertex_count()) {
            Some(s) => Err(Error::UnknownGenerator(format!("#{}", s.gen))),
            None => Ok(()),
        }
    }

    fn normalize_slice(&self, w: impl IntoIterator<Item = Syllable>) -> Vec<Syllable> {
        let mut stack: Vec<Syllable> = Vec::new();
        for s in w {
            let f = self.graph.order(s.gen);
            let wrap = |e: i64| match f {
                Order::Finite(n) => e.rem_euclid(n as i64),
                Order::Infinite => e,
            };
            let e = wrap(s.exp);
            if e == 0 {
                continue;
            }
            match stack.last_mut() {
                Some(top) if top.gen == s.gen => {
                    let merged = wrap(top.exp + e);
                    if merged == 0 {
                        stack.pop();
                    } else {
                        top.exp = merged;
                    }
                }
                _ => stack.push(Syllable::new(s.gen, e)),
            }
        }
        stack
    }

    /// Merges equal neighbours, reduces exponents into `{1..f−1}` for finite
    /// orders and drops zero syllables.
    pub fn normalize(&self, w: &SyllableWord) -> Result<SyllableWord> {
        self.check_gens(w)?;
        Ok(SyllableWord(self.normalize_slice(w.0.iter().copied())))
    }

    fn neighbours(&self, w: &[Syllable], out: &mut Vec<Vec<Syllable>>) {
        out.clear();
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            match self.graph.label(a.gen, b.gen) {
                Some(2) => {
                    let mut v = w.to_vec();
                    v.swap(i, i + 1);
                    out.push(self.normalize_slice(v));
                }
                Some(m) => {
                    // braid move on an alternating run of length m (both ends in V2)
                    let m = m as usize;
                    if i + m > w.len() {
                        continue;
                    }
                    let alternating = (0..m).all(|k| {
                        let want = if k % 2 == 0 { a.gen } else { b.gen };
                        w[i + k].gen == want && w[i + k].exp == 1
                    });
                    if alternating {
                        let mut v = w.to_vec();
                        for k in 0..m {
                            v[i + k].gen = if k % 2 == 0 { b.gen } else { a.gen };
                        }
                        out.push(self.normalize_slice(v));
                    }
                }
                None => {}
            }
        }
    }

    /// The canonical form: among the words of minimal syllable length
    /// representing `w`, the lexicographically least one.
    ///
    /// Explores the closure of `w` under commutations (m = 2), braid moves
    /// (m ≥ 3) and merging; as soon as a shorter word appears the search
    /// restarts from it.
    pub fn reduce(&self, w: &SyllableWord) -> Result<SyllableWord> {
        let start = self.normalize(w)?.0;
        if start.len() > self.budget.max_word_len {
            return Err(Error::SearchBudgetExceeded(format!(
                "word of {} syllables exceeds the limit of {}",
                start.len(),
                self.budget.max_word_len
            )));
        }
        if let Some(r) = self.cache.borrow().get(&start) {
            return Ok(r.clone());
        }
        let mut current = start.clone();
        let mut buf = Vec::new();
        let result = 'outer: loop {
            if let Some(r) = self.cache.borrow().get(&current) {
                break r.clone();
            }
            let mut seen: HashSet<Vec<Syllable>> = HashSet::new();
            seen.insert(current.clone());
            let mut queue = VecDeque::from([current.clone()]);
            while let Some(x) = queue.pop_front() {
                self.neighbours(&x, &mut buf);
                for y in buf.drain(..) {
                    if y.len() < x.len() {
                        current = y;
                        continue 'outer;
                    }
                    if seen.contains(&y) {
                        continue;
                    }
                    if let Some(r) = self.cache.borrow().get(&y) {
                        break 'outer r.clone();
                    }
                    seen.insert(y.clone());
                    if seen.len() > self.budget.max_closure {
                        return Err(Error::SearchBudgetExceeded(format!(
                            "closure exceeds {} words",
                            self.budget.max_closure
                        )));
                    }
                    queue.push_back(y);
                }
            }
            let best = SyllableWord(seen.iter().min().expect("nonempty").clone());
            let mut cache = self.cache.borrow_mut();
            if cache.len() + seen.len() > CACHE_LIMIT {
                cache.clear();
            }
            for x in seen {
                cache.insert(x, best.clone());
            }
            break best;
        };
        self.cache.borrow_mut().insert(start, result.clone());
        Ok(result)
    }

    pub fn is_trivial(&self, w: &SyllableWord) -> Result<bool> {
        Ok(self.reduce(w)?.is_empty())
    }

    /// Reduced product.
    pub fn mul(&self, a: &SyllableWord, b: &SyllableWord) -> Result<SyllableWord> {
        self.reduce(&a.concat(b))
    }

    pub fn equal(&self, a: &SyllableWord, b: &SyllableWord) -> Result<bool> {
        Ok(self.reduce(a)? == self.reduce(b)?)
    }

    /// Multiplication table of D^f_X for a spherical X without infinite
    /// vertices. Tables are cached per subset.
    pub fn finite_group(&self, x: VertexSet) -> Result<Rc<FiniteGroupTable>> {
        if let Some(t) = self.tables.borrow().get(&x) {
            return Ok(t.clone());
        }
        let t = Rc::new(enumerate_finite_dyer_group(self.graph, x, self.budget)?);
        self.tables.borrow_mut().insert(x, t.clone());
        Ok(t)
    }

    /// The finite part D^f_X = D_{X2 ∪ Xp} of a spherical subset.
    pub fn finite_part(&self, x: VertexSet) -> VertexSet {
        x.difference(self.partition.vinf)
    }

    /// Least reduced word (shortlex) in the coset `w D^f_X`.
    pub fn coset_rep(&self, w: &SyllableWord, x: VertexSet) -> Result<SyllableWord> {
        if !self.graph.is_spherical_set(x) {
            return Err(Error::NotSpherical(self.graph.format_set(x)));
        }
        let fx = self.finite_part(x);
        if fx.is_empty() {
            return self.reduce(w);
        }
        let table = self.finite_group(fx)?;
        let mut best: Option<SyllableWord> = None;
        for d in table.elements() {
            let c = self.reduce(&w.concat(d))?;
            if best.as_ref().map_or(true, |b| c.shortlex_cmp(b) == Ordering::Less) {
                best = Some(c);
            }
        }
        Ok(best.expect("identity is always an element"))
    }

    /// Generating steps for balls: `x_v^e` for finite f, `x_v^{±1}` for ∞.
    pub fn ball_steps(&self) -> Vec<Syllable> {
        let mut steps = Vec::new();
        for v in 0..self.graph.vertex_count() {
            match self.graph.order(v) {
                Order::Finite(f) => steps.extend((1..f as i64).map(|e| Syllable::new(v, e))),
                Order::Infinite => {
                    steps.push(Syllable::new(v, 1));
                    steps.push(Syllable::new(v, -1));
                }
            }
        }
        steps.sort();
        steps
    }

    /// Breadth-first enumeration of the ball of radius `r`.
    pub fn ball(&self, r: usize) -> Result<BallEnumeration> {
        let steps = self.ball_steps();
        let mut ball = BallEnumeration {
            radius: r,
            elements: vec![SyllableWord::empty()],
            distance: vec![0],
            parent: vec![None],
            index: HashMap::from([(SyllableWord::empty(), 0)]),
        };
        let mut layer = vec![0usize];
        for d in 1..=r {
            let mut next = Vec::new();
            for &p in &layer {
                for s in &steps {
                    let w = self.reduce(&ball.elements[p].concat(&SyllableWord(vec![*s])))?;
                    if ball.index.contains_key(&w) {
                        continue;
                    }
                    let i = ball.elements.len();
                    if i >= self.budget.max_closure {
                        return Err(Error::SearchBudgetExceeded(format!(
                            "ball exceeds {} elements",
                            self.budget.max_closure
                        )));
                    }
                    ball.index.insert(w.clone(), i);
                    ball.elements.push(w);
                    ball.distance.push(d);
                    ball.parent.push(Some((p, *s)));
                    next.push(i);
                }
            }
            layer = next;
        }
        Ok(ball)
    }
}

/// Canonical form of `w` in `g` (see [`WordEngine::reduce`]).
pub fn dyer_reduce(w: &SyllableWord, g: &DyerGraph, budget: Budget) -> Result<SyllableWord> {
    WordEngine::new(g, budget).reduce(w)
}

pub fn is_trivial(w: &SyllableWord, g: &DyerGraph, budget: Budget) -> Result<bool> {
    WordEngine::new(g, budget).is_trivial(w)
}

pub fn enumerate_ball(g: &DyerGraph, r: usize, budget: Budget) -> Result<BallEnumeration> {
    WordEngine::new(g, budget).ball(r)
}

pub fn coset_canonical_rep(
    w: &SyllableWord,
    x: VertexSet,
    g: &DyerGraph,
    budget: Budget,
) -> Result<SyllableWord> {
    WordEngine::new(g, budget).coset_rep(w, x)
}

/// Word problem in a Coxeter group (all f = 2), solved on letters with
/// deletions `ss → ε` and braid moves, independently of [`WordEngine`].
pub fn tits_reduce_coxeter(
    w: &SyllableWord,
    cox: &DyerGraph,
    budget: Budget,
) -> Result<SyllableWord> {
    if !cox.is_coxeter() {
        return Err(Error::NotCoxeter);
    }
    let n = cox.vertex_count();
    let mut letters = Vec::new();
    for s in w.syllables() {
        if s.gen >= n {
            return Err(Error::UnknownGenerator(format!("#{}", s.gen)));
        }
        letters.extend(std::iter::repeat(s.gen).take(s.exp.unsigned_abs() as usize));
    }
    let moves = |x: &[usize]| {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..x.len().saturating_sub(1) {
            let (a, b) = (x[i], x[i + 1]);
            if a == b {
                let mut v = x.to_vec();
                v.drain(i..i + 2);
                out.push(v);
                continue;
            }
            let Some(m) = cox.label(a, b) else { continue };
            let m = m as usize;
            if i + m <= x.len() && (0..m).all(|k| x[i + k] == if k % 2 == 0 { a } else { b }) {
                let mut v = x.to_vec();
                for k in 0..m {
                    v[i + k] = if k % 2 == 0 { b } else { a };
                }
                out.push(v);
            }
        }
        out
    };
    let mut current = letters;
    let best = 'outer: loop {
        if current.len() > budget.max_word_len {
            return Err(Error::SearchBudgetExceeded(format!(
                "word of {} letters exceeds the limit of {}",
                current.len(),
                budget.max_word_len
            )));
        }
        let mut seen = HashSet::from([current.clone()]);
        let mut queue = VecDeque::from([current.clone()]);
        while let Some(x) = queue.pop_front() {
            for y in moves(&x) {
                if y.len() < x.len() {
                    current = y;
                    continue 'outer;
                }
                if seen.insert(y.clone()) {
                    if seen.len() > budget.max_closure {
                        return Err(Error::SearchBudgetExceeded(format!(
                            "closure exceeds {} words",
                            budget.max_closure
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }
        break seen.into_iter().min().expect("nonempty");
    };
    Ok(SyllableWord(best.into_iter().map(|g| Syllable::new(g, 1)).collect()))
}

/// Multiplication table of D^f_X for spherical X ⊆ V2 ∪ Vp, built by
/// breadth-first search over group states: the reflection matrix of the
/// Coxeter factor (entries hashed after rounding to 1e-6) and the residues of
/// the cyclic factors. Element words are the least words among those of
/// minimal syllable length.
pub fn enumerate_finite_dyer_group(
    g: &DyerGraph,
    x: VertexSet,
    budget: Budget,
) -> Result<FiniteGroupTable> {
    let p = g.partition();
    if !x.intersection(p.vinf).is_empty() {
        return Err(Error::ContainsInfiniteVertex(g.format_set(x)));
    }
    if !g.is_spherical_set(x) {
        return Err(Error::NotSpherical(g.format_set(x)));
    }
    let x2: Vec<usize> = x.intersection(p.v2).iter().collect();
    let xp: Vec<usize> = x.intersection(p.vp).iter().collect();
    let rep = ReflectionRep::new(g, &x2);
    let mut periods = HashMap::new();
    let mut steps = Vec::new();
    for v in x.iter() {
        let f = g.order(v).finite().expect("finite by the check above");
        periods.insert(v, f);
        steps.extend((1..f as i64).map(|e| Syllable::new(v, e)));
    }
    let step_index: HashMap<(usize, i64), usize> =
        steps.iter().enumerate().map(|(i, s)| ((s.gen, s.exp), i)).collect();

    type State = (DMatrix<f64>, Vec<u32>);
    let key = |s: &State| -> (Vec<i64>, Vec<u32>) {
        (s.0.iter().map(|v| (v * 1e6).round() as i64).collect(), s.1.clone())
    };
    let apply = |s: &Syllable, st: &State, left: bool| -> State {
        if let Some(k) = x2.iter().position(|&v| v == s.gen) {
            let r = &rep.reflections[k];
            let m = if left { r * &st.0 } else { &st.0 * r };
            (m, st.1.clone())
        } else {
            let k = xp.iter().position(|&v| v == s.gen).expect("generator in X");
            let mut res = st.1.clone();
            res[k] = (res[k] + s.exp as u32) % periods[&s.gen];
            (st.0.clone(), res)
        }
    };

    let identity: State = (DMatrix::identity(x2.len(), x2.len()), vec![0; xp.len()]);
    let mut states = vec![identity.clone()];
    let mut words = vec![SyllableWord::empty()];
    let mut dist = vec![0usize];
    let mut lookup = HashMap::from([(key(&identity), 0usize)]);
    let mut layer = vec![0usize];
    let mut d = 0;
    while !layer.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &h in &layer {
            for s in &steps {
                let st = apply(s, &states[h], true);
                let k = key(&st);
                let mut cand = vec![*s];
                cand.extend_from_slice(words[h].syllables());
                let cand = SyllableWord(cand);
                match lookup.get(&k) {
                    Some(&i) => {
                        if dist[i] == d && cand < words[i] {
                            words[i] = cand;
                        }
                    }
                    None => {
                        let i = states.len();
                        if i >= budget.max_group_order {
                            return Err(Error::OrderBudgetExceeded(budget.max_group_order));
                        }
                        lookup.insert(k, i);
                        states.push(st);
                        words.push(cand);
                        dist.push(d);
                        next.push(i);
                    }
                }
            }
        }
        layer = next;
    }
    let right = states
        .iter()
        .map(|st| steps.iter().map(|s| lookup[&key(&apply(s, st, false))]).collect())
        .collect();
    let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    Ok(FiniteGroupTable { subset: x, periods, steps, step_index, elements: words, index, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::gamma;

    fn w(e: &WordEngine, s: &str) -> SyllableWord {
        e.parse(s).unwrap()
    }

    #[test]
    fn normalization_examples() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        assert!(e.normalize(&w(&e, "d d d")).unwrap().is_empty());
        assert_eq!(e.display(&e.normalize(&w(&e, "d^2 d^2")).unwrap()), "d");
        assert_eq!(e.display(&e.normalize(&w(&e, "a^3")).unwrap()), "a^3");
        assert_eq!(e.display(&e.normalize(&w(&e, "b^-1 b^3 c")).unwrap()), "c");
    }

    #[test]
    fn reduce_examples() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        assert!(e.reduce(&w(&e, "a b a^-1 b")).unwrap().is_empty());
        assert_eq!(e.display(&e.reduce(&w(&e, "d^2 c d")).unwrap()), "c");
        assert_eq!(e.display(&e.reduce(&w(&e, "b c b c b")).unwrap()), "c b c");
        assert!(e.is_trivial(&w(&e, "b c b c b c b c")).unwrap());
        assert!(e.is_trivial(&SyllableWord::empty()).unwrap());
        assert!(!e.is_trivial(&w(&e, "a")).unwrap());
        // commuting syllables sort into lexicographic order
        assert_eq!(e.display(&e.reduce(&w(&e, "b a")).unwrap()), "a b");
        assert_eq!(e.display(&e.reduce(&w(&e, "d c")).unwrap()), "c d");
    }

    #[test]
    fn tits_examples() {
        let g = gamma(4, 3);
        let cox = g.induced_subgraph(&["b", "c"]).unwrap();
        let p = |s: &str| SyllableWord::parse(s, |x| cox.index_of(x)).unwrap();
        let b = Budget::default();
        assert!(tits_reduce_coxeter(&p("b c b c b c b c"), &cox, b).unwrap().is_empty());
        assert!(tits_reduce_coxeter(&p("b b"), &cox, b).unwrap().is_empty());
        let r = tits_reduce_coxeter(&p("b c b c b"), &cox, b).unwrap();
        assert_eq!(r.display(cox.ids()), "c b c");
        assert_eq!(tits_reduce_coxeter(&p("b"), &g, b), Err(Error::NotCoxeter));
    }

    #[test]
    fn budget_is_enforced() {
        let g = gamma(4, 3);
        let tight = Budget { max_word_len: 3, ..Budget::default() };
        let e = WordEngine::new(&g, tight);
        assert!(matches!(
            e.reduce(&w(&e, "a b a b")),
            Err(Error::SearchBudgetExceeded(_))
        ));
        let b = Budget::default().parse_overrides("closure=5, order=7").unwrap();
        assert_eq!((b.max_closure, b.max_group_order, b.max_word_len), (5, 7, 24));
        assert_eq!(Budget::default().parse_overrides("12").unwrap().max_closure, 12);
        assert!(Budget::default().parse_overrides("nope=1").is_err());
    }

    #[test]
    fn finite_tables() {
        let g = gamma(4, 3);
        let b = Budget::default();
        let t = enumerate_finite_dyer_group(&g, g.set_of(&["b", "c"]).unwrap(), b).unwrap();
        assert_eq!(t.order(), 8);
        for i in 0..t.order() {
            assert_eq!(t.product(i, t.inverse(i)), 0);
        }
        let t = enumerate_finite_dyer_group(&g, g.set_of(&["d"]).unwrap(), b).unwrap();
        assert_eq!(t.order(), 3);
        let t = enumerate_finite_dyer_group(&g, g.set_of(&["c", "d"]).unwrap(), b).unwrap();
        assert_eq!(t.order(), 6);
        assert!(matches!(
            enumerate_finite_dyer_group(&g, g.set_of(&["a"]).unwrap(), b),
            Err(Error::ContainsInfiniteVertex(_))
        ));
        assert!(matches!(
            enumerate_finite_dyer_group(&g, g.set_of(&["b", "d"]).unwrap(), b),
            Err(Error::NotSpherical(_))
        ));
    }

    #[test]
    fn ball_examples() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        assert_eq!(e.ball(0).unwrap().len(), 1);
        let b1 = e.ball(1).unwrap();
        let shown: Vec<String> = b1.elements.iter().map(|x| e.display(x)).collect();
        assert_eq!(shown, ["", "a", "a^-1", "b", "c", "d", "d^2"]);
        let single = crate::fixtures::single(crate::graph::Order::Finite(3));
        let e = WordEngine::new(&single, Budget::default());
        assert_eq!(e.ball(1).unwrap().len(), 3);
        assert_eq!(e.ball(5).unwrap().len(), 3);
    }

    #[test]
    fn coset_examples() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        let set = |s: &[&str]| g.set_of(s).unwrap();
        assert!(e.coset_rep(&w(&e, "b"), set(&["b"])).unwrap().is_empty());
        assert_eq!(e.display(&e.coset_rep(&w(&e, "a b"), set(&["b"])).unwrap()), "a");
        assert_eq!(e.display(&e.coset_rep(&w(&e, "c d"), set(&["d"])).unwrap()), "c");
        // the infinite part of X does not enter D^f_X
        assert_eq!(e.display(&e.coset_rep(&w(&e, "a b"), set(&["a", "b"])).unwrap()), "a");
        assert!(e.coset_rep(&w(&e, "a"), set(&["b", "d"])).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let g = gamma(4, 3);
        let e = WordEngine::new(&g, Budget::default());
        let x = w(&e, "a^-2 b d^2 a");
        assert_eq!(e.display(&x), "a^-2 b d^2 a");
        assert!(matches!(e.parse("z"), Err(Error::UnknownGenerator(_))));
        assert!(matches!(e.parse("a^0"), Err(Error::Parse(_))));
        assert!(matches!(e.parse("a^x"), Err(Error::Parse(_))));
    }

    #[test]
    fn exponent_order_puts_positive_first() {
        let mut v = vec![Syllable::new(0, -1), Syllable::new(0, 2), Syllable::new(0, 1), Syllable::new(0, -3)];
        v.sort();
        let e: Vec<i64> = v.iter().map(|s| s.exp).collect();
        assert_eq!(e, [1, 2, -1, -3]);
    }
}
