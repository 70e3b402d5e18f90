//! Helpers for the acceptance target: result lines, a matrix model of
//! finite Dyer groups that shares no code with the word engine, and graph
//! generators.

use std::collections::{HashMap, VecDeque};
use std::f64::consts::PI;

use dyercat::{DyerGraph, Order, SyllableWord};
use nalgebra::DMatrix;
use rand::Rng;

/// Prints `criterion N: PASS|FAIL <detail>` and returns `pass`.
pub fn report(n: u32, pass: bool, detail: &str) -> bool {
    println!("criterion {n}: {} {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}

type Key = Vec<i64>;

fn key(m: &DMatrix<f64>) -> Key {
    m.iter().map(|x| (x * 1e6).round() as i64).collect()
}

/// Block diagonal model: the geometric representation on V₂ and a plane
/// rotation by 2π/f for each vertex with 3 ≤ f < ∞. Faithful for complete
/// graphs without infinite-order vertices.
pub struct MatrixModel {
    gens: Vec<DMatrix<f64>>,
    orders: Vec<i64>,
    elements: HashMap<Key, usize>,
}

impl MatrixModel {
    /// `None` if the graph is incomplete, has an infinite vertex, or the
    /// group has more than `max_order` elements.
    pub fn new(g: &DyerGraph, max_order: usize) -> Option<MatrixModel> {
        let n = g.vertex_count();
        for u in 0..n {
            if g.order(u) == Order::Infinite {
                return None;
            }
            for v in u + 1..n {
                g.label(u, v)?;
            }
        }
        let two: Vec<usize> = (0..n).filter(|&v| g.order(v) == Order::Finite(2)).collect();
        let dim = two.len() + 2 * (n - two.len());
        let mut gens = Vec::with_capacity(n);
        let mut offset = two.len();
        for v in 0..n {
            let mut m = DMatrix::<f64>::identity(dim, dim);
            match g.order(v) {
                Order::Finite(2) => {
                    let s = two.iter().position(|&x| x == v).unwrap();
                    for (t, &w) in two.iter().enumerate() {
                        let b = if t == s { 1.0 } else { -(PI / g.label(v, w).unwrap() as f64).cos() };
                        m[(s, t)] -= 2.0 * b;
                    }
                }
                Order::Finite(f) => {
                    let th = 2.0 * PI / f as f64;
                    m[(offset, offset)] = th.cos();
                    m[(offset, offset + 1)] = -th.sin();
                    m[(offset + 1, offset)] = th.sin();
                    m[(offset + 1, offset + 1)] = th.cos();
                    offset += 2;
                }
                Order::Infinite => unreachable!(),
            }
            gens.push(m);
        }
        let id = DMatrix::<f64>::identity(dim, dim);
        let mut elements = HashMap::from([(key(&id), 0)]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = &x * s;
                let k = key(&y);
                if !elements.contains_key(&k) {
                    if elements.len() >= max_order {
                        return None;
                    }
                    elements.insert(k, elements.len());
                    queue.push_back(y);
                }
            }
        }
        let orders = (0..n)
            .map(|v| match g.order(v) {
                Order::Finite(f) => f as i64,
                Order::Infinite => unreachable!(),
            })
            .collect();
        Some(MatrixModel { gens, orders, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Index of the element a word evaluates to.
    pub fn eval(&self, w: &SyllableWord) -> usize {
        let dim = self.gens[0].nrows();
        let mut x = DMatrix::<f64>::identity(dim, dim);
        for s in w.syllables() {
            for _ in 0..s.exp.rem_euclid(self.orders[s.gen]) {
                x = &x * &self.gens[s.gen];
            }
        }
        self.elements[&key(&x)]
    }
}

/// Every Dyer graph on 1..=3 vertices with f ∈ {2,3,4} and edge labels in
/// {2,3,4} (each pair may also be non-adjacent).
pub fn small_graphs() -> Vec<DyerGraph> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for fs in 0..3usize.pow(n as u32) {
            let f: Vec<u32> = (0..n).map(|k| 2 + (fs / 3usize.pow(k as u32) % 3) as u32).collect();
            for es in 0..4usize.pow(pairs.len() as u32) {
                let mut edges = Vec::new();
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    let c = es / 4usize.pow(k as u32) % 4;
                    if c > 0 {
                        edges.push((format!("v{i}"), format!("v{j}"), 1 + c as u32));
                    }
                }
                let vs = (0..n).map(|i| (format!("v{i}"), Order::Finite(f[i]))).collect();
                if let Ok(g) = DyerGraph::new(vs, edges) {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// All words of at most `len` syllables, adjacent syllables on distinct
/// generators, exponents 1..f(v).
pub fn all_words(g: &DyerGraph, len: usize) -> Vec<SyllableWord> {
    let letters: Vec<(usize, i64)> = (0..g.vertex_count())
        .flat_map(|v| {
            let f = match g.order(v) {
                Order::Finite(f) => f as i64,
                Order::Infinite => 2,
            };
            (1..f).map(move |e| (v, e))
        })
        .collect();
    let mut out = vec![SyllableWord::empty()];
    let mut layer = vec![SyllableWord::empty()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            let last = w.syllables().last().map(|s| s.gen);
            for &(v, e) in &letters {
                if Some(v) != last {
                    let mut x = w.clone();
                    x.0.push(dyercat::Syllable::new(v, e));
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Random valid Dyer graph on 1..=max_n vertices.
pub fn random_graph(r: &mut impl Rng, max_n: usize) -> DyerGraph {
    let n = r.gen_range(1..=max_n);
    let orders: Vec<Order> = (0..n)
        .map(|_| match r.gen_range(0..6) {
            0..=2 => Order::Finite(2),
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
    DyerGraph::new((0..n).map(|i| (format!("v{i}"), orders[i])).collect(), edges).expect("valid by construction")
}
