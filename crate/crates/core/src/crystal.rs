//! Abstract crystals realized by LS paths and their tensor products.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Debug, Display, Write as _};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::cartan::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::lspath::LsPath;

/// An element of a normal crystal with root operators `ẽ_i`, `f̃_i`.
pub trait CrystalElement: Clone + Eq + Hash + Ord + Debug + Display {
    fn weight(&self) -> Weight;
    fn e(&self, rs: &RootSystem, i: usize) -> Option<Self>;
    fn f(&self, rs: &RootSystem, i: usize) -> Option<Self>;

    /// `ε_i(b) = max{ n : ẽ_i^n b ≠ 0 }`.
    fn epsilon(&self, rs: &RootSystem, i: usize) -> i64 {
        let mut n = 0;
        let mut b = self.e(rs, i);
        while let Some(x) = b {
            n += 1;
            b = x.e(rs, i);
        }
        n
    }

    /// `φ_i(b) = max{ n : f̃_i^n b ≠ 0 }`.
    fn phi(&self, rs: &RootSystem, i: usize) -> i64 {
        let mut n = 0;
        let mut b = self.f(rs, i);
        while let Some(x) = b {
            n += 1;
            b = x.f(rs, i);
        }
        n
    }
}

impl CrystalElement for LsPath {
    fn weight(&self) -> Weight {
        LsPath::weight(self)
    }

    fn e(&self, rs: &RootSystem, i: usize) -> Option<Self> {
        LsPath::e(self, rs, i)
    }

    fn f(&self, rs: &RootSystem, i: usize) -> Option<Self> {
        LsPath::f(self, rs, i)
    }

    fn epsilon(&self, rs: &RootSystem, i: usize) -> i64 {
        let mut n = 0;
        let mut b = self.e(rs, i);
        while let Some(x) = b {
            n += 1;
            b = x.e(rs, i);
        }
        debug_assert_eq!(
            n,
            -self.path().min_height(i).to_integer(),
            "ε_{} of {self}",
            i + 1
        );
        n
    }

    fn phi(&self, rs: &RootSystem, i: usize) -> i64 {
        let mut n = 0;
        let mut b = self.f(rs, i);
        while let Some(x) = b {
            n += 1;
            b = x.f(rs, i);
        }
        debug_assert_eq!(
            n,
            (self.path().heights(i).last().copied().unwrap() - self.path().min_height(i))
                .to_integer(),
            "φ_{} of {self}",
            i + 1
        );
        n
    }
}

/// `b ⊗ b′`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tensor<A, B>(pub A, pub B);

/// A pair of LS paths.
pub type TensorPair = Tensor<LsPath, LsPath>;

impl<A: CrystalElement, B: CrystalElement> CrystalElement for Tensor<A, B> {
    fn weight(&self) -> Weight {
        &self.0.weight() + &self.1.weight()
    }

    fn f(&self, rs: &RootSystem, i: usize) -> Option<Self> {
        if self.0.phi(rs, i) > self.1.epsilon(rs, i) {
            self.0.f(rs, i).map(|a| Tensor(a, self.1.clone()))
        } else {
            self.1.f(rs, i).map(|b| Tensor(self.0.clone(), b))
        }
    }

    fn e(&self, rs: &RootSystem, i: usize) -> Option<Self> {
        if self.0.phi(rs, i) >= self.1.epsilon(rs, i) {
            self.0.e(rs, i).map(|a| Tensor(a, self.1.clone()))
        } else {
            self.1.e(rs, i).map(|b| Tensor(self.0.clone(), b))
        }
    }

    fn epsilon(&self, rs: &RootSystem, i: usize) -> i64 {
        let wt = self.0.weight();
        self.0
            .epsilon(rs, i)
            .max(self.1.epsilon(rs, i) - wt[i])
    }

    fn phi(&self, rs: &RootSystem, i: usize) -> i64 {
        let wt = self.1.weight();
        self.1.phi(rs, i).max(self.0.phi(rs, i) + wt[i])
    }
}

impl<A: Display, B: Display> Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

/// `ẽ_i^{ε_i(b)} b`.
pub fn emax<T: CrystalElement>(rs: &RootSystem, b: &T, i: usize) -> T {
    let mut x = b.clone();
    while let Some(y) = x.e(rs, i) {
        x = y;
    }
    x
}

/// `f̃_i^{φ_i(b)} b`.
pub fn fmax<T: CrystalElement>(rs: &RootSystem, b: &T, i: usize) -> T {
    let mut x = b.clone();
    while let Some(y) = x.f(rs, i) {
        x = y;
    }
    x
}

/// The Weyl group lift `S_i`: reverses the `i`-string through `b`.
pub fn s_i<T: CrystalElement>(rs: &RootSystem, b: &T, i: usize) -> T {
    let n = b.weight()[i];
    let mut x = b.clone();
    for _ in 0..n.abs() {
        x = if n > 0 { x.f(rs, i) } else { x.e(rs, i) }
            .expect("string length bounds the pairing");
    }
    x
}

/// A finite set of crystal elements with its `f̃_i` edges.
#[derive(Debug, Clone)]
pub struct CrystalGraph<T> {
    vertices: Vec<T>,
    index: HashMap<T, usize>,
    /// `(source, color) → target` for `f̃_color`.
    edges: BTreeMap<(usize, usize), usize>,
    highest: Vec<usize>,
}

impl<T: CrystalElement> CrystalGraph<T> {
    /// The subgraph induced on `set`: an `i`-edge is kept when both ends
    /// lie in the set.
    pub fn induced(rs: &RootSystem, set: impl IntoIterator<Item = T>) -> Self {
        let vertices: Vec<T> = set.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let index: HashMap<T, usize> = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, b)| (b, k))
            .collect();
        let mut edges = BTreeMap::new();
        let mut has_incoming = vec![false; vertices.len()];
        for (k, b) in vertices.iter().enumerate() {
            for i in 0..rs.rank() {
                if let Some(t) = b.f(rs, i).and_then(|c| index.get(&c).copied()) {
                    edges.insert((k, i), t);
                    has_incoming[t] = true;
                    check_edge(rs, b, &vertices[t], i);
                }
            }
        }
        let highest = (0..vertices.len())
            .filter(|&k| {
                (0..rs.rank()).all(|i| {
                    vertices[k]
                        .e(rs, i)
                        .is_none_or(|c| !index.contains_key(&c))
                })
            })
            .collect();
        CrystalGraph {
            vertices,
            index,
            edges,
            highest,
        }
    }

    /// The closure of `seeds` under all `f̃_i`.
    pub fn generate(rs: &RootSystem, seeds: impl IntoIterator<Item = T>) -> Self {
        let mut seen: BTreeSet<T> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for s in seeds {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..rs.rank() {
                if let Some(c) = b.f(rs, i) {
                    if seen.insert(c.clone()) {
                        queue.push_back(c);
                    }
                }
            }
        }
        Self::induced(rs, seen)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[T] {
        &self.vertices
    }

    pub fn contains(&self, b: &T) -> bool {
        self.index.contains_key(b)
    }

    pub fn to_set(&self) -> BTreeSet<T> {
        self.vertices.iter().cloned().collect()
    }

    /// `(source, color, target)` for every `f̃` edge, colors 0-based.
    pub fn edges(&self) -> impl Iterator<Item = (&T, usize, &T)> {
        self.edges
            .iter()
            .map(|(&(s, i), &t)| (&self.vertices[s], i, &self.vertices[t]))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn highest_weight_vertices(&self) -> Vec<&T> {
        self.highest.iter().map(|&k| &self.vertices[k]).collect()
    }

    /// The unique highest weight vertex.
    pub fn top(&self) -> Result<&T> {
        match self.highest.as_slice() {
            [k] => Ok(&self.vertices[*k]),
            other => Err(Error::MultipleHighestWeights(other.len())),
        }
    }

    pub fn character(&self) -> CharPoly {
        character(&self.vertices)
    }

    /// Graphviz rendering with 1-based edge colors.
    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_highlighted(name, |_| false)
    }

    /// DOT output with the selected vertices drawn in red.
    pub fn to_dot_highlighted(&self, name: &str, highlight: impl Fn(&T) -> bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
        let _ = writeln!(out, "  rankdir=TB;");
        for (k, b) in self.vertices.iter().enumerate() {
            let style = if highlight(b) { ", color=red, penwidth=2" } else { "" };
            let _ = writeln!(
                out,
                "  n{k} [label=\"{}\\nwt {}\"{style}];",
                escape(&b.to_string()),
                b.weight()
            );
        }
        for (&(s, i), &t) in &self.edges {
            let _ = writeln!(out, "  n{s} -> n{t} [label=\"{}\"];", i + 1);
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn check_edge<T: CrystalElement>(rs: &RootSystem, b: &T, c: &T, i: usize) {
    debug_assert_eq!(c.e(rs, i).as_ref(), Some(b), "ẽ_{} f̃_{} {b}", i + 1, i + 1);
    debug_assert_eq!(&c.weight() + &rs.simple_root(i), b.weight());
    debug_assert_eq!(c.epsilon(rs, i), b.epsilon(rs, i) + 1);
    debug_assert_eq!(c.phi(rs, i) + 1, b.phi(rs, i));
    debug_assert_eq!(b.phi(rs, i), b.epsilon(rs, i) + b.weight()[i]);
}

/// `𝓑(λ)`, generated from `π^λ`.
pub fn generate_crystal(rs: &RootSystem, lambda: &Weight) -> Result<CrystalGraph<LsPath>> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(CrystalGraph::generate(rs, [LsPath::highest(lambda)]))
}

/// All pairs `a ⊗ b`.
pub fn tensor_set<A: Clone + Ord, B: Clone + Ord>(
    left: &BTreeSet<A>,
    right: &BTreeSet<B>,
) -> BTreeSet<Tensor<A, B>> {
    left.iter()
        .flat_map(|a| right.iter().map(move |b| Tensor(a.clone(), b.clone())))
        .collect()
}

/// The connected component of `seed` in the graph induced on
/// `{ b : member(b) }`.
pub fn induced_component<T, P>(rs: &RootSystem, seed: &T, member: P) -> BTreeSet<T>
where
    T: CrystalElement,
    P: Fn(&T) -> bool,
{
    debug_assert!(member(seed));
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(b) = queue.pop_front() {
        for i in 0..rs.rank() {
            for c in [b.f(rs, i), b.e(rs, i)].into_iter().flatten() {
                if !seen.contains(&c) && member(&c) {
                    seen.insert(c.clone());
                    queue.push_back(c);
                }
            }
        }
    }
    seen
}

/// Connected components of the graph induced on `set`, each sorted.
pub fn components<T: CrystalElement>(rs: &RootSystem, set: &BTreeSet<T>) -> Vec<BTreeSet<T>> {
    let mut left = set.clone();
    let mut out = Vec::new();
    while let Some(seed) = left.iter().next().cloned() {
        let c = induced_component(rs, &seed, |b| set.contains(b));
        for b in &c {
            left.remove(b);
        }
        out.push(c);
    }
    out
}

/// Elements of `set` with no `ẽ_i` edge inside `set`.
pub fn highest_weight_elements<'a, T: CrystalElement>(
    rs: &RootSystem,
    set: &'a BTreeSet<T>,
) -> Vec<&'a T> {
    set.iter()
        .filter(|b| {
            (0..rs.rank()).all(|i| b.e(rs, i).is_none_or(|c| !set.contains(&c)))
        })
        .collect()
}

/// Compares two subsets of crystals anchored at their unique tops: the
/// bijection propagated along colored edges must be total and preserve
/// `wt`, `ε_i`, `φ_i` and every edge in both directions.
pub fn is_isomorphic<A, B>(rs: &RootSystem, a: &BTreeSet<A>, b: &BTreeSet<B>) -> Result<bool>
where
    A: CrystalElement,
    B: CrystalElement,
{
    let ta = unique_top(rs, a)?;
    let tb = unique_top(rs, b)?;
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut forward: HashMap<A, B> = HashMap::new();
    let mut backward: HashMap<B, A> = HashMap::new();
    let mut queue = VecDeque::from([(ta.clone(), tb.clone())]);
    forward.insert(ta.clone(), tb.clone());
    backward.insert(tb.clone(), ta.clone());
    while let Some((x, y)) = queue.pop_front() {
        if x.weight() != y.weight() {
            return Ok(false);
        }
        for i in 0..rs.rank() {
            if x.epsilon(rs, i) != y.epsilon(rs, i) || x.phi(rs, i) != y.phi(rs, i) {
                return Ok(false);
            }
            let steps = [
                (
                    x.f(rs, i).filter(|c| a.contains(c)),
                    y.f(rs, i).filter(|c| b.contains(c)),
                ),
                (
                    x.e(rs, i).filter(|c| a.contains(c)),
                    y.e(rs, i).filter(|c| b.contains(c)),
                ),
            ];
            for step in steps {
                match step {
                    (None, None) => {}
                    (Some(x2), Some(y2)) => match (forward.get(&x2), backward.get(&y2)) {
                        (None, None) => {
                            forward.insert(x2.clone(), y2.clone());
                            backward.insert(y2.clone(), x2.clone());
                            queue.push_back((x2, y2));
                        }
                        (Some(img), Some(pre)) if img == &y2 && pre == &x2 => {}
                        _ => return Ok(false),
                    },
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(forward.len() == a.len())
}

fn unique_top<'a, T: CrystalElement>(rs: &RootSystem, set: &'a BTreeSet<T>) -> Result<&'a T> {
    match highest_weight_elements(rs, set).as_slice() {
        [t] => Ok(t),
        other => Err(Error::MultipleHighestWeights(other.len())),
    }
}

/// A finitely supported integer combination of formal exponentials `e^λ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    terms: BTreeMap<Weight, i64>,
}

impl CharPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^λ`.
    pub fn monomial(lambda: Weight) -> Self {
        let mut p = Self::zero();
        p.add_term(lambda, 1);
        p
    }

    pub fn add_term(&mut self, lambda: Weight, coeff: i64) {
        let entry = self.terms.entry(lambda.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Weight) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    /// `Σ c_λ`, the value at `e^λ = 1`.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// Applies `x ↦ s_i x` to every exponent.
    pub fn reflect(&self, rs: &RootSystem, i: usize) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(rs.simple_reflect(w, i), *c);
        }
        out
    }

    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| &self.reflect(rs, i) == self)
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }
}

impl Add for &CharPoly {
    type Output = CharPoly;

    fn add(self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }
}

impl Sub for &CharPoly {
    type Output = CharPoly;

    fn sub(self, rhs: &CharPoly) -> CharPoly {
        self + &(-rhs)
    }
}

impl Neg for &CharPoly {
    type Output = CharPoly;

    fn neg(self) -> CharPoly {
        self.scale(-1)
    }
}

impl Mul for &CharPoly {
    type Output = CharPoly;

    fn mul(self, rhs: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if k == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "e^{w}")?;
        }
        Ok(())
    }
}

/// Serialized as a list of `{weight, coeff}` records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharTerm {
    pub weight: Weight,
    pub coeff: i64,
}

impl Serialize for CharPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<CharTerm> = self
            .terms
            .iter()
            .map(|(w, c)| CharTerm {
                weight: w.clone(),
                coeff: *c,
            })
            .collect();
        terms.serialize(s)
    }
}

/// `ch(S) = Σ_{b ∈ S} e^{wt b}`.
pub fn character<'a, T: CrystalElement + 'a>(set: impl IntoIterator<Item = &'a T>) -> CharPoly {
    let mut p = CharPoly::zero();
    for b in set {
        p.add_term(b.weight(), 1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    fn a2() -> RootSystem {
        RootSystem::from_name("A2").unwrap()
    }

    /// `Π_{β>0} ⟨λ+ρ, β^∨⟩ / ⟨ρ, β^∨⟩`.
    fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> i64 {
        let rho = rs.rho();
        let lr = lambda + &rho;
        let (mut num, mut den) = (1i64, 1i64);
        for b in rs.positive_roots() {
            num *= rs.coroot_pairing(&lr, b);
            den *= rs.coroot_pairing(&rho, b);
        }
        assert_eq!(num % den, 0);
        num / den
    }

    #[test]
    fn crystal_sizes_match_dimension_formula() {
        for (name, bound) in [("A1", 5), ("A2", 3), ("B2", 2), ("C2", 2), ("G2", 1), ("A3", 1), ("B3", 1), ("C3", 1)] {
            let rs = RootSystem::from_name(name).unwrap();
            let n = rs.rank();
            let mut lambdas = vec![vec![]];
            for _ in 0..n {
                lambdas = lambdas
                    .into_iter()
                    .flat_map(|l: Vec<i64>| {
                        (0..=bound).map(move |c| {
                            let mut l = l.clone();
                            l.push(c);
                            l
                        })
                    })
                    .collect();
            }
            for l in lambdas {
                let lambda = Weight(l);
                let g = generate_crystal(&rs, &lambda).unwrap();
                assert_eq!(g.len() as i64, weyl_dimension(&rs, &lambda), "{name} {lambda}");
                assert!(g.character().is_w_invariant(&rs), "{name} {lambda}");
                assert_eq!(g.top().unwrap(), &LsPath::highest(&lambda));
            }
        }
    }

    #[test]
    fn small_crystals() {
        let rs = a2();
        assert_eq!(generate_crystal(&rs, &w(&[1, 0])).unwrap().len(), 3);
        assert_eq!(generate_crystal(&rs, &w(&[1, 1])).unwrap().len(), 8);
        let a1 = RootSystem::from_name("A1").unwrap();
        for m in 0..6 {
            assert_eq!(generate_crystal(&a1, &w(&[m])).unwrap().len() as i64, m + 1);
        }
        assert!(generate_crystal(&rs, &w(&[-1, 0])).is_err());
    }

    #[test]
    fn epsilon_phi_examples() {
        let rs = a2();
        let p = LsPath::highest(&w(&[1, 0]));
        assert_eq!(p.epsilon(&rs, 0), 0);
        assert_eq!(p.phi(&rs, 0), 1);
        assert_eq!(p.phi(&rs, 1), 0);
    }

    #[test]
    fn s_i_examples() {
        let rs = a2();
        let p = LsPath::highest(&w(&[1, 0]));
        assert_eq!(s_i(&rs, &p, 0), LsPath::straight(&rs, &w(&[1, 0]), &w(&[-1, 1])).unwrap());
        assert_eq!(s_i(&rs, &p, 1), p);
        for b in generate_crystal(&rs, &w(&[1, 1])).unwrap().vertices() {
            for i in 0..2 {
                assert_eq!(s_i(&rs, b, i).weight(), rs.simple_reflect(&b.weight(), i));
                assert_eq!(&s_i(&rs, &s_i(&rs, b, i), i), b);
                assert_eq!(emax(&rs, b, i).epsilon(&rs, i), 0);
                assert_eq!(fmax(&rs, b, i).phi(&rs, i), 0);
            }
        }
    }

    #[test]
    fn tensor_rule_examples() {
        let rs = a2();
        let lam = LsPath::highest(&w(&[1, 1]));
        let mu = LsPath::highest(&w(&[1, 0]));
        let t = Tensor(lam.clone(), mu.clone());
        assert_eq!(t.f(&rs, 0), Some(Tensor(lam.f(&rs, 0).unwrap(), mu.clone())));
        let f1mu = mu.f(&rs, 0).unwrap();
        let t = Tensor(lam.clone(), f1mu.clone());
        assert_eq!(t.f(&rs, 1), Some(Tensor(lam.f(&rs, 1).unwrap(), f1mu.clone())));
        for i in 0..2 {
            assert_eq!(Tensor(lam.clone(), mu.clone()).e(&rs, i), None);
        }
    }

    fn iterated_epsilon<T: CrystalElement>(rs: &RootSystem, b: &T, i: usize) -> i64 {
        let mut n = 0;
        let mut x = b.e(rs, i);
        while let Some(y) = x {
            n += 1;
            x = y.e(rs, i);
        }
        n
    }

    fn iterated_phi<T: CrystalElement>(rs: &RootSystem, b: &T, i: usize) -> i64 {
        let mut n = 0;
        let mut x = b.f(rs, i);
        while let Some(y) = x {
            n += 1;
            x = y.f(rs, i);
        }
        n
    }

    #[test]
    fn tensor_matches_concatenation() {
        let rs = a2();
        for (l, m) in [(w(&[1, 0]), w(&[1, 0])), (w(&[1, 1]), w(&[1, 0])), (w(&[0, 1]), w(&[2, 0]))] {
            let a = generate_crystal(&rs, &l).unwrap().to_set();
            let b = generate_crystal(&rs, &m).unwrap().to_set();
            let pairs = tensor_set(&a, &b);
            for t in &pairs {
                let cat = t.0.concatenate(&t.1).unwrap();
                for i in 0..2 {
                    assert_eq!(t.epsilon(&rs, i), iterated_epsilon(&rs, t, i));
                    assert_eq!(t.phi(&rs, i), iterated_phi(&rs, t, i));
                    let via_tensor = t.f(&rs, i).map(|x| x.0.concatenate(&x.1).unwrap());
                    assert_eq!(cat.f(&rs, i), via_tensor, "f_{i} on {t}");
                    let via_tensor = t.e(&rs, i).map(|x| x.0.concatenate(&x.1).unwrap());
                    assert_eq!(cat.e(&rs, i), via_tensor, "e_{i} on {t}");
                }
            }
            let g = CrystalGraph::induced(&rs, pairs.iter().cloned());
            assert_eq!(g.character(), &character(&a) * &character(&b));
            // components are indexed by λ-dominant paths of 𝓑(μ)
            let comps = components(&rs, &pairs);
            let dominant: BTreeSet<LsPath> = b.iter().filter(|p| p.is_dominant(&l)).cloned().collect();
            assert_eq!(comps.len(), dominant.len());
            let tops: BTreeSet<LsPath> = comps
                .iter()
                .map(|c| {
                    let tops = highest_weight_elements(&rs, c);
                    assert_eq!(tops.len(), 1);
                    assert_eq!(tops[0].0, LsPath::highest(&l));
                    tops[0].1.clone()
                })
                .collect();
            assert_eq!(tops, dominant);
        }
    }

    #[test]
    fn characters() {
        let rs = a2();
        let lam = w(&[1, 1]);
        assert_eq!(character([&LsPath::highest(&lam)]), CharPoly::monomial(lam));
        let ch = generate_crystal(&rs, &w(&[1, 0])).unwrap().character();
        let expected = (1..=3).fold(CharPoly::zero(), |acc, k| {
            &acc + &CharPoly::monomial(rs.epsilon(k).unwrap())
        });
        assert_eq!(ch, expected);
    }

    #[test]
    fn isomorphism_basics() {
        let rs = a2();
        let a = generate_crystal(&rs, &w(&[1, 1])).unwrap().to_set();
        assert!(is_isomorphic(&rs, &a, &a).unwrap());
        let b = generate_crystal(&rs, &w(&[2, 0])).unwrap().to_set();
        assert!(!is_isomorphic(&rs, &a, &b).unwrap());
        let two = tensor_set(&generate_crystal(&rs, &w(&[1, 0])).unwrap().to_set(), &generate_crystal(&rs, &w(&[1, 0])).unwrap().to_set());
        assert_eq!(is_isomorphic(&rs, &two, &a), Err(Error::MultipleHighestWeights(2)));
        let c = components(&rs, &two)
            .into_iter()
            .find(|c| c.len() == 6)
            .unwrap();
        assert!(is_isomorphic(&rs, &c, &b).unwrap());
    }

    #[test]
    fn dot_export() {
        let rs = a2();
        let g = generate_crystal(&rs, &w(&[1, 0])).unwrap();
        let dot = g.to_dot("B(1,0)");
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("label=\"1\"") && dot.contains("label=\"2\""));
    }

    #[test]
    fn char_poly_display() {
        let mut p = CharPoly::monomial(w(&[1, 0]));
        p.add_term(w(&[0, 0]), -2);
        assert_eq!(p.to_string(), "e^(1,0) - 2e^(0,0)");
        assert_eq!(CharPoly::zero().to_string(), "0");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn crystal_axioms_hold_on_b2(a in 0i64..3, b in 0i64..3, steps in proptest::collection::vec(0usize..2, 0..8)) {
            let rs = RootSystem::from_name("B2").unwrap();
            let mut x = LsPath::highest(&w(&[a, b]));
            for i in steps {
                if let Some(y) = x.f(&rs, i) {
                    x = y;
                }
            }
            for i in 0..2 {
                prop_assert_eq!(x.phi(&rs, i), x.epsilon(&rs, i) + x.weight()[i]);
                if let Some(y) = x.f(&rs, i) {
                    prop_assert_eq!(y.e(&rs, i), Some(x.clone()));
                }
            }
        }

        #[test]
        fn character_is_multiplicative(l in 0i64..3, m in 0i64..3) {
            let rs = a2();
            let a = generate_crystal(&rs, &w(&[l, 1])).unwrap().to_set();
            let b = generate_crystal(&rs, &w(&[1, m])).unwrap().to_set();
            let t = tensor_set(&a, &b);
            prop_assert_eq!(character(&t), &character(&a) * &character(&b));
        }
    }
}
