//! Weyl group arithmetic on materialized groups.
//!
//! Elements are identified by their action matrix on fundamental-weight
//! coordinates and carry one stored reduced word. The whole group is
//! enumerated up front, so cosets, stabilizers and Bruhat maxima are found by
//! exhaustive scans.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::Zero;

use crate::cartan::{Rat, RationalPoint, RootSystem, Weight};
use crate::error::{Error, Result};

/// Groups larger than this are not materialized.
pub const MAX_GROUP_ORDER: u128 = 200_000;

/// Bruhat intervals are tabulated up front below this order.
const BRUHAT_TABLE_LIMIT: usize = 5_000;

#[derive(Debug, Clone)]
pub struct WeylElement {
    /// Row-major `n×n` action on fundamental-weight coordinates.
    action: Vec<i64>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.action.cmp(&other.action))
    }
}

impl WeylElement {
    /// The stored reduced word (0-based simple indices).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The stored reduced word with 1-based indices, as used in JSON.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    /// Coxeter length.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn action(&self) -> &[i64] {
        &self.action
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for i in &self.word {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// The subgroup `W_J` generated by simple reflections in `J`.
#[derive(Debug, Clone)]
pub struct ParabolicSubgroup {
    pub generators: Vec<usize>,
    pub elements: Vec<WeylElement>,
}

impl ParabolicSubgroup {
    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.contains(w)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// A subgroup generated by reflections `s_β`.
#[derive(Debug, Clone)]
pub struct ReflectionSubgroup {
    /// Indices into the positive roots of the defining reflections.
    pub reflections: Vec<usize>,
    pub elements: Vec<WeylElement>,
}

impl ReflectionSubgroup {
    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.contains(w)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    lengths: Vec<usize>,
    /// `left[w][i]` is the index of `s_i w`.
    left: Vec<Vec<usize>>,
    /// `right[w][i]` is the index of `w s_i`.
    right: Vec<Vec<usize>>,
    bruhat: OnceLock<Vec<Vec<bool>>>,
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Result<Self> {
        let order = rs.cartan_type().weyl_order();
        if order > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge(rs.cartan_type().to_string()));
        }
        let n = rs.rank();
        let gens: Vec<Vec<i64>> = (0..n).map(|i| simple_matrix(&rs, i)).collect();
        let identity = identity_matrix(n);

        let mut elements = vec![WeylElement {
            action: identity.clone(),
            word: vec![],
        }];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(g, &elements[x].action, n);
                if !index.contains_key(&m) {
                    let mut word = vec![i];
                    word.extend_from_slice(&elements[x].word);
                    index.insert(m.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(WeylElement { action: m, word });
                }
            }
        }
        debug_assert_eq!(elements.len() as u128, order);

        let left = elements
            .iter()
            .map(|w| {
                gens.iter()
                    .map(|g| index[&mat_mul(g, &w.action, n)])
                    .collect()
            })
            .collect();
        let right = elements
            .iter()
            .map(|w| {
                gens.iter()
                    .map(|g| index[&mat_mul(&w.action, g, n)])
                    .collect()
            })
            .collect();
        let lengths = elements.iter().map(|w| w.word.len()).collect();
        Ok(WeylGroup {
            rs,
            elements,
            index,
            lengths,
            left,
            right,
            bruhat: OnceLock::new(),
        })
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::new(RootSystem::from_name(name)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, in breadth-first order from the identity.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn identity(&self) -> WeylElement {
        self.elements[0].clone()
    }

    pub fn simple(&self, i: usize) -> Result<WeylElement> {
        self.rs.check_index(i)?;
        Ok(self.elements[self.left[0][i]].clone())
    }

    fn idx(&self, w: &WeylElement) -> usize {
        self.index[&w.action]
    }

    /// The materialized copy of `w`, carrying the canonical reduced word.
    pub fn canonical(&self, w: &WeylElement) -> WeylElement {
        self.elements[self.idx(w)].clone()
    }

    /// The element `s_{i_1} ⋯ s_{i_l}` for an arbitrary (0-based) word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let n = self.rank();
        let mut m = identity_matrix(n);
        for &i in word {
            self.rs.check_index(i)?;
            m = mat_mul(&m, &simple_matrix(&self.rs, i), n);
        }
        let reduced = self.reduce_word(word)?;
        Ok(WeylElement { action: m, word: reduced })
    }

    /// Parses a word of 1-based indices.
    pub fn from_word_one_based(&self, word: &[usize]) -> Result<WeylElement> {
        let zero_based = word
            .iter()
            .map(|&i| {
                i.checked_sub(1).ok_or(Error::IndexOutOfRange {
                    index: 0,
                    rank: self.rank(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_word(&zero_based)
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let action = mat_mul(&u.action, &v.action, self.rank());
        let mut word = u.word.clone();
        word.extend_from_slice(&v.word);
        let word = self.reduce_word(&word).expect("indices already validated");
        WeylElement { action, word }
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let word: Vec<usize> = w.word.iter().rev().copied().collect();
        self.from_word(&word).expect("indices already validated")
    }

    pub fn apply(&self, w: &WeylElement, x: &Weight) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|r| (0..n).map(|c| w.action[r * n + c] * x[c]).sum())
                .collect(),
        )
    }

    pub fn apply_rational(&self, w: &WeylElement, x: &RationalPoint) -> RationalPoint {
        let n = self.rank();
        RationalPoint(
            (0..n)
                .map(|r| {
                    (0..n).fold(Rat::zero(), |acc, c| {
                        acc + x.0[c] * Rat::from_integer(w.action[r * n + c])
                    })
                })
                .collect(),
        )
    }

    /// `n(w) = #{β > 0 : wβ < 0}`, computed as the number of positive
    /// coroots pairing negatively with `w^{-1}ρ`.
    pub fn length(&self, w: &WeylElement) -> usize {
        let winv = self.inverse(w);
        let x = self.apply(&winv, &self.rs.rho());
        self.rs
            .positive_roots()
            .iter()
            .filter(|b| self.rs.coroot_pairing(&x, b) < 0)
            .count()
    }

    /// Deletes letter pairs (deletion condition) until the word is reduced.
    pub fn reduce_word(&self, word: &[usize]) -> Result<Vec<usize>> {
        for &i in word {
            self.rs.check_index(i)?;
        }
        let mut word = word.to_vec();
        let target = self.word_index(&word);
        while word.len() > self.lengths[target] {
            let mut found = None;
            'outer: for j in 0..word.len() {
                for k in j + 1..word.len() {
                    let shorter: Vec<usize> = word
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p != j && p != k)
                        .map(|(_, &x)| x)
                        .collect();
                    if self.word_index(&shorter) == target {
                        found = Some(shorter);
                        break 'outer;
                    }
                }
            }
            word = found.expect("deletion condition guarantees a deletable pair");
        }
        Ok(word)
    }

    fn word_index(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |x, &i| self.right[x][i])
    }

    fn lower_interval(&self, v: usize) -> Vec<bool> {
        let mut below = vec![false; self.order()];
        below[0] = true;
        let mut current = vec![0usize];
        for &i in &self.elements[v].word {
            let extra: Vec<usize> = current
                .iter()
                .map(|&x| self.right[x][i])
                .filter(|&y| !below[y])
                .collect();
            for y in extra {
                if !below[y] {
                    below[y] = true;
                    current.push(y);
                }
            }
        }
        below
    }

    /// Bruhat order by the subword property against the stored reduced word
    /// of `v`.
    pub fn bruhat_leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let (ui, vi) = (self.idx(u), self.idx(v));
        if self.order() <= BRUHAT_TABLE_LIMIT {
            let table = self
                .bruhat
                .get_or_init(|| (0..self.order()).map(|v| self.lower_interval(v)).collect());
            table[vi][ui]
        } else {
            self.lower_interval(vi)[ui]
        }
    }

    /// The unique Bruhat-maximal element of a nonempty set.
    pub fn bruhat_max<'a, I>(&self, set: I) -> Result<WeylElement>
    where
        I: IntoIterator<Item = &'a WeylElement>,
    {
        let set: Vec<&WeylElement> = set.into_iter().collect();
        let top = set.iter().max_by_key(|w| w.len()).ok_or(Error::NonUniqueMaximum(0))?;
        if set.iter().all(|x| self.bruhat_leq(x, top)) {
            Ok(self.canonical(top))
        } else {
            Err(Error::NonUniqueMaximum(set.len()))
        }
    }

    /// `D_L(w) = { i : ℓ(s_i w) < ℓ(w) }`.
    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        let x = self.idx(w);
        (0..self.rank())
            .filter(|&i| self.lengths[self.left[x][i]] < self.lengths[x])
            .collect()
    }

    /// `W_w`, the parabolic subgroup generated by the left descents of `w`.
    pub fn descent_subgroup(&self, w: &WeylElement) -> ParabolicSubgroup {
        self.parabolic(&self.left_descents(w))
    }

    pub fn parabolic(&self, generators: &[usize]) -> ParabolicSubgroup {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &i in generators {
                let y = self.left[x][i];
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        ParabolicSubgroup {
            generators: generators.to_vec(),
            elements: out.into_iter().map(|k| self.elements[k].clone()).collect(),
        }
    }

    /// `J = { i : s_i λ = λ }` for dominant `λ`.
    pub fn stabilizer_indices(&self, lambda: &Weight) -> Vec<usize> {
        (0..self.rank()).filter(|&i| lambda[i] == 0).collect()
    }

    fn coset(&self, w: &WeylElement, generators: &[usize]) -> Vec<WeylElement> {
        self.parabolic(generators)
            .elements
            .iter()
            .map(|x| self.canonical(&self.multiply(w, x)))
            .collect()
    }

    fn extremal(&self, coset: Vec<WeylElement>, longest: bool) -> WeylElement {
        let key = |w: &WeylElement| w.len();
        let best = if longest {
            coset.iter().map(key).max()
        } else {
            coset.iter().map(key).min()
        }
        .expect("cosets are nonempty");
        let mut hits = coset.into_iter().filter(|w| w.len() == best);
        let rep = hits.next().expect("extremal length attained");
        assert!(hits.next().is_none(), "extremal coset representative is unique");
        rep
    }

    /// `⌊w⌋^J`.
    pub fn coset_min(&self, w: &WeylElement, generators: &[usize]) -> WeylElement {
        self.extremal(self.coset(w, generators), false)
    }

    /// `⌈w⌉^J`.
    pub fn coset_max(&self, w: &WeylElement, generators: &[usize]) -> WeylElement {
        self.extremal(self.coset(w, generators), true)
    }

    /// `⌊w⌋^λ` for dominant `λ`.
    pub fn coset_min_for(&self, w: &WeylElement, lambda: &Weight) -> WeylElement {
        self.coset_min(w, &self.stabilizer_indices(lambda))
    }

    /// `⌈w⌉^λ` for dominant `λ`.
    pub fn coset_max_for(&self, w: &WeylElement, lambda: &Weight) -> WeylElement {
        self.coset_max(w, &self.stabilizer_indices(lambda))
    }

    /// Minimal coset representatives of `W / W_λ`, shortest first.
    pub fn min_coset_reps(&self, lambda: &Weight) -> Vec<WeylElement> {
        let mut seen = HashSet::new();
        let mut reps = Vec::new();
        for w in &self.elements {
            let rep = self.coset_min_for(w, lambda);
            if seen.insert(rep.clone()) {
                reps.push(rep);
            }
        }
        reps.sort();
        reps
    }

    /// `min { u ∈ W : uλ = x }` for `x` in the orbit of dominant `λ`.
    pub fn min_element_sending(&self, lambda: &Weight, x: &Weight) -> Result<WeylElement> {
        let (dom, word) = self.rs.dominant_representative(x);
        if &dom != lambda {
            return Err(Error::NotInOrbit {
                weight: x.clone(),
                shape: lambda.clone(),
            });
        }
        let u = self.from_word(&word)?;
        Ok(self.coset_min_for(&u, lambda))
    }

    /// The reflection `s_β` for the positive root with the given index.
    pub fn reflection(&self, root: usize) -> WeylElement {
        let beta = &self.rs.positive_roots()[root];
        let n = self.rank();
        // s_β(x) = x − ⟨x, β^∨⟩β
        let mut m = identity_matrix(n);
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] -= beta.weight[r] * beta.coroot[c];
            }
        }
        self.elements[self.index[&m]].clone()
    }

    /// The subgroup generated by the given reflections.
    pub fn reflection_subgroup(&self, roots: &[usize]) -> ReflectionSubgroup {
        let gens: Vec<usize> = roots.iter().map(|&r| self.idx(&self.reflection(r))).collect();
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let m = mat_mul(&self.elements[g].action, &self.elements[x].action, self.rank());
                let y = self.index[&m];
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        ReflectionSubgroup {
            reflections: roots.to_vec(),
            elements: out.into_iter().map(|k| self.elements[k].clone()).collect(),
        }
    }

    /// `W(x)`: generated by `s_β` with `⟨x, β^∨⟩ = 0`, checked against the
    /// full pointwise stabilizer.
    pub fn stabilizer(&self, x: &RationalPoint) -> ReflectionSubgroup {
        let roots: Vec<usize> = self
            .rs
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, b)| self.rs.coroot_pairing_rational(x, b).is_zero())
            .map(|(k, _)| k)
            .collect();
        let group = self.reflection_subgroup(&roots);
        debug_assert_eq!(
            group.order(),
            self.elements
                .iter()
                .filter(|w| &self.apply_rational(w, x) == x)
                .count(),
            "reflection-generated stabilizer of {x} is the full stabilizer"
        );
        group
    }

    /// The Bruhat-maximal element of the coset `Hw`.
    pub fn coset_bruhat_max(&self, h: &ReflectionSubgroup, w: &WeylElement) -> Result<WeylElement> {
        let coset: Vec<WeylElement> = h
            .elements
            .iter()
            .map(|x| self.canonical(&self.multiply(x, w)))
            .collect();
        self.bruhat_max(&coset)
    }

    /// Every reduced word of `w`.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(self.idx(w), Vec::new())];
        while let Some((x, suffix)) = stack.pop() {
            if x == 0 {
                out.push(suffix);
                continue;
            }
            for i in 0..self.rank() {
                let y = self.right[x][i];
                if self.lengths[y] < self.lengths[x] {
                    let mut s = vec![i];
                    s.extend_from_slice(&suffix);
                    stack.push((y, s));
                }
            }
        }
        out.sort();
        out
    }

    /// The longest element.
    pub fn longest(&self) -> WeylElement {
        self.elements.last().expect("nonempty group").clone()
    }

    /// `s_i · w`.
    pub fn left_simple(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.elements[self.left[self.idx(w)][i]].clone()
    }
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// `s_i = I − α_i e_i^T`.
fn simple_matrix(rs: &RootSystem, i: usize) -> Vec<i64> {
    let n = rs.rank();
    let alpha = rs.simple_root(i);
    let mut m = identity_matrix(n);
    for r in 0..n {
        m[r * n + i] -= alpha[r];
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x != 0 {
                for c in 0..n {
                    out[r * n + c] += x * b[k * n + c];
                }
            }
        }
    }
    out
}

/// A relation step `μ → s_β μ` with `⟨μ, β^∨⟩ < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitStep {
    pub target: usize,
    pub root: usize,
    pub pairing: i64,
}

/// The orbit `Wλ` with the order whose minimum is the dominant weight.
///
/// `μ ≥ ν` when `ν` is reached from `μ` by reflections `s_β` with
/// `⟨·, β^∨⟩ < 0` at every step, so chains move toward `λ`.
#[derive(Debug, Clone)]
pub struct OrbitPoset {
    base: Weight,
    points: Vec<Weight>,
    index: HashMap<Weight, usize>,
    steps: Vec<Vec<OrbitStep>>,
    /// `dist[a][b]`: longest chain from `a` down to `b`, if `a ≥ b`.
    dist: Vec<Vec<Option<usize>>>,
}

impl OrbitPoset {
    pub fn new(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        rs.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let mut points = rs.orbit(lambda);
        // ⟨x, 2ρ^∨⟩ strictly increases along every step
        let key = |x: &Weight| -> i64 {
            rs.positive_roots().iter().map(|b| rs.coroot_pairing(x, b)).sum()
        };
        points.sort_by_key(|x| (key(x), x.clone()));
        let index: HashMap<Weight, usize> =
            points.iter().cloned().enumerate().map(|(k, x)| (x, k)).collect();
        let steps: Vec<Vec<OrbitStep>> = points
            .iter()
            .map(|x| {
                rs.positive_roots()
                    .iter()
                    .enumerate()
                    .filter_map(|(r, b)| {
                        let c = rs.coroot_pairing(x, b);
                        (c < 0).then(|| OrbitStep {
                            target: index[&rs.reflect(x, b)],
                            root: r,
                            pairing: c,
                        })
                    })
                    .collect()
            })
            .collect();
        let m = points.len();
        let mut dist = vec![vec![None; m]; m];
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = Some(0);
            // points are in topological order
            for a in s..m {
                if let Some(d) = row[a] {
                    for st in &steps[a] {
                        debug_assert!(st.target > a);
                        if row[st.target].is_none_or(|e| e < d + 1) {
                            row[st.target] = Some(d + 1);
                        }
                    }
                }
            }
        }
        Ok(OrbitPoset {
            base: lambda.clone(),
            points,
            index,
            steps,
            dist,
        })
    }

    pub fn base(&self) -> &Weight {
        &self.base
    }

    pub fn points(&self) -> &[Weight] {
        &self.points
    }

    pub fn contains(&self, x: &Weight) -> bool {
        self.index.contains_key(x)
    }

    fn pos(&self, x: &Weight) -> Result<usize> {
        self.index.get(x).copied().ok_or_else(|| Error::NotInOrbit {
            weight: x.clone(),
            shape: self.base.clone(),
        })
    }

    /// `μ ≤ ν`.
    pub fn leq(&self, mu: &Weight, nu: &Weight) -> Result<bool> {
        let (a, b) = (self.pos(mu)?, self.pos(nu)?);
        Ok(self.dist[b][a].is_some())
    }

    /// `μ > ν`.
    pub fn gt(&self, mu: &Weight, nu: &Weight) -> Result<bool> {
        Ok(mu != nu && self.leq(nu, mu)?)
    }

    /// Length of the longest chain between two comparable points.
    pub fn dist(&self, mu: &Weight, nu: &Weight) -> Result<Option<usize>> {
        let (a, b) = (self.pos(mu)?, self.pos(nu)?);
        Ok(self.dist[a][b].or(self.dist[b][a]))
    }

    /// Steps `μ → s_β μ` with `dist = 1`.
    pub fn cover_steps(&self, mu: &Weight) -> Result<Vec<(Weight, OrbitStep)>> {
        let a = self.pos(mu)?;
        Ok(self.covers(a)
            .map(|st| (self.points[st.target].clone(), *st))
            .collect())
    }

    fn covers(&self, a: usize) -> impl Iterator<Item = &OrbitStep> {
        self.steps[a]
            .iter()
            .filter(move |st| self.dist[a][st.target] == Some(1))
    }

    pub fn cover_edge_count(&self) -> usize {
        (0..self.points.len()).map(|a| self.covers(a).count()).sum()
    }

    /// Whether a `σ`-chain for `(μ, ν)` exists.
    pub fn sigma_chain_exists(&self, mu: &Weight, nu: &Weight, sigma: Rat) -> Result<bool> {
        let (a, b) = (self.pos(mu)?, self.pos(nu)?);
        if a == b {
            return Ok(true);
        }
        if self.dist[a][b].is_none() {
            return Ok(false);
        }
        let mut stack = vec![a];
        let mut visited = vec![false; self.points.len()];
        while let Some(x) = stack.pop() {
            if x == b {
                return Ok(true);
            }
            if std::mem::replace(&mut visited[x], true) {
                continue;
            }
            for st in self.covers(x) {
                let scaled = sigma * Rat::from_integer(st.pairing);
                if scaled.is_integer() && self.dist[st.target][b].is_some() {
                    stack.push(st.target);
                }
            }
        }
        Ok(false)
    }
}
