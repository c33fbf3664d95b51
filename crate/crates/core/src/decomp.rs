//! Tensor products `𝓑_v(λ) ⊗ 𝓑_w(μ)` of Demazure crystals: components,
//! Demazure verdicts, Magyar's `w(π)`, `u(π, v)`, the recursive component
//! formula and the Leibniz-type identity.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::cartan::{Rat, RationalPoint, Weight};
use crate::crystal::{emax, induced_component, is_isomorphic, s_i, tensor_set, CrystalElement, Tensor, TensorPair};
use crate::demazure::{closure_along_word, f_closure, string_property_violation, DemazureCrystal, Session, StringViolation};
use crate::error::{Error, Result};
use crate::lspath::LsPath;
use crate::weyl::WeylElement;

/// `𝓑_v(λ) ⊗ 𝓑_w(μ)`.
#[derive(Debug, Clone)]
pub struct TensorDemazure {
    pub left: Arc<DemazureCrystal>,
    pub right: Arc<DemazureCrystal>,
}

impl TensorDemazure {
    pub fn new(s: &Session, v: &WeylElement, w: &WeylElement, lambda: &Weight, mu: &Weight) -> Result<Self> {
        Ok(TensorDemazure {
            left: s.demazure(v, lambda)?,
            right: s.demazure(w, mu)?,
        })
    }

    pub fn contains(&self, b: &TensorPair) -> bool {
        self.left.contains(&b.0) && self.right.contains(&b.1)
    }

    pub fn len(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> BTreeSet<TensorPair> {
        tensor_set(&self.left.elements, &self.right.elements)
    }
}

/// `𝓑_w(μ)^λ`: the `λ`-dominant paths of `𝓑_w(μ)`, sorted.
pub fn dominant_paths(s: &Session, w: &WeylElement, mu: &Weight, lambda: &Weight) -> Result<Vec<LsPath>> {
    s.check_dominant(lambda)?;
    let d = s.demazure(w, mu)?;
    Ok(d.elements
        .iter()
        .filter(|p| p.is_dominant(lambda))
        .cloned()
        .collect())
}

/// `C(π, v)`: the component of `π^λ ⊗ π` in `𝓑_v(λ) ⊗ 𝓑_w(μ)`.
pub fn component(
    s: &Session,
    pi: &LsPath,
    v: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeSet<TensorPair>> {
    let t = TensorDemazure::new(s, v, w, lambda, mu)?;
    component_in(s, &t, pi)
}

fn component_in(s: &Session, t: &TensorDemazure, pi: &LsPath) -> Result<BTreeSet<TensorPair>> {
    let seed = Tensor(LsPath::highest(&t.left.shape), pi.clone());
    if !t.contains(&seed) {
        return Err(Error::Precondition(format!("{seed} is not in the tensor product")));
    }
    Ok(induced_component(s.rs(), &seed, |b| t.contains(b)))
}

/// The `⌊x⌋^ν` with `set ≅ 𝓑_x(ν)`, if any.
pub fn demazure_match<T: CrystalElement>(
    s: &Session,
    set: &BTreeSet<T>,
    nu: &Weight,
) -> Result<Option<WeylElement>> {
    let ch = crate::crystal::character(set);
    for x in s.group().min_coset_reps(nu) {
        let d = s.demazure(&x, nu)?;
        if d.len() != set.len() || crate::crystal::character(&d.elements) != ch {
            continue;
        }
        match is_isomorphic(s.rs(), set, &d.elements) {
            Ok(true) => return Ok(Some(x)),
            Ok(false) => {}
            Err(Error::MultipleHighestWeights(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// `w(π)` found by matching `C(π, e)` against Demazure crystals of
/// `λ + wt(π)`; returns the minimal coset representative.
pub fn oracle_w(s: &Session, pi: &LsPath, w: &WeylElement, mu: &Weight, lambda: &Weight) -> Result<WeylElement> {
    let e = s.group().identity();
    let c = component(s, pi, &e, w, lambda, mu)?;
    let nu = lambda + &pi.weight();
    demazure_match(s, &c, &nu)?.ok_or(Error::NoDemazureMatch(nu))
}

/// Maximal intervals of `[0, 1]` on which the stabilizer of `λ + π(t)`
/// is constant, in time order, as (sample point, zero roots).
fn stabilizer_intervals(s: &Session, pi: &LsPath, lambda: &Weight) -> Vec<(RationalPoint, Vec<usize>)> {
    let rs = s.rs();
    let base = lambda.to_rational();
    let mut times: BTreeSet<Rat> = pi.breaks().iter().copied().collect();
    let vertices = pi.path().vertices();
    for (k, d) in pi.directions().iter().enumerate() {
        let (a, b) = (pi.breaks()[k], pi.breaks()[k + 1]);
        let x = vertices[k].add_weight(lambda);
        for beta in rs.positive_roots() {
            let q = rs.coroot_pairing(d, beta);
            if q != 0 {
                let t = a - rs.coroot_pairing_rational(&x, beta) / Rat::from_integer(q);
                if a < t && t < b {
                    times.insert(t);
                }
            }
        }
    }
    let times: Vec<Rat> = times.into_iter().collect();
    let mut samples = Vec::with_capacity(2 * times.len());
    for (k, &t) in times.iter().enumerate() {
        samples.push(t);
        if let Some(&next) = times.get(k + 1) {
            samples.push((t + next) / Rat::from_integer(2));
        }
    }
    let zero_roots = |x: &RationalPoint| -> Vec<usize> {
        rs.positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, b)| rs.coroot_pairing_rational(x, b).is_zero())
            .map(|(k, _)| k)
            .collect()
    };
    let mut out: Vec<(RationalPoint, Vec<usize>)> = Vec::new();
    for t in samples {
        let x = base.add_point(&pi.value_at(t).expect("t in [0, 1]"));
        let key = zero_roots(&x);
        if out.last().is_none_or(|(_, k)| k != &key) {
            out.push((x, key));
        }
    }
    out
}

/// Magyar's `w(π)` for `π ∈ 𝓑_w(μ)^λ`, before coset normalization.
pub fn magyar_w(s: &Session, pi: &LsPath, w: &WeylElement, mu: &Weight, lambda: &Weight) -> Result<WeylElement> {
    let g = s.group();
    if pi.shape() != mu {
        return Err(Error::ShapeMismatch {
            expected: mu.clone(),
            got: pi.shape().clone(),
        });
    }
    if !pi.is_dominant(lambda) || !s.contains(pi, w)? {
        return Err(Error::Precondition(format!("{pi} is not in 𝓑_w(μ)^λ")));
    }
    let intervals = stabilizer_intervals(s, pi, lambda);
    let groups: Vec<_> = intervals
        .iter()
        .map(|(_, roots)| g.reflection_subgroup(roots))
        .collect();
    let mut next = g.identity();
    for h in groups.iter().skip(1).rev() {
        next = g.coset_bruhat_max(h, &next)?;
    }
    let w2 = next;
    let h1 = &groups[0];
    let tau1 = g.min_element_sending(mu, pi.initial_direction())?;
    let wmin = g.coset_min_for(w, mu);
    let below: Vec<WeylElement> = h1
        .elements
        .iter()
        .filter(|u| g.bruhat_leq(&g.coset_min_for(&g.multiply(u, &tau1), mu), &wmin))
        .cloned()
        .collect();
    let u1 = g.bruhat_max(&below)?;
    let candidates: Vec<WeylElement> = h1
        .elements
        .iter()
        .filter(|u| g.bruhat_leq(u, &u1))
        .map(|u| g.multiply(u, &w2))
        .collect();
    g.bruhat_max(&candidates)
}

/// `⌊w(π)⌋^{λ+wt(π)}` from the recipe, checked against [`oracle_w`].
pub fn checked_magyar_w(
    s: &Session,
    pi: &LsPath,
    w: &WeylElement,
    mu: &Weight,
    lambda: &Weight,
) -> Result<WeylElement> {
    let raw = magyar_w(s, pi, w, mu, lambda)?;
    let nu = lambda + &pi.weight();
    let normalized = s.group().coset_min_for(&raw, &nu);
    let oracle = oracle_w(s, pi, w, mu, lambda)?;
    if normalized != oracle {
        return Err(Error::OracleMismatch {
            magyar: normalized.word_one_based(),
            oracle: oracle.word_one_based(),
        });
    }
    Ok(normalized)
}

/// `⌊v⌋^λ ∈ W_{⌈w⌉^μ}`.
pub fn condition_check(s: &Session, v: &WeylElement, w: &WeylElement, lambda: &Weight, mu: &Weight) -> bool {
    let g = s.group();
    g.descent_subgroup(&g.coset_max_for(w, mu))
        .contains(&g.coset_min_for(v, lambda))
}

/// `u(π, v)`: the 0-Hecke product of `w(π)` with a reduced word of
/// `⌊v⌋^λ` (0-based; the stored word when `None`), folded right to left.
#[allow(clippy::too_many_arguments)]
pub fn u_of(
    s: &Session,
    pi: &LsPath,
    v: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
    word: Option<&[usize]>,
) -> Result<WeylElement> {
    if !condition_check(s, v, w, lambda, mu) {
        return Err(Error::Precondition("⌊v⌋^λ is not in W_{⌈w⌉^μ}".into()));
    }
    let g = s.group();
    let vmin = g.coset_min_for(v, lambda);
    let word = match word {
        Some(wd) => {
            if g.from_word(wd)? != vmin || wd.len() != vmin.len() {
                return Err(Error::Precondition("word is not a reduced word of ⌊v⌋^λ".into()));
            }
            wd.to_vec()
        }
        None => vmin.word().to_vec(),
    };
    let start = magyar_w(s, pi, w, mu, lambda)?;
    Ok(hecke_fold(s, &word, start))
}

fn hecke_fold(s: &Session, word: &[usize], start: WeylElement) -> WeylElement {
    word.iter().rev().fold(start, |x, &i| {
        let y = s.group().left_simple(i, &x);
        if y.len() > x.len() {
            y
        } else {
            x
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionEntry {
    pub pi: LsPath,
    pub lambda_plus_wt: Weight,
    pub size: usize,
    pub demazure: bool,
    /// `⌊x⌋^ν` with `C(π, v) ≅ 𝓑_x(ν)`, 1-based.
    pub u: Option<Vec<usize>>,
    /// `u(π, v)` from the 0-Hecke formula, when the condition holds.
    pub u_formula: Option<Vec<usize>>,
    /// Normalized `w(π)`, when the cross-check is enabled.
    pub magyar_w: Option<Vec<usize>>,
    pub witness: Option<StringViolation<TensorPair>>,
    #[serde(skip)]
    pub component: BTreeSet<TensorPair>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub root_system: String,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    pub lambda: Weight,
    pub mu: Weight,
    pub condition_holds: bool,
    pub swapped_condition_holds: bool,
    pub total_size: usize,
    pub entries: Vec<DecompositionEntry>,
}

impl DecompositionReport {
    pub fn all_demazure(&self) -> bool {
        self.entries.iter().all(|e| e.demazure)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DecomposeOptions {
    /// Cross-check Magyar's recipe against the isomorphism search.
    pub oracle: bool,
}

/// Splits `𝓑_v(λ) ⊗ 𝓑_w(μ)` into components and classifies each one,
/// asserting the predictions of the decomposition theorems.
pub fn decompose(
    s: &Session,
    v: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
    opts: DecomposeOptions,
) -> Result<DecompositionReport> {
    s.check_dominant(lambda)?;
    s.check_dominant(mu)?;
    let g = s.group();
    let t = TensorDemazure::new(s, v, w, lambda, mu)?;
    let condition = condition_check(s, v, w, lambda, mu);
    let swapped = condition_check(s, w, v, mu, lambda);
    let mut entries = Vec::new();
    let mut covered = BTreeSet::new();
    for pi in dominant_paths(s, w, mu, lambda)? {
        let comp = component_in(s, &t, &pi)?;
        let nu = lambda + &pi.weight();
        let found = demazure_match(s, &comp, &nu)?;
        let witness = if found.is_none() {
            string_property_violation(s.rs(), &comp)
        } else {
            None
        };
        let u_formula = if condition {
            let u = u_of(s, &pi, v, w, lambda, mu, None)?;
            let normalized = g.coset_min_for(&u, &nu);
            if found.as_ref() != Some(&normalized) {
                return Err(Error::TheoremViolation(format!(
                    "C({pi}, {v}) should be 𝓑_{normalized}({nu}), found {}",
                    found.map_or("no Demazure match".to_string(), |x| format!("𝓑_{x}({nu})"))
                )));
            }
            Some(u.word_one_based())
        } else {
            None
        };
        let magyar = if opts.oracle {
            Some(checked_magyar_w(s, &pi, w, mu, lambda)?.word_one_based())
        } else {
            None
        };
        for b in &comp {
            if !covered.insert(b.clone()) {
                return Err(Error::TheoremViolation(format!("{b} lies in two components")));
            }
        }
        entries.push(DecompositionEntry {
            lambda_plus_wt: nu,
            size: comp.len(),
            demazure: found.is_some(),
            u: found.map(|x| x.word_one_based()),
            u_formula,
            magyar_w: magyar,
            witness,
            component: comp,
            pi,
        });
    }
    if covered.len() != t.len() {
        return Err(Error::TheoremViolation(format!(
            "components cover {} of {} elements",
            covered.len(),
            t.len()
        )));
    }
    let all = entries.iter().all(|e| e.demazure);
    if condition != all {
        return Err(Error::TheoremViolation(format!(
            "condition is {condition} but all components Demazure is {all}"
        )));
    }
    Ok(DecompositionReport {
        root_system: s.rs().cartan_type().to_string(),
        v: g.coset_min_for(v, lambda).word_one_based(),
        w: g.coset_min_for(w, mu).word_one_based(),
        lambda: lambda.clone(),
        mu: mu.clone(),
        condition_holds: condition,
        swapped_condition_holds: swapped,
        total_size: t.len(),
        entries,
    })
}

fn require_ascent(s: &Session, v: &WeylElement, i: usize) -> Result<()> {
    s.rs().check_index(i)?;
    if s.group().left_simple(i, v).len() > v.len() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("ℓ(s_{} v) < ℓ(v) for v = {v}", i + 1)))
    }
}

/// `E(π, v, i)`.
fn excluded_set(
    s: &Session,
    comp: &BTreeSet<TensorPair>,
    i: usize,
    right: &DemazureCrystal,
) -> BTreeSet<TensorPair> {
    let rs = s.rs();
    let mut out = BTreeSet::new();
    for Tensor(p1, p2) in comp {
        if p1.e(rs, i).is_some() {
            continue;
        }
        if p2.f(rs, i).is_none_or(|x| right.contains(&x)) {
            continue;
        }
        let left = s_i(rs, p1, i);
        let mut x = p2.clone();
        for _ in 1..=p2.weight()[i] {
            match x.f(rs, i) {
                Some(y) => {
                    out.insert(Tensor(left.clone(), y.clone()));
                    x = y;
                }
                None => break,
            }
        }
    }
    out
}

/// `C(π, s_i v)` computed from `C(π, v)` as
/// `(⋃_a f̃_i^a C(π, v)) ∖ E(π, v, i)`.
#[allow(clippy::too_many_arguments)]
pub fn recursive_component(
    s: &Session,
    pi: &LsPath,
    v: &WeylElement,
    i: usize,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeSet<TensorPair>> {
    require_ascent(s, v, i)?;
    let t = TensorDemazure::new(s, v, w, lambda, mu)?;
    let comp = component_in(s, &t, pi)?;
    let tilde = f_closure(s.rs(), &comp, i);
    let e = excluded_set(s, &comp, i, &t.right);
    Ok(tilde.difference(&e).cloned().collect())
}

/// The same set with the closure started only from the elements
/// `π_1 ⊗ π_2` of `C(π, v)` with `ẽ_i π_1 = 0` and
/// `ε_i(π_2) ≤ ⟨wt π_1, α_i^∨⟩`.
#[allow(clippy::too_many_arguments)]
pub fn recursive_component_restricted(
    s: &Session,
    pi: &LsPath,
    v: &WeylElement,
    i: usize,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeSet<TensorPair>> {
    require_ascent(s, v, i)?;
    let rs = s.rs();
    let t = TensorDemazure::new(s, v, w, lambda, mu)?;
    let comp = component_in(s, &t, pi)?;
    let starts: BTreeSet<TensorPair> = comp
        .iter()
        .filter(|b| b.0.e(rs, i).is_none() && b.1.epsilon(rs, i) <= b.0.weight()[i])
        .cloned()
        .collect();
    let tilde = f_closure(rs, &starts, i);
    let e = excluded_set(s, &comp, i, &t.right);
    Ok(tilde.difference(&e).cloned().collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct LeibnizReport {
    pub lhs_size: usize,
    pub first_size: usize,
    pub second_size: usize,
    pub disjoint: bool,
    pub equal: bool,
    #[serde(skip)]
    pub lhs: BTreeSet<TensorPair>,
    #[serde(skip)]
    pub rhs: BTreeSet<TensorPair>,
}

/// `⋃_n f̃_i^n(𝓑_v(λ)⊗𝓑_w(μ))` against
/// `(𝓑_{s_i v}(λ)⊗𝓑_w(μ)) ⊔ (S_i ẽ_i^max 𝓑_v(λ)) ⊗ (𝓑_{s_i w}(μ) ∖ 𝓑_w(μ))`.
pub fn leibniz_check(
    s: &Session,
    v: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
    i: usize,
) -> Result<LeibnizReport> {
    require_ascent(s, v, i)?;
    let rs = s.rs();
    let g = s.group();
    let t = TensorDemazure::new(s, v, w, lambda, mu)?;
    let lhs = f_closure(rs, &t.elements(), i);
    let siv = g.left_simple(i, v);
    let siw = g.left_simple(i, w);
    let first = TensorDemazure::new(s, &siv, w, lambda, mu)?.elements();
    let lifted: BTreeSet<LsPath> = t
        .left
        .elements
        .iter()
        .map(|b| s_i(rs, &emax(rs, b, i), i))
        .collect();
    let new_right: BTreeSet<LsPath> = s
        .demazure(&siw, mu)?
        .elements
        .difference(&t.right.elements)
        .cloned()
        .collect();
    let second = tensor_set(&lifted, &new_right);
    let disjoint = first.is_disjoint(&second);
    let rhs: BTreeSet<TensorPair> = first.union(&second).cloned().collect();
    Ok(LeibnizReport {
        lhs_size: lhs.len(),
        first_size: first.len(),
        second_size: second.len(),
        disjoint,
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Compares the closure of `𝓑_e(λ) ⊗ 𝓑_w(μ)` along a reduced word of
/// `⌊v⌋^λ` with `𝓑_v(λ) ⊗ 𝓑_w(μ)`; returns (equal, closure ⊇ product).
pub fn closure_check(
    s: &Session,
    v: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
) -> Result<(bool, bool)> {
    let g = s.group();
    let vmin = g.coset_min_for(v, lambda);
    let e = g.identity();
    let base = TensorDemazure::new(s, &e, w, lambda, mu)?.elements();
    let closure = closure_along_word(s.rs(), base, vmin.word());
    let product = TensorDemazure::new(s, v, w, lambda, mu)?.elements();
    Ok((closure == product, closure.is_superset(&product)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(a, b)
    }

    fn a2() -> Session {
        Session::from_name("A2").unwrap()
    }

    fn straight(s: &Session, shape: &[i64], x: &[i64]) -> LsPath {
        LsPath::straight(s.rs(), &w(shape), &w(x)).unwrap()
    }

    #[test]
    fn dominant_path_examples() {
        let s = a2();
        let e = s.group().identity();
        let mu = w(&[1, 2]);
        assert_eq!(dominant_paths(&s, &e, &mu, &w(&[1, 1])).unwrap(), vec![LsPath::highest(&mu)]);
        let w0 = s.element(&[1, 2, 1]).unwrap();
        let paths = dominant_paths(&s, &w0, &w(&[1, 0]), &w(&[1, 1])).unwrap();
        assert_eq!(paths.len(), 3);
        let paths = dominant_paths(&s, &s.element(&[1, 2]).unwrap(), &w(&[1, 2]), &w(&[2, 1])).unwrap();
        assert_eq!(paths.len(), 7);
    }

    #[test]
    fn full_right_factor_magyar_values() {
        let s = a2();
        let w0 = s.element(&[1, 2, 1]).unwrap();
        let (mu, lam) = (w(&[1, 0]), w(&[1, 1]));
        let cases = [(&[1, 0], vec![]), (&[-1, 1], vec![1]), (&[0, -1], vec![2])];
        for (x, expected) in cases {
            let pi = straight(&s, &[1, 0], x);
            let m = magyar_w(&s, &pi, &w0, &mu, &lam).unwrap();
            assert_eq!(m.word_one_based(), expected, "{pi}");
            checked_magyar_w(&s, &pi, &w0, &mu, &lam).unwrap();
        }
        let pi = straight(&s, &[1, 0], &[-1, 1]);
        // 𝓑_{s1}(2ϖ2) = 𝓑_e(2ϖ2): s1 fixes 2ϖ2
        let s1 = s.element(&[1]).unwrap();
        assert_eq!(
            oracle_w(&s, &pi, &w0, &mu, &lam).unwrap(),
            s.group().coset_min_for(&s1, &w(&[0, 2]))
        );
        let c = component(&s, &pi, &s.group().identity(), &w0, &lam, &mu).unwrap();
        let b = s.demazure(&s1, &w(&[0, 2])).unwrap();
        assert!(is_isomorphic(s.rs(), &c, &b.elements).unwrap());
        let v = s.element(&[1, 2]).unwrap();
        assert_eq!(
            u_of(&s, &straight(&s, &[1, 0], &[1, 0]), &v, &w0, &lam, &mu, None).unwrap(),
            s.element(&[1, 2]).unwrap()
        );
        assert_eq!(
            u_of(&s, &pi, &v, &w0, &lam, &mu, None).unwrap(),
            s.element(&[1, 2, 1]).unwrap()
        );
    }

    #[test]
    fn seven_component_u_values() {
        let s = a2();
        let v = s.element(&[1]).unwrap();
        let wv = s.element(&[1, 2]).unwrap();
        let (lam, mu) = (w(&[2, 1]), w(&[1, 2]));
        let pi3 = LsPath::new(s.rs(), vec![w(&[3, -2]), w(&[1, 2])], vec![r(0, 1), r(1, 2), r(1, 1)]).unwrap();
        assert_eq!(
            u_of(&s, &pi3, &v, &wv, &lam, &mu, None).unwrap(),
            s.element(&[1, 2]).unwrap()
        );
    }

    #[test]
    fn condition_examples() {
        let s = a2();
        let e = s.group().identity();
        let (l, m) = (w(&[1, 1]), w(&[1, 0]));
        for x in s.group().elements() {
            assert!(condition_check(&s, &e, x, &l, &m));
        }
        let v = s.element(&[1, 2]).unwrap();
        assert!(condition_check(&s, &v, &s.element(&[1, 2, 1]).unwrap(), &l, &m));
        assert!(!condition_check(&s, &v, &v, &l, &m));
        assert!(u_of(&s, &LsPath::highest(&m), &v, &v, &l, &m, None).is_err());
    }

    #[test]
    fn trivial_component() {
        let s = a2();
        let e = s.group().identity();
        let (l, m) = (w(&[1, 1]), w(&[0, 1]));
        let c = component(&s, &LsPath::highest(&m), &e, &e, &l, &m).unwrap();
        assert_eq!(c, BTreeSet::from([Tensor(LsPath::highest(&l), LsPath::highest(&m))]));
        let bad = straight(&s, &[0, 1], &[1, -1]);
        assert!(component(&s, &bad, &e, &e, &l, &m).is_err());
    }

    #[test]
    fn non_demazure_component() {
        let s = a2();
        let v = s.element(&[1, 2]).unwrap();
        let (l, m) = (w(&[1, 1]), w(&[1, 0]));
        let pi = LsPath::highest(&m).f(s.rs(), 0).unwrap();
        let c = component(&s, &pi, &v, &v, &l, &m).unwrap();
        assert_eq!(c.len(), 3);
        let nu = &l + &pi.weight();
        assert_eq!(nu, w(&[0, 2]));
        assert_eq!(demazure_match(&s, &c, &nu).unwrap(), None);
        let b = s.demazure(&s.element(&[1, 2]).unwrap(), &nu).unwrap();
        assert!(!is_isomorphic(s.rs(), &c, &b.elements).unwrap());
        let witness = string_property_violation(s.rs(), &c).unwrap();
        assert_eq!(witness.color, 2);
        assert_eq!(witness.hits, vec![0, 1]);
        // reached from v = s2 by i = 1
        let s2 = s.element(&[2]).unwrap();
        assert_eq!(recursive_component(&s, &pi, &s2, 0, &v, &l, &m).unwrap(), c);
    }

    #[test]
    fn leibniz_small_example() {
        let s = a2();
        let e = s.group().identity();
        let om1 = w(&[1, 0]);
        let rep = leibniz_check(&s, &e, &e, &om1, &om1, 0).unwrap();
        assert_eq!(rep.lhs_size, 3);
        assert_eq!((rep.first_size, rep.second_size), (2, 1));
        assert!(rep.equal && rep.disjoint);
        let s1 = s.element(&[1]).unwrap();
        assert!(leibniz_check(&s, &s1, &e, &om1, &om1, 0).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let s = a2();
        let v = s.element(&[1, 2]).unwrap();
        let w0 = s.element(&[1, 2, 1]).unwrap();
        let rep = decompose(&s, &v, &w0, &w(&[1, 1]), &w(&[1, 0]), DecomposeOptions { oracle: true }).unwrap();
        assert!(rep.condition_holds);
        let got: Vec<(Weight, Vec<usize>)> = rep
            .entries
            .iter()
            .map(|e| (e.lambda_plus_wt.clone(), e.u.clone().unwrap()))
            .collect();
        assert_eq!(
            got,
            vec![(w(&[0, 2]), vec![1, 2]), (w(&[1, 0]), vec![1]), (w(&[2, 1]), vec![1, 2])]
        );
        let rep = decompose(&s, &v, &v, &w(&[1, 1]), &w(&[1, 0]), DecomposeOptions::default()).unwrap();
        assert!(!rep.condition_holds);
        let bad: Vec<_> = rep.entries.iter().filter(|e| !e.demazure).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].size, 3);
        assert!(bad[0].witness.is_some());
    }
}
