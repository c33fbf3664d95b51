//! Demazure crystals `𝓑_w(λ) ⊂ 𝓑(λ)` and a cache for the objects built
//! from one root system.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::cartan::{RootSystem, Weight};
use crate::crystal::{emax, CrystalElement};
use crate::error::{Error, Result};
use crate::lspath::LsPath;
use crate::weyl::{OrbitPoset, WeylElement, WeylGroup};

/// `𝓑_w(λ)` together with the word that generated it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemazureCrystal {
    pub shape: Weight,
    /// `⌊w⌋^λ`.
    pub witness: WeylElement,
    pub elements: BTreeSet<LsPath>,
    pub word: Vec<usize>,
}

/// Wire format: `{"lambda": [...], "w": [1-based word]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemazureLabel {
    pub lambda: Weight,
    pub w: Vec<usize>,
}

impl DemazureCrystal {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, b: &LsPath) -> bool {
        self.elements.contains(b)
    }

    pub fn label(&self) -> DemazureLabel {
        DemazureLabel {
            lambda: self.shape.clone(),
            w: self.witness.word_one_based(),
        }
    }
}

/// `⋃_{a ≥ 0} f̃_i^a(S) ∖ {0}`.
pub fn f_closure<T: CrystalElement>(rs: &RootSystem, set: &BTreeSet<T>, i: usize) -> BTreeSet<T> {
    let mut out = set.clone();
    for b in set {
        let mut x = b.f(rs, i);
        while let Some(y) = x {
            x = y.f(rs, i);
            if !out.insert(y) {
                // the rest of this string is already present
                break;
            }
        }
    }
    out
}

/// `f̃_{i_1}^{a_1} ⋯ f̃_{i_l}^{a_l}(S)` over all exponents, applying the
/// last letter first.
pub fn closure_along_word<T: CrystalElement>(
    rs: &RootSystem,
    seed: BTreeSet<T>,
    word: &[usize],
) -> BTreeSet<T> {
    word.iter()
        .rev()
        .fold(seed, |set, &i| f_closure(rs, &set, i))
}

/// The Demazure crystal generated along an arbitrary word.
pub fn demazure_along_word(rs: &RootSystem, word: &[usize], lambda: &Weight) -> BTreeSet<LsPath> {
    closure_along_word(rs, BTreeSet::from([LsPath::highest(lambda)]), word)
}

/// `𝓑_w(λ)`, generated along the stored reduced word of `⌊w⌋^λ`.
pub fn generate_demazure(group: &WeylGroup, w: &WeylElement, lambda: &Weight) -> Result<DemazureCrystal> {
    let rs = group.root_system();
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let witness = group.coset_min_for(w, lambda);
    let word = witness.word().to_vec();
    Ok(DemazureCrystal {
        shape: lambda.clone(),
        elements: demazure_along_word(rs, &word, lambda),
        witness,
        word,
    })
}

/// `ι(π) ≤ wλ`.
pub fn contains(group: &WeylGroup, poset: &OrbitPoset, pi: &LsPath, w: &WeylElement) -> Result<bool> {
    if pi.shape() != poset.base() {
        return Err(Error::ShapeMismatch {
            expected: poset.base().clone(),
            got: pi.shape().clone(),
        });
    }
    let top = group.apply(w, poset.base());
    poset.leq(pi.initial_direction(), &top)
}

/// The greedy exponents `(a_1, …, a_l)` with
/// `b = f̃_{i_1}^{a_1} ⋯ f̃_{i_l}^{a_l} b_λ`.
pub fn string_parametrization(rs: &RootSystem, b: &LsPath, word: &[usize]) -> Result<Vec<i64>> {
    let mut x = b.clone();
    let mut exps = Vec::with_capacity(word.len());
    for &i in word {
        rs.check_index(i)?;
        exps.push(x.epsilon(rs, i));
        x = emax(rs, &x, i);
    }
    if x != LsPath::highest(b.shape()) {
        return Err(Error::ReconstructionFailure);
    }
    let rebuilt = reconstruct(rs, b.shape(), word, &exps).ok_or(Error::ReconstructionFailure)?;
    if &rebuilt != b {
        return Err(Error::ReconstructionFailure);
    }
    Ok(exps)
}

/// `f̃_{i_1}^{a_1} ⋯ f̃_{i_l}^{a_l} π^λ`, if nonzero.
pub fn reconstruct(rs: &RootSystem, lambda: &Weight, word: &[usize], exps: &[i64]) -> Option<LsPath> {
    let mut x = LsPath::highest(lambda);
    for (&i, &a) in word.iter().zip(exps).rev() {
        for _ in 0..a {
            x = x.f(rs, i)?;
        }
    }
    Some(x)
}

/// An `i`-string of the ambient crystal meeting a subset in neither
/// `∅`, its top, nor the whole string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringViolation<T> {
    /// 1-based color.
    pub color: usize,
    /// The full string, top first.
    pub string: Vec<T>,
    /// Positions (0-based from the top) of the string lying in the subset.
    pub hits: Vec<usize>,
}

/// The first string through an element of `set` that breaks the string
/// property, if any. Strings are taken in the full ambient crystal.
pub fn string_property_violation<T: CrystalElement>(
    rs: &RootSystem,
    set: &BTreeSet<T>,
) -> Option<StringViolation<T>> {
    for i in 0..rs.rank() {
        let mut seen_tops = BTreeSet::new();
        for b in set {
            let top = emax(rs, b, i);
            if !seen_tops.insert(top.clone()) {
                continue;
            }
            let mut string = vec![top];
            while let Some(next) = string.last().unwrap().f(rs, i) {
                string.push(next);
            }
            let hits: Vec<usize> = (0..string.len()).filter(|&k| set.contains(&string[k])).collect();
            let ok = hits.is_empty() || hits == [0] || hits.len() == string.len();
            if !ok {
                return Some(StringViolation {
                    color: i + 1,
                    string,
                    hits,
                });
            }
        }
    }
    None
}

/// Checks the string property of `set` inside `ambient`, which must be
/// closed under the root operators.
pub fn check_string_property<T: CrystalElement>(
    rs: &RootSystem,
    set: &BTreeSet<T>,
    ambient: &BTreeSet<T>,
) -> Result<std::result::Result<(), StringViolation<T>>> {
    if !set.is_subset(ambient) {
        return Err(Error::Precondition("subset is not contained in the ambient crystal".into()));
    }
    Ok(match string_property_violation(rs, set) {
        Some(v) => Err(v),
        None => Ok(()),
    })
}

type DemazureKey = (Weight, WeylElement);

/// Shared state for one root system: the Weyl group plus memoized orbit
/// posets, full crystals and Demazure crystals.
#[derive(Debug)]
pub struct Session {
    group: WeylGroup,
    posets: Mutex<HashMap<Weight, Arc<OrbitPoset>>>,
    crystals: Mutex<HashMap<Weight, Arc<BTreeSet<LsPath>>>>,
    demazure: Mutex<HashMap<DemazureKey, Arc<DemazureCrystal>>>,
}

impl Session {
    pub fn new(group: WeylGroup) -> Self {
        Session {
            group,
            posets: Mutex::default(),
            crystals: Mutex::default(),
            demazure: Mutex::default(),
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::new(WeylGroup::from_name(name)?))
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn rs(&self) -> &RootSystem {
        self.group.root_system()
    }

    pub fn rank(&self) -> usize {
        self.rs().rank()
    }

    pub fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        self.rs().check_weight(lambda)?;
        if lambda.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(lambda.clone()))
        }
    }

    pub fn poset(&self, lambda: &Weight) -> Result<Arc<OrbitPoset>> {
        if let Some(p) = self.posets.lock().unwrap().get(lambda) {
            return Ok(p.clone());
        }
        let p = Arc::new(OrbitPoset::new(self.rs(), lambda)?);
        self.posets
            .lock()
            .unwrap()
            .insert(lambda.clone(), p.clone());
        Ok(p)
    }

    /// The element set of `𝓑(λ)`.
    pub fn crystal(&self, lambda: &Weight) -> Result<Arc<BTreeSet<LsPath>>> {
        self.check_dominant(lambda)?;
        if let Some(c) = self.crystals.lock().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let all = (0..self.rank()).collect::<Vec<_>>();
        let mut set = BTreeSet::from([LsPath::highest(lambda)]);
        let mut queue = VecDeque::from([LsPath::highest(lambda)]);
        while let Some(b) = queue.pop_front() {
            for &i in &all {
                if let Some(c) = b.f(self.rs(), i) {
                    if set.insert(c.clone()) {
                        queue.push_back(c);
                    }
                }
            }
        }
        let set = Arc::new(set);
        self.crystals
            .lock()
            .unwrap()
            .insert(lambda.clone(), set.clone());
        Ok(set)
    }

    pub fn demazure(&self, w: &WeylElement, lambda: &Weight) -> Result<Arc<DemazureCrystal>> {
        self.check_dominant(lambda)?;
        let key = (lambda.clone(), self.group.coset_min_for(w, lambda));
        if let Some(d) = self.demazure.lock().unwrap().get(&key) {
            return Ok(d.clone());
        }
        let d = Arc::new(generate_demazure(&self.group, w, lambda)?);
        self.demazure.lock().unwrap().insert(key, d.clone());
        Ok(d)
    }

    /// Parses a 1-based word.
    pub fn element(&self, word: &[usize]) -> Result<WeylElement> {
        self.group.from_word_one_based(word)
    }

    /// `ι(π) ≤ wλ` using the cached poset.
    pub fn contains(&self, pi: &LsPath, w: &WeylElement) -> Result<bool> {
        let poset = self.poset(pi.shape())?;
        contains(&self.group, &poset, pi, w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    fn session() -> Session {
        Session::from_name("A2").unwrap()
    }

    #[test]
    fn small_demazure_crystals() {
        let s = session();
        let rs = s.rs();
        let om1 = w(&[1, 0]);
        let e = s.demazure(&s.group().identity(), &om1).unwrap();
        assert_eq!(e.elements, BTreeSet::from([LsPath::highest(&om1)]));
        let full = s.demazure(&s.element(&[1, 2, 1]).unwrap(), &om1).unwrap();
        let eps: BTreeSet<LsPath> = (1..=3)
            .map(|k| LsPath::straight(rs, &om1, &rs.epsilon(k).unwrap()).unwrap())
            .collect();
        assert_eq!(full.elements, eps);
        assert_eq!(full.witness, s.element(&[2, 1]).unwrap());
        let s1 = s.demazure(&s.element(&[1]).unwrap(), &om1).unwrap();
        assert_eq!(s1.len(), 2);
        assert_eq!(
            serde_json::to_string(&full.label()).unwrap(),
            r#"{"lambda":[1,0],"w":[2,1]}"#
        );
    }

    #[test]
    fn membership_examples() {
        let s = session();
        let rs = s.rs();
        let om1 = w(&[1, 0]);
        for x in s.group().elements() {
            assert!(s.contains(&LsPath::highest(&om1), x).unwrap());
        }
        let e3 = LsPath::straight(rs, &om1, &w(&[0, -1])).unwrap();
        assert!(!s.contains(&e3, &s.element(&[1]).unwrap()).unwrap());
        let v = s.element(&[1, 2]).unwrap();
        let f1 = LsPath::highest(&om1).f(rs, 0).unwrap();
        assert!(s.contains(&f1, &v).unwrap());
        // f̃_2 π^{s1ϖ1} leaves 𝓑_{s1}(ϖ1)
        let s1 = s.element(&[1]).unwrap();
        let top = LsPath::straight(rs, &om1, &s.group().apply(&s1, &om1)).unwrap();
        assert!(top.f(rs, 1).is_some_and(|p| !s.contains(&p, &s1).unwrap()));
        assert!(s.contains(&LsPath::highest(&w(&[0, 1])), &v).is_ok());
    }

    #[test]
    fn string_parametrizations() {
        let s = session();
        let rs = s.rs();
        let lam = w(&[1, 1]);
        assert_eq!(
            string_parametrization(rs, &LsPath::highest(&lam), &[0, 1]).unwrap(),
            vec![0, 0]
        );
        let b = LsPath::highest(&lam).f(rs, 1).unwrap().f(rs, 0).unwrap();
        assert_eq!(string_parametrization(rs, &b, &[0, 1]).unwrap(), vec![1, 1]);
        let d = s.demazure(&s.element(&[1, 2]).unwrap(), &lam).unwrap();
        let params: BTreeSet<Vec<i64>> = d
            .elements
            .iter()
            .map(|b| string_parametrization(rs, b, &[0, 1]).unwrap())
            .collect();
        assert_eq!(params.len(), d.len());
        let outside = LsPath::highest(&lam).f(rs, 0).unwrap();
        assert_eq!(
            string_parametrization(rs, &outside, &[1]),
            Err(Error::ReconstructionFailure)
        );
    }

    #[test]
    fn f_closures() {
        let s = session();
        let rs = s.rs();
        let om1 = w(&[1, 0]);
        let s1 = s.demazure(&s.element(&[1]).unwrap(), &om1).unwrap();
        assert_eq!(f_closure(rs, &s1.elements, 0), s1.elements);
        let lam = w(&[1, 1]);
        let e = BTreeSet::from([LsPath::highest(&lam)]);
        let c = f_closure(rs, &f_closure(rs, &e, 1), 0);
        assert_eq!(c.len(), 5);
        assert_eq!(c, s.demazure(&s.element(&[1, 2]).unwrap(), &lam).unwrap().elements);
        assert_eq!(
            f_closure(rs, &e, 0),
            s.demazure(&s.element(&[1]).unwrap(), &lam).unwrap().elements
        );
    }

    #[test]
    fn string_property_examples() {
        let s = session();
        let rs = s.rs();
        let lam = w(&[1, 1]);
        let full = s.crystal(&lam).unwrap();
        assert_eq!(check_string_property(rs, &full, &full).unwrap(), Ok(()));
        let d = s.demazure(&s.element(&[1]).unwrap(), &lam).unwrap();
        assert_eq!(check_string_property(rs, &d.elements, &full).unwrap(), Ok(()));
        // middle and bottom of a 1-string of length 3 in 𝓑(2ϖ1)
        let two = w(&[2, 0]);
        let top = LsPath::highest(&two);
        let mid = top.f(rs, 0).unwrap();
        let bottom = mid.f(rs, 0).unwrap();
        let bad = BTreeSet::from([mid, bottom]);
        let v = check_string_property(rs, &bad, &s.crystal(&two).unwrap())
            .unwrap()
            .unwrap_err();
        assert_eq!(v.color, 1);
        assert_eq!(v.hits, vec![1, 2]);
        let outside = BTreeSet::from([LsPath::highest(&w(&[0, 1]))]);
        assert!(check_string_property(rs, &outside, &full).is_err());
    }

    #[test]
    fn structural_properties_on_small_grid() {
        for (name, lambdas) in [
            ("A2", vec![w(&[1, 0]), w(&[0, 1]), w(&[1, 1]), w(&[2, 0]), w(&[2, 1])]),
            ("B2", vec![w(&[1, 0]), w(&[0, 1]), w(&[1, 1])]),
            ("G2", vec![w(&[1, 0])]),
        ] {
            let s = Session::from_name(name).unwrap();
            let rs = s.rs();
            for lam in &lambdas {
                let full = s.crystal(lam).unwrap();
                for x in s.group().elements() {
                    let d = s.demazure(x, lam).unwrap();
                    for word in s.group().reduced_words(x) {
                        assert_eq!(demazure_along_word(rs, &word, lam), d.elements);
                    }
                    for b in full.iter() {
                        assert_eq!(s.contains(b, x).unwrap(), d.contains(b), "{name} {lam} {x} {b}");
                    }
                    for b in &d.elements {
                        for i in 0..rs.rank() {
                            if let Some(c) = b.e(rs, i) {
                                assert!(d.contains(&c));
                            }
                        }
                    }
                    assert_eq!(check_string_property(rs, &d.elements, &full).unwrap(), Ok(()));
                    for k in 0..rs.rank() {
                        let closed = f_closure(rs, &d.elements, k);
                        let sk = s.group().left_simple(k, x);
                        if sk.len() > x.len() {
                            assert_eq!(closed, s.demazure(&sk, lam).unwrap().elements);
                        } else {
                            assert_eq!(closed, d.elements);
                        }
                    }
                }
                assert_eq!(s.demazure(&s.group().longest(), lam).unwrap().elements, *full);
            }
        }
    }
}
