//! Exhaustive invariant suites over a grid of root systems and dominant
//! weights. Each suite counts the instances it checked and keeps the first
//! few counterexamples.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::cartan::Weight;
use crate::crystal::{character, components, is_isomorphic, tensor_set, CrystalElement};
use crate::decomp::{
    checked_magyar_w, closure_check, component, condition_check, decompose, dominant_paths,
    leibniz_check, recursive_component, recursive_component_restricted, u_of, DecomposeOptions,
};
use crate::demazure::{check_string_property, contains, demazure_along_word, Session};
use crate::error::{Error, Result};
use crate::keypoly::{demazure_character, product_report, weyl_dimension};

const KEPT_COUNTEREXAMPLES: usize = 5;

/// One root system with its list of dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCell {
    pub root_system: String,
    pub weights: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub cells: Vec<GridCell>,
}

impl Grid {
    /// A2 with `ϖ1, ϖ2, ϖ1+ϖ2` and B2 with its fundamental weights.
    pub fn standard() -> Self {
        let w = |c: &[i64]| Weight(c.to_vec());
        Grid {
            cells: vec![
                GridCell {
                    root_system: "A2".into(),
                    weights: vec![w(&[1, 0]), w(&[0, 1]), w(&[1, 1])],
                },
                GridCell {
                    root_system: "B2".into(),
                    weights: vec![w(&[1, 0]), w(&[0, 1])],
                },
            ],
        }
    }

    /// Parses `"A2:2,B2:1"`: each entry names a root system and a bound on
    /// the coordinate sum of the (nonzero) dominant weights. `"standard"`
    /// gives [`Grid::standard`].
    pub fn parse(spec: &str) -> Result<Self> {
        if spec.trim() == "standard" {
            return Ok(Self::standard());
        }
        let mut cells = Vec::new();
        for item in spec.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (name, bound) = item
                .split_once(':')
                .ok_or_else(|| Error::Precondition(format!("grid entry {item:?} needs TYPE:BOUND")))?;
            let bound: i64 = bound
                .trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad weight bound in {item:?}")))?;
            if bound < 1 {
                return Err(Error::Precondition(format!("weight bound must be positive in {item:?}")));
            }
            let rs = crate::cartan::RootSystem::from_name(name.trim())?;
            cells.push(GridCell {
                root_system: name.trim().to_string(),
                weights: dominant_weights_up_to(rs.rank(), bound),
            });
        }
        if cells.is_empty() {
            return Err(Error::Precondition("empty grid".into()));
        }
        Ok(Grid { cells })
    }
}

/// Nonzero dominant weights with coordinate sum at most `bound`, ordered by
/// sum and then lexicographically descending.
pub fn dominant_weights_up_to(rank: usize, bound: i64) -> Vec<Weight> {
    fn rec(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == rank {
            out.push(Weight(cur.clone()));
            return;
        }
        for x in (0..=left).rev() {
            cur.push(x);
            rec(rank, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for total in 1..=bound {
        let mut all = Vec::new();
        rec(rank, total, &mut Vec::new(), &mut all);
        out.extend(all.into_iter().filter(|w| w.coords().iter().sum::<i64>() == total));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub counterexamples: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult {
            name: name.into(),
            checked: 0,
            failed: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, message: String) {
        self.failed += 1;
        if self.counterexamples.len() < KEPT_COUNTEREXAMPLES {
            self.counterexamples.push(message);
        }
    }

    /// Records an outcome that may itself be an error.
    fn check(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.record(ok, describe),
            Err(e) => {
                self.checked += 1;
                let msg = format!("{}: {e}", describe());
                self.fail(msg);
            }
        }
    }

    fn absorb(&mut self, other: SuiteResult) {
        self.checked += other.checked;
        self.failed += other.failed;
        for c in other.counterexamples {
            if self.counterexamples.len() < KEPT_COUNTEREXAMPLES {
                self.counterexamples.push(c);
            }
        }
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} checked, {} failed)", self.name, self.checked, self.failed)
    }
}

type SuiteFn = fn(&Session, &[Weight]) -> Result<SuiteResult>;

/// Suite names in run order.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("string-property", string_property),
    ("reduced-word-independence", reduced_word_independence),
    ("iota-criterion", iota_criterion),
    ("e-stability", e_stability),
    ("weyl-dimension", dimension),
    ("tensor-concatenation", tensor_concatenation),
    ("lr-partition", lr_partition),
    ("demazure-biconditional", demazure_biconditional),
    ("recursive-component", recursive_components),
    ("leibniz", leibniz),
    ("magyar-oracle", magyar_oracle),
    ("characters", characters),
    ("key-positivity", key_positivity),
    ("closure", closure),
    ("u-word-independence", u_word_independence),
];

/// Runs one named suite over every grid cell.
pub fn run_suite(grid: &Grid, name: &str) -> Result<SuiteResult> {
    let sessions = sessions(grid)?;
    run_on(grid, &sessions, name)
}

/// Runs every suite, sharing one cache per root system.
pub fn run_all(grid: &Grid) -> Result<Vec<SuiteResult>> {
    let sessions = sessions(grid)?;
    SUITES.iter().map(|(n, _)| run_on(grid, &sessions, n)).collect()
}

fn sessions(grid: &Grid) -> Result<Vec<Session>> {
    grid.cells.iter().map(|c| Session::from_name(&c.root_system)).collect()
}

fn run_on(grid: &Grid, sessions: &[Session], name: &str) -> Result<SuiteResult> {
    let (_, f) = SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Precondition(format!("unknown suite {name:?}")))?;
    let mut total = SuiteResult::new(name);
    for (cell, s) in grid.cells.iter().zip(sessions) {
        let mut r = f(s, &cell.weights)?;
        r.counterexamples = r
            .counterexamples
            .into_iter()
            .map(|c| format!("{}: {c}", cell.root_system))
            .collect();
        total.absorb(r);
    }
    Ok(total)
}

fn pairs(weights: &[Weight]) -> impl Iterator<Item = (&Weight, &Weight)> {
    weights
        .iter()
        .flat_map(move |l| weights.iter().map(move |m| (l, m)))
}

pub fn string_property(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("string-property");
    for lam in weights {
        let full = s.crystal(lam)?;
        for w in s.group().min_coset_reps(lam) {
            let d = s.demazure(&w, lam)?;
            let out = check_string_property(s.rs(), &d.elements, &full)?;
            r.record(out.is_ok(), || format!("B_{w}({lam}) violates the string property"));
        }
    }
    Ok(r)
}

pub fn reduced_word_independence(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("reduced-word-independence");
    let g = s.group();
    for lam in weights {
        for w in g.elements() {
            let d = s.demazure(w, lam)?;
            for word in g.reduced_words(w) {
                let other = demazure_along_word(s.rs(), &word, lam);
                r.record(other == d.elements, || format!("B_{w}({lam}) differs along {word:?}"));
            }
        }
    }
    Ok(r)
}

pub fn iota_criterion(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("iota-criterion");
    for lam in weights {
        let poset = s.poset(lam)?;
        let full = s.crystal(lam)?;
        for w in s.group().elements() {
            let d = s.demazure(w, lam)?;
            for pi in full.iter() {
                let by_iota = contains(s.group(), &poset, pi, w)?;
                r.record(by_iota == d.contains(pi), || format!("{pi} in B_{w}({lam})"));
            }
        }
    }
    Ok(r)
}

pub fn e_stability(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("e-stability");
    for lam in weights {
        for w in s.group().min_coset_reps(lam) {
            let d = s.demazure(&w, lam)?;
            for pi in &d.elements {
                for i in 0..s.rank() {
                    let ok = pi.e(s.rs(), i).is_none_or(|x| d.contains(&x));
                    r.record(ok, || format!("e_{} {pi} leaves B_{w}({lam})", i + 1));
                }
            }
        }
    }
    Ok(r)
}

pub fn dimension(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("weyl-dimension");
    for lam in weights {
        let n = s.crystal(lam)?.len() as i64;
        let expected = weyl_dimension(s.rs(), lam);
        r.record(n == expected, || format!("|B({lam})| = {n}, dimension {expected}"));
    }
    Ok(r)
}

pub fn tensor_concatenation(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("tensor-concatenation");
    let rs = s.rs();
    for (lam, mu) in pairs(weights) {
        let a = s.crystal(lam)?;
        let b = s.crystal(mu)?;
        for t in tensor_set(&a, &b) {
            let joined = t.0.concatenate(&t.1)?;
            for i in 0..s.rank() {
                let via_tensor = t.f(rs, i).map(|x| x.0.concatenate(&x.1)).transpose()?;
                let via_path = joined.f(rs, i);
                r.record(via_tensor == via_path, || format!("f_{} on {t}", i + 1));
                let via_tensor = t.e(rs, i).map(|x| x.0.concatenate(&x.1)).transpose()?;
                r.record(via_tensor == joined.e(rs, i), || format!("e_{} on {t}", i + 1));
            }
        }
    }
    Ok(r)
}

/// Components of `𝓑(λ) ⊗ 𝓑(μ)` are indexed by the `λ`-dominant paths of
/// `𝓑(μ)`, each isomorphic to `𝓑(λ + wt π)`, and cover it exactly once.
pub fn lr_partition(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("lr-partition");
    let top = s.group().longest();
    for (lam, mu) in pairs(weights) {
        let full = tensor_set(&*s.crystal(lam)?, &*s.crystal(mu)?);
        let mut covered = BTreeSet::new();
        let mut overlaps = 0;
        let paths = dominant_paths(s, &top, mu, lam)?;
        for pi in &paths {
            let c = component(s, pi, &top, &top, lam, mu)?;
            let nu = lam + &pi.weight();
            let iso = is_isomorphic(s.rs(), &c, &*s.crystal(&nu)?);
            r.check(iso, || format!("C({pi}) is not B({nu}) for {lam} ⊗ {mu}"));
            for b in c {
                if !covered.insert(b) {
                    overlaps += 1;
                }
            }
        }
        let n_components = components(s.rs(), &full).len();
        r.record(
            overlaps == 0 && covered == full && n_components == paths.len(),
            || format!("{lam} ⊗ {mu}: {overlaps} overlaps, {n_components} components vs {} paths", paths.len()),
        );
    }
    Ok(r)
}

pub fn demazure_biconditional(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("demazure-biconditional");
    let g = s.group();
    for (lam, mu) in pairs(weights) {
        for v in g.elements() {
            for w in g.elements() {
                let out = decompose(s, v, w, lam, mu, DecomposeOptions::default())
                    .map(|rep| rep.condition_holds == rep.all_demazure());
                r.check(out, || format!("v={v}, w={w}, λ={lam}, μ={mu}"));
            }
        }
    }
    Ok(r)
}

pub fn recursive_components(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("recursive-component");
    let g = s.group();
    for (lam, mu) in pairs(weights) {
        for w in g.min_coset_reps(mu) {
            let paths = dominant_paths(s, &w, mu, lam)?;
            for v in g.elements() {
                for i in 0..s.rank() {
                    let siv = g.left_simple(i, v);
                    if siv.len() < v.len() {
                        continue;
                    }
                    for pi in &paths {
                        let target = component(s, pi, &siv, &w, lam, mu)?;
                        let describe = || format!("π={pi}, v={v}, i={}, w={w}, λ={lam}, μ={mu}", i + 1);
                        let got = recursive_component(s, pi, v, i, &w, lam, mu);
                        r.check(got.map(|c| c == target), describe);
                        let got = recursive_component_restricted(s, pi, v, i, &w, lam, mu);
                        r.check(got.map(|c| c == target), || format!("restricted: {}", describe()));
                    }
                }
            }
        }
    }
    Ok(r)
}

pub fn leibniz(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("leibniz");
    let g = s.group();
    for (lam, mu) in pairs(weights) {
        for v in g.elements() {
            for w in g.elements() {
                for i in 0..s.rank() {
                    if g.left_simple(i, v).len() < v.len() {
                        continue;
                    }
                    let out = leibniz_check(s, v, w, lam, mu, i).map(|rep| {
                        let degenerate_ok = g.left_simple(i, w).len() > w.len() || rep.second_size == 0;
                        rep.equal && rep.disjoint && degenerate_ok
                    });
                    r.check(out, || format!("v={v}, w={w}, i={}, λ={lam}, μ={mu}", i + 1));
                }
            }
        }
    }
    Ok(r)
}

pub fn magyar_oracle(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("magyar-oracle");
    let g = s.group();
    for (lam, mu) in pairs(weights) {
        for w in g.min_coset_reps(mu) {
            for pi in dominant_paths(s, &w, mu, lam)? {
                let out = checked_magyar_w(s, &pi, &w, mu, lam).map(|_| true);
                r.check(out, || format!("π={pi}, w={w}, λ={lam}, μ={mu}"));
            }
        }
    }
    Ok(r)
}

pub fn characters(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("characters");
    let g = s.group();
    for lam in weights {
        for w in g.elements() {
            let d = s.demazure(w, lam)?;
            let formula = demazure_character(s.rs(), w.word(), lam);
            r.record(character(&d.elements) == formula, || format!("ch B_{w}({lam})"));
        }
    }
    for (lam, mu) in pairs(weights) {
        for v in g.min_coset_reps(lam) {
            for w in g.min_coset_reps(mu) {
                let a = s.demazure(&v, lam)?;
                let b = s.demazure(&w, mu)?;
                let prod = tensor_set(&a.elements, &b.elements);
                let ok = character(&prod) == &character(&a.elements) * &character(&b.elements);
                r.record(ok, || format!("ch(B_{v}({lam}) ⊗ B_{w}({mu}))"));
            }
        }
    }
    Ok(r)
}

pub fn key_positivity(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("key-positivity");
    let g = s.group();
    for (lam, mu) in pairs(weights) {
        for v in g.min_coset_reps(lam) {
            for w in g.min_coset_reps(mu) {
                if !condition_check(s, &v, &w, lam, mu) && !condition_check(s, &w, &v, mu, lam) {
                    continue;
                }
                let out = product_report(s, &v, &w, lam, mu)
                    .map(|rep| rep.expansion.nonnegative && rep.counting_matches == Some(true));
                r.check(out, || format!("κ_{{{v}·{lam}}} κ_{{{w}·{mu}}}"));
            }
        }
    }
    Ok(r)
}

/// When the condition holds, the closure of `𝓑_e(λ) ⊗ 𝓑_w(μ)` along a
/// reduced word of `⌊v⌋^λ` is `𝓑_v(λ) ⊗ 𝓑_w(μ)`.
pub fn closure(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("closure");
    let g = s.group();
    for (lam, mu) in pairs(weights) {
        for v in g.min_coset_reps(lam) {
            for w in g.min_coset_reps(mu) {
                if !condition_check(s, &v, &w, lam, mu) {
                    continue;
                }
                let out = closure_check(s, &v, &w, lam, mu).map(|(equal, _)| equal);
                r.check(out, || format!("v={v}, w={w}, λ={lam}, μ={mu}"));
            }
        }
    }
    Ok(r)
}

/// The multiset `{(λ + wt π, ⌊u(π, v)⌋^{λ+wt π})}` does not depend on the
/// reduced word of `⌊v⌋^λ`.
pub fn u_word_independence(s: &Session, weights: &[Weight]) -> Result<SuiteResult> {
    let mut r = SuiteResult::new("u-word-independence");
    let g = s.group();
    for (lam, mu) in pairs(weights) {
        for v in g.min_coset_reps(lam) {
            for w in g.min_coset_reps(mu) {
                if !condition_check(s, &v, &w, lam, mu) {
                    continue;
                }
                let paths = dominant_paths(s, &w, mu, lam)?;
                let multiset = |word: &[usize]| -> Result<Vec<(Weight, Vec<usize>)>> {
                    let mut out = Vec::new();
                    for pi in &paths {
                        let nu = lam + &pi.weight();
                        let u = u_of(s, pi, &v, &w, lam, mu, Some(word))?;
                        out.push((nu.clone(), g.coset_min_for(&u, &nu).word().to_vec()));
                    }
                    out.sort();
                    Ok(out)
                };
                let base = multiset(v.word())?;
                for word in g.reduced_words(&v) {
                    let out = multiset(&word).map(|m| m == base);
                    r.check(out, || format!("v={v} via {word:?}, w={w}, λ={lam}, μ={mu}"));
                }
            }
        }
    }
    Ok(r)
}
