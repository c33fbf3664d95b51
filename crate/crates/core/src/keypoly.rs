//! Demazure operators, key polynomials and expansions of products in the
//! key basis.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cartan::{Rat, RootSystem, Weight};
use crate::crystal::{character, CharPoly};
use crate::decomp::{decompose, DecomposeOptions};
use crate::demazure::Session;
use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylGroup};

/// `D_i e^λ`, extended linearly.
pub fn demazure_operator(rs: &RootSystem, f: &CharPoly, i: usize) -> CharPoly {
    let alpha = rs.simple_root(i);
    let mut out = CharPoly::zero();
    for (x, &c) in f.terms() {
        let n = x[i];
        if n >= 0 {
            // e^x + e^{x−α} + … + e^{x−nα}
            let mut y = x.clone();
            for _ in 0..=n {
                out.add_term(y.clone(), c);
                y = &y - &alpha;
            }
        } else if n <= -2 {
            // −(e^{x+α} + … + e^{s_i x − α})
            let mut y = x + &alpha;
            for _ in 0..(-n - 1) {
                out.add_term(y.clone(), -c);
                y = &y + &alpha;
            }
        }
    }
    out
}

/// `D_{i_1} ⋯ D_{i_l} e^λ`, applying `D_{i_l}` first.
pub fn demazure_character(rs: &RootSystem, word: &[usize], lambda: &Weight) -> CharPoly {
    word.iter()
        .rev()
        .fold(CharPoly::monomial(lambda.clone()), |p, &i| {
            demazure_operator(rs, &p, i)
        })
}

/// `Π_{β>0} ⟨λ+ρ, β^∨⟩ / ⟨ρ, β^∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> i64 {
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let value = rs.positive_roots().iter().fold(Rat::one(), |acc, b| {
        acc * Rat::new(rs.coroot_pairing(&shifted, b), rs.coroot_pairing(&rho, b))
    });
    value.to_integer()
}

/// `ν` with its normal form `(λ_ν, u_ν)`, `u_ν = ⌊u⌋^{λ_ν}`, `u λ_ν = ν`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeyIndex {
    pub lambda_nu: Weight,
    pub u_nu: WeylElement,
    pub nu: Weight,
}

impl KeyIndex {
    pub fn new(group: &WeylGroup, nu: &Weight) -> Result<Self> {
        let rs = group.root_system();
        rs.check_weight(nu)?;
        let (dom, _) = rs.dominant_representative(nu);
        let u_nu = group.min_element_sending(&dom, nu)?;
        Ok(KeyIndex {
            lambda_nu: dom,
            u_nu,
            nu: nu.clone(),
        })
    }

    /// The index of `κ_{uλ}`.
    pub fn from_pair(group: &WeylGroup, u: &WeylElement, lambda: &Weight) -> Self {
        let u_nu = group.coset_min_for(u, lambda);
        KeyIndex {
            nu: group.apply(&u_nu, lambda),
            lambda_nu: lambda.clone(),
            u_nu,
        }
    }
}

/// `κ_ν = ch 𝓑_{u_ν}(λ_ν)`.
pub fn key_polynomial(s: &Session, nu: &Weight) -> Result<CharPoly> {
    let k = KeyIndex::new(s.group(), nu)?;
    let d = s.demazure(&k.u_nu, &k.lambda_nu)?;
    let ch = character(&d.elements);
    debug_assert_eq!(ch, demazure_character(s.rs(), k.u_nu.word(), &k.lambda_nu));
    Ok(ch)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyTerm {
    pub nu: Weight,
    pub lambda_nu: Weight,
    /// `u_ν`, 1-based.
    pub u_nu: Vec<usize>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyExpansion {
    pub terms: Vec<KeyTerm>,
    pub nonnegative: bool,
}

impl KeyExpansion {
    pub fn coefficient(&self, nu: &Weight) -> i64 {
        self.terms
            .iter()
            .find(|t| &t.nu == nu)
            .map_or(0, |t| t.coeff)
    }
}

/// Dominant weights `≤ d` in dominance order: the dominant weights of `𝓑(d)`.
fn dominant_below(s: &Session, d: &Weight) -> Result<BTreeSet<Weight>> {
    Ok(s.crystal(d)?
        .iter()
        .map(|p| p.weight())
        .filter(Weight::is_dominant)
        .collect())
}

/// Writes `f` in the key basis by an exact solve over the candidates `ν`
/// whose dominant representative lies below the support of `f`.
pub fn expand_in_keys(s: &Session, f: &CharPoly) -> Result<KeyExpansion> {
    let rs = s.rs();
    let mut tops = BTreeSet::new();
    for x in f.support() {
        rs.check_weight(x)?;
        tops.insert(rs.dominant_representative(x).0);
    }
    let mut dominant = BTreeSet::new();
    for d in &tops {
        dominant.extend(dominant_below(s, d)?);
    }
    let mut columns: Vec<(KeyIndex, CharPoly)> = Vec::new();
    for d in &dominant {
        for nu in rs.orbit(d) {
            columns.push((KeyIndex::new(s.group(), &nu)?, key_polynomial(s, &nu)?));
        }
    }
    columns.sort_by(|a, b| a.0.cmp(&b.0));
    let mut rows: BTreeSet<Weight> = f.support().cloned().collect();
    for (_, k) in &columns {
        rows.extend(k.support().cloned());
    }
    let rows: Vec<Weight> = rows.into_iter().collect();
    let matrix: Vec<Vec<Rat>> = rows
        .iter()
        .map(|x| {
            let mut row: Vec<Rat> = columns
                .iter()
                .map(|(_, k)| Rat::from_integer(k.coeff(x)))
                .collect();
            row.push(Rat::from_integer(f.coeff(x)));
            row
        })
        .collect();
    let solution = solve_exact(matrix, columns.len())?;
    let mut terms = Vec::new();
    for ((k, _), c) in columns.iter().zip(solution) {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NonIntegralCoefficient(format!("{c} on κ_{}", k.nu)));
        }
        terms.push(KeyTerm {
            nu: k.nu.clone(),
            lambda_nu: k.lambda_nu.clone(),
            u_nu: k.u_nu.word_one_based(),
            coeff: c.to_integer(),
        });
    }
    let nonnegative = terms.iter().all(|t| t.coeff >= 0);
    Ok(KeyExpansion { terms, nonnegative })
}

/// Solves `A c = b` for an augmented matrix with `n` unknowns; requires
/// full column rank and a consistent system.
fn solve_exact(mut m: Vec<Vec<Rat>>, n: usize) -> Result<Vec<Rat>> {
    let rows = m.len();
    let mut pivot_row = 0;
    for col in 0..n {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            return Err(Error::Precondition(format!(
                "key polynomials are linearly dependent at column {col}"
            )));
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= factor * p;
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return Err(Error::NotInSpan);
    }
    Ok((0..n).map(|c| m[c][n]).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductReport {
    pub root_system: String,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    pub lambda: Weight,
    pub mu: Weight,
    pub condition_holds: bool,
    pub swapped_condition_holds: bool,
    pub expansion: KeyExpansion,
    /// Whether the coefficients agree with the component count from the
    /// decomposition; `None` when neither condition holds.
    pub counting_matches: Option<bool>,
}

/// `a^ν` counted from the decomposition of `𝓑_v(λ) ⊗ 𝓑_w(μ)`, which must
/// satisfy the forward condition.
pub fn counted_coefficients(
    s: &Session,
    v: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeMap<Weight, i64>> {
    let report = decompose(s, v, w, lambda, mu, DecomposeOptions::default())?;
    let mut counts = BTreeMap::new();
    for e in &report.entries {
        let word = e
            .u_formula
            .as_ref()
            .ok_or_else(|| Error::Precondition("condition does not hold".into()))?;
        let u = s.element(word)?;
        let k = KeyIndex::from_pair(s.group(), &u, &e.lambda_plus_wt);
        *counts.entry(k.nu).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Expands `κ_{vλ} κ_{wμ}` in keys and reconciles it with the
/// decomposition whenever one of the two conditions holds.
pub fn product_report(
    s: &Session,
    v: &WeylElement,
    w: &WeylElement,
    lambda: &Weight,
    mu: &Weight,
) -> Result<ProductReport> {
    s.check_dominant(lambda)?;
    s.check_dominant(mu)?;
    let g = s.group();
    let left = character(&s.demazure(v, lambda)?.elements);
    let right = character(&s.demazure(w, mu)?.elements);
    let expansion = expand_in_keys(s, &(&left * &right))?;
    let condition = crate::decomp::condition_check(s, v, w, lambda, mu);
    let swapped = crate::decomp::condition_check(s, w, v, mu, lambda);
    let counting_matches = if condition || swapped {
        if !expansion.nonnegative {
            return Err(Error::TheoremViolation(format!(
                "negative key coefficient for v={v}, w={w}, λ={lambda}, μ={mu}"
            )));
        }
        let counts = if condition {
            counted_coefficients(s, v, w, lambda, mu)?
        } else {
            counted_coefficients(s, w, v, mu, lambda)?
        };
        let from_solve: BTreeMap<Weight, i64> = expansion
            .terms
            .iter()
            .map(|t| (t.nu.clone(), t.coeff))
            .collect();
        Some(counts == from_solve)
    } else {
        None
    };
    Ok(ProductReport {
        root_system: s.rs().cartan_type().to_string(),
        v: g.coset_min_for(v, lambda).word_one_based(),
        w: g.coset_min_for(w, mu).word_one_based(),
        lambda: lambda.clone(),
        mu: mu.clone(),
        condition_holds: condition,
        swapped_condition_holds: swapped,
        expansion,
        counting_matches,
    })
}

/// Exponent vectors `(a_1, …, a_{n+1})` of a type-A character. Each term
/// is shifted by a multiple of `(1, …, 1)` so that all monomials share the
/// smallest total degree that keeps every exponent nonnegative.
pub fn type_a_exponents(rs: &RootSystem, f: &CharPoly) -> Result<Vec<(Vec<i64>, i64)>> {
    let k = rs.rank() as i64 + 1;
    let mut terms = Vec::new();
    for (x, &c) in f.terms() {
        terms.push((rs.to_epsilon(x)?, c));
    }
    let Some((first, _)) = terms.first() else {
        return Ok(terms);
    };
    let residue = first.iter().sum::<i64>().rem_euclid(k);
    if terms.iter().any(|(a, _)| a.iter().sum::<i64>().rem_euclid(k) != residue) {
        return Err(Error::Precondition(
            "terms lie in different classes modulo the root lattice".into(),
        ));
    }
    // a_t + c_t (1, …, 1) with sum D needs D ≥ sum a_t − k · min a_t
    let need = terms
        .iter()
        .map(|(a, _)| a.iter().sum::<i64>() - k * a.iter().min().copied().unwrap_or(0))
        .max()
        .unwrap_or(0);
    for (a, _) in &mut terms {
        let shift = (need - a.iter().sum::<i64>()) / k;
        for x in a.iter_mut() {
            *x += shift;
        }
    }
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(terms)
}

/// Renders a type-A character as a polynomial in `x_1, …, x_{n+1}`.
pub fn render_type_a(rs: &RootSystem, f: &CharPoly) -> Result<String> {
    let terms = type_a_exponents(rs, f)?;
    if terms.is_empty() {
        return Ok("0".into());
    }
    let mut out = String::new();
    for (k, (exps, c)) in terms.iter().enumerate() {
        if k > 0 {
            out.push_str(if *c < 0 { " - " } else { " + " });
        } else if *c < 0 {
            out.push('-');
        }
        let vars: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(j, &a)| {
                if a == 1 {
                    format!("x{}", j + 1)
                } else {
                    format!("x{}^{a}", j + 1)
                }
            })
            .collect();
        let mag = c.abs();
        match (vars.is_empty(), mag) {
            (true, m) => out.push_str(&m.to_string()),
            (false, 1) => out.push_str(&vars.join("*")),
            (false, m) => out.push_str(&format!("{m}*{}", vars.join("*"))),
        }
    }
    Ok(out)
}
