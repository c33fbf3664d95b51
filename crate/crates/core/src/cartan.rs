//! Root data for the finite simple types.
//!
//! Weights live in fundamental-weight coordinates, so the pairing with a
//! simple coroot is a coordinate read-off. Simple roots are the columns of
//! the Cartan matrix, and every positive root caches its coroot expressed in
//! simple coroots.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rat = Ratio<i64>;

/// An integral weight `Σ c_i ϖ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ϖ_i` (0-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint(self.0.iter().map(|&c| Rat::from_integer(c)).collect())
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point of the real span of the weight lattice with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(pub Vec<Rat>);

impl RationalPoint {
    pub fn zero(rank: usize) -> Self {
        RationalPoint(vec![Rat::zero(); rank])
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    /// `self + t·x`.
    pub fn add_scaled(&self, t: Rat, x: &Weight) -> Self {
        RationalPoint(
            self.0
                .iter()
                .zip(&x.0)
                .map(|(a, &b)| *a + t * Rat::from_integer(b))
                .collect(),
        )
    }

    pub fn add_weight(&self, x: &Weight) -> Self {
        self.add_scaled(Rat::from_integer(1), x)
    }

    pub fn add_point(&self, x: &RationalPoint) -> Self {
        RationalPoint(self.0.iter().zip(&x.0).map(|(a, b)| a + b).collect())
    }

    /// The integral weight at this point, if every coordinate is an integer.
    pub fn to_weight(&self) -> Option<Weight> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite simple Cartan type such as `A2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl CartanType {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        use TypeLetter::*;
        let ok = match letter {
            A => rank >= 1,
            B | C => rank >= 2,
            D => rank >= 4,
            E => (6..=8).contains(&rank),
            F => rank == 4,
            G => rank == 2,
        };
        if ok {
            Ok(CartanType { letter, rank })
        } else {
            Err(Error::InvalidType(format!("{letter:?}{rank}")))
        }
    }

    /// Number of positive roots, from the classification.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.letter {
            TypeLetter::A => n * (n + 1) / 2,
            TypeLetter::B | TypeLetter::C => n * n,
            TypeLetter::D => n * (n - 1),
            TypeLetter::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            TypeLetter::F => 24,
            TypeLetter::G => 6,
        }
    }

    /// Order of the Weyl group, from the classification.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.letter {
            TypeLetter::A => fact(n + 1),
            TypeLetter::B | TypeLetter::C => (1u128 << n) * fact(n),
            TypeLetter::D => (1u128 << (n - 1)) * fact(n),
            TypeLetter::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            TypeLetter::F => 1152,
            TypeLetter::G => 12,
        }
    }

    /// Cartan matrix `a_ij = ⟨α_j, α_i^∨⟩` in Bourbaki labelling.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.letter {
            TypeLetter::A | TypeLetter::B | TypeLetter::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            TypeLetter::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            TypeLetter::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            TypeLetter::F => {
                for i in 0..3 {
                    link(i, i + 1);
                }
            }
            TypeLetter::G => link(0, 1),
        }
        match self.letter {
            // α_n short
            TypeLetter::B => a[n - 1][n - 2] = -2,
            // α_n long
            TypeLetter::C => a[n - 2][n - 1] = -2,
            TypeLetter::F => a[2][1] = -2,
            // α_1 short
            TypeLetter::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => TypeLetter::A,
            Some('B') => TypeLetter::B,
            Some('C') => TypeLetter::C,
            Some('D') => TypeLetter::D,
            Some('E') => TypeLetter::E,
            Some('F') => TypeLetter::F,
            Some('G') => TypeLetter::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(letter, rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, self.rank)
    }
}

/// A positive root together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    /// Coordinates in the basis of simple roots.
    pub simple: Vec<i64>,
    /// The root as a weight.
    pub weight: Weight,
    /// Coordinates of the coroot in the basis of simple coroots.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_type.cartan_matrix();
        let positive_roots = positive_roots_by_closure(&cartan);
        RootSystem {
            cartan_type,
            cartan,
            positive_roots,
        }
    }

    /// Parses a type string like `"B2"` and builds the root system.
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::new(name.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height, simple roots first.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn check_weight(&self, x: &Weight) -> Result<()> {
        if x.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got: x.rank(),
            })
        }
    }

    /// `α_i` in fundamental-weight coordinates: column `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    /// `⟨x, α_i^∨⟩`.
    pub fn pairing(&self, x: &Weight, i: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_weight(x)?;
        Ok(x[i])
    }

    /// `⟨x, α_i^∨⟩` for a rational point.
    pub fn pairing_rational(&self, x: &RationalPoint, i: usize) -> Result<Rat> {
        self.check_index(i)?;
        Ok(x.0[i])
    }

    /// `⟨x, β^∨⟩`.
    pub fn coroot_pairing(&self, x: &Weight, beta: &Root) -> i64 {
        beta.coroot.iter().zip(&x.0).map(|(c, v)| c * v).sum()
    }

    pub fn coroot_pairing_rational(&self, x: &RationalPoint, beta: &Root) -> Rat {
        beta.coroot
            .iter()
            .zip(&x.0)
            .fold(Rat::zero(), |acc, (&c, v)| acc + *v * Rat::from_integer(c))
    }

    /// `s_β(x) = x − ⟨x, β^∨⟩ β`. Since `s_{−β} = s_β`, negative roots are
    /// handled by passing their positive counterpart.
    pub fn reflect(&self, x: &Weight, beta: &Root) -> Weight {
        let c = self.coroot_pairing(x, beta);
        Weight(
            x.0.iter()
                .zip(&beta.weight.0)
                .map(|(a, b)| a - c * b)
                .collect(),
        )
    }

    pub fn reflect_rational(&self, x: &RationalPoint, beta: &Root) -> RationalPoint {
        let c = self.coroot_pairing_rational(x, beta);
        x.add_scaled(-c, &beta.weight)
    }

    /// `s_i(x) = x − x_i α_i`.
    pub fn simple_reflect(&self, x: &Weight, i: usize) -> Weight {
        let c = x[i];
        Weight(
            x.0.iter()
                .zip(&self.cartan)
                .map(|(a, row)| a - c * row[i])
                .collect(),
        )
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// Index into `positive_roots` of the simple root `α_i`.
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.positive_roots
            .iter()
            .position(|r| r.height() == 1 && r.simple[i] == 1)
            .expect("simple roots are positive roots")
    }

    /// Index of the positive root proportional to `d`, if any.
    pub fn root_proportional_to(&self, d: &Weight) -> Option<usize> {
        self.positive_roots.iter().position(|r| {
            // d = k·β for some nonzero rational k
            let mut ratio: Option<Rat> = None;
            for (a, b) in d.0.iter().zip(&r.weight.0) {
                match (*a, *b) {
                    (0, 0) => {}
                    (_, 0) | (0, _) => return false,
                    (a, b) => {
                        let q = Rat::new(a, b);
                        if ratio.is_some_and(|r| r != q) {
                            return false;
                        }
                        ratio = Some(q);
                    }
                }
            }
            ratio.is_some()
        })
    }

    /// The dominant weight in the orbit of `x` and a word `[i_1, …, i_k]`
    /// with `x = s_{i_1} ⋯ s_{i_k} λ`.
    pub fn dominant_representative(&self, x: &Weight) -> (Weight, Vec<usize>) {
        let mut cur = x.clone();
        let mut word = Vec::new();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            cur = self.simple_reflect(&cur, i);
            word.push(i);
        }
        (cur, word)
    }

    /// The orbit `Wλ` by breadth-first search under simple reflections.
    pub fn orbit(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen = HashSet::from([lambda.clone()]);
        let mut out = vec![lambda.clone()];
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                let y = self.simple_reflect(&x, i);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// `ε_k` (1-based `k ∈ 1..=n+1`) for type `A_n`, i.e. `ϖ_k − ϖ_{k−1}`.
    pub fn epsilon(&self, k: usize) -> Result<Weight> {
        let n = self.rank();
        if self.cartan_type.letter != TypeLetter::A || k == 0 || k > n + 1 {
            return Err(Error::Precondition(format!(
                "ε_{k} requires type A with 1 ≤ k ≤ {}",
                n + 1
            )));
        }
        let mut c = vec![0; n];
        if k <= n {
            c[k - 1] += 1;
        }
        if k >= 2 {
            c[k - 2] -= 1;
        }
        Ok(Weight(c))
    }

    /// `ε`-exponents `(a_1, …, a_{n+1})` of a type-A weight with `a_{n+1} = 0`.
    pub fn to_epsilon(&self, x: &Weight) -> Result<Vec<i64>> {
        if self.cartan_type.letter != TypeLetter::A {
            return Err(Error::Precondition("ε-coordinates need type A".into()));
        }
        let n = self.rank();
        let mut a = vec![0; n + 1];
        for j in (0..n).rev() {
            a[j] = a[j + 1] + x[j];
        }
        Ok(a)
    }
}

/// Closes the simple (root, coroot) pairs under simple reflections and keeps
/// the positive half.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut all = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        seen.insert(unit(i));
        queue.push_back((unit(i), unit(i)));
    }
    while let Some((b, c)) = queue.pop_front() {
        all.push((b.clone(), c.clone()));
        for j in 0..n {
            // ⟨β, α_j^∨⟩ = Σ_k b_k a_jk ; ⟨α_j, β^∨⟩ = Σ_k c_k a_kj
            let p: i64 = (0..n).map(|k| b[k] * cartan[j][k]).sum();
            let q: i64 = (0..n).map(|k| c[k] * cartan[k][j]).sum();
            let mut b2 = b.clone();
            b2[j] -= p;
            let mut c2 = c.clone();
            c2[j] -= q;
            if seen.insert(b2.clone()) {
                queue.push_back((b2, c2));
            }
        }
    }
    let mut pos: Vec<Root> = all
        .into_iter()
        .filter(|(b, _)| b.iter().all(|&x| x >= 0))
        .map(|(simple, coroot)| {
            let weight = Weight(
                (0..n)
                    .map(|i| (0..n).map(|k| simple[k] * cartan[i][k]).sum())
                    .collect(),
            );
            Root {
                simple,
                weight,
                coroot,
            }
        })
        .collect();
    pos.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| b.simple.cmp(&a.simple))
    });
    pos
}
