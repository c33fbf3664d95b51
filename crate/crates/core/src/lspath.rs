//! Piecewise-linear paths and Lakshmibai–Seshadri paths.
//!
//! A [`Path`] is a list of integral directions with rational breakpoints
//! `0 = a_0 < … < a_r = 1`; `π(t)` moves with velocity `ν_k` on
//! `[a_{k-1}, a_k]`. Concatenations live here too. An [`LsPath`] adds its
//! dominant shape and the chain conditions.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{Rat, RationalPoint, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::weyl::OrbitPoset;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathJson", into = "PathJson")]
pub struct Path {
    directions: Vec<Weight>,
    breaks: Vec<Rat>,
}

/// Wire format: directions as coordinate arrays, breakpoints as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    pub directions: Vec<Vec<i64>>,
    pub breaks: Vec<String>,
}

impl From<Path> for PathJson {
    fn from(p: Path) -> Self {
        PathJson {
            directions: p.directions.into_iter().map(|d| d.0).collect(),
            breaks: p.breaks.iter().map(|a| a.to_string()).collect(),
        }
    }
}

impl TryFrom<PathJson> for Path {
    type Error = Error;

    fn try_from(j: PathJson) -> Result<Self> {
        let breaks = j
            .breaks
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<Rat>()
                    .map_err(|_| Error::InvalidPath(format!("bad breakpoint {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Path::new(j.directions.into_iter().map(Weight).collect(), breaks)
    }
}

impl Path {
    /// Builds a path and brings it to normal form.
    pub fn new(directions: Vec<Weight>, breaks: Vec<Rat>) -> Result<Self> {
        if directions.is_empty() {
            return Err(Error::InvalidPath("no segments".into()));
        }
        if breaks.len() != directions.len() + 1 {
            return Err(Error::InvalidPath(format!(
                "{} directions need {} breakpoints, got {}",
                directions.len(),
                directions.len() + 1,
                breaks.len()
            )));
        }
        if !breaks[0].is_zero() || !breaks[breaks.len() - 1].is_one() {
            return Err(Error::InvalidPath("breakpoints must run from 0 to 1".into()));
        }
        if breaks.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPath("breakpoints must be increasing".into()));
        }
        let rank = directions[0].rank();
        if let Some(d) = directions.iter().find(|d| d.rank() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                got: d.rank(),
            });
        }
        let mut p = Path { directions, breaks };
        p.normalize();
        Ok(p)
    }

    /// The straight line `t ↦ t·x`.
    pub fn straight(x: &Weight) -> Self {
        Path {
            directions: vec![x.clone()],
            breaks: vec![Rat::zero(), Rat::one()],
        }
    }

    /// Merges equal neighbours and drops zero-length segments.
    fn normalize(&mut self) {
        let mut dirs: Vec<Weight> = Vec::with_capacity(self.directions.len());
        let mut breaks = vec![self.breaks[0]];
        for (k, d) in self.directions.iter().enumerate() {
            let end = self.breaks[k + 1];
            if end == *breaks.last().unwrap() {
                continue;
            }
            if dirs.last() == Some(d) {
                *breaks.last_mut().unwrap() = end;
            } else {
                dirs.push(d.clone());
                breaks.push(end);
            }
        }
        if dirs.is_empty() {
            // all segments had zero length; impossible once breaks run 0..1
            dirs.push(self.directions[0].clone());
            breaks.push(Rat::one());
        }
        self.directions = dirs;
        self.breaks = breaks;
    }

    pub fn rank(&self) -> usize {
        self.directions[0].rank()
    }

    pub fn directions(&self) -> &[Weight] {
        &self.directions
    }

    pub fn breaks(&self) -> &[Rat] {
        &self.breaks
    }

    pub fn segment_count(&self) -> usize {
        self.directions.len()
    }

    /// `π(a_k)` for every breakpoint.
    pub fn vertices(&self) -> Vec<RationalPoint> {
        let mut out = Vec::with_capacity(self.breaks.len());
        let mut x = RationalPoint::zero(self.rank());
        out.push(x.clone());
        for (k, d) in self.directions.iter().enumerate() {
            x = x.add_scaled(self.breaks[k + 1] - self.breaks[k], d);
            out.push(x.clone());
        }
        out
    }

    pub fn value_at(&self, t: Rat) -> Result<RationalPoint> {
        if t < Rat::zero() || t > Rat::one() {
            return Err(Error::TimeOutOfRange(t.to_string()));
        }
        let mut x = RationalPoint::zero(self.rank());
        for (k, d) in self.directions.iter().enumerate() {
            let (a, b) = (self.breaks[k], self.breaks[k + 1]);
            if t <= b {
                return Ok(x.add_scaled(t - a, d));
            }
            x = x.add_scaled(b - a, d);
        }
        Ok(x)
    }

    /// `π(1)` as a rational point.
    pub fn endpoint(&self) -> RationalPoint {
        self.vertices().pop().expect("at least two breakpoints")
    }

    /// `wt(π) = π(1)`; `None` when it is not integral.
    pub fn weight(&self) -> Option<Weight> {
        self.endpoint().to_weight()
    }

    pub fn height(&self, i: usize, t: Rat) -> Result<Rat> {
        let x = self.value_at(t)?;
        x.0.get(i).copied().ok_or(Error::IndexOutOfRange {
            index: i,
            rank: self.rank(),
        })
    }

    /// `h_i(a_k)` at every breakpoint.
    pub fn heights(&self, i: usize) -> Vec<Rat> {
        let mut h = Rat::zero();
        let mut out = vec![h];
        for (k, d) in self.directions.iter().enumerate() {
            h += (self.breaks[k + 1] - self.breaks[k]) * Rat::from_integer(d[i]);
            out.push(h);
        }
        out
    }

    /// `m_i = min_t h_i(t)`, attained at a breakpoint.
    pub fn min_height(&self, i: usize) -> Rat {
        self.heights(i).into_iter().min().expect("nonempty")
    }

    /// Whether every local minimum of `h_i` is an integer, for all `i`.
    pub fn local_minima_integral(&self) -> bool {
        (0..self.rank()).all(|i| {
            let h = self.heights(i);
            let last = h.len() - 1;
            (0..=last).all(|k| {
                let left_ok = k == 0 || h[k - 1] >= h[k];
                let right_ok = k == last || h[k + 1] >= h[k];
                !(left_ok && right_ok) || h[k].is_integer()
            })
        })
    }

    /// `⟨λ + π(t), α_i^∨⟩ ≥ 0` for all `i` and `t`.
    pub fn is_dominant_for(&self, lambda: &Weight) -> bool {
        self.vertices()
            .iter()
            .all(|x| x.add_weight(lambda).is_dominant())
    }

    /// `π ∗ π′`: runs `π` on `[0, 1/2]` and then `π(1) + π′` on `[1/2, 1]`.
    pub fn concatenate(&self, other: &Path) -> Result<Path> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        let half = Rat::new(1, 2);
        let directions = self
            .directions
            .iter()
            .chain(&other.directions)
            .map(|d| d.scale(2))
            .collect();
        let breaks = self
            .breaks
            .iter()
            .map(|a| a * half)
            .chain(other.breaks[1..].iter().map(|a| half + a * half))
            .collect();
        let mut p = Path { directions, breaks };
        p.normalize();
        Ok(p)
    }

    /// Inserts `t` as a breakpoint; returns its index.
    fn split_at(&mut self, t: Rat) -> usize {
        match self.breaks.binary_search(&t) {
            Ok(k) => k,
            Err(k) => {
                self.breaks.insert(k, t);
                let d = self.directions[k - 1].clone();
                self.directions.insert(k - 1, d);
                k
            }
        }
    }

    fn reflect_between(&self, rs: &RootSystem, i: usize, t0: Rat, t1: Rat) -> Path {
        let mut p = self.clone();
        let k0 = p.split_at(t0);
        let k1 = p.split_at(t1);
        for d in &mut p.directions[k0..k1] {
            *d = rs.simple_reflect(d, i);
        }
        p.normalize();
        p
    }

    /// The lowering operator `f̃_i`.
    pub fn f(&self, rs: &RootSystem, i: usize) -> Option<Path> {
        let h = self.heights(i);
        let m = *h.iter().min()?;
        let end = *h.last()?;
        if m == end {
            return None;
        }
        debug_assert!(m.is_integer() && end.is_integer(), "non-integral heights on {self}");
        let target = m + Rat::one();
        let k0 = h.iter().rposition(|&x| x == m)?;
        let t0 = self.breaks[k0];
        let t1 = (k0 + 1..h.len()).find_map(|k| {
            (h[k] >= target).then(|| {
                let slope = Rat::from_integer(self.directions[k - 1][i]);
                self.breaks[k - 1] + (target - h[k - 1]) / slope
            })
        })?;
        Some(self.reflect_between(rs, i, t0, t1))
    }

    /// The raising operator `ẽ_i`.
    pub fn e(&self, rs: &RootSystem, i: usize) -> Option<Path> {
        let h = self.heights(i);
        let m = *h.iter().min()?;
        if m.is_zero() {
            return None;
        }
        debug_assert!(m.is_integer(), "non-integral minimum on {self}");
        let target = m + Rat::one();
        let k1 = h.iter().position(|&x| x == m)?;
        let t1 = self.breaks[k1];
        let t0 = (1..=k1).rev().find_map(|k| {
            (h[k - 1] >= target).then(|| {
                let slope = Rat::from_integer(self.directions[k - 1][i]);
                self.breaks[k - 1] + (target - h[k - 1]) / slope
            })
        })?;
        Some(self.reflect_between(rs, i, t0, t1))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.directions.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ";")?;
        for a in &self.breaks {
            write!(f, " {a}")?;
        }
        write!(f, ")")
    }
}

/// The first failed condition of an LS path.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("shape {0} is not dominant")]
    ShapeNotDominant(Weight),
    #[error("direction {index} = {direction} is not in the orbit of the shape")]
    NotInOrbit { index: usize, direction: Weight },
    #[error("breakpoints are not strictly increasing at position {0}")]
    BreaksNotIncreasing(usize),
    #[error("directions {index} and {next} are not strictly decreasing", next = index + 1)]
    NotDecreasing { index: usize },
    #[error("no {sigma}-chain between directions {index} and {next}", next = index + 1)]
    NoChain { index: usize, sigma: Rat },
    #[error("endpoint {0} is not an integral weight")]
    NonIntegralWeight(RationalPoint),
}

/// A Lakshmibai–Seshadri path of a fixed dominant shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LsPath {
    shape: Weight,
    path: Path,
}

impl LsPath {
    /// Builds and validates an LS path; the shape is the dominant
    /// representative of the first direction.
    pub fn new(rs: &RootSystem, directions: Vec<Weight>, breaks: Vec<Rat>) -> Result<Self> {
        let path = Path::new(directions, breaks)?;
        Self::from_path(rs, path)
    }

    pub fn from_path(rs: &RootSystem, path: Path) -> Result<Self> {
        rs.check_weight(&path.directions[0])?;
        let (shape, _) = rs.dominant_representative(&path.directions[0]);
        let p = LsPath { shape, path };
        let poset = OrbitPoset::new(rs, &p.shape)?;
        p.validate(&poset)
            .map_err(|v| Error::InvalidPath(v.to_string()))?;
        Ok(p)
    }

    pub fn from_json(rs: &RootSystem, json: PathJson) -> Result<Self> {
        Self::from_path(rs, Path::try_from(json)?)
    }

    pub fn to_json(&self) -> PathJson {
        self.path.clone().into()
    }

    /// `π^x : t ↦ t·x` for `x` in the orbit of `shape`.
    pub fn straight(rs: &RootSystem, shape: &Weight, x: &Weight) -> Result<Self> {
        rs.check_weight(x)?;
        let (dom, _) = rs.dominant_representative(x);
        if &dom != shape {
            return Err(Error::NotInOrbit {
                weight: x.clone(),
                shape: shape.clone(),
            });
        }
        Ok(LsPath {
            shape: dom,
            path: Path::straight(x),
        })
    }

    /// `π^λ`, the highest weight element of `𝓑(λ)`.
    pub fn highest(lambda: &Weight) -> Self {
        LsPath {
            shape: lambda.clone(),
            path: Path::straight(lambda),
        }
    }

    pub fn shape(&self) -> &Weight {
        &self.shape
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn directions(&self) -> &[Weight] {
        self.path.directions()
    }

    pub fn breaks(&self) -> &[Rat] {
        self.path.breaks()
    }

    /// `ι(π) = ν_1`.
    pub fn initial_direction(&self) -> &Weight {
        &self.path.directions[0]
    }

    /// `ν_r`, the last direction.
    pub fn final_direction(&self) -> &Weight {
        self.path.directions.last().expect("nonempty")
    }

    pub fn weight(&self) -> Weight {
        self.path
            .weight()
            .expect("LS paths end at integral weights")
    }

    pub fn value_at(&self, t: Rat) -> Result<RationalPoint> {
        self.path.value_at(t)
    }

    pub fn height(&self, i: usize, t: Rat) -> Result<Rat> {
        self.path.height(i, t)
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        self.path.is_dominant_for(lambda)
    }

    pub fn concatenate(&self, other: &LsPath) -> Result<Path> {
        self.path.concatenate(&other.path)
    }

    pub fn f(&self, rs: &RootSystem, i: usize) -> Option<LsPath> {
        self.path.f(rs, i).map(|path| LsPath {
            shape: self.shape.clone(),
            path,
        })
    }

    pub fn e(&self, rs: &RootSystem, i: usize) -> Option<LsPath> {
        self.path.e(rs, i).map(|path| LsPath {
            shape: self.shape.clone(),
            path,
        })
    }

    /// Checks the LS conditions against the orbit poset of the shape.
    pub fn validate(&self, poset: &OrbitPoset) -> std::result::Result<(), Violation> {
        if !self.shape.is_dominant() || poset.base() != &self.shape {
            return Err(Violation::ShapeNotDominant(self.shape.clone()));
        }
        let dirs = self.path.directions();
        let breaks = self.path.breaks();
        for (k, d) in dirs.iter().enumerate() {
            if !poset.contains(d) {
                return Err(Violation::NotInOrbit {
                    index: k + 1,
                    direction: d.clone(),
                });
            }
        }
        if let Some(k) = breaks.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Violation::BreaksNotIncreasing(k + 1));
        }
        for k in 0..dirs.len() - 1 {
            let (a, b) = (&dirs[k], &dirs[k + 1]);
            if !poset.gt(a, b).expect("both in orbit") {
                return Err(Violation::NotDecreasing { index: k + 1 });
            }
            let sigma = breaks[k + 1];
            if !poset.sigma_chain_exists(a, b, sigma).expect("both in orbit") {
                return Err(Violation::NoChain {
                    index: k + 1,
                    sigma,
                });
            }
        }
        let end = self.path.endpoint();
        if end.to_weight().is_none() {
            return Err(Violation::NonIntegralWeight(end));
        }
        Ok(())
    }
}

impl Serialize for LsPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.path.serialize(s)
    }
}

impl fmt::Display for LsPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.path.fmt(f)
    }
}

/// Parses `"a/b"` or `"a"`.
pub fn parse_rational(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| Error::InvalidPath(format!("bad rational {s:?}")))
}
