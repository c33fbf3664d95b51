//! Lakshmibai–Seshadri path crystals, Demazure crystals and the
//! decomposition of tensor products of Demazure crystals, in exact
//! arithmetic.
//!
//! Weights are integer vectors in fundamental-weight coordinates and simple
//! indices are 0-based in the API; JSON and the CLI use 1-based words.

pub mod cartan;
pub mod crystal;
pub mod decomp;
pub mod demazure;
pub mod error;
pub mod keypoly;
pub mod lspath;
pub mod verify;
pub mod weyl;

pub use cartan::{CartanType, Rat, RationalPoint, RootSystem, Weight};
pub use crystal::{CharPoly, CrystalElement, CrystalGraph, Tensor, TensorPair};
pub use decomp::{decompose, DecomposeOptions, DecompositionEntry, DecompositionReport};
pub use demazure::{DemazureCrystal, Session};
pub use error::{Error, Result};
pub use keypoly::{expand_in_keys, key_polynomial, product_report, KeyExpansion, KeyIndex};
pub use lspath::{LsPath, Path, PathJson};
pub use weyl::{OrbitPoset, WeylElement, WeylGroup};
