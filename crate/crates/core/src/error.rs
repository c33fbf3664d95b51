use thiserror::Error;

use crate::cartan::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type `{0}`")]
    InvalidType(String),
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("Weyl group of {0} is too large to materialize")]
    GroupTooLarge(String),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {weight} is not in the orbit of {shape}")]
    NotInOrbit { weight: Weight, shape: Weight },
    #[error("path of shape {got} where shape {expected} was required")]
    ShapeMismatch { expected: Weight, got: Weight },
    #[error("time {0} outside [0, 1]")]
    TimeOutOfRange(String),
    #[error("invalid LS path: {0}")]
    InvalidPath(String),
    #[error("no unique Bruhat maximum in a set of {0} elements")]
    NonUniqueMaximum(usize),
    #[error("crystal has {0} highest weight elements, expected exactly one")]
    MultipleHighestWeights(usize),
    #[error("string parametrization failed to reconstruct the element")]
    ReconstructionFailure,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("component with top weight {0} matches no Demazure crystal")]
    NoDemazureMatch(Weight),
    #[error("Magyar element {magyar:?} disagrees with isomorphism search {oracle:?}")]
    OracleMismatch { magyar: Vec<usize>, oracle: Vec<usize> },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("character is not in the span of the candidate key polynomials")]
    NotInSpan,
    #[error("non-integral key coefficient {0}")]
    NonIntegralCoefficient(String),
}
