//! Finite precubical sets: cube inventories, face maps, the cubical
//! identities, and the iterated faces obtained by fixing a set of coordinates.

pub mod builders;
mod set;
mod subset;

use thiserror::Error;

pub use set::{CubeId, PrecubicalBuilder, PrecubicalSet, Side, ValidationReport, Violation};
pub use subset::{all_subsets_with_sign, subsets_with_sign, SubsetWithSign};

/// Largest supported cube dimension.
pub const MAX_DIM: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubicalError {
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionCap { dim: usize, max: usize },
    #[error("{subset:?} is not a strictly increasing subset of 1..={n}")]
    InvalidSubset { n: usize, subset: Vec<usize> },
    #[error("cannot choose {p} elements out of {n}")]
    SubsetTooLarge { n: usize, p: usize },
    #[error("subset lives in 1..={found} but the cube has dimension {expected}")]
    SubsetAmbient { expected: usize, found: usize },
    #[error("no cube {0}")]
    NoSuchCube(CubeId),
    #[error("direction {direction} is out of range for a {dim}-cube")]
    DirectionOutOfRange { dim: usize, direction: usize },
    #[error("face d_{direction}^{side} of {cube} is missing")]
    MissingFace { cube: CubeId, direction: usize, side: Side },
}
