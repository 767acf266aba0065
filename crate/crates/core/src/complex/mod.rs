//! Chains, the tensor square and its diagonal, cochains with values in a
//! ring, the coboundary and the cup product.

mod chain;
mod cochain;
mod ring;

use thiserror::Error;

use crate::cubical::{CubeId, CubicalError};

pub use chain::{boundary, diagonal, tensor_boundary, Chain, TensorChain};
pub use cochain::{coboundary, cup, unit_cochain, Cochain};
pub use ring::{CoefficientRing, Coeff};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("boundary of a 0-dimensional chain is undefined")]
    BoundaryOfDimensionZero,
    #[error("cochains take values in different rings")]
    RingMismatch,
    #[error("cochains of dimensions {left} and {right} cannot be combined")]
    DimensionMismatch { left: usize, right: usize },
    #[error("cochain of dimension {dim} has {found} values but there are {expected} cubes")]
    CochainShape { dim: usize, expected: usize, found: usize },
    #[error("no cube {0}")]
    NoSuchCube(CubeId),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("bad coefficient ring '{0}': expected Z or Z/m")]
    BadCoefficientSpec(String),
    #[error(transparent)]
    Cubical(#[from] CubicalError),
}
