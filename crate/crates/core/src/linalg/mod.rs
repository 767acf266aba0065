//! Exact integer linear algebra: Smith normal form with unimodular
//! transforms, integer kernels, lattice membership, and elimination over
//! prime fields.

mod field;
mod matrix;
mod smith;

use thiserror::Error;

pub use field::{field_rank_and_kernel, is_prime, FieldReduction};
pub use matrix::IntMatrix;
pub(crate) use smith::{smith_over, Scalars};
pub use smith::{determinant, express_in_lattice, kernel_basis, smith_normal_form, smith_normal_form_mod, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("vector has length {found}, expected {expected}")]
    Shape { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}
