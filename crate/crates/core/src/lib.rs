//! Exact cohomology rings of finite precubical sets.
//!
//! A [`cubical::PrecubicalSet`] is built from the [`cubical::builders`] or parsed
//! with [`document::parse`]. [`cohomology::cohomology_groups`] computes
//! `H^n(X; R)` for `R = Z` or `Z/p` with explicit cocycle generators, and
//! [`cohomology::ring_table`] tabulates cup products of generators.
//!
//! ```
//! use precubical::cohomology::cohomology_groups;
//! use precubical::complex::Coeff;
//! use precubical::cubical::builders;
//!
//! let groups = cohomology_groups(&builders::torus(), &Coeff::Integers).unwrap();
//! let ranks: Vec<usize> = groups.iter().map(|g| g.free_rank()).collect();
//! assert_eq!(ranks, [1, 2, 1]);
//! ```

pub mod cubical;
pub mod complex;
pub mod linalg;
pub mod cohomology;
pub mod document;
pub mod propcheck;
pub mod cli;
