//! Exact combinatorics of isocrystals with additional structure: Kottwitz
//! sets of sigma-conjugacy classes, Hodge-Newton decomposability, slope
//! vector bundles and Newton strata of flag varieties.
//!
//! All arithmetic is exact (`BigRational`); every enumeration is
//! deterministic.

pub mod error;
pub mod ff_bundles;
pub mod hodge_newton;
pub mod kottwitz;
pub mod linalg;
pub mod rootdata;
pub mod strata;

pub use error::{KottwitzError, Result};
