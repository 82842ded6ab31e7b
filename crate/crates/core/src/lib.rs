//! Exact structure-constant toolkit for A3-associative algebras.
//!
//! An algebra is stored by its structure constants over exact rationals, and
//! every identity is checked on basis tuples with zero tolerance. Checks
//! return a [`CheckReport`] that lists every nonzero residual.
//!
//! ```
//! use a3kit::algebra::{check_law, LawKind};
//! use a3kit::examples::admissible_plane;
//!
//! let a = admissible_plane();
//! assert!(check_law(&a, LawKind::A3).passed());
//! assert!(!check_law(&a, LawKind::Associative).passed());
//! ```

pub mod algebra;
pub mod bialgebra;
pub mod double;
pub mod error;
pub mod examples;
pub mod par;
pub mod report;
pub mod representation;
pub mod search;
pub mod tensor;
pub mod yangbaxter;

pub use algebra::{check_law, Algebra, LawKind};
pub use error::{Error, Result};
pub use report::{CheckReport, Failure};
pub use tensor::{Matrix, Scalar, Tensor2, Tensor3, Vector};
