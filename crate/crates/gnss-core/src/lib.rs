//! Generalized neutrosophic soft sets with exact fixed-point arithmetic.
//!
//! A [`GnSoftSet`] files one membership table per parameter over a shared
//! universe of objects; every cell is a truth / indeterminacy / falsity
//! [`Triple`] whose components are exact multiples of 1/10000, so results are
//! bit-reproducible. The crate provides the set algebra (union, intersection,
//! complement, the two pairwise products, containment), a comparison-matrix
//! ranking procedure, and two interchangeable table formats with canonical,
//! byte-stable serialization.
//!
//! ```
//! use gnss_core::{decision, tabio, ConstraintMode};
//!
//! let text = "U,cheap,bright\n\
//!             b1,\"(0.6, 0.3, 0.4)\",\"(0.6, 0.3, 0.2)\"\n\
//!             b2,\"(0.7, 0.2, 0.3)\",\"(0.8, 0.1, 0.2)\"\n";
//! let set = tabio::csv::parse(text, ConstraintMode::GnsMin)?;
//! let decision = decision::decide(&set, set.params())?;
//! assert_eq!(decision.ranking.choice().unwrap(), "b2");
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! With the default `parallel` feature, the product operations and the
//! comparison matrix fan out over a rayon pool; the `*_seq` twins always run
//! sequentially and produce identical results.

mod algebra;
mod degree;
mod error;
mod param;
mod soft_set;
mod triple;
mod universe;

pub mod decision;
pub mod tabio;

pub use algebra::negate_params;
pub use degree::{Degree, DegreeParseError, SCALE};
pub use error::{GnssError, ParseError};
pub use param::ParamKey;
pub use soft_set::{GnSet, GnSoftSet};
pub use triple::{ConstraintMode, ConstraintViolation, Triple};
pub use universe::{ObjectId, Universe};
