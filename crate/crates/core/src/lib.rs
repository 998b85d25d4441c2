//! Invariants of transverse and Legendrian tori built from knot profiles.
//!
//! * [`knot`]: braid words and front diagrams with `sl`, `tb`, `rot` and stabilizations.
//! * [`homology`]: exact integer homology, generic over the [`Scalar`] type.
//! * [`torus`]: self-linking and Thurston–Bennequin classes of product tori and
//!   the divisibility test that separates stabilized families.
//! * [`catalog`]: small hand-checked complexes and knot-complement spines.
//! * [`io`]: the JSON file formats.

pub mod catalog;
pub mod error;
pub mod homology;
pub mod io;
pub mod knot;
pub mod random;
pub mod scalar;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use scalar::Scalar;

/// Arbitrary-precision matrix.
pub type IntMatrix = homology::Matrix<BigInt>;
pub type IntSmithForm = homology::SmithForm<BigInt>;
pub type IntGroup = homology::FgAbGroup<BigInt>;
pub type IntGradedGroup = homology::GradedGroup<BigInt>;
pub type IntChainComplex = homology::ChainComplex<BigInt>;

/// Machine-word variants; callers are responsible for entry growth.
pub type Matrix64 = homology::Matrix<i64>;
pub type SmithForm64 = homology::SmithForm<i64>;
pub type Group64 = homology::FgAbGroup<i64>;
pub type GradedGroup64 = homology::GradedGroup<i64>;
pub type ChainComplex64 = homology::ChainComplex<i64>;
