//! Exact weight multiplicities, tensor product decompositions and saturated
//! tensor cones for the rank-2 affine Kac–Moody algebras A₁⁽¹⁾ and A₂⁽²⁾.
//!
//! Weights and Weyl group computations are exact on half-integer lattices.
//! Multiplicities and branching coefficients are generic over a
//! [`Coefficient`] type; the aliases below fix the common choices.

pub mod algebra;
pub mod cone;
pub mod delta_max;
pub mod error;
pub mod multiplicity;
pub mod schubert;
pub mod selftest;
pub mod tensor;
pub mod weight;
pub mod weyl;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use multiplicity::{Coefficient, DeltaString, Oracle, Region, TruncatedCharacter};
pub use weight::{CartanElement, Weight};
pub use weyl::WeylElement;

/// Multiplicity engine over machine integers.
pub type Oracle64 = Oracle<i64>;
/// Multiplicity engine over arbitrary-precision integers.
pub type OracleBig = Oracle<num_bigint::BigInt>;
