//! Exact symbolic algebra for exterior algebras, tensor powers with
//! geometric products, Grassmann-Cayley algebras, skew-symmetric
//! letterplace algebras and Whitney algebras of matroids.

pub mod cg_algebra;
pub mod cli;
pub mod error;
pub mod exterior;
pub mod identity_suite;
pub mod letterplace;
pub mod linalg;
pub mod ring;
pub mod span_invariants;
pub mod tensor_power;
pub mod whitney;

pub use error::{Error, Result};
pub use exterior::{make_extensor, ExtMonomial, Exterior, ExteriorElement, Vector};
pub use ring::{Ring, Q};
pub use tensor_power::{TensorMonomial, TensorPower, TensorPowerElement};
