//! Exact-arithmetic toolkit for homogeneous polynomial systems: encoders
//! from combinatorial problems (Partition, boolean constraint systems,
//! 3-CNF), constructions that square a system while preserving
//! satisfiability, and independent oracles (projective enumeration, a
//! structured sign oracle, Sylvester and Macaulay resultant tests) that
//! certify the transformations at desk scale.

pub mod field;
pub mod nt;
pub mod poly;
pub mod reductions;
pub mod system;
pub mod unipoly;

pub use field::{field_arith, FieldCtx, FieldElem, FieldError, FieldOp};
pub use poly::{Monomial, Poly, PolyError};
pub use system::{Metadata, PolySystem, SystemError};
pub use unipoly::{find_irreducible, rabin_irreducible, ModPoly, UniPolyError};
