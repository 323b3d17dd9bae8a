//! Two independent engines for finite group computation and the polytope
//! layer built on top of them:
//!
//! * [`perm`] — permutation arithmetic and stabilizer-chain machinery,
//! * [`fp`] — finitely presented groups with involution generators and
//!   Todd-Coxeter coset enumeration,
//! * [`sggi`] — string groups generated by involutions: Schläfli types,
//!   minimal-generation rank and the rank-3 intersection property,
//! * [`families`] — exact presentation constructors for each group family,
//! * [`cpr`] — explicit permutation triples, their labeled representation
//!   graphs and certification records.
//!
//! The two engines deliberately overlap: any group in scope can be built
//! both by enumerating its presentation and by measuring a concrete
//! permutation realization, and the test suites hold the two routes to
//! exact agreement.

pub mod cpr;
pub mod families;
pub mod fp;
pub mod perm;
pub mod sggi;

pub use cpr::{CprFamily, CprGraph, CprTriple};
pub use families::{FamilyId, Sporadic};
pub use fp::{CosetTable, FpError, Presentation, Word};
pub use perm::{subgroup_elements, PermError, PermGroup, Permutation};
pub use sggi::{make_sggi, SchlafliType, SggiError, SggiTriple};
