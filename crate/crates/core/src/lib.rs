//! Exact computations for Iwahori–Hecke algebras of type A and q-Schur
//! algebras: Alvis–Curtis type complexes over the composition poset,
//! decomposition matrices and the duality matrices they determine.

pub mod combinat;
pub mod complexes;
pub mod decomp;
pub mod duality;
pub mod error;
pub mod field;
pub mod hecke;
pub mod linalg;
pub mod llt;
pub mod meataxe;
pub mod par;
pub mod perm;
pub mod polyfp;
pub mod schur;

pub use combinat::{Composition, Partition};
pub use error::{Error, Result};
pub use field::{AnyField, FieldSpec, GroundField, PrimeField, Rationals};
pub use par::Exec;
