//! Exact arithmetic for rank-21 cubic fourfolds with complex multiplication.
//!
//! The crate covers the computable side of the theory:
//!
//! * [`lattices`]: the middle cohomology lattice `L0`, the primitive lattice
//!   `L`, invariants and orthogonal complements;
//! * [`embeddings`]: explicit primitive embeddings of even binary lattices
//!   into `U + U` inside `L`;
//! * [`binforms`]: reduction and class enumeration of positive-definite even
//!   binary lattices, their CM fields, isometries and period points;
//! * [`quadfield`]: imaginary quadratic fields, ideals and generators;
//! * [`hecke`]: the weight-3 CM newform of a class-number-one field;
//! * [`frobenius`]: Frobenius traces, determinants and Euler factors;
//! * [`levelgroups`]: orders of finite orthogonal groups;
//! * [`fixtures`]: worked examples tied to the above.
//!
//! All arithmetic is exact; nothing is computed in floating point.

// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod binforms;
pub mod embeddings;
pub mod error;
pub mod fixtures;
pub mod frobenius;
pub mod hecke;
pub mod lattices;
pub mod levelgroups;
pub mod linalg;
pub mod quadfield;

pub use binforms::{BinaryEvenForm, PeriodPoint};
pub use embeddings::EmbeddingWitness;
pub use error::{Error, Result};
pub use frobenius::FrobeniusRow;
pub use hecke::{HeckeCharSpec, QExpansion};
pub use lattices::{GramMatrix, LatticeInvariants};
pub use levelgroups::FiniteOrthData;
pub use quadfield::{FieldElement, IdealRep, QuadField, SplittingType};
