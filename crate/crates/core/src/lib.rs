//! Exceptional sequences over simply-laced Dynkin quivers.
//!
//! The crate builds every indecomposable module of a Dynkin quiver explicitly,
//! enumerates complete exceptional sequences, classifies their terms as
//! relatively projective and/or relatively injective, implements braid and
//! Garside mutations, and realizes the bijection between (m-)exceptional
//! sequences and ordered (m-)clusters.

pub mod catalog;
pub mod census;
pub mod cluster;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod linalg;
pub mod mutation;
pub mod quiver;
pub mod rep;
pub mod sequence;

pub use catalog::{Catalog, ModuleId};
pub use cluster::{CompatibleTuple, Leveled, MExcSequence};
pub use error::{Error, Result};
pub use mutation::BraidDirection;
pub use quiver::{DimVector, Direction, DynkinType, Quiver};
pub use sequence::{ExceptionalSequence, RelClass, WideSubcat};
