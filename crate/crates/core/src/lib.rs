//! Simplicial complexes, the five adjoint functors induced by a set map, and
//! the Stanley-Reisner dictionary between them.

mod bits;

pub mod adjoints;
pub mod categories;
pub mod complex;
pub mod error;
pub mod ideals;
pub mod oracle;
pub mod products;
pub mod setmap;

pub use adjoints::{apply, FiberInterval, FunctorKind};
pub use categories::{Category, MorphismWitness, RingHomDescriptor};
pub use complex::{Dimension, SimplicialComplex, Subset, VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use ideals::{complex_of_ideal, sr_ideal, SqfIdeal, SqfMonomial};
pub use products::ProductKind;
pub use setmap::SetMap;
