//! Discriminants, discriminant-heights and unit-group indices of algebraic
//! tori embedded in `GL(n, ℚ)`, computed with exact arithmetic.

pub mod adelic;
pub mod atlas;
pub mod equiv;
pub mod error;
pub mod numfield;
pub mod ratlin;
pub mod torus;

pub use error::{Error, Result};
pub use adelic::{disc_k, CountMethod, DiscReport, OrderPair, DEFAULT_BUDGET};
pub use atlas::{Perm, PermGroup, SubtorusClass};
pub use equiv::{DominationWitness, EquivReport, SampledFunction};
pub use numfield::{EtaleAlgebra, NumberField};
pub use ratlin::{IntMatrix, IntPolynomial, IntegerLattice, RatMatrix};
pub use torus::{CanonicalTensor, EmbeddedTorus, RegularBasis};
