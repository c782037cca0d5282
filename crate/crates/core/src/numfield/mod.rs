//! Number fields, étale algebras, maximal orders and discriminant bounds.

pub mod bounds;
pub mod etale;
pub mod field;
pub mod galois;
pub mod table;

pub use bounds::{c_bound, splitting_disc_bounds, SplittingBounds};
pub use etale::{etale_discriminant, etale_from_factors, BasisLabel, EtaleAlgebra};
pub use field::NumberField;
pub use galois::{exact_splitting_disc, small_galois_group, SmallGaloisGroup};
pub use table::{ModTable, MultTable};
