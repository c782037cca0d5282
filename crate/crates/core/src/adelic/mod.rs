//! Local and global unit-group indices of orders and the discriminant `disc_K`.

pub mod disc;
pub mod order;
pub mod units;

pub use disc::{disc_k, eyext_scan, DiscReport, EyextReport, EyextRow, SplittingDisc, SplittingMode};
pub use order::OrderPair;
pub use units::{
    global_index, local_unit_index, local_unit_index_at, power_index, residue_degrees,
    CountMethod, FiniteRing, LocalIndexReport, DEFAULT_BUDGET,
};
