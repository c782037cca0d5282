//! Subtori of the diagonal torus of `GL(N)` through sublattices of `ℤ^N`
//! fixed or stabilized by permutation groups, and Galois permutation data.

pub mod galois;
pub mod lattices;
pub mod perm;
pub mod subgroups;

pub use galois::{frobenius_cycle_types, galois_perm_action, GaloisAction, GaloisMode};
pub use lattices::{
    enumerate_fixed_lattice_classes, fixed_lattice, is_stable, permute_lattice,
    stable_subspace_enumeration, weyl_conjugate_test, IsotypicReport, StableSublattices,
    SubtorusClass,
};
pub use perm::{Perm, PermGroup};
pub use subgroups::{subgroup_conjugacy_classes, SubgroupClass};
