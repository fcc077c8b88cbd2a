//! The twist and partial-dual operations, the six-element ribbon group they
//! generate edgewise, the action of group assignments on graphs, and orbit
//! enumeration under arbitrary generator subsets.

mod group;
mod ops;
mod orbit;

pub use group::{normal_form, parse_word, GammaAssignment, GroupElement, Letter, Word};
pub use ops::{apply, contract, geometric_dual, partial_dual, partial_dual_set, twist, twist_set};
pub use orbit::{orbit, OrbitMove, Subgroup};

