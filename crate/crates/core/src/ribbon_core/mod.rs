//! Data model for embedded graphs: arrow presentations, boundary tracing,
//! invariants, canonical forms at three equivalence levels, and exhaustive
//! enumeration of small instances.

mod bounds;
pub(crate) mod canonical;
mod enumerate;
mod invariants;
mod presentation;
mod structure;
pub(crate) mod surface;

pub use bounds::{limit, Bound};
pub(crate) use bounds::check;
pub use canonical::{
    canonical_code, canonical_embedded, canonical_labelled, canonical_with_mapping, equivalent,
    equivalent_labelled,
    CanonicalForm, Level, MapMode,
};
pub use enumerate::enumerate;
pub use invariants::{boundary_components, invariants, BoundaryWalk, Corner, InvariantRecord};
pub use presentation::{delete_and_twist, Arrow, ArrowPresentation, Direction, EdgeLabel};
pub use structure::{
    from_rotation, is_isomorphic, to_rotation, underlying_abstract, underlying_map, AbstractGraph,
    CombinatorialMap, HalfEdge, RotationEdge, RotationSystem,
};
