//! Ribbon graphs (cellularly embedded graphs) presented by arrow presentations,
//! the twisted duality action of the ribbon group, medial graphs with their
//! vertex states, and the transition, Penrose, topochromatic, Bollobás–Riordan,
//! Las Vergnas and chromatic polynomials.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so all types may be shared freely across threads.

pub mod error;
pub mod medial;
pub mod polynomials;
pub mod ribbon_core;
pub mod twisted_duality;
pub mod verify;

pub use error::{Error, Result};
pub use ribbon_core::{ArrowPresentation, Direction, EdgeLabel};
