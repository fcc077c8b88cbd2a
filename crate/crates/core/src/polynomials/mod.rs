//! Exact sparse Laurent polynomials and the transition, Penrose,
//! topochromatic, Bollobás–Riordan, Las Vergnas, signed topochromatic and
//! chromatic polynomials of embedded graphs.

mod chromatic;
mod laurent;
mod penrose;
mod spanning;
mod transition;
mod weights;

pub use chromatic::{chromatic, proper_edge_colourings};
pub use laurent::{k, parse_rational, v, LaurentPoly, Monomial, Var};
pub use penrose::{penrose, penrose_by_chromatic_sum, penrose_by_subsets, penrose_by_weights};
pub use spanning::{
    bollobas_riordan, las_vergnas, signed_topochromatic, topochromatic, Sign, SignedRibbonGraph,
};
pub use transition::{transition_recursive, transition_statesum};
pub use weights::{
    parse_weights, penrose_weights, permute_weights, symbolic_weights, topochromatic_weights,
    uniform_weights, WeightSystem, WeightTriple,
};

