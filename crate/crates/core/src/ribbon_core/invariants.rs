//! Boundary components and the numerical invariants of an embedded graph.

use std::fmt;

use serde::Serialize;

use super::surface::{components, is_orientable, Endpoints, Indexed};
use crate::medial::VertexState;
use crate::ribbon_core::ArrowPresentation;

pub use super::surface::Corner;

/// One boundary component, listed as the corners it runs through.
pub type BoundaryWalk = Vec<Corner>;

/// Vertices, edges, faces, components, rank, nullity, Euler genus and orientability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantRecord {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub k: usize,
    pub r: usize,
    pub n: usize,
    pub euler_genus: usize,
    pub orientable: bool,
}

impl InvariantRecord {
    /// Genus in the usual sense: half the Euler genus when orientable, the
    /// Euler genus (crosscap number) otherwise.
    pub fn genus(&self) -> usize {
        if self.orientable {
            self.euler_genus / 2
        } else {
            self.euler_genus
        }
    }

    /// `t(G)`: 0 for orientable graphs, 1 otherwise.
    pub fn t(&self) -> usize {
        usize::from(!self.orientable)
    }

    /// Plane: orientable of Euler genus zero.
    pub fn is_plane(&self) -> bool {
        self.orientable && self.euler_genus == 0
    }
}

impl fmt::Display for InvariantRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v={} e={} f={} genus={} {}",
            self.v,
            self.e,
            self.f,
            self.genus(),
            if self.orientable { "orientable" } else { "nonorientable" }
        )
    }
}

/// Boundary components of the ribbon surface: walk along circle arcs, and at
/// an arrow cross the edge ribbon to its partner arrow. With `A`, `B` the two
/// arrows of an edge the crossings join the head of `A` to the tail of `B`
/// and the head of `B` to the tail of `A`, so same-direction arrows give an
/// untwisted band and opposite directions a twisted one. Every arc is
/// visited exactly once; an empty circle contributes one component.
pub fn boundary_components(ap: &ArrowPresentation) -> (usize, Vec<BoundaryWalk>) {
    let walks = Endpoints::new(&Indexed::from_ap(ap)).trace(|_| VertexState::WhiteSplit);
    (walks.len(), walks)
}

/// All invariants of `ap`.
pub fn invariants(ap: &ArrowPresentation) -> InvariantRecord {
    record(&Indexed::from_ap(ap))
}

pub(crate) fn record(ind: &Indexed) -> InvariantRecord {
    let v = ind.circles.len();
    let e = ind.labels.len();
    let f = Endpoints::new(ind).count(|_| VertexState::WhiteSplit);
    let (k, _) = components(ind);
    let r = v - k;
    let n = e - r;
    let euler_genus = (2 * k + e)
        .checked_sub(v + f)
        .expect("Euler genus is nonnegative");
    InvariantRecord {
        v,
        e,
        f,
        k,
        r,
        n,
        euler_genus,
        orientable: is_orientable(ind),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(text: &str) -> InvariantRecord {
        invariants(&ArrowPresentation::parse(text).unwrap())
    }

    #[test]
    fn one_edge_face_counts() {
        assert_eq!(boundary_components(&"(e+ e+)".parse().unwrap()).0, 2);
        assert_eq!(boundary_components(&"(e+ e-)".parse().unwrap()).0, 1);
        assert_eq!(boundary_components(&"()".parse().unwrap()).0, 1);
        assert_eq!(boundary_components(&"(e+)(e+)".parse().unwrap()).0, 1);
        assert_eq!(boundary_components(&"(e+)(e-)".parse().unwrap()).0, 1);
    }

    #[test]
    fn every_corner_is_on_exactly_one_walk() {
        let ap: ArrowPresentation = "(a+ b+ c-)(a- c+ b+)".parse().unwrap();
        let (_, walks) = boundary_components(&ap);
        let mut corners: Vec<Corner> = walks.into_iter().flatten().collect();
        corners.sort();
        let expected: Vec<Corner> = (0..2)
            .flat_map(|c| (0..3).map(move |after| Corner { circle: c, after }))
            .collect();
        assert_eq!(corners, expected);
    }

    #[test]
    fn plane_theta() {
        let r = inv("(a+ b+ c+)(c+ b+ a+)");
        assert_eq!((r.v, r.e, r.f, r.k, r.euler_genus, r.orientable), (2, 3, 3, 1, 0, true));
    }

    #[test]
    fn toroidal_theta() {
        let r = inv("(a+ b+ c+)(a+ b+ c+)");
        assert_eq!((r.f, r.euler_genus, r.orientable), (1, 2, true));
    }

    #[test]
    fn twisted_loop() {
        let r = inv("(e+ e-)");
        assert_eq!((r.v, r.e, r.f, r.euler_genus, r.orientable), (1, 1, 1, 1, false));
        assert_eq!(r.to_string(), "v=1 e=1 f=1 genus=1 nonorientable");
    }

    #[test]
    fn isolated_vertex() {
        let r = inv("()");
        assert_eq!((r.v, r.e, r.f, r.k, r.euler_genus, r.orientable), (1, 0, 1, 1, 0, true));
    }

    #[test]
    fn rank_and_nullity() {
        let r = inv("(a+ b+)(a- b+)()");
        assert_eq!((r.v, r.k, r.r, r.n), (3, 2, 1, 1));
    }
}
