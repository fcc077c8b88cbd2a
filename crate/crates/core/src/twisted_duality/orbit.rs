//! Orbits under subgroups of the ribbon group.

use std::collections::HashMap;

use rayon::prelude::*;

use super::group::GroupElement;
use super::ops::apply_indexed;
use crate::ribbon_core::canonical::{form_indexed, CanonicalForm};
use crate::ribbon_core::surface::Indexed;
use crate::ribbon_core::{canonical_embedded, limit, ArrowPresentation, Bound};
use crate::{Error, Result};

/// A move used to generate an orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMove {
    /// The element applied at one edge; every edge is tried.
    EachEdge(GroupElement),
    /// The element applied at every edge simultaneously.
    AllEdges(GroupElement),
}

/// The subgroups with named orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// The whole group: all twisted duals.
    Full,
    /// ⟨δ⟩: partial duals.
    Delta,
    /// ⟨τ⟩: partial twists.
    Tau,
    /// ⟨τδ⟩.
    TauDelta,
    /// ⟨δτδ⟩.
    DeltaTauDelta,
}

impl Subgroup {
    /// Edgewise generators of the subgroup.
    pub fn moves(self) -> Vec<OrbitMove> {
        use GroupElement::*;
        let gens = match self {
            Subgroup::Full => vec![Tau, Delta],
            Subgroup::Delta => vec![Delta],
            Subgroup::Tau => vec![Tau],
            Subgroup::TauDelta => vec![TauDelta],
            Subgroup::DeltaTauDelta => vec![TauDeltaTau],
        };
        gens.into_iter().map(OrbitMove::EachEdge).collect()
    }
}

impl std::str::FromStr for Subgroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Subgroup::Full),
            "delta" => Ok(Subgroup::Delta),
            "tau" => Ok(Subgroup::Tau),
            "taudelta" => Ok(Subgroup::TauDelta),
            "deltataudelta" => Ok(Subgroup::DeltaTauDelta),
            other => Err(Error::InvalidGroupElement(other.to_string())),
        }
    }
}

pub(crate) fn orbit_forms(ind: &Indexed, moves: &[OrbitMove]) -> HashMap<CanonicalForm, Indexed> {
    let n = ind.labels.len();
    let mut seen: HashMap<CanonicalForm, Indexed> = HashMap::new();
    seen.insert(form_indexed(ind), ind.clone());
    let mut frontier = vec![ind.clone()];
    while !frontier.is_empty() {
        let produced: Vec<(CanonicalForm, Indexed)> = frontier
            .par_iter()
            .flat_map_iter(|g| {
                let mut out = Vec::new();
                for m in moves {
                    match *m {
                        OrbitMove::EachEdge(x) => {
                            for l in 0..n {
                                let h = apply_indexed(g, &[(l, x)]);
                                out.push((form_indexed(&h), h));
                            }
                        }
                        OrbitMove::AllEdges(x) => {
                            let all: Vec<(usize, GroupElement)> = (0..n).map(|l| (l, x)).collect();
                            let h = apply_indexed(g, &all);
                            out.push((form_indexed(&h), h));
                        }
                    }
                }
                out
            })
            .collect();
        let mut next = Vec::new();
        for (form, h) in produced {
            if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(form) {
                slot.insert(h.clone());
                next.push(h);
            }
        }
        frontier = next;
    }
    seen
}

/// Breadth-first closure of `{ap}` under the moves, as canonical
/// representatives sorted by their text form.
pub fn orbit(ap: &ArrowPresentation, moves: &[OrbitMove]) -> Result<Vec<ArrowPresentation>> {
    let e = ap.edge_count();
    let lim = limit(Bound::OrbitEdges);
    if e > lim {
        return Err(Error::BoundExceeded {
            what: "edge count",
            value: e,
            limit: lim,
        });
    }
    let forms = orbit_forms(&Indexed::from_ap(ap), moves);
    let mut out: Vec<ArrowPresentation> = forms
        .values()
        .map(|ind| canonical_embedded(&ind.to_ap()))
        .collect();
    out.sort_by_key(|g| g.serialize());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ap(text: &str) -> ArrowPresentation {
        text.parse().unwrap()
    }

    #[test]
    fn loop_orbits() {
        let l = ap("(e+ e+)");
        assert_eq!(orbit(&l, &Subgroup::Full.moves()).unwrap().len(), 3);
        assert_eq!(orbit(&l, &Subgroup::Delta.moves()).unwrap().len(), 2);
        assert_eq!(orbit(&l, &Subgroup::Tau.moves()).unwrap().len(), 2);
    }

    #[test]
    fn star_is_fixed_by_global_twist() {
        let star = ap("(a+ b+ c+)(a+)(b+)(c+)");
        let fixed = orbit(&star, &[OrbitMove::AllEdges(GroupElement::Tau)]).unwrap();
        assert_eq!(fixed.len(), 1);
    }

    #[test]
    fn subgroup_names() {
        for (name, sg) in [
            ("full", Subgroup::Full),
            ("delta", Subgroup::Delta),
            ("tau", Subgroup::Tau),
            ("taudelta", Subgroup::TauDelta),
            ("deltataudelta", Subgroup::DeltaTauDelta),
        ] {
            assert_eq!(name.parse::<Subgroup>().unwrap(), sg);
        }
    }
}
