//! Edge operations and the action of group assignments.

use super::group::{GammaAssignment, GroupElement, Letter};
use crate::ribbon_core::surface::{partial_dual_indexed, partial_dual_set as dual_set_indexed, Indexed};
use crate::ribbon_core::{ArrowPresentation, EdgeLabel};
use crate::{Error, Result};

fn label_index(ind: &Indexed, label: &EdgeLabel) -> Result<usize> {
    ind.labels
        .binary_search(label)
        .map_err(|_| Error::UnknownLabel(label.to_string()))
}

fn twist_indexed(ind: &mut Indexed, label: usize) {
    for circle in &mut ind.circles {
        if let Some(arrow) = circle.iter_mut().find(|(l, _)| *l == label) {
            arrow.1 = !arrow.1;
            return;
        }
    }
}

/// Applies one group element at one edge.
pub(crate) fn element_indexed(ind: &Indexed, label: usize, g: GroupElement) -> Indexed {
    let mut cur = ind.clone();
    for letter in g.application_order() {
        cur = match letter {
            Letter::Tau => {
                twist_indexed(&mut cur, label);
                cur
            }
            Letter::Delta => partial_dual_indexed(&cur, label),
        };
    }
    cur
}

/// Applies an element per edge index.
pub(crate) fn apply_indexed(ind: &Indexed, assignment: &[(usize, GroupElement)]) -> Indexed {
    assignment
        .iter()
        .fold(ind.clone(), |acc, &(l, g)| element_indexed(&acc, l, g))
}

/// Contraction `G/e`: partial dual at `e` followed by deleting `e`.
pub(crate) fn contract_indexed(ind: &Indexed, label: usize) -> Indexed {
    let dual = partial_dual_indexed(ind, label);
    Indexed {
        circles: dual
            .circles
            .into_iter()
            .map(|c| c.into_iter().filter(|&(l, _)| l != label).collect())
            .collect(),
        labels: dual.labels,
    }
}

/// Twist: reverses the first stored arrow of `label`.
pub fn twist(ap: &ArrowPresentation, label: &EdgeLabel) -> Result<ArrowPresentation> {
    ap.flip_first(label)
}

/// Twists every edge in `labels`.
pub fn twist_set(ap: &ArrowPresentation, labels: &[EdgeLabel]) -> Result<ArrowPresentation> {
    labels.iter().try_fold(ap.clone(), |acc, l| twist(&acc, l))
}

/// Partial dual at `label`: the two arrows `A`, `B` are replaced by an arrow
/// from the head of `A` to the tail of `B` and one from the head of `B` to
/// the tail of `A`, and the circles are read off again.
pub fn partial_dual(ap: &ArrowPresentation, label: &EdgeLabel) -> Result<ArrowPresentation> {
    let ind = Indexed::from_ap(ap);
    let l = label_index(&ind, label)?;
    Ok(partial_dual_indexed(&ind, l).to_ap())
}

/// Partial dual with respect to a set of edges.
pub fn partial_dual_set(ap: &ArrowPresentation, labels: &[EdgeLabel]) -> Result<ArrowPresentation> {
    let ind = Indexed::from_ap(ap);
    let idx = labels
        .iter()
        .map(|l| label_index(&ind, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(dual_set_indexed(&ind, &idx).to_ap())
}

/// Applies every edge's group element; `ξζ` at an edge applies `ζ` first.
pub fn apply(ap: &ArrowPresentation, gamma: &GammaAssignment) -> Result<ArrowPresentation> {
    let ind = Indexed::from_ap(ap);
    let assignment = gamma
        .0
        .iter()
        .map(|(l, g)| Ok((label_index(&ind, l)?, *g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(apply_indexed(&ind, &assignment).to_ap())
}

/// Euler–Poincaré dual: the partial dual at every edge.
pub fn geometric_dual(ap: &ArrowPresentation) -> ArrowPresentation {
    let ind = Indexed::from_ap(ap);
    let all: Vec<usize> = (0..ind.labels.len()).collect();
    dual_set_indexed(&ind, &all).to_ap()
}

/// Contraction `G/e = G^{δ(e)} − e`; loops are allowed.
pub fn contract(ap: &ArrowPresentation, label: &EdgeLabel) -> Result<ArrowPresentation> {
    let ind = Indexed::from_ap(ap);
    let l = label_index(&ind, label)?;
    Ok(contract_indexed(&ind, l).to_ap())
}
