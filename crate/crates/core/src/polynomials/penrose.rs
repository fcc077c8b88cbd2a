//! The Penrose polynomial of an embedded graph by three routes.

use rayon::prelude::*;

use super::chromatic::chromatic;
use super::laurent::{LaurentPoly, Var};
use super::transition::transition_statesum;
use super::weights::penrose_weights;
use crate::ribbon_core::{check, invariants, underlying_abstract, ArrowPresentation, Bound, EdgeLabel};
use crate::twisted_duality::{geometric_dual, twist_set};
use crate::{Error, Result};

/// Edge subsets of `labels` given by the bits of `mask`.
pub(crate) fn subset(labels: &[EdgeLabel], mask: usize) -> Vec<EdgeLabel> {
    labels
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, l)| l.clone())
        .collect()
}

/// The transition polynomial with weights `(1, 0, −1)` on every edge, in `λ`.
pub fn penrose_by_weights(ap: &ArrowPresentation) -> Result<LaurentPoly> {
    let q = transition_statesum(ap, &penrose_weights(&ap.labels()))?;
    Ok(q.rename(&Var::T, Var::Lambda))
}

/// `Σ_{A ⊆ E} (−1)^{|A|} λ^{f(G^{τ(A)})}`.
pub fn penrose_by_subsets(ap: &ArrowPresentation) -> Result<LaurentPoly> {
    check(Bound::SubsetEdges, "edge count", ap.edge_count())?;
    let labels = ap.labels();
    Ok((0..1usize << labels.len())
        .into_par_iter()
        .map(|mask| {
            let a = subset(&labels, mask);
            let f = invariants(&twist_set(ap, &a).expect("labels present")).f;
            let sign = if a.len().is_multiple_of(2) { 1 } else { -1 };
            LaurentPoly::constant(sign) * LaurentPoly::var_pow(Var::Lambda, f as i64)
        })
        .reduce(LaurentPoly::zero, |a, b| a + b))
}

/// `Σ_{A ⊆ E} χ((G^{τ(A)})^*; λ)`, for plane graphs only.
pub fn penrose_by_chromatic_sum(ap: &ArrowPresentation) -> Result<LaurentPoly> {
    if !invariants(ap).is_plane() {
        return Err(Error::NotPlane);
    }
    check(Bound::SubsetEdges, "edge count", ap.edge_count())?;
    let labels = ap.labels();
    Ok((0..1usize << labels.len())
        .into_par_iter()
        .map(|mask| {
            let h = twist_set(ap, &subset(&labels, mask)).expect("labels present");
            chromatic(&underlying_abstract(&geometric_dual(&h)))
        })
        .reduce(LaurentPoly::zero, |a, b| a + b))
}

/// The Penrose polynomial `P(G; λ)`.
pub fn penrose(ap: &ArrowPresentation) -> Result<LaurentPoly> {
    penrose_by_subsets(ap)
}

#[cfg(test)]
mod tests {
    use super::super::laurent::{k, v};
    use super::*;

    fn ap(text: &str) -> ArrowPresentation {
        text.parse().unwrap()
    }

    #[test]
    fn theta_by_every_route() {
        let theta = ap("(a+ b+ c+)(c+ b+ a+)");
        let l = v(Var::Lambda);
        let expected = &(&l.pow(3) - &(&k(3) * &l.pow(2))) + &(&k(2) * &l);
        assert_eq!(penrose_by_weights(&theta).unwrap(), expected);
        assert_eq!(penrose_by_subsets(&theta).unwrap(), expected);
        assert_eq!(penrose_by_chromatic_sum(&theta).unwrap(), expected);
    }

    #[test]
    fn loops_and_path() {
        let l = v(Var::Lambda);
        assert_eq!(penrose(&ap("(e+ e+)")).unwrap(), &l.pow(2) - &l);
        assert_eq!(penrose(&ap("(e+ e-)")).unwrap(), &l - &l.pow(2));
        assert_eq!(penrose(&ap("(u+)(u+ v+)(v+)")).unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn chromatic_route_needs_a_plane_graph() {
        assert_eq!(penrose_by_chromatic_sum(&ap("(e+ e-)")), Err(Error::NotPlane));
    }
}
