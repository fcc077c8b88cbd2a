//! The topological transition polynomial by state sum and by recursion.

use std::collections::HashMap;

use rayon::prelude::*;

use super::laurent::{LaurentPoly, Var};
use super::weights::{WeightSystem, WeightTriple};
use crate::medial::{state_components_indexed, VertexState};
use crate::ribbon_core::surface::Indexed;
use crate::ribbon_core::{canonical_with_mapping, check, ArrowPresentation, Bound, EdgeLabel};
use crate::twisted_duality::{contract, twist};
use crate::{Error, Result};

fn weights_in_order(ind: &Indexed, w: &WeightSystem) -> Result<Vec<WeightTriple>> {
    ind.labels
        .iter()
        .map(|l| w.get(l).cloned().ok_or_else(|| Error::IncompleteAssignment(l.to_string())))
        .collect()
}

/// `Σ_s ω(s) t^{c(s)}` over all `3^e` assignments of a vertex state to each
/// edge, where `ω(s)` multiplies the chosen weights.
pub fn transition_statesum(ap: &ArrowPresentation, w: &WeightSystem) -> Result<LaurentPoly> {
    check(Bound::StateSumEdges, "edge count", ap.edge_count())?;
    let ind = Indexed::from_ap(ap);
    let weights = weights_in_order(&ind, w)?;
    let n = weights.len();
    let total = 3usize.pow(n as u32);
    let by_components: HashMap<usize, LaurentPoly> = (0..total)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<usize, LaurentPoly>, code| {
            let mut rest = code;
            let states: Vec<VertexState> = (0..n)
                .map(|_| {
                    let s = VertexState::ALL[rest % 3];
                    rest /= 3;
                    s
                })
                .collect();
            let omega: LaurentPoly = states
                .iter()
                .zip(&weights)
                .map(|(s, t)| t.0[s.index()].clone())
                .product();
            if !omega.is_zero() {
                *acc.entry(state_components_indexed(&ind, &states)).or_default() += omega;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (c, p) in b {
                *a.entry(c).or_default() += p;
            }
            a
        });
    Ok(by_components
        .into_iter()
        .map(|(c, p)| p * LaurentPoly::var_pow(Var::T, c as i64))
        .sum())
}

type MemoKey = (String, Vec<WeightTriple>);

/// The transition polynomial by the recursion
/// `Q(G) = α_e Q(G/e) + β_e Q(G − e) + γ_e Q(G^{τ(e)}/e)` with `Q = t^{v}` on
/// edgeless graphs. Subproblems are memoised on their canonical form
/// together with the weights carried along to the canonical labels.
pub fn transition_recursive(ap: &ArrowPresentation, w: &WeightSystem) -> Result<LaurentPoly> {
    let ind = Indexed::from_ap(ap);
    weights_in_order(&ind, w)?;
    let mut memo = HashMap::new();
    Ok(recurse(ap, w, &mut memo))
}

fn recurse(ap: &ArrowPresentation, w: &WeightSystem, memo: &mut HashMap<MemoKey, LaurentPoly>) -> LaurentPoly {
    if ap.edge_count() == 0 {
        return LaurentPoly::var_pow(Var::T, ap.vertex_count() as i64);
    }
    let (canon, mapping) = canonical_with_mapping(ap);
    let mut cw = WeightSystem::new();
    for (orig, new) in &mapping {
        cw.insert(new.clone(), w[orig].clone());
    }
    let key: MemoKey = (canon.serialize(), cw.values().cloned().collect());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let e: EdgeLabel = canon.labels()[0].clone();
    let [alpha, beta, gamma] = &cw[&e].0;
    let mut rest = cw.clone();
    rest.remove(&e);
    let mut result = LaurentPoly::zero();
    if !alpha.is_zero() {
        let g = contract(&canon, &e).expect("edge present");
        result += alpha * &recurse(&g, &rest, memo);
    }
    if !beta.is_zero() {
        let g = canon.delete_edge(&e).expect("edge present");
        result += beta * &recurse(&g, &rest, memo);
    }
    if !gamma.is_zero() {
        let g = contract(&twist(&canon, &e).expect("edge present"), &e).expect("edge present");
        result += gamma * &recurse(&g, &rest, memo);
    }
    memo.insert(key, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::super::laurent::v;
    use super::super::weights::{symbolic_weights, uniform_weights};
    use super::*;

    fn ap(text: &str) -> ArrowPresentation {
        text.parse().unwrap()
    }

    fn abc(e: &str) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
        let l = EdgeLabel::new(e).unwrap();
        (v(Var::Alpha(l.clone())), v(Var::Beta(l.clone())), v(Var::Gamma(l)))
    }

    fn t(n: i64) -> LaurentPoly {
        LaurentPoly::var_pow(Var::T, n)
    }

    #[test]
    fn plane_loop() {
        let g = ap("(e+ e+)");
        let (a, b, c) = abc("e");
        let expected = &a * &t(2) + &b * &t(1) + &c * &t(1);
        let w = symbolic_weights(&g.labels());
        assert_eq!(transition_statesum(&g, &w).unwrap(), expected);
        assert_eq!(transition_recursive(&g, &w).unwrap(), expected);
    }

    #[test]
    fn bridge_and_twisted_loop() {
        let (a, b, c) = abc("e");
        let bridge = ap("(e+)(e+)");
        let w = symbolic_weights(&bridge.labels());
        let expected = &a * &t(1) + &b * &t(2) + &c * &t(1);
        assert_eq!(transition_recursive(&bridge, &w).unwrap(), expected);
        assert_eq!(transition_statesum(&bridge, &w).unwrap(), expected);
        let twisted = ap("(e+ e-)");
        let expected = (&a + &b) * t(1) + &c * &t(2);
        assert_eq!(transition_recursive(&twisted, &w).unwrap(), expected);
        assert_eq!(transition_statesum(&twisted, &w).unwrap(), expected);
    }

    #[test]
    fn edgeless_graph() {
        let g = ap("()()()");
        let w = WeightSystem::new();
        assert_eq!(transition_statesum(&g, &w).unwrap(), t(3));
        assert_eq!(transition_recursive(&g, &w).unwrap(), t(3));
    }

    #[test]
    fn path_example_terms() {
        let g = ap("(u+)(u+ v+)(v+)");
        let q = transition_statesum(&g, &symbolic_weights(&g.labels())).unwrap();
        let (au, _, _) = abc("u");
        let (av, bv, cv) = abc("v");
        for (m, deg) in [(&au * &av, 1), (&au * &bv, 2), (&au * &cv, 1)] {
            let term = &m * &t(deg);
            let (mono, _) = term.terms().next().unwrap();
            assert_eq!(q.coefficient(mono), 1.into(), "{term}");
        }
    }

    #[test]
    fn missing_weight() {
        let g = ap("(e+ e+)");
        assert!(transition_statesum(&g, &WeightSystem::new()).is_err());
        assert!(transition_recursive(&g, &WeightSystem::new()).is_err());
    }

    #[test]
    fn numeric_weights_agree() {
        let g = ap("(a+ b+ c+ a- b+ c+)");
        let w = uniform_weights(&g.labels(), &WeightTriple::ints(2, -1, 3));
        assert_eq!(transition_statesum(&g, &w).unwrap(), transition_recursive(&g, &w).unwrap());
        assert!(transition_statesum(&g, &w).unwrap().terms().all(|(m, _)| m.powers().all(|(x, _)| *x == Var::T)));
    }
}
