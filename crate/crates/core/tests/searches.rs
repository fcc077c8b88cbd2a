//! Searches over small graphs for the examples that separate plane and non-plane behaviour.

use std::collections::BTreeSet;

use num_rational::BigRational;

use ribbon_twist::medial::{count_admissible_valuations, ValuationRule};
use ribbon_twist::polynomials::{k, penrose, v, Var};
use ribbon_twist::ribbon_core::{canonical_embedded, enumerate, invariants};
use ribbon_twist::twisted_duality::{orbit, Subgroup};
use ribbon_twist::ArrowPresentation;

fn forms(graphs: &[ArrowPresentation]) -> BTreeSet<String> {
    graphs.iter().map(|g| canonical_embedded(g).serialize()).collect()
}

#[test]
fn one_edge_graphs_form_a_single_orbit() {
    let all = forms(&enumerate(1).unwrap());
    for g in enumerate(1).unwrap() {
        assert_eq!(forms(&orbit(&g, &Subgroup::Full.moves()).unwrap()), all, "{g}");
    }
}

#[test]
fn two_edge_graphs_form_several_orbits() {
    let graphs = enumerate(2).unwrap();
    let all = forms(&graphs);
    let mut orbits = BTreeSet::new();
    for g in &graphs {
        let o = forms(&orbit(g, &Subgroup::Full.moves()).unwrap());
        assert!(o.len() < all.len(), "{g} reaches every two-edge graph");
        orbits.insert(o);
    }
    assert!(orbits.len() > 1);
    let covered: BTreeSet<String> = orbits.into_iter().flatten().collect();
    assert_eq!(covered, all);
}

#[test]
fn a_non_plane_graph_separates_valuations_from_the_penrose_polynomial() {
    let lambda = v(Var::Lambda);
    let target = k(-1) * lambda.pow(3) + k(4) * lambda.pow(2) - k(3) * lambda;
    let mut found = Vec::new();
    for n in 1..=3 {
        found.extend(enumerate(n).unwrap().into_iter().filter(|g| penrose(g).unwrap() == target));
    }
    assert!(!found.is_empty());
    for g in &found {
        assert!(!invariants(g).is_plane(), "{g}");
        for colours in 3..=5usize {
            let count = count_admissible_valuations(g, colours, ValuationRule::Strict).unwrap();
            let p = penrose(g)
                .unwrap()
                .eval_at(&[(Var::Lambda, BigRational::from_integer(colours.into()))].into_iter().collect())
                .unwrap();
            assert_ne!(BigRational::from_integer(count.into()), p, "{g} at k = {colours}");
            // Permuting colours preserves admissibility and every orbit has a
            // size divisible by the number of colours.
            assert_eq!(count % colours as u64, 0, "{g} at k = {colours}");
            let c = colours as u64;
            assert_eq!(count, c * (c - 1) * (c - 1), "{g} at k = {colours}");
        }
    }
}

#[test]
fn the_twisted_loop_breaks_the_degree_and_leading_coefficient_properties() {
    let g: ArrowPresentation = "(e+ e-)".parse().unwrap();
    let lambda = v(Var::Lambda);
    assert_eq!(penrose(&g).unwrap(), lambda.clone() - lambda.pow(2));
    assert_eq!(invariants(&g).f, 1);
}
