//! Property tests over randomly generated embedded graphs.

use proptest::prelude::*;

use ribbon_twist::ribbon_core::{
    canonical_embedded, equivalent, equivalent_labelled, from_rotation, invariants, to_rotation, Arrow, Level,
    MapMode,
};
use ribbon_twist::polynomials::{
    penrose_by_subsets, penrose_by_weights, permute_weights, transition_recursive, transition_statesum, WeightSystem,
    WeightTriple,
};
use ribbon_twist::twisted_duality::{apply, contract, partial_dual, twist, twist_set, GammaAssignment, GroupElement};
use ribbon_twist::{ArrowPresentation, Direction, EdgeLabel};

fn label(i: usize) -> EdgeLabel {
    EdgeLabel::new(format!("e{i}")).unwrap()
}

/// Places the two arrows of each edge on circles chosen by `slots`, ordered
/// within a circle by the sort keys.
fn build(circles: usize, slots: &[(usize, bool, u16)]) -> ArrowPresentation {
    let mut placed: Vec<Vec<(u16, Arrow)>> = vec![Vec::new(); circles];
    for (i, &(c, forward, key)) in slots.iter().enumerate() {
        placed[c % circles].push((key, Arrow::new(label(i / 2), Direction::from_forward(forward))));
    }
    let circles = placed
        .into_iter()
        .map(|mut c| {
            c.sort_by_key(|(k, _)| *k);
            c.into_iter().map(|(_, a)| a).collect()
        })
        .collect();
    ArrowPresentation::new(circles).unwrap()
}

fn graph() -> impl Strategy<Value = ArrowPresentation> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(edges, circles)| {
        prop::collection::vec((0..circles, any::<bool>(), any::<u16>()), 2 * edges)
            .prop_map(move |slots| build(circles, &slots))
    })
}

/// A graph whose underlying graph is a tree: edge `i` joins vertex `i + 1` to an earlier vertex.
fn tree() -> impl Strategy<Value = ArrowPresentation> {
    (1usize..=5).prop_flat_map(|edges| {
        (
            prop::collection::vec(any::<prop::sample::Index>(), edges),
            prop::collection::vec((any::<bool>(), any::<u16>()), 2 * edges),
        )
            .prop_map(move |(parents, ends)| {
                let mut slots = Vec::new();
                for (i, parent) in parents.iter().enumerate() {
                    let (f1, k1) = ends[2 * i];
                    let (f2, k2) = ends[2 * i + 1];
                    slots.push((i + 1, f1, k1));
                    slots.push((parent.index(i + 1), f2, k2));
                }
                build(edges + 1, &slots)
            })
    })
}

fn element() -> impl Strategy<Value = GroupElement> {
    (0usize..6).prop_map(|i| GroupElement::ALL[i])
}

/// Moves that give an equivalent presentation: rotating, reversing (with
/// every arrow on the circle flipped) and reordering circles, and renaming labels.
fn shuffled(g: &ArrowPresentation, rotations: &[usize], reverse: &[bool], rename: bool) -> ArrowPresentation {
    let mut circles: Vec<Vec<Arrow>> = g
        .circles()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut c = c.clone();
            if !c.is_empty() {
                let by = rotations[i % rotations.len()] % c.len();
                c.rotate_left(by);
            }
            if reverse[i % reverse.len()] {
                c.reverse();
                for a in &mut c {
                    a.dir = a.dir.flipped();
                }
            }
            if rename {
                for a in &mut c {
                    a.label = EdgeLabel::new(format!("x_{}", a.label)).unwrap();
                }
            }
            c
        })
        .collect();
    circles.reverse();
    ArrowPresentation::new(circles).unwrap()
}

fn numeric_weights(g: &ArrowPresentation, values: &[(i64, i64, i64)]) -> WeightSystem {
    g.labels()
        .into_iter()
        .zip(values.iter().cycle())
        .map(|(l, &(a, b, c))| (l, WeightTriple::ints(a, b, c)))
        .collect()
}

proptest! {
    #[test]
    fn euler_relation(g in graph()) {
        let r = invariants(&g);
        prop_assert_eq!(r.v + r.f + r.euler_genus, r.e + 2 * r.k);
        prop_assert_eq!(r.r + r.n, r.e);
        prop_assert_eq!(r.r + r.k, r.v);
    }

    #[test]
    fn canonical_form_ignores_presentation_moves(
        g in graph(),
        rotations in prop::collection::vec(0usize..8, 1..5),
        reverse in prop::collection::vec(any::<bool>(), 1..5),
        rename in any::<bool>(),
    ) {
        let h = shuffled(&g, &rotations, &reverse, rename);
        prop_assert_eq!(canonical_embedded(&g), canonical_embedded(&h));
        prop_assert_eq!(invariants(&g), invariants(&h));
        if !rename {
            prop_assert!(equivalent_labelled(&g, &h));
        }
    }

    #[test]
    fn trees_have_one_face(t in tree()) {
        let r = invariants(&t);
        prop_assert_eq!(r.f, 1);
        prop_assert_eq!(r.euler_genus, 0);
    }

    #[test]
    fn equivalence_levels_are_nested(g in graph(), h in graph()) {
        let map = Level::Map(MapMode::Unoriented);
        if equivalent(&g, &h, Level::Embedded) {
            prop_assert!(equivalent(&g, &h, map));
        }
        if equivalent(&g, &h, map) {
            prop_assert!(equivalent(&g, &h, Level::Abstract));
        }
        prop_assert!(equivalent(&g, &g, Level::Embedded));
    }

    #[test]
    fn rotation_system_round_trip(g in graph()) {
        let back = from_rotation(&to_rotation(&g)).unwrap();
        prop_assert!(equivalent_labelled(&g, &back));
    }

    #[test]
    fn twists_and_partial_duals_are_involutions(g in graph(), i in any::<prop::sample::Index>()) {
        let labels = g.labels();
        let e = &labels[i.index(labels.len())];
        prop_assert!(equivalent_labelled(&twist(&twist(&g, e).unwrap(), e).unwrap(), &g));
        prop_assert!(equivalent_labelled(&partial_dual(&partial_dual(&g, e).unwrap(), e).unwrap(), &g));
    }

    #[test]
    fn operations_at_distinct_edges_commute(
        g in graph(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        x in element(),
        y in element(),
    ) {
        let labels = g.labels();
        let (e, f) = (&labels[i.index(labels.len())], &labels[j.index(labels.len())]);
        prop_assume!(e != f);
        let at = |h: &ArrowPresentation, l: &EdgeLabel, z: GroupElement| {
            let mut gamma = GammaAssignment::new();
            gamma.set(l.clone(), z);
            apply(h, &gamma).unwrap()
        };
        let one = at(&at(&g, e, x), f, y);
        let two = at(&at(&g, f, y), e, x);
        prop_assert!(equivalent_labelled(&one, &two));
    }

    #[test]
    fn twisted_duals_keep_their_edges(g in graph(), elements in prop::collection::vec(element(), 4)) {
        let gamma = GammaAssignment(
            g.labels().into_iter().zip(elements.iter().cycle()).map(|(l, &x)| (l, x)).collect(),
        );
        let h = apply(&g, &gamma).unwrap();
        prop_assert_eq!(h.labels(), g.labels());
        prop_assert_eq!(invariants(&h).e, invariants(&g).e);
    }

    #[test]
    fn partial_twists_keep_the_map(g in graph(), mask in any::<u8>()) {
        let a: Vec<EdgeLabel> = g
            .labels()
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, l)| l)
            .collect();
        let h = twist_set(&g, &a).unwrap();
        prop_assert!(equivalent(&g, &h, Level::Map(MapMode::Unoriented)));
    }

    #[test]
    fn contraction_keeps_the_face_count(g in graph(), i in any::<prop::sample::Index>()) {
        let labels = g.labels();
        let e = &labels[i.index(labels.len())];
        prop_assert_eq!(invariants(&contract(&g, e).unwrap()).f, invariants(&g).f);
    }

    #[test]
    fn transition_state_sum_matches_recursion(
        g in graph(),
        values in prop::collection::vec((-3i64..4, -3i64..4, -3i64..4), 1..5),
    ) {
        let w = numeric_weights(&g, &values);
        prop_assert_eq!(transition_statesum(&g, &w).unwrap(), transition_recursive(&g, &w).unwrap());
    }

    #[test]
    fn transition_polynomial_is_a_twisted_duality_invariant(
        g in graph(),
        values in prop::collection::vec((-3i64..4, -3i64..4, -3i64..4), 1..5),
        elements in prop::collection::vec(element(), 4),
    ) {
        let gamma = GammaAssignment(
            g.labels().into_iter().zip(elements.iter().cycle()).map(|(l, &x)| (l, x)).collect(),
        );
        let w = numeric_weights(&g, &values);
        let h = apply(&g, &gamma).unwrap();
        prop_assert_eq!(
            transition_statesum(&g, &w).unwrap(),
            transition_statesum(&h, &permute_weights(&w, &gamma)).unwrap()
        );
    }

    #[test]
    fn penrose_routes_agree(g in graph()) {
        prop_assert_eq!(penrose_by_weights(&g).unwrap(), penrose_by_subsets(&g).unwrap());
    }
}
