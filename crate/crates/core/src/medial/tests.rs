use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::ribbon_core::{
    enumerate, equivalent, invariants, is_isomorphic, underlying_abstract, Level,
};
use crate::twisted_duality::{apply, geometric_dual, orbit, GammaAssignment, GroupElement, Subgroup};

fn small(n: usize) -> Vec<ArrowPresentation> {
    (1..=n).flat_map(|k| enumerate(k).unwrap()).collect()
}

fn ap(text: &str) -> ArrowPresentation {
    text.parse().unwrap()
}

fn same_set(a: &[ArrowPresentation], b: &[ArrowPresentation]) -> bool {
    let mut x: Vec<_> = a.iter().map(canonical_embedded).map(|g| g.serialize()).collect();
    let mut y: Vec<_> = b.iter().map(canonical_embedded).map(|g| g.serialize()).collect();
    x.sort();
    y.sort();
    x == y
}

#[test]
fn medial_invariants() {
    for g in small(3) {
        let m = medial(&g);
        let (ri, rm) = (invariants(&g), invariants(&m.graph));
        assert_eq!(rm.v, ri.e + g.isolated_count(), "{g}");
        assert_eq!(rm.e, 2 * ri.e, "{g}");
        assert_eq!(rm.f, ri.f + ri.v, "{g}");
        assert_eq!(rm.euler_genus, ri.euler_genus, "{g}");
        assert_eq!(rm.orientable, ri.orientable, "{g}");
    }
}

#[test]
fn medial_of_loop() {
    let m = medial(&ap("(e+ e+)"));
    let r = invariants(&m.graph);
    assert_eq!((r.v, r.e, r.f), (1, 2, 3));
}

#[test]
fn isolated_vertices_stay_isolated() {
    let m = medial(&ap("(e+)(e+)()"));
    assert_eq!(m.graph.vertex_count(), 2);
    assert_eq!(m.graph.isolated_count(), 1);
}

#[test]
fn tait_graphs_recover_graph_and_dual() {
    for g in small(3) {
        let m = medial(&g);
        assert!(equivalent(&m.tait_black(), &g, Level::Embedded), "{g}");
        assert!(equivalent(&m.tait_white(), &geometric_dual(&g), Level::Embedded), "{g}");
    }
}

#[test]
fn medial_colouring_blackens_vertex_faces() {
    let g = ap("(a+ b+ c+)(c+ b+ a+)");
    let m = medial(&g);
    let black = m.face_black.iter().filter(|&&b| b).count();
    assert_eq!(black, 2);
    assert_eq!(m.face_black.len() - black, 3);
}

#[test]
fn three_component_routes_agree() {
    for g in small(3) {
        let m = medial(&g);
        let ind = Indexed::from_ap(&g);
        let n = ind.labels.len();
        for code in 0..3usize.pow(n as u32) {
            let mut rest = code;
            let per: Vec<VertexState> = (0..n)
                .map(|_| {
                    let s = VertexState::ALL[rest % 3];
                    rest /= 3;
                    s
                })
                .collect();
            let map: BTreeMap<EdgeLabel, VertexState> =
                ind.labels.iter().cloned().zip(per.iter().copied()).collect();
            let a = state_components(&g, &map).unwrap();
            let b = state_components_indexed(&ind, &per);
            let c = m.state_components(&map).unwrap();
            assert_eq!((a, b), (c, c), "{g} {per:?}");
        }
    }
}

#[test]
fn theta_state_components() {
    let g = ap("(a+ b+ c+)(c+ b+ a+)");
    let all = |s: VertexState| g.labels().into_iter().map(|l| (l, s)).collect::<BTreeMap<_, _>>();
    assert_eq!(state_components(&g, &all(VertexState::BlackSplit)).unwrap(), 2);
    assert_eq!(state_components(&g, &all(VertexState::WhiteSplit)).unwrap(), 3);
}

#[test]
fn cycle_family_graphs_are_the_orbit() {
    for g in small(2) {
        let m = medial(&g);
        let cfg = all_cycle_family_graphs(&m.graph, false).unwrap();
        assert!(same_set(&cfg, &orbit(&g, &Subgroup::Full.moves()).unwrap()), "{g}");
        let dual = all_cycle_family_graphs(&m.graph, true).unwrap();
        assert!(same_set(&dual, &orbit(&g, &Subgroup::Delta.moves()).unwrap()), "{g}");
    }
}

#[test]
fn loop_has_three_cycle_family_graphs() {
    let m = medial(&ap("(e+ e+)"));
    assert_eq!(all_cycle_family_graphs(&m.graph, false).unwrap().len(), 3);
}

#[test]
fn cycle_family_graphs_have_medial_isomorphic_to_f() {
    for g in small(2) {
        let m = medial(&g);
        let f_abs = underlying_abstract(&m.graph);
        let n = m.vertex_count();
        for code in 0..6usize.pow(n as u32) {
            let mut rest = code;
            let s = ArrowMarkedState(
                (0..n)
                    .map(|_| {
                        let x = MarkedVertexState::all()[rest % 6];
                        rest /= 6;
                        x
                    })
                    .collect(),
            );
            let h = m.cycle_family_graph(&s).unwrap();
            assert!(is_isomorphic(&underlying_abstract(&medial(&h).graph), &f_abs), "{g} {code}");
        }
    }
}

#[test]
fn state_action_commutes_with_cycle_family_graphs() {
    let mut rng = StdRng::seed_from_u64(7);
    for g in small(3) {
        let m = medial(&g);
        let n = m.vertex_count();
        for _ in 0..12 {
            let s = ArrowMarkedState(
                (0..n)
                    .map(|_| MarkedVertexState::all()[rng.gen_range(0..6)])
                    .collect(),
            );
            let mut gamma = GammaAssignment::new();
            for l in &m.origin {
                gamma.set(l.clone(), GroupElement::ALL[rng.gen_range(0..6)]);
            }
            let lhs = m.cycle_family_graph(&apply_state_action(&s, &m.origin, &gamma)).unwrap();
            let rhs = apply(&m.cycle_family_graph(&s).unwrap(), &gamma).unwrap();
            assert!(equivalent(&lhs, &rhs, Level::Embedded), "{g} {s:?} {gamma}");
        }
    }
}

#[test]
fn identity_action_fixes_states() {
    let s = ArrowMarkedState(MarkedVertexState::all().to_vec());
    let labels: Vec<EdgeLabel> = (0..6).map(|i| EdgeLabel::new(format!("e{i}")).unwrap()).collect();
    assert_eq!(apply_state_action(&s, &labels, &GammaAssignment::new()), s);
}

#[test]
fn some_four_regular_graph_is_not_checkerboard_colourable() {
    let four_regular: Vec<_> = enumerate(2)
        .unwrap()
        .into_iter()
        .filter(|g| four_valent_vertices(g).is_ok())
        .collect();
    assert!(four_regular.len() > 3);
    assert!(four_regular
        .iter()
        .any(|g| is_checkerboard_colourable(g).unwrap().is_none()));
}

#[test]
fn medial_graphs_are_colourable() {
    for g in small(3) {
        assert!(is_checkerboard_colourable(&medial(&g).graph).unwrap().is_some(), "{g}");
    }
}

#[test]
fn not_four_regular() {
    assert!(is_checkerboard_colourable(&ap("(e+ e+)")).is_err());
}
