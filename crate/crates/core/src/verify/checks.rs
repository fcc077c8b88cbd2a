//! The individual checks behind the verification catalog.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{each, Failure};
use crate::medial::{
    all_cycle_family_graphs, count_admissible_valuations, medial, ArrowMarkedState, MarkedVertexState,
    ValuationRule,
};
use crate::polynomials::{
    bollobas_riordan, chromatic, k, las_vergnas, penrose, penrose_by_chromatic_sum, penrose_by_subsets,
    penrose_by_weights, permute_weights, signed_topochromatic, symbolic_weights, topochromatic,
    topochromatic_weights, transition_recursive, transition_statesum, uniform_weights, v, LaurentPoly, Sign,
    SignedRibbonGraph, Var, WeightTriple,
};
use crate::ribbon_core::{
    equivalent, equivalent_labelled, invariants, is_isomorphic, underlying_abstract, ArrowPresentation, EdgeLabel,
    Level, MapMode,
};
use crate::twisted_duality::{
    apply, contract, geometric_dual, orbit, partial_dual, partial_dual_set, twist, twist_set, GammaAssignment,
    GroupElement, Subgroup,
};
use crate::Result;

type Outcome = (usize, Vec<Failure>);

fn all(_: &ArrowPresentation) -> bool {
    true
}

fn plane(g: &ArrowPresentation) -> bool {
    invariants(g).is_plane()
}

fn same(a: &ArrowPresentation, b: &ArrowPresentation) -> bool {
    equivalent(a, b, Level::Embedded)
}

fn subsets(labels: &[EdgeLabel]) -> impl Iterator<Item = Vec<EdgeLabel>> + '_ {
    (0..1usize << labels.len()).map(move |mask| {
        labels
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, l)| l.clone())
            .collect()
    })
}

fn at(g: &ArrowPresentation, e: &EdgeLabel, x: GroupElement) -> Result<ArrowPresentation> {
    let mut gamma = GammaAssignment::new();
    gamma.set(e.clone(), x);
    apply(g, &gamma)
}

fn rng_for(index: usize) -> StdRng {
    StdRng::seed_from_u64(0x5eed ^ index as u64)
}

fn random_gamma(labels: &[EdgeLabel], rng: &mut StdRng) -> GammaAssignment {
    let mut gamma = GammaAssignment::new();
    for l in labels {
        gamma.set(l.clone(), GroupElement::ALL[rng.gen_range(0..6)]);
    }
    gamma
}

fn random_signs(g: &ArrowPresentation, rng: &mut StdRng) -> SignedRibbonGraph {
    let signs = g
        .labels()
        .into_iter()
        .map(|l| (l, if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }))
        .collect();
    SignedRibbonGraph::new(g.clone(), signs).expect("every edge is signed")
}

fn rational(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn at_lambda(p: &LaurentPoly, x: i64) -> Result<BigRational> {
    p.eval_at(&BTreeMap::from([(Var::Lambda, rational(x))]))
}

fn substitute(p: &LaurentPoly, pairs: Vec<(Var, LaurentPoly)>) -> Result<LaurentPoly> {
    p.substitute(&pairs.into_iter().collect())
}

pub(super) fn group_relations(graphs: &[ArrowPresentation]) -> Outcome {
    use GroupElement::{Delta, Tau};
    let words: [(&str, Vec<GroupElement>); 3] = [
        ("τ²", vec![Tau, Tau]),
        ("δ²", vec![Delta, Delta]),
        ("(τδ)³", [Delta, Tau].repeat(3)),
    ];
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        for e in g.labels() {
            for (name, word) in &words {
                let mut h = g.clone();
                for &x in word {
                    h = at(&h, &e, x)?;
                }
                if !same(&h, g) {
                    failures.push(format!("{name} at {e} gives {h}"));
                }
            }
        }
        Ok(failures)
    })
}

pub(super) fn commutation(graphs: &[ArrowPresentation]) -> Outcome {
    use GroupElement::{Delta, Tau};
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let labels = g.labels();
        for e in &labels {
            for f in labels.iter().filter(|f| *f != e) {
                for x in [Tau, Delta] {
                    for y in [Tau, Delta] {
                        let one = at(&at(g, e, x)?, f, y)?;
                        let two = at(&at(g, f, y)?, e, x)?;
                        if !equivalent_labelled(&one, &two) {
                            failures.push(format!("{x}({e}) and {y}({f}) give {one} and {two}"));
                        }
                    }
                }
            }
        }
        Ok(failures)
    })
}

pub(super) fn euler_dual(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let d = geometric_dual(g);
        let via_gamma = apply(g, &GammaAssignment::uniform(&g.labels(), GroupElement::Delta))?;
        if !equivalent_labelled(&d, &via_gamma) {
            failures.push(format!("dual {d} differs from δ everywhere {via_gamma}"));
        }
        let (r, s) = (invariants(g), invariants(&d));
        if (r.v, r.f, r.e, r.euler_genus) != (s.f, s.v, s.e, s.euler_genus) {
            failures.push(format!("invariants {r} and dual {s}"));
        }
        if !same(&geometric_dual(&d), g) {
            failures.push("double dual differs".into());
        }
        Ok(failures)
    })
}

pub(super) fn chmutov_contract(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let f = invariants(g).f;
        for e in g.labels() {
            let c = contract(g, &e)?;
            let by_definition = partial_dual(g, &e)?.delete_edge(&e)?;
            if !same(&c, &by_definition) {
                failures.push(format!("G/{e} = {c} but G^δ({e}) − {e} = {by_definition}"));
            }
            let fc = invariants(&c).f;
            if fc != f {
                failures.push(format!("f(G/{e}) = {fc}, f(G) = {f}"));
            }
        }
        Ok(failures)
    })
}

pub(super) fn partial_dual_vertices(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let labels = g.labels();
        for a in subsets(&labels) {
            let v = partial_dual_set(g, &a)?.vertex_count();
            let f = invariants(&g.retain_edges(|l| a.contains(l))).f;
            if v != f {
                failures.push(format!("A = {a:?}: v(G^δ(A)) = {v}, f = {f}"));
            }
        }
        Ok(failures)
    })
}

pub(super) fn medial_tait(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let m = medial(g);
        let (r, s) = (invariants(g), invariants(&m.graph));
        let expected = (r.e + g.isolated_count(), 2 * r.e, r.f + r.v, r.euler_genus, r.orientable);
        let got = (s.v, s.e, s.f, s.euler_genus, s.orientable);
        if expected != got {
            failures.push(format!("medial invariants {got:?}, expected {expected:?}"));
        }
        if !same(&m.tait_black(), g) {
            failures.push(format!("black Tait graph {}", m.tait_black()));
        }
        if !same(&m.tait_white(), &geometric_dual(g)) {
            failures.push(format!("white Tait graph {}", m.tait_white()));
        }
        Ok(failures)
    })
}

fn same_set(a: &[ArrowPresentation], b: &[ArrowPresentation]) -> bool {
    let key = |xs: &[ArrowPresentation]| {
        let mut out: Vec<String> = xs
            .iter()
            .map(|x| crate::ribbon_core::canonical_embedded(x).serialize())
            .collect();
        out.sort();
        out
    };
    key(a) == key(b)
}

pub(super) fn cycle_family_orbit(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let cfg = all_cycle_family_graphs(&medial(g).graph, false)?;
        let orb = orbit(g, &Subgroup::Full.moves())?;
        Ok(if same_set(&cfg, &orb) {
            vec![]
        } else {
            vec![format!("{} cycle family graphs, orbit of size {}", cfg.len(), orb.len())]
        })
    })
}

pub(super) fn duality_state_orbit(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let cfg = all_cycle_family_graphs(&medial(g).graph, true)?;
        let orb = orbit(g, &Subgroup::Delta.moves())?;
        Ok(if same_set(&cfg, &orb) {
            vec![]
        } else {
            vec![format!("{} duality-state graphs, {} partial duals", cfg.len(), orb.len())]
        })
    })
}

pub(super) fn medial_iso(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let m = medial(g);
        let f_abstract = underlying_abstract(&m.graph);
        let n = m.vertex_count();
        crate::ribbon_core::check(crate::ribbon_core::Bound::CycleFamilyVertices, "vertex count", n)?;
        for code in 0..6usize.pow(n as u32) {
            let mut rest = code;
            let state = ArrowMarkedState(
                (0..n)
                    .map(|_| {
                        let s = MarkedVertexState::all()[rest % 6];
                        rest /= 6;
                        s
                    })
                    .collect(),
            );
            let h = m.cycle_family_graph(&state)?;
            let hm = medial(&h).graph;
            if !is_isomorphic(&underlying_abstract(&hm), &f_abstract) {
                failures.push(format!("state {} gives {h}", state.describe(&m.origin)));
            }
            if state.is_duality_state() && !equivalent(&hm, &m.graph, Level::Map(MapMode::Unoriented)) {
                failures.push(format!("duality state {} gives a medial that is not a twist of F", state.describe(&m.origin)));
            }
        }
        Ok(failures)
    })
}

pub(super) fn qsd(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |i, g| {
        let mut failures = Vec::new();
        let mut rng = rng_for(i);
        let labels = g.labels();
        let w = symbolic_weights(&labels);
        let q = transition_statesum(g, &w)?;
        for _ in 0..20 {
            let gamma = random_gamma(&labels, &mut rng);
            let h = apply(g, &gamma)?;
            let qh = transition_statesum(&h, &permute_weights(&w, &gamma))?;
            if qh != q {
                failures.push(format!("Γ = {gamma}: {q} vs {qh}"));
            }
        }
        Ok(failures)
    })
}

pub(super) fn q_recursion(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let labels = g.labels();
        let w = symbolic_weights(&labels);
        let (sum, rec) = (transition_statesum(g, &w)?, transition_recursive(g, &w)?);
        if sum != rec {
            failures.push(format!("state sum {sum}, recursion {rec}"));
        }
        let ones = |h: &ArrowPresentation| transition_statesum(h, &uniform_weights(&h.labels(), &WeightTriple::ints(1, 1, 1)));
        let base = ones(g)?;
        for h in orbit(g, &Subgroup::Full.moves())? {
            let qh = ones(&h)?;
            if qh != base {
                failures.push(format!("Q(·; (1,1,1)) differs on twisted dual {h}: {qh} vs {base}"));
            }
        }
        Ok(failures)
    })
}

pub(super) fn penrose_routes(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let (w, s) = (penrose_by_weights(g)?, penrose_by_subsets(g)?);
        if w != s {
            failures.push(format!("weights {w}, subsets {s}"));
        }
        if plane(g) {
            let c = penrose_by_chromatic_sum(g)?;
            if c != s {
                failures.push(format!("chromatic sum {c}, subsets {s}"));
            }
        }
        Ok(failures)
    })
}

/// A loop whose two arrows are adjacent on their circle and point the same way.
fn trivial_untwisted_loop(g: &ArrowPresentation, e: &EdgeLabel) -> bool {
    g.circles().iter().any(|c| {
        let n = c.len();
        (0..n).any(|i| {
            let (a, b) = (&c[i], &c[(i + 1) % n]);
            n >= 2 && a.label == *e && b.label == *e && a.dir == b.dir
        })
    })
}

pub(super) fn penrose_identities(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let p = penrose(g)?;
        let labels = g.labels();
        for a in subsets(&labels) {
            let sign = if a.len() % 2 == 0 { 1 } else { -1 };
            let q = k(sign) * penrose(&twist_set(g, &a)?)?;
            if q != p {
                failures.push(format!("twisting {a:?}: {q} vs {p}"));
            }
        }
        let lambda = v(Var::Lambda);
        for e in &labels {
            let pd = penrose(&partial_dual(g, e)?)?;
            let pdt = penrose(&at(g, e, GroupElement::DeltaTau)?)?;
            if &pd - &pdt != p {
                failures.push(format!("P(G^δ({e})) − P(G^δτ({e})) = {}", &pd - &pdt));
            }
            let p_contract = penrose(&contract(g, e)?)?;
            let p_twist_contract = penrose(&contract(&twist(g, e)?, e)?)?;
            if &p_contract - &p_twist_contract != p {
                failures.push(format!("P(G/{e}) − P(G^τ({e})/{e}) = {}", &p_contract - &p_twist_contract));
            }
            let td = at(g, e, GroupElement::TauDelta)?;
            let p_td_contract = penrose(&contract(&td, e)?)?;
            if &p_contract - &p_td_contract != p {
                failures.push(format!("P(G/{e}) − P(G^τδ({e})/{e}) = {}", &p_contract - &p_td_contract));
            }
            let p_td_delete = penrose(&td.delete_edge(e)?)?;
            if &p_td_delete - &p_td_contract != p {
                failures.push(format!("P(G^τδ({e})−{e}) − P(G^τδ({e})/{e}) = {}", &p_td_delete - &p_td_contract));
            }
            let p_delete = penrose(&g.delete_edge(e)?)?;
            if &p_delete - &p_contract != pdt {
                failures.push(format!("P(G−{e}) − P(G/{e}) = {} but P(G^δτ({e})) = {pdt}", &p_delete - &p_contract));
            }
            if trivial_untwisted_loop(g, e) {
                let q = (&lambda - &k(1)) * p_delete;
                if q != p {
                    failures.push(format!("(λ−1) P(G−{e}) = {q}"));
                }
            }
        }
        Ok(failures)
    })
}

fn valuation_mismatch(g: &ArrowPresentation, k: usize) -> Result<Option<String>> {
    let count = count_admissible_valuations(g, k, ValuationRule::Strict)?;
    let p = at_lambda(&penrose(g)?, k as i64)?;
    let count = rational(count as i64);
    Ok((count != p).then(|| format!("k = {k}: {count} valuations, P = {p}")))
}

/// Largest edge count used by the non-plane witness searches.
const SEARCH_EDGES: usize = 2;

pub(super) fn addval(graphs: &[ArrowPresentation]) -> Outcome {
    let (n, mut failures) = each(graphs, plane, |_, g| {
        let mut out = Vec::new();
        for k in [2, 3] {
            out.extend(valuation_mismatch(g, k)?);
        }
        Ok(out)
    });
    let witness = graphs
        .iter()
        .filter(|g| g.edge_count() <= SEARCH_EDGES && !plane(g))
        .find(|g| matches!(valuation_mismatch(g, 3), Ok(Some(_))));
    if witness.is_none() {
        failures.push(Failure {
            witness: String::new(),
            detail: "no non-plane graph violates the valuation count".into(),
        });
    }
    (n, failures)
}

pub(super) fn pac(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, plane, |_, g| {
        let (c, p) = (penrose_by_chromatic_sum(g)?, penrose(g)?);
        Ok(if c == p { vec![] } else { vec![format!("chromatic sum {c}, P = {p}")] })
    })
}

/// Degree in λ and the coefficient of the top power.
fn leading_term(p: &LaurentPoly) -> Result<Option<(i64, BigRational)>> {
    let Some(top) = p.max_doubled(&Var::Lambda) else {
        return Ok(None);
    };
    let lead = p.filter(|m| m.doubled(&Var::Lambda) == top);
    Ok(Some((top / 2, at_lambda(&lead, 1)?)))
}

/// The five plane properties; `None` when the hypothesis does not apply.
fn plane_properties(g: &ArrowPresentation) -> Result<[Option<bool>; 5]> {
    let p = penrose(g)?;
    let r = invariants(g);
    let abs = underlying_abstract(g);
    let eulerian = abs.is_eulerian();
    let pow2 = |n: usize| rational(1i64 << n);
    let p1 = if eulerian { Some(at_lambda(&p, 2)? == pow2(r.v)) } else { None };
    let degrees = abs.degrees();
    let mut p2 = None;
    for (a, b, e) in &abs.edges {
        if a != b && (degrees[*a] == 2 || degrees[*b] == 2) {
            let holds = p == k(2) * penrose(&contract(g, e)?)?;
            p2 = Some(p2.unwrap_or(true) && holds);
        }
    }
    let lead = leading_term(&p)?;
    let p3 = lead.as_ref().map(|(_, c)| c.is_positive());
    let p4 = lead.as_ref().map(|(d, _)| *d == r.f as i64);
    let sign = if r.f.is_multiple_of(2) { rational(1) } else { rational(-1) };
    let p5 = if eulerian { Some(at_lambda(&p, -1)? == sign * pow2(r.e)) } else { None };
    Ok([p1, p2, p3, p4, p5])
}

const PROPERTY_NAMES: [&str; 5] = [
    "Eulerian ⇒ P(G;2) = 2^v",
    "degree-2 vertex on non-loop e ⇒ P(G) = 2P(G/e)",
    "leading coefficient positive",
    "degree of P equals f",
    "Eulerian ⇒ P(G;−1) = (−1)^f 2^e",
];

pub(super) fn aigner(graphs: &[ArrowPresentation]) -> Outcome {
    let (n, mut failures) = each(graphs, plane, |_, g| {
        let mut out = Vec::new();
        let p = penrose(g)?;
        let chi = chromatic(&underlying_abstract(&geometric_dual(g)));
        for k in [2, 3, 4] {
            let (c, q) = (at_lambda(&chi, k)?, at_lambda(&p, k)?);
            if c > q {
                out.push(format!("χ(G*; {k}) = {c} > P(G; {k}) = {q}"));
            }
        }
        for (name, holds) in PROPERTY_NAMES.iter().zip(plane_properties(g)?) {
            if holds == Some(false) {
                out.push(format!("plane graph violates `{name}`"));
            }
        }
        Ok(out)
    });
    let mut found = [false; 5];
    for g in graphs.iter().filter(|g| g.edge_count() <= SEARCH_EDGES && !plane(g)) {
        if let Ok(props) = plane_properties(g) {
            for (f, holds) in found.iter_mut().zip(props) {
                *f |= holds == Some(false);
            }
        }
    }
    for (name, f) in PROPERTY_NAMES.iter().zip(found) {
        if !f {
            failures.push(Failure {
                witness: String::new(),
                detail: format!("no non-plane graph violates `{name}`"),
            });
        }
    }
    (n, failures)
}

/// `Z(G; 1, b, c, 1)`.
fn z_one(g: &ArrowPresentation) -> Result<LaurentPoly> {
    substitute(&topochromatic(g)?, vec![(Var::A, k(1)), (Var::W, k(1))])
}

pub(super) fn qmbr(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let q = transition_statesum(g, &topochromatic_weights(&g.labels()))?.rename(&Var::T, Var::C);
        let z = z_one(g)?;
        Ok(if q == z { vec![] } else { vec![format!("Q = {q}, Z = {z}")] })
    })
}

pub(super) fn zpd(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let z = z_one(g)?;
        for a in subsets(&g.labels()) {
            let h = partial_dual_set(g, &a)?;
            let b = |e: &EdgeLabel| v(Var::B(e.clone()));
            let inverted = a
                .iter()
                .map(|e| Ok((Var::B(e.clone()), b(e).inverse()?)))
                .collect::<Result<Vec<_>>>()?;
            let zh = substitute(&z_one(&h)?, inverted)?;
            let prefactor: LaurentPoly = a.iter().map(b).product();
            let rhs = prefactor * zh;
            if rhs != z {
                failures.push(format!("A = {a:?}: {rhs} vs {z}"));
            }
        }
        Ok(failures)
    })
}

pub(super) fn z_delcon(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let z = topochromatic(g)?;
        for (a, b, e) in underlying_abstract(g).edges {
            if a == b {
                continue;
            }
            let rhs = topochromatic(&g.delete_edge(&e)?)? + v(Var::B(e.clone())) * topochromatic(&contract(g, &e)?)?;
            if rhs != z {
                failures.push(format!("edge {e}: {rhs} vs {z}"));
            }
        }
        Ok(failures)
    })
}

pub(super) fn cpr(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let mut failures = Vec::new();
        let p = penrose(g)?;
        let h = apply(g, &GammaAssignment::uniform(&g.labels(), GroupElement::TauDelta))?;
        let r = invariants(&h);
        let br = bollobas_riordan(&h)?;
        for lambda in [2i64, 3, 4] {
            let point = BTreeMap::from([
                (Var::X, rational(1 - lambda)),
                (Var::Y, rational(-lambda)),
                (Var::Z, BigRational::new(1.into(), lambda.into())),
                (Var::W, rational(1)),
            ]);
            let sign = if r.v.is_multiple_of(2) { rational(1) } else { rational(-1) };
            let rhs = num_traits::pow(rational(-lambda), r.k) * sign * br.eval_at(&point)?;
            let lhs = at_lambda(&p, lambda)?;
            if lhs != rhs {
                failures.push(format!("λ = {lambda}: P = {lhs}, right side {rhs}"));
            }
        }
        Ok(failures)
    })
}

pub(super) fn lv_translation(graphs: &[ArrowPresentation]) -> Outcome {
    each(
        graphs,
        |g| invariants(g).orientable,
        |_, g| {
            let eg = invariants(g).euler_genus as i64;
            let (y, z) = (v(Var::Y), v(Var::Z));
            let yz = &y * &z;
            let l = substitute(&las_vergnas(g)?, vec![(Var::Y, &y + &k(1)), (Var::Z, yz.inverse()?)])?;
            let lhs = yz.pow(eg as u32) * l;
            let rhs = substitute(&bollobas_riordan(g)?, vec![(Var::W, k(1))])?;
            Ok(if lhs == rhs { vec![] } else { vec![format!("{lhs} vs {rhs}")] })
        },
    )
}

pub(super) fn zzhat(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |i, g| {
        let mut failures = Vec::new();
        let mut rng = rng_for(i);
        let z = topochromatic(g)?;
        for _ in 0..4 {
            let s = random_signs(g, &mut rng);
            let mut subst = vec![(Var::A, v(Var::Q)), (Var::W, k(1))];
            let mut prefactor = LaurentPoly::one();
            for (e, sign) in &s.signs {
                let alpha = v(Var::Alpha(e.clone()));
                let beta = match sign {
                    Sign::Plus => alpha.clone(),
                    Sign::Minus => {
                        prefactor = prefactor * LaurentPoly::var_doubled(Var::Q, -1) * alpha.clone();
                        v(Var::Q) * alpha.inverse()?
                    }
                };
                subst.push((Var::B(e.clone()), beta));
            }
            let rhs = prefactor * substitute(&z, subst)?;
            let lhs = signed_topochromatic(&s)?;
            if lhs != rhs {
                failures.push(format!("signs {s}: {lhs} vs {rhs}"));
            }
        }
        Ok(failures)
    })
}

pub(super) fn sbr_invariance(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |i, g| {
        let mut failures = Vec::new();
        let mut rng = rng_for(i);
        let at_one = |s: &SignedRibbonGraph| substitute(&signed_topochromatic(s)?, vec![(Var::Q, k(1))]);
        for _ in 0..2 {
            let s = random_signs(g, &mut rng);
            let base = at_one(&s)?;
            for a in subsets(&g.labels()) {
                let d = s.partial_dual(&a)?;
                let other = at_one(&d)?;
                if other != base {
                    failures.push(format!("{s} dual at {a:?}: {other} vs {base}"));
                }
            }
        }
        Ok(failures)
    })
}

/// The star `K_{1,n}` drawn in the plane.
fn star(n: usize) -> ArrowPresentation {
    let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let centre = names.iter().map(|s| format!("{s}+")).collect::<Vec<_>>().join(" ");
    let leaves: String = names.iter().map(|s| format!("({s}+)")).collect();
    format!("({centre}){leaves}").parse().expect("valid star")
}

/// `G` with the cyclic order of every circle in `flip` reversed, arrows unchanged.
fn reverse_rotations(g: &ArrowPresentation, flip: &[bool]) -> Result<ArrowPresentation> {
    let circles = g
        .circles()
        .iter()
        .zip(flip)
        .map(|(c, &f)| if f { c.iter().rev().cloned().collect() } else { c.clone() })
        .collect();
    ArrowPresentation::new(circles)
}

/// Twisting every edge of a bipartite graph is undone by flipping the discs
/// of one colour class, which also reverses their rotations. So `G^{τ(E)}`
/// is `G` with one class's rotations reversed, and equals `G` exactly when
/// that reversal does.
pub(super) fn bipartite_twist(graphs: &[ArrowPresentation]) -> Outcome {
    let mut all_graphs = graphs.to_vec();
    all_graphs.extend((1..=4).map(star));
    each(&all_graphs, all, |_, g| {
        let mut failures = Vec::new();
        let twisted = twist_set(g, &g.labels())?;
        let fixed = equivalent_labelled(&twisted, g);
        match underlying_abstract(g).two_colouring() {
            None if fixed => failures.push("fixed by τ(E) but not bipartite".into()),
            None => {}
            Some(side) => {
                let reversed = reverse_rotations(g, &side)?;
                if !equivalent_labelled(&twisted, &reversed) {
                    failures.push(format!("G^τ(E) = {twisted} differs from {reversed}"));
                }
                if fixed != equivalent_labelled(&reversed, g) {
                    failures.push(format!("fixed by τ(E): {fixed}"));
                }
            }
        }
        Ok(failures)
    })
}

pub(super) fn quasitree_bound(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, all, |_, g| {
        let one_vertex = orbit(g, &Subgroup::Delta.moves())?
            .iter()
            .filter(|h| h.vertex_count() == 1)
            .count();
        let labels = g.labels();
        let quasi_trees = subsets(&labels)
            .filter(|a| invariants(&g.retain_edges(|l| a.contains(l))).f == 1)
            .count();
        Ok(if one_vertex <= quasi_trees {
            vec![]
        } else {
            vec![format!("{one_vertex} one-vertex partial duals, {quasi_trees} spanning quasi-trees")]
        })
    })
}

pub(super) fn planemax(graphs: &[ArrowPresentation]) -> Outcome {
    each(graphs, plane, |_, g| {
        let most = |s: Subgroup| -> Result<usize> {
            Ok(orbit(g, &s.moves())?.iter().map(|h| h.vertex_count()).max().unwrap_or(0))
        };
        let (full, delta) = (most(Subgroup::Full)?, most(Subgroup::Delta)?);
        Ok(if full == delta {
            vec![]
        } else {
            vec![format!("max vertices {full} over the orbit, {delta} over partial duals")]
        })
    })
}
