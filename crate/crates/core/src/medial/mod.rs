//! Medial graphs with their canonical checkerboard colouring, vertex states,
//! arrow-marked states, cycle family graphs, Tait graphs and admissible
//! valuations.
//!
//! A 4-regular graph is handled as an arrow presentation whose nonempty
//! circles all carry four arrows. The four positions `0, 1, 2, 3` on a
//! vertex circle are its half-edges in cyclic order; pairings and strand
//! arrows are expressed in these positions. The pairing `{0,1},{2,3}` is
//! called the black split, `{1,2},{3,0}` the white split and `{0,2},{1,3}`
//! the crossing. Medial graphs are built so that these names agree with the
//! canonical colouring.

mod states;
mod valuations;

pub use states::{apply_state_action, ArrowMarkedState, MarkedVertexState};
pub use valuations::{count_admissible_valuations, ValuationRule};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ribbon_core::canonical::form_indexed;
use crate::ribbon_core::surface::{Endpoints, Indexed};
use crate::ribbon_core::{
    canonical_embedded, check, delete_and_twist, Arrow, ArrowPresentation, Bound, Direction,
    EdgeLabel,
};
use crate::{Error, Result};

/// One of the three ways of pairing the four half-edges at a 4-valent vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexState {
    WhiteSplit,
    BlackSplit,
    Crossing,
}

impl VertexState {
    /// In weight order: white, black, crossing.
    pub const ALL: [VertexState; 3] = [VertexState::WhiteSplit, VertexState::BlackSplit, VertexState::Crossing];

    /// Position in a weight triple (white 0, black 1, crossing 2).
    pub fn index(self) -> usize {
        match self {
            VertexState::WhiteSplit => 0,
            VertexState::BlackSplit => 1,
            VertexState::Crossing => 2,
        }
    }

    /// The two pairs of positions joined by this state.
    pub fn pairs(self) -> [(u8, u8); 2] {
        match self {
            VertexState::BlackSplit => [(0, 1), (2, 3)],
            VertexState::WhiteSplit => [(1, 2), (3, 0)],
            VertexState::Crossing => [(0, 2), (1, 3)],
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            VertexState::WhiteSplit => "wh",
            VertexState::BlackSplit => "bl",
            VertexState::Crossing => "cr",
        }
    }
}

impl fmt::Display for VertexState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for VertexState {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wh" => Ok(VertexState::WhiteSplit),
            "bl" => Ok(VertexState::BlackSplit),
            "cr" => Ok(VertexState::Crossing),
            other => Err(Error::Syntax {
                position: 0,
                message: format!("unknown vertex state `{other}`"),
            }),
        }
    }
}

/// Medial graph of an embedded graph together with its canonical colouring.
///
/// Circle `i < origin.len()` of `graph` is the medial vertex of edge
/// `origin[i]`; its four arrows sit, in order, at the tail and head of the
/// first arrow `A` of that edge and at the tail and head of its second arrow
/// `B`. Medial edges are the corners of the original graph. Remaining
/// circles are the isolated vertices of the original graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckerboardMedial {
    #[serde(serialize_with = "serialize_ap")]
    pub graph: ArrowPresentation,
    pub origin: Vec<EdgeLabel>,
    /// Colour of each boundary component of `graph`, in the order produced
    /// by [`crate::ribbon_core::boundary_components`]; `true` is black.
    pub face_black: Vec<bool>,
}

fn serialize_ap<S: serde::Serializer>(ap: &ArrowPresentation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ap.serialize())
}

fn corner_label(circle: usize, after: usize) -> EdgeLabel {
    EdgeLabel::new(format!("m{circle}_{after}")).expect("valid label")
}

/// Builds the medial graph: one 4-valent vertex per edge, one edge per
/// corner. At each medial vertex the corner leaving the exit point of an
/// arrow `X` is attached at the slot of that point, and the medial arrow
/// there is forward exactly when `X` is; so a medial edge is twisted exactly
/// when the two arrows bounding its corner differ in how they meet their
/// vertex disc, which transports orientations across the corner correctly.
pub fn medial(ap: &ArrowPresentation) -> CheckerboardMedial {
    let ind = Indexed::from_ap(ap);
    let ep = Endpoints::new(&ind);
    let n_edges = ind.labels.len();
    let mut slots: Vec<[Option<Arrow>; 4]> = vec![[None, None, None, None]; n_edges];
    // Slot of point `p` (tail 2a, head 2a + 1 of arrow a) at its medial vertex.
    let slot_of = |p: usize| -> (usize, usize) {
        let a = p / 2;
        let label = ep.arrow_label[a];
        let second = ep.label_arrows[label][1] == a;
        (label, 2 * usize::from(second) + p % 2)
    };
    for p in 0..ep.arc_partner.len() {
        let corner = ep.arc_corner[p];
        let name = corner_label(corner.circle, corner.after);
        let (label, slot) = slot_of(p);
        let dir = Direction::from_forward(ep.arrow_forward[p / 2]);
        slots[label][slot] = Some(Arrow::new(name, dir));
    }
    let mut circles: Vec<Vec<Arrow>> = slots
        .into_iter()
        .map(|s| s.into_iter().map(|a| a.expect("every slot has one corner")).collect())
        .collect();
    circles.extend(std::iter::repeat_n(Vec::new(), ep.empty_circles.len()));
    let graph = ArrowPresentation::from_valid(circles);
    let colouring = checkerboard_colouring(&graph).expect("medial graphs are checkerboard colourable");
    let face_black = orient_colouring(&graph, colouring, n_edges);
    CheckerboardMedial {
        graph,
        origin: ind.labels.clone(),
        face_black,
    }
}

/// Chooses, per connected component, the colouring in which the corner
/// between positions 0 and 1 of a medial vertex is black; isolated vertices
/// are black.
fn orient_colouring(graph: &ArrowPresentation, mut colouring: Vec<bool>, n_vertices: usize) -> Vec<bool> {
    let ind = Indexed::from_ap(graph);
    let ep = Endpoints::new(&ind);
    let walks = ep.trace(|_| VertexState::WhiteSplit);
    let face_of = face_index(&walks);
    let (_, comp) = crate::ribbon_core::surface::components(&ind);
    let mut face_comp = vec![usize::MAX; walks.len()];
    for (i, w) in walks.iter().enumerate() {
        face_comp[i] = comp[w[0].circle];
    }
    let mut want: BTreeMap<usize, bool> = BTreeMap::new();
    for v in 0..n_vertices {
        let f = face_of[&(v, 0)];
        want.entry(comp[v]).or_insert(colouring[f]);
    }
    for (f, c) in colouring.iter_mut().enumerate() {
        match want.get(&face_comp[f]) {
            Some(&black_is) => *c = *c == black_is,
            None => *c = true,
        }
    }
    colouring
}

fn face_index(walks: &[Vec<crate::ribbon_core::Corner>]) -> BTreeMap<(usize, usize), usize> {
    let mut face_of = BTreeMap::new();
    for (i, w) in walks.iter().enumerate() {
        for c in w {
            face_of.insert((c.circle, c.after), i);
        }
    }
    face_of
}

/// Face 2-colouring of a graph in which the faces on the two sides of every
/// edge receive different colours, if one exists. Colours are indexed like
/// the walks of [`crate::ribbon_core::boundary_components`].
fn checkerboard_colouring(graph: &ArrowPresentation) -> Option<Vec<bool>> {
    let ind = Indexed::from_ap(graph);
    let ep = Endpoints::new(&ind);
    let walks = ep.trace(|_| VertexState::WhiteSplit);
    let face_of = face_index(&walks);
    let point_face = |p: usize| face_of[&(ep.arc_corner[p].circle, ep.arc_corner[p].after)];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); walks.len()];
    for &[a, b] in &ep.label_arrows {
        // The long sides of the band start at the heads of its two arrows.
        let (f1, f2) = (point_face(2 * a + 1), point_face(2 * b + 1));
        if f1 == f2 {
            return None;
        }
        adj[f1].push(f2);
        adj[f2].push(f1);
    }
    let mut colour: Vec<Option<bool>> = vec![None; walks.len()];
    for s in 0..walks.len() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(true);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let cu = colour[u].expect("coloured");
            for &w in &adj[u] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => return None,
                    _ => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(|c| c.expect("coloured")).collect())
}

/// Indices of the 4-valent circles; fails unless every circle has 0 or 4 arrows.
pub fn four_valent_vertices(f: &ArrowPresentation) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, c) in f.circles().iter().enumerate() {
        match c.len() {
            0 => {}
            4 => out.push(i),
            n => return Err(Error::NotFourRegular(format!("circle {i} has {n} arrows"))),
        }
    }
    Ok(out)
}

/// Whether the faces of a 4-regular graph can be coloured black and white
/// so that the two sides of every edge differ; returns the colouring (per
/// boundary component, `true` black) when it exists.
pub fn is_checkerboard_colourable(f: &ArrowPresentation) -> Result<Option<Vec<bool>>> {
    four_valent_vertices(f)?;
    Ok(checkerboard_colouring(f))
}

/// Cycle family graph of a 4-regular graph for an arrow-marked state.
///
/// The state's strands at every vertex are joined along the edges of `f`
/// into disjoint closed curves. Each curve becomes a circle, and every
/// strand it runs along contributes an arrow labelled by that vertex,
/// forward when the curve follows the strand's arrow. Vertex `i` of the
/// state is the `i`-th 4-valent circle of `f` and is labelled
/// `vertex_labels[i]`; circles without arrows stay isolated vertices.
pub fn cycle_family_graph(
    f: &ArrowPresentation,
    vertex_labels: &[EdgeLabel],
    state: &ArrowMarkedState,
) -> Result<ArrowPresentation> {
    let vertices = four_valent_vertices(f)?;
    if state.0.len() != vertices.len() || vertex_labels.len() != vertices.len() {
        return Err(Error::IncompleteAssignment(format!(
            "{} vertices, {} states, {} labels",
            vertices.len(),
            state.0.len(),
            vertex_labels.len()
        )));
    }
    let ind = Indexed::from_ap(f);
    let occ = ind.occurrences();
    let mut vertex_of_circle = vec![usize::MAX; ind.circles.len()];
    for (v, &c) in vertices.iter().enumerate() {
        vertex_of_circle[c] = v;
    }
    // Strand id = 2 * vertex + k for the k-th strand of that vertex's state.
    let strands: Vec<[(u8, u8); 2]> = state.0.iter().map(|s| s.strands()).collect();
    let strand_at = |v: usize, pos: u8| -> (usize, bool) {
        let [s0, s1] = strands[v];
        if s0.0 == pos {
            (2 * v, true)
        } else if s0.1 == pos {
            (2 * v, false)
        } else if s1.0 == pos {
            (2 * v + 1, true)
        } else {
            debug_assert_eq!(s1.1, pos);
            (2 * v + 1, false)
        }
    };
    let mut used = vec![false; 2 * vertices.len()];
    let mut circles: Vec<Vec<Arrow>> = Vec::new();
    for start in 0..2 * vertices.len() {
        if used[start] {
            continue;
        }
        let mut circle = Vec::new();
        let (mut sid, mut forward) = (start, true);
        loop {
            used[sid] = true;
            let v = sid / 2;
            circle.push(Arrow::new(vertex_labels[v].clone(), Direction::from_forward(forward)));
            let (from, to) = strands[v][sid % 2];
            let exit = if forward { to } else { from };
            let (label, _) = ind.circles[vertices[v]][exit as usize];
            let [x, y] = occ[label];
            let here = (vertices[v], exit as usize);
            let (c2, i2) = if x == here { y } else { x };
            let (next, fwd) = strand_at(vertex_of_circle[c2], i2 as u8);
            if next == start && fwd {
                break;
            }
            sid = next;
            forward = fwd;
        }
        circles.push(circle);
    }
    circles.extend(std::iter::repeat_n(Vec::new(), f.isolated_count()));
    ArrowPresentation::new(circles)
}

/// Every cycle family graph of a 4-regular graph, as sorted canonical
/// representatives. With `duality_only`, only the flat black and white
/// splits are used at each vertex.
pub fn all_cycle_family_graphs(f: &ArrowPresentation, duality_only: bool) -> Result<Vec<ArrowPresentation>> {
    let vertices = four_valent_vertices(f)?;
    check(Bound::CycleFamilyVertices, "vertex count", vertices.len())?;
    let labels: Vec<EdgeLabel> = (0..vertices.len())
        .map(|i| EdgeLabel::new(format!("v{}", i + 1)).expect("valid label"))
        .collect();
    let choices: Vec<MarkedVertexState> = if duality_only {
        vec![
            MarkedVertexState::flat(VertexState::BlackSplit),
            MarkedVertexState::flat(VertexState::WhiteSplit),
        ]
    } else {
        MarkedVertexState::all().to_vec()
    };
    let n = vertices.len();
    let total = choices.len().pow(n as u32);
    let mut found = BTreeMap::new();
    for code in 0..total {
        let mut rest = code;
        let state = ArrowMarkedState(
            (0..n)
                .map(|_| {
                    let s = choices[rest % choices.len()];
                    rest /= choices.len();
                    s
                })
                .collect(),
        );
        let g = cycle_family_graph(f, &labels, &state)?;
        let ind = Indexed::from_ap(&g);
        found.entry(form_indexed(&ind)).or_insert(g);
    }
    let mut out: Vec<ArrowPresentation> = found.values().map(canonical_embedded).collect();
    out.sort_by_key(|g| g.serialize());
    Ok(out)
}

impl CheckerboardMedial {
    /// Number of medial vertices that come from edges.
    pub fn vertex_count(&self) -> usize {
        self.origin.len()
    }

    /// Cycle family graph with vertices labelled by their original edges.
    pub fn cycle_family_graph(&self, state: &ArrowMarkedState) -> Result<ArrowPresentation> {
        cycle_family_graph(&self.graph, &self.origin, state)
    }

    /// Black Tait graph: the cycle family graph of the all-black flat state.
    pub fn tait_black(&self) -> ArrowPresentation {
        self.cycle_family_graph(&ArrowMarkedState::uniform(
            MarkedVertexState::flat(VertexState::BlackSplit),
            self.vertex_count(),
        ))
        .expect("complete state")
    }

    /// White Tait graph: the cycle family graph of the all-white flat state.
    pub fn tait_white(&self) -> ArrowPresentation {
        self.cycle_family_graph(&ArrowMarkedState::uniform(
            MarkedVertexState::flat(VertexState::WhiteSplit),
            self.vertex_count(),
        ))
        .expect("complete state")
    }

    /// Number of closed curves of the given per-edge vertex states, traced
    /// through the medial graph itself.
    pub fn state_components(&self, states: &BTreeMap<EdgeLabel, VertexState>) -> Result<usize> {
        let ind = Indexed::from_ap(&self.graph);
        let occ = ind.occurrences();
        let per_vertex: Vec<VertexState> = self
            .origin
            .iter()
            .map(|l| {
                states
                    .get(l)
                    .copied()
                    .ok_or_else(|| Error::IncompleteAssignment(l.to_string()))
            })
            .collect::<Result<_>>()?;
        let partner_pos = |v: usize, pos: u8| -> u8 {
            let [p, q] = per_vertex[v].pairs();
            for (a, b) in [p, q] {
                if a == pos {
                    return b;
                }
                if b == pos {
                    return a;
                }
            }
            unreachable!("every position is paired")
        };
        let n = self.vertex_count();
        let mut seen: BTreeSet<(usize, u8)> = BTreeSet::new();
        let mut count = self.graph.vertex_count() - n;
        for v in 0..n {
            for pos in 0..4u8 {
                if seen.contains(&(v, pos)) {
                    continue;
                }
                count += 1;
                let (mut cv, mut cp) = (v, pos);
                loop {
                    let other = partner_pos(cv, cp);
                    seen.insert((cv, cp));
                    seen.insert((cv, other));
                    let (label, _) = ind.circles[cv][other as usize];
                    let [x, y] = occ[label];
                    let (nc, ni) = if x == (cv, other as usize) { y } else { x };
                    cv = nc;
                    cp = ni as u8;
                    if seen.contains(&(cv, cp)) {
                        break;
                    }
                }
            }
        }
        Ok(count)
    }
}

/// Number of state components `c(s)`: faces of the graph obtained by
/// deleting the edges in the black split and twisting those in the crossing.
pub fn state_components(ap: &ArrowPresentation, states: &BTreeMap<EdgeLabel, VertexState>) -> Result<usize> {
    for l in ap.labels() {
        if !states.contains_key(&l) {
            return Err(Error::IncompleteAssignment(l.to_string()));
        }
    }
    let deleted: Vec<EdgeLabel> = states
        .iter()
        .filter(|(_, s)| **s == VertexState::BlackSplit)
        .map(|(l, _)| l.clone())
        .collect();
    let twisted: Vec<EdgeLabel> = states
        .iter()
        .filter(|(_, s)| **s == VertexState::Crossing)
        .map(|(l, _)| l.clone())
        .collect();
    let h = delete_and_twist(ap, &deleted, &twisted)?;
    Ok(crate::ribbon_core::invariants(&h).f)
}

/// Number of state components computed from the per-edge pairings of arrow
/// endpoints, without building any intermediate graph.
pub(crate) fn state_components_indexed(ind: &Indexed, states: &[VertexState]) -> usize {
    Endpoints::new(ind).count(|l| states[l])
}

#[cfg(test)]
mod tests;
