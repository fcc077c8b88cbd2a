//! Canonical forms and equivalence tests.
//!
//! Embedded equivalence is generated by relabelling, flipping both arrows of
//! a label, rotating a circle, and reflecting a single circle (reversing its
//! cyclic order and every arrow on it). The canonical form is found by
//! exhaustive search over traversal roots: from a chosen arrow and reading
//! direction, circles are read in breadth-first order, each newly reached
//! circle starting at the partner arrow of the label that reached it and read
//! in the direction that makes that arrow forward after normalisation. Labels
//! are numbered by first appearance and flipped so that their first arrow
//! reads forward. The least code over all roots of a connected component is
//! a complete invariant of that component; the graph's form is the sorted
//! list of its component codes.

use std::collections::{BTreeMap, VecDeque};

use super::structure::{is_isomorphic, underlying_abstract};
use super::surface::{components, Indexed};
use crate::ribbon_core::{Arrow, ArrowPresentation, Direction, EdgeLabel};

/// Hashable canonical code: one code per connected component, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub(crate) Vec<Vec<u32>>);

/// Equivalence levels for [`equivalent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Embedded,
    Map(MapMode),
    Abstract,
}

/// How orientation is treated when comparing combinatorial maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MapMode {
    /// Each circle is an unoriented cyclic sequence: maps agree when they
    /// differ by relabelling, rotations and reflections of single circles.
    /// Two embedded graphs have equal maps in this mode exactly when one is a
    /// partial twist of the other.
    #[default]
    Unoriented,
    /// Circles keep their cyclic orientation up to one reflection applied to
    /// every circle at once.
    GlobalReflection,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Labels {
    /// Renumber labels by first appearance.
    Relabel,
    /// Keep the original label indices.
    Keep,
}

struct Reader<'a> {
    ind: &'a Indexed,
    occ: Vec<[(usize, usize); 2]>,
}

struct Reading {
    code: Vec<u32>,
    /// Original label index to local canonical index.
    order: Vec<(usize, u32)>,
}

impl<'a> Reader<'a> {
    fn new(ind: &'a Indexed) -> Self {
        Reader {
            ind,
            occ: ind.occurrences(),
        }
    }

    fn partner(&self, label: usize, at: (usize, usize)) -> (usize, usize) {
        let [x, y] = self.occ[label];
        if x == at {
            y
        } else {
            x
        }
    }

    /// Reads the component of `start` from the given root. Returns `None` as
    /// soon as the code exceeds `bound`.
    fn read(&self, start: (usize, usize, bool), labels: Labels, bound: Option<&[u32]>) -> Option<Reading> {
        let n_labels = self.ind.labels.len();
        let mut new_index: Vec<Option<u32>> = vec![None; n_labels];
        let mut flip = vec![false; n_labels];
        let mut seen = vec![false; self.ind.circles.len()];
        let mut queue = VecDeque::new();
        let mut code = Vec::new();
        let mut order = Vec::new();
        let mut next = 0u32;
        let mut tight = bound.is_some();
        let push = |code: &mut Vec<u32>, token: u32, tight: &mut bool| -> bool {
            if *tight {
                let b = bound.expect("bound present");
                let pos = code.len();
                match b.get(pos) {
                    Some(&bt) if token > bt => return false,
                    Some(&bt) if token < bt => *tight = false,
                    Some(_) => {}
                    None => return false,
                }
            }
            code.push(token);
            true
        };
        seen[start.0] = true;
        queue.push_back(start);
        while let Some((c, p, rev)) = queue.pop_front() {
            let circle = &self.ind.circles[c];
            let m = circle.len();
            if !push(&mut code, m as u32, &mut tight) {
                return None;
            }
            for s in 0..m {
                let i = if rev { (p + m - s) % m } else { (p + s) % m };
                let (l, fwd) = circle[i];
                let eff = fwd ^ rev;
                let idx = match new_index[l] {
                    Some(idx) => idx,
                    None => {
                        let idx = match labels {
                            Labels::Relabel => {
                                next += 1;
                                next - 1
                            }
                            Labels::Keep => l as u32,
                        };
                        new_index[l] = Some(idx);
                        flip[l] = !eff;
                        order.push((l, idx));
                        idx
                    }
                };
                let reads_forward = eff ^ flip[l];
                if !push(&mut code, 2 * idx + u32::from(!reads_forward), &mut tight) {
                    return None;
                }
                let (c2, i2) = self.partner(l, (c, i));
                if !seen[c2] {
                    seen[c2] = true;
                    let f2 = self.ind.circles[c2][i2].1;
                    queue.push_back((c2, i2, !(f2 ^ flip[l])));
                }
            }
        }
        Some(Reading { code, order })
    }

    /// Least reading over every root in the component containing `circle`.
    fn best(&self, circle_ids: &[usize], labels: Labels) -> Reading {
        let mut best: Option<Reading> = None;
        for &c in circle_ids {
            let m = self.ind.circles[c].len();
            for p in 0..m {
                for rev in [false, true] {
                    let bound = best.as_ref().map(|b| b.code.as_slice());
                    if let Some(r) = self.read((c, p, rev), labels, bound) {
                        if best.as_ref().is_none_or(|b| r.code < b.code) {
                            best = Some(r);
                        }
                    }
                }
            }
        }
        best.expect("component has at least one arrow")
    }
}

/// Per-component readings, sorted by code.
fn component_readings(ind: &Indexed, labels: Labels) -> Vec<Reading> {
    let (count, comp) = components(ind);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (c, &k) in comp.iter().enumerate() {
        members[k].push(c);
    }
    let reader = Reader::new(ind);
    let mut readings: Vec<Reading> = members
        .iter()
        .map(|circles| {
            if circles.len() == 1 && ind.circles[circles[0]].is_empty() {
                Reading {
                    code: vec![0],
                    order: Vec::new(),
                }
            } else {
                reader.best(circles, labels)
            }
        })
        .collect();
    readings.sort_by(|a, b| a.code.cmp(&b.code));
    readings
}

pub(crate) fn form_indexed(ind: &Indexed) -> CanonicalForm {
    CanonicalForm(
        component_readings(ind, Labels::Relabel)
            .into_iter()
            .map(|r| r.code)
            .collect(),
    )
}

/// Canonical code for hashing embedded-equivalence classes.
pub fn canonical_code(ap: &ArrowPresentation) -> CanonicalForm {
    form_indexed(&Indexed::from_ap(ap))
}

fn decode(readings: &[Reading], name: impl Fn(u32, usize) -> EdgeLabel) -> Vec<Vec<Arrow>> {
    let mut circles = Vec::new();
    let mut offset = 0usize;
    for r in readings {
        let mut k = 0;
        while k < r.code.len() {
            let m = r.code[k] as usize;
            k += 1;
            let mut circle = Vec::with_capacity(m);
            for _ in 0..m {
                let token = r.code[k];
                k += 1;
                circle.push(Arrow::new(
                    name(token / 2, offset),
                    Direction::from_forward(token % 2 == 0),
                ));
            }
            circles.push(circle);
        }
        offset += r.order.len();
    }
    circles
}

fn canonical_name(index: usize) -> EdgeLabel {
    EdgeLabel::new(format!("e{}", index + 1)).expect("valid label")
}

/// Least representative of the embedded-equivalence class, with labels `e1, e2, …`.
pub fn canonical_embedded(ap: &ArrowPresentation) -> ArrowPresentation {
    canonical_with_mapping(ap).0
}

/// Canonical representative together with the map from the original labels
/// to the canonical ones.
pub fn canonical_with_mapping(ap: &ArrowPresentation) -> (ArrowPresentation, BTreeMap<EdgeLabel, EdgeLabel>) {
    let ind = Indexed::from_ap(ap);
    let readings = component_readings(&ind, Labels::Relabel);
    let circles = decode(&readings, |local, offset| canonical_name(local as usize + offset));
    let mut mapping = BTreeMap::new();
    let mut offset = 0usize;
    for r in &readings {
        for &(orig, local) in &r.order {
            mapping.insert(ind.labels[orig].clone(), canonical_name(local as usize + offset));
        }
        offset += r.order.len();
    }
    (ArrowPresentation::from_valid(circles), mapping)
}

/// Least representative of the class generated by label-preserving moves
/// only: flipping both arrows of a label, rotating a circle, reflecting a circle.
pub fn canonical_labelled(ap: &ArrowPresentation) -> ArrowPresentation {
    let ind = Indexed::from_ap(ap);
    let readings = component_readings(&ind, Labels::Keep);
    let circles = decode(&readings, |idx, _| ind.labels[idx as usize].clone());
    ArrowPresentation::from_valid(circles)
}

/// Equivalence that keeps every edge label fixed.
pub fn equivalent_labelled(a: &ArrowPresentation, b: &ArrowPresentation) -> bool {
    a.labels() == b.labels() && canonical_labelled(a) == canonical_labelled(b)
}

/// Canonical code of the underlying combinatorial map.
fn map_form(ind: &Indexed, mode: MapMode) -> Vec<Vec<u32>> {
    let (count, comp) = components(ind);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (c, &k) in comp.iter().enumerate() {
        members[k].push(c);
    }
    let occ = ind.occurrences();
    // Reads a component with fixed per-circle orientations given by `reflected`.
    let read = |start: (usize, usize), reflected: &dyn Fn(usize) -> bool| -> Vec<u32> {
        let mut new_index: Vec<Option<u32>> = vec![None; ind.labels.len()];
        let mut seen = vec![false; ind.circles.len()];
        let mut queue = VecDeque::new();
        let mut code = Vec::new();
        let mut next = 0;
        seen[start.0] = true;
        queue.push_back(start);
        while let Some((c, p)) = queue.pop_front() {
            let circle = &ind.circles[c];
            let m = circle.len();
            let rev = reflected(c);
            code.push(m as u32);
            for s in 0..m {
                let i = if rev { (p + m - s) % m } else { (p + s) % m };
                let l = circle[i].0;
                let idx = *new_index[l].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                code.push(idx);
                let [x, y] = occ[l];
                let (c2, i2) = if x == (c, i) { y } else { x };
                if !seen[c2] {
                    seen[c2] = true;
                    queue.push_back((c2, i2));
                }
            }
        }
        code
    };
    let component_best = |circles: &[usize], masks: &[Vec<bool>]| -> Vec<u32> {
        if circles.len() == 1 && ind.circles[circles[0]].is_empty() {
            return vec![0];
        }
        let mut best: Option<Vec<u32>> = None;
        for mask in masks {
            let reflected = |c: usize| mask[circles.iter().position(|&x| x == c).expect("member")];
            for &c in circles {
                for p in 0..ind.circles[c].len() {
                    let code = read((c, p), &reflected);
                    if best.as_ref().is_none_or(|b| &code < b) {
                        best = Some(code);
                    }
                }
            }
        }
        best.expect("nonempty component")
    };
    let sorted = |choose: &dyn Fn(usize) -> Vec<Vec<bool>>| -> Vec<Vec<u32>> {
        let mut codes: Vec<Vec<u32>> = members
            .iter()
            .map(|circles| component_best(circles, &choose(circles.len())))
            .collect();
        codes.sort();
        codes
    };
    match mode {
        MapMode::Unoriented => sorted(&|n| {
            (0..1usize << n)
                .map(|bits| (0..n).map(|i| bits >> i & 1 == 1).collect())
                .collect()
        }),
        MapMode::GlobalReflection => {
            let plain = sorted(&|n| vec![vec![false; n]]);
            let mirrored = sorted(&|n| vec![vec![true; n]]);
            plain.min(mirrored)
        }
    }
}

/// Equivalence at the requested level.
pub fn equivalent(a: &ArrowPresentation, b: &ArrowPresentation, level: Level) -> bool {
    match level {
        Level::Embedded => canonical_code(a) == canonical_code(b),
        Level::Map(mode) => {
            map_form(&Indexed::from_ap(a), mode) == map_form(&Indexed::from_ap(b), mode)
        }
        Level::Abstract => is_isomorphic(&underlying_abstract(a), &underlying_abstract(b)),
    }
}
