//! Endpoint model of an arrow presentation.
//!
//! Arrow `a` (numbered circle by circle) owns two points: its tail `2a` and
//! its head `2a + 1`. Walking a circle along its orientation, the arc after
//! arrow `a` joins the point where `a` is left (its head when forward, its
//! tail when reversed) to the point where the next arrow is entered. Every
//! point lies on exactly one arc, so the arcs form a perfect matching on
//! points. Boundary components, state components and the partial dual are
//! all computed from this matching together with a second matching supplied
//! per edge.

use crate::medial::VertexState;
use crate::ribbon_core::{Arrow, ArrowPresentation, Direction, EdgeLabel};

/// Arrow presentation with labels replaced by indices into a sorted label list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Indexed {
    /// `(label index, forward)` per arrow, circle by circle.
    pub circles: Vec<Vec<(usize, bool)>>,
    /// Labels in lexicographic order.
    pub labels: Vec<EdgeLabel>,
}

impl Indexed {
    pub fn from_ap(ap: &ArrowPresentation) -> Self {
        let labels = ap.labels();
        let circles = ap
            .circles()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|a| {
                        let idx = labels.binary_search(&a.label).expect("label is present");
                        (idx, a.dir.is_forward())
                    })
                    .collect()
            })
            .collect();
        Indexed { circles, labels }
    }

    pub fn to_ap(&self) -> ArrowPresentation {
        ArrowPresentation::from_valid(
            self.circles
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|&(l, fwd)| Arrow::new(self.labels[l].clone(), Direction::from_forward(fwd)))
                        .collect()
                })
                .collect(),
        )
    }

    /// Positions `(circle, index)` of both arrows of every label.
    pub fn occurrences(&self) -> Vec<[(usize, usize); 2]> {
        let mut occ = vec![[(usize::MAX, usize::MAX); 2]; self.labels.len()];
        let mut seen = vec![0usize; self.labels.len()];
        for (c, circle) in self.circles.iter().enumerate() {
            for (i, &(l, _)) in circle.iter().enumerate() {
                occ[l][seen[l]] = (c, i);
                seen[l] += 1;
            }
        }
        occ
    }
}

/// A corner of a vertex: the arc of circle `circle` following the arrow at
/// position `after`. For an isolated vertex the single corner has `after = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Corner {
    pub circle: usize,
    pub after: usize,
}

/// Arrows, points and arcs of an indexed presentation.
pub(crate) struct Endpoints {
    /// Label of each arrow.
    pub arrow_label: Vec<usize>,
    /// Forward flag of each arrow.
    pub arrow_forward: Vec<bool>,
    /// Global arrow indices of the two arrows of each label.
    pub label_arrows: Vec<[usize; 2]>,
    /// The point joined to each point by an arc.
    pub arc_partner: Vec<usize>,
    /// The corner containing the arc at each point.
    pub arc_corner: Vec<Corner>,
    /// Circles without arrows, in order.
    pub empty_circles: Vec<usize>,
    /// First global arrow index of each circle.
    pub circle_start: Vec<usize>,
}

pub(crate) fn tail(a: usize) -> usize {
    2 * a
}

pub(crate) fn head(a: usize) -> usize {
    2 * a + 1
}

impl Endpoints {
    pub fn new(ind: &Indexed) -> Self {
        let total: usize = ind.circles.iter().map(Vec::len).sum();
        let mut arrow_label = Vec::with_capacity(total);
        let mut arrow_forward = Vec::with_capacity(total);
        let mut label_arrows = vec![[usize::MAX; 2]; ind.labels.len()];
        let mut arc_partner = vec![usize::MAX; 2 * total];
        let mut arc_corner = vec![Corner { circle: 0, after: 0 }; 2 * total];
        let mut empty_circles = Vec::new();
        let mut circle_start = Vec::with_capacity(ind.circles.len());
        for (c, circle) in ind.circles.iter().enumerate() {
            let base = arrow_label.len();
            circle_start.push(base);
            if circle.is_empty() {
                empty_circles.push(c);
                continue;
            }
            for &(l, fwd) in circle {
                let a = arrow_label.len();
                let slot = if label_arrows[l][0] == usize::MAX { 0 } else { 1 };
                label_arrows[l][slot] = a;
                arrow_label.push(l);
                arrow_forward.push(fwd);
            }
            let m = circle.len();
            for i in 0..m {
                let a = base + i;
                let b = base + (i + 1) % m;
                let exit = if circle[i].1 { head(a) } else { tail(a) };
                let entry = if circle[(i + 1) % m].1 { tail(b) } else { head(b) };
                arc_partner[exit] = entry;
                arc_partner[entry] = exit;
                let corner = Corner { circle: c, after: i };
                arc_corner[exit] = corner;
                arc_corner[entry] = corner;
            }
        }
        Endpoints {
            arrow_label,
            arrow_forward,
            label_arrows,
            arc_partner,
            arc_corner,
            empty_circles,
            circle_start,
        }
    }

    /// The point where arrow `a` is entered when its circle is walked forward.
    pub fn entry(&self, a: usize) -> usize {
        if self.arrow_forward[a] {
            tail(a)
        } else {
            head(a)
        }
    }

    /// Matching on points induced at one edge by a local vertex state.
    ///
    /// With `A`, `B` the two arrows of the edge: the white split joins
    /// `head A`–`tail B` and `head B`–`tail A` (the two long sides of the edge
    /// ribbon), the black split joins each arrow's own head and tail (the
    /// vertex ends of the ribbon), and the crossing joins `tail A`–`tail B`
    /// and `head A`–`head B`.
    pub fn state_pairs(&self, label: usize, state: VertexState) -> [(usize, usize); 2] {
        let [a, b] = self.label_arrows[label];
        match state {
            VertexState::WhiteSplit => [(head(a), tail(b)), (head(b), tail(a))],
            VertexState::BlackSplit => [(head(a), tail(a)), (head(b), tail(b))],
            VertexState::Crossing => [(tail(a), tail(b)), (head(a), head(b))],
        }
    }

    /// Closed curves formed by the arcs together with the per-edge state
    /// matchings, as sequences of corners, plus one curve per empty circle.
    pub fn trace(&self, state_of: impl Fn(usize) -> VertexState) -> Vec<Vec<Corner>> {
        let n_points = self.arc_partner.len();
        let mut link = vec![usize::MAX; n_points];
        for l in 0..self.label_arrows.len() {
            for (p, q) in self.state_pairs(l, state_of(l)) {
                link[p] = q;
                link[q] = p;
            }
        }
        let mut visited = vec![false; n_points];
        let mut walks = Vec::new();
        for start in 0..n_points {
            if visited[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut p = start;
            loop {
                let q = self.arc_partner[p];
                visited[p] = true;
                visited[q] = true;
                walk.push(self.arc_corner[p]);
                let r = link[q];
                if r == start {
                    break;
                }
                p = r;
            }
            walks.push(walk);
        }
        for &c in &self.empty_circles {
            walks.push(vec![Corner { circle: c, after: 0 }]);
        }
        walks
    }

    /// Number of closed curves of [`Endpoints::trace`] without materialising them.
    pub fn count(&self, state_of: impl Fn(usize) -> VertexState) -> usize {
        let n_points = self.arc_partner.len();
        let mut link = vec![usize::MAX; n_points];
        for l in 0..self.label_arrows.len() {
            for (p, q) in self.state_pairs(l, state_of(l)) {
                link[p] = q;
                link[q] = p;
            }
        }
        let mut visited = vec![false; n_points];
        let mut cycles = 0;
        for start in 0..n_points {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            loop {
                let q = self.arc_partner[p];
                visited[p] = true;
                visited[q] = true;
                let r = link[q];
                if r == start {
                    break;
                }
                p = r;
            }
        }
        cycles + self.empty_circles.len()
    }

    /// Rebuilds circles after replacing arrow segments.
    ///
    /// Segment `j` carries the label of arrow `j` and runs from point
    /// `seg_tail[j]` to point `seg_head[j]`; the segments must cover every
    /// point once. Circles are read off by alternating segments and arcs,
    /// starting at the lowest-numbered unvisited segment in the stored order
    /// so that untouched circles come out unchanged.
    pub fn rebuild(&self, labels: &[EdgeLabel], seg_tail: &[usize], seg_head: &[usize]) -> Indexed {
        let n_points = self.arc_partner.len();
        let mut owner = vec![usize::MAX; n_points];
        for j in 0..seg_tail.len() {
            owner[seg_tail[j]] = j;
            owner[seg_head[j]] = j;
        }
        let mut done = vec![false; seg_tail.len()];
        let mut circles = Vec::new();
        let n_circles = self.circle_start.len();
        for c in 0..n_circles {
            let begin = self.circle_start[c];
            let end = if c + 1 < n_circles {
                self.circle_start[c + 1]
            } else {
                self.arrow_label.len()
            };
            if begin == end {
                circles.push(Vec::new());
                continue;
            }
            for a in begin..end {
                if done[a] {
                    continue;
                }
                let natural = self.entry(a);
                let start = if owner[natural] == a { natural } else { seg_tail[a] };
                let mut circle = Vec::new();
                let mut p = start;
                loop {
                    let j = owner[p];
                    done[j] = true;
                    let forward = p == seg_tail[j];
                    circle.push((self.arrow_label[j], forward));
                    let exit = if forward { seg_head[j] } else { seg_tail[j] };
                    p = self.arc_partner[exit];
                    if p == start {
                        break;
                    }
                }
                circles.push(circle);
            }
        }
        Indexed {
            circles,
            labels: labels.to_vec(),
        }
    }
}

/// Partial dual of the edge with index `label`.
///
/// The two arrows `A`, `B` are cut out and replaced by a segment from the
/// head of `A` to the tail of `B` and one from the head of `B` to the tail of
/// `A`, each carrying the label; the arcs are kept and the circles re-read.
pub(crate) fn partial_dual_indexed(ind: &Indexed, label: usize) -> Indexed {
    let ep = Endpoints::new(ind);
    let n = ep.arrow_label.len();
    let mut seg_tail: Vec<usize> = (0..n).map(tail).collect();
    let mut seg_head: Vec<usize> = (0..n).map(head).collect();
    let [a, b] = ep.label_arrows[label];
    seg_tail[a] = head(a);
    seg_head[a] = tail(b);
    seg_tail[b] = head(b);
    seg_head[b] = tail(a);
    ep.rebuild(&ind.labels, &seg_tail, &seg_head)
}

/// Partial dual with respect to every edge in `labels` at once.
pub(crate) fn partial_dual_set(ind: &Indexed, labels: &[usize]) -> Indexed {
    let ep = Endpoints::new(ind);
    let n = ep.arrow_label.len();
    let mut seg_tail: Vec<usize> = (0..n).map(tail).collect();
    let mut seg_head: Vec<usize> = (0..n).map(head).collect();
    for &label in labels {
        let [a, b] = ep.label_arrows[label];
        seg_tail[a] = head(a);
        seg_head[a] = tail(b);
        seg_tail[b] = head(b);
        seg_head[b] = tail(a);
    }
    ep.rebuild(&ind.labels, &seg_tail, &seg_head)
}

/// Whether circle orientations can be chosen so that every edge joins two
/// arrows pointing the same way relative to the chosen orientations.
pub(crate) fn is_orientable(ind: &Indexed) -> bool {
    let v = ind.circles.len();
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); v];
    let occ = ind.occurrences();
    for [(c1, i1), (c2, i2)] in occ {
        let twist = ind.circles[c1][i1].1 != ind.circles[c2][i2].1;
        if c1 == c2 {
            if twist {
                return false;
            }
            continue;
        }
        adj[c1].push((c2, twist));
        adj[c2].push((c1, twist));
    }
    let mut side: Vec<Option<bool>> = vec![None; v];
    for s in 0..v {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let su = side[u].expect("assigned");
            for &(w, twist) in &adj[u] {
                let want = su ^ twist;
                match side[w] {
                    None => {
                        side[w] = Some(want);
                        stack.push(w);
                    }
                    Some(sw) if sw != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Connected components of the underlying graph, as a component id per circle.
pub(crate) fn components(ind: &Indexed) -> (usize, Vec<usize>) {
    let v = ind.circles.len();
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for [(c1, _), (c2, _)] in ind.occurrences() {
        let (r1, r2) = (find(&mut parent, c1), find(&mut parent, c2));
        if r1 != r2 {
            parent[r1.max(r2)] = r1.min(r2);
        }
    }
    let mut ids = vec![usize::MAX; v];
    let mut count = 0;
    let mut comp = vec![0; v];
    for c in 0..v {
        let r = find(&mut parent, c);
        if ids[r] == usize::MAX {
            ids[r] = count;
            count += 1;
        }
        comp[c] = ids[r];
    }
    (count, comp)
}
