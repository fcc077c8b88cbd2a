//! Rotation systems, combinatorial maps and abstract multigraphs.

use std::collections::BTreeMap;

use serde::Serialize;

use super::surface::Indexed;
use crate::ribbon_core::{Arrow, ArrowPresentation, Direction, EdgeLabel};
use crate::Result;

/// Identifier of a half-edge in a rotation system.
pub type HalfEdge = usize;

/// An edge of a rotation system: its two half-edges and whether its band is twisted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotationEdge {
    pub half_edges: (HalfEdge, HalfEdge),
    pub twisted: bool,
}

/// Vertices as cyclic sequences of half-edges, edges with twist bits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotationSystem {
    pub vertices: Vec<Vec<HalfEdge>>,
    pub edges: BTreeMap<EdgeLabel, RotationEdge>,
}

/// Circles become vertex rotations and each label an edge, twisted exactly
/// when its two arrows point in opposite directions. Half-edge `h` is the
/// `h`-th arrow in storage order.
pub fn to_rotation(ap: &ArrowPresentation) -> RotationSystem {
    let mut vertices = Vec::with_capacity(ap.vertex_count());
    let mut first: BTreeMap<&EdgeLabel, (HalfEdge, Direction)> = BTreeMap::new();
    let mut edges = BTreeMap::new();
    let mut h = 0;
    for circle in ap.circles() {
        let mut rotation = Vec::with_capacity(circle.len());
        for arrow in circle {
            rotation.push(h);
            match first.get(&arrow.label) {
                None => {
                    first.insert(&arrow.label, (h, arrow.dir));
                }
                Some(&(h0, d0)) => {
                    edges.insert(
                        arrow.label.clone(),
                        RotationEdge {
                            half_edges: (h0, h),
                            twisted: d0 != arrow.dir,
                        },
                    );
                }
            }
            h += 1;
        }
        vertices.push(rotation);
    }
    RotationSystem { vertices, edges }
}

/// Inverse of [`to_rotation`] up to embedded equivalence: the first half-edge
/// of every edge becomes a forward arrow and the second one follows the twist bit.
pub fn from_rotation(rs: &RotationSystem) -> Result<ArrowPresentation> {
    let mut by_half: BTreeMap<HalfEdge, (EdgeLabel, Direction)> = BTreeMap::new();
    for (label, edge) in &rs.edges {
        let (a, b) = edge.half_edges;
        by_half.insert(a, (label.clone(), Direction::Forward));
        by_half.insert(
            b,
            (label.clone(), Direction::from_forward(!edge.twisted)),
        );
    }
    let circles = rs
        .vertices
        .iter()
        .map(|rot| {
            rot.iter()
                .map(|h| {
                    by_half
                        .get(h)
                        .map(|(l, d)| Arrow::new(l.clone(), *d))
                        .ok_or_else(|| crate::Error::UnknownLabel(format!("half-edge {h}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ArrowPresentation::new(circles)
}

/// Circles as cyclic label sequences, directions forgotten.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombinatorialMap {
    pub circles: Vec<Vec<EdgeLabel>>,
}

/// The map obtained by forgetting arrow directions.
pub fn underlying_map(ap: &ArrowPresentation) -> CombinatorialMap {
    CombinatorialMap {
        circles: ap
            .circles()
            .iter()
            .map(|c| c.iter().map(|a| a.label.clone()).collect())
            .collect(),
    }
}

/// A multigraph with loops; edges are tagged with their labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbstractGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, EdgeLabel)>,
}

impl AbstractGraph {
    /// Adjacency multiplicities; a loop adds one to its diagonal entry.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.vertex_count]; self.vertex_count];
        for &(u, v, _) in &self.edges {
            m[u][v] += 1;
            if u != v {
                m[v][u] += 1;
            }
        }
        m
    }

    /// Degrees, loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(u, v, _) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v, _)| u == v)
    }

    /// Bipartite: two-colourable, so loops (odd cycles of length one) rule it out.
    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// A proper two-colouring of the vertices, when one exists.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v, _) in &self.edges {
            if u == v {
                return None;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut colour: Vec<Option<bool>> = vec![None; self.vertex_count];
        for s in 0..self.vertex_count {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
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

    /// Every vertex has even degree.
    pub fn is_eulerian(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let mut count = self.vertex_count;
        for &(u, v, _) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }
}

/// Circles become vertices and each label an edge between the circles carrying its arrows.
pub fn underlying_abstract(ap: &ArrowPresentation) -> AbstractGraph {
    let ind = Indexed::from_ap(ap);
    let edges = ind
        .occurrences()
        .into_iter()
        .enumerate()
        .map(|(l, [(c1, _), (c2, _)])| (c1.min(c2), c1.max(c2), ind.labels[l].clone()))
        .collect();
    AbstractGraph {
        vertex_count: ap.vertex_count(),
        edges,
    }
}

/// Multigraph isomorphism by backtracking over vertex bijections, pruned by
/// degree and loop count.
pub fn is_isomorphic(g: &AbstractGraph, h: &AbstractGraph) -> bool {
    if g.vertex_count != h.vertex_count || g.edges.len() != h.edges.len() {
        return false;
    }
    let (mg, mh) = (g.adjacency(), h.adjacency());
    let (dg, dh) = (g.degrees(), h.degrees());
    let key = |m: &Vec<Vec<usize>>, d: &Vec<usize>, v: usize| (d[v], m[v][v]);
    let mut kg: Vec<_> = (0..g.vertex_count).map(|v| key(&mg, &dg, v)).collect();
    let mut kh: Vec<_> = (0..h.vertex_count).map(|v| key(&mh, &dh, v)).collect();
    let (kg_orig, kh_orig) = (kg.clone(), kh.clone());
    kg.sort();
    kh.sort();
    if kg != kh {
        return false;
    }
    let n = g.vertex_count;
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        i: usize,
        n: usize,
        mg: &[Vec<usize>],
        mh: &[Vec<usize>],
        kg: &[(usize, usize)],
        kh: &[(usize, usize)],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || kg[i] != kh[cand] {
                continue;
            }
            if (0..i).any(|j| mg[i][j] != mh[cand][image[j]]) {
                continue;
            }
            image[i] = cand;
            used[cand] = true;
            if extend(i + 1, n, mg, mh, kg, kh, image, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
    extend(0, n, &mg, &mh, &kg_orig, &kh_orig, &mut image, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon_core::{equivalent, Level};

    fn ap(text: &str) -> ArrowPresentation {
        text.parse().unwrap()
    }

    #[test]
    fn rotation_twist_bits() {
        let e = EdgeLabel::new("e").unwrap();
        assert!(!to_rotation(&ap("(e+ e+)")).edges[&e].twisted);
        assert!(to_rotation(&ap("(e+ e-)")).edges[&e].twisted);
        let bridge = to_rotation(&ap("(e+)(e+)"));
        assert_eq!(bridge.vertices.len(), 2);
        assert!(!bridge.edges[&e].twisted);
    }

    #[test]
    fn rotation_round_trip() {
        for t in ["(a- b+ a- c+)(b+ c-)", "(e+ e-)", "(a+)(a-)()"] {
            let g = ap(t);
            let back = from_rotation(&to_rotation(&g)).unwrap();
            assert!(equivalent(&g, &back, Level::Embedded));
        }
    }

    #[test]
    fn maps_and_abstract_graphs() {
        assert_eq!(
            underlying_map(&ap("(e+ e-)")).circles,
            vec![vec![EdgeLabel::new("e").unwrap(); 2]]
        );
        let g = underlying_abstract(&ap("(a+ b+)(a- b+)"));
        assert_eq!(g.vertex_count, 2);
        assert_eq!(g.adjacency(), vec![vec![0, 2], vec![2, 0]]);
        let l = underlying_abstract(&ap("(e+ e+)"));
        assert_eq!((l.vertex_count, l.adjacency()), (1, vec![vec![1]]));
    }

    #[test]
    fn isomorphism_search() {
        let path1 = underlying_abstract(&ap("(a+)(a+ b+)(b+)"));
        let path2 = underlying_abstract(&ap("(a+ b+)(a+)(b+)"));
        let star = underlying_abstract(&ap("(a+ b+ c+)(a+)(b+)(c+)"));
        let path3 = underlying_abstract(&ap("(a+)(a+ b+)(b+ c+)(c+)"));
        assert!(is_isomorphic(&path1, &path2));
        assert!(!is_isomorphic(&star, &path3));
        assert!(path1.is_bipartite());
        assert!(!underlying_abstract(&ap("(e+ e-)")).is_bipartite());
    }
}
