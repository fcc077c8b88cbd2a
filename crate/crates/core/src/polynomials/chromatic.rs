//! Chromatic polynomials and proper edge colourings of abstract graphs.

use std::collections::BTreeSet;

use super::laurent::{LaurentPoly, Var};
use crate::ribbon_core::AbstractGraph;

/// Chromatic polynomial in `λ` by deletion and contraction. Any loop gives
/// zero; parallel edges are merged since they impose the same constraint.
pub fn chromatic(g: &AbstractGraph) -> LaurentPoly {
    if g.has_loop() {
        return LaurentPoly::zero();
    }
    let edges: BTreeSet<(usize, usize)> = g.edges.iter().map(|&(u, v, _)| (u.min(v), u.max(v))).collect();
    simple(g.vertex_count, edges)
}

fn simple(n: usize, edges: BTreeSet<(usize, usize)>) -> LaurentPoly {
    let Some(&(u, v)) = edges.iter().next() else {
        return LaurentPoly::var_pow(Var::Lambda, n as i64);
    };
    let mut deleted = edges.clone();
    deleted.remove(&(u, v));
    // Contract v into u and shift the vertices above v down by one.
    let rename = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let contracted: BTreeSet<(usize, usize)> = deleted
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (rename(a), rename(b));
            (a.min(b), a.max(b))
        })
        .collect();
    simple(n, deleted) - simple(n - 1, contracted)
}

/// Number of proper edge colourings with `k` colours: edges sharing an end
/// receive different colours. A loop meets itself, so it admits none.
pub fn proper_edge_colourings(g: &AbstractGraph, k: usize) -> u64 {
    if g.has_loop() {
        return 0;
    }
    let m = g.edges.len();
    let conflicts: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            let (a, b, _) = &g.edges[i];
            (0..i)
                .filter(|&j| {
                    let (c, d, _) = &g.edges[j];
                    a == c || a == d || b == c || b == d
                })
                .collect()
        })
        .collect();
    let mut colour = vec![0usize; m];
    fn extend(i: usize, k: usize, conflicts: &[Vec<usize>], colour: &mut [usize]) -> u64 {
        if i == colour.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if conflicts[i].iter().all(|&j| colour[j] != c) {
                colour[i] = c;
                total += extend(i + 1, k, conflicts, colour);
            }
        }
        total
    }
    extend(0, k, &conflicts, &mut colour)
}
