//! Admissible edge colourings of medial graphs.

use super::medial;
use crate::ribbon_core::surface::Indexed;
use crate::ribbon_core::{check, ArrowPresentation, Bound};
use crate::Result;

/// Which colour patterns at a medial vertex count as admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ValuationRule {
    /// White-split pattern or crossing pattern, each with two different colours.
    #[default]
    Strict,
    /// As `Strict`, but the crossing pattern may use a single colour on all four edges.
    CrossingAllowsEqual,
}

fn admissible(c: [usize; 4], rule: ValuationRule) -> bool {
    let white = c[1] == c[2] && c[3] == c[0] && c[0] != c[1];
    let crossing = c[0] == c[2] && c[1] == c[3] && (c[0] != c[1] || rule == ValuationRule::CrossingAllowsEqual);
    white || crossing
}

/// Number of edge `k`-colourings of the medial graph of `ap` in which every
/// medial vertex shows an admissible pattern: the two white-split pairs each
/// monochromatic in different colours, or the two crossing pairs each
/// monochromatic in different colours.
pub fn count_admissible_valuations(ap: &ArrowPresentation, k: usize, rule: ValuationRule) -> Result<u64> {
    check(Bound::ValuationEdges, "edge count", ap.edge_count())?;
    check(Bound::ValuationColours, "colour count", k)?;
    let m = medial(ap);
    let ind = Indexed::from_ap(&m.graph);
    let n = m.vertex_count();
    let slots: Vec<[usize; 4]> = (0..n)
        .map(|v| {
            let c = &ind.circles[v];
            [c[0].0, c[1].0, c[2].0, c[3].0]
        })
        .collect();
    // Each vertex is checked as soon as its largest medial label is coloured.
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); ind.labels.len()];
    for (v, s) in slots.iter().enumerate() {
        due[*s.iter().max().expect("four slots")].push(v);
    }
    let mut colour = vec![0usize; ind.labels.len()];
    Ok(extend(0, k, rule, &slots, &due, &mut colour))
}

fn extend(
    next: usize,
    k: usize,
    rule: ValuationRule,
    slots: &[[usize; 4]],
    due: &[Vec<usize>],
    colour: &mut [usize],
) -> u64 {
    if next == colour.len() {
        return 1;
    }
    let mut total = 0;
    for c in 0..k {
        colour[next] = c;
        let ok = due[next]
            .iter()
            .all(|&v| admissible(slots[v].map(|l| colour[l]), rule));
        if ok {
            total += extend(next + 1, k, rule, slots, due, colour);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_with_three_colours() {
        let theta: ArrowPresentation = "(a+ b+ c+)(c+ b+ a+)".parse().unwrap();
        assert_eq!(count_admissible_valuations(&theta, 3, ValuationRule::Strict).unwrap(), 6);
    }

    #[test]
    fn edgeless_graph_has_one_valuation() {
        let g: ArrowPresentation = "()".parse().unwrap();
        assert_eq!(count_admissible_valuations(&g, 2, ValuationRule::Strict).unwrap(), 1);
    }

    #[test]
    fn colour_bound() {
        let g: ArrowPresentation = "(e+ e+)".parse().unwrap();
        assert!(count_admissible_valuations(&g, 99, ValuationRule::Strict).is_err());
    }
}
