//! Arrow-marked vertex states and the action of the ribbon group on them.

use std::fmt;

use serde::{Serialize, Serializer};

use super::VertexState;
use crate::twisted_duality::{GammaAssignment, GroupElement, Letter};
use crate::EdgeLabel;

/// A vertex state with an arrow on each of its two strands.
///
/// The strands are stored as directed pairs of positions `(from, to)`.
/// Reversing both arrows gives an equivalent marking, so the stored form is
/// normalised: the first strand contains position 0 and leaves it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedVertexState {
    strands: [(u8, u8); 2],
}

impl MarkedVertexState {
    /// Builds the normalised marking from two directed strands covering positions 0..4.
    pub fn new(first: (u8, u8), second: (u8, u8)) -> Self {
        let mut ends = [first.0, first.1, second.0, second.1];
        ends.sort_unstable();
        assert_eq!(ends, [0, 1, 2, 3], "strands must cover the four positions");
        let (mut s0, mut s1) = if first.0 == 0 || first.1 == 0 {
            (first, second)
        } else {
            (second, first)
        };
        if s0.1 == 0 {
            s0 = (s0.1, s0.0);
            s1 = (s1.1, s1.0);
        }
        MarkedVertexState { strands: [s0, s1] }
    }

    /// Split or crossing with arrows circulating the same way around the
    /// vertex: `(i → i+1, i+2 → i+3)` for a split, `(0 → 2, 1 → 3)` for the crossing.
    pub fn flat(state: VertexState) -> Self {
        match state {
            VertexState::BlackSplit => MarkedVertexState::new((0, 1), (2, 3)),
            VertexState::WhiteSplit => MarkedVertexState::new((1, 2), (3, 0)),
            VertexState::Crossing => MarkedVertexState::new((0, 2), (1, 3)),
        }
    }

    /// The flat marking with its second arrow reversed.
    pub fn twisted(state: VertexState) -> Self {
        MarkedVertexState::flat(state).tau()
    }

    /// The six inequivalent markings: flat then twisted, white, black, crossing.
    pub fn all() -> [MarkedVertexState; 6] {
        use VertexState::*;
        [
            MarkedVertexState::flat(WhiteSplit),
            MarkedVertexState::twisted(WhiteSplit),
            MarkedVertexState::flat(BlackSplit),
            MarkedVertexState::twisted(BlackSplit),
            MarkedVertexState::flat(Crossing),
            MarkedVertexState::twisted(Crossing),
        ]
    }

    /// The two directed strands.
    pub fn strands(self) -> [(u8, u8); 2] {
        self.strands
    }

    /// Underlying pairing.
    pub fn state(self) -> VertexState {
        match self.strands[0].1 {
            1 => VertexState::BlackSplit,
            3 => VertexState::WhiteSplit,
            _ => VertexState::Crossing,
        }
    }

    /// Whether the arrows are flat in the sense of [`MarkedVertexState::flat`].
    pub fn is_flat(self) -> bool {
        self == MarkedVertexState::flat(self.state())
    }

    /// τ: reverse one of the two arrows.
    pub fn tau(self) -> Self {
        let [s0, (c, d)] = self.strands;
        MarkedVertexState::new(s0, (d, c))
    }

    /// δ: the strands `(a → b, c → d)` become `(b → c, d → a)`, the way the
    /// partial dual rewires an edge from head to tail.
    pub fn delta(self) -> Self {
        let [(a, b), (c, d)] = self.strands;
        MarkedVertexState::new((b, c), (d, a))
    }

    /// Action of a group element (rightmost letter first).
    pub fn act(self, g: GroupElement) -> Self {
        g.application_order().into_iter().fold(self, |s, l| match l {
            Letter::Tau => s.tau(),
            Letter::Delta => s.delta(),
        })
    }
}

impl fmt::Display for MarkedVertexState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}",
            self.state(),
            if self.is_flat() { "flat" } else { "twisted" }
        )
    }
}

/// One marked state per medial vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowMarkedState(pub Vec<MarkedVertexState>);

impl ArrowMarkedState {
    /// The same marking at `n` vertices.
    pub fn uniform(s: MarkedVertexState, n: usize) -> Self {
        ArrowMarkedState(vec![s; n])
    }

    /// Every vertex carries a split with flat arrows.
    pub fn is_duality_state(&self) -> bool {
        self.0
            .iter()
            .all(|s| s.is_flat() && s.state() != VertexState::Crossing)
    }

    /// Text form `v_e:bl:flat v_f:cr:twisted …` with the given vertex names.
    pub fn describe(&self, labels: &[EdgeLabel]) -> String {
        self.0
            .iter()
            .zip(labels)
            .map(|(s, l)| format!("v_{l}:{s}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Serialize for ArrowMarkedState {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|m| m.to_string()))
    }
}

/// Rewrites each vertex's marking by the group element of its origin edge.
pub fn apply_state_action(
    state: &ArrowMarkedState,
    labels: &[EdgeLabel],
    gamma: &GammaAssignment,
) -> ArrowMarkedState {
    ArrowMarkedState(
        state
            .0
            .iter()
            .zip(labels)
            .map(|(s, l)| s.act(gamma.get(l)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_distinct_markings() {
        let all = MarkedVertexState::all();
        for i in 0..6 {
            for j in 0..i {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn reversing_both_arrows_is_equivalent() {
        assert_eq!(MarkedVertexState::new((1, 0), (3, 2)), MarkedVertexState::new((0, 1), (2, 3)));
    }

    #[test]
    fn relations_on_markings() {
        for s in MarkedVertexState::all() {
            assert_eq!(s.tau().tau(), s);
            assert_eq!(s.delta().delta(), s);
            let td = |x: MarkedVertexState| x.delta().tau();
            assert_eq!(td(td(td(s))), s);
        }
    }

    #[test]
    fn delta_exchanges_flat_splits() {
        let b = MarkedVertexState::flat(VertexState::BlackSplit);
        let w = MarkedVertexState::flat(VertexState::WhiteSplit);
        assert_eq!(b.delta(), w);
        assert_eq!(w.delta(), b);
    }

    #[test]
    fn group_acts_transitively_on_markings() {
        let b = MarkedVertexState::flat(VertexState::BlackSplit);
        let mut images: Vec<_> = GroupElement::ALL.iter().map(|&g| b.act(g)).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 6);
    }
}
