//! The ribbon group ⟨δ, τ | δ², τ², (τδ)³⟩ and edgewise assignments of its elements.
//!
//! Elements are stored as permutations of the positions (white, black,
//! crossing) under the isomorphism onto S₃ sending τ to the transposition of
//! the first and third positions and δ to that of the first and second.
//! Composition follows the convention that `ξζ` acts by applying `ζ` first.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::ribbon_core::EdgeLabel;
use crate::{Error, Result};

/// A generator of the ribbon group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// τ: reverse one arrow of the edge.
    Tau,
    /// δ: partial dual at the edge.
    Delta,
}

/// A finite word in τ and δ, read as a product from left to right.
pub type Word = Vec<Letter>;

/// One of the six elements `1, τ, δ, τδ, δτ, τδτ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Identity,
    Tau,
    Delta,
    TauDelta,
    DeltaTau,
    TauDeltaTau,
}

impl GroupElement {
    /// All six elements in the order `1, τ, δ, τδ, δτ, τδτ`.
    pub const ALL: [GroupElement; 6] = [
        GroupElement::Identity,
        GroupElement::Tau,
        GroupElement::Delta,
        GroupElement::TauDelta,
        GroupElement::DeltaTau,
        GroupElement::TauDeltaTau,
    ];

    /// Image of each position (0 white, 1 black, 2 crossing) under the
    /// corresponding permutation.
    pub fn permutation(self) -> [usize; 3] {
        match self {
            GroupElement::Identity => [0, 1, 2],
            GroupElement::Tau => [2, 1, 0],
            GroupElement::Delta => [1, 0, 2],
            GroupElement::TauDelta => [1, 2, 0],
            GroupElement::DeltaTau => [2, 0, 1],
            GroupElement::TauDeltaTau => [0, 2, 1],
        }
    }

    fn from_permutation(p: [usize; 3]) -> Self {
        *GroupElement::ALL
            .iter()
            .find(|g| g.permutation() == p)
            .expect("every permutation of three points is a group element")
    }

    /// Group product `self · other`; acting on a graph, `other` is applied first.
    pub fn compose(self, other: GroupElement) -> GroupElement {
        let (p, q) = (self.permutation(), other.permutation());
        GroupElement::from_permutation([p[q[0]], p[q[1]], p[q[2]]])
    }

    /// Inverse element.
    pub fn inverse(self) -> GroupElement {
        let p = self.permutation();
        let mut inv = [0; 3];
        for (i, &pi) in p.iter().enumerate() {
            inv[pi] = i;
        }
        GroupElement::from_permutation(inv)
    }

    /// The normal-form word of this element.
    pub fn word(self) -> Word {
        use Letter::*;
        match self {
            GroupElement::Identity => vec![],
            GroupElement::Tau => vec![Tau],
            GroupElement::Delta => vec![Delta],
            GroupElement::TauDelta => vec![Tau, Delta],
            GroupElement::DeltaTau => vec![Delta, Tau],
            GroupElement::TauDeltaTau => vec![Tau, Delta, Tau],
        }
    }

    /// Letters in the order they act on a graph (rightmost first).
    pub fn application_order(self) -> Word {
        let mut w = self.word();
        w.reverse();
        w
    }

    /// The literal used in the text formats: `1, t, d, td, dt, tdt`.
    pub fn literal(self) -> &'static str {
        match self {
            GroupElement::Identity => "1",
            GroupElement::Tau => "t",
            GroupElement::Delta => "d",
            GroupElement::TauDelta => "td",
            GroupElement::DeltaTau => "dt",
            GroupElement::TauDeltaTau => "tdt",
        }
    }

    fn long_name(self) -> &'static str {
        match self {
            GroupElement::Identity => "id",
            GroupElement::Tau => "tau",
            GroupElement::Delta => "delta",
            GroupElement::TauDelta => "taudelta",
            GroupElement::DeltaTau => "deltatau",
            GroupElement::TauDeltaTau => "taudeltatau",
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.literal())
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.literal())
    }
}

/// Parses a word over `t`/`τ` and `d`/`δ`.
pub fn parse_word(text: &str) -> Result<Word> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            't' | 'τ' => Ok(Letter::Tau),
            'd' | 'δ' => Ok(Letter::Delta),
            _ => Err(Error::InvalidGroupElement(text.to_string())),
        })
        .collect()
}

/// Reduces a word to its group element.
pub fn normal_form(word: &[Letter]) -> GroupElement {
    word.iter().fold(GroupElement::Identity, |acc, l| {
        acc.compose(match l {
            Letter::Tau => GroupElement::Tau,
            Letter::Delta => GroupElement::Delta,
        })
    })
}

impl FromStr for GroupElement {
    type Err = Error;
    /// Accepts the literals `1, t, d, td, dt, tdt`, the spelled-out names
    /// `id, tau, delta, taudelta, deltatau, taudeltatau`, and any word in
    /// `t`/`d`/`τ`/`δ`, which is reduced.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s == "id" || s.is_empty() {
            return Ok(GroupElement::Identity);
        }
        if let Some(g) = GroupElement::ALL.iter().find(|g| g.long_name() == s) {
            return Ok(*g);
        }
        Ok(normal_form(&parse_word(s)?))
    }
}

/// Group element per edge; edges not listed carry the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GammaAssignment(pub BTreeMap<EdgeLabel, GroupElement>);

impl GammaAssignment {
    pub fn new() -> Self {
        GammaAssignment::default()
    }

    /// The same element on every listed edge.
    pub fn uniform<'a>(labels: impl IntoIterator<Item = &'a EdgeLabel>, g: GroupElement) -> Self {
        GammaAssignment(labels.into_iter().map(|l| (l.clone(), g)).collect())
    }

    /// Element at `label` (identity when absent).
    pub fn get(&self, label: &EdgeLabel) -> GroupElement {
        self.0.get(label).copied().unwrap_or(GroupElement::Identity)
    }

    pub fn set(&mut self, label: EdgeLabel, g: GroupElement) {
        self.0.insert(label, g);
    }

    /// Edgewise product `self · other` (so `other` acts first).
    pub fn compose(&self, other: &GammaAssignment) -> GammaAssignment {
        let mut out = BTreeMap::new();
        for l in self.0.keys().chain(other.0.keys()) {
            out.insert(l.clone(), self.get(l).compose(other.get(l)));
        }
        GammaAssignment(out)
    }

    /// Edgewise inverse.
    pub fn inverse(&self) -> GammaAssignment {
        GammaAssignment(self.0.iter().map(|(l, g)| (l.clone(), g.inverse())).collect())
    }
}

impl fmt::Display for GammaAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: BTreeMap<GroupElement, Vec<&EdgeLabel>> = BTreeMap::new();
        for (l, g) in &self.0 {
            if *g != GroupElement::Identity {
                groups.entry(*g).or_default().push(l);
            }
        }
        if groups.is_empty() {
            return f.write_str("id()");
        }
        let parts: Vec<String> = groups
            .iter()
            .map(|(g, ls)| {
                let names: Vec<&str> = ls.iter().map(|l| l.as_str()).collect();
                format!("{}({})", g.long_name(), names.join(","))
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for GammaAssignment {
    type Err = Error;
    /// Parses `tau(e1,e2),delta(e3),taudelta(e4)`; any element name accepted
    /// by [`GroupElement::from_str`] may precede the parentheses. An edge
    /// listed twice receives the product, later entries acting after earlier ones.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = GammaAssignment::new();
        let bad = || Error::InvalidGroupElement(s.to_string());
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(bad)?;
            let close = rest[open..].find(')').ok_or_else(bad)? + open;
            let g: GroupElement = rest[..open].trim().parse()?;
            for name in rest[open + 1..close].split(',') {
                let name = name.trim();
                if name.is_empty() {
                    continue;
                }
                let label = EdgeLabel::new(name)?;
                let prev = out.get(&label);
                out.set(label, g.compose(prev));
            }
            rest = rest[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
            } else if !rest.is_empty() {
                return Err(bad());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupElement::*;

    fn w(s: &str) -> GroupElement {
        normal_form(&parse_word(s).unwrap())
    }

    #[test]
    fn relations_hold() {
        assert_eq!(w("tt"), Identity);
        assert_eq!(w("dd"), Identity);
        assert_eq!(w("tdtdtd"), Identity);
        assert_eq!(w(""), Identity);
    }

    #[test]
    fn six_distinct_normal_forms() {
        let forms = ["", "t", "d", "td", "dt", "tdt"].map(w);
        assert_eq!(forms, GroupElement::ALL);
        assert_eq!(w("tdt"), w("dtd"));
    }

    #[test]
    fn product_table_is_a_group() {
        for a in GroupElement::ALL {
            assert_eq!(a.compose(a.inverse()), Identity);
            for b in GroupElement::ALL {
                for c in GroupElement::ALL {
                    assert_eq!(a.compose(b).compose(c), a.compose(b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn literals_round_trip() {
        for g in GroupElement::ALL {
            assert_eq!(g.literal().parse::<GroupElement>().unwrap(), g);
            assert_eq!(normal_form(&g.word()), g);
        }
        assert_eq!("τδ".parse::<GroupElement>().unwrap(), TauDelta);
        assert!("x".parse::<GroupElement>().is_err());
    }

    #[test]
    fn gamma_syntax() {
        let g: GammaAssignment = "tau(e1,e2),delta(e3),taudelta(e4)".parse().unwrap();
        let l = |s: &str| EdgeLabel::new(s).unwrap();
        assert_eq!(g.get(&l("e1")), Tau);
        assert_eq!(g.get(&l("e2")), Tau);
        assert_eq!(g.get(&l("e3")), Delta);
        assert_eq!(g.get(&l("e4")), TauDelta);
        assert_eq!(g.get(&l("e5")), Identity);
        assert_eq!(g.to_string(), "tau(e1,e2),delta(e3),taudelta(e4)");
        assert_eq!(g.to_string().parse::<GammaAssignment>().unwrap(), g);
        assert!("tau(e1".parse::<GammaAssignment>().is_err());
    }
}
