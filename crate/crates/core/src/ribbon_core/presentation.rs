//! Arrow presentations and their text and JSON formats.
//!
//! Text format: `graph := circle+`, `circle := "(" arrow* ")"`,
//! `arrow := label sign`, `sign := "+" | "-"`, with whitespace separating
//! arrows and circles. The JSON mirror is
//! `{"circles":[[{"label":"e","dir":"+"}, ...], ...]}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Name of an edge: a nonempty token of ASCII letters, digits and underscores.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel(String);

impl EdgeLabel {
    /// Validates and wraps a label.
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || !name.bytes().all(is_label_byte) {
            return Err(Error::InvalidLabel(name));
        }
        Ok(EdgeLabel(name))
    }

    /// The label text.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for EdgeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EdgeLabel::new(s)
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for EdgeLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        EdgeLabel::new(s).map_err(serde::de::Error::custom)
    }
}

fn is_label_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

/// Direction of an arrow relative to the orientation of its circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Reverse,
}

impl Direction {
    /// The opposite direction.
    pub fn flipped(self) -> Self {
        match self {
            Direction::Forward => Direction::Reverse,
            Direction::Reverse => Direction::Forward,
        }
    }

    /// `true` for [`Direction::Forward`].
    pub fn is_forward(self) -> bool {
        self == Direction::Forward
    }

    /// Builds a direction from a forward flag.
    pub fn from_forward(forward: bool) -> Self {
        if forward {
            Direction::Forward
        } else {
            Direction::Reverse
        }
    }

    /// The sign character used by the text format.
    pub fn sign(self) -> char {
        match self {
            Direction::Forward => '+',
            Direction::Reverse => '-',
        }
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(if self.is_forward() { "+" } else { "-" })
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match String::deserialize(d)?.as_str() {
            "+" => Ok(Direction::Forward),
            "-" => Ok(Direction::Reverse),
            other => Err(serde::de::Error::custom(format!(
                "direction must be \"+\" or \"-\", got {other:?}"
            ))),
        }
    }
}

/// A labelled arrow on a circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub label: EdgeLabel,
    pub dir: Direction,
}

impl Arrow {
    pub fn new(label: EdgeLabel, dir: Direction) -> Self {
        Arrow { label, dir }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.dir.sign())
    }
}

/// A set of circles carrying labelled arrows, every label on exactly two
/// arrows. Circles are vertices, labels are edges; circles without arrows are
/// isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowPresentation {
    circles: Vec<Vec<Arrow>>,
}

#[derive(Serialize, Deserialize)]
struct ApJson {
    circles: Vec<Vec<Arrow>>,
}

impl ArrowPresentation {
    /// Validates that every label occurs on exactly two arrows.
    pub fn new(circles: Vec<Vec<Arrow>>) -> Result<Self> {
        let mut counts: BTreeMap<&EdgeLabel, usize> = BTreeMap::new();
        for arrow in circles.iter().flatten() {
            *counts.entry(&arrow.label).or_default() += 1;
        }
        if let Some((label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::LabelCount {
                label: label.to_string(),
                count,
            });
        }
        Ok(ArrowPresentation { circles })
    }

    /// Builds a presentation already known to be valid.
    pub(crate) fn from_valid(circles: Vec<Vec<Arrow>>) -> Self {
        debug_assert!(ArrowPresentation::new(circles.clone()).is_ok());
        ArrowPresentation { circles }
    }

    /// Graph with `n` isolated vertices and no edges.
    pub fn isolated(n: usize) -> Self {
        ArrowPresentation {
            circles: vec![Vec::new(); n],
        }
    }

    /// Parses the text format, reporting the byte offset of syntax errors.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut circles = Vec::new();
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(Error::Syntax {
                position: pos,
                message: "expected at least one circle".into(),
            });
        }
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(Error::Syntax {
                    position: pos,
                    message: "expected `(`".into(),
                });
            }
            pos += 1;
            let mut circle = Vec::new();
            loop {
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    None => {
                        return Err(Error::Syntax {
                            position: pos,
                            message: "unterminated circle, expected `)`".into(),
                        })
                    }
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(&b) if is_label_byte(b) => {
                        let start = pos;
                        while pos < bytes.len() && is_label_byte(bytes[pos]) {
                            pos += 1;
                        }
                        let label = EdgeLabel(text[start..pos].to_string());
                        let dir = match bytes.get(pos) {
                            Some(b'+') => Direction::Forward,
                            Some(b'-') => Direction::Reverse,
                            _ => {
                                return Err(Error::Syntax {
                                    position: pos,
                                    message: format!("expected `+` or `-` after label `{label}`"),
                                })
                            }
                        };
                        pos += 1;
                        circle.push(Arrow { label, dir });
                    }
                    Some(_) => {
                        return Err(Error::Syntax {
                            position: pos,
                            message: "expected an arrow label or `)`".into(),
                        })
                    }
                }
            }
            circles.push(circle);
            skip_ws(&mut pos);
        }
        ArrowPresentation::new(circles)
    }

    /// Parses the JSON mirror of the text format.
    pub fn from_json(json: &str) -> Result<Self> {
        let raw: ApJson = serde_json::from_str(json).map_err(|e| Error::Json(e.to_string()))?;
        ArrowPresentation::new(raw.circles)
    }

    /// JSON value mirroring the text format.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({ "circles": self.circles })
    }

    /// Serializes to the text format; circles and arrows are emitted in stored order.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// The circles, each a cyclic sequence of arrows.
    pub fn circles(&self) -> &[Vec<Arrow>] {
        &self.circles
    }

    /// Number of circles (vertices).
    pub fn vertex_count(&self) -> usize {
        self.circles.len()
    }

    /// Number of labels (edges).
    pub fn edge_count(&self) -> usize {
        self.circles.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Number of circles without arrows.
    pub fn isolated_count(&self) -> usize {
        self.circles.iter().filter(|c| c.is_empty()).count()
    }

    /// The edge labels in lexicographic order.
    pub fn labels(&self) -> Vec<EdgeLabel> {
        let mut labels: Vec<EdgeLabel> = self
            .circles
            .iter()
            .flatten()
            .map(|a| a.label.clone())
            .collect();
        labels.sort();
        labels.dedup();
        labels
    }

    /// Whether `label` is an edge of this graph.
    pub fn contains(&self, label: &EdgeLabel) -> bool {
        self.circles.iter().flatten().any(|a| &a.label == label)
    }

    /// Positions `(circle, index)` of the two arrows of `label`, in storage order.
    pub fn occurrences(&self, label: &EdgeLabel) -> Result<[(usize, usize); 2]> {
        let mut found = Vec::with_capacity(2);
        for (c, circle) in self.circles.iter().enumerate() {
            for (i, arrow) in circle.iter().enumerate() {
                if &arrow.label == label {
                    found.push((c, i));
                }
            }
        }
        match found.as_slice() {
            [a, b] => Ok([*a, *b]),
            _ => Err(Error::UnknownLabel(label.to_string())),
        }
    }

    /// Removes both arrows of `label`; the arcs on either side are spliced and
    /// circles that lose all their arrows stay as isolated vertices.
    pub fn delete_edge(&self, label: &EdgeLabel) -> Result<Self> {
        if !self.contains(label) {
            return Err(Error::UnknownLabel(label.to_string()));
        }
        Ok(self.retain_edges(|l| l != label))
    }

    /// Spanning subgraph keeping exactly the edges for which `keep` holds.
    pub fn retain_edges(&self, mut keep: impl FnMut(&EdgeLabel) -> bool) -> Self {
        ArrowPresentation {
            circles: self
                .circles
                .iter()
                .map(|c| c.iter().filter(|a| keep(&a.label)).cloned().collect())
                .collect(),
        }
    }

    /// Flips the direction of the first stored arrow of `label`.
    pub(crate) fn flip_first(&self, label: &EdgeLabel) -> Result<Self> {
        let [(c, i), _] = self.occurrences(label)?;
        let mut circles = self.circles.clone();
        circles[c][i].dir = circles[c][i].dir.flipped();
        Ok(ArrowPresentation { circles })
    }

    /// Renames labels through `map`; labels absent from the map keep their name.
    pub fn relabel(&self, map: &BTreeMap<EdgeLabel, EdgeLabel>) -> Result<Self> {
        ArrowPresentation::new(
            self.circles
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|a| Arrow {
                            label: map.get(&a.label).cloned().unwrap_or_else(|| a.label.clone()),
                            dir: a.dir,
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// Disjoint union; fails when the label sets overlap.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let mut circles = self.circles.clone();
        circles.extend(other.circles.iter().cloned());
        ArrowPresentation::new(circles)
    }
}

/// Deletes the edges in `deleted` and twists those in `twisted`.
pub fn delete_and_twist(
    ap: &ArrowPresentation,
    deleted: &[EdgeLabel],
    twisted: &[EdgeLabel],
) -> Result<ArrowPresentation> {
    for l in deleted.iter().chain(twisted) {
        if !ap.contains(l) {
            return Err(Error::UnknownLabel(l.to_string()));
        }
    }
    let mut out = ap.retain_edges(|l| !deleted.contains(l));
    for l in twisted {
        if !deleted.contains(l) {
            out = out.flip_first(l)?;
        }
    }
    Ok(out)
}

impl fmt::Display for ArrowPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for circle in &self.circles {
            f.write_str("(")?;
            for (i, arrow) in circle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{arrow}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for ArrowPresentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ArrowPresentation::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_loop_transcribes_arrows() {
        let ap = ArrowPresentation::parse("(e+ e+)").unwrap();
        assert_eq!(ap.vertex_count(), 1);
        assert_eq!(ap.circles()[0].len(), 2);
        assert!(ap.circles()[0].iter().all(|a| a.dir == Direction::Forward && a.label.as_str() == "e"));
    }

    #[test]
    fn parse_bridge_has_two_circles() {
        let ap = ArrowPresentation::parse("(e+)(e+)").unwrap();
        assert_eq!(ap.vertex_count(), 2);
        assert_eq!(ap.edge_count(), 1);
    }

    #[test]
    fn label_appearing_three_times_is_rejected() {
        assert_eq!(
            ArrowPresentation::parse("(e+ e+ e+)"),
            Err(Error::LabelCount {
                label: "e".into(),
                count: 3
            })
        );
    }

    #[test]
    fn syntax_errors_report_position() {
        match ArrowPresentation::parse("(e+ e*)") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(ArrowPresentation::parse("(e+ e+"), Err(Error::Syntax { .. })));
        assert!(matches!(ArrowPresentation::parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(ArrowPresentation::parse("e+ e+"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn serialize_round_trips() {
        for text in ["(e+ e-)", "()", "(a+ b+ a- b+)", "(a+ b+)(a- b+)()"] {
            assert_eq!(ArrowPresentation::parse(text).unwrap().serialize(), text);
        }
    }

    #[test]
    fn json_mirror_round_trips() {
        let ap = ArrowPresentation::parse("(a+ b-)(a- b+)").unwrap();
        let json = ap.to_json_value().to_string();
        assert_eq!(
            json,
            r#"{"circles":[[{"dir":"+","label":"a"},{"dir":"-","label":"b"}],[{"dir":"-","label":"a"},{"dir":"+","label":"b"}]]}"#
        );
        assert_eq!(ArrowPresentation::from_json(&json).unwrap(), ap);
    }

    #[test]
    fn delete_keeps_isolated_circles() {
        let bridge = ArrowPresentation::parse("(e+)(e+)").unwrap();
        let e = EdgeLabel::new("e").unwrap();
        assert_eq!(bridge.delete_edge(&e).unwrap().serialize(), "()()");
        let lp = ArrowPresentation::parse("(e+ e+)").unwrap();
        assert_eq!(lp.delete_edge(&e).unwrap().serialize(), "()");
        let x = EdgeLabel::new("x").unwrap();
        assert_eq!(lp.delete_edge(&x), Err(Error::UnknownLabel("x".into())));
    }

    #[test]
    fn labels_are_validated() {
        assert!(EdgeLabel::new("e_1").is_ok());
        assert!(EdgeLabel::new("").is_err());
        assert!(EdgeLabel::new("a-b").is_err());
    }
}
