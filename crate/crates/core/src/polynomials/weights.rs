//! Per-edge weight triples `(white, black, crossing)` and their permutation
//! by group assignments.

use std::collections::BTreeMap;

use serde_json::Value;

use super::laurent::{k, v, LaurentPoly, Var};
use crate::ribbon_core::EdgeLabel;
use crate::twisted_duality::GammaAssignment;
use crate::{Error, Result};

/// Weights of the white split, black split and crossing, in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightTriple(pub [LaurentPoly; 3]);

impl WeightTriple {
    pub fn new(white: LaurentPoly, black: LaurentPoly, crossing: LaurentPoly) -> Self {
        WeightTriple([white, black, crossing])
    }

    /// Integer weights.
    pub fn ints(white: i64, black: i64, crossing: i64) -> Self {
        WeightTriple::new(k(white), k(black), k(crossing))
    }

    /// `(α_e, β_e, γ_e)`.
    pub fn symbolic(e: &EdgeLabel) -> Self {
        WeightTriple::new(v(Var::Alpha(e.clone())), v(Var::Beta(e.clone())), v(Var::Gamma(e.clone())))
    }

    /// Permutes the positions by the group element's image in S₃: the weight
    /// at position `i` moves to position `π(i)`.
    pub fn permuted(&self, g: crate::twisted_duality::GroupElement) -> Self {
        let p = g.permutation();
        let mut out = self.0.clone();
        for (i, w) in self.0.iter().enumerate() {
            out[p[i]] = w.clone();
        }
        WeightTriple(out)
    }
}

/// One weight triple per edge.
pub type WeightSystem = BTreeMap<EdgeLabel, WeightTriple>;

/// The same triple on every edge.
pub fn uniform_weights(labels: &[EdgeLabel], triple: &WeightTriple) -> WeightSystem {
    labels.iter().map(|l| (l.clone(), triple.clone())).collect()
}

/// `(α_e, β_e, γ_e)` on every edge.
pub fn symbolic_weights(labels: &[EdgeLabel]) -> WeightSystem {
    labels.iter().map(|l| (l.clone(), WeightTriple::symbolic(l))).collect()
}

/// `(1, 0, −1)` on every edge.
pub fn penrose_weights(labels: &[EdgeLabel]) -> WeightSystem {
    uniform_weights(labels, &WeightTriple::ints(1, 0, -1))
}

/// `(b_e, 1, 0)` on every edge.
pub fn topochromatic_weights(labels: &[EdgeLabel]) -> WeightSystem {
    labels
        .iter()
        .map(|l| (l.clone(), WeightTriple::new(v(Var::B(l.clone())), k(1), k(0))))
        .collect()
}

/// Permutes each edge's triple by its group element; edges absent from
/// `gamma` keep their triple.
pub fn permute_weights(w: &WeightSystem, gamma: &GammaAssignment) -> WeightSystem {
    w.iter()
        .map(|(l, t)| (l.clone(), t.permuted(gamma.get(l))))
        .collect()
}

fn weight_value(value: &Value) -> Result<LaurentPoly> {
    let bad = || Error::Json(format!("weight must be an integer or a variable name, got {value}"));
    match value {
        Value::Number(n) => n.as_i64().map(k).ok_or_else(bad),
        Value::String(s) => {
            let s = s.trim();
            if let Ok(c) = s.parse::<i64>() {
                return Ok(k(c));
            }
            match s.strip_prefix('-') {
                Some(rest) => Ok(-v(rest.parse()?)),
                None => Ok(v(s.parse()?)),
            }
        }
        _ => Err(bad()),
    }
}

fn triple_value(value: &Value) -> Result<WeightTriple> {
    match value {
        Value::Array(items) if items.len() == 3 => Ok(WeightTriple::new(
            weight_value(&items[0])?,
            weight_value(&items[1])?,
            weight_value(&items[2])?,
        )),
        _ => Err(Error::Json(format!("expected a triple [white, black, crossing], got {value}"))),
    }
}

/// Parses weights given as one triple for every edge, `[1, 0, -1]`, or as
/// an object from edge labels to triples, `{"e": [1, "b_e", 0]}`. Entries
/// are integers or variable names, optionally negated.
pub fn parse_weights(json: &str, labels: &[EdgeLabel]) -> Result<WeightSystem> {
    let value: Value = serde_json::from_str(json).map_err(|e| Error::Json(e.to_string()))?;
    match &value {
        Value::Array(_) => Ok(uniform_weights(labels, &triple_value(&value)?)),
        Value::Object(map) => {
            let mut out = WeightSystem::new();
            for (name, t) in map {
                let l = EdgeLabel::new(name.as_str())?;
                if !labels.contains(&l) {
                    return Err(Error::UnknownLabel(name.clone()));
                }
                out.insert(l, triple_value(t)?);
            }
            for l in labels {
                if !out.contains_key(l) {
                    return Err(Error::IncompleteAssignment(l.to_string()));
                }
            }
            Ok(out)
        }
        _ => Err(Error::Json("weights must be a triple or an object of triples".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twisted_duality::GroupElement;

    #[test]
    fn tau_swaps_white_and_crossing() {
        assert_eq!(WeightTriple::ints(1, 0, -1).permuted(GroupElement::Tau), WeightTriple::ints(-1, 0, 1));
    }

    #[test]
    fn delta_swaps_white_and_black() {
        let b = v(Var::B(EdgeLabel::new("e").unwrap()));
        let t = WeightTriple::new(b.clone(), k(1), k(0));
        assert_eq!(t.permuted(GroupElement::Delta), WeightTriple::new(k(1), b, k(0)));
    }

    #[test]
    fn identity_keeps_weights() {
        let labels = vec![EdgeLabel::new("e").unwrap()];
        let w = symbolic_weights(&labels);
        assert_eq!(permute_weights(&w, &GammaAssignment::new()), w);
    }

    #[test]
    fn permutation_is_an_action() {
        let t = WeightTriple::symbolic(&EdgeLabel::new("e").unwrap());
        for g in GroupElement::ALL {
            for h in GroupElement::ALL {
                assert_eq!(t.permuted(h).permuted(g), t.permuted(g.compose(h)));
            }
        }
    }

    #[test]
    fn parse_forms() {
        let labels = vec![EdgeLabel::new("e").unwrap(), EdgeLabel::new("f").unwrap()];
        let w = parse_weights("[1, 0, -1]", &labels).unwrap();
        assert_eq!(w[&labels[1]], WeightTriple::ints(1, 0, -1));
        let w = parse_weights(r#"{"e": ["b_e", 1, 0], "f": [1, 1, "-q"]}"#, &labels).unwrap();
        assert_eq!(w[&labels[1]].0[2], -v(Var::Q));
        assert!(parse_weights(r#"{"e": [1, 1, 1]}"#, &labels).is_err());
    }
}
