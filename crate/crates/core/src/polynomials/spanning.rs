//! Spanning-subgraph expansions: the topochromatic, Bollobás–Riordan, Las
//! Vergnas and signed topochromatic polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::laurent::{k, v, LaurentPoly, Var};
use super::penrose::subset;
use crate::ribbon_core::{check, invariants, ArrowPresentation, Bound, EdgeLabel, InvariantRecord};
use crate::twisted_duality::partial_dual_set;
use crate::{Error, Result};

/// Sums `term(A, invariants of the spanning subgraph on A)` over all edge subsets.
fn subset_sum(
    ap: &ArrowPresentation,
    term: impl Fn(&[EdgeLabel], &InvariantRecord) -> LaurentPoly + Sync,
) -> Result<LaurentPoly> {
    check(Bound::SubsetEdges, "edge count", ap.edge_count())?;
    let labels = ap.labels();
    Ok((0..1usize << labels.len())
        .into_par_iter()
        .map(|mask| {
            let a = subset(&labels, mask);
            let h = ap.retain_edges(|l| a.contains(l));
            term(&a, &invariants(&h))
        })
        .reduce(LaurentPoly::zero, |x, y| x + y))
}

fn pow(var: Var, e: usize) -> LaurentPoly {
    LaurentPoly::var_pow(var, e as i64)
}

/// `Z(G; a, b, c, w) = Σ_H a^{k(H)} (Π_{e ∈ H} b_e) c^{f(H)} w^{t(H)}`.
pub fn topochromatic(ap: &ArrowPresentation) -> Result<LaurentPoly> {
    subset_sum(ap, |a, r| {
        let b: LaurentPoly = a.iter().map(|e| v(Var::B(e.clone()))).product();
        pow(Var::A, r.k) * b * pow(Var::C, r.f) * pow(Var::W, r.t())
    })
}

/// `R(G; x, y, z, w) = Σ_A (x − 1)^{r(G) − r(A)} y^{n(A)} z^{γ(A)} w^{t(A)}`,
/// with `γ` the Euler genus.
pub fn bollobas_riordan(ap: &ArrowPresentation) -> Result<LaurentPoly> {
    let rg = invariants(ap).r;
    let xm1 = v(Var::X) - k(1);
    subset_sum(ap, |_, r| {
        xm1.pow((rg - r.r) as u32) * pow(Var::Y, r.n) * pow(Var::Z, r.euler_genus) * pow(Var::W, r.t())
    })
}

/// `L(G; x, y, z) = Σ_A (x − 1)^{r(G) − r(A)} (y − 1)^{n(A) − 2g(A)} z^{2g(G) − 2g(A)}`
/// for orientable `G`, with `g` the orientable genus.
pub fn las_vergnas(ap: &ArrowPresentation) -> Result<LaurentPoly> {
    let rec = invariants(ap);
    if !rec.orientable {
        return Err(Error::NotOrientable);
    }
    let xm1 = v(Var::X) - k(1);
    let ym1 = v(Var::Y) - k(1);
    subset_sum(ap, |_, r| {
        xm1.pow((rec.r - r.r) as u32)
            * ym1.pow((r.n - r.euler_genus) as u32)
            * pow(Var::Z, rec.euler_genus - r.euler_genus)
    })
}

/// Edge sign of a signed ribbon graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// An embedded graph with a sign on every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedRibbonGraph {
    pub graph: ArrowPresentation,
    pub signs: BTreeMap<EdgeLabel, Sign>,
}

impl SignedRibbonGraph {
    /// Fails unless every edge has a sign and every sign names an edge.
    pub fn new(graph: ArrowPresentation, signs: BTreeMap<EdgeLabel, Sign>) -> Result<Self> {
        for l in graph.labels() {
            if !signs.contains_key(&l) {
                return Err(Error::MissingSign(l.to_string()));
            }
        }
        for l in signs.keys() {
            if !graph.contains(l) {
                return Err(Error::UnknownLabel(l.to_string()));
            }
        }
        Ok(SignedRibbonGraph { graph, signs })
    }

    /// Every edge positive.
    pub fn all_positive(graph: ArrowPresentation) -> Self {
        let signs = graph.labels().into_iter().map(|l| (l, Sign::Plus)).collect();
        SignedRibbonGraph { graph, signs }
    }

    /// Partial dual with respect to `a`, changing the sign of every edge in `a`.
    pub fn partial_dual(&self, a: &[EdgeLabel]) -> Result<Self> {
        let graph = partial_dual_set(&self.graph, a)?;
        let mut signs = self.signs.clone();
        for l in a {
            if let Some(s) = signs.get_mut(l) {
                *s = s.flipped();
            }
        }
        Ok(SignedRibbonGraph { graph, signs })
    }
}

impl fmt::Display for SignedRibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} signs:", self.graph)?;
        for (l, s) in &self.signs {
            write!(f, " {l}={}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for SignedRibbonGraph {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let (graph_text, signs_text) = match text.find("signs:") {
            Some(i) => (&text[..i], &text[i + "signs:".len()..]),
            None => {
                let graph: ArrowPresentation = text.parse()?;
                return match graph.labels().first() {
                    Some(l) => Err(Error::MissingSign(l.to_string())),
                    None => Ok(SignedRibbonGraph::all_positive(graph)),
                };
            }
        };
        let graph: ArrowPresentation = graph_text.parse()?;
        let offset = text.len() - signs_text.len();
        let mut signs = BTreeMap::new();
        for token in signs_text.split_whitespace() {
            let position = offset + signs_text.find(token).unwrap_or(0);
            let syntax = |message: String| Error::Syntax { position, message };
            let (name, sign) = token
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected `label=+` or `label=-`, got `{token}`")))?;
            let sign = match sign {
                "+" => Sign::Plus,
                "-" => Sign::Minus,
                other => return Err(syntax(format!("unknown sign `{other}`"))),
            };
            signs.insert(EdgeLabel::new(name)?, sign);
        }
        SignedRibbonGraph::new(graph, signs)
    }
}

/// `Z̃(G; q, α, c) = Σ_H q^{k(H) + s(H)} (Π_{e ∈ E₊(H) ∪ E₋(H̄)} α_e) c^{f(H)}`
/// with `s(H) = (e₋(H) − e₋(H̄)) / 2`, `H̄` the complementary edge set.
pub fn signed_topochromatic(g: &SignedRibbonGraph) -> Result<LaurentPoly> {
    subset_sum(&g.graph, |a, r| {
        let mut doubled = 2 * r.k as i64;
        let mut alpha = LaurentPoly::one();
        for (l, s) in &g.signs {
            let inside = a.contains(l);
            match (s, inside) {
                (Sign::Minus, true) => doubled += 1,
                (Sign::Minus, false) => {
                    doubled -= 1;
                    alpha = alpha * v(Var::Alpha(l.clone()));
                }
                (Sign::Plus, true) => alpha = alpha * v(Var::Alpha(l.clone())),
                (Sign::Plus, false) => {}
            }
        }
        LaurentPoly::var_doubled(Var::Q, doubled) * alpha * pow(Var::C, r.f)
    })
}
