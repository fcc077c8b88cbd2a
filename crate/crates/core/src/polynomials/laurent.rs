//! Sparse multivariate Laurent polynomials with integer coefficients.
//!
//! Exponents are stored doubled so that half-integer powers are exact. The
//! variable `w` is idempotent: every positive power of `w` reduces to `w`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::ribbon_core::EdgeLabel;
use crate::{Error, Result};

/// A polynomial variable: a global symbol or an edge-indexed weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    Lambda,
    X,
    Y,
    Z,
    W,
    A,
    C,
    Q,
    B(EdgeLabel),
    Alpha(EdgeLabel),
    Beta(EdgeLabel),
    Gamma(EdgeLabel),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => f.write_str("t"),
            Var::Lambda => f.write_str("λ"),
            Var::X => f.write_str("x"),
            Var::Y => f.write_str("y"),
            Var::Z => f.write_str("z"),
            Var::W => f.write_str("w"),
            Var::A => f.write_str("a"),
            Var::C => f.write_str("c"),
            Var::Q => f.write_str("q"),
            Var::B(e) => write!(f, "b_{e}"),
            Var::Alpha(e) => write!(f, "alpha_{e}"),
            Var::Beta(e) => write!(f, "beta_{e}"),
            Var::Gamma(e) => write!(f, "gamma_{e}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let global = match s {
            "t" => Some(Var::T),
            "λ" | "lambda" => Some(Var::Lambda),
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            "w" => Some(Var::W),
            "a" => Some(Var::A),
            "c" => Some(Var::C),
            "q" => Some(Var::Q),
            _ => None,
        };
        if let Some(v) = global {
            return Ok(v);
        }
        let edge = |prefix: &str| s.strip_prefix(prefix).map(EdgeLabel::new).transpose();
        if let Some(e) = edge("b_")? {
            Ok(Var::B(e))
        } else if let Some(e) = edge("alpha_")? {
            Ok(Var::Alpha(e))
        } else if let Some(e) = edge("beta_")? {
            Ok(Var::Beta(e))
        } else if let Some(e) = edge("gamma_")? {
            Ok(Var::Gamma(e))
        } else {
            Err(Error::Evaluation(format!("unknown variable `{s}`")))
        }
    }
}

/// Product of variable powers; exponents are doubled and never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<Var, i64>);

impl Monomial {
    /// Doubled exponent of `v`.
    pub fn doubled(&self, v: &Var) -> i64 {
        self.0.get(v).copied().unwrap_or(0)
    }

    /// Variables with their doubled exponents.
    pub fn powers(&self) -> impl Iterator<Item = (&Var, i64)> {
        self.0.iter().map(|(v, &e)| (v, e))
    }

    fn insert(&mut self, v: Var, doubled: i64) {
        let e = self.0.entry(v.clone()).or_insert(0);
        *e += doubled;
        if v == Var::W && *e > 0 {
            *e = 2;
        }
        if *e == 0 {
            self.0.remove(&v);
        }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (v, &e) in &other.0 {
            out.insert(v.clone(), e);
        }
        out
    }

    fn total_doubled(&self) -> i64 {
        self.0.values().sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, &e)| match e {
                2 => v.to_string(),
                e if e % 2 == 0 && e > 0 => format!("{v}^{}", e / 2),
                e if e % 2 == 0 => format!("{v}^({})", e / 2),
                e => format!("{v}^({e}/2)"),
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Finite sum of monomials with nonzero big-integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::term(c, Monomial::default())
    }

    /// The single variable `v`.
    pub fn var(v: Var) -> Self {
        LaurentPoly::var_pow(v, 1)
    }

    /// `v^k` for an integer `k`, possibly negative.
    pub fn var_pow(v: Var, k: i64) -> Self {
        LaurentPoly::var_doubled(v, 2 * k)
    }

    /// `v^(d/2)`.
    pub fn var_doubled(v: Var, d: i64) -> Self {
        let mut m = Monomial::default();
        m.insert(v, d);
        LaurentPoly::term(1, m)
    }

    fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(monomial, coefficient)` in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m`.
    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Multiplicative inverse, defined for `±` a monomial.
    pub fn inverse(&self) -> Result<LaurentPoly> {
        let (m, c) = self.single_term()?;
        if !c.abs().is_one() {
            return Err(Error::Evaluation(format!("{self} is not a unit")));
        }
        let mut inv = Monomial::default();
        for (v, &e) in &m.0 {
            if *v == Var::W {
                return Err(Error::Evaluation("w is not invertible".into()));
            }
            inv.insert(v.clone(), -e);
        }
        Ok(LaurentPoly::term(c.clone(), inv))
    }

    fn single_term(&self) -> Result<(&Monomial, &BigInt)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some(t), None) => Ok(t),
            _ => Err(Error::Evaluation(format!("{self} is not a single term"))),
        }
    }

    /// Power `self^(d/2)`; negative or half powers need a monomial argument
    /// (with a perfect-square coefficient and even exponents for half powers).
    fn power_doubled(&self, d: i64) -> Result<LaurentPoly> {
        let base = if d < 0 { self.inverse()? } else { self.clone() };
        let d = d.unsigned_abs();
        let whole = base.pow((d / 2) as u32);
        if d.is_multiple_of(2) {
            return Ok(whole);
        }
        let (m, c) = base.single_term()?;
        let root = c.sqrt();
        if c.is_negative() || &(&root * &root) != c || m.0.values().any(|e| e % 2 != 0) {
            return Err(Error::Evaluation(format!("no square root of {base}")));
        }
        let half = Monomial(m.0.iter().map(|(v, e)| (v.clone(), e / 2)).collect());
        Ok(&whole * &LaurentPoly::term(root, half))
    }

    /// Replaces each variable in `map` by the given polynomial.
    pub fn substitute(&self, map: &BTreeMap<Var, LaurentPoly>) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut term = LaurentPoly::term(c.clone(), Monomial::default());
            let mut rest = Monomial::default();
            for (v, &e) in &m.0 {
                match map.get(v) {
                    Some(p) => term = &term * &p.power_doubled(e)?,
                    None => rest.insert(v.clone(), e),
                }
            }
            out += &term * &LaurentPoly::term(1, rest);
        }
        Ok(out)
    }

    /// Renames a variable.
    pub fn rename(&self, from: &Var, to: Var) -> LaurentPoly {
        let map = BTreeMap::from([(from.clone(), LaurentPoly::var(to))]);
        self.substitute(&map).expect("renaming a variable never fails")
    }

    /// Evaluates at a rational point that assigns every variable present.
    pub fn eval_at(&self, point: &BTreeMap<Var, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = BigRational::from_integer(c.clone());
            for (v, &e) in &m.0 {
                let x = point
                    .get(v)
                    .ok_or_else(|| Error::Evaluation(format!("no value for {v}")))?;
                value *= rational_power(x, e)?;
            }
            total += value;
        }
        Ok(total)
    }

    /// Polynomial with exactly the terms `keep` accepts.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest doubled exponent of `v` among the terms, if any term exists.
    pub fn max_doubled(&self, v: &Var) -> Option<i64> {
        self.terms.keys().map(|m| m.doubled(v)).max()
    }

    /// Term list for machine output.
    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term {
            coefficient: String,
            doubled_exponents: BTreeMap<String, i64>,
        }
        let terms: Vec<Term> = self
            .display_order()
            .into_iter()
            .map(|(m, c)| Term {
                coefficient: c.to_string(),
                doubled_exponents: m.0.iter().map(|(v, &e)| (v.to_string(), e)).collect(),
            })
            .collect();
        serde_json::json!({ "text": self.to_string(), "terms": terms })
    }

    fn display_order(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.total_doubled().cmp(&a.total_doubled()).then_with(|| b.cmp(a)));
        terms
    }
}

fn rational_power(x: &BigRational, d: i64) -> Result<BigRational> {
    let base = if d < 0 {
        if x.is_zero() {
            return Err(Error::Evaluation("negative power of zero".into()));
        }
        x.recip()
    } else {
        x.clone()
    };
    let d = d.unsigned_abs();
    let mut out = num_traits::pow(base.clone(), (d / 2) as usize);
    if d % 2 == 1 {
        let (n, m) = (base.numer(), base.denom());
        let (rn, rm) = (n.sqrt(), m.sqrt());
        if n.is_negative() || &(&rn * &rn) != n || &(&rm * &rm) != m {
            return Err(Error::Evaluation(format!("{base} has no rational square root")));
        }
        out *= BigRational::new(rn, rm);
    }
    Ok(out)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.0.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

/// Shorthand for a variable as a polynomial.
pub fn v(var: Var) -> LaurentPoly {
    LaurentPoly::var(var)
}

/// Shorthand for an integer constant.
pub fn k(c: i64) -> LaurentPoly {
    LaurentPoly::constant(c)
}

/// Parses a rational value such as `3`, `-2` or `1/3`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Evaluation(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w_is_idempotent() {
        assert_eq!(v(Var::W) * v(Var::W), v(Var::W));
    }

    #[test]
    fn difference_of_squares() {
        let x = v(Var::X);
        assert_eq!((&x - &k(1)) * (&x + &k(1)), &x.pow(2) - &k(1));
    }

    #[test]
    fn half_powers_add() {
        let h = LaurentPoly::var_doubled(Var::Q, 1);
        assert_eq!(&h * &h, v(Var::Q));
        assert_eq!(h.to_string(), "q^(1/2)");
    }

    #[test]
    fn display() {
        let x = v(Var::X);
        let p = &(&x.pow(3) - &(&k(3) * &x.pow(2))) + &(&k(2) * &x);
        assert_eq!(p.to_string(), "x^3 - 3*x^2 + 2*x");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!((k(1) - v(Var::Lambda)).to_string(), "-λ + 1");
        assert_eq!(LaurentPoly::var_pow(Var::Y, -1).to_string(), "y^(-1)");
    }

    #[test]
    fn substitution_and_inverse() {
        let y = v(Var::Y);
        let p = LaurentPoly::var_pow(Var::Z, -2) + v(Var::Z);
        let yz = &y * &v(Var::X);
        let map = BTreeMap::from([(Var::Z, yz.clone())]);
        let expected = yz.inverse().unwrap().pow(2) + yz;
        assert_eq!(p.substitute(&map).unwrap(), expected);
        assert!((&y + &k(1)).inverse().is_err());
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::var_doubled(Var::Q, -1) * v(Var::X) + k(2);
        let point = BTreeMap::from([
            (Var::Q, BigRational::from_integer(4.into())),
            (Var::X, parse_rational("6").unwrap()),
        ]);
        assert_eq!(p.eval_at(&point).unwrap(), BigRational::from_integer(5.into()));
        let bad = BTreeMap::from([(Var::Q, parse_rational("2").unwrap()), (Var::X, parse_rational("1").unwrap())]);
        assert!(p.eval_at(&bad).is_err());
    }

    #[test]
    fn variable_names() {
        for name in ["t", "x", "b_e", "alpha_e1", "gamma_f", "lambda"] {
            let var: Var = name.parse().unwrap();
            if name != "lambda" {
                assert_eq!(var.to_string(), name);
            }
        }
        assert!("nope".parse::<Var>().is_err());
    }
}
