use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Role of the indeterminate of a [`LaurentPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variable {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "q")]
    Q,
    /// `x = t^{1/2}`, so half-integer powers of `t` stay integral.
    #[serde(rename = "t_half")]
    THalf,
    #[serde(rename = "y")]
    Y,
}

impl Variable {
    pub fn symbol(self) -> &'static str {
        match self {
            Variable::A => "A",
            Variable::Q => "q",
            Variable::THalf => "x",
            Variable::Y => "y",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "A" | "a" => Some(Variable::A),
            "q" => Some(Variable::Q),
            "t_half" | "x" => Some(Variable::THalf),
            "y" => Some(Variable::Y),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("evaluation at 0 of a polynomial with negative exponent {0}")]
    Pole(i64),
}

/// Single-variable Laurent polynomial with arbitrary-size integer coefficients.
///
/// Zero coefficients are never stored. Constants compare equal regardless of
/// their variable tag, and mixing a constant with a polynomial in any variable
/// is allowed.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        Self { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Variable) -> Self {
        Self::constant(var, 1)
    }

    pub fn constant(var: Variable, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: Variable, exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { var, terms }
    }

    /// The indeterminate itself.
    pub fn variable(var: Variable) -> Self {
        Self::monomial(var, 1, 1)
    }

    pub fn from_terms<I, C>(var: Variable, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    /// Same coefficients, different variable tag.
    pub fn with_var(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Units of `Z[x, x^{-1}]` are exactly `±x^k`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Self {
            var: self.var,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Substitute `x -> x^k`; `k = -1` is the mirror substitution `A -> A^{-1}`.
    pub fn substitute_power(&self, k: i64) -> Self {
        let mut p = Self::zero(self.var);
        for (e, c) in &self.terms {
            p.add_term(e * k, c);
        }
        p
    }

    /// Substitute `x -> s * x` for a sign `s = ±1`, e.g. `q -> -x`.
    pub fn substitute_sign(&self, negate: bool) -> Self {
        Self {
            var: self.var,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let odd = e.rem_euclid(2) == 1;
                    (*e, if negate && odd { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Non-negative powers for any polynomial, negative powers only for units.
    pub fn pow(&self, k: i64) -> Option<Self> {
        if k >= 0 {
            let mut acc = Self::one(self.var);
            let mut base = self.clone();
            let mut k = k as u64;
            while k > 0 {
                if k & 1 == 1 {
                    acc = &acc * &base;
                }
                base = &base * &base;
                k >>= 1;
            }
            Some(acc)
        } else {
            let inv = self.unit_inverse()?;
            inv.pow(-k)
        }
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(self.var, -e, c.clone()))
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational, EvalError> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let term = if *e >= 0 {
                num_traits::pow::pow(x.clone(), *e as usize)
            } else {
                if x.is_zero() {
                    return Err(EvalError::Pole(*e));
                }
                num_traits::pow::pow(x.recip(), (-e) as usize)
            };
            acc += term * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let var = self.merged_var(divisor);
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(var));
        }
        let p_min = self.min_exp()?;
        let d_min = divisor.min_exp()?;
        // ordinary polynomial division after clearing the x-powers
        let mut rem: BTreeMap<i64, BigInt> =
            self.terms.iter().map(|(e, c)| (e - p_min, c.clone())).collect();
        let d: Vec<(i64, BigInt)> = divisor.terms.iter().map(|(e, c)| (e - d_min, c.clone())).collect();
        let (d_deg, d_lead) = d.last().cloned()?;
        let mut quot = Self::zero(var);
        while let Some((&r_deg, r_lead)) = rem.iter().next_back() {
            if r_deg < d_deg {
                return None;
            }
            let (q, r) = r_lead.div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            let shift = r_deg - d_deg;
            for (e, c) in &d {
                let entry = rem.entry(e + shift).or_insert_with(BigInt::zero);
                *entry -= c * &q;
                if entry.is_zero() {
                    rem.remove(&(e + shift));
                }
            }
            quot.add_term(shift + p_min - d_min, &q);
        }
        Some(quot)
    }

    /// `[[exponent, coefficient], ...]` in increasing exponent order.
    pub fn to_pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c.clone())).collect()
    }

    pub fn terms_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| serde_json::json!([e, crate::algebra::bigint_json(c)]))
                .collect(),
        )
    }

    fn merged_var(&self, other: &Self) -> Variable {
        if self.is_constant() {
            other.var
        } else {
            debug_assert!(
                other.is_constant() || other.var == self.var,
                "mixing Laurent polynomials in {:?} and {:?}",
                self.var,
                other.var
            );
            self.var
        }
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.var == other.var || self.is_constant())
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let x = self.var.symbol();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match *e {
                0 => {}
                1 => write!(f, "{x}")?,
                _ => write!(f, "{x}^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    variable: Variable,
    terms: Vec<(i64, serde_json::Value)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self.terms.iter().map(|(e, c)| (*e, crate::algebra::bigint_json(c))).collect();
        LaurentRepr { variable: self.var, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = LaurentRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(r.terms.len());
        for (e, c) in r.terms {
            let c = crate::algebra::bigint_from_json(&c)
                .ok_or_else(|| serde::de::Error::custom(format!("bad coefficient {c}")))?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(r.variable, terms))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.var = self.merged_var(rhs);
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.var = self.merged_var(rhs);
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.merged_var(rhs));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.var = self.merged_var(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero(Variable::A);
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(Variable::A), |acc, p| &acc * &p)
    }
}

/// `-A^2 - A^{-2}`, the value of a crossingless circle.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Variable::A, [(2, -1), (-2, -1)])
}

/// `q + q^{-1}`.
pub fn quantum_two() -> LaurentPoly {
    LaurentPoly::from_terms(Variable::Q, [(1, 1), (-1, 1)])
}
