use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::solve::{arc_crossings, is_valid_coloring, quandle_colorings, Coloring};
use super::{ColoringError, Magma2};
use crate::diagram::{LinkDiagram, Sign};

/// Finitely supported integer combination of color pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoChain(pub BTreeMap<(usize, usize), i64>);

impl TwoChain {
    pub fn add(&mut self, pair: (usize, usize), k: i64) {
        let e = self.0.entry(pair).or_insert(0);
        *e += k;
        if *e == 0 {
            self.0.remove(&pair);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `∂(a, b) = (a) - (a * b)`.
    pub fn boundary(&self, q: &Magma2) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (&(a, b), &k) in &self.0 {
            *out.entry(a).or_insert(0) += k;
            *out.entry(q.star(a, b)).or_insert(0) -= k;
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

/// `Σ sgn(v)·(a, b)` with `a` the color entering under a positive crossing and
/// the color leaving under a negative one, `b` the over color.
pub fn two_chain(d: &LinkDiagram, q: &Magma2, c: &Coloring) -> Result<TwoChain, ColoringError> {
    if !is_valid_coloring(d, q, c) {
        return Err(ColoringError::InvalidColoring);
    }
    let (xs, _) = arc_crossings(d);
    let mut chain = TwoChain::default();
    for x in xs {
        let b = c.0[x.over];
        match x.sign {
            Sign::Positive => chain.add((c.0[x.under_in], b), 1),
            Sign::Negative => chain.add((c.0[x.under_out], b), -1),
        }
    }
    Ok(chain)
}

/// `α: X × X → Z_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleMap {
    pub modulus: u64,
    pub alpha: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleCheck {
    pub is_cocycle: bool,
    pub is_quandle_cocycle: bool,
    /// First triple violating the cocycle condition.
    pub violation: Option<(usize, usize, usize)>,
}

impl CocycleMap {
    pub fn new(modulus: u64, alpha: Vec<Vec<u64>>) -> Result<Self, ColoringError> {
        if modulus == 0 {
            return Err(ColoringError::BadTable("modulus must be positive".into()));
        }
        let n = alpha.len();
        if alpha.iter().any(|r| r.len() != n) {
            return Err(ColoringError::BadTable("alpha must be square".into()));
        }
        let alpha = alpha.into_iter().map(|r| r.into_iter().map(|v| v % modulus).collect()).collect();
        Ok(Self { modulus, alpha })
    }

    pub fn zero(size: usize, modulus: u64) -> Self {
        Self { modulus, alpha: vec![vec![0; size]; size] }
    }

    pub fn from_json(text: &str) -> Result<Self, ColoringError> {
        let c: CocycleMap = serde_json::from_str(text).map_err(|e| ColoringError::BadTable(e.to_string()))?;
        Self::new(c.modulus, c.alpha)
    }

    /// `(δβ)(a, b) = β(a) - β(a * b)`.
    pub fn coboundary(q: &Magma2, beta: &[u64], modulus: u64) -> Self {
        let n = q.size();
        let alpha = (0..n)
            .map(|a| (0..n).map(|b| (beta[a] % modulus + modulus - beta[q.star(a, b)] % modulus) % modulus).collect())
            .collect();
        Self { modulus, alpha }
    }

    pub fn size(&self) -> usize {
        self.alpha.len()
    }

    pub fn at(&self, a: usize, b: usize) -> u64 {
        self.alpha[a][b]
    }
}

/// `α(x0,x1) + α(x0*x1, x2) = α(x0,x2) + α(x0*x2, x1*x2)` for all triples.
pub fn check_2cocycle(q: &Magma2, alpha: &CocycleMap) -> Result<CocycleCheck, ColoringError> {
    if alpha.size() != q.size() {
        return Err(ColoringError::SizeMismatch { quandle: q.size(), other: alpha.size() });
    }
    let n = q.size();
    let m = alpha.modulus;
    let mut violation = None;
    'outer: for x0 in 0..n {
        for x1 in 0..n {
            for x2 in 0..n {
                let lhs = (alpha.at(x0, x1) + alpha.at(q.star(x0, x1), x2)) % m;
                let rhs = (alpha.at(x0, x2) + alpha.at(q.star(x0, x2), q.star(x1, x2))) % m;
                if lhs != rhs {
                    violation = Some((x0, x1, x2));
                    break 'outer;
                }
            }
        }
    }
    let is_cocycle = violation.is_none();
    let is_quandle_cocycle = is_cocycle && (0..n).all(|a| alpha.at(a, a) == 0);
    Ok(CocycleCheck { is_cocycle, is_quandle_cocycle, violation })
}

pub fn is_2cocycle(q: &Magma2, alpha: &CocycleMap) -> bool {
    check_2cocycle(q, alpha).is_ok_and(|c| c.is_cocycle)
}

/// `Σ sgn(v)·α(a, b)` over the crossings of a colored diagram.
pub fn cocycle_value(d: &LinkDiagram, q: &Magma2, alpha: &CocycleMap, c: &Coloring) -> Result<u64, ColoringError> {
    let chain = two_chain(d, q, c)?;
    let m = alpha.modulus as i128;
    let mut total: i128 = 0;
    for (&(a, b), &k) in &chain.0 {
        total += k as i128 * alpha.at(a, b) as i128;
    }
    Ok(total.rem_euclid(m) as u64)
}

/// Sorted multiset of cocycle values over all colorings.
pub fn cocycle_state_sum(d: &LinkDiagram, q: &Magma2, alpha: &CocycleMap) -> Result<Vec<u64>, ColoringError> {
    if alpha.size() != q.size() {
        return Err(ColoringError::SizeMismatch { quandle: q.size(), other: alpha.size() });
    }
    let mut values = quandle_colorings(d, q, false)?
        .iter()
        .map(|c| cocycle_value(d, q, alpha, c))
        .collect::<Result<Vec<_>, _>>()?;
    values.sort_unstable();
    Ok(values)
}
