//! Chain complex `C_n = span(Xⁿ)` of a Yang-Baxter operator.
//!
//! `d_i^ℓ` braids the `i`-th factor to the left edge through `R` and deletes
//! it; `d_i^r` braids it to the right edge and deletes it. Deletion sends a
//! basis element to 1, so the complex is only well behaved for column-unital
//! operators. The boundary is `∂_n = Σ_i (-1)^{i+1} (d_i^ℓ - d_i^r)`, which in
//! degree 2 reads `∂(a, b) = (a) + (b) - Σ R^{a,b}_{c,d} ((c) + (d))`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{YangBaxterOperator, YbError};
use crate::algebra::{homology_at, AbelianGroup, IntMatrix, LaurentPoly, PolyMatrix};
use crate::diagram::{LinkDiagram, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// `R` acting on tensor factors `k, k+1` (1-based) of `V^{⊗n}`.
fn r_at(r: &YangBaxterOperator, n: usize, k: usize) -> PolyMatrix {
    let d = r.dim();
    let left = PolyMatrix::identity(d.pow(k as u32 - 1));
    let right = PolyMatrix::identity(d.pow((n - k - 1) as u32));
    left.kronecker(r.matrix()).kronecker(&right)
}

fn deletion(d: usize, n: usize, side: Side) -> PolyMatrix {
    let cols = d.pow(n as u32);
    let rest = d.pow(n as u32 - 1);
    let mut m = PolyMatrix::new(rest, cols);
    for c in 0..cols {
        let row = match side {
            Side::Left => c % rest,
            Side::Right => c / d,
        };
        m.set(row, c, LaurentPoly::one(crate::algebra::Variable::A)).expect("in range");
    }
    m
}

/// Face `d_i^ε : C_n -> C_{n-1}` for `1 <= i <= n`.
pub fn yb_face_map(r: &YangBaxterOperator, n: usize, i: usize, side: Side) -> Result<PolyMatrix, YbError> {
    if i == 0 || i > n {
        return Err(YbError::IndexOutOfRange { degree: n, index: i });
    }
    let d = r.dim();
    let mut m = PolyMatrix::identity(d.pow(n as u32));
    match side {
        Side::Left => {
            for k in (1..i).rev() {
                m = r_at(r, n, k).mul(&m).expect("square");
            }
        }
        Side::Right => {
            for k in i..n {
                m = r_at(r, n, k).mul(&m).expect("square");
            }
        }
    }
    Ok(deletion(d, n, side).mul(&m).expect("composable"))
}

/// `∂_n = Σ_{i=1}^n (-1)^{i+1} (d_i^ℓ - d_i^r)` over the Laurent ring.
pub fn yb_boundary(r: &YangBaxterOperator, n: usize) -> Result<PolyMatrix, YbError> {
    let d = r.dim();
    if n == 0 {
        return Ok(PolyMatrix::new(0, 1));
    }
    let mut acc = PolyMatrix::new(d.pow(n as u32 - 1), d.pow(n as u32));
    for i in 1..=n {
        let term = yb_face_map(r, n, i, Side::Left)?
            .sub(&yb_face_map(r, n, i, Side::Right)?)
            .expect("same shape");
        acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) }.expect("same shape");
    }
    Ok(acc)
}

pub fn column_sums(r: &YangBaxterOperator) -> Vec<LaurentPoly> {
    let n = r.dim() * r.dim();
    let m = r.matrix();
    (0..n)
        .map(|c| (0..n).fold(LaurentPoly::zero(r.variable()), |acc, row| &acc + &m.entry(row, c)))
        .collect()
}

/// Evaluate every entry at `value` and scale by the common denominator.
pub fn specialize(m: &PolyMatrix, value: &BigRational) -> Result<IntMatrix, YbError> {
    let mut vals = Vec::with_capacity(m.nnz());
    let mut den = BigInt::one();
    for (r, c, p) in m.iter() {
        let v = p.eval(value).map_err(|e| YbError::SpecializationPole(e.to_string()))?;
        den = den.lcm(v.denom());
        vals.push((r, c, v));
    }
    let scale = BigRational::from_integer(den);
    let entries = vals.into_iter().filter_map(|(r, c, v)| {
        let x = v * &scale;
        debug_assert!(x.is_integer());
        (!x.is_zero()).then(|| (r, c, x.to_integer()))
    });
    Ok(IntMatrix::from_entries(m.rows(), m.cols(), entries).expect("in range"))
}

pub fn yb_boundary_specialized(r: &YangBaxterOperator, n: usize, value: &BigRational) -> Result<IntMatrix, YbError> {
    specialize(&yb_boundary(r, n)?, value)
}

/// `H_n` of the complex specialized at `value`; requires a column-unital operator.
pub fn yb_homology(r: &YangBaxterOperator, n: usize, value: &BigRational) -> Result<AbelianGroup, YbError> {
    if !r.is_column_unital() {
        return Err(YbError::NotColumnUnital);
    }
    let d_out = yb_boundary_specialized(r, n, value)?;
    let d_in = yb_boundary_specialized(r, n + 1, value)?;
    homology_at(r.dim().pow(n as u32), Some(&d_out), Some(&d_in)).map_err(|e| YbError::BadOperator(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleReport {
    /// `Ψ(D, φ)` as signed color pairs.
    pub chain: BTreeMap<(usize, usize), i64>,
    /// `∂₂Ψ` by color; empty when `Ψ` is a cycle.
    pub boundary: BTreeMap<usize, LaurentPoly>,
    pub is_cycle: bool,
    /// Crossings whose Boltzmann weight under `φ` vanishes.
    pub zero_weight_crossings: Vec<usize>,
}

/// `Ψ(D, φ) = Σ sgn(v)·(a, b)` for a semi-arc coloring `φ` (indexed by
/// `label - 1`) and its image under `∂₂`. The pair at a positive crossing is
/// (under-in, over-in); at a negative one the outgoing pair (under-out, over-out).
pub fn yb_cycle_check(d: &LinkDiagram, phi: &[usize], r: &YangBaxterOperator) -> Result<CycleReport, YbError> {
    if phi.len() != d.semi_arc_count() || phi.iter().any(|&c| c >= r.dim()) {
        return Err(YbError::BadColoring);
    }
    let col = |l: u32| phi[l as usize - 1];
    let mut chain: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    let mut zero_weight_crossings = Vec::new();
    for (k, x) in d.crossings().iter().enumerate() {
        let (ui, uo, oi, oo) = (col(x.under_in()), col(x.under_out()), col(x.over_in()), col(x.over_out()));
        let (pair, s, w) = match x.sign {
            Sign::Positive => ((ui, oi), 1, r.weight(ui, oi, oo, uo)),
            Sign::Negative => ((uo, oo), -1, r.inverse_weight(oi, ui, uo, oo).unwrap_or_else(|_| LaurentPoly::zero(r.variable()))),
        };
        if w.is_zero() {
            zero_weight_crossings.push(k);
        }
        *chain.entry(pair).or_insert(0) += s;
    }
    chain.retain(|_, v| *v != 0);
    let mut boundary: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    let mut bump = |color: usize, p: &LaurentPoly| {
        let e = boundary.entry(color).or_insert_with(|| LaurentPoly::zero(r.variable()));
        *e += p;
    };
    for (&(a, b), &k) in &chain {
        let kp = LaurentPoly::constant(r.variable(), k);
        bump(a, &kp);
        bump(b, &kp);
        for ((c, dd), w) in r.image(a, b) {
            let t = -(&w * &kp);
            bump(c, &t);
            bump(dd, &t);
        }
    }
    boundary.retain(|_, v| !v.is_zero());
    Ok(CycleReport { is_cycle: boundary.is_empty(), chain, boundary, zero_weight_crossings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Variable;
    use crate::colorings::{dihedral_quandle, trivial_quandle};
    use crate::yang_baxter::{jones_r_matrix, JonesVariant, SetTheoreticYB};

    fn poly_entries(m: &PolyMatrix) -> Vec<Vec<LaurentPoly>> {
        m.to_dense()
    }

    #[test]
    fn degree_two_faces() {
        let r = jones_r_matrix(JonesVariant::Standard);
        let d = 2;
        let l1 = yb_face_map(&r, 2, 1, Side::Left).unwrap();
        let r1 = yb_face_map(&r, 2, 1, Side::Right).unwrap();
        let l2 = yb_face_map(&r, 2, 2, Side::Left).unwrap();
        let r2 = yb_face_map(&r, 2, 2, Side::Right).unwrap();
        for a in 0..d {
            for b in 0..d {
                let col = a * d + b;
                let unit = |x: usize| (0..d).map(|row| if row == x { LaurentPoly::one(Variable::Q) } else { LaurentPoly::zero(Variable::Q) }).collect::<Vec<_>>();
                let column = |m: &PolyMatrix| (0..d).map(|row| m.entry(row, col)).collect::<Vec<_>>();
                assert_eq!(column(&l1), unit(b));
                assert_eq!(column(&r2), unit(a));
                let first: Vec<LaurentPoly> = (0..d).map(|c| (0..d).map(|dd| r.weight(a, b, c, dd)).sum()).collect();
                let second: Vec<LaurentPoly> = (0..d).map(|dd| (0..d).map(|c| r.weight(a, b, c, dd)).sum()).collect();
                assert_eq!(column(&r1), first);
                assert_eq!(column(&l2), second);
            }
        }
        assert_eq!(poly_entries(&l1).len(), 2);
    }

    #[test]
    fn boundary_squares_to_zero_for_column_unital() {
        let r = jones_r_matrix(JonesVariant::ColumnUnital);
        for n in 2..=4 {
            let prod = yb_boundary(&r, n - 1).unwrap().mul(&yb_boundary(&r, n).unwrap()).unwrap();
            assert!(prod.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn quandle_degree_two() {
        let q = dihedral_quandle(3);
        let r = SetTheoreticYB::from_quandle(&q).unwrap().to_operator();
        let m = yb_boundary(&r, 2).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let mut expected = vec![0i64; 3];
                expected[a] += 1;
                expected[q.star(a, b)] -= 1;
                let got: Vec<i64> = (0..3).map(|row| i64::try_from(&m.entry(row, a * 3 + b).coeff(0)).unwrap()).collect();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn swap_gives_zero_boundary() {
        let r = SetTheoreticYB::from_quandle(&trivial_quandle(3)).unwrap().to_operator();
        for n in 1..=3 {
            for i in 1..=n {
                assert_eq!(yb_face_map(&r, n, i, Side::Left).unwrap(), yb_face_map(&r, n, i, Side::Right).unwrap());
            }
            let two = BigRational::from_integer(2.into());
            assert_eq!(yb_homology(&r, n, &two).unwrap(), AbelianGroup::free(3usize.pow(n as u32)));
        }
    }

    #[test]
    fn homology_requires_column_unital() {
        let r = jones_r_matrix(JonesVariant::Standard);
        let two = BigRational::from_integer(2.into());
        assert_eq!(yb_homology(&r, 1, &two), Err(YbError::NotColumnUnital));
        assert!(yb_homology(&jones_r_matrix(JonesVariant::ColumnUnital), 1, &two).is_ok());
        assert!(matches!(yb_face_map(&r, 2, 3, Side::Left), Err(YbError::IndexOutOfRange { .. })));
    }
}
