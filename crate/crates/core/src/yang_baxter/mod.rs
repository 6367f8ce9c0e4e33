//! Yang-Baxter operators, Boltzmann-weight state sums and Yang-Baxter homology.
//!
//! An operator on `V = kX` is stored as a `d² × d²` matrix whose column
//! `(a, b)` holds `R(a, b) = Σ R^{a,b}_{c,d} (c, d)`; pairs are indexed
//! row-major, `(a, b) ↦ a·d + b`.

mod homology;
mod state_sum;

use serde::Deserialize;

use crate::algebra::{LaurentPoly, PolyMatrix, Variable};
use crate::colorings::Magma2;

pub use homology::{
    column_sums, specialize, yb_boundary, yb_boundary_specialized, yb_cycle_check, yb_face_map, yb_homology, CycleReport,
    Side,
};
pub use state_sum::{framing_ratio, state_sum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum YbError {
    #[error("operator has no inverse with Laurent-polynomial entries")]
    MissingInverse,
    #[error("supplied inverse does not invert the operator")]
    BadInverse,
    #[error("operator is not column unital")]
    NotColumnUnital,
    #[error("specialization hits a pole: {0}")]
    SpecializationPole(String),
    #[error("face index {index} out of range for degree {degree}")]
    IndexOutOfRange { degree: usize, index: usize },
    #[error("operation is not invertible in the second argument (not a rack)")]
    NotARack,
    #[error("bad operator: {0}")]
    BadOperator(String),
    #[error("coloring does not match the diagram")]
    BadColoring,
}

#[derive(Clone, Debug, PartialEq)]
pub struct YangBaxterOperator {
    dim: usize,
    var: Variable,
    matrix: PolyMatrix,
    inverse: Option<PolyMatrix>,
}

fn poly_identity(n: usize) -> PolyMatrix {
    PolyMatrix::identity(n)
}

impl YangBaxterOperator {
    /// Checks the shape; a supplied inverse must satisfy `R·R̄ = I`.
    pub fn new(dim: usize, var: Variable, matrix: PolyMatrix, inverse: Option<PolyMatrix>) -> Result<Self, YbError> {
        let n = dim * dim;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(YbError::BadOperator(format!("expected a {n}x{n} matrix")));
        }
        if let Some(inv) = &inverse {
            if inv.rows() != n || inv.cols() != n || matrix.mul(inv).ok() != Some(poly_identity(n)) {
                return Err(YbError::BadInverse);
            }
        }
        Ok(Self { dim, var, matrix, inverse })
    }

    /// Like [`new`](Self::new) but computes the inverse when possible.
    pub fn with_computed_inverse(dim: usize, var: Variable, matrix: PolyMatrix) -> Result<Self, YbError> {
        let inverse = invert(&matrix).ok();
        Self::new(dim, var, matrix, inverse)
    }

    /// `{"dim": d, "variable": "q", "entries": [[[exp, coeff], ...], ...], "inverse": [...]}`
    /// with `d⁴` row-major entries.
    pub fn from_json(text: &str) -> Result<Self, YbError> {
        #[derive(Deserialize)]
        struct Repr {
            dim: usize,
            #[serde(default)]
            variable: Option<String>,
            entries: Vec<Vec<(i64, serde_json::Value)>>,
            #[serde(default)]
            inverse: Option<Vec<Vec<(i64, serde_json::Value)>>>,
        }
        let r: Repr = serde_json::from_str(text).map_err(|e| YbError::BadOperator(e.to_string()))?;
        let var = match &r.variable {
            Some(v) => Variable::parse(v).ok_or_else(|| YbError::BadOperator(format!("unknown variable {v}")))?,
            None => Variable::Q,
        };
        let n = r.dim * r.dim;
        let build = |entries: Vec<Vec<(i64, serde_json::Value)>>| -> Result<PolyMatrix, YbError> {
            if entries.len() != n * n {
                return Err(YbError::BadOperator(format!("expected {} entries, found {}", n * n, entries.len())));
            }
            let mut m = PolyMatrix::new(n, n);
            for (k, terms) in entries.into_iter().enumerate() {
                let mut p = LaurentPoly::zero(var);
                for (e, c) in terms {
                    let c = crate::algebra::bigint_from_json(&c)
                        .ok_or_else(|| YbError::BadOperator(format!("bad coefficient {c}")))?;
                    p.add_term(e, &c);
                }
                m.set(k / n, k % n, p).expect("in range");
            }
            Ok(m)
        };
        let matrix = build(r.entries)?;
        match r.inverse {
            Some(inv) => Self::new(r.dim, var, matrix, Some(build(inv)?)),
            None => Self::with_computed_inverse(r.dim, var, matrix),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let n = self.dim * self.dim;
        let entries = |m: &PolyMatrix| -> Vec<serde_json::Value> {
            (0..n * n).map(|k| m.entry(k / n, k % n).terms_json()).collect()
        };
        let mut v = serde_json::json!({
            "dim": self.dim,
            "variable": self.var,
            "entries": entries(&self.matrix),
        });
        if let Some(inv) = &self.inverse {
            v["inverse"] = serde_json::Value::Array(entries(inv));
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn variable(&self) -> Variable {
        self.var
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> Option<&PolyMatrix> {
        self.inverse.as_ref()
    }

    fn pair(&self, a: usize, b: usize) -> usize {
        a * self.dim + b
    }

    /// `R^{a,b}_{c,d}`.
    pub fn weight(&self, a: usize, b: usize, c: usize, d: usize) -> LaurentPoly {
        self.matrix.entry(self.pair(c, d), self.pair(a, b))
    }

    /// `R̄^{a,b}_{c,d}`, the entries of the inverse.
    pub fn inverse_weight(&self, a: usize, b: usize, c: usize, d: usize) -> Result<LaurentPoly, YbError> {
        let inv = self.inverse.as_ref().ok_or(YbError::MissingInverse)?;
        Ok(inv.entry(self.pair(c, d), self.pair(a, b)))
    }

    /// Nonzero outputs `((c, d), R^{a,b}_{c,d})` of `R(a, b)`.
    pub fn image(&self, a: usize, b: usize) -> Vec<((usize, usize), LaurentPoly)> {
        let col = self.pair(a, b);
        let mut out = Vec::new();
        for r in 0..self.dim * self.dim {
            if let Some(v) = self.matrix.get(r, col) {
                out.push(((r / self.dim, r % self.dim), v.clone()));
            }
        }
        out
    }

    pub fn is_column_unital(&self) -> bool {
        column_sums(self).iter().all(|s| *s == LaurentPoly::one(self.var))
    }
}

/// Gauss-Jordan inversion, pivoting only on units `±x^k`.
pub fn invert(m: &PolyMatrix) -> Result<PolyMatrix, YbError> {
    let n = m.rows();
    if m.cols() != n {
        return Err(YbError::MissingInverse);
    }
    let mut a = m.to_dense();
    let mut inv = poly_identity(n).to_dense();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col].is_unit()).ok_or(YbError::MissingInverse)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let u = a[col][col].unit_inverse().expect("unit pivot");
        for j in 0..n {
            a[col][j] = &a[col][j] * &u;
            inv[col][j] = &inv[col][j] * &u;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let da = &f * &a[col][j];
                a[r][j] = &a[r][j] - &da;
                let di = &f * &inv[col][j];
                inv[r][j] = &inv[r][j] - &di;
            }
        }
    }
    let out = PolyMatrix::from_dense(&inv).expect("square");
    if m.mul(&out).ok() != Some(poly_identity(n)) {
        return Err(YbError::MissingInverse);
    }
    Ok(out)
}

/// `(R ⊗ I)(I ⊗ R)(R ⊗ I) = (I ⊗ R)(R ⊗ I)(I ⊗ R)` as exact Laurent matrices.
pub fn ybe_check(r: &YangBaxterOperator) -> bool {
    let id = poly_identity(r.dim);
    let r12 = r.matrix.kronecker(&id);
    let r23 = id.kronecker(&r.matrix);
    let lhs = r12.mul(&r23).and_then(|m| m.mul(&r12));
    let rhs = r23.mul(&r12).and_then(|m| m.mul(&r23));
    matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr)
}

/// Checks `R·R̄ = R̄·R = I`.
pub fn inverse_check(r: &YangBaxterOperator) -> bool {
    let Some(inv) = &r.inverse else { return false };
    let id = poly_identity(r.dim * r.dim);
    r.matrix.mul(inv).ok() == Some(id.clone()) && inv.mul(&r.matrix).ok() == Some(id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JonesVariant {
    Standard,
    ColumnUnital,
}

/// The two 4×4 operators on a 2-element set leading to the Jones polynomial,
/// in the basis `(1,1), (1,2), (2,1), (2,2)`.
pub fn jones_r_matrix(variant: JonesVariant) -> YangBaxterOperator {
    let (var, corner, middle, lower) = match variant {
        JonesVariant::Standard => (
            Variable::Q,
            LaurentPoly::monomial(Variable::Q, 1, -1),
            LaurentPoly::from_terms(Variable::Q, [(-1, 1), (1, -1)]),
            LaurentPoly::one(Variable::Q),
        ),
        JonesVariant::ColumnUnital => (
            Variable::Y,
            LaurentPoly::one(Variable::Y),
            LaurentPoly::from_terms(Variable::Y, [(0, 1), (2, -1)]),
            LaurentPoly::monomial(Variable::Y, 2, 1),
        ),
    };
    let one = LaurentPoly::one(var);
    let m = PolyMatrix::from_entries(4, 4, [(0, 0, corner.clone()), (1, 1, middle), (1, 2, one), (2, 1, lower), (3, 3, corner)])
        .expect("4x4");
    YangBaxterOperator::with_computed_inverse(2, var, m).expect("shape")
}

/// Bijection `R: X × X -> X × X` stored as `map[a·n + b] = R(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetTheoreticYB {
    size: usize,
    map: Vec<(usize, usize)>,
}

impl SetTheoreticYB {
    pub fn new(size: usize, map: Vec<(usize, usize)>) -> Result<Self, YbError> {
        if map.len() != size * size || map.iter().any(|&(c, d)| c >= size || d >= size) {
            return Err(YbError::BadOperator("map must send X×X into X×X".into()));
        }
        let mut seen = vec![false; size * size];
        for &(c, d) in &map {
            if std::mem::replace(&mut seen[c * size + d], true) {
                return Err(YbError::BadOperator("map is not a bijection".into()));
            }
        }
        Ok(Self { size, map })
    }

    /// `R(a, b) = (b, a * b)`.
    pub fn from_quandle(q: &Magma2) -> Result<Self, YbError> {
        if !q.verify().invertible {
            return Err(YbError::NotARack);
        }
        let n = q.size();
        Self::new(n, (0..n * n).map(|k| (k % n, q.star(k / n, k % n))).collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        self.map[a * self.size + b]
    }

    /// Exhaustive check of the braid relation on all triples.
    pub fn ybe_holds(&self) -> bool {
        let n = self.size;
        let r12 = |t: (usize, usize, usize)| {
            let (x, y) = self.apply(t.0, t.1);
            (x, y, t.2)
        };
        let r23 = |t: (usize, usize, usize)| {
            let (y, z) = self.apply(t.1, t.2);
            (t.0, y, z)
        };
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| r12(r23(r12((a, b, c)))) == r23(r12(r23((a, b, c)))))))
    }

    /// 0/1 matrix with the inverse permutation attached.
    pub fn to_operator(&self) -> YangBaxterOperator {
        let n = self.size;
        let one = || LaurentPoly::one(Variable::Q);
        let mut m = PolyMatrix::new(n * n, n * n);
        let mut inv = PolyMatrix::new(n * n, n * n);
        for a in 0..n {
            for b in 0..n {
                let (c, d) = self.apply(a, b);
                m.set(c * n + d, a * n + b, one()).expect("in range");
                inv.set(a * n + b, c * n + d, one()).expect("in range");
            }
        }
        YangBaxterOperator::new(n, Variable::Q, m, Some(inv)).expect("permutation matrices invert")
    }
}

pub fn from_quandle(q: &Magma2) -> Result<SetTheoreticYB, YbError> {
    SetTheoreticYB::from_quandle(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{dihedral_quandle, trivial_quandle};

    #[test]
    fn jones_matrices() {
        for v in [JonesVariant::Standard, JonesVariant::ColumnUnital] {
            let r = jones_r_matrix(v);
            assert!(ybe_check(&r), "{v:?}");
            assert!(inverse_check(&r), "{v:?}");
        }
        let s = jones_r_matrix(JonesVariant::Standard);
        assert_eq!(s.matrix().entry(1, 1), LaurentPoly::from_terms(Variable::Q, [(-1, 1), (1, -1)]));
        assert!(!s.is_column_unital());
        assert!(jones_r_matrix(JonesVariant::ColumnUnital).is_column_unital());
    }

    #[test]
    fn identity_is_yb() {
        let r = YangBaxterOperator::with_computed_inverse(2, Variable::Q, PolyMatrix::identity(4)).unwrap();
        assert!(ybe_check(&r));
    }

    #[test]
    fn quandle_operators() {
        let r = SetTheoreticYB::from_quandle(&dihedral_quandle(3)).unwrap();
        assert_eq!(r.apply(0, 1), (1, 2));
        assert!(r.ybe_holds());
        assert!(ybe_check(&r.to_operator()));
        let swap = SetTheoreticYB::from_quandle(&trivial_quandle(3)).unwrap();
        assert!((0..3).all(|a| (0..3).all(|b| swap.apply(a, b) == (b, a))));
    }

    #[test]
    fn non_yb_detected() {
        // R(a, b) = (b, a + 1) on Z_2 twisted on one pair only
        let r = SetTheoreticYB::new(2, vec![(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap();
        assert!(r.ybe_holds());
        let bad = SetTheoreticYB::new(3, vec![(0, 1), (0, 0), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]).unwrap();
        assert!(!bad.ybe_holds());
        assert!(!ybe_check(&bad.to_operator()));
    }

    #[test]
    fn json_round_trip() {
        let r = jones_r_matrix(JonesVariant::Standard);
        let back = YangBaxterOperator::from_json(&r.to_json().to_string()).unwrap();
        assert_eq!(back, r);
    }
}
