use std::collections::BTreeMap;

use super::group::AbelianGroup;
use super::matrix::{IntMatrix, MatrixError};
use super::snf::smith_normal_form;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("boundary composition is nonzero at degree {0}")]
    ComposeNotZero(i64),
    #[error("boundary at degree {degree} is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    BadShape { degree: i64, rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Free chain complex over the integers with `∂_n : C_n -> C_{n-1}`.
///
/// Degrees without a stored boundary carry the zero map; degrees without a
/// stored rank are zero modules.
#[derive(Debug, Clone, Default)]
pub struct ChainComplex {
    ranks: BTreeMap<i64, usize>,
    boundaries: BTreeMap<i64, IntMatrix>,
}

impl ChainComplex {
    pub fn new(ranks: BTreeMap<i64, usize>, boundaries: BTreeMap<i64, IntMatrix>) -> Result<Self, ComplexError> {
        let c = Self { ranks, boundaries };
        for (&n, d) in &c.boundaries {
            let (er, ec) = (c.rank(n - 1), c.rank(n));
            if d.rows() != er || d.cols() != ec {
                return Err(ComplexError::BadShape {
                    degree: n,
                    rows: d.rows(),
                    cols: d.cols(),
                    expected_rows: er,
                    expected_cols: ec,
                });
            }
        }
        for (&n, d) in &c.boundaries {
            if let Some(prev) = c.boundaries.get(&(n - 1)) {
                if !prev.mul(d)?.is_zero() {
                    return Err(ComplexError::ComposeNotZero(n));
                }
            }
        }
        Ok(c)
    }

    pub fn rank(&self, n: i64) -> usize {
        self.ranks.get(&n).copied().unwrap_or(0)
    }

    pub fn boundary(&self, n: i64) -> Option<&IntMatrix> {
        self.boundaries.get(&n)
    }

    pub fn homology(&self, n: i64) -> Result<AbelianGroup, ComplexError> {
        homology_at(self.rank(n), self.boundary(n), self.boundary(n + 1))
    }
}

/// `ker(d_out) / im(d_in)` for `d_in : C_{n+1} -> C_n` and `d_out : C_n -> C_{n-1}`.
pub fn homology_at(
    dim: usize,
    d_out: Option<&IntMatrix>,
    d_in: Option<&IntMatrix>,
) -> Result<AbelianGroup, ComplexError> {
    if let (Some(o), Some(i)) = (d_out, d_in) {
        if !o.mul(i)?.is_zero() {
            return Err(ComplexError::ComposeNotZero(0));
        }
    }
    let out_rank = d_out.map_or(0, |d| smith_normal_form(d).rank);
    let (in_rank, torsion) = match d_in {
        Some(d) => {
            let s = smith_normal_form(d);
            (s.rank, s.torsion())
        }
        None => (0, Vec::new()),
    };
    debug_assert!(out_rank + in_rank <= dim);
    Ok(AbelianGroup::new(dim - out_rank - in_rank, torsion))
}
