use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Variable};

/// Commutative ring of matrix entries.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero(Variable::A)
    }
    fn one() -> Self {
        LaurentPoly::one(Variable::A)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Row-major sparse matrix; zero entries are never stored.
#[derive(Clone, PartialEq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, T>>,
}

pub type IntMatrix = SparseMatrix<BigInt>;
pub type PolyMatrix = SparseMatrix<LaurentPoly>;

impl<T: Coeff> SparseMatrix<T> {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.data[i].insert(i, T::one());
        }
        m
    }

    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<Self, MatrixError>
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut m = Self::new(rows, cols);
        for (r, c, v) in entries {
            m.add_at(r, c, &v)?;
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vec<T>]) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(MatrixError::DimensionMismatch(format!(
                    "row {r} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone())?;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    fn check(&self, r: usize, c: usize) -> Result<(), MatrixError> {
        if r >= self.rows || c >= self.cols {
            return Err(MatrixError::OutOfBounds { row: r, col: c, rows: self.rows, cols: self.cols });
        }
        Ok(())
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&T> {
        self.data.get(r).and_then(|row| row.get(&c))
    }

    pub fn entry(&self, r: usize, c: usize) -> T {
        self.get(r, c).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) -> Result<(), MatrixError> {
        self.check(r, c)?;
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
        Ok(())
    }

    /// `self[r, c] += v`.
    pub fn add_at(&mut self, r: usize, c: usize, v: &T) -> Result<(), MatrixError> {
        self.check(r, c)?;
        if v.is_zero() {
            return Ok(());
        }
        let row = &mut self.data[r];
        let sum = match row.get(&c) {
            Some(old) => old.add(v),
            None => v.clone(),
        };
        if sum.is_zero() {
            row.remove(&c);
        } else {
            row.insert(c, sum);
        }
        Ok(())
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, T> {
        &self.data[r]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::new(self.rows, rhs.cols);
        for (r, row) in self.data.iter().enumerate() {
            let acc = &mut out.data[r];
            for (k, a) in row {
                for (c, b) in &rhs.data[*k] {
                    let prod = a.mul(b);
                    let sum = match acc.get(c) {
                        Some(old) => old.add(&prod),
                        None => prod,
                    };
                    if sum.is_zero() {
                        acc.remove(c);
                    } else {
                        acc.insert(*c, sum);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.same_shape(rhs)?;
        let mut out = self.clone();
        for (r, c, v) in rhs.iter() {
            out.add_at(r, c, v)?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg())
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::new(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            let p = v.mul(s);
            if !p.is_zero() {
                out.data[r].insert(c, p);
            }
        }
        out
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        let mut out = SparseMatrix::<U>::new(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            let u = f(v);
            if !u.is_zero() {
                out.data[r].insert(c, u);
            }
        }
        out
    }

    pub fn try_map<U: Coeff, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<SparseMatrix<U>, E> {
        let mut out = SparseMatrix::<U>::new(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            let u = f(v)?;
            if !u.is_zero() {
                out.data[r].insert(c, u);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::new(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            out.data[c].insert(r, v.clone());
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        let mut out = Self::new(self.rows * rhs.rows, self.cols * rhs.cols);
        for (r1, c1, a) in self.iter() {
            for (r2, c2, b) in rhs.iter() {
                let p = a.mul(b);
                if !p.is_zero() {
                    out.data[r1 * rhs.rows + r2].insert(c1 * rhs.cols + c2, p);
                }
            }
        }
        out
    }

    /// Relabel rows and columns: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::new(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            out.data[row_perm[r]].insert(col_perm[c], v.clone());
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c)).collect())
            .collect()
    }

    fn same_shape(&self, rhs: &Self) -> Result<(), MatrixError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }
}

impl<T: Coeff + fmt::Display> fmt::Debug for SparseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        if self.rows * self.cols <= 256 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            for (r, c, v) in self.iter() {
                writeln!(f, "  ({r}, {c}) = {v}")?;
            }
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let big: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        Self::from_dense(&big)
    }
}
