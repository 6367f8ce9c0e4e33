//! One-term distributive homology and two-term rack homology of finite
//! 2-magmas.
//!
//! Chains are indexed with `C_n = Z X^{n+1}`: degree `n` is spanned by tuples
//! `(x_0, ..., x_n)`. Tuples are ordered lexicographically with `x_0` most
//! significant, so the index of a tuple is its base-`|X|` expansion.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{homology_at, AbelianGroup, ComplexError, IntMatrix};
use crate::colorings::Magma2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistributiveError {
    #[error("operation is not right self-distributive")]
    NotDistributive,
    #[error("operation is not invertible in the second argument (not a rack)")]
    NotARack,
    #[error("face d_{index} does not exist in degree {degree}")]
    IndexOutOfRange { degree: usize, index: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

pub fn tuple_index(t: &[usize], size: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * size + x)
}

pub fn index_tuple(mut idx: usize, len: usize, size: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for slot in t.iter_mut().rev() {
        *slot = idx % size;
        idx /= size;
    }
    t
}

/// Matrix of the map sending each basis tuple of length `len` to the signed
/// combination of tuples returned by `f`.
fn tuple_map(size: usize, len: usize, out_len: usize, f: impl Fn(&[usize]) -> Vec<(Vec<usize>, i64)> + Sync) -> IntMatrix {
    let cols = size.pow(len as u32);
    let rows = size.pow(out_len as u32);
    let entries: Vec<(usize, usize, i64)> = (0..cols)
        .into_par_iter()
        .flat_map_iter(|col| {
            let t = index_tuple(col, len, size);
            f(&t).into_iter().map(move |(img, k)| (tuple_index(&img, size), col, k))
        })
        .collect();
    IntMatrix::from_entries(rows, cols, entries.into_iter().map(|(r, c, k)| (r, c, BigInt::from(k))))
        .expect("tuple indices in range")
}

/// Face maps `d_{i,n}: C_n -> C_{n-1}` for `0 <= i <= n`, `1 <= n <= n_max`.
#[derive(Clone, Debug)]
pub struct FaceMapFamily {
    faces: BTreeMap<usize, Vec<IntMatrix>>,
}

impl FaceMapFamily {
    pub fn new(faces: BTreeMap<usize, Vec<IntMatrix>>) -> Self {
        Self { faces }
    }

    /// Faces given by a function on tuples: `face(i, x)` for `x` of length `n + 1`.
    pub fn from_tuple_fn(size: usize, n_max: usize, face: impl Fn(usize, &[usize]) -> Vec<usize> + Sync) -> Self {
        let mut faces = BTreeMap::new();
        for n in 1..=n_max {
            let row = (0..=n).map(|i| tuple_map(size, n + 1, n, |t| vec![(face(i, t), 1)])).collect();
            faces.insert(n, row);
        }
        Self { faces }
    }

    /// `d_0` deletes `x_0`; `d_i` acts by `* x_i` on the entries left of `x_i`
    /// and deletes it.
    pub fn one_term(x: &Magma2, n_max: usize) -> Self {
        Self::from_tuple_fn(x.size(), n_max, |i, t| {
            let mut out: Vec<usize> = t[..i].iter().map(|&y| x.star(y, t[i])).collect();
            out.extend_from_slice(&t[i + 1..]);
            out
        })
    }

    pub fn face(&self, n: usize, i: usize) -> Result<&IntMatrix, DistributiveError> {
        self.faces
            .get(&n)
            .and_then(|r| r.get(i))
            .ok_or(DistributiveError::IndexOutOfRange { degree: n, index: i })
    }

    pub fn max_degree(&self) -> usize {
        self.faces.keys().next_back().copied().unwrap_or(0)
    }

    pub fn swap_faces(&mut self, n: usize, i: usize, j: usize) {
        if let Some(r) = self.faces.get_mut(&n) {
            r.swap(i, j);
        }
    }

    /// `Σ_{i=0}^n (-1)^i d_i` in degree `n`.
    pub fn boundary(&self, n: usize) -> Result<IntMatrix, DistributiveError> {
        let row = self.faces.get(&n).ok_or(DistributiveError::IndexOutOfRange { degree: n, index: 0 })?;
        let mut acc = IntMatrix::new(row[0].rows(), row[0].cols());
        for (i, d) in row.iter().enumerate() {
            acc = if i % 2 == 0 { acc.add(d) } else { acc.sub(d) }.expect("faces share a shape");
        }
        Ok(acc)
    }
}

/// `d_i d_j = d_{j-1} d_i` for all `i < j <= n <= n_max`.
pub fn presimplicial_check(f: &FaceMapFamily, n_max: usize) -> bool {
    for n in 2..=n_max.min(f.max_degree()) {
        for j in 1..=n {
            for i in 0..j {
                let (Ok(di_low), Ok(dj), Ok(dj1_low), Ok(di)) = (f.face(n - 1, i), f.face(n, j), f.face(n - 1, j - 1), f.face(n, i)) else {
                    return false;
                };
                let lhs = di_low.mul(dj).expect("composable");
                let rhs = dj1_low.mul(di).expect("composable");
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn require_distributive(x: &Magma2) -> Result<(), DistributiveError> {
    if x.verify().distributive {
        Ok(())
    } else {
        Err(DistributiveError::NotDistributive)
    }
}

fn one_term_boundary_unchecked(x: &Magma2, n: usize) -> IntMatrix {
    let size = x.size();
    tuple_map(size, n + 1, n, |t| {
        (0..=n)
            .map(|i| {
                let mut out: Vec<usize> = t[..i].iter().map(|&y| x.star(y, t[i])).collect();
                out.extend_from_slice(&t[i + 1..]);
                (out, if i % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    })
}

/// `∂_n(x_0..x_n) = (x_1..x_n) + Σ_{i≥1} (-1)^i (x_0*x_i, .., x_{i-1}*x_i, x_{i+1}, .., x_n)`.
pub fn one_term_boundary(x: &Magma2, n: usize) -> Result<IntMatrix, DistributiveError> {
    require_distributive(x)?;
    if n == 0 {
        return Ok(IntMatrix::new(0, x.size()));
    }
    Ok(one_term_boundary_unchecked(x, n))
}

pub fn one_term_homology(x: &Magma2, n: usize) -> Result<AbelianGroup, DistributiveError> {
    let d_out = one_term_boundary(x, n)?;
    let d_in = one_term_boundary(x, n + 1)?;
    Ok(homology_at(x.size().pow(n as u32 + 1), Some(&d_out), Some(&d_in))?)
}

fn rack_boundary_unchecked(x: &Magma2, n: usize) -> IntMatrix {
    tuple_map(x.size(), n + 1, n, |t| {
        let mut terms = Vec::with_capacity(2 * n);
        for i in 1..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut acted: Vec<usize> = t[..i].iter().map(|&y| x.star(y, t[i])).collect();
            acted.extend_from_slice(&t[i + 1..]);
            let mut deleted = t[..i].to_vec();
            deleted.extend_from_slice(&t[i + 1..]);
            terms.push((acted, sign));
            terms.push((deleted, -sign));
        }
        terms
    })
}

/// `∂^R_n = Σ_{i=1}^n (-1)^i (d_i^{(*)} - d_i^{(*_0)})`. Requires a rack unless `force`.
pub fn rack_boundary(x: &Magma2, n: usize, force: bool) -> Result<IntMatrix, DistributiveError> {
    let r = x.verify();
    if !force && !r.is_rack() {
        return Err(DistributiveError::NotARack);
    }
    if n == 0 {
        return Ok(IntMatrix::new(0, x.size()));
    }
    Ok(rack_boundary_unchecked(x, n))
}

pub fn rack_homology(x: &Magma2, n: usize, force: bool) -> Result<AbelianGroup, DistributiveError> {
    let d_out = rack_boundary(x, n, force)?;
    let d_in = rack_boundary(x, n + 1, force)?;
    Ok(homology_at(x.size().pow(n as u32 + 1), Some(&d_out), Some(&d_in))?)
}
