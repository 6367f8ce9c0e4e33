//! Smith normal form over the integers.
//!
//! Elimination runs in two phases. Unit pivots are cleared first on the sparse
//! representation, which disposes of almost every entry of a boundary matrix
//! with ±1 coefficients. Whatever remains is compacted into a dense block and
//! reduced with minimal-absolute-value pivoting.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::group::AbelianGroup;
use super::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_r`, all positive.
    pub invariants: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = (0..m.rows()).map(|r| m.row(r).clone()).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for (r, row) in rows.iter().enumerate() {
        for c in row.keys() {
            col_rows[*c].insert(r);
        }
    }

    let mut units = 0usize;
    loop {
        let Some((pr, pc)) = find_unit_pivot(&rows, &col_rows) else { break };
        eliminate_unit(&mut rows, &mut col_rows, pr, pc);
        units += 1;
    }

    let live_rows: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..col_rows.len()).filter(|&c| !col_rows[c].is_empty()).collect();
    let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (i, r) in live_rows.iter().enumerate() {
        for (c, v) in &rows[*r] {
            dense[i][col_pos[c]] = v.clone();
        }
    }

    let mut invariants = vec![BigInt::one(); units];
    invariants.extend(dense_smith(dense));
    SmithForm { rank: invariants.len(), invariants }
}

fn find_unit_pivot(rows: &[BTreeMap<usize, BigInt>], col_rows: &[BTreeSet<usize>]) -> Option<(usize, usize)> {
    // Markowitz-style choice keeps fill-in low
    let mut best: Option<(usize, usize, usize)> = None;
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            continue;
        }
        for (c, v) in row {
            if v.abs().is_one() {
                let cost = (row.len() - 1) * (col_rows[*c].len() - 1);
                if best.is_none_or(|(_, _, b)| cost < b) {
                    best = Some((r, *c, cost));
                    if cost == 0 {
                        return Some((r, *c));
                    }
                }
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

fn eliminate_unit(rows: &mut [BTreeMap<usize, BigInt>], col_rows: &mut [BTreeSet<usize>], pr: usize, pc: usize) {
    let pivot_row = std::mem::take(&mut rows[pr]);
    let unit = pivot_row[&pc].clone();
    for c in pivot_row.keys() {
        col_rows[*c].remove(&pr);
    }
    let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
    for r in targets {
        // u^{-1} = u for u = ±1
        let factor = &rows[r][&pc] * &unit;
        for (c, v) in &pivot_row {
            let row = &mut rows[r];
            let e = row.entry(*c).or_insert_with(BigInt::zero);
            *e -= &factor * v;
            if e.is_zero() {
                row.remove(c);
                col_rows[*c].remove(&r);
            } else {
                col_rows[*c].insert(r);
            }
        }
    }
    debug_assert!(col_rows[pc].is_empty());
}

/// Diagonal of the Smith form of a dense matrix, as a divisibility chain.
fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows && t < ncols {
        let Some((pr, pc)) = min_abs_entry(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..ncols {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder appeared in the pivot row or column
                let (pr, pc) = min_abs_in_cross(&a, t);
                a.swap(t, pr);
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
                continue;
            }
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..ncols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                let done = abs.is_one();
                best = Some((i, j, abs));
                if done {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn min_abs_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t, a[t][t].abs());
    for (i, row) in a.iter().enumerate().skip(t) {
        let v = &row[t];
        if !v.is_zero() && (best.2.is_zero() || v.abs() < best.2) {
            best = (i, t, v.abs());
        }
    }
    for (j, v) in a[t].iter().enumerate().skip(t) {
        if !v.is_zero() && (best.2.is_zero() || v.abs() < best.2) {
            best = (t, j, v.abs());
        }
    }
    (best.0, best.1)
}

/// `Z^{rows} / im(M)`.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    AbelianGroup::new(m.rows() - snf.rank, snf.torsion())
}
