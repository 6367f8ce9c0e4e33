use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::bracket::check_size;
use super::KhovanovError;
use crate::algebra::{smith_normal_form, AbelianGroup, IntMatrix, LaurentPoly, SmithForm, Variable};
use crate::diagram::{smooth, KauffmanState, LinkDiagram, Smoothing, StateCircles};

/// A Kauffman state (bit `k` of `mask` set when crossing `k` is B-smoothed)
/// with a sign on each circle (bit set when negative).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EnhancedState {
    pub mask: u64,
    pub signs: u64,
}

impl EnhancedState {
    pub fn state(&self, n: usize) -> KauffmanState {
        KauffmanState::from_mask(n, self.mask)
    }

    /// `σ(s) = |s⁻¹(A)| - |s⁻¹(B)|`.
    pub fn sigma(&self, n: usize) -> i64 {
        n as i64 - 2 * self.mask.count_ones() as i64
    }

    /// `τ(S)`, positive minus negative circles.
    pub fn tau(&self, circles: usize) -> i64 {
        circles as i64 - 2 * self.signs.count_ones() as i64
    }
}

struct StateData {
    circles: StateCircles,
    /// A semi-arc on each non-free circle.
    rep: Vec<usize>,
}

/// Enhanced states bucketed by `(a, b)` with boundaries `C_{a,b} -> C_{a-2,b}`.
#[derive(Clone, Debug)]
pub struct BigradedComplex {
    crossings: usize,
    writhe: i64,
    basis: BTreeMap<(i64, i64), Vec<EnhancedState>>,
    boundary: BTreeMap<(i64, i64), IntMatrix>,
}

impl BigradedComplex {
    pub fn crossing_count(&self) -> usize {
        self.crossings
    }

    pub fn writhe(&self) -> i64 {
        self.writhe
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.basis.keys().copied()
    }

    pub fn basis(&self, a: i64, b: i64) -> &[EnhancedState] {
        self.basis.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, a: i64, b: i64) -> usize {
        self.basis(a, b).len()
    }

    /// `∂_{a,b}`; `None` when either end is zero.
    pub fn boundary(&self, a: i64, b: i64) -> Option<&IntMatrix> {
        self.boundary.get(&(a, b))
    }

    pub fn d_squared_is_zero(&self) -> bool {
        self.boundary.iter().all(|(&(a, b), m)| match self.boundary(a - 2, b) {
            Some(next) => next.mul(m).expect("composable").is_zero(),
            None => true,
        })
    }

    /// Chain-level graded Euler characteristic `Σ (-1)^i q^j rank C^{i,j}`.
    pub fn euler_characteristic(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(Variable::Q);
        for (&(a, b), states) in &self.basis {
            let (i, j) = to_ij(self.writhe, a, b);
            let c = if i.rem_euclid(2) == 0 { 1 } else { -1 } * states.len() as i64;
            out.add_term(j, &BigInt::from(c));
        }
        out
    }

    /// `H_{a,b} = ker ∂_{a,b} / im ∂_{a+2,b}` for every bidegree, zero groups dropped.
    pub fn homology(&self) -> KhovanovTable {
        let smith: HashMap<(i64, i64), SmithForm> = self
            .boundary
            .par_iter()
            .map(|(&k, m)| (k, smith_normal_form(m)))
            .collect();
        let mut groups = BTreeMap::new();
        for (&(a, b), states) in &self.basis {
            let out_rank = smith.get(&(a, b)).map_or(0, |s| s.rank);
            let (in_rank, torsion) = smith.get(&(a + 2, b)).map_or((0, Vec::new()), |s| (s.rank, s.torsion()));
            let g = AbelianGroup::new(states.len() - out_rank - in_rank, torsion);
            if !g.is_trivial() {
                groups.insert((a, b), g);
            }
        }
        KhovanovTable { writhe: self.writhe, groups }
    }
}

/// `(a, b) ↦ (i, j) = ((w - a)/2, (3w - b)/2)`.
pub fn to_ij(writhe: i64, a: i64, b: i64) -> (i64, i64) {
    ((writhe - a) / 2, (3 * writhe - b) / 2)
}

pub fn to_ab(writhe: i64, i: i64, j: i64) -> (i64, i64) {
    (writhe - 2 * i, 3 * writhe - 2 * j)
}

fn state_data(d: &LinkDiagram, mask: u64) -> StateData {
    let n = d.crossing_count();
    let circles = smooth(d, &KauffmanState::from_mask(n, mask)).expect("state size");
    let bound = circles.circle_count - d.free_loops();
    let mut rep = vec![usize::MAX; bound];
    for (l, &c) in circles.membership.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = l;
        }
    }
    StateData { circles, rep }
}

/// Circle of `s'` that circle `c` of `s` becomes, for circles away from the changed crossing.
fn carry(from: &StateData, to: &StateData, c: usize) -> usize {
    match from.rep.get(c) {
        Some(&l) => to.circles.membership[l],
        None => c - from.rep.len() + to.rep.len(),
    }
}

pub fn khovanov_complex(d: &LinkDiagram) -> Result<BigradedComplex, KhovanovError> {
    check_size(d)?;
    let n = d.crossing_count();
    let data: Vec<StateData> = (0..1u64 << n).into_par_iter().map(|m| state_data(d, m)).collect();
    if data.iter().any(|s| s.circles.circle_count > 63) {
        return Err(KhovanovError::TooManyCircles);
    }
    let mut basis: BTreeMap<(i64, i64), Vec<EnhancedState>> = BTreeMap::new();
    for (mask, s) in data.iter().enumerate() {
        let k = s.circles.circle_count;
        for signs in 0..1u64 << k {
            let e = EnhancedState { mask: mask as u64, signs };
            let a = e.sigma(n);
            basis.entry((a, a + 2 * e.tau(k))).or_default().push(e);
        }
    }
    let index: HashMap<EnhancedState, usize> =
        basis.values().flat_map(|v| v.iter().enumerate().map(|(i, e)| (*e, i))).collect();
    let boundary: BTreeMap<(i64, i64), IntMatrix> = basis
        .par_iter()
        .filter_map(|(&(a, b), states)| {
            let target = basis.get(&(a - 2, b))?;
            let entries: Vec<(usize, usize, BigInt)> = states
                .iter()
                .enumerate()
                .flat_map(|(col, e)| {
                    differential(d, &data, *e)
                        .into_iter()
                        .map(move |(t, sign)| (col, t, sign))
                        .collect::<Vec<_>>()
                })
                .map(|(col, t, sign)| (index[&t], col, BigInt::from(sign)))
                .collect();
            Some(((a, b), IntMatrix::from_entries(target.len(), states.len(), entries).expect("in range")))
        })
        .collect();
    Ok(BigradedComplex { crossings: n, writhe: d.writhe(), basis, boundary })
}

/// Terms `(S', ±1)` of `∂S`.
fn differential(d: &LinkDiagram, data: &[StateData], e: EnhancedState) -> Vec<(EnhancedState, i64)> {
    let n = d.crossing_count();
    let from = &data[e.mask as usize];
    let mut out = Vec::new();
    for v in 0..n {
        if e.mask >> v & 1 == 1 {
            continue;
        }
        let earlier_a = (!e.mask & ((1u64 << v) - 1)).count_ones();
        let sign = if earlier_a.is_multiple_of(2) { 1 } else { -1 };
        let mask = e.mask | 1 << v;
        let to = &data[mask as usize];
        let (c1, c2) = from.circles.circles_at(d, v, Smoothing::A);
        let (t1, t2) = to.circles.circles_at(d, v, Smoothing::B);
        let mut base = 0u64;
        for c in (0..from.circles.circle_count).filter(|&c| c != c1 && c != c2) {
            if e.signs >> c & 1 == 1 {
                base |= 1 << carry(from, to, c);
            }
        }
        let neg = |c: usize| e.signs >> c & 1 == 1;
        let targets: Vec<u64> = if c1 != c2 {
            // merge: (+,-),(-,+) -> +, (-,-) -> -
            match (neg(c1), neg(c2)) {
                (false, false) => vec![],
                (true, true) => vec![base | 1 << t1],
                _ => vec![base],
            }
        } else if neg(c1) {
            vec![base | 1 << t2, base | 1 << t1]
        } else {
            vec![base]
        };
        out.extend(targets.into_iter().map(|signs| (EnhancedState { mask, signs }, sign)));
    }
    out
}

/// Khovanov homology keyed by `(a, b)`; `(i, j)` views use the writhe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KhovanovTable {
    writhe: i64,
    groups: BTreeMap<(i64, i64), AbelianGroup>,
}

impl KhovanovTable {
    pub fn writhe(&self) -> i64 {
        self.writhe
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn get_ab(&self, a: i64, b: i64) -> AbelianGroup {
        self.groups.get(&(a, b)).cloned().unwrap_or_else(AbelianGroup::trivial)
    }

    /// `H^{i,j}`.
    pub fn get(&self, i: i64, j: i64) -> AbelianGroup {
        let (a, b) = to_ab(self.writhe, i, j);
        self.get_ab(a, b)
    }

    /// Nonzero groups as `((a, b), H)`.
    pub fn iter_ab(&self) -> impl Iterator<Item = ((i64, i64), &AbelianGroup)> + '_ {
        self.groups.iter().map(|(k, g)| (*k, g))
    }

    /// Nonzero groups as `((i, j), H)`, sorted.
    pub fn iter_ij(&self) -> Vec<((i64, i64), &AbelianGroup)> {
        let mut v: Vec<_> = self.groups.iter().map(|(&(a, b), g)| (to_ij(self.writhe, a, b), g)).collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    /// `Σ (-1)^i q^j rank H^{i,j}`.
    pub fn euler_characteristic(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(Variable::Q);
        for ((i, j), g) in self.iter_ij() {
            let c = g.free_rank as i64 * if i.rem_euclid(2) == 0 { 1 } else { -1 };
            out.add_term(j, &BigInt::from(c));
        }
        out
    }

    /// Same diagram, different orientation: the `(a, b)` groups are unchanged.
    pub fn with_writhe(&self, writhe: i64) -> Self {
        Self { writhe, groups: self.groups.clone() }
    }

    fn ranges(&self) -> Option<((i64, i64), (i64, i64))> {
        let cells = self.iter_ij();
        let i_min = cells.iter().map(|((i, _), _)| *i).min()?;
        let i_max = cells.iter().map(|((i, _), _)| *i).max()?;
        let j_min = cells.iter().map(|((_, j), _)| *j).min()?;
        let j_max = cells.iter().map(|((_, j), _)| *j).max()?;
        Some(((i_min, i_max), (j_min, j_max)))
    }

    /// `{"writhe", "i": [...], "rows": [{"j", "cells": [null | {"rank", "torsion"}]}]}`,
    /// rows with `j` descending.
    pub fn to_json(&self) -> serde_json::Value {
        let Some(((i_min, i_max), (j_min, j_max))) = self.ranges() else {
            return serde_json::json!({ "writhe": self.writhe, "i": [], "rows": [] });
        };
        let rows: Vec<serde_json::Value> = (j_min..=j_max)
            .rev()
            .step_by(2)
            .map(|j| {
                let cells: Vec<serde_json::Value> = (i_min..=i_max)
                    .map(|i| {
                        let g = self.get(i, j);
                        if g.is_trivial() {
                            serde_json::Value::Null
                        } else {
                            serde_json::to_value(&g).expect("serializable")
                        }
                    })
                    .collect();
                serde_json::json!({ "j": j, "cells": cells })
            })
            .collect();
        serde_json::json!({ "writhe": self.writhe, "i": (i_min..=i_max).collect::<Vec<_>>(), "rows": rows })
    }

    /// Grid with `j` rows descending and `i` columns ascending.
    pub fn render(&self) -> String {
        let Some(((i_min, i_max), (j_min, j_max))) = self.ranges() else {
            return "(zero)\n".to_string();
        };
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["j\\i".to_string()];
        header.extend((i_min..=i_max).map(|i| i.to_string()));
        grid.push(header);
        for j in (j_min..=j_max).rev().step_by(2) {
            let mut row = vec![j.to_string()];
            for i in i_min..=i_max {
                let g = self.get(i, j);
                row.push(if g.is_trivial() { String::new() } else { g.to_string() });
            }
            grid.push(row);
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in grid {
            let line: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        out
    }
}

pub fn khovanov_homology(d: &LinkDiagram) -> Result<KhovanovTable, KhovanovError> {
    Ok(khovanov_complex(d)?.homology())
}
