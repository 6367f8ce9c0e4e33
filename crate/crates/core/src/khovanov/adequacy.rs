use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::complex::{to_ij, KhovanovTable};
use super::KhovanovError;
use crate::algebra::AbelianGroup;
use crate::diagram::{smooth, KauffmanState, LinkDiagram, Smoothing, UnionFind};

/// True when no circle of `D_s` touches itself at a crossing.
pub fn adequacy(d: &LinkDiagram, s: &KauffmanState) -> Result<bool, KhovanovError> {
    Ok(smooth(d, s)?.self_touch.is_empty())
}

pub fn is_adequate(d: &LinkDiagram, side: Smoothing) -> bool {
    adequacy(d, &KauffmanState::all(d.crossing_count(), side)).expect("full state")
}

/// Circles of `D_s` joined by the crossings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateGraph {
    pub vertices: usize,
    /// One edge per crossing, possibly a loop.
    pub edges: Vec<(usize, usize)>,
    /// `G′`: parallel edges collapsed.
    pub reduced_edges: Vec<(usize, usize)>,
    pub components: usize,
    /// Cycle rank `E′ - V + #components` of `G′`.
    pub p1: usize,
    pub bipartite: bool,
    pub odd_cycle: bool,
}

impl StateGraph {
    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }
}

pub fn state_graph(d: &LinkDiagram, s: &KauffmanState) -> Result<StateGraph, KhovanovError> {
    let circles = smooth(d, s)?;
    let edges: Vec<(usize, usize)> = (0..d.crossing_count())
        .map(|k| {
            let (x, y) = circles.circles_at(d, k, s.0[k]);
            (x.min(y), x.max(y))
        })
        .collect();
    let reduced: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let v = circles.circle_count;
    let mut uf = UnionFind::new(v);
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(x, y) in &reduced {
        uf.union(x, y);
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    }
    let components = (0..v).filter(|&x| uf.find(x) == x).count();
    let mut color: Vec<Option<bool>> = vec![None; v];
    let mut bipartite = true;
    for start in 0..v {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in adj.get(&x).into_iter().flatten() {
                match color[y] {
                    None => {
                        color[y] = Some(!color[x].expect("colored"));
                        queue.push_back(y);
                    }
                    Some(c) if c == color[x].expect("colored") => bipartite = false,
                    _ => {}
                }
            }
        }
    }
    Ok(StateGraph {
        vertices: v,
        p1: reduced.len() + components - v,
        reduced_edges: reduced.into_iter().collect(),
        edges,
        components,
        bipartite,
        odd_cycle: !bipartite,
    })
}

/// Torsion of the extreme-but-one group predicted from the state graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionPrediction {
    pub side: Smoothing,
    pub ab: (i64, i64),
    pub ij: (i64, i64),
    pub group: AbelianGroup,
    pub p1: usize,
    pub odd_cycle: bool,
}

/// Side A: `tor H_{n-4, n+2|D_{s_A}|-8}`; side B: `tor H_{-n+2, -n-2|D_{s_B}|+8}`;
/// both `Z₂^{p₁(G′)-1}` with an odd cycle and `Z₂^{p₁(G′)}` otherwise.
pub fn torsion_predict(d: &LinkDiagram, side: Smoothing) -> Result<TorsionPrediction, KhovanovError> {
    let n = d.crossing_count() as i64;
    let s = KauffmanState::all(d.crossing_count(), side);
    if !adequacy(d, &s)? {
        return Err(KhovanovError::NotAdequate(side));
    }
    let g = state_graph(d, &s)?;
    if !g.is_connected() {
        return Err(KhovanovError::DisconnectedStateGraph(side));
    }
    let circles = g.vertices as i64;
    let ab = match side {
        Smoothing::A => (n - 4, n + 2 * circles - 8),
        Smoothing::B => (-n + 2, -n - 2 * circles + 8),
    };
    let exp = if g.odd_cycle { g.p1.saturating_sub(1) } else { g.p1 };
    Ok(TorsionPrediction {
        side,
        ab,
        ij: to_ij(d.writhe(), ab.0, ab.1),
        group: AbelianGroup::from_u64(0, &vec![2; exp]),
        p1: g.p1,
        odd_cycle: g.odd_cycle,
    })
}

/// The extreme row `b = ±(cr + 2|D_s|)` of the homology for one side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremeSide {
    pub side: Smoothing,
    pub adequate: bool,
    pub b: i64,
    pub expected_a: i64,
    /// Nonzero groups `(a, H_{a,b})` in the row.
    pub groups: Vec<(i64, AbelianGroup)>,
    /// Nonzero extreme row.
    pub khovanov_adequate: bool,
    /// For adequate sides: the row is exactly `Z` at `expected_a`.
    pub passes: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremeReport {
    pub a_side: ExtremeSide,
    pub b_side: ExtremeSide,
}

impl ExtremeReport {
    pub fn all_pass(&self) -> bool {
        [&self.a_side, &self.b_side].iter().all(|s| s.passes != Some(false))
    }
}

pub fn extreme_group_check(d: &LinkDiagram, table: &KhovanovTable) -> Result<ExtremeReport, KhovanovError> {
    let n = d.crossing_count() as i64;
    let side = |sm: Smoothing| -> Result<ExtremeSide, KhovanovError> {
        let s = KauffmanState::all(d.crossing_count(), sm);
        let circles = smooth(d, &s)?.circle_count as i64;
        let adequate = adequacy(d, &s)?;
        let (b, expected_a) = match sm {
            Smoothing::A => (n + 2 * circles, n),
            Smoothing::B => (-n - 2 * circles, -n),
        };
        let groups: Vec<(i64, AbelianGroup)> =
            table.iter_ab().filter(|((_, bb), _)| *bb == b).map(|((a, _), g)| (a, g.clone())).collect();
        let exact = groups.len() == 1 && groups[0] == (expected_a, AbelianGroup::free(1));
        Ok(ExtremeSide {
            side: sm,
            adequate,
            b,
            expected_a,
            khovanov_adequate: !groups.is_empty(),
            groups,
            passes: adequate.then_some(exact),
        })
    };
    Ok(ExtremeReport { a_side: side(Smoothing::A)?, b_side: side(Smoothing::B)? })
}
