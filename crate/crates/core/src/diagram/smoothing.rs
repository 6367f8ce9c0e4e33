use std::collections::BTreeSet;

use super::{DiagramError, LinkDiagram};

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Smoothing {
    /// Joins slots `(a, b)` and `(c, d)`.
    A,
    /// Joins slots `(a, d)` and `(b, c)`.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KauffmanState(pub Vec<Smoothing>);

impl KauffmanState {
    pub fn all(n: usize, s: Smoothing) -> Self {
        Self(vec![s; n])
    }

    /// Bit `i` of `mask` set means crossing `i` gets the B-smoothing.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self((0..n).map(|i| if mask >> i & 1 == 1 { Smoothing::B } else { Smoothing::A }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn a_count(&self) -> usize {
        self.0.iter().filter(|s| **s == Smoothing::A).count()
    }

    pub fn b_count(&self) -> usize {
        self.len() - self.a_count()
    }

    /// `#A - #B`.
    pub fn sigma(&self) -> i64 {
        self.a_count() as i64 - self.b_count() as i64
    }
}

/// Circles of a smoothed diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateCircles {
    pub circle_count: usize,
    /// Circle of each semi-arc, indexed by `label - 1`.
    pub membership: Vec<usize>,
    /// Crossings whose two local arcs lie on the same circle.
    pub self_touch: BTreeSet<usize>,
}

impl StateCircles {
    /// The two circles meeting at crossing `k` (equal when self-touching).
    pub fn circles_at(&self, d: &LinkDiagram, k: usize, s: Smoothing) -> (usize, usize) {
        let [a, b, c, _] = d.crossings()[k].slots;
        let m = |l: u32| self.membership[l as usize - 1];
        match s {
            Smoothing::A => (m(a), m(c)),
            Smoothing::B => (m(a), m(b)),
        }
    }
}

pub fn smooth(d: &LinkDiagram, state: &KauffmanState) -> Result<StateCircles, DiagramError> {
    if state.len() != d.crossing_count() {
        return Err(DiagramError::StateSizeMismatch { expected: d.crossing_count(), got: state.len() });
    }
    let n = d.semi_arc_count();
    let mut uf = UnionFind::new(n);
    for (c, s) in d.crossings().iter().zip(&state.0) {
        let [a, b, cc, dd] = c.slots.map(|l| l as usize - 1);
        match s {
            Smoothing::A => {
                uf.union(a, b);
                uf.union(cc, dd);
            }
            Smoothing::B => {
                uf.union(a, dd);
                uf.union(b, cc);
            }
        }
    }
    let mut ids = vec![usize::MAX; n];
    let mut membership = Vec::with_capacity(n);
    let mut count = 0;
    for l in 0..n {
        let r = uf.find(l);
        if ids[r] == usize::MAX {
            ids[r] = count;
            count += 1;
        }
        membership.push(ids[r]);
    }
    let mut self_touch = BTreeSet::new();
    for (k, (c, s)) in d.crossings().iter().zip(&state.0).enumerate() {
        let [a, b, cc, _] = c.slots.map(|l| l as usize - 1);
        let other = if *s == Smoothing::A { cc } else { b };
        if membership[a] == membership[other] {
            self_touch.insert(k);
        }
    }
    Ok(StateCircles { circle_count: count + d.free_loops(), membership, self_touch })
}
