//! Oriented link diagrams over numbered semi-arcs.
//!
//! A crossing is stored as its PD 4-tuple `(a, b, c, d)`: slots read
//! counterclockwise starting at the incoming under-strand `a`, so `c` is the
//! outgoing under-strand and `b`, `d` lie on the over-strand. The crossing is
//! positive when the over-strand enters at `d` and leaves at `b`.
//!
//! Semi-arc labels run over `1..=2n` and increase along the orientation of each
//! component, wrapping from the last label of a component back to its first.

mod braid;
pub mod corpus;
mod parse;
mod smoothing;

use std::collections::{BTreeMap, VecDeque};

pub use braid::BraidWord;
pub use parse::{parse_braid, parse_diagram, parse_pd, parse_pd_json, parse_pd_tuples, PdJson};
pub use smoothing::{smooth, KauffmanState, Smoothing, StateCircles, UnionFind};

pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    MalformedSyntax { line: usize, column: usize, message: String },
    #[error("semi-arc label {label} appears {count} times (expected exactly twice)")]
    LabelCountError { label: Label, count: usize },
    #[error("orientation error: {0}")]
    OrientationError(String),
    #[error("generator {letter} is not valid on {strands} strands")]
    BadGenerator { letter: i32, strands: usize },
    #[error("state assigns {got} smoothings to a diagram with {expected} crossings")]
    StateSizeMismatch { expected: usize, got: usize },
    #[error("diagram has {} disconnected pieces", .0.len())]
    DisconnectedUnsupported(Vec<bool>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_int(i: i32) -> Self {
        if i > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub slots: [Label; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn under_in(&self) -> Label {
        self.slots[0]
    }

    pub fn under_out(&self) -> Label {
        self.slots[2]
    }

    pub fn over_in(&self) -> Label {
        match self.sign {
            Sign::Positive => self.slots[3],
            Sign::Negative => self.slots[1],
        }
    }

    pub fn over_out(&self) -> Label {
        match self.sign {
            Sign::Positive => self.slots[1],
            Sign::Negative => self.slots[3],
        }
    }

    /// Same crossing seen in the mirror: over and under strands swap.
    pub fn mirrored(&self) -> Self {
        let [a, b, c, d] = self.slots;
        match self.sign {
            Sign::Positive => Crossing { slots: [d, a, b, c], sign: Sign::Negative },
            Sign::Negative => Crossing { slots: [b, c, d, a], sign: Sign::Positive },
        }
    }
}

/// Crossing given by the semi-arcs on each strand end, with arbitrary ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrandCrossing {
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
    pub sign: Sign,
}

/// Maximal run of consecutive labels forming one closed component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub first: Label,
    pub last: Label,
}

impl Component {
    pub fn len(&self) -> usize {
        (self.last - self.first + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn succ(&self, l: Label) -> Label {
        if l == self.last {
            self.first
        } else {
            l + 1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    components: Vec<Component>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    In,
    Out,
}

impl LinkDiagram {
    pub fn empty() -> Self {
        Self { crossings: Vec::new(), free_loops: 0, components: Vec::new() }
    }

    /// `n` crossingless circles.
    pub fn unlink(n: usize) -> Self {
        Self { crossings: Vec::new(), free_loops: n, components: Vec::new() }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// Validate a PD code and infer crossing signs from the edge numbering.
    pub fn from_pd(codes: &[[Label; 4]], free_loops: usize) -> Result<Self, DiagramError> {
        let n_labels = 2 * codes.len();
        let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_labels + 1];
        for (k, x) in codes.iter().enumerate() {
            for (s, &l) in x.iter().enumerate() {
                if l == 0 || l as usize > n_labels {
                    return Err(DiagramError::LabelCountError { label: l, count: 0 });
                }
                occurrences[l as usize].push((k, s));
            }
        }
        for (l, occ) in occurrences.iter().enumerate().skip(1) {
            if occ.len() != 2 {
                return Err(DiagramError::LabelCountError { label: l as Label, count: occ.len() });
            }
        }

        let components = strand_runs(codes, n_labels)?;
        let mut comp_of = vec![0usize; n_labels + 1];
        for (i, c) in components.iter().enumerate() {
            for l in c.first..=c.last {
                comp_of[l as usize] = i;
            }
        }
        let succ = |l: Label| components[comp_of[l as usize]].succ(l);

        // Roles of every slot: under slots are fixed, over slots are propagated
        // through shared labels and through the over-strand of each crossing.
        let mut role: Vec<[Option<Role>; 4]> = vec![[Some(Role::In), None, Some(Role::Out), None]; codes.len()];
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        for k in 0..codes.len() {
            queue.push_back((k, 0));
            queue.push_back((k, 2));
        }
        let mut assign = |role: &mut Vec<[Option<Role>; 4]>, queue: &mut VecDeque<(usize, usize)>, k: usize, s: usize, r: Role| -> Result<(), DiagramError> {
            match role[k][s] {
                Some(old) if old != r => Err(DiagramError::OrientationError(format!(
                    "crossing {} slot {} cannot be both incoming and outgoing",
                    k + 1,
                    s + 1
                ))),
                Some(_) => Ok(()),
                None => {
                    role[k][s] = Some(r);
                    queue.push_back((k, s));
                    Ok(())
                }
            }
        };
        let opposite = |r: Role| if r == Role::In { Role::Out } else { Role::In };
        let propagate = |role: &mut Vec<[Option<Role>; 4]>, queue: &mut VecDeque<(usize, usize)>, assign: &mut dyn FnMut(&mut Vec<[Option<Role>; 4]>, &mut VecDeque<(usize, usize)>, usize, usize, Role) -> Result<(), DiagramError>| -> Result<(), DiagramError> {
            while let Some((k, s)) = queue.pop_front() {
                let r = role[k][s].expect("queued slots carry a role");
                let l = codes[k][s] as usize;
                for &(k2, s2) in &occurrences[l] {
                    if (k2, s2) != (k, s) {
                        assign(role, queue, k2, s2, opposite(r))?;
                    }
                }
                if s == 1 || s == 3 {
                    assign(role, queue, k, 4 - s, opposite(r))?;
                }
            }
            Ok(())
        };
        propagate(&mut role, &mut queue, &mut assign)?;
        while let Some(k) = (0..codes.len()).find(|&k| role[k][1].is_none()) {
            let [_, b, _, d] = codes[k];
            // unconstrained over-strand: read direction off the numbering
            let d_enters = if b == succ(d) && d != succ(b) {
                true
            } else if d == succ(b) && b != succ(d) {
                false
            } else {
                b == d + 1 || b == d
            };
            let r = if d_enters { Role::In } else { Role::Out };
            assign(&mut role, &mut queue, k, 3, r)?;
            propagate(&mut role, &mut queue, &mut assign)?;
        }

        let mut crossings = Vec::with_capacity(codes.len());
        for (k, x) in codes.iter().enumerate() {
            let [a, b, c, d] = *x;
            if c != succ(a) {
                return Err(DiagramError::OrientationError(format!(
                    "under-strand {a} -> {c} at crossing {} is not consecutive",
                    k + 1
                )));
            }
            let sign = if role[k][3] == Some(Role::In) { Sign::Positive } else { Sign::Negative };
            let cr = Crossing { slots: *x, sign };
            if cr.over_out() != succ(cr.over_in()) {
                return Err(DiagramError::OrientationError(format!(
                    "over-strand {} -> {} at crossing {} is not consecutive",
                    cr.over_in(),
                    cr.over_out(),
                    k + 1
                )));
            }
            let _ = (b, d);
            crossings.push(cr);
        }
        Ok(Self { crossings, free_loops, components })
    }

    /// Build from crossings with explicit strand roles; semi-arcs are renumbered
    /// consecutively along each component in order of first appearance.
    pub fn from_strands(raw: &[StrandCrossing], free_loops: usize) -> Result<Self, DiagramError> {
        let mut head: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
        let mut tail: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
        let mut order: Vec<usize> = Vec::new();
        for (k, x) in raw.iter().enumerate() {
            for (id, over) in [(x.under_in, false), (x.over_in, true)] {
                if head.insert(id, (k, over)).is_some() {
                    return Err(DiagramError::OrientationError(format!("semi-arc {id} enters twice")));
                }
                order.push(id);
            }
            for (id, over) in [(x.under_out, false), (x.over_out, true)] {
                if tail.insert(id, (k, over)).is_some() {
                    return Err(DiagramError::OrientationError(format!("semi-arc {id} leaves twice")));
                }
                order.push(id);
            }
        }
        if head.len() != tail.len() || head.keys().any(|id| !tail.contains_key(id)) {
            return Err(DiagramError::OrientationError("unmatched semi-arc ends".into()));
        }
        let mut relabel: BTreeMap<usize, Label> = BTreeMap::new();
        let mut components = Vec::new();
        let mut next: Label = 1;
        for &start in &order {
            if relabel.contains_key(&start) {
                continue;
            }
            let first = next;
            let mut id = start;
            loop {
                relabel.insert(id, next);
                next += 1;
                let (k, over) = head[&id];
                let x = &raw[k];
                id = if over { x.over_out } else { x.under_out };
                if id == start {
                    break;
                }
            }
            components.push(Component { first, last: next - 1 });
        }
        let crossings = raw
            .iter()
            .map(|x| {
                let (ui, uo, oi, oo) = (relabel[&x.under_in], relabel[&x.under_out], relabel[&x.over_in], relabel[&x.over_out]);
                let slots = match x.sign {
                    Sign::Positive => [ui, oo, uo, oi],
                    Sign::Negative => [ui, oi, uo, oo],
                };
                Crossing { slots, sign: x.sign }
            })
            .collect();
        Ok(Self { crossings, free_loops, components })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn semi_arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Components that pass through at least one crossing.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign == Sign::Positive).count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossing_count() - self.positive_count()
    }

    pub fn mirror(&self) -> Self {
        Self {
            crossings: self.crossings.iter().map(Crossing::mirrored).collect(),
            free_loops: self.free_loops,
            components: self.components.clone(),
        }
    }

    /// Crossings reordered so that new position `i` holds old crossing `order[i]`.
    pub fn reorder_crossings(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.crossings.len());
        Self {
            crossings: order.iter().map(|&i| self.crossings[i].clone()).collect(),
            free_loops: self.free_loops,
            components: self.components.clone(),
        }
    }

    pub fn to_strands(&self) -> Vec<StrandCrossing> {
        self.crossings
            .iter()
            .map(|c| StrandCrossing {
                under_in: c.under_in() as usize,
                under_out: c.under_out() as usize,
                over_in: c.over_in() as usize,
                over_out: c.over_out() as usize,
                sign: c.sign,
            })
            .collect()
    }

    /// Insert a one-crossing curl with the given sign on semi-arc `label`, or on
    /// a free loop when `label` is `None`.
    pub fn with_kink(&self, label: Option<Label>, sign: Sign) -> Result<Self, DiagramError> {
        let mut raw = self.to_strands();
        let mut free = self.free_loops;
        let fresh = self.semi_arc_count() + 1;
        let (x, loop_id, z) = (fresh, fresh + 1, fresh + 2);
        match label {
            Some(l) => {
                let l = l as usize;
                let target = raw
                    .iter_mut()
                    .find_map(|c| {
                        if c.under_in == l {
                            Some(&mut c.under_in)
                        } else if c.over_in == l {
                            Some(&mut c.over_in)
                        } else {
                            None
                        }
                    })
                    .ok_or_else(|| DiagramError::OrientationError(format!("no semi-arc {l}")))?;
                *target = z;
                raw.push(StrandCrossing { under_in: l, under_out: loop_id, over_in: loop_id, over_out: z, sign });
            }
            None => {
                if free == 0 {
                    return Err(DiagramError::OrientationError("no free loop to curl".into()));
                }
                free -= 1;
                raw.push(StrandCrossing { under_in: x, under_out: loop_id, over_in: loop_id, over_out: x, sign });
            }
        }
        Self::from_strands(&raw, free)
    }

    /// Arc index of every semi-arc (index `label - 1`) and the number of arcs,
    /// free loops included. Arcs run from undercrossing to undercrossing.
    pub fn arcs(&self) -> (Vec<usize>, usize) {
        let n = self.semi_arc_count();
        let mut uf = UnionFind::new(n);
        for c in &self.crossings {
            uf.union(c.slots[1] as usize - 1, c.slots[3] as usize - 1);
        }
        let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
        let mut arc_of = Vec::with_capacity(n);
        for l in 0..n {
            let root = uf.find(l);
            let next = ids.len();
            arc_of.push(*ids.entry(root).or_insert(next));
        }
        (arc_of, ids.len() + self.free_loops)
    }

    /// Connected pieces of the underlying 4-valent graph plus free loops, each
    /// as the list of crossing indices it contains.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossing_count();
        let mut uf = UnionFind::new(n);
        let mut owner: BTreeMap<Label, usize> = BTreeMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            for l in c.slots {
                if let Some(&other) = owner.get(&l) {
                    uf.union(k, other);
                } else {
                    owner.insert(l, k);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..n {
            groups.entry(uf.find(k)).or_default().push(k);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.extend(std::iter::repeat_n(Vec::new(), self.free_loops));
        out
    }

    pub fn is_connected(&self) -> bool {
        self.pieces().len() <= 1
    }

    /// Alternation test along every component; disconnected diagrams report
    /// the per-piece results through the error.
    pub fn is_alternating(&self) -> Result<bool, DiagramError> {
        let pieces = self.pieces();
        if pieces.len() > 1 {
            return Err(DiagramError::DisconnectedUnsupported(
                pieces.iter().map(|p| self.alternates_on(p)).collect(),
            ));
        }
        Ok(self.alternates_on(&(0..self.crossing_count()).collect::<Vec<_>>()))
    }

    fn alternates_on(&self, crossings: &[usize]) -> bool {
        // each semi-arc must leave an under-passage and enter an over-passage or vice versa
        let mut tail_over: BTreeMap<Label, bool> = BTreeMap::new();
        let mut head_over: BTreeMap<Label, bool> = BTreeMap::new();
        for &k in crossings {
            let c = &self.crossings[k];
            tail_over.insert(c.under_out(), false);
            tail_over.insert(c.over_out(), true);
            head_over.insert(c.under_in(), false);
            head_over.insert(c.over_in(), true);
        }
        tail_over.iter().all(|(l, t)| head_over.get(l).is_none_or(|h| h != t))
    }

    /// PD text: whitespace-separated `X[a,b,c,d]` terms.
    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|c| format!("X[{},{},{},{}]", c.slots[0], c.slots[1], c.slots[2], c.slots[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_pd_json(&self) -> PdJson {
        PdJson { pd: self.crossings.iter().map(|c| c.slots).collect(), free_loops: self.free_loops }
    }
}

/// Runs of labels connected along strands; each must be a consecutive range.
fn strand_runs(codes: &[[Label; 4]], n_labels: usize) -> Result<Vec<Component>, DiagramError> {
    let mut uf = UnionFind::new(n_labels + 1);
    for x in codes {
        uf.union(x[0] as usize, x[2] as usize);
        uf.union(x[1] as usize, x[3] as usize);
    }
    let mut runs: BTreeMap<usize, (Label, Label, usize)> = BTreeMap::new();
    for l in 1..=n_labels {
        let r = uf.find(l);
        let e = runs.entry(r).or_insert((l as Label, l as Label, 0));
        e.0 = e.0.min(l as Label);
        e.1 = e.1.max(l as Label);
        e.2 += 1;
    }
    let mut comps: Vec<Component> = Vec::new();
    for (first, last, count) in runs.into_values() {
        if (last - first + 1) as usize != count {
            return Err(DiagramError::OrientationError(format!(
                "component containing label {first} is not numbered consecutively"
            )));
        }
        comps.push(Component { first, last });
    }
    comps.sort_by_key(|c| c.first);
    Ok(comps)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: [[Label; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];

    #[test]
    fn trefoil_pd() {
        let d = LinkDiagram::from_pd(&TREFOIL, 0).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.semi_arc_count(), 6);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), -3);
        assert!(d.crossings().iter().all(|c| c.sign == Sign::Negative));
        assert_eq!(d.mirror().writhe(), 3);
        assert_eq!(d.mirror().mirror(), d);
        assert_eq!(d.is_alternating(), Ok(true));
    }

    #[test]
    fn kinks() {
        let pos = LinkDiagram::from_pd(&[[1, 1, 2, 2]], 0).unwrap();
        assert_eq!(pos.writhe(), 1);
        let neg = LinkDiagram::from_pd(&[[1, 2, 2, 1]], 0).unwrap();
        assert_eq!(neg.writhe(), -1);
        assert_eq!(pos.mirror().writhe(), -1);
    }

    #[test]
    fn label_errors() {
        assert!(matches!(
            LinkDiagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 6]], 0),
            Err(DiagramError::LabelCountError { .. })
        ));
        // 1 -> 3 is not consecutive along the under-strand
        assert!(matches!(
            LinkDiagram::from_pd(&[[1, 4, 3, 5], [2, 6, 4, 1], [5, 3, 6, 2]], 0),
            Err(DiagramError::OrientationError(_))
        ));
    }

    #[test]
    fn empty_and_unknot() {
        let e = LinkDiagram::empty();
        assert_eq!((e.crossing_count(), e.component_count(), e.writhe()), (0, 0, 0));
        assert_eq!(e.is_alternating(), Ok(true));
        assert_eq!(LinkDiagram::unknot().is_alternating(), Ok(true));
        assert!(matches!(
            LinkDiagram::unlink(2).is_alternating(),
            Err(DiagramError::DisconnectedUnsupported(v)) if v == vec![true, true]
        ));
    }

    #[test]
    fn arcs_of_trefoil() {
        let d = LinkDiagram::from_pd(&TREFOIL, 0).unwrap();
        let (arc_of, n) = d.arcs();
        assert_eq!(n, 3);
        assert_eq!(arc_of.len(), 6);
    }

    #[test]
    fn kink_insertion_preserves_structure() {
        let d = LinkDiagram::from_pd(&TREFOIL, 0).unwrap();
        let k = d.with_kink(Some(3), Sign::Positive).unwrap();
        assert_eq!(k.crossing_count(), 4);
        assert_eq!(k.component_count(), 1);
        assert_eq!(k.writhe(), -2);
        let u = LinkDiagram::unknot().with_kink(None, Sign::Negative).unwrap();
        assert_eq!((u.crossing_count(), u.component_count(), u.writhe()), (1, 1, -1));
        assert_eq!(u, LinkDiagram::from_pd(&[[1, 2, 2, 1]], 0).unwrap());
    }

    #[test]
    fn pd_round_trip() {
        let d = LinkDiagram::from_pd(&TREFOIL, 0).unwrap();
        let again = parse_pd(&d.to_pd_string()).unwrap();
        assert_eq!(again, d);
    }
}
