use num_bigint::BigInt;
use rayon::prelude::*;

use super::{ColoringError, Magma2};
use crate::algebra::{cokernel, AbelianGroup, IntMatrix};
use crate::diagram::{LinkDiagram, Sign};

/// Colors of the arcs of a diagram, indexed as in [`LinkDiagram::arcs`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Color of every semi-arc, indexed by `label - 1`.
    pub fn semi_arc_colors(&self, d: &LinkDiagram) -> Vec<usize> {
        let (arc_of, _) = d.arcs();
        arc_of.iter().map(|&a| self.0[a]).collect()
    }
}

/// Arc indices meeting at a crossing.
#[derive(Clone, Copy, Debug)]
pub struct ArcCrossing {
    pub under_in: usize,
    pub over: usize,
    pub under_out: usize,
    pub sign: Sign,
}

pub fn arc_crossings(d: &LinkDiagram) -> (Vec<ArcCrossing>, usize) {
    let (arc_of, n) = d.arcs();
    let arc = |l: u32| arc_of[l as usize - 1];
    let xs = d
        .crossings()
        .iter()
        .map(|c| ArcCrossing { under_in: arc(c.under_in()), over: arc(c.over_in()), under_out: arc(c.under_out()), sign: c.sign })
        .collect();
    (xs, n)
}

/// Rule `under_out = forward(under_in, over, sign)`; `backward` recovers
/// `under_in` from `under_out` when the rule is invertible.
struct Rule<'a> {
    colors: usize,
    forward: &'a (dyn Fn(usize, usize, Sign) -> usize + Sync),
    backward: Option<&'a (dyn Fn(usize, usize, Sign) -> usize + Sync)>,
}

fn propagate(xs: &[ArcCrossing], rule: &Rule, col: &mut [Option<usize>]) -> bool {
    loop {
        let mut changed = false;
        for x in xs {
            match (col[x.under_in], col[x.over], col[x.under_out]) {
                (Some(a), Some(b), out) => {
                    let c = (rule.forward)(a, b, x.sign);
                    match out {
                        Some(o) if o != c => return false,
                        Some(_) => {}
                        None => {
                            col[x.under_out] = Some(c);
                            changed = true;
                        }
                    }
                }
                (None, Some(b), Some(c)) => {
                    if let Some(back) = rule.backward {
                        col[x.under_in] = Some(back(c, b, x.sign));
                        changed = true;
                    }
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(xs: &[ArcCrossing], rule: &Rule, col: Vec<Option<usize>>, out: &mut Vec<Coloring>) {
    let mut col = col;
    if !propagate(xs, rule, &mut col) {
        return;
    }
    match col.iter().position(Option::is_none) {
        None => {
            let c: Vec<usize> = col.into_iter().map(|c| c.expect("complete")).collect();
            // propagation may stop before checking crossings whose arcs were fixed by branching
            if xs.iter().all(|x| (rule.forward)(c[x.under_in], c[x.over], x.sign) == c[x.under_out]) {
                out.push(Coloring(c));
            }
        }
        Some(free) => {
            for v in 0..rule.colors {
                let mut next = col.clone();
                next[free] = Some(v);
                search(xs, rule, next, out);
            }
        }
    }
}

/// All arc colorings, sorted; branches on the first arc run in parallel.
fn enumerate(xs: &[ArcCrossing], arcs: usize, rule: &Rule) -> Vec<Coloring> {
    if arcs == 0 {
        return vec![Coloring(Vec::new())];
    }
    let mut all: Vec<Coloring> = (0..rule.colors)
        .into_par_iter()
        .map(|v| {
            let mut col = vec![None; arcs];
            col[0] = Some(v);
            let mut out = Vec::new();
            search(xs, rule, col, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .concat();
    all.sort();
    all
}

/// Fox `n`-colorings: `under_in + under_out ≡ 2·over (mod n)` at every crossing.
pub fn fox_colorings(d: &LinkDiagram, n: usize) -> Vec<Coloring> {
    let (xs, arcs) = arc_crossings(d);
    let f = move |a: usize, b: usize, _: Sign| (2 * b + n - a % n) % n;
    enumerate(&xs, arcs, &Rule { colors: n, forward: &f, backward: Some(&f) })
}

pub fn fox_count(d: &LinkDiagram, n: usize) -> usize {
    fox_colorings(d, n).len()
}

/// Cokernel of the relation matrix with column `e_a + e_c - 2e_b` per crossing.
pub fn fox_coloring_group(d: &LinkDiagram) -> AbelianGroup {
    let (xs, arcs) = arc_crossings(d);
    let mut m = IntMatrix::new(arcs, xs.len());
    for (k, x) in xs.iter().enumerate() {
        m.add_at(x.under_in, k, &BigInt::from(1)).expect("in range");
        m.add_at(x.under_out, k, &BigInt::from(1)).expect("in range");
        m.add_at(x.over, k, &BigInt::from(-2)).expect("in range");
    }
    cokernel(&m)
}

/// Colorings with `under_out = under_in * over` at positive crossings and
/// `under_in *̄ over` at negative ones. Non-racks are refused unless `force`.
pub fn quandle_colorings(d: &LinkDiagram, q: &Magma2, force: bool) -> Result<Vec<Coloring>, ColoringError> {
    let report = q.verify();
    if !report.invertible && !force {
        return Err(ColoringError::NotARack);
    }
    let (xs, arcs) = arc_crossings(d);
    let fwd = |a: usize, b: usize, s: Sign| match s {
        Sign::Positive => q.star(a, b),
        Sign::Negative => q.starbar(a, b),
    };
    let back = |c: usize, b: usize, s: Sign| match s {
        Sign::Positive => q.starbar(c, b),
        Sign::Negative => q.star(c, b),
    };
    let rule = Rule { colors: q.size(), forward: &fwd, backward: report.invertible.then_some(&back as _) };
    Ok(enumerate(&xs, arcs, &rule))
}

pub fn quandle_coloring_count(d: &LinkDiagram, q: &Magma2, force: bool) -> Result<usize, ColoringError> {
    quandle_colorings(d, q, force).map(|c| c.len())
}

pub fn is_valid_coloring(d: &LinkDiagram, q: &Magma2, c: &Coloring) -> bool {
    let (xs, arcs) = arc_crossings(d);
    c.0.len() == arcs
        && c.0.iter().all(|&v| v < q.size())
        && xs.iter().all(|x| {
            let out = match x.sign {
                Sign::Positive => q.star(c.0[x.under_in], c.0[x.over]),
                Sign::Negative => q.starbar(c.0[x.under_in], c.0[x.over]),
            };
            out == c.0[x.under_out]
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{dihedral_quandle, trivial_quandle};
    use crate::diagram::corpus::load;

    #[test]
    fn trefoil_counts() {
        let t = load("trefoil_left").unwrap();
        assert_eq!(fox_count(&t, 3), 9);
        assert_eq!(fox_count(&t, 5), 5);
        assert_eq!(fox_coloring_group(&t).to_string(), "Z ⊕ Z_3");
        assert_eq!(quandle_coloring_count(&t, &dihedral_quandle(3), false).unwrap(), 9);
    }

    #[test]
    fn unknot_counts() {
        let u = load("unknot").unwrap();
        assert_eq!(fox_count(&u, 7), 7);
        assert_eq!(fox_coloring_group(&u).to_string(), "Z");
        assert_eq!(fox_count(&LinkDiagram::empty(), 4), 1);
    }

    #[test]
    fn trivial_quandle_counts_components() {
        for (_, d) in crate::diagram::corpus::all() {
            let n = quandle_coloring_count(&d, &trivial_quandle(3), false).unwrap();
            assert_eq!(n, 3usize.pow(d.component_count() as u32));
        }
    }

    #[test]
    fn non_rack_refused() {
        let bad = Magma2::new(vec![vec![0, 0], vec![0, 1]], vec![vec![0, 0], vec![0, 1]]).unwrap();
        let t = load("trefoil_left").unwrap();
        assert!(matches!(quandle_colorings(&t, &bad, false), Err(ColoringError::NotARack)));
        assert!(quandle_colorings(&t, &bad, true).is_ok());
    }
}
