use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::KhovanovError;
use crate::algebra::laurent::loop_value;
use crate::algebra::{LaurentPoly, Variable};
use crate::diagram::{smooth, KauffmanState, LinkDiagram, UnionFind};

pub(crate) const MAX_CROSSINGS: usize = 24;

pub(crate) fn check_size(d: &LinkDiagram) -> Result<(), KhovanovError> {
    if d.crossing_count() > MAX_CROSSINGS {
        return Err(KhovanovError::TooManyCrossings(d.crossing_count()));
    }
    Ok(())
}

/// Number of states with each `(σ(s), |D_s|)`.
pub(crate) fn state_histogram(d: &LinkDiagram) -> Result<BTreeMap<(i64, usize), u64>, KhovanovError> {
    check_size(d)?;
    let n = d.crossing_count();
    let hist = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let s = KauffmanState::from_mask(n, mask);
            let circles = smooth(d, &s).expect("state size").circle_count;
            (s.sigma(), circles)
        })
        .fold(BTreeMap::new, |mut acc: BTreeMap<(i64, usize), u64>, key| {
            *acc.entry(key).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(hist)
}

/// `[D] = Σ_s A^{σ(s)} (-A² - A^{-2})^{|D_s|}`, unreduced.
pub fn bracket_state_sum(d: &LinkDiagram) -> Result<LaurentPoly, KhovanovError> {
    let mut out = LaurentPoly::zero(Variable::A);
    let delta = loop_value();
    for ((sigma, circles), count) in state_histogram(d)? {
        let term = delta.pow(circles as i64).expect("nonnegative").shift(sigma).scale(&BigInt::from(count));
        out += &term;
    }
    Ok(out)
}

/// `Σ_S (-1)^{|D_s|} A^{σ(s) + 2τ(S)}` over enhanced states.
pub fn enhanced_state_sum(d: &LinkDiagram) -> Result<LaurentPoly, KhovanovError> {
    let mut out = LaurentPoly::zero(Variable::A);
    for ((sigma, circles), count) in state_histogram(d)? {
        let sign = if circles % 2 == 0 { 1 } else { -1 };
        // choose the number of negative circles
        let mut binom = BigInt::from(1);
        for neg in 0..=circles {
            let tau = circles as i64 - 2 * neg as i64;
            out.add_term(sigma + 2 * tau, &(&binom * count * sign));
            binom = binom * (circles - neg) / (neg + 1);
        }
    }
    Ok(out)
}

/// Skein resolution `[X] = A[Y] + A^{-1}[Z]` crossing by crossing, memoized
/// on how the still-open semi-arcs are joined.
pub fn bracket_skein(d: &LinkDiagram) -> Result<LaurentPoly, KhovanovError> {
    check_size(d)?;
    let crossings: Vec<[usize; 4]> = d.crossings().iter().map(|c| c.slots.map(|l| l as usize - 1)).collect();
    let n_labels = d.semi_arc_count();
    // last crossing index at which each label still appears
    let mut last = vec![0usize; n_labels];
    for (k, c) in crossings.iter().enumerate() {
        for &l in c {
            last[l] = last[l].max(k);
        }
    }
    let mut memo: HashMap<(usize, Vec<usize>), LaurentPoly> = HashMap::new();
    let start: Vec<usize> = (0..n_labels).collect();
    let inner = skein_rec(&crossings, &last, 0, start, &mut memo);
    let loops = loop_value().pow(d.free_loops() as i64).expect("nonnegative");
    Ok(&inner * &loops)
}

const DEAD: usize = usize::MAX;

/// `block[l]` names the block of each open label (`DEAD` once closed off);
/// returns the bracket of crossings `k..` given those joins.
fn skein_rec(
    crossings: &[[usize; 4]],
    last: &[usize],
    k: usize,
    block: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), LaurentPoly>,
) -> LaurentPoly {
    if k == crossings.len() {
        return LaurentPoly::one(Variable::A);
    }
    if let Some(v) = memo.get(&(k, block.clone())) {
        return v.clone();
    }
    let [a, b, c, dd] = crossings[k];
    let mut total = LaurentPoly::zero(Variable::A);
    for (joins, exp) in [([(a, b), (c, dd)], 1), ([(a, dd), (b, c)], -1)] {
        let mut uf = UnionFind::new(block.len());
        let mut first: HashMap<usize, usize> = HashMap::new();
        for (l, &r) in block.iter().enumerate() {
            if r != DEAD {
                uf.union(l, *first.entry(r).or_insert(l));
            }
        }
        for (x, y) in joins {
            uf.union(x, y);
        }
        let mut alive: HashMap<usize, bool> = HashMap::new();
        for l in (0..block.len()).filter(|&l| block[l] != DEAD) {
            *alive.entry(uf.find(l)).or_insert(false) |= last[l] > k;
        }
        let closed = alive.values().filter(|x| !**x).count();
        // canonical names: blocks numbered by first label
        let mut rename: HashMap<usize, usize> = HashMap::new();
        let next: Vec<usize> = (0..block.len())
            .map(|l| {
                if block[l] == DEAD {
                    return DEAD;
                }
                let r = uf.find(l);
                if !alive[&r] {
                    return DEAD;
                }
                let fresh = rename.len();
                *rename.entry(r).or_insert(fresh)
            })
            .collect();
        let sub = skein_rec(crossings, last, k + 1, next, memo);
        let factor = loop_value().pow(closed as i64).expect("nonnegative");
        total += &(&sub * &factor).shift(exp);
    }
    memo.insert((k, block), total.clone());
    total
}

/// `c·A^b ↦ c·(-1)^{(w-b)/2} q^{(3w-b)/2}`: the unreduced Jones polynomial
/// from the bracket and the writhe.
pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero(Variable::Q);
    for (b, c) in bracket.terms() {
        let (half, j) = ((writhe - b) / 2, (3 * writhe - b) / 2);
        out.add_term(j, &if half.rem_euclid(2) == 0 { c.clone() } else { -c });
    }
    out
}
