use std::collections::HashMap;

use rayon::prelude::*;

use super::{YangBaxterOperator, YbError};
use crate::algebra::LaurentPoly;
use crate::diagram::{Label, LinkDiagram, Sign};

/// Weights of one crossing indexed by the colors of its slots `(a, b, c, d)`.
fn crossing_table(r: &YangBaxterOperator, sign: Sign) -> Result<Vec<Option<LaurentPoly>>, YbError> {
    let d = r.dim();
    let mut table = Vec::with_capacity(d.pow(4));
    for ca in 0..d {
        for cb in 0..d {
            for cc in 0..d {
                for cd in 0..d {
                    let w = match sign {
                        // under strand enters from the left of the over strand
                        Sign::Positive => r.weight(ca, cd, cb, cc),
                        Sign::Negative => r.inverse_weight(cb, ca, cc, cd)?,
                    };
                    table.push((!w.is_zero()).then_some(w));
                }
            }
        }
    }
    Ok(table)
}

fn processing_order(d: &LinkDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut done = vec![false; n];
    let mut open: Vec<Label> = Vec::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&k| !done[k])
            .max_by_key(|&k| {
                let shared = d.crossings()[k].slots.iter().filter(|l| open.contains(l)).count();
                (shared, std::cmp::Reverse(k))
            })
            .expect("unprocessed crossing");
        done[next] = true;
        order.push(next);
        for &l in &d.crossings()[next].slots {
            if let Some(p) = open.iter().position(|&o| o == l) {
                open.remove(p);
            } else {
                open.push(l);
            }
        }
    }
    order
}

/// `Σ_φ Π_p R̂(p)` over all semi-arc colorings, using `R` at positive and `R̄`
/// at negative crossings. A framed quantity: curls change it by a scalar.
pub fn state_sum(d: &LinkDiagram, r: &YangBaxterOperator) -> Result<LaurentPoly, YbError> {
    let dim = r.dim();
    let pos = crossing_table(r, Sign::Positive)?;
    let neg = if d.negative_count() > 0 { Some(crossing_table(r, Sign::Negative)?) } else { None };
    let mut remaining = vec![0u8; d.semi_arc_count() + 1];
    for c in d.crossings() {
        for &l in &c.slots {
            remaining[l as usize] += 1;
        }
    }
    let mut open: Vec<Label> = Vec::new();
    let mut frontier: HashMap<Vec<u8>, LaurentPoly> = HashMap::from([(Vec::new(), LaurentPoly::one(r.variable()))]);
    for k in processing_order(d) {
        let x = &d.crossings()[k];
        let table = match x.sign {
            Sign::Positive => &pos,
            Sign::Negative => neg.as_ref().expect("built when needed"),
        };
        let mut fresh: Vec<Label> = Vec::new();
        for &l in &x.slots {
            if !open.contains(&l) && !fresh.contains(&l) {
                fresh.push(l);
            }
            remaining[l as usize] -= 1;
        }
        let mut next_open: Vec<Label> = open.iter().chain(&fresh).copied().collect();
        next_open.retain(|&l| remaining[l as usize] > 0);
        let slot_pos: Vec<(bool, usize)> = x
            .slots
            .iter()
            .map(|l| match open.iter().position(|o| o == l) {
                Some(p) => (true, p),
                None => (false, fresh.iter().position(|f| f == l).expect("fresh label")),
            })
            .collect();
        let keep: Vec<(bool, usize)> = next_open
            .iter()
            .map(|l| match open.iter().position(|o| o == l) {
                Some(p) => (true, p),
                None => (false, fresh.iter().position(|f| f == l).expect("fresh label")),
            })
            .collect();
        let combos = dim.pow(fresh.len() as u32);
        let contributions: Vec<(Vec<u8>, LaurentPoly)> = frontier
            .into_par_iter()
            .flat_map_iter(|(key, value)| {
                let mut out = Vec::new();
                let mut fresh_colors = vec![0u8; fresh.len()];
                for mut combo in 0..combos {
                    for c in fresh_colors.iter_mut() {
                        *c = (combo % dim) as u8;
                        combo /= dim;
                    }
                    let color = |(old, p): (bool, usize)| if old { key[p] } else { fresh_colors[p] } as usize;
                    let idx = slot_pos.iter().fold(0, |acc, &sp| acc * dim + color(sp));
                    if let Some(w) = &table[idx] {
                        let new_key: Vec<u8> = keep.iter().map(|&sp| color(sp) as u8).collect();
                        out.push((new_key, &value * w));
                    }
                }
                out
            })
            .collect();
        let mut merged: HashMap<Vec<u8>, LaurentPoly> = HashMap::with_capacity(contributions.len());
        for (key, v) in contributions {
            match merged.get_mut(&key) {
                Some(acc) => *acc += &v,
                None => {
                    merged.insert(key, v);
                }
            }
        }
        merged.retain(|_, v| !v.is_zero());
        frontier = merged;
        open = next_open;
    }
    let total: LaurentPoly = frontier.into_values().sum();
    let loops = LaurentPoly::constant(r.variable(), dim as i64).pow(d.free_loops() as i64).expect("nonnegative power");
    Ok(&total * &loops)
}

/// `b / a` when it is a unit `±x^k`, the scalar a framing change introduces.
pub fn framing_ratio(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if a.is_zero() {
        return b.is_zero().then(|| LaurentPoly::one(a.var()));
    }
    b.div_exact(a).filter(|u| u.is_unit() && &(a * u) == b)
}
