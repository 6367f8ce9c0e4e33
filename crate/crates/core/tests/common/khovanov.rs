//! Cube-of-resolutions Khovanov complex with generators `1, x` per circle.
//!
//! Vertex `r` (bit set = 1-smoothing) sits in homological degree
//! `|r| - n₋`; a generator has quantum degree `#1 - #x + |r| + n₊ - 2n₋`.
//! The 0-smoothing of `X[a,b,c,d]` joins `a-b` and `c-d`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use super::snf::{homology, Dense};

struct Vertex {
    /// Circle of each label (index `label - 1`).
    circle: Vec<usize>,
    count: usize,
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

fn resolve(pd: &[[u32; 4]], labels: usize, r: u64) -> Vertex {
    let mut p: Vec<usize> = (0..labels).collect();
    for (k, x) in pd.iter().enumerate() {
        let [a, b, c, d] = x.map(|l| l as usize - 1);
        let pairs = if r >> k & 1 == 0 { [(a, b), (c, d)] } else { [(a, d), (b, c)] };
        for (u, v) in pairs {
            let (ru, rv) = (find(&mut p, u), find(&mut p, v));
            p[ru] = rv;
        }
    }
    let mut ids: HashMap<usize, usize> = HashMap::new();
    let circle = (0..labels)
        .map(|l| {
            let root = find(&mut p, l);
            let next = ids.len();
            *ids.entry(root).or_insert(next)
        })
        .collect();
    Vertex { circle, count: ids.len() }
}

/// `H^{i,j}` as `(rank, torsion)` for a PD code with `n₊`, `n₋` crossings of each sign.
pub fn khovanov(pd: &[[u32; 4]], n_plus: usize, n_minus: usize, free_loops: usize) -> BTreeMap<(i64, i64), (usize, Vec<u64>)> {
    let n = pd.len();
    let labels = pd.iter().flatten().map(|&l| l as usize).max().unwrap_or(0);
    let verts: Vec<Vertex> = (0..1u64 << n).map(|r| resolve(pd, labels, r)).collect();
    // generator: (vertex, bits) with bit set = x on that circle; free loops follow the real circles
    let total = |v: &Vertex| v.count + free_loops;
    let mut gens: BTreeMap<(i64, i64), Vec<(u64, u64)>> = BTreeMap::new();
    for (r, v) in verts.iter().enumerate() {
        let ones = (r as u64).count_ones() as i64;
        let k = total(v);
        for bits in 0..1u64 << k {
            let xs = bits.count_ones() as i64;
            let q = (k as i64 - 2 * xs) + ones + n_plus as i64 - 2 * n_minus as i64;
            gens.entry((ones - n_minus as i64, q)).or_default().push((r as u64, bits));
        }
    }
    let index: HashMap<(u64, u64), usize> =
        gens.values().flat_map(|g| g.iter().enumerate().map(|(i, x)| (*x, i))).collect();
    let map_circle = |from: &Vertex, to: &Vertex, c: usize| -> usize {
        if c >= from.count {
            return c - from.count + to.count;
        }
        let l = from.circle.iter().position(|&x| x == c).expect("circle has a label");
        to.circle[l]
    };
    let mut d: BTreeMap<(i64, i64), Dense> = BTreeMap::new();
    for (&(i, q), src) in &gens {
        let Some(dst) = gens.get(&(i + 1, q)) else { continue };
        let mut m = vec![vec![BigInt::from(0); src.len()]; dst.len()];
        for (col, &(r, bits)) in src.iter().enumerate() {
            let from = &verts[r as usize];
            for k in 0..n {
                if r >> k & 1 == 1 {
                    continue;
                }
                let sign: i64 = if (r & ((1 << k) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                let r2 = r | 1 << k;
                let to = &verts[r2 as usize];
                let [a, b, c, _] = pd[k].map(|l| l as usize - 1);
                let (ca, cc) = (from.circle[a], from.circle[c]);
                let mut rest = 0u64;
                for circ in 0..total(from) {
                    if circ != ca && circ != cc && bits >> circ & 1 == 1 {
                        rest |= 1 << map_circle(from, to, circ);
                    }
                }
                let x = |circ: usize| bits >> circ & 1 == 1;
                let mut images = Vec::new();
                if ca != cc {
                    let merged = to.circle[a];
                    match (x(ca), x(cc)) {
                        (false, false) => images.push(rest),
                        (true, true) => {}
                        _ => images.push(rest | 1 << merged),
                    }
                } else {
                    let (p, s) = (to.circle[a], to.circle[b]);
                    if x(ca) {
                        images.push(rest | 1 << p | 1 << s);
                    } else {
                        images.push(rest | 1 << p);
                        images.push(rest | 1 << s);
                    }
                }
                for img in images {
                    let row = index[&(r2, img)];
                    m[row][col] += sign;
                }
            }
        }
        d.insert((i, q), m);
    }
    let mut out = BTreeMap::new();
    for (&(i, q), src) in &gens {
        let h = homology(src.len(), d.get(&(i, q)), d.get(&(i - 1, q)));
        if h.0 > 0 || !h.1.is_empty() {
            out.insert((i, q), h);
        }
    }
    out
}
