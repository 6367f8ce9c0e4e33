//! Exhaustive Fox colorings and the Fox matrix, straight from a PD code.

use num_bigint::BigInt;

use super::snf::{invariant_factors, Dense};

/// Arc of each label: the over strand `b`/`d` continues an arc, under passes cut it.
pub fn arcs(pd: &[[u32; 4]]) -> (Vec<usize>, usize) {
    let labels = pd.iter().flatten().map(|&l| l as usize).max().unwrap_or(0);
    let mut p: Vec<usize> = (0..labels).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for x in pd {
        let (b, d) = (x[1] as usize - 1, x[3] as usize - 1);
        let (rb, rd) = (root(&mut p, b), root(&mut p, d));
        p[rb] = rd;
    }
    let mut ids = std::collections::HashMap::new();
    let arc = (0..labels)
        .map(|l| {
            let r = root(&mut p, l);
            let next = ids.len();
            *ids.entry(r).or_insert(next)
        })
        .collect();
    (arc, ids.len())
}

/// Count of assignments `arc -> Z_n` with `a + c ≡ 2b` at every crossing.
pub fn fox_count(pd: &[[u32; 4]], free_loops: usize, n: usize) -> usize {
    let (arc, count) = arcs(pd);
    let rel: Vec<(usize, usize, usize)> =
        pd.iter().map(|x| (arc[x[0] as usize - 1], arc[x[1] as usize - 1], arc[x[2] as usize - 1])).collect();
    let mut colors = vec![0usize; count];
    let mut total = 0;
    loop {
        if rel.iter().all(|&(a, b, c)| (colors[a] + colors[c]) % n == (2 * colors[b]) % n) {
            total += 1;
        }
        let mut i = 0;
        loop {
            if i == count {
                return total * n.pow(free_loops as u32);
            }
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// `(rank, torsion)` of the cokernel of the crossings × arcs Fox matrix, plus free loops.
pub fn coloring_group(pd: &[[u32; 4]], free_loops: usize) -> (usize, Vec<u64>) {
    let (arc, count) = arcs(pd);
    let mut m: Dense = vec![vec![BigInt::from(0); count]; pd.len()];
    for (r, x) in pd.iter().enumerate() {
        m[r][arc[x[0] as usize - 1]] += 1;
        m[r][arc[x[2] as usize - 1]] += 1;
        m[r][arc[x[1] as usize - 1]] -= 2;
    }
    let f = invariant_factors(m);
    let torsion = f.iter().filter(|d| **d != BigInt::from(1)).map(|d| u64::try_from(d).unwrap()).collect();
    (count - f.len() + free_loops, torsion)
}
