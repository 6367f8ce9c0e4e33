#![allow(dead_code)]

pub mod colorings;
pub mod distributive;
pub mod khovanov;
pub mod snf;

use std::path::PathBuf;

use knotforge::algebra::{AbelianGroup, LaurentPoly, Variable};
use knotforge::colorings::{is_2cocycle, CocycleMap, Magma2};
use knotforge::diagram::{LinkDiagram, Sign};
use knotforge::yang_baxter::YangBaxterOperator;
use serde_json::{json, Value};

pub fn pd_of(d: &LinkDiagram) -> Vec<[u32; 4]> {
    d.crossings().iter().map(|c| c.slots).collect()
}

pub fn group_parts(g: &AbelianGroup) -> (usize, Vec<u64>) {
    (g.free_rank, g.torsion().iter().map(|t| u64::try_from(t).unwrap()).collect())
}

/// Khovanov table of `d` from the cube-of-resolutions oracle.
pub fn khovanov_oracle(d: &LinkDiagram) -> Vec<(i64, i64, usize, Vec<u64>)> {
    khovanov::khovanov(&pd_of(d), d.positive_count(), d.negative_count(), d.free_loops())
        .into_iter()
        .map(|((i, j), (r, t))| (i, j, r, t))
        .collect()
}

/// Library table in the same shape.
pub fn khovanov_cells(t: &knotforge::khovanov::KhovanovTable) -> Vec<(i64, i64, usize, Vec<u64>)> {
    t.iter_ij()
        .into_iter()
        .map(|((i, j), g)| {
            let (r, tor) = group_parts(g);
            (i, j, r, tor)
        })
        .collect()
}

/// Sum over every semi-arc coloring of the product of crossing weights.
pub fn naive_state_sum(d: &LinkDiagram, r: &YangBaxterOperator) -> LaurentPoly {
    let dim = r.dim();
    let labels = d.semi_arc_count();
    let mut total = LaurentPoly::zero(r.variable());
    let mut phi = vec![0usize; labels];
    loop {
        let mut term = LaurentPoly::one(r.variable());
        for c in d.crossings() {
            let [a, b, cc, dd] = c.slots.map(|l| phi[l as usize - 1]);
            let w = match c.sign {
                Sign::Positive => r.weight(a, dd, b, cc),
                Sign::Negative => r.inverse_weight(b, a, cc, dd).unwrap(),
            };
            term = &term * &w;
            if term.is_zero() {
                break;
            }
        }
        total += &term;
        let mut i = 0;
        loop {
            if i == labels {
                let loops = LaurentPoly::constant(r.variable(), dim as i64).pow(d.free_loops() as i64).unwrap();
                return &total * &loops;
            }
            phi[i] += 1;
            if phi[i] < dim {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
    }
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

pub fn cells_json(cells: &[(i64, i64, usize, Vec<u64>)]) -> Value {
    Value::Array(cells.iter().map(|(i, j, r, t)| json!([i, j, r, t])).collect())
}

pub fn read_golden(path: &str) -> Value {
    let p = golden_dir().join(path);
    let text = std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    serde_json::from_str(&text).unwrap()
}

pub fn write_golden(path: &str, v: &Value) {
    let p = golden_dir().join(path);
    std::fs::create_dir_all(p.parent().unwrap()).unwrap();
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap() + "\n").unwrap();
}

/// Diagrams with frozen Khovanov fixtures.
pub const KHOVANOV_GOLDEN: &[&str] = &[
    "unknot",
    "kink_positive",
    "kink_negative",
    "trefoil_left",
    "trefoil_right",
    "figure8",
    "knot_6_2",
    "sigma1_2",
    "sigma1_3",
    "sigma1_4",
    "sigma1_5",
    "sigma12_inv3",
];

pub fn khovanov_golden(name: &str) -> Vec<(i64, i64, usize, Vec<u64>)> {
    let v = read_golden(&format!("khovanov/{name}.json"));
    v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c[0].as_i64().unwrap(),
                c[1].as_i64().unwrap(),
                c[2].as_u64().unwrap() as usize,
                c[3].as_array().unwrap().iter().map(|t| t.as_u64().unwrap()).collect(),
            )
        })
        .collect()
}

/// Degrees `0..=3` of dihedral-3 homology, fixture order `(degree, rank, torsion)`.
pub fn distributive_golden(name: &str) -> Vec<(usize, usize, Vec<u64>)> {
    let v = read_golden(&format!("distributive/{name}.json"));
    v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["degree"].as_u64().unwrap() as usize,
                c["rank"].as_u64().unwrap() as usize,
                c["torsion"].as_array().unwrap().iter().map(|t| t.as_u64().unwrap()).collect(),
            )
        })
        .collect()
}

pub fn q(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(Variable::Q, terms.iter().copied())
}

/// `a * b = ωa + ω²b` on the field with four elements, `ω` encoded as 2.
pub fn tetrahedral() -> Magma2 {
    fn mul(x: usize, y: usize) -> usize {
        let mut r = 0;
        for i in 0..2 {
            if y >> i & 1 == 1 {
                r ^= x << i;
            }
        }
        // reduce by ω² = ω + 1
        if r & 4 != 0 {
            r ^= 0b111;
        }
        r
    }
    let star: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| mul(2, a) ^ mul(3, b)).collect()).collect();
    Magma2::from_star(star).unwrap()
}

/// `α(a,b) + α(a*b,c) = α(a,c) + α(a*c,b*c)` and `α(a,a) = 0`.
pub fn cocycle_oracle(q: &Magma2, alpha: &[Vec<u64>], m: u64) -> bool {
    let n = q.size();
    (0..n).all(|a| alpha[a][a].is_multiple_of(m))
        && (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    (alpha[a][b] + alpha[q.star(a, b)][c]) % m == (alpha[a][c] + alpha[q.star(a, c)][q.star(b, c)]) % m
                })
            })
        })
}

/// Every normalized `Z_m` 2-cocycle on `q`.
pub fn all_cocycles(q: &Magma2, m: u64) -> Vec<CocycleMap> {
    let n = q.size();
    let off: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let total = m.pow(off.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut alpha = vec![vec![0u64; n]; n];
        let mut k = code;
        for &(a, b) in &off {
            alpha[a][b] = k % m;
            k /= m;
        }
        let is = cocycle_oracle(q, &alpha, m);
        let map = CocycleMap::new(m, alpha).unwrap();
        assert_eq!(is_2cocycle(q, &map), is);
        if is {
            out.push(map);
        }
    }
    out
}
