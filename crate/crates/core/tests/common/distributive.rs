//! Dense boundaries of the one-term and two-term (rack) complexes, `C_n = ZX^{n+1}`.

use num_bigint::BigInt;

use super::snf::{homology, Dense};

pub type Table = Vec<Vec<usize>>;

fn tuples(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..k).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

fn pos(t: &[usize], k: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * k + x)
}

/// `(x_0 * x_i, ..., x_{i-1} * x_i, x_{i+1}, ..., x_n)`.
fn act(star: &Table, t: &[usize], i: usize) -> Vec<usize> {
    let mut v: Vec<usize> = t[..i].iter().map(|&x| star[x][t[i]]).collect();
    v.extend_from_slice(&t[i + 1..]);
    v
}

fn drop(t: &[usize], i: usize) -> Vec<usize> {
    let mut v = t.to_vec();
    v.remove(i);
    v
}

/// `∂(x_0..x_n) = (x_1..x_n) + Σ_{i≥1} (-1)^i (x_0*x_i, ..., x_{i-1}*x_i, x_{i+1}, ...)`.
pub fn one_term_boundary(star: &Table, n: usize) -> Dense {
    let k = star.len();
    let rows = if n == 0 { 0 } else { k.pow(n as u32) };
    let mut m = vec![vec![BigInt::from(0); k.pow(n as u32 + 1)]; rows];
    if n == 0 {
        return m;
    }
    for (col, t) in tuples(k, n + 1).iter().enumerate() {
        m[pos(&t[1..], k)][col] += 1;
        for i in 1..=n {
            let s = if i % 2 == 0 { 1 } else { -1 };
            m[pos(&act(star, t, i), k)][col] += s;
        }
    }
    m
}

/// `∂(x_0..x_n) = Σ_{i≥1} (-1)^i [(x_0*x_i, ..., x_{i-1}*x_i, ...) - (x_0, ..., x̂_i, ..., x_n)]`.
pub fn rack_boundary(star: &Table, n: usize) -> Dense {
    let k = star.len();
    let rows = if n == 0 { 0 } else { k.pow(n as u32) };
    let mut m = vec![vec![BigInt::from(0); k.pow(n as u32 + 1)]; rows];
    for (col, t) in tuples(k, n + 1).iter().enumerate() {
        for i in 1..=n {
            let s = if i % 2 == 0 { 1 } else { -1 };
            m[pos(&act(star, t, i), k)][col] += s;
            m[pos(&drop(t, i), k)][col] -= s;
        }
    }
    m
}

pub fn one_term_homology(star: &Table, n: usize) -> (usize, Vec<u64>) {
    let k = star.len();
    let out = one_term_boundary(star, n);
    let inc = one_term_boundary(star, n + 1);
    homology(k.pow(n as u32 + 1), (n > 0).then_some(&out), Some(&inc))
}

pub fn rack_homology(star: &Table, n: usize) -> (usize, Vec<u64>) {
    let k = star.len();
    let out = rack_boundary(star, n);
    let inc = rack_boundary(star, n + 1);
    homology(k.pow(n as u32 + 1), (n > 0).then_some(&out), Some(&inc))
}

pub fn dihedral(n: usize) -> Table {
    (0..n).map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect()).collect()
}
