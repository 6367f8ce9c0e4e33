use serde::{Deserialize, Serialize};

use super::ColoringError;

/// Finite set with two binary operations `*` and `*̄`, stored as row-major
/// tables: `star[a][b] = a * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Magma2 {
    size: usize,
    star: Vec<Vec<usize>>,
    starbar: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Kei,
    Quandle,
    Rack,
    Spindle,
    #[serde(rename = "2-magma")]
    TwoMagma,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleReport {
    pub idempotent: bool,
    pub invertible: bool,
    pub distributive: bool,
    pub involutive: bool,
    pub classification: Classification,
}

impl QuandleReport {
    pub fn is_rack(&self) -> bool {
        self.invertible && self.distributive
    }

    pub fn is_quandle(&self) -> bool {
        self.idempotent && self.is_rack()
    }

    pub fn is_spindle(&self) -> bool {
        self.idempotent && self.distributive
    }
}

#[derive(Serialize, Deserialize)]
struct MagmaJson {
    size: usize,
    star: Vec<Vec<usize>>,
    #[serde(default)]
    starbar: Option<Vec<Vec<usize>>>,
}

impl Magma2 {
    pub fn new(star: Vec<Vec<usize>>, starbar: Vec<Vec<usize>>) -> Result<Self, ColoringError> {
        let size = star.len();
        for (name, t) in [("star", &star), ("starbar", &starbar)] {
            if t.len() != size || t.iter().any(|r| r.len() != size || r.iter().any(|&v| v >= size)) {
                return Err(ColoringError::BadTable(format!("{name} table is not a total {size}x{size} table")));
            }
        }
        Ok(Self { size, star, starbar })
    }

    /// `*̄` is taken to be the inverse of `*` in the second argument.
    pub fn from_star(star: Vec<Vec<usize>>) -> Result<Self, ColoringError> {
        let size = star.len();
        let mut starbar = vec![vec![usize::MAX; size]; size];
        for a in 0..size {
            for b in 0..size {
                let c = *star
                    .get(a)
                    .and_then(|r| r.get(b))
                    .filter(|&&c| c < size)
                    .ok_or_else(|| ColoringError::BadTable("star table is not total".into()))?;
                if starbar[c][b] != usize::MAX {
                    return Err(ColoringError::NotARack);
                }
                starbar[c][b] = a;
            }
        }
        Self::new(star, starbar)
    }

    pub fn from_fn(size: usize, star: impl Fn(usize, usize) -> usize, starbar: impl Fn(usize, usize) -> usize) -> Self {
        let table = |f: &dyn Fn(usize, usize) -> usize| (0..size).map(|a| (0..size).map(|b| f(a, b)).collect()).collect();
        Self::new(table(&star), table(&starbar)).expect("operation values lie in 0..size")
    }

    pub fn from_json(text: &str) -> Result<Self, ColoringError> {
        let j: MagmaJson = serde_json::from_str(text).map_err(|e| ColoringError::BadTable(e.to_string()))?;
        let m = match j.starbar {
            Some(sb) => Self::new(j.star, sb)?,
            None => Self::from_star(j.star)?,
        };
        if m.size != j.size {
            return Err(ColoringError::BadTable(format!("size {} but tables are {}x{}", j.size, m.size, m.size)));
        }
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MagmaJson { size: self.size, star: self.star.clone(), starbar: Some(self.starbar.clone()) })
            .expect("tables serialize")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star[a][b]
    }

    pub fn starbar(&self, a: usize, b: usize) -> usize {
        self.starbar[a][b]
    }

    /// The trivial operation `a *₀ b = a` on the same set.
    pub fn trivialized(&self) -> Self {
        trivial_quandle(self.size)
    }

    pub fn verify(&self) -> QuandleReport {
        let n = self.size;
        let idempotent = (0..n).all(|a| self.star(a, a) == a);
        let invertible = (0..n).all(|a| {
            (0..n).all(|b| self.starbar(self.star(a, b), b) == a && self.star(self.starbar(a, b), b) == a)
        });
        let distributive = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.star(self.star(a, b), c) == self.star(self.star(a, c), self.star(b, c))))
        });
        let involutive = self.star == self.starbar;
        let classification = match (idempotent, invertible, distributive) {
            (true, true, true) if involutive => Classification::Kei,
            (true, true, true) => Classification::Quandle,
            (_, true, true) => Classification::Rack,
            (true, _, true) => Classification::Spindle,
            _ => Classification::TwoMagma,
        };
        QuandleReport { idempotent, invertible, distributive, involutive, classification }
    }
}

pub fn verify_quandle(m: &Magma2) -> QuandleReport {
    m.verify()
}

/// `a * b = a *̄ b = 2b - a (mod n)`.
pub fn dihedral_quandle(n: usize) -> Magma2 {
    assert!(n >= 1, "dihedral quandle needs a nonempty set");
    let f = move |a: usize, b: usize| (2 * b + n - a % n) % n;
    Magma2::from_fn(n, f, f)
}

/// `a * b = a`.
pub fn trivial_quandle(k: usize) -> Magma2 {
    Magma2::from_fn(k, |a, _| a, |a, _| a)
}

/// `a * b = t·a + (1 - t)·b (mod n)` for a unit `t`.
pub fn alexander_quandle(n: usize, t: usize) -> Result<Magma2, ColoringError> {
    let t = t % n;
    let tinv = (1..n).find(|&s| s * t % n == 1 % n).ok_or(ColoringError::NotARack)?;
    let one_minus_t = (1 + n - t) % n;
    Ok(Magma2::from_fn(
        n,
        move |a, b| (t * a + one_minus_t * b) % n,
        // a *̄ b = t⁻¹(a - (1 - t)b)
        move |a, b| tinv * ((a + n * n - one_minus_t * b % n) % n) % n,
    ))
}

/// Rack on `Z_n` with `a * b = a + 1`; not idempotent.
pub fn cyclic_rack(n: usize) -> Magma2 {
    Magma2::from_fn(n, move |a, _| (a + 1) % n, move |a, _| (a + n - 1) % n)
}
