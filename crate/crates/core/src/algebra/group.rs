use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Finitely generated abelian group `Z^r ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_k}` in invariant
/// factor form: `1 < d_1 | d_2 | ... | d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    pub free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// Accepts any list of cyclic orders and normalizes it; orders 0 and 1 are
    /// rejected and ignored respectively.
    pub fn new(free_rank: usize, cyclic_orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut f: Vec<BigInt> = cyclic_orders.into_iter().map(|d| d.abs()).collect();
        assert!(f.iter().all(|d| !d.is_zero()), "cyclic order 0 is a free summand");
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let g = f[i].gcd(&f[j]);
                let l = f[i].lcm(&f[j]);
                f[i] = g;
                f[j] = l;
            }
        }
        f.retain(|d| !d.is_one());
        Self { free_rank, torsion: f }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    pub fn from_u64(free_rank: usize, orders: &[u64]) -> Self {
        Self::new(free_rank, orders.iter().map(|&d| BigInt::from(d)))
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn free_part(&self) -> Self {
        Self::free(self.free_rank)
    }

    pub fn torsion_part(&self) -> Self {
        Self { free_rank: 0, torsion: self.torsion.clone() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(other.torsion.iter()).cloned(),
        )
    }

    /// Prime-power decomposition of the torsion: `(p, k)` for each `Z_{p^k}`.
    pub fn primary_decomposition(&self) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        for d in &self.torsion {
            let mut n = d.clone();
            let mut p = BigInt::from(2);
            while &p * &p <= n {
                let mut k = 0;
                while n.is_multiple_of(&p) {
                    n /= &p;
                    k += 1;
                }
                if k > 0 {
                    out.push((p.to_u64().expect("prime fits in u64"), k));
                }
                p += 1;
            }
            if !n.is_one() {
                out.push((n.to_u64().expect("prime fits in u64"), 1));
            }
        }
        out.sort_unstable();
        out
    }

    /// `|Hom(G, Z_n)| = n^r · Π gcd(d_i, n)`.
    pub fn hom_count_to_cyclic(&self, n: u64) -> BigInt {
        let nb = BigInt::from(n);
        let mut count = num_traits::pow::pow(nb.clone(), self.free_rank);
        for d in &self.torsion {
            count *= d.gcd(&nb);
        }
        count
    }

    /// Number of `Z_2` summands when all torsion is 2-primary of exponent 2.
    pub fn z2_rank(&self) -> Option<usize> {
        let two = BigInt::from(2);
        self.torsion.iter().all(|d| *d == two).then_some(self.torsion.len())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            if run == 1 {
                parts.push(format!("Z_{d}"));
            } else {
                parts.push(format!("Z_{d}^{run}"));
            }
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    rank: usize,
    torsion: Vec<serde_json::Value>,
}

impl Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupRepr {
            rank: self.free_rank,
            torsion: self.torsion.iter().map(crate::algebra::bigint_json).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = GroupRepr::deserialize(d)?;
        let mut orders = Vec::with_capacity(r.torsion.len());
        for v in r.torsion {
            match crate::algebra::bigint_from_json(&v) {
                Some(b) if b > BigInt::zero() => orders.push(b),
                _ => return Err(serde::de::Error::custom(format!("bad torsion coefficient {v}"))),
            }
        }
        Ok(Self::new(r.rank, orders))
    }
}
