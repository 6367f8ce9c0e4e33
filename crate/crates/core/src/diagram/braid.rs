use std::collections::BTreeMap;

use super::{DiagramError, LinkDiagram, Sign, StrandCrossing};

/// Braid word on `strands` strands; letter `i` is `σ_i`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::BadGenerator { letter: 0, strands });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(DiagramError::BadGenerator { letter: l, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Word repeated `k` times; negative `k` repeats the inverse word.
    pub fn power(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let letters = std::iter::repeat_n(base.letters, k.unsigned_abs() as usize).flatten().collect();
        Self { strands: self.strands, letters }
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let strands = self.strands.max(other.strands);
        Self { strands, letters: self.letters.iter().chain(&other.letters).copied().collect() }
    }

    /// Closure with strands running upward, `σ_i` taking the left strand over.
    pub fn closure(&self) -> Result<LinkDiagram, DiagramError> {
        let mut current: Vec<usize> = (0..self.strands).collect();
        let mut next = self.strands;
        let mut raw = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let left = l.unsigned_abs() as usize - 1;
            let (p, q) = (current[left], current[left + 1]);
            let (new_left, new_right) = (next, next + 1);
            next += 2;
            raw.push(if l > 0 {
                StrandCrossing { under_in: q, under_out: new_left, over_in: p, over_out: new_right, sign: Sign::Positive }
            } else {
                StrandCrossing { under_in: p, under_out: new_right, over_in: q, over_out: new_left, sign: Sign::Negative }
            });
            current[left] = new_left;
            current[left + 1] = new_right;
        }
        let closing: BTreeMap<usize, usize> =
            current.iter().enumerate().filter(|(j, id)| *j != **id).map(|(j, id)| (*id, j)).collect();
        let close = |id: usize| closing.get(&id).copied().unwrap_or(id);
        for c in &mut raw {
            c.under_out = close(c.under_out);
            c.over_out = close(c.over_out);
        }
        let free = current.iter().enumerate().filter(|(j, id)| *j == **id).count();
        LinkDiagram::from_strands(&raw, free)
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "braid {}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}
