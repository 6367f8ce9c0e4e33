//! Knot and link invariants with exact arithmetic: colorings, distributive and
//! Yang-Baxter homology, state sums, the Kauffman bracket, the Jones polynomial
//! and integral Khovanov homology.

pub mod algebra;
pub mod diagram;
pub mod colorings;
pub mod distributive;
pub mod yang_baxter;
pub mod khovanov;
pub mod cli;
