//! Exact integer and Laurent-polynomial arithmetic, Smith normal form, and
//! homology of free chain complexes.

pub mod complex;
pub mod group;
pub mod laurent;
pub mod matrix;
pub mod snf;

pub use complex::{homology_at, ChainComplex, ComplexError};
pub use group::AbelianGroup;
pub use laurent::{LaurentPoly, Variable};
pub use matrix::{Coeff, IntMatrix, MatrixError, PolyMatrix, SparseMatrix};
pub use snf::{cokernel, smith_normal_form, SmithForm};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// JSON number when the value fits in 64 bits, decimal string otherwise.
pub(crate) fn bigint_json(v: &BigInt) -> serde_json::Value {
    if let Some(i) = v.to_i64() {
        serde_json::Value::from(i)
    } else {
        serde_json::Value::String(v.to_string())
    }
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from).or_else(|| n.as_u64().map(BigInt::from)),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}
