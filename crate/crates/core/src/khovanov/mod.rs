//! Kauffman bracket, enhanced Kauffman states and integral Khovanov homology.
//!
//! A state smooths crossing `[a, b, c, d]` as A by joining `(a, b)` and `(c, d)`
//! and as B by joining `(a, d)` and `(b, c)`. Chains live in bidegrees
//! `a = σ(s)`, `b = σ(s) + 2τ(S)`; the boundary lowers `a` by 2 by switching
//! one A-crossing to B with sign `(-1)^{#A-crossings before it}`.

mod adequacy;
mod analysis;
mod bracket;
mod complex;

pub use adequacy::{
    adequacy, extreme_group_check, is_adequate, state_graph, torsion_predict, ExtremeReport, ExtremeSide, StateGraph,
    TorsionPrediction,
};
pub use analysis::{
    analyze_sequence, coefficient_analysis, jones_classical, lee_support_check, reduce_jones, unreduced_jones,
    CoefficientReport, LeeReport,
};
pub use bracket::{bracket_skein, bracket_state_sum, enhanced_state_sum, jones_from_bracket};
pub use complex::{khovanov_complex, khovanov_homology, to_ab, to_ij, BigradedComplex, EnhancedState, KhovanovTable};

use crate::diagram::{DiagramError, Smoothing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KhovanovError {
    #[error("{0} crossings exceed the supported maximum")]
    TooManyCrossings(usize),
    #[error("a state has more than 63 circles")]
    TooManyCircles,
    #[error("unreduced Jones polynomial is not divisible by q + q^-1")]
    NonDivisible,
    #[error("diagram is not {0:?}-adequate")]
    NotAdequate(Smoothing),
    #[error("{0:?}-state graph is disconnected")]
    DisconnectedStateGraph(Smoothing),
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
