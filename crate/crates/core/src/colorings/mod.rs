//! Fox and quandle colorings, the coloring group, 2-chains of colored
//! diagrams and cocycle state sums.
//!
//! A crossing colored by a 2-magma has under-in color `a`, over color `b` and
//! under-out color `a * b` when positive, `a *̄ b` when negative.

mod cocycle;
mod quandle;
mod solve;

pub use cocycle::{check_2cocycle, cocycle_state_sum, cocycle_value, is_2cocycle, two_chain, CocycleCheck, CocycleMap, TwoChain};
pub use quandle::{
    alexander_quandle, cyclic_rack, dihedral_quandle, trivial_quandle, verify_quandle, Classification, Magma2,
    QuandleReport,
};
pub use solve::{
    arc_crossings, fox_coloring_group, fox_colorings, fox_count, is_valid_coloring, quandle_coloring_count,
    quandle_colorings, ArcCrossing, Coloring,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("operation is not invertible in the second argument (not a rack)")]
    NotARack,
    #[error("coloring violates the crossing rule")]
    InvalidColoring,
    #[error("bad table: {0}")]
    BadTable(String),
    #[error("quandle has {quandle} elements but the table has {other}")]
    SizeMismatch { quandle: usize, other: usize },
}
