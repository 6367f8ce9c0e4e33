use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::complex::{khovanov_complex, KhovanovTable};
use super::KhovanovError;
use crate::algebra::laurent::quantum_two;
use crate::algebra::{LaurentPoly, Variable};
use crate::diagram::LinkDiagram;

/// Chain-level graded Euler characteristic `Σ (-1)^i q^j rank C^{i,j}`.
pub fn unreduced_jones(d: &LinkDiagram) -> Result<LaurentPoly, KhovanovError> {
    Ok(khovanov_complex(d)?.euler_characteristic())
}

/// `unreduced / (q + q⁻¹)` at `q = -t^{1/2}`, written in `x = t^{1/2}`.
pub fn reduce_jones(unreduced: &LaurentPoly) -> Result<LaurentPoly, KhovanovError> {
    let reduced = unreduced.div_exact(&quantum_two()).ok_or(KhovanovError::NonDivisible)?;
    Ok(reduced.substitute_sign(true).with_var(Variable::THalf))
}

pub fn jones_classical(d: &LinkDiagram) -> Result<LaurentPoly, KhovanovError> {
    reduce_jones(&unreduced_jones(d)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeeReport {
    /// Distinct values of `j - 2i` among nonzero groups.
    pub diagonals: Vec<i64>,
    pub two_diagonals: bool,
    pub torsion_on_lower: bool,
    pub only_z2_torsion: bool,
    pub holds: bool,
}

/// Nonzero groups on exactly two diagonals `j - 2i` two apart, all torsion
/// on the lower one. Requires a connected alternating diagram unless `force`.
pub fn lee_support_check(table: &KhovanovTable, d: &LinkDiagram, force: bool) -> Result<LeeReport, KhovanovError> {
    if !force {
        if !d.is_connected() {
            return Err(KhovanovError::PreconditionNotMet("diagram is split".into()));
        }
        if !d.is_alternating()? {
            return Err(KhovanovError::PreconditionNotMet("diagram is not alternating".into()));
        }
    }
    let cells = table.iter_ij();
    let diagonals: BTreeSet<i64> = cells.iter().map(|((i, j), _)| j - 2 * i).collect();
    let diagonals: Vec<i64> = diagonals.into_iter().collect();
    let two_diagonals = diagonals.len() == 2 && diagonals[1] - diagonals[0] == 2;
    let torsion_on_lower = cells
        .iter()
        .filter(|(_, g)| !g.torsion().is_empty())
        .all(|((i, j), _)| Some(&(j - 2 * i)) == diagonals.first());
    let only_z2_torsion = cells.iter().all(|(_, g)| g.torsion().iter().all(|t| *t == BigInt::from(2)));
    Ok(LeeReport { holds: two_diagonals && torsion_on_lower, diagonals, two_diagonals, torsion_on_lower, only_z2_torsion })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientReport {
    pub alternating_signs: bool,
    /// Strictly increasing then strictly decreasing; a plateau fails.
    pub unimodal: bool,
    /// `c_i² > c_{i-1} c_{i+1}` at every interior point.
    pub log_concave: bool,
}

/// Flags on the nonzero coefficients of `p` in exponent order.
pub fn coefficient_analysis(p: &LaurentPoly) -> CoefficientReport {
    let coeffs: Vec<BigInt> = p.terms().map(|(_, c)| c.clone()).collect();
    analyze_sequence(&coeffs)
}

pub fn analyze_sequence(coeffs: &[BigInt]) -> CoefficientReport {
    let alternating_signs = coeffs.windows(2).all(|w| w[0].is_positive() != w[1].is_positive());
    let abs: Vec<BigInt> = coeffs.iter().map(|c| c.abs()).collect();
    let peak = abs.iter().enumerate().rev().max_by(|x, y| x.1.cmp(y.1)).map_or(0, |(i, _)| i);
    let unimodal = abs.is_empty()
        || (abs[..=peak].windows(2).all(|w| w[0] < w[1]) && abs[peak..].windows(2).all(|w| w[0] > w[1]));
    let log_concave = abs.windows(3).all(|w| &w[1] * &w[1] > &w[0] * &w[2]);
    CoefficientReport { alternating_signs, unimodal, log_concave }
}
