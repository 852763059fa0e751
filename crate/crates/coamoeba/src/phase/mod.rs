//! Pointwise phase analysis on the torus.
//!
//! For a polynomial with support `a_k` and coefficients `f_k`, the phase
//! vector at an argument point `theta` has components
//! `exp(i (arg f_k + <a_k, theta>))`. The polynomial is colopsided at `theta`
//! when all phases fit in a closed half-plane with at least one strictly
//! inside; the lopsided coamoeba is the locus where this fails. These
//! functions accept arbitrary supports so that truncations and trinomial
//! members of systems reuse the same code path.

pub mod order;
pub mod shell;

pub use order::{complement_index_set, order_map, raw_order_value, Zonotope1D};
pub use shell::{shell, ShellLineFamily};

use crate::error::CoamoebaError;
use crate::{Result, ANGLE_TOL, TAU};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Nonzero complex coefficients indexed like the support.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientVector(Vec<Complex64>);

impl CoefficientVector {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.iter().any(|c| c.norm() == 0.0 || !c.is_finite()) {
            return Err(CoamoebaError::InvalidInput(
                "coefficients must be nonzero and finite".into(),
            ));
        }
        Ok(CoefficientVector(coeffs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.0
    }

    pub fn moduli(&self) -> Vec<f64> {
        self.0.iter().map(|c| c.norm()).collect()
    }

    /// Principal arguments in `(-pi, pi]`.
    pub fn arguments(&self) -> Vec<f64> {
        self.0.iter().map(|c| crate::numeric::principal_arg(*c)).collect()
    }
}

/// An argument vector reduced componentwise to `[0, 2pi)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorusPoint(Vec<f64>);

impl TorusPoint {
    pub fn new(angles: Vec<f64>) -> Self {
        TorusPoint(angles.into_iter().map(|a| a.rem_euclid(TAU)).collect())
    }

    pub fn angles(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Componentwise translation mod 2 pi.
    pub fn offset(&self, delta: &[f64]) -> TorusPoint {
        TorusPoint::new(self.0.iter().zip(delta).map(|(a, d)| a + d).collect())
    }

    /// Max of componentwise angular distances.
    pub fn distance(&self, other: &TorusPoint) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| {
                let d = (a - b).rem_euclid(TAU);
                d.min(TAU - d)
            })
            .fold(0.0, f64::max)
    }
}

/// Unit phases of the monomials at a torus point.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVector {
    phases: Vec<Complex64>,
    angles: Vec<f64>,
}

impl PhaseVector {
    pub fn phases(&self) -> &[Complex64] {
        &self.phases
    }

    /// Raw phase angles `arg f_k + <a_k, theta>`, not reduced.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }
}

/// Outcome of the half-plane test at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ColopsidednessVerdict {
    /// All phases in the closed half-plane `Re(e^{i phi} w) >= 0`, at least
    /// one strictly positive; `phi` is a witness.
    Colopsided { witness: f64 },
    /// Phases are not confined to any half-plane.
    Open,
    /// All phases lie on one real line through the origin (the polynomial is
    /// real at this point); `direction` is the line angle in `[0, pi)`.
    RealDegenerate { direction: f64 },
}

impl ColopsidednessVerdict {
    pub fn is_colopsided(&self) -> bool {
        matches!(self, ColopsidednessVerdict::Colopsided { .. })
    }
}

/// Phase vector `exp(i (arg f_k + <a_k, theta>))` over an arbitrary support.
pub fn phase_vector(support: &[Vec<i64>], coeffs: &[Complex64], theta: &[f64]) -> PhaseVector {
    debug_assert_eq!(support.len(), coeffs.len());
    let angles: Vec<f64> = support
        .iter()
        .zip(coeffs.iter())
        .map(|(a, c)| {
            crate::numeric::principal_arg(*c)
                + a.iter().zip(theta.iter()).map(|(&e, &t)| e as f64 * t).sum::<f64>()
        })
        .collect();
    let phases = angles.iter().map(|&a| Complex64::from_polar(1.0, a)).collect();
    PhaseVector { phases, angles }
}

/// Half-plane verdict from the phase directions.
pub fn verdict_from_angles(angles: &[f64]) -> ColopsidednessVerdict {
    let mut dirs: Vec<f64> = angles.iter().map(|a| a.rem_euclid(TAU)).collect();
    dirs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = dirs.len();
    let mut max_gap = 0.0;
    let mut gap_end = dirs[0]; // start of the occupied arc
    for i in 0..n {
        let next = if i + 1 == n { dirs[0] + TAU } else { dirs[i + 1] };
        let gap = next - dirs[i];
        if gap > max_gap {
            max_gap = gap;
            gap_end = next.rem_euclid(TAU);
        }
    }
    if max_gap > PI + ANGLE_TOL {
        let occupied = TAU - max_gap;
        let witness = -(gap_end + occupied * 0.5);
        return ColopsidednessVerdict::Colopsided { witness: witness.rem_euclid(TAU) };
    }
    if max_gap >= PI - ANGLE_TOL {
        // the occupied arc has length ~pi; its endpoints span a line
        let line = gap_end.rem_euclid(PI);
        let interior = dirs.iter().any(|&d| {
            let r = (d - line).rem_euclid(PI);
            r > 1e-9 && (PI - r) > 1e-9
        });
        if interior {
            let occupied = TAU - max_gap;
            let witness = -(gap_end + occupied * 0.5);
            return ColopsidednessVerdict::Colopsided { witness: witness.rem_euclid(TAU) };
        }
        return ColopsidednessVerdict::RealDegenerate { direction: line };
    }
    ColopsidednessVerdict::Open
}

/// Colopsidedness of `(support, coeffs)` at `theta`.
pub fn colopsided_at(support: &[Vec<i64>], coeffs: &[Complex64], theta: &[f64]) -> ColopsidednessVerdict {
    verdict_from_angles(phase_vector(support, coeffs, theta).angles())
}

/// Largest gap between consecutive phase directions at `theta` (radians).
///
/// Strictly above `pi` means strict colopsidedness; for simplex supports
/// (trinomials in the plane) the closed coamoeba is exactly `gap <= pi`.
pub fn max_phase_gap(support: &[Vec<i64>], coeffs: &[Complex64], theta: &[f64]) -> f64 {
    let pv = phase_vector(support, coeffs, theta);
    let mut dirs: Vec<f64> = pv.angles().iter().map(|a| a.rem_euclid(TAU)).collect();
    dirs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = dirs.len();
    let mut max_gap: f64 = 0.0;
    for i in 0..n {
        let next = if i + 1 == n { dirs[0] + TAU } else { dirs[i + 1] };
        max_gap = max_gap.max(next - dirs[i]);
    }
    max_gap
}

/// Membership in the lopsided coamoeba: true iff not colopsided.
pub fn lopsided_membership(support: &[Vec<i64>], coeffs: &[Complex64], theta: &[f64]) -> bool {
    !colopsided_at(support, coeffs, theta).is_colopsided()
}

/// Whether some pair of phases is antipodal within `tol` (the branch-cut
/// arrangement of the order map).
pub fn has_antipodal_pair(angles: &[f64], tol: f64) -> bool {
    for i in 0..angles.len() {
        for j in i + 1..angles.len() {
            let d = (angles[i] - angles[j]).rem_euclid(TAU);
            if (d - PI).abs() < tol {
                return true;
            }
        }
    }
    false
}

/// Truncation dropping point `k`: the support and coefficients of `f_{k-hat}`.
pub fn truncation(support: &[Vec<i64>], coeffs: &[Complex64], k: usize) -> (Vec<Vec<i64>>, Vec<Complex64>) {
    let sub_support = support
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, p)| p.clone())
        .collect();
    let sub_coeffs = coeffs
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, c)| *c)
        .collect();
    (sub_support, sub_coeffs)
}
