//! The order map of the lopsided coamoeba and the complement index set.
//!
//! For a circuit the Gale dual is a single integer vector `b`, the zonotope
//! is the symmetric interval of length `2 pi Vol(A)`, and the order map
//! `theta -> Arg_pi(f-hat(theta)) . b` is constant on connected components of
//! the complement of the closed lopsided coamoeba. Its image is the set of
//! `2 pi`-translates of `Arg_pi(f) . b` interior to the zonotope, of
//! cardinality `Vol(A)` or `Vol(A) - 1`.
//!
//! All computations here first translate the basepoint (the origin point of
//! the support when present, otherwise point 0) to the origin and rotate its
//! coefficient phase away; branch cuts then behave like the constant-monomial
//! case.

use super::{colopsided_at, has_antipodal_pair, phase_vector};
use crate::error::CoamoebaError;
use crate::geometry::congruence::wrap_to_pi;
use crate::geometry::PointConfiguration;
use crate::{Result, TAU};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// The order-map zonotope of a circuit: a symmetric interval of half-length
/// `pi Vol(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Zonotope1D {
    volume: i64,
}

impl Zonotope1D {
    pub fn new(volume: i64) -> Self {
        Zonotope1D { volume }
    }

    pub fn half_length(&self) -> f64 {
        PI * self.volume as f64
    }

    pub fn length(&self) -> f64 {
        TAU * self.volume as f64
    }

    /// Strict interior membership, with a small guard band for boundary hits.
    pub fn contains_interior(&self, x: f64, tol: f64) -> bool {
        x.abs() < self.half_length() - tol
    }
}

fn basepoint(config: &PointConfiguration) -> usize {
    config.origin_index().unwrap_or(0)
}

/// Basepoint-normalized phase angles at `theta` (basepoint translated to the
/// origin, its coefficient phase divided out).
fn normalized_angles(config: &PointConfiguration, coeffs: &[Complex64], theta: &[f64]) -> Vec<f64> {
    let b = basepoint(config);
    let base_point = config.point(b).to_vec();
    let base_arg = crate::numeric::principal_arg(coeffs[b]);
    let support: Vec<Vec<i64>> = config
        .points()
        .iter()
        .map(|p| p.iter().zip(base_point.iter()).map(|(x, y)| x - y).collect())
        .collect();
    let rotation = Complex64::from_polar(1.0, -base_arg);
    let rotated: Vec<Complex64> = coeffs.iter().map(|c| c * rotation).collect();
    phase_vector(&support, &rotated, theta).angles().to_vec()
}

/// The raw order value `Arg_pi(f-hat(theta)) . b_raw` without any membership
/// checks. Well defined away from the antipodal arrangement; jumps by
/// `2 pi b_k` across it.
pub fn raw_order_value(config: &PointConfiguration, coeffs: &[Complex64], theta: &[f64]) -> f64 {
    let angles = normalized_angles(config, coeffs, theta);
    let gale = config.profile().raw_gale;
    angles
        .iter()
        .zip(gale.iter())
        .map(|(&a, &b)| wrap_to_pi(a) * b as f64)
        .sum()
}

/// Order map of the lopsided coamoeba at a point of its complement.
///
/// Fails with `NotInComplement` when `f` is not colopsided at `theta` or when
/// `theta` lies on the antipodal (branch-cut) arrangement, where the value
/// would be branch-dependent.
pub fn order_map(config: &PointConfiguration, coeffs: &[Complex64], theta: &[f64]) -> Result<f64> {
    let support: Vec<Vec<i64>> = config.points().to_vec();
    let verdict = colopsided_at(&support, coeffs, theta);
    if !verdict.is_colopsided() {
        return Err(CoamoebaError::NotInComplement(format!(
            "verdict {verdict:?} at {theta:?}"
        )));
    }
    let angles = phase_vector(&support, coeffs, theta).angles().to_vec();
    if has_antipodal_pair(&angles, 1e-9) {
        return Err(CoamoebaError::NotInComplement(
            "two phases are antipodal (branch-cut arrangement)".into(),
        ));
    }
    Ok(raw_order_value(config, coeffs, theta))
}

/// The set `{Arg_pi(f) . b + 2 pi Z}` intersected with the open zonotope:
/// one value per connected component of the complement of the closed
/// lopsided coamoeba. Cardinality is `Vol(A)` or `Vol(A) - 1`.
pub fn complement_index_set(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<Vec<f64>> {
    let profile = config.profile();
    if profile.is_degenerate() {
        return Err(CoamoebaError::DegenerateCircuit("index set needs a nondegenerate circuit".into()));
    }
    let b = basepoint(config);
    let base_arg = crate::numeric::principal_arg(coeffs[b]);
    let rotation = Complex64::from_polar(1.0, -base_arg);
    let translate: f64 = coeffs
        .iter()
        .zip(profile.raw_gale.iter())
        .map(|(c, &bk)| wrap_to_pi(crate::numeric::principal_arg(c * rotation)) * bk as f64)
        .sum();
    let zonotope = Zonotope1D::new(profile.total_volume);
    let tol = 1e-9;
    let mut values = Vec::new();
    let mut j = ((-zonotope.half_length() - translate) / TAU).floor() as i64 - 1;
    loop {
        let x = translate + TAU * j as f64;
        if x > zonotope.half_length() + TAU {
            break;
        }
        if zonotope.contains_interior(x, tol) {
            values.push(x);
        }
        j += 1;
    }
    debug_assert!(
        values.len() as i64 == profile.total_volume
            || values.len() as i64 == profile.total_volume - 1
    );
    Ok(values)
}
