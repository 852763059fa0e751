//! Critical points of circuit polynomials in special orthogonal form and
//! their role as an index set of the coamoeba complement.
//!
//! In special orthogonal form every equation `z_i d_i f(z) = 0` has exactly
//! two terms (the axis point `-p_i e_i` and the positive point of its
//! block), so the critical system is binomial and has exactly `Vol(A)`
//! solutions. At each critical argument the phases are aligned within each
//! block; generically the polynomial is colopsided there and the order-map
//! values single out pairwise distinct complement components.

use crate::error::CoamoebaError;
use crate::geometry::transform::{is_special_orthogonal_form, SpecialFormInfo};
use crate::geometry::PointConfiguration;
use crate::numeric::{solve_binomial_system, BinomialSystem};
use crate::phase::{colopsided_at, complement_index_set, order_map, ColopsidednessVerdict};
use crate::Result;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One critical point with its argument-space data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub point: Vec<Complex64>,
    /// Componentwise arguments in `[0, 2pi)`.
    pub argument: Vec<f64>,
    pub verdict: ColopsidednessVerdict,
    /// Order-map value when the argument lies in the lopsided complement.
    pub order_value: Option<f64>,
    /// `max_i |z_i d_i f(z)|` relative to the term scale.
    pub gradient_residual: f64,
}

/// All critical points of `f` over the complex torus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalSet {
    pub points: Vec<CriticalPoint>,
    /// `Vol(A)` of the configuration, which the cardinality must equal.
    pub volume: i64,
}

fn block_positive_index(info: &SpecialFormInfo, block_one: bool) -> Option<usize> {
    // positive_points lists nontrivial blocks in order (block one first)
    let mut iter = info.positive_points.iter();
    if block_one {
        if info.m1 == 0 {
            return None;
        }
        iter.next().copied()
    } else {
        if info.m2 == 0 {
            return None;
        }
        if info.m1 > 0 {
            iter.next();
        }
        iter.next().copied()
    }
}

/// Assembles the binomial critical system of a special-orthogonal-form
/// configuration.
pub fn critical_system(
    config: &PointConfiguration,
    coeffs: &[Complex64],
) -> Result<BinomialSystem> {
    let info = is_special_orthogonal_form(config).ok_or_else(|| {
        CoamoebaError::NotSpecialOrthogonalForm(
            "axis-point block shape not detected; run orthogonal_form first".into(),
        )
    })?;
    let n = config.dim();
    let mut exponents = Vec::with_capacity(n);
    let mut targets = Vec::with_capacity(n);
    for i in 0..n {
        let block_one = i < info.m1;
        let axis = info.axis_points[i];
        let p_i = info.axis_scales[i];
        let plus = block_positive_index(&info, block_one)
            .ok_or_else(|| CoamoebaError::NotSpecialOrthogonalForm("missing block point".into()))?;
        let q = config.point(plus);
        let q_i = q[i];
        // z_i d_i f = -p_i f_axis z^{a_axis} + q_i f_plus z^q
        let row: Vec<i64> = (0..n).map(|j| q[j] - config.point(axis)[j]).collect();
        exponents.push(row);
        targets.push(p_i as f64 * coeffs[axis] / (q_i as f64 * coeffs[plus]));
    }
    Ok(BinomialSystem { exponents, targets })
}

/// Solves the critical system exactly and annotates every critical argument.
pub fn critical_set(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<CriticalSet> {
    let profile = config.profile();
    let system = critical_system(config, coeffs)?;
    let solutions = solve_binomial_system(&system)?;
    let support: Vec<Vec<i64>> = config.points().to_vec();

    let points = solutions
        .into_iter()
        .map(|z| {
            let argument: Vec<f64> = z.iter().map(|c| c.arg().rem_euclid(crate::TAU)).collect();
            let verdict = colopsided_at(&support, coeffs, &argument);
            let order_value = order_map(config, coeffs, &argument).ok();
            let gradient_residual = gradient_residual(config, coeffs, &z);
            CriticalPoint { point: z, argument, verdict, order_value, gradient_residual }
        })
        .collect();
    Ok(CriticalSet { points, volume: profile.total_volume })
}

/// Max over coordinates of `|z_i d_i f(z)|`, scaled by the largest term.
pub fn gradient_residual(
    config: &PointConfiguration,
    coeffs: &[Complex64],
    z: &[Complex64],
) -> f64 {
    let n = config.dim();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut value = Complex64::new(0.0, 0.0);
        let mut scale: f64 = 0.0;
        for (k, p) in config.points().iter().enumerate() {
            if p[i] == 0 {
                continue;
            }
            let term: Complex64 = coeffs[k]
                * p[i] as f64
                * z.iter().zip(p.iter()).map(|(&zj, &e)| zj.powi(e as i32)).product::<Complex64>();
            value += term;
            scale += term.norm();
        }
        if scale > 0.0 {
            worst = worst.max(value.norm() / scale);
        }
    }
    worst
}

/// Index-set verification report for the critical arguments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexSetReport {
    pub critical: CriticalSet,
    /// How many critical arguments are colopsided points of the complement.
    pub colopsided_count: usize,
    /// Order values at the colopsided critical arguments.
    pub order_values: Vec<f64>,
    /// Pairwise separation of order values exceeds `1e-6`.
    pub order_values_distinct: bool,
    /// Cardinality of the complement index set of the coefficient vector.
    pub index_set_cardinality: usize,
    /// `colopsided_count == index_set_cardinality`.
    pub counts_match: bool,
    /// Every non-colopsided critical argument exhibits the within-block
    /// phase alignment (it always must; recorded as a numeric check).
    pub aligned_where_not_colopsided: bool,
}

/// Checks that the critical arguments index the complement of the closed
/// lopsided coamoeba: distinct order values, count matching the index set,
/// and block alignment at the exceptional points.
pub fn verify_index_set(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<IndexSetReport> {
    let info = is_special_orthogonal_form(config).ok_or_else(|| {
        CoamoebaError::NotSpecialOrthogonalForm("verification needs special orthogonal form".into())
    })?;
    let critical = critical_set(config, coeffs)?;
    let index_set = complement_index_set(config, coeffs)?;

    let mut order_values = Vec::new();
    let mut colopsided_count = 0;
    let mut aligned = true;
    let support: Vec<Vec<i64>> = config.points().to_vec();
    for cp in &critical.points {
        if cp.verdict.is_colopsided() {
            colopsided_count += 1;
            if let Some(v) = cp.order_value {
                order_values.push(v);
            }
        } else {
            // within-block phase alignment at non-colopsided critical points
            let phases = crate::phase::phase_vector(&support, coeffs, &cp.argument);
            let angles = phases.angles();
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
            for i in 0..config.dim() {
                let b = usize::from(i >= info.m1);
                blocks[b].push(info.axis_points[i]);
            }
            for (b, block) in blocks.iter().enumerate() {
                let plus = block_positive_index(&info, b == 0);
                let mut members = block.clone();
                if let Some(p) = plus {
                    members.push(p);
                }
                for w in members.windows(2) {
                    let d = (angles[w[0]] - angles[w[1]]).rem_euclid(crate::TAU);
                    if d.min(crate::TAU - d) > 1e-8 {
                        aligned = false;
                    }
                }
            }
        }
    }
    let mut sorted = order_values.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let distinct = sorted.windows(2).all(|w| (w[1] - w[0]).abs() > 1e-6);

    Ok(IndexSetReport {
        colopsided_count,
        order_values_distinct: distinct,
        index_set_cardinality: index_set.len(),
        counts_match: colopsided_count == index_set.len(),
        aligned_where_not_colopsided: aligned,
        order_values,
        critical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TAU;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn special_quadratic() -> PointConfiguration {
        PointConfiguration::validate(vec![vec![-1], vec![1], vec![0]]).unwrap()
    }

    fn special_hypocycloid() -> PointConfiguration {
        PointConfiguration::validate(vec![vec![-1, 0], vec![0, -1], vec![1, 1], vec![0, 0]])
            .unwrap()
    }

    #[test]
    fn quadratic_critical_arguments() {
        // z^{-1} + 1 + z: z^2 = 1, arguments {0, pi}. The coefficient vector
        // (1,1,1) sits on the discriminant coamoeba, so the argument pi is
        // the aligned real point rather than a colopsided one.
        let cfg = special_quadratic();
        let set = critical_set(&cfg, &[c(1., 0.), c(1., 0.), c(1., 0.)]).unwrap();
        assert_eq!(set.volume, 2);
        assert_eq!(set.points.len(), 2);
        let mut points = set.points.clone();
        points.sort_by(|a, b| a.argument[0].partial_cmp(&b.argument[0]).unwrap());
        assert!(points[0].argument[0].abs() < 1e-12);
        assert!((points[1].argument[0] - PI).abs() < 1e-12);
        assert!(points[0].verdict.is_colopsided());
        assert!(matches!(points[1].verdict, ColopsidednessVerdict::RealDegenerate { .. }));
        for p in &set.points {
            assert!(p.gradient_residual < 1e-12);
        }
        // generic coefficient arguments make both critical arguments
        // colopsided with distinct order values
        let set = critical_set(
            &cfg,
            &[Complex64::from_polar(1.0, 0.35), c(1., 0.), Complex64::from_polar(1.0, -0.6)],
        )
        .unwrap();
        assert!(set.points.iter().all(|p| p.verdict.is_colopsided()));
    }

    #[test]
    fn hypocycloid_critical_arguments() {
        // 1/(zw) + z + w - r with unit outer coefficients: the critical
        // arguments are the diagonal cube roots of unity
        let cfg = special_hypocycloid();
        let set = critical_set(&cfg, &[c(1., 0.), c(1., 0.), c(1., 0.), c(-2.0, 0.)]).unwrap();
        assert_eq!(set.volume, 3);
        assert_eq!(set.points.len(), 3);
        for p in &set.points {
            assert!(p.gradient_residual < 1e-12);
            let d = (p.argument[0] - p.argument[1]).rem_euclid(TAU);
            assert!(d.min(TAU - d) < 1e-9, "arguments {:?}", p.argument);
            let k = (p.argument[0] / (TAU / 3.0)).round();
            let dev = (p.argument[0] - k * (TAU / 3.0)).abs();
            assert!(dev.min((TAU - dev).abs()) < 1e-9);
        }
    }

    #[test]
    fn interior_coefficient_leaves_critical_points_fixed() {
        // the origin point carries the constant term; rotating it does not
        // move the critical points (count unchanged, shift zero)
        let cfg = special_hypocycloid();
        let base = critical_set(&cfg, &[c(1., 0.), c(1., 0.), c(1., 0.), c(-2.0, 0.)]).unwrap();
        let rotated = critical_set(
            &cfg,
            &[c(1., 0.), c(1., 0.), c(1., 0.), c(-2.0, 0.) * Complex64::from_polar(1.0, 0.7)],
        )
        .unwrap();
        assert_eq!(base.points.len(), rotated.points.len());
        for (a, b) in base.points.iter().zip(rotated.points.iter()) {
            assert!((a.point[0] - b.point[0]).norm() < 1e-12);
            assert!((a.point[1] - b.point[1]).norm() < 1e-12);
        }
    }

    #[test]
    fn vertex_coefficient_shifts_arguments_by_the_congruence() {
        let cfg = special_quadratic();
        let alpha = 0.9;
        let base = critical_set(&cfg, &[c(1., 0.), c(1., 0.), c(1., 0.)]).unwrap();
        let shifted =
            critical_set(&cfg, &[Complex64::from_polar(1.0, alpha), c(1., 0.), c(1., 0.)])
                .unwrap();
        assert_eq!(base.points.len(), shifted.points.len());
        // z^2 = f_0/f_1: arguments shift by alpha/2
        let mut a0: Vec<f64> = base.points.iter().map(|p| p.argument[0]).collect();
        let mut a1: Vec<f64> = shifted.points.iter().map(|p| p.argument[0]).collect();
        a0.sort_by(|x, y| x.partial_cmp(y).unwrap());
        a1.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (x, y) in a0.iter().zip(a1.iter()) {
            let d = (y - x - alpha / 2.0).rem_euclid(TAU);
            assert!(d < 1e-9 || TAU - d < 1e-9);
        }
    }

    #[test]
    fn refuses_non_special_form() {
        let cfg = PointConfiguration::validate(vec![vec![0], vec![1], vec![2]]).unwrap();
        let err = critical_set(&cfg, &[c(1., 0.), c(1., 0.), c(1., 0.)]).unwrap_err();
        assert!(matches!(err, CoamoebaError::NotSpecialOrthogonalForm(_)));
    }

    #[test]
    fn affine_form_changes_critical_count() {
        // 1 + z + z^2 has a single critical point (z = -1/2); its special
        // orthogonal form z^{-1} + 1 + z has two: the transform acts
        // nontrivially on critical sets
        let affine = crate::numeric::UnivariatePoly::from_real(&[1.0, 2.0]); // derivative of 1+z+z^2
        let affine_count = affine.roots().unwrap().len();
        let special = critical_set(&special_quadratic(), &[c(1., 0.), c(1., 0.), c(1., 0.)])
            .unwrap()
            .points
            .len();
        assert_eq!(affine_count, 1);
        assert_eq!(special, 2);
        assert_ne!(affine_count, special);
    }

    #[test]
    fn index_report_on_generic_quadratic() {
        let cfg = special_quadratic();
        let coeffs = [c(1.0, 0.4), c(0.8, -0.2), c(1.1, 0.9)];
        let report = verify_index_set(&cfg, &coeffs).unwrap();
        assert_eq!(report.critical.points.len(), 2);
        assert!(report.counts_match, "report: {report:?}");
        assert!(report.order_values_distinct);
        assert!(report.aligned_where_not_colopsided);
    }

    #[test]
    fn index_report_in_u1_regime() {
        // special-form hypocycloid with r = 5: one critical argument falls
        // inside the closed coamoeba, two colopsided with distinct orders
        let cfg = special_hypocycloid();
        let coeffs = [c(1., 0.), c(1., 0.), c(1., 0.), c(-5.0, 0.)];
        let report = verify_index_set(&cfg, &coeffs).unwrap();
        assert_eq!(report.critical.points.len(), 3);
        assert_eq!(report.colopsided_count, 2, "report {report:?}");
        assert_eq!(report.index_set_cardinality, 2);
        assert!(report.counts_match);
        assert!(report.order_values_distinct);
        assert!(report.aligned_where_not_colopsided);
    }
}
