//! Argument-space sampling of planar curves.
//!
//! The zero set of a bivariate polynomial is swept fiberwise: one variable
//! runs over an angle grid and, per angle, over an adaptively refined
//! log-radius line; the fiber polynomial in the other variable is solved and
//! the argument pairs of the torus roots are emitted. Adjacent radii whose
//! root-argument sets differ by more than the refinement tolerance are
//! bisected, so fast-moving branches (near branch points of the projection)
//! get dense coverage without paying for it everywhere. Both sweep
//! directions are used. Only solved points are ever emitted; refinement can
//! only add true curve points, never paint false ones.
//!
//! Fibers whose polynomial collapses entirely (all coefficients below
//! `1e-13 * scale`) are counted and skipped.

use super::poly::UnivariatePoly;
use super::resultant::BivariatePoly;
use crate::error::CoamoebaError;
use crate::Result;
use num_complex::Complex64;
use rayon::prelude::*;

/// Fiber sweep parameters.
///
/// `angular` angles per sweep direction; `radial` base log-radius samples on
/// `[-log_radius, log_radius]`, refined adaptively until consecutive
/// root-argument sets differ by less than `refine_tol` (radians) or
/// `max_depth` bisections.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveGrid {
    pub radial: usize,
    pub angular: usize,
    pub log_radius: f64,
    pub refine_tol: f64,
    pub max_depth: usize,
}

impl CurveGrid {
    pub fn new(radial: usize, angular: usize) -> Self {
        CurveGrid { radial, angular, log_radius: 8.0, refine_tol: 0.02, max_depth: 12 }
    }
}

/// Samples of the argument map over the curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSamples {
    /// `(arg z_1, arg z_2)` pairs, each in `[0, 2pi)`.
    pub points: Vec<[f64; 2]>,
    /// Fibers skipped because the fiber polynomial degenerated.
    pub degenerate_fibers: usize,
}

struct FiberResult {
    /// Root arguments in `[0, 2pi)`, sorted.
    args: Vec<f64>,
    degenerate: bool,
}

fn solve_fiber(poly: &BivariatePoly, base: Complex64, sweep_first: bool) -> FiberResult {
    let fiber = fiber_poly(poly, base, sweep_first);
    if fiber.is_zero() {
        return FiberResult { args: Vec::new(), degenerate: true };
    }
    if fiber.degree() == 0 {
        return FiberResult { args: Vec::new(), degenerate: false };
    }
    let mut args: Vec<f64> = fiber
        .roots()
        .map(|roots| {
            roots
                .iter()
                .filter(|w| w.norm() > 0.0 && w.norm().is_finite())
                .map(|w| w.arg().rem_euclid(crate::TAU))
                .collect()
        })
        .unwrap_or_default();
    args.sort_by(|a, b| a.partial_cmp(b).unwrap());
    FiberResult { args, degenerate: false }
}

/// One-sided circular Hausdorff check: does every argument of `a` have a
/// neighbor in `b` within `tol`, and vice versa (and equal counts)?
fn args_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let near = |x: f64, set: &[f64]| -> bool {
        set.iter().any(|&y| {
            let d = (x - y).rem_euclid(crate::TAU);
            d <= tol || crate::TAU - d <= tol
        })
    };
    a.iter().all(|&x| near(x, b)) && b.iter().all(|&x| near(x, a))
}

/// Sweeps both projections of `Z(f)` and returns the argument samples.
pub fn curve_sample(poly: &BivariatePoly, grid: &CurveGrid) -> Result<CurveSamples> {
    if poly.is_zero() {
        return Err(CoamoebaError::DegenerateInput("zero polynomial has no curve".into()));
    }
    let angles: Vec<(usize, bool)> = (0..2usize)
        .flat_map(|sweep| (0..grid.angular).map(move |ai| (ai, sweep == 0)))
        .collect();

    let results: Vec<(Vec<[f64; 2]>, usize)> = angles
        .par_iter()
        .map(|&(ai, sweep_first)| sweep_one_angle(poly, grid, ai, sweep_first))
        .collect();

    let mut points = Vec::with_capacity(results.iter().map(|(p, _)| p.len()).sum());
    let mut degenerate = 0;
    for (pts, deg) in results {
        points.extend(pts);
        degenerate += deg;
    }
    if points.is_empty() {
        return Err(CoamoebaError::EmptyCurve);
    }
    Ok(CurveSamples { points, degenerate_fibers: degenerate })
}

fn sweep_one_angle(
    poly: &BivariatePoly,
    grid: &CurveGrid,
    ai: usize,
    sweep_first: bool,
) -> (Vec<[f64; 2]>, usize) {
    // half-step offsets keep the grid clear of exact degeneracies
    let phi = crate::TAU * (ai as f64 + 0.517) / grid.angular as f64;
    let phi_reduced = phi.rem_euclid(crate::TAU);
    let mut points = Vec::new();
    let mut degenerate = 0;

    let solve_at = |x: f64, degenerate: &mut usize, points: &mut Vec<[f64; 2]>| -> Vec<f64> {
        let base = Complex64::from_polar(x.exp(), phi);
        let res = solve_fiber(poly, base, sweep_first);
        if res.degenerate {
            *degenerate += 1;
        }
        for &a in &res.args {
            points.push(if sweep_first { [phi_reduced, a] } else { [a, phi_reduced] });
        }
        res.args
    };

    let radial = grid.radial.max(2);
    let xs: Vec<f64> = (0..radial)
        .map(|ri| -grid.log_radius + 2.0 * grid.log_radius * (ri as f64 + 0.5) / radial as f64)
        .collect();
    let base_args: Vec<Vec<f64>> =
        xs.iter().map(|&x| solve_at(x, &mut degenerate, &mut points)).collect();

    // adaptive bisection between adjacent radii
    let mut stack: Vec<(f64, Vec<f64>, f64, Vec<f64>, usize)> = Vec::new();
    for i in 0..radial - 1 {
        stack.push((xs[i], base_args[i].clone(), xs[i + 1], base_args[i + 1].clone(), 0));
    }
    while let Some((x_lo, a_lo, x_hi, a_hi, depth)) = stack.pop() {
        if depth >= grid.max_depth || args_close(&a_lo, &a_hi, grid.refine_tol) {
            continue;
        }
        let mid = 0.5 * (x_lo + x_hi);
        let a_mid = solve_at(mid, &mut degenerate, &mut points);
        stack.push((x_lo, a_lo, mid, a_mid.clone(), depth + 1));
        stack.push((mid, a_mid, x_hi, a_hi, depth + 1));
    }
    (points, degenerate)
}

/// Fiber polynomial in the non-swept variable at `z_swept = base`.
pub fn fiber_poly(poly: &BivariatePoly, base: Complex64, sweep_first: bool) -> UnivariatePoly {
    let mut min_e = i64::MAX;
    let mut max_e = i64::MIN;
    for &((e1, e2), _) in poly.terms() {
        let e = if sweep_first { e2 } else { e1 };
        min_e = min_e.min(e);
        max_e = max_e.max(e);
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); (max_e - min_e + 1) as usize];
    for &((e1, e2), c) in poly.terms() {
        let (swept, other) = if sweep_first { (e1, e2) } else { (e2, e1) };
        coeffs[(other - min_e) as usize] += c * base.powi(swept as i32);
    }
    UnivariatePoly::new_with_tol(coeffs, min_e, 1e-13)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn trinomial() -> BivariatePoly {
        BivariatePoly::new(vec![
            ((0, 0), c(1.0, 0.0)),
            ((1, 0), c(1.0, 0.0)),
            ((0, 1), c(1.0, 0.0)),
        ])
    }

    #[test]
    fn line_fiber_points() {
        // f = 1 + z_1 + z_2, fiber z_1 = 1: z_2 = -2, argument pair (0, pi)
        let fiber = fiber_poly(&trinomial(), c(1.0, 0.0), true);
        let roots = fiber.roots().unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0] - c(-2.0, 0.0)).norm() < 1e-12);
        assert!((roots[0].arg().abs() - PI).abs() < 1e-12);
    }

    #[test]
    fn unimodular_fiber_on_unit_circle() {
        // fiber z_1 = e^{2 pi i/3}: z_2 = -1 - z_1 has modulus 1
        let z1 = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let fiber = fiber_poly(&trinomial(), z1, true);
        let roots = fiber.roots().unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0].norm() - 1.0).abs() < 1e-12);
        assert!((roots[0] + c(1.0, 0.0) + z1).norm() < 1e-12);
    }

    #[test]
    fn degree_drop_fiber_is_empty_not_degenerate() {
        // unit-square polynomial with r = 1: at z_1 = 1 the z_2 coefficient
        // vanishes and the fiber is the nonzero constant 2
        let f = BivariatePoly::new(vec![
            ((0, 0), c(1.0, 0.0)),
            ((1, 0), c(1.0, 0.0)),
            ((0, 1), c(1.0, 0.0)),
            ((1, 1), c(-1.0, 0.0)),
        ]);
        let fiber = fiber_poly(&f, c(1.0, 0.0), true);
        assert_eq!(fiber.degree(), 0);
        assert!(!fiber.is_zero());
        // at z_1 = -1 the root sits at the origin and is trimmed away
        let fiber = fiber_poly(&f, c(-1.0, 0.0), true);
        assert_eq!(fiber.lowest_exponent(), 1);
        assert_eq!(fiber.degree(), 0);
    }

    #[test]
    fn argument_set_distance() {
        assert!(args_close(&[0.1, 3.0], &[0.11, 3.01], 0.02));
        assert!(!args_close(&[0.1, 3.0], &[0.11, 3.1], 0.02));
        assert!(!args_close(&[0.1], &[0.1, 3.0], 0.02));
        // wraparound neighbors
        assert!(args_close(&[6.28], &[0.001], 0.01));
    }

    #[test]
    fn sampling_covers_the_trinomial_coamoeba() {
        let samples = curve_sample(&trinomial(), &CurveGrid::new(48, 96)).unwrap();
        assert!(samples.points.len() > 1000);
        // an interior point of the coamoeba should be approached closely
        let target = [PI + 0.3, PI - 0.4];
        let close = samples.points.iter().any(|p| {
            let d0 = (p[0] - target[0]).abs().min(crate::TAU - (p[0] - target[0]).abs());
            let d1 = (p[1] - target[1]).abs().min(crate::TAU - (p[1] - target[1]).abs());
            d0 < 0.1 && d1 < 0.1
        });
        assert!(close);
    }
}
