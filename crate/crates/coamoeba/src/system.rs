//! Bivariate two-polynomial systems supported on a circuit: reduction to a
//! trinomial pair, root solving by hidden-variable resultant, and the
//! per-sector census behind the sharpened fewnomial count.
//!
//! The canonical shape shares the monomials `a_2` (coefficient one) and
//! `a_3` between the two trinomials:
//!
//! ```text
//! F_1 = f1 z^{a_0} + z^{a_2} + f2 z^{a_3}
//! F_2 = f3 z^{a_1} + z^{a_2} + f4 z^{a_3}
//! ```
//!
//! Arguments of the roots vary continuously in the coefficients when the
//! line through `a_2`, `a_3` meets the interior of the Newton polytope; the
//! reduction prefers monomial pairings satisfying this and reports when none
//! does.

use crate::error::CoamoebaError;
use crate::numeric::{complex_det, sylvester_resultant, BivariatePoly, Var};
use crate::phase::{colopsided_at, phase_vector, ColopsidednessVerdict};
use crate::{Result, TAU};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Two trinomials sharing the monomials `a_2` and `a_3` of a common
/// four-point support.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircuitSystem {
    /// `[a_0, a_1, a_2, a_3]`.
    pub support: Vec<Vec<i64>>,
    pub f1: Complex64,
    pub f2: Complex64,
    pub f3: Complex64,
    pub f4: Complex64,
    /// Whether the line through `a_2`, `a_3` meets the interior of the
    /// Newton polytope (the continuity hypothesis); checked and recorded.
    pub interior_line: bool,
}

impl CircuitSystem {
    pub fn new(
        support: Vec<Vec<i64>>,
        f1: Complex64,
        f2: Complex64,
        f3: Complex64,
        f4: Complex64,
    ) -> Result<Self> {
        if support.len() != 4 || support.iter().any(|p| p.len() != 2) {
            return Err(CoamoebaError::InvalidInput("support must be four planar points".into()));
        }
        for c in [f1, f2, f3, f4] {
            if !c.is_finite() || c.norm() == 0.0 {
                return Err(CoamoebaError::InvalidInput("coefficients must be nonzero".into()));
            }
        }
        let interior_line = interior_line_hypothesis(&support);
        Ok(CircuitSystem { support, f1, f2, f3, f4, interior_line })
    }

    /// Support and coefficients of `F_1` (on `a_0, a_2, a_3`) or `F_2`.
    pub fn member(&self, second: bool) -> (Vec<Vec<i64>>, Vec<Complex64>) {
        let one = Complex64::new(1.0, 0.0);
        if second {
            (
                vec![self.support[1].clone(), self.support[2].clone(), self.support[3].clone()],
                vec![self.f3, one, self.f4],
            )
        } else {
            (
                vec![self.support[0].clone(), self.support[2].clone(), self.support[3].clone()],
                vec![self.f1, one, self.f2],
            )
        }
    }

    pub fn member_poly(&self, second: bool) -> BivariatePoly {
        let (support, coeffs) = self.member(second);
        crate::raster::to_bivariate(&support, &coeffs)
    }

    /// Normalized volume of the common support.
    pub fn volume(&self) -> i64 {
        match crate::geometry::PointConfiguration::validate(self.support.clone()) {
            Ok(config) => config.profile().total_volume,
            Err(_) => 0,
        }
    }

    /// Both trinomials real: all phases of each on one line through zero.
    pub fn is_real_at(&self, theta: &[f64; 2]) -> bool {
        (0..2).all(|m| {
            let (support, coeffs) = self.member(m == 1);
            matches!(
                colopsided_at(&support, &coeffs, theta),
                ColopsidednessVerdict::RealDegenerate { .. }
            ) || {
                // a trinomial whose phases are all equal is real too
                let pv = phase_vector(&support, &coeffs, theta);
                let a0 = pv.angles()[0];
                pv.angles().iter().all(|a| {
                    let d = (a - a0).rem_euclid(TAU);
                    d < 1e-9 || (TAU - d) < 1e-9 || (d - std::f64::consts::PI).abs() < 1e-9
                })
            }
        })
    }
}

/// Does the line through `a_2` and `a_3` meet the interior of the Newton
/// polytope? Exact: `a_0` and `a_1` must lie strictly on opposite sides.
pub fn interior_line_hypothesis(support: &[Vec<i64>]) -> bool {
    let d = [support[3][0] - support[2][0], support[3][1] - support[2][1]];
    let side = |p: &[i64]| -> i64 {
        let v = [p[0] - support[2][0], p[1] - support[2][1]];
        d[0] * v[1] - d[1] * v[0]
    };
    side(&support[0]) * side(&support[1]) < 0
}

/// Reduces two general polynomials on a shared four-point support to the
/// canonical trinomial pair by Gaussian elimination on the coefficients.
///
/// The monomial pairing is chosen so the shared pair satisfies the
/// interior-line hypothesis whenever possible; `NoAdmissibleChoice` when no
/// pairing does, `SingularElimination` when the elimination submatrix or
/// the shared-coefficient normalization degenerates.
pub fn reduce_to_trinomials(
    support: &[Vec<i64>],
    g1: &[Complex64],
    g2: &[Complex64],
) -> Result<CircuitSystem> {
    if support.len() != 4 || g1.len() != 4 || g2.len() != 4 {
        return Err(CoamoebaError::InvalidInput("expected four monomials per polynomial".into()));
    }
    // candidate (private u for F_1, private v for F_2, shared s < t)
    let mut admissible = Vec::new();
    let mut fallback = Vec::new();
    for u in 0..4 {
        for v in 0..4 {
            if u == v {
                continue;
            }
            let shared: Vec<usize> = (0..4).filter(|&k| k != u && k != v).collect();
            let reordered =
                vec![support[u].clone(), support[v].clone(), support[shared[0]].clone(), support[shared[1]].clone()];
            if interior_line_hypothesis(&reordered) {
                admissible.push((u, v, shared));
            } else {
                fallback.push((u, v, shared));
            }
        }
    }
    if admissible.is_empty() {
        return Err(CoamoebaError::NoAdmissibleChoice);
    }
    let mut singular_reason = String::new();
    for (u, v, shared) in admissible.into_iter().chain(fallback) {
        // eliminate monomial v from G_1 and u from G_2
        let det = g1[u] * g2[v] - g1[v] * g2[u];
        if det.norm() < 1e-12 * (g1[u].norm() + g1[v].norm()) * (g2[u].norm() + g2[v].norm()).max(1e-300) {
            singular_reason = "elimination submatrix is singular".into();
            continue;
        }
        let h1: Vec<Complex64> = (0..4).map(|k| g2[v] * g1[k] - g1[v] * g2[k]).collect();
        let h2: Vec<Complex64> = (0..4).map(|k| g1[u] * g2[k] - g2[u] * g1[k]).collect();
        // normalize the a_2 coefficient to one
        let (s, t) = (shared[0], shared[1]);
        if h1[s].norm() == 0.0 || h2[s].norm() == 0.0 {
            singular_reason = "shared coefficient vanished after elimination".into();
            continue;
        }
        let f1 = h1[u] / h1[s];
        let f2 = h1[t] / h1[s];
        let f3 = h2[v] / h2[s];
        let f4 = h2[t] / h2[s];
        if [f1, f2, f3, f4].iter().any(|c| c.norm() == 0.0 || !c.is_finite()) {
            singular_reason = "a trinomial coefficient vanished".into();
            continue;
        }
        let reordered =
            vec![support[u].clone(), support[v].clone(), support[s].clone(), support[t].clone()];
        return CircuitSystem::new(reordered, f1, f2, f3, f4);
    }
    Err(CoamoebaError::SingularElimination(singular_reason))
}

/// Roots of the system in the complex torus via hidden-variable resultant,
/// with Newton polishing and residual filtering.
pub fn solve_system(system: &CircuitSystem) -> Result<Vec<[Complex64; 2]>> {
    let p1 = system.member_poly(false);
    let p2 = system.member_poly(true);
    let resultant = match sylvester_resultant(&p1, &p2, Var::Z2) {
        Ok(r) => r,
        Err(CoamoebaError::IdenticallyZeroResultant) => {
            return Err(CoamoebaError::NonGenericSystem("identically zero resultant".into()))
        }
        Err(e) => return Err(e),
    };
    if resultant.degree() == 0 {
        return Ok(Vec::new());
    }
    let z1_roots = resultant.roots()?;
    let mut roots: Vec<[Complex64; 2]> = Vec::new();
    for r1 in z1_roots {
        let fiber = crate::numeric::fiber_poly(&p1, r1, true);
        if fiber.is_zero() || fiber.degree() == 0 {
            continue;
        }
        let Ok(candidates) = fiber.roots() else { continue };
        for r2 in candidates {
            let mut z = [r1, r2];
            newton_polish(&p1, &p2, &mut z, 8);
            let res1 = relative_residual(&p1, z);
            let res2 = relative_residual(&p2, z);
            if res1 < 1e-8 && res2 < 1e-8 {
                let duplicate = roots.iter().any(|w| {
                    (w[0] - z[0]).norm() <= 1e-8 * w[0].norm().max(1.0)
                        && (w[1] - z[1]).norm() <= 1e-8 * w[1].norm().max(1.0)
                });
                if !duplicate {
                    roots.push(z);
                }
            }
        }
    }
    Ok(roots)
}

fn relative_residual(p: &BivariatePoly, z: [Complex64; 2]) -> f64 {
    let value = p.eval(z[0], z[1]).norm();
    let scale: f64 = p
        .terms()
        .iter()
        .map(|&((e1, e2), c)| (c * z[0].powi(e1 as i32) * z[1].powi(e2 as i32)).norm())
        .sum();
    if scale > 0.0 {
        value / scale
    } else {
        f64::INFINITY
    }
}

fn newton_polish(p1: &BivariatePoly, p2: &BivariatePoly, z: &mut [Complex64; 2], iters: usize) {
    let partial = |p: &BivariatePoly, z: [Complex64; 2], var: usize| -> Complex64 {
        p.terms()
            .iter()
            .map(|&((e1, e2), c)| {
                let e = if var == 0 { e1 } else { e2 };
                if e == 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    let mut t = c * e as f64;
                    t *= z[0].powi(if var == 0 { (e1 - 1) as i32 } else { e1 as i32 });
                    t *= z[1].powi(if var == 1 { (e2 - 1) as i32 } else { e2 as i32 });
                    t
                }
            })
            .sum()
    };
    for _ in 0..iters {
        let f = [p1.eval(z[0], z[1]), p2.eval(z[0], z[1])];
        let j = [
            [partial(p1, *z, 0), partial(p1, *z, 1)],
            [partial(p2, *z, 0), partial(p2, *z, 1)],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.norm() < 1e-300 {
            return;
        }
        let dz0 = (f[0] * j[1][1] - f[1] * j[0][1]) / det;
        let dz1 = (f[1] * j[0][0] - f[0] * j[1][0]) / det;
        z[0] -= dz0;
        z[1] -= dz1;
        if dz0.norm() + dz1.norm() < 1e-15 * (z[0].norm() + z[1].norm()) {
            break;
        }
    }
}

/// A cluster of roots sharing an argument pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorCluster {
    /// Indices into the root list.
    pub members: Vec<usize>,
    /// Representative argument pair.
    pub theta: [f64; 2],
    /// Whether the system is nonreal at this argument (then the cluster must
    /// be a singleton).
    pub nonreal: bool,
}

/// Census of roots by argument sector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorReport {
    pub clusters: Vec<SectorCluster>,
    pub max_cluster: usize,
    pub max_nonreal_cluster: usize,
    pub total_roots: usize,
    pub volume: i64,
}

/// Clusters the argument pairs of the roots at tolerance `tol` (radians,
/// single linkage on the torus metric) and flags realness per cluster.
pub fn sector_census(system: &CircuitSystem, roots: &[[Complex64; 2]], tol: f64) -> SectorReport {
    let args: Vec<[f64; 2]> = roots
        .iter()
        .map(|z| [z[0].arg().rem_euclid(TAU), z[1].arg().rem_euclid(TAU)])
        .collect();
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let torus_dist = |a: &[f64; 2], b: &[f64; 2]| -> f64 {
        (0..2)
            .map(|i| {
                let d = (a[i] - b[i]).rem_euclid(TAU);
                d.min(TAU - d)
            })
            .fold(0.0f64, f64::max)
    };
    for i in 0..n {
        for j in i + 1..n {
            if torus_dist(&args[i], &args[j]) <= tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let clusters: Vec<SectorCluster> = groups
        .into_values()
        .map(|members| {
            let theta = args[members[0]];
            let nonreal = !system.is_real_at(&theta);
            SectorCluster { members, theta, nonreal }
        })
        .collect();
    let max_cluster = clusters.iter().map(|c| c.members.len()).max().unwrap_or(0);
    let max_nonreal_cluster =
        clusters.iter().filter(|c| c.nonreal).map(|c| c.members.len()).max().unwrap_or(0);
    SectorReport {
        max_cluster,
        max_nonreal_cluster,
        total_roots: n,
        volume: system.volume(),
        clusters,
    }
}

/// Membership in the lopsided coamoeba of the system: both trinomials fail
/// to be colopsided at `theta`.
pub fn system_lopsided_membership(system: &CircuitSystem, theta: &[f64; 2]) -> bool {
    (0..2).all(|m| {
        let (support, coeffs) = system.member(m == 1);
        !colopsided_at(&support, &coeffs, theta).is_colopsided()
    })
}

/// The auxiliary binomial arrangement of the proof: `H` from the difference
/// binomials `f1 z^{a_0} - z^{a_2}`, `f3 z^{a_1} - z^{a_2}` and `P` from the
/// sum binomials. Returns sample points of `H` away from its intersections
/// and the intersection points `P`.
pub fn auxiliary_arrangement(system: &CircuitSystem) -> (Vec<[f64; 2]>, Vec<[f64; 2]>) {
    // C_{g}: <a_0 - a_2, theta> = pi - arg f1 (mod 2 pi) for g = f1 z^{a0} - z^{a2}
    // (g vanishes when the two phases are antipodal... sign convention below)
    let line_data = |private: usize, coeff: Complex64, sign_flip: bool| -> ([i64; 2], f64) {
        let e = [
            system.support[private][0] - system.support[2][0],
            system.support[private][1] - system.support[2][1],
        ];
        // f z^{a} - z^{a2} = 0 on arguments: arg f + <a - a2, theta> = 0;
        // with the + sign the phases must be antipodal instead
        let target = if sign_flip {
            (std::f64::consts::PI - coeff.arg()).rem_euclid(TAU)
        } else {
            (-coeff.arg()).rem_euclid(TAU)
        };
        ([e[0], e[1]], target)
    };
    let (e1, c1) = line_data(0, system.f1, false);
    let (e2, c2) = line_data(1, system.f3, false);
    let (h1, d1) = line_data(0, system.f1, true);
    let (h2, d2) = line_data(1, system.f3, true);

    // points on C_{g1} (resp C_{g2}) away from the other line
    let mut h_points = Vec::new();
    for t in 0..40 {
        let s = TAU * (t as f64 + 0.31) / 40.0;
        if let Some(p) = point_on_line(e1, c1, s) {
            h_points.push(p);
        }
        if let Some(p) = point_on_line(e2, c2, s) {
            h_points.push(p);
        }
    }
    // intersection points P of the sum-binomial coamoebas
    let p_points = line_intersections(h1, d1, h2, d2);
    (h_points, p_points)
}

fn point_on_line(e: [i64; 2], c: f64, s: f64) -> Option<[f64; 2]> {
    // parametrize <e, theta> = c by theta = base + s * (-e2, e1)
    let norm_sq = (e[0] * e[0] + e[1] * e[1]) as f64;
    if norm_sq == 0.0 {
        return None;
    }
    let base = [c * e[0] as f64 / norm_sq, c * e[1] as f64 / norm_sq];
    Some([
        (base[0] - s * e[1] as f64).rem_euclid(TAU),
        (base[1] + s * e[0] as f64).rem_euclid(TAU),
    ])
}

fn line_intersections(e1: [i64; 2], c1: f64, e2: [i64; 2], c2: f64) -> Vec<[f64; 2]> {
    // solve <e1, theta> = c1, <e2, theta> = c2 on the torus
    let system = crate::geometry::CongruenceSystem {
        rows: vec![vec![e1[0], e1[1]], vec![e2[0], e2[1]]],
        rhs: vec![c1, c2],
    };
    match crate::geometry::solve_congruences(&system, 1e-9) {
        crate::geometry::CongruenceSolutions::Finite(sols) => {
            sols.into_iter().map(|s| [s[0], s[1]]).collect()
        }
        _ => Vec::new(),
    }
}

/// Deterministic check helper: verifies the determinant routine stays
/// available to the resultant path (compile-time usage guard).
#[allow(dead_code)]
fn _det_guard(m: &mut [Vec<Complex64>]) -> Complex64 {
    complex_det(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// The worked example support: F_1 on (1,2),(0,0),(1,1); F_2 on
    /// (2,1),(0,0),(1,1); Vol(A) = 3.
    fn example_system(f1: Complex64, f2: Complex64, f3: Complex64, f4: Complex64) -> CircuitSystem {
        CircuitSystem::new(
            vec![vec![1, 2], vec![2, 1], vec![0, 0], vec![1, 1]],
            f1,
            f2,
            f3,
            f4,
        )
        .unwrap()
    }

    #[test]
    fn interior_line_checks() {
        // line through (0,0) and (1,1) separates (1,2) from (2,1)
        assert!(interior_line_hypothesis(&[
            vec![1, 2],
            vec![2, 1],
            vec![0, 0],
            vec![1, 1]
        ]));
        // line through (1,2) and (2,1) leaves (0,0) and (1,1) on one side
        assert!(!interior_line_hypothesis(&[
            vec![0, 0],
            vec![1, 1],
            vec![1, 2],
            vec![2, 1]
        ]));
    }

    #[test]
    fn example_system_has_three_roots() {
        let system = example_system(c(0.7, 0.4), c(-0.3, 0.9), c(-1.1, 0.2), c(0.5, 0.6));
        assert!(system.interior_line);
        assert_eq!(system.volume(), 3);
        let roots = solve_system(&system).unwrap();
        assert_eq!(roots.len(), 3);
        let p1 = system.member_poly(false);
        let p2 = system.member_poly(true);
        for z in &roots {
            assert!(relative_residual(&p1, *z) < 1e-9);
            assert!(relative_residual(&p2, *z) < 1e-9);
        }
    }

    #[test]
    fn generic_clusters_are_singletons() {
        let system = example_system(c(0.7, 0.4), c(-0.3, 0.9), c(-1.1, 0.2), c(0.5, 0.6));
        let roots = solve_system(&system).unwrap();
        let report = sector_census(&system, &roots, 1e-6);
        assert_eq!(report.max_cluster, 1);
        assert_eq!(report.total_roots, 3);
    }

    #[test]
    fn conjugation_closure_for_real_systems() {
        let system = example_system(c(0.9, 0.0), c(-1.4, 0.0), c(0.6, 0.0), c(2.0, 0.0));
        let roots = solve_system(&system).unwrap();
        for z in &roots {
            let conj = [z[0].conj(), z[1].conj()];
            assert!(
                roots.iter().any(|w| (w[0] - conj[0]).norm() < 1e-8 * (1.0 + w[0].norm())
                    && (w[1] - conj[1]).norm() < 1e-8 * (1.0 + w[1].norm())),
                "conjugate of {z:?} missing"
            );
        }
    }

    #[test]
    fn already_reduced_input_is_unchanged() {
        let support = vec![vec![1, 2], vec![2, 1], vec![0, 0], vec![1, 1]];
        let g1 = [c(0.7, 0.4), c(0.0, 0.0), c(1.0, 0.0), c(-0.3, 0.9)];
        let g2 = [c(0.0, 0.0), c(-1.1, 0.2), c(1.0, 0.0), c(0.5, 0.6)];
        let system = reduce_to_trinomials(&support, &g1, &g2).unwrap();
        assert_eq!(system.support, support);
        assert!((system.f1 - g1[0]).norm() < 1e-12);
        assert!((system.f2 - g1[3]).norm() < 1e-12);
        assert!((system.f3 - g2[1]).norm() < 1e-12);
        assert!((system.f4 - g2[3]).norm() < 1e-12);
    }

    #[test]
    fn dense_pair_reduces() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let support = vec![vec![1, 2], vec![2, 1], vec![0, 0], vec![1, 1]];
        let mut draw = || {
            (0..4)
                .map(|_| Complex64::from_polar(rng.gen_range(0.3..3.0), rng.gen_range(0.0..TAU)))
                .collect::<Vec<_>>()
        };
        let g1 = draw();
        let g2 = draw();
        let system = reduce_to_trinomials(&support, &g1, &g2).unwrap();
        // the reduced pair must vanish exactly on the original variety:
        // sample a root of the reduced system and evaluate the originals
        let roots = solve_system(&system).unwrap();
        assert!(!roots.is_empty());
        let orig1 = crate::raster::to_bivariate(&support, &g1);
        let orig2 = crate::raster::to_bivariate(&support, &g2);
        for z in &roots {
            assert!(relative_residual(&orig1, *z) < 1e-7);
            assert!(relative_residual(&orig2, *z) < 1e-7);
        }
    }

    #[test]
    fn proportional_shared_coefficients_are_singular() {
        let support = vec![vec![1, 2], vec![2, 1], vec![0, 0], vec![1, 1]];
        // identical polynomials: every elimination degenerates
        let g = [c(0.7, 0.4), c(1.0, 0.0), c(1.0, 0.0), c(-0.3, 0.9)];
        let err = reduce_to_trinomials(&support, &g, &g).unwrap_err();
        assert!(matches!(err, CoamoebaError::SingularElimination(_)));
    }

    #[test]
    fn degenerate_pair_reports_nongeneric() {
        // F_1 = F_2 after normalization: infinitely many roots
        let system = example_system(c(0.7, 0.4), c(-0.3, 0.9), c(0.7, 0.4), c(-0.3, 0.9));
        // members differ in their private monomial, so the resultant is fine;
        // build instead a pair with identical supports via f1 = f3 on the
        // SAME private point: craft directly as bivariate polynomials
        let p = system.member_poly(false);
        let r = sylvester_resultant(&p, &p.clone(), Var::Z2);
        assert!(matches!(r, Err(CoamoebaError::IdenticallyZeroResultant)));
    }

    #[test]
    fn size_two_cluster_near_real_discriminant() {
        // real systems with equal-sign shared coefficients can push two
        // roots into one sector; scan a real grid and check a double occurs
        // while triples never do
        let mut seen_double = false;
        for i in 0..24 {
            for j in 0..24 {
                let f1 = -2.0 + 0.17 * i as f64;
                let f3 = -2.0 + 0.17 * j as f64;
                if f1.abs() < 0.05 || f3.abs() < 0.05 {
                    continue;
                }
                let system = example_system(c(f1, 0.0), c(0.5, 0.0), c(f3, 0.0), c(2.0, 0.0));
                let roots = solve_system(&system).unwrap();
                let report = sector_census(&system, &roots, 1e-6);
                assert!(report.max_cluster <= 2, "triple cluster at f1={f1} f3={f3}");
                assert!(report.max_nonreal_cluster <= 1);
                if report.max_cluster == 2 {
                    seen_double = true;
                }
            }
        }
        assert!(seen_double, "no double sector found along the real sweep");
    }

    #[test]
    fn lopsided_membership_of_system() {
        let system = example_system(c(0.7, 0.4), c(-0.3, 0.9), c(-1.1, 0.2), c(0.5, 0.6));
        let roots = solve_system(&system).unwrap();
        // root arguments always lie in the lopsided coamoeba of the system
        for z in &roots {
            let theta = [z[0].arg().rem_euclid(TAU), z[1].arg().rem_euclid(TAU)];
            assert!(system_lopsided_membership(&system, &theta));
        }
        // a colopsided point of F_1 is outside
        let (support, coeffs) = system.member(false);
        let mut outside = None;
        for i in 0..400 {
            let theta = [TAU * (i % 20) as f64 / 20.0, TAU * (i / 20) as f64 / 20.0];
            if colopsided_at(&support, &coeffs, &theta).is_colopsided() {
                outside = Some(theta);
                break;
            }
        }
        let theta = outside.expect("some colopsided point exists");
        assert!(!system_lopsided_membership(&system, &theta));
    }

    #[test]
    fn auxiliary_arrangement_structure() {
        // nonreal system, f2 and f4 of opposite signs: H avoids L_f, P meets
        // the closure (tested through small perturbations)
        let system = example_system(c(0.7, 0.4), c(-1.0, 0.0), c(-1.1, 0.2), c(1.0, 0.0));
        let (h_points, p_points) = auxiliary_arrangement(&system);
        assert!(!h_points.is_empty());
        assert_eq!(p_points.len(), system.volume() as usize);
        for theta in &h_points {
            assert!(
                !system_lopsided_membership(&system, theta),
                "H point {theta:?} landed in the lopsided coamoeba"
            );
        }
        // P points: the closure is approached along perturbations
        for theta in &p_points {
            let mut hit = false;
            'outer: for dx in [-1e-3, 0.0, 1e-3] {
                for dy in [-1e-3, 0.0, 1e-3] {
                    if system_lopsided_membership(&system, &[theta[0] + dx, theta[1] + dy]) {
                        hit = true;
                        break 'outer;
                    }
                }
            }
            assert!(hit, "P point {theta:?} not adjacent to the lopsided coamoeba");
        }
    }
}
