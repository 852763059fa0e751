//! The shell of a planar coamoeba: the union of the coamoebas of the edge
//! truncations, a finite arrangement of torus lines.
//!
//! An edge with primitive direction `e` and edge polynomial roots `u_j`
//! contributes the line families `<e, theta> = arg u_j (mod 2 pi)`. Binomial
//! edges are exact; edges with a third collinear support point go through the
//! univariate root finder.

use crate::error::CoamoebaError;
use crate::geometry::PointConfiguration;
use crate::numeric::UnivariatePoly;
use crate::{Result, TAU};
use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// One edge of the Newton polygon and its contribution to the shell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShellLineFamily {
    /// Indices of the support points on the edge, ordered along it.
    pub edge_points: Vec<usize>,
    /// Primitive edge direction; the normal of the lines in argument space.
    pub normal: [i64; 2],
    /// Values `c` with lines `<normal, theta> = c (mod 2 pi)`, one per root
    /// argument of the edge polynomial.
    pub offsets: Vec<f64>,
}

impl ShellLineFamily {
    /// Distance from `theta` to the nearest line of the family, measured in
    /// the functional `<normal, .>` (radians).
    pub fn functional_distance(&self, theta: &[f64; 2]) -> f64 {
        let v = self.normal[0] as f64 * theta[0] + self.normal[1] as f64 * theta[1];
        self.offsets
            .iter()
            .map(|&c| {
                let d = (v - c).rem_euclid(TAU);
                d.min(TAU - d)
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Shell of a planar support: one family per Newton polygon edge.
pub fn shell(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<Vec<ShellLineFamily>> {
    if config.dim() != 2 {
        return Err(CoamoebaError::InvalidInput("shell is defined for planar supports".into()));
    }
    shell_of_support(config.points(), coeffs)
}

/// Shell for an arbitrary planar support (used for trinomial members too).
pub fn shell_of_support(points: &[Vec<i64>], coeffs: &[Complex64]) -> Result<Vec<ShellLineFamily>> {
    let hull = convex_hull(points);
    let mut families = Vec::new();
    for w in 0..hull.len() {
        let a = hull[w];
        let b = hull[(w + 1) % hull.len()];
        let (start, end) = (&points[a], &points[b]);
        let dir = [end[0] - start[0], end[1] - start[1]];
        let g = dir[0].gcd(&dir[1]);
        let e = [dir[0] / g, dir[1] / g];
        // all support points on the closed edge, with their integer position
        let mut on_edge: Vec<(i64, usize)> = Vec::new();
        for (k, p) in points.iter().enumerate() {
            let d = [p[0] - start[0], p[1] - start[1]];
            if d[0] * e[1] - d[1] * e[0] != 0 {
                continue;
            }
            let m = if e[0] != 0 { d[0] / e[0] } else { d[1] / e[1] };
            if m * e[0] == d[0] && m * e[1] == d[1] && (0..=g.abs()).contains(&m) {
                on_edge.push((m, k));
            }
        }
        on_edge.sort_unstable();
        let max_m = on_edge.last().unwrap().0;
        let mut poly_coeffs = vec![Complex64::new(0.0, 0.0); (max_m + 1) as usize];
        for &(m, k) in &on_edge {
            poly_coeffs[m as usize] += coeffs[k];
        }
        let indices: Vec<usize> = on_edge.iter().map(|&(_, k)| k).collect();
        let poly = UnivariatePoly::new(poly_coeffs, 0);
        if poly.degree() == 0 || poly.lowest_exponent() != 0 {
            // would mean an extreme coefficient vanished; impossible for
            // nonzero coefficient vectors, but surfaced rather than ignored
            return Err(CoamoebaError::DegenerateEdgePolynomial(indices));
        }
        let roots = poly.roots()?;
        let mut offsets: Vec<f64> = roots.iter().map(|r| r.arg().rem_euclid(TAU)).collect();
        offsets.sort_by(|a, b| a.partial_cmp(b).unwrap());
        offsets.dedup_by(|a, b| (*a - *b).abs() < 1e-10);
        families.push(ShellLineFamily { edge_points: indices, normal: e, offsets });
    }
    Ok(families)
}

/// Indices of the hull vertices in counterclockwise order (exact integer
/// orientation tests; fine for the handful of points a circuit has).
pub fn convex_hull(points: &[Vec<i64>]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by_key(|&i| (points[i][0], points[i][1]));
    idx.dedup_by(|&mut a, &mut b| points[a] == points[b]);
    let cross = |o: usize, a: usize, b: usize| -> i64 {
        (points[a][0] - points[o][0]) * (points[b][1] - points[o][1])
            - (points[a][1] - points[o][1]) * (points[b][0] - points[o][0])
    };
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], i) <= 0 {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], i) <= 0 {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg(points: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::validate(points.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn unit_square_shell_is_the_grid() {
        // 1 + z1 + z2 - r z1 z2: lines theta_1 in {0, pi}, theta_2 in {0, pi}
        let config = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let coeffs = [c(1., 0.), c(1., 0.), c(1., 0.), c(-2.0, 0.)];
        let families = shell(&config, &coeffs).unwrap();
        assert_eq!(families.len(), 4);
        let mut horizontals = Vec::new();
        let mut verticals = Vec::new();
        for f in &families {
            assert_eq!(f.offsets.len(), 1);
            match f.normal {
                [1, 0] | [-1, 0] => verticals.push(f.offsets[0]),
                [0, 1] | [0, -1] => horizontals.push(f.offsets[0]),
                other => panic!("unexpected normal {other:?}"),
            }
        }
        verticals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        horizontals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(verticals[0].abs() < 1e-12 && (verticals[1] - PI).abs() < 1e-12);
        assert!(horizontals[0].abs() < 1e-12 && (horizontals[1] - PI).abs() < 1e-12);
    }

    #[test]
    fn trinomial_shell_three_families() {
        // trinomials are not circuits; use the support-level entry point
        let support = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        let families = shell_of_support(&support, &[c(1., 0.), c(1., 0.), c(1., 0.)]).unwrap();
        assert_eq!(families.len(), 3);
        for f in &families {
            assert_eq!(f.offsets.len(), 1);
            assert!((f.offsets[0] - PI).abs() < 1e-12);
        }
    }

    #[test]
    fn interior_point_does_not_change_the_shell() {
        // 1 + z w^2 + z^2 w - r z w has the shell of the outer trinomial
        let with_interior = cfg(&[&[0, 0], &[1, 2], &[2, 1], &[1, 1]]);
        let f1 = shell(&with_interior, &[c(1., 0.), c(1., 0.), c(1., 0.), c(-3.0, 0.)]).unwrap();
        let outer = vec![vec![0, 0], vec![1, 2], vec![2, 1]];
        let f2 = shell_of_support(&outer, &[c(1., 0.), c(1., 0.), c(1., 0.)]).unwrap();
        assert_eq!(f1.len(), f2.len());
        for (a, b) in f1.iter().zip(f2.iter()) {
            assert_eq!(a.normal, b.normal);
            assert_eq!(a.offsets.len(), b.offsets.len());
            for (x, y) in a.offsets.iter().zip(b.offsets.iter()) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn collinear_edge_point_gives_trinomial_edge() {
        // edge {(0,0) - (2,0)} carries the midpoint (1,0): edge polynomial is
        // a genuine quadratic with two root arguments
        let config = cfg(&[&[0, 0], &[1, 0], &[2, 0], &[1, 2]]);
        let coeffs = [c(1., 0.), c(1., 0.), c(1., 0.), c(1., 0.)];
        let families = shell(&config, &coeffs).unwrap();
        let bottom = families
            .iter()
            .find(|f| f.edge_points.len() == 3)
            .expect("three-point edge");
        assert_eq!(bottom.offsets.len(), 2);
        // roots of 1 + u + u^2 at 120 and 240 degrees
        assert!((bottom.offsets[0] - 2.0 * PI / 3.0).abs() < 1e-10);
        assert!((bottom.offsets[1] - 4.0 * PI / 3.0).abs() < 1e-10);
    }

    #[test]
    fn hull_of_square() {
        let pts = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 4);
    }

    #[test]
    fn hull_skips_interior_point() {
        let pts = vec![vec![0, 0], vec![3, 0], vec![0, 3], vec![1, 1]];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 3);
        assert!(!hull.contains(&3));
    }
}
