//! Univariate Laurent polynomials over the complex numbers and a
//! simultaneous root finder.
//!
//! Roots are computed by the Aberth–Ehrlich iteration. Initial guesses come
//! from the Newton polygon of the coefficient moduli (radii from the upper
//! convex hull, arguments equally spread with an irrational offset), which
//! keeps the iteration stable for the wildly scaled fiber polynomials the
//! rasterizer produces. Degrees one and two short-circuit to closed forms.

use crate::error::CoamoebaError;
use crate::Result;
use num_complex::Complex64;

/// Complex Laurent polynomial: `coeffs[j]` multiplies `z^(lowest + j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnivariatePoly {
    coeffs: Vec<Complex64>,
    lowest: i64,
}

/// A root together with the size of its numerical cluster.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootWithMultiplicity {
    pub value: Complex64,
    pub multiplicity: usize,
}

impl UnivariatePoly {
    /// Builds a polynomial, trimming coefficients below `tol * scale` at both
    /// ends (`scale` is the largest coefficient modulus).
    pub fn new_with_tol(coeffs: Vec<Complex64>, lowest: i64, tol: f64) -> Self {
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let cut = tol * scale;
        let mut lo = 0;
        let mut hi = coeffs.len();
        while lo < hi && coeffs[lo].norm() <= cut {
            lo += 1;
        }
        while hi > lo && coeffs[hi - 1].norm() <= cut {
            hi -= 1;
        }
        UnivariatePoly { coeffs: coeffs[lo..hi].to_vec(), lowest: lowest + lo as i64 }
    }

    /// Builds a polynomial trimming only (essentially) exact zeros.
    pub fn new(coeffs: Vec<Complex64>, lowest: i64) -> Self {
        Self::new_with_tol(coeffs, lowest, 1e-300)
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the trimmed polynomial part (ignoring the Laurent offset).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lowest
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Evaluates the polynomial part (without the Laurent monomial factor).
    pub fn eval_poly_part(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Evaluates including the Laurent factor `z^lowest`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.eval_poly_part(z) * z.powi(self.lowest as i32)
    }

    fn derivative_poly_part(&self) -> UnivariatePoly {
        if self.coeffs.len() <= 1 {
            return UnivariatePoly { coeffs: vec![], lowest: 0 };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        UnivariatePoly { coeffs, lowest: 0 }
    }

    /// Backward-error functional: `sum |c_k| |z|^k`, the natural residual scale.
    pub fn residual_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs
            .iter()
            .fold((0.0f64, 1.0f64), |(acc, pw), c| (acc + c.norm() * pw, pw * r))
            .0
    }

    /// All roots in `C_*` of the trimmed polynomial, unordered.
    ///
    /// Residuals satisfy `|p(z)| <= 1e-12 * residual_scale(z)` on return
    /// (iteration refines until stagnation otherwise).
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        if self.coeffs.len() < 2 {
            return Err(CoamoebaError::DegenerateInput(
                "polynomial has no roots in the torus after trimming".into(),
            ));
        }
        let d = self.degree();
        match d {
            1 => Ok(vec![-self.coeffs[0] / self.coeffs[1]]),
            2 => Ok(quadratic_roots(self.coeffs[0], self.coeffs[1], self.coeffs[2]).to_vec()),
            _ => Ok(self.aberth()),
        }
    }

    /// Roots clustered at relative tolerance `rel_tol` and reported with
    /// multiplicities (cluster centroids).
    pub fn roots_with_multiplicity(&self, rel_tol: f64) -> Result<Vec<RootWithMultiplicity>> {
        let roots = self.roots()?;
        Ok(cluster_points(&roots, rel_tol))
    }

    fn aberth(&self) -> Vec<Complex64> {
        let d = self.degree();
        let deriv = self.derivative_poly_part();
        let mut z = self.initial_guesses();
        let mut best = z.clone();
        let mut best_err = f64::INFINITY;

        for _sweep in 0..6 {
            for _iter in 0..80 {
                let mut moved: f64 = 0.0;
                for i in 0..d {
                    let pz = self.eval_poly_part(z[i]);
                    let dz = deriv.eval_poly_part(z[i]);
                    let newton = if dz.norm() > 0.0 { pz / dz } else { pz };
                    let mut s = Complex64::new(0.0, 0.0);
                    for (j, zj) in z.iter().enumerate() {
                        if j != i {
                            let diff = z[i] - zj;
                            if diff.norm() > 1e-300 {
                                s += diff.inv();
                            }
                        }
                    }
                    let denom = Complex64::new(1.0, 0.0) - newton * s;
                    let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
                    z[i] -= step;
                    let zi_norm = z[i].norm().max(1e-300);
                    moved = moved.max(step.norm() / zi_norm);
                }
                if moved < 1e-15 {
                    break;
                }
            }
            let err = self.worst_relative_residual(&z);
            if err < best_err {
                best_err = err;
                best = z.clone();
            }
            if err < 1e-13 {
                break;
            }
            // stagnated: restart from jittered guesses
            for (k, zi) in z.iter_mut().enumerate() {
                let angle = 2.399963 * (k as f64 + 1.0) + 0.5;
                *zi *= Complex64::from_polar(1.0 + 1e-3, angle * 1e-2);
            }
        }
        best
    }

    fn worst_relative_residual(&self, roots: &[Complex64]) -> f64 {
        roots
            .iter()
            .map(|&z| {
                let scale = self.residual_scale(z).max(f64::MIN_POSITIVE);
                self.eval_poly_part(z).norm() / scale
            })
            .fold(0.0, f64::max)
    }

    /// Newton-polygon initial guesses (radii from the upper hull of
    /// `(k, ln |c_k|)`, arguments spread with an irrational offset).
    fn initial_guesses(&self) -> Vec<Complex64> {
        let d = self.degree();
        let logs: Vec<(usize, f64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(k, c)| (k, c.norm().ln()))
            .collect();
        // upper convex hull from left to right
        let mut hull: Vec<(usize, f64)> = Vec::new();
        for &(k, v) in &logs {
            while hull.len() >= 2 {
                let (k1, v1) = hull[hull.len() - 2];
                let (k2, v2) = hull[hull.len() - 1];
                let cross = (k2 as f64 - k1 as f64) * (v - v1) - (k as f64 - k1 as f64) * (v2 - v1);
                if cross >= 0.0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push((k, v));
        }
        let mut guesses = Vec::with_capacity(d);
        let golden = 2.399963229728653; // 2 pi (1 - 1/phi)
        for w in hull.windows(2) {
            let (k1, v1) = w[0];
            let (k2, v2) = w[1];
            let radius = ((v1 - v2) / (k2 - k1) as f64).exp();
            for j in k1..k2 {
                let angle = golden * (j as f64 + 1.0) + 0.3;
                guesses.push(Complex64::from_polar(radius, angle));
            }
        }
        while guesses.len() < d {
            let j = guesses.len();
            guesses.push(Complex64::from_polar(1.0, golden * (j as f64 + 1.0) + 0.3));
        }
        guesses
    }
}

/// Stable quadratic formula.
pub fn quadratic_roots(c0: Complex64, c1: Complex64, c2: Complex64) -> [Complex64; 2] {
    let disc = (c1 * c1 - 4.0 * c0 * c2).sqrt();
    // pick the sign that avoids cancellation
    let q = if (c1 + disc).norm() >= (c1 - disc).norm() { -(c1 + disc) * 0.5 } else { (disc - c1) * 0.5 };
    if q.norm() > 0.0 {
        [q / c2, c0 / q]
    } else {
        [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)]
    }
}

/// Greedy single-linkage clustering of points at relative tolerance.
pub fn cluster_points(points: &[Complex64], rel_tol: f64) -> Vec<RootWithMultiplicity> {
    let n = points.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = points[i].norm().max(points[j].norm()).max(1e-300);
            if (points[i] - points[j]).norm() <= rel_tol * scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut clusters: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        clusters.entry(r).or_default().push(i);
    }
    clusters
        .values()
        .map(|members| {
            let sum: Complex64 = members.iter().map(|&i| points[i]).sum();
            RootWithMultiplicity {
                value: sum / members.len() as f64,
                multiplicity: members.len(),
            }
        })
        .collect()
}

/// Principal argument in `(-pi, pi]`.
pub fn principal_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a <= -std::f64::consts::PI {
        std::f64::consts::PI
    } else {
        a
    }
}
