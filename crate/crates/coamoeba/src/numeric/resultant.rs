//! Bivariate Laurent polynomials and Sylvester resultants.
//!
//! The resultant eliminating one variable is computed by evaluation and
//! interpolation: the kept variable is sampled on the unit circle, each
//! specialization yields a numeric Sylvester determinant (LU with partial
//! pivoting), and the coefficients are recovered by an inverse discrete
//! Fourier transform. Degrees are fixed by the cleared input polynomials, so
//! specializations with dropped leading terms stay consistent.

use super::poly::UnivariatePoly;
use crate::error::CoamoebaError;
use crate::Result;
use num_complex::Complex64;

/// Which variable to keep / eliminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Z1,
    Z2,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::Z1 => Var::Z2,
            Var::Z2 => Var::Z1,
        }
    }
}

/// Sparse bivariate Laurent polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariatePoly {
    terms: Vec<((i64, i64), Complex64)>,
}

impl BivariatePoly {
    pub fn new(terms: Vec<((i64, i64), Complex64)>) -> Self {
        let mut merged: std::collections::BTreeMap<(i64, i64), Complex64> = Default::default();
        for (e, c) in terms {
            *merged.entry(e).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        BivariatePoly {
            terms: merged.into_iter().filter(|(_, c)| c.norm() > 0.0).collect(),
        }
    }

    pub fn terms(&self) -> &[((i64, i64), Complex64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|&((e1, e2), c)| c * z1.powi(e1 as i32) * z2.powi(e2 as i32))
            .sum()
    }

    pub fn coefficient_scale(&self) -> f64 {
        self.terms.iter().map(|(_, c)| c.norm()).fold(0.0, f64::max)
    }

    fn exponent(&self, var: Var, term: &((i64, i64), Complex64)) -> i64 {
        match var {
            Var::Z1 => term.0 .0,
            Var::Z2 => term.0 .1,
        }
    }

    /// Shifts exponents so both variables have minimum exponent zero
    /// (multiplication by a torus-invertible monomial).
    pub fn cleared(&self) -> BivariatePoly {
        if self.terms.is_empty() {
            return self.clone();
        }
        let min1 = self.terms.iter().map(|t| t.0 .0).min().unwrap();
        let min2 = self.terms.iter().map(|t| t.0 .1).min().unwrap();
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|&((e1, e2), c)| ((e1 - min1, e2 - min2), c))
                .collect(),
        }
    }

    /// Degree in `var` after clearing.
    pub fn degree_in(&self, var: Var) -> i64 {
        let cleared = self.cleared();
        cleared.terms.iter().map(|t| cleared.exponent(var, t)).max().unwrap_or(0)
    }

    /// Specializes the kept variable and returns the coefficient vector in
    /// the eliminated variable, padded to `deg + 1` entries.
    fn specialize(&self, keep: Var, value: Complex64, deg: i64) -> Vec<Complex64> {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (deg + 1) as usize];
        for &((e1, e2), c) in &self.terms {
            let (kept_exp, elim_exp) = match keep {
                Var::Z1 => (e1, e2),
                Var::Z2 => (e2, e1),
            };
            coeffs[elim_exp as usize] += c * value.powi(kept_exp as i32);
        }
        coeffs
    }
}

/// Sylvester resultant of `p` and `q` eliminating `eliminate`; the result is
/// a univariate polynomial in the kept variable (Laurent-trimmed, so its
/// roots are exactly the torus-relevant ones).
pub fn sylvester_resultant(p: &BivariatePoly, q: &BivariatePoly, eliminate: Var) -> Result<UnivariatePoly> {
    if p.is_zero() || q.is_zero() {
        return Err(CoamoebaError::IdenticallyZeroResultant);
    }
    let keep = eliminate.other();
    let p = p.cleared();
    let q = q.cleared();
    let dp = p.degree_in(eliminate);
    let dq = q.degree_in(eliminate);
    let kp = p.degree_in(keep);
    let kq = q.degree_in(keep);

    if dp == 0 && dq == 0 {
        return Err(CoamoebaError::InvalidInput(
            "neither polynomial involves the eliminated variable".into(),
        ));
    }
    // Res(p, q) = p^dq when p is constant in the eliminated variable
    if dp == 0 || dq == 0 {
        let (base, power, kdeg) = if dp == 0 { (&p, dq, kp) } else { (&q, dp, kq) };
        let bound = kdeg * power;
        let samples = sample_circle((bound + 1) as usize);
        let values: Vec<Complex64> = samples
            .iter()
            .map(|&t| {
                let coeffs = base.specialize(keep, t, 0);
                coeffs[0].powi(power as i32)
            })
            .collect();
        let coeffs = interpolate_from_circle(&samples, &values);
        return finish_resultant(coeffs, base.coefficient_scale().powi(power as i32));
    }

    let bound = dp * kq + dq * kp; // Bezout-style bound on the kept degree
    let count = (bound + 1) as usize;
    let samples = sample_circle(count);
    let size = (dp + dq) as usize;

    let values: Vec<Complex64> = samples
        .iter()
        .map(|&t| {
            let pc = p.specialize(keep, t, dp);
            let qc = q.specialize(keep, t, dq);
            let mut m = vec![vec![Complex64::new(0.0, 0.0); size]; size];
            // dq rows of p coefficients, then dp rows of q coefficients
            for r in 0..dq as usize {
                for (k, &c) in pc.iter().enumerate() {
                    m[r][r + (dp as usize - k)] = c;
                }
            }
            for r in 0..dp as usize {
                for (k, &c) in qc.iter().enumerate() {
                    m[dq as usize + r][r + (dq as usize - k)] = c;
                }
            }
            complex_det(&mut m)
        })
        .collect();

    let scale = p.coefficient_scale().powi(dq as i32) * q.coefficient_scale().powi(dp as i32);
    let coeffs = interpolate_from_circle(&samples, &values);
    finish_resultant(coeffs, scale)
}

fn finish_resultant(coeffs: Vec<Complex64>, scale: f64) -> Result<UnivariatePoly> {
    let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if max <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
        return Err(CoamoebaError::IdenticallyZeroResultant);
    }
    Ok(UnivariatePoly::new_with_tol(coeffs, 0, 1e-11))
}

fn sample_circle(count: usize) -> Vec<Complex64> {
    let offset = 0.377_123; // keep clear of coordinate symmetries
    (0..count)
        .map(|j| Complex64::from_polar(1.0, offset + std::f64::consts::TAU * j as f64 / count as f64))
        .collect()
}

/// Inverse DFT against the offset circle samples.
fn interpolate_from_circle(samples: &[Complex64], values: &[Complex64]) -> Vec<Complex64> {
    let k = samples.len();
    let offset = samples[0];
    (0..k)
        .map(|deg| {
            let sum: Complex64 = (0..k)
                .map(|j| {
                    let w = Complex64::from_polar(
                        1.0,
                        -std::f64::consts::TAU * (j * deg % k) as f64 / k as f64,
                    );
                    values[j] * w
                })
                .sum();
            sum / k as f64 * offset.powi(-(deg as i32))
        })
        .collect()
}

/// Determinant by LU with partial pivoting; consumes the matrix.
pub fn complex_det(m: &mut [Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&i, &j| m[i][k].norm().partial_cmp(&m[j][k].norm()).unwrap())
            .unwrap();
        if m[pivot][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != k {
            m.swap(k, pivot);
            det = -det;
        }
        det *= m[k][k];
        for i in k + 1..n {
            let f = m[i][k] / m[k][k];
            for j in k..n {
                let sub = f * m[k][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}
