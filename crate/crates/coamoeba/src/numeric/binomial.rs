//! Binomial systems `z^(M row i) = c_i` over the complex torus.
//!
//! With `det M != 0` the system has exactly `|det M|` solutions: the moduli
//! come from one real linear solve in log space, the arguments from the
//! exact congruence solver.

use crate::error::CoamoebaError;
use crate::geometry::matrix::IntMat;
use crate::geometry::{solve_congruences, CongruenceSolutions, CongruenceSystem};
use crate::Result;
use num_complex::Complex64;
use num_traits::Zero;

/// `z^(exponents[i]) = targets[i]`, a square system on `C_*^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialSystem {
    pub exponents: Vec<Vec<i64>>,
    pub targets: Vec<Complex64>,
}

impl BinomialSystem {
    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    /// Determinant of the exponent matrix.
    pub fn determinant(&self) -> i64 {
        let m = IntMat::from_rows(&self.exponents);
        i64::try_from(&m.det()).expect("exponent determinant overflow")
    }
}

/// Solves the system; returns all `|det M|` torus solutions.
pub fn solve_binomial_system(system: &BinomialSystem) -> Result<Vec<Vec<Complex64>>> {
    let n = system.dim();
    if system.targets.len() != n || system.exponents.iter().any(|r| r.len() != n) {
        return Err(CoamoebaError::InvalidInput("binomial system shape mismatch".into()));
    }
    if system.targets.iter().any(|c| c.norm().is_zero()) {
        return Err(CoamoebaError::DegenerateInput("binomial target is zero".into()));
    }
    let m = IntMat::from_rows(&system.exponents);
    if m.det().is_zero() {
        return Err(CoamoebaError::SingularExponentMatrix);
    }

    // moduli: M x = ln|c|
    let rhs: Vec<f64> = system.targets.iter().map(|c| c.norm().ln()).collect();
    let mat: Vec<Vec<f64>> = system
        .exponents
        .iter()
        .map(|row| row.iter().map(|&v| v as f64).collect())
        .collect();
    let logs = solve_real(&mat, &rhs)
        .ok_or(CoamoebaError::SingularExponentMatrix)?;

    // arguments: M theta = arg(c) (mod 2 pi)
    let arg_system = CongruenceSystem {
        rows: system.exponents.clone(),
        rhs: system.targets.iter().map(|c| c.arg()).collect(),
    };
    let args = match solve_congruences(&arg_system, 1e-9) {
        CongruenceSolutions::Finite(sols) => sols,
        CongruenceSolutions::Empty => Vec::new(),
        CongruenceSolutions::Coset { .. } => {
            return Err(CoamoebaError::SingularExponentMatrix);
        }
    };

    let solutions: Vec<Vec<Complex64>> = args
        .iter()
        .map(|theta| {
            (0..n).map(|j| Complex64::from_polar(logs[j].exp(), theta[j])).collect()
        })
        .collect();

    debug_assert!(solutions.iter().all(|z| {
        system.exponents.iter().zip(system.targets.iter()).all(|(row, &c)| {
            let val: Complex64 = row
                .iter()
                .zip(z.iter())
                .map(|(&e, &zj)| zj.powi(e as i32))
                .product();
            (val - c).norm() <= 1e-9 * c.norm().max(1.0)
        })
    }));
    Ok(solutions)
}

/// Dense Gaussian elimination with partial pivoting; `None` when singular.
pub fn solve_real(mat: &[Vec<f64>], rhs: &[f64]) -> Option<Vec<f64>> {
    let n = mat.len();
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    let mut b: Vec<f64> = rhs.to_vec();
    for k in 0..n {
        let pivot = (k..n).max_by(|&i, &j| a[i][k].abs().partial_cmp(&a[j][k].abs()).unwrap())?;
        if a[pivot][k].abs() < 1e-300 {
            return None;
        }
        a.swap(k, pivot);
        b.swap(k, pivot);
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|j| a[k][j] * x[j]).sum();
        x[k] = (b[k] - s) / a[k][k];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TAU;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn square_root_of_unity() {
        let system = BinomialSystem { exponents: vec![vec![2]], targets: vec![c(1.0, 0.0)] };
        let sols = solve_binomial_system(&system).unwrap();
        assert_eq!(sols.len(), 2);
        let mut values: Vec<f64> = sols.iter().map(|z| z[0].re).collect();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((values[0] + 1.0).abs() < 1e-12);
        assert!((values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn symmetric_cubic_system() {
        // z^2 w = 1, z w^2 = 1: three solutions on the diagonal
        let system = BinomialSystem {
            exponents: vec![vec![2, 1], vec![1, 2]],
            targets: vec![c(1.0, 0.0), c(1.0, 0.0)],
        };
        assert_eq!(system.determinant(), 3);
        let sols = solve_binomial_system(&system).unwrap();
        assert_eq!(sols.len(), 3);
        for z in &sols {
            assert!((z[0] - z[1]).norm() < 1e-10);
            assert!((z[0].norm() - 1.0).abs() < 1e-12);
            let k = (z[0].arg() / (TAU / 3.0)).round();
            assert!((z[0].arg() - k * TAU / 3.0).abs() < 1e-10);
        }
    }

    #[test]
    fn single_equation() {
        let target = c(0.3, -1.2);
        let system = BinomialSystem { exponents: vec![vec![1]], targets: vec![target] };
        let sols = solve_binomial_system(&system).unwrap();
        assert_eq!(sols.len(), 1);
        assert!((sols[0][0] - target).norm() < 1e-12);
    }

    #[test]
    fn singular_matrix_rejected() {
        let system = BinomialSystem {
            exponents: vec![vec![1, 1], vec![2, 2]],
            targets: vec![c(1.0, 0.0), c(1.0, 0.0)],
        };
        assert!(matches!(
            solve_binomial_system(&system),
            Err(CoamoebaError::SingularExponentMatrix)
        ));
    }

    #[test]
    fn moduli_and_arguments_mix() {
        // z^2 = 4 i: solutions with modulus 2, arguments pi/4 and pi/4 + pi
        let system = BinomialSystem {
            exponents: vec![vec![2]],
            targets: vec![c(0.0, 4.0)],
        };
        let sols = solve_binomial_system(&system).unwrap();
        assert_eq!(sols.len(), 2);
        for z in sols {
            assert!((z[0].norm() - 2.0).abs() < 1e-12);
            assert!((z[0] * z[0] - c(0.0, 4.0)).norm() < 1e-10);
        }
    }
}
