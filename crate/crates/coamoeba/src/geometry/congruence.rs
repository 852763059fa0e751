//! Exact solution of linear congruence systems on the torus.
//!
//! A system `R theta = c (mod 2pi)` with an integer coefficient matrix is
//! diagonalized by the Smith normal form `S = U R V`; the substituted system
//! `S psi = U c` splits into scalar congruences `s_i psi_i = g_i` with
//! exactly `s_i` solutions each, plus consistency conditions on the zero
//! rows. The solution set is therefore empty, a finite set of `prod s_i`
//! torus points, or a coset of a positive-dimensional closed subgroup.

use super::matrix::IntMat;
use crate::TAU;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// `rows[i] . theta = rhs[i] (mod 2pi)`; augment rows with a ones column to
/// add a free global-phase unknown.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CongruenceSystem {
    pub rows: Vec<Vec<i64>>,
    pub rhs: Vec<f64>,
}

/// Solution set of a congruence system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CongruenceSolutions {
    /// Inconsistent system.
    Empty,
    /// All isolated torus solutions, each reduced to `[0, 2pi)^d`.
    Finite(Vec<Vec<f64>>),
    /// A positive-dimensional coset: a particular solution, integer
    /// directions spanning the connected subgroup, and the number of
    /// connected components (`sheets`).
    Coset { particular: Vec<f64>, directions: Vec<Vec<i64>>, sheets: usize },
}

impl CongruenceSystem {
    pub fn unknowns(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// Appends a ones column (global phase unknown) to every row.
    pub fn with_phase_column(mut self) -> Self {
        for row in &mut self.rows {
            row.push(1);
        }
        self
    }
}

/// Solves the system exactly via Smith normal form. `tol` bounds the allowed
/// residual (radians) in the consistency conditions.
pub fn solve_congruences(system: &CongruenceSystem, tol: f64) -> CongruenceSolutions {
    let d = system.unknowns();
    let m = system.rows.len();
    if d == 0 || m == 0 {
        return CongruenceSolutions::Coset {
            particular: vec![0.0; d],
            directions: (0..d).map(|i| unit_dir(d, i)).collect(),
            sheets: 1,
        };
    }
    let r_mat = IntMat::from_rows(&system.rows);
    let (u, s, v) = r_mat.smith_normal_form();
    let rank = (0..m.min(d)).filter(|&i| !s[(i, i)].is_zero()).count();

    // g = U c
    let g: Vec<f64> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| i64::try_from(&u[(i, j)]).expect("transform entry overflow") as f64 * system.rhs[j])
                .sum()
        })
        .collect();

    // consistency on zero rows
    for gi in g.iter().take(m).skip(rank) {
        if wrap_to_pi(*gi).abs() > tol {
            return CongruenceSolutions::Empty;
        }
    }

    let invariants: Vec<i64> =
        (0..rank).map(|i| i64::try_from(&s[(i, i)]).expect("invariant factor overflow")).collect();
    let v_i64: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::try_from(&v[(i, j)]).expect("transform entry overflow")).collect())
        .collect();

    let free = d - rank;
    if free > 0 {
        let particular_psi: Vec<f64> = (0..d)
            .map(|i| if i < rank { wrap_to_pi(g[i]) / invariants[i] as f64 } else { 0.0 })
            .collect();
        let particular = map_back(&v_i64, &particular_psi);
        let directions = (rank..d).map(|j| (0..d).map(|i| v_i64[i][j]).collect()).collect();
        let sheets = invariants.iter().product::<i64>() as usize;
        return CongruenceSolutions::Coset { particular, directions, sheets };
    }

    // enumerate all prod(invariants) isolated solutions
    let total: i64 = invariants.iter().product();
    let mut solutions = Vec::with_capacity(total as usize);
    let mut counters = vec![0i64; rank];
    loop {
        let psi: Vec<f64> = (0..rank)
            .map(|i| (wrap_to_pi(g[i]) + TAU * counters[i] as f64) / invariants[i] as f64)
            .collect();
        solutions.push(map_back(&v_i64, &psi));
        // odometer increment
        let mut idx = 0;
        loop {
            if idx == rank {
                let mut sols = solutions;
                sort_lexicographic(&mut sols);
                return CongruenceSolutions::Finite(sols);
            }
            counters[idx] += 1;
            if counters[idx] < invariants[idx] {
                break;
            }
            counters[idx] = 0;
            idx += 1;
        }
    }
}

fn unit_dir(d: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

fn map_back(v: &[Vec<i64>], psi: &[f64]) -> Vec<f64> {
    (0..v.len())
        .map(|i| {
            let x: f64 = (0..psi.len()).map(|j| v[i][j] as f64 * psi[j]).sum();
            x.rem_euclid(TAU)
        })
        .collect()
}

fn sort_lexicographic(sols: &mut [Vec<f64>]) {
    sols.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b.iter()) {
            match x.partial_cmp(y) {
                Some(std::cmp::Ordering::Equal) | None => continue,
                Some(ord) => return ord,
            }
        }
        std::cmp::Ordering::Equal
    });
}

/// Signed reduction to `(-pi, pi]`.
pub fn wrap_to_pi(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r > std::f64::consts::PI + f64::EPSILON {
        r - TAU
    } else {
        r
    }
}
