//! Exact integer lattice geometry of circuits.
//!
//! A circuit is an ordered configuration of `n + 2` integer points whose
//! Newton polytope is full dimensional. The augmented `(n+1) x (n+2)` matrix
//! (ones row on top) has a one-dimensional integer kernel spanned by the Gale
//! vector; its entries are the signed volumes of the `n + 2` facet simplices
//! and control everything else in this crate: the two coherent triangulations,
//! the zonotope of the order map, the binomial discriminant, and the counting
//! lemmas for torus congruences.

pub mod congruence;
pub mod matrix;
pub mod transform;

pub use congruence::{solve_congruences, CongruenceSolutions, CongruenceSystem};
pub use transform::{normalize_lattice, orthogonal_form, AffineTransform, OrthogonalForm};

use crate::error::CoamoebaError;
use crate::Result;
use matrix::{gcd_all, IntMat};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// An ordered circuit configuration: `n + 2` integer points spanning
/// dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<i64>>,
}

/// Classification of a circuit by its convex position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CircuitKind {
    /// All points are vertices of the Newton polytope.
    VertexCircuit,
    /// The hull is a simplex with exactly one non-vertex point.
    SimplexCircuit,
    /// Some facet simplex has volume zero (a pyramid); reported, not rejected.
    Degenerate,
}

/// Gale data, volumes, signs and triangulations of a circuit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitProfile {
    /// Signed maximal minors `b_k = (-1)^k det(A_k)` after orientation
    /// normalization; orthogonal to every row of the augmented matrix.
    pub raw_gale: Vec<i64>,
    /// `raw_gale` divided by the gcd of its entries.
    pub primitive_gale: Vec<i64>,
    /// `V_k = |raw_gale[k]|`, the normalized volume of the facet simplex `A_k`.
    pub volumes: Vec<i64>,
    /// `sign(raw_gale[k])` in `{-1, 0, +1}`.
    pub signs: Vec<i8>,
    /// `Vol(A)`: the sum of `V_k` over the positive sign class.
    pub total_volume: i64,
    /// Convex-position class.
    pub kind: CircuitKind,
    /// Index of the affine lattice `ZA` inside `Z^n`; equals `gcd(raw_gale)`.
    pub lattice_index: i64,
    /// Index of the unique non-vertex point for simplex circuits.
    pub interior_index: Option<usize>,
    /// The two coherent triangulations `(T_plus, T_minus)` as lists of
    /// maximal simplices (each simplex a list of point indices). Present for
    /// nondegenerate circuits.
    pub triangulations: Option<(Vec<Vec<usize>>, Vec<Vec<usize>>)>,
}

impl PointConfiguration {
    /// Validates a point list as a circuit: `N = n + 2` equal-length integer
    /// vectors whose ones-augmented matrix has full rank `n + 1`.
    pub fn validate(points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(CoamoebaError::InvalidInput("empty point list".into()));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(CoamoebaError::InvalidInput("points must have dimension >= 1".into()));
        }
        if points.iter().any(|p| p.len() != dim) {
            return Err(CoamoebaError::InvalidInput("points of unequal length".into()));
        }
        if points.len() != dim + 2 {
            return Err(CoamoebaError::WrongCardinality {
                got: points.len(),
                dim,
                expected: dim + 2,
            });
        }
        let config = PointConfiguration { dim, points };
        let rank = config.augmented_matrix().rank();
        if rank != dim + 1 {
            return Err(CoamoebaError::NotFullDimensional { dim, rank });
        }
        Ok(config)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of points (`n + 2`).
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn point(&self, k: usize) -> &[i64] {
        &self.points[k]
    }

    /// The `(n+1) x N` matrix with a ones row on top.
    pub fn augmented_matrix(&self) -> IntMat {
        let mut rows = vec![vec![1i64; self.len()]];
        for i in 0..self.dim {
            rows.push(self.points.iter().map(|p| p[i]).collect());
        }
        IntMat::from_rows(&rows)
    }

    /// Index of the origin among the points, if present.
    pub fn origin_index(&self) -> Option<usize> {
        self.points.iter().position(|p| p.iter().all(|&x| x == 0))
    }

    /// Gale data and triangulations.
    pub fn profile(&self) -> CircuitProfile {
        let aug = self.augmented_matrix();
        let n = self.len();
        let mut raw: Vec<BigInt> = Vec::with_capacity(n);
        for k in 0..n {
            let mut d = aug.drop_col(k).det();
            if k % 2 == 1 {
                d = -d;
            }
            raw.push(d);
        }

        // orientation: simplex circuits get delta = -1 on the interior point,
        // vertex (and degenerate) circuits a positive first nonzero entry
        let positives = raw.iter().filter(|b| b.is_positive()).count();
        let negatives = raw.iter().filter(|b| b.is_negative()).count();
        let degenerate = raw.iter().any(|b| b.is_zero());
        let flip = if degenerate || (positives >= 2 && negatives >= 2) {
            raw.iter().find(|b| !b.is_zero()).map(|b| b.is_negative()).unwrap_or(false)
        } else {
            // singleton class carries the interior point; make it negative
            positives == 1
        };
        if flip {
            for b in &mut raw {
                *b = -b.clone();
            }
        }

        let gcd = gcd_all(raw.iter());
        let to_i64 = |b: &BigInt| -> i64 {
            i64::try_from(b).expect("gale entry exceeds i64; configuration too large")
        };
        let raw_gale: Vec<i64> = raw.iter().map(to_i64).collect();
        let lattice_index = to_i64(&gcd).max(1);
        let primitive_gale: Vec<i64> =
            raw_gale.iter().map(|&b| if lattice_index > 0 { b / lattice_index } else { b }).collect();
        let volumes: Vec<i64> = raw_gale.iter().map(|b| b.abs()).collect();
        let signs: Vec<i8> = raw_gale.iter().map(|b| b.signum() as i8).collect();
        let total_volume: i64 = raw_gale.iter().filter(|&&b| b > 0).sum();

        let (kind, interior_index) = if degenerate {
            (CircuitKind::Degenerate, None)
        } else if negatives == 1 || positives == 1 {
            let interior = signs.iter().position(|&s| s == -1);
            (CircuitKind::SimplexCircuit, interior)
        } else {
            (CircuitKind::VertexCircuit, None)
        };

        let triangulations = if degenerate {
            None
        } else {
            let t = |sign: i8| -> Vec<Vec<usize>> {
                (0..n)
                    .filter(|&k| signs[k] == sign)
                    .map(|k| (0..n).filter(|&j| j != k).collect())
                    .collect()
            };
            Some((t(1), t(-1)))
        };

        CircuitProfile {
            raw_gale,
            primitive_gale,
            volumes,
            signs,
            total_volume,
            kind,
            lattice_index,
            interior_index,
            triangulations,
        }
    }
}

impl CircuitProfile {
    pub fn is_degenerate(&self) -> bool {
        self.kind == CircuitKind::Degenerate
    }

    /// The two coherent triangulations `(T_plus, T_minus)`.
    ///
    /// `T_delta` consists of the facet simplices `A_k` for `delta_k = delta`,
    /// returned as index lists of their points.
    pub fn coherent_triangulations(&self) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
        self.triangulations
            .clone()
            .ok_or_else(|| CoamoebaError::DegenerateCircuit("no triangulations for a pyramid".into()))
    }

    /// Does either coherent triangulation have all simplex volumes equal?
    ///
    /// Returns the witness triangulation (as index lists) when one exists.
    pub fn equimodular_check(&self) -> Result<Option<Vec<Vec<usize>>>> {
        let (t_plus, t_minus) = self.coherent_triangulations()?;
        let vols = |t: &[Vec<usize>]| -> Vec<i64> {
            // simplex A_k is identified by its omitted index
            t.iter()
                .map(|simplex| {
                    let omitted = (0..self.volumes.len())
                        .find(|k| !simplex.contains(k))
                        .expect("triangulation simplex omits one point");
                    self.volumes[omitted]
                })
                .collect()
        };
        let all_equal = |v: &[i64]| v.windows(2).all(|w| w[0] == w[1]);
        if all_equal(&vols(&t_plus)) {
            return Ok(Some(t_plus));
        }
        if all_equal(&vols(&t_minus)) {
            return Ok(Some(t_minus));
        }
        Ok(None)
    }
}
