//! Integer affine transformations of circuits: lattice normalization and
//! (special) orthogonal form.
//!
//! A transform acts on exponent vectors as `a -> (L a[perm] + offset) / den`
//! with exact division; it corresponds to a monomial change of variables plus
//! multiplication by a Laurent monomial, and is invertible over the working
//! lattice. The induced map on torus arguments is `theta -> Linv^T theta`,
//! which is a well-defined (possibly covering) map of the torus whenever the
//! inverse exponent map is integral.

use super::matrix::IntMat;
use super::PointConfiguration;
use crate::error::CoamoebaError;
use crate::{Result, TAU};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Affine change of exponent coordinates, with permutation bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineTransform {
    /// New index `i` takes the old point `permutation[i]` (and its coefficient).
    pub permutation: Vec<usize>,
    /// Numerator of the linear part, row major `n x n`.
    pub linear_num: Vec<Vec<i64>>,
    /// Common denominator of the linear part (positive).
    pub linear_den: i64,
    /// Added after the linear part, in new coordinates times `linear_den`.
    pub offset: Vec<i64>,
    /// Integral inverse of the exponent map (exists for all transforms built
    /// here); maps new exponents back to old ones up to the offset.
    pub inverse_num: Vec<Vec<i64>>,
    /// Exponent shift bookkeeping: the source polynomial was multiplied by
    /// the Laurent monomial with this exponent before the change of
    /// variables (always the negated basepoint here).
    pub monomial_shift: Vec<i64>,
}

impl AffineTransform {
    pub fn identity(n: usize, len: usize) -> Self {
        let eye = |n: usize| -> Vec<Vec<i64>> {
            (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
        };
        AffineTransform {
            permutation: (0..len).collect(),
            linear_num: eye(n),
            linear_den: 1,
            offset: vec![0; n],
            inverse_num: eye(n),
            monomial_shift: vec![0; n],
        }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.offset.len();
        self.linear_den == 1
            && self.offset.iter().all(|&x| x == 0)
            && self.permutation.iter().enumerate().all(|(i, &p)| i == p)
            && (0..n).all(|i| (0..n).all(|j| self.linear_num[i][j] == i64::from(i == j)))
    }

    /// Applies the exponent map to a configuration. Division must be exact.
    pub fn apply(&self, config: &PointConfiguration) -> Result<PointConfiguration> {
        let n = config.dim();
        let mut new_points = Vec::with_capacity(config.len());
        for &old_idx in &self.permutation {
            let p = config.point(old_idx);
            let mut q = vec![0i64; n];
            for (i, qi) in q.iter_mut().enumerate() {
                let mut acc: i64 = self.offset[i];
                for (j, &pj) in p.iter().enumerate() {
                    acc += self.linear_num[i][j] * pj;
                }
                if acc % self.linear_den != 0 {
                    return Err(CoamoebaError::InvalidInput(format!(
                        "transform does not map point {:?} to the integer lattice",
                        p
                    )));
                }
                *qi = acc / self.linear_den;
            }
            new_points.push(q);
        }
        PointConfiguration::validate(new_points)
    }

    /// Image of a torus argument vector under the induced map of arguments
    /// (old coordinates to new coordinates), reduced to `[0, 2pi)`.
    pub fn map_argument(&self, theta: &[f64]) -> Vec<f64> {
        let n = theta.len();
        (0..n)
            .map(|i| {
                let mut acc = 0.0;
                for (j, &t) in theta.iter().enumerate() {
                    // transpose of the inverse exponent map
                    acc += self.inverse_num[j][i] as f64 * t;
                }
                acc.rem_euclid(TAU)
            })
            .collect()
    }

    /// Reorders a coefficient slice to match the transformed configuration.
    pub fn permute_coefficients<T: Clone>(&self, coeffs: &[T]) -> Vec<T> {
        self.permutation.iter().map(|&k| coeffs[k].clone()).collect()
    }
}

/// Re-expresses the points in a basis of the affine lattice `ZA`, so the new
/// configuration spans `Z^n`. Returns the new configuration and the recorded
/// transform. Already-normalized configurations come back unchanged with the
/// identity transform.
pub fn normalize_lattice(config: &PointConfiguration) -> Result<(PointConfiguration, AffineTransform)> {
    let n = config.dim();
    let base = config.point(0).to_vec();
    let mut diff_rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    for i in 0..n {
        diff_rows.push(
            (1..config.len()).map(|k| config.point(k)[i] - base[i]).collect(),
        );
    }
    let diffs = IntMat::from_rows(&diff_rows); // n x (N-1), columns a_k - a_0
    let basis = diffs.column_lattice_basis(); // n x n, columns generate ZA
    if basis.cols != n {
        return Err(CoamoebaError::NotFullDimensional { dim: n, rank: basis.cols });
    }
    let det = basis.det();
    if det.abs() == BigInt::from(1) && config.origin_index().is_some() {
        // ZA = Z^n and a basepoint at the origin: nothing to do
        return Ok((config.clone(), AffineTransform::identity(n, config.len())));
    }

    // linear part H^{-1} = adj(H) / det(H); offset moves a_0 to the origin
    let det_i: i64 = i64::try_from(&det).expect("lattice determinant exceeds i64");
    let (adj, den) = adjugate_over(&basis, det_i);
    let offset: Vec<i64> = (0..n)
        .map(|i| -(0..n).map(|j| adj[i][j] * base[j]).sum::<i64>())
        .collect();
    // inverse exponent map is H itself (integral)
    let inverse_num: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::try_from(&basis[(i, j)]).unwrap()).collect())
        .collect();
    let transform = AffineTransform {
        permutation: (0..config.len()).collect(),
        linear_num: adj,
        linear_den: den,
        offset,
        inverse_num,
        monomial_shift: base.iter().map(|&x| -x).collect(),
    };
    let new_config = transform.apply(config)?;
    debug_assert_eq!(new_config.profile().lattice_index, 1);
    Ok((new_config, transform))
}

fn adjugate_over(m: &IntMat, det: i64) -> (Vec<Vec<i64>>, i64) {
    let n = m.rows;
    let mut num = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // cofactor expansion of the inverse: adj(M)[i][j] = C_ji
            let mut sub = IntMat::zero(n - 1, n - 1);
            let mut ii = 0;
            for r in 0..n {
                if r == j {
                    continue;
                }
                let mut jj = 0;
                for c in 0..n {
                    if c == i {
                        continue;
                    }
                    sub[(ii, jj)] = m[(r, c)].clone();
                    jj += 1;
                }
                ii += 1;
            }
            let mut cof = if n == 1 { BigInt::from(1) } else { sub.det() };
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            num[i][j] = i64::try_from(&cof).expect("adjugate entry exceeds i64");
        }
    }
    if det < 0 {
        for row in &mut num {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
        (num, -det)
    } else {
        (num, det)
    }
}

/// Result of the orthogonal-form construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalForm {
    pub config: PointConfiguration,
    pub transform: AffineTransform,
    /// Number of positive-Gale points minus one (coordinates of block one).
    pub m1: usize,
    /// Number of negative-Gale points minus one (coordinates of block two).
    pub m2: usize,
    /// Whether the axis-point shape (special orthogonal form) was reached.
    pub special: bool,
}

/// Puts a nondegenerate circuit with `ZA = Z^n` into (special) orthogonal
/// form: positive-Gale points supported on the first `m1` coordinates,
/// negative-Gale points on the last `m2`, and, when achievable, the first
/// `m_k` points of each block placed at `-p_i e_i` with the remaining point
/// in the open positive orthant of its block.
///
/// The kernel-row transform of the construction is not always unimodular
/// over `Z` (the unit square is an obstruction: an axis cross has volume at
/// least 4 while the square has volume 2); such cases are reported as
/// `NonUnimodularKernelBasis` rather than silently changing the lattice.
pub fn orthogonal_form(config: &PointConfiguration) -> Result<OrthogonalForm> {
    let profile = config.profile();
    if profile.is_degenerate() {
        return Err(CoamoebaError::DegenerateCircuit("orthogonal form needs a nondegenerate circuit".into()));
    }
    if profile.lattice_index != 1 {
        return Err(CoamoebaError::InvalidInput(
            "orthogonal form requires ZA = Z^n; run normalize_lattice first".into(),
        ));
    }
    let n = config.dim();
    let count = config.len();

    // order points positive class first
    let mut perm: Vec<usize> = (0..count).filter(|&k| profile.signs[k] > 0).collect();
    let m1 = perm.len() - 1;
    perm.extend((0..count).filter(|&k| profile.signs[k] < 0));
    let m2 = n - m1;

    // augmented blocks A_1 (positive class) and A_2 (negative class)
    let block = |idx: &[usize]| -> IntMat {
        let mut rows = vec![vec![1i64; idx.len()]];
        for i in 0..n {
            rows.push(idx.iter().map(|&k| config.point(k)[i]).collect());
        }
        IntMat::from_rows(&rows)
    };
    let a1 = block(&perm[..=m1]);
    let a2 = block(&perm[m1 + 1..]);

    // rows of the transform: e_1, left kernel of A_2, left kernel of A_1
    let v_rows = a2.left_kernel();
    let u_rows = a1.left_kernel();
    if v_rows.len() != m1 || u_rows.len() != m2 {
        return Err(CoamoebaError::DegenerateCircuit("kernel ranks do not match block sizes".into()));
    }
    let mut t_rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    let mut e1 = vec![BigInt::zero(); n + 1];
    e1[0] = BigInt::from(1);
    t_rows.push(e1);
    t_rows.extend(v_rows);
    t_rows.extend(u_rows);
    let t_mat = {
        let mut m = IntMat::zero(n + 1, n + 1);
        for (i, row) in t_rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    };
    let t_det = t_mat.det();
    if t_det.is_zero() {
        return Err(CoamoebaError::DegenerateCircuit("kernel-row transform is singular".into()));
    }
    if !t_det.abs().is_one() {
        return Err(CoamoebaError::NonUnimodularKernelBasis {
            det: i64::try_from(&t_det).unwrap_or(i64::MAX),
        });
    }

    // affine action on exponents: a -> lin * a + shift
    let lin: Vec<Vec<i64>> = (1..=n)
        .map(|i| (1..=n).map(|j| i64::try_from(&t_mat[(i, j)]).unwrap()).collect())
        .collect();
    let shift: Vec<i64> = (1..=n).map(|i| i64::try_from(&t_mat[(i, 0)]).unwrap()).collect();

    let apply_affine = |p: &[i64], lin: &[Vec<i64>], shift: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|i| shift[i] + (0..n).map(|j| lin[i][j] * p[j]).sum::<i64>())
            .collect()
    };

    let block_points = |range: std::ops::Range<usize>, coords: std::ops::Range<usize>, pts: &[Vec<i64>]| -> Vec<Vec<i64>> {
        range.map(|k| coords.clone().map(|c| pts[k][c]).collect()).collect()
    };

    let ortho_pts: Vec<Vec<i64>> =
        perm.iter().map(|&k| apply_affine(config.point(k), &lin, &shift)).collect();

    // sanity: block supports must already be separated
    for (k, p) in ortho_pts.iter().enumerate() {
        let (lo, hi) = if k <= m1 { (m1, n) } else { (0, m1) };
        if p[lo..hi].iter().any(|&x| x != 0) {
            return Err(CoamoebaError::DegenerateCircuit(
                "kernel-row transform failed to separate blocks".into(),
            ));
        }
    }

    // try to reach the special form block by block
    let mut special = true;
    let mut block_perm: Vec<usize> = Vec::with_capacity(count);
    let mut block_lin: Vec<Vec<i64>> = vec![vec![0; n]; n];
    for (range, coords) in [(0..m1 + 1, 0..m1), (m1 + 1..count, m1..n)] {
        let pts = block_points(range.clone(), coords.clone(), &ortho_pts);
        match special_block_basis(&pts) {
            Some((u, order)) => {
                for (i, row) in u.iter().enumerate() {
                    for (j, &v) in row.iter().enumerate() {
                        block_lin[coords.start + i][coords.start + j] = v;
                    }
                }
                block_perm.extend(order.iter().map(|&i| range.start + i));
            }
            None => {
                special = false;
                for c in coords.clone() {
                    block_lin[c][c] = 1;
                }
                block_perm.extend(range.clone());
            }
        }
    }

    // compose: total linear = block_lin * lin, total shift = block_lin * shift
    let total_lin: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| block_lin[i][k] * lin[k][j]).sum::<i64>())
                .collect()
        })
        .collect();
    let total_shift: Vec<i64> = (0..n)
        .map(|i| (0..n).map(|k| block_lin[i][k] * shift[k]).sum::<i64>())
        .collect();
    let final_perm: Vec<usize> = block_perm.iter().map(|&i| perm[i]).collect();

    let lin_mat = IntMat::from_rows(&total_lin);
    let inverse_num: Vec<Vec<i64>> = {
        let inv = lin_mat.unimodular_inverse();
        (0..n).map(|i| (0..n).map(|j| i64::try_from(&inv[(i, j)]).unwrap()).collect()).collect()
    };

    let transform = AffineTransform {
        permutation: final_perm,
        linear_num: total_lin,
        linear_den: 1,
        offset: total_shift,
        inverse_num,
        monomial_shift: shift,
    };
    let new_config = transform.apply(config)?;

    if special {
        debug_assert!(is_special_orthogonal_form(&new_config).is_some());
    }
    Ok(OrthogonalForm { config: new_config, transform, m1, m2, special })
}

/// For the block points (in block coordinates), find a unimodular matrix `u`
/// and an ordering such that all but one point map to `-p_i e_i` and the
/// remaining point maps into the open positive orthant. The block of a
/// simplex circuit with `m_k = 0` is the single origin point.
fn special_block_basis(pts: &[Vec<i64>]) -> Option<(Vec<Vec<i64>>, Vec<usize>)> {
    let m = pts.first().map_or(0, |p| p.len());
    if m == 0 {
        // one point, zero coordinates
        return Some((Vec::new(), vec![0]));
    }
    let count = pts.len();
    debug_assert_eq!(count, m + 1);
    for excluded in 0..count {
        let axis_pts: Vec<usize> = (0..count).filter(|&i| i != excluded).collect();
        let contents: Vec<i64> = axis_pts
            .iter()
            .map(|&i| pts[i].iter().fold(0i64, |g, &x| g.gcd(&x)))
            .collect();
        if contents.iter().any(|&g| g == 0) {
            continue;
        }
        // primitive directions as columns
        let mut prim = IntMat::zero(m, m);
        for (j, &i) in axis_pts.iter().enumerate() {
            for r in 0..m {
                prim[(r, j)] = BigInt::from(pts[i][r] / contents[j]);
            }
        }
        if !prim.det().abs().is_one() {
            continue;
        }
        // u maps pts[axis_pts[j]] to -contents[j] * e_j
        let prim_inv = prim.unimodular_inverse();
        let u: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..m).map(|j| -i64::try_from(&prim_inv[(i, j)]).unwrap()).collect())
            .collect();
        let map = |p: &[i64]| -> Vec<i64> {
            (0..m).map(|i| (0..m).map(|j| u[i][j] * p[j]).sum()).collect()
        };
        let image = map(&pts[excluded]);
        if image.iter().all(|&x| x > 0) {
            let mut order = axis_pts;
            order.push(excluded);
            return Some((u, order));
        }
    }
    None
}

/// Structure report for a configuration already in special orthogonal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFormInfo {
    /// Coordinate split: first `m1` coordinates belong to block one.
    pub m1: usize,
    pub m2: usize,
    /// For each coordinate `i`, the index of the axis point `-p_i e_i`.
    pub axis_points: Vec<usize>,
    /// The axis multipliers `p_i > 0`.
    pub axis_scales: Vec<i64>,
    /// Indices of the two distinguished points with positive block entries
    /// (one per block; for `m_k = 0` the block point is the origin).
    pub positive_points: Vec<usize>,
    /// Index of the origin point when a block is trivial.
    pub origin_point: Option<usize>,
}

/// Checks the axis-point shape and returns its structure, or `None`.
pub fn is_special_orthogonal_form(config: &PointConfiguration) -> Option<SpecialFormInfo> {
    let profile = config.profile();
    if profile.is_degenerate() {
        return None;
    }
    let n = config.dim();
    let pos: Vec<usize> = (0..config.len()).filter(|&k| profile.signs[k] > 0).collect();
    let neg: Vec<usize> = (0..config.len()).filter(|&k| profile.signs[k] < 0).collect();
    let m1 = pos.len() - 1;
    let m2 = neg.len() - 1;
    if m1 + m2 != n {
        return None;
    }

    // block one occupies the first m1 coordinates, block two the rest
    let supported_on = |p: &[i64], lo: usize, hi: usize| {
        p.iter().enumerate().all(|(i, &x)| (lo <= i && i < hi) || x == 0)
    };
    let mut axis_points = vec![usize::MAX; n];
    let mut axis_scales = vec![0i64; n];
    let mut positive_points = Vec::new();
    let mut origin_point = None;

    for (class, lo, hi) in [(&pos, 0usize, m1), (&neg, m1, n)] {
        let mut seen_positive = None;
        if hi == lo {
            // trivial block: the single point must be the origin
            if class.len() != 1 || !config.point(class[0]).iter().all(|&x| x == 0) {
                return None;
            }
            origin_point = Some(class[0]);
            continue;
        }
        for &k in class.iter() {
            let p = config.point(k);
            if !supported_on(p, lo, hi) {
                return None;
            }
            let nonzero: Vec<usize> = (lo..hi).filter(|&i| p[i] != 0).collect();
            if nonzero.len() == 1 && p[nonzero[0]] < 0 {
                let i = nonzero[0];
                if axis_points[i] != usize::MAX {
                    return None;
                }
                axis_points[i] = k;
                axis_scales[i] = -p[i];
            } else if (lo..hi).all(|i| p[i] > 0) {
                if seen_positive.is_some() {
                    return None;
                }
                seen_positive = Some(k);
            } else {
                return None;
            }
        }
        positive_points.push(seen_positive?);
    }
    if axis_points.iter().any(|&k| k == usize::MAX) {
        return None;
    }
    Some(SpecialFormInfo { m1, m2, axis_points, axis_scales, positive_points, origin_point })
}
