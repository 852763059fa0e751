//! Seeded random instances: circuits, coefficient vectors, unimodular
//! transforms and trinomial-pair systems. Used by the randomized campaigns
//! of the CLI and by the test suites; all draws are deterministic given the
//! RNG state.

use crate::geometry::{AffineTransform, CircuitKind, PointConfiguration};
use crate::system::CircuitSystem;
use crate::TAU;
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;

/// Coefficients with moduli log-uniform in `[1/8, 8]` and uniform arguments.
pub fn random_coeffs<R: Rng>(rng: &mut R, count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|_| {
            let e: f64 = rng.gen_range(-3.0..3.0);
            Complex64::from_polar(2f64.powf(e), rng.gen_range(0.0..TAU))
        })
        .collect()
}

/// Real nonzero coefficients with the same modulus law and random signs.
pub fn random_real_coeffs<R: Rng>(rng: &mut R, count: usize) -> Vec<Complex64> {
    (0..count)
        .map(|_| {
            let e: f64 = rng.gen_range(-3.0..3.0);
            let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            Complex64::new(sign * 2f64.powf(e), 0.0)
        })
        .collect()
}

/// A nondegenerate circuit in the given dimension with coordinates bounded
/// by `max_coord`, optionally capped in normalized volume.
pub fn random_circuit<R: Rng>(
    rng: &mut R,
    dim: usize,
    max_coord: i64,
    max_volume: Option<i64>,
) -> PointConfiguration {
    loop {
        let points: Vec<Vec<i64>> = (0..dim + 2)
            .map(|_| (0..dim).map(|_| rng.gen_range(-max_coord..=max_coord)).collect())
            .collect();
        let Ok(config) = PointConfiguration::validate(points) else { continue };
        let profile = config.profile();
        if profile.is_degenerate() {
            continue;
        }
        if let Some(cap) = max_volume {
            if profile.total_volume > cap {
                continue;
            }
        }
        return config;
    }
}

/// A nondegenerate planar circuit.
pub fn random_planar_circuit<R: Rng>(rng: &mut R, max_coord: i64) -> PointConfiguration {
    random_circuit(rng, 2, max_coord, None)
}

/// A planar simplex circuit (triangle with an interior point), volume-capped.
pub fn random_simplex_circuit<R: Rng>(rng: &mut R, max_coord: i64, max_volume: i64) -> PointConfiguration {
    loop {
        let config = random_circuit(rng, 2, max_coord, Some(max_volume));
        if config.profile().kind == CircuitKind::SimplexCircuit {
            return config;
        }
    }
}

/// A lattice-normalized planar simplex circuit in special orthogonal form:
/// axis points `-p_i e_i`, a positive point `q`, and the origin interior.
pub fn random_special_form_simplex<R: Rng>(rng: &mut R, max_scale: i64) -> PointConfiguration {
    loop {
        let p1 = rng.gen_range(1..=max_scale);
        let p2 = rng.gen_range(1..=max_scale);
        let q1 = rng.gen_range(1..=max_scale);
        let q2 = rng.gen_range(1..=max_scale);
        let points = vec![vec![-p1, 0], vec![0, -p2], vec![q1, q2], vec![0, 0]];
        let Ok(config) = PointConfiguration::validate(points) else { continue };
        let profile = config.profile();
        if profile.is_degenerate() || profile.lattice_index != 1 {
            continue;
        }
        if crate::geometry::transform::is_special_orthogonal_form(&config).is_none() {
            continue;
        }
        return config;
    }
}

/// A random unimodular affine transform with permutation, built from integer
/// shears, axis swaps, sign pairs and a bounded translation.
pub fn random_unimodular_transform<R: Rng>(rng: &mut R, dim: usize, len: usize) -> AffineTransform {
    let mut lin: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
        .collect();
    let ops = rng.gen_range(3..10);
    for _ in 0..ops {
        match rng.gen_range(0..3) {
            0 => {
                // shear row i += c * row j
                let i = rng.gen_range(0..dim);
                let mut j = rng.gen_range(0..dim);
                if dim > 1 {
                    while j == i {
                        j = rng.gen_range(0..dim);
                    }
                    let c = rng.gen_range(-2..=2i64);
                    for k in 0..dim {
                        lin[i][k] += c * lin[j][k];
                    }
                }
            }
            1 => {
                let i = rng.gen_range(0..dim);
                let j = rng.gen_range(0..dim);
                lin.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..dim);
                for k in 0..dim {
                    lin[i][k] = -lin[i][k];
                }
            }
        }
    }
    let offset: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
    let mut permutation: Vec<usize> = (0..len).collect();
    permutation.shuffle(rng);
    // the inverse of a unimodular integer matrix is integral
    let mat = crate::geometry::matrix::IntMat::from_rows(&lin);
    let inv = mat.unimodular_inverse();
    let inverse_num: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| i64::try_from(&inv[(i, j)]).unwrap()).collect())
        .collect();
    AffineTransform {
        permutation,
        linear_num: lin,
        linear_den: 1,
        offset,
        inverse_num,
        monomial_shift: vec![0; dim],
    }
}

/// A random trinomial-pair system on a simplex circuit with `Vol <= max_vol`.
/// The private monomials are two triangle vertices and the shared pair is
/// the third vertex plus the interior point, so the interior-line hypothesis
/// holds by construction. Real coefficient draws when `real` is set.
pub fn random_simplex_system<R: Rng>(
    rng: &mut R,
    max_vol: i64,
    real: bool,
) -> CircuitSystem {
    loop {
        let config = random_simplex_circuit(rng, 3, max_vol);
        let profile = config.profile();
        let interior = profile.interior_index.expect("simplex circuit");
        let vertices: Vec<usize> = (0..4).filter(|&k| k != interior).collect();
        // a_0, a_1 privates; a_2 the remaining vertex; a_3 the interior point
        let support = vec![
            config.point(vertices[0]).to_vec(),
            config.point(vertices[1]).to_vec(),
            config.point(vertices[2]).to_vec(),
            config.point(interior).to_vec(),
        ];
        let cs = if real { random_real_coeffs(rng, 4) } else { random_coeffs(rng, 4) };
        match CircuitSystem::new(support, cs[0], cs[1], cs[2], cs[3]) {
            Ok(system) if system.interior_line => return system,
            _ => continue,
        }
    }
}
