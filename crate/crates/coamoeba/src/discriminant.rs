//! The binomial A-discriminant of a circuit, discriminant-coamoeba
//! membership, and the classification of the space of coamoebas.
//!
//! For a circuit with primitive Gale vector `b` the discriminant is the
//! binomial
//!
//! ```text
//! D(f) = prod_{d_k=+1} b_k^{b_k} prod_{d_k=-1} f_k^{-b_k}
//!      - prod_{d_k=-1} b_k^{-b_k} prod_{d_k=+1} f_k^{b_k}
//! ```
//!
//! Membership of `Arg f` in the discriminant coamoeba is decided exactly by
//! a phase congruence system (argument-side Horn-Kapranov parametrization):
//! `phi + arg f_k + <a_k, theta> = arg d_k (mod 2 pi)` must be solvable. The
//! complement of the closed coamoeba of `f` then has `Vol(A)` components
//! (class U0) or `Vol(A) - 1` (class U1); the split is decided by the vertex
//! or simplex theorem, the latter through an exact positive-ray test.

use crate::error::CoamoebaError;
use crate::geometry::{
    solve_congruences, CircuitKind, CongruenceSolutions, CongruenceSystem, PointConfiguration,
};
use crate::numeric::principal_arg;
use crate::{Result, TAU};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// The two monomials of the circuit discriminant, with exact constants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircuitDiscriminant {
    /// `(coefficient index, exponent)` pairs of the first monomial: the
    /// negative sign class with exponents `-b_k > 0`.
    pub plus_exponents: Vec<(usize, i64)>,
    /// `(coefficient index, exponent)` pairs of the second monomial: the
    /// positive sign class with exponents `b_k > 0`.
    pub minus_exponents: Vec<(usize, i64)>,
    /// `prod_{d_k=+1} b_k^{b_k}` (positive).
    pub constant_plus: BigInt,
    /// `prod_{d_k=-1} b_k^{-b_k}` (sign `(-1)^Vol` for simplex circuits).
    pub constant_minus: BigInt,
    /// Primitive Gale vector used for the reduced form.
    pub gale: Vec<i64>,
}

impl CircuitDiscriminant {
    /// Evaluates the binomial at a coefficient vector.
    pub fn eval(&self, coeffs: &[Complex64]) -> Complex64 {
        let mono = |pairs: &[(usize, i64)]| -> Complex64 {
            pairs.iter().map(|&(k, e)| coeffs[k].powi(e as i32)).product()
        };
        big_to_f64(&self.constant_plus) * mono(&self.plus_exponents)
            - big_to_f64(&self.constant_minus) * mono(&self.minus_exponents)
    }

    /// The reduced form `D_B(xi) = c_plus - c_minus xi` with
    /// `xi = prod f_k^{b_k}`; returns `(c_plus, c_minus)`.
    pub fn reduced_form(&self) -> (BigInt, BigInt) {
        (self.constant_plus.clone(), self.constant_minus.clone())
    }

    /// Root of the reduced discriminant in the variable `xi`.
    pub fn reduced_root(&self) -> BigRational {
        BigRational::new(self.constant_plus.clone(), self.constant_minus.clone())
    }

    /// The reduced variable `xi = prod f_k^{b_k}` at a coefficient vector.
    pub fn reduced_variable(&self, coeffs: &[Complex64]) -> Complex64 {
        coeffs
            .iter()
            .zip(self.gale.iter())
            .map(|(c, &b)| c.powi(b as i32))
            .product()
    }
}

fn big_to_f64(b: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::NAN)
}

/// Builds the binomial discriminant from the circuit profile (primitive Gale
/// vector, per the relatively-prime-minors convention).
pub fn discriminant(config: &PointConfiguration) -> Result<CircuitDiscriminant> {
    let profile = config.profile();
    if profile.is_degenerate() {
        return Err(CoamoebaError::DegenerateCircuit("discriminant needs a nondegenerate circuit".into()));
    }
    let b = &profile.primitive_gale;
    let mut plus_exponents = Vec::new();
    let mut minus_exponents = Vec::new();
    let mut constant_plus = BigInt::one();
    let mut constant_minus = BigInt::one();
    for (k, &bk) in b.iter().enumerate() {
        if bk > 0 {
            minus_exponents.push((k, bk));
            constant_plus *= BigInt::from(bk).pow(bk as u32);
        } else {
            plus_exponents.push((k, -bk));
            constant_minus *= BigInt::from(bk).pow((-bk) as u32);
        }
    }
    Ok(CircuitDiscriminant {
        plus_exponents,
        minus_exponents,
        constant_plus,
        constant_minus,
        gale: b.clone(),
    })
}

/// Outcome of the discriminant-coamoeba membership test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscriminantMembership {
    pub inside: bool,
    /// A solution `(theta, phi)` of the phase system when inside.
    pub witness: Option<(Vec<f64>, f64)>,
    /// Residual of the scalar congruence cross-check (radians).
    pub scalar_residual: f64,
}

/// Does `Arg f` lie in the coamoeba of the discriminant?
///
/// Solves `phi + arg f_k + <a_k, theta> = arg d_k (mod 2 pi)` exactly; the
/// scalar test `<Arg f, b_raw> = pi sum_{d_k=-1} b_k (mod 2 pi gcd b_raw)` is
/// evaluated alongside as an independent route and must agree.
pub fn in_discriminant_coamoeba(
    config: &PointConfiguration,
    coeffs: &[Complex64],
) -> Result<DiscriminantMembership> {
    let profile = config.profile();
    if profile.is_degenerate() {
        return Err(CoamoebaError::DegenerateCircuit("membership needs a nondegenerate circuit".into()));
    }
    let n = config.dim();
    let rows: Vec<Vec<i64>> = config.points().iter().map(|p| p.to_vec()).collect();
    let rhs: Vec<f64> = (0..config.len())
        .map(|k| {
            let target = if profile.signs[k] > 0 { 0.0 } else { PI };
            target - principal_arg(coeffs[k])
        })
        .collect();
    let system = CongruenceSystem { rows, rhs }.with_phase_column();
    let solutions = solve_congruences(&system, 1e-9);

    // scalar route with the raw Gale vector
    let raw = &profile.raw_gale;
    let g = profile.lattice_index;
    let lhs: f64 = coeffs
        .iter()
        .zip(raw.iter())
        .map(|(c, &bk)| principal_arg(*c) * bk as f64)
        .sum();
    let target: f64 = PI * raw.iter().filter(|&&bk| bk < 0).sum::<i64>() as f64;
    let modulus = TAU * g as f64;
    let r = (lhs - target).rem_euclid(modulus);
    let scalar_residual = r.min(modulus - r);
    let scalar_inside = scalar_residual < 1e-9;

    let (inside, witness) = match solutions {
        CongruenceSolutions::Empty => (false, None),
        CongruenceSolutions::Finite(sols) => {
            let first = &sols[0];
            (true, Some((first[..n].to_vec(), first[n])))
        }
        CongruenceSolutions::Coset { particular, .. } => {
            (true, Some((particular[..n].to_vec(), particular[n])))
        }
    };
    debug_assert_eq!(inside, scalar_inside, "congruence and scalar membership disagree");
    Ok(DiscriminantMembership { inside, witness, scalar_residual })
}

/// U0: the complement of the closed coamoeba has `Vol(A)` components;
/// U1: one fewer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceClassKind {
    U0,
    U1,
}

/// Why a coefficient vector received its class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Certificate {
    /// `Arg f` is off the discriminant coamoeba.
    OffDiscriminantCoamoeba,
    /// Vertex circuit on the discriminant coamoeba: always U1.
    VertexOnDiscriminant,
    /// Simplex circuit on the discriminant coamoeba, decided by the exact
    /// positive-ray test at the witness argument.
    TestPoint {
        /// Whether the test point lies in the closed coamoeba (then U1).
        in_closed_coamoeba: bool,
        /// Exact tie of the ray comparison (discriminant locus).
        boundary: bool,
        /// Sign of `(-1)^Vol D(delta |f|)`, the calibrated closed form.
        closed_form_sign: i8,
    },
}

/// Classification result with its certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceClass {
    pub class: SpaceClassKind,
    pub certificate: Certificate,
    pub witness: Option<Vec<f64>>,
}

/// Classifies the coamoeba space location of `f` for univariate or planar
/// circuits.
pub fn classify_space(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<SpaceClass> {
    let profile = config.profile();
    if profile.is_degenerate() {
        return Err(CoamoebaError::DegenerateCircuit("classification needs a nondegenerate circuit".into()));
    }
    if config.dim() > 2 {
        return Err(CoamoebaError::InvalidInput(
            "space classification is implemented for univariate and planar circuits".into(),
        ));
    }
    if coeffs.len() != config.len() {
        return Err(CoamoebaError::InvalidInput("coefficient count mismatch".into()));
    }
    if coeffs.iter().any(|c| !c.is_finite() || c.norm() == 0.0) {
        return Err(CoamoebaError::NumericallyIndeterminate(
            "coefficients must be finite and nonzero".into(),
        ));
    }

    let membership = in_discriminant_coamoeba(config, coeffs)?;
    if !membership.inside {
        return Ok(SpaceClass {
            class: SpaceClassKind::U0,
            certificate: Certificate::OffDiscriminantCoamoeba,
            witness: None,
        });
    }
    let witness = membership.witness.as_ref().map(|(theta, _)| theta.clone());

    match profile.kind {
        CircuitKind::VertexCircuit => Ok(SpaceClass {
            class: SpaceClassKind::U1,
            certificate: Certificate::VertexOnDiscriminant,
            witness,
        }),
        CircuitKind::SimplexCircuit => {
            let interior = profile.interior_index.expect("simplex circuit has an interior point");
            // exact positive-ray test: after rotating f so that
            // f-hat(theta*) = delta, the restriction to the ray is
            // sum_{k != int} |f_k| r^{a_k} - |f_int| r^{a_int}; it has a
            // positive zero iff T1 >= T2 in exact rational arithmetic, where
            //   T1 = prod_+ b_k^{b_k} |f_int|^Vol,
            //   T2 = Vol^Vol prod_+ |f_k|^{b_k}.
            let b = &profile.primitive_gale;
            let vol: i64 = b.iter().filter(|&&x| x > 0).sum();
            let rat = |x: f64| -> Result<BigRational> {
                BigRational::from_float(x).ok_or_else(|| {
                    CoamoebaError::NumericallyIndeterminate("modulus is not finite".into())
                })
            };
            let mut t1 = BigRational::from_integer(BigInt::one());
            let mut t2 = BigRational::from_integer(BigInt::from(vol).pow(vol as u32));
            for (k, &bk) in b.iter().enumerate() {
                let m = rat(coeffs[k].norm())?;
                if k == interior {
                    t1 *= m.pow(vol as i32);
                } else {
                    t1 *= BigRational::from_integer(BigInt::from(bk).pow(bk as u32));
                    t2 *= m.pow(bk as i32);
                }
            }
            let gap = &t1 - &t2;
            let boundary = gap.is_zero();
            let in_closed = !gap.is_negative();
            Ok(SpaceClass {
                class: if in_closed { SpaceClassKind::U1 } else { SpaceClassKind::U0 },
                certificate: Certificate::TestPoint {
                    in_closed_coamoeba: in_closed,
                    boundary,
                    closed_form_sign: if boundary {
                        0
                    } else if gap.is_positive() {
                        1
                    } else {
                        -1
                    },
                },
                witness,
            })
        }
        CircuitKind::Degenerate => unreachable!("rejected above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn quadratic() -> PointConfiguration {
        PointConfiguration::validate(vec![vec![0], vec![1], vec![2]]).unwrap()
    }

    fn hypocycloid() -> PointConfiguration {
        PointConfiguration::validate(vec![vec![0, 0], vec![3, 0], vec![0, 3], vec![1, 1]]).unwrap()
    }

    fn vertex_family() -> PointConfiguration {
        PointConfiguration::validate(vec![vec![0, 0], vec![1, 0], vec![0, 3], vec![3, 1]]).unwrap()
    }

    #[test]
    fn quadratic_discriminant_is_classical() {
        let d = discriminant(&quadratic()).unwrap();
        // f_1^2 - 4 f_0 f_2 and reduced form 1 - 4 xi
        assert_eq!(d.constant_plus, BigInt::one());
        assert_eq!(d.constant_minus, BigInt::from(4));
        assert_eq!(d.plus_exponents, vec![(1, 2)]);
        assert_eq!(d.minus_exponents, vec![(0, 1), (2, 1)]);
        assert_eq!(d.reduced_root(), BigRational::new(BigInt::one(), BigInt::from(4)));
        // evaluation: f = (1, 1, 1) gives 1 - 4 = -3
        let v = d.eval(&[c(1., 0.), c(1., 0.), c(1., 0.)]);
        assert!((v - c(-3.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn discriminant_vanishes_at_double_root() {
        // 1 + z + z^2/4 = (1 + z/2)^2
        let d = discriminant(&quadratic()).unwrap();
        let v = d.eval(&[c(1., 0.), c(1., 0.), c(0.25, 0.)]);
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn discriminant_homogeneity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let config = hypocycloid();
        let d = discriminant(&config).unwrap();
        for _ in 0..20 {
            let coeffs: Vec<Complex64> = (0..4)
                .map(|_| Complex64::from_polar(rng.gen_range(0.3..3.0), rng.gen_range(0.0..TAU)))
                .collect();
            let base = d.eval(&coeffs);
            // scalar torus action f_k -> lambda f_k is homogeneous of degree Vol
            let lambda = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..TAU));
            let scaled: Vec<Complex64> = coeffs.iter().map(|f| f * lambda).collect();
            let vol: i64 = d.gale.iter().filter(|&&x| x > 0).sum();
            let expected = base * lambda.powi(vol as i32);
            assert!((d.eval(&scaled) - expected).norm() < 1e-9 * expected.norm().max(1.0));
            // coordinate actions f_k -> mu^{a_k[i]} f_k are homogeneities too
            for i in 0..2 {
                let mu = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..TAU));
                let acted: Vec<Complex64> = coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, f)| f * mu.powi(config.point(k)[i] as i32))
                    .collect();
                let degree: i64 = d
                    .gale
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| b > 0)
                    .map(|(k, &b)| b * config.point(k)[i])
                    .sum();
                let expected = base * mu.powi(degree as i32);
                assert!((d.eval(&acted) - expected).norm() < 1e-9 * expected.norm().max(1.0));
            }
        }
    }

    #[test]
    fn quadratic_membership_on_positive_reals() {
        let config = quadratic();
        // xi real positive: inside (arg xi = 0)
        let m = in_discriminant_coamoeba(&config, &[c(1., 0.), c(1., 0.), c(0.7, 0.)]).unwrap();
        assert!(m.inside);
        // witness solves the phase alignment
        let (theta, phi) = m.witness.unwrap();
        let profile = config.profile();
        for (k, p) in config.points().iter().enumerate() {
            let angle = phi + p[0] as f64 * theta[0];
            let expected = if profile.signs[k] > 0 { 0.0 } else { PI };
            let r = (angle - expected).rem_euclid(TAU);
            assert!(r < 1e-8 || TAU - r < 1e-8);
        }
        // off the ray
        let m = in_discriminant_coamoeba(&config, &[c(1., 0.), c(1., 0.), c(0.7, 0.1)]).unwrap();
        assert!(!m.inside);
    }

    #[test]
    fn hypocycloid_membership_rays() {
        let config = hypocycloid();
        for (arg, expect) in [
            (PI, true),
            (PI / 3.0, true),
            (-PI / 3.0, true),
            (0.0, false),
            (PI / 3.0 + 1e-5, false),
            (2.0, false),
        ] {
            let coeffs = [c(1., 0.), c(1., 0.), c(1., 0.), Complex64::from_polar(1.3, arg)];
            let m = in_discriminant_coamoeba(&config, &coeffs).unwrap();
            assert_eq!(m.inside, expect, "arg {arg}");
        }
    }

    #[test]
    fn vertex_membership_rays() {
        let config = vertex_family();
        for (arg, expect) in [
            (0.0, true),
            (2.0 * PI / 3.0, true),
            (-2.0 * PI / 3.0, true),
            (0.2, false),
            (PI, false),
        ] {
            let coeffs = [c(1., 0.), c(1., 0.), c(1., 0.), Complex64::from_polar(0.8, arg)];
            let m = in_discriminant_coamoeba(&config, &coeffs).unwrap();
            assert_eq!(m.inside, expect, "arg {arg}");
        }
    }

    #[test]
    fn classify_quadratic_family() {
        let config = quadratic();
        // xi = 1/8: both roots negative real, complement has one arc: U1
        let s = classify_space(&config, &[c(1., 0.), c(1., 0.), c(0.125, 0.)]).unwrap();
        assert_eq!(s.class, SpaceClassKind::U1);
        // xi = 1/4: double root, still U1 (boundary)
        let s = classify_space(&config, &[c(1., 0.), c(1., 0.), c(0.25, 0.)]).unwrap();
        assert_eq!(s.class, SpaceClassKind::U1);
        match s.certificate {
            Certificate::TestPoint { boundary, .. } => assert!(boundary),
            ref other => panic!("unexpected certificate {other:?}"),
        }
        // xi = 1: distinct unit-circle roots: U0 despite being on the ray
        let s = classify_space(&config, &[c(1., 0.), c(1., 0.), c(1., 0.)]).unwrap();
        assert_eq!(s.class, SpaceClassKind::U0);
        match s.certificate {
            Certificate::TestPoint { in_closed_coamoeba, .. } => assert!(!in_closed_coamoeba),
            ref other => panic!("unexpected certificate {other:?}"),
        }
        // xi off the ray: U0 with the off-discriminant certificate
        let s = classify_space(&config, &[c(1., 0.), c(1., 0.), c(0.1, 0.05)]).unwrap();
        assert_eq!(s.class, SpaceClassKind::U0);
        assert_eq!(s.certificate, Certificate::OffDiscriminantCoamoeba);
    }

    #[test]
    fn classify_vertex_family() {
        let config = vertex_family();
        let s = classify_space(
            &config,
            &[c(1., 0.), c(1., 0.), c(1., 0.), Complex64::from_polar(1.0, 0.2)],
        )
        .unwrap();
        assert_eq!(s.class, SpaceClassKind::U0);
        assert_eq!(s.certificate, Certificate::OffDiscriminantCoamoeba);
        let s = classify_space(&config, &[c(1., 0.), c(1., 0.), c(1., 0.), c(2.0, 0.)]).unwrap();
        assert_eq!(s.class, SpaceClassKind::U1);
        assert_eq!(s.certificate, Certificate::VertexOnDiscriminant);
        assert!(s.witness.is_some());
    }

    #[test]
    fn classify_quadratic_agrees_with_root_arguments() {
        // oracle: count distinct root arguments of 1 + z + xi z^2
        let config = quadratic();
        for &modulus in &[0.125, 0.25, 0.5, 1.0, 4.0] {
            for &arg in &[0.0, PI / 3.0, -PI / 3.0, 2.0 * PI / 3.0, -2.0 * PI / 3.0, PI] {
                let xi = Complex64::from_polar(modulus, arg);
                let class = classify_space(&config, &[c(1., 0.), c(1., 0.), xi]).unwrap().class;
                let poly = crate::numeric::UnivariatePoly::new(vec![c(1., 0.), c(1., 0.), xi], 0);
                let roots = poly.roots().unwrap();
                let args: Vec<f64> = roots.iter().map(|z| z.arg().rem_euclid(TAU)).collect();
                let distinct = {
                    let d = (args[0] - args[1]).rem_euclid(TAU);
                    let d = d.min(TAU - d);
                    if d < 1e-9 {
                        1
                    } else {
                        2
                    }
                };
                let expected = if distinct == 1 { SpaceClassKind::U1 } else { SpaceClassKind::U0 };
                assert_eq!(class, expected, "xi = {xi}");
            }
        }
    }

    #[test]
    fn u1_implies_membership() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(33);
        let config = hypocycloid();
        let mut u1_seen = 0;
        for trial in 0..200 {
            // half the draws aligned to the discriminant rays
            let arg = if trial % 2 == 0 {
                [PI, PI / 3.0, -PI / 3.0][trial % 3]
            } else {
                rng.gen_range(0.0..TAU)
            };
            let coeffs = [
                c(1., 0.),
                c(1., 0.),
                c(1., 0.),
                Complex64::from_polar(rng.gen_range(0.2..5.0), arg),
            ];
            let s = classify_space(&config, &coeffs).unwrap();
            if s.class == SpaceClassKind::U1 {
                u1_seen += 1;
                assert!(in_discriminant_coamoeba(&config, &coeffs).unwrap().inside);
            }
        }
        assert!(u1_seen > 0);
    }
}
