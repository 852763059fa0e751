//! Rasterization of planar coamoebas and lopsided coamoebas on the torus,
//! area estimation, and the covering structure of trinomial quadruples.
//!
//! Coamoebas are rasterized by pushforward: fibers of both coordinate
//! projections are solved and the argument pairs of the roots are binned
//! into pixels. Lopsided coamoebas use the exact per-pixel-center
//! colopsidedness test, so their only error is pixelation.

use crate::error::CoamoebaError;
use crate::geometry::PointConfiguration;
use crate::numeric::{curve_sample, BivariatePoly, CurveGrid};
use crate::phase::{colopsided_at, has_antipodal_pair, phase_vector, truncation};
use crate::{Result, TAU};
use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Bit grid over the torus `[0, 2pi)^2` at `resolution` pixels per axis.
#[derive(Debug, Clone, PartialEq)]
pub struct RasterImage {
    resolution: usize,
    bits: Vec<u64>,
}

impl RasterImage {
    pub fn new(resolution: usize) -> Self {
        let words = (resolution * resolution).div_ceil(64);
        RasterImage { resolution, bits: vec![0; words] }
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    #[inline]
    fn index(&self, x: usize, y: usize) -> usize {
        y * self.resolution + x
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize) {
        let i = self.index(x, y);
        self.bits[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        let i = self.index(x, y);
        self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    /// Bins a torus point into its pixel.
    pub fn mark(&mut self, theta: [f64; 2]) {
        let scale = self.resolution as f64 / TAU;
        let x = ((theta[0].rem_euclid(TAU)) * scale) as usize % self.resolution;
        let y = ((theta[1].rem_euclid(TAU)) * scale) as usize % self.resolution;
        self.set(x, y);
    }

    pub fn covered_pixels(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn pixel_area(&self) -> f64 {
        (TAU / self.resolution as f64).powi(2)
    }

    /// Covered-pixel count times pixel area.
    pub fn area(&self) -> f64 {
        self.covered_pixels() as f64 * self.pixel_area()
    }

    pub fn covered_fraction(&self) -> f64 {
        self.covered_pixels() as f64 / (self.resolution * self.resolution) as f64
    }

    /// Number of connected components of the uncovered set, with torus
    /// wraparound and 4-connectivity.
    pub fn complement_components(&self) -> usize {
        self.complement_component_sizes().len()
    }

    /// Pixel counts of the uncovered components (torus wraparound,
    /// 4-connectivity), descending.
    pub fn complement_component_sizes(&self) -> Vec<usize> {
        let r = self.resolution;
        let mut seen = vec![false; r * r];
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for start in 0..r * r {
            if seen[start] || self.bits[start / 64] & (1 << (start % 64)) != 0 {
                continue;
            }
            let mut size = 0usize;
            seen[start] = true;
            stack.push(start);
            while let Some(i) = stack.pop() {
                size += 1;
                let (x, y) = (i % r, i / r);
                for (nx, ny) in [
                    ((x + 1) % r, y),
                    ((x + r - 1) % r, y),
                    (x, (y + 1) % r),
                    (x, (y + r - 1) % r),
                ] {
                    let j = ny * r + nx;
                    if !seen[j] && self.bits[j / 64] & (1 << (j % 64)) == 0 {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    pub fn union(&mut self, other: &RasterImage) {
        assert_eq!(self.resolution, other.resolution);
        for (a, b) in self.bits.iter_mut().zip(other.bits.iter()) {
            *a |= b;
        }
    }
}

/// Builds the polynomial of a planar support/coefficient pair.
pub fn to_bivariate(support: &[Vec<i64>], coeffs: &[Complex64]) -> BivariatePoly {
    BivariatePoly::new(
        support
            .iter()
            .zip(coeffs.iter())
            .map(|(p, &c)| ((p[0], p[1]), c))
            .collect(),
    )
}

/// Pushforward rasterization of the coamoeba at `resolution` pixels per
/// `2 pi`. Fiber grid density is tied to the resolution (at least eight
/// angular samples per pixel edge).
pub fn raster_coamoeba(
    config: &PointConfiguration,
    coeffs: &[Complex64],
    resolution: usize,
) -> Result<RasterImage> {
    raster_coamoeba_of_support(config.points(), coeffs, resolution)
}

/// Support-level entry point (also used for trinomials and system members).
pub fn raster_coamoeba_of_support(
    support: &[Vec<i64>],
    coeffs: &[Complex64],
    resolution: usize,
) -> Result<RasterImage> {
    if support.first().map_or(0, |p| p.len()) != 2 {
        return Err(CoamoebaError::InvalidInput("rasterization is planar only".into()));
    }
    let poly = to_bivariate(support, coeffs);
    let grid = CurveGrid {
        angular: resolution * 8,
        radial: 96,
        log_radius: 8.0,
        refine_tol: 0.75 * TAU / resolution as f64,
        max_depth: 16,
    };
    let samples = curve_sample(&poly, &grid)?;
    let mut image = RasterImage::new(resolution);
    for p in samples.points {
        image.mark(p);
    }
    Ok(image)
}

/// Exact per-pixel-center rasterization of the lopsided coamoeba.
pub fn raster_lopsided(
    config: &PointConfiguration,
    coeffs: &[Complex64],
    resolution: usize,
) -> Result<RasterImage> {
    raster_lopsided_of_support(config.points(), coeffs, resolution)
}

/// Support-level lopsided rasterization.
pub fn raster_lopsided_of_support(
    support: &[Vec<i64>],
    coeffs: &[Complex64],
    resolution: usize,
) -> Result<RasterImage> {
    if support.first().map_or(0, |p| p.len()) != 2 {
        return Err(CoamoebaError::InvalidInput("rasterization is planar only".into()));
    }
    let step = TAU / resolution as f64;
    let rows: Vec<Vec<usize>> = (0..resolution)
        .into_par_iter()
        .map(|y| {
            let theta2 = (y as f64 + 0.5) * step;
            (0..resolution)
                .filter(|&x| {
                    let theta1 = (x as f64 + 0.5) * step;
                    !colopsided_at(support, coeffs, &[theta1, theta2]).is_colopsided()
                })
                .collect()
        })
        .collect();
    let mut image = RasterImage::new(resolution);
    for (y, xs) in rows.into_iter().enumerate() {
        for x in xs {
            image.set(x, y);
        }
    }
    Ok(image)
}

/// Coamoeba raster together with its exact shell lines. The closed coamoeba
/// contains the shell, and painting the lines pins down cell boundaries for
/// component counting.
pub fn raster_closed_coamoeba(
    config: &PointConfiguration,
    coeffs: &[Complex64],
    resolution: usize,
) -> Result<RasterImage> {
    let mut image = raster_coamoeba(config, coeffs, resolution)?;
    let families = crate::phase::shell(config, coeffs)?;
    let mut lines = RasterImage::new(resolution);
    for family in &families {
        let [n1, n2] = family.normal;
        let norm_sq = (n1 * n1 + n2 * n2) as f64;
        for &offset in &family.offsets {
            // closed geodesic theta(t) = base + t (-n2, n1), t in [0, 2 pi)
            let base = [offset * n1 as f64 / norm_sq, offset * n2 as f64 / norm_sq];
            let steps = resolution * 2 * ((n1.abs() + n2.abs()).max(1) as usize);
            for t in 0..steps {
                let s = TAU * t as f64 / steps as f64;
                lines.mark([base[0] - s * n2 as f64, base[1] + s * n1 as f64]);
            }
        }
    }
    image.union(&lines);
    Ok(image)
}

/// A bivariate trinomial with a marked monomial and its four sign-flip
/// variants (signs of the two unmarked monomials).
#[derive(Debug, Clone, PartialEq)]
pub struct TrinomialQuadruple {
    pub support: Vec<Vec<i64>>,
    pub coeffs: Vec<Complex64>,
    pub marked: usize,
}

impl TrinomialQuadruple {
    pub fn new(support: Vec<Vec<i64>>, coeffs: Vec<Complex64>, marked: usize) -> Result<Self> {
        if support.len() != 3 || coeffs.len() != 3 || marked > 2 {
            return Err(CoamoebaError::InvalidInput("quadruple needs a marked trinomial".into()));
        }
        Ok(TrinomialQuadruple { support, coeffs, marked })
    }

    /// The four members: sign patterns `(+,+), (+,-), (-,+), (-,-)` on the
    /// unmarked monomials.
    pub fn members(&self) -> [Vec<Complex64>; 4] {
        let unmarked: Vec<usize> = (0..3).filter(|&k| k != self.marked).collect();
        let mut out: [Vec<Complex64>; 4] = Default::default();
        for (m, out_m) in out.iter_mut().enumerate() {
            let mut cs = self.coeffs.clone();
            if m & 1 != 0 {
                cs[unmarked[0]] = -cs[unmarked[0]];
            }
            if m & 2 != 0 {
                cs[unmarked[1]] = -cs[unmarked[1]];
            }
            *out_m = cs;
        }
        out
    }

    /// Number of members whose closed coamoeba contains `theta`. Exact for
    /// trinomials: the closed coamoeba is where the largest phase gap is at
    /// most `pi` (boundary shell points included).
    pub fn covering_count(&self, theta: &[f64; 2]) -> usize {
        self.members()
            .iter()
            .filter(|cs| {
                crate::phase::max_phase_gap(&self.support, cs, theta)
                    <= std::f64::consts::PI + crate::ANGLE_TOL
            })
            .count()
    }

    /// Line families of the union shell of the four members.
    pub fn shell_arrangement(&self) -> Result<Vec<crate::phase::ShellLineFamily>> {
        let mut families = Vec::new();
        for member in self.members() {
            families.extend(crate::phase::shell::shell_of_support(&self.support, &member)?);
        }
        Ok(families)
    }
}

/// Distribution of covering counts over random samples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoveringStats {
    pub samples: usize,
    pub rejected_near_arrangement: usize,
    /// Histogram over counts `0..=4`.
    pub histogram: [usize; 5],
}

/// Samples the covering number of the quadruple union at `samples` uniform
/// points, skipping points within `margin` (radians, in the line functional)
/// of the arrangement `H`.
pub fn covering_check<R: Rng>(
    quadruple: &TrinomialQuadruple,
    samples: usize,
    margin: f64,
    rng: &mut R,
) -> Result<CoveringStats> {
    let arrangement = quadruple.shell_arrangement()?;
    let mut stats = CoveringStats { samples: 0, rejected_near_arrangement: 0, histogram: [0; 5] };
    let mut drawn = 0;
    while stats.samples < samples && drawn < samples * 20 {
        drawn += 1;
        let theta = [rng.gen_range(0.0..TAU), rng.gen_range(0.0..TAU)];
        if arrangement.iter().any(|f| f.functional_distance(&theta) < margin) {
            stats.rejected_near_arrangement += 1;
            continue;
        }
        let count = quadruple.covering_count(&theta);
        stats.histogram[count.min(4)] += 1;
        stats.samples += 1;
    }
    Ok(stats)
}

/// Counts of colopsided truncated trinomials at points of the lopsided
/// coamoeba.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoColopsidedStats {
    pub tested: usize,
    pub skipped_colopsided: usize,
    pub skipped_degenerate: usize,
    /// Histogram over counts `0..=4` of colopsided truncations.
    pub histogram: [usize; 5],
}

/// At random non-colopsided, nondegenerate points, counts how many of the
/// four truncated trinomials are colopsided (the lemma asserts exactly two).
pub fn two_colopsided_check<R: Rng>(
    config: &PointConfiguration,
    coeffs: &[Complex64],
    samples: usize,
    rng: &mut R,
) -> Result<TwoColopsidedStats> {
    if config.dim() != 2 {
        return Err(CoamoebaError::InvalidInput("planar circuits only".into()));
    }
    let support: Vec<Vec<i64>> = config.points().to_vec();
    let mut stats = TwoColopsidedStats {
        tested: 0,
        skipped_colopsided: 0,
        skipped_degenerate: 0,
        histogram: [0; 5],
    };
    let mut drawn = 0;
    while stats.tested < samples && drawn < samples * 50 {
        drawn += 1;
        let theta = [rng.gen_range(0.0..TAU), rng.gen_range(0.0..TAU)];
        let pv = phase_vector(&support, coeffs, &theta);
        if has_antipodal_pair(pv.angles(), 1e-6) {
            stats.skipped_degenerate += 1;
            continue;
        }
        if colopsided_at(&support, coeffs, &theta).is_colopsided() {
            stats.skipped_colopsided += 1;
            continue;
        }
        let count = (0..support.len())
            .filter(|&k| {
                let (sub_s, sub_c) = truncation(&support, coeffs, k);
                colopsided_at(&sub_s, &sub_c, &theta).is_colopsided()
            })
            .count();
        stats.histogram[count.min(4)] += 1;
        stats.tested += 1;
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg(points: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::validate(points.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn image_marking_and_area() {
        let mut img = RasterImage::new(8);
        assert_eq!(img.area(), 0.0);
        img.mark([0.1, 0.1]);
        img.mark([0.1, 0.1]);
        assert_eq!(img.covered_pixels(), 1);
        assert!((img.area() - (TAU / 8.0).powi(2)).abs() < 1e-12);
        let mut full = RasterImage::new(4);
        for x in 0..4 {
            for y in 0..4 {
                full.set(x, y);
            }
        }
        assert!((full.area() - TAU * TAU).abs() < 1e-12);
        assert_eq!(full.complement_components(), 0);
    }

    #[test]
    fn complement_components_wraparound() {
        // a covered vertical band leaves a single wrapped component
        let mut img = RasterImage::new(16);
        for y in 0..16 {
            img.set(7, y);
            img.set(8, y);
        }
        assert_eq!(img.complement_components(), 1);
        // adding a horizontal band still leaves one component on the torus
        for x in 0..16 {
            img.set(x, 3);
            img.set(x, 4);
        }
        assert_eq!(img.complement_components(), 1);
    }

    #[test]
    fn lopsided_trinomial_quarter_area() {
        let support = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        let img =
            raster_lopsided_of_support(&support, &[c(1., 0.), c(1., 0.), c(1., 0.)], 256).unwrap();
        let area = img.area();
        assert!((area - PI * PI).abs() < 0.01 * 4.0 * PI * PI, "area {area}");
    }

    #[test]
    fn lopsided_circuit_half_area() {
        use rand::Rng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for points in [
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 0], vec![3, 0], vec![0, 3], vec![1, 1]],
            vec![vec![0, 0], vec![2, 0], vec![0, 1], vec![1, 1]],
        ] {
            let config = PointConfiguration::validate(points).unwrap();
            let coeffs: Vec<Complex64> = (0..4)
                .map(|_| Complex64::from_polar(rng.gen_range(0.2..4.0), rng.gen_range(0.0..TAU)))
                .collect();
            let img = raster_lopsided(&config, &coeffs, 256).unwrap();
            let area = img.area();
            assert!(
                (area - 2.0 * PI * PI).abs() < 0.01 * 4.0 * PI * PI,
                "area {area} for {config:?}"
            );
        }
    }

    #[test]
    fn coamoeba_contained_in_lopsided() {
        let config = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let coeffs = [c(1., 0.), c(1., 0.), c(1., 0.), c(-1.5, 0.3)];
        let r = 128;
        let coam = raster_coamoeba(&config, &coeffs, r).unwrap();
        let lops = raster_lopsided(&config, &coeffs, r).unwrap();
        assert!(coam.area() <= lops.area() + 0.01 * 4.0 * PI * PI);
    }

    #[test]
    fn covering_is_once_generic() {
        let quadruple = TrinomialQuadruple::new(
            vec![vec![0, 0], vec![1, 0], vec![0, 1]],
            vec![c(1., 0.), c(0.8, 0.3), c(-0.4, 1.1)],
            0,
        )
        .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let stats = covering_check(&quadruple, 2000, 1e-6, &mut rng).unwrap();
        assert_eq!(stats.samples, 2000);
        assert_eq!(stats.histogram[1], 2000, "histogram {:?}", stats.histogram);
    }

    #[test]
    fn covering_higher_on_strata() {
        // members 1 +- z +- w with the constant marked
        let quadruple = TrinomialQuadruple::new(
            vec![vec![0, 0], vec![1, 0], vec![0, 1]],
            vec![c(1., 0.), c(1., 0.), c(1., 0.)],
            0,
        )
        .unwrap();
        // a generic point of the arrangement line theta_1 = 0 is covered twice
        assert_eq!(quadruple.covering_count(&[0.0, 1.1]), 2);
        // intersection points of distinct lines are covered three times
        assert_eq!(quadruple.covering_count(&[0.0, 0.0]), 3);
    }

    #[test]
    fn two_colopsided_on_the_square() {
        let config = cfg(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let coeffs = [c(1., 0.), c(1., 0.), c(1., 0.), c(-2.0, 0.)];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let stats = two_colopsided_check(&config, &coeffs, 500, &mut rng).unwrap();
        assert_eq!(stats.tested, 500);
        assert_eq!(stats.histogram[2], 500, "histogram {:?}", stats.histogram);
    }

    #[test]
    fn doubling_stability_on_trinomial() {
        let support = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        let coeffs = [c(1., 0.), c(1., 0.), c(1., 0.)];
        let a1 = raster_coamoeba_of_support(&support, &coeffs, 128).unwrap().area();
        let a2 = raster_coamoeba_of_support(&support, &coeffs, 256).unwrap().area();
        assert!((a1 - a2).abs() < 0.01 * 4.0 * PI * PI, "{a1} vs {a2}");
        assert!((a2 - PI * PI).abs() < 0.02 * 4.0 * PI * PI, "area {a2}");
    }
}
