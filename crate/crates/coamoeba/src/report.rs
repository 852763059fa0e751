//! JSON problem specifications and deterministic report generation for the
//! command-line front end.
//!
//! Every report embeds the tool version, the seed (when randomness is
//! involved), the tolerances in force and an echo of the input
//! configuration, and is byte-identical across runs for identical inputs.
//! Angles appear as multiples of pi alongside radians so exact fixtures
//! stay exact in the output.

use crate::discriminant::{classify_space, discriminant, in_discriminant_coamoeba, SpaceClassKind};
use crate::error::CoamoebaError;
use crate::geometry::PointConfiguration;
use crate::phase::{complement_index_set, shell};
use crate::raster::{covering_check, raster_coamoeba, raster_lopsided, TrinomialQuadruple};
use crate::system::{sector_census, solve_system, CircuitSystem};
use crate::Result;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::f64::consts::PI;

/// One complex number, either Cartesian or polar with the argument as a
/// multiple of pi (preferred for exactness).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffSpec {
    Cartesian { re: f64, im: f64 },
    Polar { modulus: f64, argument_over_pi: f64 },
}

impl CoeffSpec {
    pub fn to_complex(self) -> Complex64 {
        match self {
            CoeffSpec::Cartesian { re, im } => Complex64::new(re, im),
            CoeffSpec::Polar { modulus, argument_over_pi } => {
                Complex64::from_polar(modulus, argument_over_pi * PI)
            }
        }
    }
}

/// `{"points": [[..], ..]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigSpec {
    pub points: Vec<Vec<i64>>,
}

/// `{"coefficients": [..]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffsSpec {
    pub coefficients: Vec<CoeffSpec>,
}

/// Canonical system input: either the reduced trinomial pair (`f1..f4`) or
/// two dense coefficient vectors (`g1`, `g2`) to be reduced first.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemSpec {
    pub support: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f1: Option<CoeffSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f2: Option<CoeffSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f3: Option<CoeffSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f4: Option<CoeffSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g1: Option<Vec<CoeffSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g2: Option<Vec<CoeffSpec>>,
}

pub fn parse_config(text: &str) -> Result<PointConfiguration> {
    let spec: ConfigSpec = serde_json::from_str(text)
        .map_err(|e| CoamoebaError::InvalidInput(format!("config JSON: {e}")))?;
    PointConfiguration::validate(spec.points)
}

pub fn parse_coeffs(text: &str, expected: usize) -> Result<Vec<Complex64>> {
    let spec: CoeffsSpec = serde_json::from_str(text)
        .map_err(|e| CoamoebaError::InvalidInput(format!("coefficients JSON: {e}")))?;
    let coeffs: Vec<Complex64> = spec.coefficients.iter().map(|c| c.to_complex()).collect();
    if coeffs.len() != expected {
        return Err(CoamoebaError::InvalidInput(format!(
            "expected {expected} coefficients, got {}",
            coeffs.len()
        )));
    }
    if coeffs.iter().any(|c| c.norm() == 0.0 || !c.is_finite()) {
        return Err(CoamoebaError::InvalidInput("coefficients must be nonzero and finite".into()));
    }
    Ok(coeffs)
}

pub fn parse_system(text: &str) -> Result<CircuitSystem> {
    let spec: SystemSpec = serde_json::from_str(text)
        .map_err(|e| CoamoebaError::InvalidInput(format!("system JSON: {e}")))?;
    if let (Some(g1), Some(g2)) = (&spec.g1, &spec.g2) {
        let g1: Vec<Complex64> = g1.iter().map(|c| c.to_complex()).collect();
        let g2: Vec<Complex64> = g2.iter().map(|c| c.to_complex()).collect();
        return crate::system::reduce_to_trinomials(&spec.support, &g1, &g2);
    }
    match (spec.f1, spec.f2, spec.f3, spec.f4) {
        (Some(f1), Some(f2), Some(f3), Some(f4)) => CircuitSystem::new(
            spec.support,
            f1.to_complex(),
            f2.to_complex(),
            f3.to_complex(),
            f4.to_complex(),
        ),
        _ => Err(CoamoebaError::InvalidInput(
            "system needs either f1..f4 or g1 and g2".into(),
        )),
    }
}

fn envelope(config_echo: Value, seed: Option<u64>) -> Value {
    json!({
        "tool": "coamoeba",
        "version": env!("CARGO_PKG_VERSION"),
        "seed": seed,
        "tolerances": {
            "angle": crate::ANGLE_TOL,
            "congruence": 1e-9,
            "residual_relative": 1e-8,
            "sector_cluster": 1e-6,
        },
        "input": config_echo,
    })
}

fn complex_json(c: Complex64) -> Value {
    json!({
        "re": c.re,
        "im": c.im,
        "modulus": c.norm(),
        "argument_over_pi": c.arg() / PI,
    })
}

fn angles_json(values: &[f64]) -> Value {
    json!({
        "radians": values,
        "over_pi": values.iter().map(|v| v / PI).collect::<Vec<f64>>(),
    })
}

/// `profile` subcommand: the full circuit profile.
pub fn run_profile(config: &PointConfiguration) -> Result<Value> {
    let profile = config.profile();
    let mut report = envelope(json!({ "points": config.points() }), None);
    report["profile"] = serde_json::to_value(&profile)
        .map_err(|e| CoamoebaError::InvalidInput(e.to_string()))?;
    if !profile.is_degenerate() {
        let d = discriminant(config)?;
        report["reduced_discriminant"] = json!({
            "constant_plus": d.constant_plus.to_string(),
            "constant_minus": d.constant_minus.to_string(),
            "display": format!("{} - {} xi", d.constant_plus, d.constant_minus),
            "root_xi": {
                "numerator": d.reduced_root().numer().to_string(),
                "denominator": d.reduced_root().denom().to_string(),
            },
        });
    }
    Ok(report)
}

/// `index-set` subcommand.
pub fn run_index_set(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<Value> {
    let values = complement_index_set(config, coeffs)?;
    let mut report = envelope(json!({ "points": config.points() }), None);
    report["order_values"] = angles_json(&values);
    report["cardinality"] = json!(values.len());
    report["volume"] = json!(config.profile().total_volume);
    Ok(report)
}

/// `shell` subcommand.
pub fn run_shell(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<Value> {
    let families = shell(config, coeffs)?;
    let mut report = envelope(json!({ "points": config.points() }), None);
    report["families"] = json!(families
        .iter()
        .map(|f| {
            json!({
                "edge_points": f.edge_points,
                "normal": f.normal,
                "offsets": angles_json(&f.offsets),
            })
        })
        .collect::<Vec<_>>());
    Ok(report)
}

/// `classify` subcommand.
pub fn run_classify(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<Value> {
    let class = classify_space(config, coeffs)?;
    let membership = in_discriminant_coamoeba(config, coeffs)?;
    let mut report = envelope(json!({ "points": config.points() }), None);
    report["class"] = json!(match class.class {
        SpaceClassKind::U0 => "U0",
        SpaceClassKind::U1 => "U1",
    });
    report["certificate"] = serde_json::to_value(&class.certificate)
        .map_err(|e| CoamoebaError::InvalidInput(e.to_string()))?;
    report["witness"] = class.witness.map(|w| angles_json(&w)).unwrap_or(Value::Null);
    report["in_discriminant_coamoeba"] = json!(membership.inside);
    report["scalar_residual"] = json!(membership.scalar_residual);
    Ok(report)
}

/// `sweep` subcommand: CSV of `(xi, class)` over a polar grid placed on one
/// coefficient of the reduced family.
pub fn run_sweep(
    config: &PointConfiguration,
    coeffs: &[Complex64],
    index: usize,
    moduli: &[f64],
    args_over_pi: &[f64],
) -> Result<String> {
    if index >= coeffs.len() {
        return Err(CoamoebaError::InvalidInput("sweep index out of range".into()));
    }
    let mut out = String::from("modulus,argument_over_pi,re,im,class\n");
    for &m in moduli {
        for &a in args_over_pi {
            let xi = Complex64::from_polar(m, a * PI);
            let mut cs = coeffs.to_vec();
            cs[index] = xi;
            let class = classify_space(config, &cs)?;
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                m,
                a,
                xi.re,
                xi.im,
                match class.class {
                    SpaceClassKind::U0 => "U0",
                    SpaceClassKind::U1 => "U1",
                }
            ));
        }
    }
    Ok(out)
}

/// `area` subcommand.
pub fn run_area(config: &PointConfiguration, coeffs: &[Complex64], resolution: usize) -> Result<Value> {
    let image = raster_coamoeba(config, coeffs, resolution)?;
    let mut report = envelope(json!({ "points": config.points() }), None);
    report["area"] = json!(image.area());
    report["area_over_pi_squared"] = json!(image.area() / (PI * PI));
    report["resolution"] = json!(resolution);
    report["pixels"] = json!(image.covered_pixels());
    Ok(report)
}

/// `render` subcommand: binary PPM (P6), one pixel per torus cell, row-major
/// from `theta = (0, 0)`; covered cells are black.
pub fn run_render(
    config: &PointConfiguration,
    coeffs: &[Complex64],
    resolution: usize,
    lopsided: bool,
    out_path: &std::path::Path,
) -> Result<Value> {
    let image = if lopsided {
        raster_lopsided(config, coeffs, resolution)?
    } else {
        raster_coamoeba(config, coeffs, resolution)?
    };
    let mut data = format!("P6\n{resolution} {resolution}\n255\n").into_bytes();
    for y in 0..resolution {
        for x in 0..resolution {
            let v: u8 = if image.get(x, y) { 0 } else { 255 };
            data.extend_from_slice(&[v, v, v]);
        }
    }
    std::fs::write(out_path, &data)
        .map_err(|e| CoamoebaError::InvalidInput(format!("writing {out_path:?}: {e}")))?;
    let mut report = envelope(json!({ "points": config.points() }), None);
    report["area"] = json!(image.area());
    report["covered_fraction"] = json!(image.covered_fraction());
    report["resolution"] = json!(resolution);
    report["output"] = json!(out_path.display().to_string());
    report["mode"] = json!(if lopsided { "lopsided" } else { "coamoeba" });
    Ok(report)
}

/// `critical` subcommand.
pub fn run_critical(config: &PointConfiguration, coeffs: &[Complex64]) -> Result<Value> {
    let report_data = crate::critical::verify_index_set(config, coeffs)?;
    let mut report = envelope(json!({ "points": config.points() }), None);
    report["critical_points"] = json!(report_data
        .critical
        .points
        .iter()
        .map(|p| {
            json!({
                "point": p.point.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
                "argument": angles_json(&p.argument),
                "verdict": serde_json::to_value(&p.verdict).unwrap_or(Value::Null),
                "order_value": p.order_value,
                "gradient_residual": p.gradient_residual,
            })
        })
        .collect::<Vec<_>>());
    report["volume"] = json!(report_data.critical.volume);
    report["colopsided_count"] = json!(report_data.colopsided_count);
    report["order_values"] = angles_json(&report_data.order_values);
    report["order_values_distinct"] = json!(report_data.order_values_distinct);
    report["index_set_cardinality"] = json!(report_data.index_set_cardinality);
    report["counts_match"] = json!(report_data.counts_match);
    Ok(report)
}

/// `solve-system` subcommand.
pub fn run_solve_system(system: &CircuitSystem) -> Result<Value> {
    let roots = solve_system(system)?;
    let census = sector_census(system, &roots, 1e-6);
    let mut report = envelope(
        json!({
            "support": system.support,
            "f1": complex_json(system.f1),
            "f2": complex_json(system.f2),
            "f3": complex_json(system.f3),
            "f4": complex_json(system.f4),
            "interior_line_hypothesis": system.interior_line,
        }),
        None,
    );
    report["roots"] = json!(roots
        .iter()
        .map(|z| json!([complex_json(z[0]), complex_json(z[1])]))
        .collect::<Vec<_>>());
    report["sector_clusters"] = json!(census
        .clusters
        .iter()
        .map(|c| {
            json!({
                "members": c.members,
                "theta": angles_json(&c.theta),
                "nonreal": c.nonreal,
            })
        })
        .collect::<Vec<_>>());
    report["max_cluster"] = json!(census.max_cluster);
    report["max_nonreal_cluster"] = json!(census.max_nonreal_cluster);
    report["volume"] = json!(census.volume);
    Ok(report)
}

/// `fewnomial-campaign` subcommand: randomized verification of the sector
/// bounds over `trials` simplex-circuit systems.
pub fn run_fewnomial_campaign(trials: usize, seed: u64, max_vol: i64) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_cluster = 0usize;
    let mut max_nonreal = 0usize;
    let mut generic_count = 0usize;
    let mut cluster_histogram = [0usize; 5];
    let mut worst: Option<Value> = None;
    for trial in 0..trials {
        let system = crate::sampling::random_simplex_system(&mut rng, max_vol, trial % 2 == 1);
        let roots = solve_system(&system)?;
        let census = sector_census(&system, &roots, 1e-6);
        if census.total_roots as i64 == census.volume {
            generic_count += 1;
        }
        for c in &census.clusters {
            cluster_histogram[c.members.len().min(4)] += 1;
        }
        if census.max_cluster > max_cluster {
            max_cluster = census.max_cluster;
            worst = Some(json!({
                "trial": trial,
                "support": system.support,
                "max_cluster": census.max_cluster,
            }));
        }
        max_nonreal = max_nonreal.max(census.max_nonreal_cluster);
    }
    let mut report = envelope(json!({ "trials": trials, "max_volume": max_vol }), Some(seed));
    report["max_cluster"] = json!(max_cluster);
    report["max_nonreal_cluster"] = json!(max_nonreal);
    report["cluster_histogram"] = json!(cluster_histogram);
    report["generic_root_count_rate"] = json!(generic_count as f64 / trials as f64);
    report["sector_bound_satisfied"] = json!(max_cluster <= 2);
    report["nonreal_bound_satisfied"] = json!(max_nonreal <= 1);
    report["worst_case"] = worst.unwrap_or(Value::Null);
    Ok(report)
}

/// `covering` helper used by the campaign-style CLI checks.
pub fn run_covering(
    quadruple: &TrinomialQuadruple,
    samples: usize,
    seed: u64,
) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stats = covering_check(quadruple, samples, 1e-6, &mut rng)?;
    let mut report = envelope(json!({ "support": quadruple.support }), Some(seed));
    report["samples"] = json!(stats.samples);
    report["histogram"] = json!(stats.histogram);
    report["covered_once_everywhere"] = json!(stats.histogram[1] == stats.samples);
    Ok(report)
}
