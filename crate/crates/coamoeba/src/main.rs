//! Command-line front end: JSON reports on standard output, images as PPM
//! files. Exit codes: 0 success, 1 validation error, 2 mathematical
//! degeneracy, 3 numerical indeterminacy.

use clap::{Parser, Subcommand};
use coamoeba::report::{
    parse_coeffs, parse_config, parse_system, run_area, run_classify, run_covering, run_critical,
    run_fewnomial_campaign, run_index_set, run_profile, run_render, run_shell, run_solve_system,
    run_sweep,
};
use coamoeba::{CoamoebaError, Result};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "coamoeba", version, about = "Coamoebas of circuit polynomials: profiles, classification, areas, critical arguments and sector counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gale data, volumes, triangulations and the reduced discriminant.
    Profile {
        #[arg(long)]
        config: PathBuf,
    },
    /// Order values of the lopsided-complement index set.
    IndexSet {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
    },
    /// The shell line arrangement of a planar coamoeba.
    Shell {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
    },
    /// U0/U1 classification with certificate.
    Classify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
    },
    /// CSV sweep of the classification over a polar coefficient grid.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
        /// Index of the swept coefficient.
        #[arg(long)]
        index: usize,
        /// Comma-separated moduli.
        #[arg(long, value_delimiter = ',')]
        moduli: Vec<f64>,
        /// Comma-separated arguments as multiples of pi.
        #[arg(long, value_delimiter = ',')]
        args_over_pi: Vec<f64>,
    },
    /// Pushforward area estimate of the coamoeba.
    Area {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, default_value_t = 1024)]
        resolution: usize,
    },
    /// Binary PPM image of the (lopsided) coamoeba.
    Render {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, default_value_t = 512)]
        resolution: usize,
        /// Rasterize the lopsided coamoeba instead of the coamoeba.
        #[arg(long)]
        lopsided: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Critical points, their arguments and the index-set verification.
    Critical {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
    },
    /// Solve a two-trinomial system and report the sector census.
    SolveSystem {
        #[arg(long)]
        system: PathBuf,
    },
    /// Randomized verification of the per-sector root bounds.
    FewnomialCampaign {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_vol: i64,
    },
    /// Covering statistics of a trinomial quadruple.
    Covering {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        coeffs: PathBuf,
        /// Index of the marked monomial.
        #[arg(long, default_value_t = 0)]
        marked: usize,
        #[arg(long, default_value_t = 100000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CoamoebaError::InvalidInput(format!("reading {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Profile { config } => {
            let config = parse_config(&read(&config)?)?;
            print_json(&run_profile(&config)?);
        }
        Command::IndexSet { config, coeffs } => {
            let config = parse_config(&read(&config)?)?;
            let coeffs = parse_coeffs(&read(&coeffs)?, config.len())?;
            print_json(&run_index_set(&config, &coeffs)?);
        }
        Command::Shell { config, coeffs } => {
            let config = parse_config(&read(&config)?)?;
            let coeffs = parse_coeffs(&read(&coeffs)?, config.len())?;
            print_json(&run_shell(&config, &coeffs)?);
        }
        Command::Classify { config, coeffs } => {
            let config = parse_config(&read(&config)?)?;
            let coeffs = parse_coeffs(&read(&coeffs)?, config.len())?;
            print_json(&run_classify(&config, &coeffs)?);
        }
        Command::Sweep { config, coeffs, index, moduli, args_over_pi } => {
            let config = parse_config(&read(&config)?)?;
            let coeffs = parse_coeffs(&read(&coeffs)?, config.len())?;
            print!("{}", run_sweep(&config, &coeffs, index, &moduli, &args_over_pi)?);
        }
        Command::Area { config, coeffs, resolution } => {
            let config = parse_config(&read(&config)?)?;
            let coeffs = parse_coeffs(&read(&coeffs)?, config.len())?;
            print_json(&run_area(&config, &coeffs, resolution)?);
        }
        Command::Render { config, coeffs, resolution, lopsided, out } => {
            let config = parse_config(&read(&config)?)?;
            let coeffs = parse_coeffs(&read(&coeffs)?, config.len())?;
            print_json(&run_render(&config, &coeffs, resolution, lopsided, &out)?);
        }
        Command::Critical { config, coeffs } => {
            let config = parse_config(&read(&config)?)?;
            let coeffs = parse_coeffs(&read(&coeffs)?, config.len())?;
            print_json(&run_critical(&config, &coeffs)?);
        }
        Command::SolveSystem { system } => {
            let system = parse_system(&read(&system)?)?;
            print_json(&run_solve_system(&system)?);
        }
        Command::FewnomialCampaign { trials, seed, max_vol } => {
            print_json(&run_fewnomial_campaign(trials, seed, max_vol)?);
        }
        Command::Covering { config, coeffs, marked, samples, seed } => {
            let support: coamoeba::report::ConfigSpec = serde_json::from_str(&read(&config)?)
                .map_err(|e| CoamoebaError::InvalidInput(format!("config JSON: {e}")))?;
            let spec: coamoeba::report::CoeffsSpec = serde_json::from_str(&read(&coeffs)?)
                .map_err(|e| CoamoebaError::InvalidInput(format!("coefficients JSON: {e}")))?;
            let cs: Vec<_> = spec.coefficients.iter().map(|c| c.to_complex()).collect();
            let quadruple = coamoeba::raster::TrinomialQuadruple::new(support.points, cs, marked)?;
            print_json(&run_covering(&quadruple, samples, seed)?);
        }
    }
    Ok(())
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serialization"));
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
