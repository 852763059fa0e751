//! Computational toolkit for coamoebas of polynomials supported on circuits.
//!
//! A circuit is a configuration of `n + 2` integer points affinely spanning
//! dimension `n`. For such supports essentially everything about the coamoeba
//! (the argument-space image of the zero set) can be computed explicitly:
//! Gale duals and volumes, the two coherent triangulations, the binomial
//! A-discriminant, colopsidedness and order maps, the U0/U1 classification of
//! the space of coamoebas, planar area estimates against the `2π²` bound,
//! critical-argument index sets, and per-sector root counts for two-trinomial
//! systems.
//!
//! The crate is organised around pure functions over immutable values; all
//! lattice arithmetic is exact (arbitrary-precision integers), while phase and
//! root computations are floating point with documented tolerances.

pub mod critical;
pub mod discriminant;
pub mod error;
pub mod geometry;
pub mod numeric;
pub mod phase;
pub mod raster;
pub mod sampling;
pub mod report;
pub mod system;

pub use error::CoamoebaError;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoamoebaError>;

/// Default tolerance for angular comparisons of exact-rational inputs
/// promoted to floating point.
pub const ANGLE_TOL: f64 = 1e-12;

/// Two pi, the period of every torus coordinate.
pub const TAU: f64 = 2.0 * std::f64::consts::PI;
