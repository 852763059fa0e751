//! Shared numeric engines: univariate root finding, binomial torus systems,
//! curve sampling and Sylvester resultants.

pub mod binomial;
pub mod curve;
pub mod poly;
pub mod resultant;

pub use binomial::{solve_binomial_system, solve_real, BinomialSystem};
pub use curve::{curve_sample, fiber_poly, CurveGrid, CurveSamples};
pub use poly::{cluster_points, principal_arg, quadratic_roots, RootWithMultiplicity, UnivariatePoly};
pub use resultant::{complex_det, sylvester_resultant, BivariatePoly, Var};
