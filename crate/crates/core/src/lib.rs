//! Numerical laboratory for symmetrization on radial model manifolds.
//!
//! The crate provides, at desk scale:
//!
//! * explicit sharp constants (Sobolev, Rellich, Croke, Kato, and friends)
//!   together with the gamma-function plumbing they need;
//! * radial model manifolds (Euclidean, cones with prescribed asymptotic
//!   volume ratio, hyperbolic) where every integral reduces to one
//!   dimension;
//! * Schwarz rearrangement with exact distribution functions and the three
//!   classical symmetrization checks (Cavalieri, Pólya–Szegő,
//!   Hardy–Littlewood);
//! * radial Poisson/Navier solvers and the iterated Talenti comparison;
//! * quotient benchmarks for Sobolev/Rellich-type inequalities, improved
//!   Rellich weights, 1-D Rayleigh eigenconstants, and the bubble sharpness
//!   sweep.

pub mod battery;
pub mod calculus;
pub mod constants;
pub mod eigen;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod poisson;
pub mod quadrature;
pub mod quotients;
pub mod rearrangement;
pub mod rng;
pub mod sharpness;
pub mod talenti;
pub mod weights;

pub use calculus::{gradient_energy, iterated_magnitude, laplacian, lp_norm, radial_derivative, weighted_integral};
pub use constants::{
    bubble_limit_constant, critical_exponent, croke_constant, gamma, gazzola_lm, kato_constant,
    ln_gamma, rellich_constant, sobolev_constant_s2, unit_ball_volume, InequalityConstants,
};
pub use error::{Error, Result};
pub use geometry::{ModelKind, ModelManifold};
pub use grid::{GridSpacing, RadialFunction, RadialGrid};
pub use eigen::{capital_lambda, eigen_rayleigh_1d, gazzola_constants, GazzolaConstants, RayleighProblem};
pub use poisson::{solve_navier, solve_poisson, solve_poisson_refined, NavierProblem, SolveReport};
pub use quotients::{assembled_quotient, rellich_quotient, sobolev_quotient, weighted_quotient, QuotientReport};
pub use rearrangement::{distribution_function, rearrangement_checks, schwarz_rearrange, DistributionFunction, RearrangementReport, SymmetrizedPair};
pub use rng::SplitMix64;
pub use sharpness::{bubble_profile, h_integral, h_integral_truncated, sharpness_sweep, BubbleFamily, SweepReport};
pub use talenti::{talenti_compare, ComparisonReport};
pub use weights::{build_weight, Weight, WeightFamily, WeightKind, WeightedTerm};
