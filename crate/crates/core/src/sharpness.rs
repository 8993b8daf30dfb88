//! Talentian bubbles, the large-lambda integrals H(lambda, s), and the
//! sharpness sweep for the second-order Sobolev constant.
//!
//! On Euclidean and cone models rho * Delta rho = n - 1 holds exactly, so
//! the bubble u_lambda = (lambda + r^2)^{(4-n)/2} has the closed-form
//! Laplacian square
//!     (Delta u_lambda)^2 = (n-4)^2 (lambda + r^2)^{-n} (n lambda + 2 r^2)^2,
//! and the biharmonic Sobolev quotient of the bubble converges to
//! AVR^{4/n} S_{2,2} — the constant the sweep checks.

use crate::constants::{bubble_limit_constant, sobolev_constant_s2};
use crate::error::{Error, Result};
use crate::geometry::{ModelKind, ModelManifold};
use crate::grid::{RadialFunction, RadialGrid};
use crate::quadrature::adaptive_simpson;

/// The bubble family t_lambda(r) = (lambda + r^2)^{(4-n)/2}, n > 4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BubbleFamily {
    dim: u32,
    lambda: f64,
}

impl BubbleFamily {
    pub fn new(dim: u32, lambda: f64) -> Result<Self> {
        if dim <= 4 {
            return Err(Error::domain(format!("bubbles require n > 4, got n = {dim}")));
        }
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::domain(format!("bubbles require lambda > 0, got {lambda}")));
        }
        Ok(BubbleFamily { dim, lambda })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn value(&self, r: f64) -> f64 {
        (self.lambda + r * r).powf((4.0 - self.dim as f64) / 2.0)
    }

    /// (Delta u_lambda)^2 on models with rho * Delta rho = n - 1.
    pub fn laplacian_squared(&self, r: f64) -> f64 {
        let n = self.dim as f64;
        let base = self.lambda + r * r;
        (n - 4.0) * (n - 4.0) * base.powf(-n) * (n * self.lambda + 2.0 * r * r).powi(2)
    }

    /// |u_lambda|^{2n/(n-4)} = (lambda + r^2)^{-n}.
    pub fn critical_power(&self, r: f64) -> f64 {
        (self.lambda + r * r).powf(-(self.dim as f64))
    }
}

/// C^2 cutoff: 1 on [0, start], quintic smoothstep down to 0 at `end`.
fn cutoff(r: f64, start: f64, end: f64) -> f64 {
    if r <= start {
        1.0
    } else if r >= end {
        0.0
    } else {
        let x = (r - start) / (end - start);
        1.0 - x * x * x * (10.0 - 15.0 * x + 6.0 * x * x)
    }
}

/// Sample the bubble on a grid, optionally tapered to zero by a C^2 ramp
/// starting at `cutoff_start_fraction * R`.
pub fn bubble_profile(
    n: u32,
    lambda: f64,
    grid: RadialGrid,
    cutoff_start_fraction: Option<f64>,
) -> Result<RadialFunction> {
    let bubble = BubbleFamily::new(n, lambda)?;
    let r_max = grid.max_radius();
    match cutoff_start_fraction {
        None => RadialFunction::from_fn(grid, |r| bubble.value(r)),
        Some(frac) => {
            if !(frac > 0.0 && frac < 1.0) {
                return Err(Error::domain(format!(
                    "cutoff fraction must lie in (0, 1), got {frac}"
                )));
            }
            let start = frac * r_max;
            RadialFunction::from_fn(grid, move |r| bubble.value(r) * cutoff(r, start, r_max))
        }
    }
}

fn require_polynomial_growth(model: &ModelManifold, what: &str) -> Result<f64> {
    match model.kind() {
        ModelKind::Euclidean => Ok(1.0),
        ModelKind::Cone { avr } => Ok(avr),
        ModelKind::Hyperbolic => Err(Error::domain(format!(
            "{what} diverges on hyperbolic models (AVR = 0); use the truncated variant"
        ))),
    }
}

/// H(lambda, s) = int_M (lambda + rho^2)^{-s} dv over the whole model,
/// for Euclidean/cone models with s > n/2. The truncation radius is chosen
/// from the analytic tail bound so the neglected mass is below 1e-9 of the
/// value.
pub fn h_integral(model: &ModelManifold, lambda: f64, s: f64) -> Result<f64> {
    let avr = require_polynomial_growth(model, "the global bubble integral")?;
    let n = model.dimension();
    let nf = n as f64;
    if !(s > nf / 2.0) {
        return Err(Error::domain(format!("h_integral requires s > n/2 (n = {n}, s = {s})")));
    }
    if !(lambda > 0.0) {
        return Err(Error::domain(format!("h_integral requires lambda > 0, got {lambda}")));
    }
    let estimate = bubble_limit_constant(n, s, avr)? * lambda.powf(nf / 2.0 - s);
    // Tail beyond R: avr n omega_n R^{n-2s} / (2s - n), using
    // (lambda + r^2)^{-s} <= r^{-2s}.
    let coeff = avr * nf * model.unit_ball_volume();
    let r_tail = (1e-9 * estimate * (2.0 * s - nf) / coeff).powf(1.0 / (nf - 2.0 * s));
    let r_max = r_tail.max(10.0 * lambda.sqrt()).max(10.0);
    h_integral_truncated(model, lambda, s, r_max)
}

/// int_0^{r_max} (lambda + r^2)^{-s} A(r) dr on any model.
pub fn h_integral_truncated(
    model: &ModelManifold,
    lambda: f64,
    s: f64,
    r_max: f64,
) -> Result<f64> {
    if !(lambda > 0.0) || !(s > 0.0) || !(r_max > 0.0) {
        return Err(Error::domain(format!(
            "h_integral_truncated requires positive lambda, s, r_max (got {lambda}, {s}, {r_max})"
        )));
    }
    let integrand = |r: f64| (lambda + r * r).powf(-s) * model.area_density(r);
    // Seed panels resolve the sqrt(lambda)-scale shoulder of the bubble.
    let seeds = (8.0 * (r_max / lambda.sqrt().max(1e-3)).max(1.0)).min(512.0) as usize;
    let scale = integrand(lambda.sqrt().min(r_max)) * r_max;
    adaptive_simpson(integrand, 0.0, r_max, 1e-11 * scale.max(1e-300), seeds.max(8))
}

/// Sweep of the biharmonic Sobolev quotient of the bubble family.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub lambdas: Vec<f64>,
    /// Quotient from direct quadrature of the closed forms, truncated by
    /// the 0.1% tail policy.
    pub quotients: Vec<f64>,
    /// The same quantity assembled from three global H integrals,
    /// (n-4)^2 (4 l^{n/2-2} H(l,n-2) + 4(n-2) l^{n/2-1} H(l,n-1)
    ///   + (n-2)^2 l^{n/2} H(l,n)) / (l^{n/2} H(l,n))^{(n-4)/n}.
    pub assembled_quotients: Vec<f64>,
    /// AVR^{4/n} S_{2,2}.
    pub limit_target: f64,
    /// |Q_last / target - 1| within the requested gap.
    pub converged: bool,
}

/// Run the sweep over strictly increasing lambdas on a Euclidean or cone
/// model of dimension n > 4.
pub fn sharpness_sweep(
    model: &ModelManifold,
    lambdas: &[f64],
    rel_gap_for_convergence: f64,
) -> Result<SweepReport> {
    let avr = require_polynomial_growth(model, "the sharpness sweep")?;
    let n = model.dimension();
    let nf = n as f64;
    if n <= 4 {
        return Err(Error::domain(format!("sharpness sweep requires n > 4, got n = {n}")));
    }
    if lambdas.is_empty() {
        return Err(Error::config("sharpness sweep needs at least one lambda"));
    }
    for w in lambdas.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::domain("lambda grid must be strictly increasing"));
        }
    }
    if !(lambdas[0] > 0.0) {
        return Err(Error::domain("lambdas must be positive"));
    }

    let target = avr.powf(4.0 / nf) * sobolev_constant_s2(n, 2)?;
    let coeff = avr * nf * model.unit_ball_volume();
    let mut quotients = Vec::with_capacity(lambdas.len());
    let mut assembled = Vec::with_capacity(lambdas.len());
    for &lambda in lambdas {
        let bubble = BubbleFamily::new(n, lambda)?;
        // 0.1% truncation policy from the analytic tail exponents:
        // numerator integrand ~ 4 (n-4)^2 coeff r^{3-n},
        // denominator integrand ~ coeff r^{-n-1}.
        let num_est = (nf - 4.0).powi(2)
            * (4.0 * bubble_limit_constant(n, nf - 2.0, avr)? * lambda.powf(2.0 - nf / 2.0)
                + 4.0 * (nf - 2.0) * bubble_limit_constant(n, nf - 1.0, avr)? * lambda.powf(2.0 - nf / 2.0)
                + (nf - 2.0).powi(2) * bubble_limit_constant(n, nf, avr)? * lambda.powf(2.0 - nf / 2.0));
        let den_est = bubble_limit_constant(n, nf, avr)? * lambda.powf(-nf / 2.0);
        let r_num = (1e-3 * num_est * (nf - 4.0) / (4.0 * (nf - 4.0).powi(2) * coeff))
            .powf(1.0 / (4.0 - nf));
        let r_den = (1e-3 * den_est * nf / coeff).powf(-1.0 / nf);
        let r_max = r_num.max(r_den).max(10.0 * lambda.sqrt());

        let num_scale = bubble.laplacian_squared(lambda.sqrt()) * model.area_density(lambda.sqrt());
        let numerator = adaptive_simpson(
            |r| bubble.laplacian_squared(r) * model.area_density(r),
            0.0,
            r_max,
            1e-9 * (num_scale * r_max).max(1e-300),
            64,
        )?;
        let den_scale = bubble.critical_power(lambda.sqrt()) * model.area_density(lambda.sqrt());
        let denominator = adaptive_simpson(
            |r| bubble.critical_power(r) * model.area_density(r),
            0.0,
            r_max,
            1e-9 * (den_scale * r_max).max(1e-300),
            64,
        )?;
        quotients.push(numerator / denominator.powf((nf - 4.0) / nf));

        let h2 = h_integral(model, lambda, nf - 2.0)?;
        let h1 = h_integral(model, lambda, nf - 1.0)?;
        let h0 = h_integral(model, lambda, nf)?;
        let lhs = (nf - 4.0).powi(2)
            * (4.0 * lambda.powf(nf / 2.0 - 2.0) * h2
                + 4.0 * (nf - 2.0) * lambda.powf(nf / 2.0 - 1.0) * h1
                + (nf - 2.0).powi(2) * lambda.powf(nf / 2.0) * h0);
        let rhs = (lambda.powf(nf / 2.0) * h0).powf((nf - 4.0) / nf);
        assembled.push(lhs / rhs);
    }
    let converged = (quotients.last().unwrap() / target - 1.0).abs() <= rel_gap_for_convergence;
    Ok(SweepReport {
        lambdas: lambdas.to_vec(),
        quotients,
        assembled_quotients: assembled,
        limit_target: target,
        converged,
    })
}
