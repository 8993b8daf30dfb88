//! Exact-quadrature solver for the radial Poisson problem
//! -(1/A)(A u')' = f on [0, R] with u(R) = 0, and the iterated Navier
//! problems obtained by chaining k second-order solves.
//!
//! The solution is written through its Green representation
//! u(r) = int_r^R (1/A(s)) int_0^s f(t) A(t) dt ds,
//! so no linear system is assembled: the inner integral is accumulated once
//! by per-cell Gauss quadrature, the outer one backwards by trapezoid.
//! The representation makes the maximum principle exact in floating point:
//! f >= 0 forces u >= 0 and u non-increasing.

use crate::calculus::laplacian;
use crate::error::{Error, Result};
use crate::geometry::ModelManifold;
use crate::grid::{RadialFunction, RadialGrid};
use crate::quadrature::gauss4_cumulative;

/// A polyharmonic Navier problem (-Delta)^k u = f with
/// u = Delta u = ... = Delta^{k-1} u = 0 on the boundary sphere.
#[derive(Debug, Clone)]
pub struct NavierProblem {
    pub model: ModelManifold,
    pub source: RadialFunction,
    /// Number of Laplacians k >= 1.
    pub order: u32,
}

impl NavierProblem {
    pub fn new(model: ModelManifold, source: RadialFunction, order: u32) -> Result<Self> {
        if order < 1 {
            return Err(Error::domain("navier problem requires k >= 1"));
        }
        Ok(NavierProblem { model, source, order })
    }

    pub fn radius(&self) -> f64 {
        self.source.grid().max_radius()
    }

    pub fn solve(&self) -> Result<SolveReport> {
        solve_navier(&self.model, &self.source, self.order)
    }
}

/// Solver output: the solution, its discrete residual, and (when computed)
/// the empirical order of the residual under grid coarsening.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub solution: RadialFunction,
    /// max over interior nodes of |Delta u + f|.
    pub residual_inf: f64,
    pub refinement_order: Option<f64>,
}

fn solve_poisson_raw(model: &ModelManifold, f: &RadialFunction) -> Result<RadialFunction> {
    let nodes = f.grid().nodes();
    // Inner integral F(s) = int_0^s f A, with f interpolated linearly.
    let forcing = gauss4_cumulative(nodes, |r| f.interpolate(r) * model.area_density(r));
    // G = F / A vanishes at the origin like f(0) r / n.
    let mut g = vec![0.0; nodes.len()];
    for i in 1..nodes.len() {
        g[i] = forcing[i] / model.area_density(nodes[i]);
    }
    // Outer integral accumulated backwards so u(R) = 0 exactly.
    let mut u = vec![0.0; nodes.len()];
    for i in (0..nodes.len() - 1).rev() {
        u[i] = u[i + 1] + 0.5 * (g[i] + g[i + 1]) * (nodes[i + 1] - nodes[i]);
    }
    let min_f = f.values().iter().cloned().fold(f64::INFINITY, f64::min);
    if min_f >= 0.0 {
        // Non-negative sources give non-negative, non-increasing u exactly.
        debug_assert!(u.iter().all(|&v| v >= 0.0));
    }
    RadialFunction::from_values(f.grid().clone(), u)
}

fn residual_inf(model: &ModelManifold, u: &RadialFunction, f: &RadialFunction) -> Result<f64> {
    let lap = laplacian(model, u)?;
    let mut worst = 0.0f64;
    for i in 0..u.grid().len() - 1 {
        worst = worst.max((lap.values()[i] + f.values()[i]).abs());
    }
    Ok(worst)
}

/// Solve -Delta u = f with u(R) = 0 on the grid of `f`.
pub fn solve_poisson(model: &ModelManifold, f: &RadialFunction) -> Result<SolveReport> {
    let solution = solve_poisson_raw(model, f)?;
    let residual = residual_inf(model, &solution, f)?;
    Ok(SolveReport { solution, residual_inf: residual, refinement_order: None })
}

/// Like [`solve_poisson`], additionally estimating the residual decay order
/// by re-solving on the half grid (uniform grids with an even cell count).
pub fn solve_poisson_refined(model: &ModelManifold, f: &RadialFunction) -> Result<SolveReport> {
    let fine = solve_poisson(model, f)?;
    let nodes = f.grid().nodes();
    let cells = f.grid().cells();
    if cells % 2 != 0 || cells < 32 {
        return Ok(fine);
    }
    let coarse_nodes: Vec<f64> = nodes.iter().step_by(2).copied().collect();
    let coarse_values: Vec<f64> = f.values().iter().step_by(2).copied().collect();
    let coarse_grid = RadialGrid::from_nodes(coarse_nodes)?;
    let coarse_f = RadialFunction::from_values(coarse_grid, coarse_values)?;
    let coarse = solve_poisson(model, &coarse_f)?;
    let order = if fine.residual_inf > 0.0 && coarse.residual_inf > 0.0 {
        Some((coarse.residual_inf / fine.residual_inf).log2())
    } else {
        None
    };
    Ok(SolveReport { refinement_order: order, ..fine })
}

/// Solve the k-fold Navier problem by k successive second-order solves:
/// u_1 solves -Delta u_1 = f, then u_{j+1} solves -Delta u_{j+1} = u_j.
pub fn solve_navier(model: &ModelManifold, f: &RadialFunction, k: u32) -> Result<SolveReport> {
    if k < 1 {
        return Err(Error::domain("navier solve requires k >= 1"));
    }
    let mut current = f.clone();
    let mut last_source = f.clone();
    for _ in 0..k {
        last_source = current.clone();
        current = solve_poisson_raw(model, &current)?;
    }
    let residual = residual_inf(model, &current, &last_source)?;
    Ok(SolveReport { solution: current, residual_inf: residual, refinement_order: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::adaptive_simpson;
    use approx::assert_relative_eq;

    fn ones(cells: usize) -> RadialFunction {
        RadialFunction::from_fn(RadialGrid::uniform(1.0, cells).unwrap(), |_| 1.0).unwrap()
    }

    #[test]
    fn euclidean_torsion_function() {
        // -Delta u = 1 on the unit ball: u = (R^2 - r^2) / (2n).
        for n in [3u32, 5] {
            let m = ModelManifold::euclidean(n).unwrap();
            let rep = solve_poisson(&m, &ones(4096)).unwrap();
            let r = rep.solution.grid().nodes();
            for (i, &v) in rep.solution.values().iter().enumerate() {
                let exact = (1.0 - r[i] * r[i]) / (2.0 * n as f64);
                assert!((v - exact).abs() <= 1e-6, "torsion mismatch at {}: {v} vs {exact}", r[i]);
            }
        }
    }

    #[test]
    fn cone_density_cancels_in_solve() {
        let n = 3u32;
        let e = ModelManifold::euclidean(n).unwrap();
        let base = solve_poisson(&e, &ones(1024)).unwrap();
        for &avr in &[0.25, 0.5, 0.9] {
            let c = ModelManifold::cone(n, avr).unwrap();
            let rep = solve_poisson(&c, &ones(1024)).unwrap();
            for (a, b) in rep.solution.values().iter().zip(base.solution.values()) {
                assert_relative_eq!(a, b, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn hyperbolic_torsion_vs_quadrature_oracle() {
        // n = 3, f = 1: u(r) = int_r^R (sinh(s) cosh(s) - s) / (2 sinh^2 s) ds.
        let m = ModelManifold::hyperbolic(3).unwrap();
        let rep = solve_poisson(&m, &ones(2048)).unwrap();
        let integrand = |s: f64| (s.sinh() * s.cosh() - s) / (2.0 * s.sinh() * s.sinh());
        for &r in &[0.1, 0.3, 0.55, 0.8] {
            let oracle = adaptive_simpson(integrand, r, 1.0, 1e-12, 4).unwrap();
            assert_relative_eq!(rep.solution.interpolate(r), oracle, epsilon = 1e-6);
        }
    }

    #[test]
    fn residual_refinement_order() {
        let m = ModelManifold::euclidean(4).unwrap();
        let g = RadialGrid::uniform(1.0, 512).unwrap();
        let f = RadialFunction::from_fn(g, |r| (1.0 + r * r).recip()).unwrap();
        let rep = solve_poisson_refined(&m, &f).unwrap();
        let order = rep.refinement_order.expect("refinement order");
        assert!(order >= 1.5, "residual order {order}");
    }

    #[test]
    fn maximum_principle_and_monotonicity() {
        let m = ModelManifold::hyperbolic(3).unwrap();
        let g = RadialGrid::uniform(1.0, 256).unwrap();
        let f = RadialFunction::from_fn(g, |r| (1.0 - r).max(0.0)).unwrap();
        let rep = solve_poisson(&m, &f).unwrap();
        for w in rep.solution.values().windows(2) {
            assert!(w[0] >= w[1] - 1e-15, "u must be non-increasing for f >= 0");
        }
        assert!(rep.solution.values().iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn monotone_dependence_on_source() {
        let m = ModelManifold::euclidean(3).unwrap();
        let g = RadialGrid::uniform(1.0, 256).unwrap();
        let f1 = RadialFunction::from_fn(g.clone(), |r| 0.5 + 0.5 * (3.0 * r).sin().abs()).unwrap();
        let f2 = RadialFunction::from_fn(g, |r| 1.1 + 0.5 * (3.0 * r).sin().abs()).unwrap();
        let u1 = solve_poisson(&m, &f1).unwrap().solution;
        let u2 = solve_poisson(&m, &f2).unwrap().solution;
        for (a, b) in u1.values().iter().zip(u2.values()) {
            assert!(a <= b, "monotone dependence violated");
        }
    }

    #[test]
    fn navier_k1_equals_poisson() {
        let m = ModelManifold::cone(4, 0.7).unwrap();
        let f = ones(256);
        let a = solve_poisson(&m, &f).unwrap();
        let b = solve_navier(&m, &f, 1).unwrap();
        assert_eq!(a.solution.values(), b.solution.values());
        assert!(solve_navier(&m, &f, 0).is_err());
    }

    #[test]
    fn euclidean_biharmonic_navier_torsion() {
        // k = 2, f = 1: iterate the exact antiderivatives of the first-stage
        // torsion profile and compare against the two-stage solve.
        let n = 3u32;
        let m = ModelManifold::euclidean(n).unwrap();
        let rep = solve_navier(&m, &ones(2048), 2).unwrap();
        // Exact biharmonic Navier profile for f = 1 in dimension n:
        // u1 = (1 - r^2)/(2n); u2(r) = int_r^1 s^{1-n} int_0^s t^{n-1} u1(t) dt ds.
        let nf = n as f64;
        let inner = |s: f64| {
            // int_0^s t^{n-1} (1 - t^2) / (2n) dt = s^n/(2n^2) - s^{n+2}/(2n(n+2)).
            s.powi(n as i32) / (2.0 * nf * nf) - s.powi(n as i32 + 2) / (2.0 * nf * (nf + 2.0))
        };
        for &r in &[0.0, 0.2, 0.5, 0.8] {
            let oracle =
                adaptive_simpson(|s: f64| inner(s) * s.powf(1.0 - nf), r, 1.0, 1e-13, 4).unwrap();
            assert_relative_eq!(rep.solution.interpolate(r), oracle, epsilon = 1e-7);
        }
    }

    #[test]
    fn cone_navier_independent_of_alpha() {
        let n = 5u32;
        let e = ModelManifold::euclidean(n).unwrap();
        let base = solve_navier(&e, &ones(512), 2).unwrap();
        for &avr in &[0.3, 0.8] {
            let c = ModelManifold::cone(n, avr).unwrap();
            let rep = solve_navier(&c, &ones(512), 2).unwrap();
            for (a, b) in rep.solution.values().iter().zip(base.solution.values()) {
                assert_relative_eq!(a, b, epsilon = 1e-12);
            }
        }
    }
}
