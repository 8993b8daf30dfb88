//! Pointwise comparison between the rearranged solution of a Navier problem
//! on a model manifold and the solution of the symmetrized problem on the
//! volume-matched Euclidean ball:
//!
//!     c_iso^{2k} * u*(x) <= v(x)   a.e. on the star ball,
//!
//! where u solves (-Delta)^k u = f on the model and v solves
//! (-Delta_0)^k v = f* on the star ball, both with Navier conditions.

use crate::error::{Error, Result};
use crate::geometry::ModelManifold;
use crate::grid::RadialFunction;
use crate::poisson::solve_navier;
use crate::rearrangement::schwarz_rearrange;

/// Node-wise margin statistics for one comparison.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    /// min over nodes of (v - c^{2k} u*) / max(v); the inequality holds
    /// discretely when this is >= -tol.
    pub min_margin: f64,
    /// max over nodes with v above round-off of c^{2k} u* / v.
    pub max_ratio: f64,
    pub pass: bool,
    /// Number of grid nodes used for the comparison.
    pub grid_n: usize,
    /// Tolerance the pass flag was evaluated against.
    pub tol: f64,
    /// c_iso^{2k}.
    pub comparison_factor: f64,
    /// Rearranged model solution on the star grid.
    pub u_star: RadialFunction,
    /// Solution of the symmetrized problem on the star grid.
    pub v: RadialFunction,
}

impl ComparisonReport {
    /// Uniform relative deviation ||v - c^{2k} u*||_inf / ||v||_inf;
    /// meaningful where the comparison is an equality (cones).
    pub fn max_relative_deviation(&self) -> f64 {
        let vmax = self.v.max_abs().max(f64::MIN_POSITIVE);
        self.v
            .values()
            .iter()
            .zip(self.u_star.values())
            .map(|(&v, &us)| (v - self.comparison_factor * us).abs())
            .fold(0.0f64, f64::max)
            / vmax
    }
}

/// Default tolerance: scheme floor plus a discretization allowance.
pub fn default_tolerance(grid_n: usize) -> f64 {
    1e-6 + 10.0 / grid_n as f64
}

/// Run the iterated comparison for a non-negative non-increasing source.
///
/// Solves the k-fold Navier problem for u on the model and for v on the
/// volume-matched Euclidean ball with the rearranged source, rearranges u,
/// and reports node-wise margins of c^{2k} u* <= v on the star grid.
pub fn talenti_compare(
    model: &ModelManifold,
    f: &RadialFunction,
    k: u32,
    tol: Option<f64>,
) -> Result<ComparisonReport> {
    if k < 1 {
        return Err(Error::domain("talenti comparison requires k >= 1"));
    }
    let fmax = f.max_abs();
    if fmax == 0.0 {
        return Err(Error::domain("talenti comparison requires a nonzero source"));
    }
    for w in f.values().windows(2) {
        if w[0] < -1e-12 * fmax {
            return Err(Error::domain("talenti comparison requires f >= 0"));
        }
        if w[1] > w[0] + 1e-12 * fmax {
            return Err(Error::domain("talenti comparison requires a non-increasing source"));
        }
    }
    if *f.values().last().unwrap() < -1e-12 * fmax {
        return Err(Error::domain("talenti comparison requires f >= 0"));
    }

    let u = solve_navier(model, f, k)?.solution;
    let f_star = schwarz_rearrange(model, f)?;
    let u_star = schwarz_rearrange(model, &u)?;

    let euclid = ModelManifold::euclidean(model.dimension())?;
    let v = solve_navier(&euclid, &f_star.u_star, k)?.solution;

    // Both star grids are uniform over the same radius with the same node
    // count, so they coincide; interpolate defensively if they ever differ.
    let v_on_star: Vec<f64> = if v.grid() == u_star.u_star.grid() {
        v.values().to_vec()
    } else {
        u_star.u_star.grid().nodes().iter().map(|&s| v.interpolate(s)).collect()
    };

    let factor = model.c_iso().powi(2 * k as i32);
    let vmax = v_on_star.iter().cloned().fold(0.0f64, f64::max).max(f64::MIN_POSITIVE);
    let mut min_margin = f64::INFINITY;
    let mut max_ratio = 0.0f64;
    for (&vi, &ui) in v_on_star.iter().zip(u_star.u_star.values()) {
        min_margin = min_margin.min((vi - factor * ui) / vmax);
        if vi > 1e-12 * vmax {
            max_ratio = max_ratio.max(factor * ui / vi);
        }
    }
    let grid_n = u_star.u_star.grid().len();
    let tol = tol.unwrap_or_else(|| default_tolerance(grid_n));
    Ok(ComparisonReport {
        min_margin,
        max_ratio,
        pass: min_margin >= -tol,
        grid_n,
        tol,
        comparison_factor: factor,
        u_star: u_star.u_star,
        v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::RadialGrid;

    fn tent(cells: usize) -> RadialFunction {
        RadialFunction::from_fn(RadialGrid::uniform(1.0, cells).unwrap(), |r| (1.0 - r).max(0.0))
            .unwrap()
    }

    #[test]
    fn euclidean_identity_case() {
        // On Euclidean space with non-increasing f the two problems agree,
        // so v = u* up to scheme error.
        let m = ModelManifold::euclidean(3).unwrap();
        let rep = talenti_compare(&m, &tent(1024), 1, None).unwrap();
        assert!(rep.pass);
        assert!(rep.max_relative_deviation() <= 1e-8, "dev {}", rep.max_relative_deviation());
        assert!((rep.max_ratio - 1.0).abs() <= 1e-6);
    }

    #[test]
    fn cone_equality_scaling() {
        // v = alpha^{2k/n} u* on cones for non-increasing sources.
        let n = 5u32;
        for &alpha in &[0.25, 0.5, 0.9] {
            for k in 1..=3u32 {
                let m = ModelManifold::cone(n, alpha).unwrap();
                let rep = talenti_compare(&m, &tent(2000), k, None).unwrap();
                let dev = rep.max_relative_deviation();
                assert!(rep.pass, "cone alpha={alpha} k={k} failed: margin {}", rep.min_margin);
                assert!(dev <= 5e-3, "cone alpha={alpha} k={k}: deviation {dev}");
                assert!((rep.max_ratio - 1.0).abs() <= 5e-3);
            }
        }
    }

    #[test]
    fn cone_equality_refines() {
        let m = ModelManifold::cone(5, 0.5).unwrap();
        let dev_coarse = talenti_compare(&m, &tent(1000), 2, None).unwrap().max_relative_deviation();
        let dev_fine = talenti_compare(&m, &tent(2000), 2, None).unwrap().max_relative_deviation();
        let order = (dev_coarse / dev_fine).log2();
        assert!(order >= 1.5, "cone equality convergence order {order} ({dev_coarse} -> {dev_fine})");
    }

    #[test]
    fn hyperbolic_margins_nonnegative() {
        for k in 1..=2u32 {
            let m = ModelManifold::hyperbolic(3).unwrap();
            let rep = talenti_compare(&m, &tent(1024), k, None).unwrap();
            assert!(rep.min_margin >= -1e-9, "H^3 k={k} margin {}", rep.min_margin);
            let m5 = ModelManifold::hyperbolic(5).unwrap();
            let rep5 = talenti_compare(&m5, &tent(1024), k, None).unwrap();
            assert!(rep5.min_margin >= -1e-9, "H^5 k={k} margin {}", rep5.min_margin);
        }
    }

    #[test]
    fn scaling_covariance() {
        // Replacing f by c f scales both sides; margins and ratios are
        // invariant.
        let m = ModelManifold::cone(4, 0.6).unwrap();
        let f = tent(512);
        let a = talenti_compare(&m, &f, 2, None).unwrap();
        let b = talenti_compare(&m, &f.scaled(37.5), 2, None).unwrap();
        assert!((a.min_margin - b.min_margin).abs() <= 1e-10);
        assert!((a.max_ratio - b.max_ratio).abs() <= 1e-10);
    }

    #[test]
    fn rejects_bad_sources() {
        let m = ModelManifold::euclidean(3).unwrap();
        let g = RadialGrid::uniform(1.0, 64).unwrap();
        let negative = RadialFunction::from_fn(g.clone(), |r| r - 0.5).unwrap();
        assert!(talenti_compare(&m, &negative, 1, None).is_err());
        let increasing = RadialFunction::from_fn(g.clone(), |r| r).unwrap();
        assert!(talenti_compare(&m, &increasing, 1, None).is_err());
        let zero = RadialFunction::from_fn(g, |_| 0.0).unwrap();
        assert!(talenti_compare(&m, &zero, 1, None).is_err());
        assert!(talenti_compare(&m, &tent(64), 0, None).is_err());
    }
}
