//! Radial grids on [0, R] and functions sampled on them.

use crate::error::{Error, Result};

/// Minimum number of cells accepted by the discrete operators.
pub const MIN_CELLS: usize = 16;

/// How the grid nodes were placed. Recorded so downstream code can pick
/// stencils/refinement strategies without re-detecting spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridSpacing {
    Uniform,
    Geometric,
    Custom,
}

/// Strictly increasing nodes r_0 = 0 < r_1 < ... < r_N = R.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    nodes: Vec<f64>,
    spacing: GridSpacing,
}

impl RadialGrid {
    /// Uniform grid with `cells` cells over [0, r_max].
    pub fn uniform(r_max: f64, cells: usize) -> Result<Self> {
        if !(r_max > 0.0) || !r_max.is_finite() {
            return Err(Error::domain(format!("grid radius must be positive, got {r_max}")));
        }
        if cells < MIN_CELLS {
            return Err(Error::config(format!(
                "grid too coarse: {cells} cells, need at least {MIN_CELLS}"
            )));
        }
        let nodes = (0..=cells).map(|i| r_max * i as f64 / cells as f64).collect();
        Ok(RadialGrid { nodes, spacing: GridSpacing::Uniform })
    }

    /// Geometrically graded grid: cell widths grow by `ratio` from the
    /// origin outward.
    pub fn geometric(r_max: f64, cells: usize, ratio: f64) -> Result<Self> {
        if !(r_max > 0.0) || !r_max.is_finite() {
            return Err(Error::domain(format!("grid radius must be positive, got {r_max}")));
        }
        if cells < MIN_CELLS {
            return Err(Error::config(format!(
                "grid too coarse: {cells} cells, need at least {MIN_CELLS}"
            )));
        }
        if !(ratio > 0.0) || !ratio.is_finite() {
            return Err(Error::domain(format!("geometric ratio must be positive, got {ratio}")));
        }
        if (ratio - 1.0).abs() < 1e-12 {
            return Self::uniform(r_max, cells);
        }
        let total = (ratio.powi(cells as i32) - 1.0) / (ratio - 1.0);
        let h0 = r_max / total;
        let mut nodes = Vec::with_capacity(cells + 1);
        let mut r = 0.0;
        let mut h = h0;
        nodes.push(0.0);
        for _ in 0..cells {
            r += h;
            h *= ratio;
            nodes.push(r);
        }
        // Pin the last node exactly to r_max against accumulation drift.
        *nodes.last_mut().unwrap() = r_max;
        Ok(RadialGrid { nodes, spacing: GridSpacing::Geometric })
    }

    /// Grid from explicit nodes; must start at 0 and be strictly increasing.
    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self> {
        if nodes.len() < MIN_CELLS + 1 {
            return Err(Error::config(format!(
                "grid too coarse: {} nodes, need at least {}",
                nodes.len(),
                MIN_CELLS + 1
            )));
        }
        if nodes[0] != 0.0 {
            return Err(Error::domain("grid must start at r = 0"));
        }
        for w in nodes.windows(2) {
            if !(w[1] > w[0]) || !w[1].is_finite() {
                return Err(Error::domain("grid nodes must be strictly increasing and finite"));
            }
        }
        Ok(RadialGrid { nodes, spacing: GridSpacing::Custom })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Number of nodes (cells + 1).
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn cells(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn max_radius(&self) -> f64 {
        *self.nodes.last().unwrap()
    }

    pub fn spacing(&self) -> GridSpacing {
        self.spacing
    }
}

/// A radial profile u(r) sampled at the grid nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    grid: RadialGrid,
    values: Vec<f64>,
}

impl RadialFunction {
    pub fn from_values(grid: RadialGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::domain(format!(
                "value count {} does not match grid node count {}",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("radial function values must be finite"));
        }
        Ok(RadialFunction { grid, values })
    }

    pub fn from_fn(grid: RadialGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.nodes().iter().map(|&r| f(r)).collect();
        Self::from_values(grid, values)
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    /// Pointwise scaling c * u.
    pub fn scaled(&self, c: f64) -> Self {
        RadialFunction {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| c * v).collect(),
        }
    }

    /// Pointwise map preserving the grid; the result must stay finite.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::from_values(self.grid.clone(), self.values.iter().map(|&v| f(v)).collect())
    }

    /// Linear interpolation at radius r (clamped to the grid range).
    pub fn interpolate(&self, r: f64) -> f64 {
        let nodes = self.grid.nodes();
        if r <= 0.0 {
            return self.values[0];
        }
        if r >= self.grid.max_radius() {
            return *self.values.last().unwrap();
        }
        let idx = match nodes.binary_search_by(|x| x.partial_cmp(&r).unwrap()) {
            Ok(i) => return self.values[i],
            Err(i) => i - 1,
        };
        let t = (r - nodes[idx]) / (nodes[idx + 1] - nodes[idx]);
        self.values[idx] * (1.0 - t) + self.values[idx + 1] * t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn uniform_grid_nodes() {
        let g = RadialGrid::uniform(2.0, 16).unwrap();
        assert_eq!(g.len(), 17);
        assert_eq!(g.nodes()[0], 0.0);
        assert_relative_eq!(g.max_radius(), 2.0);
        assert_eq!(g.spacing(), GridSpacing::Uniform);
        assert!(RadialGrid::uniform(2.0, 8).is_err());
        assert!(RadialGrid::uniform(-1.0, 32).is_err());
    }

    #[test]
    fn geometric_grid_monotone() {
        let g = RadialGrid::geometric(1.0, 64, 1.05).unwrap();
        assert_eq!(g.len(), 65);
        assert_eq!(g.nodes()[0], 0.0);
        assert_relative_eq!(g.max_radius(), 1.0);
        for w in g.nodes().windows(2) {
            assert!(w[1] > w[0]);
        }
        // Widths actually grow.
        let h0 = g.nodes()[1] - g.nodes()[0];
        let hl = g.nodes()[64] - g.nodes()[63];
        assert!(hl > 2.0 * h0);
    }

    #[test]
    fn function_validation() {
        let g = RadialGrid::uniform(1.0, 16).unwrap();
        assert!(RadialFunction::from_values(g.clone(), vec![0.0; 3]).is_err());
        assert!(RadialFunction::from_values(g.clone(), vec![f64::NAN; 17]).is_err());
        let u = RadialFunction::from_fn(g, |r| 1.0 - r).unwrap();
        assert_relative_eq!(u.interpolate(0.25), 0.75, max_relative = 1e-15);
        assert_relative_eq!(u.interpolate(0.03), 0.97, max_relative = 1e-12);
    }

    #[test]
    fn scaling() {
        let g = RadialGrid::uniform(1.0, 16).unwrap();
        let u = RadialFunction::from_fn(g, |r| r * r).unwrap();
        let v = u.scaled(-2.0);
        assert_relative_eq!(v.values()[16], -2.0, max_relative = 1e-15);
        assert_relative_eq!(v.max_abs(), 2.0, max_relative = 1e-15);
    }
}
