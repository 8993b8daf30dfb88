//! Seeded generators for the verification batteries.
//!
//! All profiles derive from a SplitMix64 stream, so a (seed, case index)
//! pair pins a battery member exactly; see the README for the generator
//! contract.

use crate::error::Result;
use crate::grid::{RadialFunction, RadialGrid};
use crate::rng::SplitMix64;

/// Random piecewise-linear profile: values in [0, 1] at `controls + 1`
/// equally spaced control nodes, linearly interpolated. Control nodes are
/// placed on grid nodes so the kink structure is grid-aligned.
pub fn piecewise_linear_profile(
    grid: &RadialGrid,
    rng: &mut SplitMix64,
    controls: usize,
) -> Result<RadialFunction> {
    let controls = controls.max(2);
    let cells = grid.cells();
    let ctrl_vals: Vec<f64> = (0..=controls).map(|_| rng.next_f64()).collect();
    let values = (0..=cells)
        .map(|i| {
            let x = i as f64 * controls as f64 / cells as f64;
            let j = (x.floor() as usize).min(controls - 1);
            let t = x - j as f64;
            ctrl_vals[j] * (1.0 - t) + ctrl_vals[j + 1] * t
        })
        .collect();
    RadialFunction::from_values(grid.clone(), values)
}

/// Random non-negative, non-increasing profile vanishing at the boundary:
/// cumulative sums of random decrements at the control nodes.
pub fn nonincreasing_profile(
    grid: &RadialGrid,
    rng: &mut SplitMix64,
    controls: usize,
) -> Result<RadialFunction> {
    let controls = controls.max(2);
    let mut drops: Vec<f64> = (0..controls).map(|_| 0.05 + rng.next_f64()).collect();
    let total: f64 = drops.iter().sum();
    drops.iter_mut().for_each(|d| *d /= total);
    let mut ctrl_vals = Vec::with_capacity(controls + 1);
    let mut level = 1.0;
    ctrl_vals.push(level);
    for d in &drops {
        level -= d;
        ctrl_vals.push(level.max(0.0));
    }
    *ctrl_vals.last_mut().unwrap() = 0.0;
    let cells = grid.cells();
    let values = (0..=cells)
        .map(|i| {
            let x = i as f64 * controls as f64 / cells as f64;
            let j = (x.floor() as usize).min(controls - 1);
            let t = x - j as f64;
            ctrl_vals[j] * (1.0 - t) + ctrl_vals[j + 1] * t
        })
        .collect();
    RadialFunction::from_values(grid.clone(), values)
}

/// Random smooth bump: a positive combination of (1 - (r/R)^2)^s terms with
/// s >= min_order, vanishing to order >= min_order at the boundary.
/// Infinitely differentiable inside, so high-order magnitudes are clean.
pub fn smooth_bump(
    grid: &RadialGrid,
    rng: &mut SplitMix64,
    min_order: u32,
) -> Result<RadialFunction> {
    let r_max = grid.max_radius();
    let n_terms = 2 + rng.next_index(2);
    let terms: Vec<(f64, i32)> = (0..n_terms)
        .map(|_| (0.3 + 0.7 * rng.next_f64(), (min_order + rng.next_index(4) as u32) as i32))
        .collect();
    RadialFunction::from_fn(grid.clone(), move |r| {
        let x = (1.0 - (r / r_max).powi(2)).max(0.0);
        terms.iter().map(|&(a, s)| a * x.powi(s)).sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let grid = RadialGrid::uniform(1.0, 256).unwrap();
        let a = piecewise_linear_profile(&grid, &mut SplitMix64::new(99), 16).unwrap();
        let b = piecewise_linear_profile(&grid, &mut SplitMix64::new(99), 16).unwrap();
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn nonincreasing_profile_shape() {
        let grid = RadialGrid::uniform(1.0, 512).unwrap();
        for seed in 0..20 {
            let f = nonincreasing_profile(&grid, &mut SplitMix64::new(seed), 12).unwrap();
            for w in f.values().windows(2) {
                assert!(w[1] <= w[0] + 1e-14);
            }
            assert!(f.values().iter().all(|&v| v >= 0.0));
            assert_eq!(*f.values().last().unwrap(), 0.0);
            assert_eq!(f.values()[0], 1.0);
        }
    }

    #[test]
    fn smooth_bump_boundary_order() {
        let grid = RadialGrid::uniform(2.0, 512).unwrap();
        let f = smooth_bump(&grid, &mut SplitMix64::new(7), 4).unwrap();
        assert!(f.values()[0] > 0.0);
        assert_eq!(*f.values().last().unwrap(), 0.0);
        // Vanishing to order >= 4: the last interior value is tiny.
        let v = f.values()[510];
        assert!(v < 1e-7, "boundary decay too slow: {v}");
    }
}
