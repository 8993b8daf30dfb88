//! Discrete radial calculus: the radial Laplace–Beltrami operator, iterated
//! operator magnitudes |D^m u|, radial derivatives, and weighted integrals
//! against the model volume measure.

use crate::error::{Error, Result};
use crate::geometry::ModelManifold;
use crate::grid::{RadialFunction, MIN_CELLS};
use crate::quadrature::trapezoid;

/// First derivative of the interpolating quadratic through three points,
/// evaluated at `x`.
fn quad_derivative(xs: [f64; 3], fs: [f64; 3], x: f64) -> f64 {
    let d01 = (fs[1] - fs[0]) / (xs[1] - xs[0]);
    let d12 = (fs[2] - fs[1]) / (xs[2] - xs[1]);
    let d012 = (d12 - d01) / (xs[2] - xs[0]);
    d01 + d012 * ((x - xs[0]) + (x - xs[1]))
}

/// Second derivative of the interpolating cubic through four points,
/// evaluated at `x`.
fn cubic_second_derivative(xs: [f64; 4], fs: [f64; 4], x: f64) -> f64 {
    let d01 = (fs[1] - fs[0]) / (xs[1] - xs[0]);
    let d12 = (fs[2] - fs[1]) / (xs[2] - xs[1]);
    let d23 = (fs[3] - fs[2]) / (xs[3] - xs[2]);
    let d012 = (d12 - d01) / (xs[2] - xs[0]);
    let d123 = (d23 - d12) / (xs[3] - xs[1]);
    let d0123 = (d123 - d012) / (xs[3] - xs[0]);
    2.0 * d012 + 2.0 * d0123 * ((x - xs[0]) + (x - xs[1]) + (x - xs[2]))
}

fn check_grid(u: &RadialFunction) -> Result<()> {
    if u.grid().cells() < MIN_CELLS {
        return Err(Error::config(format!(
            "grid too coarse for discrete operators: {} cells",
            u.grid().cells()
        )));
    }
    Ok(())
}

/// Radial Laplace–Beltrami operator (1/A)(A u')' by second-order central
/// differences.
///
/// At r = 0 the smooth limit is used: u'(0) = 0 and Delta u(0) = n u''(0),
/// discretized with the symmetry ghost u_{-1} = u_1. At r = R a one-sided
/// second-order closure is used.
pub fn laplacian(model: &ModelManifold, u: &RadialFunction) -> Result<RadialFunction> {
    check_grid(u)?;
    let r = u.grid().nodes();
    let v = u.values();
    let len = r.len();
    let mut out = vec![0.0; len];

    let h0 = r[1] - r[0];
    out[0] = model.dimension() as f64 * 2.0 * (v[1] - v[0]) / (h0 * h0);

    for i in 1..len - 1 {
        let hm = r[i] - r[i - 1];
        let hp = r[i + 1] - r[i];
        let denom = hm * hp * (hm + hp);
        let d1 = (v[i + 1] * hm * hm - v[i - 1] * hp * hp - v[i] * (hm * hm - hp * hp)) / denom;
        let d2 = 2.0 * (hm * v[i + 1] - (hm + hp) * v[i] + hp * v[i - 1]) / denom;
        out[i] = d2 + model.density_log_derivative(r[i]) * d1;
    }

    let k = len - 1;
    let xs3 = [r[k - 2], r[k - 1], r[k]];
    let fs3 = [v[k - 2], v[k - 1], v[k]];
    let d1 = quad_derivative(xs3, fs3, r[k]);
    let xs4 = [r[k - 3], r[k - 2], r[k - 1], r[k]];
    let fs4 = [v[k - 3], v[k - 2], v[k - 1], v[k]];
    let d2 = cubic_second_derivative(xs4, fs4, r[k]);
    out[k] = d2 + model.density_log_derivative(r[k]) * d1;

    RadialFunction::from_values(u.grid().clone(), out)
}

/// Radial derivative u'(r), second order: central in the interior, one-sided
/// quadratic stencils at both ends.
pub fn radial_derivative(u: &RadialFunction) -> Result<RadialFunction> {
    check_grid(u)?;
    let r = u.grid().nodes();
    let v = u.values();
    let len = r.len();
    let mut out = vec![0.0; len];
    out[0] = quad_derivative([r[0], r[1], r[2]], [v[0], v[1], v[2]], r[0]);
    for i in 1..len - 1 {
        let hm = r[i] - r[i - 1];
        let hp = r[i + 1] - r[i];
        out[i] =
            (v[i + 1] * hm * hm - v[i - 1] * hp * hp - v[i] * (hm * hm - hp * hp))
                / (hm * hp * (hm + hp));
    }
    let k = len - 1;
    out[k] = quad_derivative([r[k - 2], r[k - 1], r[k]], [v[k - 2], v[k - 1], v[k]], r[k]);
    RadialFunction::from_values(u.grid().clone(), out)
}

/// Iterated operator magnitude:
/// |D^m u| = |Delta^k u| for m = 2k, |d/dr Delta^k u| for m = 2k + 1
/// (the radial gradient magnitude reduces to |u'| because |grad rho| = 1).
pub fn iterated_magnitude(model: &ModelManifold, u: &RadialFunction, m: u32) -> Result<RadialFunction> {
    if m == 0 {
        return Err(Error::domain("iterated magnitude requires m >= 1"));
    }
    let mut w = u.clone();
    for _ in 0..m / 2 {
        w = laplacian(model, &w)?;
    }
    if m % 2 == 1 {
        w = radial_derivative(&w)?;
    }
    w.map(f64::abs)
}

/// L^q norm (int |u|^q dv)^{1/q} by composite trapezoid on the grid.
pub fn lp_norm(model: &ModelManifold, u: &RadialFunction, q: f64) -> Result<f64> {
    if !(q > 0.0) {
        return Err(Error::domain(format!("lp_norm requires q > 0, got {q}")));
    }
    let r = u.grid().nodes();
    let integrand: Vec<f64> =
        r.iter().zip(u.values()).map(|(&x, &v)| v.abs().powf(q) * model.area_density(x)).collect();
    Ok(trapezoid(r, &integrand).powf(1.0 / q))
}

/// int |u|^p h(r) dv by trapezoid, with an open (midpoint) rule on the first
/// cell when h is singular at the origin.
///
/// Integrability of a power-like singularity is screened by estimating the
/// local slope of the full integrand near r = 0; a slope <= -1 means the
/// integral diverges and is rejected.
pub fn weighted_integral(
    model: &ModelManifold,
    u: &RadialFunction,
    p: f64,
    h: impl Fn(f64) -> f64,
) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::domain(format!("weighted integral requires p > 0, got {p}")));
    }
    let r = u.grid().nodes();
    let v = u.values();
    let g = |x: f64, ux: f64| ux.abs().powf(p) * h(x) * model.area_density(x);

    let h_at_zero = h(0.0);
    let mut acc = 0.0;
    let start = if h_at_zero.is_finite() {
        0
    } else {
        let r1 = r[1];
        let ga = g(r1 / 8.0, u.interpolate(r1 / 8.0));
        let gb = g(r1 / 2.0, u.interpolate(r1 / 2.0));
        if ga > 0.0 && gb > 0.0 {
            let slope = (gb / ga).ln() / 4.0f64.ln();
            if slope <= -1.0 + 1e-6 {
                return Err(Error::domain(format!(
                    "non-integrable singularity at r = 0 (local integrand slope {slope:.3})"
                )));
            }
        }
        // Midpoint rule on [0, r1]; never evaluates h at 0.
        let mid = 0.5 * r1;
        acc += g(mid, u.interpolate(mid)) * r1;
        1
    };
    for i in start..r.len() - 1 {
        let gi = g(r[i], v[i]);
        let gj = g(r[i + 1], v[i + 1]);
        acc += 0.5 * (gi + gj) * (r[i + 1] - r[i]);
    }
    if !acc.is_finite() {
        return Err(Error::numerics("weighted integral did not evaluate to a finite value"));
    }
    Ok(acc)
}

/// int |u'|^p dv evaluated cell-wise: the slope is constant on each cell of
/// the piecewise-linear interpolant, and int_cell A dr is the exact shell
/// volume, so the sum is exact for piecewise-linear u.
pub fn gradient_energy(model: &ModelManifold, u: &RadialFunction, p: f64) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::domain(format!("gradient energy requires p > 0, got {p}")));
    }
    let r = u.grid().nodes();
    let v = u.values();
    let mut acc = 0.0;
    let mut vol_lo = 0.0;
    for i in 0..r.len() - 1 {
        let vol_hi = model.ball_volume_unchecked(r[i + 1]);
        let slope = (v[i + 1] - v[i]) / (r[i + 1] - r[i]);
        acc += slope.abs().powf(p) * (vol_hi - vol_lo);
        vol_lo = vol_hi;
    }
    Ok(acc)
}
