//! Quadrature helpers: composite rules matched to a grid and an adaptive
//! Simpson rule for smooth integrands on [a, b].

use crate::error::{Error, Result};

/// Composite trapezoid over the nodes `xs` with samples `ys`.
pub fn trapezoid(xs: &[f64], ys: &[f64]) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    let mut acc = 0.0;
    for i in 0..xs.len().saturating_sub(1) {
        acc += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
    }
    acc
}

/// Two-point Gauss–Legendre abscissae on [0, 1].
const GAUSS2: [f64; 2] = [0.211324865405187118, 0.788675134594812882];

/// Four-point Gauss–Legendre rule on [0, 1]: (abscissa, weight).
const GAUSS4: [(f64, f64); 4] = [
    (0.069431844202973712, 0.173927422568726929),
    (0.330009478207571868, 0.326072577431273071),
    (0.669990521792428132, 0.326072577431273071),
    (0.930568155797026288, 0.173927422568726929),
];

/// Per-cell two-point Gauss rule over the cells of `xs`, calling `f` at the
/// Gauss abscissae. Exact for per-cell cubics.
pub fn gauss2_cells(xs: &[f64], mut f: impl FnMut(f64) -> f64) -> f64 {
    let mut acc = 0.0;
    for i in 0..xs.len().saturating_sub(1) {
        let h = xs[i + 1] - xs[i];
        let mut cell = 0.0;
        for &a in &GAUSS2 {
            cell += f(xs[i] + a * h);
        }
        acc += 0.5 * cell * h;
    }
    acc
}

/// Cumulative per-cell four-point Gauss rule: returns the running integral
/// of `f` at every node of `xs` (first entry 0).
pub fn gauss4_cumulative(xs: &[f64], mut f: impl FnMut(f64) -> f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(xs.len());
    out.push(0.0);
    let mut acc = 0.0;
    for i in 0..xs.len() - 1 {
        let h = xs[i + 1] - xs[i];
        let mut cell = 0.0;
        for &(a, w) in &GAUSS4 {
            cell += w * f(xs[i] + a * h);
        }
        acc += cell * h;
        out.push(acc);
    }
    out
}

fn simpson(f: &mut impl FnMut(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
    let m = 0.5 * (a + b);
    let fm = f(m);
    (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
}

fn adaptive_step(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    m: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let (lm, flm, left) = simpson(f, a, fa, m, fm);
    let (rm, frm, right) = simpson(f, m, fm, b, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || b - a < 1e-14 * (1.0 + a.abs()) {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::numerics(format!(
            "adaptive quadrature failed to converge on [{a}, {b}]"
        )));
    }
    let l = adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)?;
    let r = adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)?;
    Ok(l + r)
}

/// Adaptive Simpson quadrature of `f` on [a, b] to absolute tolerance `tol`.
///
/// The interval is pre-split into `seed_cells` panels so that integrands with
/// a single sharp feature (a bubble at scale sqrt(lambda), say) are seen by
/// the refinement at all.
pub fn adaptive_simpson(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    seed_cells: usize,
) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return Err(Error::domain(format!("bad quadrature interval [{a}, {b}]")));
    }
    let cells = seed_cells.max(1);
    let mut acc = 0.0;
    let cell_tol = tol / cells as f64;
    for i in 0..cells {
        let x0 = a + (b - a) * i as f64 / cells as f64;
        let x1 = a + (b - a) * (i + 1) as f64 / cells as f64;
        let f0 = f(x0);
        let f1 = f(x1);
        let (m, fm, whole) = simpson(&mut f, x0, f0, x1, f1);
        acc += adaptive_step(&mut f, x0, f0, x1, f1, m, fm, whole, cell_tol, 48)?;
    }
    Ok(acc)
}
