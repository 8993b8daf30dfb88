//! Left/right-hand sides of the Sobolev, Rellich, and weighted inequalities
//! as numeric quotients against their theoretical constants.

use crate::calculus::{iterated_magnitude, lp_norm, weighted_integral};
use crate::constants::{critical_exponent, rellich_constant, sobolev_constant_s2};
use crate::error::{Error, Result};
use crate::geometry::ModelManifold;
use crate::grid::RadialFunction;
use crate::quadrature::trapezoid;
use crate::weights::{Weight, WeightedTerm};

/// lhs / rhs_base compared against the theoretical constant.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientReport {
    /// int |D^m u|^p dv.
    pub lhs: f64,
    /// The u-dependent right-hand integral (norm power or weighted sum).
    pub rhs_base: f64,
    /// c_iso^{mp} times the Euclidean constant (or the bare c_iso^{mp} for
    /// assembled multi-term displays whose constants sit inside rhs_base).
    pub theoretical_constant: f64,
    pub ratio: f64,
    /// ratio >= theoretical_constant * (1 - tol).
    pub pass: bool,
}

fn require_admissible(model: &ModelManifold, m: u32, p: f64) -> Result<()> {
    if m < 1 {
        return Err(Error::domain("quotients require m >= 1"));
    }
    if !(p > 1.0) {
        return Err(Error::domain(format!("quotients require p > 1, got {p}")));
    }
    let nf = model.dimension() as f64;
    if nf <= m as f64 * p {
        return Err(Error::domain(format!(
            "quotients require n > m p (n = {nf}, m = {m}, p = {p})"
        )));
    }
    Ok(())
}

fn magnitude_integral(model: &ModelManifold, u: &RadialFunction, m: u32, p: f64) -> Result<f64> {
    let mag = iterated_magnitude(model, u, m)?;
    let nodes = u.grid().nodes();
    let integrand: Vec<f64> = nodes
        .iter()
        .zip(mag.values())
        .map(|(&r, &v)| v.powf(p) * model.area_density(r))
        .collect();
    Ok(trapezoid(nodes, &integrand))
}

fn report(lhs: f64, rhs_base: f64, constant: f64, tol: f64) -> Result<QuotientReport> {
    if !(rhs_base > 0.0) || !rhs_base.is_finite() || !lhs.is_finite() {
        return Err(Error::numerics(format!(
            "degenerate quotient: lhs = {lhs}, rhs_base = {rhs_base}"
        )));
    }
    let ratio = lhs / rhs_base;
    Ok(QuotientReport {
        lhs,
        rhs_base,
        theoretical_constant: constant,
        ratio,
        pass: ratio >= constant * (1.0 - tol),
    })
}

/// Sobolev quotient: int |D^m u|^p dv / (int |u|^{p*} dv)^{p/p*} against
/// c_iso^{mp} S_{m,2}. For p != 2 no closed-form constant exists and a
/// user-supplied one is required.
pub fn sobolev_quotient(
    model: &ModelManifold,
    u: &RadialFunction,
    m: u32,
    p: f64,
    constant: Option<f64>,
    tol: f64,
) -> Result<QuotientReport> {
    require_admissible(model, m, p)?;
    if u.is_zero() {
        return Err(Error::domain("sobolev quotient rejects the zero function"));
    }
    let n = model.dimension();
    let euclidean_constant = match (p == 2.0, constant) {
        (_, Some(c)) => c,
        (true, None) => sobolev_constant_s2(n, m)?,
        (false, None) => {
            return Err(Error::config(
                "no closed-form Sobolev constant for p != 2; supply one explicitly",
            ))
        }
    };
    let pstar = critical_exponent(n, m, p)?;
    let lhs = magnitude_integral(model, u, m, p)?;
    let rhs_base = lp_norm(model, u, pstar)?.powf(p);
    let c = model.c_iso().powf(m as f64 * p) * euclidean_constant;
    report(lhs, rhs_base, c, tol)
}

/// Rellich quotient: int |D^m u|^p dv / int |u|^p r^{-mp} dv against
/// c_iso^{mp} R_{m,p}.
pub fn rellich_quotient(
    model: &ModelManifold,
    u: &RadialFunction,
    m: u32,
    p: f64,
    tol: f64,
) -> Result<QuotientReport> {
    let n = model.dimension();
    let constant = rellich_constant(n, m, p)?;
    let weight = Weight::inverse_power(m as f64 * p);
    weighted_quotient(model, u, m, p, &weight, constant, tol)
}

/// General weighted quotient against a user-supplied Euclidean constant
/// C_{m,p} for the weight w; the theoretical constant is c_iso^{mp} C_{m,p}.
/// The weight must be non-increasing (checked by sampling on the grid).
pub fn weighted_quotient(
    model: &ModelManifold,
    u: &RadialFunction,
    m: u32,
    p: f64,
    w: &Weight,
    euclidean_constant: f64,
    tol: f64,
) -> Result<QuotientReport> {
    require_admissible(model, m, p)?;
    if u.is_zero() {
        return Err(Error::domain("weighted quotient rejects the zero function"));
    }
    check_nonincreasing(w, u.grid().nodes())?;
    let lhs = magnitude_integral(model, u, m, p)?;
    let rhs_base = weighted_integral(model, u, p, |r| w.eval(r))?;
    let c = model.c_iso().powf(m as f64 * p) * euclidean_constant;
    report(lhs, rhs_base, c, tol)
}

fn check_nonincreasing(w: &Weight, nodes: &[f64]) -> Result<()> {
    let mut prev = f64::INFINITY;
    for &r in nodes.iter().skip(1) {
        let v = w.eval(r);
        if !(v >= 0.0) {
            return Err(Error::domain(format!("weight {} is negative at r = {r}", w.label)));
        }
        if v > prev * (1.0 + 1e-12) {
            return Err(Error::domain(format!("weight {} increases at r = {r}", w.label)));
        }
        prev = v;
    }
    Ok(())
}

/// Assembled multi-term display: lhs = int |D^m u|^p dv versus
/// rhs_base = sum_i coeff_i int |u|^p h_i dv; passes when
/// lhs >= c_iso^{mp} rhs_base (1 - tol).
pub fn assembled_quotient(
    model: &ModelManifold,
    u: &RadialFunction,
    m: u32,
    p: f64,
    terms: &[WeightedTerm],
    tol: f64,
) -> Result<QuotientReport> {
    require_admissible(model, m, p)?;
    if u.is_zero() {
        return Err(Error::domain("assembled quotient rejects the zero function"));
    }
    if terms.is_empty() {
        return Err(Error::config("assembled quotient needs at least one term"));
    }
    let lhs = magnitude_integral(model, u, m, p)?;
    let mut rhs_base = 0.0;
    for term in terms {
        check_nonincreasing(&term.weight, u.grid().nodes())?;
        rhs_base += term.coefficient * weighted_integral(model, u, p, |r| term.weight.eval(r))?;
    }
    let c = model.c_iso().powf(m as f64 * p);
    report(lhs, rhs_base, c, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::RadialGrid;
    use approx::assert_relative_eq;

    const TOL: f64 = 1e-6;

    /// Smooth bump vanishing to high order at R = 1.
    fn bump(cells: usize, order: i32) -> RadialFunction {
        RadialFunction::from_fn(RadialGrid::uniform(1.0, cells).unwrap(), move |r| {
            (1.0 - r * r).max(0.0).powi(order)
        })
        .unwrap()
    }

    #[test]
    fn hardy_quotient_euclidean() {
        // m = 1, p = 2, n = 5: ratio must clear ((n-2)/2)^2 = 2.25.
        let m = ModelManifold::euclidean(5).unwrap();
        let u = bump(2048, 3);
        let rep = rellich_quotient(&m, &u, 1, 2.0, TOL).unwrap();
        assert!(rep.pass, "hardy ratio {} vs constant {}", rep.ratio, rep.theoretical_constant);
        assert_relative_eq!(rep.theoretical_constant, 2.25, max_relative = 1e-13);
        assert!(rep.ratio >= 2.25);
    }

    #[test]
    fn spiked_profile_near_hardy_constant() {
        // u = r^{1/2}(1 - r)_+ (smoothed) hugs the Hardy extremal scaling;
        // ratio stays above ((n-2)/2)^2 but not by much.
        let m = ModelManifold::euclidean(5).unwrap();
        let g = RadialGrid::uniform(1.0, 8192).unwrap();
        let u = RadialFunction::from_fn(g, |r| r.sqrt() * (1.0 - r).max(0.0)).unwrap();
        let rep = rellich_quotient(&m, &u, 1, 2.0, TOL).unwrap();
        assert!(rep.ratio >= 2.25, "ratio {}", rep.ratio);
        assert!(rep.ratio <= 20.0, "unexpectedly large ratio {}", rep.ratio);
    }

    #[test]
    fn rellich_second_order_battery() {
        let n = 6u32;
        let e = ModelManifold::euclidean(n).unwrap();
        let c = ModelManifold::cone(n, 0.5).unwrap();
        for order in 4..=8 {
            let u = bump(2048, order);
            let rep_e = rellich_quotient(&e, &u, 2, 2.0, TOL).unwrap();
            assert!(rep_e.pass, "euclidean n=6 order={order}: ratio {}", rep_e.ratio);
            assert_relative_eq!(rep_e.theoretical_constant, 9.0, max_relative = 1e-13);
            let rep_c = rellich_quotient(&c, &u, 2, 2.0, TOL).unwrap();
            assert!(rep_c.pass, "cone n=6 order={order}: ratio {}", rep_c.ratio);
            assert_relative_eq!(
                rep_c.theoretical_constant,
                0.5f64.powf(4.0 / 6.0) * 9.0,
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn sobolev_rejects_misuse() {
        let m = ModelManifold::euclidean(5).unwrap();
        let u = bump(256, 3);
        assert!(sobolev_quotient(&m, &u, 1, 2.5, None, TOL).is_err());
        assert!(sobolev_quotient(&m, &u, 3, 2.0, None, TOL).is_err());
        let zero = RadialFunction::from_fn(RadialGrid::uniform(1.0, 256).unwrap(), |_| 0.0).unwrap();
        assert!(sobolev_quotient(&m, &zero, 1, 2.0, None, TOL).is_err());
        let n3 = ModelManifold::euclidean(3).unwrap();
        assert!(rellich_quotient(&n3, &u, 2, 2.0, TOL).is_err());
    }

    #[test]
    fn sobolev_battery_with_margin() {
        let n = 5u32;
        let models = [
            ModelManifold::euclidean(n).unwrap(),
            ModelManifold::cone(n, 0.5).unwrap(),
            ModelManifold::hyperbolic(n).unwrap(),
        ];
        for model in &models {
            for order in 3..=6 {
                let u = bump(2048, order);
                let rep = sobolev_quotient(model, &u, 1, 2.0, None, TOL).unwrap();
                assert!(
                    rep.pass,
                    "sobolev m=1 on {:?} order={order}: ratio {} constant {}",
                    model.kind(),
                    rep.ratio,
                    rep.theoretical_constant
                );
            }
        }
    }

    #[test]
    fn ratio_scaling_invariance() {
        let m = ModelManifold::cone(6, 0.4).unwrap();
        let u = bump(1024, 4);
        let a = rellich_quotient(&m, &u, 2, 2.0, TOL).unwrap();
        let b = rellich_quotient(&m, &u.scaled(123.456), 2, 2.0, TOL).unwrap();
        assert_relative_eq!(a.ratio, b.ratio, max_relative = 1e-10);
        let sa = sobolev_quotient(&m, &u, 2, 2.0, None, TOL).unwrap();
        let sb = sobolev_quotient(&m, &u.scaled(0.003), 2, 2.0, None, TOL).unwrap();
        assert_relative_eq!(sa.ratio, sb.ratio, max_relative = 1e-10);
    }

    #[test]
    fn weighted_specializes_to_rellich() {
        let model = ModelManifold::euclidean(6).unwrap();
        let u = bump(1024, 4);
        let m = 2u32;
        let p = 2.0;
        let direct = rellich_quotient(&model, &u, m, p, TOL).unwrap();
        let via_weight = weighted_quotient(
            &model,
            &u,
            m,
            p,
            &Weight::inverse_power(4.0),
            rellich_constant(6, 2, 2.0).unwrap(),
            TOL,
        )
        .unwrap();
        assert_eq!(direct, via_weight);
    }

    #[test]
    fn increasing_weight_rejected() {
        let model = ModelManifold::euclidean(6).unwrap();
        let u = bump(256, 4);
        // An "inverse power" with negative exponent increases.
        let bad = Weight::inverse_power(-1.0);
        assert!(weighted_quotient(&model, &u, 2, 2.0, &bad, 1.0, TOL).is_err());
    }
}
