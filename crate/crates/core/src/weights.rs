//! Weight families for improved Rellich-type inequalities: plain inverse
//! powers, the iterated-log ladder of Adimurthi–Grossi–Santra, the
//! Ghoussoub–Moradifam log-chain weights, and the Brezis–Vazquez-type
//! second-order display with its Rayleigh eigenconstants.

use crate::constants::unit_ball_volume;
use crate::eigen::capital_lambda;
use crate::error::{Error, Result};

/// ell(t) = 1 / (1 - log t), defined for t in (0, e).
pub fn ell(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("ell requires t > 0, got {t}")));
    }
    let denom = 1.0 - t.ln();
    if denom <= 0.0 {
        return Err(Error::domain(format!("ell undefined at t = {t} (log too large)")));
    }
    Ok(1.0 / denom)
}

/// s-fold composition ell_[s]; ell_[0] is the identity.
pub fn iterated_ell(s: u32, t: f64) -> Result<f64> {
    let mut x = t;
    for _ in 0..s {
        x = ell(x)?;
    }
    Ok(x)
}

/// log_[i]: i-fold natural logarithm; errors when any intermediate is
/// non-positive. log_[0] is the identity.
pub fn iterated_log(i: u32, x: f64) -> Result<f64> {
    let mut v = x;
    for _ in 0..i {
        if !(v > 0.0) {
            return Err(Error::domain(format!("iterated log hit a non-positive value at {x}")));
        }
        v = v.ln();
    }
    Ok(v)
}

/// exp_[k]: k-fold exponential; exp_[0] is the identity.
pub fn iterated_exp(k: u32, x: f64) -> f64 {
    let mut v = x;
    for _ in 0..k {
        v = v.exp();
    }
    v
}

/// Shape of a radial weight h(r) >= 0.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightKind {
    /// h = 1.
    Constant,
    /// h = r^{-exponent}, exponent > 0.
    InversePower { exponent: f64 },
    /// h = r^{-4} prod_{s=1..terms} ell_[s]^2(r / r_scale), clipped to 0 for
    /// r > r_scale so the extension stays non-increasing.
    AdimurthiIterated { terms: u32, r_scale: f64 },
    /// h = r^{-4} (prod_{i=1..terms} log_[i](outer_radius / r))^{-2},
    /// clipped to 0 for r > clip_radius.
    GhoussoubIterated { terms: u32, outer_radius: f64, clip_radius: f64 },
}

/// A labelled radial weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight {
    pub label: String,
    pub kind: WeightKind,
}

impl Weight {
    pub fn constant() -> Self {
        Weight { label: "one".into(), kind: WeightKind::Constant }
    }

    pub fn inverse_power(exponent: f64) -> Self {
        Weight { label: format!("r^-{exponent}"), kind: WeightKind::InversePower { exponent } }
    }

    /// Evaluate h(r) for r > 0. Outside the admissible radius of the
    /// iterated families the weight is 0; singular kinds return +inf at
    /// r = 0 so integrators switch to the open first-cell rule.
    pub fn eval(&self, r: f64) -> f64 {
        match &self.kind {
            WeightKind::Constant => 1.0,
            WeightKind::InversePower { exponent } => {
                if r == 0.0 {
                    f64::INFINITY
                } else {
                    r.powf(-exponent)
                }
            }
            WeightKind::AdimurthiIterated { terms, r_scale } => {
                if r == 0.0 {
                    return f64::INFINITY;
                }
                if r > *r_scale {
                    return 0.0;
                }
                let mut x = r / r_scale;
                let mut prod = 1.0;
                for _ in 0..*terms {
                    x = match ell(x) {
                        Ok(v) => v,
                        Err(_) => return 0.0,
                    };
                    prod *= x * x;
                }
                r.powi(-4) * prod
            }
            WeightKind::GhoussoubIterated { terms, outer_radius, clip_radius } => {
                if r == 0.0 {
                    return f64::INFINITY;
                }
                if r > *clip_radius {
                    return 0.0;
                }
                let mut x = outer_radius / r;
                let mut prod = 1.0;
                for _ in 0..*terms {
                    if !(x > 0.0) {
                        return 0.0;
                    }
                    x = x.ln();
                    if !(x > 0.0) {
                        return 0.0;
                    }
                    prod *= x;
                }
                r.powi(-4) / (prod * prod)
            }
        }
    }
}

/// One summand of an assembled right-hand side: coefficient * int |u|^p h dv.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedTerm {
    pub weight: Weight,
    pub coefficient: f64,
}

/// Which improved-Rellich display to assemble (all are p = 2,
/// second-order displays).
#[derive(Debug, Clone, PartialEq)]
pub enum WeightFamily {
    /// Iterated-ell ladder with `terms` = T summands scaled by `r_scale` = R.
    Adimurthi { terms: u32, r_scale: f64 },
    /// Log-chain ladder with `terms` = k summands; `star_radius` is the
    /// radius R of the symmetrized domain, giving outer radius
    /// R * exp_[k-1](e).
    Ghoussoub { terms: u32, star_radius: f64 },
    /// Brezis–Vazquez-type display with the (omega_n / volume)^{2/n}
    /// factors; eigenconstants Lambda(2), Lambda(4) are computed on
    /// `eigen_cells` cells.
    GazzolaBv { volume: f64, eigen_cells: usize },
}

/// Assemble the term list of the chosen display's right-hand side
/// (everything inside the big parentheses, before the c_g^{2p} factor).
pub fn build_weight(family: &WeightFamily, n: u32, p: f64) -> Result<Vec<WeightedTerm>> {
    if p != 2.0 {
        return Err(Error::config(format!(
            "the assembled second-order displays are stated for p = 2, got p = {p}"
        )));
    }
    if n <= 4 {
        return Err(Error::domain(format!("second-order displays require n > 4, got n = {n}")));
    }
    let nf = n as f64;
    let leading = nf * nf * (nf - 4.0) * (nf - 4.0) / 16.0;
    let ladder_coeff = 1.0 + nf * (nf - 4.0) / 8.0;
    match family {
        WeightFamily::Adimurthi { terms, r_scale } => {
            if *terms < 1 {
                return Err(Error::domain("adimurthi family requires T >= 1"));
            }
            if !(r_scale > &0.0) {
                return Err(Error::domain("adimurthi family requires R > 0"));
            }
            let mut out = vec![WeightedTerm { weight: Weight::inverse_power(4.0), coefficient: leading }];
            for j in 1..=*terms {
                out.push(WeightedTerm {
                    weight: Weight {
                        label: format!("adimurthi[{j}]"),
                        kind: WeightKind::AdimurthiIterated { terms: j, r_scale: *r_scale },
                    },
                    coefficient: ladder_coeff,
                });
            }
            Ok(out)
        }
        WeightFamily::Ghoussoub { terms, star_radius } => {
            if *terms < 1 {
                return Err(Error::domain("ghoussoub family requires k >= 1"));
            }
            if !(star_radius > &0.0) {
                return Err(Error::domain("ghoussoub family requires R > 0"));
            }
            if n < 5 {
                return Err(Error::domain("ghoussoub display requires n >= 5"));
            }
            let outer = star_radius * iterated_exp(terms - 1, std::f64::consts::E);
            let mut out = vec![WeightedTerm { weight: Weight::inverse_power(4.0), coefficient: leading }];
            for j in 1..=*terms {
                out.push(WeightedTerm {
                    weight: Weight {
                        label: format!("ghoussoub[{j}]"),
                        kind: WeightKind::GhoussoubIterated {
                            terms: j,
                            outer_radius: outer,
                            clip_radius: *star_radius,
                        },
                    },
                    coefficient: ladder_coeff,
                });
            }
            Ok(out)
        }
        WeightFamily::GazzolaBv { volume, eigen_cells } => {
            if !(volume > &0.0) {
                return Err(Error::domain("gazzola display requires a positive domain volume"));
            }
            let omega = unit_ball_volume(n)?;
            let lambda2 = capital_lambda(2, *eigen_cells)?;
            let lambda4 = capital_lambda(4, *eigen_cells)?;
            let vol_factor = (omega / volume).powf(2.0 / nf);
            Ok(vec![
                WeightedTerm { weight: Weight::inverse_power(4.0), coefficient: leading },
                WeightedTerm {
                    weight: Weight::inverse_power(2.0),
                    coefficient: nf * (nf - 4.0) / 2.0 * lambda2 * vol_factor,
                },
                WeightedTerm {
                    weight: Weight::constant(),
                    coefficient: lambda4 * lambda4 * vol_factor * vol_factor,
                },
            ])
        }
    }
}
