//! Closed-form special functions and the explicit sharp constants used by
//! the inequality benchmarks: the gamma function, unit-ball volumes, the
//! Cotsiolis–Tavoularis Sobolev constants S_{m,2}, the Mitidieri Rellich
//! constants R_{m,p}, Croke's isoperimetric constant, the elliptic-Kato
//! constant, the Gazzola–Grunau–Mitidieri leading constant L_m, and the
//! large-lambda bubble limit.

use crate::error::{Error, Result};
use crate::quadrature::adaptive_simpson;
use std::f64::consts::PI;

/// Lanczos approximation, g = 7, nine terms. Relative error below 1e-14 on
/// the positive real axis, which covers the 1e-13 budget on (0, 50].
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_core(z: f64) -> (f64, f64) {
    // Returns (t, x) with Gamma(z) = sqrt(2 pi) t^{z-1/2} e^{-t} x.
    let mut x = LANCZOS_COEF[0];
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        x += c / (z - 1.0 + i as f64);
    }
    (z + LANCZOS_G - 0.5, x)
}

/// Gamma function on the positive reals.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos argument away from its pole cluster.
        return Ok(PI / ((PI * x).sin() * gamma(1.0 - x)?));
    }
    let (t, s) = lanczos_core(x);
    Ok((2.0 * PI).sqrt() * t.powf(x - 0.5) * (-t).exp() * s)
}

/// Natural log of the gamma function on the positive reals.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        return Ok(PI.ln() - (PI * x).sin().ln() - ln_gamma(1.0 - x)?);
    }
    let (t, s) = lanczos_core(x);
    Ok(0.5 * (2.0 * PI).ln() + (x - 0.5) * t.ln() - t + s.ln())
}

/// Volume of the n-dimensional Euclidean unit ball.
pub fn unit_ball_volume(n: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("unit ball volume requires n >= 1"));
    }
    let nf = n as f64;
    Ok(PI.powf(nf / 2.0) / gamma(nf / 2.0 + 1.0)?)
}

/// Critical Sobolev exponent p* = n p / (n - m p).
pub fn critical_exponent(n: u32, m: u32, p: f64) -> Result<f64> {
    let nf = n as f64;
    let mf = m as f64;
    if nf <= mf * p {
        return Err(Error::domain(format!(
            "critical exponent requires n > m p (n = {n}, m = {m}, p = {p})"
        )));
    }
    Ok(nf * p / (nf - mf * p))
}

/// Sharp constant of the m-th order L^2 Sobolev inequality on R^n:
/// the largest S with  ||D^m u||_2^2 >= S ||u||_{2n/(n-2m)}^2.
///
/// Closed form (Cotsiolis–Tavoularis):
/// S_{m,2} = pi^m n (n-2m) prod_{s=1}^{m-1} (n^2 - 4 s^2)
///           * (Gamma(n/2)/Gamma(n))^{2m/n},
/// with the empty product equal to 1.
pub fn sobolev_constant_s2(n: u32, m: u32) -> Result<f64> {
    if m < 1 {
        return Err(Error::domain("sobolev constant requires m >= 1"));
    }
    if n <= 2 * m {
        return Err(Error::domain(format!(
            "sobolev constant requires n > 2m (n = {n}, m = {m})"
        )));
    }
    let nf = n as f64;
    let mf = m as f64;
    let gamma_ratio = ((2.0 * mf / nf) * (ln_gamma(nf / 2.0)? - ln_gamma(nf)?)).exp();
    let factors = (1..m).map(|s| nf * nf - 4.0 * (s as f64) * (s as f64));
    let product = if m > 9 {
        factors.map(f64::ln).sum::<f64>().exp()
    } else {
        factors.product::<f64>()
    };
    Ok(PI.powi(m as i32) * nf * (nf - 2.0 * mf) * product * gamma_ratio)
}

/// Sharp constant of the m-th order L^p Rellich inequality on R^n
/// (Mitidieri), with separate closed forms for even and odd m; empty
/// products are 1.
pub fn rellich_constant(n: u32, m: u32, p: f64) -> Result<f64> {
    if m < 1 {
        return Err(Error::domain("rellich constant requires m >= 1"));
    }
    if !(p > 1.0) {
        return Err(Error::domain(format!("rellich constant requires p > 1, got {p}")));
    }
    let nf = n as f64;
    let mf = m as f64;
    if nf <= mf * p {
        return Err(Error::domain(format!(
            "rellich constant requires n > m p (n = {n}, m = {m}, p = {p})"
        )));
    }
    let k = m / 2;
    let mut factors: Vec<f64> = Vec::with_capacity(m as usize);
    if m % 2 == 1 {
        factors.push((nf - p) / p);
        for s in 1..=k {
            let sf = s as f64;
            factors.push(nf / p - 2.0 * sf - 1.0);
            factors.push(nf * (p - 1.0) / p + 2.0 * sf - 1.0);
        }
    } else {
        for s in 1..=k {
            let sf = s as f64;
            factors.push(nf / p - 2.0 * sf);
            factors.push(nf * (p - 1.0) / p + 2.0 * sf - 2.0);
        }
    }
    // Every factor is positive under n > m p.
    if factors.len() > 8 {
        Ok((p * factors.iter().map(|f| f.ln()).sum::<f64>()).exp())
    } else {
        Ok(factors.iter().map(|f| f.powf(p)).product())
    }
}

/// Croke's isoperimetric constant for Cartan–Hadamard manifolds, n >= 3:
/// c = n^{-1/n} omega_n^{1-2/n}
///     ((n-1) omega_{n-1} I_n)^{2/n - 1},
/// I_n = int_0^{pi/2} cos^{n/(n-2)}(t) sin^{n-2}(t) dt.
///
/// Equals 1 exactly at n = 4 and is < 1 otherwise.
pub fn croke_constant(n: u32) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain("croke constant requires n >= 3"));
    }
    let nf = n as f64;
    let cos_exp = nf / (nf - 2.0);
    let sin_exp = (n - 2) as i32;
    let integral = adaptive_simpson(
        |t| t.cos().powf(cos_exp) * t.sin().powi(sin_exp),
        0.0,
        PI / 2.0,
        1e-12,
        4,
    )?;
    let omega_n = unit_ball_volume(n)?;
    let omega_nm1 = unit_ball_volume(n - 1)?;
    let inner = (nf - 1.0) * omega_nm1 * integral;
    Ok(nf.powf(-1.0 / nf) * omega_n.powf(1.0 - 2.0 / nf) * inner.powf(2.0 / nf - 1.0))
}

/// Isoperimetric constant from a bounded elliptic Kato constant:
/// c = (1 - (n-2) k_inf)^{4(n-1)/(n(n-2))} beta^{1/n} omega_n^{-1/n}.
pub fn kato_constant(n: u32, beta: f64, k_inf: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain("kato constant requires n >= 3"));
    }
    if !(beta > 0.0) {
        return Err(Error::domain(format!("kato constant requires beta > 0, got {beta}")));
    }
    let nf = n as f64;
    if !(0.0..1.0 / (nf - 2.0)).contains(&k_inf) {
        return Err(Error::domain(format!(
            "kato constant requires 0 <= k_inf < 1/(n-2), got {k_inf}"
        )));
    }
    let omega_n = unit_ball_volume(n)?;
    let base = 1.0 - (nf - 2.0) * k_inf;
    Ok(base.powf(4.0 * (nf - 1.0) / (nf * (nf - 2.0))) * beta.powf(1.0 / nf) * omega_n.powf(-1.0 / nf))
}

/// Leading constant of the higher-order Hardy–Rellich improvement:
/// L_m = 4^{-m} prod_{j=1}^{m} (n + 2m - 4j)^2.
///
/// The product index runs j = 1..m; every factor satisfies
/// n + 2m - 4j >= n - 2m > 0.
pub fn gazzola_lm(n: u32, m: u32) -> Result<f64> {
    if m < 1 {
        return Err(Error::domain("gazzola L_m requires m >= 1"));
    }
    if n <= 2 * m {
        return Err(Error::domain(format!(
            "gazzola L_m requires n > 2m (n = {n}, m = {m})"
        )));
    }
    let nf = n as f64;
    let mf = m as f64;
    let factors = (1..=m).map(|j| {
        let f = nf + 2.0 * mf - 4.0 * j as f64;
        f * f
    });
    let product = if m > 8 {
        factors.map(f64::ln).sum::<f64>().exp()
    } else {
        factors.product::<f64>()
    };
    Ok(product / 4.0f64.powi(m as i32))
}

/// Large-lambda limit of lambda^{s - n/2} * int (lambda + rho^2)^{-s} dv:
/// omega_n * AVR * Gamma(n/2 + 1) Gamma(s - n/2) / Gamma(s).
pub fn bubble_limit_constant(n: u32, s: f64, avr: f64) -> Result<f64> {
    let nf = n as f64;
    if !(s > nf / 2.0) {
        return Err(Error::domain(format!(
            "bubble limit requires s > n/2 (n = {n}, s = {s})"
        )));
    }
    if !(avr > 0.0 && avr <= 1.0) {
        return Err(Error::domain(format!("bubble limit requires avr in (0, 1], got {avr}")));
    }
    let omega_n = unit_ball_volume(n)?;
    let log_ratio = ln_gamma(nf / 2.0 + 1.0)? + ln_gamma(s - nf / 2.0)? - ln_gamma(s)?;
    Ok(omega_n * avr * log_ratio.exp())
}

/// The bundle of exponents and sharp constants attached to one (n, m, p)
/// inequality family.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityConstants {
    pub n: u32,
    pub m: u32,
    pub p: f64,
    pub pstar: f64,
    /// Sharp Sobolev constant; populated only for p = 2 (no closed form is
    /// available otherwise).
    pub sobolev_s2: Option<f64>,
    pub rellich: f64,
}

impl InequalityConstants {
    pub fn new(n: u32, m: u32, p: f64) -> Result<Self> {
        let pstar = critical_exponent(n, m, p)?;
        let sobolev_s2 = if p == 2.0 { Some(sobolev_constant_s2(n, m)?) } else { None };
        let rellich = rellich_constant(n, m, p)?;
        Ok(InequalityConstants { n, m, p, pstar, sobolev_s2, rellich })
    }
}
