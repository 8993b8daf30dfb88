//! Radial model manifolds: Euclidean space, Euclidean cones with a
//! prescribed asymptotic volume ratio, and hyperbolic space. Each model is
//! determined by its area density A(r) (the perimeter of the geodesic sphere
//! of radius r about the base point), from which volumes and all radial
//! integrals follow.

use crate::constants::{croke_constant, unit_ball_volume};
use crate::error::{Error, Result};

/// Which radial model space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelKind {
    Euclidean,
    /// Euclidean metric restricted to a solid-angle fraction `avr` in (0, 1];
    /// realizes asymptotic volume ratio `avr` with isoperimetric equality on
    /// balls about the apex.
    Cone { avr: f64 },
    Hyperbolic,
}

/// A radial model manifold together with its isoperimetric constant.
///
/// Immutable after construction; all methods take `&self`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelManifold {
    dim: u32,
    kind: ModelKind,
    c_iso: f64,
    omega_n: f64,
}

impl ModelManifold {
    /// Build a model with the isoperimetric constant resolved as follows
    /// unless overridden: 1 for Euclidean, avr^{1/n} for cones, and for
    /// hyperbolic space 1 when n in {2, 3, 4} (the proved Cartan–Hadamard
    /// cases) or Croke's constant for n >= 5.
    pub fn new(dim: u32, kind: ModelKind, c_override: Option<f64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::domain(format!("model dimension must be >= 2, got {dim}")));
        }
        if let ModelKind::Cone { avr } = kind {
            if !(avr > 0.0 && avr <= 1.0) {
                return Err(Error::domain(format!("cone avr must lie in (0, 1], got {avr}")));
            }
        }
        let c_iso = match c_override {
            Some(c) => {
                if !(c > 0.0 && c <= 1.0) {
                    return Err(Error::domain(format!(
                        "isoperimetric override must lie in (0, 1], got {c}"
                    )));
                }
                c
            }
            None => match kind {
                ModelKind::Euclidean => 1.0,
                ModelKind::Cone { avr } => avr.powf(1.0 / dim as f64),
                ModelKind::Hyperbolic => {
                    if dim <= 4 {
                        1.0
                    } else {
                        croke_constant(dim)?
                    }
                }
            },
        };
        let omega_n = unit_ball_volume(dim)?;
        Ok(ModelManifold { dim, kind, c_iso, omega_n })
    }

    pub fn euclidean(dim: u32) -> Result<Self> {
        Self::new(dim, ModelKind::Euclidean, None)
    }

    pub fn cone(dim: u32, avr: f64) -> Result<Self> {
        Self::new(dim, ModelKind::Cone { avr }, None)
    }

    pub fn hyperbolic(dim: u32) -> Result<Self> {
        Self::new(dim, ModelKind::Hyperbolic, None)
    }

    pub fn dimension(&self) -> u32 {
        self.dim
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// Isoperimetric constant c_g of the model.
    pub fn c_iso(&self) -> f64 {
        self.c_iso
    }

    /// Volume of the Euclidean unit ball in the model dimension.
    pub fn unit_ball_volume(&self) -> f64 {
        self.omega_n
    }

    /// Area density A(r): perimeter of the geodesic sphere of radius r.
    pub fn area_density(&self, r: f64) -> f64 {
        let n = self.dim as f64;
        let sphere = n * self.omega_n;
        match self.kind {
            ModelKind::Euclidean => sphere * r.powi(self.dim as i32 - 1),
            ModelKind::Cone { avr } => avr * sphere * r.powi(self.dim as i32 - 1),
            ModelKind::Hyperbolic => sphere * r.sinh().powi(self.dim as i32 - 1),
        }
    }

    /// d/dr log A(r); undefined at r = 0.
    pub(crate) fn density_log_derivative(&self, r: f64) -> f64 {
        let nm1 = (self.dim - 1) as f64;
        match self.kind {
            ModelKind::Euclidean | ModelKind::Cone { .. } => nm1 / r,
            ModelKind::Hyperbolic => nm1 * r.cosh() / r.sinh(),
        }
    }

    /// Volume of the geodesic ball of radius r about the base point.
    ///
    /// Closed form in every case; the hyperbolic volume uses the standard
    /// antiderivative recursion for powers of sinh.
    pub fn ball_volume(&self, r: f64) -> Result<f64> {
        if !(r >= 0.0) {
            return Err(Error::domain(format!("ball volume requires r >= 0, got {r}")));
        }
        Ok(self.ball_volume_unchecked(r))
    }

    pub(crate) fn ball_volume_unchecked(&self, r: f64) -> f64 {
        match self.kind {
            ModelKind::Euclidean => self.omega_n * r.powi(self.dim as i32),
            ModelKind::Cone { avr } => avr * self.omega_n * r.powi(self.dim as i32),
            ModelKind::Hyperbolic => {
                self.dim as f64 * self.omega_n * sinh_power_antiderivative(self.dim - 1, r)
            }
        }
    }

    /// Exact asymptotic volume ratio: 1 (Euclidean), avr (cone), 0
    /// (hyperbolic).
    pub fn asymptotic_volume_ratio(&self) -> f64 {
        match self.kind {
            ModelKind::Euclidean => 1.0,
            ModelKind::Cone { avr } => avr,
            ModelKind::Hyperbolic => 0.0,
        }
    }

    /// Numeric estimate vol(B_r) / (omega_n r^n) used to cross-check the
    /// exact ratio.
    pub fn avr_numeric_estimate(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::domain("avr estimate requires r > 0"));
        }
        Ok(self.ball_volume(r)? / (self.omega_n * r.powi(self.dim as i32)))
    }
}

/// int_0^r sinh^k(t) dt by the reduction
/// I_k = sinh^{k-1}(r) cosh(r) / k - (k-1)/k I_{k-2},
/// I_0 = r, I_1 = cosh(r) - 1.
fn sinh_power_antiderivative(k: u32, r: f64) -> f64 {
    match k {
        0 => r,
        1 => r.cosh() - 1.0,
        _ => {
            let kf = k as f64;
            (r.sinh().powi(k as i32 - 1) * r.cosh()) / kf
                - (kf - 1.0) / kf * sinh_power_antiderivative(k - 2, r)
        }
    }
}
