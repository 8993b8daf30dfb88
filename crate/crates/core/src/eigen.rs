//! One-dimensional Rayleigh-quotient eigenconstants on [0, 1] over the cone
//! X = { v : v'(0) = 0, v(1) = 0, v not identically 0 }.
//!
//! Two flavours are needed by the improved-Rellich displays:
//!
//! * `Gradient { a }`: the smallest eigenvalue of -(r^a v')' = lambda r^a v,
//!   solved by inverse iteration on a P1 finite-element discretization with
//!   exact element integrals of r^a (second order in the mesh width). With
//!   a = n - 1 this is Lambda(n) = j_{n/2-1,1}^2.
//! * the theta quotients lambda_theta and Lambda_theta built from
//!   Delta_theta v = v'' + (theta-1)/r v', minimized over the discrete cone
//!   by projected gradient descent with multi-start (for p = 2 each step
//!   minimizes exactly over the span of the iterate, the gradient, and the
//!   previous direction).

use crate::error::{Error, Result};

/// Which quotient to minimize.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RayleighProblem {
    /// inf int r^a |v'|^2 / int r^a v^2.
    Gradient { density_exponent: f64 },
    /// lambda_theta: inf int r^{2p-1} |Delta_theta v|^p / int r^{2p-1} |v|^p.
    ThetaSmall { theta: f64, p: f64 },
    /// Lambda_theta: inf int r^3 |v|^{p-2} (Delta_theta v)^2 / int r^{2p-1} |v|^p.
    ThetaCapital { theta: f64, p: f64 },
}

/// Minimize the requested Rayleigh quotient on a uniform grid with `cells`
/// cells.
pub fn eigen_rayleigh_1d(problem: &RayleighProblem, cells: usize) -> Result<f64> {
    if cells < 16 {
        return Err(Error::config(format!("rayleigh solve needs at least 16 cells, got {cells}")));
    }
    match *problem {
        RayleighProblem::Gradient { density_exponent } => {
            if !(density_exponent >= 0.0) {
                return Err(Error::domain(format!(
                    "gradient density exponent must be >= 0, got {density_exponent}"
                )));
            }
            gradient_eigenvalue(density_exponent, cells)
        }
        RayleighProblem::ThetaSmall { theta, p } => {
            if !(p > 1.0) {
                return Err(Error::domain(format!("lambda_theta requires p > 1, got {p}")));
            }
            if !(theta > 1.0) {
                return Err(Error::domain(format!("lambda_theta requires theta > 1, got {theta}")));
            }
            theta_quotient(theta, p, cells, false)
        }
        RayleighProblem::ThetaCapital { theta, p } => {
            if !(p >= 2.0) {
                return Err(Error::domain(format!("Lambda_theta requires p >= 2, got {p}")));
            }
            if !(theta > 1.0) {
                return Err(Error::domain(format!("Lambda_theta requires theta > 1, got {theta}")));
            }
            theta_quotient(theta, p, cells, true)
        }
    }
}

/// Lambda(n): first eigenvalue with the r^{n-1} density.
pub fn capital_lambda(n: u32, cells: usize) -> Result<f64> {
    eigen_rayleigh_1d(&RayleighProblem::Gradient { density_exponent: (n - 1) as f64 }, cells)
}

/// The eigenconstants of the p-th order improved Rellich display.
#[derive(Debug, Clone, PartialEq)]
pub struct GazzolaConstants {
    /// gamma = Lambda(2), density r.
    pub gamma_small: f64,
    /// lambda_theta.
    pub lambda_small: f64,
    /// Lambda_theta.
    pub lambda_capital: f64,
    /// Gamma = max{ (p-1)^{p-1} (n-2p)^{p-2} n^{p-2} / p^{2(p-2)} * Lambda_theta,
    ///              lambda_theta }.
    pub gamma_capital: f64,
    pub theta: f64,
}

pub fn gazzola_constants(n: u32, p: f64, cells: usize) -> Result<GazzolaConstants> {
    let nf = n as f64;
    if !(p >= 2.0) {
        return Err(Error::domain(format!("gazzola constants require p >= 2, got {p}")));
    }
    if nf <= 2.0 * p {
        return Err(Error::domain(format!("gazzola constants require n > 2p (n = {n}, p = {p})")));
    }
    let theta = 4.0 + nf * (p - 2.0) / p;
    let gamma_small = eigen_rayleigh_1d(&RayleighProblem::Gradient { density_exponent: 1.0 }, cells)?;
    let lambda_small = eigen_rayleigh_1d(&RayleighProblem::ThetaSmall { theta, p }, cells)?;
    let lambda_capital = eigen_rayleigh_1d(&RayleighProblem::ThetaCapital { theta, p }, cells)?;
    let coeff =
        (p - 1.0).powf(p - 1.0) * (nf - 2.0 * p).powf(p - 2.0) * nf.powf(p - 2.0) / p.powf(2.0 * (p - 2.0));
    let gamma_capital = (coeff * lambda_capital).max(lambda_small);
    Ok(GazzolaConstants { gamma_small, lambda_small, lambda_capital, gamma_capital, theta })
}

// ---------------------------------------------------------------------------
// Gradient case: P1 finite elements + inverse iteration.
// ---------------------------------------------------------------------------

struct Tridiag {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl Tridiag {
    fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = x.len();
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut v = self.diag[i] * x[i];
            if i > 0 {
                v += self.off[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                v += self.off[i] * x[i + 1];
            }
            y[i] = v;
        }
        y
    }

    /// Thomas solve; the matrices here are SPD.
    fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = b.len();
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut denom = self.diag[0];
        if denom == 0.0 {
            return Err(Error::numerics("singular tridiagonal pivot"));
        }
        c[0] = if n > 1 { self.off[0] / denom } else { 0.0 };
        d[0] = b[0] / denom;
        for i in 1..n {
            denom = self.diag[i] - self.off[i - 1] * c[i - 1];
            if denom == 0.0 {
                return Err(Error::numerics("singular tridiagonal pivot"));
            }
            if i < n - 1 {
                c[i] = self.off[i] / denom;
            }
            d[i] = (b[i] - self.off[i - 1] * d[i - 1]) / denom;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d[i] - c[i] * x[i + 1];
        }
        Ok(x)
    }
}

/// int_{r0}^{r1} r^{a+k} dr.
fn power_moment(a: f64, k: u32, r0: f64, r1: f64) -> f64 {
    let e = a + k as f64 + 1.0;
    (r1.powf(e) - r0.powf(e)) / e
}

fn gradient_eigenvalue(a: f64, cells: usize) -> Result<f64> {
    let n = cells;
    let h = 1.0 / n as f64;
    // Unknowns at nodes 0..n-1; v(1) = 0 is eliminated.
    let mut kd = vec![0.0; n];
    let mut ko = vec![0.0; n - 1];
    let mut md = vec![0.0; n];
    let mut mo = vec![0.0; n - 1];
    for e in 0..n {
        let r0 = e as f64 * h;
        let r1 = (e + 1) as f64 * h;
        let p0 = power_moment(a, 0, r0, r1);
        let p1 = power_moment(a, 1, r0, r1);
        let p2 = power_moment(a, 2, r0, r1);
        let k_loc = p0 / (h * h);
        let m00 = (r1 * r1 * p0 - 2.0 * r1 * p1 + p2) / (h * h);
        let m01 = ((r0 + r1) * p1 - p2 - r0 * r1 * p0) / (h * h);
        let m11 = (p2 - 2.0 * r0 * p1 + r0 * r0 * p0) / (h * h);
        kd[e] += k_loc;
        md[e] += m00;
        if e + 1 < n {
            kd[e + 1] += k_loc;
            ko[e] += -k_loc;
            md[e + 1] += m11;
            mo[e] += m01;
        }
    }
    let stiffness = Tridiag { diag: kd, off: ko };
    let mass = Tridiag { diag: md, off: mo };

    let mut x: Vec<f64> = (0..n).map(|i| 1.0 - (i as f64 * h).powi(2)).collect();
    let mut lambda_prev = f64::INFINITY;
    for _ in 0..500 {
        let b = mass.apply(&x);
        let mut y = stiffness.solve(&b)?;
        let norm = {
            let my = mass.apply(&y);
            y.iter().zip(&my).map(|(a, b)| a * b).sum::<f64>().sqrt()
        };
        if !(norm > 0.0) {
            return Err(Error::numerics("inverse iteration collapsed to zero"));
        }
        y.iter_mut().for_each(|v| *v /= norm);
        let ky = stiffness.apply(&y);
        let lambda = y.iter().zip(&ky).map(|(a, b)| a * b).sum::<f64>();
        x = y;
        if (lambda - lambda_prev).abs() <= 1e-13 * lambda.abs() {
            return Ok(lambda);
        }
        lambda_prev = lambda;
    }
    Err(Error::numerics("inverse iteration did not converge in 500 steps"))
}

// ---------------------------------------------------------------------------
// Theta quotients: sparse operator rows + projected descent.
// ---------------------------------------------------------------------------

struct ThetaOperator {
    /// rows[j] = coefficients of (L v)_j over unknowns 0..n_unknowns-1.
    rows: Vec<Vec<(usize, f64)>>,
    n_unknowns: usize,
}

impl ThetaOperator {
    fn build(theta: f64, cells: usize) -> Self {
        let n = cells;
        let h = 1.0 / n as f64;
        let mut rows = Vec::with_capacity(n + 1);
        // Smooth limit at the origin: Delta_theta v(0) = theta v''(0) with
        // the even-extension ghost.
        rows.push(vec![(0, -2.0 * theta / (h * h)), (1, 2.0 * theta / (h * h))]);
        for i in 1..n {
            let r = i as f64 * h;
            let adv = (theta - 1.0) / (2.0 * h * r);
            let mut row = vec![(i - 1, 1.0 / (h * h) - adv), (i, -2.0 / (h * h))];
            if i + 1 < n {
                row.push((i + 1, 1.0 / (h * h) + adv));
            }
            rows.push(row);
        }
        // One-sided closure at r = 1 with v(1) = 0 eliminated.
        let adv = theta - 1.0;
        rows.push(vec![
            (n - 1, -5.0 / (h * h) - 2.0 * adv / h),
            (n - 2, 4.0 / (h * h) + adv / (2.0 * h)),
            (n - 3, -1.0 / (h * h)),
        ]);
        ThetaOperator { rows, n_unknowns: n }
    }

    fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(c, w)| w * v[c]).sum())
            .collect()
    }

    /// Accumulate transpose action: out += L^T lambda.
    fn apply_transpose_into(&self, lambda: &[f64], out: &mut [f64]) {
        for (row, &l) in self.rows.iter().zip(lambda) {
            if l == 0.0 {
                continue;
            }
            for &(c, w) in row {
                out[c] += w * l;
            }
        }
    }
}

struct ThetaQuotient {
    op: ThetaOperator,
    /// trapezoid weight * r^{2p-1} at every node (numerator for the small
    /// quotient; denominator for both).
    w_num: Vec<f64>,
    /// trapezoid weight * r^3 (capital quotient numerator).
    w_cap: Vec<f64>,
    w_den: Vec<f64>,
    p: f64,
    capital: bool,
}

impl ThetaQuotient {
    fn new(theta: f64, p: f64, cells: usize, capital: bool) -> Self {
        let n = cells;
        let h = 1.0 / n as f64;
        let trap = |j: usize| if j == 0 || j == n { 0.5 * h } else { h };
        let w_num: Vec<f64> =
            (0..=n).map(|j| trap(j) * (j as f64 * h).powf(2.0 * p - 1.0)).collect();
        let w_cap: Vec<f64> = (0..=n).map(|j| trap(j) * (j as f64 * h).powi(3)).collect();
        let w_den = w_num.clone();
        ThetaQuotient { op: ThetaOperator::build(theta, cells), w_num, w_cap, w_den, p, capital }
    }

    fn denominator(&self, v: &[f64]) -> f64 {
        v.iter().enumerate().map(|(j, &x)| self.w_den[j] * x.abs().powf(self.p)).sum()
    }

    fn numerator(&self, v: &[f64], lv: &[f64]) -> f64 {
        if self.capital {
            lv.iter()
                .enumerate()
                .map(|(j, &l)| {
                    let vw = if j < v.len() { v[j].abs() } else { 0.0 };
                    self.w_cap[j] * vw.powf(self.p - 2.0) * l * l
                })
                .sum()
        } else {
            lv.iter().enumerate().map(|(j, &l)| self.w_num[j] * l.abs().powf(self.p)).sum()
        }
    }

    fn value(&self, v: &[f64]) -> f64 {
        let lv = self.op.apply(v);
        self.numerator(v, &lv) / self.denominator(v)
    }

    /// Gradient of the quotient at v (unnormalized).
    fn gradient(&self, v: &[f64]) -> Vec<f64> {
        let lv = self.op.apply(v);
        let num = self.numerator(v, &lv);
        let den = self.denominator(v);
        let q = num / den;
        let p = self.p;
        let mut grad_num = vec![0.0; self.op.n_unknowns];
        if self.capital {
            // d/dv of sum w r^3 |v|^{p-2} (Lv)^2.
            let lambda: Vec<f64> = lv
                .iter()
                .enumerate()
                .map(|(j, &l)| {
                    let vw = if j < v.len() { v[j].abs() } else { 0.0 };
                    2.0 * self.w_cap[j] * vw.powf(p - 2.0) * l
                })
                .collect();
            self.op.apply_transpose_into(&lambda, &mut grad_num);
            if p > 2.0 {
                for j in 0..self.op.n_unknowns {
                    if v[j] != 0.0 {
                        grad_num[j] += self.w_cap[j]
                            * (p - 2.0)
                            * v[j].abs().powf(p - 3.0)
                            * v[j].signum()
                            * lv[j]
                            * lv[j];
                    }
                }
            }
        } else {
            let lambda: Vec<f64> = lv
                .iter()
                .enumerate()
                .map(|(j, &l)| p * self.w_num[j] * l.abs().powf(p - 1.0) * l.signum())
                .collect();
            self.op.apply_transpose_into(&lambda, &mut grad_num);
        }
        let mut grad = vec![0.0; self.op.n_unknowns];
        for j in 0..self.op.n_unknowns {
            let gden = p * self.w_den[j] * v[j].abs().powf(p - 1.0) * v[j].signum();
            grad[j] = (grad_num[j] - q * gden) / den;
        }
        grad
    }

    fn normalize(&self, v: &mut [f64]) {
        let den = self.denominator(v);
        if den > 0.0 {
            let scale = den.powf(-1.0 / self.p);
            v.iter_mut().for_each(|x| *x *= scale);
        }
    }
}

/// Exact minimization of a p = 2 quotient over the span of up to three
/// vectors: tiny dense generalized eigenproblem.
fn subspace_minimize(q: &ThetaQuotient, basis: &[Vec<f64>]) -> Option<(f64, Vec<f64>)> {
    let k = basis.len();
    let mut a = [[0.0f64; 3]; 3];
    let mut b = [[0.0f64; 3]; 3];
    let lbasis: Vec<Vec<f64>> = basis.iter().map(|z| q.op.apply(z)).collect();
    for i in 0..k {
        for j in 0..k {
            let wa = if q.capital { &q.w_cap } else { &q.w_num };
            a[i][j] = lbasis[i].iter().zip(&lbasis[j]).enumerate().map(|(m, (x, y))| wa[m] * x * y).sum();
            b[i][j] = basis[i]
                .iter()
                .zip(&basis[j])
                .enumerate()
                .map(|(m, (x, y))| q.w_den[m] * x * y)
                .sum();
        }
    }
    // Cholesky of b.
    let mut g = [[0.0f64; 3]; 3];
    for i in 0..k {
        for j in 0..=i {
            let mut s = b[i][j];
            for m in 0..j {
                s -= g[i][m] * g[j][m];
            }
            if i == j {
                if s <= 1e-14 * b[i][i].abs().max(1e-300) {
                    return None;
                }
                g[i][j] = s.sqrt();
            } else {
                g[i][j] = s / g[j][j];
            }
        }
    }
    // C = G^{-1} A G^{-T}.
    let solve_lower = |m: &[[f64; 3]; 3], col: [f64; 3], k: usize| -> [f64; 3] {
        let mut out = [0.0f64; 3];
        for i in 0..k {
            let mut s = col[i];
            for j in 0..i {
                s -= m[i][j] * out[j];
            }
            out[i] = s / m[i][i];
        }
        out
    };
    let mut c = [[0.0f64; 3]; 3];
    // First G^{-1} A (column by column), then transpose-solve.
    let mut ga = [[0.0f64; 3]; 3];
    for j in 0..k {
        let col = [a[0][j], a[1][j], a[2][j]];
        let s = solve_lower(&g, col, k);
        for i in 0..k {
            ga[i][j] = s[i];
        }
    }
    for i in 0..k {
        let row = [ga[i][0], ga[i][1], ga[i][2]];
        let s = solve_lower(&g, row, k);
        for j in 0..k {
            c[i][j] = s[j];
        }
    }
    // Jacobi eigenvalue iteration on the small symmetric matrix.
    let mut v = [[0.0f64; 3]; 3];
    for i in 0..k {
        v[i][i] = 1.0;
    }
    for _ in 0..60 {
        let mut off = 0.0;
        let (mut pi, mut pj) = (0, 1);
        for i in 0..k {
            for j in i + 1..k {
                if c[i][j].abs() > off {
                    off = c[i][j].abs();
                    pi = i;
                    pj = j;
                }
            }
        }
        if off < 1e-15 {
            break;
        }
        let tau = (c[pj][pj] - c[pi][pi]) / (2.0 * c[pi][pj]);
        let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
        let cs = 1.0 / (1.0 + t * t).sqrt();
        let sn = t * cs;
        for m in 0..k {
            let (cim, cjm) = (c[pi][m], c[pj][m]);
            c[pi][m] = cs * cim - sn * cjm;
            c[pj][m] = sn * cim + cs * cjm;
        }
        for m in 0..k {
            let (cmi, cmj) = (c[m][pi], c[m][pj]);
            c[m][pi] = cs * cmi - sn * cmj;
            c[m][pj] = sn * cmi + cs * cmj;
            let (vmi, vmj) = (v[m][pi], v[m][pj]);
            v[m][pi] = cs * vmi - sn * vmj;
            v[m][pj] = sn * vmi + cs * vmj;
        }
    }
    let mut best = 0usize;
    for i in 1..k {
        if c[i][i] < c[best][best] {
            best = i;
        }
    }
    // y in C-coordinates -> x = G^{-T} y.
    let y = [v[0][best], v[1][best], v[2][best]];
    let mut x = [0.0f64; 3];
    for i in (0..k).rev() {
        let mut s = y[i];
        for j in i + 1..k {
            s -= g[j][i] * x[j];
        }
        x[i] = s / g[i][i];
    }
    let n = basis[0].len();
    let mut out = vec![0.0; n];
    for (coef, z) in x.iter().take(k).zip(basis) {
        for (o, &zi) in out.iter_mut().zip(z) {
            *o += coef * zi;
        }
    }
    Some((c[best][best], out))
}

fn theta_quotient(theta: f64, p: f64, cells: usize, capital: bool) -> Result<f64> {
    let quotient = ThetaQuotient::new(theta, p, cells, capital);
    let n = quotient.op.n_unknowns;
    let h = 1.0 / cells as f64;
    let starts: [Box<dyn Fn(f64) -> f64>; 3] = [
        Box::new(|r: f64| (std::f64::consts::FRAC_PI_2 * r).cos()),
        Box::new(|r: f64| 1.0 - r * r),
        Box::new(|r: f64| (1.0 - r * r).powi(2)),
    ];
    let mut best = f64::INFINITY;
    for start in &starts {
        let mut v: Vec<f64> = (0..n).map(|i| start(i as f64 * h)).collect();
        quotient.normalize(&mut v);
        let q = if p == 2.0 {
            minimize_quadratic(&quotient, v)?
        } else {
            minimize_descent(&quotient, v)?
        };
        best = best.min(q);
    }
    Ok(best)
}

/// p = 2: each step minimizes the quotient exactly over
/// span{v, gradient, previous direction}.
fn minimize_quadratic(q: &ThetaQuotient, mut v: Vec<f64>) -> Result<f64> {
    let mut prev: Option<Vec<f64>> = None;
    let mut q_old = q.value(&v);
    for _ in 0..600 {
        let g = q.gradient(&v);
        let mut basis = vec![v.clone(), g];
        if let Some(pv) = &prev {
            basis.push(pv.clone());
        }
        let reduced = loop {
            match subspace_minimize(q, &basis) {
                Some(r) => break Some(r),
                None => {
                    basis.pop();
                    if basis.len() <= 1 {
                        break None;
                    }
                }
            }
        };
        let Some((q_new, mut v_new)) = reduced else {
            return Ok(q_old);
        };
        q.normalize(&mut v_new);
        prev = Some(v.clone());
        let rel = (q_old - q_new).abs() / q_new.abs().max(1e-300);
        v = v_new;
        if rel <= 1e-13 {
            return Ok(q_new);
        }
        q_old = q_new;
    }
    Ok(q_old)
}

/// General p: projected gradient descent with an adaptive step.
fn minimize_descent(q: &ThetaQuotient, mut v: Vec<f64>) -> Result<f64> {
    let mut q_old = q.value(&v);
    let mut step = 1.0;
    let mut stagnant = 0;
    for _ in 0..30_000 {
        let g = q.gradient(&v);
        let gnorm = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if gnorm == 0.0 {
            return Ok(q_old);
        }
        let mut accepted = false;
        for _ in 0..40 {
            let mut trial: Vec<f64> =
                v.iter().zip(&g).map(|(x, gi)| x - step * gi / gnorm).collect();
            q.normalize(&mut trial);
            let q_new = q.value(&trial);
            if q_new < q_old {
                let rel = (q_old - q_new) / q_new.abs().max(1e-300);
                v = trial;
                q_old = q_new;
                step *= 1.25;
                accepted = true;
                stagnant = if rel <= 1e-12 { stagnant + 1 } else { 0 };
                break;
            }
            step *= 0.35;
            if step < 1e-18 {
                break;
            }
        }
        if !accepted {
            stagnant += 1;
            step = 1e-3;
        }
        if stagnant >= 25 {
            return Ok(q_old);
        }
    }
    Err(Error::numerics(format!(
        "rayleigh descent did not settle (last value {q_old:.6e}, step {step:.2e})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Power series for J0, J1 (adequate below x = 8) and first-zero
    /// bisection: the independent oracle for the FEM eigenvalues.
    fn bessel_j(order: u32, x: f64) -> f64 {
        let half = 0.5 * x;
        let mut term = match order {
            0 => 1.0,
            1 => half,
            _ => unreachable!(),
        };
        let mut sum = term;
        for k in 1..60 {
            let kf = k as f64;
            term *= -(half * half) / (kf * (kf + order as f64));
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum
    }

    fn first_zero(order: u32, mut lo: f64, mut hi: f64) -> f64 {
        assert!(bessel_j(order, lo) > 0.0 && bessel_j(order, hi) < 0.0);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if bessel_j(order, mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn bessel_oracle_matches_reference() {
        assert_relative_eq!(first_zero(0, 2.0, 3.0), 2.404825557695773, epsilon = 1e-12);
        assert_relative_eq!(first_zero(1, 3.0, 4.5), 3.831705970207512, epsilon = 1e-12);
    }

    #[test]
    fn lambda2_matches_bessel() {
        let j01 = first_zero(0, 2.0, 3.0);
        let lam = capital_lambda(2, 2048).unwrap();
        assert_relative_eq!(lam, j01 * j01, max_relative = 1e-5);
        // gamma uses the same r-density.
        let gamma =
            eigen_rayleigh_1d(&RayleighProblem::Gradient { density_exponent: 1.0 }, 2048).unwrap();
        assert_eq!(gamma, lam);
    }

    #[test]
    fn lambda4_matches_bessel() {
        let j11 = first_zero(1, 3.0, 4.5);
        let lam = capital_lambda(4, 2048).unwrap();
        assert_relative_eq!(lam, j11 * j11, max_relative = 1e-5);
    }

    #[test]
    fn gradient_eigen_second_order_convergence() {
        let j01 = first_zero(0, 2.0, 3.0);
        let exact = j01 * j01;
        let mut errs = Vec::new();
        for &cells in &[128usize, 256, 512] {
            let lam = capital_lambda(2, cells).unwrap();
            errs.push((lam - exact).abs());
        }
        for w in errs.windows(2) {
            let order = (w[0] / w[1]).log2();
            assert!(order > 1.7, "eigenvalue convergence order {order}, errors {errs:?}");
        }
    }

    #[test]
    fn theta_quotient_p2_consistency() {
        // For p = 2, theta = 4 both quotients coincide and equal
        // Lambda(4)^2 (the Navier biharmonic ground value).
        let cells = 1024;
        let lam4 = capital_lambda(4, cells).unwrap();
        let small =
            eigen_rayleigh_1d(&RayleighProblem::ThetaSmall { theta: 4.0, p: 2.0 }, cells).unwrap();
        let cap =
            eigen_rayleigh_1d(&RayleighProblem::ThetaCapital { theta: 4.0, p: 2.0 }, cells).unwrap();
        assert_relative_eq!(small, lam4 * lam4, max_relative = 2e-3);
        assert_relative_eq!(cap, lam4 * lam4, max_relative = 2e-3);
        assert_relative_eq!(small, cap, max_relative = 1e-6);
    }

    #[test]
    fn gazzola_constants_p2() {
        let c = gazzola_constants(6, 2.0, 512).unwrap();
        assert_relative_eq!(c.theta, 4.0, max_relative = 1e-15);
        // Gamma reduces to max{Lambda_theta, lambda_theta} = Lambda(4)^2.
        let lam4 = capital_lambda(4, 512).unwrap();
        assert_relative_eq!(c.gamma_capital, lam4 * lam4, max_relative = 5e-3);
        assert_relative_eq!(c.gamma_small, capital_lambda(2, 512).unwrap(), max_relative = 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(eigen_rayleigh_1d(&RayleighProblem::Gradient { density_exponent: -1.0 }, 256).is_err());
        assert!(eigen_rayleigh_1d(&RayleighProblem::ThetaSmall { theta: 4.0, p: 1.0 }, 256).is_err());
        assert!(eigen_rayleigh_1d(&RayleighProblem::ThetaCapital { theta: 4.0, p: 1.5 }, 256).is_err());
        assert!(eigen_rayleigh_1d(&RayleighProblem::Gradient { density_exponent: 1.0 }, 8).is_err());
    }
}
