//! Finite-difference solver for `Q(u) = 2h` on an annulus in geodesic polar
//! coordinates.
//!
//! With metric `d rho^2 + sinh^2 rho d theta^2`,
//!
//! ```text
//! Q(u) = (1/S) [ d_rho(S u_rho / W) + d_theta(u_theta / (S W)) ],
//! S = sinh rho,  W = sqrt(1 + u_rho^2 + u_theta^2 / S^2).
//! ```
//!
//! Fluxes are evaluated at half nodes; the tangential derivative inside `W`
//! is averaged over the two adjacent nodes, so the stencil is 3x3.
//!
//! The nonlinear system is solved by damped Picard iteration with `W`
//! lagged, followed by Newton with a finite-difference Jacobian once the
//! residual is small. Both linear solves use a band LU on an ordering that
//! interleaves theta so periodic neighbours stay within two positions.
//!
//! Failure to converge is evidence of non-existence, never a verdict; the
//! verdict belongs to [`crate::estimates::dirichlet_feasibility`].

use std::f64::consts::PI;

use serde::Serialize;

use crate::banded::BandMatrix;
use crate::error::{domain, Error, Result};
use crate::estimates::Annulus;
use crate::profile::MeanCurvature;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarGrid {
    ann: Annulus,
    n_rho: usize,
    n_theta: usize,
}

impl PolarGrid {
    /// `n_rho` radial nodes including both boundary circles, `n_theta`
    /// periodic angular nodes.
    pub fn new(ann: Annulus, n_rho: usize, n_theta: usize) -> Result<Self> {
        if n_rho < 3 || n_theta < 4 {
            return Err(domain(format!(
                "grid needs n_rho >= 3 and n_theta >= 4, got {n_rho} x {n_theta}"
            )));
        }
        Ok(Self { ann, n_rho, n_theta })
    }

    pub fn annulus(&self) -> Annulus {
        self.ann
    }

    pub fn n_rho(&self) -> usize {
        self.n_rho
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn d_rho(&self) -> f64 {
        self.ann.thickness() / (self.n_rho - 1) as f64
    }

    pub fn d_theta(&self) -> f64 {
        2.0 * PI / self.n_theta as f64
    }

    pub fn rho(&self, i: usize) -> f64 {
        if i == self.n_rho - 1 {
            self.ann.outer()
        } else {
            self.ann.inner() + self.d_rho() * i as f64
        }
    }

    pub fn theta(&self, j: usize) -> f64 {
        self.d_theta() * j as f64
    }

    /// Samples `f(theta)` at the angular nodes.
    pub fn sample_theta(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.n_theta).map(|j| f(self.theta(j))).collect()
    }

    #[inline]
    fn wrap(&self, j: isize) -> usize {
        j.rem_euclid(self.n_theta as isize) as usize
    }
}

/// Heights at the nodes of a [`PolarGrid`], row-major in `rho`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Field2D {
    #[serde(skip)]
    grid: Option<PolarGrid>,
    n_rho: usize,
    n_theta: usize,
    values: Vec<f64>,
}

impl Field2D {
    pub fn zeros(grid: PolarGrid) -> Self {
        Self {
            grid: Some(grid),
            n_rho: grid.n_rho,
            n_theta: grid.n_theta,
            values: vec![0.0; grid.n_rho * grid.n_theta],
        }
    }

    pub fn from_fn(grid: PolarGrid, f: impl Fn(f64, f64) -> f64) -> Self {
        let mut out = Self::zeros(grid);
        for i in 0..grid.n_rho {
            for j in 0..grid.n_theta {
                out.set(i, j, f(grid.rho(i), grid.theta(j)));
            }
        }
        out
    }

    pub fn grid(&self) -> PolarGrid {
        self.grid.expect("field built from a grid")
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n_theta + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.values[i * self.n_theta + j] = v;
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n_theta..(i + 1) * self.n_theta]
    }

    pub fn max_abs_diff(&self, other: &Field2D) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverReport {
    pub converged: bool,
    pub iterations: usize,
    /// Max-norm of `Q(u) - 2h` over interior nodes.
    pub residual: f64,
    /// Largest `|grad u|` at radial half nodes.
    pub max_gradient: f64,
    /// Largest `|grad u|` next to the inner circle.
    pub inner_gradient: f64,
    pub newton_steps: usize,
    /// Heuristic blow-up signature: no convergence while the gradient at the
    /// inner row exceeds `1 / d_rho`.
    pub blowup_signature: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    pub tol: f64,
    pub max_iter: usize,
    /// Relaxation factor for Picard steps.
    pub damping: f64,
    /// Residual below which Newton takes over. Newton is also tried as soon
    /// as a Picard step contracts the residual by less than 10%.
    pub newton_switch: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self { tol: 1e-9, max_iter: 300, damping: 0.7, newton_switch: 1e-3 }
    }
}

/// Precomputed metric factors.
struct Metric {
    s_node: Vec<f64>,
    // sinh at rho_{i+1/2}, i = 0..n_rho-1
    s_half: Vec<f64>,
    dr: f64,
    dt: f64,
}

impl Metric {
    fn new(grid: &PolarGrid) -> Self {
        let dr = grid.d_rho();
        Self {
            s_node: (0..grid.n_rho).map(|i| grid.rho(i).sinh()).collect(),
            s_half: (0..grid.n_rho - 1)
                .map(|i| (grid.ann.inner() + dr * (i as f64 + 0.5)).sinh())
                .collect(),
            dr,
            dt: grid.d_theta(),
        }
    }
}

/// Coefficients `S/W` on radial faces and `1/(S W)` on angular faces.
struct Faces {
    // (n_rho - 1) x n_theta, face between rows i and i+1
    radial: Vec<f64>,
    // n_rho x n_theta, face between columns j and j+1 (interior rows only)
    angular: Vec<f64>,
    grad_radial: Vec<f64>,
}

fn faces(u: &Field2D, grid: &PolarGrid, m: &Metric) -> Faces {
    let (nr, nt) = (grid.n_rho, grid.n_theta);
    let mut radial = vec![0.0; (nr - 1) * nt];
    let mut grad_radial = vec![0.0; (nr - 1) * nt];
    for i in 0..nr - 1 {
        let s = m.s_half[i];
        for j in 0..nt {
            let jp = grid.wrap(j as isize + 1);
            let jm = grid.wrap(j as isize - 1);
            let p = (u.get(i + 1, j) - u.get(i, j)) / m.dr;
            let q = (u.get(i, jp) - u.get(i, jm) + u.get(i + 1, jp) - u.get(i + 1, jm)) / (4.0 * m.dt);
            let g2 = p * p + (q / s).powi(2);
            radial[i * nt + j] = s / (1.0 + g2).sqrt();
            grad_radial[i * nt + j] = g2.sqrt();
        }
    }
    let mut angular = vec![0.0; nr * nt];
    for i in 1..nr - 1 {
        let s = m.s_node[i];
        for j in 0..nt {
            let jp = grid.wrap(j as isize + 1);
            let q = (u.get(i, jp) - u.get(i, j)) / m.dt;
            let p = (u.get(i + 1, j) - u.get(i - 1, j) + u.get(i + 1, jp) - u.get(i - 1, jp)) / (4.0 * m.dr);
            let w = (1.0 + p * p + (q / s).powi(2)).sqrt();
            angular[i * nt + j] = 1.0 / (s * w);
        }
    }
    Faces { radial, angular, grad_radial }
}

/// `S_i (Q(u) - 2h)` at interior nodes, flattened row-major over rows `1..n_rho-1`.
fn scaled_residual(u: &Field2D, grid: &PolarGrid, m: &Metric, two_h: f64) -> Vec<f64> {
    let (nr, nt) = (grid.n_rho, grid.n_theta);
    let f = faces(u, grid, m);
    let mut out = vec![0.0; (nr - 2) * nt];
    for i in 1..nr - 1 {
        for j in 0..nt {
            let jm = grid.wrap(j as isize - 1);
            let jp = grid.wrap(j as isize + 1);
            let up = f.radial[i * nt + j] * (u.get(i + 1, j) - u.get(i, j)) / m.dr;
            let down = f.radial[(i - 1) * nt + j] * (u.get(i, j) - u.get(i - 1, j)) / m.dr;
            let right = f.angular[i * nt + j] * (u.get(i, jp) - u.get(i, j)) / m.dt;
            let left = f.angular[i * nt + jm] * (u.get(i, j) - u.get(i, jm)) / m.dt;
            out[(i - 1) * nt + j] = (up - down) / m.dr + (right - left) / m.dt - two_h * m.s_node[i];
        }
    }
    out
}

/// Discrete `Q(u)` at interior nodes; boundary rows are left at zero.
pub fn apply_q(u: &Field2D) -> Field2D {
    let grid = u.grid();
    let m = Metric::new(&grid);
    let scaled = scaled_residual(u, &grid, &m, 0.0);
    let mut out = Field2D::zeros(grid);
    for i in 1..grid.n_rho - 1 {
        for j in 0..grid.n_theta {
            out.set(i, j, scaled[(i - 1) * grid.n_theta + j] / m.s_node[i]);
        }
    }
    out
}

/// Residual field `Q(u) - 2h` at interior nodes; boundary rows are zero.
pub fn discrete_q(u: &Field2D, h: MeanCurvature) -> Field2D {
    let mut q = apply_q(u);
    let grid = u.grid();
    for i in 1..grid.n_rho - 1 {
        for j in 0..grid.n_theta {
            let v = q.get(i, j) - h.neck();
            q.set(i, j, v);
        }
    }
    q
}

fn max_residual(scaled: &[f64], m: &Metric, nt: usize) -> f64 {
    scaled
        .iter()
        .enumerate()
        .map(|(k, r)| (r / m.s_node[k / nt + 1]).abs())
        .fold(0.0, f64::max)
}

/// Interleaved angular position: 0, n-1, 1, n-2, ...
fn theta_position(j: usize, n: usize) -> usize {
    if 2 * j < n {
        2 * j
    } else {
        2 * (n - 1 - j) + 1
    }
}

struct Ordering {
    nt: usize,
    pos: Vec<usize>,
}

impl Ordering {
    fn new(nt: usize) -> Self {
        Self { nt, pos: (0..nt).map(|j| theta_position(j, nt)).collect() }
    }

    /// Unknown index of interior node `(i, j)`, `1 <= i <= n_rho - 2`.
    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.nt + self.pos[j]
    }

    fn band(&self) -> usize {
        self.nt + 2
    }
}

/// One lagged-coefficient solve: returns the field solving the linearised
/// problem with faces frozen at `u`.
fn picard_target(u: &Field2D, grid: &PolarGrid, m: &Metric, two_h: f64, ord: &Ordering) -> Result<Field2D> {
    let (nr, nt) = (grid.n_rho, grid.n_theta);
    let n = (nr - 2) * nt;
    let f = faces(u, grid, m);
    let mut a = BandMatrix::new(n, ord.band(), ord.band());
    let mut rhs = vec![0.0; n];
    let (dr2, dt2) = (m.dr * m.dr, m.dt * m.dt);
    for i in 1..nr - 1 {
        for j in 0..nt {
            let row = ord.index(i, j);
            let jm = grid.wrap(j as isize - 1);
            let jp = grid.wrap(j as isize + 1);
            let cu = f.radial[i * nt + j] / dr2;
            let cd = f.radial[(i - 1) * nt + j] / dr2;
            let cr = f.angular[i * nt + j] / dt2;
            let cl = f.angular[i * nt + jm] / dt2;
            a.add(row, row, -(cu + cd + cr + cl));
            rhs[row] = two_h * m.s_node[i];
            for (ii, jj, c) in [(i + 1, j, cu), (i - 1, j, cd), (i, jp, cr), (i, jm, cl)] {
                if ii == 0 || ii == nr - 1 {
                    rhs[row] -= c * u.get(ii, jj);
                } else {
                    a.add(row, ord.index(ii, jj), c);
                }
            }
        }
    }
    a.factor()?.solve(&mut rhs);
    let mut out = u.clone();
    for i in 1..nr - 1 {
        for j in 0..nt {
            out.set(i, j, rhs[ord.index(i, j)]);
        }
    }
    Ok(out)
}

fn color_period(nt: usize) -> usize {
    (3..=nt).find(|k| nt % k == 0).unwrap_or(nt)
}

/// Newton direction from a colored finite-difference Jacobian of the scaled residual.
fn newton_direction(
    u: &Field2D,
    base: &[f64],
    grid: &PolarGrid,
    m: &Metric,
    two_h: f64,
    ord: &Ordering,
) -> Result<Vec<f64>> {
    let (nr, nt) = (grid.n_rho, grid.n_theta);
    let n = (nr - 2) * nt;
    let period = color_period(nt);
    let mut jac = BandMatrix::new(n, ord.band(), ord.band());
    let mut work = u.clone();
    let mut steps = vec![0.0; nr * nt];
    for ci in 0..3 {
        for cj in 0..period {
            let mut any = false;
            for i in (1..nr - 1).filter(|i| i % 3 == ci) {
                for j in (0..nt).filter(|j| j % period == cj) {
                    let eps = 1e-7 * u.get(i, j).abs().max(1.0);
                    steps[i * nt + j] = eps;
                    work.set(i, j, u.get(i, j) + eps);
                    any = true;
                }
            }
            if !any {
                continue;
            }
            let pert = scaled_residual(&work, grid, m, two_h);
            for i0 in (1..nr - 1).filter(|i| i % 3 == ci) {
                for j0 in (0..nt).filter(|j| j % period == cj) {
                    let eps = steps[i0 * nt + j0];
                    let col = ord.index(i0, j0);
                    for i in i0.saturating_sub(1).max(1)..=(i0 + 1).min(nr - 2) {
                        for dj in -1isize..=1 {
                            let j = grid.wrap(j0 as isize + dj);
                            let k = (i - 1) * nt + j;
                            let d = (pert[k] - base[k]) / eps;
                            if d != 0.0 {
                                jac.add(ord.index(i, j), col, d);
                            }
                        }
                    }
                    work.set(i0, j0, u.get(i0, j0));
                }
            }
        }
    }
    let mut rhs = vec![0.0; n];
    for i in 1..nr - 1 {
        for j in 0..nt {
            rhs[ord.index(i, j)] = -base[(i - 1) * nt + j];
        }
    }
    jac.factor()?.solve(&mut rhs);
    Ok(rhs)
}

fn gradients(u: &Field2D, grid: &PolarGrid, m: &Metric) -> (f64, f64) {
    let f = faces(u, grid, m);
    let nt = grid.n_theta;
    let max = f.grad_radial.iter().copied().fold(0.0, f64::max);
    let inner = f.grad_radial[..nt].iter().copied().fold(0.0, f64::max);
    (max, inner)
}

/// Picard contraction factor above which a Newton step is tried early.
const PICARD_STALL: f64 = 0.9;

/// Solves `Q(u) = 2h` with `u = g_inner` on `rho = a` and `u = g_outer` on
/// `rho = b`, both sampled at the angular nodes of `grid`.
///
/// Returns [`Error::NonConvergence`] with the last iterate and its report
/// when the residual does not reach `opts.tol` within `opts.max_iter`
/// iterations.
pub fn solve_dirichlet_2d(
    h: MeanCurvature,
    grid: PolarGrid,
    g_inner: &[f64],
    g_outer: &[f64],
    opts: SolverOptions,
) -> Result<(Field2D, SolverReport)> {
    let (nr, nt) = (grid.n_rho, grid.n_theta);
    if g_inner.len() != nt || g_outer.len() != nt {
        return Err(domain(format!(
            "boundary data must have {nt} samples, got {} and {}",
            g_inner.len(),
            g_outer.len()
        )));
    }
    if !(opts.tol > 0.0) || !(opts.damping > 0.0 && opts.damping <= 1.0) {
        return Err(domain("tolerance must be positive and damping in (0, 1]"));
    }
    let two_h = h.neck();
    let m = Metric::new(&grid);
    let ord = Ordering::new(nt);

    let mut u = Field2D::zeros(grid);
    for i in 0..nr {
        let t = i as f64 / (nr - 1) as f64;
        for j in 0..nt {
            u.set(i, j, (1.0 - t) * g_inner[j] + t * g_outer[j]);
        }
    }

    let mut scaled = scaled_residual(&u, &grid, &m, two_h);
    let mut residual = max_residual(&scaled, &m, nt);
    let mut iterations = 0;
    let mut newton_steps = 0;
    let mut stalled = false;
    while residual > opts.tol && iterations < opts.max_iter {
        iterations += 1;
        let mut stepped = false;
        if residual < opts.newton_switch || stalled {
            if let Ok(dir) = newton_direction(&u, &scaled, &grid, &m, two_h, &ord) {
                let mut lambda = 1.0;
                while lambda >= 1.0 / 64.0 {
                    let mut trial = u.clone();
                    for i in 1..nr - 1 {
                        for j in 0..nt {
                            trial.set(i, j, u.get(i, j) + lambda * dir[ord.index(i, j)]);
                        }
                    }
                    let trial_scaled = scaled_residual(&trial, &grid, &m, two_h);
                    let trial_res = max_residual(&trial_scaled, &m, nt);
                    if trial_res < residual {
                        u = trial;
                        scaled = trial_scaled;
                        residual = trial_res;
                        stepped = true;
                        newton_steps += 1;
                        break;
                    }
                    lambda *= 0.5;
                }
            }
        }
        if !stepped {
            let target = picard_target(&u, &grid, &m, two_h, &ord)?;
            for i in 1..nr - 1 {
                for j in 0..nt {
                    let v = u.get(i, j) + opts.damping * (target.get(i, j) - u.get(i, j));
                    u.set(i, j, v);
                }
            }
            scaled = scaled_residual(&u, &grid, &m, two_h);
            let before = residual;
            residual = max_residual(&scaled, &m, nt);
            stalled = residual > PICARD_STALL * before;
        }
        if !residual.is_finite() {
            break;
        }
    }

    let (max_gradient, inner_gradient) = gradients(&u, &grid, &m);
    let converged = residual <= opts.tol;
    let report = SolverReport {
        converged,
        iterations,
        residual,
        max_gradient,
        inner_gradient,
        newton_steps,
        blowup_signature: !converged && inner_gradient > 1.0 / grid.d_rho(),
    };
    if converged {
        Ok((u, report))
    } else {
        Err(Error::NonConvergence { report, field: Box::new(u) })
    }
}
