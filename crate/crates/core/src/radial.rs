//! Radial Dirichlet problem `Q(u) = 2h` on an annulus via the flux first integral.
//!
//! A radial solution satisfies `sinh r * u' / sqrt(1 + u'^2) = 2h cosh r + C`,
//! so `u' = (2h cosh r + C) / sqrt(sinh^2 r - (2h cosh r + C)^2)`. The graph
//! condition `|2h cosh r + C| <= sinh r` binds at the inner radius, which
//! gives the closed flux interval
//!
//! ```text
//! -(2h cosh a + sinh a) <= C <= -(2h cosh a - sinh a)
//! ```
//!
//! At either endpoint the solution is vertical on the inner circle. The drop
//! `u(a) - u(b)` is strictly decreasing in `C`, so its extremes are the
//! endpoint drops and any drop in between is hit by bisection.
//!
//! The integrand is written in terms of the gaps to both endpoints,
//! independently of the family parametrisation used by [`crate::profile`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimates::Annulus;
use crate::hyperbolic::{check_in, cosh_minus_2h_sinh, cosh_plus_2h_sinh, RadialFunction};
use crate::profile::{HeightProfile, MeanCurvature, ProfileParameter};
use crate::quadrature::{integrate, QuadOptions};

/// Closed interval of admissible flux constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FluxInterval {
    /// `-(2h cosh a + sinh a)`: the solution dips vertically at `a`.
    pub lower: f64,
    /// `-(2h cosh a - sinh a)`: the solution rises vertically at `a`.
    pub upper: f64,
}

impl FluxInterval {
    pub fn contains(&self, c: f64) -> bool {
        self.lower <= c && c <= self.upper
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }
}

/// Achievable range of `u(a) - u(b)` over radial solutions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasibleDropInterval {
    pub d_min: f64,
    pub d_max: f64,
}

impl FeasibleDropInterval {
    pub fn contains(&self, drop: f64) -> bool {
        self.d_min <= drop && drop <= self.d_max
    }
}

pub fn feasible_flux_interval(h: MeanCurvature, ann: Annulus) -> FluxInterval {
    let a = ann.inner();
    if h.is_half() {
        return FluxInterval { lower: -a.exp(), upper: -(-a).exp() };
    }
    let two_h = h.neck();
    FluxInterval {
        lower: -a.cosh() * (two_h + a.tanh()),
        upper: a.cosh() * (a.tanh() - two_h),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum End {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy)]
struct Integrand {
    two_h: f64,
    a: f64,
    c: f64,
    gap_up: f64,
    gap_lo: f64,
}

impl Integrand {
    fn new(h: MeanCurvature, ann: Annulus, c: f64) -> Result<Self> {
        let iv = feasible_flux_interval(h, ann);
        if !iv.contains(c) {
            return Err(Error::InfeasibleFlux { c, lower: iv.lower, upper: iv.upper });
        }
        Ok(Self {
            two_h: h.neck(),
            a: ann.inner(),
            c,
            gap_up: iv.upper - c,
            gap_lo: c - iv.lower,
        })
    }

    /// Flux constant at distance `gap` from one end of the flux interval.
    /// Keeps the gap at full relative precision, which the drop needs when
    /// `C` sits within a few ulps of an endpoint.
    fn from_gap(h: MeanCurvature, ann: Annulus, side: End, gap: f64) -> Self {
        let iv = feasible_flux_interval(h, ann);
        let width = iv.upper - iv.lower;
        let (c, gap_up, gap_lo) = match side {
            End::Upper => (iv.upper - gap, gap, width - gap),
            End::Lower => (iv.lower + gap, width - gap, gap),
        };
        Self { two_h: h.neck(), a: ann.inner(), c, gap_up, gap_lo }
    }

    fn drop(&self, ann: Annulus, tol: f64) -> Result<f64> {
        Ok(-self.integral(ann.inner(), ann.outer(), tol)?)
    }

    /// `u'` at `r = a + d`.
    fn at_offset(&self, d: f64) -> f64 {
        let r = self.a + d;
        let m = self.a + 0.5 * d;
        let t = 2.0 * (0.5 * d).sinh();
        // sinh r - (2h cosh r + C) and sinh r + (2h cosh r + C)
        let minus = t * cosh_minus_2h_sinh(self.two_h, m) + self.gap_up;
        let plus = t * cosh_plus_2h_sinh(self.two_h, m) + self.gap_lo;
        let numer = self.two_h * r.cosh() + self.c;
        let radicand = minus * plus;
        if radicand <= 0.0 {
            return if numer >= 0.0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        numer / radicand.sqrt()
    }

    /// `∫_{r1}^{r2} u' dr` with `r = a + s^2`.
    fn integral(&self, r1: f64, r2: f64, tol: f64) -> Result<f64> {
        let s1 = (r1 - self.a).max(0.0).sqrt();
        let s2 = (r2 - self.a).max(0.0).sqrt();
        let res = integrate(|s| 2.0 * s * self.at_offset(s * s), s1, s2, QuadOptions::with_tol(tol))?;
        Ok(res.value)
    }
}

/// Drop `u(a) - u(b)` of the radial solution with flux constant `c`.
pub fn integrate_radial(h: MeanCurvature, ann: Annulus, c: f64, tol: f64) -> Result<f64> {
    let f = Integrand::new(h, ann, c)?;
    Ok(-f.integral(ann.inner(), ann.outer(), tol)?)
}

/// Extreme drops, attained by the two solutions vertical on the inner circle.
pub fn extremal_drops(h: MeanCurvature, ann: Annulus, tol: f64) -> Result<FeasibleDropInterval> {
    let iv = feasible_flux_interval(h, ann);
    Ok(FeasibleDropInterval {
        d_max: integrate_radial(h, ann, iv.lower, tol)?,
        d_min: integrate_radial(h, ann, iv.upper, tol)?,
    })
}

/// A radial solution on an annulus, pinned to its outer value.
#[derive(Debug, Clone)]
pub struct RadialSolution {
    h: MeanCurvature,
    ann: Annulus,
    integrand: Integrand,
    /// `∫_a^b u'`.
    rise: f64,
    outer_value: f64,
    flux_constant: f64,
    shift: Option<f64>,
    tol: f64,
}

impl RadialSolution {
    /// `C` in `sinh r * u'/W = 2h cosh r + C`.
    pub fn flux_constant(&self) -> f64 {
        self.flux_constant
    }

    /// Vertical offset relative to `H^h_{-C}` when `-C > 0`, i.e. when the
    /// solution is a translate of a family member.
    pub fn shift(&self) -> Option<f64> {
        self.shift
    }

    pub fn annulus(&self) -> Annulus {
        self.ann
    }

    pub fn mean_curvature(&self) -> MeanCurvature {
        self.h
    }

    pub fn inner_value(&self) -> f64 {
        self.outer_value - self.rise
    }

    pub fn outer_value(&self) -> f64 {
        self.outer_value
    }

    pub fn drop(&self) -> f64 {
        -self.rise
    }

    pub fn at(&self, rho: f64) -> Result<f64> {
        check_in(self.domain(), rho)?;
        if rho == self.ann.outer() {
            return Ok(self.outer_value);
        }
        Ok(self.outer_value - self.rise + self.integrand.integral(self.ann.inner(), rho, self.tol)?)
    }

    /// `(rho, u)` on `n` uniform radii, accumulated panel by panel.
    pub fn sample(&self, n: usize) -> Result<Vec<(f64, f64)>> {
        let rhos = self.ann.grid(n.max(2));
        let panel_tol = self.tol / rhos.len() as f64;
        let mut out = Vec::with_capacity(rhos.len());
        let mut acc = self.inner_value();
        out.push((rhos[0], acc));
        for w in rhos.windows(2) {
            acc += self.integrand.integral(w[0], w[1], panel_tol)?;
            out.push((w[1], acc));
        }
        // Pin the outer row exactly.
        let last = out.len() - 1;
        out[last].1 = self.outer_value;
        Ok(out)
    }
}

impl RadialFunction for RadialSolution {
    fn domain(&self) -> (f64, f64) {
        (self.ann.inner(), self.ann.outer())
    }

    fn value(&self, rho: f64) -> Result<f64> {
        self.at(rho)
    }

    fn derivative(&self, rho: f64) -> Result<f64> {
        check_in(self.domain(), rho)?;
        Ok(self.integrand.at_offset(rho - self.ann.inner()))
    }
}

const MAX_BISECTIONS: usize = 200;

/// Solves `Q(u) = 2h` radially with `u(a) = u_a`, `u(b) = u_b`.
///
/// Fails with [`Error::Infeasible`] (carrying the achievable drop interval)
/// when `u_a - u_b` cannot be reached. `tol` bounds the error in the drop.
pub fn solve_radial(
    h: MeanCurvature,
    ann: Annulus,
    u_a: f64,
    u_b: f64,
    tol: f64,
) -> Result<RadialSolution> {
    if !(tol > 0.0) || !u_a.is_finite() || !u_b.is_finite() {
        return Err(crate::error::domain("boundary values must be finite and tol positive"));
    }
    let quad_tol = 0.1 * tol;
    let iv = feasible_flux_interval(h, ann);
    let target = u_a - u_b;
    let d_max = Integrand::from_gap(h, ann, End::Lower, 0.0).drop(ann, quad_tol)?;
    let d_min = Integrand::from_gap(h, ann, End::Upper, 0.0).drop(ann, quad_tol)?;
    let achievable = FeasibleDropInterval { d_min, d_max };

    let width = iv.upper - iv.lower;
    let integrand = if (d_max - target).abs() <= tol {
        Integrand::from_gap(h, ann, End::Lower, 0.0)
    } else if (d_min - target).abs() <= tol {
        Integrand::from_gap(h, ann, End::Upper, 0.0)
    } else if !achievable.contains(target) {
        return Err(Error::Infeasible { requested: target, achievable });
    } else {
        // Bisect on the distance to the nearer end: the drop behaves like
        // sqrt(gap) there and C alone cannot resolve it.
        let d_mid = Integrand::from_gap(h, ann, End::Upper, 0.5 * width).drop(ann, quad_tol)?;
        let side = if target >= d_mid { End::Lower } else { End::Upper };
        let (mut lo, mut hi) = (0.0, 0.5 * width);
        let mut found = None;
        let mut last_residual = f64::INFINITY;
        for _ in 0..MAX_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            let f = Integrand::from_gap(h, ann, side, mid);
            let d = f.drop(ann, quad_tol)?;
            last_residual = (d - target).abs();
            if last_residual <= tol {
                found = Some(f);
                break;
            }
            // the drop decreases in C, so away from the lower end and towards the upper end
            let too_close = match side {
                End::Lower => d > target,
                End::Upper => d < target,
            };
            if too_close {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 2.0 * f64::EPSILON * hi {
                break;
            }
        }
        found.ok_or(Error::Bisection { residual: last_residual })?
    };
    let c = integrand.c;

    let rise = integrand.integral(ann.inner(), ann.outer(), quad_tol)?;
    let shift = if c < 0.0 {
        let param = ProfileParameter::new(h, -c)?;
        let member = HeightProfile::new(h, param, quad_tol)?;
        Some(u_b - member.height(ann.outer())?)
    } else {
        None
    };
    Ok(RadialSolution {
        h,
        ann,
        integrand,
        rise,
        outer_value: u_b,
        flux_constant: c,
        shift,
        tol: quad_tol,
    })
}
