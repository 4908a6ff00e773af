//! Poincaré disc primitives and the radial form of the mean curvature operator.
//!
//! In geodesic polar coordinates `(rho, theta)` the disc metric becomes
//! `d rho^2 + sinh^2(rho) d theta^2`, so for a rotational graph `u(rho)`
//!
//! ```text
//! Q(u)(rho) = (1 / sinh rho) d/d rho [ sinh rho * u' / sqrt(1 + u'^2) ]
//! ```
//!
//! The bracket is the radial flux. `Q(u) = 2h` integrates once to
//! `flux = 2h cosh rho + C`.

use crate::error::{domain, Result};

/// Geodesic distance from the origin of the disc.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HyperbolicRadius(f64);

impl HyperbolicRadius {
    pub fn new(rho: f64) -> Result<Self> {
        if !rho.is_finite() || rho < 0.0 {
            return Err(domain(format!("hyperbolic radius must be finite and >= 0, got {rho}")));
        }
        Ok(Self(rho))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Coordinate radius in the unit disc, `tanh(rho / 2)`.
    pub fn to_euclidean(self) -> EuclideanRadius {
        EuclideanRadius((0.5 * self.0).tanh())
    }
}

/// Coordinate radius `|z|` in the unit disc.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EuclideanRadius(f64);

impl EuclideanRadius {
    pub fn new(r: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&r) {
            return Err(domain(format!("disc radius must lie in [0, 1), got {r}")));
        }
        Ok(Self(r))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// `log((1 + r) / (1 - r)) = 2 artanh(r)`.
    pub fn to_hyperbolic(self) -> HyperbolicRadius {
        HyperbolicRadius(2.0 * self.0.atanh())
    }
}

/// Converts a disc coordinate radius to a hyperbolic radius.
pub fn euclidean_to_hyperbolic(r: f64) -> Result<f64> {
    Ok(EuclideanRadius::new(r)?.to_hyperbolic().get())
}

/// Converts a hyperbolic radius to a disc coordinate radius.
pub fn hyperbolic_to_euclidean(rho: f64) -> Result<f64> {
    Ok(HyperbolicRadius::new(rho)?.to_euclidean().get())
}

/// A radial height function `rho -> u(rho)` on an interval of hyperbolic radii.
///
/// The derivative is part of the contract: [`mean_curvature_radial`] only
/// ever reads `u'`, never `u`, which is what makes the operator invariant
/// under vertical translation.
pub trait RadialFunction {
    /// Closed interval `[lo, hi]` on which the function is defined.
    fn domain(&self) -> (f64, f64);

    fn value(&self, rho: f64) -> Result<f64>;

    /// `u'(rho)`. May be `±inf` where the graph is vertical.
    fn derivative(&self, rho: f64) -> Result<f64>;
}

/// A [`RadialFunction`] from a pair of closures.
pub struct ClosedForm<F, D> {
    lo: f64,
    hi: f64,
    value: F,
    derivative: D,
}

impl<F, D> ClosedForm<F, D>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    pub fn new(lo: f64, hi: f64, value: F, derivative: D) -> Self {
        Self {
            lo,
            hi,
            value,
            derivative,
        }
    }
}

impl<F, D> RadialFunction for ClosedForm<F, D>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    fn domain(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    fn value(&self, rho: f64) -> Result<f64> {
        check_in(self.domain(), rho)?;
        Ok((self.value)(rho))
    }

    fn derivative(&self, rho: f64) -> Result<f64> {
        check_in(self.domain(), rho)?;
        Ok((self.derivative)(rho))
    }
}

pub(crate) fn check_in((lo, hi): (f64, f64), rho: f64) -> Result<()> {
    if rho < lo || rho > hi || rho.is_nan() {
        return Err(domain(format!("radius {rho} outside [{lo}, {hi}]")));
    }
    Ok(())
}

/// `cosh x - 2h sinh x` as `((1 - 2h) e^x + (1 + 2h) e^-x) / 2`, which stays
/// accurate for large `x` when `2h` is close to 1.
pub(crate) fn cosh_minus_2h_sinh(two_h: f64, x: f64) -> f64 {
    0.5 * ((1.0 - two_h) * x.exp() + (1.0 + two_h) * (-x).exp())
}

pub(crate) fn cosh_plus_2h_sinh(two_h: f64, x: f64) -> f64 {
    0.5 * ((1.0 + two_h) * x.exp() + (1.0 - two_h) * (-x).exp())
}

/// `sinh x - 2h cosh x`, same treatment.
pub(crate) fn sinh_minus_2h_cosh(two_h: f64, x: f64) -> f64 {
    0.5 * ((1.0 - two_h) * x.exp() - (1.0 + two_h) * (-x).exp())
}

/// `p / sqrt(1 + p^2)`, total on the extended reals.
pub fn unit_slope(p: f64) -> f64 {
    if p.is_infinite() {
        p.signum()
    } else if p.abs() > 1.0 {
        p.signum() / (1.0 + (1.0 / p).powi(2)).sqrt()
    } else {
        p / (1.0 + p * p).sqrt()
    }
}

/// Radial flux `sinh(rho) * slope / sqrt(1 + slope^2)`.
///
/// An infinite slope is the vertical-graph sentinel and yields `±sinh(rho)`.
pub fn flux(slope: f64, rho: f64) -> f64 {
    rho.sinh() * unit_slope(slope)
}

/// Default finite-difference step for [`mean_curvature_radial`].
pub const DEFAULT_STEP: f64 = 1e-4;

/// Central-difference approximation of `Q(u)(rho)` from the flux at
/// `rho ± step`. Second order in `step`.
pub fn mean_curvature_radial<U: RadialFunction + ?Sized>(u: &U, rho: f64, step: f64) -> Result<f64> {
    if !(step > 0.0) {
        return Err(domain(format!("finite-difference step must be positive, got {step}")));
    }
    let (lo, hi) = u.domain();
    if rho - step < lo || rho + step > hi {
        return Err(domain(format!(
            "stencil [{}, {}] leaves the domain [{lo}, {hi}]",
            rho - step,
            rho + step
        )));
    }
    let outer = flux(u.derivative(rho + step)?, rho + step);
    let inner = flux(u.derivative(rho - step)?, rho - step);
    Ok((outer - inner) / (2.0 * step * rho.sinh()))
}

/// One Richardson step on [`mean_curvature_radial`]: `(4 Q(step/2) - Q(step)) / 3`.
pub fn mean_curvature_radial_richardson<U: RadialFunction + ?Sized>(
    u: &U,
    rho: f64,
    step: f64,
) -> Result<f64> {
    let coarse = mean_curvature_radial(u, rho, step)?;
    let fine = mean_curvature_radial(u, rho, 0.5 * step)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_match_closed_forms() {
        assert_eq!(euclidean_to_hyperbolic(0.0).unwrap(), 0.0);
        assert!((euclidean_to_hyperbolic(0.5).unwrap() - 3f64.ln()).abs() < 1e-15);
        assert!((euclidean_to_hyperbolic(0.5f64.tanh()).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(hyperbolic_to_euclidean(0.0).unwrap(), 0.0);
        assert!((hyperbolic_to_euclidean(3f64.ln()).unwrap() - 0.5).abs() < 1e-15);
        assert!((hyperbolic_to_euclidean(2.0).unwrap() - 1f64.tanh()).abs() < 1e-15);
    }

    #[test]
    fn conversions_reject_out_of_domain() {
        assert!(euclidean_to_hyperbolic(1.0).is_err());
        assert!(euclidean_to_hyperbolic(-0.1).is_err());
        assert!(hyperbolic_to_euclidean(-1e-3).is_err());
        assert!(hyperbolic_to_euclidean(f64::NAN).is_err());
    }

    #[test]
    fn round_trip() {
        for k in 0..=999 {
            let r = k as f64 * 1e-3;
            let back = hyperbolic_to_euclidean(euclidean_to_hyperbolic(r).unwrap()).unwrap();
            assert!((back - r).abs() <= 1e-14 * r.max(f64::MIN_POSITIVE), "r = {r}: {back}");
        }
    }

    #[test]
    fn flux_edge_cases() {
        assert_eq!(flux(0.0, 1.3), 0.0);
        assert_eq!(flux(f64::INFINITY, 1.3), 1.3f64.sinh());
        assert_eq!(flux(f64::NEG_INFINITY, 1.3), -1.3f64.sinh());
        assert!((flux(1e200, 0.7) - 0.7f64.sinh()).abs() < 1e-15);
        for p in [-50.0, -1.0, 0.3, 2.0, 1e3] {
            assert!(flux(p, 0.9).abs() < 0.9f64.sinh());
        }
    }

    #[test]
    fn constant_graph_is_minimal() {
        let u = ClosedForm::new(0.0, 5.0, |_| 3.5, |_| 0.0);
        assert_eq!(mean_curvature_radial(&u, 1.0, 1e-4).unwrap(), 0.0);
    }

    #[test]
    fn half_neck_closed_form_has_q_one() {
        // h = 1/2, alpha = 1: u = 2 (cosh(rho/2) - 1), u' = sinh(rho/2).
        let u = ClosedForm::new(0.0, 5.0, |r| 2.0 * ((0.5 * r).cosh() - 1.0), |r| (0.5 * r).sinh());
        let q = mean_curvature_radial(&u, 1.0, 1e-4).unwrap();
        assert!((q - 1.0).abs() < 1e-8, "{q}");
        let qr = mean_curvature_radial_richardson(&u, 1.0, 1e-2).unwrap();
        assert!((qr - 1.0).abs() < 1e-10, "{qr}");
    }

    #[test]
    fn vertical_translate_is_invisible() {
        let u = ClosedForm::new(0.0, 5.0, |r| 2.0 * ((0.5 * r).cosh() - 1.0), |r| (0.5 * r).sinh());
        let v = ClosedForm::new(0.0, 5.0, |r| 2.0 * ((0.5 * r).cosh() - 1.0) + 17.0, |r| (0.5 * r).sinh());
        for rho in [0.4, 1.0, 2.2] {
            assert_eq!(
                mean_curvature_radial(&u, rho, 1e-3).unwrap(),
                mean_curvature_radial(&v, rho, 1e-3).unwrap()
            );
        }
    }

    #[test]
    fn stencil_outside_domain_is_rejected() {
        let u = ClosedForm::new(1.0, 2.0, |_| 0.0, |_| 0.0);
        assert!(mean_curvature_radial(&u, 1.00005, 1e-4).is_err());
        assert!(mean_curvature_radial(&u, 1.5, 0.0).is_err());
        assert!(u.value(2.5).is_err());
    }
}
