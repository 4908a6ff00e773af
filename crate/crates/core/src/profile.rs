//! The rotational family `H^h_alpha` of constant mean curvature `h` graphs.
//!
//! For `0 < h <= 1/2` and `alpha > 0` the profile is defined outside the disc
//! of radius `rho0 = rho^h(alpha)`, vanishes and is vertical on its boundary
//! circle, and has slope
//!
//! ```text
//! u(rho) = (2h cosh rho - alpha) / sqrt(sinh^2 rho - (2h cosh rho - alpha)^2)
//! ```
//!
//! The radicand vanishes linearly at `rho0`, so heights are integrated after
//! the substitution `rho = rho0 + s^2`. Both factors of the radicand are
//! rewritten relative to `rho0` with half-angle identities so the vanishing
//! factor is computed without cancellation.

use crate::error::{domain, Error, Result};
use crate::hyperbolic::{
    check_in, cosh_minus_2h_sinh, cosh_plus_2h_sinh, sinh_minus_2h_cosh, RadialFunction,
};
use crate::quadrature::{integrate, QuadOptions};
use crate::MAX_RADIUS;

/// Below this value of `1 - 4h^2` the boundary radius uses the `h = 1/2`
/// formula `|log alpha|`.
pub const HALF_BRANCH_EPS: f64 = 1e-9;

/// Relative tolerance when comparing parameters (in particular against the
/// neck value `2h`).
pub const PARAM_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanCurvature {
    h: f64,
    is_half: bool,
}

impl MeanCurvature {
    pub const HALF: MeanCurvature = MeanCurvature { h: 0.5, is_half: true };

    pub fn new(h: f64) -> Result<Self> {
        if !(h > 0.0 && h <= 0.5) {
            return Err(domain(format!("mean curvature must lie in (0, 1/2], got {h}")));
        }
        Ok(Self { h, is_half: h == 0.5 })
    }

    pub fn value(self) -> f64 {
        self.h
    }

    /// Set when `h` is exactly `1/2`.
    pub fn is_half(self) -> bool {
        self.is_half
    }

    /// `1 - 4h^2`, computed as `(1 - 2h)(1 + 2h)`.
    pub fn deficit(self) -> f64 {
        (1.0 - 2.0 * self.h) * (1.0 + 2.0 * self.h)
    }

    fn uses_half_formula(self) -> bool {
        self.is_half || self.deficit() < HALF_BRANCH_EPS
    }

    /// The neck parameter `2h`, where both branches meet at `rho0 = 0`.
    pub fn neck(self) -> f64 {
        2.0 * self.h
    }
}

/// Which side of the neck `alpha = 2h` a parameter sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `alpha < 2h`: the profile rises from its boundary circle.
    Small,
    Neck,
    /// `alpha > 2h`: the profile dips below zero before rising.
    Large,
}

#[derive(Debug, Clone, Copy)]
pub struct ProfileParameter {
    alpha: f64,
    branch: Branch,
}

impl ProfileParameter {
    pub fn new(h: MeanCurvature, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(domain(format!("profile parameter must be positive and finite, got {alpha}")));
        }
        let neck = h.neck();
        if (alpha - neck).abs() <= PARAM_REL_TOL * neck {
            return Ok(Self { alpha: neck, branch: Branch::Neck });
        }
        let branch = if alpha < neck { Branch::Small } else { Branch::Large };
        Ok(Self { alpha, branch })
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }

    pub fn branch(self) -> Branch {
        self.branch
    }

    /// Equality up to [`PARAM_REL_TOL`].
    pub fn approx_eq(self, other: ProfileParameter) -> bool {
        (self.alpha - other.alpha).abs() <= PARAM_REL_TOL * self.alpha.max(other.alpha)
    }
}

fn check_radius(rho: f64) -> Result<()> {
    if !(rho >= 0.0) || rho > MAX_RADIUS {
        return Err(domain(format!("radius must lie in [0, {MAX_RADIUS}], got {rho}")));
    }
    Ok(())
}

/// Radius `rho^h(alpha)` of the circle on which `H^h_alpha` is zero and vertical.
pub fn boundary_radius(h: MeanCurvature, param: ProfileParameter) -> f64 {
    let alpha = param.alpha;
    if param.branch == Branch::Neck {
        return 0.0;
    }
    if h.uses_half_formula() {
        return alpha.ln().abs();
    }
    // cosh(rho) - 1, rationalised so that neither h -> 1/2 nor alpha -> 2h cancels:
    // (alpha - 2h)^2 (alpha^2 + 1) / ((2h alpha + R)(alpha^2 + 1 - 2h alpha + R)),
    // R = sqrt(alpha^2 + 1 - 4h^2).
    let two_h = h.neck();
    let root = (alpha * alpha + h.deficit()).sqrt();
    let q = alpha * alpha + 1.0 - two_h * alpha;
    let gap = alpha - two_h;
    let cosh_minus_one = gap * gap * (alpha * alpha + 1.0) / ((two_h * alpha + root) * (q + root));
    2.0 * (0.5 * cosh_minus_one).sqrt().asinh()
}

/// Supremum of boundary radii reachable on the small branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HoleThreshold {
    /// `arccosh(1/sqrt(1 - 4h^2)) = artanh(2h)`.
    Finite(f64),
    /// `h = 1/2`: every radius is reachable.
    Unbounded,
}

impl HoleThreshold {
    /// Whether a small-branch profile exists with boundary radius `a`.
    pub fn admits(self, a: f64) -> bool {
        match self {
            HoleThreshold::Finite(t) => a < t,
            HoleThreshold::Unbounded => true,
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            HoleThreshold::Finite(t) => Some(t),
            HoleThreshold::Unbounded => None,
        }
    }
}

pub fn hole_threshold(h: MeanCurvature) -> HoleThreshold {
    if h.is_half {
        HoleThreshold::Unbounded
    } else {
        HoleThreshold::Finite((2.0 * h.h).atanh())
    }
}

/// The small-branch parameter `2h cosh rho - sinh rho` whose profile has
/// boundary radius `rho`.
pub fn param_small(h: MeanCurvature, rho: f64) -> Result<ProfileParameter> {
    check_radius(rho)?;
    if h.is_half {
        return ProfileParameter::new(h, (-rho).exp());
    }
    let threshold = (2.0 * h.h).atanh();
    let alpha = rho.cosh() * (h.neck() - rho.tanh());
    if rho >= threshold || !(alpha > 0.0) {
        return Err(Error::HoleTooLarge { h: h.h, a: rho, threshold });
    }
    ProfileParameter::new(h, alpha)
}

/// The large-branch parameter `2h cosh rho + sinh rho` whose profile has
/// boundary radius `rho`.
pub fn param_large(h: MeanCurvature, rho: f64) -> Result<ProfileParameter> {
    check_radius(rho)?;
    if h.is_half {
        return ProfileParameter::new(h, rho.exp());
    }
    ProfileParameter::new(h, rho.cosh() * (h.neck() + rho.tanh()))
}

/// A row of a sampled profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRow {
    pub rho: f64,
    pub height: f64,
    /// `±inf` on a vertical boundary row.
    pub slope: f64,
}

/// `H^h_alpha` as an evaluable radial function on `[rho0, MAX_RADIUS]`.
///
/// Evaluation is pure; every call runs its own quadrature.
#[derive(Debug, Clone, Copy)]
pub struct HeightProfile {
    h: MeanCurvature,
    param: ProfileParameter,
    rho0: f64,
    tol: f64,
}

impl HeightProfile {
    pub fn new(h: MeanCurvature, param: ProfileParameter, tol: f64) -> Result<Self> {
        let rho0 = boundary_radius(h, param);
        Self::anchored(h, param, rho0, tol)
    }

    fn anchored(h: MeanCurvature, param: ProfileParameter, rho0: f64, tol: f64) -> Result<Self> {
        if !(tol > 0.0) {
            return Err(domain(format!("quadrature tolerance must be positive, got {tol}")));
        }
        check_radius(rho0)?;
        Ok(Self { h, param, rho0, tol })
    }

    /// Small-branch profile whose boundary circle is exactly `rho`.
    pub fn small_at(h: MeanCurvature, rho: f64, tol: f64) -> Result<Self> {
        Self::anchored(h, param_small(h, rho)?, rho, tol)
    }

    /// Large-branch profile whose boundary circle is exactly `rho`.
    pub fn large_at(h: MeanCurvature, rho: f64, tol: f64) -> Result<Self> {
        Self::anchored(h, param_large(h, rho)?, rho, tol)
    }

    pub fn mean_curvature(&self) -> MeanCurvature {
        self.h
    }

    pub fn param(&self) -> ProfileParameter {
        self.param
    }

    pub fn rho0(&self) -> f64 {
        self.rho0
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn with_tol(self, tol: f64) -> Result<Self> {
        Self::anchored(self.h, self.param, self.rho0, tol)
    }

    fn check(&self, rho: f64) -> Result<()> {
        check_radius(rho)?;
        // Allow a few ulps below rho0 for radii computed through another route.
        let slack = 4.0 * f64::EPSILON * (1.0 + self.rho0);
        if rho < self.rho0 - slack {
            return Err(domain(format!(
                "radius {rho} lies inside the boundary circle rho0 = {}",
                self.rho0
            )));
        }
        Ok(())
    }

    /// Slope at `rho = rho0 + offset`, `offset >= 0`.
    fn slope_at_offset(&self, offset: f64) -> f64 {
        let two_h = self.h.neck();
        let alpha = self.param.alpha;
        let r = self.rho0 + offset;
        let half_sinh = (0.5 * r).sinh();
        // 2h cosh r - alpha without cancellation near the neck.
        let numer = (two_h - alpha) + 2.0 * two_h * half_sinh * half_sinh;
        match self.param.branch {
            Branch::Neck => {
                if r == 0.0 {
                    return 0.0;
                }
                two_h * half_sinh / (1.0 + self.h.deficit() * half_sinh * half_sinh).sqrt()
            }
            Branch::Small => {
                if offset <= 0.0 {
                    return f64::INFINITY;
                }
                let m = self.rho0 + 0.5 * offset;
                // sinh r - numer, vanishing at rho0
                let vanishing = 2.0 * (0.5 * offset).sinh() * cosh_minus_2h_sinh(two_h, m);
                let other = r.sinh() + numer;
                numer / (vanishing * other).sqrt()
            }
            Branch::Large => {
                if offset <= 0.0 {
                    return f64::NEG_INFINITY;
                }
                let m = self.rho0 + 0.5 * offset;
                // sinh r + numer, vanishing at rho0
                let vanishing = 2.0 * (0.5 * offset).sinh() * cosh_plus_2h_sinh(two_h, m);
                let other = sinh_minus_2h_cosh(two_h, r) + alpha;
                numer / (vanishing * other).sqrt()
            }
        }
    }

    /// `u^h_alpha(rho)`; the signed infinity sentinel on the boundary circle.
    pub fn slope(&self, rho: f64) -> Result<f64> {
        self.check(rho)?;
        Ok(self.slope_at_offset((rho - self.rho0).max(0.0)))
    }

    /// `∫_{r1}^{r2} u(r) dr` for `rho0 <= r1 <= r2`, integrated in
    /// `s = sqrt(r - rho0)`.
    pub fn height_between(&self, r1: f64, r2: f64) -> Result<f64> {
        self.check(r1)?;
        self.check(r2)?;
        if r2 < r1 {
            return Ok(-self.height_between(r2, r1)?);
        }
        let s1 = (r1 - self.rho0).max(0.0).sqrt();
        let s2 = (r2 - self.rho0).max(0.0).sqrt();
        let res = integrate(
            |s| 2.0 * s * self.slope_at_offset(s * s),
            s1,
            s2,
            QuadOptions::with_tol(self.tol),
        )?;
        Ok(res.value)
    }

    /// `H^h_alpha(rho)`.
    pub fn height(&self, rho: f64) -> Result<f64> {
        self.height_between(self.rho0, rho)
    }

    /// `n` rows uniform in `rho` on `[rho0, rho_max]`, heights accumulated
    /// panel by panel.
    pub fn sample(&self, rho_max: f64, n: usize) -> Result<Vec<ProfileRow>> {
        self.check(rho_max)?;
        if n < 2 {
            return Err(domain(format!("need at least 2 samples, got {n}")));
        }
        if !(rho_max > self.rho0) {
            return Err(domain(format!(
                "rho_max = {rho_max} must exceed the boundary radius {}",
                self.rho0
            )));
        }
        // Split the tolerance across panels so the accumulated height keeps it.
        let panel = Self { tol: self.tol / (n - 1) as f64, ..*self };
        let step = (rho_max - self.rho0) / (n - 1) as f64;
        let mut rows = Vec::with_capacity(n);
        rows.push(ProfileRow { rho: self.rho0, height: 0.0, slope: self.slope(self.rho0)? });
        let mut acc = 0.0;
        let mut prev = self.rho0;
        for i in 1..n {
            let rho = if i == n - 1 { rho_max } else { self.rho0 + step * i as f64 };
            acc += panel.height_between(prev, rho)?;
            rows.push(ProfileRow { rho, height: acc, slope: self.slope(rho)? });
            prev = rho;
        }
        Ok(rows)
    }
}

impl RadialFunction for HeightProfile {
    fn domain(&self) -> (f64, f64) {
        (self.rho0, MAX_RADIUS)
    }

    fn value(&self, rho: f64) -> Result<f64> {
        check_in(self.domain(), rho)?;
        self.height(rho)
    }

    fn derivative(&self, rho: f64) -> Result<f64> {
        check_in(self.domain(), rho)?;
        self.slope(rho)
    }
}

/// `u^h_alpha(rho)`.
pub fn slope(h: MeanCurvature, param: ProfileParameter, rho: f64) -> Result<f64> {
    HeightProfile::new(h, param, crate::DEFAULT_TOL)?.slope(rho)
}

/// `H^h_alpha(rho)` to absolute tolerance `tol`.
pub fn height(h: MeanCurvature, param: ProfileParameter, rho: f64, tol: f64) -> Result<f64> {
    HeightProfile::new(h, param, tol)?.height(rho)
}

/// Table of `(rho, H, u)` on `n` uniform nodes from the boundary radius to `rho_max`.
pub fn sample_profile(
    h: MeanCurvature,
    param: ProfileParameter,
    rho_max: f64,
    n: usize,
    tol: f64,
) -> Result<Vec<ProfileRow>> {
    HeightProfile::new(h, param, tol)?.sample(rho_max, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::mean_curvature_radial;

    fn mc(h: f64) -> MeanCurvature {
        MeanCurvature::new(h).unwrap()
    }

    fn param(h: f64, alpha: f64) -> ProfileParameter {
        ProfileParameter::new(mc(h), alpha).unwrap()
    }

    #[test]
    fn mean_curvature_validation() {
        assert!(MeanCurvature::new(0.0).is_err());
        assert!(MeanCurvature::new(0.5000001).is_err());
        assert!(MeanCurvature::new(f64::NAN).is_err());
        assert!(mc(0.5).is_half());
        assert!(!mc(0.4999).is_half());
    }

    #[test]
    fn branch_tags() {
        assert_eq!(param(0.4, 0.5).branch(), Branch::Small);
        assert_eq!(param(0.4, 0.8).branch(), Branch::Neck);
        assert_eq!(param(0.4, 0.8 * (1.0 + 1e-13)).branch(), Branch::Neck);
        assert_eq!(param(0.4, 1.2).branch(), Branch::Large);
        assert!(ProfileParameter::new(mc(0.4), 0.0).is_err());
        assert!(ProfileParameter::new(mc(0.4), -1.0).is_err());
    }

    #[test]
    fn boundary_radius_examples() {
        for h in [0.1, 0.3, 0.5] {
            assert_eq!(boundary_radius(mc(h), param(h, 2.0 * h)), 0.0);
        }
        assert_eq!(boundary_radius(mc(0.5), param(0.5, std::f64::consts::E)), 1.0);
        let beta = 0.8 * 1f64.cosh() + 1f64.sinh();
        assert!((boundary_radius(mc(0.4), param(0.4, beta)) - 1.0).abs() < 1e-12);
        assert!((boundary_radius(mc(0.4), param(0.4, 2.4096657)) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn boundary_radius_matches_literal_formula_away_from_seam() {
        for h in [0.1f64, 0.25, 0.4] {
            for alpha in [0.05f64, 0.3, 1.0, 2.5, 7.0] {
                let k = 1.0 - 4.0 * h * h;
                let literal = ((-2.0 * alpha * h + (k + alpha * alpha).sqrt()) / k).acosh();
                let ours = boundary_radius(mc(h), param(h, alpha));
                assert!((ours - literal).abs() < 1e-9 * (1.0 + literal), "h={h} a={alpha}");
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let h = mc(0.4);
        assert_eq!(param_small(h, 0.0).unwrap().alpha(), 0.8);
        assert_eq!(param_small(h, 0.0).unwrap().branch(), Branch::Neck);
        let a = param_small(h, 0.5).unwrap().alpha();
        assert!((a - (0.8 * 0.5f64.cosh() - 0.5f64.sinh())).abs() < 1e-15);
        assert!((a - 0.3810055).abs() < 1e-7);
        assert!((boundary_radius(h, param_small(h, 0.5).unwrap()) - 0.5).abs() < 1e-12);
        let b = param_large(h, 1.0).unwrap().alpha();
        assert!((b - 2.4096657).abs() < 1e-7);
        assert_eq!(param_small(MeanCurvature::HALF, 1.0).unwrap().alpha(), (-1f64).exp());
        assert_eq!(param_large(MeanCurvature::HALF, 1.0).unwrap().alpha(), 1f64.exp());
        assert_eq!(param_large(h, 0.0).unwrap().alpha(), 0.8);
    }

    #[test]
    fn param_small_rejects_large_holes() {
        let h = mc(0.4);
        assert!(matches!(param_small(h, 1.2), Err(Error::HoleTooLarge { .. })));
        assert!(matches!(param_small(h, 3f64.ln()), Err(Error::HoleTooLarge { .. })));
        assert!(param_small(h, 3f64.ln() - 1e-6).is_ok());
        assert!(param_small(MeanCurvature::HALF, 50.0).is_ok());
        assert!(param_large(h, 101.0).is_err());
    }

    #[test]
    fn hole_threshold_examples() {
        let t = hole_threshold(mc(0.4)).finite().unwrap();
        assert!((t - 3f64.ln()).abs() < 1e-12);
        assert_eq!(hole_threshold(MeanCurvature::HALF), HoleThreshold::Unbounded);
        let tiny = hole_threshold(mc(1e-9)).finite().unwrap();
        assert!(tiny < 1e-8);
        // artanh(2h) = arccosh(1/sqrt(1-4h^2))
        for h in [0.05, 0.2, 0.45] {
            let t = hole_threshold(mc(h)).finite().unwrap();
            let lit = (1.0 / (1.0 - 4.0 * h * h).sqrt()).acosh();
            assert!((t - lit).abs() < 1e-12);
        }
    }

    #[test]
    fn slope_examples() {
        let s = slope(MeanCurvature::HALF, param(0.5, 1.0), 2.0).unwrap();
        assert!((s - 1f64.sinh()).abs() < 1e-14);
        // neck limit from above is finite and tends to 0
        let h = mc(0.4);
        let p = param(0.4, 0.8);
        assert_eq!(slope(h, p, 0.0).unwrap(), 0.0);
        let mut prev = f64::INFINITY;
        for k in 1..8 {
            let r = 10f64.powi(-k);
            let s = slope(h, p, r).unwrap();
            assert!(s.is_finite() && s > 0.0 && s < prev);
            assert!((s / r - 0.4).abs() < 0.05);
            prev = s;
        }
        // large branch just outside the boundary: large negative
        let beta = param_large(h, 1.0).unwrap();
        let prof = HeightProfile::new(h, beta, 1e-10).unwrap();
        assert_eq!(prof.slope(prof.rho0()).unwrap(), f64::NEG_INFINITY);
        assert!(prof.slope(prof.rho0() + 1e-8).unwrap() < -1e3);
        let small = HeightProfile::new(h, param(0.4, 0.3), 1e-10).unwrap();
        assert_eq!(small.slope(small.rho0()).unwrap(), f64::INFINITY);
        assert!(small.slope(small.rho0() - 1e-3).is_err());
    }

    #[test]
    fn height_closed_form() {
        let p = HeightProfile::new(MeanCurvature::HALF, param(0.5, 1.0), 1e-11).unwrap();
        assert_eq!(p.height(0.0).unwrap(), 0.0);
        for rho in [0.1f64, 0.5, 1.0, 2.0, 3.0] {
            let exact = 2.0 * ((0.5 * rho).cosh() - 1.0);
            assert!((p.height(rho).unwrap() - exact).abs() < 1e-10, "rho={rho}");
        }
        assert!((p.height(2.0).unwrap() - 1.0861612696304874).abs() < 1e-10);
    }

    #[test]
    fn large_branch_dips_negative() {
        let h = mc(0.4);
        let beta = param_large(h, 1.0).unwrap();
        let v = height(h, beta, 1.3, 1e-10).unwrap();
        assert!(v < 0.0, "{v}");
        // and eventually turns positive
        assert!(height(h, beta, 6.0, 1e-10).unwrap() > 0.0);
    }

    #[test]
    fn height_matches_unsubstituted_quadrature_away_from_boundary() {
        let h = mc(0.3);
        let p = HeightProfile::new(h, param(0.3, 0.2), 1e-12).unwrap();
        let r1 = p.rho0() + 0.2;
        let direct = integrate(
            |r| {
                let n = 0.6 * r.cosh() - 0.2;
                n / (r.sinh().powi(2) - n * n).sqrt()
            },
            r1,
            2.5,
            QuadOptions::with_tol(1e-12),
        )
        .unwrap()
        .value;
        assert!((p.height_between(r1, 2.5).unwrap() - direct).abs() < 1e-10);
    }

    #[test]
    fn derivative_of_heights_is_slope() {
        let h = mc(0.35);
        for alpha in [0.2, 0.7, 1.9] {
            let p = HeightProfile::new(h, param(0.35, alpha), 1e-12).unwrap();
            let rho = p.rho0() + 0.8;
            let ds = 1e-3;
            let fd = (p.height(rho + ds).unwrap() - p.height(rho - ds).unwrap()) / (2.0 * ds);
            assert!((fd - p.slope(rho).unwrap()).abs() < 1e-5, "alpha={alpha}");
        }
    }

    #[test]
    fn sampled_profile() {
        let rows = sample_profile(MeanCurvature::HALF, param(0.5, 1.0), 2.0, 5, 1e-11).unwrap();
        assert_eq!(rows.len(), 5);
        for r in &rows {
            assert!((r.height - 2.0 * ((0.5 * r.rho).cosh() - 1.0)).abs() < 1e-10);
        }
        let two = sample_profile(mc(0.3), param(0.3, 0.9), 2.0, 2, 1e-10).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].height, 0.0);
        assert_eq!(two[0].slope, f64::NEG_INFINITY);
        assert_eq!(two[1].rho, 2.0);
        let small = sample_profile(mc(0.3), param(0.3, 0.4), 3.0, 40, 1e-10).unwrap();
        assert_eq!(small[0].slope, f64::INFINITY);
        assert!(small.windows(2).all(|w| w[1].height >= w[0].height));
        assert!(sample_profile(mc(0.3), param(0.3, 0.4), 3.0, 1, 1e-10).is_err());
    }

    #[test]
    fn cmc_property_on_quadrature_profile() {
        let h = mc(0.4);
        let p = HeightProfile::new(h, param(0.4, 0.9), 1e-10).unwrap();
        let q = mean_curvature_radial(&p, 1.5, 1e-4).unwrap();
        assert!((q - 0.8).abs() < 1e-5, "{q}");
    }

    #[test]
    fn seam_at_half() {
        let near = mc(0.5 - 1e-12);
        for alpha in [0.2, 0.7, 1.5, 4.0] {
            let r = boundary_radius(near, ProfileParameter::new(near, alpha).unwrap());
            assert!((r - alpha.ln().abs()).abs() < 1e-6);
        }
    }
}
