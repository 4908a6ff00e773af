//! A-priori height bounds for constant mean curvature graphs on a circular
//! annulus `a <= rho <= b`, and the non-existence test they imply.
//!
//! The bounds are vertical translates of the two family members that are
//! vertical on the inner circle:
//!
//! - upper: `H_beta(rho) - H_beta(b) + M` with `beta = 2h cosh a + sinh a`,
//!   valid on every annulus;
//! - lower: `H_alpha(rho) - H_alpha(b) + m` with `alpha = 2h cosh a - sinh a`,
//!   available only when `alpha > 0`, i.e. `a < artanh(2h)` (always for
//!   `h = 1/2`).
//!
//! `M` and `m` are the max and min of the graph on the outer circle. Both
//! envelopes take their outer value at `rho = b`; at `rho = a` they reduce to
//! `-H(b) + M` and `-H(b) + m` because every family member vanishes on its
//! boundary circle.
//!
//! The hole-size condition uses `artanh(2h) = arccosh(1/sqrt(1 - 4h^2))`,
//! the exact range of boundary radii on the small branch.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::hyperbolic::{check_in, euclidean_to_hyperbolic, RadialFunction};
use crate::profile::{HeightProfile, MeanCurvature, ProfileParameter};
use crate::MAX_RADIUS;

/// Default number of uniform samples for envelope tables.
pub const DEFAULT_SAMPLES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    a: f64,
    b: f64,
}

impl Annulus {
    /// Annulus from hyperbolic radii.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a < b && b <= MAX_RADIUS) {
            return Err(domain(format!(
                "annulus needs 0 < a < b <= {MAX_RADIUS}, got a = {a}, b = {b}"
            )));
        }
        Ok(Self { a, b })
    }

    /// Annulus from Euclidean disc radii.
    pub fn from_euclidean(ra: f64, rb: f64) -> Result<Self> {
        Self::new(euclidean_to_hyperbolic(ra)?, euclidean_to_hyperbolic(rb)?)
    }

    pub fn inner(&self) -> f64 {
        self.a
    }

    pub fn outer(&self) -> f64 {
        self.b
    }

    pub fn thickness(&self) -> f64 {
        self.b - self.a
    }

    /// `n` uniform radii from `a` to `b` inclusive.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        let step = self.thickness() / (n - 1) as f64;
        (0..n)
            .map(|i| if i == n - 1 { self.b } else { self.a + step * i as f64 })
            .collect()
    }
}

/// Range of the graph on the outer circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuterBoundaryData {
    pub min: f64,
    pub max: f64,
}

impl OuterBoundaryData {
    pub fn new(min: f64, max: f64) -> Result<Self> {
        if !(min <= max) {
            return Err(domain(format!("outer data needs min <= max, got {min} > {max}")));
        }
        Ok(Self { min, max })
    }

    pub fn constant(c: f64) -> Self {
        Self { min: c, max: c }
    }

    pub fn from_samples(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(domain("outer data table is empty"));
        }
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self::new(min, max)
    }
}

/// A translated family member restricted to an annulus, pinned to a value at
/// the outer radius.
#[derive(Debug, Clone, Copy)]
pub struct Envelope {
    profile: HeightProfile,
    outer: f64,
    outer_value: f64,
    offset: f64,
}

impl Envelope {
    fn new(profile: HeightProfile, ann: Annulus, outer_value: f64) -> Result<Self> {
        let drop = profile.height(ann.b)?;
        Ok(Self { profile, outer: ann.b, outer_value, offset: outer_value - drop })
    }

    pub fn profile(&self) -> &HeightProfile {
        &self.profile
    }

    pub fn param(&self) -> ProfileParameter {
        self.profile.param()
    }

    /// Value on the inner circle, `-H(b) + outer value`.
    pub fn at_inner(&self) -> f64 {
        self.offset
    }

    pub fn at(&self, rho: f64) -> Result<f64> {
        check_in(self.domain(), rho)?;
        if rho == self.outer {
            return Ok(self.outer_value);
        }
        Ok(self.offset + self.profile.height(rho)?)
    }

    /// `n` uniform samples over the annulus, accumulated panel by panel.
    pub fn sample(&self, n: usize) -> Result<Vec<(f64, f64)>> {
        let rows = self.profile.sample(self.outer, n)?;
        // Shift so the table is anchored at the outer value, where the bound is pinned.
        let shift = self.outer_value - rows[rows.len() - 1].height;
        let mut out: Vec<(f64, f64)> = rows.into_iter().map(|r| (r.rho, r.height + shift)).collect();
        out[n - 1].1 = self.outer_value;
        Ok(out)
    }
}

impl RadialFunction for Envelope {
    fn domain(&self) -> (f64, f64) {
        (self.profile.rho0(), self.outer)
    }

    fn value(&self, rho: f64) -> Result<f64> {
        self.at(rho)
    }

    fn derivative(&self, rho: f64) -> Result<f64> {
        check_in(self.domain(), rho)?;
        self.profile.slope(rho)
    }
}

/// Upper envelope `H_beta(rho) - H_beta(b) + M`, `beta = param_large(h, a)`.
pub fn upper_envelope(h: MeanCurvature, ann: Annulus, max_outer: f64, tol: f64) -> Result<Envelope> {
    Envelope::new(HeightProfile::large_at(h, ann.a, tol)?, ann, max_outer)
}

/// Lower envelope `H_alpha(rho) - H_alpha(b) + m`, `alpha = param_small(h, a)`.
///
/// Fails with [`crate::Error::HoleTooLarge`] when `h < 1/2` and
/// `a >= artanh(2h)`.
pub fn lower_envelope(h: MeanCurvature, ann: Annulus, min_outer: f64, tol: f64) -> Result<Envelope> {
    Envelope::new(HeightProfile::small_at(h, ann.a, tol)?, ann, min_outer)
}

#[derive(Debug, Clone)]
pub struct AprioriBounds {
    pub upper: Envelope,
    pub lower: Option<Envelope>,
    pub beta: ProfileParameter,
    pub alpha: Option<ProfileParameter>,
    pub hole_ok: bool,
}

/// A sampled row of an [`AprioriBounds`] table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsRow {
    pub rho: f64,
    pub lower: Option<f64>,
    pub upper: f64,
}

impl AprioriBounds {
    pub fn sample(&self, n: usize) -> Result<Vec<BoundsRow>> {
        let upper = self.upper.sample(n)?;
        let lower = match &self.lower {
            Some(l) => Some(l.sample(n)?),
            None => None,
        };
        Ok(upper
            .iter()
            .enumerate()
            .map(|(i, &(rho, u))| BoundsRow {
                rho,
                lower: lower.as_ref().map(|l| l[i].1),
                upper: u,
            })
            .collect())
    }
}

/// Both envelopes for an annulus and outer data; the lower one is absent
/// when the hole is too large.
pub fn bounding_box(
    h: MeanCurvature,
    ann: Annulus,
    data: OuterBoundaryData,
    tol: f64,
) -> Result<AprioriBounds> {
    let upper = upper_envelope(h, ann, data.max, tol)?;
    let lower = match lower_envelope(h, ann, data.min, tol) {
        Ok(l) => Some(l),
        Err(crate::Error::HoleTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(AprioriBounds {
        beta: upper.param(),
        alpha: lower.as_ref().map(Envelope::param),
        hole_ok: lower.is_some(),
        upper,
        lower,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Inner data exceed the upper bound on the inner circle: no solution.
    ViolatesUpper,
    /// Inner data fall below the lower bound on the inner circle: no solution.
    ViolatesLower,
    /// Nothing certified.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Feasibility {
    pub verdict: Verdict,
    /// Largest admissible inner value, `-H_beta(b) + M`.
    pub threshold_upper: f64,
    /// Smallest admissible inner value, `-H_alpha(b) + m`, when the lower bound exists.
    pub threshold_lower: Option<f64>,
    /// Amount by which the violated bound is exceeded; for an inconclusive
    /// verdict, the distance to the nearest bound.
    pub margin: f64,
}

/// Compares inner-circle Dirichlet data against the envelope values at
/// `rho = a`. A `Violates*` verdict certifies that the Dirichlet problem has
/// no solution.
pub fn dirichlet_feasibility(
    h: MeanCurvature,
    ann: Annulus,
    inner_min: f64,
    inner_max: f64,
    data: OuterBoundaryData,
    tol: f64,
) -> Result<Feasibility> {
    if !(inner_min <= inner_max) {
        return Err(domain(format!(
            "inner data needs min <= max, got {inner_min} > {inner_max}"
        )));
    }
    let bounds = bounding_box(h, ann, data, tol)?;
    let threshold_upper = bounds.upper.at_inner();
    let threshold_lower = bounds.lower.as_ref().map(Envelope::at_inner);

    let (verdict, margin) = if inner_max > threshold_upper {
        (Verdict::ViolatesUpper, inner_max - threshold_upper)
    } else if let Some(lo) = threshold_lower.filter(|&lo| inner_min < lo) {
        (Verdict::ViolatesLower, lo - inner_min)
    } else {
        let slack_up = threshold_upper - inner_max;
        let slack = threshold_lower.map_or(slack_up, |lo| slack_up.min(inner_min - lo));
        (Verdict::Inconclusive, slack)
    };
    Ok(Feasibility { verdict, threshold_upper, threshold_lower, margin })
}
