//! Disc radii, the conserved flux and a finite-difference mean curvature.
//!
//! cargo run --example disc_coordinates

use cmc_annuli::hyperbolic::{mean_curvature_radial, ClosedForm};
use cmc_annuli::{euclidean_to_hyperbolic, flux, hyperbolic_to_euclidean, HeightProfile, MeanCurvature, ProfileParameter};

fn main() -> cmc_annuli::Result<()> {
    for r in [0.1, 0.5, 0.9, 0.99] {
        let rho = euclidean_to_hyperbolic(r)?;
        println!("|z| = {r:<5} rho = {rho:.6}  back {:.15}", hyperbolic_to_euclidean(rho)?);
    }

    // h = 1/2, alpha = 1 has the closed form 2 (cosh(rho/2) - 1).
    let neck = ClosedForm::new(0.0, 10.0, |r: f64| 2.0 * ((0.5 * r).cosh() - 1.0), |r: f64| (0.5 * r).sinh());
    println!("closed form: Q = {:.10}", mean_curvature_radial(&neck, 1.5, 1e-4)?);

    let h = MeanCurvature::new(0.3)?;
    let prof = HeightProfile::new(h, ProfileParameter::new(h, 2.0)?, 1e-11)?;
    for d in [0.1, 1.0, 3.0] {
        let rho = prof.rho0() + d;
        let u = prof.slope(rho)?;
        println!(
            "rho = {rho:.4}: flux {:+.10} vs 2h cosh(rho) - alpha {:+.10}, Q = {:.8}",
            flux(u, rho),
            h.neck() * rho.cosh() - 2.0,
            mean_curvature_radial(&prof, rho, 1e-4)?
        );
    }
    Ok(())
}
