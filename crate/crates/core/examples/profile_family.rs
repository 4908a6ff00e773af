//! Members of the rotational family for one mean curvature, across both branches.
//!
//! cargo run --example profile_family -- 0.4

use cmc_annuli::{boundary_radius, sample_profile, MeanCurvature, ProfileParameter};

fn main() -> cmc_annuli::Result<()> {
    let h: f64 = std::env::args().nth(1).map_or(0.4, |s| s.parse().expect("h must be a number"));
    let h = MeanCurvature::new(h)?;
    println!("h = {}, neck parameter 2h = {}", h.value(), h.neck());
    println!("{:>8} {:>6} {:>10} {:>12} {:>12} {:>12}", "alpha", "branch", "rho0", "H(rho0+.25)", "H(rho0+1)", "H(rho0+3)");
    for k in [0.1, 0.4, 0.8, 1.0, 1.5, 3.0, 8.0] {
        let param = ProfileParameter::new(h, k * h.neck())?;
        let rho0 = boundary_radius(h, param);
        let rows = sample_profile(h, param, rho0 + 3.0, 13, 1e-10)?;
        println!(
            "{:>8.4} {:>6} {:>10.6} {:>12.6} {:>12.6} {:>12.6}",
            param.alpha(),
            format!("{:?}", param.branch()).to_lowercase(),
            rho0,
            rows[1].height,
            rows[4].height,
            rows[12].height,
        );
    }
    Ok(())
}
