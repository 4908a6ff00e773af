//! The envelopes are attained: extremal radial solutions reproduce them exactly.
//!
//! cargo run --example radial_oracle

use cmc_annuli::{
    extremal_drops, feasible_flux_interval, lower_envelope, solve_radial, upper_envelope, Annulus, Error,
    MeanCurvature,
};

fn main() -> cmc_annuli::Result<()> {
    let h = MeanCurvature::new(0.4)?;
    let ann = Annulus::new(0.5, 2.0)?;
    let iv = feasible_flux_interval(h, ann);
    let drops = extremal_drops(h, ann, 1e-12)?;
    println!("flux constants C in [{:.6}, {:.6}]", iv.lower, iv.upper);
    println!("achievable drops u(a) - u(b) in [{:.10}, {:.10}]", drops.d_min, drops.d_max);
    println!("upper envelope at a: {:.10}", upper_envelope(h, ann, 0.0, 1e-12)?.at_inner());
    println!("lower envelope at a: {:.10}", lower_envelope(h, ann, 0.0, 1e-12)?.at_inner());

    for u_a in [drops.d_min, -1.0, 0.0, drops.d_max] {
        let sol = solve_radial(h, ann, u_a, 0.0, 1e-10)?;
        println!(
            "u(a) = {u_a:+.6}: C = {:+.8}, u(mid) = {:+.6}",
            sol.flux_constant(),
            sol.at(0.5 * (ann.inner() + ann.outer()))?
        );
    }
    match solve_radial(h, ann, drops.d_max + 1e-3, 0.0, 1e-10) {
        Err(Error::Infeasible { requested, achievable }) => {
            println!("u(a) = {requested:+.6}: infeasible, exceeds {:.6}", achievable.d_max)
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
