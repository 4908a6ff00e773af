//! Certified non-existence for Dirichlet data whose inner values leave the box.
//!
//! cargo run --example nonexistence_check

use cmc_annuli::{dirichlet_feasibility, Annulus, MeanCurvature, OuterBoundaryData};

fn main() -> cmc_annuli::Result<()> {
    let h = MeanCurvature::new(0.4)?;
    let ann = Annulus::new(0.5, 2.0)?;
    for c in [-5.0, 0.0, 7.0] {
        let outer = OuterBoundaryData::constant(c);
        let base = dirichlet_feasibility(h, ann, c, c, outer, 1e-10)?;
        println!(
            "outer = {c:+}: admissible inner values in [{:.6}, {:.6}]",
            base.threshold_lower.unwrap(),
            base.threshold_upper
        );
        for inner in [base.threshold_upper + 0.1, c, base.threshold_lower.unwrap() - 0.1] {
            let f = dirichlet_feasibility(h, ann, inner, inner, outer, 1e-10)?;
            println!("  inner = {inner:+.6}: {:?}, margin {:.3e}", f.verdict, f.margin);
        }
    }
    Ok(())
}
