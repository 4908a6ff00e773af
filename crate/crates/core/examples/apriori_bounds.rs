//! Height bounds on an annulus from its thickness and outer boundary values.
//!
//! cargo run --example apriori_bounds

use cmc_annuli::{bounding_box, hole_threshold, Annulus, MeanCurvature, OuterBoundaryData};

fn main() -> cmc_annuli::Result<()> {
    let data = OuterBoundaryData::new(-0.2, 0.3)?;
    for (h, a, b) in [(0.4, 0.5, 2.0), (0.4, 1.2, 2.0), (0.5, 1.0, 2.0)] {
        let h = MeanCurvature::new(h)?;
        let ann = Annulus::new(a, b)?;
        let bb = bounding_box(h, ann, data, 1e-10)?;
        println!(
            "h = {}, annulus ({a}, {b}), hole threshold {:?}, upper parameter {:.6}, lower parameter {}",
            h.value(),
            hole_threshold(h).finite(),
            bb.beta.alpha(),
            bb.alpha.map_or("none (hole too large)".into(), |p| format!("{:.6}", p.alpha())),
        );
        for row in bb.sample(6)? {
            let lower = row.lower.map_or("-".to_string(), |v| format!("{v:+.6}"));
            println!("  rho {:.3}   {lower:>10}  <=  u  <=  {:+.6}", row.rho, row.upper);
        }
    }
    Ok(())
}
