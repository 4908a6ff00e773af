//! Writes the profile-family and bounding-box figures as SVG.
//!
//! cargo run --example figures -- out_dir

use std::path::PathBuf;

use cmc_annuli::cli::{box_figure, family_figure, render_svg};
use cmc_annuli::{Annulus, MeanCurvature, OuterBoundaryData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;

    let family = family_figure(MeanCurvature::new(0.4)?, &[0.1, 0.4, 0.8, 1.6, 4.0], None, 300, 1e-10)?;
    std::fs::write(dir.join("family.svg"), render_svg(&family))?;

    let bbox = box_figure(
        MeanCurvature::HALF,
        Annulus::new(1.0, 2.0)?,
        OuterBoundaryData::new(-0.25, 0.25)?,
        200,
        1e-10,
    )?;
    std::fs::write(dir.join("box.svg"), render_svg(&bbox))?;

    for fig in [&family, &bbox] {
        for c in &fig.curves {
            let (rho, y) = c.points[0];
            println!("{:<28} starts at rho = {rho:.4}, height {y:+.4}, slope {}", c.label, c.start_slope);
        }
    }
    println!("wrote {}", dir.display());
    Ok(())
}
