//! Non-radial Dirichlet problems on a polar grid, checked against the envelopes,
//! and the gradient growth seen when inner data exceed the certified bound.
//!
//! cargo run --release --example dirichlet_2d

use cmc_annuli::{
    bounding_box, dirichlet_feasibility, solve_dirichlet_2d, Annulus, Error, MeanCurvature, OuterBoundaryData,
    PolarGrid, SolverOptions,
};

fn main() -> cmc_annuli::Result<()> {
    let h = MeanCurvature::new(0.4)?;
    let ann = Annulus::new(0.5, 2.0)?;
    let grid = PolarGrid::new(ann, 64, 64)?;
    let outer = grid.sample_theta(|t| 0.1 * t.cos());
    let bb = bounding_box(h, ann, OuterBoundaryData::from_samples(&outer)?, 1e-10)?;
    let lower = bb.lower.as_ref().expect("hole is small enough");
    let inner = grid.sample_theta(|t| 0.5 * (lower.at_inner() + bb.upper.at_inner()) + 0.05 * (2.0 * t).sin());

    let (u, report) = solve_dirichlet_2d(h, grid, &inner, &outer, SolverOptions::default())?;
    println!("{report:?}");
    let mut violation = 0.0f64;
    for i in 0..grid.n_rho() {
        let (up, lo) = (bb.upper.at(grid.rho(i))?, lower.at(grid.rho(i))?);
        for &v in u.row(i) {
            violation = violation.max(v - up).max(lo - v);
        }
    }
    println!("largest envelope violation: {violation:.3e}");

    let t = dirichlet_feasibility(h, ann, 0.0, 0.0, OuterBoundaryData::constant(0.0), 1e-10)?.threshold_upper;
    println!("inner data 0.5 above the certified threshold {t:.6}:");
    for n in [16, 32, 64] {
        let grid = PolarGrid::new(ann, n, n)?;
        let result = solve_dirichlet_2d(h, grid, &vec![t + 0.5; n], &vec![0.0; n], SolverOptions::default());
        let report = match result {
            Ok((_, r)) => r,
            Err(Error::NonConvergence { report, .. }) => report,
            Err(e) => return Err(e),
        };
        println!(
            "  {n:>3} nodes: converged {}, inner-row gradient {:.2} (1/d_rho = {:.2})",
            report.converged,
            report.inner_gradient,
            1.0 / grid.d_rho()
        );
    }
    Ok(())
}
