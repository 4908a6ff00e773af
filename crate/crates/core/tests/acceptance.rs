//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line to stderr
//! (bypassing the test harness capture) before asserting.

use std::io::Write;

use cmc_annuli::cli::{self, FigureArgs, FigureKind};
use cmc_annuli::hyperbolic::{flux, mean_curvature_radial};
use cmc_annuli::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "[acceptance {id:>2}] {verdict} {name}: {detail}");
    assert!(pass, "criterion {id} ({name}) failed: {detail}");
}

fn mc(h: f64) -> MeanCurvature {
    MeanCurvature::new(h).unwrap()
}

fn run_cli(args: &[String]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["cmc-annuli".to_string()];
    full.extend_from_slice(args);
    let code = cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn args(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn c01_closed_form_oracle() {
    const TOL: f64 = 1e-9;
    let h = MeanCurvature::HALF;
    let param = ProfileParameter::new(h, 1.0).unwrap();
    let mut worst: f64 = 0.0;
    for rho in [0.1f64, 0.5, 1.0, 2.0, 3.0] {
        let exact = 2.0 * ((0.5 * rho).cosh() - 1.0);
        worst = worst.max((height(h, param, rho, 1e-12).unwrap() - exact).abs());
    }
    report(1, "closed-form oracle h=1/2, alpha=1", worst <= TOL, &format!("max abs error {worst:.3e} <= {TOL:e}"));
}

#[test]
fn c02_flux_identity() {
    const REL: f64 = 1e-12;
    let mut rng = StdRng::seed_from_u64(0x5eed_f1u64);
    let mut worst: f64 = 0.0;
    let mut branches = [0usize; 3];
    for k in 0..200 {
        let hv = if k % 10 == 0 { 0.5 } else { rng.gen_range(0.01..0.5) };
        let h = mc(hv);
        let alpha = (rng.gen_range((0.05f64).ln()..(20.0f64).ln())).exp();
        let param = ProfileParameter::new(h, alpha).unwrap();
        branches[param.branch() as usize] += 1;
        let rho0 = boundary_radius(h, param);
        let rho = rho0 + rng.gen_range(1e-6..5.0);
        let u = slope(h, param, rho).unwrap();
        let lhs = flux(u, rho);
        let rhs = 2.0 * hv * rho.cosh() - alpha;
        // The oracle itself cancels when 2h cosh(rho) ~ alpha; its rounding
        // floor is a few ulps of the larger term.
        let floor = 4.0 * f64::EPSILON * (2.0 * hv * rho.cosh() + alpha);
        let err = (lhs - rhs).abs() / (REL * rhs.abs() + floor);
        worst = worst.max(err);
    }
    let pass = worst <= 1.0 && branches[0] > 0 && branches[2] > 0;
    report(
        2,
        "flux identity on 200 seeded triples",
        pass,
        &format!("worst error / (1e-12 |rhs| + rounding floor) = {worst:.3}; branch counts small/neck/large = {branches:?}"),
    );
}

#[test]
fn c03_cmc_verification() {
    const TOL: f64 = 1e-5;
    const STEP: f64 = 1e-4;
    let cases = [
        (0.1, 0.05, 1.0),
        (0.25, 0.3, 0.8),
        (0.25, 2.0, 1.5),
        (0.4, 0.6, 1.0),
        (0.4, 3.0, 2.0),
        (0.5, 0.3, 2.5),
        (0.5, 1.0, 1.0),
        (0.5, 4.0, 3.0),
    ];
    let mut worst_err: f64 = 0.0;
    let mut orders = Vec::new();
    for (hv, alpha, offset) in cases {
        let h = mc(hv);
        let prof = HeightProfile::new(h, ProfileParameter::new(h, alpha).unwrap(), 1e-12).unwrap();
        let rho = prof.rho0() + offset;
        let q = mean_curvature_radial(&prof, rho, STEP).unwrap();
        worst_err = worst_err.max((q - 2.0 * hv).abs());
        let errs: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
            .iter()
            .map(|&s| (mean_curvature_radial(&prof, rho, s).unwrap() - 2.0 * hv).abs())
            .collect();
        orders.push((errs[0] / errs[1]).log2());
        orders.push((errs[1] / errs[2]).log2());
    }
    let order_ok = orders.iter().all(|o| (o - 2.0).abs() <= 0.2);
    let lo = orders.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = orders.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    report(
        3,
        "Q(profile) = 2h with second-order convergence",
        worst_err <= TOL && order_ok,
        &format!("max |Q - 2h| at step 1e-4 = {worst_err:.3e} <= {TOL:e}; observed orders in [{lo:.3}, {hi:.3}] (need 2.0 +/- 0.2)"),
    );
}

#[test]
fn c04_inverse_round_trips() {
    const TOL: f64 = 1e-10;
    let mut worst: f64 = 0.0;
    for hv in [0.05, 0.25, 0.4, 0.499, 0.5] {
        let h = mc(hv);
        let small_max = hole_threshold(h).finite().unwrap_or(8.0);
        for k in 1..=200 {
            let t = k as f64 / 201.0;
            let rho = 0.01 + t * (small_max - 0.02);
            let back = boundary_radius(h, param_small(h, rho).unwrap());
            worst = worst.max((back - rho).abs());
            let rho = 0.01 + t * 10.0;
            let back = boundary_radius(h, param_large(h, rho).unwrap());
            worst = worst.max((back - rho).abs());
        }
    }
    let mut worst_half: f64 = 0.0;
    for k in 1..=400 {
        let rho = k as f64 * 0.05;
        let s = param_small(MeanCurvature::HALF, rho).unwrap().alpha();
        let l = param_large(MeanCurvature::HALF, rho).unwrap().alpha();
        worst_half = worst_half
            .max(((s - (-rho).exp()) / (-rho).exp()).abs())
            .max(((l - rho.exp()) / rho.exp()).abs());
    }
    let half_ok = worst_half <= 2.0 * f64::EPSILON;
    report(
        4,
        "inverse round trips and h=1/2 exponential branches",
        worst <= TOL && half_ok,
        &format!("max |rho - rho(param(rho))| = {worst:.3e} <= {TOL:e}; h=1/2 max rel. deviation from exp(-/+rho) = {worst_half:.3e} (<= 2 eps)"),
    );
}

#[test]
fn c05_hole_threshold() {
    const TOL: f64 = 1e-12;
    let thr = hole_threshold(mc(0.4)).finite().unwrap();
    let thr_ok = (thr - 3f64.ln()).abs() <= TOL;
    let mut switch_ok = true;
    for hv in [0.1, 0.25, 0.4, 0.45] {
        let h = mc(hv);
        let t = hole_threshold(h).finite().unwrap();
        let below = lower_envelope(h, Annulus::new(t - 1e-6, t + 1.0).unwrap(), 0.0, 1e-10);
        let above = lower_envelope(h, Annulus::new(t + 1e-6, t + 1.0).unwrap(), 0.0, 1e-10);
        let at = lower_envelope(h, Annulus::new(t, t + 1.0).unwrap(), 0.0, 1e-10);
        switch_ok &= below.is_ok()
            && matches!(above, Err(Error::HoleTooLarge { .. }))
            && matches!(at, Err(Error::HoleTooLarge { .. }));
    }
    switch_ok &= matches!(hole_threshold(MeanCurvature::HALF), HoleThreshold::Unbounded);
    report(
        5,
        "hole threshold artanh(2h)",
        thr_ok && switch_ok,
        &format!("hole_threshold(0.4) - ln 3 = {:.3e}; HoleTooLarge exactly for a >= threshold at +/- 1e-6: {switch_ok}", thr - 3f64.ln()),
    );
}

#[test]
fn c06_sharpness_against_radial_oracle() {
    const TOL: f64 = 1e-7;
    const NUDGE: f64 = 1e-4;
    let mut rng = StdRng::seed_from_u64(6);
    let annuli: Vec<(f64, f64)> = (0..20)
        .map(|_| {
            let a = rng.gen_range(0.05..2.5);
            (a, a + rng.gen_range(0.1..2.5))
        })
        .collect();
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    let mut lower_checked = 0;
    for hv in [0.2, 0.4, 0.5] {
        let h = mc(hv);
        for &(a, b) in &annuli {
            let ann = Annulus::new(a, b).unwrap();
            let drops = extremal_drops(h, ann, 1e-12).unwrap();
            let up = upper_envelope(h, ann, 0.0, 1e-12).unwrap().at_inner();
            worst = worst.max((drops.d_max - up).abs());
            if solve_radial(h, ann, drops.d_max - NUDGE, 0.0, 1e-10).is_err() {
                failures.push(format!("h={hv} ({a:.3},{b:.3}) D_max-"));
            }
            if !matches!(solve_radial(h, ann, drops.d_max + NUDGE, 0.0, 1e-10), Err(Error::Infeasible { .. })) {
                failures.push(format!("h={hv} ({a:.3},{b:.3}) D_max+"));
            }
            if let Ok(lo) = lower_envelope(h, ann, 0.0, 1e-12) {
                lower_checked += 1;
                worst = worst.max((drops.d_min - lo.at_inner()).abs());
                if solve_radial(h, ann, drops.d_min + NUDGE, 0.0, 1e-10).is_err() {
                    failures.push(format!("h={hv} ({a:.3},{b:.3}) D_min+"));
                }
                if !matches!(solve_radial(h, ann, drops.d_min - NUDGE, 0.0, 1e-10), Err(Error::Infeasible { .. })) {
                    failures.push(format!("h={hv} ({a:.3},{b:.3}) D_min-"));
                }
            }
        }
    }
    report(
        6,
        "envelopes at rho=a equal extremal radial drops",
        worst <= TOL && failures.is_empty(),
        &format!("60 cases ({lower_checked} with a lower bound); max |drop - envelope| = {worst:.3e} <= {TOL:e}; solve/infeasible at +/- 1e-4 failures: {failures:?}"),
    );
}

#[test]
fn c07_corollary_reproduction() {
    let mut bad = Vec::new();
    for c in [-5.0, 0.0, 7.0] {
        let base = args(&["check", "--h", "0.4", "--a", "0.5", "--b", "2", &format!("--outer={c}"), "--inner=0"]);
        let (code, out, err) = run_cli(&base);
        assert_eq!(code, 0, "{err}");
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        let t = v["threshold_upper"].as_f64().unwrap();
        for eps in [1e-3, 1e-1, 1.0, 10.0] {
            let inner = t + eps;
            let a = args(&["check", "--h", "0.4", "--a", "0.5", "--b", "2", &format!("--outer={c}"), &format!("--inner={inner}")]);
            let (code, out, _) = run_cli(&a);
            let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
            let margin = v["margin"].as_f64().unwrap();
            if code != 0
                || v["verdict"] != "violates_upper"
                || (margin - eps).abs() > 1e-12 * (1.0 + t.abs() + eps)
            {
                bad.push(format!("c={c} eps={eps}: {}", out.trim()));
            }
        }
    }
    report(
        7,
        "check reports violates_upper above the threshold",
        bad.is_empty(),
        &format!("12 cases (c in -5,0,7; eps in 1e-3..10), margin = eps; failures: {bad:?}"),
    );
}

#[test]
fn c08_two_d_matches_radial() {
    const C: f64 = 0.05;
    const MIN_RATIO: f64 = 3.5;
    let h = mc(0.4);
    let ann = Annulus::new(0.5, 2.0).unwrap();
    let drops = extremal_drops(h, ann, 1e-12).unwrap();
    let u_a = 0.5 * (drops.d_min + drops.d_max);
    let radial = solve_radial(h, ann, u_a, 0.0, 1e-12).unwrap();
    let mut errs = Vec::new();
    let mut bound_ok = true;
    for n in [32usize, 64, 128] {
        let grid = PolarGrid::new(ann, n, n).unwrap();
        let (u, rep) = solve_dirichlet_2d(h, grid, &vec![u_a; n], &vec![0.0; n], SolverOptions::default()).unwrap();
        assert!(rep.converged);
        let mut e: f64 = 0.0;
        for i in 0..n {
            let exact = radial.at(grid.rho(i)).unwrap();
            for &v in u.row(i) {
                e = e.max((v - exact).abs());
            }
        }
        bound_ok &= e <= C * grid.d_rho().powi(2);
        errs.push((n, e, e / grid.d_rho().powi(2)));
    }
    let table: Vec<String> = errs.iter().map(|(n, e, k)| format!("n={n}: {e:.3e} ({k:.4} d_rho^2)")).collect();
    let ratios = [errs[0].1 / errs[1].1, errs[1].1 / errs[2].1];
    report(
        8,
        "2D solver matches radial solution at O(d_rho^2)",
        bound_ok && ratios.iter().all(|&r| r >= MIN_RATIO),
        &format!("max errors {table:?}; need error <= {C} d_rho^2; refinement ratios {ratios:.3?} (need >= {MIN_RATIO})"),
    );
}

#[test]
fn c09_envelopes_dominate_two_d_solutions() {
    const K: f64 = 10.0;
    let n = 64;
    let mut worst: f64 = f64::INFINITY;
    let mut failures = Vec::new();
    let mut solved = 0;
    for (hv, a, b, c) in [(0.4, 0.5, 2.0, 0.0), (0.5, 1.0, 2.0, 3.0), (0.25, 0.3, 1.5, -2.0)] {
        let h = mc(hv);
        let ann = Annulus::new(a, b).unwrap();
        let grid = PolarGrid::new(ann, n, n).unwrap();
        let outer = grid.sample_theta(|t| c + 0.1 * t.cos());
        let data = OuterBoundaryData::from_samples(&outer).unwrap();
        let bb = bounding_box(h, ann, data, 1e-11).unwrap();
        let lower = bb.lower.as_ref().expect("chosen annuli admit the lower bound");
        let (lo_a, up_a) = (lower.at_inner(), bb.upper.at_inner());
        let tol = K * grid.d_rho().powi(2);
        for frac in [0.1, 0.5, 0.9] {
            let mid = lo_a + frac * (up_a - lo_a);
            let amp = 0.05 * (up_a - lo_a).min(1.0) * frac.min(1.0 - frac);
            let inner = grid.sample_theta(|t| mid + amp * (2.0 * t).sin());
            match solve_dirichlet_2d(h, grid, &inner, &outer, SolverOptions::default()) {
                Ok((u, _)) => {
                    solved += 1;
                    for i in 0..n {
                        let r = grid.rho(i);
                        let (up, lo) = (bb.upper.at(r).unwrap(), lower.at(r).unwrap());
                        for &v in u.row(i) {
                            worst = worst.min(up - v).min(v - lo);
                            if v > up + tol || v < lo - tol {
                                failures.push(format!("h={hv} frac={frac} rho={r:.3}"));
                            }
                        }
                    }
                }
                Err(e) => failures.push(format!("h={hv} frac={frac}: {e}")),
            }
        }
    }
    failures.dedup();
    report(
        9,
        "2D solutions with outer data c + 0.1 cos(theta) lie inside the envelopes",
        failures.is_empty() && solved == 9,
        &format!("{solved}/9 solves converged on 64x64; min slack to the envelopes = {worst:.3e} (tolerance -{K} d_rho^2); violations: {failures:?}"),
    );
}

#[test]
fn c10_figure_reproduction() {
    let dir = tempfile::tempdir().unwrap();
    let mut problems = Vec::new();

    let family_svg = dir.path().join("family.svg");
    let (code, _, err) = run_cli(&args(&[
        "figure", "family", "--h", "0.5", "--alphas", "0.3,1,3", "--out", family_svg.to_str().unwrap(),
    ]));
    let box_svg = dir.path().join("box.svg");
    let (code2, _, err2) = run_cli(&args(&[
        "figure", "box", "--h", "0.5", "--a", "1", "--b", "2", "--m", "0", "--M", "0", "--out", box_svg.to_str().unwrap(),
    ]));
    if code != 0 || code2 != 0 {
        problems.push(format!("exit codes {code}/{code2}: {err}{err2}"));
    }
    for (path, curves) in [(&family_svg, 3), (&box_svg, 2)] {
        let text = std::fs::read_to_string(path).unwrap_or_default();
        match roxmltree::Document::parse(&text) {
            Ok(doc) => {
                let lines = doc.descendants().filter(|n| n.has_tag_name("polyline")).count();
                let labels: Vec<&str> = doc.descendants().filter_map(|n| n.text()).collect();
                if lines != curves || !labels.contains(&"ρ") || !labels.contains(&"height") {
                    problems.push(format!("{}: {lines} polylines, labels {labels:?}", path.display()));
                }
            }
            Err(e) => problems.push(format!("{}: not well-formed: {e}", path.display())),
        }
    }

    // Sign and verticality pattern on the sampled data.
    let mut checked = 0;
    for (hv, alphas) in [(0.5, vec![0.3, 1.0, 3.0]), (0.3, vec![0.1, 0.3, 0.6, 1.5, 4.0]), (0.45, vec![0.2, 0.9, 2.5])] {
        let fig = cli::figure_data(&FigureArgs {
            which: FigureKind::Family,
            h: hv,
            alphas,
            rho_max: None,
            a: None,
            b: None,
            min_outer: 0.0,
            max_outer: 0.0,
            n: 400,
            tol: 1e-11,
            euclidean: false,
            out: None,
        })
        .unwrap();
        for c in &fig.curves {
            checked += 1;
            let heights: Vec<f64> = c.points.iter().map(|p| p.1).collect();
            let ok = match c.branch {
                Branch::Small => {
                    heights[0] == 0.0 && c.start_slope == f64::INFINITY && heights.iter().all(|&y| y >= 0.0)
                }
                Branch::Neck => heights[0] == 0.0 && c.points[0].0 == 0.0 && heights.iter().all(|&y| y >= 0.0),
                Branch::Large => {
                    let first_pos = heights.iter().position(|&y| y > 0.0);
                    heights[0] == 0.0
                        && c.start_slope == f64::NEG_INFINITY
                        && heights[1] < 0.0
                        && first_pos.is_some_and(|k| heights[k..].iter().all(|&y| y > 0.0))
                }
            };
            if !ok {
                problems.push(format!("h={hv} alpha={} ({:?}) breaks the pattern", c.alpha, c.branch));
            }
        }
    }

    let fig = cli::figure_data(&FigureArgs {
        which: FigureKind::Box,
        h: 0.5,
        alphas: vec![],
        rho_max: None,
        a: Some(1.0),
        b: Some(2.0),
        min_outer: -0.5,
        max_outer: 0.25,
        n: 50,
        tol: 1e-11,
        euclidean: false,
        out: None,
    })
    .unwrap();
    let ends: Vec<(f64, f64)> = fig.curves.iter().map(|c| *c.points.last().unwrap()).collect();
    if ends != vec![(2.0, 0.25), (2.0, -0.5)] {
        problems.push(format!("box curves end at {ends:?}"));
    }

    report(
        10,
        "figures: well-formed SVG and the family's sign/verticality pattern",
        problems.is_empty(),
        &format!("2 SVGs parsed; {checked} family curves checked; problems: {problems:?}"),
    );
}
