//! Built-in analytic oracle suite.
//!
//! Checks closed-form facts that do not depend on any scenario file: ball
//! and ellipsoid grazes against their polar planes, coaxial cone distances,
//! the disk isoptic radius, synthetic homothety recovery, and a miniature
//! end-to-end scenario. Exits zero only when every check passes.

use conecheck_core::{
    cone_translation_distance, direction_set, graze, graze_diameter, homothety, linalg,
    ConvexBody, PlanarBody, Scenario, StarSurface, Tolerances, Verdict,
};

pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome { name, passed, detail }
}

pub fn run_selftest(congruence_tol: Option<f64>) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let sqrt3 = 3.0f64.sqrt();

    // ball graze: contacts on the polar plane k1 = 1/2, diameter sqrt(3)
    out.push(match ConvexBody::ball(1.0, vec![0.0; 3])
        .and_then(|b| graze(&b, &[2.0, 0.0, 0.0], 64))
    {
        Ok(g) => {
            let worst = g
                .contacts
                .iter()
                .map(|c| (c.point[0] - 0.5).abs().max((linalg::norm(&c.point) - 1.0).abs()))
                .fold(0.0f64, f64::max);
            let diam = graze_diameter(&g).map(|d| (d - sqrt3).abs()).unwrap_or(f64::MAX);
            check(
                "ball-graze-polar-plane",
                worst < 1e-9 && diam < 1e-9,
                format!("contact defect {worst:.2e}, diameter defect {diam:.2e}"),
            )
        }
        Err(e) => check("ball-graze-polar-plane", false, e.to_string()),
    });

    // ellipsoid graze on the polar hyperplane k^T Q x = 1
    out.push(
        match ConvexBody::ellipsoid(
            vec![4.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0],
            vec![0.0; 3],
        )
        .and_then(|e| graze(&e, &[4.0, 0.0, 0.0], 64))
        {
            Ok(g) => {
                let worst = g
                    .contacts
                    .iter()
                    .map(|c| (c.point[0] * 0.25 * 4.0 - 1.0).abs())
                    .fold(0.0f64, f64::max);
                check("ellipsoid-graze-polar-plane", worst < 1e-8, format!("polar defect {worst:.2e}"))
            }
            Err(e) => check("ellipsoid-graze-polar-plane", false, e.to_string()),
        },
    );

    // coaxial cone distances: reflected pair at zero, unequal pair at the
    // half-angle gap
    out.push(match cone_pair_distances() {
        Ok((d_same, d_gap)) => {
            let expected = (0.5f64).asin() - (1.0f64 / 3.0).asin();
            check(
                "cone-congruence-distances",
                d_same < 1e-9 && (d_gap - expected).abs() < 1e-6,
                format!("reflected {d_same:.2e}, coaxial gap defect {:.2e}", (d_gap - expected).abs()),
            )
        }
        Err(e) => check("cone-congruence-distances", false, e),
    });

    // disk isoptic at a right angle is the circle of radius sqrt(2)
    out.push(
        match PlanarBody::disk(1.0)
            .and_then(|d| conecheck_core::isoptic_curve(&d, std::f64::consts::FRAC_PI_2, 64))
        {
            Ok(iso) => {
                let worst = iso
                    .vertices
                    .iter()
                    .map(|z| ((z[0] * z[0] + z[1] * z[1]).sqrt() - std::f64::consts::SQRT_2).abs())
                    .fold(0.0f64, f64::max);
                check("disk-isoptic-radius", worst < 1e-9, format!("radius defect {worst:.2e}"))
            }
            Err(e) => check("disk-isoptic-radius", false, e.to_string()),
        },
    );

    // synthetic homothety recovered exactly
    out.push({
        let c = [1.0, 0.0, 0.0];
        let lambda = -2.0;
        let pairs: Vec<(Vec<f64>, Vec<f64>)> = conecheck_core::grid::unit_directions(3, 10, 0.3)
            .into_iter()
            .map(|u| {
                let k = linalg::axpy(&[0.2, -0.4, 0.9], 1.3, &u);
                let l = linalg::axpy(&c, lambda, &linalg::sub(&k, &c));
                (k, l)
            })
            .collect();
        match homothety::fit_point_pairs(&pairs) {
            Ok(fit) => check(
                "synthetic-homothety-recovery",
                (fit.ratio - lambda).abs() < 1e-9
                    && linalg::dist(&fit.center, &c) < 1e-9
                    && fit.residual < 1e-12,
                format!("ratio {}, residual {:.2e}", fit.ratio, fit.residual),
            ),
            Err(e) => check("synthetic-homothety-recovery", false, e.to_string()),
        }
    });

    // miniature end-to-end scenario; a forced tolerance exposes the
    // tolerance contract (1e-15 cannot pass on sampled data)
    out.push({
        let tolerances = Tolerances {
            congruence: congruence_tol.unwrap_or(1e-6),
            ..Tolerances::default()
        };
        let scenario = ConvexBody::ball(1.0, vec![0.0; 3])
            .map_err(|e| e.to_string())
            .and_then(|body| {
                StarSurface::sphere(3.0, vec![0.0; 3])
                    .map_err(|e| e.to_string())
                    .and_then(|surface| {
                        Scenario::new(body, surface, 16, 32, tolerances, 7).map_err(|e| e.to_string())
                    })
            });
        match scenario.and_then(|s| crate::runner::check_theorem(&s, 1)) {
            Ok(report) => check(
                "ball-in-sphere-verdict",
                report.verdict == Verdict::Verified,
                format!("verdict {:?}", report.verdict),
            ),
            Err(e) => check("ball-in-sphere-verdict", false, e),
        }
    });

    out
}

fn cone_pair_distances() -> Result<(f64, f64), String> {
    let ball = ConvexBody::ball(1.0, vec![0.0; 3]).map_err(|e| e.to_string())?;
    let c_near = direction_set(&graze(&ball, &[2.0, 0.0, 0.0], 64).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let c_reflected =
        direction_set(&graze(&ball, &[-2.0, 0.0, 0.0], 64).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    let c_far = direction_set(&graze(&ball, &[-3.0, 0.0, 0.0], 64).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    Ok((
        cone_translation_distance(&c_near, &c_reflected).map_err(|e| e.to_string())?,
        cone_translation_distance(&c_near, &c_far).map_err(|e| e.to_string())?,
    ))
}
