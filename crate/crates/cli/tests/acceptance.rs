//! Acceptance suite: one test per criterion, each printing a pass line with
//! the measured quantities. Everything asserts analytic oracle values at
//! fixed tolerances.

use conecheck::runner;
use conecheck_core::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn diag3(a: f64, b: f64, c: f64) -> Vec<f64> {
    vec![a, 0.0, 0.0, 0.0, b, 0.0, 0.0, 0.0, c]
}

fn unit_ball() -> ConvexBody {
    ConvexBody::ball(1.0, vec![0.0; 3]).unwrap()
}

fn scenario(body: ConvexBody, radius: f64, surface_center: Vec<f64>, n: usize, m: usize) -> Scenario {
    Scenario::new(
        body,
        StarSurface::sphere(radius, surface_center).unwrap(),
        n,
        m,
        Tolerances::default(),
        7,
    )
    .unwrap()
}

#[test]
fn c01_ball_graze_oracle() {
    let g = graze(&unit_ball(), &[2.0, 0.0, 0.0], 256).unwrap();
    assert_eq!(g.contacts.len(), 256);
    let mut plane_defect = 0.0f64;
    let mut radius_defect = 0.0f64;
    for c in &g.contacts {
        plane_defect = plane_defect.max((c.point[0] - 0.5).abs());
        radius_defect = radius_defect.max((linalg::norm(&c.point) - 1.0).abs());
    }
    let diam_defect = (graze_diameter(&g).unwrap() - 3.0f64.sqrt()).abs();
    println!(
        "criterion 01 ball graze: plane defect {plane_defect:.2e}, radius defect {radius_defect:.2e}, diameter defect {diam_defect:.2e}"
    );
    assert!(plane_defect < 1e-9);
    assert!(radius_defect < 1e-9);
    assert!(diam_defect < 1e-9);
}

#[test]
fn c02_ellipsoid_polar_plane_oracle() {
    let body = ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.0; 3]).unwrap();
    let apex = [4.0, 0.0, 0.0];
    let g = graze(&body, &apex, 256).unwrap();
    let ConvexBody::Ellipsoid(e) = &body else { unreachable!() };
    let q = e.shape_inverse();
    let mut polar_defect = 0.0f64;
    for c in &g.contacts {
        let qx = linalg::mat_vec(q, &apex);
        polar_defect = polar_defect.max((linalg::dot(&c.point, &qx) - 1.0).abs());
    }
    let diam_defect = (graze_diameter(&g).unwrap() - 3.0f64.sqrt()).abs();
    println!(
        "criterion 02 ellipsoid polar plane: polar defect {polar_defect:.2e}, diameter defect {diam_defect:.2e}"
    );
    assert!(polar_defect < 1e-8);
    assert!(diam_defect < 1e-8);
}

#[test]
fn c03_cone_congruence_distances() {
    let ball = unit_ball();
    let cone_at = |apex: &[f64]| direction_set(&graze(&ball, apex, 256).unwrap()).unwrap();
    let d_reflected =
        cone_translation_distance(&cone_at(&[2.0, 0.0, 0.0]), &cone_at(&[-2.0, 0.0, 0.0])).unwrap();
    let d_coaxial =
        cone_translation_distance(&cone_at(&[2.0, 0.0, 0.0]), &cone_at(&[-3.0, 0.0, 0.0])).unwrap();
    let expected = (0.5f64).asin() - (1.0f64 / 3.0).asin();
    println!(
        "criterion 03 cone congruence: reflected pair {d_reflected:.2e}, coaxial gap defect {:.2e}",
        (d_coaxial - expected).abs()
    );
    assert!(d_reflected < 1e-9);
    assert!((d_coaxial - expected).abs() < 1e-6);
}

fn forward_bodies() -> Vec<(&'static str, ConvexBody, f64)> {
    vec![
        ("ball-in-sphere", unit_ball(), 3.0),
        (
            "ellipsoid-in-sphere",
            ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.0; 3]).unwrap(),
            5.0,
        ),
        (
            "oblique-ellipsoid-in-sphere",
            ConvexBody::ellipsoid(
                vec![2.5, 0.5, 0.0, 0.5, 1.5, 0.3, 0.0, 0.3, 1.2],
                vec![0.0; 3],
            )
            .unwrap(),
            5.0,
        ),
        ("lp4-ball-in-sphere", ConvexBody::lp_ball(4.0, 1.0, vec![0.0; 3]).unwrap(), 3.0),
        (
            "minkowski-sum-in-sphere",
            ConvexBody::minkowski_sum(vec![
                unit_ball(),
                ConvexBody::ellipsoid(diag3(2.25, 1.0, 0.64), vec![0.0; 3]).unwrap(),
            ])
            .unwrap(),
            5.0,
        ),
    ]
}

#[test]
fn c04_theorem_forward_on_symmetric_scenarios() {
    let threads = runner::thread_count();
    for (name, body, radius) in forward_bodies() {
        let s = scenario(body, radius, vec![0.0; 3], 200, 256);
        let report = runner::check_theorem(&s, threads).unwrap();
        let worst_distance = report
            .records
            .iter()
            .map(|r| r.distance.expect("every apex must carry a distance"))
            .fold(0.0f64, f64::max);
        let worst_ratio = report
            .records
            .iter()
            .map(|r| (r.ratio.expect("every apex must carry a ratio") + 1.0).abs())
            .fold(0.0f64, f64::max);
        println!(
            "criterion 04 {name}: verdict {:?}, worst distance {worst_distance:.2e}, worst ratio defect {worst_ratio:.2e}, concentricity {:.2e}",
            report.verdict, report.conclusion.concentricity
        );
        assert_eq!(report.verdict, Verdict::Verified, "{name}");
        assert!(worst_distance < 1e-6, "{name}: {worst_distance:e}");
        assert!(worst_ratio < 1e-6, "{name}: {worst_ratio:e}");
        assert!(report.conclusion.concentricity < 1e-6, "{name}");
        assert_eq!(report.conclusion.ratio_pass_fraction, 1.0, "{name}");
        // partner uniqueness: every partner is the reflected apex
        for r in &report.records {
            let reflected = linalg::neg(&r.apex);
            let partner = r.partner.as_ref().unwrap();
            assert!(
                linalg::dist(partner, &reflected) < 1e-5,
                "{name}: apex {} partnered {:.2e} away from the reflection",
                r.index,
                linalg::dist(partner, &reflected)
            );
        }
    }
}

#[test]
fn c05_negative_sensitivity_to_surface_offset() {
    let threads = runner::thread_count();
    let mut max_distances = Vec::new();
    for offset in [0.1, 0.3, 0.5] {
        let s = scenario(unit_ball(), 3.0, vec![offset, 0.0, 0.0], 50, 256);
        let report = runner::check_theorem(&s, threads).unwrap();
        let worst = report
            .records
            .iter()
            .filter_map(|r| r.distance)
            .fold(0.0f64, f64::max);
        if (offset - 0.3).abs() < 1e-12 {
            assert_eq!(report.verdict, Verdict::HypothesisFailed);
            assert!(
                report.records.iter().any(|r| r.distance.unwrap_or(0.0) > 0.01),
                "offset 0.3 must show an apex distance beyond 0.01"
            );
        }
        max_distances.push(worst);
    }
    println!(
        "criterion 05 offset sensitivity: max distances {:.4}, {:.4}, {:.4}",
        max_distances[0], max_distances[1], max_distances[2]
    );
    assert!(max_distances[0] < max_distances[1] && max_distances[1] < max_distances[2]);
}

#[test]
fn c06_corresponded_chords_are_parallel() {
    let mut rng = StdRng::seed_from_u64(11);
    let configurations = [
        (unit_ball(), 3.0f64),
        (ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.0; 3]).unwrap(), 5.0),
    ];
    let mut worst = 0.0f64;
    let mut checked = 0;
    while checked < 100 {
        let (body, radius) = &configurations[checked % configurations.len()];
        let dir = loop {
            let v: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
            if linalg::norm(&v) > 0.1 {
                break linalg::normalized(&v).unwrap();
            }
        };
        let x = linalg::scale(&dir, *radius);
        let y = linalg::neg(&x);
        let pair = paired_graze(body, &x, &y, 64, 1e-6).unwrap();
        let i = rng.gen_range(0..pair.pairs.len());
        let j = loop {
            let j = rng.gen_range(0..pair.pairs.len());
            if j != i {
                break j;
            }
        };
        let defect = parallel_defect(
            &pair.pairs[i].0,
            &pair.pairs[j].0,
            &pair.pairs[i].1,
            &pair.pairs[j].1,
        )
        .unwrap();
        worst = worst.max(defect);
        assert!(defect < 1e-6, "chord pair ({i},{j}) defect {defect:e}");
        checked += 1;
    }
    println!("criterion 06 parallel chords: 100 random pairs, worst defect {worst:.2e}");
}

#[test]
fn c07_homothety_fit_exactness() {
    let c = [1.0, 0.0, 0.0];
    let lambda = -2.0;
    let mut rng = StdRng::seed_from_u64(13);
    let pairs: Vec<(Vec<f64>, Vec<f64>)> = (0..10)
        .map(|_| {
            let k: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let l = linalg::axpy(&c, lambda, &linalg::sub(&k, &c));
            (k, l)
        })
        .collect();
    let fit = homothety::fit_point_pairs(&pairs).unwrap();
    println!(
        "criterion 07 homothety fit: ratio defect {:.2e}, center defect {:.2e}, residual {:.2e}",
        (fit.ratio - lambda).abs(),
        linalg::dist(&fit.center, &c),
        fit.residual
    );
    assert!(fit.residual < 1e-12);
    assert!((fit.ratio - lambda).abs() < 1e-9);
    assert!(linalg::dist(&fit.center, &c) < 1e-9);
}

#[test]
fn c08_appendix_path_machinery() {
    // symmetric scenario: the functional is identically zero and flagged so
    let sym = scenario(unit_ball(), 3.0, vec![0.0; 3], 24, 64);
    let record = appendix_path_search(&sym, &[3.0, 0.0, 0.0], &[0.0, 3.0, 0.0]).unwrap();
    let mut identity_defect = 0.0f64;
    for i in 0..record.t.len() {
        identity_defect = identity_defect
            .max((record.d[i] - (1.0 - record.r[i]) * record.diam_beta[i]).abs());
    }
    assert_eq!(record.t.len(), 33);
    assert!(record.degenerate_zero);

    // offset scenario: d changes sign along the path from an oblique apex
    // to its best partner, and bisection pins the root
    let off = scenario(unit_ball(), 3.0, vec![0.5, 0.0, 0.0], 24, 64);
    let ctx = PartnerContext::build(&off).unwrap();
    let omega = linalg::normalized(&[1.0, 1.0, 1.0]).unwrap();
    let x0 = off.surface.point_at(&omega);
    let y0 = ctx.find_partner(&x0).unwrap().point;
    let crossing = appendix_path_search(&off, &x0, &y0).unwrap();
    for i in 0..crossing.t.len() {
        identity_defect = identity_defect
            .max((crossing.d[i] - (1.0 - crossing.r[i]) * crossing.diam_beta[i]).abs());
    }
    let t_star = crossing.t_star.expect("offset path must cross zero");
    let d_star = crossing.d_at_t_star.unwrap().abs();

    // ellipsoid path from the long axis to a short axis: the functional
    // vanishes identically on the concentric configuration
    let ell = scenario(
        ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.0; 3]).unwrap(),
        5.0,
        vec![0.0; 3],
        24,
        64,
    );
    let ell_record = appendix_path_search(&ell, &[5.0, 0.0, 0.0], &[0.0, 5.0, 0.0]).unwrap();
    assert!(ell_record.degenerate_zero);
    assert!(ell_record.d_at_t_star.unwrap().abs() < 1e-8);
    for i in 0..ell_record.t.len() {
        identity_defect = identity_defect
            .max((ell_record.d[i] - (1.0 - ell_record.r[i]) * ell_record.diam_beta[i]).abs());
    }

    println!(
        "criterion 08 appendix path: identity defect {identity_defect:.2e}, root t* = {t_star:.4} with |d| = {d_star:.2e} in {} iterations",
        crossing.bisection_iterations
    );
    assert!(identity_defect < 1e-9);
    assert!(!crossing.degenerate_zero);
    assert!(d_star < 1e-8);
    assert!(crossing.bisection_iterations <= 40);
}

#[test]
fn c09_isoptic_demonstration() {
    let egg = PlanarBody::new(1.0, vec![0.0, 0.0, 0.1], vec![]).unwrap();
    let report = remark2_report(&egg, std::f64::consts::FRAC_PI_2, 256).unwrap();
    let disk = PlanarBody::disk(1.0).unwrap();
    let iso = isoptic_curve(&disk, std::f64::consts::FRAC_PI_2, 256).unwrap();
    let radius_defect = iso
        .vertices
        .iter()
        .map(|z| ((z[0] * z[0] + z[1] * z[1]).sqrt() - std::f64::consts::SQRT_2).abs())
        .fold(0.0f64, f64::max);
    println!(
        "criterion 09 isoptic: angle defect {:.2e}, asymmetry defect {:.12}, disk radius defect {radius_defect:.2e}",
        report.angle_defect, report.asymmetry_defect
    );
    assert!(report.angle_defect < 1e-6);
    assert!((report.asymmetry_defect - 0.2).abs() < 1e-9);
    assert!(radius_defect < 1e-9);
}

#[test]
fn c10_conjecture_scan() {
    let concentric = scenario(unit_ball(), 3.0, vec![0.0; 3], 16, 64);
    let dirs = grid::unit_directions(3, 64, 0.0);
    let records = conjecture1_scan(&concentric, &dirs).unwrap();
    let mut worst_ratio = 0.0f64;
    let mut worst_chord = 0.0f64;
    for r in &records {
        worst_ratio = worst_ratio.max((r.ratio + 1.0).abs());
        worst_chord = worst_chord.max(r.chord_defect);
    }
    assert!(worst_ratio < 1e-6, "ratio defect {worst_ratio:e}");
    assert!(worst_chord < 1e-6, "chord defect {worst_chord:e}");

    // ellipsoid in a concentric sphere behaves the same way
    let ell = scenario(
        ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.0; 3]).unwrap(),
        5.0,
        vec![0.0; 3],
        16,
        64,
    );
    for r in conjecture1_scan(&ell, &grid::unit_directions(3, 16, 0.0)).unwrap() {
        assert!((r.ratio + 1.0).abs() < 1e-6);
        assert!(linalg::norm(&r.center) < 1e-6);
        assert!(r.chord_defect < 1e-6);
    }

    let offset = scenario(unit_ball(), 3.0, vec![0.2, 0.0, 0.0], 16, 64);
    let off_records = conjecture1_scan(&offset, &dirs).unwrap();
    let max_off_chord = off_records.iter().map(|r| r.chord_defect).fold(0.0f64, f64::max);
    println!(
        "criterion 10 conjecture scan: concentric worst ratio {worst_ratio:.2e} / chord {worst_chord:.2e}; offset max chord defect {max_off_chord:.4}"
    );
    assert!(max_off_chord > 0.05, "offset surface must push the center off the chord");
}

#[test]
fn c11_numerical_hygiene() {
    // gradient against central differences along coordinate axes
    let mut rng = StdRng::seed_from_u64(17);
    let bodies: Vec<ConvexBody> = forward_bodies().into_iter().map(|(_, b, _)| b).collect();
    let step = 1e-6;
    let mut fd_worst = 0.0f64;
    let mut euler_worst = 0.0f64;
    for trial in 0..1000 {
        let body = &bodies[trial % bodies.len()];
        let u = loop {
            let v: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
            if linalg::norm(&v) > 0.1 {
                break linalg::normalized(&v).unwrap();
            }
        };
        let k = body.support_gradient(&u).unwrap();
        for axis in 0..3 {
            let mut up = u.clone();
            let mut dn = u.clone();
            up[axis] += step;
            dn[axis] -= step;
            let fd = (body.support(&up).unwrap() - body.support(&dn).unwrap()) / (2.0 * step);
            fd_worst = fd_worst.max((fd - k[axis]).abs());
        }
        euler_worst = euler_worst.max((linalg::dot(&k, &u) - body.support(&u).unwrap()).abs());
    }
    assert!(fd_worst < 1e-5, "finite difference defect {fd_worst:e}");
    assert!(euler_worst < 1e-10, "Euler defect {euler_worst:e}");

    // identical scenario file and seed give byte-identical reports
    let dir = tempfile::tempdir().unwrap();
    let scenario_path = dir.path().join("scenario.json");
    std::fs::write(
        &scenario_path,
        r#"{
  "body": {"kind": "lp_ball", "params": {"p": 2.0, "radius": 1.0}, "center": [0.0, 0.0, 0.0]},
  "surface": {"kind": "sphere", "center": [0.0, 0.0, 0.0], "radius": 3.0},
  "sampling": {"N": 16, "M": 32, "grid_seed": 7}
}"#,
    )
    .unwrap();
    let out1 = dir.path().join("report1.json");
    let out2 = dir.path().join("report2.json");
    for out in [&out1, &out2] {
        let code = conecheck::run([
            "conecheck",
            "check-theorem",
            scenario_path.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    let bytes1 = std::fs::read(&out1).unwrap();
    let bytes2 = std::fs::read(&out2).unwrap();
    println!(
        "criterion 11 hygiene: FD defect {fd_worst:.2e}, Euler defect {euler_worst:.2e}, report bytes identical: {}",
        bytes1 == bytes2
    );
    assert_eq!(bytes1, bytes2, "reports must be byte-identical across runs");
}
