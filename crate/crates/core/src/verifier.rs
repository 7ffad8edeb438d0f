//! End-to-end verification pipeline.
//!
//! The hypothesis under test: from every apex on the surface `L` there is a
//! second apex whose support double-cone of `K` is a translate of the first
//! one. The pipeline realizes the existential as a global minimization of
//! the cone distance over `L` (coarse grid pass plus simplex refinement),
//! then certifies the claimed consequences: the homothety between
//! corresponded grazes is a point reflection about the apex midpoint, `K`'s
//! support function is even about a single center, and `L` is symmetric
//! about that same center.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::body::{self, ConvexBody};
use crate::cone::{self, DoubleCone, Graze};
use crate::error::{GeomError, Result};
use crate::grid;
use crate::homothety;
use crate::linalg;
use crate::neldermead::{self, SimplexOptions};
use crate::rootfind;
use crate::surface::StarSurface;

/// Required clearance between the body and the surface.
pub const CONTAINMENT_CLEARANCE: f64 = 1e-3;

/// Direction-set size the coarse candidate pass works at.
const COARSE_TARGET: usize = 32;
/// Direction-set size the simplex refinement works at.
const REFINE_TARGET: usize = 64;
/// Probe count for the line-meets-body candidate filter.
const LINE_PROBES: usize = 32;

#[derive(Debug, Clone, Copy)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tolerances {
    pub congruence: f64,
    pub ratio: f64,
    pub center: f64,
    pub symmetry: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { congruence: 1e-6, ratio: 1e-6, center: 1e-6, symmetry: 1e-6 }
    }
}

/// A fully validated experiment: body, surrounding surface, sampling
/// resolutions and tolerances.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Scenario {
    pub body: ConvexBody,
    pub surface: StarSurface,
    /// Apex sample count on the surface.
    pub samples: usize,
    /// Meridian count per graze.
    pub meridians: usize,
    pub tolerances: Tolerances,
    pub seed: u64,
}

impl Scenario {
    pub fn new(
        body: ConvexBody,
        surface: StarSurface,
        samples: usize,
        meridians: usize,
        tolerances: Tolerances,
        seed: u64,
    ) -> Result<Self> {
        if body.dim() != surface.dim() {
            return Err(GeomError::InvalidInput("body and surface dimension mismatch"));
        }
        if body.dim() < 3 {
            return Err(GeomError::UnsupportedDimension(body.dim()));
        }
        if samples < 8 {
            return Err(GeomError::InvalidInput("apex sample count must be at least 8"));
        }
        if meridians < 8 {
            return Err(GeomError::InvalidInput("meridian count must be at least 8"));
        }
        for t in [tolerances.congruence, tolerances.ratio, tolerances.center, tolerances.symmetry] {
            if !t.is_finite() || t <= 0.0 {
                return Err(GeomError::InvalidInput("tolerances must be positive"));
            }
        }
        surface.check_contains(&body, 256, CONTAINMENT_CLEARANCE)?;
        Ok(Scenario { body, surface, samples, meridians, tolerances, seed })
    }

    pub fn grid_phase(&self) -> f64 {
        grid::seed_phase(self.seed)
    }
}

/// Per-apex outcome of the hypothesis sweep.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ApexRecord {
    pub index: usize,
    pub apex: Vec<f64>,
    pub partner: Option<Vec<f64>>,
    /// Cone translation distance at the returned partner.
    pub distance: Option<f64>,
    /// Fitted homothety ratio between the corresponded grazes.
    pub ratio: Option<f64>,
    /// Distance from the fitted homothety center to the apex midpoint.
    pub center_defect: Option<f64>,
    pub pass: bool,
    pub error: Option<alloc::string::String>,
}

/// Conclusion certificates: centers and symmetry defects.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Conclusion {
    pub body_center: Vec<f64>,
    pub surface_center: Vec<f64>,
    /// Max odd-part defect of the body's support function about its center.
    pub body_asymmetry: f64,
    /// Max radial reflection defect of the surface about the body's center.
    pub surface_defect: f64,
    /// Distance between the body and surface center estimates.
    pub concentricity: f64,
    /// Fraction of passing apexes whose fitted ratio is -1 at tolerance.
    pub ratio_pass_fraction: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Verdict {
    Verified,
    HypothesisFailed,
    ConclusionFailed,
}

#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TheoremReport {
    pub verdict: Verdict,
    pub hypothesis_pass: bool,
    pub records: Vec<ApexRecord>,
    pub conclusion: Conclusion,
}

/// Precomputed state for partner searches over one scenario: the apex grid
/// with its direction sets at full and reduced meridian resolution.
pub struct PartnerContext<'a> {
    pub scenario: &'a Scenario,
    pub apexes: Vec<Vec<f64>>,
    apex_dirs: Vec<Vec<f64>>,
    grazes: Vec<Result<Graze>>,
    full_cones: Vec<Option<DoubleCone>>,
    coarse_cones: Vec<Option<DoubleCone>>,
    coarse_stride: usize,
    refine_stride: usize,
    refine_meridians: usize,
}

/// Partner search result: the minimizing apex and its cone distance.
#[derive(Debug, Clone)]
pub struct Partner {
    pub point: Vec<f64>,
    pub distance: f64,
    pub graze: Graze,
}

/// Largest divisor stride of `m` that keeps at least `target` directions.
fn stride_for(m: usize, target: usize) -> usize {
    let mut d = (m / target).max(1);
    while d > 1 && !m.is_multiple_of(d) {
        d -= 1;
    }
    d
}

impl<'a> PartnerContext<'a> {
    pub fn build(scenario: &'a Scenario) -> Result<Self> {
        let n = scenario.samples;
        let phase = scenario.grid_phase();
        let apexes = scenario.surface.sample_with_phase(n, phase);
        let mut apex_dirs = Vec::with_capacity(n);
        for x in &apexes {
            apex_dirs.push(scenario.surface.direction_of(x)?);
        }
        let coarse_stride = stride_for(scenario.meridians, COARSE_TARGET);
        let refine_stride = stride_for(scenario.meridians, REFINE_TARGET);
        let mut grazes = Vec::with_capacity(n);
        let mut full_cones = Vec::with_capacity(n);
        let mut coarse_cones = Vec::with_capacity(n);
        for x in &apexes {
            let g = cone::graze(&scenario.body, x, scenario.meridians);
            match &g {
                Ok(gr) => {
                    let full = cone::direction_set(gr)?;
                    coarse_cones.push(Some(full.subsample(coarse_stride)));
                    full_cones.push(Some(full));
                }
                Err(_) => {
                    full_cones.push(None);
                    coarse_cones.push(None);
                }
            }
            grazes.push(g);
        }
        Ok(PartnerContext {
            scenario,
            apexes,
            apex_dirs,
            grazes,
            full_cones,
            coarse_cones,
            coarse_stride,
            refine_stride,
            refine_meridians: scenario.meridians / refine_stride,
        })
    }

    /// Partner search for an arbitrary apex on the surface.
    pub fn find_partner(&self, x: &[f64]) -> Result<Partner> {
        let graze_x = cone::graze(&self.scenario.body, x, self.scenario.meridians)?;
        self.find_partner_of_graze(&graze_x)
    }

    /// Partner search reusing an already extracted graze of the query apex.
    ///
    /// Three stages: a coarse pass over the apex grid, a closed-form
    /// candidate where the ray from the apex through the body center exits
    /// the surface (translation-congruence forces parallel cone axes, which
    /// puts the partner of a centered body on that ray), and a simplex
    /// descent from the best start. Whenever an evaluation at full meridian
    /// resolution already beats the congruence tolerance the search returns
    /// early; the reported distance is always measured at full resolution.
    pub fn find_partner_of_graze(&self, graze_x: &Graze) -> Result<Partner> {
        let body = &self.scenario.body;
        let surface = &self.scenario.surface;
        let tol = self.scenario.tolerances.congruence;
        let x = &graze_x.apex;
        let full_x = cone::direction_set(graze_x)?;
        let coarse_x = full_x.subsample(self.coarse_stride);
        let refine_x = full_x.subsample(self.refine_stride);

        // full-resolution evaluation of an arbitrary surface point
        let evaluate = |y: &[f64]| -> Result<(Graze, f64)> {
            let gy = cone::graze(body, y, self.scenario.meridians)?;
            let d = cone::cone_translation_distance(&full_x, &cone::direction_set(&gy)?)?;
            Ok((gy, d))
        };

        // candidate on the ray through the body center
        let opposite = self.radial_opposite(x);
        if let Ok(y) = &opposite {
            if let Ok((gy, d)) = evaluate(y) {
                if d < tol {
                    return Ok(Partner { point: y.clone(), distance: d, graze: gy });
                }
            }
        }

        // coarse pass over the apex grid; candidates must sit inside the
        // solid double-cone of x (the line through both apexes meets K),
        // which removes the trivial family of near-coincident apexes
        let mut best: Option<(f64, usize)> = None;
        for (j, cand) in self.coarse_cones.iter().enumerate() {
            let Some(cand) = cand else { continue };
            if linalg::dist(&self.apexes[j], x) < 1e-9 {
                continue;
            }
            let dir = linalg::sub(&self.apexes[j], x);
            if !cone::line_meets_body(body, x, &dir, LINE_PROBES) {
                continue;
            }
            let d = cone::cone_translation_distance(&coarse_x, cand)?;
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, j));
            }
        }
        let Some((_, best_j)) = best else {
            return Err(GeomError::GeometryInconsistent("no admissible partner candidate"));
        };

        let dim = body.dim();
        let chart_center = match &opposite {
            Ok(y) => surface.direction_of(y)?,
            Err(_) => self.apex_dirs[best_j].clone(),
        };
        let chart = linalg::orthonormal_frame(&chart_center);
        let embed = |p: &[f64]| -> Result<Vec<f64>> {
            let mut omega = chart_center.clone();
            for (coeff, b) in p.iter().zip(&chart) {
                for i in 0..dim {
                    omega[i] += coeff * b[i];
                }
            }
            linalg::normalized(&omega)
        };
        let objective = |p: &[f64]| -> f64 {
            let Ok(omega) = embed(p) else {
                return 20.0;
            };
            let y = surface.point_at(&omega);
            let dir = linalg::sub(&y, x);
            if !cone::line_meets_body(body, x, &dir, LINE_PROBES) {
                return 10.0 + linalg::norm(p);
            }
            match cone::graze(body, &y, self.refine_meridians) {
                Ok(gy) => match cone::direction_set(&gy) {
                    Ok(cy) => cone::cone_translation_distance(&refine_x, &cy).unwrap_or(15.0),
                    Err(_) => 15.0,
                },
                Err(_) => 15.0,
            }
        };

        // start the descent at the better of the two candidates in the chart
        let mut start = alloc::vec![0.0; dim - 1];
        if opposite.is_ok() {
            let grid_omega = &self.apex_dirs[best_j];
            let mut grid_params = alloc::vec![0.0; dim - 1];
            let radial = linalg::dot(grid_omega, &chart_center);
            if radial > 0.1 {
                for (k, b) in chart.iter().enumerate() {
                    grid_params[k] = linalg::dot(grid_omega, b) / radial;
                }
                if objective(&grid_params) < objective(&start) {
                    start = grid_params;
                }
            }
        }

        // simplex descent with a restart ladder: the cone-distance landscape
        // is a narrow funnel with a flat shoulder, where one simplex pass
        // stalls; each restart re-contracts around the best point so far
        let spacing = core::f64::consts::PI
            * libm::pow(1.0 / self.scenario.samples as f64, 1.0 / (dim as f64 - 1.0));
        let mut best_params = start;
        for step in [0.6 * spacing, 0.01 * spacing, 1.5e-4 * spacing] {
            let refined = neldermead::minimize(
                &objective,
                &best_params,
                step,
                SimplexOptions { max_iter: 200, x_tol: 1e-10, f_tol: 0.0 },
            );
            best_params = refined.x;
            if refined.value < 0.25 * tol {
                break;
            }
        }

        // evaluate the refined point at full resolution, keep the best of
        // refined point, ray candidate and coarse winner
        let mut candidates: Vec<(Vec<f64>, Graze, f64)> = Vec::with_capacity(3);
        if let Ok(omega) = embed(&best_params) {
            let y = surface.point_at(&omega);
            if let Ok((gy, d)) = evaluate(&y) {
                candidates.push((y, gy, d));
            }
        }
        if let Ok(y) = opposite {
            if let Ok((gy, d)) = evaluate(&y) {
                candidates.push((y, gy, d));
            }
        }
        if let (Some(cy), Ok(gy)) = (&self.full_cones[best_j], &self.grazes[best_j]) {
            let d = cone::cone_translation_distance(&full_x, cy)?;
            candidates.push((self.apexes[best_j].clone(), gy.clone(), d));
        }
        candidates
            .into_iter()
            .min_by(|a, b| a.2.partial_cmp(&b.2).unwrap_or(core::cmp::Ordering::Equal))
            .map(|(point, graze, distance)| Partner { point, distance, graze })
            .ok_or(GeomError::GeometryInconsistent("partner evaluation failed"))
    }

    /// Point where the ray from `x` through the body center exits the
    /// surface on the far side.
    fn radial_opposite(&self, x: &[f64]) -> Result<Vec<f64>> {
        let surface = &self.scenario.surface;
        let center = self.scenario.body.center();
        let dir = linalg::normalized(&linalg::sub(&center, x))?;
        let z0 = surface.center();
        // inside the surface at the body center, outside beyond its largest
        // radius from the radial center
        let t_lo = linalg::dist(x, &center);
        let t_hi = linalg::dist(x, z0) + 1.0001 * surface.max_radius_bound();
        let gap = |t: f64| -> f64 {
            let p = linalg::axpy(x, t, &dir);
            let radial = linalg::sub(&p, z0);
            let len = linalg::norm(&radial);
            if len < 1e-12 {
                return -surface.base_radius();
            }
            len - surface.radius_at(&linalg::scale(&radial, 1.0 / len))
        };
        let f_lo = gap(t_lo);
        let f_hi = gap(t_hi);
        if !(f_lo < 0.0 && f_hi > 0.0) {
            return Err(GeomError::GeometryInconsistent("ray does not exit the surface"));
        }
        let root = rootfind::bracketed_root(gap, t_lo, t_hi, f_lo, f_hi, 1e-13, 1e-12, 120);
        Ok(linalg::axpy(x, root.x, &dir))
    }

    /// Full record for grid apex `i`: partner, cone distance, homothety
    /// certificates. Pure in `(self, i)` and safe to evaluate concurrently.
    pub fn apex_record(&self, i: usize) -> ApexRecord {
        let apex = self.apexes[i].clone();
        let graze_x = match &self.grazes[i] {
            Ok(g) => g,
            Err(e) => {
                return ApexRecord {
                    index: i,
                    apex,
                    partner: None,
                    distance: None,
                    ratio: None,
                    center_defect: None,
                    pass: false,
                    error: Some(e.to_string()),
                }
            }
        };
        let partner = match self.find_partner_of_graze(graze_x) {
            Ok(p) => p,
            Err(e) => {
                return ApexRecord {
                    index: i,
                    apex,
                    partner: None,
                    distance: None,
                    ratio: None,
                    center_defect: None,
                    pass: false,
                    error: Some(e.to_string()),
                }
            }
        };
        let pass = partner.distance < self.scenario.tolerances.congruence;
        let mut ratio = None;
        let mut center_defect = None;
        let mut error = None;
        if pass {
            match homothety::pair_from_graze(&self.scenario.body, graze_x, &partner.point)
                .and_then(|pair| homothety::homothety_fit(&pair))
            {
                Ok(fit) => {
                    let (_, defect) = homothety::unit_inverse_check(
                        &fit,
                        &apex,
                        &partner.point,
                        self.scenario.tolerances.ratio,
                    );
                    ratio = Some(fit.ratio);
                    center_defect = Some(defect);
                }
                Err(e) => error = Some(e.to_string()),
            }
        }
        ApexRecord {
            index: i,
            apex,
            partner: Some(partner.point),
            distance: Some(partner.distance),
            ratio,
            center_defect,
            pass,
            error,
        }
    }
}

/// One-shot partner search (builds the grid context internally; sweeps
/// should build a [`PartnerContext`] once and reuse it).
pub fn find_partner(scenario: &Scenario, x: &[f64]) -> Result<(Vec<f64>, f64)> {
    let ctx = PartnerContext::build(scenario)?;
    let p = ctx.find_partner(x)?;
    Ok((p.point, p.distance))
}

/// Run the partner search for every sampled apex.
pub fn verify_hypothesis(scenario: &Scenario) -> Result<Vec<ApexRecord>> {
    let ctx = PartnerContext::build(scenario)?;
    Ok((0..ctx.apexes.len()).map(|i| ctx.apex_record(i)).collect())
}

/// Certify the conclusion given the hypothesis records and assemble the
/// final report. Failures become verdicts, not errors.
pub fn verify_conclusion(scenario: &Scenario, records: Vec<ApexRecord>) -> Result<TheoremReport> {
    let tol = &scenario.tolerances;
    let dirs = body::default_direction_sample(scenario.body.dim());
    let body_center = body::estimate_center(&scenario.body, &dirs)?;
    let body_asymmetry = body::central_asymmetry(&scenario.body, &body_center, &dirs)?;
    let surface_defect = scenario.surface.symmetry_defect(&body_center, 512)?;
    let surface_center = scenario.surface.estimate_center(512)?;
    let concentricity = linalg::dist(&body_center, &surface_center);

    let hypothesis_pass = !records.is_empty() && records.iter().all(|r| r.pass);
    let passing = records.iter().filter(|r| r.pass).count();
    let good_ratio = records
        .iter()
        .filter(|r| r.pass)
        .filter(|r| match (r.ratio, r.center_defect) {
            (Some(ratio), Some(defect)) => (ratio + 1.0).abs() < tol.ratio && defect < tol.center,
            _ => false,
        })
        .count();
    let ratio_pass_fraction = if passing == 0 { 1.0 } else { good_ratio as f64 / passing as f64 };

    let conclusion_ok = body_asymmetry < tol.symmetry
        && surface_defect < tol.symmetry
        && concentricity < tol.center
        && ratio_pass_fraction == 1.0;

    let verdict = if !hypothesis_pass {
        Verdict::HypothesisFailed
    } else if !conclusion_ok {
        Verdict::ConclusionFailed
    } else {
        Verdict::Verified
    };
    Ok(TheoremReport {
        verdict,
        hypothesis_pass,
        records,
        conclusion: Conclusion {
            body_center,
            surface_center,
            body_asymmetry,
            surface_defect,
            concentricity,
            ratio_pass_fraction,
        },
    })
}

/// Full pipeline: hypothesis sweep plus conclusion certificates.
pub fn check_theorem(scenario: &Scenario) -> Result<TheoremReport> {
    let records = verify_hypothesis(scenario)?;
    verify_conclusion(scenario, records)
}

/// Trace of the diameter-balancing argument along a surface path.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PathRecord {
    pub t: Vec<f64>,
    /// `d(t) = diam(graze at partner) - diam(graze at path point)`.
    pub d: Vec<f64>,
    /// Diameter ratio `r(t) = diam_alpha / diam_beta`.
    pub r: Vec<f64>,
    pub diam_alpha: Vec<f64>,
    pub diam_beta: Vec<f64>,
    pub t_star: Option<f64>,
    pub d_at_t_star: Option<f64>,
    /// Set when `d` vanishes along the whole grid (the fully symmetric
    /// case); `t_star` is then the midpoint by convention.
    pub degenerate_zero: bool,
    pub bisection_iterations: usize,
}

/// Tolerance below which the path functional is considered identically zero.
const PATH_ZERO_TOL: f64 = 1e-8;

/// Follow the curve from `x0` to `y0` on the surface, pair every point with
/// its partner, and locate a zero of the graze-diameter difference
/// `d(t)` on a 33-point grid (bracketed bisection, at most 40 halvings).
pub fn appendix_path_search(scenario: &Scenario, x0: &[f64], y0: &[f64]) -> Result<PathRecord> {
    let surface = &scenario.surface;
    for endpoint in [x0, y0] {
        let omega = surface.direction_of(endpoint)?;
        let expected = surface.point_at(&omega);
        if linalg::dist(endpoint, &expected) > 1e-6 * surface.base_radius() {
            return Err(GeomError::InvalidInput("path endpoint must lie on the surface"));
        }
    }
    let ctx = PartnerContext::build(scenario)?;
    let path = surface.path(surface.direction_of(x0)?, surface.direction_of(y0)?)?;

    let eval = |t: f64| -> Result<(f64, f64, f64, f64)> {
        let alpha = path.at(t);
        let graze_alpha = cone::graze(&scenario.body, &alpha, scenario.meridians)?;
        let partner = ctx.find_partner_of_graze(&graze_alpha)?;
        let diam_alpha = cone::graze_diameter(&graze_alpha)?;
        let diam_beta = cone::graze_diameter(&partner.graze)?;
        let d = diam_beta - diam_alpha;
        let r = diam_alpha / diam_beta;
        Ok((d, r, diam_alpha, diam_beta))
    };

    const GRID: usize = 33;
    let mut record = PathRecord {
        t: Vec::with_capacity(GRID),
        d: Vec::with_capacity(GRID),
        r: Vec::with_capacity(GRID),
        diam_alpha: Vec::with_capacity(GRID),
        diam_beta: Vec::with_capacity(GRID),
        t_star: None,
        d_at_t_star: None,
        degenerate_zero: false,
        bisection_iterations: 0,
    };
    for i in 0..GRID {
        let t = i as f64 / (GRID - 1) as f64;
        let (d, r, da, db) = eval(t)?;
        record.t.push(t);
        record.d.push(d);
        record.r.push(r);
        record.diam_alpha.push(da);
        record.diam_beta.push(db);
    }

    let bracket = (0..GRID - 1).find(|&i| {
        record.d[i] * record.d[i + 1] < 0.0
            && record.d[i].abs() > PATH_ZERO_TOL
            && record.d[i + 1].abs() > PATH_ZERO_TOL
    });
    if let Some(i) = bracket {
        let root = rootfind::bisect(
            |t| eval(t).map(|(d, ..)| d).unwrap_or(f64::NAN),
            record.t[i],
            record.t[i + 1],
            record.d[i],
            record.d[i + 1],
            PATH_ZERO_TOL,
            40,
        );
        record.t_star = Some(root.x);
        record.d_at_t_star = Some(root.f);
        record.bisection_iterations = root.iterations;
    } else if record.d.iter().all(|d| d.abs() <= PATH_ZERO_TOL) {
        let (d_mid, ..) = eval(0.5)?;
        record.degenerate_zero = true;
        record.t_star = Some(0.5);
        record.d_at_t_star = Some(d_mid);
    }
    Ok(record)
}

/// Per-direction outcome of the parallel-section scan.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Conjecture1Record {
    pub direction: Vec<f64>,
    /// Contact points of the two parallel support hyperplanes.
    pub contact_plus: Vec<f64>,
    pub contact_minus: Vec<f64>,
    pub ratio: f64,
    pub center: Vec<f64>,
    pub residual: f64,
    /// Distance from the homothety center to the contact chord.
    pub chord_defect: f64,
}

/// Points of the section loop to trace per support hyperplane.
const SECTION_POINTS: usize = 128;

/// For each direction: cut the surface with the two parallel support
/// hyperplanes of the body, fit a homothety between the section loops
/// (corresponded by polar angle about the loop centroids, flipped for the
/// inverse branch), and measure how far its center sits from the chord
/// joining the contact points.
pub fn conjecture1_scan(
    scenario: &Scenario,
    directions: &[Vec<f64>],
) -> Result<Vec<Conjecture1Record>> {
    let n = scenario.body.dim();
    if n != 3 {
        return Err(GeomError::UnsupportedDimension(n));
    }
    if directions.is_empty() {
        return Err(GeomError::InvalidInput("empty direction set"));
    }
    let body = &scenario.body;
    let surface = &scenario.surface;
    let mut out = Vec::with_capacity(directions.len());
    for dir in directions {
        let u = linalg::normalized(dir)?;
        let frame = linalg::orthonormal_frame(&u);
        let s_plus = body.support(&u)?;
        let s_minus = -body.support_raw(&linalg::neg(&u));
        let contact_plus = body.support_gradient_raw(&u);
        let contact_minus = body.support_gradient_raw(&linalg::neg(&u));

        let loop_plus = trace_section(surface, &u, &u, s_plus, &frame)?;
        let loop_minus = trace_section(surface, &linalg::neg(&u), &u, s_minus, &frame)?;
        let a = resample_by_centroid_angle(&loop_plus, &frame, SECTION_POINTS);
        let b = resample_by_centroid_angle(&loop_minus, &frame, SECTION_POINTS);

        // inverse homothety flips the in-plane angle by pi
        let pairs: Vec<(Vec<f64>, Vec<f64>)> = (0..SECTION_POINTS)
            .map(|j| (a[j].clone(), b[(j + SECTION_POINTS / 2) % SECTION_POINTS].clone()))
            .collect();
        let fit = homothety::fit_point_pairs(&pairs)?;
        let chord_defect = linalg::point_segment_distance(&fit.center, &contact_plus, &contact_minus);
        out.push(Conjecture1Record {
            direction: u,
            contact_plus,
            contact_minus,
            ratio: fit.ratio,
            center: fit.center,
            residual: fit.residual,
            chord_defect,
        });
    }
    Ok(out)
}

/// Trace the loop `surface intersect { <normal, z> = offset }` as one point
/// per azimuth around `axis`, by bisecting the plane equation along surface
/// meridians.
fn trace_section(
    surface: &StarSurface,
    axis: &[f64],
    normal: &[f64],
    offset: f64,
    frame: &[Vec<f64>],
) -> Result<Vec<Vec<f64>>> {
    let n = surface.dim();
    let azimuths = grid::azimuth_directions(frame, SECTION_POINTS);
    let mut points = Vec::with_capacity(azimuths.len());
    let mut omega = alloc::vec![0.0; n];
    for w in &azimuths {
        let mut eval = |theta: f64| -> f64 {
            let (ct, st) = (libm::cos(theta), libm::sin(theta));
            for i in 0..n {
                omega[i] = ct * axis[i] + st * w[i];
            }
            let p = surface.point_at(&omega);
            linalg::dot(normal, &p) - offset
        };
        let f0 = eval(0.0);
        let f1 = eval(core::f64::consts::PI);
        if f0 * f1 >= 0.0 {
            return Err(GeomError::GeometryInconsistent("support section misses the surface"));
        }
        let root =
            rootfind::bracketed_root(&mut eval, 0.0, core::f64::consts::PI, f0, f1, 1e-15, 1e-12, 120);
        let (ct, st) = (libm::cos(root.x), libm::sin(root.x));
        let mut om = alloc::vec![0.0; n];
        for i in 0..n {
            om[i] = ct * axis[i] + st * w[i];
        }
        let om = linalg::normalized(&om)?;
        points.push(surface.point_at(&om));
    }
    Ok(points)
}

/// Resample a closed loop at uniformly spaced polar angles about its
/// centroid, measured in the section plane's frame.
fn resample_by_centroid_angle(
    points: &[Vec<f64>],
    frame: &[Vec<f64>],
    count: usize,
) -> Vec<Vec<f64>> {
    let n = points[0].len();
    let mut centroid = alloc::vec![0.0; n];
    for p in points {
        for i in 0..n {
            centroid[i] += p[i];
        }
    }
    for c in centroid.iter_mut() {
        *c /= points.len() as f64;
    }
    let mut tagged: Vec<(f64, &Vec<f64>)> = points
        .iter()
        .map(|p| {
            let rel = linalg::sub(p, &centroid);
            let angle = libm::atan2(linalg::dot(&rel, &frame[1]), linalg::dot(&rel, &frame[0]));
            (angle, p)
        })
        .collect();
    tagged.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(core::cmp::Ordering::Equal));

    let m = tagged.len();
    let mut out = Vec::with_capacity(count);
    for j in 0..count {
        let mut target = core::f64::consts::TAU * j as f64 / count as f64;
        if target > core::f64::consts::PI {
            target -= core::f64::consts::TAU;
        }
        // cyclic bracketing pair around the target angle
        let hi_idx = tagged.partition_point(|(a, _)| *a < target) % m;
        let lo_idx = (hi_idx + m - 1) % m;
        let (a_lo, p_lo) = (tagged[lo_idx].0, tagged[lo_idx].1);
        let (a_hi, p_hi) = (tagged[hi_idx].0, tagged[hi_idx].1);
        let mut span = a_hi - a_lo;
        if span <= 0.0 {
            span += core::f64::consts::TAU;
        }
        let mut off = target - a_lo;
        if off < 0.0 {
            off += core::f64::consts::TAU;
        }
        let t = if span < 1e-12 { 0.0 } else { (off / span).clamp(0.0, 1.0) };
        out.push(linalg::axpy(p_lo, t, &linalg::sub(p_hi, p_lo)));
    }
    out
}
