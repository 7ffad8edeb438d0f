//! Planar isoptic curves: the locus from which a convex plane body is seen
//! under a constant angle.
//!
//! In the plane, a support wedge is determined by its apex angle alone, so
//! every point of the isoptic carries a congruent support cone while the
//! body itself need not be centrally symmetric. This module builds that
//! demonstration: isoptic construction, visual angle measurement, and a
//! report contrasting the angle defect with the planar asymmetry defect.

use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::rootfind;

/// Convex plane body given by a support cosine/sine series
/// `p(theta) = a0 + sum_m (a_m cos m theta + b_m sin m theta)`.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PlanarBody {
    a0: f64,
    cos_coeffs: Vec<f64>,
    sin_coeffs: Vec<f64>,
}

/// Grid used for the construction-time convexity check.
const CONVEXITY_GRID: usize = 4096;

impl PlanarBody {
    /// Build from series coefficients (`cos_coeffs[m-1]` multiplies
    /// `cos m theta`). Rejects series whose curvature condition
    /// `p + p'' > 0` fails anywhere on the check grid.
    pub fn new(a0: f64, cos_coeffs: Vec<f64>, sin_coeffs: Vec<f64>) -> Result<Self> {
        let body = PlanarBody { a0, cos_coeffs, sin_coeffs };
        for i in 0..CONVEXITY_GRID {
            let theta = core::f64::consts::TAU * i as f64 / CONVEXITY_GRID as f64;
            if body.support(theta) + body.support_second_derivative(theta) <= 0.0 {
                return Err(GeomError::NotConvex);
            }
        }
        Ok(body)
    }

    pub fn disk(radius: f64) -> Result<Self> {
        Self::new(radius, Vec::new(), Vec::new())
    }

    /// Support value `p(theta)`.
    pub fn support(&self, theta: f64) -> f64 {
        let mut p = self.a0;
        for (i, &a) in self.cos_coeffs.iter().enumerate() {
            p += a * libm::cos((i + 1) as f64 * theta);
        }
        for (i, &b) in self.sin_coeffs.iter().enumerate() {
            p += b * libm::sin((i + 1) as f64 * theta);
        }
        p
    }

    fn support_second_derivative(&self, theta: f64) -> f64 {
        let mut p = 0.0;
        for (i, &a) in self.cos_coeffs.iter().enumerate() {
            let m = (i + 1) as f64;
            p -= m * m * a * libm::cos(m * theta);
        }
        for (i, &b) in self.sin_coeffs.iter().enumerate() {
            let m = (i + 1) as f64;
            p -= m * m * b * libm::sin(m * theta);
        }
        p
    }

    /// First-harmonic coefficients `(a1, b1)`: the least-squares symmetry
    /// center, since a recentering absorbs exactly the first harmonic of
    /// the odd part of the support function.
    pub fn first_harmonic_center(&self) -> [f64; 2] {
        [
            self.cos_coeffs.first().copied().unwrap_or(0.0),
            self.sin_coeffs.first().copied().unwrap_or(0.0),
        ]
    }
}

/// Closed polyline of isoptic points, ordered by support angle.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IsopticCurve {
    pub alpha: f64,
    /// Vertex `j` sits on the support lines at angles `theta_j` and
    /// `theta_j + pi - alpha`.
    pub thetas: Vec<f64>,
    pub vertices: Vec<[f64; 2]>,
}

/// Isoptic of a planar body under visual angle `alpha`: each vertex is the
/// intersection of the two support lines whose outward normals subtend the
/// exterior angle `pi - alpha`.
pub fn isoptic_curve(body: &PlanarBody, alpha: f64, count: usize) -> Result<IsopticCurve> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha >= core::f64::consts::PI {
        return Err(GeomError::InvalidAngle);
    }
    if count < 16 {
        return Err(GeomError::InvalidInput("isoptic needs at least 16 vertices"));
    }
    let gap = core::f64::consts::PI - alpha;
    let sin_gap = libm::sin(gap);
    if sin_gap.abs() < 1e-12 {
        return Err(GeomError::InvalidAngle);
    }
    let mut thetas = Vec::with_capacity(count);
    let mut vertices = Vec::with_capacity(count);
    for j in 0..count {
        let theta = core::f64::consts::TAU * j as f64 / count as f64;
        let theta2 = theta + gap;
        let (c1, s1) = (libm::cos(theta), libm::sin(theta));
        let (c2, s2) = (libm::cos(theta2), libm::sin(theta2));
        let (p1, p2) = (body.support(theta), body.support(theta2));
        // solve [c1 s1; c2 s2] z = [p1; p2]; the determinant is sin(gap)
        let det = c1 * s2 - s1 * c2;
        let z = [(p1 * s2 - p2 * s1) / det, (c1 * p2 - c2 * p1) / det];
        thetas.push(theta);
        vertices.push(z);
    }
    Ok(IsopticCurve { alpha, thetas, vertices })
}

/// Angle under which the body is seen from `z` (strictly outside), in
/// (0, pi). The two tangent support angles bound the arc where the support
/// line separates `z` from the body; the visual angle is pi minus that
/// arc's width.
pub fn visual_angle(body: &PlanarBody, z: &[f64; 2]) -> Result<f64> {
    const PROBE: usize = 512;
    let mut gap = |theta: f64| -> f64 {
        body.support(theta) - (libm::cos(theta) * z[0] + libm::sin(theta) * z[1])
    };
    let values: Vec<f64> = (0..PROBE)
        .map(|i| gap(core::f64::consts::TAU * i as f64 / PROBE as f64))
        .collect();
    let Some(anchor) = (0..PROBE).find(|&i| values[i] < 0.0) else {
        return Err(GeomError::ApexInsideBody);
    };
    // walk outward from the negative anchor to the two sign changes
    let step = core::f64::consts::TAU / PROBE as f64;
    let theta_of = |i: isize| -> f64 { i as f64 * step };
    let value_of = |i: isize| -> f64 { values[(i.rem_euclid(PROBE as isize)) as usize] };

    let mut right = anchor as isize;
    while value_of(right + 1) < 0.0 {
        right += 1;
        if right - (anchor as isize) > PROBE as isize {
            return Err(GeomError::GeometryInconsistent("support gap never changes sign"));
        }
    }
    let mut left = anchor as isize;
    while value_of(left - 1) < 0.0 {
        left -= 1;
        if (anchor as isize) - left > PROBE as isize {
            return Err(GeomError::GeometryInconsistent("support gap never changes sign"));
        }
    }
    // refine both boundaries of the negative arc
    let root_right = rootfind::bracketed_root(
        &mut gap,
        theta_of(right),
        theta_of(right + 1),
        value_of(right),
        value_of(right + 1),
        1e-15,
        1e-13,
        120,
    );
    let root_left = rootfind::bracketed_root(
        &mut gap,
        theta_of(left - 1),
        theta_of(left),
        value_of(left - 1),
        value_of(left),
        1e-15,
        1e-13,
        120,
    );
    let arc = root_right.x - root_left.x;
    if !(arc > 0.0 && arc < core::f64::consts::TAU) {
        return Err(GeomError::GeometryInconsistent("tangent arc out of range"));
    }
    Ok(core::f64::consts::PI - arc)
}

/// Outcome of the planar demonstration: the isoptic keeps a constant
/// support-cone class while the body stays asymmetric.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Remark2Report {
    pub alpha: f64,
    /// Max over isoptic vertices of |visual angle - alpha|.
    pub angle_defect: f64,
    /// Max over theta of |p(theta) - p(theta + pi) - 2 <c, u(theta)>| at the
    /// least-squares center c.
    pub asymmetry_defect: f64,
    pub center: [f64; 2],
}

pub fn remark2_report(body: &PlanarBody, alpha: f64, count: usize) -> Result<Remark2Report> {
    let curve = isoptic_curve(body, alpha, count)?;
    let mut angle_defect = 0.0f64;
    for z in &curve.vertices {
        angle_defect = angle_defect.max((visual_angle(body, z)? - alpha).abs());
    }
    let center = body.first_harmonic_center();
    let mut asymmetry = 0.0f64;
    for i in 0..CONVEXITY_GRID {
        let theta = core::f64::consts::TAU * i as f64 / CONVEXITY_GRID as f64;
        let odd = body.support(theta) - body.support(theta + core::f64::consts::PI);
        let absorbed = 2.0 * (center[0] * libm::cos(theta) + center[1] * libm::sin(theta));
        asymmetry = asymmetry.max((odd - absorbed).abs());
    }
    Ok(Remark2Report { alpha, angle_defect, asymmetry_defect: asymmetry, center })
}
