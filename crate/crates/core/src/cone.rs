//! Support double-cones and grazes.
//!
//! From an apex `x` outside the body, the normals of tangent hyperplanes
//! through `x` form the zero set of `g(u) = h(u) - <u, x>`. Each meridian of
//! the unit normal sphere from `-e` to `e` (with `g(-e) > 0 > g(e)`) crosses
//! that zero set exactly once for a smooth strictly convex body, so the
//! graze is extracted by one bracketed root per meridian.
//!
//! Meridian azimuths are laid out in a frame that depends only on the *line*
//! of the cone axis. Two cones that are translates (or point reflections) of
//! one another therefore sample exactly the same projective direction set,
//! and their sampled distance vanishes at solver tolerance instead of at
//! grid resolution.

use alloc::vec;
use alloc::vec::Vec;

use crate::body::ConvexBody;
use crate::error::{GeomError, Result};
use crate::grid;
use crate::linalg;
use crate::rootfind;

/// Residual tolerance on `g` for graze extraction.
pub const GRAZE_FTOL: f64 = 1e-12;

/// One tangent hyperplane through the apex: outward normal and contact point.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Contact {
    pub normal: Vec<f64>,
    pub point: Vec<f64>,
}

/// The graze of a body with respect to an apex: the contact set of all
/// tangent hyperplanes through the apex, sampled in azimuth order.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Graze {
    pub apex: Vec<f64>,
    pub contacts: Vec<Contact>,
}

impl Graze {
    pub fn dim(&self) -> usize {
        self.apex.len()
    }

    /// Keep every `stride`-th contact. Azimuth grids nest, so for
    /// three-dimensional grazes this equals a graze built with
    /// `meridians / stride` meridians.
    pub fn subsample(&self, stride: usize) -> Graze {
        Graze {
            apex: self.apex.clone(),
            contacts: self.contacts.iter().step_by(stride.max(1)).cloned().collect(),
        }
    }
}

/// Projective direction set of a support double-cone: each boundary line of
/// the cone through the apex, stored by its canonical representative.
#[derive(Debug, Clone)]
pub struct DoubleCone {
    pub apex: Vec<f64>,
    dim: usize,
    /// Flattened unit directions, `count * dim` values.
    dirs: Vec<f64>,
}

impl DoubleCone {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn count(&self) -> usize {
        self.dirs.len() / self.dim
    }

    pub fn direction(&self, i: usize) -> &[f64] {
        &self.dirs[i * self.dim..(i + 1) * self.dim]
    }

    pub fn directions(&self) -> impl Iterator<Item = &[f64]> {
        self.dirs.chunks_exact(self.dim)
    }

    /// Keep every `stride`-th direction (see [`Graze::subsample`]).
    pub fn subsample(&self, stride: usize) -> DoubleCone {
        let stride = stride.max(1);
        let mut dirs = Vec::with_capacity(self.dirs.len() / stride + self.dim);
        let mut i = 0;
        while i < self.count() {
            dirs.extend_from_slice(self.direction(i));
            i += stride;
        }
        DoubleCone { apex: self.apex.clone(), dim: self.dim, dirs }
    }
}

/// Signed tangency gap `g(u) = h(u) - <u, x>`.
///
/// Zero exactly on normals of tangent hyperplanes through `x`; positive
/// where `x` is on the inner side of the support hyperplane `Pi(u, h(u))`,
/// negative where `x` lies beyond it.
pub fn tangency_gap(body: &ConvexBody, apex: &[f64], u: &[f64]) -> Result<f64> {
    negative_gap_axis(body, apex)?; // rejects apexes inside the body
    let h = body.support(u)?;
    Ok(h - linalg::dot(u, apex))
}

/// A direction with `g < 0`, certifying the apex is outside the body and
/// anchoring the meridian sweep. Prefers the radial direction from the
/// body's natural center; falls back to a probe scan.
fn negative_gap_axis(body: &ConvexBody, apex: &[f64]) -> Result<Vec<f64>> {
    let radial = linalg::sub(apex, &body.center());
    if let Ok(e) = linalg::normalized(&radial) {
        if body.support_raw(&e) - linalg::dot(&e, apex) < 0.0 {
            return Ok(e);
        }
    }
    let mut best: Option<(f64, Vec<f64>)> = None;
    for u in grid::unit_directions(body.dim(), 128, 0.0) {
        let g = body.support_raw(&u) - linalg::dot(&u, apex);
        if g < 0.0 && best.as_ref().is_none_or(|(bg, _)| g < *bg) {
            best = Some((g, u));
        }
    }
    best.map(|(_, u)| u).ok_or(GeomError::ApexInsideBody)
}

/// Extract the graze of `body` from `apex` with `meridians` azimuthal
/// meridians (exactly `meridians` contacts in dimension three; a polar
/// product grid of azimuths in higher dimensions).
pub fn graze(body: &ConvexBody, apex: &[f64], meridians: usize) -> Result<Graze> {
    let n = body.dim();
    if n < 3 {
        return Err(GeomError::UnsupportedDimension(n));
    }
    if apex.len() != n {
        return Err(GeomError::InvalidInput("apex dimension mismatch"));
    }
    if meridians < 8 {
        return Err(GeomError::InvalidInput("meridian count must be at least 8"));
    }
    let axis = negative_gap_axis(body, apex)?;
    let g_neg_axis = body.support_raw(&linalg::neg(&axis)) + linalg::dot(&axis, apex);
    if g_neg_axis <= 0.0 {
        return Err(GeomError::GeometryInconsistent("meridian bracket lost at the negative axis"));
    }
    let g_axis = body.support_raw(&axis) - linalg::dot(&axis, apex);

    let frame = linalg::orthonormal_frame(&axis);
    let azimuths = grid::azimuth_directions(&frame, meridians);

    let mut contacts = Vec::with_capacity(azimuths.len());
    let mut u_buf = vec![0.0; n];
    for w in &azimuths {
        // semicircle from -axis (t = 0) to axis (t = 1) through w
        let mut eval = |t: f64| -> f64 {
            let theta = core::f64::consts::PI * (1.0 - t);
            let (ct, st) = (libm::cos(theta), libm::sin(theta));
            for i in 0..n {
                u_buf[i] = ct * axis[i] + st * w[i];
            }
            body.support_raw(&u_buf) - linalg::dot(&u_buf, apex)
        };
        let root = rootfind::bracketed_root(&mut eval, 0.0, 1.0, g_neg_axis, g_axis, 1e-16, GRAZE_FTOL, 120);
        if root.f.abs() > GRAZE_FTOL * 8.0 {
            return Err(GeomError::GeometryInconsistent("meridian root did not converge"));
        }
        let theta = core::f64::consts::PI * (1.0 - root.x);
        let (ct, st) = (libm::cos(theta), libm::sin(theta));
        let mut normal = vec![0.0; n];
        for i in 0..n {
            normal[i] = ct * axis[i] + st * w[i];
        }
        let normal = linalg::normalized(&normal)?;
        let point = body.support_gradient_raw(&normal);
        contacts.push(Contact { normal, point });
    }
    Ok(Graze { apex: apex.to_vec(), contacts })
}

/// Maximum pairwise distance among the graze's contact points.
pub fn graze_diameter(graze: &Graze) -> Result<f64> {
    let pts = &graze.contacts;
    if pts.len() < 2 {
        return Err(GeomError::InvalidInput("graze diameter needs at least two contacts"));
    }
    let mut best = 0.0f64;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            best = best.max(linalg::dist(&pts[i].point, &pts[j].point));
        }
    }
    Ok(best)
}

/// Projective direction set of the support double-cone spanned by the graze.
pub fn direction_set(graze: &Graze) -> Result<DoubleCone> {
    let n = graze.dim();
    let mut dirs = Vec::with_capacity(graze.contacts.len() * n);
    for c in &graze.contacts {
        let ray = linalg::sub(&c.point, &graze.apex);
        if linalg::norm(&ray) < 1e-12 {
            return Err(GeomError::GeometryInconsistent("contact point coincides with the apex"));
        }
        let d = linalg::canonicalize_line(&linalg::normalized(&ray)?);
        dirs.extend_from_slice(&d);
    }
    Ok(DoubleCone { apex: graze.apex.clone(), dim: n, dirs })
}

/// Symmetric Hausdorff distance between the projective direction sets,
/// with the line metric `d(u, v) = min(angle(u, v), angle(u, -v))`.
/// Zero exactly when one cone is a translate of the other (up to sampling).
pub fn cone_translation_distance(a: &DoubleCone, b: &DoubleCone) -> Result<f64> {
    if a.dim != b.dim {
        return Err(GeomError::InvalidInput("cone dimension mismatch"));
    }
    if a.count() == 0 || b.count() == 0 {
        return Err(GeomError::InvalidInput("empty direction set"));
    }
    Ok(directed_hausdorff(a, b).max(directed_hausdorff(b, a)))
}

fn directed_hausdorff(a: &DoubleCone, b: &DoubleCone) -> f64 {
    let mut worst = 0.0f64;
    for u in a.directions() {
        // nearest neighbour by |<u, v>|, exact angle only for the winner
        let mut best_dot = -1.0;
        let mut best = b.direction(0);
        for v in b.directions() {
            let d = linalg::dot(u, v).abs();
            if d > best_dot {
                best_dot = d;
                best = v;
            }
        }
        worst = worst.max(linalg::projective_angle(u, best));
    }
    worst
}

/// Does the full line `{ base + t * dir }` meet the body?
///
/// The line misses the body exactly when some direction orthogonal to `dir`
/// separates them; the test scans `probes` such directions and certifies a
/// miss on the first negative gap. Used to restrict partner candidates to
/// apexes inside the solid double-cone.
pub fn line_meets_body(body: &ConvexBody, base: &[f64], dir: &[f64], probes: usize) -> bool {
    let Ok(axis) = linalg::normalized(dir) else {
        return false;
    };
    let frame = linalg::orthonormal_frame(&axis);
    let vs = if frame.len() == 1 {
        vec![frame[0].clone(), linalg::neg(&frame[0])]
    } else {
        grid::azimuth_directions(&frame, probes)
    };
    for v in &vs {
        if body.support_raw(v) - linalg::dot(v, base) < 0.0 {
            return false;
        }
    }
    true
}
