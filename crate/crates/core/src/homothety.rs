//! Correspondence of graze points across a translate-congruent cone pair
//! and least-squares homothety fitting.
//!
//! For translate-congruent double-cones the tangent normal sets satisfy
//! `U_y = -U_x`, so pairing the contact touched by the hyperplane with
//! normal `u` through `x` with the contact of the parallel hyperplane with
//! normal `-u` through `y` is canonical and needs no registration step.

use alloc::vec::Vec;

use crate::body::ConvexBody;
use crate::cone::{self, Graze};
use crate::error::{GeomError, Result};
use crate::linalg;

/// Contact pairs `(k, l)` corresponded through opposite normals.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorrespondedPair {
    pub apex_x: Vec<f64>,
    pub apex_y: Vec<f64>,
    /// Shared normal per pair: `k` is touched by the plane with normal
    /// `u` through `apex_x`, `l` by the parallel plane with normal `-u`
    /// through `apex_y`.
    pub normals: Vec<Vec<f64>>,
    pub pairs: Vec<(Vec<f64>, Vec<f64>)>,
}

/// A fitted homothety `z -> c + ratio * (z - c)`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HomothetyFit {
    /// Signed ratio; negative means an inverse homothety.
    pub ratio: f64,
    pub center: Vec<f64>,
    /// Root-mean-square fit error (length units).
    pub residual: f64,
}

/// Build the corresponded pairs for apexes `x`, `y` whose cones are
/// translation-congruent within `tol`; fails with the measured distance
/// otherwise.
pub fn paired_graze(
    body: &ConvexBody,
    x: &[f64],
    y: &[f64],
    meridians: usize,
    tol: f64,
) -> Result<CorrespondedPair> {
    let graze_x = cone::graze(body, x, meridians)?;
    let graze_y = cone::graze(body, y, meridians)?;
    let distance = cone::cone_translation_distance(
        &cone::direction_set(&graze_x)?,
        &cone::direction_set(&graze_y)?,
    )?;
    if distance.is_nan() || distance >= tol {
        return Err(GeomError::NotCongruent { distance });
    }
    pair_from_graze(body, &graze_x, y)
}

/// Same pairing, reusing an already extracted graze of `x`.
pub fn pair_from_graze(body: &ConvexBody, graze_x: &Graze, y: &[f64]) -> Result<CorrespondedPair> {
    let mut normals = Vec::with_capacity(graze_x.contacts.len());
    let mut pairs = Vec::with_capacity(graze_x.contacts.len());
    for c in &graze_x.contacts {
        let opposite = linalg::neg(&c.normal);
        let l = body.support_gradient_raw(&opposite);
        normals.push(c.normal.clone());
        pairs.push((c.point.clone(), l));
    }
    Ok(CorrespondedPair {
        apex_x: graze_x.apex.clone(),
        apex_y: y.to_vec(),
        normals,
        pairs,
    })
}

/// Sine of the angle between the chords `k1 k2` and `l1 l2`, orientation
/// removed (range [0, 1]; zero iff the chords are parallel).
pub fn parallel_defect(k1: &[f64], k2: &[f64], l1: &[f64], l2: &[f64]) -> Result<f64> {
    let a = linalg::sub(k2, k1);
    let b = linalg::sub(l2, l1);
    let na = linalg::norm(&a);
    let nb = linalg::norm(&b);
    if na < 1e-14 || nb < 1e-14 {
        return Err(GeomError::DegenerateChord);
    }
    let ua = linalg::scale(&a, 1.0 / na);
    let ub = linalg::scale(&b, 1.0 / nb);
    // chordal form keeps precision near 0 where 1 - cos^2 would not
    let mut dm = 0.0;
    let mut dp = 0.0;
    for i in 0..ua.len() {
        let m = ua[i] - ub[i];
        let p = ua[i] + ub[i];
        dm += m * m;
        dp += p * p;
    }
    let t = libm::sqrt(dm.min(dp));
    Ok((t * libm::sqrt((1.0 - 0.25 * t * t).max(0.0))).min(1.0))
}

/// Least-squares homothety through the corresponded pairs: minimizes
/// `sum ||l - ratio * k - b||^2` over the linear parametrization
/// `l = ratio * k + b`, then recovers the center as `b / (1 - ratio)`.
pub fn homothety_fit(pair: &CorrespondedPair) -> Result<HomothetyFit> {
    fit_point_pairs(&pair.pairs)
}

/// The underlying fit over raw `(k, l)` point pairs.
pub fn fit_point_pairs(pts: &[(Vec<f64>, Vec<f64>)]) -> Result<HomothetyFit> {
    if pts.len() < 3 {
        return Err(GeomError::DegenerateConfiguration);
    }
    let n = pts[0].0.len();
    let count = pts.len() as f64;
    let mut k_mean = alloc::vec![0.0; n];
    let mut l_mean = alloc::vec![0.0; n];
    for (k, l) in pts {
        for i in 0..n {
            k_mean[i] += k[i];
            l_mean[i] += l[i];
        }
    }
    for i in 0..n {
        k_mean[i] /= count;
        l_mean[i] /= count;
    }

    let mut cov = 0.0;
    let mut var = 0.0;
    for (k, l) in pts {
        for i in 0..n {
            let dk = k[i] - k_mean[i];
            cov += dk * (l[i] - l_mean[i]);
            var += dk * dk;
        }
    }
    let spread = libm::sqrt(var / count);
    if spread < 1e-12 {
        return Err(GeomError::DegenerateConfiguration);
    }
    if collinear(pts, &k_mean, spread) {
        return Err(GeomError::DegenerateConfiguration);
    }

    let ratio = cov / var;
    if (1.0 - ratio).abs() < 1e-9 {
        return Err(GeomError::TranslationNotHomothety);
    }
    let shift = linalg::axpy(&l_mean, -ratio, &k_mean);
    let center = linalg::scale(&shift, 1.0 / (1.0 - ratio));

    let mut sq = 0.0;
    for (k, l) in pts {
        for i in 0..n {
            let r = l[i] - ratio * k[i] - shift[i];
            sq += r * r;
        }
    }
    Ok(HomothetyFit { ratio, center, residual: libm::sqrt(sq / count) })
}

fn collinear(pts: &[(Vec<f64>, Vec<f64>)], k_mean: &[f64], spread: f64) -> bool {
    // principal direction from the most deviant point, then check the rest
    let mut axis: Option<Vec<f64>> = None;
    let mut best = 0.0;
    for (k, _) in pts {
        let d = linalg::dist(k, k_mean);
        if d > best {
            best = d;
            axis = Some(linalg::scale(&linalg::sub(k, k_mean), 1.0 / d));
        }
    }
    let Some(axis) = axis else { return true };
    for (k, _) in pts {
        let dev = linalg::sub(k, k_mean);
        let off = linalg::axpy(&dev, -linalg::dot(&dev, &axis), &axis);
        if linalg::norm(&off) > 1e-10 * spread.max(1.0) {
            return false;
        }
    }
    true
}

/// Certificate for a cone pair: the fit must be a point reflection
/// (`ratio = -1`) centered at the midpoint of the apexes.
pub fn unit_inverse_check(
    fit: &HomothetyFit,
    x: &[f64],
    y: &[f64],
    tol: f64,
) -> (bool, f64) {
    let center_defect = linalg::dist(&fit.center, &linalg::midpoint(x, y));
    let pass = (fit.ratio + 1.0).abs() < tol && center_defect < tol;
    (pass, center_defect)
}
