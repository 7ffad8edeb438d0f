//! Smooth strictly convex bodies represented by their support functions.
//!
//! A body is fully described by `h(u) = max { <u, k> : k in K }`; the
//! contact point of the supporting hyperplane with outward normal `u` is the
//! gradient of `h` at `u`. All three supported kinds (ellipsoids, lp balls
//! with `1 < p < inf`, Minkowski sums of those) have closed-form support
//! functions and gradients.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::grid;
use crate::linalg;

/// Direction sample size used by the symmetry certificates by default.
pub const DEFAULT_DIRECTION_SAMPLES: usize = 512;

/// Hyperplane `{ x : <u, x> = s }` with unit normal `u`.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Hyperplane {
    pub normal: Vec<f64>,
    pub offset: f64,
}

impl Hyperplane {
    pub fn new(normal: Vec<f64>, offset: f64) -> Result<Self> {
        if (linalg::norm(&normal) - 1.0).abs() > 1e-12 {
            return Err(GeomError::InvalidInput("hyperplane normal must be unit"));
        }
        Ok(Hyperplane { normal, offset })
    }

    /// Signed evaluation `<u, x> - s`; negative on the inner half-space.
    pub fn eval(&self, x: &[f64]) -> f64 {
        linalg::dot(&self.normal, x) - self.offset
    }
}

#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Ellipsoid {
    dim: usize,
    /// Row-major symmetric positive definite shape matrix (length^2 units).
    matrix: Vec<f64>,
    /// Inverse shape matrix; `{ k : (k-c)^T A^-1 (k-c) <= 1 }` is the body.
    matrix_inv: Vec<f64>,
    center: Vec<f64>,
}

impl Ellipsoid {
    pub fn shape_matrix(&self) -> &[f64] {
        &self.matrix
    }

    /// Inverse shape matrix `Q`; the graze from apex `x` lies on the polar
    /// hyperplane `{ k : (k - c)^T Q (x - c) = 1 }`.
    pub fn shape_inverse(&self) -> &[f64] {
        &self.matrix_inv
    }
}

#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LpBall {
    dim: usize,
    p: f64,
    /// Dual exponent, `1/p + 1/q = 1`.
    q: f64,
    radius: f64,
    center: Vec<f64>,
}

impl LpBall {
    pub fn exponent(&self) -> f64 {
        self.p
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

/// A smooth strictly convex body.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ConvexBody {
    Ellipsoid(Ellipsoid),
    LpBall(LpBall),
    MinkowskiSum(Vec<ConvexBody>),
}

impl ConvexBody {
    /// Ellipsoid `{ c + k : k^T A^-1 k <= 1 }` from its shape matrix `A`
    /// (row-major n x n, symmetric positive definite).
    pub fn ellipsoid(matrix: Vec<f64>, center: Vec<f64>) -> Result<Self> {
        let n = center.len();
        if n < 2 {
            return Err(GeomError::UnsupportedDimension(n));
        }
        if matrix.len() != n * n {
            return Err(GeomError::InvalidInput("shape matrix must be n x n"));
        }
        if !linalg::is_symmetric(&matrix, n, 1e-12) {
            return Err(GeomError::InvalidInput("shape matrix must be symmetric"));
        }
        if !linalg::is_positive_definite(&matrix, n) {
            return Err(GeomError::InvalidInput("shape matrix must be positive definite"));
        }
        let matrix_inv = linalg::invert(&matrix, n)?;
        Ok(ConvexBody::Ellipsoid(Ellipsoid { dim: n, matrix, matrix_inv, center }))
    }

    /// lp ball of radius `r`. Strict convexity and smoothness require
    /// `1 < p < inf`; both endpoints are rejected.
    pub fn lp_ball(p: f64, radius: f64, center: Vec<f64>) -> Result<Self> {
        let n = center.len();
        if n < 2 {
            return Err(GeomError::UnsupportedDimension(n));
        }
        if !p.is_finite() || p <= 1.0 {
            return Err(GeomError::InvalidInput("lp exponent must satisfy 1 < p < inf"));
        }
        if !radius.is_finite() || radius <= 0.0 {
            return Err(GeomError::InvalidInput("radius must be positive"));
        }
        let q = p / (p - 1.0);
        Ok(ConvexBody::LpBall(LpBall { dim: n, p, q, radius, center }))
    }

    /// Euclidean ball (`p = 2`).
    pub fn ball(radius: f64, center: Vec<f64>) -> Result<Self> {
        Self::lp_ball(2.0, radius, center)
    }

    pub fn minkowski_sum(summands: Vec<ConvexBody>) -> Result<Self> {
        let Some(first) = summands.first() else {
            return Err(GeomError::InvalidInput("Minkowski sum needs at least one summand"));
        };
        let n = first.dim();
        if summands.iter().any(|b| b.dim() != n) {
            return Err(GeomError::InvalidInput("Minkowski summands must share a dimension"));
        }
        Ok(ConvexBody::MinkowskiSum(summands))
    }

    pub fn dim(&self) -> usize {
        match self {
            ConvexBody::Ellipsoid(e) => e.dim,
            ConvexBody::LpBall(b) => b.dim,
            ConvexBody::MinkowskiSum(s) => s[0].dim(),
        }
    }

    /// Natural center: the symmetry center of each summand's own kind.
    pub fn center(&self) -> Vec<f64> {
        match self {
            ConvexBody::Ellipsoid(e) => e.center.clone(),
            ConvexBody::LpBall(b) => b.center.clone(),
            ConvexBody::MinkowskiSum(s) => {
                let mut c = vec![0.0; self.dim()];
                for b in s {
                    let cb = b.center();
                    for i in 0..c.len() {
                        c[i] += cb[i];
                    }
                }
                c
            }
        }
    }

    /// Support function `h(u)`; positively homogeneous of degree 1 in `u`.
    pub fn support(&self, u: &[f64]) -> Result<f64> {
        self.check_direction(u)?;
        Ok(self.support_raw(u))
    }

    pub(crate) fn support_raw(&self, u: &[f64]) -> f64 {
        match self {
            ConvexBody::Ellipsoid(e) => {
                libm::sqrt(linalg::quad_form(&e.matrix, u).max(0.0)) + linalg::dot(&e.center, u)
            }
            ConvexBody::LpBall(b) => b.radius * b.dual_norm(u) + linalg::dot(&b.center, u),
            ConvexBody::MinkowskiSum(s) => s.iter().map(|b| b.support_raw(u)).sum(),
        }
    }

    /// Contact point of the supporting hyperplane with outward normal `u`:
    /// the unique boundary point `k` with `<k, u> = h(u)`.
    pub fn support_gradient(&self, u: &[f64]) -> Result<Vec<f64>> {
        self.check_direction(u)?;
        Ok(self.support_gradient_raw(u))
    }

    pub(crate) fn support_gradient_raw(&self, u: &[f64]) -> Vec<f64> {
        match self {
            ConvexBody::Ellipsoid(e) => {
                let au = linalg::mat_vec(&e.matrix, u);
                let s = libm::sqrt(linalg::quad_form(&e.matrix, u).max(1e-300));
                let mut k = linalg::scale(&au, 1.0 / s);
                for (ki, ci) in k.iter_mut().zip(&e.center) {
                    *ki += ci;
                }
                k
            }
            ConvexBody::LpBall(b) => {
                let nq = b.dual_norm(u).max(1e-300);
                let mut k = Vec::with_capacity(b.dim);
                for (i, &ui) in u.iter().enumerate() {
                    let g = if (b.q - 2.0).abs() < 1e-14 {
                        ui / nq
                    } else {
                        libm::pow(ui.abs() / nq, b.q - 1.0).copysign(ui)
                    };
                    k.push(b.radius * g + b.center[i]);
                }
                k
            }
            ConvexBody::MinkowskiSum(s) => {
                let mut k = vec![0.0; self.dim()];
                for b in s {
                    let kb = b.support_gradient_raw(u);
                    for i in 0..k.len() {
                        k[i] += kb[i];
                    }
                }
                k
            }
        }
    }

    /// Largest separation `<u, x> - h(u)` over the probe directions.
    /// A positive value certifies that `x` lies outside the body.
    pub(crate) fn separation(&self, x: &[f64], probes: &[Vec<f64>]) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for u in probes {
            best = best.max(linalg::dot(u, x) - self.support_raw(u));
        }
        best
    }

    fn check_direction(&self, u: &[f64]) -> Result<()> {
        if u.len() != self.dim() {
            return Err(GeomError::InvalidInput("direction dimension mismatch"));
        }
        if linalg::norm_sq(u) < 1e-300 {
            return Err(GeomError::InvalidInput("zero direction"));
        }
        Ok(())
    }
}

impl LpBall {
    /// Dual norm `||u||_q`; the Euclidean case avoids `pow`.
    fn dual_norm(&self, u: &[f64]) -> f64 {
        if (self.q - 2.0).abs() < 1e-14 {
            return linalg::norm(u);
        }
        let mut s = 0.0;
        for &ui in u {
            s += libm::pow(ui.abs(), self.q);
        }
        libm::pow(s, 1.0 / self.q)
    }
}

/// Max over `samples` of `|h(u) - h(-u) - 2 <c, u>|`: zero exactly when the
/// body is centrally symmetric about `c` on those directions.
pub fn central_asymmetry(body: &ConvexBody, c: &[f64], samples: &[Vec<f64>]) -> Result<f64> {
    if samples.is_empty() {
        return Err(GeomError::InvalidInput("empty direction sample"));
    }
    let mut worst = 0.0f64;
    for u in samples {
        let h_pos = body.support(u)?;
        let h_neg = body.support_raw(&linalg::neg(u));
        worst = worst.max((h_pos - h_neg - 2.0 * linalg::dot(c, u)).abs());
    }
    Ok(worst)
}

/// Least-squares center from the odd part of the support function,
/// inverting `h(u) - h(-u) = 2 <c, u>`.
pub fn estimate_center(body: &ConvexBody, samples: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = body.dim();
    if samples.len() < n {
        return Err(GeomError::DegenerateSamples);
    }
    let mut gram = vec![0.0; n * n];
    let mut rhs = vec![0.0; n];
    for u in samples {
        let h_pos = body.support(u)?;
        let h_neg = body.support_raw(&linalg::neg(u));
        let odd = 0.5 * (h_pos - h_neg);
        for (i, &ui) in u.iter().enumerate() {
            rhs[i] += ui * odd;
            for (j, &uj) in u.iter().enumerate() {
                gram[i * n + j] += ui * uj;
            }
        }
    }
    linalg::solve_dense(gram, rhs)
}

/// The fixed deterministic direction sample the certificates default to.
pub fn default_direction_sample(dim: usize) -> Vec<Vec<f64>> {
    grid::unit_directions(dim, DEFAULT_DIRECTION_SAMPLES, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn diag3(a: f64, b: f64, c: f64) -> Vec<f64> {
        vec![a, 0.0, 0.0, 0.0, b, 0.0, 0.0, 0.0, c]
    }

    #[test]
    fn ellipsoid_axis_support() {
        let e = ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.0; 3]).unwrap();
        assert!((e.support(&[1.0, 0.0, 0.0]).unwrap() - 2.0).abs() < 1e-15);
        let k = e.support_gradient(&[1.0, 0.0, 0.0]).unwrap();
        assert!(linalg::dist(&k, &[2.0, 0.0, 0.0]) < 1e-15);
    }

    #[test]
    fn ellipsoid_oblique_gradient_matches_formula() {
        // frozen from A u / sqrt(u^T A u) at u = (1,1,0)/sqrt(2)
        let e = ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.0; 3]).unwrap();
        let u = linalg::normalized(&[1.0, 1.0, 0.0]).unwrap();
        let k = e.support_gradient(&u).unwrap();
        let s5 = libm::sqrt(5.0);
        assert!(linalg::dist(&k, &[4.0 / s5, 1.0 / s5, 0.0]) < 1e-12);
    }

    #[test]
    fn unit_ball_support_is_radius() {
        let b = ConvexBody::ball(1.0, vec![0.0; 3]).unwrap();
        for u in grid::unit_directions(3, 32, 0.0) {
            assert!((b.support(&u).unwrap() - 1.0).abs() < 1e-12);
        }
        let k = b.support_gradient(&[0.0, 0.0, 1.0]).unwrap();
        assert!(linalg::dist(&k, &[0.0, 0.0, 1.0]) < 1e-15);
    }

    #[test]
    fn minkowski_support_is_additive() {
        let sum = ConvexBody::minkowski_sum(vec![
            ConvexBody::ball(1.0, vec![0.0; 3]).unwrap(),
            ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.0; 3]).unwrap(),
        ])
        .unwrap();
        assert!((sum.support(&[1.0, 0.0, 0.0]).unwrap() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn construction_guards() {
        assert!(ConvexBody::lp_ball(1.0, 1.0, vec![0.0; 3]).is_err());
        assert!(ConvexBody::lp_ball(f64::INFINITY, 1.0, vec![0.0; 3]).is_err());
        assert!(ConvexBody::lp_ball(4.0, -1.0, vec![0.0; 3]).is_err());
        assert!(ConvexBody::ellipsoid(diag3(1.0, -1.0, 1.0), vec![0.0; 3]).is_err());
        let asym = vec![1.0, 0.5, 0.0, -0.5, 1.0, 0.0, 0.0, 0.0, 1.0];
        assert!(ConvexBody::ellipsoid(asym, vec![0.0; 3]).is_err());
        assert!(ConvexBody::minkowski_sum(vec![]).is_err());
        let b = ConvexBody::ball(1.0, vec![0.0; 3]).unwrap();
        assert!(b.support(&[0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn hyperplane_normal_must_be_unit() {
        assert!(Hyperplane::new(vec![1.0, 0.0, 0.0], 2.0).is_ok());
        assert!(Hyperplane::new(vec![1.0, 1.0, 0.0], 2.0).is_err());
        let h = Hyperplane::new(vec![0.0, 0.0, 1.0], 1.5).unwrap();
        assert!((h.eval(&[7.0, -2.0, 2.0]) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn asymmetry_of_shifted_bodies() {
        let dirs = default_direction_sample(3);
        let e = ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![1.0, 2.0, 3.0]).unwrap();
        assert!(central_asymmetry(&e, &[1.0, 2.0, 3.0], &dirs).unwrap() < 1e-12);

        // about the origin the shifted ellipsoid has odd part 2 <c0, u>
        let shifted = ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![1.0, 0.0, 0.0]).unwrap();
        let axis_dirs = vec![vec![1.0, 0.0, 0.0], vec![-1.0, 0.0, 0.0]];
        let a = central_asymmetry(&shifted, &[0.0; 3], &axis_dirs).unwrap();
        assert!((a - 2.0).abs() < 1e-12);

        let ball = ConvexBody::ball(1.0, vec![0.0; 3]).unwrap();
        let a = central_asymmetry(&ball, &[0.5, 0.0, 0.0], &axis_dirs).unwrap();
        assert!((a - 1.0).abs() < 1e-12);
    }

    #[test]
    fn center_estimation_recovers_exact_centers() {
        let dirs = default_direction_sample(3);
        let e = ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![1.0, 2.0, 3.0]).unwrap();
        let c = estimate_center(&e, &dirs).unwrap();
        assert!(linalg::dist(&c, &[1.0, 2.0, 3.0]) < 1e-9);

        let ball = ConvexBody::ball(1.0, vec![0.0; 3]).unwrap();
        assert!(linalg::norm(&estimate_center(&ball, &dirs).unwrap()) < 1e-9);

        let sum = ConvexBody::minkowski_sum(vec![
            ConvexBody::ball(1.0, vec![1.0, 0.0, 0.0]).unwrap(),
            ConvexBody::ball(1.0, vec![-1.0, 0.0, 0.0]).unwrap(),
        ])
        .unwrap();
        assert!(linalg::norm(&estimate_center(&sum, &dirs).unwrap()) < 1e-9);
    }

    #[test]
    fn center_estimation_rejects_planar_samples() {
        let ball = ConvexBody::ball(1.0, vec![0.0; 3]).unwrap();
        let planar: Vec<Vec<f64>> = grid::unit_directions(2, 16, 0.0)
            .into_iter()
            .map(|d| vec![d[0], d[1], 0.0])
            .collect();
        assert_eq!(estimate_center(&ball, &planar), Err(GeomError::DegenerateSamples));
    }

    #[test]
    fn support_homogeneity() {
        let bodies = [
            ConvexBody::ellipsoid(diag3(4.0, 1.0, 1.0), vec![0.3, -0.2, 0.1]).unwrap(),
            ConvexBody::lp_ball(4.0, 1.5, vec![0.0; 3]).unwrap(),
        ];
        for body in &bodies {
            for u in grid::unit_directions(3, 64, 0.0) {
                let h = body.support(&u).unwrap();
                for t in [0.25, 3.0, 117.0] {
                    let ht = body.support(&linalg::scale(&u, t)).unwrap();
                    assert!((ht - t * h).abs() <= 1e-10 * (t * h).abs().max(1e-30));
                }
            }
        }
    }
}
