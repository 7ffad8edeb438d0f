//! Star-shaped hypersurfaces: embedded spheres given by a radial graph.

use alloc::vec::Vec;

use crate::body::ConvexBody;
use crate::error::{GeomError, Result};
use crate::grid;
use crate::linalg;
use crate::neldermead::{self, SimplexOptions};

/// One multiplicative perturbation term `eps * prod_k omega_k^(e_k)`.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Perturbation {
    pub epsilon: f64,
    pub exponents: Vec<u32>,
}

/// Hypersurface `{ z0 + rho(omega) * omega }` with
/// `rho(omega) = R * (1 + sum_i eps_i * m_i(omega))` for monomials `m_i`.
///
/// A sphere is the unperturbed case. The radial graph gives the surface a
/// global parametrization by unit directions, which the partner search and
/// the path construction rely on.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StarSurface {
    center: Vec<f64>,
    radius: f64,
    perturbations: Vec<Perturbation>,
}

/// Grid size used for construction-time positivity and symmetry checks.
const CHECK_GRID: usize = 512;

impl StarSurface {
    pub fn sphere(radius: f64, center: Vec<f64>) -> Result<Self> {
        Self::new(radius, center, Vec::new())
    }

    pub fn new(radius: f64, center: Vec<f64>, perturbations: Vec<Perturbation>) -> Result<Self> {
        let n = center.len();
        if n < 2 {
            return Err(GeomError::UnsupportedDimension(n));
        }
        if !radius.is_finite() || radius <= 0.0 {
            return Err(GeomError::InvalidInput("surface radius must be positive"));
        }
        for p in &perturbations {
            if p.exponents.len() != n {
                return Err(GeomError::InvalidInput("perturbation exponent count must match dimension"));
            }
            if !p.epsilon.is_finite() {
                return Err(GeomError::InvalidInput("perturbation amplitude must be finite"));
            }
        }
        let surface = StarSurface { center, radius, perturbations };
        // radial positivity, checked on the construction grid
        for omega in grid::unit_directions(n, CHECK_GRID, 0.0) {
            if surface.radius_at(&omega) <= 0.0 {
                return Err(GeomError::InvalidInput("radial function must stay positive"));
            }
        }
        Ok(surface)
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn base_radius(&self) -> f64 {
        self.radius
    }

    /// Upper bound on the radial function over all directions.
    pub fn max_radius_bound(&self) -> f64 {
        let slack: f64 = self.perturbations.iter().map(|p| p.epsilon.abs()).sum();
        self.radius * (1.0 + slack)
    }

    /// Radius in direction `omega` (assumed unit).
    pub fn radius_at(&self, omega: &[f64]) -> f64 {
        let mut factor = 1.0;
        for p in &self.perturbations {
            let mut m = p.epsilon;
            for (w, &e) in omega.iter().zip(&p.exponents) {
                for _ in 0..e {
                    m *= w;
                }
            }
            factor += m;
        }
        self.radius * factor
    }

    /// Surface point `z0 + rho(omega) * omega`.
    pub fn point_at(&self, omega: &[f64]) -> Vec<f64> {
        linalg::axpy(&self.center, self.radius_at(omega), omega)
    }

    /// Unit direction from the radial center to `x`.
    pub fn direction_of(&self, x: &[f64]) -> Result<Vec<f64>> {
        linalg::normalized(&linalg::sub(x, &self.center))
    }

    /// `count` surface points on a deterministic low-discrepancy grid,
    /// stably ordered. `phase` rotates the grid (derived from a seed).
    pub fn sample_with_phase(&self, count: usize, phase: f64) -> Vec<Vec<f64>> {
        grid::unit_directions(self.dim(), count, phase)
            .into_iter()
            .map(|omega| self.point_at(&omega))
            .collect()
    }

    pub fn sample(&self, count: usize) -> Vec<Vec<f64>> {
        self.sample_with_phase(count, 0.0)
    }

    /// Max over the grid of the radial distance from the reflection
    /// `2c - point_at(omega)` back to the surface; zero iff the surface is
    /// centrally symmetric about `c` on the grid.
    pub fn symmetry_defect(&self, c: &[f64], grid_size: usize) -> Result<f64> {
        let mut worst = 0.0f64;
        for omega in grid::unit_directions(self.dim(), grid_size, 0.0) {
            worst = worst.max(self.reflection_defect(c, &omega)?);
        }
        Ok(worst)
    }

    fn reflection_defect(&self, c: &[f64], omega: &[f64]) -> Result<f64> {
        let p = self.point_at(omega);
        let reflected: Vec<f64> = c.iter().zip(&p).map(|(ci, pi)| 2.0 * ci - pi).collect();
        let radial = linalg::sub(&reflected, &self.center);
        let len = linalg::norm(&radial);
        if len < 1e-12 {
            return Err(GeomError::DegenerateReflection);
        }
        let dir = linalg::scale(&radial, 1.0 / len);
        Ok((len - self.radius_at(&dir)).abs())
    }

    /// Least-squares symmetry center, found by simplex descent on the mean
    /// square reflection defect starting from the radial center.
    pub fn estimate_center(&self, grid_size: usize) -> Result<Vec<f64>> {
        let dirs = grid::unit_directions(self.dim(), grid_size, 0.0);
        let objective = |c: &[f64]| -> f64 {
            let mut s = 0.0;
            for omega in &dirs {
                match self.reflection_defect(c, omega) {
                    Ok(d) => s += d * d,
                    Err(_) => s += 1e6,
                }
            }
            s / dirs.len() as f64
        };
        let start = self.center.clone();
        let r = neldermead::minimize(
            objective,
            &start,
            0.05 * self.radius,
            SimplexOptions { max_iter: 400, x_tol: 1e-12, f_tol: 0.0 },
        );
        Ok(r.x)
    }

    /// Verify `K` is strictly inside the surface: every sampled surface
    /// point clears the body and every sampled boundary point of the body
    /// stays radially inside by more than `clearance`.
    pub fn check_contains(
        &self,
        body: &ConvexBody,
        grid_size: usize,
        clearance: f64,
    ) -> Result<()> {
        if body.dim() != self.dim() {
            return Err(GeomError::InvalidInput("body and surface dimension mismatch"));
        }
        let probes = grid::unit_directions(self.dim(), 64, 0.0);
        for omega in grid::unit_directions(self.dim(), grid_size, 0.0) {
            let p = self.point_at(&omega);
            // cheap radial certificate first, then the probe sweep
            let radial = linalg::normalized(&linalg::sub(&p, &body.center()))?;
            let sep = (linalg::dot(&radial, &p) - body.support_raw(&radial))
                .max(body.separation(&p, &probes));
            if sep <= clearance {
                return Err(GeomError::GeometryInconsistent(
                    "surface point does not clear the body",
                ));
            }
            let k = body.support_gradient_raw(&omega);
            let radial_k = linalg::sub(&k, &self.center);
            let len = linalg::norm(&radial_k);
            if len >= 1e-12 {
                let dir = linalg::scale(&radial_k, 1.0 / len);
                if len >= self.radius_at(&dir) - clearance {
                    return Err(GeomError::GeometryInconsistent(
                        "body boundary reaches the surface",
                    ));
                }
            }
        }
        Ok(())
    }

    /// Great-circle path between the surface points in directions
    /// `omega_a`, `omega_b`, mapped through the radial graph.
    pub fn path(&self, omega_a: Vec<f64>, omega_b: Vec<f64>) -> Result<SurfacePath<'_>> {
        let a = linalg::normalized(&omega_a)?;
        let b = linalg::normalized(&omega_b)?;
        if a.len() != self.dim() || b.len() != self.dim() {
            return Err(GeomError::InvalidInput("path endpoint dimension mismatch"));
        }
        // antipodal endpoints have no unique great circle: route through a
        // deterministic waypoint orthogonal to the start direction
        let waypoint = if linalg::unit_angle(&a, &b) > core::f64::consts::PI - 1e-8 {
            Some(linalg::orthonormal_frame(&a).swap_remove(0))
        } else {
            None
        };
        Ok(SurfacePath { surface: self, omega_a: a, omega_b: b, waypoint })
    }
}

/// Continuous curve on the surface between two endpoint directions.
pub struct SurfacePath<'a> {
    surface: &'a StarSurface,
    omega_a: Vec<f64>,
    omega_b: Vec<f64>,
    waypoint: Option<Vec<f64>>,
}

impl SurfacePath<'_> {
    /// Direction at parameter `t` in [0, 1].
    pub fn direction_at(&self, t: f64) -> Vec<f64> {
        match &self.waypoint {
            None => linalg::slerp(&self.omega_a, &self.omega_b, t),
            Some(w) => {
                if t <= 0.5 {
                    linalg::slerp(&self.omega_a, w, 2.0 * t)
                } else {
                    linalg::slerp(w, &self.omega_b, 2.0 * t - 1.0)
                }
            }
        }
    }

    /// Surface point at parameter `t`.
    pub fn at(&self, t: f64) -> Vec<f64> {
        self.surface.point_at(&self.direction_at(t))
    }
}
