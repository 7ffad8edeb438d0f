//! Small dense vector/matrix helpers over `f64` slices.
//!
//! Everything here is dimension-generic and allocation-light; hot loops
//! (support evaluations inside bisections) only ever call the slice
//! routines, which do not allocate.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

pub fn norm_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(norm_sq(a))
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for i in 0..a.len() {
        let d = a[i] - b[i];
        s += d * d;
    }
    libm::sqrt(s)
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[f64], t: f64) -> Vec<f64> {
    a.iter().map(|x| x * t).collect()
}

/// `a + t * b`.
pub fn axpy(a: &[f64], t: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * y).collect()
}

pub fn neg(a: &[f64]) -> Vec<f64> {
    a.iter().map(|x| -x).collect()
}

pub fn midpoint(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| 0.5 * (x + y)).collect()
}

pub fn normalized(a: &[f64]) -> Result<Vec<f64>> {
    let n = norm(a);
    if n < 1e-300 {
        return Err(GeomError::InvalidInput("zero vector"));
    }
    Ok(scale(a, 1.0 / n))
}

/// Angle between unit vectors, accurate near 0 and near pi.
///
/// Uses 2 asin(|u - v| / 2), which keeps full precision for nearly equal
/// vectors where acos of the dot product loses half the mantissa.
pub fn unit_angle(u: &[f64], v: &[f64]) -> f64 {
    let d = dist(u, v);
    if d <= 1.0 {
        2.0 * libm::asin(0.5 * d)
    } else {
        // obtuse: measure from the antipode for accuracy near pi
        let mut s = 0.0;
        for i in 0..u.len() {
            let t = u[i] + v[i];
            s += t * t;
        }
        core::f64::consts::PI - 2.0 * libm::asin((0.5 * libm::sqrt(s)).min(1.0))
    }
}

/// Angle between the *lines* spanned by unit vectors: min(angle(u,v), angle(u,-v)).
pub fn projective_angle(u: &[f64], v: &[f64]) -> f64 {
    let mut dm = 0.0;
    let mut dp = 0.0;
    for i in 0..u.len() {
        let m = u[i] - v[i];
        let p = u[i] + v[i];
        dm += m * m;
        dp += p * p;
    }
    let d = libm::sqrt(dm.min(dp));
    2.0 * libm::asin((0.5 * d).min(1.0))
}

/// Sign that makes the first coordinate of `v` with |v_i| > 1e-12 positive.
pub fn canonical_sign(v: &[f64]) -> f64 {
    for &c in v {
        if c.abs() > 1e-12 {
            return if c < 0.0 { -1.0 } else { 1.0 };
        }
    }
    1.0
}

/// Canonical representative of the line spanned by `v`.
pub fn canonicalize_line(v: &[f64]) -> Vec<f64> {
    scale(v, canonical_sign(v))
}

/// Deterministic orthonormal basis of the hyperplane orthogonal to `axis`.
///
/// The basis depends only on the *line* spanned by the axis (the axis is
/// canonicalized first), so antipodal axes produce the same frame. That is
/// what lets two translation-congruent cones be sampled at identical
/// azimuths regardless of which end of the axis each apex sees.
pub fn orthonormal_frame(axis: &[f64]) -> Vec<Vec<f64>> {
    let n = axis.len();
    let a = canonicalize_line(axis);
    // seed Gram-Schmidt with the standard basis, least-aligned axis first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i].abs()
            .partial_cmp(&a[j].abs())
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });
    let mut frame: Vec<Vec<f64>> = Vec::with_capacity(n - 1);
    for &k in &order {
        if frame.len() == n - 1 {
            break;
        }
        let mut v = vec![0.0; n];
        v[k] = 1.0;
        let t = dot(&v, &a);
        for i in 0..n {
            v[i] -= t * a[i];
        }
        for b in &frame {
            let t = dot(&v, b);
            for i in 0..n {
                v[i] -= t * b[i];
            }
        }
        let len = norm(&v);
        if len > 1e-8 {
            for x in v.iter_mut() {
                *x /= len;
            }
            frame.push(v);
        }
    }
    debug_assert_eq!(frame.len(), n - 1);
    frame
}

/// Spherical interpolation between unit vectors, `t` in [0, 1].
///
/// Requires the endpoints not to be antipodal; callers route antipodal
/// pairs through an intermediate direction.
pub fn slerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    let omega = unit_angle(a, b);
    if omega < 1e-12 {
        return normalized(&axpy(&scale(a, 1.0 - t), t, b)).unwrap_or_else(|_| a.to_vec());
    }
    let so = libm::sin(omega);
    let ca = libm::sin((1.0 - t) * omega) / so;
    let cb = libm::sin(t * omega) / so;
    let v = axpy(&scale(a, ca), cb, b);
    normalized(&v).unwrap_or_else(|_| a.to_vec())
}

/// Row-major matrix-vector product.
pub fn mat_vec(m: &[f64], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    debug_assert_eq!(m.len(), n * n);
    let mut y = vec![0.0; n];
    for i in 0..n {
        y[i] = dot(&m[i * n..(i + 1) * n], x);
    }
    y
}

/// Quadratic form x^T M x for a row-major n x n matrix.
pub fn quad_form(m: &[f64], x: &[f64]) -> f64 {
    let n = x.len();
    let mut s = 0.0;
    for i in 0..n {
        s += x[i] * dot(&m[i * n..(i + 1) * n], x);
    }
    s
}

/// Solve `A x = b` in place by Gaussian elimination with partial pivoting.
///
/// `a` is row-major n x n and is consumed. Fails on (near-)singular systems.
pub fn solve_dense(mut a: Vec<f64>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    if a.len() != n * n {
        return Err(GeomError::InvalidInput("matrix/vector size mismatch"));
    }
    let mut scale_max = 0.0f64;
    for &v in &a {
        scale_max = scale_max.max(v.abs());
    }
    if scale_max == 0.0 {
        return Err(GeomError::DegenerateSamples);
    }
    for col in 0..n {
        let mut piv = col;
        for row in (col + 1)..n {
            if a[row * n + col].abs() > a[piv * n + col].abs() {
                piv = row;
            }
        }
        if a[piv * n + col].abs() < 1e-13 * scale_max {
            return Err(GeomError::DegenerateSamples);
        }
        if piv != col {
            for k in 0..n {
                a.swap(col * n + k, piv * n + k);
            }
            b.swap(col, piv);
        }
        let d = a[col * n + col];
        for row in (col + 1)..n {
            let f = a[row * n + col] / d;
            if f != 0.0 {
                for k in col..n {
                    a[row * n + k] -= f * a[col * n + k];
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = b[i];
        for k in (i + 1)..n {
            s -= a[i * n + k] * x[k];
        }
        x[i] = s / a[i * n + i];
    }
    Ok(x)
}

/// Invert a small dense matrix (row-major) by column-wise solves.
pub fn invert(a: &[f64], n: usize) -> Result<Vec<f64>> {
    let mut inv = vec![0.0; n * n];
    for col in 0..n {
        let mut e = vec![0.0; n];
        e[col] = 1.0;
        let x = solve_dense(a.to_vec(), e)?;
        for row in 0..n {
            inv[row * n + col] = x[row];
        }
    }
    Ok(inv)
}

/// Cholesky test for symmetric positive definiteness. Returns false when a
/// pivot drops below a tiny multiple of the diagonal scale.
pub fn is_positive_definite(a: &[f64], n: usize) -> bool {
    let mut l = a.to_vec();
    let mut scale_max = 0.0f64;
    for i in 0..n {
        scale_max = scale_max.max(l[i * n + i].abs());
    }
    if scale_max == 0.0 {
        return false;
    }
    for j in 0..n {
        let mut d = l[j * n + j];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d <= 1e-14 * scale_max {
            return false;
        }
        let dj = libm::sqrt(d);
        l[j * n + j] = dj;
        for i in (j + 1)..n {
            let mut s = l[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / dj;
        }
    }
    true
}

pub fn is_symmetric(a: &[f64], n: usize, tol: f64) -> bool {
    let mut scale_max = 0.0f64;
    for &v in a {
        scale_max = scale_max.max(v.abs());
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (a[i * n + j] - a[j * n + i]).abs() > tol * scale_max.max(1.0) {
                return false;
            }
        }
    }
    true
}

/// Distance from `p` to the segment [a, b].
pub fn point_segment_distance(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let ab = sub(b, a);
    let ap = sub(p, a);
    let denom = norm_sq(&ab);
    if denom < 1e-300 {
        return norm(&ap);
    }
    let t = (dot(&ap, &ab) / denom).clamp(0.0, 1.0);
    dist(p, &axpy(a, t, &ab))
}
