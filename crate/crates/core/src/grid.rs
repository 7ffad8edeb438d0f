//! Deterministic low-discrepancy direction grids on unit spheres.

use alloc::vec;
use alloc::vec::Vec;

/// Golden angle, used by the Fibonacci sphere lattice.
const GOLDEN_ANGLE: f64 = 2.399963229728653; // pi * (3 - sqrt 5)

/// Map an integer seed to a grid phase in [0, 2pi).
///
/// Grids with different seeds are rotated copies of each other; the same
/// seed always reproduces the same grid.
pub fn seed_phase(seed: u64) -> f64 {
    const INV_PHI: f64 = 0.6180339887498949;
    let frac = (seed as f64 * INV_PHI) - libm::floor(seed as f64 * INV_PHI);
    frac * core::f64::consts::TAU
}

/// `count` unit directions in dimension `dim`, deterministic and stably
/// ordered. Fibonacci lattice for `dim == 3`, uniform circle for `dim == 2`,
/// Kronecker lattice through spherical angles otherwise.
pub fn unit_directions(dim: usize, count: usize, phase: f64) -> Vec<Vec<f64>> {
    assert!(dim >= 2, "direction grids need dimension >= 2");
    assert!(count >= 1);
    match dim {
        2 => (0..count)
            .map(|i| {
                let th = core::f64::consts::TAU * (i as f64) / (count as f64) + phase;
                vec![libm::cos(th), libm::sin(th)]
            })
            .collect(),
        3 => (0..count)
            .map(|i| {
                let z = 1.0 - (2.0 * i as f64 + 1.0) / count as f64;
                let r = libm::sqrt((1.0 - z * z).max(0.0));
                let th = GOLDEN_ANGLE * i as f64 + phase;
                vec![r * libm::cos(th), r * libm::sin(th), z]
            })
            .collect(),
        _ => {
            // Kronecker sequence mapped through polar angles; adequate
            // coverage for the generic-dimension paths.
            let alphas = kronecker_alphas(dim - 1);
            (0..count)
                .map(|i| {
                    let mut angles = Vec::with_capacity(dim - 1);
                    for (k, &al) in alphas.iter().enumerate() {
                        let x = i as f64 * al + phase / core::f64::consts::TAU;
                        let frac = x - libm::floor(x);
                        let full = if k == dim - 2 { core::f64::consts::TAU } else { core::f64::consts::PI };
                        angles.push(frac * full);
                    }
                    spherical_point(&angles)
                })
                .collect()
        }
    }
}

fn kronecker_alphas(k: usize) -> Vec<f64> {
    // powers of the plastic-number generalization of the golden ratio
    let mut phi = 2.0f64;
    for _ in 0..24 {
        phi = libm::pow(1.0 + phi, 1.0 / (k as f64 + 1.0));
    }
    let mut a = Vec::with_capacity(k);
    let mut p = 1.0;
    for _ in 0..k {
        p /= phi;
        a.push(p);
    }
    a
}

fn spherical_point(angles: &[f64]) -> Vec<f64> {
    let n = angles.len() + 1;
    let mut p = vec![0.0; n];
    let mut s = 1.0;
    for (i, &a) in angles.iter().enumerate() {
        p[i] = s * libm::cos(a);
        s *= libm::sin(a);
    }
    p[n - 1] = s;
    p
}

/// Azimuth directions on the unit sphere of the hyperplane spanned by
/// `frame` (an orthonormal basis of the space orthogonal to a cone axis).
///
/// The returned set is closed under negation whenever `count` is even,
/// which is what makes sampled direction sets of reflected cones coincide
/// exactly. In three dimensions this is the uniform circle grid of size
/// `count`; in higher dimensions a symmetric polar product grid of size
/// `count^(frame.len()-1)`.
pub fn azimuth_directions(frame: &[Vec<f64>], count: usize) -> Vec<Vec<f64>> {
    let k = frame.len();
    let n = frame[0].len();
    assert!(k >= 2, "azimuth grids need a frame of rank >= 2");
    azimuth_coefficients(k, count)
        .into_iter()
        .map(|coeffs| {
            let mut w = vec![0.0; n];
            for (c, b) in coeffs.iter().zip(frame) {
                for i in 0..n {
                    w[i] += c * b[i];
                }
            }
            w
        })
        .collect()
}

/// Unit coefficient vectors on the sphere of rank `k`, closed under
/// negation for even `count`; `count^(k-1)` entries via polar recursion.
fn azimuth_coefficients(k: usize, count: usize) -> Vec<Vec<f64>> {
    if k == 1 {
        return vec![vec![1.0], vec![-1.0]];
    }
    if k == 2 {
        return (0..count)
            .map(|j| {
                let phi = core::f64::consts::TAU * j as f64 / count as f64;
                vec![libm::cos(phi), libm::sin(phi)]
            })
            .collect();
    }
    // polar grid symmetric under psi -> pi - psi, sub-sphere by recursion
    let sub = azimuth_coefficients(k - 1, count);
    let mut out = Vec::with_capacity(count * sub.len());
    for i in 0..count {
        let psi = core::f64::consts::PI * i as f64 / (count as f64 - 1.0);
        let (c, s) = (libm::cos(psi), libm::sin(psi));
        for v in &sub {
            let mut coeffs = Vec::with_capacity(k);
            coeffs.push(c);
            coeffs.extend(v.iter().map(|x| s * x));
            out.push(coeffs);
        }
    }
    out
}
