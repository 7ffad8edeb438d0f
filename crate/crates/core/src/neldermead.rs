//! Derivative-free simplex minimization (Nelder-Mead).
//!
//! Deterministic: given the same starting point, step and objective it
//! always visits the same sequence of simplices.

use alloc::vec::Vec;

use crate::linalg;

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    pub max_iter: usize,
    /// Terminate once the simplex diameter drops below this.
    pub x_tol: f64,
    /// Terminate once the value spread drops below this.
    pub f_tol: f64,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        SimplexOptions { max_iter: 200, x_tol: 1e-10, f_tol: 0.0 }
    }
}

#[derive(Debug, Clone)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
}

pub fn minimize<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    x0: &[f64],
    step: f64,
    opts: SimplexOptions,
) -> SimplexResult {
    let dim = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    simplex.push(x0.to_vec());
    for i in 0..dim {
        let mut p = x0.to_vec();
        p[i] += step;
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| f(p)).collect();

    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    let mut iterations = 0;
    for _ in 0..opts.max_iter {
        iterations += 1;
        let mut order: Vec<usize> = (0..=dim).collect();
        order.sort_by(|&a, &b| {
            values[a]
                .partial_cmp(&values[b])
                .unwrap_or(core::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
        let best = order[0];
        let worst = order[dim];
        let second_worst = order[dim - 1];

        let mut diameter = 0.0f64;
        for k in 1..=dim {
            diameter = diameter.max(linalg::dist(&simplex[order[k]], &simplex[best]));
        }
        if diameter < opts.x_tol || (values[worst] - values[best]).abs() < opts.f_tol {
            break;
        }

        // centroid of all but the worst vertex
        let mut centroid = alloc::vec![0.0; dim];
        for &idx in order.iter().take(dim) {
            for d in 0..dim {
                centroid[d] += simplex[idx][d];
            }
        }
        for c in centroid.iter_mut() {
            *c /= dim as f64;
        }

        let reflect = linalg::axpy(&centroid, alpha, &linalg::sub(&centroid, &simplex[worst]));
        let f_reflect = f(&reflect);

        if f_reflect < values[best] {
            let expand = linalg::axpy(&centroid, gamma, &linalg::sub(&reflect, &centroid));
            let f_expand = f(&expand);
            if f_expand < f_reflect {
                simplex[worst] = expand;
                values[worst] = f_expand;
            } else {
                simplex[worst] = reflect;
                values[worst] = f_reflect;
            }
            continue;
        }
        if f_reflect < values[second_worst] {
            simplex[worst] = reflect;
            values[worst] = f_reflect;
            continue;
        }

        let contract = linalg::axpy(&centroid, rho, &linalg::sub(&simplex[worst], &centroid));
        let f_contract = f(&contract);
        if f_contract < values[worst] {
            simplex[worst] = contract;
            values[worst] = f_contract;
            continue;
        }

        // shrink toward the best vertex
        let anchor = simplex[best].clone();
        for &idx in order.iter().skip(1) {
            let shrunk = linalg::axpy(&anchor, sigma, &linalg::sub(&simplex[idx], &anchor));
            values[idx] = f(&shrunk);
            simplex[idx] = shrunk;
        }
    }

    let mut best = 0;
    for i in 1..values.len() {
        if values[i] < values[best] {
            best = i;
        }
    }
    SimplexResult { x: simplex.swap_remove(best), value: values[best], iterations }
}
