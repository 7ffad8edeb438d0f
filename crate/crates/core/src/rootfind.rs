//! Bracketed scalar root finding.

/// Outcome of a bracketed search: abscissa and residual at the returned point.
#[derive(Debug, Clone, Copy)]
pub struct Root {
    pub x: f64,
    pub f: f64,
    pub iterations: usize,
}

/// Illinois-damped regula falsi inside a guaranteed sign bracket.
///
/// Requires `f(lo)` and `f(hi)` of opposite sign. Keeps the bracket valid at
/// every step and falls back to the midpoint when the secant step stalls, so
/// it can never do worse than bisection. Terminates when `|f| <= ftol` or the
/// bracket width drops below `xtol`.
#[allow(clippy::too_many_arguments)]
pub fn bracketed_root<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    mut f_hi: f64,
    xtol: f64,
    ftol: f64,
    max_iter: usize,
) -> Root {
    debug_assert!(f_lo * f_hi <= 0.0, "root finder requires a sign bracket");
    if f_lo.abs() <= ftol {
        return Root { x: lo, f: f_lo, iterations: 0 };
    }
    if f_hi.abs() <= ftol {
        return Root { x: hi, f: f_hi, iterations: 0 };
    }
    let mut side = 0i8;
    for it in 1..=max_iter {
        let denom = f_lo - f_hi;
        let mut x = if denom.abs() > 1e-300 {
            (f_lo * hi - f_hi * lo) / denom
        } else {
            0.5 * (lo + hi)
        };
        // keep strictly inside; degenerate secant steps become bisection
        let width = hi - lo;
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if fx.abs() <= ftol || width <= xtol {
            return Root { x, f: fx, iterations: it };
        }
        if (fx > 0.0) == (f_lo > 0.0) {
            lo = x;
            f_lo = fx;
            if side == 1 {
                f_hi *= 0.5;
            }
            side = 1;
        } else {
            hi = x;
            f_hi = fx;
            if side == -1 {
                f_lo *= 0.5;
            }
            side = -1;
        }
    }
    // best endpoint after exhausting the budget
    if f_lo.abs() < f_hi.abs() {
        Root { x: lo, f: f_lo, iterations: max_iter }
    } else {
        Root { x: hi, f: f_hi, iterations: max_iter }
    }
}

/// Plain bisection, capped at `max_iter` halvings.
pub fn bisect<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    f_hi: f64,
    ftol: f64,
    max_iter: usize,
) -> Root {
    debug_assert!(f_lo * f_hi <= 0.0, "bisection requires a sign bracket");
    let mut best = if f_lo.abs() < f_hi.abs() {
        Root { x: lo, f: f_lo, iterations: 0 }
    } else {
        Root { x: hi, f: f_hi, iterations: 0 }
    };
    for it in 1..=max_iter {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm.abs() < best.f.abs() {
            best = Root { x: mid, f: fm, iterations: it };
        }
        if fm.abs() <= ftol {
            return Root { x: mid, f: fm, iterations: it };
        }
        if (fm > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    best
}
