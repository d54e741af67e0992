//! Real branches of the Lambert W function.
//!
//! Both branches use Halley iteration on `w·eʷ − x` started from a
//! branch-specific guess: the series in `p = √(2(e·x + 1))` near the
//! branch point, and the `ln x − ln ln x` asymptotics away from it.

use std::f64::consts::E;

use super::BOUNDARY_CLAMP;
use crate::error::{Error, Result};

/// `-1/e`, the common endpoint of both real branches.
pub const BRANCH_POINT: f64 = -0.367_879_441_171_442_33;
// Low-order part of 1/e, so that `x + 1/e` keeps its digits near the branch point.
const INV_E_LO: f64 = -1.242_875_367_278_836_3e-17;

const TOL: f64 = 1e-13;
const MAX_ITER: usize = 50;

/// Distance from the branch point scaled into the series variable `p`.
fn branch_p(x: f64) -> f64 {
    let dx = (x - BRANCH_POINT) - INV_E_LO;
    (2.0 * E * dx).max(0.0).sqrt()
}

fn clamp_to_branch(x: f64) -> Option<f64> {
    if x < BRANCH_POINT {
        if x >= BRANCH_POINT - BOUNDARY_CLAMP {
            Some(BRANCH_POINT)
        } else {
            None
        }
    } else {
        Some(x)
    }
}

/// Halley iteration, with iterates confined to w ≥ −1 (upper) or w ≤ −1.
fn halley(x: f64, mut w: f64, upper_branch: bool) -> f64 {
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1 == 0.0 || f == 0.0 {
            break;
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let mut next = w - f / denom;
        if !next.is_finite() {
            break;
        }
        if (upper_branch && next < -1.0) || (!upper_branch && next > -1.0) {
            next = 0.5 * (w - 1.0);
        }
        let step = (next - w).abs();
        w = next;
        if step <= TOL * (1.0 + w.abs()) {
            break;
        }
    }
    w
}

/// Principal branch `W₀(x)`, defined for `x ≥ −1/e` and returning `w ≥ −1`.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain {
            func: "lambert_w0",
            x,
            domain: "[-1/e, inf)",
        });
    }
    let x = clamp_to_branch(x).ok_or(Error::Domain {
        func: "lambert_w0",
        x,
        domain: "[-1/e, inf)",
    })?;
    if x == BRANCH_POINT {
        return Ok(-1.0);
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == f64::INFINITY {
        return Ok(f64::INFINITY);
    }
    let guess = if x < -0.25 {
        let p = branch_p(x);
        -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0))
    } else if x < 3.0 {
        // Padé-like start, decent over [-0.25, 3)
        x.ln_1p() * (1.0 - x.ln_1p() / (2.0 + x.ln_1p()))
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    Ok(halley(x, guess.max(-1.0), true))
}

/// Lower branch `W₋₁(x)`, defined for `−1/e ≤ x < 0` and returning `w ≤ −1`.
pub fn lambert_wm1(x: f64) -> Result<f64> {
    let err = Error::Domain {
        func: "lambert_wm1",
        x,
        domain: "[-1/e, 0)",
    };
    if x.is_nan() || x >= 0.0 {
        return Err(err);
    }
    let x = clamp_to_branch(x).ok_or(err)?;
    if x == BRANCH_POINT {
        return Ok(-1.0);
    }
    let guess = if x < -0.25 {
        let p = branch_p(x);
        -1.0 - p * (1.0 + p * (1.0 / 3.0 + p * 11.0 / 72.0))
    } else {
        let l1 = (-x).ln();
        let l2 = (-l1).ln();
        l1 - l2 + l2 / l1
    };
    Ok(halley(x, guess.min(-1.0), false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(w: f64, x: f64) -> f64 {
        (w * w.exp() - x).abs() / x.abs().max(1.0)
    }

    #[test]
    fn principal_branch_fixed_points() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert!((lambert_w0(E).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(lambert_w0(-1.0 / E).unwrap(), -1.0);
        let x = 0.5 * 0.5f64.exp();
        assert!((lambert_w0(x).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn lower_branch_fixed_points() {
        assert_eq!(lambert_wm1(-1.0 / E).unwrap(), -1.0);
        assert!((lambert_wm1(-2.0 / (E * E)).unwrap() + 2.0).abs() < 1e-14);
    }

    #[test]
    fn lower_branch_matches_bisection() {
        // bisection on w·eʷ = −0.1 over [−10, −1], where w·eʷ is increasing
        let (mut lo, mut hi) = (-10.0f64, -1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid * mid.exp() < -0.1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let w = lambert_wm1(-0.1).unwrap();
        assert!((w - 0.5 * (lo + hi)).abs() < 1e-13);
        assert!((w + 3.577_152_063_957_297).abs() < 1e-13);
    }

    #[test]
    fn clamps_just_below_branch_point() {
        let x = BRANCH_POINT - 5e-16;
        assert_eq!(lambert_w0(x).unwrap(), -1.0);
        assert_eq!(lambert_wm1(x).unwrap(), -1.0);
        assert!(lambert_w0(BRANCH_POINT - 1e-14).is_err());
        assert!(lambert_wm1(BRANCH_POINT - 1e-14).is_err());
    }

    #[test]
    fn lower_branch_rejects_nonnegative() {
        assert!(lambert_wm1(0.0).is_err());
        assert!(lambert_wm1(0.3).is_err());
        assert!(lambert_w0(f64::NAN).is_err());
    }

    #[test]
    fn near_branch_point_and_extremes() {
        for &d in &[1e-15, 1e-12, 1e-9, 1e-6, 1e-3] {
            let x = BRANCH_POINT + d;
            let w0 = lambert_w0(x).unwrap();
            let wm = lambert_wm1(x).unwrap();
            assert!(w0 > -1.0 && wm < -1.0, "d = {d}: {w0} {wm}");
            assert!(residual(w0, x) <= 1e-12);
            assert!(residual(wm, x) <= 1e-12);
        }
        for &x in &[1e-300, 1e-10, 1e6, 1e100, 1e300] {
            let w = lambert_w0(x).unwrap();
            assert!(((w * w.exp() - x) / x).abs() <= 1e-12, "x = {x}");
        }
        for &x in &[-1e-300, -1e-100, -1e-10] {
            let w = lambert_wm1(x).unwrap();
            assert!(((w * w.exp() - x) / x).abs() <= 1e-12, "x = {x}");
        }
    }
}
