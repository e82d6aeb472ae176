//! Carlson's symmetric elliptic integrals.
//!
//! RF, RD and RJ use the duplication theorem with the termination rule
//! `4^-n Q < |A_n|` and a fifth-order Taylor correction. With `r = eps` the
//! truncation error is below one rounding error of the result.
//! RC is defined through RF; RG is assembled from RF and RD.
//!
//! Symmetric arguments are sorted before the iteration starts, so results
//! are bitwise identical under permutation.

use crate::numeric::{any_nan, Tolerances};

const MAX_ITER: usize = Tolerances::DEFAULT.max_iter;

/// `(3 eps)^(-1/6)`
fn rf_scale() -> f64 {
    (3.0 * f64::EPSILON).powf(-1.0 / 6.0)
}

/// `(eps / 4)^(-1/6)`
fn rd_scale() -> f64 {
    (f64::EPSILON / 4.0).powf(-1.0 / 6.0)
}

fn sort3(x: f64, y: f64, z: f64) -> (f64, f64, f64) {
    let mut v = [x, y, z];
    v.sort_by(|a, b| a.total_cmp(b));
    (v[0], v[1], v[2])
}

/// Picks an exponent `j` so that `4^j * big` is of moderate size.
/// Returns 0 when no rescaling is needed.
fn rescale_exponent(big: f64) -> i32 {
    if big > 1e150 || (big > 0.0 && big < 1e-150) {
        let e = big.log2().round() as i32;
        -(e / 2)
    } else {
        0
    }
}

#[inline]
fn pow2(j: i32) -> f64 {
    2f64.powi(j)
}

/// `RF(x, y, z) = 1/2 ∫_0^∞ dt / sqrt((t+x)(t+y)(t+z))`
///
/// Requires `x, y, z >= 0` with at most one zero. `RF = 0` when any argument
/// is `+Inf`.
pub fn rf(x: f64, y: f64, z: f64) -> f64 {
    if any_nan(&[x, y, z]) {
        return f64::NAN;
    }
    let (a, b, c) = sort3(x, y, z);
    if a < 0.0 || b == 0.0 {
        return f64::NAN;
    }
    if c.is_infinite() {
        return 0.0;
    }
    let j = rescale_exponent(c);
    if j != 0 {
        let s = pow2(2 * j);
        return rf_kernel(a * s, b * s, c * s) * pow2(j);
    }
    rf_kernel(a, b, c)
}

fn rf_kernel(x0: f64, y0: f64, z0: f64) -> f64 {
    let a0 = (x0 + y0 + z0) / 3.0;
    let mut q = rf_scale() * (a0 - x0).abs().max((a0 - y0).abs()).max((a0 - z0).abs());
    let (mut x, mut y, mut z, mut a) = (x0, y0, z0, a0);
    let mut fourn = 1.0;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        if q < a.abs() {
            converged = true;
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        q *= 0.25;
        fourn *= 4.0;
        if !a.is_finite() {
            return f64::NAN;
        }
    }
    if !converged {
        return f64::NAN;
    }
    let xs = (a0 - x0) / (fourn * a);
    let ys = (a0 - y0) / (fourn * a);
    let zs = -(xs + ys);
    let e2 = xs * ys - zs * zs;
    let e3 = xs * ys * zs;
    (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt()
}

/// `RC(x, y) = RF(x, y, y)` for `x >= 0`, `y > 0`.
///
/// The Cauchy principal value for `y < 0` is not provided.
pub fn rc(x: f64, y: f64) -> f64 {
    if any_nan(&[x, y]) || x < 0.0 || y <= 0.0 {
        return f64::NAN;
    }
    rf(x, y, y)
}

/// `RC(1, 1 + e)` for `e > -1`, used inside the RJ iteration.
fn rc_one_plus(e: f64) -> f64 {
    if e.abs() < 1e-3 {
        // 1 - e/3 + e^2/5 - e^3/7 + e^4/9 - e^5/11
        1.0 + e * (-1.0 / 3.0 + e * (0.2 + e * (-1.0 / 7.0 + e * (1.0 / 9.0 - e / 11.0))))
    } else if e > 0.0 {
        let s = e.sqrt();
        s.atan() / s
    } else {
        let s = (-e).sqrt();
        s.atanh() / s
    }
}

/// `RD(x, y, z) = RJ(x, y, z, z)`; requires `x, y >= 0` not both zero and
/// `z > 0`.
pub fn rd(x: f64, y: f64, z: f64) -> f64 {
    if any_nan(&[x, y, z]) {
        return f64::NAN;
    }
    let (a, b) = if x <= y { (x, y) } else { (y, x) };
    if a < 0.0 || b == 0.0 || z <= 0.0 {
        return f64::NAN;
    }
    if b.is_infinite() || z.is_infinite() {
        return 0.0;
    }
    let j = rescale_exponent(b.max(z));
    if j != 0 {
        let s = pow2(2 * j);
        return rd_kernel(a * s, b * s, z * s) * pow2(3 * j);
    }
    rd_kernel(a, b, z)
}

fn rd_kernel(x0: f64, y0: f64, z0: f64) -> f64 {
    let a0 = (x0 + y0 + 3.0 * z0) / 5.0;
    let mut q = rd_scale() * (a0 - x0).abs().max((a0 - y0).abs()).max((a0 - z0).abs());
    let (mut x, mut y, mut z, mut a) = (x0, y0, z0, a0);
    let mut fourn = 1.0;
    let mut sum = 0.0;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        if q < a.abs() {
            converged = true;
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        sum += 1.0 / (fourn * sz * (z + lambda));
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        q *= 0.25;
        fourn *= 4.0;
        if !a.is_finite() || !sum.is_finite() {
            return f64::NAN;
        }
    }
    if !converged {
        return f64::NAN;
    }
    let xs = (a0 - x0) / (fourn * a);
    let ys = (a0 - y0) / (fourn * a);
    let zs = -(xs + ys) / 3.0;
    let xy = xs * ys;
    let z2 = zs * zs;
    let e2 = xy - 6.0 * z2;
    let e3 = (3.0 * xy - 8.0 * z2) * zs;
    let e4 = 3.0 * (xy - z2) * z2;
    let e5 = xy * z2 * zs;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    series / (fourn * a * a.sqrt()) + 3.0 * sum
}

/// `RJ(x, y, z, p) = 3/2 ∫_0^∞ dt / ((t+p) sqrt((t+x)(t+y)(t+z)))`
///
/// Requires `x, y, z >= 0` with at most one zero and `p > 0`; the principal
/// value for `p < 0` is not provided.
pub fn rj(x: f64, y: f64, z: f64, p: f64) -> f64 {
    if any_nan(&[x, y, z, p]) {
        return f64::NAN;
    }
    let (a, b, c) = sort3(x, y, z);
    if a < 0.0 || b == 0.0 || p <= 0.0 {
        return f64::NAN;
    }
    if c.is_infinite() || p.is_infinite() {
        return 0.0;
    }
    // RJ(x, y, z, z) = RD(x, y, z), exploiting the symmetry in (x, y, z).
    if p == c {
        return rd(a, b, c);
    }
    if p == b {
        return rd(a, c, b);
    }
    if p == a {
        return rd(b, c, a);
    }
    let j = rescale_exponent(c.max(p));
    if j != 0 {
        let s = pow2(2 * j);
        return rj_kernel(a * s, b * s, c * s, p * s) * pow2(3 * j);
    }
    rj_kernel(a, b, c, p)
}

fn rj_kernel(x0: f64, y0: f64, z0: f64, p0: f64) -> f64 {
    let a0 = (x0 + y0 + z0 + 2.0 * p0) / 5.0;
    let delta = (p0 - x0) * (p0 - y0) * (p0 - z0);
    let mut q = rd_scale()
        * (a0 - x0)
            .abs()
            .max((a0 - y0).abs())
            .max((a0 - z0).abs())
            .max((a0 - p0).abs());
    let (mut x, mut y, mut z, mut p, mut a) = (x0, y0, z0, p0, a0);
    let mut fourn = 1.0;
    let mut sum = 0.0;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        if q < a.abs() {
            converged = true;
            break;
        }
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = delta / (fourn * fourn * fourn * d * d);
        sum += rc_one_plus(e) / (fourn * d);
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        p = 0.25 * (p + lambda);
        a = 0.25 * (a + lambda);
        q *= 0.25;
        fourn *= 4.0;
        if !a.is_finite() || !sum.is_finite() {
            return f64::NAN;
        }
    }
    if !converged {
        return f64::NAN;
    }
    let xs = (a0 - x0) / (fourn * a);
    let ys = (a0 - y0) / (fourn * a);
    let zs = (a0 - z0) / (fourn * a);
    let ps = -(xs + ys + zs) / 2.0;
    let xyz = xs * ys * zs;
    let p2 = ps * ps;
    let e2 = xs * ys + xs * zs + ys * zs - 3.0 * p2;
    let e3 = xyz + 2.0 * e2 * ps + 4.0 * p2 * ps;
    let e4 = (2.0 * xyz + e2 * ps + 3.0 * p2 * ps) * ps;
    let e5 = xyz * p2;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    series / (fourn * a * a.sqrt()) + 6.0 * sum
}

/// `RG(x, y, z)`, finite for all non-negative arguments (`RG(0,0,0) = 0`).
pub fn rg(x: f64, y: f64, z: f64) -> f64 {
    if any_nan(&[x, y, z]) {
        return f64::NAN;
    }
    let (a, b, c) = sort3(x, y, z);
    if a < 0.0 {
        return f64::NAN;
    }
    if c.is_infinite() {
        return f64::INFINITY;
    }
    if b == 0.0 {
        return 0.5 * c.sqrt();
    }
    // Middle argument in the RD slot: (a - b)(c - b) <= 0, so all terms add.
    let t1 = b * rf(a, c, b);
    let t2 = (a - b) * (c - b) * rd(a, c, b) / 3.0;
    let t3 = a.sqrt() * c.sqrt() / b.sqrt();
    0.5 * (t1 - t2 + t3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn rf_values() {
        assert_eq!(rf(1.0, 1.0, 1.0), 1.0);
        assert!(rel(rf(0.0, 1.0, 1.0), PI / 2.0) < 2e-16);
        // adaptive quadrature of the defining integral, 30 digits
        assert!(rel(rf(1.0, 2.0, 4.0), 0.685_085_816_633_435_966_9) < 4e-16);
        assert_eq!(rf(1.0, 2.0, f64::INFINITY), 0.0);
    }

    #[test]
    fn rf_domain() {
        assert!(rf(-1.0, 1.0, 1.0).is_nan());
        assert!(rf(0.0, 0.0, 1.0).is_nan());
        assert!(rf(f64::NAN, 1.0, 1.0).is_nan());
    }

    #[test]
    fn rc_values() {
        assert_eq!(rc(1.0, 1.0), 1.0);
        assert_eq!(rc(4.0, 4.0), 0.5);
        assert!(rel(rc(0.0, 1.0), PI / 2.0) < 2e-16);
        assert!(rc(1.0, 0.0).is_nan());
        assert!(rc(1.0, -2.0).is_nan());
        assert!(rc(-1.0, 2.0).is_nan());
    }

    #[test]
    fn rd_values() {
        assert_eq!(rd(1.0, 1.0, 1.0), 1.0);
        assert_eq!(rd(4.0, 4.0, 4.0), 0.125);
        assert!(rel(rd(0.0, 1.0, 1.0), 3.0 * PI / 4.0) < 4e-16);
        assert!(rd(0.0, 0.0, 1.0).is_nan());
        assert!(rd(1.0, 1.0, 0.0).is_nan());
    }

    #[test]
    fn rj_values() {
        assert_eq!(rj(1.0, 1.0, 1.0, 1.0), 1.0);
        assert_eq!(rj(1.0, 2.0, 3.0, 3.0), rd(1.0, 2.0, 3.0));
        assert!(rel(rj(1.0, 2.0, 3.0, 4.0), 0.239_848_099_749_567_762_2) < 4e-16);
        assert!(rj(1.0, 2.0, 3.0, -1.0).is_nan());
        assert!(rj(0.0, 0.0, 3.0, 1.0).is_nan());
    }

    #[test]
    fn rg_values() {
        assert_eq!(rg(1.0, 1.0, 1.0), 1.0);
        assert_eq!(rg(0.0, 0.0, 4.0), 1.0);
        assert_eq!(rg(0.0, 0.0, 0.0), 0.0);
        assert!(rel(rg(1.0, 2.0, 3.0), 1.401_847_099_990_895_078) < 4e-16);
        assert!(rg(-1.0, 2.0, 3.0).is_nan());
        // RG(0, y, y) = pi sqrt(y) / 4
        assert!(rel(rg(0.0, 4.0, 4.0), PI / 2.0) < 4e-16);
    }

    #[test]
    fn extreme_arguments_are_rescaled() {
        let s = 4f64.powi(200);
        let r = rf(1.0, 2.0, 4.0);
        assert!(rel(rf(s, 2.0 * s, 4.0 * s), r / s.sqrt()) < 4e-16);
        assert!(rel(rf(1.0 / s, 2.0 / s, 4.0 / s), r * s.sqrt()) < 4e-16);
        let d = rd(1.0, 2.0, 4.0);
        assert!(rel(rd(s, 2.0 * s, 4.0 * s), d / (s * s.sqrt())) < 4e-16);
    }

    #[test]
    fn rc_one_plus_is_continuous_across_series_switch() {
        for &e in &[-0.5, -1.001e-3, -0.999e-3, 0.999e-3, 1.001e-3, 2.0] {
            let direct = rc(1.0, 1.0 + e);
            assert!(rel(rc_one_plus(e), direct) < 1e-15, "e={e}");
        }
    }
}
