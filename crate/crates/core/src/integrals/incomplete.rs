use super::{complete, IntegralKind, KindError};
use crate::carlson::{rd, rf, rj};
use crate::numeric::{any_nan, apply_symmetry, reduce_pi, Parity};

/// Point on the integration path: `s = sin phi >= 0`, `cc = cos² phi`,
/// `dd = 1 - m sin² phi`. Keeping the three separately lets callers that
/// already know them (the Jacobi second form supplies `sn`, `cn²`, `dn²`)
/// avoid cancellation in `1 - s²`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PathPoint {
    pub s: f64,
    pub cc: f64,
    pub dd: f64,
}

impl PathPoint {
    /// From `sin phi` and `cos² phi`, computing `dd` without cancellation.
    pub fn new(s: f64, cc: f64, m: f64) -> PathPoint {
        let dd = if (0.5..=1.0).contains(&m) {
            cc + (1.0 - m) * s * s
        } else if m > 1.0 {
            let t = m.sqrt() * s;
            (1.0 - t) * (1.0 + t)
        } else {
            1.0 - m * s * s
        };
        PathPoint { s, cc, dd }
    }

    pub fn from_phi(phi: f64, m: f64) -> PathPoint {
        let (s, c) = phi.sin_cos();
        PathPoint::new(s, c * c, m)
    }

    pub fn from_x(x: f64, m: f64) -> PathPoint {
        PathPoint::new(x, (1.0 - x) * (1.0 + x), m)
    }

    fn at_singular_end(&self) -> bool {
        self.cc == 0.0 && self.dd == 0.0
    }
}

/// `1 - nu s²`, cancellation-free for `nu` in `[1/2, 1]`.
fn pole_distance(p: &PathPoint, nu: f64) -> f64 {
    if (0.5..=1.0).contains(&nu) {
        p.cc + (1.0 - nu) * p.s * p.s
    } else {
        1.0 - nu * p.s * p.s
    }
}

pub(crate) fn kernel_f(p: &PathPoint) -> f64 {
    if p.dd < 0.0 {
        return f64::NAN;
    }
    if p.at_singular_end() {
        return f64::INFINITY;
    }
    p.s * rf(p.cc, p.dd, 1.0)
}

pub(crate) fn kernel_d(p: &PathPoint) -> f64 {
    if p.dd < 0.0 {
        return f64::NAN;
    }
    if p.at_singular_end() {
        return f64::INFINITY;
    }
    p.s * p.s * p.s / 3.0 * rd(p.cc, p.dd, 1.0)
}

pub(crate) fn kernel_e(p: &PathPoint, m: f64) -> f64 {
    if p.dd < 0.0 {
        return f64::NAN;
    }
    if m == 1.0 {
        return p.s;
    }
    if m > 1.0 {
        return p.s * rf(p.cc, p.dd, 1.0) - m * p.s * p.s * p.s / 3.0 * rd(p.cc, p.dd, 1.0);
    }
    // All terms positive for m < 1.
    let s3 = p.s * p.s * p.s;
    (1.0 - m) / 3.0 * s3 * (rd(p.cc, p.dd, 1.0) + rd(p.cc, 1.0, p.dd)) + p.s * (p.cc / p.dd).sqrt()
}

pub(crate) fn kernel_b(p: &PathPoint, m: f64) -> f64 {
    if p.dd < 0.0 {
        return f64::NAN;
    }
    if m == 1.0 {
        return p.s;
    }
    if m > 1.0 {
        return kernel_f(p) - kernel_d(p);
    }
    (1.0 - m) / 3.0 * p.s * p.s * p.s * rd(p.cc, 1.0, p.dd) + p.s * (p.cc / p.dd).sqrt()
}

pub(crate) fn kernel_pi(p: &PathPoint, nu: f64) -> f64 {
    if p.dd < 0.0 || nu.is_nan() {
        return f64::NAN;
    }
    if nu == 0.0 {
        return kernel_f(p);
    }
    let q = pole_distance(p, nu);
    if q < 0.0 {
        return f64::NAN;
    }
    if q == 0.0 || p.at_singular_end() {
        return f64::INFINITY;
    }
    let s = p.s;
    kernel_f(p) + nu / 3.0 * s * s * s * rj(p.cc, p.dd, 1.0, q)
}

pub(crate) fn kernel(kind: IncompleteKind, p: &PathPoint, nu: f64, m: f64) -> f64 {
    match kind {
        IncompleteKind::B => kernel_b(p, m),
        IncompleteKind::D => kernel_d(p),
        IncompleteKind::E => kernel_e(p, m),
        IncompleteKind::F => kernel_f(p),
        IncompleteKind::Pi => kernel_pi(p, nu),
    }
}

/// The integral kinds that have an incomplete form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum IncompleteKind {
    B,
    D,
    E,
    F,
    Pi,
}

impl TryFrom<IntegralKind> for IncompleteKind {
    type Error = KindError;

    fn try_from(k: IntegralKind) -> Result<Self, KindError> {
        Ok(match k {
            IntegralKind::B => IncompleteKind::B,
            IntegralKind::C => return Err(KindError::NoIncompleteC),
            IntegralKind::D => IncompleteKind::D,
            IntegralKind::E => IncompleteKind::E,
            IntegralKind::F => IncompleteKind::F,
            IntegralKind::Pi => IncompleteKind::Pi,
        })
    }
}

impl From<IncompleteKind> for IntegralKind {
    fn from(k: IncompleteKind) -> IntegralKind {
        match k {
            IncompleteKind::B => IntegralKind::B,
            IncompleteKind::D => IntegralKind::D,
            IncompleteKind::E => IntegralKind::E,
            IncompleteKind::F => IntegralKind::F,
            IncompleteKind::Pi => IntegralKind::Pi,
        }
    }
}

fn legendre(kind: IncompleteKind, phi: f64, nu: f64, m: f64) -> f64 {
    if any_nan(&[phi, nu, m]) {
        return f64::NAN;
    }
    if phi.is_infinite() {
        let c = complete(kind.into(), nu, m);
        return if c > 0.0 && c.is_finite() { phi } else { f64::NAN };
    }
    apply_symmetry(Parity::Odd, phi, |phi| {
        let q = reduce_pi(phi);
        let base = kernel(kind, &PathPoint::from_phi(q.r.abs(), m), nu, m);
        let base = if q.r < 0.0 { -base } else { base };
        if q.n == 0.0 {
            base
        } else {
            2.0 * q.n * complete(kind.into(), nu, m) + base
        }
    })
}

fn jacobi(kind: IncompleteKind, x: f64, nu: f64, m: f64) -> f64 {
    if any_nan(&[x, nu, m]) {
        return f64::NAN;
    }
    apply_symmetry(Parity::Odd, x, |x| {
        if x > 1.0 {
            return f64::NAN;
        }
        kernel(kind, &PathPoint::from_x(x, m), nu, m)
    })
}

/// Incomplete integral of the given kind in Legendre form (amplitude `phi`).
/// `nu` is read only for `Pi`.
pub fn incomplete_legendre(kind: IntegralKind, phi: f64, nu: f64, m: f64) -> Result<f64, KindError> {
    Ok(legendre(kind.try_into()?, phi, nu, m))
}

/// Incomplete integral of the given kind in Jacobi form (`x = sin phi`).
/// `nu` is read only for `Pi`.
pub fn incomplete_jacobi(kind: IntegralKind, x: f64, nu: f64, m: f64) -> Result<f64, KindError> {
    Ok(jacobi(kind.try_into()?, x, nu, m))
}

/// `F(phi|m)`.
pub fn ellip_f_phi(phi: f64, m: f64) -> f64 {
    legendre(IncompleteKind::F, phi, 0.0, m)
}

/// `E(phi|m)`.
pub fn ellip_e_phi(phi: f64, m: f64) -> f64 {
    legendre(IncompleteKind::E, phi, 0.0, m)
}

/// `B(phi|m) = ∫ cos²θ / Δ dθ`.
pub fn ellip_b_phi(phi: f64, m: f64) -> f64 {
    legendre(IncompleteKind::B, phi, 0.0, m)
}

/// `D(phi|m) = ∫ sin²θ / Δ dθ`.
pub fn ellip_d_phi(phi: f64, m: f64) -> f64 {
    legendre(IncompleteKind::D, phi, 0.0, m)
}

/// `Pi(phi, nu|m)`.
pub fn ellip_pi_phi(phi: f64, nu: f64, m: f64) -> f64 {
    legendre(IncompleteKind::Pi, phi, nu, m)
}

/// `F(x|m) = F(asin x|m)`.
pub fn ellip_f_x(x: f64, m: f64) -> f64 {
    jacobi(IncompleteKind::F, x, 0.0, m)
}

pub fn ellip_e_x(x: f64, m: f64) -> f64 {
    jacobi(IncompleteKind::E, x, 0.0, m)
}

pub fn ellip_b_x(x: f64, m: f64) -> f64 {
    jacobi(IncompleteKind::B, x, 0.0, m)
}

pub fn ellip_d_x(x: f64, m: f64) -> f64 {
    jacobi(IncompleteKind::D, x, 0.0, m)
}

pub fn ellip_pi_x(x: f64, nu: f64, m: f64) -> f64 {
    jacobi(IncompleteKind::Pi, x, nu, m)
}

#[cfg(test)]
mod tests {
    use super::super::{ellip_e, ellip_k, ellip_pi};
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(ellip_f_phi(0.7, 0.0), 0.7);
        assert!(close(ellip_f_phi(FRAC_PI_2, 0.5), ellip_k(0.5), 2e-16));
        assert!(close(ellip_f_x(0.5, 0.0), PI / 6.0, 4e-16));
        assert!(ellip_f_x(2.0, 0.5).is_nan());
        assert!(close(ellip_b_x(1.0, 0.3) + ellip_d_x(1.0, 0.3), ellip_k(0.3), 4e-16));
        assert_eq!(
            incomplete_legendre(IntegralKind::C, 0.3, 0.0, 0.5),
            Err(KindError::NoIncompleteC)
        );
    }

    #[test]
    fn frozen_values() {
        // 30-digit references
        assert!(close(ellip_e_phi(12.9, 0.4), 11.526_329_382_951_926_429_6, 4e-16));
        assert!(close(ellip_f_phi(1.0, 0.5), 1.083_216_772_845_168_750_4, 4e-16));
    }

    #[test]
    fn quasi_period() {
        let d = ellip_f_phi(0.3 + PI, 0.4) - ellip_f_phi(0.3, 0.4);
        assert!((d - 2.0 * ellip_k(0.4)).abs() < 1e-12);
        let d = ellip_e_phi(-0.3 - 2.0 * PI, 0.4) - ellip_e_phi(-0.3, 0.4);
        assert!((d + 4.0 * ellip_e(0.4)).abs() < 1e-12);
        let d = ellip_pi_phi(1.0 + PI, 0.3, -2.0) - ellip_pi_phi(1.0, 0.3, -2.0);
        assert!((d - 2.0 * ellip_pi(0.3, -2.0)).abs() < 1e-12);
    }

    #[test]
    fn m_above_one() {
        // real only while sin(phi) <= 1/sqrt(m)
        assert!(ellip_f_phi(0.9, 2.0).is_nan());
        assert!(ellip_f_phi(0.7, 2.0).is_finite());
        assert!(ellip_f_phi(0.3 + PI, 2.0).is_nan());
        let x = 0.5_f64;
        let b = ellip_b_x(x, 3.0);
        let d = ellip_d_x(x, 3.0);
        assert!(close(b + d, ellip_f_x(x, 3.0), 4e-16));
    }

    #[test]
    fn m_one_endpoint() {
        assert_eq!(ellip_f_phi(FRAC_PI_2, 1.0), f64::INFINITY);
        assert_eq!(ellip_e_phi(FRAC_PI_2, 1.0), 1.0);
        assert_eq!(ellip_f_x(1.0, 1.0), f64::INFINITY);
    }

    #[test]
    fn pi_pole() {
        assert_eq!(ellip_pi_x(0.5, 4.0, 0.3), f64::INFINITY);
        assert!(ellip_pi_x(0.6, 4.0, 0.3).is_nan());
    }

    #[test]
    fn infinite_amplitude() {
        assert_eq!(ellip_f_phi(f64::INFINITY, 0.5), f64::INFINITY);
        assert_eq!(ellip_e_phi(f64::NEG_INFINITY, 0.5), f64::NEG_INFINITY);
        assert!(ellip_f_phi(f64::INFINITY, 2.0).is_nan());
    }
}
