use std::f64::consts::PI;

use super::incomplete::{kernel, IncompleteKind, PathPoint};
use super::second::reduced;
use super::{ellip_e, ellip_k, ellip_pi, ellip_pi_with_p, jacobi_lambda};
use crate::numeric::{any_nan, apply_symmetry, reduce_pi, Parity};

/// Jacobi zeta `Z(u|m) = ε(u|m) - (E(m)/K(m)) u`, `m <= 1`.
///
/// Evaluated on the reduced argument so the result is exactly periodic
/// in `u` with period `2K`.
pub fn jacobi_zeta(u: f64, m: f64) -> f64 {
    if any_nan(&[u, m]) || m > 1.0 || u.is_infinite() || m.is_infinite() {
        return f64::NAN;
    }
    if m == 1.0 {
        return u.tanh();
    }
    if m == 0.0 {
        return 0.0;
    }
    let red = reduced(IncompleteKind::E, u, 0.0, m);
    red.partial - ellip_e(m) / ellip_k(m) * red.q.r
}

/// `Z(phi|m) = E(phi|m) - (E(m)/K(m)) F(phi|m)`, `m <= 1`; period `pi`.
pub fn jacobi_zeta_phi(phi: f64, m: f64) -> f64 {
    if any_nan(&[phi, m]) || m > 1.0 || phi.is_infinite() || m.is_infinite() {
        return f64::NAN;
    }
    let r = reduce_pi(phi).r;
    apply_symmetry(Parity::Odd, r, |r| {
        if m == 1.0 {
            return r.sin();
        }
        let p = PathPoint::from_phi(r, m);
        let f = kernel(IncompleteKind::F, &p, 0.0, m);
        let e = kernel(IncompleteKind::E, &p, 0.0, m);
        e - ellip_e(m) / ellip_k(m) * f
    })
}

/// `Ω(u,nu|m) = Λ(u,nu|m) - (Π(nu|m)/K(m)) u`, the periodic part of `Λ`.
pub fn jacobi_omega(u: f64, nu: f64, m: f64) -> f64 {
    if any_nan(&[u, nu, m]) || m > 1.0 || nu >= 1.0 || u.is_infinite() || m.is_infinite() {
        return f64::NAN;
    }
    if nu == 0.0 {
        return 0.0;
    }
    if m == 1.0 {
        return jacobi_lambda(u, nu, m) - u / (1.0 - nu);
    }
    let red = reduced(IncompleteKind::Pi, u, nu, m);
    red.partial - ellip_pi(nu, m) / ellip_k(m) * red.q.r
}

/// `Ω(phi,nu|m) = Π(phi,nu|m) - (Π(nu|m)/K(m)) F(phi|m)`; period `pi`.
pub fn jacobi_omega_phi(phi: f64, nu: f64, m: f64) -> f64 {
    if any_nan(&[phi, nu, m]) || m > 1.0 || nu >= 1.0 || phi.is_infinite() || m.is_infinite() {
        return f64::NAN;
    }
    if nu == 0.0 {
        return 0.0;
    }
    let r = reduce_pi(phi).r;
    apply_symmetry(Parity::Odd, r, |r| {
        let p = PathPoint::from_phi(r, m);
        let f = kernel(IncompleteKind::F, &p, 0.0, m);
        let pi = kernel(IncompleteKind::Pi, &p, nu, m);
        if m == 1.0 {
            return pi - f / (1.0 - nu);
        }
        pi - ellip_pi(nu, m) / ellip_k(m) * f
    })
}

/// Heuman's lambda `Λ0(beta|m)`, `0 <= m <= 1`.
///
/// `Λ0(beta + pi) = Λ0(beta) + 2`; on `[0, pi/2]` the closed form
/// `m' sin 2beta Π(m/(1 - m' sin²beta) | m) / (pi sqrt(1 - m' sin²beta))`
/// is used, with the characteristic's complement `1 - nu` formed directly.
pub fn heuman_lambda(beta: f64, m: f64) -> f64 {
    if any_nan(&[beta, m]) || !(0.0..=1.0).contains(&m) {
        return f64::NAN;
    }
    if beta.is_infinite() {
        return beta;
    }
    apply_symmetry(Parity::Odd, beta, |beta| {
        let q = reduce_pi(beta);
        let h = apply_symmetry(Parity::Odd, q.r, |b| heuman_kernel(b, m));
        2.0 * q.n + h
    })
}

fn heuman_kernel(b: f64, m: f64) -> f64 {
    if m == 1.0 {
        return 2.0 * b / PI;
    }
    if b >= std::f64::consts::FRAC_PI_2 {
        return 1.0;
    }
    let (s, c) = b.sin_cos();
    let mc = 1.0 - m;
    let denom = 1.0 - mc * s * s;
    let nu = m / denom;
    let p = mc * c * c / denom;
    let pi = ellip_pi_with_p(nu, p, m);
    mc * 2.0 * s * c * pi / (PI * denom.sqrt())
}
