use super::incomplete::{kernel, IncompleteKind, PathPoint};
use super::{complete, ellip_k};
use crate::jacobi::sncndn;
use crate::numeric::{any_nan, reduce_by, QuasiPeriod};

/// Reduced second-form integral for `m <= 1`: `u = 2nK + r` with `|r| <= K`
/// and the kernel integral over `[0, r]`, taken along `sn(t|m)`.
pub(super) struct Reduced {
    pub q: QuasiPeriod,
    pub partial: f64,
}

pub(super) fn reduced(kind: IncompleteKind, u: f64, nu: f64, m: f64) -> Reduced {
    let kk = ellip_k(m);
    let q = if kk.is_infinite() {
        QuasiPeriod { n: 0.0, r: u }
    } else {
        reduce_by(u, 2.0 * kk)
    };
    let t = sncndn(q.r.abs(), m);
    let p = PathPoint {
        s: t.sn,
        cc: t.cn * t.cn,
        dd: t.dn * t.dn,
    };
    let v = kernel(kind, &p, nu, m);
    Reduced {
        q,
        partial: if q.r < 0.0 { -v } else { v },
    }
}

/// `∫_0^u f(sn(t|m)) dt` for `m <= 1`, with the quasi-period restored.
fn second_form(kind: IncompleteKind, u: f64, nu: f64, m: f64) -> f64 {
    let red = reduced(kind, u, nu, m);
    if red.q.n == 0.0 {
        red.partial
    } else {
        2.0 * red.q.n * complete(kind.into(), nu, m) + red.partial
    }
}

fn infinite_argument(u: f64, c: f64) -> f64 {
    if c > 0.0 && c.is_finite() {
        u
    } else {
        f64::NAN
    }
}

/// Jacobi's epsilon function `ε(u|m) = ∫_0^u dn²(t|m) dt`, any real `m`.
///
/// For `m > 1`, `dn(u|m) = cn(u sqrt(m)|1/m)` turns the integral into the
/// `B` integral at the reciprocal parameter:
/// `ε(u|m) = B(am(u sqrt(m)|1/m) | 1/m) / sqrt(m)`.
pub fn jacobi_epsilon(u: f64, m: f64) -> f64 {
    if any_nan(&[u, m]) || m.is_infinite() {
        return f64::NAN;
    }
    if m == 0.0 {
        return u;
    }
    if m == 1.0 {
        return u.tanh();
    }
    if m > 1.0 {
        let mu = 1.0 / m;
        let sm = m.sqrt();
        if u.is_infinite() {
            return infinite_argument(u, super::ellip_b(mu));
        }
        return second_form(IncompleteKind::B, u * sm, 0.0, mu) / sm;
    }
    if u.is_infinite() {
        return infinite_argument(u, super::ellip_e(m));
    }
    second_form(IncompleteKind::E, u, 0.0, m)
}

/// Jacobi's form of the third integral, `Λ(u,nu|m) = ∫_0^u dt/(1 - nu sn²(t|m))`.
///
/// For `m > 1`, `sn(u|m) = sn(v|1/m)/sqrt(m)` with `v = u sqrt(m)` gives
/// `Λ(u,nu|m) = Λ(v, nu/m | 1/m) / sqrt(m)`.
pub fn jacobi_lambda(u: f64, nu: f64, m: f64) -> f64 {
    if any_nan(&[u, nu, m]) || m.is_infinite() {
        return f64::NAN;
    }
    if nu == 0.0 {
        return u;
    }
    if m > 1.0 {
        let sm = m.sqrt();
        return jacobi_lambda(u * sm, nu / m, 1.0 / m) / sm;
    }
    if u.is_infinite() {
        if m == 1.0 {
            return if nu < 1.0 { u } else { f64::NAN };
        }
        return infinite_argument(u, super::ellip_pi(nu, m));
    }
    second_form(IncompleteKind::Pi, u, nu, m)
}

#[cfg(test)]
mod tests {
    use super::super::{ellip_e, ellip_pi};
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn trivial_values() {
        assert_eq!(jacobi_epsilon(0.0, 0.4), 0.0);
        assert_eq!(jacobi_epsilon(1.3, 0.0), 1.3);
        assert_eq!(jacobi_epsilon(0.8, 1.0), 0.8f64.tanh());
        assert_eq!(jacobi_lambda(0.8, 0.0, 0.5), 0.8);
        assert_eq!(jacobi_lambda(0.0, 0.3, 0.5), 0.0);
    }

    #[test]
    fn complete_values_at_quarter_period() {
        let k = ellip_k(0.5);
        assert!(close(jacobi_epsilon(k, 0.5), ellip_e(0.5), 1e-14));
        let k = ellip_k(0.4);
        assert!(close(jacobi_lambda(k, 0.2, 0.4), ellip_pi(0.2, 0.4), 1e-14));
        let k = ellip_k(-3.0);
        assert!(close(jacobi_epsilon(3.0 * k, -3.0), 3.0 * ellip_e(-3.0), 1e-14));
    }

    #[test]
    fn frozen_values() {
        // 30-digit references
        assert!(close(jacobi_epsilon(0.7, 0.3), 0.669_641_730_580_588_081_2, 1e-15));
        assert!(close(jacobi_epsilon(0.4, 3.0), 0.343_367_747_558_576_644_0, 1e-15));
        assert!(close(jacobi_lambda(0.9, 0.5, 0.3), 1.023_559_191_037_373_459_7, 1e-15));
    }

    #[test]
    fn odd_in_u() {
        for &(u, m) in &[(0.7, 0.3), (5.0, -2.0), (2.2, 4.0)] {
            assert_eq!(jacobi_epsilon(-u, m), -jacobi_epsilon(u, m));
        }
    }
}
