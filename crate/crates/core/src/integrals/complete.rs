use std::f64::consts::FRAC_PI_2;

use crate::carlson::{rd, rf, rj};

/// Complete integral of the first kind `K(m)`, `m <= 1`.
pub fn ellip_k(m: f64) -> f64 {
    if m.is_nan() || m > 1.0 {
        return f64::NAN;
    }
    if m == 1.0 {
        return f64::INFINITY;
    }
    if m == 0.0 {
        return FRAC_PI_2;
    }
    rf(0.0, 1.0 - m, 1.0)
}

/// Complete integral of the second kind `E(m)`, `m <= 1`.
pub fn ellip_e(m: f64) -> f64 {
    if m.is_nan() || m > 1.0 {
        return f64::NAN;
    }
    if m == 1.0 {
        return 1.0;
    }
    if m == 0.0 {
        return FRAC_PI_2;
    }
    if m == f64::NEG_INFINITY {
        return f64::INFINITY;
    }
    let mc = 1.0 - m;
    mc / 3.0 * (rd(0.0, mc, 1.0) + rd(0.0, 1.0, mc))
}

/// `B(m) = ∫ cos²θ / Δ dθ` over `[0, pi/2]`.
pub fn ellip_b(m: f64) -> f64 {
    if m.is_nan() || m > 1.0 {
        return f64::NAN;
    }
    if m == 1.0 {
        return 1.0;
    }
    if m == f64::NEG_INFINITY {
        return 0.0;
    }
    let mc = 1.0 - m;
    mc / 3.0 * rd(0.0, 1.0, mc)
}

/// `D(m) = ∫ sin²θ / Δ dθ` over `[0, pi/2]`.
pub fn ellip_d(m: f64) -> f64 {
    if m.is_nan() || m > 1.0 {
        return f64::NAN;
    }
    if m == 1.0 {
        return f64::INFINITY;
    }
    rd(0.0, 1.0 - m, 1.0) / 3.0
}

/// `C(m) = ∫ sin²θ cos²θ / Δ³ dθ` over `[0, pi/2]`, equal to `(D - B)/m`.
///
/// The quotient cancels badly for small `m`, so `|m| <= 1/2` uses the
/// binomial series in `m` instead.
pub fn ellip_c(m: f64) -> f64 {
    if m.is_nan() || m > 1.0 {
        return f64::NAN;
    }
    if m == 1.0 {
        return f64::INFINITY;
    }
    if m == f64::NEG_INFINITY {
        return 0.0;
    }
    if m.abs() > 0.5 {
        return (ellip_d(m) - ellip_b(m)) / m;
    }
    // sum_n (3/2)_n/n! m^n ∫ sin^(2n+2) cos² = sum_n c_n m^n W_{n+1}/(2n+4),
    // with W_a = ∫ sin^(2a) over [0, pi/2].
    let mut coef = 1.0;
    let mut w = FRAC_PI_2 * 0.5;
    let mut mp = 1.0;
    let mut sum = w / 4.0;
    for n in 1..200 {
        let nf = n as f64;
        coef *= (nf + 0.5) / nf;
        w *= (2.0 * nf + 1.0) / (2.0 * nf + 2.0);
        mp *= m;
        let term = coef * mp * w / (2.0 * nf + 4.0);
        sum += term;
        if term.abs() <= f64::EPSILON * 0.25 * sum.abs() {
            break;
        }
    }
    sum
}

/// Complete integral of the third kind `Pi(nu|m)`.
///
/// `nu = 1` is a pole (`+Inf`); `nu > 1` would need a principal value and
/// gives NaN.
pub fn ellip_pi(nu: f64, m: f64) -> f64 {
    ellip_pi_with_p(nu, 1.0 - nu, m)
}

/// `Pi(nu|m)` with `p = 1 - nu` supplied by the caller.
pub(crate) fn ellip_pi_with_p(nu: f64, p: f64, m: f64) -> f64 {
    if nu.is_nan() || p.is_nan() || m.is_nan() || m > 1.0 || nu > 1.0 {
        return f64::NAN;
    }
    if nu == 1.0 || m == 1.0 {
        return f64::INFINITY;
    }
    if nu == f64::NEG_INFINITY || m == f64::NEG_INFINITY {
        return 0.0;
    }
    let k = ellip_k(m);
    if nu == 0.0 {
        return k;
    }
    k + nu / 3.0 * rj(0.0, 1.0 - m, 1.0, p)
}

/// `E'(m) = E(1 - m)`, `m >= 0`.
pub fn ellip_ce(m: f64) -> f64 {
    if m < 0.0 {
        return f64::NAN;
    }
    ellip_e(1.0 - m)
}

/// `K'(m) = K(1 - m)`, `m >= 0`.
pub fn ellip_ck(m: f64) -> f64 {
    if m < 0.0 {
        return f64::NAN;
    }
    ellip_k(1.0 - m)
}

/// `Pi'(nu|m) = Pi(nu|1 - m)`, `m >= 0`.
pub fn ellip_cpi(nu: f64, m: f64) -> f64 {
    if m < 0.0 {
        return f64::NAN;
    }
    ellip_pi(nu, 1.0 - m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs()
    }

    #[test]
    fn limits() {
        assert_eq!(ellip_k(0.0), FRAC_PI_2);
        assert_eq!(ellip_k(1.0), f64::INFINITY);
        assert_eq!(ellip_k(f64::NEG_INFINITY), 0.0);
        assert_eq!(ellip_e(1.0), 1.0);
        assert_eq!(ellip_e(f64::NEG_INFINITY), f64::INFINITY);
        assert!(ellip_k(1.5).is_nan());
        assert!(ellip_e(f64::NAN).is_nan());
        assert!(close(ellip_c(0.0), PI / 16.0, 1e-15));
        assert_eq!(ellip_pi(0.0, 0.3), ellip_k(0.3));
        assert_eq!(ellip_pi(1.0, 0.3), f64::INFINITY);
        assert!(ellip_pi(1.5, 0.3).is_nan());
    }

    #[test]
    fn frozen_values() {
        // 30-digit references
        assert!(close(ellip_k(0.5), 1.854_074_677_301_371_918_4, 2e-16));
        assert!(close(ellip_e(0.75), 1.211_056_027_568_459_524_8, 2e-16));
        assert!(close(ellip_k(-10.0), 0.790_871_890_238_738_475_2, 4e-16));
        assert!(close(ellip_pi(0.2, 0.4), 2.001_498_086_208_184_874_4, 4e-16));
    }

    #[test]
    fn b_plus_d_is_k() {
        for &m in &[-50.0, -1.0, 0.0, 0.3, 0.9, 0.999_999] {
            let k = ellip_k(m);
            assert!(close(ellip_b(m) + ellip_d(m), k, 4.0 * f64::EPSILON), "m={m}");
        }
    }

    #[test]
    fn c_is_continuous_across_series_switch() {
        let lo = ellip_c(0.5);
        let hi = ellip_c(0.500_000_000_000_000_1);
        assert!(close(lo, hi, 1e-14));
        let lo = ellip_c(-0.5);
        let hi = ellip_c(-0.500_000_000_000_000_1);
        assert!(close(lo, hi, 1e-14));
    }

    #[test]
    fn legendre_relation() {
        for i in 1..20 {
            let m = i as f64 / 20.0;
            let v = ellip_e(m) * ellip_k(1.0 - m) + ellip_e(1.0 - m) * ellip_k(m) - ellip_k(m) * ellip_k(1.0 - m);
            assert!((v - FRAC_PI_2).abs() < 1e-13, "m={m}");
        }
    }

    #[test]
    fn complementary_reflection_is_bitwise() {
        for &m in &[0.0, 0.25, 1.0, 3.0] {
            assert_eq!(ellip_ck(m).to_bits(), ellip_k(1.0 - m).to_bits());
            assert_eq!(ellip_ce(m).to_bits(), ellip_e(1.0 - m).to_bits());
        }
        assert_eq!(ellip_ce(1.0), FRAC_PI_2);
        assert_eq!(ellip_ck(0.0), f64::INFINITY);
        assert_eq!(ellip_cpi(0.5, 0.25), ellip_pi(0.5, 0.75));
        assert!(ellip_ck(-0.1).is_nan());
    }
}
