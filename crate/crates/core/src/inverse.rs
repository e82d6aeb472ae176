//! Principal-branch inverses of the Jacobian elliptic functions, all
//! reduced algebraically to the Jacobi-form integral `F(y|m)`.
//!
//! Odd functions return `u` in `[-K, K]`. The even functions cn, cd, dc
//! and nc take negative values on `(K, 2K]`, so their inverses return `u`
//! in `[0, 2K]`; dn and nd do likewise for `m > 1`, where they change sign.
//!
//! Each reduction supplies `y`, `1 - y²` and `1 - m y²` separately, so that
//! none of them is formed by cancellation when the argument sits near a
//! turning point.

use crate::integrals::{ellip_f_phi, ellip_f_x, ellip_k};
use crate::integrals::{kernel_f, PathPoint};
use crate::jacobi::GlaisherCode;
use crate::numeric::{apply_symmetry, Parity};

/// Rounding can push `1 - y²` or `1 - m y²` a few ulp below zero at the
/// turning points; those are clamped rather than reported as out of domain.
fn clamp_edge(v: f64) -> f64 {
    if v < 0.0 && v > -8.0 * f64::EPSILON {
        0.0
    } else {
        v
    }
}

fn f_parts(s: f64, cc: f64, dd: f64) -> f64 {
    let s = if s > 1.0 && s <= 1.0 + 4.0 * f64::EPSILON {
        1.0
    } else {
        s
    };
    let (cc, dd) = (clamp_edge(cc), clamp_edge(dd));
    if !(0.0..=1.0).contains(&s) || cc < 0.0 || dd < 0.0 || s.is_nan() || cc.is_nan() || dd.is_nan() {
        return f64::NAN;
    }
    kernel_f(&PathPoint { s, cc, dd })
}

fn f_new(s: f64, cc: f64, m: f64) -> f64 {
    if !(0.0..=1.0).contains(&s) || cc < 0.0 || cc.is_nan() {
        return f64::NAN;
    }
    kernel_f(&PathPoint::new(s, cc, m))
}

/// Value of `u` at the first zero of dn for `m > 1`.
fn dn_zero(m: f64) -> f64 {
    ellip_k(1.0 / m) / m.sqrt()
}

/// `am⁻¹(x|m) = F(x|m)` with `x` read as an amplitude.
pub fn inverse_am(x: f64, m: f64) -> f64 {
    ellip_f_phi(x, m)
}

/// Inverse of the Jacobian function `code` on its principal branch.
pub fn inverse_glaisher(code: GlaisherCode, x: f64, m: f64) -> f64 {
    use GlaisherCode::*;
    if x.is_nan() || m.is_nan() {
        return f64::NAN;
    }
    let mc = 1.0 - m;
    match code {
        Sn => ellip_f_x(x, m),
        Sc => apply_symmetry(Parity::Odd, x, |x| {
            let w = 1.0 + x * x;
            f_new(x / 1f64.hypot(x), 1.0 / w, m)
        }),
        Sd => apply_symmetry(Parity::Odd, x, |x| {
            let w = 1.0 + m * x * x;
            if w <= 0.0 {
                return f64::NAN;
            }
            f_parts(x / w.sqrt(), (1.0 - mc * x * x) / w, 1.0 / w)
        }),
        Cs => apply_symmetry(Parity::Odd, x, |x| {
            let w = 1.0 + x * x;
            f_new(1.0 / 1f64.hypot(x), x * x / w, m)
        }),
        Ds => apply_symmetry(Parity::Odd, x, |x| {
            let w = m + x * x;
            if w <= 0.0 {
                return f64::NAN;
            }
            f_parts(1.0 / w.sqrt(), (x * x - mc) / w, x * x / w)
        }),
        Ns => apply_symmetry(Parity::Odd, x, |x| f_new(1.0 / x, (x - 1.0) * (x + 1.0) / (x * x), m)),
        Cn => upper_branch(x, m, |a| f_new(((1.0 - a) * (1.0 + a)).sqrt(), a * a, m)),
        Cd => upper_branch(x, m, |a| {
            let w = 1.0 - m * a * a;
            if w <= 0.0 {
                return f64::NAN;
            }
            f_parts(((1.0 - a) * (1.0 + a) / w).sqrt(), a * a * mc / w, mc / w)
        }),
        Dc => upper_branch(x, m, |a| {
            let w = a * a - m;
            if w <= 0.0 {
                return f64::NAN;
            }
            f_parts(((a - 1.0) * (a + 1.0) / w).sqrt(), mc / w, a * a * mc / w)
        }),
        Nc => upper_branch(x, m, |a| f_new(((a - 1.0) * (a + 1.0)).sqrt() / a, 1.0 / (a * a), m)),
        Dn => sign_change_branch(x, m, |a| {
            if m == 0.0 {
                return if a == 1.0 { 0.0 } else { f64::NAN };
            }
            let y2 = (1.0 - a) * (1.0 + a) / m;
            f_parts(y2.sqrt(), (a * a - mc) / m, a * a)
        }),
        Nd => sign_change_branch(x, m, |a| {
            if m == 0.0 {
                return if a == 1.0 { 0.0 } else { f64::NAN };
            }
            let a2 = a * a;
            let y2 = (a - 1.0) * (a + 1.0) / (m * a2);
            f_parts(y2.sqrt(), (1.0 - mc * a2) / (m * a2), 1.0 / a2)
        }),
    }
}

/// Branch `[0, 2K]` for functions that are odd about `u = K`.
fn upper_branch<F: Fn(f64) -> f64>(x: f64, m: f64, f: F) -> f64 {
    if x < 0.0 {
        2.0 * ellip_k(m) - f(-x)
    } else {
        f(x)
    }
}

/// dn and nd are positive for `m <= 1`; for `m > 1` they change sign at the
/// zero of dn, which sets the reflection point of the branch.
fn sign_change_branch<F: Fn(f64) -> f64>(x: f64, m: f64, f: F) -> f64 {
    if x < 0.0 {
        if m > 1.0 {
            2.0 * dn_zero(m) - f(-x)
        } else {
            f64::NAN
        }
    } else {
        f(x)
    }
}
