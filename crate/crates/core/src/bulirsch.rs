//! Bulirsch's elliptic integrals.
//!
//! The incomplete integrals `el1`, `el2`, `el3` are expressed through the
//! Carlson kernels in homogeneous form, so that neither a small nor a huge
//! `x` loses precision:
//!
//! * `|x| <= 1`: arguments `(1, 1 + kc² x², 1 + x²)` scaled by powers of `x`;
//! * `|x| > 1`:  arguments `(y, y + kc², y + 1)` with `y = 1/x²`.
//!
//! Infinite `x` is the complete case and goes to [`cel`], which uses
//! Bartky's transformation as published by Bulirsch, including the
//! reduction for negative `p`.

use std::f64::consts::FRAC_PI_2;

use crate::carlson::{rc, rd, rf, rj};
use crate::numeric::{any_nan, apply_symmetry, Parity, Tolerances};

/// Carlson arguments for one value of `x >= 0`, with `scale` the factor
/// that restores homogeneity: `F = scale * RF(x0, y0, z0)`.
struct Homog {
    /// `(1, 1 + kc²x², 1 + x²)` or `(y, y + kc², y + 1)`.
    args: [f64; 3],
    /// `x` or 1.
    scale: f64,
    /// `x²` or 1, the factor multiplying `1 + p x²` style terms.
    x2: f64,
}

fn homog(x: f64, kc2: f64) -> Homog {
    if x <= 1.0 {
        let x2 = x * x;
        Homog {
            args: [1.0, 1.0 + kc2 * x2, 1.0 + x2],
            scale: x,
            x2,
        }
    } else {
        let y = 1.0 / (x * x);
        Homog {
            args: [y, y + kc2, y + 1.0],
            scale: 1.0,
            x2: 1.0,
        }
    }
}

impl Homog {
    /// `1 + p x²` in the same scaling (`y + p` in the `y` form).
    fn p_arg(&self, p: f64) -> f64 {
        if self.x2 == 1.0 && self.scale == 1.0 {
            self.args[0] + p
        } else {
            1.0 + p * self.x2
        }
    }

    fn f(&self) -> f64 {
        let [a, b, c] = self.args;
        self.scale * rf(a, b, c)
    }

    /// `∫ sin²θ/Δ`, the `b` part of el2.
    fn d(&self) -> f64 {
        let [a, b, c] = self.args;
        self.scale.powi(3) / 3.0 * rd(a, b, c)
    }

    /// `∫ cos²θ/Δ`, the `a` part of el2.
    fn b(&self, kc2: f64) -> f64 {
        let [a, b, c] = self.args;
        let tail = self.scale * (a / (b * c)).sqrt();
        if kc2 == 0.0 {
            return tail;
        }
        kc2 * self.scale.powi(3) / 3.0 * rd(a, c, b) + tail
    }
}

/// `el1(x, kc) = ∫_0^x dt / sqrt((1 + t²)(1 + kc² t²))`.
pub fn el1(x: f64, kc: f64) -> f64 {
    if any_nan(&[x, kc]) {
        return f64::NAN;
    }
    apply_symmetry(Parity::Odd, x, |x| {
        if x.is_infinite() {
            return cel1(kc);
        }
        homog(x, kc * kc).f()
    })
}

/// `el2(x, kc, a, b) = ∫_0^x (a + b t²) dt / ((1 + t²) sqrt((1 + t²)(1 + kc² t²)))`.
pub fn el2(x: f64, kc: f64, a: f64, b: f64) -> f64 {
    if any_nan(&[x, kc, a, b]) {
        return f64::NAN;
    }
    apply_symmetry(Parity::Odd, x, |x| {
        if x.is_infinite() {
            return cel2(kc, a, b);
        }
        if x == 0.0 {
            return 0.0;
        }
        let kc2 = kc * kc;
        let h = homog(x, kc2);
        if a == b {
            return a * h.f();
        }
        let mut v = 0.0;
        if a != 0.0 {
            v += a * h.b(kc2);
        }
        if b != 0.0 {
            v += b * h.d();
        }
        v
    })
}

/// `el3(x, kc, p) = ∫_0^x (1 + t²) dt / ((1 + p t²) sqrt((1 + t²)(1 + kc² t²)))`,
/// real while `1 + p x² > 0`.
pub fn el3(x: f64, kc: f64, p: f64) -> f64 {
    if any_nan(&[x, kc, p]) {
        return f64::NAN;
    }
    if p == 1.0 {
        return el1(x, kc);
    }
    apply_symmetry(Parity::Odd, x, |x| {
        if x.is_infinite() {
            return cel3(kc, p);
        }
        if x == 0.0 {
            return 0.0;
        }
        let h = homog(x, kc * kc);
        let q = h.p_arg(p);
        if q <= 0.0 {
            return f64::NAN;
        }
        let [a, b, c] = h.args;
        h.f() + (1.0 - p) / 3.0 * h.scale.powi(3) * rj(a, b, c, q)
    })
}

/// General complete integral
/// `cel(kc, p, a, b) = ∫_0^∞ (a + b t²) dt / ((1 + p t²) sqrt((1 + t²)(1 + kc² t²)))`.
///
/// Negative `p` gives the Cauchy principal value.
pub fn cel(kc: f64, p: f64, a: f64, b: f64) -> f64 {
    if any_nan(&[kc, p, a, b]) || p == 0.0 {
        return f64::NAN;
    }
    if kc == 0.0 {
        // Logarithmic divergence at infinity unless b = 0.
        if b == 0.0 {
            return a * rc(1.0, p);
        }
        return if p > 0.0 { b.signum() * f64::INFINITY } else { f64::NAN };
    }
    let tol = Tolerances::DEFAULT.iter_tol;
    let mut qc = kc.abs();
    let mut a = a;
    let mut b = b;
    let mut p = p;
    let mut e = qc;
    let mut em = 1.0;
    if p > 0.0 {
        p = p.sqrt();
        b /= p;
    } else {
        let mut f = qc * qc;
        let mut q = 1.0 - f;
        let g = 1.0 - p;
        f -= p;
        q *= b - a * p;
        p = (f / g).sqrt();
        a = (a - b) / g;
        b = -q / (g * g * p) + a * p;
    }
    for _ in 0..Tolerances::DEFAULT.max_iter {
        let f = a;
        a += b / p;
        let g = e / p;
        b += f * g;
        b += b;
        p += g;
        let g = em;
        em += qc;
        if (g - qc).abs() <= g * tol {
            return FRAC_PI_2 * (b + a * em) / (em * (em + p));
        }
        qc = e.sqrt();
        qc += qc;
        e = qc * em;
        if !e.is_finite() {
            break;
        }
    }
    f64::NAN
}

/// `cel1(kc) = K(1 - kc²)`.
pub fn cel1(kc: f64) -> f64 {
    cel(kc, 1.0, 1.0, 1.0)
}

pub fn cel2(kc: f64, a: f64, b: f64) -> f64 {
    cel(kc, 1.0, a, b)
}

pub fn cel3(kc: f64, p: f64) -> f64 {
    cel(kc, p, 1.0, 1.0)
}
