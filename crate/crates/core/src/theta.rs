//! Jacobi theta functions by their q-series, Neville theta functions, and
//! the elliptic nome.
//!
//! The series for theta1 and theta2 run from `n = 0`. Summation stops once
//! the next power of `q` falls below `eps/4` of the partial sum; the slowly
//! converging range `q > 0.999` is refused with NaN.

use std::f64::consts::PI;

use crate::carlson::rf;
use crate::integrals::ellip_k;
use crate::numeric::{any_nan, reduce_pi, Tolerances};

/// Largest nome accepted by the series.
pub const Q_MAX: f64 = 0.999;

const MAX_TERMS: usize = 4000;

/// Which of the four Jacobi theta functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theta {
    One,
    Two,
    Three,
    Four,
}

impl Theta {
    pub fn from_index(j: u8) -> Option<Theta> {
        match j {
            1 => Some(Theta::One),
            2 => Some(Theta::Two),
            3 => Some(Theta::Three),
            4 => Some(Theta::Four),
            _ => None,
        }
    }
}

fn valid_nome(q: f64) -> bool {
    (0.0..=Q_MAX).contains(&q)
}

fn stop(power: f64, sum: f64) -> bool {
    power == 0.0 || power <= 0.25 * Tolerances::DEFAULT.series_tol * sum.abs()
}

/// `sum_{n>=0} s^n q^{n(n+1)} f((2n+1)x)` with `s = ±1`.
fn odd_harmonics(x: f64, q: f64, alternating: bool, f: fn(f64) -> f64) -> f64 {
    let q2 = q * q;
    let mut power = 1.0;
    let mut step = q2;
    let mut sum = f(x);
    for n in 1..MAX_TERMS {
        power *= step;
        step *= q2;
        if stop(power, sum) {
            break;
        }
        let term = power * f((2 * n + 1) as f64 * x);
        sum += if alternating && n % 2 == 1 { -term } else { term };
    }
    sum
}

/// `1 + 2 sum_{n>=1} s^n q^{n²} cos(2nx)`.
fn even_harmonics(x: f64, q: f64, alternating: bool) -> f64 {
    let q2 = q * q;
    let mut power = 1.0;
    let mut step = q;
    let mut sum = 0.0;
    for n in 1..MAX_TERMS {
        power *= step;
        step *= q2;
        if stop(2.0 * power, 1.0 + sum) {
            break;
        }
        let term = power * ((2 * n) as f64 * x).cos();
        sum += if alternating && n % 2 == 1 { -term } else { term };
    }
    1.0 + 2.0 * sum
}

/// Jacobi theta function `theta_j(x, q)`, `0 <= q <= 0.999`.
pub fn jtheta(j: Theta, x: f64, q: f64) -> f64 {
    if any_nan(&[x, q]) || !valid_nome(q) || x.is_infinite() {
        return f64::NAN;
    }
    // theta1 and theta2 change sign over a shift of pi; theta3, theta4 have
    // period pi.
    let red = reduce_pi(x);
    let flip = red.n % 2.0 != 0.0;
    let r = red.r;
    match j {
        Theta::One | Theta::Two => {
            if q == 0.0 {
                return 0.0;
            }
            let v = if j == Theta::One {
                odd_harmonics(r, q, true, f64::sin)
            } else {
                odd_harmonics(r, q, false, f64::cos)
            };
            let v = 2.0 * q.powf(0.25) * v;
            if flip {
                -v
            } else {
                v
            }
        }
        Theta::Three => even_harmonics(r, q, false),
        Theta::Four => even_harmonics(r, q, true),
    }
}

/// `theta1'(0, q) = 2 q^{1/4} sum (-1)^n (2n+1) q^{n(n+1)}`.
pub fn jtheta1_prime0(q: f64) -> f64 {
    if q.is_nan() || !valid_nome(q) {
        return f64::NAN;
    }
    if q == 0.0 {
        return 0.0;
    }
    let q2 = q * q;
    let mut power = 1.0;
    let mut step = q2;
    let mut sum = 1.0;
    for n in 1..MAX_TERMS {
        power *= step;
        step *= q2;
        let term = (2 * n + 1) as f64 * power;
        if stop(term, sum) {
            break;
        }
        sum += if n % 2 == 1 { -term } else { term };
    }
    2.0 * q.powf(0.25) * sum
}

/// The four Neville theta functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Neville {
    C,
    D,
    N,
    S,
}

/// Neville theta function at scaled argument `z = pi x / (2K)`.
fn neville_at(kind: Neville, x: f64, z: f64, two_k_over_pi: f64, q: f64) -> f64 {
    if q == 0.0 {
        return match kind {
            Neville::C => z.cos(),
            Neville::S => z.sin(),
            Neville::D | Neville::N => 1.0,
        };
    }
    match kind {
        Neville::C => jtheta(Theta::Two, z, q) / jtheta(Theta::Two, 0.0, q),
        Neville::D => jtheta(Theta::Three, z, q) / jtheta(Theta::Three, 0.0, q),
        Neville::N => jtheta(Theta::Four, z, q) / jtheta(Theta::Four, 0.0, q),
        Neville::S => {
            if x == 0.0 {
                return 0.0;
            }
            two_k_over_pi * jtheta(Theta::One, z, q) / jtheta1_prime0(q)
        }
    }
}

/// Neville theta function in nome form, `0 <= q <= 0.999`.
///
/// The half period comes from the nome itself: `2K/pi = theta3(0, q)²`.
pub fn neville_theta(kind: Neville, x: f64, q: f64) -> f64 {
    if any_nan(&[x, q]) || !valid_nome(q) || x.is_infinite() {
        return f64::NAN;
    }
    let t3 = jtheta(Theta::Three, 0.0, q);
    let scale = t3 * t3;
    neville_at(kind, x, x / scale, scale, q)
}

/// Neville theta function in parameter form, `0 <= m < 1`.
pub fn neville_theta_m(kind: Neville, x: f64, m: f64) -> f64 {
    if any_nan(&[x, m]) || !(0.0..1.0).contains(&m) || x.is_infinite() {
        return f64::NAN;
    }
    let q = mnome(m);
    if !valid_nome(q) {
        return f64::NAN;
    }
    let kk = ellip_k(m);
    let scale = 2.0 * kk / PI;
    neville_at(kind, x, x / scale, scale, q)
}

/// Nome `q(m) = exp(-pi K(1-m)/K(m))`, `0 <= m <= 1`.
pub fn mnome(m: f64) -> f64 {
    if m.is_nan() || !(0.0..=1.0).contains(&m) {
        return f64::NAN;
    }
    if m == 0.0 {
        return 0.0;
    }
    if m == 1.0 {
        return 1.0;
    }
    // K' from m directly keeps its accuracy for small m.
    let kp = rf(0.0, m, 1.0);
    (-PI * kp / ellip_k(m)).exp()
}

/// Nome from the modulus, `|k| <= 1`.
pub fn elnome(k: f64) -> f64 {
    mnome(k * k)
}

/// Inverse nome: the modulus `k = (theta2(0,q)/theta3(0,q))²`.
pub fn ielnome(q: f64) -> f64 {
    if q.is_nan() || !(0.0..1.0).contains(&q) {
        return f64::NAN;
    }
    let r = jtheta(Theta::Two, 0.0, q) / jtheta(Theta::Three, 0.0, q);
    r * r
}
