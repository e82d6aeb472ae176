//! Lemniscate functions and the Gudermannian.
//!
//! `sl(x) = sd(x sqrt2 | 1/2)/sqrt2` and `cl(x) = cn(x sqrt2 | 1/2)`; the
//! inverses are the lemniscatic arc length `∫ dt/sqrt(1 - t⁴)`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, SQRT_2};

use crate::integrals::ellip_f_x;
use crate::inverse::inverse_glaisher;
use crate::jacobi::{glaisher, GlaisherCode};
use crate::numeric::{apply_symmetry, Parity};

/// Lemniscate sine.
pub fn gsl(x: f64) -> f64 {
    FRAC_1_SQRT_2 * glaisher(GlaisherCode::Sd, SQRT_2 * x, 0.5)
}

/// Lemniscate cosine.
pub fn gcl(x: f64) -> f64 {
    glaisher(GlaisherCode::Cn, SQRT_2 * x, 0.5)
}

/// Inverse lemniscate sine `∫_0^x dt/sqrt(1 - t⁴) = F(x | -1)`, `|x| <= 1`.
pub fn igsl(x: f64) -> f64 {
    ellip_f_x(x, -1.0)
}

/// Inverse lemniscate cosine `∫_x^1 dt/sqrt(1 - t⁴)`, `|x| <= 1`, with
/// values in `[0, varpi]`.
pub fn igcl(x: f64) -> f64 {
    FRAC_1_SQRT_2 * inverse_glaisher(GlaisherCode::Cn, x, 0.5)
}

/// Gudermannian `gd(x) = atan(sinh x)`.
pub fn gd(x: f64) -> f64 {
    apply_symmetry(Parity::Odd, x, |x| {
        if x <= 40.0 {
            x.sinh().atan()
        } else {
            FRAC_PI_2 - 2.0 * (-x).exp().atan()
        }
    })
}

/// Inverse Gudermannian `asinh(tan x)`, `|x| <= pi/2`.
pub fn igd(x: f64) -> f64 {
    apply_symmetry(Parity::Odd, x, |x| {
        if x == FRAC_PI_2 {
            f64::INFINITY
        } else if x > FRAC_PI_2 {
            f64::NAN
        } else {
            x.tan().asinh()
        }
    })
}
