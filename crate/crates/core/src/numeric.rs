//! Value semantics shared by every kernel in the crate.
//!
//! All public functions take and return plain `f64`. The contract on the
//! returned value is:
//!
//! * a finite number for in-domain arguments,
//! * `±Inf` at a pole or at a limit for an infinite argument when the
//!   one-sided limit is unambiguous (`K(1) = +Inf`, `K(-Inf) = 0`),
//! * `NaN` when an argument lies outside the real domain of the function,
//!   when any argument is `NaN`, or when an iteration fails to converge.
//!
//! No function in the crate panics or returns an error for a numeric
//! argument; errors are reserved for the shape/arity checks of the
//! elemental layer.

use std::f64::consts::PI;

/// Extended real value: finite, `+Inf`, `-Inf` or `NaN`.
pub type ExtReal = f64;

/// Classification of an [`ExtReal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtClass {
    Finite,
    PosInf,
    NegInf,
    NaN,
}

pub fn classify(v: ExtReal) -> ExtClass {
    if v.is_nan() {
        ExtClass::NaN
    } else if v == f64::INFINITY {
        ExtClass::PosInf
    } else if v == f64::NEG_INFINITY {
        ExtClass::NegInf
    } else {
        ExtClass::Finite
    }
}

/// Convergence constants for the iterative kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative threshold for Landen/AGM/Bartky iterations.
    pub iter_tol: f64,
    /// Relative threshold for series truncation.
    pub series_tol: f64,
    /// Hard cap on the number of iterations of any loop.
    pub max_iter: usize,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        // sqrt(f64::EPSILON)
        iter_tol: 1.490_116_119_384_765_6e-8,
        series_tol: f64::EPSILON,
        max_iter: 40,
    };

    pub fn is_valid(&self) -> bool {
        self.iter_tol > 0.0
            && self.iter_tol < 1.0
            && self.series_tol > 0.0
            && self.series_tol < 1.0
            && self.max_iter >= 8
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Parity of a scalar kernel in its first argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Evaluates `kernel` only for non-negative arguments and extends it to
/// negative `x` by parity. `-0.0` is treated as `+0.0`.
#[inline]
pub fn apply_symmetry<F>(parity: Parity, x: f64, kernel: F) -> f64
where
    F: FnOnce(f64) -> f64,
{
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        match parity {
            Parity::Even => kernel(-x),
            Parity::Odd => -kernel(-x),
        }
    } else {
        kernel(x.abs())
    }
}

/// Calls an m-form function with `m = k^2`.
#[inline]
pub fn k_wrapper<F>(k: f64, m_function: F) -> f64
where
    F: FnOnce(f64) -> f64,
{
    m_function(k * k)
}

/// True when any of the arguments is NaN.
#[inline]
pub(crate) fn any_nan(args: &[f64]) -> bool {
    args.iter().any(|a| a.is_nan())
}

/// Low part of pi: `PI + PI_LO` approximates pi to about 1e-32.
pub(crate) const PI_LO: f64 = 1.224_646_799_147_353_2e-16;

/// Splits `phi = n*pi + r` with `|r| <= pi/2` (up to rounding at the
/// boundary). The subtraction is carried out with fused multiply-adds on a
/// two-term representation of pi, so `r` is accurate to a few ulp even for
/// large `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiPeriod {
    pub n: f64,
    pub r: f64,
}

pub fn reduce_pi(phi: f64) -> QuasiPeriod {
    let n = (phi / PI).round();
    if n == 0.0 {
        return QuasiPeriod { n, r: phi };
    }
    let r = (-n).mul_add(PI, phi);
    let r = (-n).mul_add(PI_LO, r);
    QuasiPeriod { n, r }
}

/// Splits `x = n*period + r` with `|r| <= period/2`, for a period that is
/// itself only known to working precision.
pub(crate) fn reduce_by(x: f64, period: f64) -> QuasiPeriod {
    let n = (x / period).round();
    if n == 0.0 {
        return QuasiPeriod { n, r: x };
    }
    QuasiPeriod {
        n,
        r: (-n).mul_add(period, x),
    }
}

/// `a^2 + m b^2 - 1` without rounding error beyond the last operation.
///
/// Used to check the Pythagorean relations of sn, cn, dn: the naive
/// expression loses a couple of ulp of `max(a^2, |m b^2|)` by itself.
pub fn pythag_residual(a: f64, b: f64, m: f64) -> f64 {
    let b2 = b * b;
    let b2_lo = b.mul_add(b, -b2);
    let mb = m * b2;
    let mb_lo = m.mul_add(b2, -mb) + m * b2_lo;
    let a2 = a * a;
    let a2_lo = a.mul_add(a, -a2);
    // two-sum of the leading parts
    let hi = a2 + mb;
    let v = hi - a2;
    let lo = (a2 - (hi - v)) + (mb - v);
    (hi - 1.0) + (lo + a2_lo + mb_lo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kernel(x: f64) -> f64 {
        x * x + 1.0
    }

    #[test]
    fn symmetry_even_and_odd() {
        assert_eq!(apply_symmetry(Parity::Even, -2.0, kernel), kernel(2.0));
        assert_eq!(apply_symmetry(Parity::Odd, -2.0, kernel), -kernel(2.0));
        assert!(apply_symmetry(Parity::Odd, f64::NAN, kernel).is_nan());
        // negative zero is zero
        assert_eq!(apply_symmetry(Parity::Odd, -0.0, kernel), 1.0);
    }

    #[test]
    fn symmetry_never_evaluates_negative_argument() {
        let probe = |x: f64| {
            assert!(x >= 0.0);
            x
        };
        for &x in &[-3.0, -0.0, 0.0, 5.5, f64::NEG_INFINITY] {
            apply_symmetry(Parity::Odd, x, probe);
        }
    }

    #[test]
    fn k_wrapper_squares() {
        assert_eq!(k_wrapper(-0.5, |m| m), 0.25);
        assert_eq!(k_wrapper(3.0, |m| m + 1.0), 10.0);
    }

    #[test]
    fn reduce_pi_is_compensated() {
        let q = reduce_pi(0.3 + 1000.0 * PI);
        assert_eq!(q.n, 1000.0);
        assert!((q.r - 0.3).abs() < 1e-12);
        let q = reduce_pi(-7.0);
        assert_eq!(q.n, -2.0);
        assert!((q.r - (-7.0 + 2.0 * PI)).abs() < 1e-15);
        assert!(reduce_pi(1.0).r == 1.0);
    }

    #[test]
    fn default_tolerances_are_valid() {
        assert!(Tolerances::DEFAULT.is_valid());
        assert_eq!(Tolerances::DEFAULT.iter_tol, f64::EPSILON.sqrt());
        assert!(!Tolerances {
            max_iter: 3,
            ..Tolerances::DEFAULT
        }
        .is_valid());
    }

    #[test]
    fn classification() {
        assert_eq!(classify(1.0), ExtClass::Finite);
        assert_eq!(classify(f64::INFINITY), ExtClass::PosInf);
        assert_eq!(classify(f64::NEG_INFINITY), ExtClass::NegInf);
        assert_eq!(classify(f64::NAN), ExtClass::NaN);
    }

    #[test]
    fn pythag_residual_sees_below_rounding() {
        let x = 0.1f64;
        let (s, c) = x.sin_cos();
        let exact = pythag_residual(c, s, 1.0);
        assert!(exact.abs() <= 2.0 * f64::EPSILON);
        assert_eq!(
            pythag_residual(1.0 + f64::EPSILON, 0.0, 0.0),
            2.0 * f64::EPSILON + f64::EPSILON * f64::EPSILON
        );
    }
}
