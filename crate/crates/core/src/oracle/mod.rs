//! Independent reference evaluator.
//!
//! Everything here is computed by adaptive quadrature of the defining
//! integrals, plus Newton/bisection inversion where a function is defined
//! through an inverse. None of the Carlson, Landen or Bartky kernels of the
//! rest of the crate are used, so agreement between the two is meaningful.

mod gk;
mod reference;
mod report;

pub use gk::{integrate, QuadResult};
pub use reference::{reference, LegendreKind};
pub use report::{error_report, reports_to_csv, ArgRange, ReportRow};

use std::f64::consts::FRAC_PI_2;

/// The catalogue of defining integrands. Parameters are passed separately
/// to [`quad`] in the order listed for each variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Integrand {
    /// `(x, y, z)`, over `t` in `[0, inf)`.
    CarlsonF,
    /// `(x, y, z)`.
    CarlsonD,
    /// `(x, y, z, p)`.
    CarlsonJ,
    /// `(x, y, z)`.
    CarlsonG,
    /// `(x, y)`.
    CarlsonC,
    /// `(kc)`, over `t` in `[0, x]`.
    BulirschEl1,
    /// `(kc, a, b)`.
    BulirschEl2,
    /// `(kc, p)`.
    BulirschEl3,
    /// `(kc, p, a, b)`, over `t` in `[0, inf)`.
    BulirschCel,
    /// `(m)` or `(nu, m)` for `Pi`, over the amplitude `theta`.
    Legendre(LegendreKind),
}

/// Which endpoints carry an inverse square-root singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SingularEnds {
    pub lower: bool,
    pub upper: bool,
}

/// A quadrature problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSpec {
    pub integrand: Integrand,
    pub lower: f64,
    pub upper: f64,
    pub singular_ends: SingularEnds,
    target_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
#[error("target tolerance {0} is below the 1e-14 floor")]
pub struct ToleranceTooSmall(pub f64);

impl OracleSpec {
    pub const DEFAULT_TOL: f64 = 1e-12;
    pub const MIN_TOL: f64 = 1e-14;

    pub fn new(integrand: Integrand, lower: f64, upper: f64) -> OracleSpec {
        OracleSpec {
            integrand,
            lower,
            upper,
            singular_ends: SingularEnds::default(),
            target_tol: Self::DEFAULT_TOL,
        }
    }

    pub fn singular(mut self, lower: bool, upper: bool) -> OracleSpec {
        self.singular_ends = SingularEnds { lower, upper };
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Result<OracleSpec, ToleranceTooSmall> {
        if !(tol >= Self::MIN_TOL) {
            return Err(ToleranceTooSmall(tol));
        }
        self.target_tol = tol;
        Ok(self)
    }

    pub fn target_tol(&self) -> f64 {
        self.target_tol
    }
}

/// Result of [`quad_detailed`].
#[derive(Debug, Clone, PartialEq)]
pub struct OracleOutcome {
    pub value: f64,
    pub error: f64,
    /// Set when the tolerance was not met; `value` is NaN in that case.
    pub diagnostic: Option<String>,
}

/// Point handed to an integrand: the abscissa and its exact distance to the
/// upper limit (known exactly when the upper end was substituted away).
#[derive(Clone, Copy)]
struct Node {
    t: f64,
    gap_hi: f64,
    upper: f64,
}

fn delta_sq(s: f64, c: f64, m: f64) -> f64 {
    if (0.5..=1.0).contains(&m) {
        c * c + (1.0 - m) * s * s
    } else {
        1.0 - m * s * s
    }
}

impl Integrand {
    fn eval(&self, at: Node, p: &[f64]) -> f64 {
        let t = at.t;
        match *self {
            Integrand::CarlsonF => 0.5 / ((t + p[0]) * (t + p[1]) * (t + p[2])).sqrt(),
            Integrand::CarlsonD => 1.5 / ((t + p[2]) * ((t + p[0]) * (t + p[1]) * (t + p[2])).sqrt()),
            Integrand::CarlsonJ => 1.5 / ((t + p[3]) * ((t + p[0]) * (t + p[1]) * (t + p[2])).sqrt()),
            Integrand::CarlsonG => {
                let (a, b, c) = (t + p[0], t + p[1], t + p[2]);
                0.25 * t * (p[0] / a + p[1] / b + p[2] / c) / (a * b * c).sqrt()
            }
            Integrand::CarlsonC => 0.5 / ((t + p[1]) * (t + p[0]).sqrt()),
            Integrand::BulirschEl1 => {
                let t2 = t * t;
                1.0 / ((1.0 + t2) * (1.0 + p[0] * p[0] * t2)).sqrt()
            }
            Integrand::BulirschEl2 => {
                let t2 = t * t;
                (p[1] + p[2] * t2) / ((1.0 + t2) * ((1.0 + t2) * (1.0 + p[0] * p[0] * t2)).sqrt())
            }
            Integrand::BulirschEl3 => {
                let t2 = t * t;
                (1.0 + t2) / ((1.0 + p[1] * t2) * ((1.0 + t2) * (1.0 + p[0] * p[0] * t2)).sqrt())
            }
            Integrand::BulirschCel => {
                let t2 = t * t;
                (p[2] + p[3] * t2) / ((1.0 + p[1] * t2) * ((1.0 + t2) * (1.0 + p[0] * p[0] * t2)).sqrt())
            }
            Integrand::Legendre(kind) => {
                let m = *p.last().expect("parameter");
                let (s, c) = t.sin_cos();
                let d2 = if m > 1.0 {
                    // 1 - m sin^2 = m sin(top - t) sin(top + t), with the
                    // distance to the turning point taken exactly when the
                    // upper limit is the turning point itself.
                    let top = (1.0 / m.sqrt()).asin();
                    let g = if at.upper == top { at.gap_hi } else { top - t };
                    m * g.sin() * (2.0 * top - g).sin()
                } else {
                    delta_sq(s, c, m)
                };
                let d = d2.sqrt();
                match kind {
                    LegendreKind::F => 1.0 / d,
                    LegendreKind::E => d,
                    LegendreKind::B => c * c / d,
                    LegendreKind::D => s * s / d,
                    LegendreKind::C => s * s * c * c / (d2 * d),
                    LegendreKind::Pi => {
                        let nu = p[0];
                        let q = if (0.5..=1.0).contains(&nu) {
                            c * c + (1.0 - nu) * s * s
                        } else {
                            1.0 - nu * s * s
                        };
                        1.0 / (q * d)
                    }
                }
            }
        }
    }
}

/// Evaluates the integral described by `spec`; NaN when the tolerance is
/// not met.
pub fn quad(spec: &OracleSpec, args: &[f64]) -> f64 {
    quad_detailed(spec, args).value
}

pub fn quad_detailed(spec: &OracleSpec, args: &[f64]) -> OracleOutcome {
    let (a, b) = (spec.lower, spec.upper);
    if a.is_nan() || b.is_nan() || args.iter().any(|v| v.is_nan()) {
        return fail(f64::NAN, "NaN input");
    }
    if a == b {
        return OracleOutcome {
            value: 0.0,
            error: 0.0,
            diagnostic: None,
        };
    }
    if a > b {
        let flipped = OracleSpec {
            lower: b,
            upper: a,
            singular_ends: SingularEnds {
                lower: spec.singular_ends.upper,
                upper: spec.singular_ends.lower,
            },
            ..*spec
        };
        let mut r = quad_detailed(&flipped, args);
        r.value = -r.value;
        return r;
    }
    if a.is_infinite() {
        return fail(f64::NAN, "only the upper limit may be infinite");
    }
    let tol = spec.target_tol;
    let f = |t: f64, gap_hi: f64| spec.integrand.eval(Node { t, gap_hi, upper: b }, args);
    let r = if b.is_infinite() {
        // t = a + w^2 (optional), then w = tan(theta).
        let sq = spec.singular_ends.lower;
        let g = |th: f64| {
            if th >= FRAC_PI_2 {
                return 0.0;
            }
            let w = th.tan();
            let sec2 = 1.0 + w * w;
            if sq {
                f(a + w * w, f64::INFINITY) * 2.0 * w * sec2
            } else {
                f(a + w, f64::INFINITY) * sec2
            }
        };
        integrate(&g, 0.0, FRAC_PI_2, tol)
    } else {
        match (spec.singular_ends.lower, spec.singular_ends.upper) {
            (false, false) => integrate(&|t: f64| f(t, b - t), a, b, tol),
            (true, false) => {
                let g = |w: f64| {
                    let t = a + w * w;
                    2.0 * w * f(t, b - t)
                };
                integrate(&g, 0.0, (b - a).sqrt(), tol)
            }
            (false, true) => {
                let g = |w: f64| 2.0 * w * f(b - w * w, w * w);
                integrate(&g, 0.0, (b - a).sqrt(), tol)
            }
            (true, true) => {
                let mid = 0.5 * (a + b);
                let h = ((mid - a).max(0.0)).sqrt();
                let g1 = |w: f64| {
                    let t = a + w * w;
                    2.0 * w * f(t, b - t)
                };
                let g2 = |w: f64| 2.0 * w * f(b - w * w, w * w);
                let r1 = integrate(&g1, 0.0, h, tol);
                let r2 = integrate(&g2, 0.0, (b - mid).sqrt(), tol);
                QuadResult {
                    value: r1.value + r2.value,
                    error: r1.error + r2.error,
                    converged: r1.converged && r2.converged,
                    evaluations: r1.evaluations + r2.evaluations,
                }
            }
        }
    };
    if r.converged && r.value.is_finite() {
        OracleOutcome {
            value: r.value,
            error: r.error,
            diagnostic: None,
        }
    } else {
        fail(
            r.error,
            &format!(
                "{:?} on [{a}, {b}] did not reach tolerance {tol:e} (estimate {:e}, {} evaluations)",
                spec.integrand, r.error, r.evaluations
            ),
        )
    }
}

fn fail(error: f64, why: &str) -> OracleOutcome {
    OracleOutcome {
        value: f64::NAN,
        error,
        diagnostic: Some(why.to_string()),
    }
}
