//! Planar elastica and the finite-strain cantilever under a follower
//! force, both in closed form through Jacobi functions.

use ellipfn::integrals::{ellip_e, ellip_k, jacobi_epsilon, jacobi_lambda, jacobi_zeta};
use ellipfn::jacobi::sncndn;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error("modulus {0} outside (0, 1)")]
    Modulus(f64),
    #[error("stiffness ratio {0} outside [-1, 1]")]
    StiffnessRatio(f64),
    #[error("arclength grid must be strictly increasing inside [0, 1]")]
    Grid,
    #[error("{0} must be finite")]
    NotFinite(&'static str),
}

/// One point of a deformed centre line; `phi` is the tangent angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub s: f64,
    pub x: f64,
    pub y: f64,
    pub phi: f64,
}

/// `n` equally spaced points on `[0, 1]`, hitting both ends exactly.
pub fn unit_grid(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n).map(|i| i as f64 / (n - 1) as f64).collect(),
    }
}

fn check_grid(g: &[f64]) -> Result<(), ConfigError> {
    let inside = g.iter().all(|s| (0.0..=1.0).contains(s));
    let increasing = g.windows(2).all(|w| w[0] < w[1]);
    if g.is_empty() || !inside || !increasing {
        return Err(ConfigError::Grid);
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElasticaConfig {
    pub omega: f64,
    pub c: f64,
    pub k_list: Vec<f64>,
    pub s_grid: Vec<f64>,
}

impl ElasticaConfig {
    /// Load `omega = 5`, `C = 1`, `k = 0.1, ..., 0.9` on 101 points.
    pub fn reference() -> ElasticaConfig {
        ElasticaConfig {
            omega: 5.0,
            c: 1.0,
            k_list: (1..=9).map(|i| i as f64 / 10.0).collect(),
            s_grid: unit_grid(101),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !self.omega.is_finite() || !self.c.is_finite() {
            return Err(ConfigError::NotFinite("omega and C"));
        }
        if self.omega <= 0.0 {
            return Err(ConfigError::NotPositive("omega"));
        }
        if let Some(&k) = self.k_list.iter().find(|k| !(**k > 0.0 && **k < 1.0)) {
            return Err(ConfigError::Modulus(k));
        }
        check_grid(&self.s_grid)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElasticaCurve {
    pub k: f64,
    pub samples: Vec<CurveSample>,
}

/// Euler's flexural elastica
/// `x = (2/ω)[ε(ωs + C) − ε(C)] − s`, `y = (2k/ω)[cn(C) − cn(ωs + C)]`,
/// tangent angle `phi = 2 atan2(k sn, dn)`.
pub fn elastica_curve(cfg: &ElasticaConfig) -> Result<Vec<ElasticaCurve>, ConfigError> {
    cfg.validate()?;
    let (w, c) = (cfg.omega, cfg.c);
    Ok(cfg
        .k_list
        .iter()
        .map(|&k| {
            let m = k * k;
            let e0 = jacobi_epsilon(c, m);
            let cn0 = sncndn(c, m).cn;
            let samples = cfg
                .s_grid
                .iter()
                .map(|&s| {
                    let u = w * s + c;
                    let t = sncndn(u, m);
                    CurveSample {
                        s,
                        x: 2.0 * (jacobi_epsilon(u, m) - e0) / w - s,
                        y: 2.0 * k * (cn0 - t.cn) / w,
                        phi: 2.0 * (k * t.sn).atan2(t.dn),
                    }
                })
                .collect();
            ElasticaCurve { k, samples }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct CantileverConfig {
    /// End angle between the force and the inward normal, radians.
    pub psi1: f64,
    /// Generalized slenderness.
    pub lambda: f64,
    /// Stiffness ratio.
    pub nu: f64,
    /// Load factor.
    pub omega: f64,
    pub s_grid: Vec<f64>,
}

impl CantileverConfig {
    /// `psi1 = pi/3`, `lambda = 10`, `omega = 4`, shearless, 101 points.
    pub fn reference() -> CantileverConfig {
        CantileverConfig {
            psi1: std::f64::consts::FRAC_PI_3,
            lambda: 10.0,
            nu: 1.0,
            omega: 4.0,
            s_grid: unit_grid(101),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if ![self.psi1, self.lambda, self.nu, self.omega]
            .iter()
            .all(|v| v.is_finite())
        {
            return Err(ConfigError::NotFinite("psi1, lambda, nu and omega"));
        }
        if self.lambda <= 0.0 {
            return Err(ConfigError::NotPositive("lambda"));
        }
        if self.omega <= 0.0 {
            return Err(ConfigError::NotPositive("omega"));
        }
        if !(-1.0..=1.0).contains(&self.nu) {
            return Err(ConfigError::StiffnessRatio(self.nu));
        }
        check_grid(&self.s_grid)
    }
}

/// Constants of the closed-form cantilever solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CantileverParams {
    pub k: f64,
    /// `m²`, which may be negative.
    pub m2: f64,
    /// Modified load `ω̃`.
    pub omega_t: f64,
    /// Parameter `k̃²` of the Jacobi functions.
    pub mt: f64,
    pub c: f64,
    pub alpha: f64,
    eta2: f64,
    cfg_nu: f64,
    omega: f64,
    lambda: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CantileverSolution {
    pub params: CantileverParams,
    /// Deformed length; NaN unless the beam is shearless.
    pub l: f64,
    pub samples: Vec<CurveSample>,
    /// Set when an intermediate quantity is not real.
    pub diagnostic: Option<String>,
}

impl CantileverParams {
    pub fn new(cfg: &CantileverConfig) -> (CantileverParams, Option<String>) {
        let eta2 = (cfg.omega / cfg.lambda).powi(2);
        let k = (cfg.psi1 / 2.0).sin();
        let k2 = k * k;
        let nu = cfg.nu;
        let m2 = nu * eta2 * k2 / (1.0 - nu * eta2 * (1.0 - k2));
        let radicand = 1.0 + nu * eta2 * (2.0 * k2 - 1.0);
        let omega_t = cfg.omega * radicand.sqrt();
        let mt = (k2 + m2) / (1.0 + m2);
        let mut why = None;
        if radicand < 0.0 {
            why = Some(format!("1 + nu eta^2 (2k^2 - 1) = {radicand} is negative"));
        } else if !(mt.is_finite() && (0.0..=1.0).contains(&mt)) {
            why = Some(format!("parameter k~^2 = {mt} is outside [0, 1]"));
        }
        let c = -omega_t + ellip_k(mt);
        let t = sncndn(c, mt);
        let alpha = 2.0 * (k * t.sn / (1.0 + m2 * t.cn * t.cn).sqrt()).asin();
        let p = CantileverParams {
            k,
            m2,
            omega_t,
            mt,
            c,
            alpha,
            eta2,
            cfg_nu: nu,
            omega: cfg.omega,
            lambda: cfg.lambda,
        };
        (p, why)
    }

    fn bracket(&self, u: f64) -> f64 {
        let t = sncndn(u, self.mt);
        t.sn * t.cn * t.dn / (1.0 + self.m2 * t.cn * t.cn)
    }

    fn cn_term(&self, u: f64) -> f64 {
        let cn = sncndn(u, self.mt).cn;
        cn / (1.0 + self.m2 * cn * cn)
    }

    /// Unrotated abscissa with the epsilon function.
    pub fn x_epsilon(&self, s: f64) -> f64 {
        let (w, wt, c) = (self.omega, self.omega_t, self.c);
        let u = wt * s + c;
        let lin = (1.0 - self.cfg_nu) * w * w / (2.0 * self.lambda * self.lambda) + wt * wt / (w * w);
        let e = jacobi_epsilon(u, self.mt) - jacobi_epsilon(c, self.mt);
        -lin * s + 2.0 * wt / (w * w) * (e - self.m2 * (self.bracket(u) - self.bracket(c)))
    }

    /// The same abscissa written with Jacobi's zeta function.
    pub fn x_zeta(&self, s: f64) -> f64 {
        let (w, wt, c, mt) = (self.omega, self.omega_t, self.c, self.mt);
        let u = wt * s + c;
        let ek = ellip_e(mt) / ellip_k(mt);
        (self.cfg_nu - 1.0) * w * w * s / (self.lambda * self.lambda) / 2.0
            + 2.0 * wt / (w * w)
                * ((ek - 0.5) * wt * s + jacobi_zeta(u, mt)
                    - jacobi_zeta(c, mt)
                    - self.m2 * (self.bracket(u) - self.bracket(c)))
    }

    /// Unrotated ordinate.
    pub fn y(&self, s: f64) -> f64 {
        let (w, wt) = (self.omega, self.omega_t);
        let u = wt * s + self.c;
        2.0 * self.k * wt * (1.0 + self.m2).sqrt() / (w * w) * (self.cn_term(self.c) - self.cn_term(u))
    }

    pub fn sample(&self, s: f64) -> CurveSample {
        let (x, y) = (self.x_epsilon(s), self.y(s));
        let (sa, ca) = self.alpha.sin_cos();
        let u = self.omega_t * s + self.c;
        let t = sncndn(u, self.mt);
        let phi = 2.0 * (self.k * t.sn / (1.0 + self.m2 * t.cn * t.cn).sqrt()).asin() - self.alpha;
        CurveSample {
            s,
            x: x * ca + y * sa,
            y: -x * sa + y * ca,
            phi,
        }
    }

    /// Deformed length of a shearless beam; NaN otherwise.
    pub fn length(&self) -> f64 {
        if self.cfg_nu != 1.0 {
            return f64::NAN;
        }
        let r = 2.0 * self.k * self.k / self.m2;
        let n = self.m2 / (1.0 + self.m2);
        let dl = jacobi_lambda(self.omega_t + self.c, n, self.mt) - jacobi_lambda(self.c, n, self.mt);
        1.0 - (1.0 + r) * self.eta2 + r * self.eta2 / self.omega_t * dl
    }
}

pub fn cantilever_solve(cfg: &CantileverConfig) -> Result<CantileverSolution, ConfigError> {
    cfg.validate()?;
    let (params, diagnostic) = CantileverParams::new(cfg);
    let samples = cfg.s_grid.iter().map(|&s| params.sample(s)).collect();
    Ok(CantileverSolution {
        params,
        l: params.length(),
        samples,
        diagnostic,
    })
}

/// Length of the polyline through `(x, y)` sampled on `n` equal steps.
pub fn polyline_length(p: &CantileverParams, n: usize) -> f64 {
    let pts: Vec<CurveSample> = unit_grid(n + 1).into_iter().map(|s| p.sample(s)).collect();
    pts.windows(2).map(|w| (w[1].x - w[0].x).hypot(w[1].y - w[0].y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elastica_starts_at_origin() {
        let curves = elastica_curve(&ElasticaConfig::reference()).unwrap();
        assert_eq!(curves.len(), 9);
        for c in &curves {
            assert_eq!((c.samples[0].x, c.samples[0].y), (0.0, 0.0));
            assert!(c
                .samples
                .iter()
                .all(|p| p.x.is_finite() && p.y.is_finite() && p.phi.is_finite()));
        }
    }

    #[test]
    fn elastica_endpoint() {
        let cfg = ElasticaConfig {
            omega: 5.0,
            c: 1.0,
            k_list: vec![0.5],
            s_grid: vec![0.0, 1.0],
        };
        let p = elastica_curve(&cfg).unwrap()[0].samples[1];
        assert!((p.x - 0.689_120_186_792_330_884).abs() < 1e-14);
        assert!((p.y + 0.035_619_242_437_327_068_4).abs() < 1e-14);
    }

    #[test]
    fn cantilever_constants() {
        let sol = cantilever_solve(&CantileverConfig::reference()).unwrap();
        let p = sol.params;
        assert!((p.c + 2.132_809_485_491_133_9).abs() < 1e-13);
        assert!((p.alpha + 0.968_301_931_074_141_15).abs() < 1e-13);
        assert!((sol.l - 0.885_147_817_312_043_563).abs() < 1e-13);
        assert_eq!((sol.samples[0].x, sol.samples[0].y), (0.0, 0.0));
        assert!(sol.diagnostic.is_none());
    }

    #[test]
    fn two_abscissa_forms_agree() {
        for cfg in [
            CantileverConfig::reference(),
            CantileverConfig {
                nu: -1.0,
                ..CantileverConfig::reference()
            },
            CantileverConfig {
                nu: 0.3,
                omega: 2.5,
                psi1: 2.0,
                ..CantileverConfig::reference()
            },
        ] {
            let (p, _) = CantileverParams::new(&cfg);
            for s in unit_grid(51) {
                assert!((p.x_epsilon(s) - p.x_zeta(s)).abs() <= 1e-12, "{cfg:?} {s}");
            }
        }
    }

    #[test]
    fn length_only_when_shearless() {
        let sol = cantilever_solve(&CantileverConfig {
            nu: -1.0,
            ..CantileverConfig::reference()
        })
        .unwrap();
        assert!(sol.l.is_nan());
    }

    #[test]
    fn invalid_configs() {
        let bad = CantileverConfig {
            lambda: 0.0,
            ..CantileverConfig::reference()
        };
        assert_eq!(cantilever_solve(&bad).unwrap_err(), ConfigError::NotPositive("lambda"));
        let bad = ElasticaConfig {
            k_list: vec![1.0],
            ..ElasticaConfig::reference()
        };
        assert!(elastica_curve(&bad).is_err());
        let bad = ElasticaConfig {
            s_grid: vec![0.0, 0.5, 0.5],
            ..ElasticaConfig::reference()
        };
        assert_eq!(elastica_curve(&bad).unwrap_err(), ConfigError::Grid);
    }

    #[test]
    fn non_real_intermediate_is_reported() {
        // nu eta^2 large and negative drives the radicand below zero
        let cfg = CantileverConfig {
            nu: -1.0,
            omega: 30.0,
            lambda: 10.0,
            psi1: 3.0,
            ..CantileverConfig::reference()
        };
        let sol = cantilever_solve(&cfg).unwrap();
        assert!(sol.diagnostic.is_some());
        assert!(sol.samples[1].x.is_nan());
    }
}
