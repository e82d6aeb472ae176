//! Jacobian elliptic functions for any real parameter `m`.
//!
//! The core evaluates sn, cn, dn for `0 < m < 1` by the descending Landen
//! (arithmetic-geometric mean) transformation. Before the iteration the
//! argument is reduced modulo `2K` and folded into `[0, K/2]` with the
//! quarter-period shift `(sn, cn, dn)(K - y) = (cd y, k' sd y, k' nd y)`,
//! which keeps cn and dn accurate to a few ulp near the quarter period.
//!
//! Parameters outside `[0, 1]` are mapped back into it:
//!
//! * `m < 0`: with `mu = -m/(1-m)` and `v = x sqrt(1-m)`,
//!   `sn = sd(v|mu)/sqrt(1-m)`, `cn = cd(v|mu)`, `dn = nd(v|mu)`;
//! * `m > 1`: with `mu = 1/m` and `v = x sqrt(m)`,
//!   `sn = sn(v|mu)/sqrt(m)`, `cn = dn(v|mu)`, `dn = cn(v|mu)`.
//!
//! Both maps keep every function real on the whole real line.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::carlson::rf;
use crate::integrals::ellip_k;
use crate::numeric::{reduce_by, Parity, Tolerances};

/// The triple `(sn, cn, dn)` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnCnDn {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

impl SnCnDn {
    const NAN: SnCnDn = SnCnDn {
        sn: f64::NAN,
        cn: f64::NAN,
        dn: f64::NAN,
    };
}

/// Simultaneous `sn(x|m)`, `cn(x|m)`, `dn(x|m)`.
pub fn sncndn(x: f64, m: f64) -> SnCnDn {
    if x.is_nan() || m.is_nan() || x.is_infinite() || m.is_infinite() {
        return SnCnDn::NAN;
    }
    if m == 0.0 {
        let (s, c) = x.sin_cos();
        return SnCnDn { sn: s, cn: c, dn: 1.0 };
    }
    if m == 1.0 {
        let sech = 1.0 / x.cosh();
        return SnCnDn {
            sn: x.tanh(),
            cn: sech,
            dn: sech,
        };
    }
    if m < 0.0 {
        let w = 1.0 - m;
        let sw = w.sqrt();
        let mu = -m / w;
        let t = unit_interval(x * sw, mu, 1.0 / w);
        let nd = 1.0 / t.dn;
        return SnCnDn {
            sn: t.sn * nd / sw,
            cn: t.cn / t.dn,
            dn: nd,
        };
    }
    if m > 1.0 {
        let sm = m.sqrt();
        let t = unit_interval(x * sm, 1.0 / m, (m - 1.0) / m);
        return SnCnDn {
            sn: t.sn / sm,
            cn: t.dn,
            dn: t.cn,
        };
    }
    unit_interval(x, m, 1.0 - m)
}

/// sn, cn, dn for `0 < m < 1`, with the complementary parameter `mc = 1 - m`
/// supplied separately so that it keeps full relative accuracy.
fn unit_interval(x: f64, m: f64, mc: f64) -> SnCnDn {
    let kk = rf(0.0, mc, 1.0);
    if !kk.is_finite() || !x.is_finite() {
        return SnCnDn::NAN;
    }
    let neg = x < 0.0;
    let q = reduce_by(x.abs(), 2.0 * kk);
    let flip = q.n % 2.0 != 0.0;
    let r_neg = q.r < 0.0;
    let a = q.r.abs();

    let (s, c, d) = if a <= 0.5 * kk {
        landen(a, m, mc)
    } else {
        let y = (kk - a).max(0.0);
        let (s1, c1, d1) = landen(y, m, mc);
        let kc = mc.sqrt();
        (c1 / d1, kc * s1 / d1, kc / d1)
    };

    // dn^2 = mc + m cn^2 has no cancellation, which keeps dn consistent with
    // sn and cn to about an ulp
    let d = if d.is_finite() { m.mul_add(c * c, mc).sqrt() } else { d };
    let mut sn = s;
    let mut cn = c;
    if r_neg {
        sn = -sn;
    }
    if flip {
        sn = -sn;
        cn = -cn;
    }
    if neg {
        sn = -sn;
    }
    SnCnDn { sn, cn, dn: d }
}

/// Descending Landen / AGM evaluation on `0 <= x <= K/2`.
fn landen(x: f64, m: f64, mc: f64) -> (f64, f64, f64) {
    let tol = Tolerances::DEFAULT.iter_tol;
    let max_iter = Tolerances::DEFAULT.max_iter;
    let mut a = [0.0f64; 41];
    let mut c = [0.0f64; 41];
    a[0] = 1.0;
    c[0] = m.sqrt();
    let mut b = mc.sqrt();
    let mut n = 0;
    while c[n] > tol * a[n] {
        if n >= max_iter {
            return (f64::NAN, f64::NAN, f64::NAN);
        }
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }
    if n == 0 {
        let (s, co) = x.sin_cos();
        return (s, co, (1.0 - m * s * s).sqrt());
    }
    let mut phi = 2f64.powi(n as i32) * a[n] * x;
    let mut prev = phi;
    for i in (1..=n).rev() {
        prev = phi;
        phi = 0.5 * (phi + (c[i] / a[i] * phi.sin()).asin());
    }
    let (s, co) = phi.sin_cos();
    (s, co, co / (prev - phi).cos())
}

/// Jacobi amplitude `am(x|m) = ∫_0^x dn(t|m) dt`.
///
/// For `m <= 1` the amplitude is assembled from the reduced argument plus an
/// exact multiple of pi, so `am(x + 2nK) = am(x) + n pi`. For `m > 1`,
/// `cn > 0` everywhere and `am` is bounded and periodic.
pub fn jacobi_am(x: f64, m: f64) -> f64 {
    if x.is_nan() || m.is_nan() {
        return f64::NAN;
    }
    if m == 0.0 {
        return x;
    }
    if x.is_infinite() {
        return if m < 1.0 { x } else { f64::NAN };
    }
    crate::numeric::apply_symmetry(Parity::Odd, x, |x| {
        if m == 1.0 {
            return crate::misc::gd(x);
        }
        if m > 1.0 {
            let t = sncndn(x, m);
            return t.sn.atan2(t.cn);
        }
        let kk = ellip_k(m);
        if !kk.is_finite() {
            return f64::NAN;
        }
        let q = reduce_by(x, 2.0 * kk);
        let t = sncndn(q.r, m);
        q.n.mul_add(PI, t.sn.atan2(t.cn))
    })
}

/// Glaisher's notation for the twelve Jacobian elliptic functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GlaisherCode {
    Sn,
    Cn,
    Dn,
    Cd,
    Cs,
    Dc,
    Ds,
    Nc,
    Nd,
    Ns,
    Sc,
    Sd,
}

impl GlaisherCode {
    pub const ALL: [GlaisherCode; 12] = [
        GlaisherCode::Cd,
        GlaisherCode::Cn,
        GlaisherCode::Cs,
        GlaisherCode::Dc,
        GlaisherCode::Dn,
        GlaisherCode::Ds,
        GlaisherCode::Nc,
        GlaisherCode::Nd,
        GlaisherCode::Ns,
        GlaisherCode::Sc,
        GlaisherCode::Sd,
        GlaisherCode::Sn,
    ];

    pub fn parity(self) -> Parity {
        use GlaisherCode::*;
        match self {
            Sn | Sc | Sd | Cs | Ds | Ns => Parity::Odd,
            Cn | Dn | Cd | Dc | Nc | Nd => Parity::Even,
        }
    }

    pub fn as_str(self) -> &'static str {
        use GlaisherCode::*;
        match self {
            Sn => "sn",
            Cn => "cn",
            Dn => "dn",
            Cd => "cd",
            Cs => "cs",
            Dc => "dc",
            Ds => "ds",
            Nc => "nc",
            Nd => "nd",
            Ns => "ns",
            Sc => "sc",
            Sd => "sd",
        }
    }

    /// Applies the quotient to an already computed triple.
    pub fn from_triple(self, t: SnCnDn) -> f64 {
        use GlaisherCode::*;
        let SnCnDn { sn, cn, dn } = t;
        match self {
            Sn => sn,
            Cn => cn,
            Dn => dn,
            Cd => cn / dn,
            Cs => cn / sn,
            Dc => dn / cn,
            Ds => dn / sn,
            Nc => 1.0 / cn,
            Nd => 1.0 / dn,
            Ns => 1.0 / sn,
            Sc => sn / cn,
            Sd => sn / dn,
        }
    }
}

impl fmt::Display for GlaisherCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown Glaisher code `{0}`")]
pub struct UnknownCode(pub String);

impl FromStr for GlaisherCode {
    type Err = UnknownCode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GlaisherCode::ALL
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownCode(s.to_string()))
    }
}

/// Any of the twelve Jacobian elliptic functions, `pq(x|m)`.
pub fn glaisher(code: GlaisherCode, x: f64, m: f64) -> f64 {
    crate::numeric::apply_symmetry(code.parity(), x, |x| code.from_triple(sncndn(x, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const M999: f64 = 0.999 * 0.999;

    #[test]
    fn zero_argument() {
        for &m in &[-3.0, 0.0, 0.4, 1.0, 7.0] {
            assert_eq!(
                sncndn(0.0, m),
                SnCnDn {
                    sn: 0.0,
                    cn: 1.0,
                    dn: 1.0
                },
                "m={m}"
            );
        }
    }

    #[test]
    fn circular_and_hyperbolic_limits() {
        let t = sncndn(1.1, 0.0);
        assert_eq!((t.sn, t.cn, t.dn), (1.1f64.sin(), 1.1f64.cos(), 1.0));
        let t = sncndn(1.1, 1.0);
        assert_eq!(t.sn, 1.1f64.tanh());
        assert_eq!(t.cn, 1.0 / 1.1f64.cosh());
    }

    #[test]
    fn golden_values_at_k_0999() {
        let t = sncndn(0.23, M999);
        // 30-digit references
        assert!((t.sn - 0.226_032_239_741_841_948).abs() < 1e-15);
        assert!((t.cn - 0.974_119_821_478_490_646).abs() < 1e-15);
        assert!((t.dn - 0.974_172_241_779_408_591).abs() < 1e-15);
        assert!((glaisher(GlaisherCode::Cd, 0.23, M999) - 0.999_946_189_904_957_469).abs() < 1e-15);
        assert!((glaisher(GlaisherCode::Ns, 0.23, M999) - 4.424_147_639_921_319_785).abs() < 1e-14);
    }

    #[test]
    fn poles_are_signed_infinities() {
        assert_eq!(glaisher(GlaisherCode::Ns, 0.0, 0.3), f64::INFINITY);
        assert_eq!(glaisher(GlaisherCode::Nc, 0.0, 0.3), 1.0);
    }

    #[test]
    fn am_values() {
        assert_eq!(jacobi_am(0.0, 0.5), 0.0);
        assert_eq!(jacobi_am(2.7, 0.0), 2.7);
        let k = ellip_k(0.6);
        assert!((jacobi_am(k, 0.6) - PI / 2.0).abs() < 1e-15);
        assert!((jacobi_am(-k, 0.6) + PI / 2.0).abs() < 1e-15);
        assert!((jacobi_am(3.0 * k, 0.6) - 1.5 * PI).abs() < 1e-14);
    }

    #[test]
    fn quarter_period_values() {
        for &m in &[0.1, 0.5, 0.9, 0.999_999] {
            let k = ellip_k(m);
            let t = sncndn(k, m);
            assert!((t.sn - 1.0).abs() < 1e-15);
            assert!(t.cn.abs() < 1e-15);
            assert!((t.dn - (1.0 - m).sqrt()).abs() < 1e-15 * 10.0);
        }
    }

    #[test]
    fn parse_codes() {
        assert_eq!("SN".parse::<GlaisherCode>().unwrap(), GlaisherCode::Sn);
        assert!("xy".parse::<GlaisherCode>().is_err());
        for c in GlaisherCode::ALL {
            assert_eq!(c.as_str().parse::<GlaisherCode>().unwrap(), c);
        }
    }
}
