//! The ten acceptance criteria, shared by `ellipfn selftest` and the
//! `acceptance` test target.

use crate::demos::{cantilever_solve, elastica_curve, CantileverConfig, ElasticaConfig};
use ellipfn::elemental::{ArgRole, Registry};
use ellipfn::integrals::{
    ellip_e, ellip_e_phi, ellip_f_phi, ellip_k, ellip_pi, ellip_pi_phi, jacobi_epsilon, jacobi_lambda, jacobi_zeta,
};
use ellipfn::inverse::inverse_glaisher;
use ellipfn::jacobi::{glaisher, sncndn, GlaisherCode};
use ellipfn::numeric::pythag_residual;
use ellipfn::oracle::{error_report, reference, ArgRange, ReportRow};
use ellipfn::theta::{elnome, ielnome, jtheta, Theta};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::hint::black_box;
use std::time::{Duration, Instant};

/// Seed used by the selftest and the acceptance target unless overridden.
pub const DEFAULT_SEED: u64 = 20240501;

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {:<34} {:>8.3}s  {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// Everything `selftest` produces: one outcome per criterion plus the
/// accuracy report rows of criterion 4.
pub struct Summary {
    pub outcomes: Vec<Outcome>,
    pub report: Vec<ReportRow>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

fn timed(id: u8, title: &'static str, limit: Option<Duration>, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let t = Instant::now();
    let (mut passed, mut detail) = f();
    let elapsed = t.elapsed();
    if let Some(l) = limit {
        if elapsed > l {
            passed = false;
            detail = format!("{detail}; over the {:?} budget", l);
        }
    }
    Outcome {
        id,
        title,
        passed,
        detail,
        elapsed,
    }
}

const K999: f64 = 0.999;

/// Published six-digit values at `x = 0.23`, `k = 0.999`.
pub const GOLDEN_K999: [(&str, f64); 13] = [
    ("jcd", 0.999946),
    ("jcn", 0.974120),
    ("jcs", 4.309650),
    ("jdc", 1.000050),
    ("jdn", 0.974172),
    ("jds", 4.309880),
    ("jnc", 1.026570),
    ("jnd", 1.026510),
    ("jns", 4.424150),
    ("jsc", 0.232037),
    ("jsd", 0.232025),
    ("jsn", 0.226032),
    ("Jzeta", 0.174671),
];

fn golden_value(name: &str, x: f64) -> f64 {
    Registry::global()
        .lookup_with_arity(name, 2)
        .expect("registered")
        .eval(&[x, K999])
}

/// True when `printed` is `v` correctly rounded to 6 significant digits.
fn agrees_to_6_digits(v: f64, printed: f64) -> bool {
    let e = printed.abs().log10().floor();
    (v - printed).abs() <= 0.5 * 10f64.powf(e - 5.0) * (1.0 + 1e-9)
}

pub fn criterion1() -> Outcome {
    timed(1, "golden values at k = 0.999", Some(Duration::from_secs(1)), || {
        let bad: Vec<String> = GOLDEN_K999
            .iter()
            .filter(|(n, want)| !agrees_to_6_digits(golden_value(n, 0.23), *want))
            .map(|(n, want)| format!("{n}={} (expected {want})", golden_value(n, 0.23)))
            .collect();
        (
            bad.is_empty(),
            if bad.is_empty() {
                "13/13 rows".into()
            } else {
                bad.join(", ")
            },
        )
    })
}

pub fn criterion2() -> Outcome {
    timed(
        2,
        "quasi-periodicity at k = 0.999",
        Some(Duration::from_secs(1)),
        || {
            let shift = 1e5 * ellip_k(K999 * K999);
            let worst = GOLDEN_K999
                .iter()
                .map(|(n, _)| (golden_value(n, 0.23) - golden_value(n, 0.23 + shift)).abs())
                .fold(0.0, f64::max);
            (worst <= 1e-6, format!("worst |f(x) - f(x + 1e5 K)| = {worst:.2e}"))
        },
    )
}

pub fn criterion3() -> Outcome {
    timed(3, "poles and limits", None, || {
        let k1 = ellip_k(1.0);
        let kinf = ellip_k(f64::NEG_INFINITY);
        let e1 = ellip_e(1.0);
        let ok = k1 == f64::INFINITY && kinf == 0.0 && (e1 - 1.0).abs() <= 2.0 * f64::EPSILON;
        (ok, format!("K(1) = {k1}, K(-inf) = {kinf}, E(1) = {e1}"))
    })
}

/// Narrow-range accuracy rows: mpelE, mpelF, mpelPi.
pub fn narrow_range_rows(seed: u64) -> Vec<ReportRow> {
    let h = ArgRange::symmetric(0.5);
    vec![
        error_report("mpelE", &[h, h], 1000, seed).expect("registered"),
        error_report("mpelF", &[h, h], 1000, seed).expect("registered"),
        error_report("mpelPi", &[h, h, h], 1000, seed).expect("registered"),
    ]
}

pub fn criterion4(seed: u64) -> (Outcome, Vec<ReportRow>) {
    let mut rows = Vec::new();
    let o = timed(4, "narrow-range error report", Some(Duration::from_secs(60)), || {
        rows = narrow_range_rows(seed);
        let ok = rows
            .iter()
            .all(|r| r.samples == 1000 && r.mre <= 100.0 && r.rms <= 50.0);
        let d = rows
            .iter()
            .map(|r| format!("{} MRE/eps {:.2} RMS/eps {:.2}", r.func, r.mre, r.rms))
            .collect::<Vec<_>>()
            .join("; ");
        (ok, d)
    });
    (o, rows)
}

/// Worst relative error against the oracle on the wide deterministic grid.
pub fn headline_grid() -> Vec<(&'static str, f64, usize)> {
    let ms: [f64; 15] = [
        -1000.0, -100.0, -10.0, -1.0, -0.3, 0.0, 0.2, 0.5, 0.8, 0.95, 0.999, 1.5, 10.0, 100.0, 1000.0,
    ];
    let xs = [
        -1e4, -1234.5, -100.3, -17.2, -3.3, -1.1, -0.37, 0.05, 0.61, 1.4, 2.9, 9.7, 55.5, 678.9, 9999.0,
    ];
    let nus = [-5.0, -0.5, 0.3, 0.8];
    type Kernel = fn(&[f64]) -> f64;
    let funcs: [(&str, Kernel); 5] = [
        ("mpelF", |a| ellip_f_phi(a[0], a[1])),
        ("mpelE", |a| ellip_e_phi(a[0], a[1])),
        ("mpelPi", |a| ellip_pi_phi(a[0], a[1], a[2])),
        ("mjepsilon", |a| jacobi_epsilon(a[0], a[1])),
        ("mJzeta", |a| jacobi_zeta(a[0], a[1])),
    ];
    funcs
        .iter()
        .map(|&(name, f)| {
            let mut worst = 0.0f64;
            let mut n = 0;
            for &m in &ms {
                let mut pts = xs.to_vec();
                if m > 1.0 && name.starts_with("mpel") {
                    // the amplitude is real only up to asin(1/sqrt(m))
                    let top = (1.0 / m.sqrt()).asin();
                    pts.extend([-0.9 * top, 0.3 * top, 0.99 * top]);
                }
                for &x in &pts {
                    let chars: &[f64] = if name == "mpelPi" { &nus } else { &[0.0] };
                    for &nu in chars {
                        let args = if name == "mpelPi" { vec![x, nu, m] } else { vec![x, m] };
                        let Some(want) = reference(name, &args) else { continue };
                        let got = f(&args);
                        let rel = if want == got { 0.0 } else { ((got - want) / want).abs() };
                        worst = if rel.is_nan() { f64::INFINITY } else { worst.max(rel) };
                        n += 1;
                    }
                }
            }
            (name, worst, n)
        })
        .collect()
}

pub fn criterion5() -> Outcome {
    timed(
        5,
        "wide-range relative accuracy",
        Some(Duration::from_secs(120)),
        || {
            let g = headline_grid();
            let ok = g.iter().all(|(_, w, n)| *w <= 1e-9 && *n > 0);
            let d = g
                .iter()
                .map(|(f, w, n)| format!("{f} {w:.1e} ({n} pts)"))
                .collect::<Vec<_>>()
                .join("; ");
            (ok, d)
        },
    )
}

/// Published deformed length for the reference cantilever.
pub const TARGET_LENGTH: f64 = 0.785_551_98;

pub fn criterion6() -> Outcome {
    timed(6, "cantilever reference length", None, || {
        let sol = cantilever_solve(&CantileverConfig::reference()).expect("valid config");
        let origin = sol.samples[0].x == 0.0 && sol.samples[0].y == 0.0;
        let ok = (sol.l - TARGET_LENGTH).abs() <= 1e-6 && origin;
        (
            ok,
            format!(
                "L = {:.10} vs {TARGET_LENGTH} (diff {:.3e}); origin exact: {origin}",
                sol.l,
                sol.l - TARGET_LENGTH
            ),
        )
    })
}

pub fn criterion7() -> Outcome {
    timed(7, "elastica curves", None, || {
        let curves = elastica_curve(&ElasticaConfig::reference()).expect("valid config");
        let finite = curves
            .iter()
            .all(|c| c.samples.iter().all(|p| p.x.is_finite() && p.y.is_finite()));
        let origin = curves.iter().all(|c| c.samples[0].x == 0.0 && c.samples[0].y == 0.0);
        let tiny = ElasticaConfig {
            k_list: vec![1e-13],
            ..ElasticaConfig::reference()
        };
        let straight = elastica_curve(&tiny).expect("valid config")[0]
            .samples
            .iter()
            .map(|p| (p.x - p.s).abs().max(p.y.abs()))
            .fold(0.0, f64::max);
        (
            finite && origin && straight <= 1e-12,
            format!("9 curves finite: {finite}, at origin: {origin}, k -> 0 deviation {straight:.1e}"),
        )
    })
}

struct Identity {
    name: &'static str,
    failures: usize,
}

fn identities(seed: u64) -> Vec<Identity> {
    const N: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut run = |name: &'static str, rng: &mut ChaCha8Rng, f: &mut dyn FnMut(&mut ChaCha8Rng) -> bool| {
        let failures = (0..N).filter(|_| !f(rng)).count();
        out.push(Identity { name, failures });
    };
    run("sn^2 + cn^2 = 1", &mut rng, &mut |r| {
        let t = sncndn(r.random_range(-1e4..1e4), r.random_range(-1e3..=1.0));
        pythag_residual(t.cn, t.sn, 1.0).abs() <= 4.0 * f64::EPSILON
    });
    run("dn^2 + m sn^2 = 1", &mut rng, &mut |r| {
        let m = r.random_range(-1e3..=1.0);
        let t = sncndn(r.random_range(-1e4..1e4), m);
        let s2 = m * t.sn * t.sn;
        pythag_residual(t.dn, t.sn, m).abs() <= 4.0 * f64::EPSILON * (t.dn * t.dn).max(s2.abs()).max(1.0)
    });
    let pairs: Vec<(usize, usize, usize)> = {
        let reg = Registry::global();
        reg.entries()
            .iter()
            .enumerate()
            .filter(|(_, d)| d.arg_roles.contains(&ArgRole::Modulus))
            .filter_map(|(i, d)| {
                if matches!(d.name.as_str(), "el1" | "el2" | "el3") || d.name.starts_with("cel") {
                    return None;
                }
                let base = if d.name == "elnome" {
                    "mnome".to_string()
                } else {
                    format!("m{}", d.name)
                };
                let j = reg
                    .entries()
                    .iter()
                    .position(|e| e.name == base && e.arity == d.arity)?;
                let pos = d.arg_roles.iter().position(|r| *r == ArgRole::Modulus)?;
                Some((i, j, pos))
            })
            .collect()
    };
    run("k-form == m-form (bitwise)", &mut rng, &mut |r| {
        let e = Registry::global().entries();
        let (i, j, pos) = pairs[r.random_range(0..pairs.len())];
        let args: Vec<f64> = (0..e[i].arity)
            .map(|a| {
                if a == pos {
                    r.random_range(-1.2..1.2)
                } else {
                    r.random_range(-3.0..0.9)
                }
            })
            .collect();
        let mut sq = args.clone();
        sq[pos] = args[pos] * args[pos];
        let (a, b) = (e[i].eval(&args), e[j].eval(&sq));
        a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan())
    });
    run("inverse round-trips", &mut rng, &mut |r| {
        use GlaisherCode::*;
        let code = GlaisherCode::ALL[r.random_range(0..12)];
        let m = r.random_range(-3.0..0.99);
        let k = ellip_k(m);
        let (lo, hi) = match code {
            Cn | Cd | Dc | Nc => (0.0, 2.0 * k),
            Dn | Nd => (0.0, k),
            _ => (-k, k),
        };
        let x = glaisher(code, r.random_range(lo..=hi), m);
        if !x.is_finite() {
            return true;
        }
        (glaisher(code, inverse_glaisher(code, x, m), m) - x).abs() <= 1e-9 * x.abs().max(1.0)
    });
    run("quasi-periods of F, E, Pi", &mut rng, &mut |r| {
        let phi = r.random_range(-1.5..1.5);
        let m = r.random_range(-5.0..0.99);
        let nu = r.random_range(-2.0..0.9);
        let n = r.random_range(-50..=50) as f64;
        let s = phi + n * PI;
        let tol = |c: f64| (2.0 * n * c).abs() * 1e-14 + 1e-15;
        let (k, e, p) = (ellip_k(m), ellip_e(m), ellip_pi(nu, m));
        (ellip_f_phi(s, m) - ellip_f_phi(phi, m) - 2.0 * n * k).abs() <= tol(k)
            && (ellip_e_phi(s, m) - ellip_e_phi(phi, m) - 2.0 * n * e).abs() <= tol(e)
            && (ellip_pi_phi(s, nu, m) - ellip_pi_phi(phi, nu, m) - 2.0 * n * p).abs() <= tol(p)
    });
    run("epsilon(K) = E", &mut rng, &mut |r| {
        let m = r.random_range(-10.0..0.999);
        let e = ellip_e(m);
        (jacobi_epsilon(ellip_k(m), m) - e).abs() <= 1e-12 * e
    });
    run("Lambda(K, nu) = Pi(nu)", &mut rng, &mut |r| {
        let m = r.random_range(-10.0..0.999);
        let nu = r.random_range(-10.0..0.99);
        let p = ellip_pi(nu, m);
        (jacobi_lambda(ellip_k(m), nu, m) - p).abs() <= 1e-11 * p.abs()
    });
    run("theta2^4 + theta4^4 = theta3^4", &mut rng, &mut |r| {
        let q = r.random_range(0.0..0.99);
        let t = |j| jtheta(j, 0.0, q).powi(4);
        let t3 = t(Theta::Three);
        (t(Theta::Two) + t(Theta::Four) - t3).abs() <= 1e-12 * t3
    });
    run("nome round-trip", &mut rng, &mut |r| {
        let k = r.random_range(0.0..=0.9999);
        (ielnome(elnome(k)) - k).abs() <= 1e-12
    });
    out
}

pub fn criterion8(seed: u64) -> Outcome {
    timed(8, "identity suites (1e4 trials each)", None, || {
        let ids = identities(seed);
        let bad: Vec<String> = ids
            .iter()
            .filter(|i| i.failures > 0)
            .map(|i| format!("{}: {} failures", i.name, i.failures))
            .collect();
        let ok = bad.is_empty();
        (
            ok,
            if ok {
                format!("{} suites clean", ids.len())
            } else {
                bad.join("; ")
            },
        )
    })
}

/// K evaluations per second over a spread of parameters.
pub fn k_throughput() -> f64 {
    const N: usize = 1_000_000;
    let ms: Vec<f64> = (0..1024).map(|i| -1.0 + 1.99 * i as f64 / 1024.0).collect();
    let t = Instant::now();
    let mut acc = 0.0;
    for i in 0..N {
        acc += ellip_k(black_box(ms[i & 1023]));
    }
    black_box(acc);
    N as f64 / t.elapsed().as_secs_f64()
}

pub fn criterion9() -> Outcome {
    timed(9, "throughput", None, || {
        let rate = k_throughput();
        (rate >= 1e6, format!("{:.2e} K evaluations per second", rate))
    })
}

const SPECIAL: [f64; 16] = [
    0.0,
    -0.0,
    1.0,
    -1.0,
    0.5,
    2.0,
    5e-324,
    -5e-324,
    2.2250738585072014e-308,
    1e-300,
    1e300,
    -1e300,
    f64::MAX,
    f64::INFINITY,
    f64::NEG_INFINITY,
    f64::NAN,
];

fn fuzz_arg(r: &mut ChaCha8Rng) -> f64 {
    match r.random_range(0..4) {
        0 => SPECIAL[r.random_range(0..SPECIAL.len())],
        1 => r.random_range(-2.0..2.0),
        2 => {
            let s = if r.random::<bool>() { 1.0 } else { -1.0 };
            s * 10f64.powf(r.random_range(-300.0..300.0))
        }
        _ => f64::from_bits(r.random::<u64>()),
    }
}

pub fn criterion10(seed: u64) -> Outcome {
    timed(10, "robustness fuzz (1e6 calls)", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = Registry::global().entries();
        let budget = Duration::from_millis(1);
        let mut slow = Vec::new();
        let mut slowest = Duration::ZERO;
        for _ in 0..1_000_000 {
            let d = &e[rng.random_range(0..e.len())];
            let args: Vec<f64> = (0..d.arity).map(|_| fuzz_arg(&mut rng)).collect();
            let t = Instant::now();
            black_box(d.eval(black_box(&args)));
            let mut dt = t.elapsed();
            if dt > budget {
                // re-time to separate a slow call from a scheduler hiccup
                dt = (0..3)
                    .map(|_| {
                        let t = Instant::now();
                        black_box(d.eval(black_box(&args)));
                        t.elapsed()
                    })
                    .min()
                    .expect("three samples");
                if dt > budget {
                    slow.push(format!("{}{:?}", d.name, args));
                }
            }
            slowest = slowest.max(dt);
        }
        // every f64 is finite, infinite or NaN, so the remaining failure
        // modes are a panic (which aborts the run) or a slow call
        let ok = slow.is_empty();
        (
            ok,
            if ok {
                format!("slowest call {slowest:?}")
            } else {
                format!("slow: {}", slow.join(", "))
            },
        )
    })
}

/// Runs every criterion in order.
pub fn run_all(seed: u64) -> Summary {
    let mut outcomes = vec![criterion1(), criterion2(), criterion3()];
    let (o4, report) = criterion4(seed);
    outcomes.push(o4);
    outcomes.push(criterion5());
    outcomes.push(criterion6());
    outcomes.push(criterion7());
    outcomes.push(criterion8(seed));
    outcomes.push(criterion9());
    outcomes.push(criterion10(seed));
    Summary { outcomes, report }
}
