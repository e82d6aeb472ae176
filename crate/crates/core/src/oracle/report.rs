//! Table-style accuracy reports against the oracle.

use super::reference;
use crate::elemental::Registry;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Closed sampling interval of one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgRange {
    pub min: f64,
    pub max: f64,
}

impl ArgRange {
    pub fn new(min: f64, max: f64) -> ArgRange {
        ArgRange { min, max }
    }

    pub fn symmetric(r: f64) -> ArgRange {
        ArgRange { min: -r, max: r }
    }
}

/// One report row. Error statistics are in units of machine epsilon.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub func: String,
    /// Observed min/max of each sampled argument.
    pub observed: Vec<ArgRange>,
    /// Points with a finite oracle value that entered the statistics.
    pub samples: usize,
    /// Points skipped because the oracle had no value there.
    pub skipped: usize,
    pub mae: f64,
    pub mre: f64,
    pub rms: f64,
}

/// Samples `n` points uniformly from `ranges` with a ChaCha8 generator
/// seeded by `seed` and compares the registered function against the
/// oracle. `None` if the name is unknown or the arity does not match.
pub fn error_report(name: &str, ranges: &[ArgRange], n: usize, seed: u64) -> Option<ReportRow> {
    let d = Registry::global().lookup_with_arity(name, ranges.len()).ok()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut observed: Vec<ArgRange> = ranges
        .iter()
        .map(|_| ArgRange::new(f64::INFINITY, f64::NEG_INFINITY))
        .collect();
    let (mut mae, mut mre, mut sq) = (0.0f64, 0.0f64, 0.0f64);
    let (mut samples, mut skipped) = (0, 0);
    let mut args = vec![0.0; ranges.len()];
    for _ in 0..n {
        for (a, r) in args.iter_mut().zip(ranges) {
            *a = if r.min == r.max {
                r.min
            } else {
                rng.random_range(r.min..=r.max)
            };
        }
        let want = match reference(&d.name, &args) {
            Some(v) if v.is_finite() => v,
            _ => {
                skipped += 1;
                continue;
            }
        };
        for (o, &a) in observed.iter_mut().zip(&args) {
            o.min = o.min.min(a);
            o.max = o.max.max(a);
        }
        let got = d.eval(&args);
        let abs = (got - want).abs();
        let rel = if want == 0.0 {
            if got == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            abs / want.abs()
        };
        let (abs, rel) = if abs.is_nan() {
            (f64::INFINITY, f64::INFINITY)
        } else {
            (abs, rel)
        };
        mae = mae.max(abs);
        mre = mre.max(rel);
        sq += rel * rel;
        samples += 1;
    }
    let eps = f64::EPSILON;
    let rms = if samples > 0 { (sq / samples as f64).sqrt() } else { 0.0 };
    Some(ReportRow {
        func: d.name.clone(),
        observed,
        samples,
        skipped,
        mae: mae / eps,
        mre: mre / eps,
        rms: rms / eps,
    })
}

/// CSV in the layout `func, min(a1), max(a1), ..., samples, MAE/eps,
/// MRE/eps, RMS/eps`. Rows may have different arities; the header is sized
/// for the widest row and short rows are padded with empty cells.
pub fn reports_to_csv(rows: &[ReportRow]) -> String {
    let width = rows.iter().map(|r| r.observed.len()).max().unwrap_or(0);
    let mut out = String::from("func");
    for i in 1..=width {
        out.push_str(&format!(",min(a{i}),max(a{i})"));
    }
    out.push_str(",samples,MAE/eps,MRE/eps,RMS/eps\n");
    for r in rows {
        out.push_str(&r.func);
        for i in 0..width {
            match r.observed.get(i) {
                Some(o) => out.push_str(&format!(",{:.6e},{:.6e}", o.min, o.max)),
                None => out.push_str(",,"),
            }
        }
        out.push_str(&format!(",{},{:.3},{:.3},{:.3}\n", r.samples, r.mae, r.mre, r.rms));
    }
    out
}
