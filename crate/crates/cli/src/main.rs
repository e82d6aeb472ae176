use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use ellipfn::elemental::{broadcast_apply, ElementalError, FunctionDescriptor, Registry, Tensor};
use ellipfn::oracle::reports_to_csv;
use ellipfn_cli::acceptance;
use ellipfn_cli::demos::{cantilever_solve, elastica_curve, unit_grid, CantileverConfig, CurveSample, ElasticaConfig};
use ellipfn_cli::format::{fmt17, fmt_g};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Elliptic integrals, Jacobi and theta functions from the command line.
#[derive(Parser)]
#[command(name = "ellipfn", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one function at one point
    Eval(EvalArgs),
    /// Tabulate a function over a grid of arguments
    Table(TableArgs),
    /// Run the acceptance checks; exit status 1 if any fails
    Selftest {
        #[arg(long, default_value_t = acceptance::DEFAULT_SEED)]
        seed: u64,
        /// Write the narrow-range accuracy report as CSV
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Euler elastica curves
    Elastica(ElasticaArgs),
    /// Finite-strain cantilever under a follower force
    Cantilever(CantileverArgs),
    /// List the registered functions
    List,
}

#[derive(Args)]
struct EvalArgs {
    /// Function name, e.g. melK or jsn
    name: String,
    /// Numeric arguments
    #[arg(allow_negative_numbers = true, num_args = 0..)]
    args: Vec<f64>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct TableArgs {
    name: String,
    /// One per argument: `a:b:n` for n points from a to b, or a single value
    #[arg(long = "range", required = true, allow_hyphen_values = true)]
    ranges: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ElasticaArgs {
    #[arg(long, default_value_t = 5.0)]
    omega: f64,
    #[arg(long = "c", default_value_t = 1.0, allow_hyphen_values = true)]
    c: f64,
    /// Comma-separated moduli in (0, 1)
    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])]
    k: Vec<f64>,
    /// Number of arclength samples on [0, 1]
    #[arg(long, default_value_t = 101)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CantileverArgs {
    /// End angle in degrees
    #[arg(long, conflicts_with = "psi1", allow_hyphen_values = true)]
    psi1_deg: Option<f64>,
    /// End angle in radians (default pi/3)
    #[arg(long, allow_hyphen_values = true)]
    psi1: Option<f64>,
    #[arg(long, default_value_t = 10.0)]
    lambda: f64,
    /// Stiffness ratio in [-1, 1]; the length is defined only for 1
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long, default_value_t = 4.0)]
    omega: f64,
    #[arg(long, default_value_t = 101)]
    samples: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Usage problems exit with 2, like clap's own errors.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Eval(a) => eval(a),
        Cmd::Table(a) => table(a),
        Cmd::Selftest { seed, report } => selftest(seed, report),
        Cmd::Elastica(a) => elastica(a),
        Cmd::Cantilever(a) => cantilever(a),
        Cmd::List => {
            print!("{}", Registry::global().manifest());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn lookup(name: &str, arity: usize) -> Result<&'static FunctionDescriptor> {
    Registry::global().lookup_with_arity(name, arity).map_err(|e| match e {
        ElementalError::NotFound { .. } | ElementalError::Arity { .. } => usage(e.to_string()),
        other => anyhow::Error::from(other),
    })
}

fn eval(a: EvalArgs) -> Result<ExitCode> {
    let d = lookup(&a.name, a.args.len())?;
    let v = d.eval(&a.args);
    if a.json {
        let num = |x: f64| {
            serde_json::Number::from_f64(x)
                .map(serde_json::Value::Number)
                .unwrap_or_else(|| serde_json::Value::String(fmt17(x)))
        };
        let doc = serde_json::json!({
            "function": d.name,
            "args": a.args.iter().map(|&x| num(x)).collect::<Vec<_>>(),
            "value": num(v),
        });
        println!("{doc}");
    } else if a.csv {
        let mut w = csv::WriterBuilder::new().from_writer(std::io::stdout());
        let mut header: Vec<String> = (1..=d.arity).map(|i| format!("a{i}")).collect();
        header.insert(0, "function".into());
        header.push("value".into());
        w.write_record(&header)?;
        let mut row = vec![d.name.clone()];
        row.extend(a.args.iter().map(|&x| fmt17(x)));
        row.push(fmt17(v));
        w.write_record(&row)?;
        w.flush()?;
    } else {
        println!("{}", fmt17(v));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| {
        p.trim()
            .parse::<f64>()
            .map_err(|_| usage(format!("bad number `{p}` in range `{s}`")))
    };
    match parts.as_slice() {
        [v] => Ok(vec![num(v)?]),
        [a, b, n] => {
            let (a, b) = (num(a)?, num(b)?);
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| usage(format!("bad count in range `{s}`")))?;
            if n == 0 {
                return Err(usage(format!("range `{s}` has no points")));
            }
            if n == 1 {
                return Ok(vec![a]);
            }
            Ok((0..n)
                .map(|i| {
                    if i == n - 1 {
                        b
                    } else {
                        a + (b - a) * i as f64 / (n - 1) as f64
                    }
                })
                .collect())
        }
        _ => Err(usage(format!("range `{s}` is not `a:b:n` or a single value"))),
    }
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(std::io::BufWriter::new(
            std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn table(a: TableArgs) -> Result<ExitCode> {
    let d = lookup(&a.name, a.ranges.len())?;
    let axes: Vec<Vec<f64>> = a.ranges.iter().map(|r| parse_range(r)).collect::<Result<_>>()?;
    // Cartesian product, last argument varying fastest.
    let total: usize = axes.iter().map(Vec::len).product();
    let mut cols: Vec<Vec<f64>> = vec![Vec::with_capacity(total); axes.len()];
    for i in 0..total {
        let mut rem = i;
        for (j, ax) in axes.iter().enumerate().rev() {
            cols[j].push(ax[rem % ax.len()]);
            rem /= ax.len();
        }
    }
    let tensors: Vec<Tensor> = cols.iter().cloned().map(Tensor::vector).collect();
    let values = broadcast_apply(d, &tensors)?;
    let mut w = csv::Writer::from_writer(open_out(&a.out)?);
    let mut header: Vec<String> = d
        .arg_roles
        .iter()
        .enumerate()
        .map(|(i, r)| format!("{}{}", r.as_str(), i + 1))
        .collect();
    header.push(d.name.clone());
    w.write_record(&header)?;
    for (i, v) in values.data().iter().enumerate() {
        let mut row: Vec<String> = cols.iter().map(|c| fmt17(c[i])).collect();
        row.push(fmt17(*v));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn selftest(seed: u64, report: Option<PathBuf>) -> Result<ExitCode> {
    let mut all = true;
    let mut emit = |o: acceptance::Outcome| {
        all &= o.passed;
        println!("{}", o.line());
    };
    emit(acceptance::criterion1());
    emit(acceptance::criterion2());
    emit(acceptance::criterion3());
    let (o4, rows) = acceptance::criterion4(seed);
    emit(o4);
    emit(acceptance::criterion5());
    emit(acceptance::criterion6());
    emit(acceptance::criterion7());
    emit(acceptance::criterion8(seed));
    emit(acceptance::criterion9());
    emit(acceptance::criterion10(seed));
    if let Some(p) = report {
        std::fs::write(&p, reports_to_csv(&rows)).with_context(|| format!("writing {}", p.display()))?;
    }
    println!(
        "{}",
        if all {
            "selftest: all criteria passed"
        } else {
            "selftest: FAILED"
        }
    );
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn write_samples(out: &Option<PathBuf>, lead: Option<&str>, curves: &[(Option<f64>, &[CurveSample])]) -> Result<()> {
    let mut w = csv::Writer::from_writer(open_out(out)?);
    let mut header = vec!["s", "x", "y", "phi"];
    if let Some(l) = lead {
        header.insert(0, l);
    }
    w.write_record(&header)?;
    for (tag, samples) in curves {
        for p in samples.iter() {
            let mut row: Vec<String> = Vec::with_capacity(5);
            if let Some(t) = tag {
                row.push(fmt17(*t));
            }
            row.extend([p.s, p.x, p.y, p.phi].iter().map(|&v| fmt17(v)));
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn elastica(a: ElasticaArgs) -> Result<ExitCode> {
    let cfg = ElasticaConfig {
        omega: a.omega,
        c: a.c,
        k_list: a.k,
        s_grid: unit_grid(a.samples),
    };
    let curves = elastica_curve(&cfg).map_err(|e| usage(e.to_string()))?;
    let tagged: Vec<(Option<f64>, &[CurveSample])> = curves.iter().map(|c| (Some(c.k), c.samples.as_slice())).collect();
    write_samples(&a.out, Some("k"), &tagged)?;
    Ok(ExitCode::SUCCESS)
}

fn cantilever(a: CantileverArgs) -> Result<ExitCode> {
    let psi1 = match (a.psi1_deg, a.psi1) {
        (Some(d), _) => d.to_radians(),
        (None, Some(r)) => r,
        (None, None) => std::f64::consts::FRAC_PI_3,
    };
    let cfg = CantileverConfig {
        psi1,
        lambda: a.lambda,
        nu: a.nu,
        omega: a.omega,
        s_grid: unit_grid(a.samples),
    };
    let sol = cantilever_solve(&cfg).map_err(|e| usage(e.to_string()))?;
    if let Some(why) = &sol.diagnostic {
        eprintln!("warning: {why}; results are NaN");
    }
    let end = sol.samples.last().copied();
    let (x, y) = end.map(|p| (p.x, p.y)).unwrap_or((f64::NAN, f64::NAN));
    for (name, v) in [
        ("C", sol.params.c),
        ("alpha", sol.params.alpha),
        ("L", sol.l),
        ("X", x),
        ("Y", y),
    ] {
        println!("{name} = {}", fmt_g(v, 16));
    }
    if a.out.is_some() {
        write_samples(&a.out, None, &[(None, sol.samples.as_slice())])?;
    }
    Ok(ExitCode::SUCCESS)
}
