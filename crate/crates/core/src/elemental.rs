//! Element-wise layer: a registry of every scalar function with its
//! argument roles, and broadcasting over same-shape-or-scalar tensors.
//!
//! Names follow the two-level convention: scalar names such as `melK`,
//! array-level names such as `mEllipticK`, and modulus forms that drop the
//! leading `m` (`elK`, `EllipticK`) and square their modulus argument.
//! Lookup is case-insensitive. A few names exist at two arities (the
//! incomplete and complete `melB`, `melD`, `melE`, `melPi`); those resolve by
//! argument count.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::integrals as ei;
use crate::jacobi::{glaisher, jacobi_am, GlaisherCode};
use crate::theta::{Neville, Theta};
use crate::{bulirsch, carlson, inverse, misc, theta};

/// Role of one argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgRole {
    Argument,
    Amplitude,
    Characteristic,
    Parameter,
    Modulus,
    Nome,
    Coefficient,
}

impl ArgRole {
    pub fn as_str(self) -> &'static str {
        match self {
            ArgRole::Argument => "argument",
            ArgRole::Amplitude => "amplitude",
            ArgRole::Characteristic => "characteristic",
            ArgRole::Parameter => "parameter",
            ArgRole::Modulus => "modulus",
            ArgRole::Nome => "nome",
            ArgRole::Coefficient => "coefficient",
        }
    }
}

/// The scalar kernel behind a descriptor.
#[derive(Clone, Copy)]
pub enum Kernel {
    F1(fn(f64) -> f64),
    F2(fn(f64, f64) -> f64),
    F3(fn(f64, f64, f64) -> f64),
    F4(fn(f64, f64, f64, f64) -> f64),
    Glaisher(GlaisherCode),
    InverseGlaisher(GlaisherCode),
    Theta(Theta),
    Neville(Neville),
    NevilleM(Neville),
}

impl Kernel {
    fn call(&self, a: &[f64]) -> f64 {
        match *self {
            Kernel::F1(f) => f(a[0]),
            Kernel::F2(f) => f(a[0], a[1]),
            Kernel::F3(f) => f(a[0], a[1], a[2]),
            Kernel::F4(f) => f(a[0], a[1], a[2], a[3]),
            Kernel::Glaisher(c) => glaisher(c, a[0], a[1]),
            Kernel::InverseGlaisher(c) => inverse::inverse_glaisher(c, a[0], a[1]),
            Kernel::Theta(j) => theta::jtheta(j, a[0], a[1]),
            Kernel::Neville(k) => theta::neville_theta(k, a[0], a[1]),
            Kernel::NevilleM(k) => theta::neville_theta_m(k, a[0], a[1]),
        }
    }
}

/// One registered function.
#[derive(Clone)]
pub struct FunctionDescriptor {
    /// Canonical scalar name.
    pub name: String,
    /// Array-level name and any alternative spellings.
    pub aliases: Vec<String>,
    pub arity: usize,
    pub arg_roles: Vec<ArgRole>,
    pub domain_note: &'static str,
    kernel: Kernel,
    /// Position of the modulus argument to square, for modulus forms.
    square_at: Option<usize>,
}

impl fmt::Debug for FunctionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionDescriptor")
            .field("name", &self.name)
            .field("aliases", &self.aliases)
            .field("arity", &self.arity)
            .finish()
    }
}

impl FunctionDescriptor {
    /// Evaluates the scalar function. `args.len()` must equal the arity.
    pub fn eval(&self, args: &[f64]) -> f64 {
        assert_eq!(args.len(), self.arity, "{}: wrong number of arguments", self.name);
        match self.square_at {
            None => self.kernel.call(args),
            Some(i) => {
                let mut buf = [0.0; 4];
                buf[..args.len()].copy_from_slice(args);
                buf[i] = args[i] * args[i];
                self.kernel.call(&buf[..args.len()])
            }
        }
    }

    pub fn matches(&self, name: &str) -> bool {
        self.name.eq_ignore_ascii_case(name) || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ElementalError {
    #[error("unknown function `{name}`{}", suggest(.suggestions))]
    NotFound { name: String, suggestions: Vec<String> },
    #[error("`{name}` is defined for {arities:?} arguments; give the argument count")]
    Ambiguous { name: String, arities: Vec<usize> },
    #[error("`{name}` takes {expected} argument{}, got {got}", if *.expected == 1 { "" } else { "s" })]
    Arity { name: String, expected: usize, got: usize },
    #[error("shape mismatch: {expected:?} vs {got:?}")]
    Shape { expected: Vec<usize>, got: Vec<usize> },
    #[error("tensor data length {len} does not match shape {shape:?}")]
    BadTensor { shape: Vec<usize>, len: usize },
}

fn suggest(s: &[String]) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!("; did you mean {}?", s.join(", "))
    }
}

/// Row-major real array. An empty shape is a scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Result<Tensor, ElementalError> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(ElementalError::BadTensor { shape, len: data.len() });
        }
        Ok(Tensor { shape, data })
    }

    pub fn scalar(v: f64) -> Tensor {
        Tensor {
            shape: Vec::new(),
            data: vec![v],
        }
    }

    pub fn vector(data: Vec<f64>) -> Tensor {
        Tensor {
            shape: vec![data.len()],
            data,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn is_scalar(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }
}

/// Element count above which evaluation is spread over threads.
const PARALLEL_THRESHOLD: usize = 4096;

/// Applies `f` element-wise. Every non-scalar argument must share one
/// shape; scalars are broadcast.
pub fn broadcast_apply(f: &FunctionDescriptor, args: &[Tensor]) -> Result<Tensor, ElementalError> {
    if args.len() != f.arity {
        return Err(ElementalError::Arity {
            name: f.name.clone(),
            expected: f.arity,
            got: args.len(),
        });
    }
    let mut shape: Option<&[usize]> = None;
    for t in args.iter().filter(|t| !t.is_scalar()) {
        match shape {
            None => shape = Some(&t.shape),
            Some(s) if s != t.shape.as_slice() => {
                return Err(ElementalError::Shape {
                    expected: s.to_vec(),
                    got: t.shape.clone(),
                })
            }
            _ => {}
        }
    }
    let out_shape = shape.map(<[usize]>::to_vec).unwrap_or_default();
    let n: usize = out_shape.iter().product();
    let element = |i: usize| {
        let mut buf = [0.0; 4];
        for (b, t) in buf.iter_mut().zip(args) {
            *b = if t.is_scalar() { t.data[0] } else { t.data[i] };
        }
        f.eval(&buf[..args.len()])
    };
    let data: Vec<f64> = if n >= PARALLEL_THRESHOLD {
        (0..n).into_par_iter().map(element).collect()
    } else {
        (0..n).map(element).collect()
    };
    Ok(Tensor { shape: out_shape, data })
}

/// Immutable table of all registered functions.
pub struct Registry {
    entries: Vec<FunctionDescriptor>,
}

impl Registry {
    pub fn global() -> &'static Registry {
        static REG: OnceLock<Registry> = OnceLock::new();
        REG.get_or_init(build)
    }

    pub fn entries(&self) -> &[FunctionDescriptor] {
        &self.entries
    }

    /// Case-insensitive lookup by name or alias.
    pub fn lookup(&self, name: &str) -> Result<&FunctionDescriptor, ElementalError> {
        let hits: Vec<&FunctionDescriptor> = self.entries.iter().filter(|d| d.matches(name)).collect();
        match hits.len() {
            0 => Err(self.not_found(name)),
            1 => Ok(hits[0]),
            _ => Err(ElementalError::Ambiguous {
                name: name.to_string(),
                arities: hits.iter().map(|d| d.arity).collect(),
            }),
        }
    }

    /// Lookup that resolves overloaded names by argument count.
    pub fn lookup_with_arity(&self, name: &str, arity: usize) -> Result<&FunctionDescriptor, ElementalError> {
        let hits: Vec<&FunctionDescriptor> = self.entries.iter().filter(|d| d.matches(name)).collect();
        if hits.is_empty() {
            return Err(self.not_found(name));
        }
        hits.iter()
            .find(|d| d.arity == arity)
            .copied()
            .ok_or_else(|| ElementalError::Arity {
                name: hits[0].name.clone(),
                expected: hits[0].arity,
                got: arity,
            })
    }

    fn not_found(&self, name: &str) -> ElementalError {
        let lower = name.to_ascii_lowercase();
        let mut scored: Vec<(f64, &str)> = self
            .entries
            .iter()
            .flat_map(|d| std::iter::once(d.name.as_str()).chain(d.aliases.iter().map(String::as_str)))
            .map(|c| (strsim::jaro_winkler(&lower, &c.to_ascii_lowercase()), c))
            .filter(|(s, _)| *s > 0.8)
            .collect();
        scored.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(b.1)));
        let mut suggestions: Vec<String> = Vec::new();
        for (_, c) in scored {
            if !suggestions.iter().any(|s| s == c) {
                suggestions.push(c.to_string());
            }
            if suggestions.len() == 5 {
                break;
            }
        }
        ElementalError::NotFound {
            name: name.to_string(),
            suggestions,
        }
    }

    /// Machine-readable inventory: `name,aliases,arity,roles` with `;`
    /// separating list items.
    pub fn manifest(&self) -> String {
        let mut s = String::from("name,aliases,arity,roles\n");
        for d in &self.entries {
            let roles: Vec<&str> = d.arg_roles.iter().map(|r| r.as_str()).collect();
            s.push_str(&format!(
                "{},{},{},{}\n",
                d.name,
                d.aliases.join(";"),
                d.arity,
                roles.join(";")
            ));
        }
        s
    }
}

use ArgRole::{
    Amplitude as Ph, Argument as Ar, Characteristic as Nu, Coefficient as Co, Modulus as Mo, Nome as Nq,
    Parameter as Pm,
};

fn entry(name: &str, aliases: &[&str], roles: &[ArgRole], note: &'static str, kernel: Kernel) -> FunctionDescriptor {
    FunctionDescriptor {
        name: name.to_string(),
        aliases: aliases.iter().map(|s| s.to_string()).collect(),
        arity: roles.len(),
        arg_roles: roles.to_vec(),
        domain_note: note,
        kernel,
        square_at: None,
    }
}

/// Modulus form of a parameter-form entry: drops the leading `m` of each
/// name and squares the parameter argument.
fn modulus_form(d: &FunctionDescriptor) -> FunctionDescriptor {
    let strip = |s: &str| s.strip_prefix('m').unwrap_or(s).to_string();
    let pos = d.arg_roles.iter().position(|r| *r == Pm).expect("parameter argument");
    let mut roles = d.arg_roles.clone();
    roles[pos] = Mo;
    FunctionDescriptor {
        name: strip(&d.name),
        aliases: d.aliases.iter().map(|a| strip(a)).collect(),
        arity: d.arity,
        arg_roles: roles,
        domain_note: d.domain_note,
        kernel: d.kernel,
        square_at: Some(pos),
    }
}

const ANY: &str = "all real arguments";
const M_LE_1: &str = "m <= 1";
const M_GE_0: &str = "m >= 0";
const JACOBI: &str = "|x| <= 1 and m x^2 <= 1";
const LEGENDRE: &str = "any phi for m <= 1; |sin phi| <= 1/sqrt(m) for m > 1";
const NOME: &str = "0 <= q <= 0.999";

fn build() -> Registry {
    use GlaisherCode::*;
    use Kernel::*;
    let mut e: Vec<FunctionDescriptor> = vec![
        // Bulirsch
        entry("el1", &["BulirschEL1", "e1"], &[Ar, Mo], ANY, F2(bulirsch::el1)),
        entry("el2", &["BulirschEL2", "e2"], &[Ar, Mo, Co, Co], ANY, F4(bulirsch::el2)),
        entry(
            "el3",
            &["BulirschEL3", "e3"],
            &[Ar, Mo, Nu],
            "1 + p x^2 > 0",
            F3(bulirsch::el3),
        ),
        entry("cel1", &["BulirschCEL1"], &[Mo], "kc != 0", F1(bulirsch::cel1)),
        entry("cel2", &["BulirschCEL2"], &[Mo, Co, Co], "kc != 0", F3(bulirsch::cel2)),
        entry(
            "cel3",
            &["BulirschCEL3"],
            &[Mo, Nu],
            "kc != 0, p != 0",
            F2(bulirsch::cel3),
        ),
        entry(
            "cel",
            &["BulirschCEL"],
            &[Mo, Nu, Co, Co],
            "kc != 0, p != 0",
            F4(bulirsch::cel),
        ),
        // Carlson
        entry("rc", &["CarlsonRC"], &[Ar, Ar], "x >= 0, y > 0", F2(carlson::rc)),
        entry(
            "rd",
            &["CarlsonRD"],
            &[Ar, Ar, Ar],
            "x, y >= 0 not both zero, z > 0",
            F3(carlson::rd),
        ),
        entry(
            "rf",
            &["CarlsonRF"],
            &[Ar, Ar, Ar],
            "x, y, z >= 0, at most one zero",
            F3(carlson::rf),
        ),
        entry("rg", &["CarlsonRG"], &[Ar, Ar, Ar], "x, y, z >= 0", F3(carlson::rg)),
        entry(
            "rj",
            &["CarlsonRJ"],
            &[Ar, Ar, Ar, Ar],
            "x, y, z >= 0, at most one zero, p > 0",
            F4(carlson::rj),
        ),
    ];
    let with_k: Vec<FunctionDescriptor> = vec![
        // incomplete, Jacobi form
        entry("melB", &["mEllipticB"], &[Ar, Pm], JACOBI, F2(ei::ellip_b_x)),
        entry("melD", &["mEllipticD"], &[Ar, Pm], JACOBI, F2(ei::ellip_d_x)),
        entry("melE", &["mEllipticE"], &[Ar, Pm], JACOBI, F2(ei::ellip_e_x)),
        entry("melF", &["mEllipticF"], &[Ar, Pm], JACOBI, F2(ei::ellip_f_x)),
        entry("melPi", &["mEllipticPi"], &[Ar, Nu, Pm], JACOBI, F3(ei::ellip_pi_x)),
        // incomplete, Legendre form
        entry("mpelB", &["mpEllipticB"], &[Ph, Pm], LEGENDRE, F2(ei::ellip_b_phi)),
        entry("mpelD", &["mpEllipticD"], &[Ph, Pm], LEGENDRE, F2(ei::ellip_d_phi)),
        entry("mpelE", &["mpEllipticE"], &[Ph, Pm], LEGENDRE, F2(ei::ellip_e_phi)),
        entry("mpelF", &["mpEllipticF"], &[Ph, Pm], LEGENDRE, F2(ei::ellip_f_phi)),
        entry(
            "mpelPi",
            &["mpEllipticPi"],
            &[Ph, Nu, Pm],
            LEGENDRE,
            F3(ei::ellip_pi_phi),
        ),
        // Jacobi's second form
        entry("mjepsilon", &["mJacobiEpsilon"], &[Ar, Pm], ANY, F2(ei::jacobi_epsilon)),
        entry(
            "mjlambd",
            &["mJacobiLambda", "mjlambda"],
            &[Ar, Nu, Pm],
            "no pole of 1/(1 - nu sn^2) on the path",
            F3(ei::jacobi_lambda),
        ),
        // complete
        entry("melB", &["mEllipticB"], &[Pm], M_LE_1, F1(ei::ellip_b)),
        entry("melC", &["mEllipticC"], &[Pm], M_LE_1, F1(ei::ellip_c)),
        entry("melD", &["mEllipticD"], &[Pm], M_LE_1, F1(ei::ellip_d)),
        entry("melE", &["mEllipticE"], &[Pm], M_LE_1, F1(ei::ellip_e)),
        entry("melK", &["mEllipticK"], &[Pm], M_LE_1, F1(ei::ellip_k)),
        entry(
            "melPi",
            &["mEllipticPi"],
            &[Nu, Pm],
            "m <= 1, nu <= 1",
            F2(ei::ellip_pi),
        ),
        // complementary
        entry("melCE", &["mEllipticCE"], &[Pm], M_GE_0, F1(ei::ellip_ce)),
        entry("melCK", &["mEllipticCK"], &[Pm], M_GE_0, F1(ei::ellip_ck)),
        entry("melCPi", &["mEllipticCPi"], &[Nu, Pm], M_GE_0, F2(ei::ellip_cpi)),
        // related
        entry("mJzeta", &["mJacobiZeta"], &[Ar, Pm], M_LE_1, F2(ei::jacobi_zeta)),
        entry("mpJzeta", &["mpJacobiZeta"], &[Ph, Pm], M_LE_1, F2(ei::jacobi_zeta_phi)),
        entry(
            "mJomega",
            &["mJacobiOmega"],
            &[Ar, Nu, Pm],
            "m <= 1, nu < 1",
            F3(ei::jacobi_omega),
        ),
        entry(
            "mpJomega",
            &["mpJacobiOmega"],
            &[Ph, Nu, Pm],
            "m <= 1, nu < 1",
            F3(ei::jacobi_omega_phi),
        ),
        entry(
            "mHlambda",
            &["mHeumanLambda"],
            &[Ar, Pm],
            "0 <= m <= 1",
            F2(ei::heuman_lambda),
        ),
        // Jacobian functions
        entry("mjam", &["mJacobiAM"], &[Ar, Pm], ANY, F2(jacobi_am)),
        entry("mjcd", &["mJacobiCD"], &[Ar, Pm], ANY, Glaisher(Cd)),
        entry("mjcn", &["mJacobiCN"], &[Ar, Pm], ANY, Glaisher(Cn)),
        entry("mjcs", &["mJacobiCS"], &[Ar, Pm], ANY, Glaisher(Cs)),
        entry("mjdc", &["mJacobiDC"], &[Ar, Pm], ANY, Glaisher(Dc)),
        entry("mjdn", &["mJacobiDN"], &[Ar, Pm], ANY, Glaisher(Dn)),
        entry("mjds", &["mJacobiDS"], &[Ar, Pm], ANY, Glaisher(Ds)),
        entry("mjnc", &["mJacobiNC"], &[Ar, Pm], ANY, Glaisher(Nc)),
        entry("mjnd", &["mJacobiND"], &[Ar, Pm], ANY, Glaisher(Nd)),
        entry("mjns", &["mJacobiNS"], &[Ar, Pm], ANY, Glaisher(Ns)),
        entry("mjsc", &["mJacobiSC"], &[Ar, Pm], ANY, Glaisher(Sc)),
        entry("mjsd", &["mJacobiSD"], &[Ar, Pm], ANY, Glaisher(Sd)),
        entry("mjsn", &["mJacobiSN"], &[Ar, Pm], ANY, Glaisher(Sn)),
        // inverses
        entry(
            "mijam",
            &["mInverseJacobiAM"],
            &[Ar, Pm],
            LEGENDRE,
            F2(inverse::inverse_am),
        ),
        entry(
            "mijcd",
            &["mInverseJacobiCD"],
            &[Ar, Pm],
            "range of cd",
            InverseGlaisher(Cd),
        ),
        entry(
            "mijcn",
            &["mInverseJacobiCN"],
            &[Ar, Pm],
            "range of cn",
            InverseGlaisher(Cn),
        ),
        entry(
            "mijcs",
            &["mInverseJacobiCS"],
            &[Ar, Pm],
            "range of cs",
            InverseGlaisher(Cs),
        ),
        entry(
            "mijdc",
            &["mInverseJacobiDC"],
            &[Ar, Pm],
            "range of dc",
            InverseGlaisher(Dc),
        ),
        entry(
            "mijdn",
            &["mInverseJacobiDN"],
            &[Ar, Pm],
            "range of dn",
            InverseGlaisher(Dn),
        ),
        entry(
            "mijds",
            &["mInverseJacobiDS"],
            &[Ar, Pm],
            "range of ds",
            InverseGlaisher(Ds),
        ),
        entry(
            "mijnc",
            &["mInverseJacobiNC"],
            &[Ar, Pm],
            "range of nc",
            InverseGlaisher(Nc),
        ),
        entry(
            "mijnd",
            &["mInverseJacobiND"],
            &[Ar, Pm],
            "range of nd",
            InverseGlaisher(Nd),
        ),
        entry(
            "mijns",
            &["mInverseJacobiNS"],
            &[Ar, Pm],
            "range of ns",
            InverseGlaisher(Ns),
        ),
        entry(
            "mijsc",
            &["mInverseJacobiSC"],
            &[Ar, Pm],
            "range of sc",
            InverseGlaisher(Sc),
        ),
        entry(
            "mijsd",
            &["mInverseJacobiSD"],
            &[Ar, Pm],
            "range of sd",
            InverseGlaisher(Sd),
        ),
        entry(
            "mijsn",
            &["mInverseJacobiSN"],
            &[Ar, Pm],
            "range of sn",
            InverseGlaisher(Sn),
        ),
        // nome; its modulus form is elnome
        entry("mnome", &["mEllipticNome"], &[Pm], "0 <= m <= 1", F1(theta::mnome)),
    ];
    for d in &with_k {
        e.push(d.clone());
    }
    for d in &with_k {
        let mut k = modulus_form(d);
        if d.name == "mnome" {
            k.name = "elnome".into();
        }
        e.push(k);
    }
    e.extend([
        entry("gcl", &["GaussCL"], &[Ar], ANY, F1(misc::gcl)),
        entry("gsl", &["GaussSL"], &[Ar], ANY, F1(misc::gsl)),
        entry("igcl", &["InverseGaussCL"], &[Ar], "|x| <= 1", F1(misc::igcl)),
        entry("igsl", &["InverseGaussSL", "lgsl"], &[Ar], "|x| <= 1", F1(misc::igsl)),
        entry("gd", &["GudermannGD"], &[Ar], ANY, F1(misc::gd)),
        entry("igd", &["InverseGudermannGD"], &[Ar], "|x| <= pi/2", F1(misc::igd)),
        entry("jtheta1", &["JacobiTheta1"], &[Ar, Nq], NOME, Theta(theta::Theta::One)),
        entry("jtheta2", &["JacobiTheta2"], &[Ar, Nq], NOME, Theta(theta::Theta::Two)),
        entry(
            "jtheta3",
            &["JacobiTheta3"],
            &[Ar, Nq],
            NOME,
            Theta(theta::Theta::Three),
        ),
        entry("jtheta4", &["JacobiTheta4"], &[Ar, Nq], NOME, Theta(theta::Theta::Four)),
        entry(
            "nthetaC",
            &["NevilleThetaC"],
            &[Ar, Nq],
            NOME,
            Neville(theta::Neville::C),
        ),
        entry(
            "nthetaD",
            &["NevilleThetaD"],
            &[Ar, Nq],
            NOME,
            Neville(theta::Neville::D),
        ),
        entry(
            "nthetaN",
            &["NevilleThetaN"],
            &[Ar, Nq],
            NOME,
            Neville(theta::Neville::N),
        ),
        entry(
            "nthetaS",
            &["NevilleThetaS"],
            &[Ar, Nq],
            NOME,
            Neville(theta::Neville::S),
        ),
        entry(
            "mnthetaC",
            &["mNevilleThetaC"],
            &[Ar, Pm],
            "0 <= m < 1",
            NevilleM(theta::Neville::C),
        ),
        entry(
            "mnthetaD",
            &["mNevilleThetaD"],
            &[Ar, Pm],
            "0 <= m < 1",
            NevilleM(theta::Neville::D),
        ),
        entry(
            "mnthetaN",
            &["mNevilleThetaN"],
            &[Ar, Pm],
            "0 <= m < 1",
            NevilleM(theta::Neville::N),
        ),
        entry(
            "mnthetaS",
            &["mNevilleThetaS"],
            &[Ar, Pm],
            "0 <= m < 1",
            NevilleM(theta::Neville::S),
        ),
        entry(
            "ielnome",
            &["InverseEllipticNome"],
            &[Nq],
            "0 <= q < 1",
            F1(theta::ielnome),
        ),
    ]);
    Registry { entries: e }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_name_and_alias() {
        let r = Registry::global();
        let a = r.lookup("melK").unwrap();
        assert_eq!(a.arity, 1);
        let b = r.lookup("mEllipticK").unwrap();
        assert_eq!(a.name, b.name);
        assert!(matches!(r.lookup("nosuch"), Err(ElementalError::NotFound { .. })));
        assert!(matches!(r.lookup("melE"), Err(ElementalError::Ambiguous { .. })));
        assert_eq!(r.lookup_with_arity("melE", 2).unwrap().arity, 2);
        assert_eq!(r.lookup("MELk").unwrap().name, "melK");
    }

    #[test]
    fn near_matches_are_listed() {
        match Registry::global().lookup("melKK") {
            Err(ElementalError::NotFound { suggestions, .. }) => assert!(suggestions.iter().any(|s| s == "melK")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn name_arity_pairs_are_unique() {
        let r = Registry::global();
        let mut seen = std::collections::HashSet::new();
        for d in r.entries() {
            for n in std::iter::once(&d.name).chain(&d.aliases) {
                assert!(
                    seen.insert((n.to_ascii_lowercase(), d.arity)),
                    "duplicate {n}/{}",
                    d.arity
                );
            }
        }
    }

    #[test]
    fn modulus_forms_square() {
        let r = Registry::global();
        let k = r.lookup("elK").unwrap();
        let m = r.lookup("melK").unwrap();
        assert_eq!(k.eval(&[-0.5]).to_bits(), m.eval(&[0.25]).to_bits());
        assert_eq!(
            r.lookup("elnome").unwrap().eval(&[0.5f64.sqrt()]),
            theta::elnome(0.5f64.sqrt())
        );
    }

    #[test]
    fn broadcasting() {
        let r = Registry::global();
        let k = r.lookup("melK").unwrap();
        let out = broadcast_apply(k, &[Tensor::scalar(0.0)]).unwrap();
        assert!(out.is_scalar());
        assert_eq!(out.data()[0], std::f64::consts::FRAC_PI_2);

        let sn = r.lookup("mjsn").unwrap();
        let x = Tensor::new(vec![2, 2], vec![0.23; 4]).unwrap();
        let out = broadcast_apply(sn, &[x, Tensor::scalar(0.998001)]).unwrap();
        assert_eq!(out.shape(), &[2, 2]);
        for v in out.data() {
            assert!((v - 0.226_032).abs() < 5e-7);
        }

        let f = r.lookup_with_arity("melF", 2).unwrap();
        let err = broadcast_apply(f, &[Tensor::vector(vec![0.1; 3]), Tensor::vector(vec![0.1; 4])]);
        assert!(matches!(err, Err(ElementalError::Shape { .. })));
        let err = broadcast_apply(f, &[Tensor::scalar(0.1)]);
        assert!(matches!(err, Err(ElementalError::Arity { .. })));
    }

    #[test]
    fn parallel_matches_sequential() {
        let r = Registry::global();
        let f = r.lookup_with_arity("mpelE", 2).unwrap();
        let xs: Vec<f64> = (0..10_000).map(|i| i as f64 * 1e-3).collect();
        let out = broadcast_apply(f, &[Tensor::vector(xs.clone()), Tensor::scalar(0.7)]).unwrap();
        for (x, v) in xs.iter().zip(out.data()) {
            assert_eq!(v.to_bits(), f.eval(&[*x, 0.7]).to_bits());
        }
    }

    #[test]
    fn manifest_matches_committed_copy() {
        let committed = include_str!("../manifest.csv");
        assert_eq!(Registry::global().manifest(), committed);
    }
}
