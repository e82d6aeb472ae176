//! Legendre, Jacobi and Jacobi-second-form elliptic integrals, their
//! complete and complementary forms, and the related Z, Omega and Heuman
//! Lambda functions.
//!
//! Everything is backed by the Carlson kernels. Incomplete integrals in the
//! amplitude `phi` are reduced to `|phi_r| <= pi/2` and extended by their
//! quasi-periods (`F(phi + n pi) = F(phi_r) + 2nK`, and likewise for the
//! other kinds).

mod complete;
mod incomplete;
mod related;
mod second;

use std::fmt;

pub(crate) use complete::ellip_pi_with_p;
pub use complete::{ellip_b, ellip_c, ellip_ce, ellip_ck, ellip_cpi, ellip_d, ellip_e, ellip_k, ellip_pi};
pub use incomplete::{
    ellip_b_phi, ellip_b_x, ellip_d_phi, ellip_d_x, ellip_e_phi, ellip_e_x, ellip_f_phi, ellip_f_x, ellip_pi_phi,
    ellip_pi_x, incomplete_jacobi, incomplete_legendre,
};
pub(crate) use incomplete::{kernel_f, PathPoint};
pub use related::{heuman_lambda, jacobi_omega, jacobi_omega_phi, jacobi_zeta, jacobi_zeta_phi};
pub use second::{jacobi_epsilon, jacobi_lambda};

/// Kind of an elliptic integral. `C` exists only in complete form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralKind {
    B,
    C,
    D,
    E,
    /// `F` incomplete, `K` complete.
    F,
    Pi,
}

impl fmt::Display for IntegralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IntegralKind::B => "B",
            IntegralKind::C => "C",
            IntegralKind::D => "D",
            IntegralKind::E => "E",
            IntegralKind::F => "F",
            IntegralKind::Pi => "Pi",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KindError {
    #[error("the integral C has no incomplete form")]
    NoIncompleteC,
}

/// Complete integral of the given kind. `nu` is read only for `Pi`.
pub fn complete(kind: IntegralKind, nu: f64, m: f64) -> f64 {
    match kind {
        IntegralKind::B => ellip_b(m),
        IntegralKind::C => ellip_c(m),
        IntegralKind::D => ellip_d(m),
        IntegralKind::E => ellip_e(m),
        IntegralKind::F => ellip_k(m),
        IntegralKind::Pi => ellip_pi(nu, m),
    }
}
