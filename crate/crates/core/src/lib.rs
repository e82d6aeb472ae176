//! Real-argument elliptic integrals, Jacobian elliptic functions and their
//! relatives.
//!
//! Every scalar function takes and returns `f64` and follows the value
//! policy of [`numeric`]: out-of-domain arguments give NaN, poles give
//! signed infinities, and nothing panics.

pub mod bulirsch;
pub mod carlson;
pub mod elemental;
pub mod integrals;
pub mod inverse;
pub mod jacobi;
pub mod misc;
pub mod numeric;
pub mod oracle;
pub mod theta;
