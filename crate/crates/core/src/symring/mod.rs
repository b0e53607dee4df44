//! Exact symbolic arithmetic in `μ = e^t`.
//!
//! * [`LaurentPoly`]: sparse Laurent polynomials over Q.
//! * [`RatFn`]: their fraction field, kept in reduced canonical form.
//! * [`PointClassElem`]: `a + b·x` with `x² = 0`, for pushforwards along a
//!   pointwise fixed rational curve.
//! * [`VirtualCharacter`] / [`EulerClass`]: integer characters of `ℂ*` and
//!   their equivariant Euler classes `scalar · t^degree`.

mod character;
mod laurent;
mod pointclass;
mod ratfn;

pub use character::{euler_class, to_polynomial, EulerClass, VirtualCharacter};
pub use laurent::{expfactor, parse_rational, rat, ratio, LaurentPoly, Rational};
pub use pointclass::PointClassElem;
pub use ratfn::RatFn;
