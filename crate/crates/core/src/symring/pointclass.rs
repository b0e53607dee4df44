use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ratfn::RatFn;
use crate::error::{Error, Result};

/// `a + b·x` with `x² = 0`, where `x` is the point class of a pointwise
/// fixed rational curve. Coefficients live in the fraction field because
/// Todd/Euler factors are fractions before the pushforward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClassElem {
    pub a: RatFn,
    pub b: RatFn,
}

impl PointClassElem {
    pub fn new(a: RatFn, b: RatFn) -> Self {
        PointClassElem { a, b }
    }

    pub fn scalar(a: RatFn) -> Self {
        PointClassElem { a, b: RatFn::zero() }
    }

    /// `b·x`.
    pub fn point(b: RatFn) -> Self {
        PointClassElem { a: RatFn::zero(), b }
    }

    pub fn one() -> Self {
        Self::scalar(RatFn::one())
    }

    /// `(a + bx)⁻¹ = a⁻¹ − a⁻²b·x`; needs `a ≠ 0`.
    pub fn inv(&self) -> Result<Self> {
        if self.a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ai = self.a.inv()?;
        let b = -&(&(&ai * &ai) * &self.b);
        Ok(PointClassElem { a: ai, b })
    }

    /// Degree integral over the curve: the coefficient of `x`.
    pub fn integrate(&self) -> RatFn {
        self.b.clone()
    }
}

impl From<RatFn> for PointClassElem {
    fn from(a: RatFn) -> Self {
        Self::scalar(a)
    }
}

impl Add<&PointClassElem> for &PointClassElem {
    type Output = PointClassElem;
    fn add(self, rhs: &PointClassElem) -> PointClassElem {
        PointClassElem { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub<&PointClassElem> for &PointClassElem {
    type Output = PointClassElem;
    fn sub(self, rhs: &PointClassElem) -> PointClassElem {
        PointClassElem { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Neg for &PointClassElem {
    type Output = PointClassElem;
    fn neg(self) -> PointClassElem {
        PointClassElem { a: -&self.a, b: -&self.b }
    }
}

impl Mul<&PointClassElem> for &PointClassElem {
    type Output = PointClassElem;
    fn mul(self, rhs: &PointClassElem) -> PointClassElem {
        PointClassElem {
            a: &self.a * &rhs.a,
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl fmt::Display for PointClassElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}]*x", self.a, self.b)
    }
}
