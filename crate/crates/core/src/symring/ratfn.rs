use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{checked_weight, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomials over Q, ascending coefficients, no trailing zeros.
mod dense {
    use super::*;

    pub type Poly = Vec<Rational>;

    pub fn trim(p: &mut Poly) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    /// Splits a nonzero Laurent polynomial as `μ^shift · p(μ)` with `p(0) ≠ 0`.
    pub fn split(l: &LaurentPoly) -> (i64, Poly) {
        let lo = l.min_weight().expect("nonzero");
        let hi = l.max_weight().expect("nonzero");
        let mut p = vec![Rational::zero(); (hi - lo) as usize + 1];
        for (w, c) in l.terms() {
            p[(w - lo) as usize] = c.clone();
        }
        (lo, p)
    }

    pub fn to_laurent(p: &Poly, shift: i64) -> LaurentPoly {
        let mut l = LaurentPoly::zero();
        for (i, c) in p.iter().enumerate() {
            l.add_term(checked_weight(i as i64, shift), c.clone());
        }
        l
    }

    pub fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
        let mut r = a.clone();
        trim(&mut r);
        let db = b.len() - 1;
        let lead = b[db].clone();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let factor = r.last().unwrap() / &lead;
            for (i, bc) in b.iter().enumerate() {
                let t = &factor * bc;
                r[i + shift] -= t;
            }
            q[shift] = factor;
            r.pop();
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn monic(mut p: Poly) -> Poly {
        if let Some(lead) = p.last().cloned() {
            for c in &mut p {
                *c /= &lead;
            }
        }
        p
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
        }
        monic(x)
    }

    pub fn exact_div(a: &Poly, b: &Poly) -> Poly {
        let (q, r) = divrem(a, b);
        debug_assert!(r.is_empty());
        q
    }
}

/// An element of the fraction field of `Q[μ, μ⁻¹]`.
///
/// Canonical form: the denominator is an ordinary polynomial with constant
/// term 1, coprime to the numerator; any monomial factor lives in the
/// numerator. Two equal fractions therefore have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (a, n) = dense::split(&num);
        let (b, d) = dense::split(&den);
        let g = dense::gcd(&n, &d);
        let mut n = dense::exact_div(&n, &g);
        let mut d = dense::exact_div(&d, &g);
        let c = d[0].clone();
        for x in n.iter_mut().chain(d.iter_mut()) {
            *x /= &c;
        }
        Ok(RatFn {
            num: dense::to_laurent(&n, checked_weight(a, -b)),
            den: dense::to_laurent(&d, 0),
        })
    }

    pub fn zero() -> Self {
        RatFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial, if the reduced denominator is 1.
    pub fn as_polynomial(&self) -> Option<&LaurentPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, rhs: &RatFn) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatFn::new(self.num.scale(c), self.den.clone()).expect("denominator is nonzero")
    }

    /// `μ ↦ μ⁻¹`.
    pub fn dualize(&self) -> Self {
        RatFn::new(self.num.dualize(), self.den.dualize()).expect("denominator is nonzero")
    }

    /// Value at `μ = x`; `None` at a pole (or at `x = 0` with negative powers).
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x)? / d)
    }

    /// Product of `1 − μ^w` over `weights`.
    pub fn product_of_expfactors(weights: &[i64]) -> LaurentPoly {
        weights
            .iter()
            .fold(LaurentPoly::one(), |acc, &w| &acc * &super::laurent::expfactor(w))
    }
}

impl From<LaurentPoly> for RatFn {
    fn from(p: LaurentPoly) -> Self {
        RatFn { num: p, den: LaurentPoly::one() }
    }
}

impl Add<&RatFn> for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        &self + &rhs
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl Sub<&RatFn> for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        &self - &rhs
    }
}

impl Mul<&RatFn> for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        &self * &rhs
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn::one()
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
