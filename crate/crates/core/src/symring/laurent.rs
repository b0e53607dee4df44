use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse Laurent polynomial `Σ c_w μ^w` with exact rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, weight: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(weight, c);
        }
        LaurentPoly { terms }
    }

    /// `μ^w`.
    pub fn mu(weight: i64) -> Self {
        Self::monomial(rat(1), weight)
    }

    /// Builds from `(weight, integer coefficient)` pairs; repeated weights add up.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::zero();
        for &(w, c) in terms {
            p.add_term(w, rat(c));
        }
        p
    }

    pub fn add_term(&mut self, weight: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(weight).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&weight);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, weight: i64) -> Rational {
        self.terms.get(&weight).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_weight(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&w, x)| (w, x * c)).collect(),
        }
    }

    /// Multiplication by `μ^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&w, c)| (checked_weight(w, k), c.clone())).collect(),
        }
    }

    /// The substitution `μ ↦ μ⁻¹`.
    pub fn dualize(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&w, c)| (-w, c.clone())).collect(),
        }
    }

    /// Value at `μ = x`. `None` when a negative power hits `x = 0`.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if x.is_zero() && self.min_weight().is_some_and(|w| w < 0) {
            return None;
        }
        let mut acc = Rational::zero();
        for (&w, c) in &self.terms {
            let p = if w >= 0 { pow(x, w as u64) } else { pow(&x.recip(), w.unsigned_abs()) };
            acc += c * p;
        }
        Some(acc)
    }

    /// Sum of the coefficients, i.e. the value at `μ = 1`.
    pub fn at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

fn pow(x: &Rational, n: u64) -> Rational {
    num_traits::pow::pow(x.clone(), n as usize)
}

pub(crate) fn checked_weight(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("weight overflow")
}

/// `1 − μ^w`; zero when `w = 0`.
pub fn expfactor(w: i64) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    p.add_term(w, rat(-1));
    p
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&w, c) in &rhs.terms {
            self.add_term(w, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&w, c)| (w, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&w, c) in &rhs.terms {
            out.add_term(w, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(checked_weight(a, b), x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Renders terms in ascending weight order, e.g. `mu^-2 + 1 - 3/2*mu^1 - mu^3`.
/// The zero polynomial is `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if w == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "mu^{w}")?;
            }
        }
        Ok(())
    }
}

/// Parses the rendering produced by `Display` (whitespace is optional,
/// `mu` alone means `mu^1`, terms may come in any order).
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split into signed terms; a '-' directly after '^' belongs to the exponent
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        pieces.push(cur);

        let mut out = LaurentPoly::zero();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let (coef_str, mono) = match body.find("mu") {
                Some(pos) => {
                    let head = body[..pos].trim_end_matches('*');
                    (head, Some(&body[pos + 2..]))
                }
                None => (body, None),
            };
            let coef = if coef_str.is_empty() {
                if mono.is_none() {
                    return Err(Error::Parse(format!("empty term in `{s}`")));
                }
                rat(1)
            } else {
                parse_rational(coef_str)?
            };
            let weight = match mono {
                None => 0,
                Some("") => 1,
                Some(m) => m
                    .strip_prefix('^')
                    .and_then(|e| e.parse::<i64>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent in `{body}`")))?,
            };
            out.add_term(weight, coef * rat(sign));
        }
        Ok(out)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
