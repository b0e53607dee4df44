use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{rat, LaurentPoly, Rational};
use super::ratfn::RatFn;
use crate::error::{Error, Result};

/// A virtual `ℂ*`-representation `Σ a_w ℂ_w`, stored as the integer
/// Laurent polynomial `Σ a_w μ^w`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VirtualCharacter(BTreeMap<i64, i64>);

impl VirtualCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut c = Self::zero();
        for &(w, a) in terms {
            c.add_term(w, a);
        }
        c
    }

    pub fn add_term(&mut self, weight: i64, a: i64) {
        let slot = self.0.entry(weight).or_insert(0);
        *slot = slot.checked_add(a).expect("coefficient overflow");
        if *slot == 0 {
            self.0.remove(&weight);
        }
    }

    pub fn coeff(&self, weight: i64) -> i64 {
        self.0.get(&weight).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&w, &a)| (w, a))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Virtual dimension `Σ a_w`.
    pub fn dim(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn dualize(&self) -> Self {
        VirtualCharacter(self.0.iter().map(|(&w, &a)| (-w, a)).collect())
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&w, &a) in &self.0 {
            p.add_term(w, rat(a));
        }
        p
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, a) in other.terms() {
            out.add_term(w, a);
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, a) in other.terms() {
            out.add_term(w, -a);
        }
        out
    }

    /// Weights repeated by multiplicity, ascending. Only meaningful for
    /// genuine (nonnegative) representations.
    pub fn weight_list(&self) -> Vec<i64> {
        self.0
            .iter()
            .flat_map(|(&w, &a)| std::iter::repeat_n(w, a.max(0) as usize))
            .collect()
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// Checks that `u` reduces to a Laurent polynomial with integer
/// coefficients and returns it as a character.
pub fn to_polynomial(u: &RatFn) -> Result<VirtualCharacter> {
    let p = u
        .as_polynomial()
        .ok_or_else(|| Error::NotPolynomial(u.to_string()))?;
    let mut out = VirtualCharacter::zero();
    for (w, c) in p.terms() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient(c.to_string()));
        }
        let a = c
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::NonIntegerCoefficient(c.to_string()))?;
        out.add_term(w, a);
    }
    Ok(out)
}

/// `scalar · t^degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerClass {
    pub scalar: Rational,
    pub degree: i64,
}

impl EulerClass {
    pub fn one() -> Self {
        EulerClass { scalar: rat(1), degree: 0 }
    }
}

impl fmt::Display for EulerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            0 => write!(f, "{}", self.scalar),
            d => {
                if !self.scalar.is_one() {
                    write!(f, "{}*", self.scalar)?;
                }
                if d == 1 {
                    f.write_str("t")
                } else {
                    write!(f, "t^{d}")
                }
            }
        }
    }
}

/// Equivariant Euler class of a genuine representation with no trivial
/// summand: `Π w^{a_w} · t^{Σ a_w}`.
pub fn euler_class(c: &VirtualCharacter) -> Result<EulerClass> {
    let mut scalar = BigInt::one();
    let mut degree = 0i64;
    for (w, a) in c.terms() {
        if a < 0 {
            return Err(Error::EulerClassUndefined(format!("negative multiplicity {a} at weight {w}")));
        }
        if w == 0 {
            return Err(Error::EulerClassUndefined("trivial weight-0 summand".into()));
        }
        scalar *= num_traits::pow::pow(BigInt::from(w), a as usize);
        degree += a;
    }
    debug_assert!(!scalar.is_zero());
    Ok(EulerClass { scalar: Rational::from_integer(scalar), degree })
}
