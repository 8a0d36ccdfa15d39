//! Reduced rational functions over the integer polynomials.
//!
//! Canonical form: monic integer denominator, numerator and denominator
//! coprime over the rationals, zero represented as 0/1. Equal rational
//! functions have identical representations, so derived equality is
//! semantic equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Reduces `num/den` to canonical form. `den` must be nonzero and monic.
    pub fn reduce(num: IntPoly, den: IntPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if !den.is_monic() {
            return Err(Error::Precondition("denominator must be monic".into()));
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: IntPoly::one() });
        }
        let g = num.gcd(&den)?;
        // g divides the monic den over Z, so g is monic and both
        // quotients stay integral.
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: IntPoly) -> RatFunc {
        RatFunc { num: p, den: IntPoly::one() }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Degree of the (reduced) denominator.
    pub fn den_degree(&self) -> usize {
        self.den.degree().unwrap_or(0)
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc> {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RatFunc::reduce(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &RatFunc) -> Result<RatFunc> {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        RatFunc::reduce(num, &self.den * &other.den)
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc> {
        RatFunc::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn to_tex(&self) -> String {
        if self.den.is_one() {
            self.num.to_tex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_tex(), self.den.to_tex())
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/")?;
        if self.den.term_count() > 1 {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}
