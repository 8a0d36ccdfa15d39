//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros; the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly { coeffs: v }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from(c.clone());
        }
        acc
    }

    /// gcd of all coefficients (positive; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact quotient `self / q`; errors unless `q` divides exactly over Z.
    pub fn exact_div(&self, q: &IntPoly) -> Result<IntPoly> {
        if q.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dn = self.degree().unwrap();
        let dq = q.degree().unwrap();
        if dn < dq {
            return Err(Error::NonDivisible);
        }
        let lq = q.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dq + 1];
        for k in (0..=dn - dq).rev() {
            let lead = rem[k + dq].clone();
            if lead.is_zero() {
                continue;
            }
            let (c, r) = lead.div_rem(lq);
            if !r.is_zero() {
                return Err(Error::NonDivisible);
            }
            for (i, qc) in q.coeffs.iter().enumerate() {
                rem[k + i] -= &c * qc;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// Pseudo-remainder: `lead(q)^(deg p - deg q + 1) * p mod q`.
    fn pseudo_rem(&self, q: &IntPoly) -> IntPoly {
        let dq = q.degree().expect("pseudo_rem by zero");
        let lq = q.leading().unwrap().clone();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dq {
                break;
            }
            let lr = rem.leading().unwrap().clone();
            let shift = dr - dq;
            let mut next = vec![BigInt::zero(); dr];
            for (i, c) in rem.coeffs.iter().enumerate().take(dr) {
                next[i] = c * &lq;
            }
            for (i, c) in q.coeffs.iter().enumerate().take(dq) {
                next[shift + i] -= c * &lr;
            }
            rem = IntPoly::new(next);
        }
        rem
    }

    /// Greatest common divisor over the rationals, returned as the
    /// primitive integer polynomial with positive leading coefficient.
    /// When either input is monic the result is monic (Gauss's lemma).
    pub fn gcd(&self, other: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdBothZero);
        }
        if self.is_zero() {
            return Ok(other.primitive_part());
        }
        if other.is_zero() {
            return Ok(self.primitive_part());
        }
        // primitive PRS
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        Ok(a.primitive_part())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            v[i] += c;
        }
        IntPoly::new(v)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            v[i] -= c;
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

/// Clears the denominator of `f(num/den)`: returns
/// `sum_k c_k * num^k * den^(m - k + extra)` where `f = sum c_k x^k`
/// and `m = deg f`. Equals `den^(m+extra) * f(num/den)` as a polynomial.
pub fn compose_into(f: &IntPoly, num: &IntPoly, den: &IntPoly, extra: usize) -> IntPoly {
    let m = match f.degree() {
        Some(m) => m,
        None => return IntPoly::zero(),
    };
    let mut acc = IntPoly::zero();
    // num^k built incrementally; den powers from the top down
    let mut num_pow = IntPoly::one();
    let mut den_pows = Vec::with_capacity(m + extra + 1);
    let mut dp = IntPoly::one();
    for _ in 0..=(m + extra) {
        den_pows.push(dp.clone());
        dp = &dp * den;
    }
    for k in 0..=m {
        let term = &IntPoly::constant(f.coeff(k)) * &num_pow;
        acc = &acc + &(&term * &den_pows[m - k + extra]);
        if k < m {
            num_pow = &num_pow * num;
        }
    }
    acc
}

/// Lagrange interpolation through integer points, with integrality of the
/// result verified.
pub fn interpolate(points: &[(BigInt, BigInt)], degree_bound: usize) -> Result<IntPoly> {
    if points.len() < degree_bound + 1 {
        return Err(Error::Precondition(format!(
            "need {} interpolation points, got {}",
            degree_bound + 1,
            points.len()
        )));
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().skip(i + 1) {
            if xi == xj {
                return Err(Error::DuplicateAbscissa(xi.to_string()));
            }
        }
    }
    let pts = &points[..degree_bound + 1];
    // sum over i of y_i * prod_{j != i} (x - x_j)/(x_i - x_j), over Q
    let mut acc = vec![BigRational::zero(); degree_bound + 1];
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = vec![BigRational::zero(); degree_bound + 1];
        basis[0] = BigRational::one();
        let mut deg = 0usize;
        let mut denom = BigRational::one();
        for (j, (xj, _)) in pts.iter().enumerate() {
            if j == i {
                continue;
            }
            // multiply basis by (x - x_j)
            for k in (0..=deg).rev() {
                let c = basis[k].clone();
                basis[k + 1] += c.clone();
                basis[k] = -c * BigRational::from(xj.clone());
            }
            deg += 1;
            denom *= BigRational::from(xi - xj);
        }
        let scale = BigRational::from(yi.clone()) / denom;
        for (a, b) in acc.iter_mut().zip(basis) {
            *a += b * scale.clone();
        }
    }
    let mut coeffs = Vec::with_capacity(acc.len());
    for c in acc {
        if !c.is_integer() {
            return Err(Error::NonIntegralInterpolant(c.to_string()));
        }
        coeffs.push(c.to_integer());
    }
    let p = IntPoly::new(coeffs);
    // extra points, if supplied, must be consistent
    for (x, y) in points.iter().skip(degree_bound + 1) {
        if &p.eval(x) != y {
            return Err(Error::NonIntegralInterpolant(format!(
                "inconsistent value at {}",
                x
            )));
        }
    }
    Ok(p)
}

fn fmt_term(f: &mut fmt::Formatter<'_>, c: &BigInt, k: usize, var: &str, first: bool) -> fmt::Result {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if k == 0 {
        write!(f, "{}", mag)
    } else if mag.is_one() {
        if k == 1 {
            write!(f, "{}", var)
        } else {
            write!(f, "{}^{}", var, k)
        }
    } else if k == 1 {
        write!(f, "{}*{}", mag, var)
    } else {
        write!(f, "{}*{}^{}", mag, var, k)
    }
}

impl fmt::Display for IntPoly {
    /// Canonical rendering: descending degree, explicit signs, variable `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            if self.coeffs[k].is_zero() {
                continue;
            }
            fmt_term(f, &self.coeffs[k], k, "x", first)?;
            first = false;
        }
        Ok(())
    }
}

impl IntPoly {
    /// TeX rendering in the variable lambda, no `*` separators.
    pub fn to_tex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str("\\lambda");
                if k > 1 {
                    out.push_str(&format!("^{{{}}}", k));
                }
            }
            first = false;
        }
        out
    }

    /// Number of terms in the rendered form.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn mul_basic() {
        // (x - 1)(x + 1) = x^2 - 1
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn pow_zero_is_one() {
        assert_eq!(p(&[-2, 1]).pow(0), IntPoly::one());
    }

    #[test]
    fn exact_div_examples() {
        // (x^3 - 2x) / x = x^2 - 2
        assert_eq!(p(&[0, -2, 0, 1]).exact_div(&p(&[0, 1])).unwrap(), p(&[-2, 0, 1]));
        assert!(p(&[1, 1]).exact_div(&p(&[0, 1])).is_err());
        assert!(p(&[1]).exact_div(&IntPoly::zero()).is_err());
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2 - 4, x^2 - 2x) = x - 2
        assert_eq!(p(&[-4, 0, 1]).gcd(&p(&[0, -2, 1])).unwrap(), p(&[-2, 1]));
        // gcd(x^3 - 2x, 3x^2 + 4x) = x
        assert_eq!(p(&[0, -2, 0, 1]).gcd(&p(&[0, 4, 3])).unwrap(), p(&[0, 1]));
        // gcd(p, 0) normalizes
        assert_eq!(p(&[4, -2]).gcd(&IntPoly::zero()).unwrap(), p(&[-2, 1]));
        assert!(IntPoly::zero().gcd(&IntPoly::zero()).is_err());
    }

    #[test]
    fn gcd_divides_both() {
        let a = &p(&[1, 2, 1]) * &p(&[3, 0, 5]);
        let b = &p(&[1, 2, 1]) * &p(&[-7, 2]);
        let g = a.gcd(&b).unwrap();
        assert!(a.exact_div(&g).is_ok());
        assert!(b.exact_div(&g).is_ok());
        assert_eq!(g, p(&[1, 2, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-2, 0, 1]).eval(&BigInt::from(3)), BigInt::from(7));
        assert_eq!(p(&[0, -2, 0, 1]).eval(&BigInt::from(0)), BigInt::from(0));
        assert_eq!(p(&[-1, 0, 1]).eval(&BigInt::from(2)), BigInt::from(3));
    }

    #[test]
    fn compose_into_identity() {
        for c in [&[1i64, 2, 3][..], &[0, 1], &[5], &[-2, 0, 0, 7]] {
            let f = p(c);
            assert_eq!(compose_into(&f, &IntPoly::x(), &IntPoly::one(), 0), f);
        }
    }

    #[test]
    fn compose_into_examples() {
        // f = x, rho = (x^2 - 1)/x: cleared form is x^2 - 1
        assert_eq!(
            compose_into(&p(&[0, 1]), &p(&[-1, 0, 1]), &p(&[0, 1]), 0),
            p(&[-1, 0, 1])
        );
        // f = x^2, rho = x/1
        assert_eq!(
            compose_into(&p(&[0, 0, 1]), &IntPoly::x(), &IntPoly::one(), 0),
            p(&[0, 0, 1])
        );
        // f = x - 2, rho = (x^2 - 2x - 4)/(x - 2): (x^2-2x-4) - 2(x-2) = x^2 - 4x
        assert_eq!(
            compose_into(&p(&[-2, 1]), &p(&[-4, -2, 1]), &p(&[-2, 1]), 0),
            p(&[0, -4, 1])
        );
    }

    #[test]
    fn interpolate_examples() {
        // x^2 - 2 through t = 0, 1, 2
        let pts: Vec<_> = [0i64, 1, 2]
            .iter()
            .map(|&t| (BigInt::from(t), p(&[-2, 0, 1]).eval(&BigInt::from(t))))
            .collect();
        assert_eq!(interpolate(&pts, 2).unwrap(), p(&[-2, 0, 1]));
        // constant
        let pts = vec![(BigInt::from(7), BigInt::from(3))];
        assert_eq!(interpolate(&pts, 0).unwrap(), p(&[3]));
        // duplicate abscissa
        let pts = vec![
            (BigInt::from(1), BigInt::from(1)),
            (BigInt::from(1), BigInt::from(2)),
        ];
        assert!(interpolate(&pts, 1).is_err());
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p(&[0, -4, 0, 0, 1]).to_string(), "x^4 - 4*x");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "x^3 - 2*x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[8, 5]).to_string(), "5*x + 8");
    }
}
