//! Closed-form coronals: regular graphs, complete bipartite and
//! k-partite graphs, and paths. Each formula is cross-checked against
//! the generic engine in the test suites.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::ratfunc::RatFunc;

/// Part sizes of a complete multipartite graph, with the elementary
/// symmetric sums `C_j` of the sizes.
#[derive(Clone, Debug)]
pub struct PartitionSpec {
    parts: Vec<usize>,
    /// `elementary[j]` = C_j for j = 0..=k, with C_0 = 1.
    elementary: Vec<BigInt>,
}

impl PartitionSpec {
    pub fn new(parts: Vec<usize>) -> Result<PartitionSpec> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::Precondition(
                "parts must be a nonempty list of positive integers".into(),
            ));
        }
        let k = parts.len();
        let mut e = vec![BigInt::from(0); k + 1];
        e[0] = BigInt::from(1);
        for &p in &parts {
            for j in (1..=k).rev() {
                let add = &e[j - 1] * BigInt::from(p as i64);
                e[j] += add;
            }
        }
        Ok(PartitionSpec { parts, elementary: e })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn elementary_sum(&self, j: usize) -> BigInt {
        self.elementary[j].clone()
    }
}

/// `chi_H = n / (lambda - r)` for an r-regular graph on n vertices.
pub fn coronal_regular(n: usize, r: usize) -> Result<RatFunc> {
    if n == 0 || r >= n {
        return Err(Error::Precondition(format!(
            "need n >= 1 and 0 <= r <= n-1, got n = {}, r = {}",
            n, r
        )));
    }
    RatFunc::reduce(
        IntPoly::constant(BigInt::from(n as i64)),
        IntPoly::from_i64(&[-(r as i64), 1]),
    )
}

/// The two new eigenvalues `(mu + r +/- sqrt((r - mu)^2 + 4n)) / 2`
/// attached to an eigenvalue `mu` of G when H is r-regular on n vertices.
pub fn regular_corona_new_eigs(mu: f64, r: usize, n: usize) -> (f64, f64) {
    let disc = ((r as f64 - mu).powi(2) + 4.0 * n as f64).sqrt();
    ((mu + r as f64 - disc) / 2.0, (mu + r as f64 + disc) / 2.0)
}

/// `chi_{K_{p,q}} = ((p+q) lambda + 2pq) / (lambda^2 - pq)`.
pub fn coronal_complete_bipartite(p: usize, q: usize) -> Result<RatFunc> {
    if p == 0 || q == 0 {
        return Err(Error::Precondition("need p, q >= 1".into()));
    }
    let (p, q) = (p as i64, q as i64);
    RatFunc::reduce(
        IntPoly::from_i64(&[2 * p * q, p + q]),
        IntPoly::from_i64(&[-p * q, 0, 1]),
    )
}

/// The cubic `x^3 - mu x^2 - (p + q + pq) x + pq(mu - 2)` whose roots are
/// the corona eigenvalues attached to a rational eigenvalue `mu` of G when
/// H = K_{p,q}. Returned with cleared (primitive integer) coefficients, so
/// the root set is unchanged.
pub fn bipartite_new_eig_cubic(mu: &BigRational, p: usize, q: usize) -> IntPoly {
    let (pq, s) = (BigInt::from((p * q) as i64), BigInt::from((p + q + p * q) as i64));
    let den = mu.denom().clone();
    let num = mu.numer().clone();
    // den * x^3 - num * x^2 - den*(p+q+pq) * x + pq*(num - 2*den)
    IntPoly::new(vec![
        &pq * (&num - BigInt::from(2) * &den),
        -(&den * &s),
        -num,
        den,
    ])
    .primitive_part()
}

/// Prop 7's C_j form:
/// `chi_H = (sum_j j C_j lambda^(k-j)) / (lambda^k - sum_{j>=2} (j-1) C_j lambda^(k-j))`.
pub fn coronal_complete_multipartite(spec: &PartitionSpec) -> Result<RatFunc> {
    let k = spec.parts.len();
    let mut num = IntPoly::zero();
    let mut den = IntPoly::monomial(BigInt::from(1), k);
    for j in 1..=k {
        let cj = spec.elementary_sum(j);
        num = &num + &IntPoly::monomial(BigInt::from(j as i64) * &cj, k - j);
        if j >= 2 {
            den = &den - &IntPoly::monomial(BigInt::from((j - 1) as i64) * &cj, k - j);
        }
    }
    RatFunc::reduce(num, den)
}

/// Prop 7's middle (product/sum) form, defined whenever the denominator
/// does not vanish identically:
/// `chi_H = (sum_j n_j g_j) / (prod_i (n_i + lambda) - sum_j n_j g_j)`
/// with `g_j = prod_{i != j} (n_i + lambda)`.
pub fn coronal_complete_multipartite_product_form(spec: &PartitionSpec) -> Result<RatFunc> {
    let mut prod = IntPoly::one();
    for &p in &spec.parts {
        prod = &prod * &IntPoly::from_i64(&[p as i64, 1]);
    }
    let mut sum = IntPoly::zero();
    for (j, &nj) in spec.parts.iter().enumerate() {
        let mut gj = IntPoly::one();
        for (i, &ni) in spec.parts.iter().enumerate() {
            if i != j {
                gj = &gj * &IntPoly::from_i64(&[ni as i64, 1]);
            }
        }
        sum = &sum + &(&IntPoly::constant(BigInt::from(nj as i64)) * &gj);
    }
    let den = &prod - &sum;
    if den.is_zero() {
        return Err(Error::Precondition(
            "product form denominator vanishes identically".into(),
        ));
    }
    if !den.is_monic() {
        return Err(Error::InvariantBreach("product form denominator not monic".into()));
    }
    RatFunc::reduce(sum, den)
}

/// The path characteristic polynomials `f_0 = 1, f_1 = x,
/// f_j = x f_{j-1} - f_{j-2}`; `f_j = char_poly(P_j)`.
pub fn path_charpoly_sequence(n: usize) -> Vec<IntPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(IntPoly::one());
    if n >= 1 {
        out.push(IntPoly::x());
    }
    for j in 2..=n {
        let next = &(&IntPoly::x() * &out[j - 1]) - &out[j - 2];
        out.push(next);
    }
    out
}

/// `chi_{P_n} = (n f_n - 2 sum_{j=0}^{n-1} f_j) / ((lambda - 2) f_n)`.
pub fn coronal_path(n: usize) -> Result<RatFunc> {
    if n == 0 {
        return Err(Error::Precondition("need n >= 1".into()));
    }
    let f = path_charpoly_sequence(n);
    let mut tail = IntPoly::zero();
    for fj in &f[..n] {
        tail = &tail + fj;
    }
    let num = &(&IntPoly::constant(BigInt::from(n as i64)) * &f[n])
        - &(&IntPoly::from_i64(&[2]) * &tail);
    let den = &IntPoly::from_i64(&[-2, 1]) * &f[n];
    RatFunc::reduce(num, den)
}
