//! Assembly of the corona characteristic polynomial
//! `f_{GoH} = f_H^m f_G(lambda - chi_H)` from exact data, and the
//! old/new decomposition of its spectrum.
//!
//! All polynomial identities here are exact; floating point appears only
//! in the numeric rendering of per-eigenvalue root groups.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::coronal::{char_poly, coronal, Coronal};
use crate::error::{Error, Result};
use crate::graph::{corona, Graph};
use crate::poly::{compose_into, IntPoly};
use crate::roots::{
    default_width, isolate_real_roots, isolate_real_roots_lenient, isolate_real_roots_width,
    IsolatedRoot,
};

/// The exact characteristic polynomial of a corona, with its
/// old/new factorization `total = old_part * new_part`.
#[derive(Clone, Debug)]
pub struct CoronaCharPoly {
    pub total: IntPoly,
    /// |G|
    pub m: usize,
    /// |H|
    pub n: usize,
    /// `g(lambda)^m`: the "old" eigenvalues, inherited from H.
    pub old_part: IntPoly,
    /// `prod_mu (q(lambda)(lambda - mu) - p(lambda))` over the
    /// eigenvalues mu of G: the "new" eigenvalues.
    pub new_part: IntPoly,
    pub coronal: Coronal,
}

/// Builds `f_{GoH}` from `f_G`, `f_H`, and the coronal of H, without
/// constructing the corona graph.
pub fn corona_char_poly(g: &Graph, h: &Graph) -> Result<CoronaCharPoly> {
    let m = g.n();
    let n = h.n();
    let f_g = char_poly(g);
    let cor = coronal(h)?;
    let p = cor.chi.num();
    let q = cor.chi.den();
    // f_H = g * q must hold exactly; anything else is a broken invariant
    if &cor.g * q != cor.f_h {
        return Err(Error::InvariantBreach(
            "f_H is not divisible by the reduced denominator".into(),
        ));
    }
    let lam_q_minus_p = &(&IntPoly::x() * q) - p;
    let new_part = compose_into(&f_g, &lam_q_minus_p, q, 0);
    let old_part = cor.g.pow(m);
    let total = &old_part * &new_part;
    debug_assert_eq!(total, char_poly(&corona(g, h)?));
    Ok(CoronaCharPoly { total, m, n, old_part, new_part, coronal: cor })
}

/// The d+1 corona roots attached to one eigenvalue of G, reported
/// numerically (the eigenvalue itself is known only by an isolating
/// interval).
#[derive(Clone, Debug)]
pub struct NewRootGroup {
    /// Isolating interval for the eigenvalue mu of G.
    pub mu: IsolatedRoot,
    /// Approximate real roots of `q(lambda)(lambda - mu) - p(lambda)`.
    pub roots: Vec<f64>,
    /// Multiplicity of mu as an eigenvalue of G; each group root carries it.
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub m: usize,
    pub n: usize,
    /// Degree of the reduced coronal denominator.
    pub d: usize,
    /// Roots of g(lambda), multiplicities scaled by m.
    pub old_roots: Vec<IsolatedRoot>,
    /// One group of d+1 roots per isolated eigenvalue of G.
    pub new_root_groups: Vec<NewRootGroup>,
    /// Exact merged multiset: the isolated roots of the total polynomial.
    pub all_roots: Vec<IsolatedRoot>,
    /// True when a root of g is also a new eigenvalue, so multiplicities
    /// stack in the merged multiset.
    pub stacking_detected: bool,
}

pub fn decompose(g: &Graph, h: &Graph) -> Result<SpectrumReport> {
    let ccp = corona_char_poly(g, h)?;
    let cor = &ccp.coronal;

    let old_roots: Vec<IsolatedRoot> = if cor.g.degree().unwrap_or(0) == 0 {
        vec![]
    } else {
        isolate_real_roots(&cor.g)?
            .into_iter()
            .map(|mut r| {
                r.multiplicity *= ccp.m;
                r
            })
            .collect()
    };

    // tighter isolation of G's eigenvalues before numeric substitution
    let mu_width = BigRational::new(BigInt::one(), BigInt::one() << 60);
    let f_g = char_poly(g);
    let mus = isolate_real_roots_width(&f_g, &mu_width)?;
    let mut new_root_groups = Vec::with_capacity(mus.len());
    for mu in mus {
        let mid = mu.midpoint();
        // q(lambda)(lambda - mid) - p(lambda), cleared to integer coefficients
        let denom = mid.denom().clone();
        let mid_num = mid.numer().clone();
        let shifted = &(&IntPoly::x() * &IntPoly::constant(denom.clone()))
            - &IntPoly::constant(mid_num);
        let group = &(cor.chi.den() * &shifted)
            - &(cor.chi.num() * &IntPoly::constant(denom));
        let (roots, _, _) = isolate_real_roots_lenient(&group, &default_width())?;
        new_root_groups.push(NewRootGroup {
            roots: roots.iter().map(|r| r.approx()).collect(),
            multiplicity: mu.multiplicity,
            mu,
        });
    }

    let all_roots = isolate_real_roots(&ccp.total)?;

    // stacking: a common root of g and the new part
    let stacking_detected = if cor.g.degree().unwrap_or(0) == 0 {
        false
    } else {
        cor.g.gcd(&ccp.new_part)?.degree().unwrap_or(0) > 0
    };

    Ok(SpectrumReport {
        m: ccp.m,
        n: ccp.n,
        d: cor.d,
        old_roots,
        new_root_groups,
        all_roots,
        stacking_detected,
    })
}
