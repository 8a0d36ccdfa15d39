//! Exact real-root isolation: Yun square-free decomposition followed by
//! Sturm-sequence bisection to disjoint isolating rational intervals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Default isolating-interval width: 2^-40.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 40)
}

/// An isolating interval `(lo, hi]` for a single real root; a rational
/// root found exactly is stored as the point `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn approx(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Set intersection with another interval (half-open semantics).
    pub fn overlaps(&self, other: &IsolatedRoot) -> bool {
        if self.is_point() {
            if other.is_point() {
                return self.lo == other.lo;
            }
            return other.lo < self.lo && self.lo <= other.hi;
        }
        if other.is_point() {
            return other.overlaps(self);
        }
        self.lo < other.hi && other.lo < self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        if self.is_point() {
            x == &self.lo
        } else {
            &self.lo < x && x <= &self.hi
        }
    }
}

// ---- rational polynomial helpers (ascending coefficients, trimmed) ----

type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn to_rat(p: &IntPoly) -> RatPoly {
    p.coeffs().iter().map(|c| BigRational::from(c.clone())).collect()
}

fn rat_derivative(p: &RatPoly) -> RatPoly {
    if p.len() <= 1 {
        return vec![];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from(BigInt::from(k)))
        .collect()
}

fn rat_eval(p: &RatPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn rat_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r.last().unwrap() / lb;
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[dr - db + i] -= t;
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Sturm chain of a square-free polynomial.
struct Sturm {
    chain: Vec<RatPoly>,
    poly: RatPoly,
}

impl Sturm {
    fn new(p: &IntPoly) -> Sturm {
        let p0 = to_rat(p);
        let mut chain = vec![p0.clone()];
        let p1 = rat_derivative(&p0);
        if !p1.is_empty() {
            chain.push(p1);
        }
        while chain.last().unwrap().len() > 1 {
            let n = chain.len();
            let r = rat_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(r.iter().map(|c| -c).collect());
        }
        Sturm { chain, poly: p0 }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for p in &self.chain {
            let v = rat_eval(p, x);
            let s = if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Cauchy root bound: all real roots lie in `(-B, B)`.
fn root_bound(p: &IntPoly) -> BigRational {
    let lead = BigRational::from(p.leading().unwrap().abs());
    let mx = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.abs()))
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    BigRational::one() + mx / lead
}

/// Yun's square-free decomposition of the primitive part: returns
/// pairwise-coprime square-free factors with their multiplicities.
pub fn square_free_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let f = p.primitive_part();
    if f.degree() == Some(0) {
        return Ok(vec![]);
    }
    let df = f.derivative();
    let a = f.gcd(&df)?;
    let mut b = f.exact_div(&a)?;
    let c = df.exact_div(&a)?;
    let mut d = &c - &b.derivative();
    let mut out = vec![];
    let mut i = 1usize;
    while b.degree().unwrap_or(0) > 0 {
        let ai = b.gcd(&d)?;
        let b_next = b.exact_div(&ai)?;
        let c = d.exact_div(&ai)?;
        d = &c - &b_next.derivative();
        if ai.degree().unwrap_or(0) > 0 {
            out.push((ai, i));
        }
        b = b_next;
        i += 1;
    }
    Ok(out)
}

struct FactorRoots {
    sturm: Sturm,
    multiplicity: usize,
    intervals: Vec<(BigRational, BigRational)>, // lo == hi marks a point
}

fn bisect_step(sturm: &Sturm, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    if lo == hi {
        return (lo.clone(), hi.clone());
    }
    let mid = (lo + hi) / BigRational::from(BigInt::from(2));
    if rat_eval(&sturm.poly, &mid).is_zero() {
        return (mid.clone(), mid);
    }
    if sturm.count(lo, &mid) == 1 {
        (lo.clone(), mid)
    } else {
        (mid, hi.clone())
    }
}

fn isolate_factor(
    sturm: &Sturm,
    factor: &IntPoly,
    width: &BigRational,
) -> Vec<(BigRational, BigRational)> {
    let deg = sturm.poly.len() - 1;
    if deg == 0 {
        return vec![];
    }
    let b = root_bound(factor);
    let mut out = vec![];
    let mut stack = vec![(-&b, b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let k = sturm.count(&lo, &hi);
        if k == 0 {
            continue;
        }
        if k == 1 {
            let (mut lo, mut hi) = (lo, hi);
            while lo != hi && &hi - &lo > *width {
                let (l, h) = bisect_step(sturm, &lo, &hi);
                lo = l;
                hi = h;
            }
            out.push((lo, hi));
            continue;
        }
        // split at a point that is not itself a root so half-open
        // subinterval counts stay exact
        let step = (&hi - &lo) / BigRational::from(BigInt::from(deg as i64 + 2));
        let split = (1..=deg + 1)
            .map(|j| &lo + &step * BigRational::from(BigInt::from(j as i64)))
            .find(|s| !rat_eval(&sturm.poly, s).is_zero())
            .expect("a degree-d polynomial has at most d roots");
        stack.push((lo, split.clone()));
        stack.push((split, hi));
    }
    out.sort();
    out
}

/// Isolates all real roots of `p` into disjoint rational intervals of
/// width at most `width`, with multiplicities from the square-free
/// structure. Errors if `p` has non-real roots.
pub fn isolate_real_roots_width(p: &IntPoly, width: &BigRational) -> Result<Vec<IsolatedRoot>> {
    let (roots, real, degree) = isolate_real_roots_lenient(p, width)?;
    if real != degree {
        return Err(Error::NonRealRoots { real, degree });
    }
    Ok(roots)
}

pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<IsolatedRoot>> {
    isolate_real_roots_width(p, &default_width())
}

/// As [`isolate_real_roots_width`] but tolerates non-real roots, returning
/// `(roots, real_count_with_multiplicity, degree)`.
pub fn isolate_real_roots_lenient(
    p: &IntPoly,
    width: &BigRational,
) -> Result<(Vec<IsolatedRoot>, usize, usize)> {
    if p.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let degree = p.degree().unwrap();
    let mut factors: Vec<FactorRoots> = square_free_decomposition(p)?
        .into_iter()
        .map(|(f, m)| {
            let sturm = Sturm::new(&f);
            let intervals = isolate_factor(&sturm, &f, width);
            FactorRoots { sturm, multiplicity: m, intervals }
        })
        .collect();

    // refine until intervals from distinct factors are disjoint
    loop {
        let mut all: Vec<(usize, usize)> = vec![];
        for (fi, f) in factors.iter().enumerate() {
            for ii in 0..f.intervals.len() {
                all.push((fi, ii));
            }
        }
        all.sort_by(|a, b| {
            let ia = &factors[a.0].intervals[a.1];
            let ib = &factors[b.0].intervals[b.1];
            ia.cmp(ib)
        });
        let mut clash = None;
        for w in all.windows(2) {
            let (f1, i1) = w[0];
            let (f2, i2) = w[1];
            if f1 == f2 {
                continue; // same-factor intervals are disjoint by construction
            }
            let a = &factors[f1].intervals[i1];
            let b = &factors[f2].intervals[i2];
            let ra = IsolatedRoot { lo: a.0.clone(), hi: a.1.clone(), multiplicity: 1 };
            let rb = IsolatedRoot { lo: b.0.clone(), hi: b.1.clone(), multiplicity: 1 };
            if ra.overlaps(&rb) {
                clash = Some((w[0], w[1]));
                break;
            }
        }
        match clash {
            None => break,
            Some(((f1, i1), (f2, i2))) => {
                for (fi, ii) in [(f1, i1), (f2, i2)] {
                    let (lo, hi) = factors[fi].intervals[ii].clone();
                    factors[fi].intervals[ii] = bisect_step(&factors[fi].sturm, &lo, &hi);
                }
            }
        }
    }

    let mut roots = vec![];
    for f in &factors {
        for (lo, hi) in &f.intervals {
            roots.push(IsolatedRoot {
                lo: lo.clone(),
                hi: hi.clone(),
                multiplicity: f.multiplicity,
            });
        }
    }
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    let real: usize = roots.iter().map(|r| r.multiplicity).sum();
    Ok((roots, real, degree))
}
