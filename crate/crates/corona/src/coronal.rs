//! Exact characteristic polynomials and the coronal invariant.
//!
//! Two independent algorithms are provided: the rank-one determinant
//! identity `det(M + u v^T) = det(M) + v^T adj(M) u` (the workhorse,
//! via evaluation-interpolation with fraction-free elimination) and
//! Schwenk's path-deletion cofactor formula (the oracle).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{interpolate, IntPoly};
use crate::ratfunc::RatFunc;

/// Default budget for Schwenk path enumeration.
pub const DEFAULT_PATH_BUDGET: usize = 1_000_000;

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<BigInt>> {
    let n = g.n();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| if g.has_edge(u, v) { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Interpolates the degree-`n` polynomial `t -> det(tI - A + C)` where `C`
/// is a fixed integer perturbation.
fn det_poly(a: &[Vec<BigInt>], c: Option<&[Vec<BigInt>]>) -> IntPoly {
    let n = a.len();
    let points: Vec<(BigInt, BigInt)> = (0..=n as i64)
        .map(|t| {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut e = -&a[i][j];
                            if i == j {
                                e += BigInt::from(t);
                            }
                            if let Some(c) = c {
                                e += &c[i][j];
                            }
                            e
                        })
                        .collect()
                })
                .collect();
            (BigInt::from(t), det_bareiss(m))
        })
        .collect();
    interpolate(&points, n).expect("determinant interpolation is exact")
}

/// `f_G(lambda) = det(lambda I - A)`, monic of degree n.
pub fn char_poly(g: &Graph) -> IntPoly {
    det_poly(&adjacency(g), None)
}

/// The cofactor sum `1^T adj(lambda I - B) 1`, degree n-1 with leading
/// coefficient n. Computed as `det(lambda I - B + J) - det(lambda I - B)`.
pub fn adjugate_sum(h: &Graph) -> IntPoly {
    let a = adjacency(h);
    let n = h.n();
    let ones = vec![vec![BigInt::one(); n]; n];
    let shifted = det_poly(&a, Some(&ones));
    &shifted - &det_poly(&a, None)
}

/// The coronal of a graph together with its factorization bookkeeping:
/// `chi = chi_tilde / f_H` in lowest terms, `g = gcd(chi_tilde, f_H)`,
/// and `d` the degree of the reduced denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coronal {
    pub chi: RatFunc,
    pub chi_tilde: IntPoly,
    pub f_h: IntPoly,
    pub g: IntPoly,
    pub d: usize,
}

impl Coronal {
    fn assemble(chi_tilde: IntPoly, f_h: IntPoly) -> Result<Coronal> {
        let g = chi_tilde.gcd(&f_h)?;
        let chi = RatFunc::reduce(chi_tilde.clone(), f_h.clone())?;
        let d = chi.den_degree();
        debug_assert_eq!(&(&g * chi.den()), &f_h);
        Ok(Coronal { chi, chi_tilde, f_h, g, d })
    }
}

/// The coronal via the rank-one determinant identity.
pub fn coronal(h: &Graph) -> Result<Coronal> {
    Coronal::assemble(adjugate_sum(h), char_poly(h))
}

fn subset_char_poly(h: &Graph, alive: u128, memo: &mut HashMap<u128, IntPoly>) -> IntPoly {
    if alive == 0 {
        return IntPoly::one(); // empty graph convention
    }
    if let Some(p) = memo.get(&alive) {
        return p.clone();
    }
    let keep: Vec<bool> = (0..h.n()).map(|v| alive >> v & 1 == 1).collect();
    let p = char_poly(&h.induced(&keep).unwrap());
    memo.insert(alive, p.clone());
    p
}

struct PathWalker<'a> {
    h: &'a Graph,
    target: usize,
    budget: usize,
    used: usize,
    memo: HashMap<u128, IntPoly>,
}

impl PathWalker<'_> {
    fn walk(&mut self, v: usize, visited: u128, acc: &mut IntPoly) -> Result<()> {
        if v == self.target {
            self.used += 1;
            if self.used > self.budget {
                return Err(Error::ResourceBudget(format!(
                    "more than {} simple paths enumerated",
                    self.budget
                )));
            }
            let full = if self.h.n() == 128 { u128::MAX } else { (1u128 << self.h.n()) - 1 };
            let alive = full & !visited;
            let sub = subset_char_poly(self.h, alive, &mut self.memo);
            *acc = &*acc + &sub;
            return Ok(());
        }
        for u in self.h.neighbors(v) {
            if visited >> u & 1 == 0 {
                self.walk(u, visited | 1 << u, acc)?;
            }
        }
        Ok(())
    }
}

/// `adj(lambda I - B)_{i,j}` by Schwenk's formula: the sum of
/// `f_{H - P}` over all simple paths `P` from `i` to `j` (for `i = j`
/// the single trivial path is the vertex alone).
pub fn schwenk_adjugate_entry(h: &Graph, i: usize, j: usize) -> Result<IntPoly> {
    schwenk_entry_budgeted(h, i, j, DEFAULT_PATH_BUDGET, &mut HashMap::new())
}

fn schwenk_entry_budgeted(
    h: &Graph,
    i: usize,
    j: usize,
    budget: usize,
    memo: &mut HashMap<u128, IntPoly>,
) -> Result<IntPoly> {
    let mut walker = PathWalker {
        h,
        target: j,
        budget,
        used: 0,
        memo: std::mem::take(memo),
    };
    let mut acc = IntPoly::zero();
    let res = walker.walk(i, 1 << i, &mut acc);
    *memo = walker.memo;
    res?;
    Ok(acc)
}

/// The coronal computed entirely from Schwenk's theorem; an independent
/// oracle for [`coronal`]. Aborts with a resource error when more than
/// `budget` paths would be enumerated.
pub fn coronal_via_schwenk_budgeted(h: &Graph, budget: usize) -> Result<Coronal> {
    let n = h.n();
    let mut memo = HashMap::new();
    let mut chi_tilde = IntPoly::zero();
    for i in 0..n {
        for j in 0..n {
            let e = schwenk_entry_budgeted(h, i, j, budget, &mut memo)?;
            chi_tilde = &chi_tilde + &e;
        }
    }
    Coronal::assemble(chi_tilde, char_poly(h))
}

pub fn coronal_via_schwenk(h: &Graph) -> Result<Coronal> {
    coronal_via_schwenk_budgeted(h, DEFAULT_PATH_BUDGET)
}

/// The near-regular route: with `v_i = r - deg(i)`,
/// `chi_H = (n - (1/f_H) 1^T adj(lambda I - B) v) / (lambda - r)`.
/// Must equal [`coronal`] for every graph and every integer `r`.
pub fn coronal_near_regular(h: &Graph, r: i64) -> Result<Coronal> {
    let n = h.n();
    let a = adjacency(h);
    let f_h = det_poly(&a, None);
    // 1^T adj(M) v = det(M + v 1^T) - det(M)
    let v: Vec<BigInt> = (0..n).map(|i| BigInt::from(r - h.degree(i) as i64)).collect();
    let rank_one: Vec<Vec<BigInt>> = (0..n).map(|i| vec![v[i].clone(); n]).collect();
    let s = &det_poly(&a, Some(&rank_one)) - &f_h;
    let num = &(&IntPoly::constant(BigInt::from(n as i64)) * &f_h) - &s;
    let den = &IntPoly::from_i64(&[-r, 1]) * &f_h;
    let chi = RatFunc::reduce(num, den)?;
    // recover the unreduced cofactor sum: chi_tilde = chi * f_H
    let chi_tilde = (&(chi.num() * &f_h)).exact_div(chi.den())?;
    Coronal::assemble(chi_tilde, f_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, path, star};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::reduce(IntPoly::from_i64(num), IntPoly::from_i64(den)).unwrap()
    }

    /// Independent oracle: characteristic polynomial by cofactor expansion
    /// of the symbolic matrix, via naive recursive minor expansion on
    /// polynomial entries.
    fn char_poly_cofactor(g: &Graph) -> IntPoly {
        fn det_rec(m: &[Vec<IntPoly>]) -> IntPoly {
            let n = m.len();
            if n == 1 {
                return m[0][0].clone();
            }
            let mut acc = IntPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<IntPoly>> = (1..n)
                    .map(|i| (0..n).filter(|&k| k != j).map(|k| m[i][k].clone()).collect())
                    .collect();
                let term = &m[0][j] * &det_rec(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let n = g.n();
        let m: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            IntPoly::x()
                        } else if g.has_edge(i, j) {
                            p(&[-1])
                        } else {
                            IntPoly::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        det_rec(&m)
    }

    #[test]
    fn char_poly_small() {
        assert_eq!(char_poly(&complete(2).unwrap()), p(&[-1, 0, 1]));
        assert_eq!(char_poly(&path(3).unwrap()), p(&[0, -2, 0, 1]));
        assert_eq!(char_poly(&cycle(4).unwrap()), p(&[0, 0, -4, 0, 1]));
    }

    #[test]
    fn char_poly_matches_cofactor_expansion() {
        for g in [path(4).unwrap(), cycle(5).unwrap(), star(5).unwrap(), complete(4).unwrap()] {
            assert_eq!(char_poly(&g), char_poly_cofactor(&g));
        }
    }

    #[test]
    fn char_poly_coefficient_structure() {
        for g in [path(5).unwrap(), cycle(6).unwrap(), star(6).unwrap(), complete(5).unwrap()] {
            let f = char_poly(&g);
            let n = g.n();
            assert_eq!(f.degree(), Some(n));
            assert!(f.is_monic());
            assert!(f.coeff(n - 1).is_zero());
            assert_eq!(f.coeff(n - 2), BigInt::from(-(g.edge_count() as i64)));
        }
    }

    #[test]
    fn adjugate_sum_small() {
        assert_eq!(adjugate_sum(&complete(1).unwrap()), IntPoly::one());
        assert_eq!(adjugate_sum(&path(3).unwrap()), p(&[0, 4, 3]));
        // S5: reduction against f_{S5} must give (5x + 8)/(x^2 - 4)
        let s5 = star(5).unwrap();
        let r = RatFunc::reduce(adjugate_sum(&s5), char_poly(&s5)).unwrap();
        assert_eq!(r, rf(&[8, 5], &[-4, 0, 1]));
    }

    #[test]
    fn adjugate_sum_degree_and_lead() {
        for n in 1..=7usize {
            let g = star(n).unwrap();
            let s = adjugate_sum(&g);
            assert_eq!(s.degree(), Some(n - 1));
            assert_eq!(s.leading().unwrap(), &BigInt::from(n as i64));
        }
    }

    #[test]
    fn coronal_paper_values() {
        let c4k1 = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap();
        assert_eq!(coronal(&c4k1).unwrap().chi, rf(&[-2, 5], &[0, -2, 1]));
        let k2k3 = disjoint_union(&complete(2).unwrap(), &complete(3).unwrap()).unwrap();
        assert_eq!(coronal(&k2k3).unwrap().chi, rf(&[-7, 5], &[2, -3, 1]));
        assert_eq!(coronal(&complete(1).unwrap()).unwrap().chi, rf(&[1], &[0, 1]));
    }

    #[test]
    fn coronal_bookkeeping() {
        for g in [star(5).unwrap(), path(5).unwrap(), cycle(6).unwrap()] {
            let c = coronal(&g).unwrap();
            let n = g.n();
            assert_eq!(c.chi_tilde.degree(), Some(n - 1));
            assert_eq!(c.chi_tilde.leading().unwrap(), &BigInt::from(n as i64));
            assert_eq!(&(&c.g * c.chi.den()), &c.f_h);
            assert_eq!(c.g.degree().unwrap(), n - c.d);
            assert_eq!(c.chi.num().degree(), Some(c.d - 1));
            assert_eq!(c.chi.num().leading().unwrap(), &BigInt::from(n as i64));
            assert!(c.chi.den().is_monic());
        }
    }

    #[test]
    fn schwenk_entries() {
        // on P_n with i < j the unique path gives f_{i-1} * f_{n-j}
        let p5 = path(5).unwrap();
        let f: Vec<IntPoly> = (0..=5)
            .map(|k| if k == 0 { IntPoly::one() } else { char_poly(&path(k).unwrap()) })
            .collect();
        for i in 1..=5usize {
            for j in i + 1..=5 {
                let e = schwenk_adjugate_entry(&p5, i - 1, j - 1).unwrap();
                assert_eq!(e, &f[i - 1] * &f[5 - j], "entry ({}, {})", i, j);
            }
        }
        // P3 middle diagonal entry: two isolated vertices remain
        let e = schwenk_adjugate_entry(&path(3).unwrap(), 1, 1).unwrap();
        assert_eq!(e, p(&[0, 0, 1]));
        // K1 diagonal: empty graph convention
        let e = schwenk_adjugate_entry(&complete(1).unwrap(), 0, 0).unwrap();
        assert_eq!(e, IntPoly::one());
    }

    #[test]
    fn diagonal_cofactors_sum_to_derivative() {
        // trace of adj(lambda I - B) equals f_H'
        for g in [path(4).unwrap(), cycle(5).unwrap(), star(5).unwrap()] {
            let mut tr = IntPoly::zero();
            for i in 0..g.n() {
                tr = &tr + &schwenk_adjugate_entry(&g, i, i).unwrap();
            }
            assert_eq!(tr, char_poly(&g).derivative());
        }
    }

    #[test]
    fn schwenk_oracle_values() {
        assert_eq!(
            coronal_via_schwenk(&path(4).unwrap()).unwrap().chi,
            rf(&[2, 4], &[-1, -1, 1])
        );
        assert_eq!(
            coronal_via_schwenk(&cycle(4).unwrap()).unwrap().chi,
            rf(&[4], &[-2, 1])
        );
    }

    #[test]
    fn schwenk_agrees_with_generic() {
        for g in [
            path(5).unwrap(),
            cycle(5).unwrap(),
            star(5).unwrap(),
            complete(5).unwrap(),
            disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap(),
        ] {
            assert_eq!(coronal_via_schwenk(&g).unwrap(), coronal(&g).unwrap());
        }
    }

    #[test]
    fn schwenk_budget_enforced() {
        let g = complete(8).unwrap();
        assert!(matches!(
            coronal_via_schwenk_budgeted(&g, 100),
            Err(Error::ResourceBudget(_))
        ));
    }

    #[test]
    fn near_regular_examples() {
        // regular graph: v = 0 and chi = n/(lambda - r)
        let c4 = cycle(4).unwrap();
        assert_eq!(coronal_near_regular(&c4, 2).unwrap().chi, rf(&[4], &[-2, 1]));
        // S5 with r = 1 (the leaves' degree) reproduces (5x + 8)/(x^2 - 4)
        let s5 = star(5).unwrap();
        assert_eq!(coronal_near_regular(&s5, 1).unwrap().chi, rf(&[8, 5], &[-4, 0, 1]));
        // any r gives the same coronal
        for r in 0..5 {
            assert_eq!(coronal_near_regular(&s5, r).unwrap(), coronal(&s5).unwrap());
        }
    }

    #[test]
    fn near_regular_path_formula() {
        // chi_{P_n} = (n f_n - 2 sum f_j) / ((lambda - 2) f_n)
        for n in 1..=6usize {
            let pn = path(n).unwrap();
            assert_eq!(coronal_near_regular(&pn, 2).unwrap(), coronal(&pn).unwrap());
        }
    }
}
