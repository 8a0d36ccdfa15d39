//! Cospectrality predicates and the machinery for generating cospectral
//! pairs from coronas and switching graphs of tree mates.

use std::collections::HashMap;

use crate::assemble::corona_char_poly;
use crate::canon::is_isomorphic;
use crate::coronal::{char_poly, coronal};
use crate::error::{Error, Result};
use crate::graph::{switching_graph, Graph};
use crate::poly::IntPoly;

/// Largest order accepted by the exhaustive tree search.
pub const MAX_TREE_ORDER: usize = 12;

#[derive(Clone, Debug)]
pub struct CospectralPair {
    pub g1: Graph,
    pub g2: Graph,
    /// The shared characteristic polynomial.
    pub certificate: IntPoly,
    pub isomorphic: bool,
}

/// Exact equality of characteristic polynomials.
pub fn is_cospectral(g1: &Graph, g2: &Graph) -> bool {
    g1.n() == g2.n() && char_poly(g1) == char_poly(g2)
}

/// Canonical equality of coronals.
pub fn coronal_equal(h1: &Graph, h2: &Graph) -> Result<bool> {
    Ok(coronal(h1)?.chi == coronal(h2)?.chi)
}

/// Outcome of checking both implications of the corona cospectrality
/// corollary on concrete graphs. A conclusion is `None` when its
/// premises do not hold; a failed conclusion with satisfied premises is
/// a theorem violation.
#[derive(Clone, Debug)]
pub struct Corollary10Report {
    pub g_pair_cospectral: bool,
    pub h_pair_cospectral: bool,
    pub h_pair_coronal_equal: bool,
    /// cospectral(g1, g2) => cospectral(g1 o h1, g2 o h1)
    pub conclusion_left: Option<bool>,
    /// cospectral(h1, h2) and equal coronals => cospectral(g1 o h1, g1 o h2)
    pub conclusion_right: Option<bool>,
}

impl Corollary10Report {
    pub fn theorem_violated(&self) -> bool {
        self.conclusion_left == Some(false) || self.conclusion_right == Some(false)
    }

    pub fn passed(&self) -> bool {
        !self.theorem_violated()
    }
}

pub fn verify_corollary10(
    g1: &Graph,
    g2: &Graph,
    h1: &Graph,
    h2: &Graph,
) -> Result<Corollary10Report> {
    let g_pair_cospectral = is_cospectral(g1, g2);
    let h_pair_cospectral = is_cospectral(h1, h2);
    let h_pair_coronal_equal = coronal_equal(h1, h2)?;
    let conclusion_left = if g_pair_cospectral {
        let a = corona_char_poly(g1, h1)?.total;
        let b = corona_char_poly(g2, h1)?.total;
        Some(a == b)
    } else {
        None
    };
    let conclusion_right = if h_pair_cospectral && h_pair_coronal_equal {
        let a = corona_char_poly(g1, h1)?.total;
        let b = corona_char_poly(g1, h2)?.total;
        Some(a == b)
    } else {
        None
    };
    Ok(Corollary10Report {
        g_pair_cospectral,
        h_pair_cospectral,
        h_pair_coronal_equal,
        conclusion_left,
        conclusion_right,
    })
}

// ---- exhaustive tree enumeration ----

/// Canonical code of a free tree: the sorted-subtree encoding rooted at
/// the tree's center (minimized over both centers when there are two).
fn tree_code(t: &Graph) -> String {
    fn encode(t: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> = t
            .neighbors(v)
            .filter(|&u| Some(u) != parent)
            .map(|u| encode(t, u, Some(v)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    // center by iterated leaf removal
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = vec![];
        for &v in &frontier {
            removed[v] = true;
            remaining -= 1;
            for u in t.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers
        .iter()
        .map(|&c| encode(t, c, None))
        .min()
        .expect("a tree has one or two centers")
}

/// All trees of the given order, one per isomorphism class, built by
/// leaf extension with canonical-code deduplication.
pub fn enumerate_trees(order: usize) -> Result<Vec<Graph>> {
    if order == 0 {
        return Err(Error::EmptyGraph);
    }
    if order > MAX_TREE_ORDER {
        return Err(Error::ResourceBudget(format!(
            "tree enumeration supports order <= {}, got {}",
            MAX_TREE_ORDER, order
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=order {
        let mut seen: HashMap<String, Graph> = HashMap::new();
        for parent in &level {
            for attach in 0..k - 1 {
                let mut edges = parent.edges();
                edges.push((attach, k - 1));
                let child = Graph::from_edges(k, &edges)?;
                seen.entry(tree_code(&child)).or_insert(child);
            }
        }
        let mut keys: Vec<String> = seen.keys().cloned().collect();
        keys.sort();
        level = keys.into_iter().map(|k| seen.remove(&k).unwrap()).collect();
    }
    Ok(level)
}

/// All non-isomorphic tree pairs of the given order that are cospectral
/// with cospectral complements.
pub fn find_tree_mates(order: usize) -> Result<Vec<CospectralPair>> {
    let trees = enumerate_trees(order)?;
    let mut groups: HashMap<(IntPoly, IntPoly), Vec<usize>> = HashMap::new();
    for (i, t) in trees.iter().enumerate() {
        let key = (char_poly(t), char_poly(&t.complement()));
        groups.entry(key).or_default().push(i);
    }
    let mut members: Vec<Vec<usize>> = groups.into_values().filter(|v| v.len() > 1).collect();
    members.sort();
    let mut out = vec![];
    for group in members {
        for (a, i) in group.iter().enumerate() {
            for j in &group[a + 1..] {
                out.push(CospectralPair {
                    g1: trees[*i].clone(),
                    g2: trees[*j].clone(),
                    certificate: char_poly(&trees[*i]),
                    isomorphic: false, // enumeration is up to isomorphism
                });
            }
        }
    }
    Ok(out)
}

/// Builds and certifies the switching-graph pair of two cospectral trees
/// with cospectral complements: the results are non-isomorphic cospectral
/// (n-1)-regular graphs with equal coronals.
pub fn switching_pair(t1: &Graph, t2: &Graph) -> Result<CospectralPair> {
    if !t1.is_tree() || !t2.is_tree() {
        return Err(Error::Precondition("both inputs must be trees".into()));
    }
    if !is_cospectral(t1, t2) {
        return Err(Error::Precondition("the trees are not cospectral".into()));
    }
    if !is_cospectral(&t1.complement(), &t2.complement()) {
        return Err(Error::Precondition("the tree complements are not cospectral".into()));
    }
    let s1 = switching_graph(t1)?;
    let s2 = switching_graph(t2)?;
    let n = t1.n();
    for s in [&s1, &s2] {
        if s.is_regular() != Some(n - 1) {
            return Err(Error::InvariantBreach("switching graph is not (n-1)-regular".into()));
        }
    }
    if !is_cospectral(&s1, &s2) {
        return Err(Error::InvariantBreach("switching graphs are not cospectral".into()));
    }
    if !coronal_equal(&s1, &s2)? {
        return Err(Error::InvariantBreach("switching graphs have unequal coronals".into()));
    }
    let certificate = char_poly(&s1);
    let isomorphic = is_isomorphic(&s1, &s2);
    Ok(CospectralPair { g1: s1, g2: s2, certificate, isomorphic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, path, star};

    #[test]
    fn cospectral_witnesses() {
        let s5 = star(5).unwrap();
        let c4k1 = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap();
        assert!(is_cospectral(&s5, &c4k1));
        assert!(!coronal_equal(&s5, &c4k1).unwrap());
        let p5 = path(5).unwrap();
        let k2k3 = disjoint_union(&complete(2).unwrap(), &complete(3).unwrap()).unwrap();
        // same degree sequence, different spectra
        assert_eq!(p5.degree_sequence(), k2k3.degree_sequence());
        assert!(!is_cospectral(&p5, &k2k3));
        assert!(is_cospectral(&p5, &p5));
        assert!(coronal_equal(&p5, &p5).unwrap());
    }

    #[test]
    fn regular_graphs_share_coronals() {
        // any two r-regular graphs on n vertices
        let c6 = cycle(6).unwrap();
        let two_triangles = disjoint_union(&cycle(3).unwrap(), &cycle(3).unwrap()).unwrap();
        assert!(coronal_equal(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn corollary10_star_witness() {
        let s5 = star(5).unwrap();
        let c4k1 = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap();
        let k1 = complete(1).unwrap();
        let rep = verify_corollary10(&s5, &c4k1, &k1, &k1).unwrap();
        assert!(rep.g_pair_cospectral);
        assert_eq!(rep.conclusion_left, Some(true));
        assert!(rep.passed());
    }

    #[test]
    fn corollary10_premises_gate_the_conclusion() {
        // C6 and 2C3 are 2-regular, hence coronal-equal, but not
        // cospectral: the right-hand conclusion must be left open.
        let c6 = cycle(6).unwrap();
        let two_triangles = disjoint_union(&cycle(3).unwrap(), &cycle(3).unwrap()).unwrap();
        let g = path(3).unwrap();
        let rep = verify_corollary10(&g, &g, &c6, &two_triangles).unwrap();
        assert!(!rep.h_pair_cospectral);
        assert!(rep.h_pair_coronal_equal);
        assert_eq!(rep.conclusion_right, None);
    }

    #[test]
    fn corollary10_relabeled_h_pair() {
        let h1 = path(4).unwrap();
        let h2 = h1.permuted(&[2, 0, 3, 1]);
        let g = cycle(5).unwrap();
        let rep = verify_corollary10(&g, &g, &h1, &h2).unwrap();
        assert!(rep.h_pair_cospectral && rep.h_pair_coronal_equal);
        assert_eq!(rep.conclusion_right, Some(true));
        assert!(rep.passed());
    }

    #[test]
    fn remark4_separation() {
        // a single witness G = K1 separates the coronas of the cospectral pair
        let s5 = star(5).unwrap();
        let c4k1 = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap();
        let k1 = complete(1).unwrap();
        let a = corona_char_poly(&k1, &s5).unwrap().total;
        let b = corona_char_poly(&k1, &c4k1).unwrap().total;
        assert_ne!(a, b);
    }

    #[test]
    fn tree_counts() {
        // OEIS A000055
        let expect = [1usize, 1, 1, 1, 2, 3, 6, 11, 23, 47];
        for (n, &e) in expect.iter().enumerate().skip(1) {
            assert_eq!(enumerate_trees(n).unwrap().len(), e, "order {}", n);
        }
        assert!(enumerate_trees(13).is_err());
    }

    #[test]
    fn trees_are_trees() {
        for t in enumerate_trees(7).unwrap() {
            assert!(t.is_tree());
        }
    }

    #[test]
    fn no_small_tree_mates() {
        // only two trees on 4 vertices (P4, S4), different spectra
        assert!(find_tree_mates(4).unwrap().is_empty());
        for order in 5..=8 {
            assert!(find_tree_mates(order).unwrap().is_empty(), "order {}", order);
        }
    }

    #[test]
    fn switching_pair_preconditions() {
        let p4 = path(4).unwrap();
        let s4 = star(4).unwrap();
        // not cospectral
        assert!(matches!(switching_pair(&p4, &s4), Err(Error::Precondition(_))));
        // not a tree
        let c4 = cycle(4).unwrap();
        assert!(matches!(switching_pair(&c4, &c4), Err(Error::Precondition(_))));
    }
}
