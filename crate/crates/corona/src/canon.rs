//! Canonical labeled forms and isomorphism testing for small graphs.
//!
//! Canonicalization minimizes the packed upper-triangle adjacency
//! bitstring over all permutations respecting the stable color
//! refinement, with prefix pruning. Isomorphism between two given
//! graphs uses color-guided backtracking instead, which also handles
//! the regular graphs where degree partitions carry no information.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Stable 1-dimensional color refinement (degrees iterated against
/// neighbor color multisets). Color indices are assigned in sorted
/// order of the refining signatures, so they are isomorphism-invariant.
pub fn wl_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    // degrees are already canonical signatures; normalize to dense indices
    let mut uniq: Vec<usize> = colors.clone();
    uniq.sort_unstable();
    uniq.dedup();
    for c in &mut colors {
        *c = uniq.binary_search(c).unwrap();
    }
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut order: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            order.insert(s, 0);
        }
        for (i, (_, idx)) in order.iter_mut().enumerate() {
            *idx = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| order[s]).collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

const MAX_CANON_VERTICES: usize = 16; // upper triangle must fit in u128

/// The packed upper-triangle bits of the canonically relabeled graph.
/// Equal keys iff isomorphic. Supports up to 16 vertices.
pub fn canonical_key(g: &Graph) -> Result<u128> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(Error::ResourceBudget(format!(
            "canonical form supports at most {} vertices, got {}",
            MAX_CANON_VERTICES,
            g.n()
        )));
    }
    Ok(canon_search(g).0)
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(Error::ResourceBudget(format!(
            "canonical form supports at most {} vertices, got {}",
            MAX_CANON_VERTICES,
            g.n()
        )));
    }
    let (_, vertex_at) = canon_search(g);
    // vertex_at[pos] = original vertex; build the inverse relabeling
    let n = g.n();
    let mut perm = vec![0usize; n];
    for (pos, &v) in vertex_at.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permuted(&perm))
}

fn canon_search(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.n();
    if n == 1 {
        return (0, vec![0]);
    }
    let colors = wl_colors(g);
    // vertices grouped by color; positions are filled in color order
    let ncolors = colors.iter().max().unwrap() + 1;
    let mut classes: Vec<Vec<usize>> = vec![vec![]; ncolors];
    for v in 0..n {
        classes[colors[v]].push(v);
    }
    let class_of_pos: Vec<usize> = {
        let mut out = vec![];
        for (c, class) in classes.iter().enumerate() {
            out.extend(std::iter::repeat(c).take(class.len()));
        }
        out
    };

    struct Search<'a> {
        g: &'a Graph,
        classes: &'a [Vec<usize>],
        class_of_pos: &'a [usize],
        used: Vec<bool>,
        vertex_at: Vec<usize>,
        best: Option<(u128, Vec<usize>)>,
    }

    impl Search<'_> {
        fn go(&mut self, pos: usize, cur: u128, bits_done: u32) {
            let n = self.g.n();
            if pos == n {
                if self.best.as_ref().is_none_or(|(b, _)| cur < *b) {
                    self.best = Some((cur, self.vertex_at.clone()));
                }
                return;
            }
            let candidates: Vec<usize> = self.classes[self.class_of_pos[pos]]
                .iter()
                .copied()
                .filter(|&v| !self.used[v])
                .collect();
            for w in candidates {
                let mut next = cur;
                for (u, &vu) in self.vertex_at[..pos].iter().enumerate() {
                    if self.g.has_edge(w, vu) {
                        next |= 1u128 << (127 - (bits_done + u as u32));
                    }
                }
                let known = bits_done + pos as u32;
                if let Some((b, _)) = &self.best {
                    let mask = if known == 0 { 0 } else { u128::MAX << (128 - known) };
                    if next & mask > b & mask {
                        continue;
                    }
                }
                self.used[w] = true;
                self.vertex_at.push(w);
                self.go(pos + 1, next, known);
                self.vertex_at.pop();
                self.used[w] = false;
            }
        }
    }

    let mut s = Search {
        g,
        classes: &classes,
        class_of_pos: &class_of_pos,
        used: vec![false; n],
        vertex_at: Vec::with_capacity(n),
        best: None,
    };
    s.go(0, 0, 0);
    s.best.unwrap()
}

/// Exact isomorphism test by color-guided backtracking.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return false;
    }
    let c1 = wl_colors(g1);
    let c2 = wl_colors(g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return false;
    }
    let n = g1.n();
    // order g1's vertices to keep the partial map connected where possible
    let mut order: Vec<usize> = vec![];
    let mut placed = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let mapped_nb = g1.neighbors(v).filter(|&u| placed[u]).count();
                (mapped_nb, g1.degree(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    fn backtrack(
        g1: &Graph,
        g2: &Graph,
        c1: &[usize],
        c2: &[usize],
        order: &[usize],
        depth: usize,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for w in 0..g2.n() {
            if used[w] || c1[v] != c2[w] {
                continue;
            }
            for &u in &order[..depth] {
                let mu = map[u].unwrap();
                if g1.has_edge(v, u) != g2.has_edge(w, mu) {
                    continue 'cand;
                }
            }
            map[v] = Some(w);
            used[w] = true;
            if backtrack(g1, g2, c1, c2, order, depth + 1, map, used) {
                return true;
            }
            map[v] = None;
            used[w] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    backtrack(g1, g2, &c1, &c2, &order, 0, &mut map, &mut used)
}
