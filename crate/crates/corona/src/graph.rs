//! Undirected simple graphs with ordered vertex labels, the standard
//! families, the corona construction, and the switching graph.
//!
//! Vertices are 0-indexed internally; the 1-indexed corona labels
//! `i + mk` appear only at the CLI surface.

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
}

impl Graph {
    /// An edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "at most {} vertices supported, got {}",
                MAX_VERTICES, n
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) out of range for n = {}",
                    u, v, n
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {}", u)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_regular(&self) -> Option<usize> {
        let r = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == r).then_some(r)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn complement(&self) -> Graph {
        let mask = if self.n == 128 { u128::MAX } else { (1u128 << self.n) - 1 };
        let adj = (0..self.n)
            .map(|v| (!self.adj[v] & mask) & !(1u128 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on the vertices where `keep` is true, relabeled in
    /// increasing order of original label.
    pub fn induced(&self, keep: &[bool]) -> Option<Graph> {
        let verts: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        if verts.is_empty() {
            return None;
        }
        let mut g = Graph::empty(verts.len()).unwrap();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Some(g)
    }

    /// Relabels the graph by a permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n).unwrap();
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Upper-triangle adjacency bits in row-major order (column by column,
    /// graph6 bit order).
    pub fn upper_triangle_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for v in 1..self.n {
            for u in 0..v {
                bits.push(self.has_edge(u, v));
            }
        }
        bits
    }
}

// ---- standard families ----

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidGraph(format!("cycle needs n >= 3, got {}", n)));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Star on `n` vertices total: one center (vertex 0) and `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidGraph(
            "parts must be a nonempty list of positive integers".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n = g1.n + g2.n;
    let mut g = Graph::empty(n)?;
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(g1.n + u, g1.n + v);
    }
    Ok(g)
}

/// The corona product: one copy of `g` and `|g|` copies of `h`, with
/// vertex `i` of `g` joined to every vertex of the i-th copy.
///
/// G-vertex `i` keeps label `i`; vertex `k` of copy `i` gets label
/// `i + m(k+1)` (the paper's `i + mk` labeling, 0-indexed).
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let m = g.n;
    let n = h.n;
    let mut out = Graph::empty(m * (n + 1))?;
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for i in 0..m {
        for (u, v) in h.edges() {
            out.add_edge(i + m * (u + 1), i + m * (v + 1));
        }
        for k in 0..n {
            out.add_edge(i, i + m * (k + 1));
        }
    }
    Ok(out)
}

/// The switching graph: adjacency `I_2 (x) A_T + antidiag (x) A_Tbar` on
/// `2n` vertices. For any input the result is `(n-1)`-regular.
pub fn switching_graph(t: &Graph) -> Result<Graph> {
    let n = t.n;
    let tbar = t.complement();
    let mut out = Graph::empty(2 * n)?;
    for (u, v) in t.edges() {
        out.add_edge(u, v);
        out.add_edge(n + u, n + v);
    }
    for (u, v) in tbar.edges() {
        out.add_edge(u, n + v);
        out.add_edge(v, n + u);
    }
    Ok(out)
}

// ---- edge-list text format: "n m" header then "u v" lines, 0-indexed ----

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        msg: "missing \"n m\" header".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_num = |s: Option<&str>, line: usize| -> Result<usize> {
        s.ok_or(Error::EdgeList { line, msg: "expected two integers".into() })?
            .parse()
            .map_err(|_| Error::EdgeList { line, msg: "expected two integers".into() })
    };
    let n = parse_num(it.next(), lineno + 1)?;
    let m = parse_num(it.next(), lineno + 1)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), lineno + 1)?;
        let v = parse_num(it.next(), lineno + 1)?;
        if it.next().is_some() {
            return Err(Error::EdgeList { line: lineno + 1, msg: "trailing tokens".into() });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: 1,
            msg: format!("header claims {} edges, found {}", m, edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corona_smallest() {
        // K1 o K1 = P2
        let k1 = complete(1).unwrap();
        let c = corona(&k1, &k1).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.edge_count(), 1);
    }

    #[test]
    fn corona_c4_p3() {
        let c = corona(&cycle(4).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!(c.n(), 16);
        assert_eq!(c.edge_count(), 4 + 4 * 2 + 4 * 3);
    }

    #[test]
    fn corona_p2_k1_is_p4() {
        // K1 attached to each endpoint of an edge gives a path on 4 vertices
        let c = corona(&path(2).unwrap(), &complete(1).unwrap()).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(c.edge_count(), 3);
        assert_eq!(c.degree_sequence(), vec![1, 1, 2, 2]);
        assert!(c.is_connected());
    }

    #[test]
    fn corona_counts_small() {
        // |V| = m(n+1), |E| = |E_G| + m|E_H| + mn for random small pairs
        let gs = [path(1), path(3), cycle(4), complete(5), star(6)];
        let hs = [path(2), cycle(3), star(4), complete(4), path(6)];
        for g in gs.iter().map(|g| g.as_ref().unwrap()) {
            for h in hs.iter().map(|h| h.as_ref().unwrap()) {
                let c = corona(g, h).unwrap();
                let (m, n) = (g.n(), h.n());
                assert_eq!(c.n(), m * (n + 1));
                assert_eq!(c.edge_count(), g.edge_count() + m * h.edge_count() + m * n);
            }
        }
    }

    #[test]
    fn corona_adjacency_matches_block_matrix() {
        // derived view: [[A, 1^T (x) I], [1 (x) I, B (x) I]]
        let g = cycle(4).unwrap();
        let h = path(3).unwrap();
        let c = corona(&g, &h).unwrap();
        let (m, _n) = (g.n(), h.n());
        for a in 0..c.n() {
            // symmetry, zero diagonal
            assert!(!c.has_edge(a, a));
            for b in 0..c.n() {
                if a != b {
                    assert_eq!(c.has_edge(a, b), c.has_edge(b, a));
                }
            }
        }
        for a in 0..c.n() {
            for b in 0..c.n() {
                let expect = if a < m && b < m {
                    g.has_edge(a, b)
                } else if a < m {
                    // attachment block: 1^T (x) I_m
                    (b - m) % m == a
                } else if b < m {
                    (a - m) % m == b
                } else {
                    // B (x) I_m
                    let (i, k) = ((a - m) % m, (a - m) / m);
                    let (j, l) = ((b - m) % m, (b - m) / m);
                    i == j && h.has_edge(k, l)
                };
                assert_eq!(c.has_edge(a, b), expect && a != b, "at ({}, {})", a, b);
            }
        }
    }

    #[test]
    fn families() {
        // complete_multipartite([1,1,1]) = K3
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap(), complete(3).unwrap());
        // complement(P2) has no edges
        assert_eq!(path(2).unwrap().complement().edge_count(), 0);
        assert_eq!(star(5).unwrap().degree_sequence(), vec![1, 1, 1, 1, 4]);
        // disjoint_union(C4, K1): 5 vertices, 4 edges
        let u = disjoint_union(&cycle(4).unwrap(), &complete(1).unwrap()).unwrap();
        assert_eq!((u.n(), u.edge_count()), (5, 4));
        assert!(path(0).is_err());
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn switching_p2() {
        let sw = switching_graph(&path(2).unwrap()).unwrap();
        assert_eq!(sw.n(), 4);
        for v in 0..4 {
            assert_eq!(sw.degree(v), 1);
        }
        // two disjoint copies of the original edge; no complement edges exist
        assert!(sw.has_edge(0, 1) && sw.has_edge(2, 3));
        assert_eq!(sw.edge_count(), 2);
    }

    #[test]
    fn switching_p3() {
        let sw = switching_graph(&path(3).unwrap()).unwrap();
        assert_eq!(sw.n(), 6);
        for v in 0..6 {
            assert_eq!(sw.degree(v), 2);
        }
    }

    #[test]
    fn switching_regular_for_graphs() {
        for g in [path(4).unwrap(), star(5).unwrap(), cycle(6).unwrap(), complete(4).unwrap()] {
            let sw = switching_graph(&g).unwrap();
            let n = g.n();
            for v in 0..sw.n() {
                assert_eq!(sw.degree(v), n - 1);
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(5).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n0 0\n").is_err());
        assert!(parse_edge_list("2 2\n0 1\n").is_err());
    }
}
