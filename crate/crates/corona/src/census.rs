//! Small-order graph enumeration up to isomorphism and the census of
//! coronal denominator degrees.

use std::collections::BTreeMap;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::canon::canonical_key;
use crate::coronal::coronal;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by the built-in enumerator.
pub const MAX_ENUM_ORDER: usize = 7;

/// Known isomorphism-class counts for n = 1..=7.
pub const CLASS_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];

/// One representative per isomorphism class of graphs on `n` vertices,
/// generated by extending the (n-1)-vertex classes one vertex at a time
/// with canonical deduplication.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ENUM_ORDER {
        return Err(Error::ResourceBudget(format!(
            "built-in enumeration supports n <= {}; pipe a graph6 stream for larger orders",
            MAX_ENUM_ORDER
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next = vec![];
        for parent in &level {
            let edges = parent.edges();
            for mask in 0u32..(1 << (k - 1)) {
                let mut child_edges = edges.clone();
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        child_edges.push((v, k - 1));
                    }
                }
                let child = Graph::from_edges(k, &child_edges)?;
                if seen.insert(canonical_key(&child)?) {
                    next.push(child);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// The distribution of the reduced coronal denominator degree `d` over
/// the isomorphism classes of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub counts_by_d: BTreeMap<usize, usize>,
    pub total: usize,
    pub average_d: BigRational,
    pub average_d_over_n: BigRational,
}

impl CensusRow {
    fn from_counts(n: usize, counts_by_d: BTreeMap<usize, usize>) -> CensusRow {
        let total: usize = counts_by_d.values().sum();
        let weighted: usize = counts_by_d.iter().map(|(d, c)| d * c).sum();
        let average_d = BigRational::new(BigInt::from(weighted as i64), BigInt::from(total as i64));
        let average_d_over_n = &average_d / BigRational::from(BigInt::from(n as i64));
        CensusRow { n, counts_by_d, total, average_d, average_d_over_n }
    }

    /// Average d rounded (half away from zero) to two decimals, the
    /// precision of the published table.
    pub fn average_d_display(&self) -> String {
        round2(&self.average_d)
    }

    pub fn average_d_over_n_display(&self) -> String {
        round2(&self.average_d_over_n)
    }
}

/// Rounds a nonnegative rational to two decimals, half away from zero.
pub fn round2(x: &BigRational) -> String {
    let scaled = x * BigRational::from(BigInt::from(100));
    let rounded = scaled.round().to_integer();
    debug_assert!(!rounded.is_negative());
    let whole = &rounded / BigInt::from(100);
    let frac = (&rounded % BigInt::from(100)).abs();
    format!("{}.{:02}", whole, frac)
}

/// Census of one order via the built-in enumerator.
pub fn coronal_degree_census(n: usize) -> Result<CensusRow> {
    coronal_degree_census_from(n, enumerate_graphs(n)?.iter())
}

/// Census over an externally supplied stream of class representatives.
pub fn coronal_degree_census_from<'a>(
    n: usize,
    graphs: impl Iterator<Item = &'a Graph>,
) -> Result<CensusRow> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for g in graphs {
        if g.n() != n {
            return Err(Error::Precondition(format!(
                "census stream contains a graph on {} vertices, expected {}",
                g.n(),
                n
            )));
        }
        let c = coronal(g)?;
        if c.d < 1 || c.d > n {
            return Err(Error::InvariantBreach(format!(
                "coronal denominator degree {} out of range 1..={}",
                c.d, n
            )));
        }
        *counts.entry(c.d).or_insert(0) += 1;
    }
    Ok(CensusRow::from_counts(n, counts))
}

/// Renders census rows as an aligned text table mirroring the published
/// layout: one column per order, one row per denominator degree.
pub fn render_table(rows: &[CensusRow]) -> String {
    let max_d = rows.iter().map(|r| r.n).max().unwrap_or(1);
    let width = 9usize;
    let mut out = String::new();
    let cell = |s: &str| format!("{:>width$}", s, width = width);
    out.push_str(&cell("d \\ n"));
    for r in rows {
        out.push_str(&cell(&r.n.to_string()));
    }
    out.push('\n');
    for d in 1..=max_d {
        out.push_str(&cell(&d.to_string()));
        for r in rows {
            let s = if d > r.n {
                String::new()
            } else {
                r.counts_by_d.get(&d).copied().unwrap_or(0).to_string()
            };
            out.push_str(&cell(&s));
        }
        out.push('\n');
    }
    out.push_str(&cell("Total"));
    for r in rows {
        out.push_str(&cell(&r.total.to_string()));
    }
    out.push('\n');
    out.push_str(&cell("Avg d"));
    for r in rows {
        out.push_str(&cell(&r.average_d_display()));
    }
    out.push('\n');
    out.push_str(&cell("Avg d/n"));
    for r in rows {
        out.push_str(&cell(&r.average_d_over_n_display()));
    }
    out.push('\n');
    out
}
