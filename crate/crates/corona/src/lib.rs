//! Exact-arithmetic spectra of corona products.
//!
//! Computes the coronal invariant of a graph and uses it to assemble the
//! complete spectrum of the corona of any two graphs, with closed-form
//! fast paths for regular, complete multipartite, and path graphs, an
//! independent combinatorial oracle, a cospectral-pair factory, and a
//! small-order census of coronal denominator degrees.

pub mod assemble;
pub mod canon;
pub mod census;
pub mod closed;
pub mod coronal;
pub mod cospectral;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod ratfunc;
pub mod roots;

pub use error::{Error, Result};
