//! Constructive graph-minor embedding in Cartesian product hosts.
//!
//! The crate builds explicit minor models of small guest graphs inside
//! product hosts (the d-dimensional hypercube being the flagship case),
//! together with machine-checkable certificates:
//!
//! * [`graph`] — finite simple graphs, standard families, Cartesian
//!   products, subdivisions, degree reduction and edge coloring.
//! * [`permdec`] — decomposition of box permutations into one-dimensional
//!   factors, including the well-dispersed rearrangement and an exhaustive
//!   minimality search.
//! * [`embed`] — piecewise embeddings, cycle lifting, layered matchings,
//!   conversions between minor models and combinatorial embeddings, and
//!   the hypercube pipeline.
//! * [`oracle`] — exhaustive ground truth: brute-force minor testing,
//!   small-graph enumeration up to isomorphism, universality numbers.
//! * [`bounds`] — the counting side: sphere sizes, Cheeger cuts, entropy
//!   bounds and separator audits of concrete embeddings.
//! * [`cert`] — self-contained text certificates consumed by `verify`.

pub mod bounds;
pub mod cert;
pub mod embed;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod permdec;

pub use error::{Error, Result};
pub use graph::{Graph, ProductGraph, Walk};
