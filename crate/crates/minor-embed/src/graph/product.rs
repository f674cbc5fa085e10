//! Cartesian products of graphs with a deterministic flattening.
//!
//! Vertices of the product are coordinate tuples; two tuples are adjacent
//! iff they agree in all coordinates but one and are adjacent in that
//! coordinate's factor. Tuples flatten row-major with the last coordinate
//! fastest, so products of power-of-two factors coincide index-for-index
//! with the hypercube of matching dimension.

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ProductGraph {
    factors: Vec<Graph>,
    /// strides[i] = product of factor orders after i.
    strides: Vec<usize>,
    vertex_count: usize,
}

/// Convenience wrapper matching the operation vocabulary.
pub fn cartesian_product(factors: &[Graph]) -> Result<ProductGraph> {
    ProductGraph::new(factors.to_vec())
}

impl ProductGraph {
    pub fn new(factors: Vec<Graph>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::usage("a product needs at least one factor"));
        }
        let mut vertex_count = 1usize;
        for f in &factors {
            vertex_count = vertex_count
                .checked_mul(f.vertex_count())
                .ok_or_else(|| Error::capacity("product order overflows usize"))?;
        }
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].vertex_count();
        }
        Ok(ProductGraph { factors, strides, vertex_count })
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn flatten(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn unflatten(&self, mut index: usize) -> Vec<usize> {
        let mut coords = Vec::with_capacity(self.factors.len());
        for s in &self.strides {
            coords.push(index / s);
            index %= s;
        }
        coords
    }

    /// Coordinate-wise adjacency test on flat indices.
    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        let ca = self.unflatten(a);
        let cb = self.unflatten(b);
        let mut diff = None;
        for i in 0..ca.len() {
            if ca[i] != cb[i] {
                if diff.is_some() {
                    return false;
                }
                diff = Some(i);
            }
        }
        match diff {
            Some(i) => self.factors[i].has_edge(ca[i], cb[i]),
            None => false,
        }
    }

    /// Materializes the product as a flat `Graph`.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut expected = 0usize;
        for f in &self.factors {
            expected += f.edge_count() * (self.vertex_count / f.vertex_count());
        }
        edges.reserve(expected);
        let mut coords = vec![0usize; self.factors.len()];
        for v in 0..self.vertex_count {
            // Incremental unflatten: coords tracks v.
            for (i, f) in self.factors.iter().enumerate() {
                let c = coords[i];
                for &n in f.neighbors(c) {
                    if n > c {
                        edges.push((v, v + (n - c) * self.strides[i]));
                    }
                }
            }
            // Advance the odometer, last coordinate fastest.
            for i in (0..coords.len()).rev() {
                coords[i] += 1;
                if coords[i] < self.factors[i].vertex_count() {
                    break;
                }
                coords[i] = 0;
            }
        }
        debug_assert_eq!(edges.len(), expected);
        Graph::new(self.vertex_count, edges).expect("product edges are valid by construction")
    }
}
